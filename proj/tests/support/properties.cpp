#include "properties.hpp"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "steiner/designs.hpp"
#include "steiner/eigenfunctions.hpp"
#include "steiner/geometry.hpp"
#include "steiner/linalg.hpp"
#include "steiner/partitions.hpp"
#include "steiner/reguli.hpp"

namespace props {

namespace {

using namespace steiner;
using gf::FieldElem;
using linalg::MatGF;

// Records the first failure only; later ones just flip the flag.
struct Recorder {
  Outcome out;
  explicit Recorder(std::string name) { out.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++out.cases;
    if (!ok && out.passed) {
      out.passed = false;
      out.detail = what;
    }
  }
};

std::vector<std::uint32_t> digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (auto& x : d) {
    x = index % p;
    index /= p;
  }
  return d;
}

std::string elem_triple(std::uint32_t q, std::uint32_t a, std::uint32_t b, std::uint32_t c = 0) {
  std::ostringstream s;
  s << "GF(" << q << ") a=" << a << " b=" << b << " c=" << c;
  return s.str();
}

MatGF multiply(const MatGF& a, const MatGF& b) {
  const auto& f = *a.field();
  MatGF out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElem s = gf::Field::zero();
      for (std::size_t t = 0; t < a.cols(); ++t) s = f.add(s, f.mul(a(i, t), b(t, j)));
      out(i, j) = s;
    }
  return out;
}

MatGF random_matrix(const gf::FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
  MatGF m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FieldElem{pick(rng)};
  return m;
}

oracle::Adjacency dense(const designs::BlockGraph& g) {
  oracle::Adjacency a(g.order(), std::vector<char>(g.order(), 0));
  for (std::uint32_t u = 0; u < g.order(); ++u)
    for (std::uint32_t w = 0; w < g.order(); ++w) a[u][w] = g.adjacent(u, w);
  return a;
}

std::vector<long> as_vector(const eigen::Eigenfunction& f, std::uint32_t order) {
  std::vector<long> v(order, 0);
  for (const auto& [u, x] : f.values) v[u] = static_cast<long>(boost::multiprecision::numerator(x));
  return v;
}

eigen::Eigenfunction combine(const std::vector<eigen::Eigenfunction>& fs, const std::vector<long>& coef) {
  eigen::Eigenfunction out;
  out.theta = fs.front().theta;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& [u, x] : fs[i].values) out.values[u] += x * coef[i];
  std::erase_if(out.values, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void linearity(Recorder& rec, const designs::BlockGraph& g, const oracle::Adjacency& adj,
               const std::vector<eigen::Eigenfunction>& fs, std::mt19937_64& rng, const std::string& label) {
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<eigen::Eigenfunction> chosen;
    std::vector<long> c;
    for (int i = 0; i < 3; ++i) {
      chosen.push_back(fs[pick(rng)]);
      c.push_back(coef(rng));
    }
    const auto sum = combine(chosen, c);
    if (sum.values.empty()) continue;
    const bool ok = eigen::verify_eigenfunction(g, sum).ok &&
                    oracle::dense_eigen_check(adj, as_vector(sum, g.order()), sum.theta);
    rec.check(ok, label + ": combination " + std::to_string(trial) + " fails the eigen-equation");
  }
}

void orthogonality(Recorder& rec, const std::vector<eigen::Eigenfunction>& a, const std::vector<eigen::Eigenfunction>& b,
                   const std::string& label) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      rec.check(eigen::inner_product(a[i], b[j]) == 0,
                label + ": functions " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
}

}  // namespace

Outcome field_axioms() {
  Recorder rec("field axioms");
  const std::pair<std::uint32_t, std::uint32_t> fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  for (const auto& [p, k] : fields) {
    const auto F = gf::Field::make(p, k);
    const auto& f = *F;
    const std::uint32_t q = f.q();
    const auto& mod = f.spec().modulus;
    rec.check(f.elements().size() == q, "GF(" + std::to_string(q) + ") element count");
    if (k > 1) {
      rec.check(oracle::irreducible_by_products(mod, p), "GF(" + std::to_string(q) + ") modulus is reducible");
      // Every smaller monic polynomial of degree k factors.
      std::uint32_t code = 0;
      for (std::uint32_t i = k; i-- > 0;) code = code * p + mod[i];
      for (std::uint32_t c = 0; c < code; ++c) {
        auto poly = digits_of(c, p, k);
        poly.push_back(1);
        rec.check(!oracle::irreducible_by_products(poly, p),
                  "GF(" + std::to_string(q) + ") a smaller irreducible modulus exists");
        rec.check(gf::is_irreducible(poly, p) == oracle::irreducible_by_products(poly, p),
                  "GF(" + std::to_string(q) + ") irreducibility test disagrees with the oracle");
      }
    }
    for (std::uint32_t a = 0; a < q; ++a) {
      const FieldElem A{a};
      rec.check(f.add(A, gf::Field::zero()) == A && f.mul(A, gf::Field::one()) == A, elem_triple(q, a, 0) + " identities");
      rec.check(f.add(A, f.neg(A)) == gf::Field::zero(), elem_triple(q, a, 0) + " additive inverse");
      if (a != 0) {
        rec.check(f.mul(A, f.inv(A)) == gf::Field::one(), elem_triple(q, a, 0) + " multiplicative inverse");
        rec.check(f.pow(A, q - 1) == gf::Field::one(), elem_triple(q, a, 0) + " a^(q-1) != 1");
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElem B{b};
        rec.check(f.add(A, B) == f.add(B, A) && f.mul(A, B) == f.mul(B, A), elem_triple(q, a, b) + " commutativity");
        rec.check(f.sub(A, B) == f.add(A, f.neg(B)), elem_triple(q, a, b) + " subtraction");
        if (b != 0) rec.check(f.mul(f.div(A, B), B) == A, elem_triple(q, a, b) + " division");
        const auto da = digits_of(a, p, k), db = digits_of(b, p, k);
        std::vector<std::uint32_t> sum(k);
        for (std::uint32_t i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
        rec.check(digits_of(f.add(A, B).index, p, k) == sum, elem_triple(q, a, b) + " sum differs from coefficient-wise sum");
        rec.check(digits_of(f.mul(A, B).index, p, k) == oracle::poly_mulmod(da, db, mod, p),
                  elem_triple(q, a, b) + " product differs from polynomial product");
        for (std::uint32_t c = 0; c < q; ++c) {
          const FieldElem C{c};
          rec.check(f.add(f.add(A, B), C) == f.add(A, f.add(B, C)), elem_triple(q, a, b, c) + " additive associativity");
          rec.check(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)), elem_triple(q, a, b, c) + " multiplicative associativity");
          rec.check(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)), elem_triple(q, a, b, c) + " distributivity");
        }
      }
    }
    rec.check(gf::field_make(p, k) == gf::field_make(p, k), "GF(" + std::to_string(q) + ") field_make not deterministic");
  }
  return rec.out;
}

Outcome rref_canonicity(std::uint64_t seed) {
  Recorder rec("rref canonicity");
  std::mt19937_64 rng(seed);
  for (const auto& [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto F = gf::Field::make(p, k);
    const std::string tag = "GF(" + std::to_string(F->q()) + ")";
    std::uniform_int_distribution<std::size_t> dim(1, 4), width(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = dim(rng), c = width(rng);
      const MatGF M = random_matrix(F, r, c, rng);
      MatGF P;
      do {
        P = random_matrix(F, r, r, rng);
      } while (linalg::rref(P).rank != r);
      const auto base = linalg::rref(M);
      rec.check(linalg::rref(multiply(P, M)).matrix == base.matrix, tag + " rref changes under row operations");
      rec.check(linalg::rref(base.matrix).matrix == base.matrix, tag + " rref not idempotent");
      for (std::size_t i = 0; i < base.rank; ++i) {
        const std::size_t col = base.pivots[i];
        rec.check(base.matrix(i, col) == gf::Field::one(), tag + " pivot entry is not 1");
        for (std::size_t j = 0; j < r; ++j)
          if (j != i) rec.check(base.matrix(j, col) == gf::Field::zero(), tag + " pivot column not cleared");
      }
      for (std::size_t i = base.rank; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) rec.check(base.matrix(i, j) == gf::Field::zero(), tag + " zero rows not last");
    }
    for (int trial = 0; trial < 200; ++trial) {
      const MatGF a = random_matrix(F, dim(rng), 4, rng), b = random_matrix(F, dim(rng), 4, rng);
      const std::size_t ra = linalg::rref(a).rank, rb = linalg::rref(b).rank;
      const MatGF sum = linalg::rowspace_sum(a, b), meet = linalg::rowspace_intersect(a, b);
      rec.check(linalg::rref(sum).rank + linalg::rref(meet).rank == ra + rb, tag + " modular law fails");
      for (std::size_t i = 0; i < meet.rows(); ++i)
        rec.check(linalg::in_rowspace(linalg::row_basis(a), meet.row(i)) && linalg::in_rowspace(linalg::row_basis(b), meet.row(i)),
                  tag + " intersection vector outside an operand");
    }
  }
  return rec.out;
}

Outcome design_uniqueness() {
  Recorder rec("2-design uniqueness");
  auto run = [&](const designs::Design& d, const std::string& tag) {
    rec.check(oracle::every_pair_in_one_block(d.N, d.blocks), tag + " has a pair not in exactly one block");
    const std::size_t expected = static_cast<std::size_t>(d.N) * (d.N - 1) / (d.M * (d.M - 1));
    rec.check(d.blocks.size() == expected, tag + " block count");
    for (std::uint32_t a = 0; a < d.N; ++a)
      for (std::uint32_t b = a + 1; b < d.N; ++b) {
        const auto& blk = d.blocks[d.block_of(a, b)];
        rec.check(std::binary_search(blk.begin(), blk.end(), a) && std::binary_search(blk.begin(), blk.end(), b),
                  tag + " block_of misses a point");
      }
  };
  for (const auto& [n, p, k] : {std::tuple{2, 2u, 1u}, {3, 2u, 1u}, {4, 2u, 1u}, {2, 3u, 1u}, {3, 3u, 1u}, {2, 2u, 2u}})
    run(designs::projective_design(n, gf::Field::make(p, k)), "PS(" + std::to_string(n) + "," + std::to_string(p) + "^" + std::to_string(k) + ")");
  for (const auto& [n, p, k] : {std::tuple{3, 2u, 1u}, {4, 2u, 1u}, {3, 3u, 1u}, {3, 2u, 2u}})
    run(designs::affine_design(n, gf::Field::make(p, k)), "AS(" + std::to_string(n) + "," + std::to_string(p) + "^" + std::to_string(k) + ")");
  return rec.out;
}

Outcome eigen_linearity_orthogonality(std::uint64_t seed) {
  Recorder rec("eigenfunction linearity and orthogonality");
  std::mt19937_64 rng(seed);

  for (std::uint32_t q : {2u, 3u}) {
    const auto psys = designs::projective_system(3, gf::Field::make(q, 1));
    const auto& g = psys.graph;
    const auto adj = dense(g);
    const auto pairs = reguli::enumerate_reguli(psys);
    std::vector<eigen::Eigenfunction> s_side, r_side;
    const std::size_t step = q == 2 ? 1 : 97;
    for (std::size_t i = 0; i < pairs.size(); i += step) s_side.push_back(eigen::optimal_from_regulus(psys, pairs[i]));
    for (std::uint32_t p = 0; p < psys.points.size(); ++p)
      r_side.push_back(partitions::partition_to_eigenfunction(g, partitions::make_partition(g.order(), partitions::star(psys, p))));
    for (const auto& h : geometry::enumerate_hyperplanes(psys.space))
      r_side.push_back(partitions::partition_to_eigenfunction(g, partitions::make_partition(g.order(), partitions::plane_lines(psys, h))));
    const std::string tag = "J_" + std::to_string(q) + "(4,2)";
    for (const auto& f : r_side) rec.check(f.theta == designs::srg_params_brute(g).r, tag + " star/plane eigenvalue");
    linearity(rec, g, adj, s_side, rng, tag + " regulus functions");
    linearity(rec, g, adj, r_side, rng, tag + " star and plane functions");
    orthogonality(rec, s_side, r_side, tag);
  }

  for (std::uint32_t q : {2u, 3u}) {
    const auto asys = designs::affine_system(3, gf::Field::make(q, 1));
    const auto& g = asys.graph;
    const auto adj = dense(g);
    const auto census = reguli::enumerate_affine_reguli(asys);
    std::vector<eigen::Eigenfunction> s_side, r_side;
    const std::size_t step = q == 2 ? 1 : 53;
    for (std::size_t i = 0; i < census.ordered_pairs.size(); i += step)
      s_side.push_back(eigen::optimal_from_affine_regulus(asys, census.ordered_pairs[i]));
    for (const auto& plane : geometry::enumerate_planes(asys.space)) {
      const auto classes = geometry::parallel_classes(asys.space, plane);
      s_side.push_back(eigen::optimal_from_parallel_classes(asys, plane, classes[0], classes[1]));
    }
    for (std::uint32_t p = 0; p < asys.points.size(); ++p)
      r_side.push_back(partitions::partition_to_eigenfunction(g, partitions::make_partition(g.order(), asys.design.point_blocks[p])));
    const std::string tag = "X_" + std::to_string(q) + "(3,1)";
    for (const auto& f : r_side) rec.check(f.theta == designs::srg_params_brute(g).r, tag + " star eigenvalue");
    linearity(rec, g, adj, s_side, rng, tag + " optimal functions");
    linearity(rec, g, adj, r_side, rng, tag + " star functions");
    orthogonality(rec, s_side, r_side, tag);
  }
  return rec.out;
}

Outcome closure_restriction_identity() {
  Recorder rec("closure and restriction identity");
  for (const auto& [n, p, k] : {std::tuple{2, 2u, 1u}, {3, 2u, 1u}, {2, 3u, 1u}, {3, 3u, 1u}, {3, 2u, 2u}}) {
    const auto F = gf::Field::make(p, k);
    const auto a = geometry::make_aff_space(n, F);
    const std::string tag = "AG(" + std::to_string(n) + "," + std::to_string(F->q()) + ")";
    const auto cl = geometry::projective_closure(a);
    const geometry::AffineChart chart(cl.pspace, cl.at_infinity);
    const auto pts = geometry::enumerate_points(a);
    const auto lines = geometry::enumerate_lines(a);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      rec.check(cl.point_map[i] == geometry::closure_point(a, pts[i]), tag + " point map");
      rec.check(chart.to_affine(cl.point_map[i]) == pts[i], tag + " point round trip");
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      rec.check(chart.to_affine(cl.line_map[i]) == lines[i], tag + " line round trip");
      rec.check(chart.to_projective(lines[i]) == cl.line_map[i], tag + " line closure");
    }
    const auto restriction = geometry::affine_restriction(cl.pspace, cl.at_infinity);
    const auto plines = geometry::enumerate_lines(cl.pspace);
    std::size_t seen = 0;
    for (std::size_t j = 0; j < plines.size(); ++j) {
      const bool inside = geometry::contains(cl.pspace, cl.at_infinity, plines[j]);
      rec.check(inside != restriction.line_map[j].has_value(), tag + " restriction domain");
      if (restriction.line_map[j]) {
        ++seen;
        rec.check(geometry::closure_line(a, *restriction.line_map[j]) == plines[j], tag + " closure of restriction");
      }
    }
    rec.check(seen == lines.size(), tag + " restriction hits every affine line once");
  }
  for (std::uint32_t q : {2u, 3u}) {
    const auto s = geometry::make_proj_space(3, gf::Field::make(q, 1));
    const std::string tag = "PG(3," + std::to_string(q) + ")";
    const auto pts = geometry::enumerate_points(s);
    const auto lines = geometry::enumerate_lines(s);
    for (const auto& h : geometry::enumerate_hyperplanes(s)) {
      const geometry::AffineChart chart(s, h);
      for (const auto& pt : pts) {
        const auto img = chart.to_affine(pt);
        rec.check(img.has_value() != geometry::contains(s, h, pt), tag + " chart domain on points");
        if (img) rec.check(chart.to_projective(*img) == pt, tag + " point chart round trip");
      }
      for (const auto& l : lines) {
        if (geometry::contains(s, h, l)) {
          bool threw = false;
          try {
            (void)chart.to_affine(l);
          } catch (const Error& e) {
            threw = e.code() == ErrorCode::LineInsideHyperplane;
          }
          rec.check(threw, tag + " line inside the hyperplane accepted");
        } else {
          rec.check(chart.to_projective(chart.to_affine(l)) == l, tag + " line chart round trip");
        }
      }
    }
  }
  return rec.out;
}

std::vector<Outcome> all_suites(std::uint64_t seed) {
  return {field_axioms(), rref_canonicity(seed), design_uniqueness(), eigen_linearity_orthogonality(seed),
          closure_restriction_identity()};
}

}  // namespace props
