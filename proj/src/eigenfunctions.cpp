#include "steiner/eigenfunctions.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "steiner/error.hpp"

namespace steiner::eigen {

namespace {

using designs::BlockGraph;

Eigenfunction pm_function(std::int64_t theta, const std::vector<std::uint32_t>& plus,
                          const std::vector<std::uint32_t>& minus) {
  Eigenfunction f;
  f.theta = theta;
  for (auto u : plus) f.values[u] = 1;
  for (auto u : minus) f.values[u] = -1;
  return f;
}

bool function_less(const Eigenfunction& a, const Eigenfunction& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  if (sa != sb) return sa < sb;
  return a.values < b.values;
}

Bitset to_bitset(std::uint32_t v, const std::vector<std::uint32_t>& xs) {
  Bitset b(v);
  for (auto x : xs) b.set(x);
  return b;
}

bool all_parallel(const std::vector<geometry::AffLine>& lines) {
  return std::all_of(lines.begin(), lines.end(), [&](const geometry::AffLine& l) { return l.dir == lines[0].dir; });
}

}  // namespace

std::vector<std::uint32_t> Eigenfunction::support() const {
  std::vector<std::uint32_t> out;
  out.reserve(values.size());
  for (const auto& [u, x] : values) out.push_back(u);
  return out;
}

Rational Eigenfunction::value(std::uint32_t u) const {
  auto it = values.find(u);
  return it == values.end() ? Rational(0) : it->second;
}

void Eigenfunction::normalize() {
  if (values.empty()) return;
  BigInt l = 1;
  for (const auto& [u, x] : values) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  BigInt g = 0;
  for (const auto& [u, x] : values) g = boost::multiprecision::gcd(g, BigInt(numerator(x) * (l / denominator(x))));
  Rational scale(l, g);
  if (values.begin()->second < 0) scale = -scale;
  for (auto& [u, x] : values) x *= scale;
}

Eigenfunction Eigenfunction::negated() const {
  Eigenfunction f = *this;
  for (auto& [u, x] : f.values) x = -x;
  return f;
}

Eigenfunction make_function(std::int64_t theta, const std::vector<std::pair<std::uint32_t, Rational>>& values) {
  Eigenfunction f;
  f.theta = theta;
  for (const auto& [u, x] : values)
    if (x != 0) f.values[u] = x;
  return f;
}

Rational inner_product(const Eigenfunction& a, const Eigenfunction& b) {
  Rational s = 0;
  for (const auto& [u, x] : a.values) {
    auto it = b.values.find(u);
    if (it != b.values.end()) s += x * it->second;
  }
  return s;
}

VerifyResult verify_eigenfunction(const BlockGraph& g, const Eigenfunction& f) {
  if (f.values.empty()) throw Error(ErrorCode::ZeroFunction, "eigenfunction must be nonzero");
  for (const auto& [u, x] : f.values) {
    if (u >= g.order()) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "explicit zero value");
  }
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    Rational rhs = 0;
    const Bitset& nb = g.neighbours(u);
    for (const auto& [w, x] : f.values)
      if (nb.test(w)) rhs += x;
    Rational lhs = f.value(u) * f.theta;
    if (lhs != rhs) return {false, VerifyWitness{u, lhs, rhs}};
  }
  return {};
}

Eigenfunction from_bipartite_pair(const BlockGraph& g, const std::vector<std::uint32_t>& T0,
                                  const std::vector<std::uint32_t>& T1, std::int64_t theta) {
  if (T0.size() != T1.size()) throw Error(ErrorCode::InvalidArgument, "parts must have equal size");
  std::set<std::uint32_t> all(T0.begin(), T0.end());
  all.insert(T1.begin(), T1.end());
  if (all.size() != T0.size() + T1.size()) throw Error(ErrorCode::InvalidArgument, "parts must be disjoint");
  Eigenfunction f = pm_function(theta, T0, T1);
  const auto res = verify_eigenfunction(g, f);
  if (!res.ok) {
    throw Error(ErrorCode::NotAnEigenfunction, "condition fails at vertex " + std::to_string(res.witness->u) + ": " +
                                                   res.witness->lhs.str() + " != " + res.witness->rhs.str());
  }
  return f;
}

Eigenfunction optimal_from_regulus(const designs::ProjectiveSystem& sys, const reguli::RegulusPair& rp) {
  if (!(sys.space == rp.ambient)) throw Error(ErrorCode::MixedFields, "regulus lives in a different space");
  std::vector<std::uint32_t> plus, minus;
  for (const auto& l : rp.R) plus.push_back(sys.require_line(l));
  for (const auto& l : rp.R_opp) minus.push_back(sys.require_line(l));
  return from_bipartite_pair(sys.graph, plus, minus, -static_cast<std::int64_t>(sys.space.q()) - 1);
}

Eigenfunction optimal_from_parallel_classes(const designs::AffineSystem& sys, const geometry::AffPlane& plane,
                                            const geometry::ParallelClass& class1,
                                            const geometry::ParallelClass& class2) {
  const std::uint32_t q = sys.space.q();
  if (class1.dir == class2.dir) throw Error(ErrorCode::InvalidArgument, "the two parallel classes coincide");
  std::vector<std::uint32_t> idx[2];
  const geometry::ParallelClass* classes[2] = {&class1, &class2};
  for (int c = 0; c < 2; ++c) {
    const auto& cl = *classes[c];
    if (cl.lines.size() != q) throw Error(ErrorCode::WrongCount, "a parallel class of a plane has q lines");
    for (const auto& l : cl.lines) {
      if (l.dir != cl.dir) throw Error(ErrorCode::InvalidArgument, "line not in the stated direction");
      if (!geometry::contains(sys.space, plane, l)) throw Error(ErrorCode::InvalidArgument, "line outside the plane");
      idx[c].push_back(sys.require_line(l));
    }
  }
  return from_bipartite_pair(sys.graph, idx[0], idx[1], -static_cast<std::int64_t>(q));
}

Eigenfunction optimal_from_affine_regulus(const designs::AffineSystem& sys, const reguli::AffineRegulusPair& ap) {
  if (!(sys.space == ap.ambient)) throw Error(ErrorCode::MixedFields, "affine regulus lives in a different space");
  if (auto bad = reguli::affine_pair_violation(ap)) throw Error(ErrorCode::InvalidArgument, *bad);
  std::vector<std::uint32_t> plus, minus;
  for (const auto& l : ap.S) plus.push_back(sys.require_line(l));
  for (const auto& l : ap.S_opp) minus.push_back(sys.require_line(l));
  return from_bipartite_pair(sys.graph, plus, minus, -static_cast<std::int64_t>(sys.space.q()));
}

Eigenfunction wdbplus2_function(const designs::AffineSystem& sys, const reguli::RegulusPair& rp,
                                const geometry::Hyperplane& h) {
  if (sys.space.n != rp.ambient.n || !(sys.space.field->spec() == rp.ambient.field->spec())) {
    throw Error(ErrorCode::MixedFields, "affine system does not match the regulus space");
  }
  const auto res = reguli::regulus_restriction(rp, h);
  const auto* cfg = std::get_if<reguli::WdbPlus2Config>(&res);
  if (!cfg) throw Error(ErrorCode::HyperplaneHitsLine, "hyperplane contains a line of the regulus pair");
  std::vector<std::uint32_t> plus, minus;
  for (const auto& l : cfg->R_prime) plus.push_back(sys.require_line(l));
  for (const auto& l : cfg->R_opp_prime) minus.push_back(sys.require_line(l));
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  return from_bipartite_pair(sys.graph, plus, minus, -static_cast<std::int64_t>(sys.space.q()));
}

std::string_view to_string(SupportStructure::Kind k) {
  switch (k) {
    case SupportStructure::Kind::CompleteBipartite: return "CompleteBipartite";
    case SupportStructure::Kind::IsolatedCliquePair: return "IsolatedCliquePair";
    case SupportStructure::Kind::BipartiteMinusMatching: return "BipartiteMinusMatching";
    case SupportStructure::Kind::Other: return "Other";
  }
  return "Other";
}

SupportStructure support_structure(const BlockGraph& g, const Eigenfunction& f) {
  SupportStructure out;
  for (const auto& [u, x] : f.values) (x > 0 ? out.T0 : out.T1).push_back(u);
  const std::size_t a = out.T0.size();
  if (a == 0 || a != out.T1.size()) return out;
  const Bitset b0 = to_bitset(g.order(), out.T0);
  const Bitset b1 = to_bitset(g.order(), out.T1);
  auto degrees = [&](const std::vector<std::uint32_t>& part, const Bitset& same, const Bitset& other) {
    std::vector<std::pair<std::size_t, std::size_t>> d;
    for (auto u : part) d.emplace_back(g.neighbours(u).count_and(same), g.neighbours(u).count_and(other));
    return d;
  };
  const auto d0 = degrees(out.T0, b0, b1);
  const auto d1 = degrees(out.T1, b1, b0);
  auto all_equal = [&](std::size_t within, std::size_t across) {
    auto pred = [&](const std::pair<std::size_t, std::size_t>& p) { return p.first == within && p.second == across; };
    return std::all_of(d0.begin(), d0.end(), pred) && std::all_of(d1.begin(), d1.end(), pred);
  };
  using Kind = SupportStructure::Kind;
  if (all_equal(0, a)) {
    out.kind = Kind::CompleteBipartite;
  } else if (all_equal(a - 1, 0)) {
    out.kind = Kind::IsolatedCliquePair;
  } else if (a >= 2 && all_equal(0, a - 1)) {
    out.kind = Kind::BipartiteMinusMatching;
  }
  return out;
}

std::vector<BipartitePair> enumerate_complete_bipartite(const BlockGraph& g, std::uint32_t a,
                                                        std::uint32_t vertex_limit) {
  const std::uint32_t v = g.order();
  if (v > vertex_limit) throw Error(ErrorCode::LimitExceeded, "graph exceeds the vertex limit");
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "part size must be positive");
  std::vector<BipartitePair> out;
  std::vector<std::uint32_t> T0, T1;

  // Independent a-subsets of cand, ascending.
  auto pick_t1 = [&](auto&& self, const Bitset& cand) -> void {
    if (T1.size() == a) {
      out.push_back({T0, T1});
      return;
    }
    if (cand.count() < a - T1.size()) return;
    cand.for_each([&](std::size_t x) {
      Bitset next = cand;
      next.subtract(g.neighbours(static_cast<std::uint32_t>(x)));
      next.clear_through(x);
      T1.push_back(static_cast<std::uint32_t>(x));
      self(self, next);
      T1.pop_back();
    });
  };
  // T0 grows as an independent set; common holds the common neighbours.
  auto grow_t0 = [&](auto&& self, const Bitset& common, const Bitset& indep) -> void {
    if (common.count() < a) return;
    if (T0.size() == a) {
      pick_t1(pick_t1, common);
      return;
    }
    indep.for_each([&](std::size_t x) {
      const Bitset& nb = g.neighbours(static_cast<std::uint32_t>(x));
      Bitset next_indep = indep;
      next_indep.subtract(nb);
      next_indep.clear_through(x);
      T0.push_back(static_cast<std::uint32_t>(x));
      self(self, common & nb, next_indep);
      T0.pop_back();
    });
  };
  for (std::uint32_t t0 = 0; t0 < v; ++t0) {
    Bitset common = g.neighbours(t0);
    common.clear_through(t0);
    Bitset indep(v);
    for (std::uint32_t w = t0 + 1; w < v; ++w)
      if (!g.adjacent(t0, w)) indep.set(w);
    T0 = {t0};
    grow_t0(grow_t0, common, indep);
  }
  return out;
}

namespace {

struct PmParts {
  std::vector<std::uint32_t> plus, minus;
};

// Checks the shared shape of an optimal function: exactly two opposite
// values on parts of size `part`, verified at theta, inducing K_{part,part}.
PmParts optimal_parts(const BlockGraph& g, const Eigenfunction& f, std::size_t part, std::int64_t theta) {
  if (f.theta != theta) throw Error(ErrorCode::NotOptimal, "eigenvalue is not " + std::to_string(theta));
  if (f.support_size() != 2 * part) throw Error(ErrorCode::NotOptimal, "support size differs from the bound");
  const Rational c = abs(f.values.begin()->second);
  for (const auto& [u, x] : f.values)
    if (abs(x) != c) throw Error(ErrorCode::NotOptimal, "values are not +c/-c");
  if (!verify_eigenfunction(g, f).ok) throw Error(ErrorCode::NotOptimal, "not an eigenfunction");
  const auto st = support_structure(g, f);
  if (st.kind != SupportStructure::Kind::CompleteBipartite || st.T0.size() != part) {
    throw Error(ErrorCode::NotOptimal, "support does not induce a complete bipartite graph");
  }
  return {st.T0, st.T1};
}

}  // namespace

OptimalClass classify_optimal(const designs::ProjectiveSystem& sys, const Eigenfunction& f) {
  const std::size_t q = sys.space.q();
  const auto parts = optimal_parts(sys.graph, f, q + 1, -static_cast<std::int64_t>(q) - 1);
  reguli::RegulusPair rp{sys.space, {}, {}};
  for (auto u : parts.plus) rp.R.push_back(sys.lines[u]);
  for (auto u : parts.minus) rp.R_opp.push_back(sys.lines[u]);
  if (auto bad = reguli::regulus_pair_violation(rp)) throw Error(ErrorCode::NotOptimal, *bad);
  return GrassmannRegulus{rp};
}

OptimalClass classify_optimal(const designs::AffineSystem& sys, const Eigenfunction& f) {
  const std::size_t q = sys.space.q();
  const auto parts = optimal_parts(sys.graph, f, q, -static_cast<std::int64_t>(q));
  std::vector<geometry::AffLine> plus, minus;
  for (auto u : parts.plus) plus.push_back(sys.lines[u]);
  for (auto u : parts.minus) minus.push_back(sys.lines[u]);
  const bool plus_parallel = all_parallel(plus);
  const bool minus_parallel = all_parallel(minus);
  if (plus_parallel && minus_parallel) {
    std::vector<geometry::AffLine> all = plus;
    all.insert(all.end(), minus.begin(), minus.end());
    const auto flat = geometry::span_of_lines(sys.space, all);
    if (flat.dimension() != 2) throw Error(ErrorCode::NotOptimal, "parallel parts do not span a plane");
    Type1 t{geometry::AffPlane{flat.directions, flat.base}, {}, {}};
    for (const auto& pc : geometry::parallel_classes(sys.space, t.plane)) {
      if (pc.dir == plus[0].dir) t.positive = pc;
      if (pc.dir == minus[0].dir) t.negative = pc;
    }
    if (t.positive.lines != plus || t.negative.lines != minus) {
      throw Error(ErrorCode::NotOptimal, "parts are not full parallel classes of the plane");
    }
    return t;
  }
  if (plus_parallel || minus_parallel) throw Error(ErrorCode::NotOptimal, "one part parallel, the other skew");
  reguli::AffineRegulusPair ap{sys.space, plus, minus};
  if (auto bad = reguli::affine_pair_violation(ap)) throw Error(ErrorCode::NotOptimal, *bad);
  return Type2{ap};
}

WdbPlus2Census wdbplus2_census(const designs::ProjectiveSystem& psys, const designs::AffineSystem& asys) {
  WdbPlus2Census census;
  std::map<std::vector<std::pair<std::uint32_t, Rational>>, std::size_t> seen;
  std::vector<Eigenfunction> functions;
  const auto hyperplanes = geometry::enumerate_hyperplanes(psys.space);
  for (const auto& rp : reguli::enumerate_reguli(psys)) {
    for (const auto& h : hyperplanes) {
      auto res = reguli::regulus_restriction(rp, h);
      if (!std::holds_alternative<reguli::WdbPlus2Config>(res)) continue;
      Eigenfunction f = wdbplus2_function(asys, rp, h);
      f.normalize();
      ++census.pairs;
      std::vector<std::pair<std::uint32_t, Rational>> key(f.values.begin(), f.values.end());
      if (seen[key]++ == 0) functions.push_back(std::move(f));
    }
  }
  for (const auto& [key, count] : seen) census.max_multiplicity = std::max(census.max_multiplicity, count);
  std::sort(functions.begin(), functions.end(), function_less);
  census.distinct_functions = functions.size();
  census.functions = std::move(functions);
  return census;
}

namespace {

constexpr std::uint32_t kFilterPrime = 1'000'003;

struct ShardOutcome {
  std::vector<Eigenfunction> functions;
  std::vector<SupportFamily> families;
  std::uint64_t examined = 0, pruned = 0, rank_filtered = 0;
  std::optional<std::vector<std::uint32_t>> cursor;  // set when stopped early
};

// Lexicographic successor keeping the first entry fixed.
bool next_in_shard(std::vector<std::uint32_t>& c, std::uint32_t v) {
  const std::size_t t = c.size();
  for (std::size_t i = t; i-- > 1;) {
    if (c[i] < v - (t - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

class Searcher {
 public:
  Searcher(const BlockGraph& g, std::int64_t theta, const SearchOptions& opt) : g_(g), theta_(theta), opt_(opt) {}

  ShardOutcome run_shard(std::vector<std::uint32_t> combo) {
    ShardOutcome out;
    const std::uint32_t v = g_.order();
    do {
      if (opt_.max_candidates) {
        if (counter_.fetch_add(1) >= opt_.max_candidates) {
          out.cursor = combo;
          return out;
        }
      } else {
        counter_.fetch_add(1, std::memory_order_relaxed);
      }
      ++out.examined;
      if (opt_.progress && (out.examined & 0xFFF) == 0) opt_.progress(counter_.load());
      examine(combo, out);
    } while (next_in_shard(combo, v));
    return out;
  }

 private:
  void examine(const std::vector<std::uint32_t>& s, ShardOutcome& out) {
    const std::uint32_t v = g_.order();
    const std::size_t t = s.size();
    Bitset sb(v);
    for (auto x : s) sb.set(x);
    if (opt_.mode == SearchMode::BranchAndPrune) {
      // A support vertex without support neighbours forces theta f(u) = 0;
      // an outside vertex with one support neighbour forces that value to 0.
      for (auto x : s)
        if (g_.neighbours(x).count_and(sb) == 0) {
          ++out.pruned;
          return;
        }
      for (std::uint32_t u = 0; u < v; ++u)
        if (!sb.test(u) && g_.neighbours(u).count_and(sb) == 1) {
          ++out.pruned;
          return;
        }
    }
    // Rows of (A - theta I) restricted to the columns s that are not zero.
    std::vector<std::uint32_t> rows;
    for (std::uint32_t u = 0; u < v; ++u)
      if (sb.test(u) || g_.neighbours(u).count_and(sb) > 0) rows.push_back(u);
    std::vector<std::int64_t> dense(rows.size() * t);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < t; ++j)
        dense[i * t + j] = rows[i] == s[j] ? -theta_ : (g_.adjacent(rows[i], s[j]) ? 1 : 0);
    if (linalg::rank_mod_prime(dense, rows.size(), t, kFilterPrime) == t) {
      ++out.rank_filtered;
      return;
    }
    linalg::MatZ m(rows.size(), t);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < t; ++j) m(i, j) = dense[i * t + j];
    const auto basis = linalg::rational_kernel(m);
    if (basis.empty()) return;
    if (basis.size() == 1) {
      const auto& k = basis[0];
      if (std::any_of(k.begin(), k.end(), [](const BigInt& x) { return x == 0; })) return;
      out.functions.push_back(to_function(s, k));
      return;
    }
    // A full-support member exists unless some coordinate vanishes on the
    // whole kernel; coefficients (1, m, m^2, ...) find one for some small m.
    for (std::size_t j = 0; j < t; ++j) {
      const bool dead = std::all_of(basis.begin(), basis.end(), [&](const linalg::IntVec& b) { return b[j] == 0; });
      if (dead) return;
    }
    for (std::int64_t mult = 1;; ++mult) {
      linalg::IntVec comb(t, 0);
      BigInt coeff = 1;
      for (const auto& b : basis) {
        for (std::size_t j = 0; j < t; ++j) comb[j] += coeff * b[j];
        coeff *= mult;
      }
      if (std::none_of(comb.begin(), comb.end(), [](const BigInt& x) { return x == 0; })) {
        linalg::make_primitive(comb);
        out.families.push_back(SupportFamily{s, basis, to_function(s, comb)});
        return;
      }
    }
  }

  Eigenfunction to_function(const std::vector<std::uint32_t>& s, const linalg::IntVec& k) const {
    Eigenfunction f;
    f.theta = theta_;
    for (std::size_t j = 0; j < s.size(); ++j) f.values[s[j]] = Rational(k[j]);
    f.normalize();
    return f;
  }

  const BlockGraph& g_;
  std::int64_t theta_;
  const SearchOptions& opt_;
  std::atomic<std::uint64_t> counter_{0};
};

SearchResult run_search(const BlockGraph& g, SearchState state, const SearchOptions& options) {
  Searcher searcher(g, state.theta, options);
  const std::size_t shards = state.cursors.size();
  std::vector<ShardOutcome> outcomes(shards);
  std::vector<bool> started(shards, false);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= shards) return;
        {
          std::lock_guard lock(mu);
          started[i] = true;
        }
        outcomes[i] = searcher.run_shard(state.cursors[i]);
        if (outcomes[i].cursor) {
          // Budget exhausted: leave the remaining shards untouched.
          next.store(shards);
          return;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(shards);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::vector<std::uint32_t>> remaining;
  for (std::size_t i = 0; i < shards; ++i) {
    auto& o = outcomes[i];
    state.examined += o.examined;
    state.pruned += o.pruned;
    state.rank_filtered += o.rank_filtered;
    for (auto& f : o.functions) state.functions.push_back(std::move(f));
    for (auto& fam : o.families) state.families.push_back(std::move(fam));
    if (!started[i]) {
      remaining.push_back(state.cursors[i]);
    } else if (o.cursor) {
      remaining.push_back(*o.cursor);
    }
  }
  std::sort(remaining.begin(), remaining.end());
  state.cursors = std::move(remaining);
  std::sort(state.functions.begin(), state.functions.end(), function_less);
  std::sort(state.families.begin(), state.families.end(),
            [](const SupportFamily& a, const SupportFamily& b) { return a.support < b.support; });
  SearchResult res;
  res.complete = state.cursors.empty();
  res.state = std::move(state);
  return res;
}

}  // namespace

SearchResult search_min_support(const BlockGraph& g, std::int64_t theta, std::uint32_t target,
                                const SearchOptions& options) {
  const auto params = designs::srg_params_brute(g);
  if (theta == params.k) throw Error(ErrorCode::NotAnEigenvalue, "the principal eigenvalue is excluded");
  if (theta != params.r && theta != params.s) {
    throw Error(ErrorCode::NotAnEigenvalue, std::to_string(theta) + " is not an eigenvalue");
  }
  SearchState state;
  state.theta = theta;
  state.target = target;
  state.order = g.order();
  if (target == 0 || target > g.order()) throw Error(ErrorCode::InvalidArgument, "target out of range");
  if (target >= static_cast<std::uint32_t>(designs::wdb(params, theta))) {
    for (std::uint32_t f = 0; f + target <= g.order(); ++f) {
      std::vector<std::uint32_t> c(target);
      for (std::uint32_t j = 0; j < target; ++j) c[j] = f + j;
      state.cursors.push_back(std::move(c));
    }
  }
  return run_search(g, std::move(state), options);
}

SearchResult resume_min_support(const BlockGraph& g, SearchState state, const SearchOptions& options) {
  if (state.order != g.order()) throw Error(ErrorCode::DimensionMismatch, "checkpoint belongs to another graph");
  for (const auto& c : state.cursors)
    if (c.size() != state.target || c.back() >= g.order()) {
      throw Error(ErrorCode::InvalidArgument, "malformed checkpoint cursor");
    }
  return run_search(g, std::move(state), options);
}

}  // namespace steiner::eigen
