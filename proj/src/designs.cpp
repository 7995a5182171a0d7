#include "steiner/designs.hpp"

#include <algorithm>
#include <string>

namespace steiner::designs {

namespace {

std::int64_t isqrt_exact(std::int64_t x, bool& exact) {
  if (x < 0) {
    exact = false;
    return 0;
  }
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  exact = r * r == x;
  return r;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
  if (b == 0 || a % b != 0) throw Error(ErrorCode::NonIntegral, std::string(what) + " is not an integer");
  return a / b;
}

template <typename T>
std::uint32_t find_index(const std::vector<T>& sorted, const T& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || !(*it == x)) throw Error(ErrorCode::InvalidArgument, "object not in the space");
  return static_cast<std::uint32_t>(it - sorted.begin());
}

template <typename T>
std::optional<std::uint32_t> lookup(const std::vector<T>& sorted, const T& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::uint32_t>(it - sorted.begin());
}

}  // namespace

std::uint32_t Design::block_of(std::uint32_t a, std::uint32_t b) const {
  const std::int32_t idx = pair_index[std::size_t{a} * N + b];
  if (idx < 0) throw Error(ErrorCode::EqualPoints, "no block for a repeated point");
  return static_cast<std::uint32_t>(idx);
}

Design make_design(std::uint32_t N, std::vector<std::vector<std::uint32_t>> blocks) {
  Design d;
  d.N = N;
  d.M = blocks.empty() ? 0 : static_cast<std::uint32_t>(blocks.front().size());
  d.point_blocks.assign(N, {});
  d.pair_index.assign(std::size_t{N} * N, -1);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    auto& blk = blocks[b];
    std::sort(blk.begin(), blk.end());
    if (blk.size() != d.M) throw Error(ErrorCode::InvalidArgument, "blocks of unequal size");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      d.point_blocks[blk[i]].push_back(b);
      for (std::size_t j = 0; j < blk.size(); ++j) {
        if (i == j) continue;
        auto& slot = d.pair_index[std::size_t{blk[i]} * N + blk[j]];
        if (slot >= 0) throw Error(ErrorCode::InvalidArgument, "point pair lies in two blocks");
        slot = static_cast<std::int32_t>(b);
      }
    }
  }
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (a != b && d.pair_index[std::size_t{a} * N + b] < 0) {
        throw Error(ErrorCode::InvalidArgument, "point pair lies in no block");
      }
  d.blocks = std::move(blocks);
  return d;
}

BlockGraph BlockGraph::from_design(const Design& d) {
  const std::size_t v = d.blocks.size();
  std::vector<Bitset> rows(v, Bitset(v));
  for (const auto& through : d.point_blocks)
    for (auto a : through)
      for (auto b : through)
        if (a != b) rows[a].set(b);
  return from_rows(std::move(rows));
}

BlockGraph BlockGraph::from_rows(std::vector<Bitset> rows) {
  BlockGraph g;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u].size() != rows.size() || rows[u].test(u)) {
      throw Error(ErrorCode::InvalidArgument, "adjacency must be square and irreflexive");
    }
  }
  for (std::size_t u = 0; u < rows.size(); ++u)
    rows[u].for_each([&](std::size_t w) {
      if (!rows[w].test(u)) throw Error(ErrorCode::InvalidArgument, "adjacency must be symmetric");
    });
  g.rows_ = std::move(rows);
  return g;
}

BlockGraph BlockGraph::from_edges(std::uint32_t v, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<Bitset> rows(v, Bitset(v));
  for (auto [a, b] : edges) {
    rows[a].set(b);
    rows[b].set(a);
  }
  return from_rows(std::move(rows));
}

std::uint64_t BlockGraph::checksum() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(rows_.size());
  for (const auto& r : rows_)
    for (auto w : r.words()) mix(w);
  return h;
}

BlockGraph block_graph(const Design& d) { return BlockGraph::from_design(d); }

BlockGraph complement(const BlockGraph& g) {
  const std::uint32_t v = g.order();
  std::vector<Bitset> rows(v, Bitset(v));
  for (std::uint32_t u = 0; u < v; ++u)
    for (std::uint32_t w = 0; w < v; ++w)
      if (u != w && !g.adjacent(u, w)) rows[u].set(w);
  return BlockGraph::from_rows(std::move(rows));
}

SrgParams srg_spectrum(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  SrgParams p{v, k, lambda, mu};
  bool exact = false;
  const std::int64_t disc = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
  p.delta = isqrt_exact(disc, exact);
  if (!exact || (lambda - mu + p.delta) % 2 != 0) {
    throw Error(ErrorCode::IrrationalEigenvalues,
                "discriminant " + std::to_string(disc) + " gives non-integral eigenvalues");
  }
  p.r = (lambda - mu + p.delta) / 2;
  p.s = (lambda - mu - p.delta) / 2;
  if (!(p.r > 0 && p.s < 0)) throw Error(ErrorCode::InvalidArgument, "not a primitive strongly regular graph");
  p.m_r = exact_div(-((v - 1) * p.s + k), p.r - p.s, "multiplicity of r");
  p.m_s = exact_div((v - 1) * p.r + k, p.r - p.s, "multiplicity of s");
  p.modified_matrix = {{{1, k, v - 1 - k}, {p.m_r, p.r, -1 - p.r}, {p.m_s, p.s, -1 - p.s}}};
  return p;
}

SrgParams srg_params_formula(std::int64_t N, std::int64_t M) {
  if (M < 2 || N <= M) throw Error(ErrorCode::InvalidArgument, "need 2 <= M < N");
  if (N == M * M - M + 1) throw Error(ErrorCode::SymmetricDesign, "2-(N,M,1) design is symmetric");
  const std::int64_t v = exact_div(N * (N - 1), M * (M - 1), "v");
  const std::int64_t k = exact_div(M * (N - M), M - 1, "k");
  const std::int64_t lambda = (M - 1) * (M - 1) + exact_div(N - 1, M - 1, "(N-1)/(M-1)") - 2;
  const std::int64_t mu = M * M;
  SrgParams p = srg_spectrum(v, k, lambda, mu);
  if (p.s != -M) throw Error(ErrorCode::Inconsistent, "smallest eigenvalue differs from -M");
  return p;
}

SrgParams srg_params_brute(const BlockGraph& g) {
  using Kind = SrgViolation::Kind;
  const std::uint32_t v = g.order();
  if (v < 2) throw NotStronglyRegular({Kind::Imprimitive, 0, 0, 0, 0}, "graph too small");
  const std::int64_t k = g.degree(0);
  for (std::uint32_t u = 1; u < v; ++u) {
    if (g.degree(u) != k) {
      throw NotStronglyRegular({Kind::Degree, 0, u, k, g.degree(u)},
                               "vertex " + std::to_string(u) + " has degree " + std::to_string(g.degree(u)) +
                                   ", vertex 0 has " + std::to_string(k));
    }
  }
  std::optional<std::int64_t> lambda, mu;
  for (std::uint32_t u = 0; u < v; ++u) {
    for (std::uint32_t w = u + 1; w < v; ++w) {
      const std::int64_t c = g.common_neighbours(u, w);
      auto& slot = g.adjacent(u, w) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        const Kind kind = g.adjacent(u, w) ? Kind::Lambda : Kind::Mu;
        throw NotStronglyRegular({kind, u, w, *slot, c},
                                 "pair (" + std::to_string(u) + "," + std::to_string(w) + ") has " +
                                     std::to_string(c) + " common neighbours, expected " + std::to_string(*slot));
      }
    }
  }
  if (!lambda || !mu || *mu == 0) {
    throw NotStronglyRegular({Kind::Imprimitive, 0, 0, 0, 0}, "graph is complete, empty or disconnected");
  }
  return srg_spectrum(v, k, *lambda, *mu);
}

std::int64_t wdb_closed_form(const SrgParams& p, std::int64_t theta) {
  if (theta == p.s) return -2 * p.s;
  if (theta == p.r) return 2 * (p.r + 1);
  throw Error(ErrorCode::NotAnEigenvalue, std::to_string(theta) + " is not a non-principal eigenvalue");
}

std::int64_t wdb(const SrgParams& p, std::int64_t theta) {
  if (theta != p.r && theta != p.s) {
    throw Error(ErrorCode::NotAnEigenvalue, std::to_string(theta) + " is not a non-principal eigenvalue");
  }
  const std::int64_t num = (theta - p.lambda) * theta - p.k;
  if (num % p.mu != 0) throw Error(ErrorCode::Inconsistent, "weight-distribution term is not integral");
  const std::int64_t bound = 1 + std::abs(theta) + std::abs(num / p.mu);
  if (bound != wdb_closed_form(p, theta)) {
    throw Error(ErrorCode::Inconsistent, "weight-distribution bound disagrees with its closed form");
  }
  return bound;
}

DelsarteReport delsarte_check(const BlockGraph& g, const Design& d) {
  const SrgParams p = srg_params_brute(g);
  DelsarteReport out;
  out.bound = 1 + exact_div(p.k, -p.s, "k/(-s)");
  out.pencils_meet_bound = true;
  for (const auto& pencil : d.point_blocks) {
    if (static_cast<std::int64_t>(pencil.size()) != out.bound) out.pencils_meet_bound = false;
    for (auto a : pencil)
      for (auto b : pencil)
        if (a != b && !g.adjacent(a, b)) out.pencils_meet_bound = false;
  }
  return out;
}

std::optional<std::uint32_t> ProjectiveSystem::point_index(const geometry::ProjPoint& p) const {
  return lookup(points, p);
}
std::optional<std::uint32_t> ProjectiveSystem::line_index(const geometry::ProjLine& l) const {
  return lookup(lines, l);
}
std::uint32_t ProjectiveSystem::require_line(const geometry::ProjLine& l) const { return find_index(lines, l); }

std::optional<std::uint32_t> AffineSystem::point_index(const geometry::AffPoint& p) const {
  return lookup(points, p);
}
std::optional<std::uint32_t> AffineSystem::line_index(const geometry::AffLine& l) const {
  return lookup(lines, l);
}
std::uint32_t AffineSystem::require_line(const geometry::AffLine& l) const { return find_index(lines, l); }

ProjectiveSystem projective_system(int n, gf::FieldPtr field, std::uint64_t limit) {
  ProjectiveSystem sys;
  sys.space = geometry::make_proj_space(n, std::move(field));
  sys.points = geometry::enumerate_points(sys.space, limit);
  sys.lines = geometry::enumerate_lines(sys.space, limit);
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(sys.lines.size());
  for (const auto& l : sys.lines) {
    std::vector<std::uint32_t> blk;
    for (const auto& p : geometry::points_on(sys.space, l)) blk.push_back(find_index(sys.points, p));
    blocks.push_back(std::move(blk));
  }
  sys.design = make_design(static_cast<std::uint32_t>(sys.points.size()), std::move(blocks));
  sys.graph = block_graph(sys.design);
  return sys;
}

AffineSystem affine_system(int n, gf::FieldPtr field, std::uint64_t limit) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "affine designs are used for n >= 3");
  AffineSystem sys;
  sys.space = geometry::make_aff_space(n, std::move(field));
  sys.points = geometry::enumerate_points(sys.space, limit);
  sys.lines = geometry::enumerate_lines(sys.space, limit);
  const std::uint32_t q = sys.space.q();
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(sys.lines.size());
  for (const auto& l : sys.lines) {
    std::vector<std::uint32_t> blk;
    // Affine points are all vectors in lexicographic order, so the index is the encoding.
    for (const auto& p : geometry::points_on(sys.space, l)) {
      blk.push_back(static_cast<std::uint32_t>(geometry::encode(q, p.coords)));
    }
    blocks.push_back(std::move(blk));
  }
  sys.design = make_design(static_cast<std::uint32_t>(sys.points.size()), std::move(blocks));
  sys.graph = block_graph(sys.design);
  return sys;
}

Design projective_design(int n, gf::FieldPtr field) { return projective_system(n, std::move(field)).design; }
Design affine_design(int n, gf::FieldPtr field) { return affine_system(n, std::move(field)).design; }

}  // namespace steiner::designs
