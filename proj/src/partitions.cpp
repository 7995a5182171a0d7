#include "steiner/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace steiner::partitions {

namespace {

Bitset to_bitset(std::uint32_t v, const std::vector<std::uint32_t>& xs) {
  Bitset b(v);
  for (auto x : xs) b.set(x);
  return b;
}

}  // namespace

Partition2 make_partition(std::uint32_t order, std::vector<std::uint32_t> V1) {
  std::sort(V1.begin(), V1.end());
  V1.erase(std::unique(V1.begin(), V1.end()), V1.end());
  if (!V1.empty() && V1.back() >= order) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
  if (V1.empty() || V1.size() == order) throw Error(ErrorCode::InvalidArgument, "both parts must be nonempty");
  Partition2 p;
  p.V1 = std::move(V1);
  std::size_t j = 0;
  for (std::uint32_t u = 0; u < order; ++u) {
    if (j < p.V1.size() && p.V1[j] == u) {
      ++j;
    } else {
      p.V2.push_back(u);
    }
  }
  return p;
}

QuotientMatrix quotient_matrix(const BlockGraph& g, const Partition2& p) {
  if (p.V1.empty() || p.V2.empty() || p.V1.size() + p.V2.size() != g.order()) {
    throw Error(ErrorCode::InvalidArgument, "not a partition of the vertex set");
  }
  const Bitset b1 = to_bitset(g.order(), p.V1);
  if (b1.count() != p.V1.size() || to_bitset(g.order(), p.V2).count_and(b1) != 0) {
    throw Error(ErrorCode::InvalidArgument, "parts overlap");
  }
  QuotientMatrix Q;
  const std::vector<std::uint32_t>* parts[2] = {&p.V1, &p.V2};
  std::int64_t* into_v1[2] = {&Q.p11, &Q.p21};
  for (int i = 0; i < 2; ++i) {
    const auto& part = *parts[i];
    const std::uint32_t first = part[0];
    const auto c0 = static_cast<std::int64_t>(g.neighbours(first).count_and(b1));
    for (auto u : part) {
      const auto c = static_cast<std::int64_t>(g.neighbours(u).count_and(b1));
      if (c != c0) {
        throw NotEquitable(EquitableWitness{first, u, i + 1, c0, c},
                           "vertices " + std::to_string(first) + " and " + std::to_string(u) +
                               " have different numbers of neighbours in V1");
      }
      // Regularity is needed for the second column to be constant as well.
      if (g.degree(u) != g.degree(first)) throw Error(ErrorCode::InvalidArgument, "graph is not regular");
    }
    *into_v1[i] = c0;
  }
  const auto k = static_cast<std::int64_t>(g.degree(p.V1[0]));
  Q.p12 = k - Q.p11;
  Q.p22 = k - Q.p21;
  return Q;
}

PartitionEigenvalue partition_eigenvalue(const QuotientMatrix& Q) {
  if (Q.p11 + Q.p12 != Q.p21 + Q.p22) throw Error(ErrorCode::Inconsistent, "row sums differ");
  const std::int64_t theta = Q.p11 - Q.p21;
  if (theta != Q.p22 - Q.p12) throw Error(ErrorCode::Inconsistent, "p11 - p21 differs from p22 - p12");
  return {theta, Q.p12 == 0 && Q.p21 == 0};
}

Eigenfunction partition_to_eigenfunction(const BlockGraph& g, const Partition2& p) {
  const QuotientMatrix Q = quotient_matrix(g, p);
  const auto ev = partition_eigenvalue(Q);
  if (ev.principal) throw Error(ErrorCode::InvalidArgument, "principal partition has no second eigenvector");
  const std::int64_t d = std::gcd(Q.p12, Q.p21);
  const std::int64_t x1 = Q.p12 / d, x2 = -Q.p21 / d;
  Eigenfunction f;
  f.theta = ev.theta;
  for (auto u : p.V1) f.values[u] = x1;
  for (auto u : p.V2) f.values[u] = x2;
  return f;
}

PartitionWithQuotient eigenfunction_to_partition(const BlockGraph& g, const Eigenfunction& f) {
  std::set<eigen::Rational> distinct;
  for (std::uint32_t u = 0; u < g.order(); ++u) distinct.insert(f.value(u));
  if (distinct.size() != 2) throw Error(ErrorCode::NotTwoValued, "function takes " + std::to_string(distinct.size()) + " values");
  const eigen::Rational hi = *distinct.rbegin();
  std::vector<std::uint32_t> V1;
  for (std::uint32_t u = 0; u < g.order(); ++u)
    if (f.value(u) == hi) V1.push_back(u);
  PartitionWithQuotient out{make_partition(g.order(), V1), {}};
  out.quotient = quotient_matrix(g, out.partition);
  return out;
}

BalanceReport balance_check(const BlockGraph& g, const Eigenfunction& f1, const std::vector<Eigenfunction>& decomposition,
                            const Partition2& p, std::int64_t theta) {
  std::int64_t plus = 0, minus = 0;
  for (const auto& [u, x] : f1.values) {
    if (x == 1) {
      ++plus;
    } else if (x == -1) {
      ++minus;
    } else {
      throw Error(ErrorCode::NotSignFunction, "value " + x.str() + " at vertex " + std::to_string(u));
    }
  }
  if (plus != minus || plus == 0) throw Error(ErrorCode::NotSignFunction, "positive and negative supports differ in size");
  if (decomposition.empty()) throw Error(ErrorCode::BadDecomposition, "empty decomposition");

  const auto params = designs::srg_params_brute(g);
  std::map<std::uint32_t, eigen::Rational> sum;
  for (const auto& fi : decomposition) {
    if (fi.theta == params.k || fi.theta == theta) {
      throw Error(ErrorCode::EigenvalueClash, "summand has eigenvalue " + std::to_string(fi.theta));
    }
    if (!eigen::verify_eigenfunction(g, fi).ok) throw Error(ErrorCode::BadDecomposition, "summand is not an eigenfunction");
    for (const auto& [u, x] : fi.values) sum[u] += x;
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
  if (sum != f1.values) throw Error(ErrorCode::BadDecomposition, "summands do not add up to f1");

  const auto ev = partition_eigenvalue(quotient_matrix(g, p));
  if (ev.theta != theta) {
    throw Error(ErrorCode::Inconsistent, "partition eigenvalue " + std::to_string(ev.theta) + " differs from " +
                                             std::to_string(theta));
  }
  BalanceReport r;
  for (auto u : p.V1) {
    const auto x = f1.value(u);
    if (x > 0) ++r.m_plus;
    if (x < 0) ++r.m_minus;
  }
  r.equal = r.m_plus == r.m_minus;
  return r;
}

CameronLieblerVerdict cameron_liebler_check(const designs::ProjectiveSystem& sys,
                                            const std::vector<reguli::RegulusIndexPair>& reguli,
                                            const std::vector<std::uint32_t>& L) {
  if (sys.space.n != 3) throw Error(ErrorCode::InvalidArgument, "line classes are tested in PG(3,q)");
  if (sys.space.q() > 4) throw Error(ErrorCode::LimitExceeded, "supported for q <= 4");
  const auto& g = sys.graph;
  const Bitset in_l = to_bitset(g.order(), L);
  CameronLieblerVerdict v;

  v.method_a = true;
  for (std::size_t i = 0; i < reguli.size() && v.method_a; ++i) {
    std::int64_t a = 0, b = 0;
    for (auto x : reguli[i].R) a += in_l.test(x);
    for (auto x : reguli[i].R_opp) b += in_l.test(x);
    if (a != b) {
      v.method_a = false;
      v.a_witness = ReguliWitness{i, a, b};
    }
  }

  const auto params = designs::srg_params_brute(g);
  v.b_theta = params.r;
  const std::size_t size = in_l.count();
  if (size == 0 || size == g.order()) {
    // The trivial classes: no partition, every regulus meets L equally.
    v.method_b = true;
    return v;
  }
  try {
    const Partition2 p = make_partition(g.order(), L);
    const QuotientMatrix Q = quotient_matrix(g, p);
    v.quotient = Q;
    v.method_b = partition_eigenvalue(Q).theta == params.r;
  } catch (const NotEquitable& e) {
    v.method_b = false;
    v.b_witness = e.witness();
  }
  return v;
}

std::vector<std::uint32_t> star(const designs::ProjectiveSystem& sys, std::uint32_t point) {
  if (point >= sys.points.size()) throw Error(ErrorCode::DimensionMismatch, "point out of range");
  return sys.design.point_blocks[point];
}

std::vector<std::uint32_t> plane_lines(const designs::ProjectiveSystem& sys, const geometry::Hyperplane& h) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < sys.lines.size(); ++i)
    if (geometry::contains(sys.space, h, sys.lines[i])) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> parallel_class_lines(const designs::AffineSystem& sys, const linalg::Vec& dir) {
  const linalg::Vec d = geometry::normalize(*sys.space.field, dir);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < sys.lines.size(); ++i)
    if (sys.lines[i].dir == d) out.push_back(i);
  return out;
}

}  // namespace steiner::partitions
