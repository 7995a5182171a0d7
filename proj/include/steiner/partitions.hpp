#pragma once

// Equitable 2-partitions of block graphs, their quotient matrices, the
// balance condition and Cameron-Liebler line classes.

#include <cstdint>
#include <optional>
#include <vector>

#include "steiner/designs.hpp"
#include "steiner/eigenfunctions.hpp"
#include "steiner/reguli.hpp"

namespace steiner::partitions {

using designs::BlockGraph;
using eigen::Eigenfunction;

struct Partition2 {
  std::vector<std::uint32_t> V1;  // sorted
  std::vector<std::uint32_t> V2;  // sorted
  bool operator==(const Partition2&) const = default;
};

/// (V1, complement of V1). Throws InvalidArgument when either part is empty.
Partition2 make_partition(std::uint32_t order, std::vector<std::uint32_t> V1);

struct QuotientMatrix {
  std::int64_t p11 = 0, p12 = 0, p21 = 0, p22 = 0;
  bool operator==(const QuotientMatrix&) const = default;
};

struct EquitableWitness {
  std::uint32_t u = 0, w = 0;  // two vertices of one part
  int part = 1;                // 1 or 2
  std::int64_t count_u = 0, count_w = 0;  // neighbours in part 1
};

class NotEquitable : public Error {
 public:
  NotEquitable(EquitableWitness w, const std::string& what) : Error(ErrorCode::NotEquitable, what), witness_(w) {}
  const EquitableWitness& witness() const { return witness_; }

 private:
  EquitableWitness witness_;
};

QuotientMatrix quotient_matrix(const BlockGraph& g, const Partition2& p);

struct PartitionEigenvalue {
  std::int64_t theta = 0;
  bool principal = false;  // theta equals the degree: no edges between the parts
};

PartitionEigenvalue partition_eigenvalue(const QuotientMatrix& Q);

/// Values (x1, x2) = (p12, -p21) / gcd on V1 / V2.
Eigenfunction partition_to_eigenfunction(const BlockGraph& g, const Partition2& p);

struct PartitionWithQuotient {
  Partition2 partition;  // V1 carries the larger value
  QuotientMatrix quotient;
};

/// Level sets of a function taking exactly two values (zero counts as a value).
PartitionWithQuotient eigenfunction_to_partition(const BlockGraph& g, const Eigenfunction& f);

struct BalanceReport {
  std::int64_t m_plus = 0;   // |Supp+(f1) & V1|
  std::int64_t m_minus = 0;  // |Supp-(f1) & V1|
  bool equal = false;
};

/// f1 must be a (1,-1,0)-valued function with equally large positive and
/// negative supports; decomposition must sum to f1, each summand a verified
/// eigenfunction with eigenvalue different from k and theta; p must be
/// theta-equitable.
BalanceReport balance_check(const BlockGraph& g, const Eigenfunction& f1, const std::vector<Eigenfunction>& decomposition,
                            const Partition2& p, std::int64_t theta);

struct ReguliWitness {
  std::size_t regulus = 0;  // index into the regulus list
  std::int64_t in_R = 0, in_R_opp = 0;
};

struct CameronLieblerVerdict {
  bool method_a = false;  // |L & R| = |L & R_opp| for every regulus
  std::optional<ReguliWitness> a_witness;
  bool method_b = false;  // (L, complement) equitable with eigenvalue r
  std::optional<QuotientMatrix> quotient;
  std::optional<EquitableWitness> b_witness;
  std::int64_t b_theta = 0;
  bool agree() const { return method_a == method_b; }
};

/// Both tests for a line set of PG(3,q); reguli from enumerate_regulus_index_pairs.
CameronLieblerVerdict cameron_liebler_check(const designs::ProjectiveSystem& sys,
                                            const std::vector<reguli::RegulusIndexPair>& reguli,
                                            const std::vector<std::uint32_t>& L);

// Named line sets.
/// Lines through a point.
std::vector<std::uint32_t> star(const designs::ProjectiveSystem& sys, std::uint32_t point);
/// Lines inside a hyperplane of PG(3,q).
std::vector<std::uint32_t> plane_lines(const designs::ProjectiveSystem& sys, const geometry::Hyperplane& h);
/// Lines of AG(n,q) with a given direction.
std::vector<std::uint32_t> parallel_class_lines(const designs::AffineSystem& sys, const linalg::Vec& dir);

}  // namespace steiner::partitions
