#pragma once

// Eigenfunctions of block graphs: exact verification, constructions of
// optimal eigenfunctions from reguli and parallel classes, induced K_{a,a}
// enumeration, and the minimum-support search.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "steiner/designs.hpp"
#include "steiner/reguli.hpp"

namespace steiner::eigen {

using Rational = boost::multiprecision::cpp_rational;
using linalg::BigInt;

struct Eigenfunction {
  std::int64_t theta = 0;
  std::map<std::uint32_t, Rational> values;  // nonzero entries only

  std::vector<std::uint32_t> support() const;
  Rational value(std::uint32_t u) const;
  std::size_t support_size() const { return values.size(); }

  /// Scales to a primitive integer vector whose first nonzero value is positive.
  void normalize();
  Eigenfunction negated() const;

  bool operator==(const Eigenfunction&) const = default;
};

/// Builds a function from (vertex, value) pairs, dropping zeros.
Eigenfunction make_function(std::int64_t theta, const std::vector<std::pair<std::uint32_t, Rational>>& values);

struct VerifyWitness {
  std::uint32_t u = 0;
  Rational lhs;  // theta * f(u)
  Rational rhs;  // sum of f over the neighbours of u
};

struct VerifyResult {
  bool ok = true;
  std::optional<VerifyWitness> witness;
};

/// Checks theta f(u) = sum_{w ~ u} f(w) at every vertex. Throws ZeroFunction.
VerifyResult verify_eigenfunction(const designs::BlockGraph& g, const Eigenfunction& f);

/// +1 on T0, -1 on T1; throws NotAnEigenfunction when verification fails.
Eigenfunction from_bipartite_pair(const designs::BlockGraph& g, const std::vector<std::uint32_t>& T0,
                                  const std::vector<std::uint32_t>& T1, std::int64_t theta);

/// +1 on R, -1 on R_opp as a -(q+1)-eigenfunction of the Grassmann graph.
Eigenfunction optimal_from_regulus(const designs::ProjectiveSystem& sys, const reguli::RegulusPair& rp);

/// +1 on class1, -1 on class2 as a -q-eigenfunction of X_q(n,1).
Eigenfunction optimal_from_parallel_classes(const designs::AffineSystem& sys, const geometry::AffPlane& plane,
                                            const geometry::ParallelClass& class1,
                                            const geometry::ParallelClass& class2);

/// +1 on S, -1 on S_opp as a -q-eigenfunction of X_q(n,1).
Eigenfunction optimal_from_affine_regulus(const designs::AffineSystem& sys, const reguli::AffineRegulusPair& ap);

/// +1 on R', -1 on (R_opp)' in the affine space PG(n,q) minus H, identified
/// with sys through the chart of H. Throws HyperplaneHitsLine when H
/// contains a line of R or R_opp.
Eigenfunction wdbplus2_function(const designs::AffineSystem& sys, const reguli::RegulusPair& rp,
                                const geometry::Hyperplane& h);

struct SupportStructure {
  enum class Kind { CompleteBipartite, IsolatedCliquePair, BipartiteMinusMatching, Other } kind = Kind::Other;
  std::vector<std::uint32_t> T0;  // positive values
  std::vector<std::uint32_t> T1;  // negative values
};

std::string_view to_string(SupportStructure::Kind k);

SupportStructure support_structure(const designs::BlockGraph& g, const Eigenfunction& f);

struct BipartitePair {
  std::vector<std::uint32_t> T0;  // contains the smallest vertex of the pair
  std::vector<std::uint32_t> T1;
  auto operator<=>(const BipartitePair&) const = default;
};

inline constexpr std::uint32_t kDefaultVertexLimit = 4096;

/// Every induced K_{a,a}, once per unordered part pair, sorted.
std::vector<BipartitePair> enumerate_complete_bipartite(const designs::BlockGraph& g, std::uint32_t a,
                                                        std::uint32_t vertex_limit = kDefaultVertexLimit);

struct Type1 {
  geometry::AffPlane plane;
  geometry::ParallelClass positive;
  geometry::ParallelClass negative;
};

struct Type2 {
  reguli::AffineRegulusPair pair;  // S positive, S_opp negative
};

struct GrassmannRegulus {
  reguli::RegulusPair pair;  // R positive, R_opp negative
};

using OptimalClass = std::variant<Type1, Type2, GrassmannRegulus>;

/// Decodes an optimal eigenfunction back to geometry. Throws NotOptimal.
OptimalClass classify_optimal(const designs::ProjectiveSystem& sys, const Eigenfunction& f);
OptimalClass classify_optimal(const designs::AffineSystem& sys, const Eigenfunction& f);

struct WdbPlus2Census {
  std::size_t pairs = 0;               // (regulus pair, avoiding hyperplane)
  std::size_t distinct_functions = 0;  // up to sign
  std::size_t max_multiplicity = 0;    // largest number of pairs giving one function
  std::vector<Eigenfunction> functions;  // normalised, sorted
};

/// Applies wdbplus2_function to every ordered regulus pair of PG(3,q) and every
/// hyperplane avoiding its lines, reporting collisions.
WdbPlus2Census wdbplus2_census(const designs::ProjectiveSystem& psys, const designs::AffineSystem& asys);

enum class SearchMode { Exhaustive, BranchAndPrune };

struct SearchOptions {
  SearchMode mode = SearchMode::BranchAndPrune;
  unsigned jobs = 1;
  std::uint64_t max_candidates = 0;  // 0: unlimited
  std::function<void(std::uint64_t)> progress;  // examined count, called from workers
};

/// Supports whose kernel has dimension >= 2 contain a whole family of
/// eigenfunctions; they are reported with a basis and one full-support member.
struct SupportFamily {
  std::vector<std::uint32_t> support;
  std::vector<std::vector<BigInt>> basis;
  Eigenfunction representative;
  bool operator==(const SupportFamily&) const = default;
};

struct SearchState {
  std::int64_t theta = 0;
  std::uint32_t target = 0;
  std::uint32_t order = 0;
  // Next unexamined support of every unfinished first-vertex shard.
  std::vector<std::vector<std::uint32_t>> cursors;
  std::vector<Eigenfunction> functions;
  std::vector<SupportFamily> families;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t rank_filtered = 0;
};

struct SearchResult {
  bool complete = false;
  SearchState state;  // functions/families sorted; cursors empty when complete
};

/// All eigenfunctions with support exactly target, one per line through the
/// origin (normalised, so f and -f give one entry). Throws NotAnEigenvalue
/// for the principal eigenvalue or a non-eigenvalue.
SearchResult search_min_support(const designs::BlockGraph& g, std::int64_t theta, std::uint32_t target,
                                const SearchOptions& options = {});

/// Continues from a state returned with complete == false.
SearchResult resume_min_support(const designs::BlockGraph& g, SearchState state, const SearchOptions& options = {});

/// Exact inner product of two functions.
Rational inner_product(const Eigenfunction& a, const Eigenfunction& b);

}  // namespace steiner::eigen
