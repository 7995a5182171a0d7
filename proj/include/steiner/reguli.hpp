#pragma once

// Transversals and reguli in projective and affine spaces.
//
// Affine reguli are ORDERED pairs (S, S_opp). For q = 2 a skew pair of affine
// lines has two distinct opposite families, so the ordered-pair count is the
// one that equals q^4 (q^3 - 1)(q + 1).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steiner/designs.hpp"
#include "steiner/geometry.hpp"

namespace steiner::reguli {

using geometry::AffLine;
using geometry::AffSpace;
using geometry::Hyperplane;
using geometry::ProjLine;
using geometry::ProjPoint;
using geometry::ProjSpace;

struct RegulusPair {
  ProjSpace ambient;
  std::vector<ProjLine> R;      // sorted, q + 1 lines
  std::vector<ProjLine> R_opp;  // sorted, q + 1 lines

  bool operator==(const RegulusPair& o) const { return R == o.R && R_opp == o.R_opp; }
};

struct AffineRegulusPair {
  AffSpace ambient;
  std::vector<AffLine> S;      // sorted, q lines
  std::vector<AffLine> S_opp;  // sorted, q lines

  bool operator==(const AffineRegulusPair& o) const { return S == o.S && S_opp == o.S_opp; }
};

/// The transversal of two skew lines through a point off both, if any.
std::optional<ProjLine> transversal_through(const ProjSpace& s, const ProjLine& l1, const ProjLine& l2,
                                            const ProjPoint& t);

/// All lines meeting every input line in exactly one point, sorted.
std::vector<ProjLine> common_transversals(const ProjSpace& s, const std::vector<ProjLine>& lines);
std::vector<AffLine> common_transversals(const AffSpace& s, const std::vector<AffLine>& lines);

/// The unique regulus through three pairwise skew lines of a common 3-flat,
/// with its opposite. Axioms are re-verified before returning.
RegulusPair regulus_through(const ProjSpace& s, const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);

/// First violated regulus-pair invariant, or nullopt.
std::optional<std::string> regulus_pair_violation(const RegulusPair& rp);

/// Every regulus of PG(3,q), q <= 4, each paired with its opposite. Since the
/// opposite is itself a regulus, both orientations of every pair appear.
std::vector<RegulusPair> enumerate_reguli(const designs::ProjectiveSystem& sys);

/// Index form of the same enumeration: R as sorted line indices.
std::vector<std::vector<std::uint32_t>> enumerate_reguli_indices(const designs::ProjectiveSystem& sys);

struct RegulusIndexPair {
  std::vector<std::uint32_t> R;
  std::vector<std::uint32_t> R_opp;
};

/// Index pairs in the order of enumerate_reguli.
std::vector<RegulusIndexPair> enumerate_regulus_index_pairs(const designs::ProjectiveSystem& sys);

/// S_1 = { <c v3 + v1> + c v2 }, S_2 = { <c v3 + v2> + c v1 }, verified.
AffineRegulusPair affine_regulus_construct(const AffSpace& s, const linalg::Vec& v1, const linalg::Vec& v2,
                                           const linalg::Vec& v3);

/// First violated affine-regulus-pair invariant (including the projective
/// lift), or nullopt.
std::optional<std::string> affine_pair_violation(const AffineRegulusPair& ap);

/// True when a pairwise skew family satisfies both regulus axioms with respect
/// to all of its transversals.
bool satisfies_regulus_axioms(const AffSpace& s, const std::vector<AffLine>& family);

/// Closure of S and S_opp, completed by the line at infinity through the
/// infinite points of the other family.
RegulusPair projective_lift(const AffineRegulusPair& ap);

struct SkewClassification {
  enum class Case { Case1, Case2 } kind = Case::Case2;
  std::vector<AffineRegulusPair> extensions;  // Case1 only; two at q = 2 with two lines
};

SkewClassification classify_skew_family(const AffSpace& s, const std::vector<AffLine>& lines);

struct AffineRegulusCensus {
  std::vector<AffineRegulusPair> ordered_pairs;
  std::size_t ordered_count = 0;
  std::size_t unordered_set_count = 0;  // distinct families S
  std::size_t quadric_count = 0;        // distinct unordered {S, S_opp}
};

/// All ordered affine-regulus pairs of AG(3,q), q <= 4, found directly in the
/// affine space; every pair is checked against all invariants.
AffineRegulusCensus enumerate_affine_reguli(const designs::AffineSystem& sys);

struct WdbPlus2Config {
  geometry::AffineChart chart;
  std::vector<AffLine> R_prime;      // q + 1 affine lines
  std::vector<AffLine> R_opp_prime;  // q + 1 affine lines
};

struct NotRestrictable {
  std::string reason;
};

using RestrictionResult = std::variant<AffineRegulusPair, WdbPlus2Config, NotRestrictable>;

RestrictionResult regulus_restriction(const RegulusPair& rp, const Hyperplane& h);

}  // namespace steiner::reguli
