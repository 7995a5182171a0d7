#pragma once

// Points, lines, hyperplanes and planes of PG(n,q) and AG(n,q).
//
// Every object has a unique canonical representative, so identity is plain
// value equality and all enumerations are sorted by that representative:
//   projective point  normalised vector, first nonzero coordinate 1
//   projective line   2 x (n+1) RREF basis
//   affine line       (normalised direction, lexicographically smallest point)
//   affine plane      (2 x n RREF direction basis, smallest point)

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "steiner/gf.hpp"
#include "steiner/linalg.hpp"

namespace steiner::geometry {

using gf::FieldElem;
using gf::FieldPtr;
using linalg::MatGF;
using linalg::Vec;

inline constexpr std::uint64_t kDefaultEnumerationLimit = 4'000'000;

struct ProjSpace {
  int n = 0;  // projective dimension; vectors have n + 1 coordinates
  FieldPtr field;

  std::size_t vector_length() const { return static_cast<std::size_t>(n) + 1; }
  std::uint32_t q() const { return field->q(); }
  bool operator==(const ProjSpace& o) const { return n == o.n && field->spec() == o.field->spec(); }
};

struct AffSpace {
  int n = 0;
  FieldPtr field;

  std::size_t vector_length() const { return static_cast<std::size_t>(n); }
  std::uint32_t q() const { return field->q(); }
  bool operator==(const AffSpace& o) const { return n == o.n && field->spec() == o.field->spec(); }
};

ProjSpace make_proj_space(int n, FieldPtr field);
AffSpace make_aff_space(int n, FieldPtr field);

struct ProjPoint {
  Vec coords;
  auto operator<=>(const ProjPoint&) const = default;
};

struct ProjLine {
  MatGF basis;
  bool operator==(const ProjLine& o) const { return basis == o.basis; }
  std::strong_ordering operator<=>(const ProjLine& o) const { return basis <=> o.basis; }
};

struct Hyperplane {
  Vec normal;  // {x : normal . x = 0}, normalised first-nonzero-1
  auto operator<=>(const Hyperplane&) const = default;
};

struct AffPoint {
  Vec coords;
  auto operator<=>(const AffPoint&) const = default;
};

struct AffLine {
  Vec dir;
  Vec base;
  auto operator<=>(const AffLine&) const = default;
};

struct AffPlane {
  MatGF directions;  // 2 x n RREF
  Vec base;
  bool operator==(const AffPlane& o) const { return directions == o.directions && base == o.base; }
  std::strong_ordering operator<=>(const AffPlane& o) const {
    if (auto c = directions <=> o.directions; c != 0) return c;
    return base <=> o.base;
  }
};

/// Big-endian base-q integer of a coordinate vector; agrees with the
/// lexicographic order of vectors.
std::uint64_t encode(std::uint32_t q, std::span<const FieldElem> v);
Vec decode(std::uint32_t q, std::size_t length, std::uint64_t code);

// Vector helpers over a field.
Vec vec_add(const gf::Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b);
Vec vec_sub(const gf::Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b);
Vec vec_scale(const gf::Field& f, FieldElem c, std::span<const FieldElem> a);
FieldElem dot(const gf::Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b);
bool is_zero(std::span<const FieldElem> v);

/// Scales so that the first nonzero coordinate is 1. Throws on the zero vector.
Vec normalize(const gf::Field& f, std::span<const FieldElem> v);

ProjPoint make_point(const ProjSpace& s, std::span<const FieldElem> coords);
ProjLine make_line(const ProjSpace& s, const MatGF& spanning_rows);
Hyperplane make_hyperplane(const ProjSpace& s, std::span<const FieldElem> normal);
AffLine make_line(const AffSpace& s, std::span<const FieldElem> dir, std::span<const FieldElem> point);

std::vector<ProjPoint> enumerate_points(const ProjSpace& s,
                                        std::uint64_t limit = kDefaultEnumerationLimit);
std::vector<ProjLine> enumerate_lines(const ProjSpace& s,
                                      std::uint64_t limit = kDefaultEnumerationLimit);
std::vector<Hyperplane> enumerate_hyperplanes(const ProjSpace& s,
                                              std::uint64_t limit = kDefaultEnumerationLimit);
std::vector<AffPoint> enumerate_points(const AffSpace& s,
                                       std::uint64_t limit = kDefaultEnumerationLimit);
std::vector<AffLine> enumerate_lines(const AffSpace& s,
                                     std::uint64_t limit = kDefaultEnumerationLimit);

std::uint64_t count_points(const ProjSpace& s);
std::uint64_t count_lines(const ProjSpace& s);
std::uint64_t count_points(const AffSpace& s);
std::uint64_t count_lines(const AffSpace& s);

ProjLine line_through(const ProjSpace& s, const ProjPoint& a, const ProjPoint& b);
AffLine line_through(const AffSpace& s, const AffPoint& a, const AffPoint& b);

/// Points of a line, sorted.
std::vector<ProjPoint> points_on(const ProjSpace& s, const ProjLine& line);
std::vector<AffPoint> points_on(const AffSpace& s, const AffLine& line);

bool contains(const ProjSpace& s, const ProjLine& line, const ProjPoint& p);
bool contains(const AffSpace& s, const AffLine& line, const AffPoint& p);
bool contains(const ProjSpace& s, const Hyperplane& h, const ProjPoint& p);
bool contains(const ProjSpace& s, const Hyperplane& h, const ProjLine& line);

enum class RelationKind { Equal, Meet, Parallel, Skew };

struct Relation {
  RelationKind kind = RelationKind::Skew;
  std::optional<Vec> point;  // set for Meet
};

Relation relation(const ProjSpace& s, const ProjLine& a, const ProjLine& b);
Relation relation(const AffSpace& s, const AffLine& a, const AffLine& b);

struct ProjFlat {
  MatGF basis;  // RREF; projective dimension rows - 1
  int dimension() const { return static_cast<int>(basis.rows()) - 1; }
};

struct AffFlat {
  Vec base;          // smallest point of the flat
  MatGF directions;  // RREF basis of the direction space
  int dimension() const { return static_cast<int>(directions.rows()); }
};

ProjFlat span_of_lines(const ProjSpace& s, std::span<const ProjLine> lines);
AffFlat span_of_lines(const AffSpace& s, std::span<const AffLine> lines);
bool contains(const AffSpace& s, const AffFlat& flat, const AffLine& line);

/// The embedding x -> (1 : x) and its induced maps.
ProjPoint closure_point(const AffSpace& a, const AffPoint& p);
ProjLine closure_line(const AffSpace& a, const AffLine& l);
/// The point (0 : dir) where the closure of l meets the hyperplane at infinity.
ProjPoint infinite_point(const AffSpace& a, const AffLine& l);
Hyperplane hyperplane_at_infinity(const ProjSpace& s);

struct ProjectiveClosure {
  ProjSpace pspace;
  Hyperplane at_infinity;
  std::vector<ProjPoint> point_map;  // indexed like enumerate_points(aspace)
  std::vector<ProjLine> line_map;    // indexed like enumerate_lines(aspace)
};

ProjectiveClosure projective_closure(const AffSpace& a);

/// Coordinates in which a chosen hyperplane H becomes {y_0 = 0}:
/// y_0 = normal . x and y_1..y_n are the remaining coordinates of x after
/// dropping the leading position of the normal. Affine coordinates are
/// (y_1..y_n) / y_0. For H = {x_0 = 0} this is exactly the inverse of the
/// projective closure.
class AffineChart {
 public:
  AffineChart(ProjSpace pspace, Hyperplane h);

  const ProjSpace& pspace() const { return pspace_; }
  const AffSpace& aspace() const { return aspace_; }
  const Hyperplane& hyperplane() const { return h_; }

  std::optional<AffPoint> to_affine(const ProjPoint& p) const;
  /// Throws LineInsideHyperplane when the line lies in H.
  AffLine to_affine(const ProjLine& l) const;
  ProjPoint to_projective(const AffPoint& p) const;
  ProjLine to_projective(const AffLine& l) const;

 private:
  Vec to_chart(std::span<const FieldElem> x) const;
  Vec from_chart(std::span<const FieldElem> y) const;

  ProjSpace pspace_;
  Hyperplane h_;
  AffSpace aspace_;
  std::size_t pivot_ = 0;
};

struct AffineRestriction {
  AffineChart chart;
  std::vector<std::optional<AffLine>> line_map;  // indexed like enumerate_lines(pspace)
};

AffineRestriction affine_restriction(const ProjSpace& s, const Hyperplane& h);

std::vector<AffPlane> enumerate_planes(const AffSpace& s,
                                       std::uint64_t limit = kDefaultEnumerationLimit);

struct ParallelClass {
  Vec dir;
  std::vector<AffLine> lines;  // sorted
};

/// The q + 1 classes of q parallel lines of a plane, ordered by direction.
std::vector<ParallelClass> parallel_classes(const AffSpace& s, const AffPlane& plane);
bool contains(const AffSpace& s, const AffPlane& plane, const AffLine& line);

}  // namespace steiner::geometry
