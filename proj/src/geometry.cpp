#include "steiner/geometry.hpp"

#include <algorithm>
#include <string>

#include "steiner/error.hpp"

namespace steiner::geometry {

namespace {

using gf::Field;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_limit(std::uint64_t count, std::uint64_t limit, const char* what) {
  if (count > limit) {
    throw Error(ErrorCode::LimitExceeded, std::string(what) + ": " + std::to_string(count) +
                                              " exceeds limit " + std::to_string(limit));
  }
}

// Calls fn for every assignment of field elements to `positions` inside v.
template <typename Fn>
void for_each_fill(Vec& v, const std::vector<std::size_t>& positions, std::uint32_t q, Fn&& fn) {
  for (auto p : positions) v[p] = FieldElem{0};
  while (true) {
    fn(v);
    std::size_t i = 0;
    for (; i < positions.size(); ++i) {
      auto& e = v[positions[i]];
      if (e.index + 1 < q) {
        ++e.index;
        break;
      }
      e.index = 0;
    }
    if (i == positions.size()) return;
  }
}

// All normalised nonzero vectors of the given length, sorted.
std::vector<Vec> normalized_vectors(std::uint32_t q, std::size_t length) {
  std::vector<Vec> out;
  for (std::size_t lead = 0; lead < length; ++lead) {
    Vec v(length, FieldElem{0});
    v[lead] = FieldElem{1};
    std::vector<std::size_t> free;
    for (std::size_t j = lead + 1; j < length; ++j) free.push_back(j);
    for_each_fill(v, free, q, [&](const Vec& x) { out.push_back(x); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All 2 x length RREF matrices of rank 2 as pairs of rows, sorted.
std::vector<MatGF> two_dim_rrefs(const FieldPtr& field, std::size_t length) {
  const std::uint32_t q = field->q();
  std::vector<MatGF> out;
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = i + 1; j < length; ++j) {
      Vec v(2 * length, FieldElem{0});
      v[i] = FieldElem{1};
      v[length + j] = FieldElem{1};
      std::vector<std::size_t> free;
      for (std::size_t c = i + 1; c < length; ++c)
        if (c != j) free.push_back(c);
      for (std::size_t c = j + 1; c < length; ++c) free.push_back(length + c);
      for_each_fill(v, free, q, [&](const Vec& x) {
        MatGF m(field, 0, length);
        m.append_row(std::span<const FieldElem>(x.data(), length));
        m.append_row(std::span<const FieldElem>(x.data() + length, length));
        out.push_back(std::move(m));
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vectors of the given length that vanish at every listed position, sorted.
std::vector<Vec> vectors_zero_at(std::uint32_t q, std::size_t length,
                                 const std::vector<std::size_t>& zeros) {
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < length; ++c)
    if (std::find(zeros.begin(), zeros.end(), c) == zeros.end()) free.push_back(c);
  std::vector<Vec> out;
  Vec v(length, FieldElem{0});
  for_each_fill(v, free, q, [&](const Vec& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t leading_position(std::span<const FieldElem> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].index != 0) return i;
  return v.size();
}

MatGF single_row(const FieldPtr& f, std::span<const FieldElem> v) {
  MatGF m(f, 0, v.size());
  m.append_row(v);
  return m;
}

}  // namespace

ProjSpace make_proj_space(int n, FieldPtr field) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "projective dimension must be at least 2");
  return ProjSpace{n, std::move(field)};
}

AffSpace make_aff_space(int n, FieldPtr field) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "affine dimension must be at least 2");
  return AffSpace{n, std::move(field)};
}

std::uint64_t encode(std::uint32_t q, std::span<const FieldElem> v) {
  std::uint64_t code = 0;
  for (auto e : v) code = code * q + e.index;
  return code;
}

Vec decode(std::uint32_t q, std::size_t length, std::uint64_t code) {
  Vec v(length);
  for (std::size_t i = length; i-- > 0;) {
    v[i] = FieldElem{static_cast<std::uint32_t>(code % q)};
    code /= q;
  }
  return v;
}

Vec vec_add(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, FieldElem c, std::span<const FieldElem> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

FieldElem dot(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b) {
  FieldElem s{0};
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

bool is_zero(std::span<const FieldElem> v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem e) { return e.index == 0; });
}

Vec normalize(const Field& f, std::span<const FieldElem> v) {
  const std::size_t lead = leading_position(v);
  if (lead == v.size()) throw Error(ErrorCode::InvalidArgument, "zero vector has no projective point");
  return vec_scale(f, f.inv(v[lead]), v);
}

ProjPoint make_point(const ProjSpace& s, std::span<const FieldElem> coords) {
  if (coords.size() != s.vector_length()) throw Error(ErrorCode::DimensionMismatch, "point of wrong length");
  return ProjPoint{normalize(*s.field, coords)};
}

ProjLine make_line(const ProjSpace& s, const MatGF& spanning_rows) {
  if (spanning_rows.cols() != s.vector_length()) throw Error(ErrorCode::DimensionMismatch, "line of wrong length");
  MatGF basis = linalg::row_basis(spanning_rows);
  if (basis.rows() != 2) throw Error(ErrorCode::InvalidArgument, "rows do not span a line");
  return ProjLine{std::move(basis)};
}

Hyperplane make_hyperplane(const ProjSpace& s, std::span<const FieldElem> normal) {
  if (normal.size() != s.vector_length()) throw Error(ErrorCode::DimensionMismatch, "normal of wrong length");
  return Hyperplane{normalize(*s.field, normal)};
}

AffLine make_line(const AffSpace& s, std::span<const FieldElem> dir, std::span<const FieldElem> point) {
  if (dir.size() != s.vector_length() || point.size() != s.vector_length()) {
    throw Error(ErrorCode::DimensionMismatch, "affine line of wrong length");
  }
  Vec d = normalize(*s.field, dir);
  Vec base = linalg::reduce_mod(single_row(s.field, d), point);
  return AffLine{std::move(d), std::move(base)};
}

std::uint64_t count_points(const ProjSpace& s) {
  const std::uint64_t q = s.q();
  return (ipow(q, s.n + 1) - 1) / (q - 1);
}

std::uint64_t count_lines(const ProjSpace& s) {
  const std::uint64_t q = s.q();
  return (ipow(q, s.n + 1) - 1) * (ipow(q, s.n) - 1) / ((q * q - 1) * (q - 1));
}

std::uint64_t count_points(const AffSpace& s) { return ipow(s.q(), s.n); }

std::uint64_t count_lines(const AffSpace& s) {
  const std::uint64_t q = s.q();
  return ipow(q, s.n - 1) * (ipow(q, s.n) - 1) / (q - 1);
}

std::vector<ProjPoint> enumerate_points(const ProjSpace& s, std::uint64_t limit) {
  check_limit(count_points(s), limit, "projective points");
  std::vector<ProjPoint> out;
  for (auto& v : normalized_vectors(s.q(), s.vector_length())) out.push_back(ProjPoint{std::move(v)});
  return out;
}

std::vector<Hyperplane> enumerate_hyperplanes(const ProjSpace& s, std::uint64_t limit) {
  check_limit(count_points(s), limit, "hyperplanes");
  std::vector<Hyperplane> out;
  for (auto& v : normalized_vectors(s.q(), s.vector_length())) out.push_back(Hyperplane{std::move(v)});
  return out;
}

std::vector<ProjLine> enumerate_lines(const ProjSpace& s, std::uint64_t limit) {
  check_limit(count_lines(s), limit, "projective lines");
  std::vector<ProjLine> out;
  for (auto& m : two_dim_rrefs(s.field, s.vector_length())) out.push_back(ProjLine{std::move(m)});
  return out;
}

std::vector<AffPoint> enumerate_points(const AffSpace& s, std::uint64_t limit) {
  check_limit(count_points(s), limit, "affine points");
  std::vector<AffPoint> out;
  for (auto& v : vectors_zero_at(s.q(), s.vector_length(), {})) out.push_back(AffPoint{std::move(v)});
  return out;
}

std::vector<AffLine> enumerate_lines(const AffSpace& s, std::uint64_t limit) {
  check_limit(count_lines(s), limit, "affine lines");
  std::vector<AffLine> out;
  for (const auto& dir : normalized_vectors(s.q(), s.vector_length())) {
    // The canonical base vanishes at the leading position of the direction.
    for (auto& base : vectors_zero_at(s.q(), s.vector_length(), {leading_position(dir)})) {
      out.push_back(AffLine{dir, std::move(base)});
    }
  }
  return out;
}

ProjLine line_through(const ProjSpace& s, const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "a line needs two distinct points");
  return make_line(s, MatGF(s.field, {a.coords, b.coords}, s.vector_length()));
}

AffLine line_through(const AffSpace& s, const AffPoint& a, const AffPoint& b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "a line needs two distinct points");
  return make_line(s, vec_sub(*s.field, b.coords, a.coords), a.coords);
}

std::vector<ProjPoint> points_on(const ProjSpace& s, const ProjLine& line) {
  const Field& f = *s.field;
  std::vector<ProjPoint> out;
  out.push_back(ProjPoint{line.basis.row_vec(1)});
  for (auto c : f.elements()) {
    Vec v = vec_add(f, line.basis.row(0), vec_scale(f, c, line.basis.row(1)));
    out.push_back(ProjPoint{normalize(f, v)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffPoint> points_on(const AffSpace& s, const AffLine& line) {
  const Field& f = *s.field;
  std::vector<AffPoint> out;
  for (auto c : f.elements()) out.push_back(AffPoint{vec_add(f, line.base, vec_scale(f, c, line.dir))});
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const ProjSpace&, const ProjLine& line, const ProjPoint& p) {
  return linalg::in_rowspace(line.basis, p.coords);
}

bool contains(const AffSpace& s, const AffLine& line, const AffPoint& p) {
  const Vec diff = vec_sub(*s.field, p.coords, line.base);
  return linalg::reduce_mod(single_row(s.field, line.dir), diff) == Vec(diff.size(), FieldElem{0});
}

bool contains(const ProjSpace& s, const Hyperplane& h, const ProjPoint& p) {
  return dot(*s.field, h.normal, p.coords).index == 0;
}

bool contains(const ProjSpace& s, const Hyperplane& h, const ProjLine& line) {
  return dot(*s.field, h.normal, line.basis.row(0)).index == 0 &&
         dot(*s.field, h.normal, line.basis.row(1)).index == 0;
}

Relation relation(const ProjSpace& s, const ProjLine& a, const ProjLine& b) {
  const std::size_t rank = linalg::rref(MatGF::stack(a.basis, b.basis)).rank;
  if (rank == 2) return {RelationKind::Equal, std::nullopt};
  if (rank == 4) return {RelationKind::Skew, std::nullopt};
  const MatGF meet = linalg::rowspace_intersect(a.basis, b.basis);
  return {RelationKind::Meet, normalize(*s.field, meet.row(0))};
}

Relation relation(const AffSpace& s, const AffLine& a, const AffLine& b) {
  const Field& f = *s.field;
  if (a.dir == b.dir) return {a.base == b.base ? RelationKind::Equal : RelationKind::Parallel, std::nullopt};
  // base_a + x dir_a = base_b + y dir_b  <=>  x dir_a + (-y) dir_b = base_b - base_a
  const std::size_t n = s.vector_length();
  MatGF m(s.field, n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = a.dir[i];
    m(i, 1) = b.dir[i];
  }
  const Vec rhs = vec_sub(f, b.base, a.base);
  const auto sol = linalg::solve(m, rhs);
  if (!sol) return {RelationKind::Skew, std::nullopt};
  return {RelationKind::Meet, vec_add(f, a.base, vec_scale(f, (*sol)[0], a.dir))};
}

ProjFlat span_of_lines(const ProjSpace& s, std::span<const ProjLine> lines) {
  if (lines.empty()) throw Error(ErrorCode::InvalidArgument, "span of an empty line set");
  MatGF acc(s.field, 0, s.vector_length());
  for (const auto& l : lines) acc = MatGF::stack(acc, l.basis);
  return ProjFlat{linalg::row_basis(acc)};
}

AffFlat span_of_lines(const AffSpace& s, std::span<const AffLine> lines) {
  if (lines.empty()) throw Error(ErrorCode::InvalidArgument, "span of an empty line set");
  const Field& f = *s.field;
  MatGF acc(s.field, 0, s.vector_length());
  for (const auto& l : lines) {
    acc.append_row(l.dir);
    const Vec diff = vec_sub(f, l.base, lines.front().base);
    if (!is_zero(diff)) acc.append_row(diff);
  }
  MatGF dirs = linalg::row_basis(acc);
  Vec base = linalg::reduce_mod(dirs, lines.front().base);
  return AffFlat{std::move(base), std::move(dirs)};
}

bool contains(const AffSpace& s, const AffFlat& flat, const AffLine& line) {
  if (!linalg::in_rowspace(flat.directions, line.dir)) return false;
  return linalg::in_rowspace(flat.directions, vec_sub(*s.field, line.base, flat.base)) ||
         is_zero(vec_sub(*s.field, line.base, flat.base));
}

ProjPoint closure_point(const AffSpace&, const AffPoint& p) {
  Vec v;
  v.reserve(p.coords.size() + 1);
  v.push_back(FieldElem{1});
  v.insert(v.end(), p.coords.begin(), p.coords.end());
  return ProjPoint{std::move(v)};
}

ProjPoint infinite_point(const AffSpace&, const AffLine& l) {
  Vec v;
  v.reserve(l.dir.size() + 1);
  v.push_back(FieldElem{0});
  v.insert(v.end(), l.dir.begin(), l.dir.end());
  return ProjPoint{std::move(v)};
}

ProjLine closure_line(const AffSpace& a, const AffLine& l) {
  const ProjSpace ps{a.n, a.field};
  return make_line(ps, MatGF(a.field, {closure_point(a, AffPoint{l.base}).coords, infinite_point(a, l).coords},
                             ps.vector_length()));
}

Hyperplane hyperplane_at_infinity(const ProjSpace& s) {
  Vec normal(s.vector_length(), FieldElem{0});
  normal[0] = FieldElem{1};
  return Hyperplane{std::move(normal)};
}

ProjectiveClosure projective_closure(const AffSpace& a) {
  ProjectiveClosure out{ProjSpace{a.n, a.field}, {}, {}, {}};
  out.at_infinity = hyperplane_at_infinity(out.pspace);
  for (const auto& p : enumerate_points(a)) out.point_map.push_back(closure_point(a, p));
  for (const auto& l : enumerate_lines(a)) out.line_map.push_back(closure_line(a, l));
  return out;
}

AffineChart::AffineChart(ProjSpace pspace, Hyperplane h)
    : pspace_(std::move(pspace)), h_(std::move(h)), aspace_{pspace_.n, pspace_.field} {
  if (h_.normal.size() != pspace_.vector_length()) {
    throw Error(ErrorCode::DimensionMismatch, "hyperplane of wrong length");
  }
  h_.normal = normalize(*pspace_.field, h_.normal);
  pivot_ = leading_position(h_.normal);
}

Vec AffineChart::to_chart(std::span<const FieldElem> x) const {
  Vec y;
  y.reserve(x.size());
  y.push_back(dot(*pspace_.field, h_.normal, x));
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != pivot_) y.push_back(x[j]);
  return y;
}

Vec AffineChart::from_chart(std::span<const FieldElem> y) const {
  const gf::Field& f = *pspace_.field;
  Vec x(y.size(), FieldElem{0});
  for (std::size_t j = 0, k = 1; j < x.size(); ++j)
    if (j != pivot_) x[j] = y[k++];
  // normal[pivot] = 1, so x_pivot = y_0 - sum_{j != pivot} normal_j x_j.
  FieldElem rest{0};
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != pivot_) rest = f.add(rest, f.mul(h_.normal[j], x[j]));
  x[pivot_] = f.sub(y[0], rest);
  return x;
}

std::optional<AffPoint> AffineChart::to_affine(const ProjPoint& p) const {
  const gf::Field& f = *pspace_.field;
  const Vec y = to_chart(p.coords);
  if (y[0].index == 0) return std::nullopt;
  const FieldElem s = f.inv(y[0]);
  Vec a;
  for (std::size_t j = 1; j < y.size(); ++j) a.push_back(f.mul(s, y[j]));
  return AffPoint{std::move(a)};
}

AffLine AffineChart::to_affine(const ProjLine& l) const {
  if (contains(pspace_, h_, l)) throw Error(ErrorCode::LineInsideHyperplane, "line lies in the hyperplane");
  std::vector<AffPoint> pts;
  for (const auto& p : points_on(pspace_, l)) {
    if (auto a = to_affine(p)) pts.push_back(std::move(*a));
    if (pts.size() == 2) break;
  }
  return line_through(aspace_, pts[0], pts[1]);
}

ProjPoint AffineChart::to_projective(const AffPoint& p) const {
  Vec y;
  y.push_back(FieldElem{1});
  y.insert(y.end(), p.coords.begin(), p.coords.end());
  return ProjPoint{normalize(*pspace_.field, from_chart(y))};
}

ProjLine AffineChart::to_projective(const AffLine& l) const {
  const AffPoint second{vec_add(*pspace_.field, l.base, l.dir)};
  return line_through(pspace_, to_projective(AffPoint{l.base}), to_projective(second));
}

AffineRestriction affine_restriction(const ProjSpace& s, const Hyperplane& h) {
  AffineRestriction out{AffineChart(s, h), {}};
  for (const auto& l : enumerate_lines(s)) {
    if (contains(s, out.chart.hyperplane(), l)) {
      out.line_map.emplace_back(std::nullopt);
    } else {
      out.line_map.emplace_back(out.chart.to_affine(l));
    }
  }
  return out;
}

std::vector<AffPlane> enumerate_planes(const AffSpace& s, std::uint64_t limit) {
  const ProjSpace directions_space{s.n - 1, s.field};
  check_limit(count_lines(directions_space) * ipow(s.q(), s.n - 2), limit, "affine planes");
  std::vector<AffPlane> out;
  for (auto& dirs : two_dim_rrefs(s.field, s.vector_length())) {
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < 2; ++r) pivots.push_back(leading_position(dirs.row(r)));
    for (auto& base : vectors_zero_at(s.q(), s.vector_length(), pivots)) out.push_back(AffPlane{dirs, std::move(base)});
  }
  return out;
}

std::vector<ParallelClass> parallel_classes(const AffSpace& s, const AffPlane& plane) {
  const gf::Field& f = *s.field;
  std::vector<Vec> dirs;
  dirs.push_back(plane.directions.row_vec(1));
  for (auto c : f.elements()) {
    dirs.push_back(normalize(f, vec_add(f, plane.directions.row(0), vec_scale(f, c, plane.directions.row(1)))));
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<ParallelClass> out;
  for (const auto& d : dirs) {
    ParallelClass cls{d, {}};
    // Lines of the plane with direction d: one through base + c * w for a
    // complementary direction w.
    const Vec w = d == plane.directions.row_vec(0) ? plane.directions.row_vec(1) : plane.directions.row_vec(0);
    for (auto c : f.elements()) cls.lines.push_back(make_line(s, d, vec_add(f, plane.base, vec_scale(f, c, w))));
    std::sort(cls.lines.begin(), cls.lines.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool contains(const AffSpace& s, const AffPlane& plane, const AffLine& line) {
  return contains(s, AffFlat{plane.base, plane.directions}, line);
}

}  // namespace steiner::geometry
