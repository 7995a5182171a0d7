#include "doctest.h"

#include "oracles.hpp"
#include "properties.hpp"
#include "steiner/geometry.hpp"

using namespace steiner;
using namespace steiner::geometry;

namespace {

const auto F2 = gf::Field::make(2, 1);
const auto F3 = gf::Field::make(3, 1);

Vec v(std::initializer_list<std::uint32_t> xs) {
  Vec out;
  for (auto x : xs) out.push_back(gf::FieldElem{x});
  return out;
}

ProjPoint pp(const ProjSpace& s, std::initializer_list<std::uint32_t> xs) { return make_point(s, v(xs)); }
AffPoint ap(std::initializer_list<std::uint32_t> xs) { return AffPoint{v(xs)}; }

ProjLine span2(const ProjSpace& s, std::initializer_list<std::uint32_t> a, std::initializer_list<std::uint32_t> b) {
  return make_line(s, MatGF(s.field, {v(a), v(b)}, s.vector_length()));
}

}  // namespace

TEST_CASE("point and line counts match brute-force enumeration") {
  for (const auto& [n, q] : {std::pair{2, 2u}, {3, 2u}, {2, 3u}, {3, 3u}, {4, 2u}}) {
    CAPTURE(n);
    CAPTURE(q);
    const auto s = make_proj_space(n, gf::Field::make(q, 1));
    const auto o = oracle::projective_geometry(n, static_cast<int>(q));
    CHECK(enumerate_points(s).size() == o.points.size());
    CHECK(enumerate_lines(s).size() == o.lines.size());
    CHECK(count_lines(s) == o.lines.size());
  }
  for (const auto& [n, q] : {std::pair{2, 2u}, {3, 2u}, {2, 3u}, {3, 3u}, {4, 2u}}) {
    CAPTURE(n);
    CAPTURE(q);
    const auto s = make_aff_space(n, gf::Field::make(q, 1));
    const auto o = oracle::affine_geometry(n, static_cast<int>(q));
    CHECK(enumerate_points(s).size() == o.points.size());
    CHECK(enumerate_lines(s).size() == o.lines.size());
    CHECK(count_lines(s) == o.lines.size());
  }
  CHECK(enumerate_points(make_proj_space(3, F2)).size() == 15);
  CHECK(enumerate_lines(make_proj_space(3, F2)).size() == 35);
  CHECK(enumerate_lines(make_aff_space(3, F2)).size() == 28);
  CHECK(enumerate_lines(make_aff_space(3, F3)).size() == 117);
}

TEST_CASE("enumerations are sorted and duplicate free") {
  const auto s = make_proj_space(3, F3);
  const auto lines = enumerate_lines(s);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(std::adjacent_find(lines.begin(), lines.end()) == lines.end());
  const auto a = make_aff_space(3, F3);
  const auto al = enumerate_lines(a);
  CHECK(std::is_sorted(al.begin(), al.end()));
  CHECK(std::adjacent_find(al.begin(), al.end()) == al.end());
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_lines(make_proj_space(3, F3), 10), Error);
}

TEST_CASE("line through two points") {
  const auto s = make_proj_space(3, F2);
  const auto l = line_through(s, pp(s, {1, 0, 0, 0}), pp(s, {0, 1, 0, 0}));
  CHECK(l.basis == MatGF::from_indices(F2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK_THROWS_AS(line_through(s, pp(s, {1, 0, 0, 0}), pp(s, {1, 0, 0, 0})), Error);

  const auto a2 = make_aff_space(3, F2);
  const auto m = line_through(a2, ap({0, 0, 0}), ap({1, 0, 1}));
  CHECK(m.dir == v({1, 0, 1}));
  CHECK(m.base == v({0, 0, 0}));

  const auto a3 = make_aff_space(3, F3);
  const auto k = line_through(a3, ap({0, 0, 0}), ap({2, 0, 0}));
  CHECK(k.dir == v({1, 0, 0}));
  CHECK(k.base == v({0, 0, 0}));
}

TEST_CASE("relations between lines") {
  const auto s = make_proj_space(3, F2);
  const auto r = relation(s, span2(s, {1, 0, 0, 0}, {0, 1, 0, 0}), span2(s, {1, 0, 0, 0}, {0, 0, 1, 0}));
  CHECK(r.kind == RelationKind::Meet);
  CHECK(r.point == v({1, 0, 0, 0}));
  CHECK(relation(s, span2(s, {1, 0, 0, 0}, {0, 1, 0, 0}), span2(s, {0, 0, 1, 0}, {0, 0, 0, 1})).kind == RelationKind::Skew);

  const auto a = make_aff_space(3, F2);
  const auto e1 = v({1, 0, 0});
  CHECK(relation(a, make_line(a, e1, v({0, 0, 0})), make_line(a, e1, v({0, 1, 0}))).kind == RelationKind::Parallel);
  const auto x = line_through(a, ap({0, 0, 0}), ap({1, 0, 0}));
  const auto y = line_through(a, ap({0, 1, 0}), ap({1, 1, 1}));
  CHECK(relation(a, x, y).kind == RelationKind::Skew);
  CHECK(relation(a, x, x).kind == RelationKind::Equal);
}

TEST_CASE("relations agree with point-set intersections") {
  const auto a = make_aff_space(3, F3);
  const auto lines = enumerate_lines(a);
  for (std::size_t i = 0; i < lines.size(); i += 7)
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const auto pi = points_on(a, lines[i]), pj = points_on(a, lines[j]);
      std::size_t common = 0;
      for (const auto& p : pi) common += std::count(pj.begin(), pj.end(), p);
      const auto rel = relation(a, lines[i], lines[j]);
      if (i == j) {
        CHECK(rel.kind == RelationKind::Equal);
      } else if (common == 1) {
        CHECK(rel.kind == RelationKind::Meet);
      } else {
        CHECK(common == 0);
        CHECK(rel.kind == (lines[i].dir == lines[j].dir ? RelationKind::Parallel : RelationKind::Skew));
      }
    }
}

TEST_CASE("span of lines") {
  const auto s4 = make_proj_space(4, F2);
  const std::vector<ProjLine> skew{span2(s4, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}), span2(s4, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0})};
  CHECK(span_of_lines(s4, skew).dimension() == 3);
  CHECK(span_of_lines(s4, std::vector<ProjLine>{skew[0]}).dimension() == 1);

  const auto a = make_aff_space(3, F2);
  const std::vector<AffLine> pair{line_through(a, ap({0, 0, 0}), ap({1, 0, 0})), line_through(a, ap({0, 1, 0}), ap({1, 1, 1}))};
  CHECK(span_of_lines(a, pair).dimension() == 3);
}

TEST_CASE("projective closure") {
  const auto a = make_aff_space(3, F2);
  const auto cl = projective_closure(a);
  CHECK(closure_point(a, ap({1, 0, 1})).coords == v({1, 1, 0, 1}));
  const auto l = make_line(a, v({1, 0, 0}), v({0, 0, 0}));
  CHECK(closure_line(a, l).basis == MatGF::from_indices(F2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(infinite_point(a, l).coords == v({0, 1, 0, 0}));
  CHECK(cl.at_infinity.normal == v({1, 0, 0, 0}));
  const auto par = make_line(a, v({1, 0, 0}), v({0, 1, 1}));
  CHECK(infinite_point(a, par) == infinite_point(a, l));
  CHECK(relation(cl.pspace, closure_line(a, par), closure_line(a, l)).point == v({0, 1, 0, 0}));
}

TEST_CASE("restriction to the complement of a hyperplane") {
  const auto s = make_proj_space(3, F2);
  const auto h = hyperplane_at_infinity(s);
  const auto res = affine_restriction(s, h);
  const auto lines = enumerate_lines(s);
  const auto target = span2(s, {1, 0, 0, 0}, {0, 1, 0, 0});
  const auto idx = std::lower_bound(lines.begin(), lines.end(), target) - lines.begin();
  REQUIRE(res.line_map[idx]);
  CHECK(res.line_map[idx]->dir == v({1, 0, 0}));
  CHECK(res.line_map[idx]->base == v({0, 0, 0}));

  const auto inside = span2(s, {0, 1, 0, 0}, {0, 0, 1, 0});
  bool threw = false;
  try {
    (void)res.chart.to_affine(inside);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::LineInsideHyperplane;
  }
  CHECK(threw);
}

TEST_CASE("planes and parallel classes") {
  const auto a2 = make_aff_space(3, F2);
  const auto planes2 = enumerate_planes(a2);
  CHECK(planes2.size() == oracle::affine_planes(oracle::affine_geometry(3, 2)).size());
  CHECK(planes2.size() == 14);
  for (const auto& p : planes2) {
    const auto classes = parallel_classes(a2, p);
    CHECK(classes.size() == 3);
    for (const auto& c : classes) {
      CHECK(c.lines.size() == 2);
      for (const auto& l : c.lines) CHECK(contains(a2, p, l));
    }
  }
  const auto a3 = make_aff_space(3, F3);
  const auto planes3 = enumerate_planes(a3);
  CHECK(planes3.size() == oracle::affine_planes(oracle::affine_geometry(3, 3)).size());
  CHECK(planes3.size() == 39);
  for (const auto& p : planes3) CHECK(parallel_classes(a3, p).size() == 4);
}

TEST_CASE("closure and restriction suite") {
  const auto r = props::closure_restriction_identity();
  INFO(r.detail);
  CHECK(r.passed);
}
