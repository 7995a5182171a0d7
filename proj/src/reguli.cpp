#include "steiner/reguli.hpp"

#include <algorithm>
#include <set>

#include "steiner/error.hpp"

namespace steiner::reguli {

namespace {

using geometry::AffPoint;
using geometry::RelationKind;
using linalg::MatGF;
using linalg::Vec;

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool pairwise_skew(const ProjSpace& s, const std::vector<ProjLine>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (geometry::relation(s, lines[i], lines[j]).kind != RelationKind::Skew) return false;
  return true;
}

bool pairwise_skew(const AffSpace& s, const std::vector<AffLine>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (geometry::relation(s, lines[i], lines[j]).kind != RelationKind::Skew) return false;
  return true;
}

template <typename Space, typename Line>
bool all_cross_meet(const Space& s, const std::vector<Line>& a, const std::vector<Line>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (geometry::relation(s, x, y).kind != RelationKind::Meet) return false;
  return true;
}

template <typename Space, typename Line>
bool axioms_hold(const Space& s, const std::vector<Line>& family, const std::vector<Line>& transversals) {
  // (1) every point of every family line is on a transversal.
  for (const auto& l : family)
    for (const auto& p : geometry::points_on(s, l)) {
      const bool covered = std::any_of(transversals.begin(), transversals.end(),
                                       [&](const Line& t) { return geometry::contains(s, t, p); });
      if (!covered) return false;
    }
  // (2) every point of every transversal is on a family line.
  for (const auto& t : transversals)
    for (const auto& p : geometry::points_on(s, t)) {
      const bool covered =
          std::any_of(family.begin(), family.end(), [&](const Line& l) { return geometry::contains(s, l, p); });
      if (!covered) return false;
    }
  return true;
}

std::vector<ProjLine> concat(const std::vector<ProjLine>& a, const std::vector<ProjLine>& b) {
  std::vector<ProjLine> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::optional<ProjLine> transversal_through(const ProjSpace& s, const ProjLine& l1, const ProjLine& l2,
                                            const ProjPoint& t) {
  if (geometry::relation(s, l1, l2).kind != RelationKind::Skew) {
    throw Error(ErrorCode::LinesNotSkew, "transversal needs two skew lines");
  }
  if (geometry::contains(s, l1, t) || geometry::contains(s, l2, t)) {
    throw Error(ErrorCode::PointOnLine, "point lies on one of the lines");
  }
  MatGF tm(s.field, 0, s.vector_length());
  tm.append_row(t.coords);
  const MatGF plane1 = linalg::rowspace_sum(l1.basis, tm);
  const MatGF plane2 = linalg::rowspace_sum(l2.basis, tm);
  const MatGF meet = linalg::rowspace_intersect(plane1, plane2);
  if (meet.rows() != 2) return std::nullopt;
  return ProjLine{meet};
}

std::vector<ProjLine> common_transversals(const ProjSpace& s, const std::vector<ProjLine>& lines) {
  if (lines.size() < 2) throw Error(ErrorCode::WrongCount, "need at least two lines");
  if (!pairwise_skew(s, lines)) throw Error(ErrorCode::LinesNotSkew, "lines are not pairwise skew");
  std::vector<ProjLine> out;
  for (const auto& x : geometry::points_on(s, lines[0]))
    for (const auto& y : geometry::points_on(s, lines[1])) {
      ProjLine m = geometry::line_through(s, x, y);
      const bool ok = std::all_of(lines.begin(), lines.end(), [&](const ProjLine& l) {
        return geometry::relation(s, m, l).kind == RelationKind::Meet;
      });
      if (ok) out.push_back(std::move(m));
    }
  sort_unique(out);
  return out;
}

std::vector<AffLine> common_transversals(const AffSpace& s, const std::vector<AffLine>& lines) {
  if (lines.size() < 2) throw Error(ErrorCode::WrongCount, "need at least two lines");
  if (!pairwise_skew(s, lines)) throw Error(ErrorCode::LinesNotSkew, "lines are not pairwise skew");
  std::vector<AffLine> out;
  for (const auto& x : geometry::points_on(s, lines[0]))
    for (const auto& y : geometry::points_on(s, lines[1])) {
      AffLine m = geometry::line_through(s, x, y);
      const bool ok = std::all_of(lines.begin(), lines.end(), [&](const AffLine& l) {
        return geometry::relation(s, m, l).kind == RelationKind::Meet;
      });
      if (ok) out.push_back(std::move(m));
    }
  sort_unique(out);
  return out;
}

std::optional<std::string> regulus_pair_violation(const RegulusPair& rp) {
  const ProjSpace& s = rp.ambient;
  const std::size_t size = s.q() + 1;
  if (rp.R.size() != size || rp.R_opp.size() != size) return "family sizes differ from q+1";
  if (!pairwise_skew(s, rp.R)) return "R is not pairwise skew";
  if (!pairwise_skew(s, rp.R_opp)) return "R_opp is not pairwise skew";
  std::set<ProjPoint> grid;
  for (const auto& a : rp.R)
    for (const auto& b : rp.R_opp) {
      const auto rel = geometry::relation(s, a, b);
      if (rel.kind != RelationKind::Meet) return "a line of R misses a line of R_opp";
      grid.insert(ProjPoint{*rel.point});
    }
  if (grid.size() != size * size) return "grid points are not distinct";
  if (geometry::span_of_lines(s, concat(rp.R, rp.R_opp)).dimension() != 3) return "lines do not span a 3-flat";
  const auto opp = common_transversals(s, rp.R);
  if (opp != rp.R_opp) return "R_opp is not the full transversal set of R";
  if (common_transversals(s, rp.R_opp) != rp.R) return "R is not the full transversal set of R_opp";
  if (!axioms_hold(s, rp.R, opp)) return "regulus axioms fail for R";
  if (!axioms_hold(s, rp.R_opp, rp.R)) return "regulus axioms fail for R_opp";
  return std::nullopt;
}

RegulusPair regulus_through(const ProjSpace& s, const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  const std::vector<ProjLine> three{l1, l2, l3};
  if (!pairwise_skew(s, three)) throw Error(ErrorCode::LinesNotSkew, "lines are not pairwise skew");
  if (geometry::span_of_lines(s, three).dimension() != 3) {
    throw Error(ErrorCode::NotCoplanar3Flat, "lines do not lie in a common 3-flat");
  }
  RegulusPair rp{s, {}, {}};
  for (const auto& x : geometry::points_on(s, l1)) {
    auto t = transversal_through(s, l2, l3, x);
    if (!t) throw Error(ErrorCode::NotCoplanar3Flat, "missing transversal inside the 3-flat");
    rp.R_opp.push_back(std::move(*t));
  }
  for (const auto& x : geometry::points_on(s, rp.R_opp[0])) {
    auto t = transversal_through(s, rp.R_opp[1], rp.R_opp[2], x);
    if (!t) throw Error(ErrorCode::NotCoplanar3Flat, "missing transversal inside the 3-flat");
    rp.R.push_back(std::move(*t));
  }
  sort_unique(rp.R);
  sort_unique(rp.R_opp);
  if (auto bad = regulus_pair_violation(rp)) throw Error(ErrorCode::Inconsistent, *bad);
  return rp;
}

std::vector<std::vector<std::uint32_t>> enumerate_reguli_indices(const designs::ProjectiveSystem& sys) {
  if (sys.space.n != 3) throw Error(ErrorCode::InvalidArgument, "reguli are enumerated in PG(3,q)");
  if (sys.space.q() > 4) throw Error(ErrorCode::LimitExceeded, "regulus enumeration supports q <= 4");
  const auto& g = sys.graph;
  const auto& d = sys.design;
  const auto v = g.order();
  // Transversal of skew lines a, b through point x (on neither): the unique
  // line through x and a point of a that meets b.
  auto transversal = [&](std::uint32_t x, std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    for (auto y : d.blocks[a]) {
      const std::uint32_t m = d.block_of(x, y);
      if (g.adjacent(m, b)) return m;
    }
    throw Error(ErrorCode::Inconsistent, "no transversal in PG(3,q)");
  };
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> opp, reg;
  for (std::uint32_t l1 = 0; l1 < v; ++l1) {
    Bitset skew1 = g.neighbours(l1);
    // complement within (l1, v)
    Bitset cand(v);
    for (std::uint32_t w = l1 + 1; w < v; ++w)
      if (!skew1.test(w)) cand.set(w);
    cand.for_each([&](std::size_t l2s) {
      const auto l2 = static_cast<std::uint32_t>(l2s);
      Bitset cand3 = cand;
      cand3.subtract(g.neighbours(l2));
      cand3.clear_through(l2);
      cand3.for_each([&](std::size_t l3s) {
        const auto l3 = static_cast<std::uint32_t>(l3s);
        opp.clear();
        for (auto x : d.blocks[l1]) opp.push_back(transversal(x, l2, l3));
        reg.clear();
        for (auto x : d.blocks[opp[0]]) reg.push_back(transversal(x, opp[1], opp[2]));
        std::sort(reg.begin(), reg.end());
        if (reg[0] == l1 && reg[1] == l2 && reg[2] == l3) out.push_back(reg);
      });
    });
  }
  return out;
}

std::vector<RegulusIndexPair> enumerate_regulus_index_pairs(const designs::ProjectiveSystem& sys) {
  const auto families = enumerate_reguli_indices(sys);
  const auto& g = sys.graph;
  std::vector<RegulusIndexPair> out;
  out.reserve(families.size());
  for (const auto& fam : families) {
    // The opposite is the set of lines meeting every member of R.
    Bitset meet_all = g.neighbours(fam[0]);
    for (std::size_t j = 1; j < fam.size(); ++j) meet_all &= g.neighbours(fam[j]);
    RegulusIndexPair p{fam, meet_all.indices()};
    if (p.R_opp.size() != p.R.size()) throw Error(ErrorCode::Inconsistent, "opposite regulus has the wrong size");
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t b = a + 1; b < fam.size(); ++b)
        if (g.adjacent(fam[a], fam[b])) throw Error(ErrorCode::Inconsistent, "regulus lines meet");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RegulusPair> enumerate_reguli(const designs::ProjectiveSystem& sys) {
  std::vector<RegulusPair> out;
  for (const auto& p : enumerate_regulus_index_pairs(sys)) {
    RegulusPair rp{sys.space, {}, {}};
    for (auto i : p.R) rp.R.push_back(sys.lines[i]);
    for (auto i : p.R_opp) rp.R_opp.push_back(sys.lines[i]);
    out.push_back(std::move(rp));
  }
  return out;
}

AffineRegulusPair affine_regulus_construct(const AffSpace& s, const Vec& v1, const Vec& v2, const Vec& v3) {
  const auto& f = *s.field;
  const std::size_t n = s.vector_length();
  if (v1.size() != n || v2.size() != n || v3.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "vectors of wrong length");
  }
  const MatGF span3(s.field, {v1, v2, v3}, n);
  if (linalg::rref(span3).rank != 3) throw Error(ErrorCode::DependentVectors, "v1, v2, v3 are dependent");

  AffineRegulusPair ap{s, {}, {}};
  for (auto c : f.elements()) {
    const Vec dir1 = geometry::vec_add(f, geometry::vec_scale(f, c, v3), v1);
    const Vec dir2 = geometry::vec_add(f, geometry::vec_scale(f, c, v3), v2);
    ap.S.push_back(geometry::make_line(s, dir1, geometry::vec_scale(f, c, v2)));
    ap.S_opp.push_back(geometry::make_line(s, dir2, geometry::vec_scale(f, c, v1)));
  }
  std::sort(ap.S.begin(), ap.S.end());
  std::sort(ap.S_opp.begin(), ap.S_opp.end());

  if (auto bad = affine_pair_violation(ap)) throw Error(ErrorCode::Inconsistent, *bad);

  // All lines inside the linear 3-flat <v1, v2, v3>.
  const geometry::AffFlat flat{Vec(n, gf::FieldElem{0}), linalg::row_basis(span3)};
  for (const auto* fam : {&ap.S, &ap.S_opp})
    for (const auto& l : *fam)
      if (!geometry::contains(s, flat, l)) throw Error(ErrorCode::Inconsistent, "line leaves <v1,v2,v3>");

  // Each family sits in a class of parallel planes: translates of <v1,v3>
  // for S and of <v2,v3> for S_opp, one plane per line.
  auto embedded = [&](const std::vector<AffLine>& fam, const Vec& a) {
    const MatGF plane_dirs = linalg::row_basis(MatGF(s.field, {a, v3}, n));
    std::set<Vec> cosets;
    for (const auto& l : fam) {
      if (!linalg::in_rowspace(plane_dirs, l.dir)) return false;
      cosets.insert(linalg::reduce_mod(plane_dirs, l.base));
    }
    return cosets.size() == fam.size();
  };
  if (!embedded(ap.S, v1) || !embedded(ap.S_opp, v2)) {
    throw Error(ErrorCode::Inconsistent, "family is not embedded in a class of parallel planes");
  }
  return ap;
}

bool satisfies_regulus_axioms(const AffSpace& s, const std::vector<AffLine>& family) {
  if (!pairwise_skew(s, family)) return false;
  return axioms_hold(s, family, common_transversals(s, family));
}

RegulusPair projective_lift(const AffineRegulusPair& ap) {
  const AffSpace& a = ap.ambient;
  const ProjSpace ps{a.n, a.field};
  auto line_at_infinity = [&](const std::vector<AffLine>& fam) {
    return geometry::line_through(ps, geometry::infinite_point(a, fam[0]), geometry::infinite_point(a, fam[1]));
  };
  RegulusPair rp{ps, {}, {}};
  for (const auto& l : ap.S) rp.R.push_back(geometry::closure_line(a, l));
  for (const auto& l : ap.S_opp) rp.R_opp.push_back(geometry::closure_line(a, l));
  rp.R.push_back(line_at_infinity(ap.S_opp));
  rp.R_opp.push_back(line_at_infinity(ap.S));
  std::sort(rp.R.begin(), rp.R.end());
  std::sort(rp.R_opp.begin(), rp.R_opp.end());
  return rp;
}

std::optional<std::string> affine_pair_violation(const AffineRegulusPair& ap) {
  const AffSpace& s = ap.ambient;
  const std::size_t q = s.q();
  if (ap.S.size() != q || ap.S_opp.size() != q) return "family sizes differ from q";
  if (!pairwise_skew(s, ap.S)) return "S is not pairwise skew";
  if (!pairwise_skew(s, ap.S_opp)) return "S_opp is not pairwise skew";
  if (!all_cross_meet(s, ap.S, ap.S_opp)) return "a line of S misses a line of S_opp";
  std::vector<AffLine> all = ap.S;
  all.insert(all.end(), ap.S_opp.begin(), ap.S_opp.end());
  if (geometry::span_of_lines(s, all).dimension() != 3) return "lines do not span a 3-flat";
  if (!satisfies_regulus_axioms(s, ap.S)) return "affine regulus axioms fail for S";
  if (!satisfies_regulus_axioms(s, ap.S_opp)) return "affine regulus axioms fail for S_opp";

  RegulusPair rp;
  try {
    rp = projective_lift(ap);
  } catch (const Error& e) {
    return std::string("projective lift failed: ") + e.what();
  }
  if (auto bad = regulus_pair_violation(rp)) return "projective lift is not a regulus pair: " + *bad;
  const ProjSpace& ps = rp.ambient;
  const Hyperplane inf = geometry::hyperplane_at_infinity(ps);
  auto at_infinity = [&](const std::vector<ProjLine>& fam) {
    return std::count_if(fam.begin(), fam.end(), [&](const ProjLine& l) { return geometry::contains(ps, inf, l); });
  };
  if (at_infinity(rp.R) != 1 || at_infinity(rp.R_opp) != 1) return "lift does not have one line of each family at infinity";
  return std::nullopt;
}

SkewClassification classify_skew_family(const AffSpace& s, const std::vector<AffLine>& lines) {
  const std::size_t q = s.q();
  if (lines.size() < 2 || lines.size() > q) throw Error(ErrorCode::WrongCount, "need between 2 and q lines");
  if (q >= 3 && lines.size() < 3) throw Error(ErrorCode::WrongCount, "classification needs three lines for q >= 3");
  if (!pairwise_skew(s, lines)) throw Error(ErrorCode::LinesNotSkew, "lines are not pairwise skew");
  const geometry::AffFlat flat = geometry::span_of_lines(s, lines);
  if (flat.dimension() != 3) throw Error(ErrorCode::NotCoplanar3Flat, "lines do not span a 3-flat");

  MatGF dirs(s.field, 0, s.vector_length());
  for (const auto& l : lines) dirs.append_row(l.dir);
  SkewClassification out;
  if (linalg::rref(dirs).rank != 2) return out;  // infinite points not collinear
  out.kind = SkewClassification::Case::Case1;

  const ProjSpace ps{s.n, s.field};
  const geometry::AffineChart chart(ps, geometry::hyperplane_at_infinity(ps));
  std::vector<ProjLine> closures;
  for (const auto& l : lines) closures.push_back(geometry::closure_line(s, l));
  const ProjLine m_inf =
      geometry::line_through(ps, geometry::infinite_point(s, lines[0]), geometry::infinite_point(s, lines[1]));

  auto restrict_pair = [&](const RegulusPair& rp) {
    AffineRegulusPair ap{s, {}, {}};
    for (const auto& l : rp.R)
      if (!geometry::contains(ps, chart.hyperplane(), l)) ap.S.push_back(chart.to_affine(l));
    for (const auto& l : rp.R_opp)
      if (!geometry::contains(ps, chart.hyperplane(), l)) ap.S_opp.push_back(chart.to_affine(l));
    std::sort(ap.S.begin(), ap.S.end());
    std::sort(ap.S_opp.begin(), ap.S_opp.end());
    return ap;
  };

  auto accept = [&](const RegulusPair& rp) {
    for (const auto& c : closures)
      if (std::find(rp.R.begin(), rp.R.end(), c) == rp.R.end()) return;
    if (std::find(rp.R_opp.begin(), rp.R_opp.end(), m_inf) == rp.R_opp.end()) {
      throw Error(ErrorCode::Inconsistent, "collinear infinite points but no opposite line at infinity");
    }
    AffineRegulusPair ap = restrict_pair(rp);
    if (auto bad = affine_pair_violation(ap)) throw Error(ErrorCode::Inconsistent, *bad);
    out.extensions.push_back(std::move(ap));
  };

  if (lines.size() >= 3) {
    accept(regulus_through(ps, closures[0], closures[1], closures[2]));
  } else {
    // Two lines: the third regulus line is any line of the flat's plane at
    // infinity avoiding both infinite points.
    std::vector<ProjPoint> inf_points;
    {
      std::vector<gf::FieldElem> coeffs(3);
      const auto elems = s.field->elements();
      for (auto a : elems)
        for (auto b : elems)
          for (auto c : elems) {
            if (a.index == 0 && b.index == 0 && c.index == 0) continue;
            Vec v(s.vector_length(), gf::FieldElem{0});
            const gf::FieldElem k[3] = {a, b, c};
            for (int r = 0; r < 3; ++r)
              v = geometry::vec_add(*s.field, v, geometry::vec_scale(*s.field, k[r], flat.directions.row(r)));
            Vec pv{gf::FieldElem{0}};
            pv.insert(pv.end(), v.begin(), v.end());
            inf_points.push_back(geometry::make_point(ps, pv));
          }
      sort_unique(inf_points);
    }
    const ProjPoint p0 = geometry::infinite_point(s, lines[0]);
    const ProjPoint p1 = geometry::infinite_point(s, lines[1]);
    std::vector<ProjLine> candidates;
    for (std::size_t i = 0; i < inf_points.size(); ++i)
      for (std::size_t j = i + 1; j < inf_points.size(); ++j) {
        ProjLine l = geometry::line_through(ps, inf_points[i], inf_points[j]);
        if (!geometry::contains(ps, l, p0) && !geometry::contains(ps, l, p1)) candidates.push_back(std::move(l));
      }
    sort_unique(candidates);
    for (const auto& l : candidates) accept(regulus_through(ps, closures[0], closures[1], l));
  }
  std::sort(out.extensions.begin(), out.extensions.end(),
            [](const AffineRegulusPair& a, const AffineRegulusPair& b) {
              return std::tie(a.S, a.S_opp) < std::tie(b.S, b.S_opp);
            });
  return out;
}

namespace {

// Index form of the affine transversal computation for a family of pairwise
// skew lines of an affine block graph.
struct IndexGeometry {
  const designs::AffineSystem& sys;
  std::vector<std::uint32_t> dir_class;

  explicit IndexGeometry(const designs::AffineSystem& s) : sys(s), dir_class(s.lines.size()) {
    std::uint32_t cls = 0;
    for (std::size_t i = 1; i < s.lines.size(); ++i) {
      if (s.lines[i].dir != s.lines[i - 1].dir) ++cls;
      dir_class[i] = cls;
    }
  }

  bool skew(std::uint32_t a, std::uint32_t b) const {
    return a != b && !sys.graph.adjacent(a, b) && dir_class[a] != dir_class[b];
  }

  std::vector<std::uint32_t> transversals(const std::vector<std::uint32_t>& fam) const {
    std::vector<std::uint32_t> out;
    for (auto x : sys.design.blocks[fam[0]])
      for (auto y : sys.design.blocks[fam[1]]) {
        const std::uint32_t m = sys.design.block_of(x, y);
        bool ok = true;
        for (auto f : fam) ok = ok && sys.graph.adjacent(m, f);
        if (ok) out.push_back(m);
      }
    sort_unique(out);
    return out;
  }

  bool axioms(const std::vector<std::uint32_t>& fam) const {
    const auto trans = transversals(fam);
    std::vector<bool> on_trans(sys.points.size(), false), on_fam(sys.points.size(), false);
    for (auto t : trans)
      for (auto p : sys.design.blocks[t]) on_trans[p] = true;
    for (auto f : fam)
      for (auto p : sys.design.blocks[f]) on_fam[p] = true;
    for (auto f : fam)
      for (auto p : sys.design.blocks[f])
        if (!on_trans[p]) return false;
    for (auto t : trans)
      for (auto p : sys.design.blocks[t])
        if (!on_fam[p]) return false;
    return true;
  }
};

}  // namespace

AffineRegulusCensus enumerate_affine_reguli(const designs::AffineSystem& sys) {
  if (sys.space.n != 3) throw Error(ErrorCode::InvalidArgument, "affine reguli are enumerated in AG(3,q)");
  const std::uint32_t q = sys.space.q();
  if (q > 4) throw Error(ErrorCode::LimitExceeded, "affine regulus enumeration supports q <= 4");
  const IndexGeometry geo(sys);
  const auto& d = sys.design;
  const auto v = static_cast<std::uint32_t>(sys.lines.size());

  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> found;
  std::vector<std::uint32_t> perm(q);
  for (std::uint32_t l1 = 0; l1 < v; ++l1) {
    for (std::uint32_t l2 = l1 + 1; l2 < v; ++l2) {
      if (!geo.skew(l1, l2)) continue;
      for (std::uint32_t i = 0; i < q; ++i) perm[i] = i;
      do {
        // S_opp: one transversal of l1, l2 through each point of l1.
        std::vector<std::uint32_t> opp(q);
        for (std::uint32_t i = 0; i < q; ++i) opp[i] = d.block_of(d.blocks[l1][i], d.blocks[l2][perm[i]]);
        bool ok = true;
        for (std::uint32_t i = 0; i < q && ok; ++i)
          for (std::uint32_t j = i + 1; j < q && ok; ++j) ok = geo.skew(opp[i], opp[j]);
        if (!ok) continue;
        std::sort(opp.begin(), opp.end());
        // S: l1, l2 plus q - 2 further common transversals of S_opp beyond l2.
        std::vector<std::uint32_t> extra;
        for (auto c : geo.transversals(opp))
          if (c > l2 && geo.skew(c, l1) && geo.skew(c, l2)) extra.push_back(c);
        std::vector<std::uint32_t> fam{l1, l2};
        auto extend = [&](auto&& self, std::size_t from) -> void {
          if (fam.size() == q) {
            std::vector<std::uint32_t> sorted_fam = fam;
            std::sort(sorted_fam.begin(), sorted_fam.end());
            if (geo.axioms(sorted_fam) && geo.axioms(opp)) found.emplace_back(sorted_fam, opp);
            return;
          }
          for (std::size_t i = from; i < extra.size(); ++i) {
            const bool fits = std::all_of(fam.begin(), fam.end(), [&](std::uint32_t x) { return geo.skew(x, extra[i]); });
            if (!fits) continue;
            fam.push_back(extra[i]);
            self(self, i + 1);
            fam.pop_back();
          }
        };
        extend(extend, 0);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::sort(found.begin(), found.end());

  AffineRegulusCensus census;
  std::set<std::vector<std::uint32_t>> sets;
  std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> quadrics;
  for (const auto& [fam, opp] : found) {
    sets.insert(fam);
    quadrics.insert(std::min(std::pair{fam, opp}, std::pair{opp, fam}));
    AffineRegulusPair ap{sys.space, {}, {}};
    for (auto i : fam) ap.S.push_back(sys.lines[i]);
    for (auto i : opp) ap.S_opp.push_back(sys.lines[i]);
    census.ordered_pairs.push_back(std::move(ap));
  }
  census.ordered_count = found.size();
  census.unordered_set_count = sets.size();
  census.quadric_count = quadrics.size();
  return census;
}

RestrictionResult regulus_restriction(const RegulusPair& rp, const Hyperplane& h) {
  const ProjSpace& s = rp.ambient;
  const auto flat = geometry::span_of_lines(s, concat(rp.R, rp.R_opp));
  bool flat_inside = true;
  for (std::size_t r = 0; r < flat.basis.rows(); ++r)
    if (geometry::dot(*s.field, h.normal, flat.basis.row(r)).index != 0) flat_inside = false;
  if (flat_inside) return NotRestrictable{"the regulus 3-flat lies inside the hyperplane"};

  auto inside = [&](const std::vector<ProjLine>& fam) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (geometry::contains(s, h, fam[i])) idx.push_back(i);
    return idx;
  };
  const auto in_r = inside(rp.R);
  const auto in_opp = inside(rp.R_opp);
  const geometry::AffineChart chart(s, h);
  auto restrict_all = [&](const std::vector<ProjLine>& fam) {
    std::vector<AffLine> out;
    for (const auto& l : fam)
      if (!geometry::contains(s, h, l)) out.push_back(chart.to_affine(l));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (in_r.size() == 1 && in_opp.size() == 1) {
    AffineRegulusPair ap{chart.aspace(), restrict_all(rp.R), restrict_all(rp.R_opp)};
    return ap;
  }
  if (in_r.empty() && in_opp.empty()) {
    return WdbPlus2Config{chart, restrict_all(rp.R), restrict_all(rp.R_opp)};
  }
  return NotRestrictable{"hyperplane contains " + std::to_string(in_r.size()) + " line(s) of R and " +
                         std::to_string(in_opp.size()) + " of R_opp"};
}

}  // namespace steiner::reguli
