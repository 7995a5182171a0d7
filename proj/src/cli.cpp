#include "steiner/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "steiner/eigenfunctions.hpp"
#include "steiner/error.hpp"
#include "steiner/partitions.hpp"
#include "steiner/reguli.hpp"

namespace steiner::cli {

namespace {

using Json = nlohmann::ordered_json;
using geometry::AffLine;
using geometry::ProjLine;
using linalg::MatGF;
using linalg::Vec;

// Thrown for malformed option values; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint32_t q = 2;
  int n = 3;
  std::string space = "proj";
  std::string out;
  std::string cache;
  unsigned jobs = 1;
  std::uint64_t limit = 0;
  std::string format = "json";
};

class Certificate {
 public:
  Json parameters = Json::object();
  Json result = Json::object();

  void check(const std::string& name, bool passed, Json witness = nullptr) {
    checks_.push_back({{"name", name}, {"passed", passed}, {"witness", std::move(witness)}});
    all_passed_ = all_passed_ && passed;
  }
  bool all_passed() const { return all_passed_; }
  const Json& checks() const { return checks_; }

 private:
  Json checks_ = Json::array();
  bool all_passed_ = true;
};

gf::FieldPtr field_for(std::uint32_t q) {
  if (q < 2) throw UsageError("q must be a prime power");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return gf::Field::make(p, k);
}

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  return out;
}

Vec parse_vec(const gf::Field& f, const std::string& s, std::size_t length) {
  const auto xs = parse_ints(s);
  if (xs.size() != length) throw UsageError("expected " + std::to_string(length) + " coordinates in " + s);
  Vec v;
  for (auto x : xs) {
    if (x < 0 || x >= f.q()) throw UsageError("coordinate " + std::to_string(x) + " is not a field element index");
    v.push_back(gf::FieldElem{static_cast<std::uint32_t>(x)});
  }
  return v;
}

ProjLine parse_proj_line(const geometry::ProjSpace& s, const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("a line is given as two vectors a,b,c,d/e,f,g,h");
  MatGF m(s.field, 0, s.vector_length());
  m.append_row(parse_vec(*s.field, text.substr(0, slash), s.vector_length()));
  m.append_row(parse_vec(*s.field, text.substr(slash + 1), s.vector_length()));
  return geometry::make_line(s, m);
}

std::vector<std::uint32_t> parse_indices(const std::string& s, std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  for (auto x : parse_ints(s)) {
    if (x < 0 || x >= bound) throw UsageError("index " + std::to_string(x) + " out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

Json vec_json(std::span<const gf::FieldElem> v) {
  Json a = Json::array();
  for (auto e : v) a.push_back(e.index);
  return a;
}

Json line_json(const ProjLine& l) {
  Json a = Json::array();
  for (std::size_t r = 0; r < l.basis.rows(); ++r) a.push_back(vec_json(l.basis.row(r)));
  return a;
}

Json line_json(const AffLine& l) { return {{"dir", vec_json(l.dir)}, {"base", vec_json(l.base)}}; }

template <typename Line>
Json lines_json(const std::vector<Line>& ls) {
  Json a = Json::array();
  for (const auto& l : ls) a.push_back(line_json(l));
  return a;
}

Json field_json(const gf::Field& f) {
  return {{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", f.spec().modulus}};
}

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

// The geometry behind a block graph, either projective or affine.
struct Geo {
  std::optional<designs::ProjectiveSystem> ps;
  std::optional<designs::AffineSystem> as;

  const designs::BlockGraph& graph() const { return ps ? ps->graph : as->graph; }
  const designs::Design& design() const { return ps ? ps->design : as->design; }
  Json vertex_json(std::uint32_t u) const { return ps ? line_json(ps->lines[u]) : line_json(as->lines[u]); }
};

Geo make_geo(const Common& c) {
  auto f = field_for(c.q);
  Geo g;
  const std::uint64_t limit = c.limit ? c.limit : geometry::kDefaultEnumerationLimit;
  if (c.space == "proj") {
    g.ps = designs::projective_system(c.n, f, limit);
  } else if (c.space == "aff") {
    g.as = designs::affine_system(c.n, f, limit);
  } else {
    throw UsageError("--space must be proj or aff");
  }
  return g;
}

Json function_json(const Geo& geo, const eigen::Eigenfunction& f) {
  Json values = Json::array();
  for (const auto& [u, x] : f.values) values.push_back({{"vertex", u}, {"line", geo.vertex_json(u)}, {"value", x.str()}});
  return {{"theta", f.theta}, {"support_size", f.support_size()}, {"values", values}};
}

Json srg_json(const designs::SrgParams& p) {
  return {{"v", p.v},     {"k", p.k},     {"lambda", p.lambda}, {"mu", p.mu},
          {"r", p.r},     {"s", p.s},     {"m_r", p.m_r},       {"m_s", p.m_s},
          {"modified_matrix", p.modified_matrix}};
}

designs::SrgParams formula_for(const Common& c) {
  const auto f = field_for(c.q);
  if (c.space == "proj") {
    const geometry::ProjSpace s{c.n, f};
    return designs::srg_params_formula(static_cast<std::int64_t>(geometry::count_points(s)), c.q + 1);
  }
  const geometry::AffSpace s{c.n, f};
  return designs::srg_params_formula(static_cast<std::int64_t>(geometry::count_points(s)), c.q);
}

std::filesystem::path cache_dir(const Common& c) {
  if (const char* env = std::getenv("STEINER_CACHE"); env && *env) return env;
  return c.cache;
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_geometry(const Common& c, bool list, Certificate& cert) {
  auto f = field_for(c.q);
  const std::uint64_t limit = c.limit ? c.limit : geometry::kDefaultEnumerationLimit;
  cert.result["field"] = field_json(*f);
  if (c.space == "proj") {
    const geometry::ProjSpace s{c.n, f};
    const auto pts = geometry::enumerate_points(s, limit);
    const auto lines = geometry::enumerate_lines(s, limit);
    const auto hyps = geometry::enumerate_hyperplanes(s, limit);
    cert.result["points"] = pts.size();
    cert.result["lines"] = lines.size();
    cert.result["hyperplanes"] = hyps.size();
    cert.check("point count matches closed form", pts.size() == geometry::count_points(s));
    cert.check("line count matches closed form", lines.size() == geometry::count_lines(s));
    cert.check("hyperplane count equals point count", hyps.size() == pts.size());
    if (list) {
      Json a = Json::array();
      for (const auto& p : pts) a.push_back(vec_json(p.coords));
      cert.result["point_list"] = a;
      cert.result["line_list"] = lines_json(lines);
    }
  } else {
    const geometry::AffSpace s{c.n, f};
    const auto pts = geometry::enumerate_points(s, limit);
    const auto lines = geometry::enumerate_lines(s, limit);
    const auto planes = geometry::enumerate_planes(s, limit);
    cert.result["points"] = pts.size();
    cert.result["lines"] = lines.size();
    cert.result["planes"] = planes.size();
    cert.check("point count matches closed form", pts.size() == geometry::count_points(s));
    cert.check("line count matches closed form", lines.size() == geometry::count_lines(s));
    if (list) {
      Json a = Json::array();
      for (const auto& p : pts) a.push_back(vec_json(p.coords));
      cert.result["point_list"] = a;
      cert.result["line_list"] = lines_json(lines);
      Json pl = Json::array();
      for (const auto& p : planes) {
        Json dirs = Json::array();
        for (std::size_t r = 0; r < p.directions.rows(); ++r) dirs.push_back(vec_json(p.directions.row(r)));
        pl.push_back({{"directions", dirs}, {"base", vec_json(p.base)}});
      }
      cert.result["plane_list"] = pl;
    }
  }
}

void cmd_blockgraph(const Common& c, Certificate& cert, std::ostream& err) {
  const auto formula = formula_for(c);
  std::optional<designs::BlockGraph> g;
  std::filesystem::path file;
  if (auto dir = cache_dir(c); !dir.empty()) {
    file = dir / graph_cache_name(c.space, c.n, c.q);
    g = load_graph_cache(file);
    err << (g ? "cache hit: " : "cache miss: ") << file.string() << "\n";
  }
  if (!g) {
    g = make_geo(c).graph();
    if (!file.empty()) {
      std::filesystem::create_directories(file.parent_path());
      save_graph_cache(file, *g);
      const auto reread = load_graph_cache(file);
      cert.check("cache round-trip reproduces the graph", reread && *reread == *g);
    }
  }
  const auto brute = designs::srg_params_brute(*g);
  cert.result["v"] = g->order();
  cert.result["k"] = brute.k;
  cert.result["srg"] = srg_json(brute);
  cert.result["checksum"] = hex(g->checksum());
  cert.check("brute-force parameters match the formula", brute == formula);
}

void cmd_srg(const Common& c, Certificate& cert) {
  const Geo geo = make_geo(c);
  const auto formula = formula_for(c);
  const auto brute = designs::srg_params_brute(geo.graph());
  const auto spectrum = designs::srg_spectrum(brute.v, brute.k, brute.lambda, brute.mu);
  cert.result["brute_force"] = srg_json(brute);
  cert.result["formula"] = srg_json(formula);
  cert.result["spectrum"] = Json::array({{{"eigenvalue", brute.k}, {"multiplicity", 1}},
                                         {{"eigenvalue", brute.r}, {"multiplicity", brute.m_r}},
                                         {{"eigenvalue", brute.s}, {"multiplicity", brute.m_s}}});
  cert.check("brute-force parameters match the formula", brute == formula);
  cert.check("spectrum from parameters matches", spectrum == brute);
  const auto del = designs::delsarte_check(geo.graph(), geo.design());
  cert.result["clique_bound"] = del.bound;
  cert.check("pencils meet the clique bound", del.pencils_meet_bound);
}

void cmd_wdb(const Common& c, std::int64_t theta, Certificate& cert) {
  const auto p = formula_for(c);
  cert.parameters["theta"] = theta;
  const auto w = designs::wdb(p, theta);
  const auto closed = designs::wdb_closed_form(p, theta);
  cert.result["srg"] = srg_json(p);
  cert.result["wdb"] = w;
  cert.result["closed_form"] = closed;
  cert.check("bound equals closed form", w == closed);
}

void regulus_checks(const designs::ProjectiveSystem* sys, const reguli::RegulusPair& rp, Certificate& cert) {
  const auto bad = reguli::regulus_pair_violation(rp);
  cert.check("regulus axioms", !bad, bad ? Json(*bad) : Json(nullptr));
  const auto& s = rp.ambient;
  const auto swapped = reguli::regulus_through(s, rp.R_opp[0], rp.R_opp[1], rp.R_opp[2]);
  cert.check("opposite of the opposite", swapped.R == rp.R_opp && swapped.R_opp == rp.R);
  if (sys) {
    const auto f = eigen::optimal_from_regulus(*sys, rp);
    const auto params = designs::srg_params_brute(sys->graph);
    cert.result["eigenvalue"] = f.theta;
    cert.result["support_size"] = f.support_size();
    cert.check("eigenfunction verifies", eigen::verify_eigenfunction(sys->graph, f).ok);
    cert.check("support equals the bound", static_cast<std::int64_t>(f.support_size()) == designs::wdb(params, f.theta));
  }
}

void cmd_regulus(const Common& c, const std::vector<std::string>& line_args, Certificate& cert) {
  if (line_args.size() != 3) throw UsageError("give exactly three --line options");
  const geometry::ProjSpace s = geometry::make_proj_space(c.n, field_for(c.q));
  std::vector<ProjLine> ls;
  for (const auto& a : line_args) ls.push_back(parse_proj_line(s, a));
  cert.parameters["lines"] = lines_json(ls);
  const auto rp = reguli::regulus_through(s, ls[0], ls[1], ls[2]);
  cert.result["R"] = lines_json(rp.R);
  cert.result["R_opp"] = lines_json(rp.R_opp);
  const auto rev = reguli::regulus_through(s, ls[2], ls[0], ls[1]);
  cert.check("independent of argument order", rev == rp);
  std::optional<designs::ProjectiveSystem> sys;
  if (c.n == 3) sys = designs::projective_system(3, s.field);
  regulus_checks(sys ? &*sys : nullptr, rp, cert);
}

void cmd_affine_regulus(const Common& c, const std::string& a1, const std::string& a2, const std::string& a3,
                        Certificate& cert) {
  const geometry::AffSpace s = geometry::make_aff_space(c.n, field_for(c.q));
  const Vec v1 = parse_vec(*s.field, a1, s.vector_length());
  const Vec v2 = parse_vec(*s.field, a2, s.vector_length());
  const Vec v3 = parse_vec(*s.field, a3, s.vector_length());
  const auto ap = reguli::affine_regulus_construct(s, v1, v2, v3);
  const auto lift = reguli::projective_lift(ap);
  cert.result["S"] = lines_json(ap.S);
  cert.result["S_opp"] = lines_json(ap.S_opp);
  cert.result["lift"] = {{"R", lines_json(lift.R)}, {"R_opp", lines_json(lift.R_opp)}};
  const auto bad = reguli::affine_pair_violation(ap);
  cert.check("affine regulus invariants and projective lift", !bad, bad ? Json(*bad) : Json(nullptr));
  if (geometry::count_lines(s) <= 20000) {
    const auto sys = designs::affine_system(c.n, s.field);
    const auto f = eigen::optimal_from_affine_regulus(sys, ap);
    cert.result["eigenvalue"] = f.theta;
    cert.result["support_size"] = f.support_size();
    cert.check("eigenfunction verifies", eigen::verify_eigenfunction(sys.graph, f).ok);
  }
}

void cmd_enumerate_reguli(const Common& c, bool list, Certificate& cert, std::ostream& err) {
  const auto sys = designs::projective_system(3, field_for(c.q));
  const auto pairs = reguli::enumerate_regulus_index_pairs(sys);
  const std::uint64_t q = c.q;
  const std::uint64_t quadrics = q * q * q * q * (q * q + 1) * (q * q * q - 1) / 2;
  cert.result["ordered"] = pairs.size();
  cert.result["unordered"] = pairs.size() / 2;
  cert.result["convention"] = "each regulus is listed with its opposite; both orientations appear";
  cert.check("ordered count is twice the number of hyperbolic quadrics", pairs.size() == 2 * quadrics,
             {{"expected", 2 * quadrics}});
  if (q <= 3) {
    err << "verifying " << pairs.size() << " regulus pairs\n";
    const auto full = reguli::enumerate_reguli(sys);
    std::size_t bad = 0;
    for (const auto& rp : full) bad += reguli::regulus_pair_violation(rp).has_value();
    cert.check("every pair satisfies the regulus axioms", bad == 0, {{"violations", bad}});
    const auto k = eigen::enumerate_complete_bipartite(sys.graph, c.q + 1);
    cert.result["induced_complete_bipartite"] = k.size();
    cert.check("unordered count equals induced K_{q+1,q+1} count", k.size() == pairs.size() / 2);
  }
  if (list) {
    Json a = Json::array();
    for (const auto& p : pairs) {
      std::vector<ProjLine> r, o;
      for (auto i : p.R) r.push_back(sys.lines[i]);
      for (auto i : p.R_opp) o.push_back(sys.lines[i]);
      a.push_back({{"R", lines_json(r)}, {"R_opp", lines_json(o)}});
    }
    cert.result["reguli"] = a;
  }
}

void cmd_enumerate_affine_reguli(const Common& c, bool list, Certificate& cert) {
  const auto sys = designs::affine_system(3, field_for(c.q));
  const auto census = reguli::enumerate_affine_reguli(sys);
  const std::uint64_t q = c.q;
  const std::uint64_t formula = q * q * q * q * (q * q * q - 1) * (q + 1);
  cert.result["ordered_pairs"] = census.ordered_count;
  cert.result["unordered_sets"] = census.unordered_set_count;
  cert.result["quadrics"] = census.quadric_count;
  cert.result["formula"] = formula;
  cert.result["conventions"] = {
      {"ordered_pairs", "ordered pairs (S, S_opp); compared with q^4 (q^3 - 1)(q + 1)"},
      {"unordered_sets", "distinct families S"},
      {"quadrics", "distinct unordered {S, S_opp}"}};
  cert.check("ordered count matches q^4 (q^3 - 1)(q + 1)", census.ordered_count == formula);
  std::size_t bad = 0;
  for (const auto& ap : census.ordered_pairs) bad += reguli::affine_pair_violation(ap).has_value();
  cert.check("every pair passes the axioms and the lift check", bad == 0, {{"violations", bad}});
  if (list) {
    Json a = Json::array();
    for (const auto& ap : census.ordered_pairs) a.push_back({{"S", lines_json(ap.S)}, {"S_opp", lines_json(ap.S_opp)}});
    cert.result["pairs"] = a;
  }
}

void cmd_enumerate_optimal(const Common& c, Certificate& cert) {
  if (c.n != 3) throw UsageError("enumerate-optimal works in dimension 3");
  const Geo geo = make_geo(c);
  const auto params = designs::srg_params_brute(geo.graph());
  const auto a = static_cast<std::uint32_t>(-params.s);
  const auto pairs = eigen::enumerate_complete_bipartite(geo.graph(), a);
  cert.result["part_size"] = a;
  cert.result["pairs"] = pairs.size();
  std::size_t type1 = 0, type2 = 0, grassmann = 0, unclassified = 0, failed = 0;
  for (const auto& p : pairs) {
    const auto f = eigen::from_bipartite_pair(geo.graph(), p.T0, p.T1, params.s);
    if (static_cast<std::int64_t>(f.support_size()) != designs::wdb(params, params.s)) ++failed;
    try {
      const auto cls = geo.ps ? eigen::classify_optimal(*geo.ps, f) : eigen::classify_optimal(*geo.as, f);
      if (std::holds_alternative<eigen::Type1>(cls)) ++type1;
      if (std::holds_alternative<eigen::Type2>(cls)) ++type2;
      if (std::holds_alternative<eigen::GrassmannRegulus>(cls)) ++grassmann;
    } catch (const Error&) {
      ++unclassified;
    }
  }
  cert.check("every pair gives an eigenfunction with support at the bound", failed == 0);
  cert.check("no mixed or unclassified pairs", unclassified == 0, {{"unclassified", unclassified}});
  if (geo.ps) {
    cert.result["regulus_type"] = grassmann;
    const auto reg = reguli::enumerate_regulus_index_pairs(*geo.ps);
    cert.check("pairs match unordered reguli", pairs.size() == reg.size() / 2, {{"ordered_reguli", reg.size()}});
  } else {
    cert.result["type1"] = type1;
    cert.result["type2"] = type2;
    const auto planes = geometry::enumerate_planes(geo.as->space).size();
    const std::size_t class_pairs = (c.q + 1) * c.q / 2;
    cert.check("type 1 count equals planes x class pairs", type1 == planes * class_pairs,
               {{"planes", planes}, {"class_pairs", class_pairs}});
    const auto census = reguli::enumerate_affine_reguli(*geo.as);
    cert.check("type 2 count equals ordered affine reguli / 2", 2 * type2 == census.ordered_count,
               {{"ordered_affine_reguli", census.ordered_count}});
  }
}

eigen::Eigenfunction parse_function(std::int64_t theta, const std::string& spec, std::uint32_t order) {
  eigen::Eigenfunction f;
  f.theta = theta;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("values are vertex:value pairs");
    const auto u = parse_indices(item.substr(0, colon), order);
    eigen::Rational x;
    try {
      x = eigen::Rational(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad value " + item.substr(colon + 1));
    }
    if (x != 0) f.values[u[0]] = x;
  }
  return f;
}

void cmd_verify(const Common& c, std::int64_t theta, const std::string& values, Certificate& cert) {
  const Geo geo = make_geo(c);
  const auto f = parse_function(theta, values, geo.graph().order());
  cert.parameters["theta"] = theta;
  cert.parameters["values"] = values;
  const auto res = eigen::verify_eigenfunction(geo.graph(), f);
  cert.result["function"] = function_json(geo, f);
  cert.result["eigenfunction"] = res.ok;
  Json w = nullptr;
  if (res.witness) w = {{"vertex", res.witness->u}, {"lhs", res.witness->lhs.str()}, {"rhs", res.witness->rhs.str()}};
  cert.check("eigen-equation at every vertex", res.ok, w);
}

void cmd_wdbplus2(const Common& c, Certificate& cert, std::ostream& err) {
  const auto f = field_for(c.q);
  const auto psys = designs::projective_system(3, f);
  const auto asys = designs::affine_system(3, f);
  const auto hyps = geometry::enumerate_hyperplanes(psys.space);
  const auto regs = reguli::enumerate_reguli(psys);
  const auto params = designs::srg_params_brute(asys.graph);
  std::size_t pairs = 0, bad_verify = 0, bad_support = 0, bad_shape = 0;
  std::map<std::vector<std::pair<std::uint32_t, eigen::Rational>>, std::size_t> seen;
  bool truncated = false;
  for (const auto& rp : regs) {
    for (const auto& h : hyps) {
      if (!std::holds_alternative<reguli::WdbPlus2Config>(reguli::regulus_restriction(rp, h))) continue;
      if (c.limit && pairs >= c.limit) {
        truncated = true;
        break;
      }
      auto fn = eigen::wdbplus2_function(asys, rp, h);
      ++pairs;
      bad_verify += !eigen::verify_eigenfunction(asys.graph, fn).ok;
      bad_support += fn.support_size() != 2 * (c.q + 1);
      bad_shape += eigen::support_structure(asys.graph, fn).kind != eigen::SupportStructure::Kind::BipartiteMinusMatching;
      fn.normalize();
      ++seen[{fn.values.begin(), fn.values.end()}];
    }
    if (truncated) break;
  }
  err << pairs << " (regulus, hyperplane) pairs processed\n";
  std::size_t max_mult = 0;
  for (const auto& [k, m] : seen) max_mult = std::max(max_mult, m);
  cert.result["eigenvalue"] = -static_cast<std::int64_t>(c.q);
  cert.result["pairs"] = pairs;
  cert.result["complete"] = !truncated;
  cert.result["distinct_functions_up_to_sign"] = seen.size();
  cert.result["max_pairs_per_function"] = max_mult;
  cert.result["wdb"] = designs::wdb(params, params.s);
  cert.check("every function verifies", bad_verify == 0, {{"failures", bad_verify}});
  cert.check("support is 2(q+1)", bad_support == 0, {{"failures", bad_support}});
  cert.check("support induces K_{q+1,q+1} minus a perfect matching", bad_shape == 0, {{"failures", bad_shape}});
}

Json state_json(const eigen::SearchState& s) {
  Json fs = Json::array();
  for (const auto& f : s.functions) {
    Json vals = Json::array();
    for (const auto& [u, x] : f.values) vals.push_back({u, x.str()});
    fs.push_back(vals);
  }
  Json fams = Json::array();
  for (const auto& fam : s.families) {
    Json basis = Json::array();
    for (const auto& b : fam.basis) {
      Json row = Json::array();
      for (const auto& x : b) row.push_back(x.str());
      basis.push_back(row);
    }
    Json rep = Json::array();
    for (const auto& [u, x] : fam.representative.values) rep.push_back({u, x.str()});
    fams.push_back({{"support", fam.support}, {"basis", basis}, {"representative", rep}});
  }
  return {{"schema_version", kSchemaVersion},
          {"theta", s.theta},
          {"target", s.target},
          {"order", s.order},
          {"cursors", s.cursors},
          {"examined", s.examined},
          {"pruned", s.pruned},
          {"rank_filtered", s.rank_filtered},
          {"functions", fs},
          {"families", fams}};
}

eigen::SearchState state_from_json(const Json& j) {
  eigen::SearchState s;
  s.theta = j.at("theta").get<std::int64_t>();
  s.target = j.at("target").get<std::uint32_t>();
  s.order = j.at("order").get<std::uint32_t>();
  s.cursors = j.at("cursors").get<std::vector<std::vector<std::uint32_t>>>();
  s.examined = j.at("examined").get<std::uint64_t>();
  s.pruned = j.at("pruned").get<std::uint64_t>();
  s.rank_filtered = j.at("rank_filtered").get<std::uint64_t>();
  for (const auto& fj : j.at("functions")) {
    eigen::Eigenfunction f;
    f.theta = s.theta;
    for (const auto& e : fj) f.values[e.at(0).get<std::uint32_t>()] = eigen::Rational(e.at(1).get<std::string>());
    s.functions.push_back(std::move(f));
  }
  for (const auto& fj : j.at("families")) {
    eigen::SupportFamily fam;
    fam.support = fj.at("support").get<std::vector<std::uint32_t>>();
    for (const auto& row : fj.at("basis")) {
      std::vector<linalg::BigInt> b;
      for (const auto& x : row) b.emplace_back(x.get<std::string>());
      fam.basis.push_back(std::move(b));
    }
    fam.representative.theta = s.theta;
    for (const auto& e : fj.at("representative"))
      fam.representative.values[e.at(0).get<std::uint32_t>()] = eigen::Rational(e.at(1).get<std::string>());
    s.families.push_back(std::move(fam));
  }
  return s;
}

int cmd_search(const Common& c, std::int64_t theta, std::uint32_t size, const std::string& mode,
               const std::string& checkpoint, const std::string& resume, Certificate& cert, std::ostream& err) {
  Common gc = c;
  gc.limit = 0;  // --limit bounds the number of supports here
  const Geo geo = make_geo(gc);
  eigen::SearchOptions opt;
  if (mode == "exhaustive") {
    opt.mode = eigen::SearchMode::Exhaustive;
  } else if (mode == "prune") {
    opt.mode = eigen::SearchMode::BranchAndPrune;
  } else {
    throw UsageError("--mode must be exhaustive or prune");
  }
  opt.jobs = c.jobs;
  opt.max_candidates = c.limit;
  opt.progress = [&err](std::uint64_t n) {
    if ((n & 0x3FFFF) == 0) err << "examined " << n << " supports\n";
  };
  cert.parameters["theta"] = theta;
  cert.parameters["size"] = size;
  cert.parameters["mode"] = mode;

  eigen::SearchResult res;
  if (!resume.empty()) {
    std::ifstream in(resume);
    if (!in) throw UsageError("cannot read checkpoint " + resume);
    auto state = state_from_json(Json::parse(in));
    if (state.theta != theta || state.target != size) throw UsageError("checkpoint was made for another search");
    res = eigen::resume_min_support(geo.graph(), std::move(state), opt);
  } else {
    res = eigen::search_min_support(geo.graph(), theta, size, opt);
  }
  const auto& st = res.state;
  if (!res.complete) {
    const std::string file = checkpoint.empty() ? "search-checkpoint.json" : checkpoint;
    std::ofstream(file) << state_json(st).dump(1) << "\n";
    err << "limit reached after " << st.examined << " supports; checkpoint written to " << file << "\n";
  }

  std::map<std::string, std::size_t> census;
  Json fs = Json::array();
  std::size_t bad = 0;
  for (const auto& f : st.functions) {
    const auto kind = std::string(eigen::to_string(eigen::support_structure(geo.graph(), f).kind));
    ++census[kind];
    bad += !eigen::verify_eigenfunction(geo.graph(), f).ok;
    Json fj = function_json(geo, f);
    fj["structure"] = kind;
    fs.push_back(fj);
  }
  Json fams = Json::array();
  for (const auto& fam : st.families) {
    bad += !eigen::verify_eigenfunction(geo.graph(), fam.representative).ok;
    Json fj = function_json(geo, fam.representative);
    fj["kernel_dimension"] = fam.basis.size();
    fams.push_back(fj);
  }
  std::set<std::vector<std::pair<std::uint32_t, eigen::Rational>>> keys;
  for (const auto& f : st.functions) keys.insert({f.values.begin(), f.values.end()});

  cert.result["label"] = "computational finding";
  cert.result["complete"] = res.complete;
  cert.result["examined"] = st.examined;
  cert.result["pruned"] = st.pruned;
  cert.result["rank_filtered"] = st.rank_filtered;
  cert.result["functions_up_to_sign"] = st.functions.size();
  cert.result["signed_functions"] = 2 * st.functions.size();
  cert.result["families"] = st.families.size();
  cert.result["census"] = census;
  cert.result["function_list"] = fs;
  cert.result["family_list"] = fams;
  cert.check("every returned function re-verifies", bad == 0, {{"failures", bad}});
  cert.check("no duplicates", keys.size() == st.functions.size());

  if (res.complete && geo.as && c.n == 3 && c.q == 2 && theta == -2 && size == 6) {
    const auto psys = designs::projective_system(3, geo.as->space.field);
    const auto wc = eigen::wdbplus2_census(psys, *geo.as);
    std::size_t missing = 0;
    for (const auto& f : wc.functions) missing += !keys.count({f.values.begin(), f.values.end()});
    cert.result["wdbplus2_instances"] = wc.distinct_functions;
    cert.check("every wdbplus2 instance is found", missing == 0, {{"missing", missing}});
  }
  return res.complete ? kOk : kResource;
}

partitions::Partition2 named_partition(const Geo& geo, const std::string& set, std::int64_t star, const std::string& plane,
                                       const std::string& direction, Json& described) {
  const auto order = geo.graph().order();
  std::vector<std::uint32_t> V1;
  int given = !set.empty() + (star >= 0) + !plane.empty() + !direction.empty();
  if (given != 1) throw UsageError("give exactly one of --set, --star, --plane, --direction");
  if (!set.empty()) {
    V1 = parse_indices(set, order);
    described = {{"set", V1}};
  } else if (star >= 0) {
    if (!geo.ps) throw UsageError("--star needs --space proj");
    V1 = partitions::star(*geo.ps, static_cast<std::uint32_t>(star));
    described = {{"star", vec_json(geo.ps->points.at(static_cast<std::size_t>(star)).coords)}};
  } else if (!plane.empty()) {
    if (!geo.ps) throw UsageError("--plane needs --space proj");
    const auto h = geometry::make_hyperplane(geo.ps->space, parse_vec(*geo.ps->space.field, plane, geo.ps->space.vector_length()));
    V1 = partitions::plane_lines(*geo.ps, h);
    described = {{"hyperplane", vec_json(h.normal)}};
  } else {
    if (!geo.as) throw UsageError("--direction needs --space aff");
    const auto d = parse_vec(*geo.as->space.field, direction, geo.as->space.vector_length());
    V1 = partitions::parallel_class_lines(*geo.as, d);
    described = {{"direction", vec_json(geometry::normalize(*geo.as->space.field, d))}};
  }
  return partitions::make_partition(order, V1);
}

Json quotient_json(const partitions::QuotientMatrix& Q) {
  return Json::array({Json::array({Q.p11, Q.p12}), Json::array({Q.p21, Q.p22})});
}

void cmd_equitable(const Common& c, const std::string& set, std::int64_t star, const std::string& plane,
                   const std::string& direction, Certificate& cert) {
  const Geo geo = make_geo(c);
  Json described;
  const auto p = named_partition(geo, set, star, plane, direction, described);
  cert.parameters["partition"] = described;
  cert.result["V1_size"] = p.V1.size();
  try {
    const auto Q = partitions::quotient_matrix(geo.graph(), p);
    const auto ev = partitions::partition_eigenvalue(Q);
    cert.result["quotient"] = quotient_json(Q);
    cert.result["theta"] = ev.theta;
    cert.result["principal"] = ev.principal;
    cert.check("equitable", true);
    if (!ev.principal) {
      const auto f = partitions::partition_to_eigenfunction(geo.graph(), p);
      cert.result["values"] = {f.value(p.V1[0]).str(), f.value(p.V2[0]).str()};
      cert.check("two-valued function verifies", eigen::verify_eigenfunction(geo.graph(), f).ok);
      const auto back = partitions::eigenfunction_to_partition(geo.graph(), f);
      cert.check("round trip returns the partition", back.partition == p && back.quotient == Q);
    }
  } catch (const partitions::NotEquitable& e) {
    const auto& w = e.witness();
    cert.result["equitable"] = false;
    cert.check("equitable", false,
               {{"part", w.part}, {"u", w.u}, {"w", w.w}, {"neighbours_in_V1", Json::array({w.count_u, w.count_w})}});
  }
}

void cmd_balance(const Common& c, std::int64_t star, const std::string& plane, Certificate& cert) {
  Common pc = c;
  pc.space = "proj";
  pc.n = 3;
  const Geo geo = make_geo(pc);
  const auto& sys = *geo.ps;
  std::vector<std::pair<Json, partitions::Partition2>> parts;
  if (star >= 0 || !plane.empty()) {
    Json d;
    parts.emplace_back(Json(), named_partition(geo, "", star, plane, "", d));
    parts.back().first = d;
  } else {
    for (std::uint32_t p = 0; p < sys.points.size(); ++p)
      parts.emplace_back(Json{{"star", vec_json(sys.points[p].coords)}},
                         partitions::make_partition(sys.graph.order(), partitions::star(sys, p)));
    for (const auto& h : geometry::enumerate_hyperplanes(sys.space))
      parts.emplace_back(Json{{"hyperplane", vec_json(h.normal)}},
                         partitions::make_partition(sys.graph.order(), partitions::plane_lines(sys, h)));
  }
  const auto regs = reguli::enumerate_regulus_index_pairs(sys);
  const std::int64_t s = -static_cast<std::int64_t>(c.q) - 1;
  std::size_t tested = 0, unequal = 0;
  Json first_failure = nullptr;
  for (const auto& [desc, p] : parts) {
    const auto theta = partitions::partition_eigenvalue(partitions::quotient_matrix(sys.graph, p)).theta;
    for (const auto& r : regs) {
      eigen::Eigenfunction f1;
      f1.theta = s;
      for (auto u : r.R) f1.values[u] = 1;
      for (auto u : r.R_opp) f1.values[u] = -1;
      const auto rep = partitions::balance_check(sys.graph, f1, {f1}, p, theta);
      ++tested;
      if (!rep.equal) {
        ++unequal;
        if (first_failure.is_null()) first_failure = {{"partition", desc}, {"m_plus", rep.m_plus}, {"m_minus", rep.m_minus}};
      }
    }
  }
  cert.result["partitions"] = parts.size();
  cert.result["reguli"] = regs.size();
  cert.result["pairs_tested"] = tested;
  cert.check("m+ equals m- for every pair", unequal == 0, first_failure);
}

void cmd_cameron_liebler(const Common& c, const std::string& set, std::int64_t star, const std::string& plane,
                         bool complement, std::size_t random_sets, std::uint64_t seed, Certificate& cert) {
  Common pc = c;
  pc.space = "proj";
  pc.n = 3;
  const Geo geo = make_geo(pc);
  const auto& sys = *geo.ps;
  const auto regs = reguli::enumerate_regulus_index_pairs(sys);
  std::vector<std::pair<Json, std::vector<std::uint32_t>>> sets;
  if (random_sets == 0) {
    Json d;
    std::vector<std::uint32_t> L;
    if (set == "all") {
      for (std::uint32_t i = 0; i < sys.lines.size(); ++i) L.push_back(i);
      d = {{"set", "all"}};
    } else {
      L = named_partition(geo, set, star, plane, "", d).V1;
    }
    if (complement) {
      std::vector<bool> in(sys.lines.size());
      for (auto u : L) in[u] = true;
      L.clear();
      for (std::uint32_t i = 0; i < sys.lines.size(); ++i)
        if (!in[i]) L.push_back(i);
      d["complement"] = true;
    }
    sets.emplace_back(d, L);
  } else {
    std::mt19937_64 rng(seed);
    cert.parameters["random_sets"] = random_sets;
    cert.parameters["seed"] = seed;
    for (std::size_t i = 0; i < random_sets; ++i) {
      std::vector<std::uint32_t> L;
      for (std::uint32_t u = 0; u < sys.lines.size(); ++u)
        if (rng() & 1) L.push_back(u);
      sets.emplace_back(Json{{"random", i}}, L);
    }
  }
  Json verdicts = Json::array();
  std::size_t disagreements = 0, cl = 0;
  for (const auto& [d, L] : sets) {
    const auto v = partitions::cameron_liebler_check(sys, regs, L);
    Json vj = {{"set", d}, {"size", L.size()}, {"method_a", v.method_a}, {"method_b", v.method_b}};
    if (v.a_witness) {
      const auto& r = regs[v.a_witness->regulus];
      std::vector<ProjLine> R;
      for (auto u : r.R) R.push_back(sys.lines[u]);
      vj["regulus_witness"] = {{"R", lines_json(R)}, {"in_R", v.a_witness->in_R}, {"in_R_opp", v.a_witness->in_R_opp}};
    }
    if (v.quotient) vj["quotient"] = quotient_json(*v.quotient);
    if (v.b_witness) vj["equitable_witness"] = {{"u", v.b_witness->u}, {"w", v.b_witness->w}, {"part", v.b_witness->part}};
    verdicts.push_back(vj);
    disagreements += !v.agree();
    cl += v.method_a && v.method_b;
  }
  cert.result["theta"] = designs::srg_params_brute(sys.graph).r;
  cert.result["cameron_liebler"] = cl;
  cert.result["verdicts"] = verdicts;
  cert.check("both methods agree", disagreements == 0, {{"disagreements", disagreements}});
}

void print_text(const Json& cert, std::ostream& out) {
  out << cert["command"].get<std::string>() << "\n";
  for (const auto& [k, v] : cert["result"].items()) {
    if (v.is_array() && v.size() > 8) {
      out << "  " << k << ": [" << v.size() << " entries]\n";
    } else {
      out << "  " << k << ": " << v.dump() << "\n";
    }
  }
  for (const auto& ch : cert["checks"]) {
    out << (ch["passed"].get<bool>() ? "  PASS " : "  FAIL ") << ch["name"].get<std::string>();
    if (!ch["witness"].is_null()) out << " " << ch["witness"].dump();
    out << "\n";
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::LimitExceeded: return kResource;
    case ErrorCode::NonPrime:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::EqualPoints:
    case ErrorCode::DependentVectors:
    case ErrorCode::LinesNotSkew:
    case ErrorCode::NotCoplanar3Flat:
    case ErrorCode::PointOnLine:
    case ErrorCode::WrongCount:
    case ErrorCode::NotAnEigenvalue:
    case ErrorCode::SymmetricDesign:
      return kUsage;
    default: return kCheckFailed;
  }
}

}  // namespace

std::string graph_cache_name(const std::string& space, int n, std::uint32_t q) {
  return "blockgraph-" + space + "-n" + std::to_string(n) + "-q" + std::to_string(q) + ".json";
}

void save_graph_cache(const std::filesystem::path& file, const designs::BlockGraph& g) {
  Json adj = Json::array();
  for (std::uint32_t u = 0; u < g.order(); ++u) adj.push_back(g.neighbours(u).indices());
  Json j = {{"schema_version", kSchemaVersion}, {"v", g.order()}, {"checksum", hex(g.checksum())}, {"adjacency", adj}};
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + file.string());
  out << j.dump() << "\n";
}

std::optional<designs::BlockGraph> load_graph_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("schema_version") != kSchemaVersion) return std::nullopt;
    const auto v = j.at("v").get<std::uint32_t>();
    const auto& adj = j.at("adjacency");
    if (adj.size() != v) return std::nullopt;
    std::vector<Bitset> rows(v, Bitset(v));
    for (std::uint32_t u = 0; u < v; ++u)
      for (const auto& w : adj[u]) {
        const auto x = w.get<std::uint32_t>();
        if (x >= v) return std::nullopt;
        rows[u].set(x);
      }
    auto g = designs::BlockGraph::from_rows(std::move(rows));
    if (hex(g.checksum()) != j.at("checksum").get<std::string>()) return std::nullopt;
    return g;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite geometries, block graphs and their eigenfunctions", "steiner"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "field order (prime power)");
    sub->add_option("--n", c.n, "dimension");
    sub->add_option("--space", c.space, "proj or aff")->check(CLI::IsMember({"proj", "aff"}));
    sub->add_option("--out", c.out, "write the JSON certificate to this file");
    sub->add_option("--cache", c.cache, "cache directory (STEINER_CACHE overrides)");
    sub->add_option("--jobs", c.jobs, "worker threads");
    sub->add_option("--limit", c.limit, "resource limit (0: default)");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  bool list = false;
  std::int64_t theta = 0;
  std::vector<std::string> line_args;
  std::string v1, v2, v3, values, mode = "prune", checkpoint, resume, set, plane, direction;
  std::uint32_t size = 0;
  std::int64_t star = -1;
  bool complement = false;
  std::size_t random_sets = 0;
  std::uint64_t seed = 1;

  std::map<std::string, std::function<int(Certificate&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<int(Certificate&)> h) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s);
    handlers[name] = std::move(h);
    return s;
  };

  sub("geometry", "enumerate points, lines and planes", [&](Certificate& cert) {
    cmd_geometry(c, list, cert);
    return 0;
  })->add_flag("--list", list, "include the full lists");
  sub("blockgraph", "build (or load) a block graph and its parameters", [&](Certificate& cert) {
    cmd_blockgraph(c, cert, err);
    return 0;
  });
  sub("srg", "strongly regular parameters by formula and brute force", [&](Certificate& cert) {
    cmd_srg(c, cert);
    return 0;
  });
  sub("wdb", "weight-distribution bound", [&](Certificate& cert) {
    cmd_wdb(c, theta, cert);
    return 0;
  })->add_option("--theta", theta)->required();
  sub("regulus", "regulus through three skew lines", [&](Certificate& cert) {
    cmd_regulus(c, line_args, cert);
    return 0;
  })->add_option("--line", line_args, "a,b,c,d/e,f,g,h (element indices)")->required();
  {
    auto* s = sub("affine-regulus", "affine regulus pair from three independent vectors", [&](Certificate& cert) {
      cmd_affine_regulus(c, v1, v2, v3, cert);
      return 0;
    });
    s->add_option("--v1", v1)->required();
    s->add_option("--v2", v2)->required();
    s->add_option("--v3", v3)->required();
  }
  sub("enumerate-reguli", "all reguli of PG(3,q)", [&](Certificate& cert) {
    cmd_enumerate_reguli(c, list, cert, err);
    return 0;
  })->add_flag("--list", list);
  sub("enumerate-affine-reguli", "all affine reguli of AG(3,q)", [&](Certificate& cert) {
    cmd_enumerate_affine_reguli(c, list, cert);
    return 0;
  })->add_flag("--list", list);
  sub("enumerate-optimal", "induced K_{a,a} and their classification", [&](Certificate& cert) {
    cmd_enumerate_optimal(c, cert);
    return 0;
  });
  {
    auto* s = sub("verify-eigenfunction", "check the eigen-equation at every vertex", [&](Certificate& cert) {
      cmd_verify(c, theta, values, cert);
      return 0;
    });
    s->add_option("--theta", theta)->required();
    s->add_option("--values", values, "vertex:value,... (rationals allowed)")->required();
  }
  sub("wdbplus2", "support-2(q+1) functions from reguli and avoiding planes", [&](Certificate& cert) {
    cmd_wdbplus2(c, cert, err);
    return 0;
  });
  {
    auto* s = sub("search-support", "all eigenfunctions with a given support size", [&](Certificate& cert) {
      return cmd_search(c, theta, size, mode, checkpoint, resume, cert, err);
    });
    s->add_option("--theta", theta)->required();
    s->add_option("--size", size)->required();
    s->add_option("--mode", mode, "exhaustive or prune")->check(CLI::IsMember({"exhaustive", "prune"}));
    s->add_option("--checkpoint", checkpoint, "where to write the checkpoint when the limit is hit");
    s->add_option("--resume", resume, "continue from a checkpoint");
  }
  auto add_partition_opts = [&](CLI::App* s, bool with_direction) {
    s->add_option("--set", set, "comma-separated vertex indices");
    s->add_option("--star", star, "point index: all lines through it");
    s->add_option("--plane", plane, "hyperplane normal: all lines inside it");
    if (with_direction) s->add_option("--direction", direction, "all affine lines with this direction");
  };
  add_partition_opts(sub("equitable", "quotient matrix of a 2-partition",
                         [&](Certificate& cert) {
                           cmd_equitable(c, set, star, plane, direction, cert);
                           return 0;
                         }),
                     true);
  {
    auto* s = sub("balance", "balance condition for regulus eigenfunctions", [&](Certificate& cert) {
      cmd_balance(c, star, plane, cert);
      return 0;
    });
    s->add_option("--star", star);
    s->add_option("--plane", plane);
  }
  {
    auto* s = sub("cameron-liebler", "Cameron-Liebler test by reguli and by equitability", [&](Certificate& cert) {
      cmd_cameron_liebler(c, set, star, plane, complement, random_sets, seed, cert);
      return 0;
    });
    add_partition_opts(s, false);
    s->add_flag("--complement", complement);
    s->add_option("--random", random_sets, "test this many random line sets");
    s->add_option("--seed", seed);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Certificate cert;
  cert.parameters["q"] = c.q;
  cert.parameters["n"] = c.n;
  cert.parameters["space"] = c.space;
  // Commands tied to a 3-dimensional space record the space they actually use.
  static const std::map<std::string, std::string> fixed_space = {{"enumerate-reguli", "proj"},
                                                                 {"enumerate-affine-reguli", "aff"},
                                                                 {"balance", "proj"},
                                                                 {"cameron-liebler", "proj"}};
  if (const auto it = fixed_space.find(name); it != fixed_space.end()) {
    cert.parameters["space"] = it->second;
    cert.parameters["n"] = 3;
  }
  if (c.limit) cert.parameters["limit"] = c.limit;
  int code = kOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = handlers.at(name)(cert);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  Json j = {{"schema_version", kSchemaVersion},
            {"command", name},
            {"parameters", cert.parameters},
            {"result", cert.result},
            {"checks", cert.checks()},
            {"timing_ms", ms.count()}};
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) {
      err << "cannot write " << c.out << "\n";
      return kUsage;
    }
    f << j.dump(2) << "\n";
  }
  if (c.format == "text") {
    print_text(j, out);
  } else {
    out << j.dump(2) << "\n";
  }
  if (code != kOk) return code;
  return cert.all_passed() ? kOk : kCheckFailed;
}

}  // namespace steiner::cli
