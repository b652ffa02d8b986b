#include "enriqueslab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "enriqueslab/char2.hpp"
#include "enriqueslab/graph.hpp"
#include "enriqueslab/nslattice.hpp"
#include "enriqueslab/plane.hpp"
#include "enriqueslab/sylvester.hpp"
#include "enriqueslab/vinberg.hpp"

namespace enriqueslab {

namespace {

using json = nlohmann::ordered_json;

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("report: integer too large for JSON");
  return static_cast<long long>(v);
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_ll(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j].get<long long>();
  return m;
}

// Everything the checks read; built once per run.
struct Workspace {
  const Plane& plane;
  const K3Lattice& ns;
  std::vector<ContractionConfig> configs;
  int config_index;
  EnriquesLattice numx;
  FortyClasses forty;
  IntersectionGraph lat_gamma;
  IntersectionGraph comb_gamma;
  std::uint64_t seed;

  Workspace(int cfg_index, std::uint64_t seed_in)
      : plane(Plane::get()),
        ns(K3Lattice::get()),
        configs(find_contraction_configs(ns)),
        config_index(validate_index(cfg_index, configs.size())),
        numx(ns, configs[static_cast<std::size_t>(config_index)]),
        forty(forty_classes(numx)),
        lat_gamma(lattice_gamma(numx, forty)),
        comb_gamma(combinatorial_gamma()),
        seed(seed_in) {}

  static int validate_index(int idx, std::size_t count) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= count)
      throw std::invalid_argument("config-index out of range (have " + std::to_string(count) +
                                  " configurations)");
    return idx;
  }

  std::mt19937_64 rng_for(const std::string& check_id) const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : check_id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return std::mt19937_64(seed ^ h);
  }
};

struct CheckFailure : std::runtime_error {
  json witness;
  CheckFailure(const std::string& msg, json w = json::object())
      : std::runtime_error(msg), witness(std::move(w)) {}
};

void require(bool cond, const std::string& msg, json witness = json::object()) {
  if (!cond) throw CheckFailure(msg, std::move(witness));
}

struct CheckDef {
  std::string id;
  std::string anchor;
  std::string suite;  // plane | lattice | gamma | vinberg | char2
  std::function<json(const Workspace&)> fn;
};

// ---------------------------------------------------------------- plane --

json check_plane_census(const Workspace& w) {
  require(w.plane.points().size() == 21, "expected 21 points");
  require(w.plane.lines().size() == 21, "expected 21 lines");
  for (int i = 0; i < 21; ++i) {
    require(w.plane.points_on(i).size() == 5, "line without 5 points");
    require(w.plane.lines_through(i).size() == 5, "point without 5 lines");
  }
  return {{"points", 21}, {"lines", 21}, {"points_per_line", 5}, {"lines_per_point", 5}};
}

json check_plane_axioms(const Workspace& w) {
  for (int p = 0; p < 21; ++p)
    for (int q = p + 1; q < 21; ++q) {
      int lines = 0, points = 0;
      for (int i = 0; i < 21; ++i) {
        lines += w.plane.incidence(p, i) && w.plane.incidence(q, i);
        points += w.plane.incidence(i, p) && w.plane.incidence(i, q);
      }
      require(lines == 1 && points == 1, "projective plane axiom failed");
    }
  return {{"pairs_checked", 210}};
}

json check_plane_torsion(const Workspace& w) {
  require(w.plane.torsion_ids().size() == 9, "expected 9 torsion points");
  for (int id : w.plane.torsion_ids())
    require(Plane::cubic(w.plane.points()[static_cast<std::size_t>(id)].c).is_zero(),
            "torsion point off the cubic");
  json pts = json::array();
  for (int id : w.plane.torsion_ids())
    pts.push_back(w.plane.points()[static_cast<std::size_t>(id)].str());
  return {{"count", 9}, {"points", pts}};
}

json check_plane_line_types(const Workspace& w) {
  int tangents = 0, transversals = 0;
  std::set<int> tangency;
  for (int l = 0; l < 21; ++l) {
    const LineType& t = w.plane.line_types()[static_cast<std::size_t>(l)];
    if (t.triple_tangent) {
      ++tangents;
      tangency.insert(t.tangent_point);
    } else {
      ++transversals;
      std::set<int> distinct(t.transversal_points.begin(), t.transversal_points.end());
      require(distinct.size() == 3, "transversal without 3 distinct points");
      for (int p : t.transversal_points)
        require(w.plane.is_torsion(p), "transversal point is not torsion");
    }
  }
  require(tangents == 9 && transversals == 12, "tangent census mismatch");
  require(tangency.size() == 9, "tangency points do not biject with torsion");
  return {{"triple_tangents", 9}, {"transversals", 12}};
}

json check_plane_sextuples(const Workspace& w) {
  require(w.plane.general_sextuples().size() == 168, "expected 168 general sextuples");
  for (const Sextuple& s : w.plane.general_sextuples())
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          require(!collinear(w.plane.points()[static_cast<std::size_t>(s.point_ids[static_cast<std::size_t>(i)])],
                             w.plane.points()[static_cast<std::size_t>(s.point_ids[static_cast<std::size_t>(j)])],
                             w.plane.points()[static_cast<std::size_t>(s.point_ids[static_cast<std::size_t>(k)])]),
                  "collinear triple inside a sextuple");
  return {{"count", 168}, {"triples_per_sextuple", 20}};
}

json check_plane_collineations(const Workspace& w) {
  std::set<std::array<int, 6>> all;
  for (const Sextuple& s : w.plane.general_sextuples()) all.insert(s.point_ids);
  auto rng = w.rng_for("plane.collineation-invariance");
  std::uniform_int_distribution<unsigned> d(0, 3);
  int done = 0;
  while (done < 20) {
    std::array<std::array<FieldElement, 3>, 3> m;
    for (auto& row : m)
      for (auto& x : row) x = FieldElement(4, d(rng));
    FieldElement det = m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1]) +
                       m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0]);
    if (det.is_zero()) continue;
    ++done;
    std::array<int, 21> perm{};
    for (int p = 0; p < 21; ++p) {
      std::array<FieldElement, 3> y{FieldElement::zero(4), FieldElement::zero(4),
                                    FieldElement::zero(4)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[static_cast<std::size_t>(i)] +=
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
            w.plane.points()[static_cast<std::size_t>(p)].c[static_cast<std::size_t>(j)];
      perm[static_cast<std::size_t>(p)] =
          w.plane.point_id(ProjTriple::normalized(y[0], y[1], y[2]));
    }
    for (const Sextuple& s : w.plane.general_sextuples()) {
      std::array<int, 6> img{};
      for (int i = 0; i < 6; ++i)
        img[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(s.point_ids[static_cast<std::size_t>(i)])];
      std::sort(img.begin(), img.end());
      require(all.count(img) == 1, "sextuple set not collineation invariant");
    }
  }
  return {{"collineations_checked", 20}};
}

// --------------------------------------------------------------- lattice --

json check_lattice_quotient(const Workspace& w) {
  require(w.ns.radical_basis().rows() == 20, "radical rank != 20");
  Signature sig = w.ns.gram22().exact_signature();
  require(sig == Signature{1, 21, 0}, "quotient signature != (1,21)");
  Int det = w.ns.gram22().det_lattice();
  require(det == 4 || det == -4, "quotient determinant != +-4");
  for (std::size_t i = 0; i < 22; ++i)
    require(w.ns.gram22().at(i, i) % 2 == 0, "quotient not even");
  return {{"radical_rank", 20},
          {"rank", 22},
          {"signature", {1, 21}},
          {"det", to_ll(det)}};
}

json check_lattice_ell(const Workspace& w) {
  const auto& ell = w.ns.ell();
  require(w.ns.pair22(ell, ell) == 2, "ell^2 != 2");
  for (int p = 0; p < 21; ++p)
    require(w.ns.pair22(ell, w.ns.curve_in_quotient(w.ns.curve_for_point(p))) == 0,
            "ell meets a point curve");
  for (int l = 0; l < 21; ++l)
    require(w.ns.pair22(ell, w.ns.curve_in_quotient(w.ns.curve_for_line(l))) == 1,
            "ell . line curve != 1");
  return {{"ell_squared", 2}, {"line_expressions_agreeing", 21}};
}

json check_lattice_cremona(const Workspace& w) {
  require(w.ns.cremona_vectors().size() == 168, "expected 168 vectors");
  for (const auto& v : w.ns.cremona_vectors()) {
    require(w.ns.pair22(v, v) == -4, "vector square != -4");
    require(w.ns.pair22(v, w.ns.ell()) == 4, "pairing with ell != 4");
  }
  return {{"count", 168}, {"square", -4}, {"pairing_with_ell", 4}};
}

json check_lattice_configs(const Workspace& w) {
  ConfigSearchStats pruned_stats, full_stats;
  auto pruned = find_contraction_configs(w.ns, &pruned_stats, true);
  auto full = find_contraction_configs(w.ns, &full_stats, false);
  require(pruned.size() == full.size(), "pruned and unpruned searches disagree");
  for (std::size_t i = 0; i < pruned.size(); ++i)
    require(pruned[i].line_ids == full[i].line_ids &&
                pruned[i].point_ids == full[i].point_ids &&
                pruned[i].orthogonal_cremona == full[i].orthogonal_cremona,
            "pruned and unpruned configs differ");
  require(full_stats.with_six_free_points == full_stats.valid,
          "a candidate with six free points failed a later filter");
  require(!pruned.empty(), "no contraction configuration found");
  return {{"valid_configs", static_cast<long>(pruned.size())},
          {"line_sets_scanned_unpruned", full_stats.line_sets_scanned},
          {"line_sets_scanned_pruned", pruned_stats.line_sets_scanned}};
}

json check_lattice_ten_orthogonal(const Workspace& w) {
  for (const auto& cfg : w.configs) {
    require(cfg.orthogonal_cremona.size() == 10, "config without exactly 10 orthogonal vectors");
    require(triangle_splitting_sextuples(w.ns, cfg) == cfg.orthogonal_cremona,
            "orthogonal vectors are not the triangle splittings");
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) {
        Int expect = i == j ? -2 : 0;
        require(w.ns.gram42().at(static_cast<std::size_t>(cfg.curve_ids[static_cast<std::size_t>(i)]),
                                 static_cast<std::size_t>(cfg.curve_ids[static_cast<std::size_t>(j)])) == expect,
                "contracted classes are not A1^12");
      }
  }
  return {{"configs_checked", static_cast<long>(w.configs.size())},
          {"orthogonal_per_config", 10},
          {"splittings_per_config", 10}};
}

json check_lattice_numx(const Workspace& w) {
  require(is_unimodular_row_basis(w.numx.complement_basis()), "complement not primitive");
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      require(w.numx.complement_gram().at(i, j) % 2 == 0, "odd complement entry");
  Int full_det = w.numx.complement_gram().det_lattice();
  require(full_det == 1024 || full_det == -1024, "complement determinant != +-2^10");
  require(w.numx.gram10().det_lattice() == -1, "halved determinant != -1");
  require(w.numx.gram10().exact_signature() == Signature{1, 9, 0}, "halved signature != (1,9)");
  for (std::size_t i = 0; i < 10; ++i)
    require(w.numx.gram10().at(i, i) % 2 == 0, "halved lattice not even");
  return {{"complement_det", to_ll(full_det)},
          {"halved_det", -1},
          {"signature", {1, 9}},
          {"even", true},
          {"unimodular_primitive", true}};
}

json check_lattice_forty(const Workspace& w) {
  IntegerSymMatrix g = gram_of_40(w.numx, w.forty);
  for (std::size_t i = 30; i < 40; ++i)
    for (std::size_t j = i + 1; j < 40; ++j)
      require(g.at(i, j) == 2, "cremona block not complete with pairing 2");
  for (std::size_t i = 30; i < 40; ++i) {
    int line2 = 0, point2 = 0;
    for (std::size_t j = 0; j < 30; ++j) {
      if (g.at(i, j) != 2) continue;
      (w.forty.kind[j] == 0 ? line2 : point2) += 1;
    }
    require(line2 == 6 && point2 == 6, "six-and-six rule violated");
  }
  require(rank(g.matrix()) == 10, "40-class gram rank != 10");
  return {{"classes", 40}, {"rank", 10}, {"cremona_block_pairing", 2}};
}

json check_lattice_nodal(const Workspace& w) {
  auto nodal = nodal_curve_classes(w.numx);
  require(nodal.size() == 30, "expected 30 nodal classes");
  for (const auto& nc : nodal)
    require(w.numx.pair10(nc.coords, nc.coords) == -2, "nodal class square != -2");
  for (std::size_t i = 0; i < 30; ++i) {
    bool i_line = w.ns.curves()[static_cast<std::size_t>(nodal[i].curve_id)].family ==
                  CurveClass::Family::kLine;
    int twos = 0;
    for (std::size_t j = 0; j < 30; ++j) {
      if (i == j) continue;
      bool j_line = w.ns.curves()[static_cast<std::size_t>(nodal[j].curve_id)].family ==
                    CurveClass::Family::kLine;
      if (i_line != j_line && w.numx.pair10(nodal[i].coords, nodal[j].coords) == 2) ++twos;
    }
    require(twos == 3, "nodal class does not meet exactly 3 of the other family doubly");
  }
  return {{"count", 30}, {"square", -2}, {"double_contacts_per_class", 3}};
}

json check_lattice_invariance(const Workspace& w) {
  require(w.configs.size() >= 3, "need 3 configs for the spot check");
  std::vector<IntersectionGraph> graphs;
  for (int k = 0; k < 3; ++k) {
    EnriquesLattice numx(w.ns, w.configs[static_cast<std::size_t>(k)]);
    graphs.push_back(lattice_gamma(numx, forty_classes(numx)));
  }
  require(find_isomorphism(graphs[0], graphs[1]).has_value(), "configs 0,1 not isomorphic");
  require(find_isomorphism(graphs[0], graphs[2]).has_value(), "configs 0,2 not isomorphic");
  return {{"configs_compared", 3}};
}

// ----------------------------------------------------------------- gamma --

json check_gamma_totals(const Workspace&) {
  const SylvesterSystem& sys = SylvesterSystem::get();
  require(sys.totals().size() == 6, "expected 6 totals");
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      std::vector<int> common;
      std::set_intersection(sys.totals()[static_cast<std::size_t>(i)].begin(),
                            sys.totals()[static_cast<std::size_t>(i)].end(),
                            sys.totals()[static_cast<std::size_t>(j)].begin(),
                            sys.totals()[static_cast<std::size_t>(j)].end(),
                            std::back_inserter(common));
      require(common.size() == 1 && common[0] == sys.table_entry(i, j),
              "totals do not share exactly the table syntheme");
    }
  return {{"totals", 6}, {"duads", 15}, {"synthemes", 15}, {"splits", 10}};
}

json check_gamma_profiles(const Workspace& w) {
  for (std::size_t v = 0; v < 40; ++v) {
    int twos = 0, ones = 0;
    for (std::size_t u = 0; u < 40; ++u) {
      if (u == v) continue;
      int p = w.comb_gamma.pairing(v, u);
      twos += p == 2;
      ones += p == 1;
    }
    if (v < kGammaSplitBase)
      require(twos == 7 && ones == 8, "duad/syntheme profile mismatch");
    else
      require(twos == 21 && ones == 0, "split profile mismatch");
  }
  return {{"duad_syntheme_profile", {{"pairing2", 7}, {"pairing1", 8}}},
          {"split_profile", {{"pairing2", 21}}}};
}

json check_gamma_isomorphism(const Workspace& w) {
  auto iso = find_isomorphism(w.lat_gamma, w.comb_gamma);
  require(iso.has_value(), "lattice and combinatorial graphs are not isomorphic");
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j)
      require(w.lat_gamma.pairing(i, j) ==
                  w.comb_gamma.pairing(static_cast<std::size_t>((*iso)[i]),
                                       static_cast<std::size_t>((*iso)[j])),
              "isomorphism does not preserve pairing");
  json map = json::array();
  for (std::size_t i = 0; i < 40; ++i)
    map.push_back(json::array({w.lat_gamma.label(i),
                               w.comb_gamma.label(static_cast<std::size_t>((*iso)[i]))}));
  return {{"isomorphic", true}, {"vertex_map", map}};
}

json check_gamma_automorphisms(const Workspace& w) {
  AutomorphismGroup aut = automorphism_group(w.comb_gamma);
  require(aut.order == 1440, "|Aut| != 1440");
  for (const auto& perm : all_s6())
    require(aut.contains(s6_vertex_action(perm)), "an S6 action is missing from Aut");
  auto outer = outer_automorphism();
  require(aut.contains(outer), "outer involution missing from Aut");
  for (const auto& perm : all_s6())
    require(s6_vertex_action(perm) != outer, "outer involution is induced by a letter permutation");

  auto s6_orbits = [&] {
    std::vector<std::vector<int>> perms;
    for (const auto& p : all_s6()) perms.push_back(s6_vertex_action(p));
    return vertex_orbits(40, perms);
  }();
  std::multiset<std::size_t> s6_sizes;
  for (const auto& o : s6_orbits) s6_sizes.insert(o.size());
  require(s6_sizes == std::multiset<std::size_t>{10, 15, 15}, "S6 orbit sizes != {15,15,10}");
  auto full_orbits = vertex_orbits(40, aut.elements);
  std::multiset<std::size_t> full_sizes;
  for (const auto& o : full_orbits) full_sizes.insert(o.size());
  require(full_sizes == std::multiset<std::size_t>{10, 30}, "full orbit sizes != {30,10}");
  return {{"order", 1440},
          {"s6_subgroup", 720},
          {"generators", static_cast<long>(aut.generators.size())},
          {"orbits_s6", {15, 15, 10}},
          {"orbits_full", {30, 10}}};
}

// --------------------------------------------------------------- vinberg --

json check_vinberg_components(const Workspace& w) {
  auto comps = enumerate_connected_parabolics(w.comb_gamma, 8);
  std::map<std::string, long> by_type;
  for (const auto& c : comps) by_type[c.type.name()]++;
  std::map<std::string, long> expect = {
      {"A~1", 210}, {"A~2", 160}, {"A~3", 90}, {"A~4", 144}, {"A~5", 120}};
  require(by_type == expect, "connected parabolic census mismatch",
          json{{"got", by_type}});
  return {{"total", static_cast<long>(comps.size())}, {"by_type", by_type}};
}

json check_vinberg_census(const Workspace& w) {
  ParabolicCensus census = maximal_parabolics(w.comb_gamma, 8);
  std::map<std::string, long> expect = {
      {"A~2+A~2+A~2+A~2", 10},
      {"A~4+A~4", 72},
      {"A~5+A~2+A~1", 120},
      {"A~3+A~3+A~1+A~1", 45},
  };
  require(census.multiset_counts == expect, "rank-8 type multisets are not exactly the four",
          json{{"got", census.multiset_counts}});
  return {{"rank8_diagrams", static_cast<long>(census.rank8.size())},
          {"multisets", census.multiset_counts}};
}

json check_vinberg_criterion(const Workspace& w) {
  VinbergResult res = vinberg_check(w.comb_gamma, 10);
  require(res.no_triple_lines, "pairing >= 3 present");
  require(res.preconditions_ok, "gram rank != ambient rank 10");
  require(res.finite_index, "a connected parabolic does not complete to rank 8");
  for (std::size_t i = 0; i < res.certificate.size(); ++i)
    require(res.certificate[i] >= 0, "certificate incomplete");

  // Full completion certificate: every connected parabolic with a rank-8
  // parabolic subdiagram containing it as a component.
  auto labels_of = [&](const std::vector<int>& verts) {
    json out = json::array();
    for (int v : verts) out.push_back(w.comb_gamma.label(static_cast<std::size_t>(v)));
    return out;
  };
  json certificate = json::array();
  for (std::size_t i = 0; i < res.census.components.size(); ++i) {
    const ParabolicComponent& comp = res.census.components[i];
    const ParabolicDiagram& d = res.census.rank8[static_cast<std::size_t>(res.certificate[i])];
    json completion = json::array();
    for (int idx : d.component_ids)
      completion.push_back(
          labels_of(res.census.components[static_cast<std::size_t>(idx)].vertices));
    certificate.push_back({{"component", labels_of(comp.vertices)},
                           {"type", comp.type.name()},
                           {"completion_type", d.type_name()},
                           {"completion", completion}});
  }
  return {{"gram_rank", static_cast<long>(res.gram_rank)},
          {"connected_parabolics", static_cast<long>(res.census.components.size())},
          {"finite_index", true},
          {"census", res.census.multiset_counts},
          {"certificate", certificate}};
}

json check_vinberg_without_splits(const Workspace& w) {
  std::vector<int> sub;
  for (int i = 0; i < kGammaSplitBase; ++i) sub.push_back(i);
  VinbergResult res = vinberg_check(w.comb_gamma.induced(sub), 10);
  require(res.preconditions_ok, "30-vertex subgraph lost full rank");
  require(!res.finite_index, "criterion unexpectedly holds without the ten split classes");
  json witness = json::array();
  for (int v : res.uncompleted_component) witness.push_back(w.comb_gamma.label(static_cast<std::size_t>(v)));
  return {{"finite_index", false}, {"uncompleted_component", witness}};
}

json check_vinberg_reflections(const Workspace& w) {
  auto rng = w.rng_for("vinberg.reflections");
  std::uniform_int_distribution<int> d(-4, 4);
  const IntegerSymMatrix& gram = w.numx.gram10();
  for (const auto& delta : w.forty.coords) {
    std::vector<Int> x(10), y(10);
    for (auto& c : x) c = d(rng);
    for (auto& c : y) c = d(rng);
    auto sx = reflect(x, delta, gram);
    require(reflect(sx, delta, gram) == x, "reflection is not an involution");
    require(dot(sx, mat_vec(gram.matrix(), reflect(y, delta, gram))) ==
                dot(x, mat_vec(gram.matrix(), y)),
            "reflection is not an isometry");
    require(reflect(delta, delta, gram) == [&] {
      std::vector<Int> neg = delta;
      for (auto& c : neg) c = -c;
      return neg;
    }(), "s_delta(delta) != -delta");
  }
  return {{"deltas_checked", 40}};
}

// ----------------------------------------------------------------- char2 --

json check_char2_symbolic(const Workspace&) {
  TwoClosedCheck check = check_two_closed(surface_vector_field());
  require(check.holds, "D^2 = t^2 D fails symbolically");
  return {{"holds", true},
          {"d_of_t", check.t2_d_t.str()}};
}

json check_char2_zero(const Workspace&) {
  TwoClosedCheck check = check_two_closed(surface_vector_field_at(FieldElement::zero(2)));
  require(check.holds, "D^2 = t^2 D fails at a = b = 0");
  return {{"holds", true}};
}

json check_char2_random(const Workspace& w) {
  auto rng = w.rng_for("char2.two-closed-specialized");
  std::uniform_int_distribution<unsigned> d64(0, 63);
  int done = 0;
  while (done < 20) {
    FieldElement a(64, d64(rng));
    if (!a.is_zero() && a.pow(3).is_one()) continue;
    ++done;
    require(check_two_closed(surface_vector_field_at(a)).holds,
            "specialized 2-closedness fails");
  }
  bool rejected = false;
  try {
    surface_vector_field_at(FieldElement::omega());
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  require(rejected, "a^3 = 1 was not rejected");
  return {{"specializations", 20}, {"cube_roots_rejected", true}};
}

json check_char2_leibniz(const Workspace& w) {
  Derivation d = surface_vector_field();
  auto rng = w.rng_for("char2.leibniz");
  std::uniform_int_distribution<unsigned> bit(0, 1);
  std::uniform_int_distribution<int> deg(0, 3);
  auto rand_poly = [&] {
    SparsePoly p(2, {"t", "x"});
    for (int k = 0; k < 3; ++k) {
      std::map<std::string, unsigned> mono;
      int et = deg(rng), ex = deg(rng);
      if (et) mono["t"] = static_cast<unsigned>(et);
      if (ex) mono["x"] = static_cast<unsigned>(ex);
      p.add_term(mono, FieldElement(2, bit(rng)));
    }
    return p;
  };
  for (int k = 0; k < 200; ++k) {
    SparsePoly p = rand_poly(), q = rand_poly();
    require(d.apply(p * q) ==
                d.apply(p) * RationalFunction(q) + d.apply(q) * RationalFunction(p),
            "Leibniz rule fails");
  }
  return {{"pairs_checked", 200}};
}

json check_char2_blowup(const Workspace&) {
  BlowupChartCheck check = blowup_chart_check();
  require(check.holds, "blow-up chart identity fails",
          json{{"coeff_T", check.coeff_T.str()}, {"coeff_U", check.coeff_U.str()}});
  return {{"holds", true},
          {"coeff_T", check.expect_T.str()},
          {"coeff_U", check.expect_U.str()}};
}

json check_char2_weierstrass_printed(const Workspace&) {
  WeierstrassCheck check = weierstrass_transform_check();
  json witness = {{"printed_divides", check.printed_divides},
                  {"obstruction", check.printed_obstruction.str()},
                  {"degenerates_at_cube_roots", check.degenerates_at_omega}};
  require(check.printed_divides,
          "the displayed substitution does not divide by the affine cubic "
          "(the corrected substitution does; see char2.weierstrass-corrected)",
          witness);
  return witness;
}

json check_char2_weierstrass_corrected(const Workspace&) {
  WeierstrassCheck check = weierstrass_transform_check();
  require(check.corrected_divides, "corrected substitution fails to divide");
  require(check.lambda_nonzero, "cofactor vanishes");
  require(check.degenerates_at_omega, "displayed substitution does not degenerate at t = w");
  return {{"divides", true},
          {"lambda", check.corrected_lambda.str()},
          {"degenerates_at_cube_roots", true}};
}

json check_char2_discriminant(const Workspace&) {
  DiscriminantReport rep = discriminant_report(WeierstrassModel::canonical());
  require(rep.matches_closed_form, "discriminant != t^6 (t^3+1)^6");
  require(rep.zero_orders.size() == 4, "expected 4 zeros");
  for (const auto& [zero, ord] : rep.zero_orders)
    require(ord == 6, "zero order != 6");
  require(rep.total_order == 24, "total order != 24");
  json zeros = json::array();
  for (const auto& [zero, ord] : rep.zero_orders)
    zeros.push_back(json::array({zero.str(), ord}));
  return {{"delta", rep.delta.str()}, {"zeros", zeros}, {"total_order", 24}};
}

json check_char2_fibers(const Workspace&) {
  auto hints = fiber_multiplicity_hint(WeierstrassModel::canonical());
  require(hints.size() == 4, "expected 4 singular fibers");
  for (const auto& h : hints) {
    require(h.ord_delta == 6, "ord != 6");
    require(h.j_valuation == -6, "v(j) != -6");
    require(h.a1_nonzero, "a1 vanishes at a zero of the discriminant");
  }
  return {{"fibers", 4}, {"j_valuation", -6}, {"a1_nonzero", true}};
}

json check_char2_euler(const Workspace& w) {
  EulerCheck check = euler_formula_check(w.ns, w.configs[static_cast<std::size_t>(w.config_index)]);
  require(check.d_squared == -24, "(D)^2 != -24");
  require(check.deg_isolated == 0 && check.divisorial, "isolated cycle degree != 0");
  EulerCheck contrast =
      euler_formula_check(w.ns, w.configs[static_cast<std::size_t>(w.config_index)], 11);
  require(contrast.d_squared == -22 && contrast.deg_isolated == 2,
          "11-curve contrast arithmetic failed");
  return {{"d_squared", -24},
          {"deg_isolated", 0},
          {"contrast_11_curves", {{"d_squared", -22}, {"deg_isolated", 2}}}};
}

std::vector<CheckDef> all_checks() {
  return {
      {"plane.census", "pg24-census", "plane", check_plane_census},
      {"plane.axioms", "plumbing", "plane", check_plane_axioms},
      {"plane.torsion", "torsion-cubic", "plane", check_plane_torsion},
      {"plane.line-types", "tangent-census", "plane", check_plane_line_types},
      {"plane.sextuples", "general-sextuples", "plane", check_plane_sextuples},
      {"plane.collineation-invariance", "general-sextuples", "plane", check_plane_collineations},
      {"lattice.quotient", "ns-quotient", "lattice", check_lattice_quotient},
      {"lattice.ell", "line-class", "lattice", check_lattice_ell},
      {"lattice.cremona", "cremona-vectors", "lattice", check_lattice_cremona},
      {"lattice.configs", "contraction-search", "lattice", check_lattice_configs},
      {"lattice.ten-orthogonal", "ten-orthogonal", "lattice", check_lattice_ten_orthogonal},
      {"lattice.numx", "enriques-lattice", "lattice", check_lattice_numx},
      {"lattice.nodal-classes", "thirty-nodal", "lattice", check_lattice_nodal},
      {"lattice.forty-classes", "forty-classes", "lattice", check_lattice_forty},
      {"lattice.config-invariance", "contraction-search", "lattice", check_lattice_invariance},
      {"gamma.totals", "totals-six", "gamma", check_gamma_totals},
      {"gamma.profiles", "gamma-rules", "gamma", check_gamma_profiles},
      {"gamma.identification", "gamma-identification", "gamma", check_gamma_isomorphism},
      {"gamma.automorphisms", "aut-s6-extension", "gamma", check_gamma_automorphisms},
      {"vinberg.components", "parabolic-enumeration", "vinberg", check_vinberg_components},
      {"vinberg.rank8-census", "parabolic-types", "vinberg", check_vinberg_census},
      {"vinberg.criterion", "vinberg-finite-index", "vinberg", check_vinberg_criterion},
      {"vinberg.without-splits", "vinberg-finite-index", "vinberg", check_vinberg_without_splits},
      {"vinberg.reflections", "reflection-formula", "vinberg", check_vinberg_reflections},
      {"char2.two-closed-symbolic", "two-closedness", "char2", check_char2_symbolic},
      {"char2.two-closed-zero", "two-closedness", "char2", check_char2_zero},
      {"char2.two-closed-specialized", "two-closedness", "char2", check_char2_random},
      {"char2.leibniz", "plumbing", "char2", check_char2_leibniz},
      {"char2.blowup-chart", "blowup-chart", "char2", check_char2_blowup},
      {"char2.weierstrass-printed", "weierstrass-change", "char2", check_char2_weierstrass_printed},
      {"char2.weierstrass-corrected", "weierstrass-change", "char2",
       check_char2_weierstrass_corrected},
      {"char2.discriminant", "discriminant", "char2", check_char2_discriminant},
      {"char2.fiber-hints", "fiber-hints", "char2", check_char2_fibers},
      {"char2.euler", "euler-arithmetic", "char2", check_char2_euler},
  };
}

}  // namespace

bool is_suite_name(const std::string& name) {
  for (const char* s : kSuiteNames)
    if (name == s) return true;
  return false;
}

VerificationReport run_suite(const std::string& suite, int config_index, std::uint64_t seed,
                             unsigned workers) {
  if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite: " + suite);
  Workspace ws(config_index, seed);

  std::vector<CheckDef> defs;
  for (auto& def : all_checks())
    if (suite == "all" || suite == def.suite) defs.push_back(std::move(def));

  std::vector<CheckResult> results(defs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= defs.size()) break;
      const CheckDef& def = defs[i];
      CheckResult& out = results[i];
      out.check_id = def.id;
      out.anchor = def.anchor;
      auto t0 = std::chrono::steady_clock::now();
      try {
        json witness = def.fn(ws);
        out.status = "pass";
        out.witness_json = witness.dump();
      } catch (const CheckFailure& f) {
        json witness = f.witness;
        witness["error"] = f.what();
        out.status = "fail";
        out.witness_json = witness.dump();
      } catch (const std::exception& e) {
        out.status = "fail";
        out.witness_json = json{{"error", e.what()}}.dump();
      }
      auto t1 = std::chrono::steady_clock::now();
      out.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
  };
  unsigned n = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
  n = std::min<unsigned>(n, static_cast<unsigned>(defs.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k + 1 < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerificationReport report;
  report.suite = suite;
  report.config_index = config_index;
  report.seed = seed;
  report.checks = std::move(results);
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  for (const auto& c : report.checks) {
    if (c.status == "pass") ++report.passed;
    else if (c.status == "fail") ++report.failed;
    else ++report.skipped;
  }
  return report;
}

std::string VerificationReport::to_json() const {
  json out;
  out["schema"] = "enriqueslab/v1";
  out["suite"] = suite;
  out["config_index"] = config_index;
  out["seed"] = seed;
  out["counts"] = {{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  json checks_json = json::array();
  for (const auto& c : checks) {
    json item;
    item["check_id"] = c.check_id;
    item["anchor"] = c.anchor;
    item["status"] = c.status;
    item["witness"] = json::parse(c.witness_json);
    item["elapsed_ms"] = c.elapsed_ms;
    checks_json.push_back(std::move(item));
  }
  out["checks"] = std::move(checks_json);
  return out.dump(2) + "\n";
}

bool is_export_name(const std::string& what) {
  return what == "gamma-dot" || what == "gamma-json" || what == "lattice-json" ||
         what == "plane-json";
}

namespace {

std::string vertex_kind(int v) {
  if (v < kGammaSynthemeBase) return "duad";
  if (v < kGammaSplitBase) return "syntheme";
  return "split";
}

std::string render_gamma_dot() {
  IntersectionGraph g = combinatorial_gamma();
  std::ostringstream os;
  os << "graph gamma {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  n" << v << " [label=\"" << g.label(v) << "\" kind=\"" << vertex_kind(static_cast<int>(v))
       << "\"];\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      int p = g.pairing(i, j);
      if (p == 1) os << "  n" << i << " -- n" << j << ";\n";
      if (p == 2) {
        // Double bond: two parallel edges, each tagged with the multiplicity.
        os << "  n" << i << " -- n" << j << " [multiplicity=2];\n";
        os << "  n" << i << " -- n" << j << " [multiplicity=2];\n";
      }
    }
  os << "}\n";
  return os.str();
}

std::string render_gamma_json() {
  IntersectionGraph g = combinatorial_gamma();
  json out;
  out["schema"] = "enriqueslab/v1";
  json verts = json::array();
  for (std::size_t v = 0; v < g.size(); ++v)
    verts.push_back({{"id", v}, {"label", g.label(v)}, {"kind", vertex_kind(static_cast<int>(v))}});
  out["vertices"] = std::move(verts);
  json pairing = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g.pairing(i, j));
    pairing.push_back(std::move(row));
  }
  out["pairing"] = std::move(pairing);
  return out.dump(2) + "\n";
}

std::string render_lattice_json(int config_index) {
  const K3Lattice& ns = K3Lattice::get();
  auto configs = find_contraction_configs(ns);
  Workspace::validate_index(config_index, configs.size());
  const ContractionConfig& cfg = configs[static_cast<std::size_t>(config_index)];
  EnriquesLattice numx(ns, cfg);
  FortyClasses cls = forty_classes(numx);

  json out;
  out["schema"] = "enriqueslab/v1";
  out["gram22"] = matrix_json(ns.gram22().matrix());
  out["gram10"] = matrix_json(numx.gram10().matrix());
  IntMatrix coords(40, 10);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 10; ++j) coords.at(i, j) = cls.coords[i][j];
  out["classes"] = {{"labels", cls.labels}, {"kinds", cls.kind}, {"coords", matrix_json(coords)}};
  out["config"] = {{"index", config_index},
                   {"line_ids", cfg.line_ids},
                   {"point_ids", cfg.point_ids},
                   {"curve_ids", cfg.curve_ids},
                   {"orthogonal_cremona", cfg.orthogonal_cremona}};
  return out.dump(2) + "\n";
}

std::string render_plane_json() {
  const Plane& plane = Plane::get();
  json out;
  out["schema"] = "enriqueslab/v1";
  json pts = json::array(), lines = json::array();
  for (const auto& p : plane.points()) pts.push_back(p.str());
  for (const auto& l : plane.lines()) lines.push_back(l.str());
  out["points"] = std::move(pts);
  out["lines"] = std::move(lines);
  json inc = json::array();
  for (int p = 0; p < 21; ++p) {
    json row = json::array();
    for (int l = 0; l < 21; ++l) row.push_back(plane.incidence(p, l) ? 1 : 0);
    inc.push_back(std::move(row));
  }
  out["incidence"] = std::move(inc);
  out["torsion"] = plane.torsion_ids();
  json sext = json::array();
  for (const Sextuple& s : plane.general_sextuples()) sext.push_back(s.point_ids);
  out["sextuples"] = std::move(sext);
  return out.dump(2) + "\n";
}

}  // namespace

std::string render_export(const std::string& what, int config_index) {
  if (what == "gamma-dot") return render_gamma_dot();
  if (what == "gamma-json") return render_gamma_json();
  if (what == "lattice-json") return render_lattice_json(config_index);
  if (what == "plane-json") return render_plane_json();
  throw std::invalid_argument("unknown export: " + what);
}

LatticeExportData read_lattice_json(const std::string& json_text) {
  json in = json::parse(json_text);
  if (in.at("schema").get<std::string>() != "enriqueslab/v1")
    throw std::invalid_argument("read_lattice_json: unexpected schema");
  LatticeExportData out;
  out.gram22 = matrix_from_json(in.at("gram22"));
  out.gram10 = matrix_from_json(in.at("gram10"));
  out.labels = in.at("classes").at("labels").get<std::vector<std::string>>();
  out.class_coords = matrix_from_json(in.at("classes").at("coords"));
  return out;
}

}  // namespace enriqueslab
