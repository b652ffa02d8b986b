#include "enriqueslab/nslattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace enriqueslab {

K3Lattice::K3Lattice(const Plane& plane)
    : plane_(plane), gram42_(IntMatrix(42, 42)), gram22_(IntMatrix(22, 22)) {
  for (int l = 0; l < 21; ++l) curves_.push_back({l, CurveClass::Family::kLine, l});
  for (int p = 0; p < 21; ++p) curves_.push_back({21 + p, CurveClass::Family::kPoint, p});

  IntMatrix g(42, 42);
  for (int i = 0; i < 42; ++i) g.at(i, i) = -2;
  for (int l = 0; l < 21; ++l)
    for (int p = 0; p < 21; ++p)
      if (plane_.incidence(p, l)) {
        g.at(l, 21 + p) = 1;
        g.at(21 + p, l) = 1;
      }
  gram42_ = IntegerSymMatrix(g);

  radical_ = gram42_.snf_kernel();
  if (radical_.rows() != 20)
    throw std::runtime_error("K3Lattice: radical rank is not 20");

  // A unimodular change of basis whose first 20 rows span the radical; the
  // remaining 22 rows represent a basis of the quotient.
  SnfResult snf = smith_normal_form(radical_);
  if (snf.rank != 20) throw std::runtime_error("K3Lattice: radical basis is not independent");
  for (std::size_t i = 0; i < 20; ++i)
    if (snf.s.at(i, i) != 1)
      throw std::runtime_error("K3Lattice: radical is not saturated");
  quotient_ = IntMatrix(22, 42);
  for (std::size_t i = 0; i < 22; ++i) quotient_.set_row(i, snf.vinv.row(20 + i));
  // Coordinates with respect to the vinv row basis are ambient * V; the
  // quotient keeps the last 22 of them.
  to_quotient_ = IntMatrix(42, 22);
  for (std::size_t i = 0; i < 42; ++i)
    for (std::size_t j = 0; j < 22; ++j) to_quotient_.at(i, j) = snf.v.at(i, 20 + j);

  IntMatrix g22(22, 22);
  for (std::size_t i = 0; i < 22; ++i) {
    std::vector<Int> gi = mat_vec(gram42_.matrix(), quotient_.row(i));
    for (std::size_t j = 0; j < 22; ++j) g22.at(i, j) = dot(gi, quotient_.row(j));
  }
  gram22_ = IntegerSymMatrix(g22);

  Signature sig = gram22_.exact_signature();
  if (!(sig == Signature{1, 21, 0}))
    throw std::runtime_error("K3Lattice: quotient signature is not (1,21)");
  Int det = gram22_.det_lattice();
  if (det != -4 && det != 4)
    throw std::runtime_error("K3Lattice: quotient determinant is not +-4");
  for (std::size_t i = 0; i < 22; ++i)
    if (gram22_.at(i, i) % 2 != 0)
      throw std::runtime_error("K3Lattice: quotient is not even");

  ell_ = ell_class(0);
  for (int l = 1; l < 21; ++l)
    if (ell_class(l) != ell_)
      throw std::runtime_error("K3Lattice: pulled-back line class depends on the line");

  for (const Sextuple& s : plane_.general_sextuples()) {
    std::vector<Int> ambient(42, 0);
    // 2*ell with ell written on line 0.
    ambient[0] = 4;
    for (int p : plane_.points_on(0)) ambient[static_cast<std::size_t>(21 + p)] += 2;
    for (int p : s.point_ids) ambient[static_cast<std::size_t>(21 + p)] -= 1;
    cremona_.push_back(to_quotient(ambient));
    // Pairings against the curve classes, read off in the ambient lattice
    // (the radical pairs to zero, so this agrees with the quotient pairing).
    cremona_pairings_.push_back(mat_vec(gram42_.matrix(), ambient));
  }
}

const K3Lattice& K3Lattice::get() {
  static const K3Lattice lattice(Plane::get());
  return lattice;
}

std::vector<Int> K3Lattice::to_quotient(const std::vector<Int>& ambient) const {
  if (ambient.size() != 42) throw std::invalid_argument("to_quotient: need 42 coordinates");
  return vec_mat(ambient, to_quotient_);
}

std::vector<Int> K3Lattice::curve_in_quotient(int curve_id) const {
  std::vector<Int> ambient(42, 0);
  ambient[static_cast<std::size_t>(curve_id)] = 1;
  return to_quotient(ambient);
}

std::vector<Int> K3Lattice::ell_class(int line_id) const {
  std::vector<Int> ambient(42, 0);
  ambient[static_cast<std::size_t>(line_id)] = 2;
  for (int p : plane_.points_on(line_id)) ambient[static_cast<std::size_t>(21 + p)] += 1;
  return to_quotient(ambient);
}

Int K3Lattice::pair22(const std::vector<Int>& a, const std::vector<Int>& b) const {
  return dot(a, mat_vec(gram22_.matrix(), b));
}

std::vector<ContractionConfig> find_contraction_configs(const K3Lattice& ns,
                                                        ConfigSearchStats* stats,
                                                        bool prune_concurrent) {
  const Plane& plane = ns.plane();
  ConfigSearchStats local;
  ConfigSearchStats& st = stats ? *stats : local;

  std::vector<ContractionConfig> out;
  auto consider = [&](const std::array<int, 6>& lines) {
    ++st.line_sets_scanned;
    std::array<int, 6> free_points{};
    int nfree = 0;
    for (int p = 0; p < 21; ++p) {
      bool on_some = false;
      for (int l : lines)
        if (plane.incidence(p, l)) {
          on_some = true;
          break;
        }
      if (!on_some) {
        if (nfree == 6) return;  // more than six free points
        free_points[static_cast<std::size_t>(nfree++)] = p;
      }
    }
    if (nfree != 6) return;
    ++st.with_six_free_points;

    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          if (plane.collinear_ids(free_points[static_cast<std::size_t>(i)],
                                  free_points[static_cast<std::size_t>(j)],
                                  free_points[static_cast<std::size_t>(k)]))
            return;
    ++st.general_point_sets;

    ContractionConfig cfg;
    cfg.line_ids = lines;
    cfg.point_ids = free_points;
    for (int i = 0; i < 6; ++i) {
      cfg.curve_ids[static_cast<std::size_t>(i)] = ns.curve_for_line(lines[static_cast<std::size_t>(i)]);
      cfg.curve_ids[static_cast<std::size_t>(6 + i)] =
          ns.curve_for_point(free_points[static_cast<std::size_t>(i)]);
    }

    ++st.orthogonality_checked;
    for (std::size_t s = 0; s < ns.cremona_vectors().size(); ++s) {
      bool orth = true;
      for (int c : cfg.curve_ids)
        if (ns.cremona_curve_pairing(s, c) != 0) {
          orth = false;
          break;
        }
      if (orth) cfg.orthogonal_cremona.push_back(static_cast<int>(s));
    }
    if (cfg.orthogonal_cremona.size() != 10) return;
    ++st.valid;
    out.push_back(std::move(cfg));
  };

  if (prune_concurrent) {
    // Six lines no three of which are concurrent = a general sextuple in the
    // dual plane; points and lines share one canonical enumeration.
    for (const Sextuple& s : plane.general_sextuples()) consider(s.point_ids);
  } else {
    std::array<int, 6> lines{};
    auto rec = [&](auto&& self, int depth, int start) -> void {
      if (depth == 6) {
        consider(lines);
        return;
      }
      for (int l = start; l < 21; ++l) {
        lines[static_cast<std::size_t>(depth)] = l;
        self(self, depth + 1, l + 1);
      }
    };
    rec(rec, 0, 0);
  }

  if (out.empty()) throw std::runtime_error("find_contraction_configs: no configuration found");
  std::sort(out.begin(), out.end(), [](const ContractionConfig& a, const ContractionConfig& b) {
    return a.line_ids < b.line_ids;
  });
  return out;
}

std::vector<int> triangle_splitting_sextuples(const K3Lattice& ns, const ContractionConfig& cfg) {
  const Plane& plane = ns.plane();
  std::vector<int> out;
  // Partitions of the six lines into two unordered triples; fix line 0 in
  // the first triple.
  for (int j = 1; j < 6; ++j)
    for (int k = j + 1; k < 6; ++k) {
      std::array<int, 3> t1{cfg.line_ids[0], cfg.line_ids[static_cast<std::size_t>(j)],
                            cfg.line_ids[static_cast<std::size_t>(k)]};
      std::array<int, 3> t2{};
      int n2 = 0;
      for (int i = 1; i < 6; ++i)
        if (i != j && i != k) t2[static_cast<std::size_t>(n2++)] = cfg.line_ids[static_cast<std::size_t>(i)];
      std::array<int, 6> pts{};
      int np = 0;
      for (const auto& t : {t1, t2})
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) {
            // Intersection point of the two lines.
            int found = -1;
            for (int p = 0; p < 21; ++p)
              if (plane.incidence(p, t[static_cast<std::size_t>(a)]) &&
                  plane.incidence(p, t[static_cast<std::size_t>(b)])) {
                found = p;
                break;
              }
            pts[static_cast<std::size_t>(np++)] = found;
          }
      std::sort(pts.begin(), pts.end());
      auto idx = plane.sextuple_index(pts);
      if (!idx)
        throw std::runtime_error("triangle_splitting_sextuples: intersection points not general");
      out.push_back(*idx);
    }
  std::sort(out.begin(), out.end());
  return out;
}

EnriquesLattice::EnriquesLattice(const K3Lattice& ns, const ContractionConfig& cfg)
    : ns_(ns), cfg_(cfg), gram_full_(IntMatrix(10, 10)), gram10_(IntMatrix(10, 10)) {
  // The twelve contracted classes must span A1^12: Gram -2 * I.
  std::vector<std::vector<Int>> classes;
  for (int c : cfg_.curve_ids) classes.push_back(ns_.curve_in_quotient(c));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      Int expect = i == j ? -2 : 0;
      if (ns_.pair22(classes[static_cast<std::size_t>(i)], classes[static_cast<std::size_t>(j)]) != expect)
        throw std::runtime_error("EnriquesLattice: contracted classes are not A1^12");
    }

  IntMatrix pairings(12, 22);
  for (std::size_t i = 0; i < 12; ++i)
    pairings.set_row(i, mat_vec(ns_.gram22().matrix(), classes[i]));
  basis_ = kernel_basis(pairings);
  if (basis_.rows() != 10)
    throw std::runtime_error("EnriquesLattice: complement rank is not 10");
  if (!is_unimodular_row_basis(basis_))
    throw std::runtime_error("EnriquesLattice: complement is not primitive");

  IntMatrix full(10, 10), half(10, 10);
  for (std::size_t i = 0; i < 10; ++i) {
    std::vector<Int> gi = mat_vec(ns_.gram22().matrix(), basis_.row(i));
    for (std::size_t j = 0; j < 10; ++j) {
      Int v = dot(gi, basis_.row(j));
      full.at(i, j) = v;
      if (v % 2 != 0)
        throw std::runtime_error("EnriquesLattice: complement pairing has an odd entry");
      half.at(i, j) = v / 2;
    }
  }
  gram_full_ = IntegerSymMatrix(full);
  gram10_ = IntegerSymMatrix(half);

  if (gram10_.det_lattice() != -1)
    throw std::runtime_error("EnriquesLattice: halved determinant is not -1");
  if (!(gram10_.exact_signature() == Signature{1, 9, 0}))
    throw std::runtime_error("EnriquesLattice: halved signature is not (1,9)");
  for (std::size_t i = 0; i < 10; ++i)
    if (gram10_.at(i, i) % 2 != 0)
      throw std::runtime_error("EnriquesLattice: halved lattice is not even");
}

std::vector<Int> EnriquesLattice::project(const std::vector<Int>& quotient_vec) const {
  auto x = solve_left(basis_, quotient_vec);
  if (!x) throw std::invalid_argument("EnriquesLattice::project: vector not in the complement");
  return *x;
}

Int EnriquesLattice::pair10(const std::vector<Int>& a, const std::vector<Int>& b) const {
  return dot(a, mat_vec(gram10_.matrix(), b));
}

std::vector<NodalClass> nodal_curve_classes(const EnriquesLattice& numx) {
  const K3Lattice& ns = numx.ns();
  const ContractionConfig& cfg = numx.config();
  std::set<int> contracted(cfg.curve_ids.begin(), cfg.curve_ids.end());
  std::vector<NodalClass> out;
  for (int c = 0; c < 42; ++c) {
    if (contracted.count(c)) continue;
    std::vector<int> meets;
    for (int e : cfg.curve_ids)
      if (ns.gram42().at(static_cast<std::size_t>(c), static_cast<std::size_t>(e)) == 1)
        meets.push_back(e);
    if (meets.size() != 2)
      throw std::runtime_error("nodal_curve_classes: curve meets " + std::to_string(meets.size()) +
                               " contracted curves, expected 2");
    std::vector<Int> ambient(42, 0);
    ambient[static_cast<std::size_t>(c)] = 2;
    ambient[static_cast<std::size_t>(meets[0])] += 1;
    ambient[static_cast<std::size_t>(meets[1])] += 1;
    NodalClass nc{c, meets[0], meets[1], numx.project(ns.to_quotient(ambient))};
    if (numx.pair10(nc.coords, nc.coords) != -2)
      throw std::runtime_error("nodal_curve_classes: class does not square to -2");
    out.push_back(std::move(nc));
  }
  if (out.size() != 30) throw std::runtime_error("nodal_curve_classes: expected 30 classes");
  return out;
}

FortyClasses forty_classes(const EnriquesLattice& numx) {
  const K3Lattice& ns = numx.ns();
  FortyClasses out;
  for (const NodalClass& nc : nodal_curve_classes(numx)) {
    const CurveClass& c = ns.curves()[static_cast<std::size_t>(nc.curve_id)];
    bool line_family = c.family == CurveClass::Family::kLine;
    out.labels.push_back((line_family ? "a" : "b") + std::to_string(c.plane_id));
    out.kind.push_back(line_family ? 0 : 1);
    out.coords.push_back(nc.coords);
  }
  for (int s : numx.config().orthogonal_cremona) {
    std::vector<Int> v = numx.project(ns.cremona_vectors()[static_cast<std::size_t>(s)]);
    Int sq = numx.pair10(v, v);
    if (sq != -2)
      throw std::runtime_error("forty_classes: projected cremona vector does not square to -2");
    out.labels.push_back("r" + std::to_string(s));
    out.kind.push_back(2);
    out.coords.push_back(std::move(v));
  }
  if (out.coords.size() != 40) throw std::runtime_error("forty_classes: expected 40 classes");
  return out;
}

IntegerSymMatrix gram_of_40(const EnriquesLattice& numx, const FortyClasses& cls) {
  IntMatrix g(40, 40);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j) g.at(i, j) = numx.pair10(cls.coords[i], cls.coords[j]);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j) {
      if (i == j) {
        if (g.at(i, i) != -2) throw std::runtime_error("gram_of_40: diagonal is not -2");
      } else if (g.at(i, j) < 0 || g.at(i, j) > 2) {
        throw std::runtime_error("gram_of_40: off-diagonal value outside {0,1,2}");
      }
    }
  if (rank(g) != 10) throw std::runtime_error("gram_of_40: rank is not 10");
  return IntegerSymMatrix(g);
}

IntersectionGraph lattice_gamma(const EnriquesLattice& numx, const FortyClasses& cls) {
  IntegerSymMatrix g = gram_of_40(numx, cls);
  std::vector<std::vector<int>> m(40, std::vector<int>(40));
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j) m[i][j] = static_cast<int>(g.at(i, j));
  return IntersectionGraph(std::vector<std::string>(cls.labels), m);
}

}  // namespace enriqueslab
