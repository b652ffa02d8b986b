// The rank-22 lattice model built from the 42-curve configuration on the
// covering K3 surface: the 42x42 configuration Gram, its rank-20 radical,
// the quotient with signature (1,21) and determinant -4, the class of a
// pulled-back line, the 168 (-4)-vectors attached to general six-point
// sets, the 12-curve contraction configurations, the halved rank-10
// complement (even unimodular of signature (1,9)), and the 40 (-2)-classes
// living there.

#ifndef ENRIQUESLAB_NSLATTICE_HPP
#define ENRIQUESLAB_NSLATTICE_HPP

#include <array>
#include <string>
#include <vector>

#include "enriqueslab/graph.hpp"
#include "enriqueslab/intmat.hpp"
#include "enriqueslab/plane.hpp"

namespace enriqueslab {

struct CurveClass {
  enum class Family { kLine, kPoint };
  int id;        // 0..41; 0..20 line pullbacks, 21..41 point blowups
  Family family;
  int plane_id;  // line id or point id
};

class K3Lattice {
 public:
  explicit K3Lattice(const Plane& plane);
  static const K3Lattice& get();

  const Plane& plane() const { return plane_; }
  const std::vector<CurveClass>& curves() const { return curves_; }
  int curve_for_line(int line_id) const { return line_id; }
  int curve_for_point(int point_id) const { return 21 + point_id; }

  const IntegerSymMatrix& gram42() const { return gram42_; }
  const IntMatrix& radical_basis() const { return radical_; }      // 20 x 42
  const IntMatrix& quotient_basis() const { return quotient_; }    // 22 x 42
  const IntegerSymMatrix& gram22() const { return gram22_; }

  std::vector<Int> to_quotient(const std::vector<Int>& ambient) const;
  std::vector<Int> curve_in_quotient(int curve_id) const;

  // 2 A_m + sum of the point curves on m, in quotient coordinates.
  std::vector<Int> ell_class(int line_id) const;
  const std::vector<Int>& ell() const { return ell_; }  // line-independent

  Int pair22(const std::vector<Int>& a, const std::vector<Int>& b) const;

  // One vector 2*ell - (C_1 + ... + C_6) per general sextuple, in quotient
  // coordinates, indexed like plane().general_sextuples().
  const std::vector<std::vector<Int>>& cremona_vectors() const { return cremona_; }
  // Pairing of cremona vector s with curve class c, tabulated once.
  const Int& cremona_curve_pairing(std::size_t s, int c) const {
    return cremona_pairings_[s][static_cast<std::size_t>(c)];
  }

 private:
  const Plane& plane_;
  std::vector<CurveClass> curves_;
  IntegerSymMatrix gram42_;
  IntMatrix radical_, quotient_;
  IntMatrix to_quotient_;  // 42 x 22, ambient -> quotient coordinates
  IntegerSymMatrix gram22_;
  std::vector<Int> ell_;
  std::vector<std::vector<Int>> cremona_;
  std::vector<std::vector<Int>> cremona_pairings_;
};

struct ContractionConfig {
  std::array<int, 6> line_ids;           // sorted
  std::array<int, 6> point_ids;          // sorted; the points off all six lines
  std::array<int, 12> curve_ids;         // six line curves then six point curves
  std::vector<int> orthogonal_cremona;   // sextuple indices, exactly ten
};

struct ConfigSearchStats {
  long line_sets_scanned = 0;
  long with_six_free_points = 0;
  long general_point_sets = 0;
  long orthogonality_checked = 0;
  long valid = 0;
};

// All contraction configurations in canonical (sorted line set) order.  With
// prune_concurrent the scan runs over the 168 line sextuples with no three
// concurrent lines; without it, over all C(21,6) line sets.  Both routes
// must agree (tested), the pruned one is the default.
std::vector<ContractionConfig> find_contraction_configs(const K3Lattice& ns,
                                                        ConfigSearchStats* stats = nullptr,
                                                        bool prune_concurrent = true);

// The ten splittings of a config's six lines into two triangles; each yields
// the sextuple of pairwise intersection points.  Returned as sextuple
// indices, sorted.
std::vector<int> triangle_splitting_sextuples(const K3Lattice& ns, const ContractionConfig& cfg);

class EnriquesLattice {
 public:
  EnriquesLattice(const K3Lattice& ns, const ContractionConfig& cfg);

  const K3Lattice& ns() const { return ns_; }
  const ContractionConfig& config() const { return cfg_; }
  const IntMatrix& complement_basis() const { return basis_; }          // 10 x 22
  const IntegerSymMatrix& complement_gram() const { return gram_full_; }  // before halving
  const IntegerSymMatrix& gram10() const { return gram10_; }

  // Coordinates in the complement basis; the argument must be a quotient
  // vector orthogonal to the twelve contracted classes.
  std::vector<Int> project(const std::vector<Int>& quotient_vec) const;
  Int pair10(const std::vector<Int>& a, const std::vector<Int>& b) const;

 private:
  const K3Lattice& ns_;
  ContractionConfig cfg_;
  IntMatrix basis_;
  IntegerSymMatrix gram_full_;
  IntegerSymMatrix gram10_;
};

struct NodalClass {
  int curve_id;            // the non-contracted curve C
  int e1, e2;              // the two contracted curves meeting C
  std::vector<Int> coords; // in the complement basis, pairing halved
};

// The 30 classes (2C + E + E') / 2 of the non-contracted curves.
std::vector<NodalClass> nodal_curve_classes(const EnriquesLattice& numx);

struct FortyClasses {
  std::vector<std::string> labels;
  std::vector<int> kind;                 // 0 nodal line-family, 1 nodal point-family, 2 cremona
  std::vector<std::vector<Int>> coords;  // 40 vectors in the complement basis
};

// 30 nodal classes (line family first) followed by the 10 projected cremona
// vectors, in canonical order.
FortyClasses forty_classes(const EnriquesLattice& numx);

IntegerSymMatrix gram_of_40(const EnriquesLattice& numx, const FortyClasses& cls);
IntersectionGraph lattice_gamma(const EnriquesLattice& numx, const FortyClasses& cls);

}  // namespace enriqueslab

#endif
