// The projective plane PG(2,4): 21 rational points, 21 rational lines, the
// supersingular plane cubic x1^2 x2 + x1 x2^2 = x0^3 with its nine
// 3-torsion points, the tangent/transversal split of the rational lines,
// and the 168 general six-point sets (no three collinear).
//
// Points and lines are normalized homogeneous triples over GF(4) (first
// nonzero coordinate 1) and are enumerated in a fixed sorted order, so ids
// are reproducible across runs.

#ifndef ENRIQUESLAB_PLANE_HPP
#define ENRIQUESLAB_PLANE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "enriqueslab/gf.hpp"

namespace enriqueslab {

struct ProjTriple {
  std::array<FieldElement, 3> c;

  // Scales so that the first nonzero coordinate is 1; rejects (0,0,0).
  static ProjTriple normalized(FieldElement a, FieldElement b, FieldElement d);

  bool operator==(const ProjTriple& rhs) const { return c == rhs.c; }
  bool operator<(const ProjTriple& rhs) const;
  std::string str() const;
};

using ProjPoint = ProjTriple;
using ProjLine = ProjTriple;  // dual coordinates

// Sum of coordinate products vanishes.
bool incident(const ProjPoint& p, const ProjLine& l);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

struct Sextuple {
  std::array<int, 6> point_ids;  // sorted
  bool general = true;
};

struct LineType {
  bool triple_tangent = false;
  int tangent_point = -1;                        // valid when triple_tangent
  std::array<int, 3> transversal_points{-1, -1, -1};  // valid otherwise
};

// The fully enumerated plane.  Construction checks the expected counts and
// throws on any deviation.
class Plane {
 public:
  Plane();
  static const Plane& get();  // shared, built once

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  int point_id(const ProjPoint& p) const;
  int line_id(const ProjLine& l) const;

  bool incidence(int point, int line) const { return incidence_[point][line]; }
  const std::vector<int>& points_on(int line) const { return points_on_[line]; }
  const std::vector<int>& lines_through(int point) const { return lines_through_[point]; }

  // Value of the cubic at a point (over any field containing GF(4)).
  static FieldElement cubic(const std::array<FieldElement, 3>& x);

  const std::vector<int>& torsion_ids() const { return torsion_ids_; }
  bool is_torsion(int point) const;

  // Restriction-and-factorization over GF(64); throws on any factorization
  // pattern other than one triple root or three simple rational roots.
  LineType line_type(int line) const;
  const std::vector<LineType>& line_types() const { return line_types_; }

  bool collinear_ids(int i, int j, int k) const;
  const std::vector<Sextuple>& general_sextuples() const { return sextuples_; }
  std::optional<int> sextuple_index(const std::array<int, 6>& sorted_ids) const;

 private:
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
  std::vector<std::array<bool, 21>> incidence_;
  std::vector<std::vector<int>> points_on_, lines_through_;
  std::vector<int> torsion_ids_;
  std::vector<bool> torsion_mask_;
  std::vector<LineType> line_types_;
  std::vector<bool> collinear_;  // indexed i*441 + j*21 + k, i<j<k
  std::vector<Sextuple> sextuples_;
};

}  // namespace enriqueslab

#endif
