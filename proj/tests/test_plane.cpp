#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "enriqueslab/plane.hpp"

using namespace enriqueslab;

namespace {

FieldElement f4(unsigned b) { return FieldElement(4, b); }

ProjPoint pt(unsigned a, unsigned b, unsigned c) {
  return ProjTriple::normalized(f4(a), f4(b), f4(c));
}

FieldElement det3(const std::array<std::array<FieldElement, 3>, 3>& m) {
  FieldElement d = FieldElement::zero(4);
  d += m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1]);
  d += m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0]);
  d += m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0]);
  return d;
}

}  // namespace

TEST_CASE("21 points and 21 lines, duality") {
  const Plane& pl = Plane::get();
  CHECK(pl.points().size() == 21);
  CHECK(pl.lines().size() == 21);
  CHECK_NOTHROW(pl.point_id(pt(0, 1, 0)));
}

TEST_CASE("incidence pairing") {
  const Plane& pl = Plane::get();
  int q0 = pl.point_id(pt(0, 1, 0));
  int l = pl.line_id(pt(0, 1, 0));  // the line x1 = 0
  CHECK(!pl.incidence(q0, l));      // pairing is 1, not 0
  // Each line has exactly 5 points, each point 5 lines; row/col sums 5.
  for (int i = 0; i < 21; ++i) {
    CHECK(pl.points_on(i).size() == 5);
    CHECK(pl.lines_through(i).size() == 5);
  }
}

TEST_CASE("two distinct points lie on one line; two lines meet in one point") {
  const Plane& pl = Plane::get();
  for (int p = 0; p < 21; ++p)
    for (int q = p + 1; q < 21; ++q) {
      int common = 0;
      for (int l = 0; l < 21; ++l)
        if (pl.incidence(p, l) && pl.incidence(q, l)) ++common;
      CHECK(common == 1);
    }
  for (int l = 0; l < 21; ++l)
    for (int m = l + 1; m < 21; ++m) {
      int common = 0;
      for (int p = 0; p < 21; ++p)
        if (pl.incidence(p, l) && pl.incidence(p, m)) ++common;
      CHECK(common == 1);
    }
}

TEST_CASE("nine torsion points satisfy the cubic and are rational") {
  const Plane& pl = Plane::get();
  CHECK(pl.torsion_ids().size() == 9);
  // Q3 = (1, w, 1): w + w^2 = 1 balances the x0^3 term.
  int q3 = pl.point_id(pt(1, 2, 1));
  CHECK(pl.is_torsion(q3));
  FieldElement w = FieldElement::omega();
  CHECK(w + w * w == FieldElement::one(4));
  // Q0 = (0,1,0): 0 = 0.
  CHECK(pl.is_torsion(pl.point_id(pt(0, 1, 0))));
  for (int id : pl.torsion_ids()) CHECK(Plane::cubic(pl.points()[id].c).is_zero());
}

TEST_CASE("line type census: 9 triple tangents, 12 transversals") {
  const Plane& pl = Plane::get();
  int tangents = 0, transversals = 0;
  std::set<int> tangency_points;
  for (int l = 0; l < 21; ++l) {
    const LineType& t = pl.line_types()[l];
    if (t.triple_tangent) {
      ++tangents;
      tangency_points.insert(t.tangent_point);
      CHECK(pl.is_torsion(t.tangent_point));
      CHECK(pl.incidence(t.tangent_point, l));
    } else {
      ++transversals;
      std::set<int> distinct(t.transversal_points.begin(), t.transversal_points.end());
      CHECK(distinct.size() == 3);
      for (int p : t.transversal_points) {
        CHECK(pl.is_torsion(p));
        CHECK(pl.incidence(p, l));
      }
    }
  }
  CHECK(tangents == 9);
  CHECK(transversals == 12);
  // Tangency points biject with the nine torsion points.
  CHECK(tangency_points.size() == 9);
}

TEST_CASE("the line x1 = 0 is the triple tangent at (0,0,1)") {
  const Plane& pl = Plane::get();
  int l = pl.line_id(pt(0, 1, 0));
  const LineType& t = pl.line_types()[l];
  CHECK(t.triple_tangent);
  CHECK(t.tangent_point == pl.point_id(pt(0, 0, 1)));
}

TEST_CASE("168 general sextuples, against the all-triples oracle") {
  const Plane& pl = Plane::get();
  CHECK(pl.general_sextuples().size() == 168);
  for (const Sextuple& s : pl.general_sextuples()) {
    CHECK(std::is_sorted(s.point_ids.begin(), s.point_ids.end()));
    // Brute-force oracle: all C(6,3) = 20 triples non-collinear, computed
    // from coordinates rather than the cached table.
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          CHECK(!collinear(pl.points()[s.point_ids[i]], pl.points()[s.point_ids[j]],
                           pl.points()[s.point_ids[k]]));
  }
  // A set containing three collinear points is excluded.
  const auto& on_line = pl.points_on(0);
  std::array<int, 6> bad{};
  std::copy(on_line.begin(), on_line.begin() + 3, bad.begin());
  int extra = 0;
  for (int p = 0; extra < 3 && p < 21; ++p)
    if (std::find(on_line.begin(), on_line.end(), p) == on_line.end()) bad[3 + extra++] = p;
  std::sort(bad.begin(), bad.end());
  CHECK(!pl.sextuple_index(bad).has_value());
}

TEST_CASE("sextuple set is collineation invariant (20 random spot checks)") {
  const Plane& pl = Plane::get();
  std::set<std::array<int, 6>> all;
  for (const Sextuple& s : pl.general_sextuples()) all.insert(s.point_ids);

  std::mt19937_64 rng(0xc0111);
  std::uniform_int_distribution<unsigned> d(0, 3);
  int done = 0;
  while (done < 20) {
    std::array<std::array<FieldElement, 3>, 3> m;
    for (auto& row : m)
      for (auto& x : row) x = f4(d(rng));
    if (det3(m).is_zero()) continue;
    ++done;
    // Induced permutation of the 21 points.
    std::array<int, 21> perm{};
    for (int p = 0; p < 21; ++p) {
      std::array<FieldElement, 3> y{FieldElement::zero(4), FieldElement::zero(4),
                                    FieldElement::zero(4)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += m[i][j] * pl.points()[p].c[j];
      perm[p] = pl.point_id(ProjTriple::normalized(y[0], y[1], y[2]));
    }
    for (const Sextuple& s : pl.general_sextuples()) {
      std::array<int, 6> img{};
      for (int i = 0; i < 6; ++i) img[i] = perm[s.point_ids[i]];
      std::sort(img.begin(), img.end());
      CHECK(all.count(img) == 1);
    }
  }
}
