#include "enriqueslab/plane.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace enriqueslab {

namespace {

FieldElement f4(unsigned bits) { return FieldElement(4, bits); }

}  // namespace

ProjTriple ProjTriple::normalized(FieldElement a, FieldElement b, FieldElement d) {
  ProjTriple t{{a, b, d}};
  int first = -1;
  for (int i = 0; i < 3; ++i)
    if (!t.c[i].is_zero()) {
      first = i;
      break;
    }
  if (first < 0) throw std::invalid_argument("ProjTriple: zero triple");
  FieldElement inv = t.c[first].inverse();
  for (auto& x : t.c) x = x * inv;
  return t;
}

bool ProjTriple::operator<(const ProjTriple& rhs) const {
  for (int i = 0; i < 3; ++i) {
    if (c[i] != rhs.c[i]) return c[i] < rhs.c[i];
  }
  return false;
}

std::string ProjTriple::str() const {
  return "(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + ")";
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  FieldElement s = FieldElement::zero(4);
  for (int i = 0; i < 3; ++i) s += p.c[i] * l.c[i];
  return s.is_zero();
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  // 3x3 determinant over GF(4); char 2 so all cofactors add.
  FieldElement det = p.c[0] * (q.c[1] * r.c[2] + q.c[2] * r.c[1]) +
                     p.c[1] * (q.c[0] * r.c[2] + q.c[2] * r.c[0]) +
                     p.c[2] * (q.c[0] * r.c[1] + q.c[1] * r.c[0]);
  return det.is_zero();
}

FieldElement Plane::cubic(const std::array<FieldElement, 3>& x) {
  return x[0] * x[0] * x[0] + x[1] * x[1] * x[2] + x[1] * x[2] * x[2];
}

Plane::Plane() {
  // All normalized triples, in sorted order.
  std::vector<ProjTriple> triples;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b)
      for (unsigned d = 0; d < 4; ++d) {
        if (a == 0 && b == 0 && d == 0) continue;
        ProjTriple t = ProjTriple::normalized(f4(a), f4(b), f4(d));
        triples.push_back(t);
      }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  if (triples.size() != 21) throw std::logic_error("Plane: expected 21 rational points");
  points_ = triples;
  lines_ = triples;

  incidence_.assign(21, {});
  points_on_.assign(21, {});
  lines_through_.assign(21, {});
  for (int p = 0; p < 21; ++p)
    for (int l = 0; l < 21; ++l) {
      bool inc = incident(points_[p], lines_[l]);
      incidence_[p][l] = inc;
      if (inc) {
        points_on_[l].push_back(p);
        lines_through_[p].push_back(l);
      }
    }
  for (int i = 0; i < 21; ++i) {
    if (points_on_[i].size() != 5 || lines_through_[i].size() != 5)
      throw std::logic_error("Plane: incidence is not 5-regular");
  }

  // The nine 3-torsion points of the cubic.
  const FieldElement w = FieldElement::omega();
  const FieldElement w2 = w * w;
  const FieldElement o = f4(0), e = f4(1);
  const std::array<std::array<FieldElement, 3>, 9> listed = {{
      {o, e, o}, {o, o, e}, {o, e, e}, {e, w, e}, {w, w, e},
      {w2, w, e}, {e, w2, e}, {w, w2, e}, {w2, w2, e},
  }};
  torsion_mask_.assign(21, false);
  for (const auto& q : listed) {
    if (!cubic(q).is_zero())
      throw std::logic_error("Plane: listed torsion point fails the cubic");
    int id = point_id(ProjTriple::normalized(q[0], q[1], q[2]));
    torsion_mask_[id] = true;
  }
  for (int p = 0; p < 21; ++p)
    if (torsion_mask_[p]) torsion_ids_.push_back(p);
  if (torsion_ids_.size() != 9) throw std::logic_error("Plane: expected 9 torsion points");
  // They are exactly the rational points of the cubic.
  for (int p = 0; p < 21; ++p)
    if (cubic(points_[p].c).is_zero() != torsion_mask_[p])
      throw std::logic_error("Plane: torsion list does not match the cubic");

  line_types_.reserve(21);
  int tangents = 0;
  for (int l = 0; l < 21; ++l) {
    line_types_.push_back(line_type(l));
    if (line_types_.back().triple_tangent) ++tangents;
  }
  if (tangents != 9) throw std::logic_error("Plane: expected 9 triple tangents");

  // Collinearity table for all ordered-increasing triples.
  collinear_.assign(21 * 21 * 21, false);
  for (int i = 0; i < 21; ++i)
    for (int j = i + 1; j < 21; ++j)
      for (int k = j + 1; k < 21; ++k)
        collinear_[static_cast<std::size_t>(i) * 441 + static_cast<std::size_t>(j) * 21 +
                   static_cast<std::size_t>(k)] = collinear(points_[i], points_[j], points_[k]);

  // General sextuples by depth-first extension with collinearity pruning.
  std::array<int, 6> cur{};
  auto extend = [&](auto&& self, int depth, int start) -> void {
    if (depth == 6) {
      sextuples_.push_back(Sextuple{cur, true});
      return;
    }
    for (int p = start; p < 21; ++p) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i)
        for (int j = i + 1; j < depth && ok; ++j)
          if (collinear_ids(cur[i], cur[j], p)) ok = false;
      if (!ok) continue;
      cur[depth] = p;
      self(self, depth + 1, p + 1);
    }
  };
  extend(extend, 0, 0);
}

const Plane& Plane::get() {
  static const Plane plane;
  return plane;
}

int Plane::point_id(const ProjPoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || !(*it == p)) throw std::invalid_argument("point_id: not rational");
  return static_cast<int>(it - points_.begin());
}

int Plane::line_id(const ProjLine& l) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), l);
  if (it == lines_.end() || !(*it == l)) throw std::invalid_argument("line_id: not rational");
  return static_cast<int>(it - lines_.begin());
}

bool Plane::is_torsion(int point) const { return torsion_mask_[point]; }

LineType Plane::line_type(int line) const {
  // Parametrize the line by two of its rational points and factor the
  // restricted cubic over GF(64).
  const std::vector<int>& pts = points_on_[line];
  std::array<FieldElement, 3> p64, q64;
  for (int i = 0; i < 3; ++i) {
    p64[i] = points_[pts[0]].c[i].embed_into(64);
    q64[i] = points_[pts[1]].c[i].embed_into(64);
  }
  // Coefficients of F(s*P + Q) as a cubic in s.
  std::array<FieldElement, 4> coeff{FieldElement::zero(64), FieldElement::zero(64),
                                    FieldElement::zero(64), FieldElement::zero(64)};
  {
    // F(sP+Q) = s^3 F(P) + s^2 B(P,P,Q) + s B(P,Q,Q) + F(Q) where B is the
    // polar form; expand by brute force over four interpolation values.
    // Four distinct s-values in GF(4) determine a cubic exactly.
    std::array<FieldElement, 4> svals = {FieldElement::zero(64), FieldElement::one(64),
                                         FieldElement::omega().embed_into(64),
                                         (FieldElement::omega() * FieldElement::omega()).embed_into(64)};
    // Solve the 4x4 Vandermonde system by Lagrange interpolation.
    for (int i = 0; i < 4; ++i) {
      std::array<FieldElement, 3> x;
      for (int k = 0; k < 3; ++k) x[k] = svals[i] * p64[k] + q64[k];
      FieldElement fi = cubic(x);
      if (fi.is_zero()) continue;
      // Lagrange basis polynomial for node i, coefficients in s.
      std::array<FieldElement, 4> basis{FieldElement::one(64), FieldElement::zero(64),
                                        FieldElement::zero(64), FieldElement::zero(64)};
      FieldElement denom = FieldElement::one(64);
      int deg = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        denom *= svals[i] + svals[j];
        for (int d = deg; d >= 0; --d) {
          basis[d + 1] += basis[d];             // multiply by s
          basis[d] = basis[d] * svals[j];        // ... plus s_j (char 2)
        }
        ++deg;
      }
      FieldElement scale = fi / denom;
      for (int d = 0; d < 4; ++d) coeff[d] += basis[d] * scale;
    }
  }

  // Roots in s over GF(64), with multiplicities via synthetic division;
  // the root "at infinity" has multiplicity 3 - deg.
  int deg = 3;
  while (deg >= 0 && coeff[deg].is_zero()) --deg;
  if (deg < 0) throw std::runtime_error("line_type: cubic restricts to zero");

  std::map<int, int> root_mult;  // point id -> multiplicity
  int mult_total = 0;
  {
    std::vector<FieldElement> poly(coeff.begin(), coeff.begin() + deg + 1);
    for (const FieldElement& r : all_field_elements(64)) {
      while (poly.size() > 1) {
        // Evaluate and divide out (s - r) while r stays a root.
        FieldElement val = FieldElement::zero(64);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) val = val * r + *it;
        if (!val.is_zero()) break;
        // Synthetic division by (s - r), highest degree first.
        std::vector<FieldElement> quo(poly.size() - 1, FieldElement::zero(64));
        FieldElement acc = poly.back();
        for (std::size_t d = poly.size() - 1; d-- > 0;) {
          quo[d] = acc;
          acc = poly[d] + acc * r;
        }
        if (!acc.is_zero()) throw std::logic_error("line_type: division remainder");
        poly = quo;
        std::array<FieldElement, 3> x;
        for (int k = 0; k < 3; ++k) x[k] = r * p64[k] + q64[k];
        ProjTriple pt = ProjTriple::normalized(x[0], x[1], x[2]);
        // The point must be rational: its GF(64) coordinates must come from GF(4).
        int id = -1;
        for (int cand : pts) {
          std::array<FieldElement, 3> c4;
          bool eq = true;
          for (int k = 0; k < 3 && eq; ++k) {
            c4[k] = points_[cand].c[k].embed_into(64);
            eq = c4[k] == pt.c[k];
          }
          if (eq) {
            id = cand;
            break;
          }
        }
        if (id < 0)
          throw std::runtime_error("line_type: root of the restricted cubic is not rational");
        ++root_mult[id];
        ++mult_total;
      }
    }
    if (3 - deg > 0) {
      // (s : u) = (1 : 0), the parametrizing point P itself.
      root_mult[pts[0]] += 3 - deg;
      mult_total += 3 - deg;
    }
  }

  if (mult_total != 3)
    throw std::runtime_error("line_type: restricted cubic does not split over GF(64)");

  LineType out;
  if (root_mult.size() == 1 && root_mult.begin()->second == 3) {
    out.triple_tangent = true;
    out.tangent_point = root_mult.begin()->first;
    if (!is_torsion(out.tangent_point))
      throw std::runtime_error("line_type: tangency point is not a torsion point");
    return out;
  }
  if (root_mult.size() == 3) {
    int i = 0;
    for (const auto& [id, m] : root_mult) {
      if (m != 1) throw std::runtime_error("line_type: unexpected multiplicity pattern");
      if (!is_torsion(id))
        throw std::runtime_error("line_type: transversal point is not a torsion point");
      out.transversal_points[i++] = id;
    }
    return out;
  }
  throw std::runtime_error("line_type: unexpected factorization pattern");
}

bool Plane::collinear_ids(int i, int j, int k) const {
  if (i == j || j == k || i == k) return true;
  int a = std::min({i, j, k});
  int c = std::max({i, j, k});
  int b = i + j + k - a - c;
  return collinear_[static_cast<std::size_t>(a) * 441 + static_cast<std::size_t>(b) * 21 +
                    static_cast<std::size_t>(c)];
}

std::optional<int> Plane::sextuple_index(const std::array<int, 6>& sorted_ids) const {
  for (std::size_t i = 0; i < sextuples_.size(); ++i)
    if (sextuples_[i].point_ids == sorted_ids) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace enriqueslab
