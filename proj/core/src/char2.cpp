#include "enriqueslab/char2.hpp"

#include <stdexcept>

namespace enriqueslab {

namespace {

SparsePoly var(const std::string& v, unsigned q = 2) { return SparsePoly::variable(v, q); }
SparsePoly one(unsigned q = 2) { return SparsePoly::constant(q, 1); }

}  // namespace

RationalFunction Derivation::apply(const SparsePoly& p) const {
  RationalFunction acc{SparsePoly(p.field_order())};
  for (const auto& [v, c] : coeffs_) acc += c * RationalFunction(p.partial(v));
  return acc;
}

RationalFunction Derivation::apply(const RationalFunction& f) const {
  // (D(n) q + n D(q)) / q^2; char 2 makes the quotient-rule signs equal.
  RationalFunction dn = apply(f.num());
  RationalFunction dd = apply(f.den());
  RationalFunction den{f.den()};
  return (dn * den + RationalFunction(f.num()) * dd) / (den * den);
}

Derivation surface_vector_field() {
  SparsePoly t = var("t"), x = var("x"), a = var("a");
  RationalFunction b(a, a + one());  // a/(1+a)
  RationalFunction tt{t};
  RationalFunction coeff_t =
      RationalFunction(t + one()) * RationalFunction(t + a) * (tt + b);
  RationalFunction coeff_x{one() + t * t * x};
  return Derivation({{"t", coeff_t}, {"x", coeff_x}});
}

Derivation surface_vector_field_at(const FieldElement& a) {
  if (a.pow(3).is_one())
    throw std::invalid_argument("surface_vector_field_at: a^3 = 1 is excluded");
  unsigned q = a.order();
  FieldElement b = a.is_zero() ? a : a / (FieldElement::one(q) + a);
  SparsePoly t = var("t", q), x = var("x", q);
  SparsePoly coeff_t =
      (t + one(q)) * (t + SparsePoly::constant(a)) * (t + SparsePoly::constant(b));
  SparsePoly coeff_x = one(q) + t * t * x;
  return Derivation({{"t", RationalFunction(coeff_t)}, {"x", RationalFunction(coeff_x)}});
}

TwoClosedCheck check_two_closed(const Derivation& d) {
  unsigned q = d.coeffs().begin()->second.num().field_order();
  RationalFunction t2{var("t", q) * var("t", q)};
  TwoClosedCheck out;
  const RationalFunction& dt = d.coeffs().at("t");
  const RationalFunction& dx = d.coeffs().at("x");
  out.dd_t = d.apply(dt);
  out.t2_d_t = t2 * dt;
  out.dd_x = d.apply(dx);
  out.t2_d_x = t2 * dx;
  out.holds = out.dd_t == out.t2_d_t && out.dd_x == out.t2_d_x;
  return out;
}

BlowupChartCheck blowup_chart_check() {
  SparsePoly T = var("T"), U = var("U"), a = var("a");
  RationalFunction b(a, a + one());
  RationalFunction t{T * U + one()};  // t = TU + 1
  SparsePoly x = U + one();           // x = U + 1

  // P = (t+1)(t+a)(t+b), Q = 1 + t^2 x, written on the chart.
  RationalFunction p = (t + RationalFunction(one())) * (t + RationalFunction(a)) * (t + b);
  RationalFunction qq = RationalFunction(one()) + t * t * RationalFunction(x);

  RationalFunction u_inv(one(), U);
  BlowupChartCheck out;
  // d/dt = (1/U) d/dT and d/dx = d/dU + (T/U) d/dT transform the field into
  // (P + QT)/U d/dT + Q d/dU.
  out.coeff_T = (p + qq * RationalFunction(T)) * u_inv;
  out.coeff_U = qq;

  RationalFunction apb = RationalFunction(a) + b;  // a + b = ab = a^2/(1+a)
  out.expect_T = RationalFunction(U) *
                 (RationalFunction(T.pow(3)) + apb * RationalFunction(T * T));
  out.expect_U = RationalFunction(U * (T * T * U * U + T * T * U + one()));
  out.holds = out.coeff_T == out.expect_T && out.coeff_U == out.expect_U;
  return out;
}

WeierstrassCheck weierstrass_transform_check() {
  SparsePoly t = var("t"), x = var("x"), y = var("y");
  SparsePoly one2 = one();
  SparsePoly s = t.pow(3) + one2;        // 1 + t^3
  SparsePoly aa = one2 + t * t * x;      // 1 + t^2 x
  // F = f2 y^2 + f1 y + f0.
  SparsePoly f2 = aa;
  SparsePoly f1 = aa;
  SparsePoly f0 = x.pow(3) + t * t * x;

  WeierstrassCheck out;

  // Division of a y-quadratic rational form by F.
  auto divide_by_cubic = [&](const RationalFunction& w, RationalFunction* lambda,
                             SparsePoly* obstruction) {
    const SparsePoly& num = w.num();
    if (num.degree_in("y") != 2) return false;
    SparsePoly n2 = num.coefficient_of("y", 2);
    SparsePoly n1 = num.coefficient_of("y", 1);
    SparsePoly n0 = num.coefficient_of("y", 0);
    if (obstruction) *obstruction = n1 * f2 + n2 * f1;
    if (lambda) *lambda = RationalFunction(n2, w.den() * f2);
    return (n1 * f2 == n2 * f1) && (n0 * f2 == n2 * f0);
  };

  {
    // Literal route, coefficients as displayed: a1 = 1, a2 = 1+t^3,
    // a3 = a4 = t^2(t^4+t), a6 = 0.
    RationalFunction u(s * x, t.pow(4));
    RationalFunction v(s * (aa * y + t * x), t.pow(6));
    SparsePoly a34 = t.pow(2) * (t.pow(4) + t);
    RationalFunction w = v * v + u * v + RationalFunction(a34) * v + u.pow(3) +
                         RationalFunction(s) * u * u + RationalFunction(a34) * u;
    std::string den_var;
    out.printed_denominator_t_power =
        w.den().is_univariate(&den_var) && (den_var.empty() || den_var == "t");
    out.printed_divides = divide_by_cubic(w, nullptr, &out.printed_obstruction);

    FieldElement omega = FieldElement::omega();
    out.degenerates_at_omega = u.num().specialize({{"t", omega}}, 4).is_zero() &&
                               v.num().specialize({{"t", omega}}, 4).is_zero();
  }

  {
    // Corrected route.  The flex of the cubic sits at (0:1:0) with tangent
    // z = t^2 x; the chart centered there is (x/(1+t^2x), y/(1+t^2x)).
    // Scaling by (1+t^3)^2/t^4 and (1+t^3)^2/t^6 and shifting by
    // r = (1+t^3)/t^3, w0 = r + r^2 matches the displayed model with its
    // coefficients read in the base coordinate 1/t.
    RationalFunction r(s, t.pow(3));
    RationalFunction w0 = r + r * r;
    RationalFunction u = RationalFunction(s * s * x, aa * t.pow(4)) + r;
    RationalFunction v = RationalFunction(s * s * y, aa * t.pow(6)) + w0;
    // a2(1/t) = (1+t^3)/t^3, a3(1/t) = a4(1/t) = (1+t^3)/t^6.
    RationalFunction a2_flip(s, t.pow(3));
    RationalFunction a34_flip(s, t.pow(6));
    RationalFunction w =
        v * v + u * v + a34_flip * v + u.pow(3) + a2_flip * u * u + a34_flip * u;
    out.corrected_divides = divide_by_cubic(w, &out.corrected_lambda, nullptr);
    out.lambda_nonzero = !out.corrected_lambda.is_zero();
  }
  return out;
}

WeierstrassModel WeierstrassModel::canonical() {
  SparsePoly t = var("t");
  return WeierstrassModel{one(), t.pow(3) + one(), t.pow(2) * (t.pow(4) + t),
                          t.pow(2) * (t.pow(4) + t), SparsePoly(2, {"t"})};
}

SparsePoly WeierstrassModel::b2() const { return a1 * a1; }
SparsePoly WeierstrassModel::b4() const { return a1 * a3; }
SparsePoly WeierstrassModel::b6() const { return a3 * a3; }
SparsePoly WeierstrassModel::b8() const { return a1 * a1 * a6 + a1 * a3 * a4 + a2 * a3 * a3 + a4 * a4; }
SparsePoly WeierstrassModel::c4() const { return b2() * b2(); }
SparsePoly WeierstrassModel::discriminant() const {
  SparsePoly v2 = b2(), v4 = b4(), v6 = b6(), v8 = b8();
  return v2 * v2 * v8 + v6 * v6 + v2 * v4 * v6;
}

DiscriminantReport discriminant_report(const WeierstrassModel& w) {
  DiscriminantReport out{w.discriminant(), false, {}, 0};
  SparsePoly t = var("t");
  SparsePoly closed = t.pow(6) * (t.pow(3) + one()).pow(6);
  out.matches_closed_form = out.delta == closed;

  // Orders at the rational zeros over GF(4); the total matching the degree
  // certifies there are no zeros anywhere else.
  SparsePoly d4 = out.delta.promoted(4);
  SparsePoly t4 = var("t", 4);
  for (const FieldElement& r : all_field_elements(4)) {
    SparsePoly factor = t4 + SparsePoly::constant(r);
    int ord = 0;
    SparsePoly cur = d4;
    while (true) {
      // Exact division attempt by (t + r) via evaluation + deflation.
      if (!cur.evaluate({{"t", r}}).is_zero()) break;
      // Synthetic division.
      int deg = cur.degree_in("t");
      std::vector<FieldElement> coeff(static_cast<std::size_t>(deg) + 1,
                                      FieldElement::zero(4));
      for (const auto& [e, c] : cur.terms()) coeff[e.empty() ? 0 : e[0]] = c;
      std::vector<FieldElement> quo(static_cast<std::size_t>(deg), FieldElement::zero(4));
      FieldElement acc = coeff.back();
      for (std::size_t k = static_cast<std::size_t>(deg); k-- > 0;) {
        quo[k] = acc;
        acc = coeff[k] + acc * r;
      }
      SparsePoly next(4, {"t"});
      for (std::size_t k = 0; k < quo.size(); ++k)
        if (!quo[k].is_zero()) next.add_term({{"t", static_cast<unsigned>(k)}}, quo[k]);
      cur = next;
      ++ord;
    }
    if (ord > 0) {
      out.zero_orders.emplace_back(r, ord);
      out.total_order += ord;
    }
  }
  return out;
}

std::vector<FiberHint> fiber_multiplicity_hint(const WeierstrassModel& w) {
  DiscriminantReport rep = discriminant_report(w);
  // c4 = 1 for this model, so j = 1/delta and v(j) = -ord(delta).
  if (!(w.c4() == one())) throw std::logic_error("fiber_multiplicity_hint: c4 != 1");
  std::vector<FiberHint> out;
  for (const auto& [zero, ord] : rep.zero_orders) {
    bool a1_nonzero = !w.a1.promoted(4).evaluate({{"t", zero}}).is_zero();
    out.push_back({zero, ord, -ord, a1_nonzero});
  }
  return out;
}

EulerCheck euler_formula_check(const K3Lattice& ns, const ContractionConfig& cfg, int n_curves) {
  if (n_curves < 0 || n_curves > 12)
    throw std::invalid_argument("euler_formula_check: need 0 <= n_curves <= 12");
  std::vector<Int> d(22, 0);
  for (int i = 0; i < n_curves; ++i) {
    std::vector<Int> c = ns.curve_in_quotient(cfg.curve_ids[static_cast<std::size_t>(i)]);
    for (std::size_t j = 0; j < 22; ++j) d[j] -= c[j];
  }
  EulerCheck out;
  out.d_squared = ns.pair22(d, d);
  out.k_pairing = 0;  // the canonical class of a K3 is numerically trivial
  out.deg_isolated = 24 + out.k_pairing + out.d_squared;
  out.divisorial = out.deg_isolated == 0;
  return out;
}

}  // namespace enriqueslab
