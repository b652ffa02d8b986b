#include "enriqueslab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace enriqueslab {

namespace {

unsigned common_field(unsigned a, unsigned b) {
  if (FieldElement::embeddable(a, b)) return b;
  if (FieldElement::embeddable(b, a)) return a;
  throw std::invalid_argument("no common field for GF(" + std::to_string(a) + ") and GF(" +
                              std::to_string(b) + ")");
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly::SparsePoly(unsigned field_order, std::vector<std::string> vars)
    : field_order_(field_order), vars_(std::move(vars)) {
  if (!std::is_sorted(vars_.begin(), vars_.end())) std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw std::invalid_argument("SparsePoly: duplicate variable name");
}

SparsePoly SparsePoly::constant(FieldElement c) {
  SparsePoly p(c.order());
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
  return p;
}

SparsePoly SparsePoly::constant(unsigned field_order, unsigned bits) {
  return constant(FieldElement(field_order, bits));
}

SparsePoly SparsePoly::variable(const std::string& name, unsigned field_order) {
  SparsePoly p(field_order, {name});
  p.terms_.emplace(Exponents{1}, FieldElement::one(field_order));
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned e) { return e == 0; }));
}

FieldElement SparsePoly::constant_term() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? FieldElement::zero(field_order_) : it->second;
}

void SparsePoly::add_term(const std::map<std::string, unsigned>& monomial, FieldElement c) {
  std::vector<std::string> merged = vars_;
  for (const auto& [name, exp] : monomial) {
    if (exp > 0 && !std::binary_search(merged.begin(), merged.end(), name)) {
      merged.insert(std::upper_bound(merged.begin(), merged.end(), name), name);
    }
  }
  if (merged.size() != vars_.size()) *this = with_vars(merged);
  unsigned order = common_field(field_order_, c.order());
  if (order != field_order_) *this = promoted(order);

  Exponents e(vars_.size(), 0);
  for (const auto& [name, exp] : monomial) {
    if (exp == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    e[static_cast<size_t>(it - vars_.begin())] = exp;
  }
  FieldElement cc = c.embed_into(field_order_);
  auto [it, inserted] = terms_.emplace(e, cc);
  if (!inserted) it->second += cc;
  prune();
}

SparsePoly SparsePoly::with_vars(const std::vector<std::string>& vars) const {
  SparsePoly out(field_order_, vars);
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i])
      throw std::logic_error("SparsePoly: variable lost in remap");
    pos[i] = static_cast<size_t>(it - vars.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::pair<SparsePoly, SparsePoly> SparsePoly::aligned(const SparsePoly& a, const SparsePoly& b) {
  unsigned order = common_field(a.field_order_, b.field_order_);
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged));
  return {a.promoted(order).with_vars(merged), b.promoted(order).with_vars(merged)};
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
  auto [a, b] = aligned(*this, rhs);
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = a.terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  a.prune();
  return a;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
  auto [a, b] = aligned(*this, rhs);
  SparsePoly out(a.field_order_, a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      FieldElement c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(e), c);
      if (!inserted) it->second += c;
    }
  }
  out.prune();
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly acc = constant(field_order_, 1), base = *this;
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool SparsePoly::operator==(const SparsePoly& rhs) const {
  auto [a, b] = aligned(*this, rhs);
  return a.terms_ == b.terms_;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

int SparsePoly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return is_zero() ? -1 : 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

bool SparsePoly::is_univariate(std::string* var) const {
  std::optional<size_t> used;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (used && *used != i) return false;
      used = i;
    }
  }
  if (var && used) *var = vars_[*used];
  if (var && !used) var->clear();
  return true;
}

SparsePoly SparsePoly::partial(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return SparsePoly(field_order_, vars_);
  size_t idx = static_cast<size_t>(it - vars_.begin());
  SparsePoly out(field_order_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] % 2 == 0) continue;  // char 2: even exponents die
    Exponents ne = e;
    ne[idx] -= 1;
    auto [jt, inserted] = out.terms_.emplace(std::move(ne), c);
    if (!inserted) jt->second += c;
  }
  out.prune();
  return out;
}

SparsePoly SparsePoly::coefficient_of(const std::string& var, unsigned k) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var)
    return k == 0 ? *this : SparsePoly(field_order_, vars_);
  size_t idx = static_cast<size_t>(it - vars_.begin());
  SparsePoly out(field_order_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents ne = e;
    ne[idx] = 0;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

FieldElement SparsePoly::evaluate(const std::map<std::string, FieldElement>& point) const {
  unsigned order = field_order_;
  for (const auto& [name, v] : point) order = common_field(order, v.order());
  FieldElement acc = FieldElement::zero(order);
  for (const auto& [e, c] : terms_) {
    FieldElement term = c.embed_into(order);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw std::invalid_argument("SparsePoly::evaluate: unbound variable " + vars_[i]);
      term *= it->second.embed_into(order).pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

SparsePoly SparsePoly::specialize(const std::map<std::string, FieldElement>& point,
                                  unsigned target_order) const {
  std::vector<std::string> kept;
  for (const auto& v : vars_)
    if (!point.count(v)) kept.push_back(v);
  SparsePoly out(target_order, kept);
  for (const auto& [e, c] : terms_) {
    FieldElement coeff = c.embed_into(target_order);
    Exponents ne;
    ne.reserve(kept.size());
    for (size_t i = 0; i < e.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it == point.end()) {
        ne.push_back(e[i]);
      } else if (e[i] > 0) {
        coeff *= it->second.embed_into(target_order).pow(e[i]);
      }
    }
    if (coeff.is_zero()) continue;
    auto [jt, inserted] = out.terms_.emplace(std::move(ne), coeff);
    if (!inserted) jt->second += coeff;
  }
  out.prune();
  return out;
}

RationalFunction SparsePoly::substitute(
    const std::map<std::string, RationalFunction>& bindings) const {
  unsigned order = field_order_;
  for (const auto& [name, rf] : bindings) {
    order = common_field(order, rf.num().field_order());
    order = common_field(order, rf.den().field_order());
  }
  RationalFunction acc{SparsePoly(order)};
  for (const auto& [e, c] : terms_) {
    RationalFunction term{SparsePoly::constant(c.embed_into(order))};
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(vars_[i]);
      RationalFunction base = it != bindings.end()
                                  ? it->second
                                  : RationalFunction(SparsePoly::variable(vars_[i], order));
      term *= base.pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

SparsePoly SparsePoly::promoted(unsigned target_order) const {
  if (target_order == field_order_) return *this;
  SparsePoly out(target_order, vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.embed_into(target_order));
  return out;
}

FieldElement SparsePoly::leading_coefficient() const {
  if (terms_.empty()) return FieldElement::zero(field_order_);
  return terms_.rbegin()->second;
}

Exponents SparsePoly::monomial_content() const {
  Exponents content(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      content = e;
      first = false;
    } else {
      for (size_t i = 0; i < e.size(); ++i) content[i] = std::min(content[i], e[i]);
    }
  }
  return content;
}

SparsePoly SparsePoly::divided_by_monomial(const Exponents& m) const {
  SparsePoly out(field_order_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < m[i]) throw std::invalid_argument("divided_by_monomial: not divisible");
      ne[i] = e[i] - m[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

SparsePoly SparsePoly::gcd_univariate(const SparsePoly& a, const SparsePoly& b) {
  std::string va, vb;
  if (!a.is_univariate(&va) || !b.is_univariate(&vb))
    throw std::invalid_argument("gcd_univariate: multivariate input");
  if (!va.empty() && !vb.empty() && va != vb)
    throw std::invalid_argument("gcd_univariate: different variables");
  std::string var = va.empty() ? vb : va;

  auto make_monic = [](SparsePoly p) {
    FieldElement lc = p.leading_coefficient();
    if (!lc.is_zero() && !lc.is_one()) p = p * SparsePoly::constant(lc.inverse());
    return p;
  };
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (var.empty()) return SparsePoly::constant(a.field_order_, 1);

  // Remainder of univariate division.
  auto rem = [&](SparsePoly num, const SparsePoly& den) {
    int dd = den.degree_in(var);
    FieldElement lc = den.coefficient_of(var, static_cast<unsigned>(dd)).constant_term();
    while (!num.is_zero() && num.degree_in(var) >= dd) {
      int dn = num.degree_in(var);
      FieldElement cn = num.coefficient_of(var, static_cast<unsigned>(dn)).constant_term();
      SparsePoly shift = SparsePoly::variable(var, num.field_order())
                             .pow(static_cast<unsigned>(dn - dd)) *
                         SparsePoly::constant(cn / lc);
      num = num + shift * den;  // char 2 subtraction
    }
    return num;
  };

  auto [x, y] = aligned(a, b);
  while (!y.is_zero()) {
    SparsePoly r = rem(x, y);
    x = y;
    y = r;
  }
  return make_monic(x);
}

void SparsePoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

RationalFunction::RationalFunction(SparsePoly num, SparsePoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  normalize();
}

RationalFunction::RationalFunction(const SparsePoly& num)
    : num_(num), den_(SparsePoly::constant(num.field_order(), 1)) {
  normalize();
}

void RationalFunction::normalize() {
  unsigned order = common_field(num_.field_order(), den_.field_order());
  num_ = num_.promoted(order);
  den_ = den_.promoted(order);
  if (num_.is_zero()) {
    den_ = SparsePoly::constant(den_.field_order(), 1);
    return;
  }
  // Common monomial content.
  Exponents cn = num_.monomial_content();
  Exponents cd = den_.monomial_content();
  Exponents common_n(cn.size(), 0), common_d(cd.size(), 0);
  bool any = false;
  for (size_t i = 0; i < cn.size(); ++i) {
    const std::string& v = num_.vars()[i];
    auto it = std::lower_bound(den_.vars().begin(), den_.vars().end(), v);
    if (it == den_.vars().end() || *it != v) continue;
    size_t j = static_cast<size_t>(it - den_.vars().begin());
    unsigned m = std::min(cn[i], cd[j]);
    if (m > 0) {
      common_n[i] = m;
      common_d[j] = m;
      any = true;
    }
  }
  if (any) {
    num_ = num_.divided_by_monomial(common_n);
    den_ = den_.divided_by_monomial(common_d);
  }
  // Univariate quotients reduce fully.
  std::string vn, vd;
  if (num_.is_univariate(&vn) && den_.is_univariate(&vd) &&
      (vn.empty() || vd.empty() || vn == vd)) {
    SparsePoly g = SparsePoly::gcd_univariate(num_, den_);
    if (g.total_degree() > 0) {
      std::string var = vn.empty() ? vd : vn;
      auto divide = [&](const SparsePoly& p) {
        // Exact univariate division p / g.
        SparsePoly q(p.field_order(), p.vars());
        SparsePoly r = p;
        int dg = g.degree_in(var);
        FieldElement lg = g.coefficient_of(var, static_cast<unsigned>(dg)).constant_term();
        while (!r.is_zero() && r.degree_in(var) >= dg) {
          int dr = r.degree_in(var);
          FieldElement cr = r.coefficient_of(var, static_cast<unsigned>(dr)).constant_term();
          SparsePoly shift = SparsePoly::variable(var, p.field_order())
                                 .pow(static_cast<unsigned>(dr - dg)) *
                             SparsePoly::constant(cr / lg);
          q = q + shift;
          r = r + shift * g.promoted(p.field_order());
        }
        if (!r.is_zero()) throw std::logic_error("normalize: gcd does not divide");
        return q;
      };
      num_ = divide(num_);
      den_ = divide(den_);
    }
  }
  // Scalar normalization: monic denominator in graded-lex order.
  FieldElement lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    SparsePoly s = SparsePoly::constant(lc.inverse());
    num_ = num_ * s;
    den_ = den_ * s;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction acc{SparsePoly::constant(num_.field_order(), 1)};
  RationalFunction base = *this;
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
  return (num_ * rhs.den_) == (rhs.num_ * den_);
}

FieldElement RationalFunction::evaluate(const std::map<std::string, FieldElement>& point) const {
  FieldElement d = den_.evaluate(point);
  if (d.is_zero()) throw std::domain_error("RationalFunction::evaluate: denominator vanishes");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::substitute(
    const std::map<std::string, RationalFunction>& bindings) const {
  RationalFunction d = den_.substitute(bindings);
  if (d.is_zero())
    throw std::domain_error("RationalFunction::substitute: denominator vanishes identically");
  return num_.substitute(bindings) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_constant() && den_.constant_term().is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace enriqueslab
