// Sparse multivariate polynomials and rational functions over the small
// binary fields.  Just enough structure for exact characteristic-2
// identities: arithmetic, formal partial derivatives, substitution and
// coefficient extraction.  No Groebner bases, no multivariate factorization.
//
// Variables are identified by name and kept in ASCII order inside each
// polynomial; terms are ordered graded-lexicographically, which makes
// printing and hashing deterministic.

#ifndef ENRIQUESLAB_POLY_HPP
#define ENRIQUESLAB_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriqueslab/gf.hpp"

namespace enriqueslab {

class RationalFunction;

using Exponents = std::vector<unsigned>;

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically on the exponent vector.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class SparsePoly {
 public:
  // The zero polynomial over the given field in the given variables.
  explicit SparsePoly(unsigned field_order, std::vector<std::string> vars = {});

  static SparsePoly constant(FieldElement c);
  static SparsePoly constant(unsigned field_order, unsigned bits);
  static SparsePoly variable(const std::string& name, unsigned field_order = 2);

  unsigned field_order() const { return field_order_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, FieldElement, GradedLexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero exponent vector), as a field element.
  FieldElement constant_term() const;

  // Adds c * prod(var^exp).  Variables not already present are introduced.
  void add_term(const std::map<std::string, unsigned>& monomial, FieldElement c);

  SparsePoly operator+(const SparsePoly& rhs) const;
  SparsePoly operator-(const SparsePoly& rhs) const { return *this + rhs; }  // char 2
  SparsePoly operator*(const SparsePoly& rhs) const;
  SparsePoly& operator+=(const SparsePoly& rhs) { return *this = *this + rhs; }
  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }
  SparsePoly pow(unsigned e) const;

  bool operator==(const SparsePoly& rhs) const;
  bool operator!=(const SparsePoly& rhs) const { return !(*this == rhs); }

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  // True when at most one variable occurs; reports it if there is one.
  bool is_univariate(std::string* var = nullptr) const;

  // Formal partial derivative (char 2: exponent parity decides survival).
  SparsePoly partial(const std::string& var) const;

  // The coefficient of var^k, a polynomial in the remaining variables.
  SparsePoly coefficient_of(const std::string& var, unsigned k) const;

  // Evaluation: every variable must be bound; field elements are promoted
  // to a common field when an embedding exists.
  FieldElement evaluate(const std::map<std::string, FieldElement>& point) const;

  // Partial evaluation: bound variables are replaced by field constants
  // (embedded into the target field), unbound ones are kept.
  SparsePoly specialize(const std::map<std::string, FieldElement>& point,
                        unsigned target_order) const;

  // Image under the ring homomorphism var -> binding; unbound variables map
  // to themselves.  Exact; the result is a rational function.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& bindings) const;

  // Coefficient-wise embedding into a larger field.
  SparsePoly promoted(unsigned target_order) const;

  // Monic gcd of univariate polynomials (Euclid).  Both arguments must be
  // univariate in the same single variable (constants allowed).
  static SparsePoly gcd_univariate(const SparsePoly& a, const SparsePoly& b);

  // Leading coefficient in graded-lex order (zero for the zero polynomial).
  FieldElement leading_coefficient() const;

  // Exponent-wise minimum over all terms, the monomial content.
  Exponents monomial_content() const;
  SparsePoly divided_by_monomial(const Exponents& m) const;

  std::string str() const;

 private:
  void prune();  // drop zero coefficients
  static std::pair<SparsePoly, SparsePoly> aligned(const SparsePoly& a, const SparsePoly& b);
  SparsePoly with_vars(const std::vector<std::string>& vars) const;

  unsigned field_order_;
  std::vector<std::string> vars_;
  std::map<Exponents, FieldElement, GradedLexLess> terms_;
};

// A quotient of sparse polynomials with nonzero denominator.  Univariate
// quotients are reduced by gcd; multivariate ones only by monomial content
// and a scalar normalization.  Equality is decided by cross-multiplication,
// so it never depends on the representative.
class RationalFunction {
 public:
  RationalFunction() : num_(2), den_(SparsePoly::constant(2, 1)) {}
  RationalFunction(SparsePoly num, SparsePoly den);
  RationalFunction(const SparsePoly& num);  // NOLINT: implicit poly -> rational

  const SparsePoly& num() const { return num_; }
  const SparsePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const { return *this + rhs; }
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  RationalFunction pow(unsigned e) const;

  bool operator==(const RationalFunction& rhs) const;
  bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

  FieldElement evaluate(const std::map<std::string, FieldElement>& point) const;
  RationalFunction substitute(const std::map<std::string, RationalFunction>& bindings) const;

  std::string str() const;

 private:
  void normalize();
  SparsePoly num_, den_;
};

}  // namespace enriqueslab

#endif
