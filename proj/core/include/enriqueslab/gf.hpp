// Arithmetic in the small binary fields GF(2), GF(4), GF(16), GF(64).
//
// Elements are polynomial residues over GF(2), stored as bit masks.  The
// moduli are fixed once and for all:
//
//   GF(4)  = GF(2)[w]/(w^2 + w + 1)
//   GF(16) = GF(2)[x]/(x^4 + x + 1)
//   GF(64) = GF(2)[x]/(x^6 + x + 1)
//
// All three moduli are primitive, so the residue of x generates the
// multiplicative group.  GF(4) embeds into GF(16) and GF(64); the embedding
// sends w to the order-3 element with the smallest bit mask satisfying
// z^2 + z + 1 = 0 (the other choice differs by Frobenius).

#ifndef ENRIQUESLAB_GF_HPP
#define ENRIQUESLAB_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace enriqueslab {

class FieldElement {
 public:
  FieldElement() : order_(2), bits_(0) {}
  FieldElement(unsigned order, unsigned bits);

  static FieldElement zero(unsigned order) { return FieldElement(order, 0); }
  static FieldElement one(unsigned order) { return FieldElement(order, 1); }
  // The generator w of GF(4), with w^2 = w + 1.
  static FieldElement omega() { return FieldElement(4, 2); }
  // The residue of x, a multiplicative generator of the given field.
  static FieldElement generator(unsigned order);

  unsigned order() const { return order_; }
  unsigned bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const { return *this + rhs; }
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const { return *this * *this; }
  std::uint64_t multiplicative_order() const;

  // Ring-homomorphic embedding fixing GF(2).  Legal: GF(2) -> any,
  // GF(4) -> GF(16), GF(4) -> GF(64), and the identity.
  FieldElement embed_into(unsigned target_order) const;
  static bool embeddable(unsigned from_order, unsigned to_order);

  bool operator==(const FieldElement& rhs) const {
    return order_ == rhs.order_ && bits_ == rhs.bits_;
  }
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
  // Total order used for canonical sorting: 0 < 1 < w < w^2 in GF(4).
  bool operator<(const FieldElement& rhs) const {
    return order_ != rhs.order_ ? order_ < rhs.order_ : bits_ < rhs.bits_;
  }

  std::string str() const;

 private:
  std::uint16_t order_;
  std::uint16_t bits_;
};

// All elements of the field in canonical (bit mask) order.
std::vector<FieldElement> all_field_elements(unsigned order);

}  // namespace enriqueslab

#endif
