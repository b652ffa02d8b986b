#include "enriqueslab/gf.hpp"

#include <array>
#include <stdexcept>

namespace enriqueslab {

namespace {

struct FieldSpec {
  unsigned order;
  unsigned degree;
  unsigned modulus;  // bit mask of the irreducible polynomial
};

constexpr std::array<FieldSpec, 4> kFields = {{
    {2, 1, 0b10u},        // x
    {4, 2, 0b111u},       // x^2 + x + 1
    {16, 4, 0b10011u},    // x^4 + x + 1
    {64, 6, 0b1000011u},  // x^6 + x + 1
}};

const FieldSpec& spec_for(unsigned order) {
  for (const auto& f : kFields)
    if (f.order == order) return f;
  throw std::invalid_argument("FieldElement: unsupported field order " + std::to_string(order));
}

unsigned clmul_reduce(unsigned a, unsigned b, const FieldSpec& f) {
  unsigned prod = 0;
  for (unsigned i = 0; (b >> i) != 0; ++i)
    if ((b >> i) & 1u) prod ^= a << i;
  for (int d = 2 * static_cast<int>(f.degree) - 2; d >= static_cast<int>(f.degree); --d)
    if ((prod >> d) & 1u) prod ^= f.modulus << (d - f.degree);
  return prod;
}

// Image of w in GF(16)/GF(64): the smaller of the two roots of z^2 + z + 1.
unsigned omega_image(unsigned order) {
  const FieldSpec& f = spec_for(order);
  for (unsigned z = 2; z < order; ++z) {
    unsigned z2 = clmul_reduce(z, z, f);
    if ((z2 ^ z ^ 1u) == 0) return z;
  }
  throw std::logic_error("no cube root of unity found");  // unreachable
}

}  // namespace

FieldElement::FieldElement(unsigned order, unsigned bits)
    : order_(static_cast<std::uint16_t>(order)), bits_(static_cast<std::uint16_t>(bits)) {
  spec_for(order);
  if (bits >= order) throw std::invalid_argument("FieldElement: residue out of range");
}

FieldElement FieldElement::generator(unsigned order) {
  if (order == 2) return FieldElement(2, 1);
  return FieldElement(order, 2);
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  if (order_ != rhs.order_)
    throw std::invalid_argument("FieldElement: mixed field orders in +");
  return FieldElement(order_, bits_ ^ rhs.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  if (order_ != rhs.order_)
    throw std::invalid_argument("FieldElement: mixed field orders in *");
  return FieldElement(order_, clmul_reduce(bits_, rhs.bits_, spec_for(order_)));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  return *this * rhs.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement base = *this, acc = one(order_);
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  return pow(order_ - 2);
}

std::uint64_t FieldElement::multiplicative_order() const {
  if (is_zero()) throw std::domain_error("FieldElement: order of zero");
  FieldElement acc = *this;
  std::uint64_t n = 1;
  while (!acc.is_one()) {
    acc = acc * *this;
    ++n;
  }
  return n;
}

bool FieldElement::embeddable(unsigned from_order, unsigned to_order) {
  if (from_order == to_order) return true;
  if (from_order == 2) return true;
  if (from_order == 4 && (to_order == 16 || to_order == 64)) return true;
  return false;
}

FieldElement FieldElement::embed_into(unsigned target_order) const {
  if (target_order == order_) return *this;
  if (!embeddable(order_, target_order))
    throw std::invalid_argument("FieldElement: no embedding GF(" + std::to_string(order_) +
                                ") -> GF(" + std::to_string(target_order) + ")");
  if (order_ == 2) return FieldElement(target_order, bits_);
  // GF(4) -> GF(16) or GF(64): w |-> canonical cube root of unity.
  FieldElement w_img(target_order, omega_image(target_order));
  FieldElement acc = FieldElement::zero(target_order);
  if (bits_ & 1u) acc += FieldElement::one(target_order);
  if (bits_ & 2u) acc += w_img;
  return acc;
}

std::string FieldElement::str() const {
  if (order_ == 2) return bits_ ? "1" : "0";
  if (order_ == 4) {
    switch (bits_) {
      case 0: return "0";
      case 1: return "1";
      case 2: return "w";
      default: return "w^2";
    }
  }
  if (is_zero()) return "0";
  if (is_one()) return "1";
  // Express as a power of the generator for readability.
  FieldElement g = generator(order_);
  FieldElement acc = g;
  for (unsigned k = 1; k < order_; ++k) {
    if (acc == *this) return "g" + std::to_string(order_) + "^" + std::to_string(k);
    acc = acc * g;
  }
  return "?";
}

std::vector<FieldElement> all_field_elements(unsigned order) {
  spec_for(order);
  std::vector<FieldElement> out;
  out.reserve(order);
  for (unsigned b = 0; b < order; ++b) out.emplace_back(order, b);
  return out;
}

}  // namespace enriqueslab
