// Exact integer and rational matrix algebra: Hermite and Smith normal forms
// with transformation matrices, integer kernels, Bareiss determinants and
// signatures of symmetric matrices by exact congruence.  Arbitrary-precision
// integers everywhere; there is no floating point in this library.

#ifndef ENRIQUESLAB_INTMAT_HPP
#define ENRIQUESLAB_INTMAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace enriqueslab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> data);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& v);
  bool is_zero_row(std::size_t i) const;

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void add_multiple_of_row(std::size_t dst, std::size_t src, const Int& q);  // row dst += q * row src
  void swap_cols(std::size_t i, std::size_t j);
  void negate_col(std::size_t i);
  void add_multiple_of_col(std::size_t dst, std::size_t src, const Int& q);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form, U * m = h
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
HnfResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
  IntMatrix s;     // u * m * v = s, diagonal with divisibility chain
  IntMatrix u, v;  // unimodular
  IntMatrix vinv;  // v^{-1}, maintained alongside v
  std::size_t rank = 0;
};
SnfResult smith_normal_form(const IntMatrix& m);

// Basis of the right kernel {x : m x = 0}, one vector per row, canonicalized
// to Hermite normal form.  May have zero rows() when the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix& m);

Int determinant(const IntMatrix& m);  // Bareiss, exact
std::size_t rank(const IntMatrix& m);

// True iff v lies in the integer row span of basis (rows need not be in HNF).
bool in_row_span(const IntMatrix& basis, const std::vector<Int>& v);

// Solves x * basis = v over the integers, if possible.
std::optional<std::vector<Int>> solve_left(const IntMatrix& basis, const std::vector<Int>& v);

// True iff the rows extend to a basis of Z^cols (all Smith invariants are 1).
bool is_unimodular_row_basis(const IntMatrix& basis);

struct Signature {
  int n_plus = 0, n_minus = 0, n_zero = 0;
  bool operator==(const Signature&) const = default;
};

class DegenerateMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegerSymMatrix {
 public:
  explicit IntegerSymMatrix(IntMatrix m);
  IntegerSymMatrix(std::initializer_list<std::initializer_list<long long>> data)
      : IntegerSymMatrix(IntMatrix(data)) {}

  std::size_t dim() const { return m_.rows(); }
  const Int& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  const IntMatrix& matrix() const { return m_; }

  // Counts of positive / negative / zero eigenvalues, computed by exact
  // rational congruence (Sylvester's law of inertia).
  Signature exact_signature() const;

  // Exact determinant; throws DegenerateMatrixError when it vanishes.
  Int det_lattice() const;

  // Integer basis of {v : Mv = 0}, rows in Hermite normal form.
  IntMatrix snf_kernel() const;

 private:
  IntMatrix m_;
};

}  // namespace enriqueslab

#endif
