#include "enriqueslab/intmat.hpp"

#include <algorithm>

namespace enriqueslab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> data) {
  rows_ = data.size();
  cols_ = rows_ == 0 ? 0 : data.begin()->size();
  a_.resize(rows_ * cols_);
  std::size_t i = 0;
  for (const auto& r : data) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    std::size_t j = 0;
    for (long long x : r) at(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: size mismatch in *");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(a_.begin() + static_cast<long>(i * cols_),
                          a_.begin() + static_cast<long>((i + 1) * cols_));
}

void IntMatrix::set_row(std::size_t i, const std::vector<Int>& v) {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::set_row: size mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<long>(i * cols_));
}

bool IntMatrix::is_zero_row(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_multiple_of_row(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::add_multiple_of_col(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<Int> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: size mismatch");
  std::vector<Int> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    // Euclid on the entries of this column below r.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best == h.rows()) break;  // column clear
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool reduced = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(r, col);
        h.add_multiple_of_row(i, r, -q);
        u.add_multiple_of_row(i, r, -q);
        if (h.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (r < h.rows() && h.at(r, col) != 0) {
      if (h.at(r, col) < 0) {
        h.negate_row(r);
        u.negate_row(r);
      }
      // Reduce the entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < r; ++i) {
        Int q = h.at(i, col) / h.at(r, col);
        if (h.at(i, col) - q * h.at(r, col) < 0) q -= 1;  // floor division
        h.add_multiple_of_row(i, r, -q);
        u.add_multiple_of_row(i, r, -q);
      }
      res.pivot_cols.push_back(col);
      ++r;
    }
  }
  res.rank = r;
  return res;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols())};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  IntMatrix& vinv = res.vinv;

  auto col_swap = [&](std::size_t i, std::size_t j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    // col dst += q * col src;  inverse operation on vinv rows
    s.add_multiple_of_col(dst, src, q);
    v.add_multiple_of_col(dst, src, q);
    vinv.add_multiple_of_row(src, dst, -q);
  };

  std::size_t n = std::min(s.rows(), s.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    // Find the smallest nonzero entry in the trailing submatrix.
    std::size_t pi = s.rows(), pj = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi == s.rows() || abs(s.at(i, j)) < abs(s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == s.rows()) break;  // all zero
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        s.add_multiple_of_row(i, t, -q);
        u.add_multiple_of_row(i, t, -q);
        if (s.at(i, t) != 0) {
          s.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        col_add(j, t, -q);
        if (s.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }
    // Enforce the divisibility chain.
    bool retry = true;
    while (retry) {
      retry = false;
      for (std::size_t i = t + 1; i < s.rows() && !retry; ++i)
        for (std::size_t j = t + 1; j < s.cols() && !retry; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_multiple_of_row(t, i, 1);
            u.add_multiple_of_row(t, i, 1);
            // Re-clean row t / column t.
            bool c2 = false;
            while (!c2) {
              c2 = true;
              for (std::size_t jj = t + 1; jj < s.cols(); ++jj) {
                if (s.at(t, jj) == 0) continue;
                Int q = s.at(t, jj) / s.at(t, t);
                col_add(jj, t, -q);
                if (s.at(t, jj) != 0) {
                  col_swap(t, jj);
                  c2 = false;
                }
              }
              for (std::size_t ii = t + 1; ii < s.rows(); ++ii) {
                if (s.at(ii, t) == 0) continue;
                Int q = s.at(ii, t) / s.at(t, t);
                s.add_multiple_of_row(ii, t, -q);
                u.add_multiple_of_row(ii, t, -q);
                if (s.at(ii, t) != 0) {
                  s.swap_rows(t, ii);
                  u.swap_rows(t, ii);
                  c2 = false;
                }
              }
            }
            retry = true;
          }
        }
    }
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  res.rank = t;
  return res;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult hnf = hermite_normal_form(m.transposed());
  std::size_t k = 0;
  for (std::size_t i = 0; i < hnf.h.rows(); ++i)
    if (hnf.h.is_zero_row(i)) ++k;
  IntMatrix raw(k, m.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < hnf.h.rows(); ++i) {
    if (!hnf.h.is_zero_row(i)) continue;
    raw.set_row(r++, hnf.u.row(i));
  }
  HnfResult canon = hermite_normal_form(raw);
  IntMatrix out(canon.rank, m.cols());
  for (std::size_t i = 0; i < canon.rank; ++i) out.set_row(i, canon.h.row(i));
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

bool in_row_span(const IntMatrix& basis, const std::vector<Int>& v) {
  return solve_left(basis, v).has_value();
}

std::optional<std::vector<Int>> solve_left(const IntMatrix& basis, const std::vector<Int>& v) {
  if (v.size() != basis.cols()) throw std::invalid_argument("solve_left: size mismatch");
  HnfResult hnf = hermite_normal_form(basis);
  std::vector<Int> rem = v;
  std::vector<Int> c(basis.rows());
  for (std::size_t r = 0; r < hnf.rank; ++r) {
    std::size_t col = hnf.pivot_cols[r];
    if (rem[col] % hnf.h.at(r, col) != 0) return std::nullopt;
    Int q = rem[col] / hnf.h.at(r, col);
    if (q != 0)
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= q * hnf.h.at(r, j);
    // x accumulates in HNF coordinates; translate through u afterwards.
    c[r] = q;
  }
  for (const Int& x : rem)
    if (x != 0) return std::nullopt;
  // x = c^T * u  (only the first `rank` rows of u matter; the rest got c=0).
  std::vector<Int> x(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t j = 0; j < basis.rows(); ++j) x[j] += c[r] * hnf.u.at(r, j);
  return x;
}

bool is_unimodular_row_basis(const IntMatrix& basis) {
  SnfResult snf = smith_normal_form(basis);
  if (snf.rank != basis.rows()) return false;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (snf.s.at(i, i) != 1) return false;
  return true;
}

IntegerSymMatrix::IntegerSymMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("IntegerSymMatrix: not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_.at(i, j) != m_.at(j, i)) throw std::invalid_argument("IntegerSymMatrix: not symmetric");
}

Signature IntegerSymMatrix::exact_signature() const {
  std::size_t n = dim();
  std::vector<Rat> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rat(m_.at(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> Rat& { return a[i * n + j]; };
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
  };
  auto add_sym = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t c = 0; c < n; ++c) at(dst, c) += f * at(src, c);
    for (std::size_t r = 0; r < n; ++r) at(r, dst) += f * at(r, src);
  };

  Signature sig;
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) == 0) {
      std::size_t jd = n, jo = n;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (jd == n && at(j, j) != 0) jd = j;
        if (jo == n && at(i, j) != 0) jo = j;
      }
      if (jd != n) {
        swap_sym(i, jd);
      } else if (jo != n) {
        add_sym(i, jo, 1);  // diagonal becomes 2*a(i,jo) since a(jo,jo) = 0
      } else {
        ++sig.n_zero;  // row i is zero against everything not yet eliminated
        continue;
      }
    }
    Rat d = at(i, i);
    if (d > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (at(r, i) == 0) continue;
      add_sym(r, i, -at(r, i) / d);
    }
  }
  return sig;
}

Int IntegerSymMatrix::det_lattice() const {
  Int d = determinant(m_);
  if (d == 0) throw DegenerateMatrixError("det_lattice: degenerate Gram matrix");
  return d;
}

IntMatrix IntegerSymMatrix::snf_kernel() const { return kernel_basis(m_); }

}  // namespace enriqueslab
