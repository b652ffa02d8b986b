#include <doctest.h>

#include <random>
#include <vector>

#include "enriqueslab/intmat.hpp"

using namespace enriqueslab;

namespace {

// Standard hyperbolic plane and root lattice Grams (negative definite
// convention: diagonal -2, single bonds +1).
IntegerSymMatrix gram_u() { return IntegerSymMatrix{{0, 1}, {1, 0}}; }

IntMatrix gram_e8_neg() {
  // T(2,3,5) tree: center 2, arms {1,0}, {3,4,5,6}, {7}.
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                  {4, 5}, {5, 6}, {2, 7}};
  IntMatrix m(8, 8);
  for (int i = 0; i < 8; ++i) m.at(i, i) = -2;
  for (auto [a, b] : edges) {
    m.at(a, b) = 1;
    m.at(b, a) = 1;
  }
  return m;
}

IntMatrix scaled(const IntMatrix& m, long long k) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) *= k;
  return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

// Independent signature oracle: characteristic polynomial via Newton's
// identities, then Descartes' rule (exact for polynomials with all-real
// roots, which symmetric matrices have).
Signature descartes_signature(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<Rat> power_sum(n + 1);
  IntMatrix acc = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = acc * m;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += acc.at(i, i);
    power_sum[k] = Rat(tr);
  }
  std::vector<Rat> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat s = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rat term = e[k - i] * power_sum[i];
      if (i % 2 == 0) term = -term;
      s += term;
    }
    e[k] = s / Rat(static_cast<long>(k));
  }
  // char(x) = sum_k (-1)^k e_k x^(n-k); coefficient list from x^n down.
  std::vector<Rat> coeff(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeff[k] = (k % 2 == 0) ? e[k] : -e[k];

  Signature sig;
  while (!coeff.empty() && coeff.back() == 0) {
    coeff.pop_back();
    ++sig.n_zero;
  }
  auto variations = [](const std::vector<Rat>& c, bool flip_odd) {
    int v = 0, last = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      bool neg = c[k] < 0;
      // Substituting -x flips the sign of odd-degree coefficients; index k
      // here counts down from degree n, so parity uses (n - k) ≡ k mod 2
      // only after trailing zeros were stripped.  Track explicitly instead.
      int s = neg ? -1 : 1;
      if (flip_odd && k % 2 == 1) s = -s;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  sig.n_plus = variations(coeff, false);
  sig.n_minus = variations(coeff, true);
  return sig;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m.at(i, j) = d(rng);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("signature of U and E8") {
  CHECK(gram_u().exact_signature() == Signature{1, 1, 0});
  CHECK(IntegerSymMatrix(gram_e8_neg()).exact_signature() == Signature{0, 8, 0});
}

TEST_CASE("determinants: U, E8, U(2)+E8(2)") {
  CHECK(gram_u().det_lattice() == -1);
  CHECK(IntegerSymMatrix(gram_e8_neg()).det_lattice() == 1);
  IntMatrix u2 = {{0, 2}, {2, 0}};
  IntegerSymMatrix big(direct_sum(u2, scaled(gram_e8_neg(), 2)));
  CHECK(big.det_lattice() == -1024);  // -2^10
  CHECK(big.exact_signature() == Signature{1, 9, 0});
}

TEST_CASE("degenerate determinant is reported distinctly") {
  IntegerSymMatrix m{{-2, -2}, {-2, -2}};
  CHECK_THROWS_AS(m.det_lattice(), DegenerateMatrixError);
}

TEST_CASE("kernels: hyperbolic plane and a repeated (-2)-row") {
  CHECK(gram_u().snf_kernel().rows() == 0);
  IntegerSymMatrix m{{-2, -2}, {-2, -2}};
  IntMatrix k = m.snf_kernel();
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(0, 1) == -1);
}

TEST_CASE("random symmetric matrices: signature oracle and invariants") {
  std::mt19937_64 rng(0x5157);
  for (int trial = 0; trial < 70; ++trial) {
    std::size_t n = 2 + trial % 7;  // up to 8x8
    IntMatrix m = random_symmetric(rng, n);
    IntegerSymMatrix sym(m);
    Signature sig = sym.exact_signature();
    CHECK(sig == descartes_signature(m));
    CHECK(sig.n_plus + sig.n_minus + sig.n_zero == static_cast<int>(n));
    Int det = determinant(m);
    if (sig.n_zero == 0) {
      CHECK(det != 0);
      CHECK((det < 0) == (sig.n_minus % 2 == 1));
    } else {
      CHECK(det == 0);
    }
    // Kernel rows annihilate and are saturated (complete to a unimodular basis).
    IntMatrix k = sym.snf_kernel();
    CHECK(k.rows() == static_cast<std::size_t>(sig.n_zero));
    for (std::size_t r = 0; r < k.rows(); ++r) {
      std::vector<Int> v = k.row(r);
      for (const Int& x : mat_vec(m, v)) CHECK(x == 0);
    }
    if (k.rows() > 0) CHECK(is_unimodular_row_basis(k));
  }
}

TEST_CASE("hermite normal form properties") {
  std::mt19937_64 rng(0xa11ce);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = d(rng);
    HnfResult hnf = hermite_normal_form(m);
    CHECK(hnf.u * m == hnf.h);
    Int ud = determinant(hnf.u);
    CHECK((ud == 1 || ud == -1));
    for (std::size_t r = 0; r < hnf.rank; ++r) {
      std::size_t c = hnf.pivot_cols[r];
      CHECK(hnf.h.at(r, c) > 0);
      for (std::size_t i = r + 1; i < 4; ++i) CHECK(hnf.h.at(i, c) == 0);
      for (std::size_t i = 0; i < r; ++i) {
        CHECK(hnf.h.at(i, c) >= 0);
        CHECK(hnf.h.at(i, c) < hnf.h.at(r, c));
      }
    }
  }
}

TEST_CASE("smith normal form properties") {
  std::mt19937_64 rng(0xdeed);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = d(rng);
    SnfResult snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.s);
    CHECK(snf.v * snf.vinv == IntMatrix::identity(6));
    Int ud = determinant(snf.u), vd = determinant(snf.v);
    CHECK((ud == 1 || ud == -1));
    CHECK((vd == 1 || vd == -1));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (i != j) CHECK(snf.s.at(i, j) == 0);
    for (std::size_t i = 0; i + 1 < snf.rank; ++i)
      CHECK(snf.s.at(i + 1, i + 1) % snf.s.at(i, i) == 0);
  }
}

TEST_CASE("solve_left and row span membership") {
  IntMatrix basis = {{2, 0, 1}, {0, 3, 1}};
  std::vector<Int> v = {2, 3, 2};  // row0 + row1
  auto x = solve_left(basis, v);
  REQUIRE(x.has_value());
  CHECK(vec_mat(*x, basis) == v);
  CHECK(in_row_span(basis, v));
  CHECK(!in_row_span(basis, {1, 0, 0}));
}
