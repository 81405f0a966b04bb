#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ctd/ctd.hpp"

using namespace ctd;

namespace {

// Leibniz expansion; only for small n.
long long leibniz_det(const std::vector<std::vector<long long>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (int i = 0; i < n && term; ++i) term *= m[i][p[i]];
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

long long eval(const IntPolynomial& f, long long x) {
  long long r = 0;
  for (int k = f.degree(); k >= 0; --k) r = r * x + f.coeff(k);
  return r;
}

using Mat = std::vector<std::vector<long long>>;

Mat mul_mod(const Mat& a, const Mat& b, long long p) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

int rank_mod(Mat a, long long p) {
  const int n = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[i][c] % p) piv = i;
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    long long inv = 1;
    for (long long e = p - 2, b = a[r][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long long f = a[i][c] * inv % p;
      for (int j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Ranks of g(S)^k for a list of polynomials g and k = 1..n: equal for similar matrices.
std::vector<int> similarity_profile(const modp::Matrix& s, long long p, const std::vector<std::vector<long long>>& gs) {
  const std::size_t n = s.size();
  Mat S(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) S[i][j] = s[i][j];
  std::vector<int> out;
  for (const auto& g : gs) {
    Mat acc(n, std::vector<long long>(n, 0)), pw(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
    for (long long c : g) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc[i][j] = (acc[i][j] + c * pw[i][j]) % p;
      pw = mul_mod(pw, S, p);
    }
    Mat power = acc;
    for (std::size_t k = 1; k <= n; ++k) {
      out.push_back(rank_mod(power, p));
      power = mul_mod(power, acc, p);
    }
  }
  return out;
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  IntPolynomial f{-1, 0, 1};  // x^2 - 1
  IntPolynomial g{1, 1};
  EXPECT_EQ((f * g).to_string(), "x^3 + x^2 - x - 1");
  EXPECT_EQ(f.divide_exact(g), (IntPolynomial{-1, 1}));
  EXPECT_THROW(f.divide_exact(IntPolynomial{1, 0, 0, 1}), Error);
  EXPECT_EQ(factored_string(f * 2), "2*(x^2 - 1)");
  EXPECT_EQ((f * 2).coefficient_list(), "[-2, 0, 2]");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}

TEST(Determinant, BareissAgreesWithLeibniz) {
  for (int n = 4; n <= 6; ++n)
    for (const auto& q : mutation_class(dynkin_d(n)).quivers()) {
      CartanMatrix c = cartan_matrix(q);
      Mat m(n, std::vector<long long>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = c(i, j);
      EXPECT_EQ(cartan_det(c), leibniz_det(m));
    }
}

// det(x C^T - C) at several integer points, by permutation expansion.
TEST(AssociatedPolynomial, MatchesPointwiseDeterminants) {
  for (int n = 4; n <= 6; ++n)
    for (const auto& q : mutation_class(dynkin_d(n)).quivers()) {
      CartanMatrix c = cartan_matrix(q);
      IntPolynomial f = associated_polynomial(c);
      EXPECT_LE(f.degree(), n);
      for (long long x : {-2, -1, 0, 1, 2, 3}) {
        Mat m(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) m[i][j] = x * c(j, i) - c(i, j);
        EXPECT_EQ(eval(f, x), leibniz_det(m));
      }
    }
}

TEST(AssociatedPolynomial, D5Pair) {
  auto l = associated_polynomial(realize(FormII{1, 0, 0, 0}));
  auto r = associated_polynomial(realize(FormIV{{{3, 1, 0}}}));
  EXPECT_EQ(factored_string(l), "2*(x^5 - x^3 + x^2 - 1)");
  EXPECT_EQ(factored_string(r), "2*(x^5 - 2*x^3 + 2*x^2 - 1)");
}

TEST(AssociatedPolynomial, ValueAtOneVanishesForOddRank) {
  // det(C^T - C) = 0 for a skew-symmetric matrix of odd size.
  for (const auto& q : mutation_class(dynkin_d(7)).quivers()) EXPECT_EQ(eval(associated_polynomial(q), 1), 0);
}

TEST(DetFormula, TypeDForms) {
  EXPECT_EQ(det_formula(FormIVCycle{5}), 4);
  EXPECT_EQ(det_formula(FormIV{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}), 5);
  for (int n = 4; n <= 9; ++n)
    for (const auto& f : enumerate_type_d_forms(n)) EXPECT_EQ(det_formula(f), cartan_det(cartan_matrix(realize(f)))) << to_string(f);
}

TEST(DetFormula, TypeA) {
  for (int s = 0; s <= 4; ++s)
    for (int t = 0; t <= 3; ++t)
      EXPECT_EQ(det_formula(AShape{s, t, std::nullopt}), cartan_det(cartan_matrix(rooted_a_standard(s, t))));
}

TEST(ChiFormula, UnsupportedShapeIsReported) {
  try {
    chi_formula(FormIV{{{2, 0, 0}, {1, 0, 0}}});
    FAIL() << "expected unsupported-shape";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unsupported-shape");
  }
}

TEST(EqDet, SmallCases) {
  EXPECT_EQ(eq_det_ab(2, 1, 2), 3);
  EXPECT_EQ(eq_det_ab(3, 1, 1), 0);
  EXPECT_EQ(eq_det_ab(4, -1, 0), -3);
  for (int k = 2; k <= 5; ++k)
    for (int a = -2; a <= 3; ++a)
      for (int b = -2; b <= 3; ++b) {
        Mat m(k, std::vector<long long>(k, a));
        for (int i = 0; i < k; ++i) m[i][i] = b;
        EXPECT_EQ(eq_det_ab(k, a, b), leibniz_det(m));
      }
}

TEST(ModP, RejectsBadModulus) {
  CartanMatrix c = cartan_matrix(realize(FormII{1, 0, 0, 0}));
  EXPECT_THROW(asymmetry_invariant_factors(c, 4), Error);
  try {
    asymmetry_invariant_factors(c, 2);  // det 2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "p-divides-det");
  }
}

TEST(ModP, FactorsMultiplyToCharacteristicPolynomial) {
  for (const auto& q : mutation_class(dynkin_d(6)).quivers()) {
    CartanMatrix c = cartan_matrix(q);
    if (cartan_det(c) % 5 == 0) continue;
    int total = 0;
    for (const auto& f : asymmetry_invariant_factors(c, 5)) total += static_cast<int>(f.size()) - 1;
    EXPECT_EQ(total, 6);
  }
}

TEST(ModP, D15PairSeparatedOnlyModThree) {
  CartanMatrix a = cartan_matrix(realize(FormIV{{{3, 2, 0}, {3, 1, 2}}}));
  CartanMatrix b = cartan_matrix(realize(FormIV{{{3, 3, 0}, {3, 0, 2}}}));
  ASSERT_EQ(a.n, 15);
  EXPECT_EQ(associated_polynomial(a), associated_polynomial(b));
  EXPECT_FALSE(asymmetry_similar_mod_p(a, b, 3));
  EXPECT_TRUE(asymmetry_similar_mod_p(a, b, 7));
  // Independent witness: some g(S)^k has different rank for the two matrices.
  std::vector<std::vector<long long>> gs = {{0, 1}, {2, 1}, {1, 1}, {1, 0, 1}, {2, 1, 1}, {2, 2, 1}};
  EXPECT_NE(similarity_profile(asymmetry_mod_p(a, 3), 3, gs), similarity_profile(asymmetry_mod_p(b, 3), 3, gs));
}
