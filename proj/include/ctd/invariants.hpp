#ifndef CTD_INVARIANTS_HPP
#define CTD_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctd/polynomial.hpp"
#include "ctd/relations.hpp"

namespace ctd {

using BigInt = boost::multiprecision::cpp_int;

// Checked 64-bit integer wrapper so Bareiss can run on either representation.
struct Checked64 {
  std::int64_t v = 0;
  Checked64() = default;
  Checked64(std::int64_t x) : v(x) {}  // NOLINT
  friend Checked64 operator+(Checked64 a, Checked64 b) { return checked::add(a.v, b.v); }
  friend Checked64 operator-(Checked64 a, Checked64 b) { return checked::sub(a.v, b.v); }
  friend Checked64 operator*(Checked64 a, Checked64 b) { return checked::mul(a.v, b.v); }
  friend Checked64 operator/(Checked64 a, Checked64 b) { return a.v / b.v; }
  friend Checked64 operator-(Checked64 a) { return checked::sub(0, a.v); }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
};

// Fraction-free Gaussian elimination; `m` is row-major n x n.
template <class T>
T bareiss_det(std::vector<T> m, int n) {
  if (n == 0) return T(1);
  T sign = T(1), prev = T(1);
  auto at = [&](int i, int j) -> T& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == T(0)) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!(at(i, k) == T(0))) {
          piv = i;
          break;
        }
      if (piv < 0) return T(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

inline std::int64_t cartan_det(const CartanMatrix& c) {
  std::vector<Checked64> m(c.c.begin(), c.c.end());
  return bareiss_det(std::move(m), c.n).v;
}

namespace detail {

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error("overflow", "coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Recover an integer polynomial of degree <= n from its values at 0..n.
inline IntPolynomial interpolate(std::vector<BigInt> vals) {
  const std::size_t n = vals.size();
  // Newton forward differences: vals[k] becomes Delta^k f(0).
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) vals[i] -= vals[i - 1];
  std::vector<BigInt> coeffs(n, 0), falling{1};  // falling = x(x-1)...(x-k+1)
  BigInt fact = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      fact *= k;
      std::vector<BigInt> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * static_cast<long>(k - 1);
      }
      falling = std::move(next);
    }
    if (vals[k] % fact != 0) throw Error("precondition", "values are not those of an integer polynomial");
    BigInt a = vals[k] / fact;
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += a * falling[i];
  }
  std::vector<std::int64_t> out;
  for (const auto& c : coeffs) out.push_back(to_int64(c));
  return IntPolynomial(std::move(out));
}

}  // namespace detail

// det(x C^T - C), which equals det(C) times the characteristic polynomial of C C^{-T}.
inline IntPolynomial associated_polynomial(const CartanMatrix& c) {
  const int n = c.n;
  std::vector<BigInt> vals;
  for (int x = 0; x <= n; ++x) {
    std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = BigInt(x) * c(j, i) - c(i, j);
    vals.push_back(bareiss_det(std::move(m), n));
  }
  IntPolynomial p = detail::interpolate(std::move(vals));
  std::int64_t det = cartan_det(c);
  if (det == 0) throw Error("singular", "Cartan matrix is singular");
  std::int64_t sign = n % 2 == 0 ? 1 : -1;
  if (p.leading() != det || p.coeff(0) != sign * det)
    throw Error("internal", "associated polynomial fails its leading/constant coefficient check");
  return p;
}

inline IntPolynomial associated_polynomial(const Quiver& q) { return associated_polynomial(cartan_matrix(q)); }

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {
inline std::int64_t pow2(int e) {
  if (e < 0 || e > 61) throw Error("overflow", "power of two out of range");
  return std::int64_t{1} << e;
}
inline IntPolynomial xpow(int e) { return IntPolynomial::monomial(1, e); }
inline std::int64_t sgn(int e) { return e % 2 == 0 ? 1 : -1; }
// (x+1)^e * p, allowing negative e through exact division.
inline IntPolynomial times_xplus1_pow(const IntPolynomial& p, int e) {
  IntPolynomial xp1{1, 1};
  if (e >= 0) return p * xp1.pow(e);
  return p.divide_exact(xp1.pow(-e));
}
}  // namespace detail

inline std::int64_t det_formula(const AShape& a) { return detail::pow2(a.t); }

inline std::int64_t det_formula(const TypeDForm& form) {
  TypeDForm f = canonical_form(form);
  using detail::pow2;
  if (auto* p = std::get_if<FormI>(&f)) return pow2(p->t);
  if (auto* p = std::get_if<FormII>(&f)) return 2 * pow2(p->t1 + p->t2);
  if (auto* p = std::get_if<FormIII>(&f)) return 3 * pow2(p->t1 + p->t2);
  if (auto* p = std::get_if<FormIVCycle>(&f)) return p->m - 1;
  const auto& iv = std::get<FormIV>(f);
  int tsum = 0;
  for (const auto& s : iv.spikes) tsum += s.t;
  return checked::mul(iv.m() + iv.c() - 1, pow2(tsum));
}

inline IntPolynomial chi_formula(const AShape& a) {
  using namespace detail;
  IntPolynomial inner = xpow(a.s + a.t + 2) + IntPolynomial::constant(sgn(a.s + 1));
  return times_xplus1_pow(inner, a.t - 1);
}

inline IntPolynomial chi_formula(const TypeDForm& form) {
  using namespace detail;
  TypeDForm f = canonical_form(form);
  const IntPolynomial xm1{-1, 1};
  auto c = [](std::int64_t v) { return IntPolynomial::constant(v); };
  if (auto* p = std::get_if<FormI>(&f))
    return times_xplus1_pow(xm1 * (xpow(p->s + p->t + 2) + c(sgn(p->s))), p->t);
  auto two_part = [&](int s, int t) { return times_xplus1_pow(xm1 * (xpow(s + t + 2) + c(sgn(s + 1))), t + 1); };
  if (auto* p = std::get_if<FormII>(&f)) return two_part(p->s1 + p->s2, p->t1 + p->t2);
  if (auto* p = std::get_if<FormIII>(&f)) return two_part(p->s1 + p->s2, p->t1 + p->t2);
  if (auto* p = std::get_if<FormIVCycle>(&f)) {
    if (p->m % 2) return xpow(p->m) - c(1);
    return (xpow(p->m / 2) - c(1)).pow(2);
  }
  const auto& sp = std::get<FormIV>(f).spikes;
  const int r = static_cast<int>(sp.size());
  // (b) ((1,s,t),(1,0,0)^(b-1)) with b >= 3
  if (r >= 3 && std::all_of(sp.begin(), sp.end(), [](const Spike& x) { return x.d == 1; })) {
    int loaded = 0, idx = 0;
    for (int j = 0; j < r; ++j)
      if (sp[j].s || sp[j].t) {
        ++loaded;
        idx = j;
      }
    if (loaded <= 1) {
      int s = sp[idx].s, t = sp[idx].t, b = r;
      return times_xplus1_pow((xpow(b) - c(1)) * (xpow(s + t + b) + c(sgn(s + 1))), t);
    }
  }
  // (c) ((3,s,t))
  if (r == 1 && sp[0].d == 3) {
    int s = sp[0].s, t = sp[0].t;
    IntPolynomial inner = xpow(s + t + 4) + xpow(s + t + 3) * 2 + xpow(1) * (2 * sgn(s + 1)) + c(sgn(s + 1));
    return times_xplus1_pow(xm1 * inner, t - 1);
  }
  // (d) ((3,s1,t1),(3,s2,t2))
  if (r == 2 && sp[0].d == 3 && sp[1].d == 3) {
    int s1 = sp[0].s, t1 = sp[0].t, s2 = sp[1].s, t2 = sp[1].t;
    IntPolynomial inner = xpow(s1 + t1 + s2 + t2) * IntPolynomial{0, 0, 0, 0, 0, 0, 4, 4, 3, 1} +
                          (xpow(s2 + t2) * sgn(s1) + xpow(s1 + t1) * sgn(s2)) * IntPolynomial{0, 0, 0, 0, -1, 1} +
                          IntPolynomial{1, 3, 4, 4} * sgn(s1 + s2 + 1);
    return times_xplus1_pow(xm1 * inner, t1 + t2 - 2);
  }
  throw Error("unsupported-shape", "no closed form for " + to_string(f) + "; use the associated polynomial");
}

// (b-a)^(k-1) (b+(k-1)a): determinant of the k x k matrix with b on the diagonal and a elsewhere.
inline std::int64_t eq_det_ab(int k, std::int64_t a, std::int64_t b) {
  std::int64_t r = b + (k - 1) * a;
  for (int i = 0; i < k - 1; ++i) r = checked::mul(r, b - a);
  return r;
}

}  // namespace ctd

#endif
