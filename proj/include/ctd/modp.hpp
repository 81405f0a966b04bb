#ifndef CTD_MODP_HPP
#define CTD_MODP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctd/invariants.hpp"

namespace ctd {

namespace modp {

using Poly = std::vector<std::int64_t>;  // low degree first, reduced mod p, trimmed

inline std::int64_t reduce(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = reduce(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly axpy(const Poly& a, const Poly& f, const Poly& b, std::int64_t p) {  // a - f*b
  Poly r = a;
  if (f.empty() || b.empty()) return r;
  r.resize(std::max(a.size(), f.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = reduce(r[i + j] - f[i] * b[j], p);
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::int64_t p) {
  Poly q;
  if (deg(a) < deg(b)) return {q, a};
  q.assign(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  std::int64_t inv = inverse(b.back(), p);
  while (!a.empty() && deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    std::int64_t f = a.back() * inv % p;
    q[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[j + static_cast<std::size_t>(shift)] = reduce(a[j + static_cast<std::size_t>(shift)] - f * b[j], p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix invert(Matrix a, std::int64_t p) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw Error("p-divides-det", "matrix is singular modulo " + std::to_string(p));
    std::swap(a[k], a[piv]);
    std::swap(inv[k], inv[piv]);
    std::int64_t f = inverse(a[k][k], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] = a[k][j] * f % p;
      inv[k][j] = inv[k][j] * f % p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      std::int64_t g = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = reduce(a[i][j] - g * a[k][j], p);
        inv[i][j] = reduce(inv[i][j] - g * inv[k][j], p);
      }
    }
  }
  return inv;
}

// Invariant factors (monic, the trivial ones dropped) of xI - S over F_p[x],
// from a Smith normal form computation.
inline std::vector<Poly> invariant_factors(const Matrix& s, std::int64_t p) {
  const std::size_t n = s.size();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly e{reduce(-s[i][j], p)};
      if (i == j) e.push_back(1);
      trim(e);
      a[i][j] = e;
    }
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a[i][j].empty() && (bi == n || deg(a[i][j]) < deg(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      std::swap(a[k], a[bi]);
      for (auto& row : a) std::swap(row[k], row[bj]);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].empty()) continue;
        auto [q, r] = divmod(a[i][k], a[k][k], p);
        for (std::size_t j = k; j < n; ++j) a[i][j] = axpy(a[i][j], q, a[k][j], p);
        if (!r.empty()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].empty()) continue;
        auto [q, r] = divmod(a[k][j], a[k][k], p);
        for (std::size_t i = k; i < n; ++i) a[i][j] = axpy(a[i][j], q, a[i][k], p);
        if (!r.empty()) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = k + 1; i < n && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divmod(a[i][j], a[k][k], p).second.empty()) {
            for (std::size_t c = k; c < n; ++c) a[k][c] = axpy(a[k][c], Poly{p - 1}, a[i][c], p);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!a[k][k].empty()) {
      std::int64_t inv = inverse(a[k][k].back(), p);
      for (auto& c : a[k][k]) c = c * inv % p;
    }
  }
  std::vector<Poly> out;
  for (std::size_t k = 0; k < n; ++k)
    if (deg(a[k][k]) >= 1) out.push_back(a[k][k]);
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace modp

// Asymmetry matrix S = C C^{-T} reduced mod p.
inline modp::Matrix asymmetry_mod_p(const CartanMatrix& c, std::int64_t p) {
  if (!modp::is_prime(p)) throw Error("precondition", std::to_string(p) + " is not prime");
  std::int64_t det = cartan_det(c);
  if (det % p == 0)
    throw Error("p-divides-det", std::to_string(p) + " divides the Cartan determinant " + std::to_string(det));
  const int n = c.n;
  modp::Matrix m(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = modp::reduce(c(i, j), p);
  modp::Matrix inv = modp::invert(m, p);
  modp::Matrix s(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < n; ++k) acc = (acc + m[i][k] * inv[j][k]) % p;  // (C^{-1})^T[k][j] = inv[j][k]
      s[i][j] = acc;
    }
  return s;
}

inline std::vector<modp::Poly> asymmetry_invariant_factors(const CartanMatrix& c, std::int64_t p) {
  return modp::invariant_factors(asymmetry_mod_p(c, p), p);
}

inline bool asymmetry_similar_mod_p(const CartanMatrix& c1, const CartanMatrix& c2, std::int64_t p) {
  if (c1.n != c2.n) return false;
  return asymmetry_invariant_factors(c1, p) == asymmetry_invariant_factors(c2, p);
}

inline std::string modp_poly_string(const modp::Poly& f) {
  std::vector<std::int64_t> c(f.begin(), f.end());
  return IntPolynomial(std::move(c)).to_string();
}

}  // namespace ctd

#endif
