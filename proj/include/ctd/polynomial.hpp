#ifndef CTD_POLYNOMIAL_HPP
#define CTD_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ctd/error.hpp"

namespace ctd {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("overflow", "64-bit overflow in addition");
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("overflow", "64-bit overflow in subtraction");
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("overflow", "64-bit overflow in multiplication");
  return r;
}

}  // namespace checked

// Integer polynomial, coefficients low degree first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> c) : c_(c) { trim(); }
  explicit IntPolynomial(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  static IntPolynomial constant(std::int64_t a) { return IntPolynomial(std::vector<std::int64_t>{a}); }
  static IntPolynomial monomial(std::int64_t a, int deg) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    c.back() = a;
    return IntPolynomial(std::move(c));
  }
  static IntPolynomial x() { return monomial(1, 1); }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator-() const {
    std::vector<std::int64_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::sub(0, c_[i]);
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = checked::add(r[i + j], checked::mul(c_[i], o.c_[j]));
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator*(std::int64_t a) const { return *this * constant(a); }

  IntPolynomial pow(int e) const {
    IntPolynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Exact division; throws unless `d` divides *this over the integers.
  IntPolynomial divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw Error("precondition", "division by the zero polynomial");
    std::vector<std::int64_t> rem = c_;
    if (degree() < d.degree()) {
      if (is_zero()) return {};
      throw Error("precondition", "inexact polynomial division");
    }
    std::vector<std::int64_t> q(static_cast<std::size_t>(degree() - d.degree()) + 1, 0);
    for (int k = degree() - d.degree(); k >= 0; --k) {
      std::int64_t top = rem[static_cast<std::size_t>(k + d.degree())];
      if (top % d.leading() != 0) throw Error("precondition", "inexact polynomial division");
      std::int64_t f = top / d.leading();
      q[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= d.degree(); ++i)
        rem[static_cast<std::size_t>(k + i)] = checked::sub(rem[static_cast<std::size_t>(k + i)], checked::mul(f, d.c_[i]));
    }
    for (auto v : rem)
      if (v != 0) throw Error("precondition", "inexact polynomial division");
    return IntPolynomial(std::move(q));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend auto operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return std::strong_ordering::equal;
  }

  // "2*x^5 - x^3 + 2"
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      std::int64_t a = c_[static_cast<std::size_t>(k)];
      if (a == 0) continue;
      std::uint64_t mag = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
      if (s.empty())
        s += a < 0 ? "-" : "";
      else
        s += a < 0 ? " - " : " + ";
      if (k == 0 || mag != 1) s += std::to_string(mag) + (k > 0 ? "*" : "");
      if (k >= 1) s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

  // "[-2, 0, 2]"
  std::string coefficient_list() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + std::to_string(c_[i]);
    return s + "]";
  }

  // Content and primitive part with positive leading coefficient.
  std::int64_t content() const {
    std::int64_t g = 0;
    for (auto v : c_) g = std::gcd(g, v < 0 ? -v : v);
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

// "2*(x^5 - x^3 + x^2 - 1)" when the content is not 1.
inline std::string factored_string(const IntPolynomial& p) {
  std::int64_t g = p.content();
  if (g == 0 || g == 1) return p.to_string();
  std::vector<std::int64_t> c = p.coeffs();
  for (auto& v : c) v /= g;
  return std::to_string(g) + "*(" + IntPolynomial(std::move(c)).to_string() + ")";
}

}  // namespace ctd

#endif
