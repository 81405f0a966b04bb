#ifndef CTD_QUIVER_HPP
#define CTD_QUIVER_HPP

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ctd/error.hpp"

namespace ctd {

using Arrow = std::pair<int, int>;
using Path = std::vector<int>;

// Quiver stored as its skew-symmetric exchange matrix.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n) : n_(n), b_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw Error("bad-vertex", "negative vertex count");
  }

  static Quiver from_arrows(int n, const std::vector<Arrow>& arrows) {
    Quiver q(n);
    for (auto [i, j] : arrows) q.add_arrow(i, j);
    return q;
  }

  int size() const { return n_; }
  int operator()(int i, int j) const { return b_[idx(i, j)]; }
  bool has_arrow(int i, int j) const { return (*this)(i, j) > 0; }
  bool adjacent(int i, int j) const { return (*this)(i, j) != 0; }

  void set(int i, int j, int v) {
    b_[idx(i, j)] = v;
    b_[idx(j, i)] = -v;
  }
  void add_arrow(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw Error("loop", "loop at vertex " + std::to_string(i));
    set(i, j, (*this)(i, j) + 1);
  }

  void check_vertex(int k) const {
    if (k < 0 || k >= n_)
      throw Error("bad-vertex", "vertex " + std::to_string(k) + " out of range [0," +
                                    std::to_string(n_) + ")");
  }

  std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int c = 0; c < (*this)(i, j); ++c) out.emplace_back(i, j);
    return out;
  }
  int arrow_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) c += std::abs((*this)(i, j));
    return c;
  }
  std::vector<int> successors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
      if (has_arrow(i, j)) out.push_back(j);
    return out;
  }
  std::vector<int> predecessors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
      if (has_arrow(j, i)) out.push_back(j);
    return out;
  }
  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }
  int valency(int i) const {
    int c = 0;
    for (int j = 0; j < n_; ++j) c += std::abs((*this)(i, j));
    return c;
  }
  bool is_simple() const {
    for (int v : b_)
      if (std::abs(v) > 1) return false;
    return true;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<int> b_;
};

inline Quiver mutate(const Quiver& q, int k) {
  q.check_vertex(k);
  const int n = q.size();
  Quiver r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int v;
      if (i == k || j == k) {
        v = -q(i, j);
      } else {
        int bik = q(i, k), bkj = q(k, j);
        v = q(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
      r.set(i, j, v);
    }
  }
  return r;
}

inline Quiver opposite(const Quiver& q) {
  Quiver r(q.size());
  for (int i = 0; i < q.size(); ++i)
    for (int j = i + 1; j < q.size(); ++j) r.set(i, j, -q(i, j));
  return r;
}

// Subquiver induced on `verts`; vertex verts[i] becomes i.
inline Quiver induced(const Quiver& q, const std::vector<int>& verts) {
  Quiver r(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      r.set(static_cast<int>(a), static_cast<int>(b), q(verts[a], verts[b]));
  return r;
}

inline Quiver relabel(const Quiver& q, const std::vector<int>& perm) {
  Quiver r(q.size());
  for (int i = 0; i < q.size(); ++i)
    for (int j = i + 1; j < q.size(); ++j) r.set(perm[i], perm[j], q(i, j));
  return r;
}

inline bool is_connected(const Quiver& q) {
  if (q.size() == 0) return true;
  std::vector<char> seen(q.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : q.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == q.size();
}

// Oriented 3-cycles a->b->c->a, each listed once starting at its smallest vertex.
inline std::vector<std::array<int, 3>> oriented_triangles(const Quiver& q) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < q.size(); ++a)
    for (int b : q.successors(a))
      for (int c : q.successors(b))
        if (a < b && a < c && q.has_arrow(c, a)) out.push_back({a, b, c});
  return out;
}

inline Quiver linear_a(int n) {
  Quiver q(n);
  for (int i = 0; i + 1 < n; ++i) q.add_arrow(i, i + 1);
  return q;
}

// D_n with 0 -> 2, 1 -> 2, 2 -> 3 -> ... -> n-1.
inline Quiver dynkin_d(int n) {
  if (n < 4) throw Error("precondition", "D_n needs n >= 4");
  Quiver q(n);
  q.add_arrow(0, 2);
  q.add_arrow(1, 2);
  for (int i = 2; i + 1 < n; ++i) q.add_arrow(i, i + 1);
  return q;
}

namespace detail {

inline void validate_parsed(const std::vector<std::pair<Arrow, std::string>>& src) {
  std::set<Arrow> seen;
  for (const auto& [a, where] : src) {
    if (a.first == a.second) throw Error("loop", where + ": loop at vertex " + std::to_string(a.first));
    if (seen.count({a.second, a.first}))
      throw Error("2-cycle", where + ": arrows " + std::to_string(a.first) + "->" +
                                 std::to_string(a.second) + " and its reverse");
    if (!seen.insert(a).second)
      throw Error("multiple-arrow", where + ": repeated arrow " + std::to_string(a.first) + "->" +
                                        std::to_string(a.second));
  }
}

inline Quiver build_parsed(int n, const std::vector<std::pair<Arrow, std::string>>& src) {
  for (const auto& [a, where] : src)
    for (int v : {a.first, a.second})
      if (v < 0 || v >= n)
        throw Error("bad-vertex", where + ": vertex " + std::to_string(v) + " out of range");
  validate_parsed(src);
  Quiver q(n);
  for (const auto& [a, where] : src) q.add_arrow(a.first, a.second);
  return q;
}

}  // namespace detail

inline Quiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
    throw Error("parse", "expected an object with \"n\" and \"arrows\"");
  if (!j["n"].is_number_integer()) throw Error("parse", "\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (n < 1) throw Error("parse", "\"n\" must be at least 1");
  if (!j["arrows"].is_array()) throw Error("parse", "\"arrows\" must be an array");
  std::vector<std::pair<Arrow, std::string>> src;
  std::size_t pos = 0;
  for (const auto& a : j["arrows"]) {
    std::string where = "arrows[" + std::to_string(pos++) + "]";
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw Error("parse", where + ": expected [i, j]");
    src.push_back({{a[0].get<int>(), a[1].get<int>()}, where});
  }
  return detail::build_parsed(n, src);
}

inline nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [i, j] : q.arrows()) arrows.push_back({i, j});
  return {{"n", q.size()}, {"arrows", arrows}};
}

// Text format: "i -> j" per line, '#' starts a comment. A line "n = K" fixes the
// vertex count; otherwise it is one more than the largest index used.
inline Quiver parse_quiver_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int declared = -1;
  int maxv = -1;
  std::vector<std::pair<Arrow, std::string>> src;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string where = "line " + std::to_string(lineno);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    // Allow "0->1" without spaces.
    if (toks.size() == 1) {
      auto p = toks[0].find("->");
      if (p != std::string::npos) toks = {toks[0].substr(0, p), "->", toks[0].substr(p + 2)};
    }
    auto to_int = [&](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error("parse", where + ": expected a non-negative vertex index, got '" + s + "'");
      if (s.size() > 6) throw Error("bad-vertex", where + ": vertex index too large");
      return std::stoi(s);
    };
    if (toks.size() == 3 && toks[0] == "n" && toks[1] == "=") {
      declared = to_int(toks[2]);
      continue;
    }
    if (toks.size() != 3 || toks[1] != "->")
      throw Error("parse", where + ": expected 'i -> j'");
    int i = to_int(toks[0]), j = to_int(toks[2]);
    maxv = std::max({maxv, i, j});
    src.push_back({{i, j}, where});
  }
  int n = declared >= 0 ? declared : maxv + 1;
  if (n < 1) throw Error("parse", "empty quiver description");
  return detail::build_parsed(n, src);
}

// Accepts either format; JSON is recognised by a leading '{'.
inline Quiver parse_quiver(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("parse", std::string("JSON: ") + e.what());
    }
    return quiver_from_json(j);
  }
  return parse_quiver_text(text);
}

// Sorted arrows; the "n = K" line only when K is not implied by the arrows.
inline std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  auto arrows = q.arrows();
  int maxv = -1;
  for (auto [i, j] : arrows) maxv = std::max({maxv, i, j});
  if (maxv + 1 != q.size()) out << "n = " << q.size() << "\n";
  for (auto [i, j] : arrows) out << i << " -> " << j << "\n";
  return out.str();
}

}  // namespace ctd

#endif
