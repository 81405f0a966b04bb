#ifndef CTD_TYPE_A_HPP
#define CTD_TYPE_A_HPP

#include <optional>
#include <string>
#include <vector>

#include "ctd/quiver.hpp"

namespace ctd {

struct AShape {
  int s = 0;  // lines: arrows in no oriented triangle
  int t = 0;  // oriented triangles
  std::optional<int> root;

  int vertex_count() const { return 1 + s + 2 * t; }
  friend bool operator==(const AShape&, const AShape&) = default;
};

// Incremental quiver construction with fresh vertex ids.
struct QuiverBuilder {
  int n = 0;
  std::vector<Arrow> arrows;

  int vertex() { return n++; }
  void arrow(int a, int b) { arrows.emplace_back(a, b); }
  Quiver build() const { return Quiver::from_arrows(n, arrows); }
};

// Rooted type A quiver in standard form glued at `root`: a line of s arrows
// root -> x1 -> ... -> xs, then t triangles fanned along x_s -> u -> y -> x_s.
inline void append_rooted_a(QuiverBuilder& b, int root, int s, int t) {
  if (s < 0 || t < 0) throw Error("invalid-form", "negative line or triangle count");
  int cur = root;
  for (int i = 0; i < s; ++i) {
    int x = b.vertex();
    b.arrow(cur, x);
    cur = x;
  }
  for (int i = 0; i < t; ++i) {
    int u = b.vertex(), y = b.vertex();
    b.arrow(cur, u);
    b.arrow(u, y);
    b.arrow(y, cur);
    cur = u;
  }
}

inline Quiver rooted_a_standard(int s, int t) {
  QuiverBuilder b;
  int r = b.vertex();
  append_rooted_a(b, r, s, t);
  return b.build();
}

namespace detail {

struct ANeighborhood {
  std::vector<int> lines;      // per vertex
  std::vector<int> triangles;  // per vertex
  int t = 0;
};

// Returns nullopt-equivalent via `why` when the quiver is not of type A.
inline ANeighborhood type_a_structure(const Quiver& q, std::string& why) {
  ANeighborhood nb;
  const int n = q.size();
  nb.lines.assign(n, 0);
  nb.triangles.assign(n, 0);
  if (n < 1) {
    why = "empty quiver";
    return nb;
  }
  if (!q.is_simple()) {
    why = "multiple arrows";
    return nb;
  }
  if (!is_connected(q)) {
    why = "not connected";
    return nb;
  }
  auto tris = oriented_triangles(q);
  std::vector<int> in_tri(static_cast<std::size_t>(n) * n, 0);
  for (auto [a, b, c] : tris) {
    for (auto [x, y] : {Arrow{a, b}, Arrow{b, c}, Arrow{c, a}}) {
      if (in_tri[x * n + y]++) {
        why = "an arrow lies in two oriented triangles";
        return nb;
      }
    }
    ++nb.triangles[a];
    ++nb.triangles[b];
    ++nb.triangles[c];
  }
  nb.t = static_cast<int>(tris.size());
  if (q.arrow_count() != n - 1 + nb.t) {
    why = "underlying graph has a cycle that is not an oriented triangle";
    return nb;
  }
  for (int v = 0; v < n; ++v) {
    nb.lines[v] = q.valency(v) - 2 * nb.triangles[v];
    int l = nb.lines[v], tr = nb.triangles[v];
    bool ok = (tr == 0 && (l == 1 || l == 2)) || (tr == 1 && (l == 0 || l == 1)) || (tr == 2 && l == 0) ||
              (n == 1 && l == 0 && tr == 0);
    if (!ok) {
      why = "vertex " + std::to_string(v) + " has a neighbourhood not allowed in type A";
      return nb;
    }
  }
  return nb;
}

}  // namespace detail

inline bool is_type_a(const Quiver& q) {
  std::string why;
  detail::type_a_structure(q, why);
  return why.empty();
}

inline bool is_valid_root(const Quiver& q, int root) {
  std::string why;
  auto nb = detail::type_a_structure(q, why);
  if (!why.empty()) return false;
  if (q.size() == 1) return true;
  int l = nb.lines[root], tr = nb.triangles[root];
  return (l == 1 && tr == 0) || (l == 0 && tr == 1);
}

inline AShape analyze_type_a(const Quiver& q, std::optional<int> root = std::nullopt) {
  std::string why;
  auto nb = detail::type_a_structure(q, why);
  if (!why.empty()) throw Error("not-type-a", why);
  if (root) {
    q.check_vertex(*root);
    if (!is_valid_root(q, *root))
      throw Error("invalid-root", "vertex " + std::to_string(*root) + " cannot serve as a root");
  }
  AShape a;
  a.t = nb.t;
  a.s = q.arrow_count() - 3 * nb.t;
  a.root = root;
  return a;
}

}  // namespace ctd

#endif
