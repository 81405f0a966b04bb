#ifndef CTD_RELATIONS_HPP
#define CTD_RELATIONS_HPP

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctd/type_d.hpp"

namespace ctd {

struct RelationSet {
  std::vector<Path> zeros;
  std::vector<std::pair<Path, Path>> commutes;
};

// Relations of the cluster-tilted algebra of a quiver of type A or D.
inline RelationSet relations_for(const Quiver& q) {
  RelationSet rels;
  auto add_triangle = [&](const std::array<int, 3>& t) {
    rels.zeros.push_back({t[0], t[1], t[2]});
    rels.zeros.push_back({t[1], t[2], t[0]});
    rels.zeros.push_back({t[2], t[0], t[1]});
  };
  if (is_type_a(q)) {
    for (const auto& t : oriented_triangles(q)) add_triangle(t);
    return rels;
  }
  DStructure ds = classify_structure(q);
  std::vector<int> part_of(q.size(), -1);
  for (std::size_t j = 0; j < ds.a_parts.size(); ++j)
    for (int v : ds.a_parts[j]) part_of[v] = static_cast<int>(j);
  for (const auto& t : oriented_triangles(q))
    if (part_of[t[0]] != -1 && part_of[t[0]] == part_of[t[1]] && part_of[t[1]] == part_of[t[2]]) add_triangle(t);
  rels.zeros.insert(rels.zeros.end(), ds.skeleton_zeros.begin(), ds.skeleton_zeros.end());
  rels.commutes = ds.skeleton_commutes;
  std::sort(rels.zeros.begin(), rels.zeros.end());
  return rels;
}

inline bool is_walk(const Quiver& q, const Path& p) {
  if (p.empty()) return false;
  for (int v : p)
    if (v < 0 || v >= q.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!q.has_arrow(p[i], p[i + 1])) return false;
  return true;
}

namespace detail {

inline bool contains_subpath(const Path& p, const Path& sub) {
  if (sub.size() > p.size()) return false;
  return std::search(p.begin(), p.end(), sub.begin(), sub.end()) != p.end();
}

inline void substitutions(const Path& p, const Path& from, const Path& to, std::vector<Path>& out) {
  if (from.size() > p.size()) return;
  for (std::size_t i = 0; i + from.size() <= p.size(); ++i) {
    if (!std::equal(from.begin(), from.end(), p.begin() + static_cast<long>(i))) continue;
    Path r(p.begin(), p.begin() + static_cast<long>(i));
    r.insert(r.end(), to.begin(), to.end());
    r.insert(r.end(), p.begin() + static_cast<long>(i + from.size()), p.end());
    out.push_back(std::move(r));
  }
}

}  // namespace detail

// All paths reachable from `p` by replacing one side of a commutativity
// relation by the other. Walks longer than `max_len` vertices are not expanded.
inline std::set<Path> commutativity_closure(const RelationSet& rels, const Path& p, std::size_t max_len) {
  std::set<Path> seen{p};
  std::deque<Path> todo{p};
  while (!todo.empty()) {
    Path cur = todo.front();
    todo.pop_front();
    std::vector<Path> next;
    for (const auto& [u, v] : rels.commutes) {
      detail::substitutions(cur, u, v, next);
      detail::substitutions(cur, v, u, next);
    }
    for (auto& r : next) {
      if (r.size() > max_len) continue;
      if (seen.insert(r).second) todo.push_back(std::move(r));
    }
  }
  return seen;
}

inline bool closure_is_zero(const RelationSet& rels, const std::set<Path>& closure) {
  for (const auto& member : closure)
    for (const auto& z : rels.zeros)
      if (detail::contains_subpath(member, z)) return true;
  return false;
}

inline bool is_nonzero_path(const Quiver& q, const RelationSet& rels, const Path& path) {
  if (!is_walk(q, path)) throw Error("not-a-walk", "path is not a directed walk in the quiver");
  if (path.size() <= 2) return true;
  std::size_t bound = 2 * static_cast<std::size_t>(q.size()) + path.size();
  return !closure_is_zero(rels, commutativity_closure(rels, path, bound));
}

struct CartanMatrix {
  int n = 0;
  std::vector<long long> c;  // row-major

  CartanMatrix() = default;
  explicit CartanMatrix(int size) : n(size), c(static_cast<std::size_t>(size) * size, 0) {}
  long long& operator()(int i, int j) { return c[static_cast<std::size_t>(i) * n + j]; }
  long long operator()(int i, int j) const { return c[static_cast<std::size_t>(i) * n + j]; }

  CartanMatrix transposed() const {
    CartanMatrix t(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

// Bundles a quiver with its relations so repeated path queries reuse them.
struct Algebra {
  Quiver quiver;
  RelationSet rels;

  explicit Algebra(Quiver q) : quiver(std::move(q)), rels(relations_for(quiver)) {}

  bool nonzero(const Path& p) const { return is_nonzero_path(quiver, rels, p); }

  // Every nonzero simple path starting at `from` (the trivial path included).
  // Extensions of a zero path are zero, so the search stops at zero prefixes.
  std::vector<Path> nonzero_paths_from(int from) const {
    std::vector<Path> out;
    std::vector<char> on(quiver.size(), 0);
    Path cur{from};
    on[from] = 1;
    auto dfs = [&](auto&& self) -> void {
      out.push_back(cur);
      for (int w : quiver.successors(cur.back())) {
        if (on[w]) continue;
        cur.push_back(w);
        if (nonzero(cur)) {
          on[w] = 1;
          self(self);
          on[w] = 0;
        }
        cur.pop_back();
      }
    };
    dfs(dfs);
    return out;
  }

  std::vector<Path> nonzero_paths_to(int to) const {
    std::vector<Path> out;
    for (int v = 0; v < quiver.size(); ++v)
      for (auto& p : nonzero_paths_from(v))
        if (p.back() == to) out.push_back(std::move(p));
    return out;
  }

  CartanMatrix cartan() const {
    const int n = quiver.size();
    CartanMatrix c(n);
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<Path>> by_end(n);
      for (auto& p : nonzero_paths_from(j)) by_end[p.back()].push_back(std::move(p));
      for (int i = 0; i < n; ++i) {
        if (by_end[i].empty()) continue;
        c(i, j) = 1;
        if (by_end[i].size() > 1) {
          auto cl = commutativity_closure(rels, by_end[i][0], 2 * static_cast<std::size_t>(n));
          for (const auto& p : by_end[i])
            if (!cl.count(p))
              throw Error("non-schurian", "two independent nonzero paths " + std::to_string(j) + " -> " +
                                              std::to_string(i));
        }
      }
    }
    return c;
  }
};

// C(i, j) = 1 iff there is a nonzero path from j to i.
inline CartanMatrix cartan_matrix(const Quiver& q) { return Algebra(q).cartan(); }

}  // namespace ctd

#endif
