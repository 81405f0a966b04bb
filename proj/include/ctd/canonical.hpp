#ifndef CTD_CANONICAL_HPP
#define CTD_CANONICAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ctd/quiver.hpp"

namespace ctd {

// Relabeling-invariant byte string: "n:" followed by the strict upper triangle of
// the lexicographically smallest relabeled exchange matrix, one byte per entry.
using CanonicalKey = std::string;

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const Quiver& q) : q_(q), n_(q.size()) {}

  CanonicalKey run() {
    std::vector<int> colour(n_);
    // Initial colouring by (out-degree, in-degree); colours are start positions.
    std::vector<std::tuple<int, int>> deg(n_);
    for (int v = 0; v < n_; ++v)
      deg[v] = {static_cast<int>(q_.successors(v).size()), static_cast<int>(q_.predecessors(v).size())};
    assign_ranks(deg, colour);
    search(colour);
    return prefix() + *best_;
  }

  std::vector<int> best_labeling() const { return best_perm_; }

 private:
  std::string prefix() const { return std::to_string(n_) + ":"; }

  template <class Sig>
  void assign_ranks(const std::vector<Sig>& sig, std::vector<int>& colour) const {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int start = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) start = i;
      colour[order[i]] = start;
    }
  }

  static int cell_count(const std::vector<int>& colour) {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<int>& colour) const {
    int cells = cell_count(colour);
    while (true) {
      using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
      std::vector<Sig> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].first = colour[v];
        for (int w = 0; w < n_; ++w)
          if (q_(v, w) != 0) sig[v].second.emplace_back(colour[w], q_(v, w));
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      assign_ranks(sig, colour);
      int now = cell_count(colour);
      if (now == cells) return;
      cells = now;
    }
  }

  std::string encode(const std::vector<int>& pos) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    std::string s;
    s.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) s.push_back(static_cast<char>('A' + q_(inv[i], inv[j])));
    return s;
  }

  bool twins(int u, int v) const {
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (q_(u, w) != q_(v, w)) return false;
    }
    return q_(u, v) == 0;
  }

  void search(std::vector<int> colour) {
    refine(colour);
    // Pick the first non-singleton cell (smallest colour).
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n_; ++v) cells[colour[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      std::string enc = encode(colour);
      if (!best_ || enc < *best_) {
        best_ = enc;
        best_perm_ = colour;
      }
      return;
    }
    std::vector<int> tried;
    for (int v : *target) {
      // Swapping twins is an automorphism fixing the current partition.
      bool skip = false;
      for (int u : tried)
        if (twins(u, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      std::vector<int> next = colour;
      for (int w : *target)
        if (w != v) next[w] = colour[v] + 1;
      search(next);
    }
  }

  const Quiver& q_;
  int n_;
  std::optional<std::string> best_;
  std::vector<int> best_perm_;
};

}  // namespace detail

inline CanonicalKey canonical_key(const Quiver& q) {
  if (q.size() == 0) return "0:";
  return detail::Canonizer(q).run();
}

// Canonical labeling: position of each vertex in the canonical order.
inline std::vector<int> canonical_labeling(const Quiver& q) {
  detail::Canonizer c(q);
  c.run();
  return c.best_labeling();
}

inline Quiver quiver_from_key(const CanonicalKey& key) {
  auto colon = key.find(':');
  if (colon == std::string::npos) throw Error("parse", "malformed canonical key");
  int n = std::stoi(key.substr(0, colon));
  Quiver q(n);
  std::size_t p = colon + 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) q.set(i, j, key.at(p++) - 'A');
  return q;
}

inline bool isomorphic(const Quiver& a, const Quiver& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

}  // namespace ctd

#endif
