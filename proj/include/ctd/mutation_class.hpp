#ifndef CTD_MUTATION_CLASS_HPP
#define CTD_MUTATION_CLASS_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ctd/canonical.hpp"

namespace ctd {

inline constexpr std::size_t kDefaultClassCap = 5'000'000;

struct ClassReport {
  std::vector<CanonicalKey> representatives;  // sorted
  std::size_t size = 0;
  Quiver start;
  bool truncated = false;

  std::vector<Quiver> quivers() const {
    std::vector<Quiver> out;
    out.reserve(representatives.size());
    for (const auto& k : representatives) out.push_back(quiver_from_key(k));
    return out;
  }
};

// Breadth-first search over mutations, deduplicated by canonical key. Each level
// is processed in key order so the report does not depend on traversal details.
inline ClassReport mutation_class(const Quiver& start, std::size_t cap = kDefaultClassCap) {
  ClassReport rep;
  rep.start = start;
  std::set<CanonicalKey> seen;
  std::vector<CanonicalKey> frontier{canonical_key(start)};
  seen.insert(frontier.front());
  while (!frontier.empty() && !rep.truncated) {
    std::set<CanonicalKey> next;
    for (const auto& key : frontier) {
      Quiver q = quiver_from_key(key);
      for (int k = 0; k < q.size(); ++k) {
        Quiver m = mutate(q, k);
        if (!m.is_simple())
          throw Error("multiple-arrow", "mutation produced a multiple arrow; class is not of type A or D");
        CanonicalKey mk = canonical_key(m);
        if (seen.count(mk)) continue;
        if (seen.size() >= cap) {
          rep.truncated = true;
          break;
        }
        seen.insert(mk);
        next.insert(mk);
      }
      if (rep.truncated) break;
    }
    frontier.assign(next.begin(), next.end());
  }
  rep.representatives.assign(seen.begin(), seen.end());
  rep.size = rep.representatives.size();
  return rep;
}

}  // namespace ctd

#endif
