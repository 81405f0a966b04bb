#ifndef CTD_MUTATION_ANALYSIS_HPP
#define CTD_MUTATION_ANALYSIS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctd/relations.hpp"

namespace ctd {

struct Definedness {
  bool neg = false;
  bool pos = false;
  friend bool operator==(const Definedness&, const Definedness&) = default;
};

enum class Verdict { Good, Bad };

struct GoodBadReport {
  int k = 0;
  Definedness before;
  Definedness after;
  Verdict verdict = Verdict::Bad;
};

inline std::string to_string(const Definedness& d) {
  if (d.neg && d.pos) return "both";
  if (d.neg) return "neg";
  if (d.pos) return "pos";
  return "none";
}
inline std::string to_string(Verdict v) { return v == Verdict::Good ? "Good" : "Bad"; }

inline Definedness mutation_definedness(const Algebra& alg, int k) {
  alg.quiver.check_vertex(k);
  Definedness d;
  auto in = alg.quiver.predecessors(k);
  auto out = alg.quiver.successors(k);
  d.neg = true;
  for (const auto& p : alg.nonzero_paths_from(k)) {
    bool ok = false;
    for (int j : in) {
      Path ext{j};
      ext.insert(ext.end(), p.begin(), p.end());
      if (alg.nonzero(ext)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      d.neg = false;
      break;
    }
  }
  d.pos = true;
  for (const auto& p : alg.nonzero_paths_to(k)) {
    bool ok = false;
    for (int j : out) {
      Path ext = p;
      ext.push_back(j);
      if (alg.nonzero(ext)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      d.pos = false;
      break;
    }
  }
  return d;
}

inline Definedness mutation_definedness(const Quiver& q, int k) { return mutation_definedness(Algebra(q), k); }

inline Verdict verdict_for(const Definedness& before, const Definedness& after) {
  return (before.neg && after.pos) || (before.pos && after.neg) ? Verdict::Good : Verdict::Bad;
}

// (before, after) pairs that can occur for cluster-tilted algebras of type D.
inline bool is_allowed_pattern(const Definedness& b, const Definedness& a) {
  const Definedness none{false, false}, neg{true, false}, pos{false, true}, both{true, true};
  return (b == none && a == both) || (b == neg && a == pos) || (b == pos && a == neg) || (b == both && a == both) ||
         (b == both && a == none);
}

inline GoodBadReport classify_mutation(const Algebra& alg, int k) {
  GoodBadReport r;
  r.k = k;
  r.before = mutation_definedness(alg, k);
  r.after = mutation_definedness(Algebra(mutate(alg.quiver, k)), k);
  r.verdict = verdict_for(r.before, r.after);
  return r;
}

inline GoodBadReport classify_mutation(const Quiver& q, int k) { return classify_mutation(Algebra(q), k); }

inline std::vector<GoodBadReport> mutation_report(const Quiver& q) {
  Algebra alg(q);
  std::vector<GoodBadReport> out;
  for (int k = 0; k < q.size(); ++k) out.push_back(classify_mutation(alg, k));
  return out;
}

// ---------------------------------------------------------------------------
// Parametric moves

struct ParametricMove {
  std::string row;
  TypeDForm result;
};

namespace detail {

// Type III as the degenerate spike sequence ((1,s',t'),(1,s'',t'')).
inline std::optional<std::vector<Spike>> spike_sequence(const TypeDForm& f) {
  if (auto* p = std::get_if<FormIII>(&f)) return std::vector<Spike>{{1, p->s1, p->t1}, {1, p->s2, p->t2}};
  if (auto* p = std::get_if<FormIV>(&f)) return p->spikes;
  return std::nullopt;
}

inline std::optional<TypeDForm> form_from_sequence(const std::vector<Spike>& seq) {
  if (seq.empty()) return std::nullopt;
  int m = 0;
  for (const auto& s : seq) {
    if (s.d < 1 || s.s < 0 || s.t < 0) return std::nullopt;
    m += s.d;
  }
  if (m < 2 || (seq.size() == 1 && seq[0].d == 2)) return std::nullopt;
  if (m == 2) return canonical_form(FormIII{seq[0].s, seq[0].t, seq[1].s, seq[1].t});
  return canonical_form(FormIV{seq});
}

inline std::vector<Spike> concat(std::vector<Spike> head, const std::vector<Spike>& v, std::size_t from) {
  head.insert(head.end(), v.begin() + static_cast<long>(from), v.end());
  return head;
}

inline void push(std::vector<ParametricMove>& out, const std::string& row, const std::optional<TypeDForm>& f) {
  if (f) out.push_back({row, *f});
}

}  // namespace detail

// One-step rewrites of the table of good mutations, in both directions.
inline std::vector<ParametricMove> parametric_good_move_list(const TypeDForm& form) {
  using detail::push;
  TypeDForm f = canonical_form(form);
  std::vector<ParametricMove> out;
  auto II = [](int a, int b, int c, int d) { return std::optional<TypeDForm>(canonical_form(FormII{a, b, c, d})); };
  auto I = [](int s, int t) { return std::optional<TypeDForm>(canonical_form(FormI{s, t})); };
  if (auto* p = std::get_if<FormI>(&f)) {
    if (p->t >= 1)
      for (int s1 = 0; s1 <= p->s; ++s1)
        for (int t1 = 0; t1 <= p->t - 1; ++t1) {
          int s2 = p->s - s1, t2 = p->t - 1 - t1;
          push(out, "I.5a", II(s1 + 1, t1, s2, t2));
          push(out, "I.5b", II(s1, t1, s2 + 1, t2));
        }
  } else if (auto* p = std::get_if<FormII>(&f)) {
    auto [a, b, c, d] = std::tuple(p->s1, p->t1, p->s2, p->t2);
    if (a >= 1) push(out, "I.5a", I(a - 1 + c, b + d + 1));
    if (c >= 1) push(out, "I.5b", I(a + c - 1, b + d + 1));
    if (a >= 1) push(out, "II.2", II(a - 1, b, c + 1, d));
    if (c >= 1) push(out, "II.2", II(a + 1, b, c - 1, d));
    if (b >= 1)
      for (int s1 = 0; s1 <= a; ++s1)
        for (int t1 = 0; t1 <= b - 1; ++t1) push(out, "II.3", II(s1, t1, c + a - s1, d + (b - 1 - t1) + 1));
    if (d >= 1)
      for (int s2 = 0; s2 <= c; ++s2)
        for (int t2 = 0; t2 <= d - 1; ++t2) push(out, "II.3", II(a + c - s2, b + (d - 1 - t2) + 1, s2, t2));
  } else if (auto seq = detail::spike_sequence(f)) {
    const std::size_t r = seq->size();
    for (std::size_t k = 0; k < r; ++k) {
      auto v = rotated(*seq, k);
      const Spike& v0 = v[0];
      using detail::concat;
      using detail::form_from_sequence;
      if (v0.d >= 4) {
        push(out, "IV.1a", form_from_sequence(concat({{1, v0.s, v0.t}, {v0.d - 2, 0, 0}}, v, 1)));
        push(out, "IV.1b", form_from_sequence(concat({{v0.d - 2, v0.s, v0.t}, {1, 0, 0}}, v, 1)));
      }
      if (r < 2) continue;
      const Spike& v1 = v[1];
      if (v0.d == 1 && v1.d >= 2 && v1.s == 0 && v1.t == 0)
        push(out, "IV.1a", form_from_sequence(concat({{v1.d + 2, v0.s, v0.t}}, v, 2)));
      if (v0.d >= 2 && v1 == Spike{1, 0, 0})
        push(out, "IV.1b", form_from_sequence(concat({{v0.d + 2, v0.s, v0.t}}, v, 2)));
      if (v0.d == 2) {
        push(out, "IV.2a", form_from_sequence(concat({{1, v0.s, v0.t}, {v1.d, v1.s + 1, v1.t}}, v, 2)));
        push(out, "IV.2b", form_from_sequence(concat({{1, v0.s + 1, v0.t}, v1}, v, 2)));
      }
      if (v0.d == 1 && v1.s >= 1)
        push(out, "IV.2a", form_from_sequence(concat({{2, v0.s, v0.t}, {v1.d, v1.s - 1, v1.t}}, v, 2)));
      if (v0.d == 1 && v0.s >= 1)
        push(out, "IV.2b", form_from_sequence(concat({{2, v0.s - 1, v0.t}, v1}, v, 2)));
    }
  }
  return out;
}

inline std::vector<TypeDForm> unique_forms(const std::vector<ParametricMove>& moves, const TypeDForm& self) {
  std::set<TypeDForm> seen;
  std::vector<TypeDForm> out;
  TypeDForm me = canonical_form(self);
  for (const auto& m : moves)
    if (m.result != me && seen.insert(m.result).second) out.push_back(m.result);
  return out;
}

inline std::vector<TypeDForm> parametric_good_moves(const TypeDForm& f) {
  return unique_forms(parametric_good_move_list(f), f);
}

// Double mutations: a triangle-carrying spike at distance 1 hands part of its
// rooted quiver, plus one triangle, to the next spike (and back). They preserve
// the derived class; from 8 vertices on they can leave the good mutation class.
inline std::vector<ParametricMove> parametric_double_move_list(const TypeDForm& form) {
  TypeDForm f = canonical_form(form);
  std::vector<ParametricMove> out;
  auto seq = detail::spike_sequence(f);
  if (!seq || seq->size() < 2) return out;
  const std::string row = std::holds_alternative<FormIII>(f) ? "dbl.III" : "dbl.IV";
  for (std::size_t k = 0; k < seq->size(); ++k) {
    auto v = rotated(*seq, k);
    const Spike v0 = v[0], v1 = v[1];
    if (v0.d != 1) continue;
    if (v0.t >= 1)
      for (int s1 = 0; s1 <= v0.s; ++s1)
        for (int t1 = 0; t1 <= v0.t - 1; ++t1) {
          int s2 = v0.s - s1, t2 = v0.t - 1 - t1;
          detail::push(out, row,
                       detail::form_from_sequence(detail::concat({{1, s1, t1}, {v1.d, s2 + v1.s, t2 + v1.t + 1}}, v, 2)));
        }
    if (v1.t >= 1)
      for (int s2 = 0; s2 <= v1.s; ++s2)
        for (int t2 = 0; t2 <= v1.t - 1; ++t2) {
          int s3 = v1.s - s2, t3 = v1.t - 1 - t2;
          detail::push(out, row,
                       detail::form_from_sequence(detail::concat({{1, v0.s + s2, v0.t + t2 + 1}, {v1.d, s3, t3}}, v, 2)));
        }
  }
  return out;
}

inline std::vector<TypeDForm> parametric_double_moves(const TypeDForm& f) {
  return unique_forms(parametric_double_move_list(f), f);
}

}  // namespace ctd

#endif
