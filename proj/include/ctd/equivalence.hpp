#ifndef CTD_EQUIVALENCE_HPP
#define CTD_EQUIVALENCE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ctd/invariants.hpp"
#include "ctd/modp.hpp"
#include "ctd/mutation_analysis.hpp"

namespace ctd {

// ---------------------------------------------------------------------------
// Interval quantities

struct IntervalQuantities {
  int a = 0, b = 0, s = 0;
  friend bool operator==(const IntervalQuantities&, const IntervalQuantities&) = default;
};

inline IntervalQuantities interval_quantities(const std::vector<Spike>& seq, const std::vector<int>& idx) {
  if (idx.empty()) throw Error("precondition", "interval quantities need a non-empty index set");
  IntervalQuantities q;
  for (int i : idx) {
    if (i < 0 || i >= static_cast<int>(seq.size())) throw Error("precondition", "index out of range");
    const Spike& sp = seq[static_cast<std::size_t>(i)];
    if (sp.d < 1) throw Error("precondition", "distances must be positive");
    if (sp.d == 1) {
      q.b += 1;
    } else if (sp.d % 2 == 0) {
      q.b += sp.d / 2;
      q.s += 1;
    } else {
      q.a += 1;
      q.b += (sp.d - 3) / 2;
    }
    q.s += sp.s;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Good mutation parameters

struct ParamsC3 {
  int T1 = 0, T2 = 0, S = 0;
  auto operator<=>(const ParamsC3&) const = default;
};
struct ParamsD21 {
  int b = 3, S = 0;
  auto operator<=>(const ParamsD21&) const = default;
};
struct ParamsD22 {
  std::vector<std::pair<int, int>> blocks;  // (b_j, T_j)
  int S = 0;
  auto operator<=>(const ParamsD22&) const = default;
};
struct ParamsD31 {
  int b = 0;
  std::vector<int> spikes;  // S_1..S_a
  auto operator<=>(const ParamsD31&) const = default;
};
struct Segment {
  int b = 0;
  std::vector<int> S;
  int T = 1;
  auto operator<=>(const Segment&) const = default;
};
struct ParamsD32 {
  std::vector<Segment> segments;
  auto operator<=>(const ParamsD32&) const = default;
};

using GoodMutationParams = std::variant<ParamsC3, ParamsD21, ParamsD22, ParamsD31, ParamsD32>;

inline std::string class_name(const GoodMutationParams& p) {
  static const char* names[] = {"c", "d2,1", "d2,2", "d3,1", "d3,2"};
  return names[p.index()];
}

// Cyclic sequences rotated to their minimal representative.
inline GoodMutationParams normalize(GoodMutationParams p) {
  if (auto* x = std::get_if<ParamsC3>(&p)) {
    if (x->T1 < x->T2) std::swap(x->T1, x->T2);
  } else if (auto* x = std::get_if<ParamsD22>(&p)) {
    x->blocks = min_rotation(x->blocks);
  } else if (auto* x = std::get_if<ParamsD31>(&p)) {
    x->spikes = min_rotation(x->spikes);
  } else if (auto* x = std::get_if<ParamsD32>(&p)) {
    x->segments = min_rotation(x->segments);
  }
  return p;
}

inline bool params_equal(const GoodMutationParams& p, const GoodMutationParams& q) {
  return normalize(p) == normalize(q);
}

inline std::string to_string(const GoodMutationParams& p) {
  auto ints = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  if (auto* x = std::get_if<ParamsC3>(&p))
    return "c(" + std::to_string(x->T1) + "," + std::to_string(x->T2) + "," + std::to_string(x->S) + ")";
  if (auto* x = std::get_if<ParamsD21>(&p)) return "d21(" + std::to_string(x->b) + "," + std::to_string(x->S) + ")";
  if (auto* x = std::get_if<ParamsD22>(&p)) {
    std::string s = "d22((";
    for (std::size_t i = 0; i < x->blocks.size(); ++i)
      s += (i ? ",(" : "(") + std::to_string(x->blocks[i].first) + "," + std::to_string(x->blocks[i].second) + ")";
    return s + ")," + std::to_string(x->S) + ")";
  }
  if (auto* x = std::get_if<ParamsD31>(&p)) return "d31(" + std::to_string(x->b) + "," + ints(x->spikes) + ")";
  const auto& x = std::get<ParamsD32>(p);
  std::string s = "d32(";
  for (std::size_t i = 0; i < x.segments.size(); ++i) {
    const auto& g = x.segments[i];
    s += (i ? ",(" : "(") + std::to_string(g.b) + "," + ints(g.S) + "," + std::to_string(g.T) + ")";
  }
  return s + ")";
}

namespace detail {

inline std::vector<int> cyclic_run(int r, int start, int len) {
  std::vector<int> out;
  for (int k = 0; k < len; ++k) out.push_back((start + k) % r);
  return out;
}

// i^+ = {i, ..., next(i) - 1}
inline std::vector<int> positive_part(int r, const std::vector<int>& I, std::size_t j) {
  int i = I[j], next = I[(j + 1) % I.size()];
  int len = ((next - i) % r + r) % r;
  return cyclic_run(r, i, len == 0 ? r : len);
}

// i^- = {prev(i) + 1, ..., i}
inline std::vector<int> negative_part(int r, const std::vector<int>& I, std::size_t j) {
  int i = I[j], prev = I[(j + I.size() - 1) % I.size()];
  int len = ((i - prev) % r + r) % r;
  if (len == 0) len = r;
  return cyclic_run(r, ((i - len + 1) % r + r) % r, len);
}

inline std::vector<int> all_indices(int r) { return cyclic_run(r, 0, r); }

}  // namespace detail

// The map from a spike sequence to its good mutation parameters.
inline GoodMutationParams good_params_of_sequence(const std::vector<Spike>& seq) {
  const int r = static_cast<int>(seq.size());
  int m = 0;
  for (const auto& sp : seq) {
    if (sp.d < 1 || sp.s < 0 || sp.t < 0) throw Error("precondition", "invalid spike triple");
    m += sp.d;
  }
  if (r == 0 || m < 2 || (r == 1 && seq[0].d == 2))
    throw Error("precondition", "sequence does not describe a type III or IV quiver");
  std::vector<int> ID, IT;
  for (int i = 0; i < r; ++i) {
    if (seq[i].d >= 3 && seq[i].d % 2 == 1) ID.push_back(i);
    if (seq[i].t > 0) IT.push_back(i);
  }
  auto all = interval_quantities(seq, detail::all_indices(r));
  GoodMutationParams out;
  if (ID.empty() && IT.empty()) {
    if (all.b >= 3)
      out = ParamsD21{all.b, all.s};
    else
      out = ParamsC3{0, 0, all.s};
  } else if (ID.empty()) {
    ParamsD22 p;
    p.S = all.s;
    int bsum = 0;
    for (std::size_t j = 0; j < IT.size(); ++j) {
      int bj = interval_quantities(seq, detail::positive_part(r, IT, j)).b;
      p.blocks.emplace_back(bj, seq[IT[j]].t);
      bsum += bj;
    }
    if (bsum >= 3) {
      out = p;
    } else {
      if (IT.size() > 2) throw Error("internal", "unexpected step 3 shape");
      out = ParamsC3{p.blocks[0].second, IT.size() == 2 ? p.blocks[1].second : 0, all.s};
    }
  } else if (IT.empty()) {
    ParamsD31 p;
    p.b = all.b;
    for (std::size_t j = 0; j < ID.size(); ++j) p.spikes.push_back(interval_quantities(seq, detail::negative_part(r, ID, j)).s);
    out = p;
  } else {
    std::vector<int> pos_in_id(static_cast<std::size_t>(r), -1);
    for (std::size_t j = 0; j < ID.size(); ++j) pos_in_id[ID[j]] = static_cast<int>(j);
    ParamsD32 p;
    for (std::size_t j = 0; j < IT.size(); ++j) {
      auto part = detail::positive_part(r, IT, j);
      Segment g;
      g.b = interval_quantities(seq, part).b;
      g.T = seq[IT[j]].t;
      for (int i : part)
        if (pos_in_id[i] >= 0)
          g.S.push_back(interval_quantities(seq, detail::negative_part(r, ID, static_cast<std::size_t>(pos_in_id[i]))).s);
      p.segments.push_back(std::move(g));
    }
    out = p;
  }
  return normalize(out);
}

// IV((3,0,0)) is accepted as written even though the quiver is II(0,0,0,0).
inline GoodMutationParams good_params(const TypeDForm& form) {
  validate_form(form);
  TypeDForm f = std::holds_alternative<FormIV>(form) ? form : canonical_form(form);
  auto seq = detail::spike_sequence(f);
  if (!seq) throw Error("precondition", to_string(f) + " is not of type III or IV with spikes");
  return good_params_of_sequence(*seq);
}

// The standard form of a good mutation class.
inline std::vector<Spike> standard_sequence(const GoodMutationParams& params) {
  std::vector<Spike> seq;
  auto ones = [&](int k) {
    for (int i = 0; i < k; ++i) seq.push_back({1, 0, 0});
  };
  if (auto* x = std::get_if<ParamsC3>(&params)) {
    seq = {{1, x->S, x->T1}, {1, 0, x->T2}};
  } else if (auto* x = std::get_if<ParamsD21>(&params)) {
    if (x->b < 3) throw Error("invalid-form", "d2,1 needs b >= 3");
    seq.push_back({1, x->S, 0});
    ones(x->b - 1);
  } else if (auto* x = std::get_if<ParamsD22>(&params)) {
    int bsum = 0;
    for (std::size_t j = 0; j < x->blocks.size(); ++j) {
      auto [b, T] = x->blocks[j];
      if (b <= 0 || T <= 0) throw Error("invalid-form", "d2,2 blocks need b, T > 0");
      seq.push_back({1, j == 0 ? x->S : 0, T});
      ones(b - 1);
      bsum += b;
    }
    if (x->blocks.empty() || bsum < 3) throw Error("invalid-form", "d2,2 needs total b >= 3");
  } else if (auto* x = std::get_if<ParamsD31>(&params)) {
    if (x->spikes.empty()) throw Error("invalid-form", "d3,1 needs at least one spike");
    ones(x->b);
    for (int S : x->spikes) seq.push_back({3, S, 0});
  } else {
    const auto& d32 = std::get<ParamsD32>(params);
    if (d32.segments.empty()) throw Error("invalid-form", "d3,2 needs at least one segment");
    for (const auto& g : d32.segments) {
      if (g.T <= 0 || (g.b == 0 && g.S.empty())) throw Error("invalid-form", "bad d3,2 segment");
      if (g.b > 0) {
        seq.push_back({1, 0, g.T});
        ones(g.b - 1);
        for (int S : g.S) seq.push_back({3, S, 0});
      } else {
        seq.push_back({3, g.S[0], g.T});
        for (std::size_t k = 1; k < g.S.size(); ++k) seq.push_back({3, g.S[k], 0});
      }
    }
  }
  return seq;
}

inline TypeDForm standard_form_of(const GoodMutationParams& params) {
  auto f = detail::form_from_sequence(standard_sequence(params));
  if (!f) throw Error("invalid-form", "parameters do not describe a quiver");
  return *f;
}

namespace detail {

// Key identifying a good mutation class.
using GoodKey = std::variant<std::pair<int, int>, FormII, FormIVCycle, GoodMutationParams>;

inline GoodKey good_key(const TypeDForm& form) {
  TypeDForm f = canonical_form(form);
  if (auto* p = std::get_if<FormI>(&f)) {
    if (p->t == 0) return std::pair(vertex_count(f), 0);
    return FormII{p->s + 1, p->t - 1, 0, 0};
  }
  if (auto* p = std::get_if<FormII>(&f)) return FormII{p->s1 + p->s2, p->t1 + p->t2, 0, 0};
  if (auto* p = std::get_if<FormIVCycle>(&f)) return *p;
  return good_params(f);
}

}  // namespace detail

inline bool good_equivalent(const TypeDForm& f, const TypeDForm& g) { return detail::good_key(f) == detail::good_key(g); }

inline TypeDForm good_standard_form(const TypeDForm& form) {
  TypeDForm f = canonical_form(form);
  auto key = detail::good_key(f);
  if (auto* p = std::get_if<std::pair<int, int>>(&key)) return FormI{p->first - 3, 0};
  if (auto* p = std::get_if<FormII>(&key)) return canonical_form(*p);
  if (auto* p = std::get_if<FormIVCycle>(&key)) return *p;
  return standard_form_of(std::get<GoodMutationParams>(key));
}

// ---------------------------------------------------------------------------
// Derived standard forms

struct StdA {
  int n = 4;
  auto operator<=>(const StdA&) const = default;
};
struct StdB {
  int s = 0, t = 0;
  auto operator<=>(const StdB&) const = default;
};
struct StdC {
  int s = 0, t = 0;
  auto operator<=>(const StdC&) const = default;
};
struct StdD1 {
  int n = 5;
  auto operator<=>(const StdD1&) const = default;
};
struct StdD2 {
  int b = 3, s = 0, t = 0;
  auto operator<=>(const StdD2&) const = default;
};
struct StdD3 {
  int b = 0;
  std::vector<std::pair<int, int>> pairs;
  auto operator<=>(const StdD3&) const = default;
};

using DerivedStdForm = std::variant<StdA, StdB, StdC, StdD1, StdD2, StdD3>;

inline std::string to_string(const DerivedStdForm& f) {
  auto n = [](int v) { return std::to_string(v); };
  if (auto* x = std::get_if<StdA>(&f)) return "A(" + n(x->n) + ")";
  if (auto* x = std::get_if<StdB>(&f)) return "B(" + n(x->s) + "," + n(x->t) + ")";
  if (auto* x = std::get_if<StdC>(&f)) return "C(" + n(x->s) + "," + n(x->t) + ")";
  if (auto* x = std::get_if<StdD1>(&f)) return "D1(" + n(x->n) + ")";
  if (auto* x = std::get_if<StdD2>(&f)) return "D2(" + n(x->b) + "," + n(x->s) + "," + n(x->t) + ")";
  const auto& x = std::get<StdD3>(f);
  std::string s = "D3(" + n(x.b) + ";";
  for (std::size_t i = 0; i < x.pairs.size(); ++i)
    s += (i ? ",(" : "(") + n(x.pairs[i].first) + "," + n(x.pairs[i].second) + ")";
  return s + ")";
}

inline TypeDForm to_type_d_form(const DerivedStdForm& f) {
  if (auto* x = std::get_if<StdA>(&f)) return FormI{x->n - 3, 0};
  if (auto* x = std::get_if<StdB>(&f)) return canonical_form(FormII{x->s, x->t, 0, 0});
  if (auto* x = std::get_if<StdC>(&f)) return canonical_form(FormIII{x->s, x->t, 0, 0});
  if (auto* x = std::get_if<StdD1>(&f)) return FormIVCycle{x->n};
  std::vector<Spike> seq;
  if (auto* x = std::get_if<StdD2>(&f)) {
    seq.push_back({1, x->s, x->t});
    for (int i = 1; i < x->b; ++i) seq.push_back({1, 0, 0});
  } else {
    const auto& d3 = std::get<StdD3>(f);
    for (int i = 0; i < d3.b; ++i) seq.push_back({1, 0, 0});
    for (auto [s, t] : d3.pairs) seq.push_back({3, s, t});
  }
  return canonical_form(FormIV{seq});
}

inline Quiver realize(const DerivedStdForm& f) { return realize(to_type_d_form(f)); }

inline int vertex_count(const DerivedStdForm& f) { return vertex_count(to_type_d_form(f)); }

inline DerivedStdForm derived_standard_form(const TypeDForm& form) {
  TypeDForm f = canonical_form(form);
  if (auto* p = std::get_if<FormI>(&f)) {
    if (p->t == 0) return StdA{vertex_count(f)};
    return StdB{p->s + 1, p->t - 1};
  }
  if (auto* p = std::get_if<FormII>(&f)) return StdB{p->s1 + p->s2, p->t1 + p->t2};
  if (auto* p = std::get_if<FormIII>(&f)) return StdC{p->s1 + p->s2, p->t1 + p->t2};
  if (auto* p = std::get_if<FormIVCycle>(&f)) {
    if (p->m % 2) return StdD1{p->m};
    return derived_standard_form(FormIV{std::vector<Spike>(static_cast<std::size_t>(p->m / 2), Spike{1, 0, 0})});
  }
  // Shorten every distance to 1 or 3.
  std::vector<Spike> seq;
  for (Spike sp : std::get<FormIV>(f).spikes) {
    std::vector<Spike> tail;
    while (sp.d >= 4) {
      tail.push_back({1, 0, 0});
      sp.d -= 2;
    }
    if (sp.d == 2) {
      sp.d = 1;
      sp.s += 1;
    }
    seq.push_back(sp);
    seq.insert(seq.end(), tail.begin(), tail.end());
  }
  const int r = static_cast<int>(seq.size());
  std::vector<int> threes;
  int ssum = 0, tsum = 0;
  for (int i = 0; i < r; ++i) {
    if (seq[i].d == 3) threes.push_back(i);
    ssum += seq[i].s;
    tsum += seq[i].t;
  }
  if (threes.empty()) {
    if (r == 2) return StdC{ssum, tsum};
    return StdD2{r, ssum, tsum};
  }
  // Each group of consecutive spikes ends at a distance-3 spike and
  // concentrates its rooted quivers there.
  StdD3 d3;
  d3.b = r - static_cast<int>(threes.size());
  for (std::size_t j = 0; j < threes.size(); ++j) {
    auto group = detail::negative_part(r, threes, j);
    int s = 0, t = 0;
    for (int i : group) {
      s += seq[i].s;
      t += seq[i].t;
    }
    d3.pairs.emplace_back(s, t);
  }
  d3.pairs = min_rotation(d3.pairs);
  if (d3.b == 0 && d3.pairs.size() == 1 && d3.pairs[0] == std::pair(0, 0)) return StdB{0, 0};
  return d3;
}

namespace detail {

template <class T>
std::vector<T> min_rotation_or_reversal(const std::vector<T>& v) {
  std::vector<T> rev(v.rbegin(), v.rend());
  return std::min(min_rotation(v), min_rotation(rev));
}

// All sequences of k pairs (s,t) with sum of s + 2t equal to `weight`.
inline void pair_sequences(int k, int weight, std::vector<std::pair<int, int>>& cur,
                           std::vector<std::vector<std::pair<int, int>>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    if (weight == 0) out.push_back(cur);
    return;
  }
  for (int t = 0; 2 * t <= weight; ++t)
    for (int s = 0; s + 2 * t <= weight; ++s) {
      cur.emplace_back(s, t);
      pair_sequences(k, weight - s - 2 * t, cur, out);
      cur.pop_back();
    }
}

}  // namespace detail

inline std::vector<DerivedStdForm> enumerate_standard_forms(int n, bool op_identify = false) {
  if (n < 4) throw Error("precondition", "standard forms need n >= 4");
  std::vector<DerivedStdForm> out;
  out.push_back(StdA{n});
  for (int t = 0; 2 * t <= n - 4; ++t) out.push_back(StdB{n - 4 - 2 * t, t});
  for (int t = 0; 2 * t <= n - 4; ++t) out.push_back(StdC{n - 4 - 2 * t, t});
  if (n % 2 == 1) out.push_back(StdD1{n});
  for (int b = 3; 2 * b <= n; ++b)
    for (int t = 0; 2 * b + 2 * t <= n; ++t) out.push_back(StdD2{b, n - 2 * b - 2 * t, t});
  for (int k = 1; 4 * k <= n; ++k)
    for (int b = 0; 4 * k + 2 * b <= n; ++b) {
      std::vector<std::vector<std::pair<int, int>>> seqs;
      std::vector<std::pair<int, int>> cur;
      detail::pair_sequences(k, n - 4 * k - 2 * b, cur, seqs);
      std::set<std::vector<std::pair<int, int>>> seen;
      for (const auto& v : seqs) {
        auto key = op_identify ? detail::min_rotation_or_reversal(v) : min_rotation(v);
        if (!seen.insert(key).second) continue;
        if (b == 0 && k == 1 && key[0] == std::pair(0, 0)) continue;  // IV((3,0,0)) is B(0,0)
        out.push_back(StdD3{b, key});
      }
    }
  return out;
}

struct ClassCount {
  int n = 0;
  std::size_t forms = 0;
  std::size_t forms_op = 0;
  std::size_t polynomials = 0;       // distinct associated polynomials
  std::size_t polynomials_mod3 = 0;  // distinct (polynomial, mod-3 class of the asymmetry)
  bool exact = true;                 // false outside 4 <= n <= 14: only bounds
};

// Invariant factors of the asymmetry mod 3, or empty when 3 divides the determinant.
inline std::vector<modp::Poly> mod3_class(const CartanMatrix& c) {
  if (cartan_det(c) % 3 == 0) return {};
  return asymmetry_invariant_factors(c, 3);
}

inline ClassCount count_derived_classes_report(int n) {
  ClassCount r;
  r.n = n;
  auto forms = enumerate_standard_forms(n, false);
  r.forms = forms.size();
  r.forms_op = enumerate_standard_forms(n, true).size();
  std::set<IntPolynomial> polys;
  std::set<std::pair<IntPolynomial, std::vector<modp::Poly>>> refined;
  for (const auto& f : forms) {
    CartanMatrix c = cartan_matrix(realize(f));
    IntPolynomial p = associated_polynomial(c);
    polys.insert(p);
    refined.emplace(p, mod3_class(c));
  }
  r.polynomials = polys.size();
  r.polynomials_mod3 = refined.size();
  r.exact = n >= 4 && n <= 14;
  return r;
}

inline std::size_t count_derived_classes(int n) { return count_derived_classes_report(n).polynomials; }

}  // namespace ctd

#endif
