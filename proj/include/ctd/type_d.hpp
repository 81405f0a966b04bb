#ifndef CTD_TYPE_D_HPP
#define CTD_TYPE_D_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ctd/type_a.hpp"

namespace ctd {

struct Spike {
  int d = 1;
  int s = 0;
  int t = 0;
  auto operator<=>(const Spike&) const = default;
};

struct FormI {
  int s = 0, t = 0;
  auto operator<=>(const FormI&) const = default;
};
struct FormII {
  int s1 = 0, t1 = 0, s2 = 0, t2 = 0;  // (s', t', s'', t'')
  auto operator<=>(const FormII&) const = default;
};
struct FormIII {
  int s1 = 0, t1 = 0, s2 = 0, t2 = 0;
  auto operator<=>(const FormIII&) const = default;
};
struct FormIVCycle {
  int m = 5;
  auto operator<=>(const FormIVCycle&) const = default;
};
struct FormIV {
  std::vector<Spike> spikes;
  auto operator<=>(const FormIV&) const = default;

  int m() const {
    int s = 0;
    for (const auto& sp : spikes) s += sp.d;
    return s;
  }
  int r() const { return static_cast<int>(spikes.size()); }
  int c() const {
    return static_cast<int>(std::count_if(spikes.begin(), spikes.end(), [](const Spike& s) { return s.d == 1; }));
  }
};

using TypeDForm = std::variant<FormI, FormII, FormIII, FormIVCycle, FormIV>;

// ---------------------------------------------------------------------------
// Sequences up to rotation

inline std::vector<int> flatten(const std::vector<Spike>& seq) {
  std::vector<int> out;
  for (const auto& s : seq) {
    out.push_back(s.d);
    out.push_back(s.s);
    out.push_back(s.t);
  }
  return out;
}

template <class T>
std::vector<T> rotated(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + k) % v.size()];
  return out;
}

template <class T>
std::vector<T> min_rotation(const std::vector<T>& v) {
  std::vector<T> best = v;
  for (std::size_t k = 1; k < v.size(); ++k) {
    auto r = rotated(v, k);
    if (r < best) best = r;
  }
  return best;
}

template <class T>
bool rotation_equivalent(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && min_rotation(a) == min_rotation(b);
}

// ---------------------------------------------------------------------------
// Validation, canonical representatives, vertex counts

inline int vertex_count(const TypeDForm& f) {
  struct V {
    int operator()(const FormI& x) const { return 3 + x.s + 2 * x.t; }
    int operator()(const FormII& x) const { return 4 + x.s1 + 2 * x.t1 + x.s2 + 2 * x.t2; }
    int operator()(const FormIII& x) const { return 4 + x.s1 + 2 * x.t1 + x.s2 + 2 * x.t2; }
    int operator()(const FormIVCycle& x) const { return x.m; }
    int operator()(const FormIV& x) const {
      int n = 0;
      for (const auto& s : x.spikes) n += s.d + 1 + s.s + 2 * s.t;
      return n;
    }
  };
  return std::visit(V{}, f);
}

inline void validate_form(const TypeDForm& f) {
  auto neg = [](std::initializer_list<int> xs) {
    for (int x : xs)
      if (x < 0) return true;
    return false;
  };
  if (auto* p = std::get_if<FormI>(&f); p && neg({p->s, p->t}))
    throw Error("invalid-form", "negative parameter");
  if (auto* p = std::get_if<FormII>(&f); p && neg({p->s1, p->t1, p->s2, p->t2}))
    throw Error("invalid-form", "negative parameter");
  if (auto* p = std::get_if<FormIII>(&f); p && neg({p->s1, p->t1, p->s2, p->t2}))
    throw Error("invalid-form", "negative parameter");
  if (auto* p = std::get_if<FormIVCycle>(&f); p && p->m < 4)
    throw Error("invalid-form", "IVCycle needs length at least 4 (a 3-cycle is of type A)");
  if (auto* p = std::get_if<FormIV>(&f)) {
    if (p->spikes.empty()) throw Error("invalid-form", "IV needs at least one spike; use IVCycle");
    for (const auto& s : p->spikes)
      if (s.d < 1 || s.s < 0 || s.t < 0) throw Error("invalid-form", "IV triples need d >= 1, s, t >= 0");
    if (p->m() < 2) throw Error("invalid-form", "IV needs central cycle length at least 2");
    if (p->spikes.size() == 1 && p->spikes[0].d == 2) throw Error("invalid-form", "IV((2,s,t)) is not a quiver");
  }
}

// Unique representative: III halves ordered, IV rotation-minimal, and the
// degenerate coincidences IV((3,0,0)) = II(0,0,0,0), IVCycle(4) = III(0,0,0,0),
// IV((1,a,b),(1,c,d)) = III(a,b,c,d).
inline TypeDForm canonical_form(const TypeDForm& f) {
  validate_form(f);
  if (auto* p = std::get_if<FormIII>(&f)) {
    FormIII x = *p;
    if (std::pair(x.s1, x.t1) < std::pair(x.s2, x.t2)) x = FormIII{x.s2, x.t2, x.s1, x.t1};
    return x;
  }
  if (auto* p = std::get_if<FormIVCycle>(&f)) {
    if (p->m == 4) return FormIII{};
    return *p;
  }
  if (auto* p = std::get_if<FormIV>(&f)) {
    const auto& sp = p->spikes;
    if (sp.size() == 2 && sp[0].d == 1 && sp[1].d == 1)
      return canonical_form(FormIII{sp[0].s, sp[0].t, sp[1].s, sp[1].t});
    if (sp.size() == 1 && sp[0] == Spike{3, 0, 0}) return FormII{};
    return FormIV{min_rotation(sp)};
  }
  return f;
}

inline bool same_form(const TypeDForm& a, const TypeDForm& b) { return canonical_form(a) == canonical_form(b); }

// ---------------------------------------------------------------------------
// Text syntax

inline std::string to_string(const Spike& s) {
  return "(" + std::to_string(s.d) + "," + std::to_string(s.s) + "," + std::to_string(s.t) + ")";
}

inline std::string to_string(const TypeDForm& f) {
  auto four = [](const char* tag, int a, int b, int c, int d) {
    return std::string(tag) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
  };
  if (auto* x = std::get_if<FormI>(&f)) return "I(" + std::to_string(x->s) + "," + std::to_string(x->t) + ")";
  if (auto* x = std::get_if<FormII>(&f)) return four("II", x->s1, x->t1, x->s2, x->t2);
  if (auto* x = std::get_if<FormIII>(&f)) return four("III", x->s1, x->t1, x->s2, x->t2);
  if (auto* x = std::get_if<FormIVCycle>(&f)) return "IVCycle(" + std::to_string(x->m) + ")";
  const auto& iv = std::get<FormIV>(f);
  std::string s = "IV(";
  for (std::size_t i = 0; i < iv.spikes.size(); ++i) s += (i ? "," : "") + to_string(iv.spikes[i]);
  return s + ")";
}

namespace detail {

class FormParser {
 public:
  explicit FormParser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  TypeDForm parse() {
    TypeDForm f;
    if (eat("IVCycle")) {
      expect('(');
      f = FormIVCycle{number()};
      expect(')');
    } else if (eat("IV")) {
      FormIV iv;
      expect('(');
      do {
        expect('(');
        Spike sp;
        sp.d = number();
        expect(',');
        sp.s = number();
        expect(',');
        sp.t = number();
        expect(')');
        iv.spikes.push_back(sp);
      } while (eat(","));
      expect(')');
      f = iv;
    } else if (eat("III")) {
      auto v = numbers(4);
      f = FormIII{v[0], v[1], v[2], v[3]};
    } else if (eat("II")) {
      auto v = numbers(4);
      f = FormII{v[0], v[1], v[2], v[3]};
    } else if (eat("I")) {
      auto v = numbers(2);
      f = FormI{v[0], v[1]};
    } else {
      fail("expected I, II, III, IV or IVCycle");
    }
    if (pos_ != s_.size()) fail("trailing characters");
    validate_form(f);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse", "form syntax at offset " + std::to_string(pos_) + ": " + what);
  }
  bool eat(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    std::size_t start = pos_;
    bool neg = eat("-");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start + (neg ? 1 : 0)) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  std::vector<int> numbers(int k) {
    std::vector<int> v;
    expect('(');
    for (int i = 0; i < k; ++i) {
      if (i) expect(',');
      v.push_back(number());
    }
    expect(')');
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TypeDForm parse_form(const std::string& text) { return detail::FormParser(text).parse(); }

// ---------------------------------------------------------------------------
// Realization

inline Quiver realize(const TypeDForm& form) {
  validate_form(form);
  TypeDForm f = canonical_form(form);
  QuiverBuilder b;
  if (auto* p = std::get_if<FormI>(&f)) {
    int a = b.vertex(), bb = b.vertex(), c = b.vertex();
    b.arrow(a, c);
    b.arrow(bb, c);
    append_rooted_a(b, c, p->s, p->t);
  } else if (auto* p = std::get_if<FormII>(&f)) {
    int c1 = b.vertex(), c2 = b.vertex(), a = b.vertex(), bb = b.vertex();
    b.arrow(bb, c2);  // beta
    b.arrow(c2, c1);  // epsilon
    b.arrow(c1, bb);  // alpha
    b.arrow(c1, a);   // gamma
    b.arrow(a, c2);   // delta
    append_rooted_a(b, c1, p->s1, p->t1);
    append_rooted_a(b, c2, p->s2, p->t2);
  } else if (auto* p = std::get_if<FormIII>(&f)) {
    int c1 = b.vertex(), bb = b.vertex(), c2 = b.vertex(), a = b.vertex();
    b.arrow(c1, bb);
    b.arrow(bb, c2);
    b.arrow(c2, a);
    b.arrow(a, c1);
    append_rooted_a(b, c1, p->s1, p->t1);
    append_rooted_a(b, c2, p->s2, p->t2);
  } else if (auto* p = std::get_if<FormIVCycle>(&f)) {
    for (int i = 0; i < p->m; ++i) b.vertex();
    for (int i = 0; i < p->m; ++i) b.arrow(i, (i + 1) % p->m);
  } else {
    const auto& iv = std::get<FormIV>(f);
    int m = iv.m();
    for (int i = 0; i < m; ++i) b.vertex();
    for (int i = 0; i < m; ++i) b.arrow(i, (i + 1) % m);
    int pos = 0;
    for (const auto& sp : iv.spikes) {
      int c = b.vertex();
      b.arrow(c, pos);
      b.arrow((pos + 1) % m, c);
      append_rooted_a(b, c, sp.s, sp.t);
      pos += sp.d;
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Recognition

// A classified quiver: its form, the relations living on the skeleton and the
// vertex sets of the glued rooted A-parts (root first).
struct DStructure {
  TypeDForm form;
  std::vector<Path> skeleton_zeros;
  std::vector<std::pair<Path, Path>> skeleton_commutes;
  std::vector<std::vector<int>> a_parts;
};

namespace detail {

struct Part {
  std::vector<int> verts;
  AShape shape;
};

inline std::optional<std::vector<Part>> glue_parts(const Quiver& q, const std::vector<int>& skeleton,
                                                   const std::vector<int>& roots, int skeleton_arrows) {
  const int n = q.size();
  std::vector<char> in_k(n, 0);
  for (int v : skeleton) in_k[v] = 1;
  if (induced(q, skeleton).arrow_count() != skeleton_arrows) return std::nullopt;
  std::vector<int> owner(n, -1);
  std::vector<Part> parts;
  int arrows = skeleton_arrows;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    Part part;
    part.verts.push_back(roots[j]);
    std::vector<int> stack{roots[j]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : q.neighbors(v)) {
        if (in_k[w]) continue;
        if (owner[w] == static_cast<int>(j)) continue;
        if (owner[w] != -1) return std::nullopt;
        owner[w] = static_cast<int>(j);
        part.verts.push_back(w);
        stack.push_back(w);
      }
    }
    Quiver sub = induced(q, part.verts);
    arrows += sub.arrow_count();
    if (!is_valid_root(sub, 0)) return std::nullopt;
    part.shape = analyze_type_a(sub, 0);
    parts.push_back(std::move(part));
  }
  for (int v = 0; v < n; ++v)
    if (!in_k[v] && owner[v] == -1) return std::nullopt;
  if (arrows != q.arrow_count()) return std::nullopt;
  return parts;
}

// Chordless oriented cycles of length >= 4, each as its vertex sequence.
inline std::vector<std::vector<int>> long_chordless_cycles(const Quiver& q, std::size_t limit = 64) {
  std::vector<std::vector<int>> out;
  const int n = q.size();
  std::vector<int> path;
  std::vector<char> on(n, 0);
  long steps = 0;
  const long kMaxSteps = 2'000'000;
  auto dfs = [&](auto&& self, int v) -> void {
    if (out.size() > limit || ++steps > kMaxSteps) return;
    const int start = path.front();
    for (int w : q.successors(v)) {
      if (w <= start || on[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (q.adjacent(path[i], w)) chord = true;
      if (chord) continue;
      if (path.size() >= 2 && q.adjacent(w, start)) {
        if (q.has_arrow(w, start) && path.size() + 1 >= 4) {
          out.push_back(path);
          out.back().push_back(w);
        }
        continue;
      }
      on[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(dfs, s);
    on[s] = 0;
  }
  if (steps > kMaxSteps) throw Error("not-type-d", "cycle search exceeded its budget");
  return out;
}

inline Path cycle_path(const std::vector<int>& cyc, std::size_t from, std::size_t len) {
  Path p;
  for (std::size_t i = 0; i <= len; ++i) p.push_back(cyc[(from + i) % cyc.size()]);
  return p;
}

// Type IV (or IVCycle) around the oriented cycle `cyc`.
inline std::optional<DStructure> try_type_iv(const Quiver& q, const std::vector<int>& cyc) {
  const std::size_t m = cyc.size();
  std::vector<int> spike(m, -1);
  std::vector<char> on_cycle(q.size(), 0);
  for (int v : cyc) on_cycle[v] = 1;
  for (std::size_t p = 0; p < m; ++p) {
    int x = cyc[p], y = cyc[(p + 1) % m];
    for (int c : q.successors(y)) {
      if (on_cycle[c] || !q.has_arrow(c, x)) continue;
      if (spike[p] != -1) return std::nullopt;
      spike[p] = c;
    }
  }
  std::vector<int> skeleton = cyc, roots;
  for (std::size_t p = 0; p < m; ++p) {
    int expected = 2 + (spike[p] != -1) + (spike[(p + m - 1) % m] != -1);
    if (q.valency(cyc[p]) != expected) return std::nullopt;
    if (spike[p] != -1) {
      skeleton.push_back(spike[p]);
      roots.push_back(spike[p]);
    }
  }
  auto parts = glue_parts(q, skeleton, roots, static_cast<int>(m + 2 * roots.size()));
  if (!parts) return std::nullopt;
  DStructure ds;
  for (const auto& part : *parts) ds.a_parts.push_back(part.verts);
  if (roots.empty()) {
    if (m < 4) return std::nullopt;
    ds.form = canonical_form(FormIVCycle{static_cast<int>(m)});
  } else {
    std::vector<std::size_t> pos;
    for (std::size_t p = 0; p < m; ++p)
      if (spike[p] != -1) pos.push_back(p);
    FormIV iv;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      std::size_t next = j + 1 < pos.size() ? pos[j + 1] : pos[0] + m;
      const auto& sh = (*parts)[j].shape;
      iv.spikes.push_back({static_cast<int>(next - pos[j]), sh.s, sh.t});
    }
    ds.form = canonical_form(iv);
  }
  for (std::size_t p = 0; p < m; ++p) {
    int x = cyc[p], y = cyc[(p + 1) % m];
    Path central = cycle_path(cyc, p + 1, m - 1);  // y ... x
    if (spike[p] != -1) {
      int c = spike[p];
      ds.skeleton_zeros.push_back({x, y, c});
      ds.skeleton_zeros.push_back({c, x, y});
      ds.skeleton_commutes.push_back({{y, c, x}, central});
    } else {
      ds.skeleton_zeros.push_back(central);
    }
  }
  return ds;
}

inline std::optional<DStructure> try_type_iii(const Quiver& q, const std::vector<int>& cyc) {
  for (int o = 0; o < 2; ++o) {
    int c1 = cyc[o], b = cyc[o + 1], c2 = cyc[(o + 2) % 4], a = cyc[(o + 3) % 4];
    if (q.valency(b) != 2 || q.valency(a) != 2) continue;
    auto parts = glue_parts(q, {c1, b, c2, a}, {c1, c2}, 4);
    if (!parts) continue;
    DStructure ds;
    const auto& p1 = (*parts)[0].shape;
    const auto& p2 = (*parts)[1].shape;
    ds.form = canonical_form(FormIII{p1.s, p1.t, p2.s, p2.t});
    for (const auto& part : *parts) ds.a_parts.push_back(part.verts);
    ds.skeleton_zeros = {{c1, b, c2, a}, {b, c2, a, c1}, {c2, a, c1, b}, {a, c1, b, c2}};
    return ds;
  }
  return std::nullopt;
}

// Two triangles x->y->p->x and x->y->q->x sharing the arrow x->y.
inline std::optional<DStructure> try_type_ii(const Quiver& q, int x, int y, int a, int b) {
  if (q.valency(a) != 2 || q.valency(b) != 2) return std::nullopt;
  int c2 = x, c1 = y;
  auto parts = glue_parts(q, {c1, c2, a, b}, {c1, c2}, 5);
  if (!parts) return std::nullopt;
  DStructure ds;
  const auto& p1 = (*parts)[0].shape;
  const auto& p2 = (*parts)[1].shape;
  ds.form = FormII{p1.s, p1.t, p2.s, p2.t};
  for (const auto& part : *parts) ds.a_parts.push_back(part.verts);
  // alpha: c'->b, beta: b->c'', gamma: c'->a, delta: a->c'', eps: c''->c'
  ds.skeleton_zeros = {{c2, c1, b}, {c2, c1, a}, {b, c2, c1}, {a, c2, c1}};
  ds.skeleton_commutes = {{{c1, b, c2}, {c1, a, c2}}};
  return ds;
}

inline std::optional<DStructure> try_type_i(const Quiver& q) {
  const int n = q.size();
  for (int c = 0; c < n; ++c) {
    std::vector<int> leaves;
    for (int w : q.neighbors(c))
      if (q.valency(w) == 1) leaves.push_back(w);
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        auto parts = glue_parts(q, {leaves[i], leaves[j], c}, {c}, 2);
        if (!parts) continue;
        DStructure ds;
        const auto& sh = (*parts)[0].shape;
        ds.form = FormI{sh.s, sh.t};
        ds.a_parts.push_back((*parts)[0].verts);
        return ds;
      }
  }
  return std::nullopt;
}

inline DStructure classify_structure(const Quiver& q) {
  auto fail = [](const std::string& why) -> DStructure { throw Error("not-type-d", why); };
  if (q.size() < 4) return fail("type D needs at least 4 vertices");
  if (!q.is_simple()) return fail("quiver has multiple arrows");
  if (!is_connected(q)) return fail("quiver is not connected");
  if (is_type_a(q)) return fail("quiver is mutation equivalent to A_n");

  auto cycles = long_chordless_cycles(q, 2);
  if (cycles.size() > 1) return fail("more than one chordless cycle of length at least 4");
  if (cycles.size() == 1) {
    const auto& cyc = cycles.front();
    if (cyc.size() == 4) {
      bool spiked = false;
      for (std::size_t p = 0; p < 4; ++p)
        for (int c : q.successors(cyc[(p + 1) % 4]))
          if (q.has_arrow(c, cyc[p]) && std::find(cyc.begin(), cyc.end(), c) == cyc.end()) spiked = true;
      if (!spiked) {
        if (auto ds = try_type_iii(q, cyc)) return *ds;
        return fail("4-cycle does not match the type III skeleton");
      }
    }
    if (auto ds = try_type_iv(q, cyc)) return *ds;
    return fail("cycle of length " + std::to_string(cyc.size()) + " does not match the type IV skeleton");
  }

  auto tris = oriented_triangles(q);
  auto shares = [&](const std::array<int, 3>& t, int x, int y) {
    for (int i = 0; i < 3; ++i)
      if (t[i] == x && t[(i + 1) % 3] == y) return true;
    return false;
  };
  std::vector<std::vector<std::size_t>> partners(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (std::size_t j = i + 1; j < tris.size(); ++j)
      for (int e = 0; e < 3; ++e)
        if (shares(tris[j], tris[i][e], tris[i][(e + 1) % 3])) {
          partners[i].push_back(j);
          partners[j].push_back(i);
        }
  std::vector<std::size_t> hubs, paired;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (partners[i].size() >= 2) hubs.push_back(i);
    if (!partners[i].empty()) paired.push_back(i);
  }
  if (hubs.size() > 1) return fail("several triangles share arrows with two others");
  if (hubs.size() == 1) {
    const auto& t = tris[hubs[0]];
    if (auto ds = try_type_iv(q, {t[0], t[1], t[2]})) return *ds;
    return fail("triangle with several neighbours does not match the type IV skeleton");
  }
  if (!paired.empty()) {
    if (paired.size() != 2) return fail("more than one pair of triangles sharing an arrow");
    const auto& t1 = tris[paired[0]];
    const auto& t2 = tris[paired[1]];
    int x = -1, y = -1;
    for (int e = 0; e < 3; ++e)
      if (shares(t2, t1[e], t1[(e + 1) % 3])) {
        x = t1[e];
        y = t1[(e + 1) % 3];
      }
    auto other = [&](const std::array<int, 3>& t) {
      for (int v : t)
        if (v != x && v != y) return v;
      return -1;
    };
    int p = other(t1), r = other(t2);
    if (auto ds = try_type_ii(q, x, y, p, r)) return *ds;
    if (q.valency(x) == 3 && q.valency(y) == 3) {
      if (q.valency(p) == 2)
        if (auto ds = try_type_iv(q, {x, y, p})) return *ds;
      if (q.valency(r) == 2)
        if (auto ds = try_type_iv(q, {x, y, r})) return *ds;
    }
    return fail("two triangles sharing an arrow match neither type II nor type IV");
  }
  if (auto ds = try_type_i(q)) return *ds;
  return fail("no type I-IV skeleton found");
}

}  // namespace detail

// All forms with n vertices, each in canonical representation.
inline std::vector<TypeDForm> enumerate_type_d_forms(int n) {
  std::set<TypeDForm> out;
  for (int t = 0; 3 + 2 * t <= n; ++t) out.insert(FormI{n - 3 - 2 * t, t});
  for (int s1 = 0; s1 <= n - 4; ++s1)
    for (int t1 = 0; 4 + s1 + 2 * t1 <= n; ++t1)
      for (int t2 = 0; 4 + s1 + 2 * t1 + 2 * t2 <= n; ++t2) {
        int s2 = n - 4 - s1 - 2 * t1 - 2 * t2;
        out.insert(canonical_form(FormII{s1, t1, s2, t2}));
        out.insert(canonical_form(FormIII{s1, t1, s2, t2}));
      }
  if (n >= 5) out.insert(FormIVCycle{n});
  std::vector<Spike> seq;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      int m = 0;
      for (const auto& sp : seq) m += sp.d;
      if (m >= 3) out.insert(canonical_form(FormIV{seq}));
      return;
    }
    for (int d = 1; d + 1 <= left; ++d)
      for (int t = 0; d + 1 + 2 * t <= left; ++t)
        for (int s = 0; d + 1 + s + 2 * t <= left; ++s) {
          seq.push_back({d, s, t});
          self(self, left - (d + 1 + s + 2 * t));
          seq.pop_back();
        }
  };
  rec(rec, n);
  return {out.begin(), out.end()};
}

inline DStructure classify_structure(const Quiver& q) { return detail::classify_structure(q); }

inline TypeDForm classify_type_d(const Quiver& q) { return detail::classify_structure(q).form; }

}  // namespace ctd

#endif
