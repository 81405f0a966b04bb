#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ctd/ctd.hpp"

using namespace ctd;

namespace {

// Partition of the forms with n vertices into connected components of the
// graph of single parametric good moves.
std::map<TypeDForm, int> move_components(int n) {
  std::map<TypeDForm, int> comp;
  int next = 0;
  for (const auto& f : enumerate_type_d_forms(n)) {
    if (comp.count(f)) continue;
    std::vector<TypeDForm> stack{f};
    comp[f] = next;
    while (!stack.empty()) {
      TypeDForm cur = stack.back();
      stack.pop_back();
      for (const auto& g : parametric_good_moves(cur))
        if (comp.emplace(g, next).second) stack.push_back(g);
    }
    ++next;
  }
  return comp;
}

// Same partition computed on the quivers of the D_n class, joining a quiver to
// every good mutation of it.
std::map<TypeDForm, int> quiver_components(int n) {
  auto qs = mutation_class(dynkin_d(n)).quivers();
  std::map<CanonicalKey, int> id;
  for (std::size_t i = 0; i < qs.size(); ++i) id[canonical_key(qs[i])] = static_cast<int>(i);
  std::vector<int> parent(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Algebra alg(qs[i]);
    for (int k = 0; k < n; ++k)
      if (classify_mutation(alg, k).verdict == Verdict::Good)
        parent[find(static_cast<int>(i))] = find(id.at(canonical_key(mutate(qs[i], k))));
  }
  std::map<TypeDForm, int> comp;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    int c = find(static_cast<int>(i));
    auto [it, fresh] = comp.emplace(classify_type_d(qs[i]), c);
    EXPECT_TRUE(fresh || it->second == c) << "form split across components: " << to_string(it->first);
  }
  return comp;
}

void expect_same_partition(const std::map<TypeDForm, int>& comp, int n) {
  auto forms = enumerate_type_d_forms(n);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i; j < forms.size(); ++j)
      EXPECT_EQ(good_equivalent(forms[i], forms[j]), comp.at(forms[i]) == comp.at(forms[j]))
          << to_string(forms[i]) << " vs " << to_string(forms[j]);
}

}  // namespace

TEST(IntervalQuantities, FrozenValues) {
  std::vector<Spike> seq{{3, 1, 0}, {1, 0, 2}, {2, 1, 0}};
  EXPECT_EQ(interval_quantities(seq, {0, 1, 2}), (IntervalQuantities{1, 2, 3}));
  EXPECT_EQ(interval_quantities({{5, 0, 0}}, {0}), (IntervalQuantities{1, 1, 0}));
  EXPECT_EQ(interval_quantities(seq, {1}), (IntervalQuantities{0, 1, 0}));
  EXPECT_THROW(interval_quantities(seq, {}), Error);
}

TEST(GoodParams, FrozenExamples) {
  EXPECT_EQ(to_string(good_params(FormIII{0, 2, 0, 0})), "c(2,0,0)");
  EXPECT_EQ(to_string(good_params(FormIII{0, 1, 0, 1})), "c(1,1,0)");
  EXPECT_EQ(to_string(good_params(FormIV{{{3, 0, 0}}})), "d31(0,(0))");
  EXPECT_EQ(class_name(good_params(FormIV{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}})), "d2,1");
  EXPECT_TRUE(params_equal(ParamsD31{1, {2, 0, 1}}, ParamsD31{1, {0, 1, 2}}));
  EXPECT_FALSE(params_equal(ParamsD31{1, {2, 0, 1}}, ParamsD31{1, {2, 1, 0}}));
  EXPECT_TRUE(params_equal(ParamsC3{0, 3, 1}, ParamsC3{3, 0, 1}));
}

TEST(GoodParams, RoundTripThroughStandardForm) {
  TypeDForm f = FormIII{2, 1, 0, 3};
  auto p = good_params(f);
  EXPECT_EQ(good_params(standard_form_of(p)), p);
  for (int n = 4; n <= 11; ++n)
    for (const auto& g : enumerate_type_d_forms(n)) {
      if (!std::holds_alternative<FormIII>(g) && !std::holds_alternative<FormIV>(g)) continue;
      auto q = good_params(g);
      EXPECT_EQ(good_params(standard_form_of(q)), q) << to_string(g);
      EXPECT_EQ(vertex_count(standard_form_of(q)), n) << to_string(g);
      // idempotent on standard forms
      EXPECT_EQ(good_standard_form(good_standard_form(g)), good_standard_form(g));
    }
}

TEST(GoodEquivalence, AgreesWithGoodMutationGraph) {
  for (int n = 4; n <= 9; ++n) expect_same_partition(quiver_components(n), n);
}

TEST(GoodEquivalence, AgreesWithMoveClosure) {
  for (int n = 4; n <= 11; ++n) expect_same_partition(move_components(n), n);
}

// Double moves are derived equivalences but may leave the good class.
TEST(GoodEquivalence, DoubleMovesKeepPolynomial) {
  bool left_class = false;
  for (int n = 4; n <= 10; ++n)
    for (const auto& f : enumerate_type_d_forms(n))
      for (const auto& g : parametric_double_moves(f)) {
        EXPECT_EQ(associated_polynomial(realize(f)), associated_polynomial(realize(g))) << to_string(f) << " -> " << to_string(g);
        left_class |= !good_equivalent(f, g);
      }
  EXPECT_TRUE(left_class);
}

TEST(GoodEquivalence, GoodMutationsPreserveClass) {
  for (int n = 4; n <= 7; ++n)
    for (const auto& q : mutation_class(dynkin_d(n)).quivers()) {
      Algebra alg(q);
      for (int k = 0; k < q.size(); ++k) {
        if (classify_mutation(alg, k).verdict != Verdict::Good) continue;
        EXPECT_TRUE(good_equivalent(classify_type_d(q), classify_type_d(mutate(q, k))));
      }
    }
}

TEST(GoodEquivalence, D8PairIsDerivedButNotGood) {
  TypeDForm l = FormIII{0, 2, 0, 0}, r = FormIII{0, 1, 0, 1};
  EXPECT_FALSE(good_equivalent(l, r));
  EXPECT_EQ(to_string(derived_standard_form(l)), "C(0,2)");
  EXPECT_EQ(to_string(derived_standard_form(r)), "C(0,2)");
  EXPECT_EQ(associated_polynomial(realize(l)), associated_polynomial(realize(r)));
}

TEST(DerivedStandardForm, FrozenExamples) {
  EXPECT_EQ(to_string(derived_standard_form(FormIVCycle{6})), "D2(3,0,0)");
  EXPECT_EQ(to_string(derived_standard_form(FormIV{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}})), "D2(3,0,0)");
  EXPECT_EQ(cartan_det(cartan_matrix(realize(FormIV{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}))), 5);
}

// The associated polynomial is a derived invariant, so the standard form must keep it.
TEST(DerivedStandardForm, KeepsPolynomial) {
  for (int n = 4; n <= 10; ++n)
    for (const auto& f : enumerate_type_d_forms(n)) {
      auto s = derived_standard_form(f);
      EXPECT_EQ(vertex_count(s), n) << to_string(f);
      EXPECT_EQ(associated_polynomial(realize(s)), associated_polynomial(realize(f))) << to_string(f) << " -> " << to_string(s);
    }
}

TEST(DerivedStandardForm, EnumerationIsClosed) {
  for (int n = 4; n <= 10; ++n) {
    auto forms = enumerate_standard_forms(n);
    std::set<DerivedStdForm> listed(forms.begin(), forms.end());
    EXPECT_EQ(listed.size(), forms.size());
    for (const auto& f : enumerate_type_d_forms(n)) EXPECT_TRUE(listed.count(derived_standard_form(f))) << to_string(f);
  }
}

TEST(ClassCount, FrozenCounts) {
  std::vector<std::size_t> want{3, 5, 9, 10, 17, 18, 29, 31, 49, 53, 81};
  for (int n = 4; n <= 14; ++n) EXPECT_EQ(count_derived_classes(n), want[static_cast<std::size_t>(n - 4)]) << n;
  ClassCount c = count_derived_classes_report(15);
  EXPECT_EQ(c.forms, 93u);
  EXPECT_EQ(c.forms_op, 91u);
  EXPECT_EQ(c.polynomials, 90u);
  EXPECT_EQ(c.polynomials_mod3, 91u);
  EXPECT_FALSE(c.exact);
}
