#include <gtest/gtest.h>

#include "ctd/ctd.hpp"

using namespace ctd;

namespace {

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Quiver, MutationReversesAndComposes) {
  Quiver q = Quiver::from_arrows(3, {{0, 1}, {1, 2}});
  Quiver m = mutate(q, 1);
  EXPECT_TRUE(m.has_arrow(1, 0));
  EXPECT_TRUE(m.has_arrow(2, 1));
  EXPECT_TRUE(m.has_arrow(0, 2));
  EXPECT_EQ(m.arrow_count(), 3);
  EXPECT_EQ(mutate(m, 1), q);
}

TEST(Quiver, MutationCancelsTwoCycles) {
  // Oriented triangle: mutating any vertex removes the third arrow.
  Quiver q = Quiver::from_arrows(3, {{0, 1}, {1, 2}, {2, 0}});
  Quiver m = mutate(q, 1);
  EXPECT_EQ(m.arrow_count(), 2);
  EXPECT_FALSE(m.adjacent(0, 2));
}

TEST(Quiver, MutationIsInvolutionOnD6Class) {
  for (const auto& q : mutation_class(dynkin_d(6)).quivers())
    for (int k = 0; k < q.size(); ++k) EXPECT_EQ(mutate(mutate(q, k), k), q);
}

TEST(Quiver, BadVertexIsRejected) {
  Quiver q = dynkin_d(4);
  EXPECT_EQ(error_code([&] { q.check_vertex(4); }), "bad-vertex");
  EXPECT_EQ(error_code([&] { q.check_vertex(-1); }), "bad-vertex");
}

TEST(Quiver, TextRoundTrip) {
  Quiver q = parse_quiver("# D4\n0 -> 2\n1->2\n2 -> 3\n");
  EXPECT_EQ(q, dynkin_d(4));
  EXPECT_EQ(parse_quiver(serialize_quiver(q)), q);
  EXPECT_EQ(serialize_quiver(q), "0 -> 2\n1 -> 2\n2 -> 3\n");
}

TEST(Quiver, IsolatedTopVertexKeepsCountLine) {
  Quiver q = Quiver::from_arrows(3, {{0, 1}});
  std::string s = serialize_quiver(q);
  EXPECT_EQ(s, "n = 3\n0 -> 1\n");
  EXPECT_EQ(parse_quiver(s).size(), 3);
}

TEST(Quiver, JsonRoundTrip) {
  Quiver q = dynkin_d(5);
  EXPECT_EQ(quiver_from_json(quiver_to_json(q)), q);
  EXPECT_EQ(parse_quiver(quiver_to_json(q).dump()), q);
}

TEST(Quiver, ParseErrors) {
  EXPECT_EQ(error_code([] { parse_quiver("0 -> 0\n"); }), "loop");
  EXPECT_EQ(error_code([] { parse_quiver("0 -> 1\n1 -> 0\n"); }), "2-cycle");
  EXPECT_EQ(error_code([] { parse_quiver("0 -> 1\n0 -> 1\n"); }), "multiple-arrow");
  EXPECT_EQ(error_code([] { parse_quiver("n = 2\n0 -> 3\n"); }), "bad-vertex");
  EXPECT_EQ(error_code([] { parse_quiver("0 => 1\n"); }), "parse");
  EXPECT_EQ(error_code([] { parse_quiver(""); }), "parse");
  EXPECT_EQ(error_code([] { parse_quiver("{\"n\": 2}"); }), "parse");
  EXPECT_EQ(error_code([] { parse_quiver("{\"n\": 2, \"arrows\": [[0, 5]]}"); }), "bad-vertex");
}

TEST(Canonical, KeyIgnoresLabelling) {
  Quiver q = realize(FormIV{{{3, 1, 0}, {1, 0, 1}}});
  std::vector<int> perm(q.size());
  for (int i = 0; i < q.size(); ++i) perm[i] = (i * 5 + 3) % q.size();
  Quiver r = relabel(q, perm);
  EXPECT_EQ(canonical_key(q), canonical_key(r));
  EXPECT_TRUE(isomorphic(q, r));
}

TEST(Canonical, KeySeparatesNonIsomorphic) {
  EXPECT_NE(canonical_key(dynkin_d(5)), canonical_key(linear_a(5)));
  EXPECT_TRUE(isomorphic(quiver_from_key(canonical_key(dynkin_d(7))), dynkin_d(7)));
}

TEST(MutationClass, SizesOfSmallTypes) {
  EXPECT_EQ(mutation_class(linear_a(3)).size, 4u);  // A3 has four quivers up to isomorphism
  EXPECT_EQ(mutation_class(dynkin_d(4)).size, 6u);
  EXPECT_EQ(mutation_class(dynkin_d(5)).size, 26u);
}

TEST(MutationClass, CapTruncates) {
  ClassReport r = mutation_class(dynkin_d(7), 10);
  EXPECT_TRUE(r.truncated);
  EXPECT_GE(r.size, 10u);
  EXPECT_FALSE(mutation_class(dynkin_d(5)).truncated);
}

TEST(MutationClass, D10) { EXPECT_EQ(mutation_class(dynkin_d(10)).size, 9252u); }
