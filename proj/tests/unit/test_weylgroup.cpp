#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tleaf/errors.hpp"
#include "tleaf/weylgroup.hpp"

using namespace tleaf;

TEST_CASE("group orders") {
  CHECK(WeylGroup(RootDatum::type_a(1)).order() == 2);
  CHECK(WeylGroup(RootDatum::type_a(3)).order() == 24);
  CHECK(WeylGroup(RootDatum::type_a(4)).order() == 120);
  const WeylGroup d4(RootDatum::d4());
  CHECK(d4.order() == 192);
  CHECK(d4.longest().length == 12);
  CHECK_THROWS_AS(WeylGroup(RootDatum::type_a(5), 100), CapacityError);
}

TEST_CASE("lengths match inversion counts") {
  for (int n = 1; n <= 4; ++n) {
    const WeylGroup g(RootDatum::type_a(n));
    for (const auto& w : g.elements()) {
      CHECK(w.length == oracle::inversions(w.permutation));
      CHECK(static_cast<int>(w.word.size()) == w.length);
      CHECK(g.from_word(w.word) == w);
      CHECK(g.from_permutation(w.permutation) == w);
    }
  }
}

TEST_CASE("multiplication agrees with permutation composition") {
  const WeylGroup g(RootDatum::type_a(3));
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) {
      CHECK(g.multiply(a, b).permutation == oracle::compose(a.permutation, b.permutation));
      CHECK(g.multiply(a, b).action == a.action * b.action);
    }
  for (const auto& a : g.elements()) CHECK(g.inverse(a).permutation == oracle::invert(a.permutation));
}

TEST_CASE("bruhat order") {
  const WeylGroup s3(RootDatum::type_a(2));
  CHECK(s3.bruhat_leq(s3.identity(), s3.longest()));
  CHECK_FALSE(s3.bruhat_leq(s3.longest(), s3.identity()));
  CHECK(s3.bruhat_leq(s3.from_permutation({1, 0, 2}), s3.from_permutation({2, 1, 0})));

  for (int n = 1; n <= 3; ++n) {
    const WeylGroup g(RootDatum::type_a(n));
    for (const auto& u : g.elements())
      for (const auto& w : g.elements())
        CHECK(g.bruhat_leq(u, w) == oracle::bruhat_leq(u.permutation, w.permutation));
  }

  const WeylGroup s4(RootDatum::type_a(3));
  const WeylGroup s3b(RootDatum::type_a(2));
  CHECK_THROWS_AS(s4.bruhat_leq(s4.identity(), s3b.identity()), DomainError);
}

TEST_CASE("covers are reflections") {
  for (const WeylGroup& g : {WeylGroup(RootDatum::type_a(1)), WeylGroup(RootDatum::type_a(2)),
                             WeylGroup(RootDatum::type_a(3)), WeylGroup(RootDatum::d4())}) {
    for (const auto& [u, w] : g.covers()) {
      CHECK(g[w].length == g[u].length + 1);
      bool found = false;
      for (int a = 0; a < g.root_datum().num_positive_roots() && !found; ++a)
        found = g.multiply(g[u], g.reflection(a)) == g[w];
      CHECK(found);
    }
  }
}

TEST_CASE("m_l") {
  const WeylGroup s4(RootDatum::type_a(3));
  CHECK(m_l(s4, 2).cycle_string() == "(1 4)(2 3)");
  CHECK(m_l(s4, 0) == s4.identity());
  const WeylGroup s3(RootDatum::type_a(2));
  CHECK(m_l(s3, 1) == s3.longest());
  CHECK(m_l(WeylGroup(RootDatum::type_a(1)), 1).length == 1);
  CHECK(m_l(s3, 1).length == 3);
  CHECK(m_l(s4, 2).length == 6);
  for (int l = 0; l <= 2; ++l) CHECK(s4.is_involution(m_l(s4, l)));
  CHECK_THROWS_AS(m_l(s4, 3), DomainError);
  CHECK_THROWS_AS(m_l_permutation(3, -1), DomainError);
}

TEST_CASE("twisted classes") {
  const WeylGroup s3(RootDatum::type_a(2));
  const auto id = DiagramAut::identity(2);
  CHECK(s3.twisted_class(s3.identity(), id).size() == 1);

  const auto cls = s3.twisted_class(s3.simple_reflection(0), id);
  std::set<std::string> names;
  for (auto i : cls) names.insert(s3[i].word_string());
  CHECK(names == std::set<std::string>{"s1", "s2", "s1 s2 s1"});
  CHECK(s3.max_length_element(cls) == s3.longest());
  CHECK(s3.max_length_element({s3.identity().index}) == s3.identity());

  // twisted conjugation orbits partition W; brute-force oracle over permutations
  for (int n = 2; n <= 3; ++n) {
    const WeylGroup g(RootDatum::type_a(n));
    for (const auto& theta : {DiagramAut::identity(n), DiagramAut::type_a_flip(n)}) {
      const auto parts = g.twisted_classes(theta);
      std::vector<int> seen(g.order(), 0);
      for (const auto& p : parts)
        for (auto i : p) ++seen[i];
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
      // flip twists a permutation by conjugation with w0
      const auto& w0 = g.longest().permutation;
      for (const auto& w : g.elements()) {
        auto expect = w.permutation;
        if (!theta.is_identity()) expect = oracle::compose(oracle::compose(w0, w.permutation), w0);
        CHECK(g.twist(w, theta).permutation == expect);
      }
    }
  }

  const WeylGroup d4(RootDatum::d4());
  const auto tri = d4_triality();
  std::size_t total = 0;
  for (const auto& p : d4.twisted_classes(tri)) total += p.size();
  CHECK(total == 192);
}

TEST_CASE("max length ties are reported") {
  const WeylGroup s3(RootDatum::type_a(2));
  std::vector<std::size_t> two{s3.simple_reflection(0).index, s3.simple_reflection(1).index};
  try {
    (void)s3.max_length_element(two);
    FAIL("expected an ambiguity");
  } catch (const AmbiguityError& e) {
    CHECK(e.candidates().size() == 2);
  }
}

TEST_CASE("triality") {
  const auto t = d4_triality();
  CHECK(t.order() == 3);
  CHECK(t.compose(t).compose(t).is_identity());
  CHECK(t.perm[2] == 3);
  CHECK(t.perm[1] == 1);
  CHECK(t.perm[0] == 2);
  CHECK_NOTHROW(t.validate(RootDatum::d4()));
  const DiagramAut swap{{1, 0, 2, 3}};
  CHECK_THROWS_AS(swap.validate(RootDatum::d4()), ConfigurationError);

  const WeylGroup d4(RootDatum::d4());
  const auto& m = d4.multiply(d4.longest(), d4.simple_reflection(1));
  CHECK(m.length == 11);
  CHECK(d4.max_length_element(d4.twisted_class(m, t)) == m);
  CHECK(d4.twist(m, t) == m);
}

TEST_CASE("element strings") {
  const WeylGroup s3(RootDatum::type_a(2));
  CHECK(s3.identity().cycle_string() == "e");
  CHECK(s3.identity().word_string() == "e");
  CHECK(s3.simple_reflection(0).cycle_string() == "(1 2)");
  CHECK(s3.longest().cycle_string() == "(1 3)");
}
