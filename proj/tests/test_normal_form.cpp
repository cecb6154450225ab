#include <doctest.h>

#include "pathalg/error.hpp"
#include "pathalg/normal_form.hpp"
#include "pathalg/relations.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("normal_form") {
  TEST_CASE("z index") {
    const auto& g = boolean2();
    const auto v12 = g.vertex("{12}");
    CHECK(z_index(g, v12, 1, seq(g, {{"{1}", 1}})) == 2);
    CHECK(z_index(g, v12, 2, seq(g, {{"{1}", 1}})) == 1);
    CHECK(z_index(g, v12, 1, PairSeq{}) == 1);
    CHECK_THROWS_AS(z_index(g, v12, 3, PairSeq{}), Error);
  }

  TEST_CASE("action of e(v,k) on basis sequences") {
    const auto& g = boolean2();
    const auto v12 = g.vertex("{12}");
    const auto b = seq(g, {{"{1}", 1}});
    const auto x = act_e(g, v12, 1, b);
    CHECK(x == BVector::basis(g, seq(g, {{"{12}", 2}})) + BVector::basis(g, seq(g, {{"{1}", 1}, {"{1}", 1}})));
    CHECK(render(x) == "1·[({1}:1, {1}:1)] + 1·[({12}:2)]");
    CHECK(act_e(g, v12, 0, b) == BVector::basis(g, b));
    CHECK(act_e(g, g.vertex("{1}"), 1, PairSeq{}) == BVector::basis(g, b));
    CHECK_THROWS_AS(act_e(g, v12, 1, seq(g, {{"{12}", 1}, {"{1}", 1}})), Error);
    CHECK_THROWS_AS(act_e(g, v12, 1, seq(g, {{"{1}", 2}})), Error);
  }

  TEST_CASE("action of edges") {
    const auto& g = boolean2();
    CHECK(act_edge(g, g.edge("a1"), PairSeq{}) == BVector::basis(g, seq(g, {{"{1}", 1}})));
    CHECK(act_edge(g, g.edge("b2"), PairSeq{}) ==
          BVector::basis(g, seq(g, {{"{12}", 1}})) - BVector::basis(g, seq(g, {{"{2}", 1}})));
    CHECK(act_edge(g, g.edge("b1"), seq(g, {{"{1}", 1}})) == BVector::basis(g, seq(g, {{"{12}", 2}})));
  }

  TEST_CASE("action of polynomials") {
    const auto& g = boolean2();
    const auto x = BVector::basis(g, seq(g, {{"{2}", 1}}), 3);
    CHECK(act_poly(g, word(g, {"a1", "a1"}), BVector::unit()) ==
          BVector::basis(g, seq(g, {{"{1}", 1}, {"{1}", 1}})));
    CHECK(act_poly(g, NcPoly(), x).is_zero());
    CHECK(act_poly(g, NcPoly::one(), x) == x);
    const EWordCombination ee{{EWord{seq(g, {{"{12}", 1}}).pairs}, Scalar(2)}};
    CHECK(act_poly(g, ee, BVector::unit()) == act_poly(g, eword_to_poly(g, ee), BVector::unit()));
  }

  TEST_CASE("normal forms on boolean2") {
    const auto& g = boolean2();
    CHECK(normal_form(g, edge(g, "b1") + edge(g, "a1") - edge(g, "b2") - edge(g, "a2")).is_zero());
    CHECK(normal_form(g, word(g, {"b1", "a1"})) == BVector::basis(g, seq(g, {{"{12}", 2}})));
    CHECK(normal_form(g, NcPoly::one()) == BVector::unit());
    CHECK(render(normal_form(g, NcPoly())) == "0");
  }

  TEST_CASE("expansion back into edges") {
    const auto& g = boolean2();
    CHECK(eword_to_poly(g, EWord{seq(g, {{"{12}", 1}}).pairs}) == edge(g, "b1") + edge(g, "a1"));
    CHECK(eword_to_poly(g, EWord{seq(g, {{"{12}", 1}, {"{1}", 1}}).pairs}) ==
          (edge(g, "b1") + edge(g, "a1")) * edge(g, "a1"));
    CHECK(eword_to_poly(g, EWord{}) == NcPoly::one());
    CHECK_THROWS_AS(eword_to_poly(g, EWord{{{g.vertex("{1}"), 2}}}), Error);
  }

  TEST_CASE("hat words") {
    const auto& g = boolean2();
    CHECK(hat_word(g, g.vertex("{12}"), 2) == Word{g.edge("b1"), g.edge("a1")});
    CHECK(hat_word(g, g.vertex("{12}"), 1) == Word{g.edge("b1")});
    CHECK(hat_word_of_seq(g, seq(g, {{"{1}", 1}, {"{1}", 1}})) == Word{g.edge("a1"), g.edge("a1")});
    CHECK_THROWS_AS(hat_word(g, g.vertex("{1}"), 2), Error);
  }

  TEST_CASE("reducer cache is reused") {
    const auto& g = boolean2();
    Reducer r(g);
    (void)r.normal_form(word(g, {"b2", "a2", "b2"}));
    const auto size = r.cache_size();
    CHECK(size > 0);
    (void)r.normal_form(word(g, {"b2", "a2", "b2"}));
    CHECK(r.cache_size() == size);
  }

  TEST_CASE("the relations act as zero") {
    for (const auto& [name, g] : graph_set()) {
      CAPTURE(name);
      Reducer r(g);
      for (const auto& gen : reduced_relations(g)) CHECK(r.normal_form(gen.poly).is_zero());
    }
  }
}
