#include <catch2/catch_amalgamated.hpp>

#include "laxcat/corpus.hpp"
#include "laxcat/splitfib.hpp"

using namespace laxcat;

namespace {

MorId m(const CatPtr& C, const std::string& n) { return C->mor_index(n).value(); }
ObjId o(const CatPtr& C, const std::string& n) { return C->object_index(n).value(); }

}  // namespace

TEST_CASE("splittings of identities") {
  SECTION("one per object along the one-point inclusion") {
    FinFunctor E = corpus::point_into_iso();
    CatPtr iso = E.target_ptr();
    CommaFamily commas(E);
    auto at_a = enumerate_splits(E, o(iso, "a"), commas);
    auto at_b = enumerate_splits(E, o(iso, "b"), commas);
    REQUIRE(at_a.size() == 1);
    REQUIRE(at_b.size() == 1);
    CHECK(at_a[0] == Split{o(iso, "a"), 0, m(iso, "ida"), m(iso, "ida")});
    CHECK(at_b[0] == Split{o(iso, "b"), 0, m(iso, "fi"), m(iso, "f")});
  }
  SECTION("the isomorphism itself splits both identities under the identity functor") {
    CatPtr iso = corpus::walking_iso();
    FinFunctor id = identity_functor(iso);
    CommaFamily commas(id);
    auto at_a = enumerate_splits(id, o(iso, "a"), commas);
    REQUIRE(at_a.size() == 2);
    CHECK(at_a[0] == Split{o(iso, "a"), o(iso, "a"), m(iso, "ida"), m(iso, "ida")});
    CHECK(at_a[1] == Split{o(iso, "a"), o(iso, "b"), m(iso, "f"), m(iso, "fi")});
  }
  SECTION("objects outside the image have no splittings") {
    FinFunctor J = corpus::arrow_embed_J();
    CommaFamily commas(J);
    CatPtr D = J.target_ptr();
    CHECK(enumerate_splits(J, o(D, "KFA"), commas).empty());
    CHECK(enumerate_splits(J, o(D, "KGA"), commas).empty());
    CHECK(enumerate_splits(J, o(D, "JFA"), commas).size() == 1);
  }
  SECTION("ill-typed or non-idempotent data is not a split") {
    CatPtr iso = corpus::walking_iso();
    FinFunctor id = identity_functor(iso);
    CommaFamily commas(id);
    CHECK_FALSE(is_split(id, Split{o(iso, "a"), o(iso, "b"), m(iso, "f"), m(iso, "f")}, commas));
    CHECK_FALSE(is_split(id, Split{o(iso, "a"), o(iso, "a"), m(iso, "f"), m(iso, "fi")}, commas));
  }
}

TEST_CASE("split diagrams and their witnesses") {
  FinFunctor J = corpus::arrow_embed_J();
  CatPtr C = J.source_ptr(), D = J.target_ptr();
  CommaFamily commas(J);

  Split top{o(D, "JFA"), o(C, "FA"), m(D, "idJFA"), m(D, "idJFA")};
  Split bottom{o(D, "JGA"), o(C, "GA"), m(D, "idJGA"), m(D, "idJGA")};
  SplitDiagram d{m(D, "JaA"), top, bottom};

  REQUIRE(is_split_diagram(J, d, commas));
  CHECK(diagram_top_triple(J, d) == CommaTriple{m(D, "idJFA"), o(C, "FA"), m(D, "JaA")});
  CHECK(diagram_bottom_triple(J, d) == CommaTriple{m(D, "JaA"), o(C, "GA"), m(D, "idJGA")});

  auto w = split_diagram_witness(J, d, commas);
  REQUIRE(w.has_value());
  CHECK(w->size() == 1);

  auto lifts = lift_split_diagram(J, d);
  REQUIRE(lifts.size() == 1);
  CHECK(lifts[0].g0 == m(C, "aA"));
  CHECK(lifts[0].b0 == o(C, "FA"));
  CHECK(lifts[0].c0 == o(C, "GA"));

  SECTION("the two factorizations must sit in one component") {
    FinFunctor P = corpus::pair_into_arrow();
    CatPtr Cp = P.target_ptr();
    CommaFamily pc(P);
    Split t{o(Cp, "FA"), 0, m(Cp, "idFA"), m(Cp, "idFA")};
    Split b{o(Cp, "GA"), 1, m(Cp, "idGA"), m(Cp, "idGA")};
    CHECK(is_split(P, t, pc));
    CHECK(is_split(P, b, pc));
    CHECK_FALSE(is_split_diagram(P, SplitDiagram{m(Cp, "aA"), t, b}, pc));
  }
}

TEST_CASE("discrete splitting bifibrations") {
  SECTION("identity functors qualify") {
    for (const CatPtr& C : {corpus::walking_iso(), corpus::arrow_pair(), corpus::two_cell_pair()})
      CHECK(is_dsb(identity_functor(C)).value);
  }
  SECTION("the pair inclusion qualifies") {
    CHECK(is_dsb(corpus::pair_into_arrow()).value);
  }
  SECTION("the arrow embeddings qualify") {
    CHECK(is_dsb(corpus::arrow_embed_J()).value);
    CHECK(is_dsb(corpus::arrow_embed_K()).value);
  }
  SECTION("the one-point equivalence does not: nothing lifts the far identity") {
    DsbVerdict v = is_dsb(corpus::point_into_iso());
    REQUIRE_FALSE(v);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->lifts.empty());
  }
  SECTION("the collapse does not: lifts are plural") {
    DsbVerdict v = is_dsb(corpus::collapse_to_a());
    REQUIRE_FALSE(v);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->lifts.size() != 1);
  }
  SECTION("composition preserves the property") {
    FinFunctor PJ = compose(corpus::pair_into_arrow(), corpus::arrow_embed_J());
    CHECK(is_dsb(PJ).value);
  }
}

TEST_CASE("leg lifts") {
  SECTION("unique along a bifibration") {
    FinFunctor P = corpus::pair_into_arrow();
    CatPtr C = P.target_ptr();
    Split s{o(C, "FA"), 0, m(C, "idFA"), m(C, "idFA")};
    auto lifts = split_leg_lifts(P, s);
    REQUIRE(lifts.size() == 1);
    CHECK(lifts[0].first == P.source().identity(0));
  }
  SECTION("absent along the one-point equivalence") {
    FinFunctor E = corpus::point_into_iso();
    CatPtr iso = E.target_ptr();
    Split s{o(iso, "b"), 0, m(iso, "fi"), m(iso, "f")};
    CommaFamily commas(E);
    REQUIRE(is_split(E, s, commas));
    CHECK(split_leg_lifts(E, s).empty());
  }
  SECTION("plural along the collapse") {
    FinFunctor c = corpus::collapse_to_a();
    CatPtr iso = c.target_ptr();
    Split s{o(iso, "a"), o(iso, "b"), m(iso, "ida"), m(iso, "ida")};
    CommaFamily commas(c);
    REQUIRE(is_split(c, s, commas));
    CHECK(split_leg_lifts(c, s).size() == 2);
  }
}

TEST_CASE("properties forced by being a bifibration") {
  for (const FinFunctor& F : {corpus::pair_into_arrow(), corpus::arrow_embed_J(),
                              identity_functor(corpus::two_cell_pair())}) {
    REQUIRE(is_dsb(F).value);
    FunctorProperties p = derived_properties(F);
    CHECK(p.faithful);
    CHECK(p.conservative);
    CHECK(p.reflects_identities);
  }
  SECTION("the collapse fails to reflect identities") {
    FunctorProperties p = derived_properties(corpus::collapse_to_a());
    CHECK(p.faithful);  // all homs here are singletons
    CHECK(p.conservative);
    CHECK_FALSE(p.reflects_identities);
  }
}
