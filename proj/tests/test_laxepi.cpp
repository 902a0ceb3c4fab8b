#include <catch2/catch_amalgamated.hpp>

#include "laxcat/corpus.hpp"
#include "laxcat/laxepi.hpp"

using namespace laxcat;

namespace {

MorId m(const CatPtr& C, const std::string& n) { return C->mor_index(n).value(); }

CommaTriple triple(const CatPtr& B, const CatPtr& A, const std::string& h, const std::string& a,
                   const std::string& k) {
  return {m(B, h), A->object_index(a).value(), m(B, k)};
}

}  // namespace

TEST_CASE("comma categories of the pair inclusion") {
  FinFunctor P = corpus::pair_into_arrow();
  CatPtr B = P.source_ptr(), C = P.target_ptr();
  CommaFamily commas(P);

  SECTION("over the inserted arrow: two factorizations, no path between them") {
    const CommaOverMorphism& comma = commas.at(m(C, "aA"));
    REQUIRE(comma.num_objects() == 2);
    REQUIRE(comma.num_components() == 2);
    CHECK(comma.edges().empty());
    CHECK(comma.object(0) == triple(C, B, "idFA", "FA", "aA"));
    CHECK(comma.object(1) == triple(C, B, "aA", "GA", "idGA"));
    CHECK(comma.component_at(0).index != comma.component_at(1).index);
    CHECK_FALSE(comma.zigzag(0, 1).has_value());
  }
  SECTION("over the identities: singletons") {
    for (const char* id : {"idFA", "idGA"}) {
      const CommaOverMorphism& comma = commas.at(m(C, id));
      CHECK(comma.num_objects() == 1);
      CHECK(comma.connected());
    }
  }
  SECTION("verdict carries the disconnection witness") {
    LaxEpiVerdict v = is_lax_epi(P);
    REQUIRE_FALSE(v);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->g == m(C, "aA"));
    CHECK_FALSE(v.witness->empty);
    REQUIRE(v.witness->split_pair.has_value());
    CHECK(v.witness->split_pair->first == triple(C, B, "idFA", "FA", "aA"));
    CHECK(v.witness->split_pair->second == triple(C, B, "aA", "GA", "idGA"));
  }
}

TEST_CASE("comma categories of the one-point inclusion") {
  FinFunctor E = corpus::point_into_iso();
  CatPtr pt = E.source_ptr();
  CatPtr iso = E.target_ptr();
  CommaFamily commas(E);

  // Every comma is a single point; the inclusion hits everything up to the
  // isomorphism.
  CHECK(commas.at(m(iso, "f")).object(0) == triple(iso, pt, "ida", "*", "f"));
  CHECK(commas.at(m(iso, "fi")).object(0) == triple(iso, pt, "fi", "*", "ida"));
  CHECK(commas.at(m(iso, "ida")).object(0) == triple(iso, pt, "ida", "*", "ida"));
  CHECK(commas.at(m(iso, "idb")).object(0) == triple(iso, pt, "fi", "*", "f"));
  for (MorId g = 0; g < iso->num_morphisms(); ++g) {
    CHECK(commas.at(g).num_objects() == 1);
    CHECK(commas.at(g).connected());
  }
  CHECK(is_lax_epi(E).value);

  SECTION("the family caches") {
    CHECK(&commas.at(0) == &commas.at(0));
  }
}

TEST_CASE("factorization commas of an identity functor are connected") {
  for (const CatPtr& C : {corpus::walking_iso(), corpus::arrow_pair(), corpus::gamma_target(),
                          corpus::two_cell_pair()}) {
    FinFunctor id = identity_functor(C);
    CHECK(is_lax_epi(id).value);
  }
}

TEST_CASE("zig-zags replay against the comma structure") {
  CatPtr T = corpus::two_cell_pair();
  FinFunctor id = identity_functor(T);
  CommaOverMorphism comma(id, m(T, "alpha_a"));

  // Factorizations of alpha_a through each of the four objects.
  REQUIRE(comma.num_objects() == 4);
  REQUIRE(comma.connected());

  int from = comma.find_object(triple(T, T, "Rf", "Rb", "Rf_inv.alpha_a")).value();
  int to = comma.find_object(triple(T, T, "alpha_a.Sf", "Sb", "Sf_inv")).value();
  auto path = comma.zigzag(from, to);
  REQUIRE(path.has_value());
  REQUIRE(path->size() == 1);
  CHECK(path->front().f == m(T, "Rf_inv.alpha_a.Sf"));
  CHECK(path->front().forward);
  CHECK(comma.zigzag_valid(from, to, *path));
  CHECK_FALSE(comma.zigzag_valid(to, from, *path));

  // Reaching the factorization through the identity goes against the only
  // edge touching it, so that hop is reversed.
  int root = comma.find_object(triple(T, T, "idRa", "Ra", "alpha_a")).value();
  auto back = comma.zigzag(from, root);
  REQUIRE(back.has_value());
  REQUIRE(back->size() == 1);
  CHECK_FALSE(back->front().forward);
  CHECK(back->front().f == m(T, "Rf"));
  CHECK(comma.zigzag_valid(from, root, *back));

  SECTION("the trivial zig-zag") {
    CHECK(comma.zigzag(from, from)->empty());
    CHECK(comma.zigzag_valid(from, from, {}));
  }
}

TEST_CASE("components translate along pre- and postcomposition") {
  FinFunctor E = corpus::point_into_iso();
  CatPtr iso = E.target_ptr();
  CommaFamily commas(E);
  MorId f = m(iso, "f"), fi = m(iso, "fi"), idb = m(iso, "idb"), ida = m(iso, "ida");

  const CommaOverMorphism& over_f = commas.at(f);
  ComponentId C = over_f.component_at(0);

  SECTION("precompose: fi then f is the identity on b") {
    ComponentId D = precompose_component(over_f, C, fi, commas.at(idb));
    CHECK(D.representative == CommaTriple{fi, 0, f});
  }
  SECTION("postcompose: f then fi is the identity on a") {
    ComponentId D = postcompose_component(over_f, C, fi, commas.at(ida));
    CHECK(D.representative == CommaTriple{ida, 0, ida});
  }
  SECTION("mismatched target comma is rejected") {
    REQUIRE_THROWS_AS(precompose_component(over_f, C, fi, commas.at(f)), ShapeMismatch);
    REQUIRE_THROWS_AS(postcompose_component(over_f, C, fi, commas.at(f)), ShapeMismatch);
  }
}

TEST_CASE("component translation is independent of the representative") {
  // A comma with a two-object component: factorizations of f in the walking
  // isomorphism under the identity functor.
  CatPtr iso = corpus::walking_iso();
  FinFunctor id = identity_functor(iso);
  CommaFamily commas(id);
  MorId f = m(iso, "f"), fi = m(iso, "fi"), ida = m(iso, "ida");

  const CommaOverMorphism& over_f = commas.at(f);
  REQUIRE(over_f.num_objects() == 2);
  REQUIRE(over_f.connected());

  // Both members map into the comma over ida = fi after f consistently; the
  // translation itself re-checks this internally.
  ComponentId C = over_f.component_at(0);
  ComponentId D = postcompose_component(over_f, C, fi, commas.at(ida));
  CHECK(commas.at(ida).members(D.index).size() >= 1);
}

TEST_CASE("lax epimorphisms compose and cancel on the right") {
  FinFunctor E = corpus::point_into_iso();
  FinFunctor c = corpus::collapse_to_a();

  REQUIRE(is_lax_epi(E).value);
  REQUIRE(is_lax_epi(c).value);
  CHECK(is_lax_epi(compose(E, c)).value);

  // pair_into_arrow composed after a lax epi stays non-lax-epi, and the
  // failure is detected on the composite's own commas.
  FinFunctor P = corpus::pair_into_arrow();
  FinFunctor idB = identity_functor(P.source_ptr());
  CHECK_FALSE(is_lax_epi(compose(idB, P)).value);
}

TEST_CASE("an empty comma is witnessed") {
  // The constant functor at a onto the walking arrow misses hom(y, x)… there
  // is none; use instead the inclusion of x into the walking arrow: the comma
  // over idy is empty since nothing maps y -> x.
  CatPtr arrow = corpus::walking_arrow();
  FinFunctor incl = named_functor(corpus::terminal(), arrow, {{"*", "x"}}, {}, "point_to_x");
  LaxEpiVerdict v = is_lax_epi(incl);
  REQUIRE_FALSE(v);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->empty);
  CHECK(v.witness->g == m(arrow, "idy"));
  CHECK(CommaOverMorphism(incl, m(arrow, "idy")).empty());
}
