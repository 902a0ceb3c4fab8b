#include <catch2/catch_amalgamated.hpp>

#include "laxcat/corpus.hpp"
#include "laxcat/factorize.hpp"

using namespace laxcat;

TEST_CASE("factorization through the splitting category") {
  SECTION("the pair inclusion splits off nothing: middle stays discrete") {
    Factorization fac = factorize(corpus::pair_into_arrow());
    CHECK(fac.mid->num_objects() == 2);
    CHECK(fac.mid->num_morphisms() == 2);
    CHECK(is_isomorphism_functor(fac.left));
    CHECK_FALSE(is_isomorphism_functor(fac.right));
  }
  SECTION("the one-point equivalence absorbs the whole isomorphism") {
    Factorization fac = factorize(corpus::point_into_iso());
    CHECK(fac.mid->num_objects() == 2);
    CHECK(fac.mid->num_morphisms() == 4);
    CHECK(is_isomorphism_functor(fac.right));
    CHECK_FALSE(is_isomorphism_functor(fac.left));
    CHECK(is_lax_epi(fac.left).value);
  }
  SECTION("an embedding factors as iso followed by itself") {
    FinFunctor J = corpus::arrow_embed_J();
    Factorization fac = factorize(J);
    CHECK(fac.mid->num_objects() == 2);
    CHECK(fac.mid->num_morphisms() == 3);
    CHECK(is_isomorphism_functor(fac.left));
    CHECK_FALSE(is_isomorphism_functor(fac.right));
  }
  SECTION("the collapse is entirely lax epi") {
    Factorization fac = factorize(corpus::collapse_to_a());
    CHECK(is_isomorphism_functor(fac.right));
  }
  SECTION("being lax epi is equivalent to the right leg being invertible") {
    for (const FinFunctor& F :
         {corpus::pair_into_arrow(), corpus::point_into_iso(), corpus::arrow_embed_J(),
          corpus::collapse_to_a(), identity_functor(corpus::two_cell_pair()),
          compose(corpus::pair_into_arrow(), corpus::arrow_embed_J())}) {
      Factorization fac = factorize(F);
      CHECK(is_lax_epi(F).value == is_isomorphism_functor(fac.right));
    }
  }
}

TEST_CASE("diagonal fill-in") {
  Square sq{corpus::point_into_iso(), corpus::point_to_FA(), corpus::collapse_iso_onto_FA(),
            corpus::pair_into_arrow()};

  FinFunctor t = diagonal_fill_in(sq);
  CatPtr B = corpus::discrete_pair();
  CHECK(t.on_obj(0) == B->object_index("FA").value());
  CHECK(t.on_obj(1) == B->object_index("FA").value());
  CHECK(compose(sq.top, t) == sq.left);
  CHECK(compose(t, sq.bottom) == sq.right);

  SECTION("a square that does not commute is rejected") {
    Square bad{corpus::point_into_iso(), corpus::point_to_GA(), corpus::collapse_iso_onto_FA(),
               corpus::pair_into_arrow()};
    REQUIRE_THROWS_AS(diagonal_fill_in(bad), NotOrthogonalInput);
  }
  SECTION("the top must be a lax epimorphism") {
    FinFunctor P = corpus::pair_into_arrow();
    Square bad{P, identity_functor(P.source_ptr()), identity_functor(P.target_ptr()), P};
    REQUIRE_THROWS_AS(diagonal_fill_in(bad), NotOrthogonalInput);
  }
  SECTION("the bottom must be a bifibration") {
    FinFunctor E = corpus::point_into_iso();
    Square bad{E, identity_functor(E.source_ptr()), identity_functor(E.target_ptr()), E};
    REQUIRE_THROWS_AS(diagonal_fill_in(bad), NotOrthogonalInput);
  }
}

TEST_CASE("two-dimensional fill-in") {
  FinFunctor E = corpus::point_into_iso();
  CatPtr iso = E.target_ptr();
  FinFunctor idIso = identity_functor(iso);
  Square sq{E, E, idIso, idIso};

  FinFunctor t = diagonal_fill_in(sq);
  REQUIRE(t == idIso);

  // A second diagonal for the same left side: the collapse also satisfies
  // collapse∘E == E, paired with beta: id => collapse.
  FinFunctor t2 = corpus::collapse_to_a();
  REQUIRE(compose(E, t2) == E);
  NatTrans alpha = identity_nat(E);
  NatTrans beta = named_nat(idIso, t2, {{"a", "ida"}, {"b", "fi"}}, "beta");

  NatTrans theta = fill_in_2cell(sq, t, t2, alpha, beta);
  CHECK(theta == beta);  // the whiskering equations pin it down

  SECTION("cells with mismatched endpoints are rejected") {
    REQUIRE_THROWS_AS(fill_in_2cell(sq, t, t2, beta, beta), NotOrthogonalInput);
    REQUIRE_THROWS_AS(fill_in_2cell(sq, t2, t, alpha, beta), NotOrthogonalInput);
  }
  SECTION("the trivial cell problem has the identity solution") {
    NatTrans id_theta = fill_in_2cell(sq, t, t, identity_nat(E), identity_nat(idIso));
    CHECK(id_theta == identity_nat(t));
  }
}

TEST_CASE("orthogonality by brute force") {
  FinFunctor E = corpus::point_into_iso();
  FinFunctor P = corpus::pair_into_arrow();

  CHECK(verify_orthogonal(E, P));

  // E against itself: the identity square has no diagonal, since any
  // candidate factors through the point.
  CHECK_FALSE(verify_orthogonal(E, E));

  // P on the lax-epi side: nothing maps the inserted arrow back into the
  // discrete pair.
  CHECK_FALSE(verify_orthogonal(P, P));
}

TEST_CASE("recognizing inserter projections") {
  SECTION("a projection matches its own pair") {
    FinFunctor R = corpus::iso_pair_upper();
    FinFunctor S = corpus::iso_pair_lower();
    Inserter ins = make_inserter(R, S);
    auto phi = match_inserter_projection(ins.projection, R, S);
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism_functor(*phi));
  }
  SECTION("shape mismatch yields nothing") {
    FinFunctor idIso = identity_functor(corpus::walking_iso());
    CHECK_FALSE(match_inserter_projection(corpus::point_into_iso(), idIso, idIso).has_value());
  }
  SECTION("the pair inclusion arises from the two embeddings") {
    FinFunctor P = corpus::pair_into_arrow();
    auto phi = match_inserter_projection(P, corpus::arrow_embed_J(), corpus::arrow_embed_K());
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism_functor(*phi));
  }
}

TEST_CASE("bounded search for unrealized bifibrations") {
  std::vector<FinFunctor> candidates{corpus::pair_into_arrow(), corpus::point_into_iso()};
  std::vector<CatPtr> probes{corpus::gamma_target()};
  HuntReport report = hunt_dsb_not_inserter(candidates, probes);
  CHECK(report.checked == 1);  // the equivalence is not a bifibration, skipped
  CHECK(report.realized == 1);
  CHECK(report.unrealized.empty());

  SECTION("a probe family too weak to realize the candidate reports it") {
    HuntReport weak = hunt_dsb_not_inserter(candidates, {corpus::terminal()});
    CHECK(weak.checked == 1);
    CHECK(weak.realized == 0);
    REQUIRE(weak.unrealized.size() == 1);
    CHECK(weak.unrealized[0] == "pair_into_arrow");
  }
}
