#pragma once

// Named example objects used by the test suite, the command line tool and the
// checked-in corpus/ directory.  Everything here is small enough to audit by
// hand; several of the fixtures are counterexamples whose exact shape the
// tests depend on, so change nothing lightly.

#include <map>
#include <string>
#include <vector>

#include "laxcat/fincat.hpp"
#include "laxcat/grp2.hpp"
#include "laxcat/io.hpp"
#include "laxcat/orders.hpp"
#include "laxcat/vquant.hpp"

namespace laxcat::corpus {

inline CatPtr terminal() {
  return CatBuilder("terminal").object("*").identity("*", "id").build();
}

inline CatPtr walking_arrow() {
  return CatBuilder("walking_arrow")
      .object("x")
      .object("y")
      .identity("x", "idx")
      .identity("y", "idy")
      .morphism("u", "x", "y")
      .build();
}

inline CatPtr walking_iso() {
  return CatBuilder("walking_iso")
      .object("a")
      .object("b")
      .identity("a", "ida")
      .identity("b", "idb")
      .morphism("f", "a", "b")
      .morphism("fi", "b", "a")
      .compose("f", "fi", "ida")
      .compose("fi", "f", "idb")
      .build();
}

/// Two objects, no morphisms between them.
inline CatPtr discrete_pair() {
  return CatBuilder("discrete_pair")
      .object("FA")
      .object("GA")
      .identity("FA", "idFA")
      .identity("GA", "idGA")
      .build();
}

/// The walking arrow on the same two objects; discrete_pair() includes into
/// it via pair_into_arrow().
inline CatPtr arrow_pair() {
  return CatBuilder("arrow_pair")
      .object("FA")
      .object("GA")
      .identity("FA", "idFA")
      .identity("GA", "idGA")
      .morphism("aA", "FA", "GA")
      .build();
}

/// Target with two parallel composites r != s.  Receives arrow_pair() twice,
/// via arrow_embed_J and arrow_embed_K; the two squares of the transformation
/// gamma_on_pair close up to r on one side and s on the other, and because
/// those differ there is no transformation J => K at all.
inline CatPtr gamma_target() {
  return CatBuilder("gamma_target")
      .object("JFA")
      .object("JGA")
      .object("KFA")
      .object("KGA")
      .identity("JFA", "idJFA")
      .identity("JGA", "idJGA")
      .identity("KFA", "idKFA")
      .identity("KGA", "idKGA")
      .morphism("JaA", "JFA", "JGA")
      .morphism("KaA", "KFA", "KGA")
      .morphism("gFA", "JFA", "KFA")
      .morphism("gGA", "JGA", "KGA")
      .morphism("r", "JFA", "KGA")
      .morphism("s", "JFA", "KGA")
      .compose("gFA", "KaA", "r")
      .compose("JaA", "gGA", "s")
      .build();
}

inline FinFunctor point_to_FA() {
  return named_functor(terminal(), discrete_pair(), {{"*", "FA"}}, {}, "point_to_FA");
}

inline FinFunctor point_to_GA() {
  return named_functor(terminal(), discrete_pair(), {{"*", "GA"}}, {}, "point_to_GA");
}

/// Identity on objects, but the target has an extra arrow.  Bijective on
/// objects and full on nothing new; not a lax epimorphism in Cat even though
/// its order-theoretic shadow is one.
inline FinFunctor pair_into_arrow() {
  return named_functor(discrete_pair(), arrow_pair(), {{"FA", "FA"}, {"GA", "GA"}}, {},
                       "pair_into_arrow");
}

inline FinFunctor arrow_embed_J() {
  return named_functor(arrow_pair(), gamma_target(), {{"FA", "JFA"}, {"GA", "JGA"}},
                       {{"aA", "JaA"}}, "arrow_embed_J");
}

inline FinFunctor arrow_embed_K() {
  return named_functor(arrow_pair(), gamma_target(), {{"FA", "KFA"}, {"GA", "KGA"}},
                       {{"aA", "KaA"}}, "arrow_embed_K");
}

/// J∘P => K∘P for P = pair_into_arrow.  Natural on the discrete pair, yet
/// does not extend along P: Nat(J, K) is empty.
inline NatTrans gamma_on_pair() {
  FinFunctor P = pair_into_arrow();
  return named_nat(compose(P, arrow_embed_J()), compose(P, arrow_embed_K()),
                   {{"FA", "gFA"}, {"GA", "gGA"}}, "gamma_on_pair");
}

/// The one-point inclusion into walking_iso(); an equivalence that is not an
/// isomorphism of categories.
inline FinFunctor point_into_iso() {
  return named_functor(terminal(), walking_iso(), {{"*", "a"}}, {}, "point_into_iso");
}

/// Endofunctor of walking_iso() sending everything to the object a.
inline FinFunctor collapse_to_a() {
  return named_functor(walking_iso(), walking_iso(), {{"a", "a"}, {"b", "a"}},
                       {{"f", "ida"}, {"fi", "ida"}}, "collapse_to_a");
}

/// Free category on two isomorphism pairs Ra ~ Rb (via Rf), Sa ~ Sb (via Sf)
/// and three connecting generators alpha_a, alpha_b, beta_b, modulo only the
/// isomorphism relations.  Dotted names record one normal-form composite:
/// "Rf.alpha_b" is alpha_b after Rf.  The point of this category is that it
/// carries two distinct transformations between the two embedded isomorphism
/// pairs; see two_cell_alpha() and two_cell_beta().
inline CatPtr two_cell_pair() {
  CatBuilder b("two_cell_pair");
  b.object("Ra");
  b.object("Rb");
  b.object("Sa");
  b.object("Sb");
  b.identity("Ra", "idRa");
  b.identity("Rb", "idRb");
  b.identity("Sa", "idSa");
  b.identity("Sb", "idSb");
  b.morphism("Rf", "Ra", "Rb");
  b.morphism("Rf_inv", "Rb", "Ra");
  b.morphism("Sf", "Sa", "Sb");
  b.morphism("Sf_inv", "Sb", "Sa");
  b.morphism("alpha_a", "Ra", "Sa");
  b.morphism("alpha_b", "Rb", "Sb");
  b.morphism("beta_b", "Rb", "Sb");
  b.morphism("Rf.alpha_b", "Ra", "Sb");
  b.morphism("Rf.beta_b", "Ra", "Sb");
  b.morphism("Rf_inv.alpha_a", "Rb", "Sa");
  b.morphism("alpha_a.Sf", "Ra", "Sb");
  b.morphism("alpha_b.Sf_inv", "Rb", "Sa");
  b.morphism("beta_b.Sf_inv", "Rb", "Sa");
  b.morphism("Rf.alpha_b.Sf_inv", "Ra", "Sa");
  b.morphism("Rf.beta_b.Sf_inv", "Ra", "Sa");
  b.morphism("Rf_inv.alpha_a.Sf", "Rb", "Sb");
  b.compose("Rf", "Rf_inv", "idRa");
  b.compose("Rf", "alpha_b", "Rf.alpha_b");
  b.compose("Rf", "beta_b", "Rf.beta_b");
  b.compose("Rf", "Rf_inv.alpha_a", "alpha_a");
  b.compose("Rf", "alpha_b.Sf_inv", "Rf.alpha_b.Sf_inv");
  b.compose("Rf", "beta_b.Sf_inv", "Rf.beta_b.Sf_inv");
  b.compose("Rf", "Rf_inv.alpha_a.Sf", "alpha_a.Sf");
  b.compose("Rf_inv", "Rf", "idRb");
  b.compose("Rf_inv", "alpha_a", "Rf_inv.alpha_a");
  b.compose("Rf_inv", "Rf.alpha_b", "alpha_b");
  b.compose("Rf_inv", "Rf.beta_b", "beta_b");
  b.compose("Rf_inv", "alpha_a.Sf", "Rf_inv.alpha_a.Sf");
  b.compose("Rf_inv", "Rf.alpha_b.Sf_inv", "alpha_b.Sf_inv");
  b.compose("Rf_inv", "Rf.beta_b.Sf_inv", "beta_b.Sf_inv");
  b.compose("Sf", "Sf_inv", "idSa");
  b.compose("Sf_inv", "Sf", "idSb");
  b.compose("alpha_a", "Sf", "alpha_a.Sf");
  b.compose("alpha_b", "Sf_inv", "alpha_b.Sf_inv");
  b.compose("beta_b", "Sf_inv", "beta_b.Sf_inv");
  b.compose("Rf.alpha_b", "Sf_inv", "Rf.alpha_b.Sf_inv");
  b.compose("Rf.beta_b", "Sf_inv", "Rf.beta_b.Sf_inv");
  b.compose("Rf_inv.alpha_a", "Sf", "Rf_inv.alpha_a.Sf");
  b.compose("alpha_a.Sf", "Sf_inv", "alpha_a");
  b.compose("alpha_b.Sf_inv", "Sf", "alpha_b");
  b.compose("beta_b.Sf_inv", "Sf", "beta_b");
  b.compose("Rf.alpha_b.Sf_inv", "Sf", "Rf.alpha_b");
  b.compose("Rf.beta_b.Sf_inv", "Sf", "Rf.beta_b");
  b.compose("Rf_inv.alpha_a.Sf", "Sf_inv", "Rf_inv.alpha_a");
  return b.build();
}

inline FinFunctor iso_pair_upper() {
  return named_functor(walking_iso(), two_cell_pair(), {{"a", "Ra"}, {"b", "Rb"}},
                       {{"f", "Rf"}, {"fi", "Rf_inv"}}, "iso_pair_upper");
}

inline FinFunctor iso_pair_lower() {
  return named_functor(walking_iso(), two_cell_pair(), {{"a", "Sa"}, {"b", "Sb"}},
                       {{"f", "Sf"}, {"fi", "Sf_inv"}}, "iso_pair_lower");
}

/// One of exactly three transformations iso_pair_upper => iso_pair_lower.
inline NatTrans two_cell_alpha() {
  return named_nat(iso_pair_upper(), iso_pair_lower(),
                   {{"a", "alpha_a"}, {"b", "Rf_inv.alpha_a.Sf"}}, "two_cell_alpha");
}

/// A second one, distinct from two_cell_alpha at both objects.
inline NatTrans two_cell_beta() {
  return named_nat(iso_pair_upper(), iso_pair_lower(),
                   {{"a", "Rf.beta_b.Sf_inv"}, {"b", "beta_b"}}, "two_cell_beta");
}

// ---------------------------------------------------------------------------
// Preorders.

inline PreordPtr pre_point() { return preorder_closure("pre_point", {"*"}, {}); }

/// Two incomparable elements: the order shadow of discrete_pair.
inline PreordPtr pre_discrete_pair() {
  return preorder_closure("pre_discrete_pair", {"FA", "GA"}, {});
}

/// The two-element chain, order shadow of arrow_pair.
inline PreordPtr pre_arrow_pair() {
  return preorder_closure("pre_arrow_pair", {"FA", "GA"}, {{"FA", "GA"}});
}

inline PreordPtr pre_chain3() {
  return preorder_closure("pre_chain3", {"p", "q", "r"}, {{"p", "q"}, {"q", "r"}});
}

/// Two equivalent but distinct elements; the smallest preorder that is not a
/// poset.
inline PreordPtr pre_iso_pair() {
  return preorder_closure("pre_iso_pair", {"a", "b"}, {{"a", "b"}, {"b", "a"}});
}

/// m below both l and r, l and r incomparable.
inline PreordPtr pre_vee() {
  return preorder_closure("pre_vee", {"l", "m", "r"}, {{"m", "l"}, {"m", "r"}});
}

inline PreordPtr pre_diamond() {
  return preorder_closure("pre_diamond", {"bot", "l", "r", "top"},
                          {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
}

/// The order shadow of pair_into_arrow.  A lax epimorphism of preorders whose
/// thin-category functor is not a lax epimorphism of categories.
inline MonotoneMap pair_into_arrow_pre() {
  return named_monotone(pre_discrete_pair(), pre_arrow_pair(),
                        {{"FA", "FA"}, {"GA", "GA"}}, "pair_into_arrow_pre");
}

/// The order shadow of point_into_iso.
inline MonotoneMap point_into_iso_pre() {
  return named_monotone(pre_point(), pre_iso_pair(), {{"*", "a"}}, "point_into_iso_pre");
}

// ---------------------------------------------------------------------------
// Groups.

/// The embedding of C2 into S3 as {e, (12)}.  The canonical non-surjective
/// homomorphism: (12) commutes with the whole image but is not central, which
/// refutes the precomposition condition.
inline GroupHom z2_into_s3() {
  return named_hom(cyclic_group(2), symmetric_group(3), {{"g0", "e"}, {"g1", "(12)"}},
                   "z2_into_s3");
}

/// The sign of a permutation, S3 -> C2.  Surjective but far from injective.
inline GroupHom s3_sign() {
  return named_hom(symmetric_group(3), cyclic_group(2),
                   {{"e", "g0"}, {"(123)", "g0"}, {"(132)", "g0"},
                    {"(12)", "g1"}, {"(13)", "g1"}, {"(23)", "g1"}},
                   "s3_sign");
}

inline GroupHom c4_onto_c2() {
  return named_hom(cyclic_group(4), cyclic_group(2),
                   {{"g0", "g0"}, {"g1", "g1"}, {"g2", "g0"}, {"g3", "g1"}}, "c4_onto_c2");
}

/// Small groups used as probes when hunting refutations of the lax epi
/// condition: cyclic up to order 12, dihedral up to order 12, S3.
inline std::vector<GroupPtr> probe_groups() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 12; ++n) out.push_back(cyclic_group(n));
  for (int n = 2; n <= 6; ++n) out.push_back(dihedral_group(n));
  out.push_back(symmetric_group(3));
  return out;
}

// ---------------------------------------------------------------------------
// Enriched categories over the 3-chain 0 < m < 1.

/// Two objects, one reachable from the other only at level m and not at all
/// the other way.
inline VCatPtr vcat_asym_pair() {
  return VCatBuilder(chain_frame(3), "vcat_asym_pair")
      .object("p")
      .object("q")
      .hom("p", "q", "m")
      .build();
}

/// Two objects m-close in both directions; m-density is not density.
inline VCatPtr vcat_sym_pair() {
  return VCatBuilder(chain_frame(3), "vcat_sym_pair")
      .object("p")
      .object("q")
      .hom("p", "q", "m")
      .hom("q", "p", "m")
      .build();
}

/// Two objects isomorphic at the top level; either one is dense in the pair.
inline VCatPtr vcat_iso_pair() {
  return VCatBuilder(chain_frame(3), "vcat_iso_pair")
      .object("p")
      .object("q")
      .hom("p", "q", "1")
      .hom("q", "p", "1")
      .build();
}

/// Three objects with the third reachable only at level m.
inline VCatPtr vcat_chain3() {
  return VCatBuilder(chain_frame(3), "vcat_chain3")
      .object("p")
      .object("q")
      .object("r")
      .hom("p", "q", "m")
      .hom("q", "r", "m")
      .hom("p", "r", "m")
      .build();
}

/// The inclusion of {p} into the asymmetric pair: fails both lax epi
/// criteria, with the density gap at (q, q).
inline VFunctor p_into_asym_pair() {
  return sub_inclusion(vcat_asym_pair(), {"p"}, "p_into_asym_pair");
}

/// The order data of the five-element lattice with three incomparable
/// middles; a valid poset that FrameV::validated must reject as
/// non-distributive.
inline PreordPtr m3_order() {
  return preorder_closure("m3", {"0", "x", "y", "z", "1"},
                          {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

// ---------------------------------------------------------------------------
// Squares and the shipped document set.

/// Collapses the walking isomorphism onto the FA end of the arrow pair; the
/// right leg of fillin_square().
inline FinFunctor collapse_iso_onto_FA() {
  return named_functor(walking_iso(), arrow_pair(), {{"a", "FA"}, {"b", "FA"}},
                       {{"f", "idFA"}, {"fi", "idFA"}}, "collapse_iso_onto_FA");
}

/// A solvable diagonal problem: equivalence on top, bifibration on the bottom.
inline io::SquareData fillin_square() {
  return {"fillin_square",
          Square{point_into_iso(), point_to_FA(), collapse_iso_onto_FA(), pair_into_arrow()}};
}

/// One shipped corpus file.  Files are usually named after the document; the
/// functor that breaks the coinserter comparison travels under the file name
/// its role suggests.
struct CorpusEntry {
  std::string file;
  io::Document doc;
};

inline std::vector<CorpusEntry> corpus_documents() {
  std::vector<CorpusEntry> out;
  auto add = [&](io::Document d) { out.push_back({d.name() + ".json", std::move(d)}); };

  add({terminal()});
  add({discrete_pair()});
  add({arrow_pair()});
  add({gamma_target()});
  add({walking_arrow()});
  add({walking_iso()});
  add({two_cell_pair()});

  add({point_to_FA()});
  add({point_to_GA()});
  out.push_back({"coinserter_counterexample.json", {pair_into_arrow()}});
  add({arrow_embed_J()});
  add({arrow_embed_K()});
  add({point_into_iso()});
  add({collapse_to_a()});
  add({iso_pair_upper()});
  add({iso_pair_lower()});
  add({collapse_iso_onto_FA()});

  add({gamma_on_pair()});
  add({two_cell_alpha()});
  add({two_cell_beta()});

  add({pre_point()});
  add({pre_discrete_pair()});
  add({pre_arrow_pair()});
  add({pre_chain3()});
  add({pre_iso_pair()});
  add({pre_vee()});
  add({pre_diamond()});
  add({pair_into_arrow_pre()});
  add({point_into_iso_pre()});

  for (const GroupPtr& g : probe_groups()) add({g});
  add({klein_group()});
  add({quaternion_group()});
  add({z2_into_s3()});
  add({s3_sign()});
  add({c4_onto_c2()});

  add({boolean_frame()});
  add({chain_frame(3)});
  add({diamond_frame()});
  add({powerset_frame(2)});

  add({vcat_asym_pair()});
  add({vcat_sym_pair()});
  add({vcat_iso_pair()});
  add({vcat_chain3()});
  add({p_into_asym_pair()});

  out.push_back({fillin_square().name + ".json", {fillin_square()}});
  return out;
}

/// Documents that must fail to parse or validate, shipped under
/// corpus/rejects/.  Each is a near-miss of a valid fixture; the tests pin
/// the exact exception per file.
struct CorpusReject {
  std::string file;
  io::json doc;
};

inline std::vector<CorpusReject> corpus_rejects() {
  using io::json;
  std::vector<CorpusReject> out;

  {
    // alpha at a, beta at b: each component exists, the square at f fails.
    json j = io::to_json({two_cell_alpha()});
    j["name"] = "nat_mixed_components";
    j["components"]["b"] = "beta_b";
    out.push_back({"nat_mixed_components.json", std::move(j)});
  }
  {
    // The three-middle lattice as a frame: a poset with meets and joins that
    // fails distributivity.
    json j = io::to_json({m3_order()});
    j["kind"] = "frame";
    out.push_back({"m3_frame.json", std::move(j)});
  }
  {
    json j = io::to_json({gamma_target()});
    j["name"] = "compose_pair_malformed";
    j["compose"][0] = json::array({"gFA", "KaA"});
    out.push_back({"compose_pair_malformed.json", std::move(j)});
  }
  {
    json j = io::to_json({gamma_target()});
    j["name"] = "compose_entry_missing";
    j["compose"].erase(0);
    out.push_back({"compose_entry_missing.json", std::move(j)});
  }
  {
    json j = io::to_json({pre_chain3()});
    j["name"] = "preord_not_transitive";
    json kept = json::array();
    for (const json& pair : j["leq"])
      if (!(pair[0] == "p" && pair[1] == "r")) kept.push_back(pair);
    j["leq"] = std::move(kept);
    out.push_back({"preord_not_transitive.json", std::move(j)});
  }
  {
    // Subtraction mod 3: a latin square with no two-sided identity.
    json j;
    j["kind"] = "group";
    j["name"] = "latin_not_group";
    j["elements"] = {"z0", "z1", "z2"};
    const char* names[] = {"z0", "z1", "z2"};
    json table = json::array();
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) table.push_back({names[x], names[y], names[(x - y + 3) % 3]});
    j["table"] = std::move(table);
    out.push_back({"latin_not_group.json", std::move(j)});
  }
  {
    json j = io::to_json({pair_into_arrow_pre()});
    j["name"] = "map_not_monotone";
    j["source"] = j["target"];
    j["map"] = {{"FA", "GA"}, {"GA", "FA"}};
    out.push_back({"map_not_monotone.json", std::move(j)});
  }
  {
    json j = io::to_json({c4_onto_c2()});
    j["name"] = "hom_not_multiplicative";
    j["map"]["g1"] = "g0";
    out.push_back({"hom_not_multiplicative.json", std::move(j)});
  }
  {
    json j = io::to_json({vcat_asym_pair()});
    j["name"] = "vcat_bad_unit";
    j["hom"][0][2] = "m";  // hom(p, p) drops below top
    out.push_back({"vcat_bad_unit.json", std::move(j)});
  }
  {
    json j;
    j["kind"] = "mystery";
    j["name"] = "unknown_kind";
    out.push_back({"unknown_kind.json", std::move(j)});
  }
  return out;
}

}  // namespace laxcat::corpus
