// Integration gate for the whole library.  Nine checks, one PASS/FAIL line
// each, exit 0 only when everything holds.  Counts, seeds and bounds are
// pinned here and nowhere else.

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laxcat/corpus.hpp"
#include "laxcat/io.hpp"
#include "support/catgen.hpp"

using namespace laxcat;

namespace {

struct Line {
  bool ok;
  std::string detail;
};

std::mt19937 fresh_rng(unsigned salt) { return std::mt19937(20260816u + salt); }

std::vector<FinFunctor> corpus_functors() {
  std::vector<FinFunctor> out;
  for (const auto& e : corpus::corpus_documents())
    if (const auto* F = std::get_if<FinFunctor>(&e.doc.payload)) out.push_back(*F);
  return out;
}

/// Corpus functors plus 200 seeded random ones, each side within 5 objects
/// and 12 morphisms.  Shared by the factorization and consistency checks.
const std::vector<FinFunctor>& random_suite() {
  static const std::vector<FinFunctor> suite = [] {
    std::vector<FinFunctor> s = corpus_functors();
    auto rng = fresh_rng(1);
    for (int i = 0; i < 200; ++i)
      s.push_back(testgen::random_functor(rng, 5, 12, "rf" + std::to_string(i)));
    return s;
  }();
  return suite;
}

Line counterexample_fixtures() {
  FinFunctor P = corpus::pair_into_arrow();
  FinFunctor E = corpus::point_into_iso();
  LaxEpiVerdict vp = is_lax_epi(P);
  if (vp.value || !vp.witness || P.target().mor(vp.witness->g).name != "aA")
    return {false, "inclusion of the discrete pair must fail exactly at 'aA'"};
  if (!is_lax_epi(E).value) return {false, "the one-point equivalence must be a lax epi"};
  if (is_dsb(E).value) return {false, "the one-point equivalence must not be a bifibration"};
  if (verify_orthogonal(E, E)) return {false, "a lax epi must not be orthogonal to itself"};
  return {true, "inclusion refuted at 'aA'; equivalence lax epi, not bifibration, not self-orthogonal"};
}

Line factorization_soundness() {
  int n = 0;
  for (const FinFunctor& F : random_suite()) {
    Factorization fac = factorize(F);
    if (compose(fac.left, fac.right) != F)
      return {false, "factors do not recompose at '" + F.name() + "'"};
    if (!is_lax_epi(fac.left).value)
      return {false, "left factor not a lax epi at '" + F.name() + "'"};
    if (!is_dsb(fac.right).value)
      return {false, "right factor not a bifibration at '" + F.name() + "'"};
    ++n;
  }
  return {true, std::to_string(n) + " functors (corpus + 200 random) split soundly"};
}

Line orthogonal_squares() {
  auto rng = fresh_rng(2);
  std::vector<FinFunctor> es, ms;
  for (const FinFunctor& F : corpus_functors()) {
    if (is_lax_epi(F).value) es.push_back(F);
    if (is_dsb(F).value) ms.push_back(F);
  }
  if (es.empty() || ms.empty()) return {false, "corpus provides no (e, m) pairs"};

  int squares = 0, cells = 0, nontrivial = 0;
  while (squares < 50) {
    for (const FinFunctor& e : es)
      for (const FinFunctor& m : ms) {
        FinFunctor d = testgen::random_functor(rng, e.target_ptr(), m.source_ptr(), "d");
        Square sq{e, compose(e, d), compose(d, m), m};
        FinFunctor t = diagonal_fill_in(sq);
        if (compose(sq.top, t) != sq.left || compose(t, sq.bottom) != sq.right)
          return {false, "diagonal does not fill its square"};

        auto candidates = enumerate_functors(e.target_ptr(), m.source_ptr());
        int count = 0;
        for (const FinFunctor& cand : candidates)
          if (compose(e, cand) == sq.left && compose(cand, m) == sq.right) ++count;
        if (count != 1)
          return {false, "expected exactly one diagonal, found " + std::to_string(count)};

        // Identity cell: whiskers to identities, so the unique filler must be
        // the identity cell on t.
        NatTrans id_t = identity_nat(t);
        NatTrans got = fill_in_2cell(sq, t, t, whisker_right(id_t, sq.top),
                                     whisker_left(sq.bottom, id_t));
        if (!(got == id_t)) return {false, "identity cell not recovered"};
        ++cells;

        // First nontrivial cell out of t, when one exists.
        bool found = false;
        for (const FinFunctor& t2 : candidates) {
          for (const NatTrans& theta : enumerate_nat_trans(t, t2)) {
            if (t2 == t && theta == id_t) continue;
            NatTrans back = fill_in_2cell(sq, t, t2, whisker_right(theta, sq.top),
                                          whisker_left(sq.bottom, theta));
            if (!(back == theta)) return {false, "cell fill-in returned a different cell"};
            ++cells;
            ++nontrivial;
            found = true;
            break;
          }
          if (found) break;
        }
        ++squares;
      }
  }
  std::ostringstream d;
  d << squares << " squares with unique diagonals; " << cells << " unique cells ("
    << nontrivial << " nontrivial)";
  return {true, d.str()};
}

Line closure_laws() {
  auto rng = fresh_rng(3);
  int comp_e = 0, cancel_e = 0, comp_m = 0, cancel_m = 0, equivs = 0, both = 0, dsbs = 0;

  for (int i = 0; i < 40; ++i) {
    CatPtr A = testgen::random_category(rng, 4, 10, "A");
    CatPtr B = testgen::random_category(rng, 4, 10, "B");
    CatPtr C = testgen::random_category(rng, 4, 10, "C");
    FinFunctor f = testgen::random_functor(rng, A, B, "f");
    FinFunctor g = testgen::random_functor(rng, B, C, "g");
    FinFunctor gf = compose(f, g);
    bool ef = is_lax_epi(f).value, eg = is_lax_epi(g).value, egf = is_lax_epi(gf).value;
    if (ef && eg) {
      ++comp_e;
      if (!egf) return {false, "lax epis not closed under composition"};
    }
    if (egf && ef) {
      ++cancel_e;
      if (!eg) return {false, "lax epis not right-cancellable"};
    }
    bool mf = is_dsb(f).value, mg = is_dsb(g).value, mgf = is_dsb(gf).value;
    if (mf && mg) {
      ++comp_m;
      if (!mgf) return {false, "bifibrations not closed under composition"};
    }
    if (mgf && mg) {
      ++cancel_m;
      if (!mf) return {false, "bifibrations not left-cancellable"};
    }
  }

  // Constructed instances so none of the laws is checked vacuously: chains of
  // factorization left legs, chains of inserter projections.
  for (int i = 0; i < 8; ++i) {
    FinFunctor F = testgen::random_functor(rng, 4, 10, "F");
    Factorization fa = factorize(F);
    CatPtr C = testgen::random_category(rng, 4, 10, "C");
    Factorization fb = factorize(testgen::random_functor(rng, fa.mid, C, "G"));
    FinFunctor ee = compose(fa.left, fb.left);
    ++comp_e;
    if (!is_lax_epi(ee).value) return {false, "composite of lax epi legs not a lax epi"};
    ++cancel_e;
    if (!is_lax_epi(fb.left).value) return {false, "factorization leg lost its verdict"};

    CatPtr A2 = testgen::random_category(rng, 3, 8, "A2");
    CatPtr B2 = testgen::random_category(rng, 3, 8, "B2");
    Inserter i1 = make_inserter(testgen::random_functor(rng, A2, B2, "F1"),
                                testgen::random_functor(rng, A2, B2, "G1"));
    CatPtr C2 = testgen::random_category(rng, 3, 8, "C2");
    Inserter i2 = make_inserter(testgen::random_functor(rng, i1.category, C2, "F2"),
                                testgen::random_functor(rng, i1.category, C2, "G2"));
    FinFunctor mm = compose(i2.projection, i1.projection);
    ++comp_m;
    if (!is_dsb(mm).value) return {false, "composite of projections not a bifibration"};
    ++cancel_m;
    if (!is_dsb(i2.projection).value) return {false, "inner projection lost its verdict"};
  }

  // Equivalences: skeleton inclusions of random preorders plus whatever the
  // corpus provides.
  for (int i = 0; i < 15; ++i) {
    PreordPtr full = testgen::random_preord(rng, 4, "full");
    std::vector<int> rep;
    std::vector<std::string> keep;
    for (int x = 0; x < full->size(); ++x) {
      bool seen = false;
      for (int r : rep)
        if (full->leq(x, r) && full->leq(r, x)) seen = true;
      if (!seen) {
        rep.push_back(x);
        keep.push_back(full->element_name(x));
      }
    }
    const int k = static_cast<int>(rep.size());
    std::vector<char> leq(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        leq[static_cast<size_t>(a) * k + b] = full->leq(rep[a], rep[b]);
    PreordPtr skel = FinPreord::validated("skel", keep, std::move(leq));
    FinFunctor incl = as_functor(MonotoneMap::validated(skel, full, rep, "skel_incl"));
    if (!is_equivalence(incl)) return {false, "skeleton inclusion not an equivalence"};
    ++equivs;
    if (!is_lax_epi(incl).value) return {false, "an equivalence is not a lax epi"};
  }
  for (const FinFunctor& F : corpus_functors())
    if (is_equivalence(F)) {
      ++equivs;
      if (!is_lax_epi(F).value) return {false, "corpus equivalence not a lax epi"};
    }

  for (const FinFunctor& F : random_suite()) {
    if (!is_dsb(F).value) continue;
    ++dsbs;
    FunctorProperties p = derived_properties(F);
    if (!p.faithful || !p.conservative || !p.reflects_identities)
      return {false, "bifibration without the derived properties: '" + F.name() + "'"};
    if (is_lax_epi(F).value) {
      ++both;
      if (!is_isomorphism_functor(F))
        return {false, "bifibration and lax epi but not iso: '" + F.name() + "'"};
    }
  }

  if (!comp_e || !cancel_e || !comp_m || !cancel_m || !equivs || !dsbs || !both)
    return {false, "a closure law was only checked vacuously"};
  std::ostringstream d;
  d << "compose/cancel hits e:" << comp_e << "/" << cancel_e << " m:" << comp_m << "/"
    << cancel_m << "; " << equivs << " equivalences; " << dsbs << " bifibrations ("
    << both << " isos)";
  return {true, d.str()};
}

Line verdict_matches_right_factor() {
  int n = 0, isos = 0;
  for (const FinFunctor& F : random_suite()) {
    bool iso = is_isomorphism_functor(factorize(F).right);
    if (is_lax_epi(F).value != iso)
      return {false, "verdict and right factor disagree at '" + F.name() + "'"};
    ++n;
    isos += iso;
  }
  return {true, std::to_string(n) + " functors agree (" + std::to_string(isos) +
                    " lax epis among them)"};
}

Line order_coinserters() {
  std::vector<PreordPtr> ps = {corpus::pre_point(),    corpus::pre_discrete_pair(),
                               corpus::pre_arrow_pair(), corpus::pre_chain3(),
                               corpus::pre_iso_pair(), corpus::pre_vee(),
                               corpus::pre_diamond()};
  auto bijective = [](const MonotoneMap& f) {
    if (f.source().size() != f.target().size()) return false;
    std::vector<char> hit(f.target().size(), 0);
    for (int x = 0; x < f.source().size(); ++x) {
      if (hit[f.at(x)]) return false;
      hit[f.at(x)] = 1;
    }
    return true;
  };

  int coins = 0, maps = 0, bijs = 0;
  for (const PreordPtr& X : ps)
    for (const PreordPtr& Y : ps) {
      auto fs = enumerate_monotone(X, Y);
      if (fs.empty()) continue;
      const size_t step = fs.size() <= 4 ? 1 : fs.size() / 4;

      // Coprojections are monotone bijections and lax epis in the order world.
      for (size_t i = 0; i < fs.size(); i += step)
        for (size_t j = 0; j < fs.size(); j += step) {
          Coinserter co = make_coinserter(fs[i], fs[j]);
          if (!bijective(co.arrow)) return {false, "coprojection is not a bijection"};
          if (!is_lax_epi_preord(co.arrow).value)
            return {false, "coprojection is not an order lax epi"};
          ++coins;
        }

      // A monotone map is a bijection exactly when the coinserter of its
      // comma projections reproduces its target through it.
      for (size_t i = 0; i < fs.size(); i += step) {
        const MonotoneMap& h = fs[i];
        CommaSquare comma = comma_preord(h, h);
        Coinserter co = make_coinserter(comma.pi1, comma.pi2);
        bool order_match = co.object->size() == Y->size();
        if (order_match)
          for (int a = 0; a < X->size() && order_match; ++a)
            for (int b = 0; b < X->size() && order_match; ++b)
              if (co.object->leq(a, b) != Y->leq(h.at(a), h.at(b))) order_match = false;
        bool recovered = bijective(h) && order_match;
        if (recovered != bijective(h))
          return {false, "coinserter recovery disagrees with bijectivity at '" + h.name() + "'"};
        if (bijective(h) && !order_match)
          return {false, "bijection whose comma coinserter misses the target order"};
        ++maps;
        bijs += bijective(h);
      }
    }

  MonotoneMap div = corpus::pair_into_arrow_pre();
  if (!is_lax_epi_preord(div).value || is_lax_epi(as_functor(div)).value)
    return {false, "the order/category divergence fixture broke"};
  if (!bijs) return {false, "no bijections were exercised"};
  std::ostringstream d;
  d << coins << " coinserters; " << maps << " maps tested for recovery (" << bijs
    << " bijections); divergence fixture holds";
  return {true, d.str()};
}

Line inserter_projections() {
  auto rng = fresh_rng(5);
  std::vector<FinFunctor> kept;
  int n = 0;
  while (n < 50) {
    CatPtr A = testgen::random_category(rng, 3, 8, "A");
    CatPtr B = testgen::random_category(rng, 3, 8, "B");
    Inserter ins = make_inserter(testgen::random_functor(rng, A, B, "F"),
                                 testgen::random_functor(rng, A, B, "G"));
    if (!is_dsb(ins.projection).value)
      return {false, "an inserter projection failed the bifibration check"};
    if (kept.size() < 2) kept.push_back(ins.projection);
    ++n;
  }

  std::vector<FinFunctor> candidates = {corpus::pair_into_arrow(), corpus::arrow_embed_J(),
                                        corpus::arrow_embed_K()};
  for (const FinFunctor& p : kept) candidates.push_back(p);
  std::vector<CatPtr> probes = {corpus::terminal(), corpus::arrow_pair(),
                                corpus::gamma_target(), corpus::discrete_pair()};
  HuntReport hunt = hunt_dsb_not_inserter(candidates, probes);
  std::ostringstream d;
  d << n << " projections verified; hunt checked " << hunt.checked << ", realized "
    << hunt.realized << ", unresolved " << hunt.unrealized.size();
  return {true, d.str()};
}

Line enriched_criteria() {
  auto rng = fresh_rng(6);
  std::vector<FramePtr> frames = {boolean_frame(), chain_frame(3), diamond_frame(),
                                  powerset_frame(2)};
  int cases = 0;
  std::string fail;

  auto judge = [&](const VFunctor& j) {
    if (!fail.empty()) return;
    std::int64_t space = 1;
    for (int i = 0; i < j.target().size(); ++i) space *= j.target().frame().size();
    if (space > (1 << 12)) {
      fail = "instance exceeded the exhaustive bound";
      return;
    }
    VMeetVerdict meet = is_vlax_epi_meet(j);
    VDensityVerdict dens = is_vlax_epi_density(j);
    if (meet.value != dens.value) {
      fail = "meet and density disagree on '" + j.name() + "'";
      return;
    }
    VFunctor op = opposite(j);
    if (is_vlax_epi_meet(op).value != meet.value ||
        is_vlax_epi_density(op).value != dens.value) {
      fail = "verdict not invariant under op on '" + j.name() + "'";
      return;
    }
    ++cases;
  };

  std::vector<VCatPtr> fixtures = {corpus::vcat_asym_pair(), corpus::vcat_sym_pair(),
                                   corpus::vcat_iso_pair(), corpus::vcat_chain3()};
  for (const VCatPtr& y : fixtures)
    for (unsigned mask = 0; mask < (1u << y->size()); ++mask) {
      std::vector<std::string> objs;
      for (int i = 0; i < y->size(); ++i)
        if (mask & (1u << i)) objs.push_back(y->object_name(i));
      judge(sub_inclusion(y, objs, "sub"));
    }
  for (const VCatPtr& x : fixtures)
    for (const VCatPtr& y : fixtures) {
      if (x->frame() != y->frame()) continue;
      for (const VFunctor& j : enumerate_vfunctors(x, y)) judge(j);
    }

  for (const FramePtr& V : frames)
    for (int i = 0; i < 50 && fail.empty(); ++i) {
      VCatPtr Y = testgen::random_vcat(rng, V, 4, "Y");
      judge(testgen::random_vfunctor_into(rng, Y, 4, "j"));
      std::vector<std::string> objs;
      unsigned mask = static_cast<unsigned>(testgen::pick(rng, 1 << Y->size()));
      for (int o = 0; o < Y->size(); ++o)
        if (mask & (1u << o)) objs.push_back(Y->object_name(o));
      judge(sub_inclusion(Y, objs, "sub"));
    }

  // Two-element frame verdicts agree with the order engine.
  FramePtr two = boolean_frame();
  std::vector<PreordPtr> ps = {corpus::pre_point(), corpus::pre_arrow_pair(),
                               corpus::pre_iso_pair(), corpus::pre_vee()};
  int bridged = 0;
  for (const PreordPtr& X : ps)
    for (const PreordPtr& Y : ps)
      for (const MonotoneMap& f : enumerate_monotone(X, Y)) {
        if (!fail.empty()) break;
        VFunctor j = monotone_as_vfunctor(f, two);
        if (is_vlax_epi_meet(j).value != is_lax_epi_preord(f).value) {
          fail = "two-element frame verdict differs from the order engine";
          break;
        }
        judge(j);
        ++bridged;
      }

  if (!fail.empty()) return {false, fail};
  if (cases < 500) return {false, "only " + std::to_string(cases) + " instances, need 500"};
  std::ostringstream d;
  d << cases << " instances agree and are op-invariant (" << bridged
    << " matched against the order engine)";
  return {true, d.str()};
}

Line group_surjectivity() {
  std::vector<GroupPtr> gs;
  for (const GroupPtr& g : corpus::probe_groups())
    if (g->order() <= 8) gs.push_back(g);
  gs.push_back(klein_group());
  gs.push_back(quaternion_group());

  std::vector<GroupPtr> small_cyclics;
  for (int k = 2; k <= 8; ++k) small_cyclics.push_back(cyclic_group(k));

  int homs = 0, surjs = 0;
  for (const GroupPtr& G : gs)
    for (const GroupPtr& H : gs)
      for (const GroupHom& f : enumerate_homs(G, H)) {
        bool surj = is_surjective_hom(f);
        if (is_lax_epi_grp(f).value != surj)
          return {false, "group verdict differs from surjectivity at '" + f.name() + "'"};
        ++homs;
        if (surj) {
          std::vector<GroupPtr> probes = {f.target_ptr()};
          probes.insert(probes.end(), small_cyclics.begin(), small_cyclics.end());
          if (grp_lax_epi_refutation(f, probes).has_value())
            return {false, "refutation found against a surjective homomorphism"};
          ++surjs;
        }
      }
  if (!surjs) return {false, "no surjective homomorphisms exercised"};
  std::ostringstream d;
  d << homs << " homomorphisms between the " << gs.size() << " groups of order <= 8; "
    << surjs << " surjections pass every probe";
  return {true, d.str()};
}

int failures = 0;

template <typename Fn>
void run(int num, const std::string& label, Fn fn) {
  Line line{false, ""};
  try {
    line = fn();
  } catch (const std::exception& e) {
    line = {false, std::string("threw: ") + e.what()};
  }
  std::cout << (line.ok ? "PASS" : "FAIL") << " [" << num << "] " << label << ": "
            << line.detail << "\n";
  if (!line.ok) ++failures;
}

}  // namespace

int main() {
  run(1, "counterexample fixtures", counterexample_fixtures);
  run(2, "factorization soundness", factorization_soundness);
  run(3, "orthogonal squares and cells", orthogonal_squares);
  run(4, "closure laws", closure_laws);
  run(5, "verdict matches right factor", verdict_matches_right_factor);
  run(6, "order coinserters", order_coinserters);
  run(7, "inserter projections", inserter_projections);
  run(8, "enriched criteria", enriched_criteria);
  run(9, "group surjectivity", group_surjectivity);
  std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")"
                         : "acceptance: all nine criteria hold")
            << "\n";
  return failures ? 1 : 0;
}
