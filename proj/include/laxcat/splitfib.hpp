#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "laxcat/laxepi.hpp"

namespace laxcat {

/// A splitting of the identity of b (object of P's target) through the image
/// of e (object of P's source): h: b -> P(e), k: P(e) -> b with k after h the
/// identity, such that additionally the triples (id_{P(e)}, e, h∘k) and
/// (h∘k, e, id_{P(e)}) lie in one component of (h∘k)-over-P.
struct Split {
  ObjId b = -1;  // object of the target
  ObjId e = -1;  // middle object, in the source
  MorId h = -1;  // b -> P(e)
  MorId k = -1;  // P(e) -> b
  friend bool operator==(const Split& x, const Split& y) {
    return x.b == y.b && x.e == y.e && x.h == y.h && x.k == y.k;
  }
};

inline bool is_split(const FinFunctor& P, const Split& s, const CommaFamily& commas) {
  const FinCat& B = P.target();
  ObjId pe = P.on_obj(s.e);
  if (B.src(s.h) != s.b || B.dst(s.h) != pe || B.src(s.k) != pe || B.dst(s.k) != s.b) return false;
  if (B.compose(s.h, s.k) != B.identity(s.b)) return false;
  MorId idem = B.compose(s.k, s.h);  // h after k: P(e) -> P(e)
  const CommaOverMorphism& comma = commas.at(idem);
  ComponentId left = comma.component_of({B.identity(pe), s.e, idem});
  ComponentId right = comma.component_of({idem, s.e, B.identity(pe)});
  return left == right;
}

/// All splittings of the identity of b, in lexicographic (e, h, k) order.
inline std::vector<Split> enumerate_splits(const FinFunctor& P, ObjId b,
                                           const CommaFamily& commas) {
  const FinCat& E = P.source();
  const FinCat& B = P.target();
  std::vector<Split> out;
  for (ObjId e = 0; e < E.num_objects(); ++e)
    for (MorId h : B.hom(b, P.on_obj(e)))
      for (MorId k : B.hom(P.on_obj(e), b)) {
        Split s{b, e, h, k};
        if (is_split(P, s, commas)) out.push_back(s);
      }
  return out;
}

/// A morphism g: b -> c together with splittings of the two identities whose
/// induced factorizations of g agree up to zig-zag: the triples
/// (top.h, top.e, g after top.k) and (bottom.h after g, bottom.e, bottom.k)
/// lie in one component of g-over-P.
struct SplitDiagram {
  MorId g = -1;
  Split top;     // splits id of src(g)
  Split bottom;  // splits id of dst(g)
};

inline CommaTriple diagram_top_triple(const FinFunctor& P, const SplitDiagram& d) {
  const FinCat& B = P.target();
  return {d.top.h, d.top.e, B.compose(d.top.k, d.g)};
}

inline CommaTriple diagram_bottom_triple(const FinFunctor& P, const SplitDiagram& d) {
  const FinCat& B = P.target();
  return {B.compose(d.g, d.bottom.h), d.bottom.e, d.bottom.k};
}

inline bool is_split_diagram(const FinFunctor& P, const SplitDiagram& d,
                             const CommaFamily& commas) {
  const FinCat& B = P.target();
  if (d.top.b != B.src(d.g) || d.bottom.b != B.dst(d.g)) return false;
  if (!is_split(P, d.top, commas) || !is_split(P, d.bottom, commas)) return false;
  const CommaOverMorphism& comma = commas.at(d.g);
  return comma.component_of(diagram_top_triple(P, d)) ==
         comma.component_of(diagram_bottom_triple(P, d));
}

/// The connecting zig-zag between the two induced factorizations of g, for a
/// valid split diagram.
inline std::optional<ZigZag> split_diagram_witness(const FinFunctor& P, const SplitDiagram& d,
                                                   const CommaFamily& commas) {
  const CommaOverMorphism& comma = commas.at(d.g);
  auto x = comma.find_object(diagram_top_triple(P, d));
  auto y = comma.find_object(diagram_bottom_triple(P, d));
  if (!x || !y) return std::nullopt;
  return comma.zigzag(*x, *y);
}

/// A candidate lift of a split diagram: a rectangle in the source whose
/// P-image reproduces the diagram letter for letter, with the middle objects
/// pinned to the e, e' named by the splits, and whose outer square commutes:
/// the composite b0 -> e -> b0 -> c0 equals b0 -> c0 -> e' -> c0.
struct SplitLift {
  ObjId b0 = -1, c0 = -1;
  MorId g0 = -1;
  MorId h_top = -1, k_top = -1;     // b0 -> e -> b0
  MorId h_bot = -1, k_bot = -1;     // c0 -> e' -> c0
  friend bool operator==(const SplitLift& x, const SplitLift& y) {
    return x.b0 == y.b0 && x.c0 == y.c0 && x.g0 == y.g0 && x.h_top == y.h_top &&
           x.k_top == y.k_top && x.h_bot == y.h_bot && x.k_bot == y.k_bot;
  }
};

namespace detail {

/// E-morphisms grouped by their P-image.
inline std::vector<std::vector<MorId>> fibers(const FinFunctor& P) {
  std::vector<std::vector<MorId>> out(P.target().num_morphisms());
  for (MorId f = 0; f < P.source().num_morphisms(); ++f) out[P.on_mor(f)].push_back(f);
  return out;
}

}  // namespace detail

/// Every lift of the diagram, in enumeration order.
inline std::vector<SplitLift> lift_split_diagram(const FinFunctor& P, const SplitDiagram& d) {
  const FinCat& E = P.source();
  auto fib = detail::fibers(P);
  std::vector<SplitLift> out;
  for (MorId h0 : fib[d.top.h]) {
    if (E.dst(h0) != d.top.e) continue;
    ObjId b0 = E.src(h0);
    for (MorId k0 : fib[d.top.k]) {
      if (E.src(k0) != d.top.e || E.dst(k0) != b0) continue;
      for (MorId h1 : fib[d.bottom.h]) {
        if (E.dst(h1) != d.bottom.e) continue;
        ObjId c0 = E.src(h1);
        for (MorId k1 : fib[d.bottom.k]) {
          if (E.src(k1) != d.bottom.e || E.dst(k1) != c0) continue;
          for (MorId g0 : fib[d.g]) {
            if (E.src(g0) != b0 || E.dst(g0) != c0) continue;
            // Outer commutativity: g0 after (k0 after h0) == (k1 after h1) after g0.
            if (E.compose(E.compose(h0, k0), g0) == E.compose(g0, E.compose(h1, k1)))
              out.push_back({b0, c0, g0, h0, k0, h1, k1});
          }
        }
      }
    }
  }
  return out;
}

/// The unique pair (h0: b0 -> e, k0: e -> b0) over a split's legs.  For a
/// discrete splitting bifibration exactly one pair exists; callers that rely
/// on that use `lifts.size() == 1`.
inline std::vector<std::pair<MorId, MorId>> split_leg_lifts(const FinFunctor& P, const Split& s) {
  const FinCat& E = P.source();
  auto fib = detail::fibers(P);
  std::vector<std::pair<MorId, MorId>> out;
  for (MorId h0 : fib[s.h]) {
    if (E.dst(h0) != s.e) continue;
    for (MorId k0 : fib[s.k])
      if (E.src(k0) == s.e && E.dst(k0) == E.src(h0)) out.emplace_back(h0, k0);
  }
  return out;
}

/// Counterexample to unique lifting: a valid split diagram together with the
/// full list of its lifts (empty or plural).
struct DsbWitness {
  SplitDiagram diagram;
  std::vector<SplitLift> lifts;
};

struct DsbVerdict {
  bool value = false;
  std::optional<DsbWitness> witness;
  explicit operator bool() const { return value; }
};

/// P is a discrete splitting bifibration iff every split diagram over every
/// morphism of the target (identities included, middle objects ranging over
/// the whole source) has exactly one lift.
inline DsbVerdict is_dsb(const FinFunctor& P) {
  const FinCat& B = P.target();
  CommaFamily commas(P);
  std::vector<std::vector<Split>> splits(B.num_objects());
  for (ObjId b = 0; b < B.num_objects(); ++b) splits[b] = enumerate_splits(P, b, commas);
  for (MorId g = 0; g < B.num_morphisms(); ++g)
    for (const Split& top : splits[B.src(g)])
      for (const Split& bottom : splits[B.dst(g)]) {
        SplitDiagram d{g, top, bottom};
        if (!is_split_diagram(P, d, commas)) continue;
        auto lifts = lift_split_diagram(P, d);
        if (lifts.size() != 1) return {false, DsbWitness{d, std::move(lifts)}};
      }
  return {true, std::nullopt};
}

/// Properties every discrete splitting bifibration enjoys; computed directly
/// so they can be cross-checked against is_dsb.
struct FunctorProperties {
  bool faithful = false;
  bool conservative = false;
  bool reflects_identities = false;
};

inline FunctorProperties derived_properties(const FinFunctor& P) {
  const FinCat& E = P.source();
  const FinCat& B = P.target();
  FunctorProperties out{true, true, true};
  for (MorId f = 0; f < E.num_morphisms(); ++f) {
    for (MorId g = 0; g < E.num_morphisms(); ++g)
      if (f != g && E.src(f) == E.src(g) && E.dst(f) == E.dst(g) && P.on_mor(f) == P.on_mor(g))
        out.faithful = false;
    if (B.is_iso(P.on_mor(f)) && !E.is_iso(f)) out.conservative = false;
    if (B.is_identity(P.on_mor(f)) && !E.is_identity(f)) out.reflects_identities = false;
  }
  return out;
}

}  // namespace laxcat
