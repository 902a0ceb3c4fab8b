#!/usr/bin/env python3
"""Quantale-enriched density fixture over the 3-chain frame.

Computes, independently of the library, the two equivalent conditions for a
fully faithful inclusion of V-categories to be "dense enough" (lax epi):

  meet condition:    for all V-functors f, g : Y -> V,
                     AND_y (f y -> g y)  ==  AND_x (f(jx) -> g(jx))
  density condition: for all B, b in Y,
                     OR_a ( Y(B, ja) AND Y(ja, b) )  ==  Y(B, b)

over V = the 3-chain 0 < m < 1 (Heyting arrow a -> b = largest c with
c AND a <= b).  Output constants are frozen into test_vquant.cpp.
"""

import itertools

V = ["0", "m", "1"]
RANK = {v: i for i, v in enumerate(V)}


def vmeet(a, b):
    return a if RANK[a] <= RANK[b] else b


def vjoin(a, b):
    return a if RANK[a] >= RANK[b] else b


def varrow(a, b):
    # Largest c with c /\ a <= b, computed by scan.
    best = "0"
    for c in V:
        if RANK[vmeet(c, a)] <= RANK[b]:
            best = vjoin(best, c)
    return best


def is_vcat(obs, hom):
    for a in obs:
        if hom[(a, a)] != "1":
            return False
    for a in obs:
        for b in obs:
            for c in obs:
                if RANK[vmeet(hom[(a, b)], hom[(b, c)])] > RANK[hom[(a, c)]]:
                    return False
    return True


def vfunctors_to_v(obs, hom):
    """Maps f: obs -> V with Y(a,b) <= f(a) -> f(b)."""
    out = []
    for vals in itertools.product(V, repeat=len(obs)):
        f = dict(zip(obs, vals))
        if all(RANK[hom[(a, b)]] <= RANK[varrow(f[a], f[b])]
               for a in obs for b in obs):
            out.append(f)
    return out


def meet_condition(obs, hom, sub):
    fs = vfunctors_to_v(obs, hom)
    for f in fs:
        for g in fs:
            full = "1"
            for y in obs:
                full = vmeet(full, varrow(f[y], g[y]))
            over_sub = "1"
            for x in sub:
                over_sub = vmeet(over_sub, varrow(f[x], g[x]))
            if full != over_sub:
                return False, (f, g, full, over_sub)
    return True, None


def density_condition(obs, hom, sub):
    for B in obs:
        for b in obs:
            sup = "0"
            for a in sub:
                sup = vjoin(sup, vmeet(hom[(B, a)], hom[(a, b)]))
            if sup != hom[(B, b)]:
                return False, (B, b, sup, hom[(B, b)])
    return True, None


def report(name, obs, hom, sub):
    assert is_vcat(obs, hom), name
    nf = len(vfunctors_to_v(obs, hom))
    mc, mw = meet_condition(obs, hom, sub)
    dc, dw = density_condition(obs, hom, sub)
    print(f"{name}: |obs|={len(obs)} sub={sub} V-functors-to-V={nf} "
          f"meet={mc} density={dc}")
    if mw:
        print(f"  meet witness: f={mw[0]} g={mw[1]} full={mw[2]} sub={mw[3]}")
    if dw:
        print(f"  density witness: B={dw[0]} b={dw[1]} sup={dw[2]} "
              f"hom={dw[3]}")
    assert mc == dc, "criteria must agree"


# Two-object V-category: hom(p,q) = m, hom(q,p) = 0.  Sub-V-category {p}.
obs2 = ["p", "q"]
hom2 = {("p", "p"): "1", ("p", "q"): "m", ("q", "p"): "0", ("q", "q"): "1"}
report("asym_pair / {p}", obs2, hom2, ["p"])
report("asym_pair / {q}", obs2, hom2, ["q"])
report("asym_pair / all", obs2, hom2, ["p", "q"])

# Symmetric-at-m pair: hom(p,q) = hom(q,p) = m.  {p} is "m-dense", still short
# of the required equality at (q,q) unless m /\ m = 1.
hom2s = {("p", "p"): "1", ("p", "q"): "m", ("q", "p"): "m", ("q", "q"): "1"}
report("sym_pair / {p}", obs2, hom2s, ["p"])

# Fully isomorphic pair: both homs 1, one point suffices.
hom2i = {("p", "p"): "1", ("p", "q"): "1", ("q", "p"): "1", ("q", "q"): "1"}
report("iso_pair / {p}", obs2, hom2i, ["p"])

# Three objects, the third reachable only at level m.
obs3 = ["p", "q", "r"]
hom3 = {}
for a in obs3:
    for b in obs3:
        hom3[(a, b)] = "1" if a == b else "0"
hom3[("p", "q")] = "m"
hom3[("q", "r")] = "m"
hom3[("p", "r")] = "m"
report("chain3_cat / {p,q}", obs3, hom3, ["p", "q"])
report("chain3_cat / all", obs3, hom3, ["p", "q", "r"])
