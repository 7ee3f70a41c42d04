"""Finite-limit constructions on explicit categories.

Pullbacks, equalizers, powers, arrow categories and comma categories are
all computed as tables whose objects and morphisms are tuples of the
input identifiers, so results are strictly canonical: running the same
construction twice yields identical tables.
"""

from __future__ import annotations

from .core import (FinCategory, FunctorMap, make_category, compose_functors,
                   same_functor, all_functors, validate_functor)


def terminal_category(name="𝟙") -> FinCategory:
    return make_category(name, ["•"], [("id", "•")],
                         {("id", "•"): "•"}, {("id", "•"): "•"},
                         {"•": ("id", "•")},
                         {(("id", "•"), ("id", "•")): ("id", "•")})


def walking_arrow_category(name="𝟚") -> FinCategory:
    """The category • → • (two objects, one non-identity morphism)."""
    objs = [0, 1]
    i0, i1, a = ("id", 0), ("id", 1), ("a", 0, 1)
    mors = [i0, i1, a]
    src = {i0: 0, i1: 1, a: 0}
    tgt = {i0: 0, i1: 1, a: 1}
    compose = {(i0, i0): i0, (i1, i1): i1, (a, i0): a, (i1, a): a}
    return make_category(name, objs, mors, src, tgt, {0: i0, 1: i1}, compose)


def bang_functor(c: FinCategory, one: FinCategory, name=None) -> FunctorMap:
    """The unique functor into the terminal category."""
    star = next(iter(one.objects))
    return FunctorMap(name or f"!_{c.name}", c, one,
                      {o: star for o in c.objects},
                      {m: one.identity[star] for m in c.morphisms})


def pullback_category(F: FunctorMap, G: FunctorMap, name=None):
    """Strict pullback of ``F : A → C`` against ``G : B → C``.

    Objects are pairs ``(a, b)`` with ``F a = G b``; morphisms are pairs of
    morphisms agreeing in C.  Returns ``(category, proj_A, proj_B)``.
    """
    if F.cod.objects != G.cod.objects or F.cod.morphisms != G.cod.morphisms:
        raise ValueError(f"pullback of {F.name} and {G.name}: codomains differ")
    A, B = F.dom, G.dom
    nm = name or f"PB({F.name},{G.name})"
    by_image_obj = {}
    for b in B.objects:
        by_image_obj.setdefault(G.obj_map[b], []).append(b)
    objs = [(a, b) for a in A.objects for b in by_image_obj.get(F.obj_map[a], ())]
    by_image_mor = {}
    for n in B.morphisms:
        by_image_mor.setdefault(G.mor_map[n], []).append(n)
    mors, src, tgt = [], {}, {}
    for m in A.morphisms:
        for n in by_image_mor.get(F.mor_map[m], ()):
            mors.append((m, n))
            src[(m, n)] = (A.src[m], B.src[n])
            tgt[(m, n)] = (A.tgt[m], B.tgt[n])
    identity = {(a, b): (A.identity[a], B.identity[b]) for (a, b) in objs}
    compose = {}
    by_src = {}
    for mn in mors:
        by_src.setdefault(src[mn], []).append(mn)
    for (m, n) in mors:
        for (m2, n2) in by_src.get(tgt[(m, n)], ()):
            compose[((m2, n2), (m, n))] = (A.comp(m2, m), B.comp(n2, n))
    cat = make_category(nm, objs, mors, src, tgt, identity, compose)
    p1 = FunctorMap(f"{nm}.π1", cat, A,
                    {o: o[0] for o in objs}, {mn: mn[0] for mn in mors})
    p2 = FunctorMap(f"{nm}.π2", cat, B,
                    {o: o[1] for o in objs}, {mn: mn[1] for mn in mors})
    return cat, p1, p2


def equalizer_category(F: FunctorMap, G: FunctorMap, name=None):
    """Strict equalizer of parallel functors ``F, G : A → B``.

    The full subcategory of A on which the two functors literally agree.
    Returns ``(category, inclusion)``.
    """
    if F.dom.objects != G.dom.objects or F.cod.objects != G.cod.objects:
        raise ValueError(f"equalizer of {F.name} and {G.name}: not parallel")
    A = F.dom
    nm = name or f"EQ({F.name},{G.name})"
    objs = [o for o in A.objects if F.obj_map[o] == G.obj_map[o]]
    keep = set(objs)
    mors = [m for m in A.morphisms
            if A.src[m] in keep and A.tgt[m] in keep
            and F.mor_map[m] == G.mor_map[m]]
    kept = set(mors)
    src = {m: A.src[m] for m in mors}
    tgt = {m: A.tgt[m] for m in mors}
    identity = {o: A.identity[o] for o in objs}
    compose = {(g, f): A.comp(g, f) for (g, f) in A.compose
               if g in kept and f in kept and A.comp(g, f) in kept}
    # Closure sanity: composites of kept morphisms equalize F and G again,
    # so they are always kept.
    cat = make_category(nm, objs, mors, src, tgt, identity, compose)
    incl = FunctorMap(f"{nm}.ι", cat, A,
                      {o: o for o in objs}, {m: m for m in mors})
    return cat, incl


def power_category(c: FinCategory, n: int, name=None):
    """The n-fold product c × … × c (n = 0 gives the terminal category).

    Returns ``(category, [projections])``.
    """
    nm = name or f"{c.name}^{n}"
    if n == 0:
        return terminal_category(nm), []
    objs = [(o,) for o in c.objects]
    mors = [(m,) for m in c.morphisms]
    for _ in range(n - 1):
        objs = [t + (o,) for t in objs for o in c.objects]
        mors = [t + (m,) for t in mors for m in c.morphisms]
    src = {t: tuple(c.src[m] for m in t) for t in mors}
    tgt = {t: tuple(c.tgt[m] for m in t) for t in mors}
    identity = {t: tuple(c.identity[o] for o in t) for t in objs}
    compose = {}
    by_src = {}
    for t in mors:
        by_src.setdefault(src[t], []).append(t)
    for t in mors:
        for t2 in by_src.get(tgt[t], ()):
            compose[(t2, t)] = tuple(c.comp(a, b) for a, b in zip(t2, t))
    cat = make_category(nm, objs, mors, src, tgt, identity, compose)
    projs = [FunctorMap(f"{nm}.π{i+1}", cat, c,
                        {o: o[i] for o in objs}, {m: m[i] for m in mors})
             for i in range(n)]
    return cat, projs


def product_category(a: FinCategory, b: FinCategory, name=None):
    """Binary product of two (possibly different) categories."""
    nm = name or f"({a.name}×{b.name})"
    objs = [(x, y) for x in a.objects for y in b.objects]
    mors = [(m, n) for m in a.morphisms for n in b.morphisms]
    src = {(m, n): (a.src[m], b.src[n]) for (m, n) in mors}
    tgt = {(m, n): (a.tgt[m], b.tgt[n]) for (m, n) in mors}
    identity = {(x, y): (a.identity[x], b.identity[y]) for (x, y) in objs}
    compose = {}
    by_src = {}
    for t in mors:
        by_src.setdefault(src[t], []).append(t)
    for t in mors:
        for t2 in by_src.get(tgt[t], ()):
            compose[(t2, t)] = (a.comp(t2[0], t[0]), b.comp(t2[1], t[1]))
    cat = make_category(nm, objs, mors, src, tgt, identity, compose)
    p1 = FunctorMap(f"{nm}.π1", cat, a, {o: o[0] for o in objs}, {m: m[0] for m in mors})
    p2 = FunctorMap(f"{nm}.π2", cat, b, {o: o[1] for o in objs}, {m: m[1] for m in mors})
    return cat, p1, p2


def arrow_category(c: FinCategory, name=None):
    """The arrow category c^→: objects are morphisms of c, morphisms are
    commuting squares ``(f, g, a, b)`` with ``b∘f = g∘a``.

    Returns ``(category, dom_functor, cod_functor)``.
    """
    nm = name or f"{c.name}^→"
    objs = list(c.morphisms)
    mors, src, tgt = [], {}, {}
    for f in objs:
        for g in objs:
            for a in c.hom(c.src[f], c.src[g]):
                ga = c.comp(g, a)
                for b in c.hom(c.tgt[f], c.tgt[g]):
                    if c.comp(b, f) == ga:
                        sq = (f, g, a, b)
                        mors.append(sq)
                        src[sq] = f
                        tgt[sq] = g
    identity = {f: (f, f, c.identity[c.src[f]], c.identity[c.tgt[f]]) for f in objs}
    compose = {}
    by_src = {}
    for sq in mors:
        by_src.setdefault(src[sq], []).append(sq)
    for sq in mors:
        (f, g, a, b) = sq
        for (g1, h, a2, b2) in by_src.get(g, ()):
            compose[((g1, h, a2, b2), sq)] = (f, h, c.comp(a2, a), c.comp(b2, b))
    cat = make_category(nm, objs, mors, src, tgt, identity, compose)
    dom_f = FunctorMap(f"{nm}.dom", cat, c,
                       {f: c.src[f] for f in objs},
                       {sq: sq[2] for sq in mors})
    cod_f = FunctorMap(f"{nm}.cod", cat, c,
                       {f: c.tgt[f] for f in objs},
                       {sq: sq[3] for sq in mors})
    return cat, dom_f, cod_f


def arrow_diagonal(c: FinCategory, arrow_cat: FinCategory, name=None) -> FunctorMap:
    """The functor c → c^→ sending each object to its identity arrow."""
    return FunctorMap(name or f"I_{c.name}", c, arrow_cat,
                      {o: c.identity[o] for o in c.objects},
                      {m: (c.identity[c.src[m]], c.identity[c.tgt[m]], m, m)
                       for m in c.morphisms})


def comma_category(F: FunctorMap, G: FunctorMap, name=None):
    """The comma category F ↓ G for ``F : A → C`` and ``G : B → C``.

    Objects are triples ``(a, b, σ : F a → G b)``; morphisms are pairs of
    arrows making the evident square commute.  Returns
    ``(category, proj_A, proj_B)``.
    """
    if F.cod.objects != G.cod.objects or F.cod.morphisms != G.cod.morphisms:
        raise ValueError(f"comma of {F.name} and {G.name}: codomains differ")
    A, B, C = F.dom, G.dom, F.cod
    nm = name or f"({F.name}↓{G.name})"
    objs = [(a, b, s) for a in A.objects for b in B.objects
            for s in C.hom(F.obj_map[a], G.obj_map[b])]
    mors, src, tgt = [], {}, {}
    for o1 in objs:
        (a1, b1, s1) = o1
        for o2 in objs:
            (a2, b2, s2) = o2
            for t in A.hom(a1, a2):
                left = C.comp(s2, F.mor_map[t])
                for u in B.hom(b1, b2):
                    if C.comp(G.mor_map[u], s1) == left:
                        m = (o1, o2, t, u)
                        mors.append(m)
                        src[m] = o1
                        tgt[m] = o2
    identity = {(a, b, s): ((a, b, s), (a, b, s), A.identity[a], B.identity[b])
                for (a, b, s) in objs}
    compose = {}
    by_src = {}
    for m in mors:
        by_src.setdefault(src[m], []).append(m)
    for m in mors:
        (o1, o2, t, u) = m
        for m2 in by_src.get(o2, ()):
            (_, o3, t2, u2) = m2
            compose[(m2, m)] = (o1, o3, A.comp(t2, t), B.comp(u2, u))
    cat = make_category(nm, objs, mors, src, tgt, identity, compose)
    pa = FunctorMap(f"{nm}.πA", cat, A,
                    {o: o[0] for o in objs}, {m: m[2] for m in mors})
    pb = FunctorMap(f"{nm}.πB", cat, B,
                    {o: o[1] for o in objs}, {m: m[3] for m in mors})
    return cat, pa, pb


def joint_injectivity(p1: FunctorMap, p2: FunctorMap) -> list:
    """Check that two functors out of the same category are jointly
    injective on objects and morphisms (which forces mediating-functor
    uniqueness for the limits built here)."""
    bad = []
    seen = {}
    for o in p1.dom.objects:
        key = (p1.obj_map[o], p2.obj_map[o])
        if key in seen:
            bad.append(f"objects {seen[key]!r} and {o!r} not separated by projections")
        seen[key] = o
    seen = {}
    for m in p1.dom.morphisms:
        key = (p1.mor_map[m], p2.mor_map[m])
        if key in seen:
            bad.append(f"morphisms {seen[key]!r} and {m!r} not separated by projections")
        seen[key] = m
    return bad


def mediating_functor(kind, limit_cat, projections, legs, name=None) -> FunctorMap:
    """Canonical mediating functor of a cone into one of our limits.

    ``kind`` is "pullback", "product" or "equalizer"; ``legs`` are the cone
    functors (one per projection for pullback/product, a single functor for
    equalizer).  The result is defined pointwise by tupling the legs, which
    is the unique choice because the projections are jointly injective
    (asserted here by exhaustive check).
    """
    if kind in ("pullback", "product"):
        legs = list(legs)
        W = legs[0].dom
        if len(legs) == 2 and joint_injectivity(*projections):
            raise ValueError("limit projections are not jointly injective")
        obj_map = {o: tuple(l.obj_map[o] for l in legs) for o in W.objects}
        mor_map = {m: tuple(l.mor_map[m] for l in legs) for m in W.morphisms}
        med = FunctorMap(name or f"⟨{','.join(l.name for l in legs)}⟩",
                         W, limit_cat, obj_map, mor_map)
    elif kind == "equalizer":
        leg = legs[0] if isinstance(legs, (list, tuple)) else legs
        W = leg.dom
        med = FunctorMap(name or f"corestrict({leg.name})",
                         W, limit_cat, dict(leg.obj_map), dict(leg.mor_map))
    else:
        raise ValueError(f"unknown limit kind {kind!r}")
    bad = validate_functor(med)
    if bad:
        raise ValueError(f"cone does not factor through {limit_cat.name}: {bad[0]}")
    if kind in ("pullback", "product"):
        for proj, leg in zip(projections, legs):
            if not same_functor(compose_functors(proj, med), leg):
                raise ValueError(f"mediating functor does not commute with {proj.name}")
    else:
        incl = projections[0] if isinstance(projections, (list, tuple)) else projections
        if not same_functor(compose_functors(incl, med), legs[0] if isinstance(legs, (list, tuple)) else legs):
            raise ValueError("mediating functor does not commute with the inclusion")
    return med


def verify_pullback_universal(F, G, pb, p1, p2, apexes) -> list:
    """Brute-force universal-property check of a pullback square.

    For every commuting cone whose apex is one of ``apexes`` (enumerating
    all functors), exactly one functor into the pullback commutes with
    both projections.
    """
    bad = []
    for W in apexes:
        into_pb = all_functors(W, pb)
        for l1 in all_functors(W, F.dom):
            fl1 = compose_functors(F, l1)
            for l2 in all_functors(W, G.dom):
                if not same_functor(fl1, compose_functors(G, l2)):
                    continue
                hits = [H for H in into_pb
                        if same_functor(compose_functors(p1, H), l1)
                        and same_functor(compose_functors(p2, H), l2)]
                if len(hits) != 1:
                    bad.append(
                        f"{pb.name}: cone from {W.name} via ({l1.name},{l2.name}) "
                        f"has {len(hits)} mediating functors")
    return bad


def verify_equalizer_universal(F, G, eq, incl, apexes) -> list:
    """Brute-force universal-property check of an equalizer."""
    bad = []
    for W in apexes:
        into_eq = all_functors(W, eq)
        for leg in all_functors(W, F.dom):
            if not same_functor(compose_functors(F, leg), compose_functors(G, leg)):
                continue
            hits = [H for H in into_eq
                    if same_functor(compose_functors(incl, H), leg)]
            if len(hits) != 1:
                bad.append(f"{eq.name}: cone from {W.name} via {leg.name} "
                           f"has {len(hits)} mediating functors")
    return bad
