"""Grothendieck fibrations over a finite base.

A classifier is a functor into the context category remembered together
with its total category and (when it exists) a chosen cleavage.  All
fibrational properties — cartesianness, (op)fibration-hood, discreteness,
thinness — are decided by exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (FinCategory, FunctorMap, NatTrans, make_category,
                   sort_key, validate_functor)


@dataclass
class Classifier:
    """A functor ``proj : total → base`` packaged with fibration data."""

    name: str
    total: FinCategory
    base: FinCategory
    proj: FunctorMap
    kind: str = "functor"     # "fibration", "opfibration", "discrete", "functor"
    cleavage: dict = field(default=None, repr=False)    # (obj, base mor) -> mor
    op_cleavage: dict = field(default=None, repr=False)

    def fiber_objects(self, gamma):
        return [o for o in self.total.sorted_objects()
                if self.proj.obj_map[o] == gamma]

    def fiber_category(self, gamma) -> FinCategory:
        """The fiber over an object: vertical morphisms only."""
        objs = set(self.fiber_objects(gamma))
        vid = self.base.identity[gamma]
        mors = [m for m in self.total.morphisms
                if self.total.src[m] in objs and self.proj.mor_map[m] == vid]
        kept = set(mors)
        compose = {(g, f): h for (g, f), h in self.total.compose.items()
                   if g in kept and f in kept}
        return make_category(
            f"{self.name}({gamma})", objs, mors,
            {m: self.total.src[m] for m in mors},
            {m: self.total.tgt[m] for m in mors},
            {o: self.total.identity[o] for o in objs},
            compose)


def is_cartesian(cl: Classifier, m) -> bool:
    """Exhaustive cartesianness test for a morphism of the total category.

    ``m : E → F`` over ``σ`` is cartesian when every ``m' : E' → F`` whose
    projection factors as ``σ∘g`` lifts the factorization uniquely.
    """
    total, base, P = cl.total, cl.base, cl.proj
    E, F = total.src[m], total.tgt[m]
    sigma = P.mor_map[m]
    theta = base.src[sigma]
    for m2 in total.into(F):
        E2 = total.src[m2]
        pm2 = P.mor_map[m2]
        for g in base.hom(P.obj_map[E2], theta):
            if base.comp(sigma, g) != pm2:
                continue
            hits = 0
            for h in total.hom(E2, E):
                if P.mor_map[h] == g and total.comp(m, h) == m2:
                    hits += 1
            if hits != 1:
                return False
    return True


def is_cocartesian(cl: Classifier, m) -> bool:
    """Dual of :func:`is_cartesian` (pushforward along m)."""
    total, base, P = cl.total, cl.base, cl.proj
    E, F = total.src[m], total.tgt[m]
    sigma = P.mor_map[m]
    gamma = base.tgt[sigma]
    for m2 in total.morphisms:
        if total.src[m2] != E:
            continue
        F2 = total.tgt[m2]
        pm2 = P.mor_map[m2]
        for g in base.hom(gamma, P.obj_map[F2]):
            if base.comp(g, sigma) != pm2:
                continue
            hits = 0
            for h in total.hom(F, F2):
                if P.mor_map[h] == g and total.comp(h, m) == m2:
                    hits += 1
            if hits != 1:
                return False
    return True


def compute_cleavage(cl: Classifier):
    """Choose a cartesian lift for every (object, arrow-into-it) pair.

    Deterministic: the lift of an identity is the identity, and ties
    between candidate lifts are broken by smallest morphism identifier.
    Returns ``(cleavage, diagnostics)``.
    """
    total, base, P = cl.total, cl.base, cl.proj
    cleavage, bad = {}, []
    for F in total.sorted_objects():
        gamma = P.obj_map[F]
        for sigma in base.into(gamma):
            if base.is_identity(sigma):
                cleavage[(F, sigma)] = total.identity[F]
                continue
            cands = [m for m in total.into(F)
                     if P.mor_map[m] == sigma and is_cartesian(cl, m)]
            if not cands:
                bad.append(f"{cl.name}: no cartesian lift of {sigma!r} at {F!r}")
            else:
                cleavage[(F, sigma)] = min(cands, key=sort_key)
    return cleavage, bad


def compute_op_cleavage(cl: Classifier):
    """Dual of :func:`compute_cleavage` (cocartesian lifts)."""
    total, base, P = cl.total, cl.base, cl.proj
    cleavage, bad = {}, []
    out_of = {}
    for m in total.sorted_morphisms():
        out_of.setdefault(total.src[m], []).append(m)
    for E in total.sorted_objects():
        theta = P.obj_map[E]
        for sigma in base.morphisms:
            if base.src[sigma] != theta:
                continue
            if base.is_identity(sigma):
                cleavage[(E, sigma)] = total.identity[E]
                continue
            cands = [m for m in out_of.get(E, ())
                     if P.mor_map[m] == sigma and is_cocartesian(cl, m)]
            if not cands:
                bad.append(f"{cl.name}: no cocartesian lift of {sigma!r} at {E!r}")
            else:
                cleavage[(E, sigma)] = min(cands, key=sort_key)
    return cleavage, bad


def cartesian_lift(cl: Classifier, obj, sigma):
    """The chosen cartesian lift of ``sigma`` at ``obj`` (cleavage lookup)."""
    if cl.cleavage is None:
        cl.cleavage, bad = compute_cleavage(cl)
        if bad:
            raise ValueError(bad[0])
    return cl.cleavage[(obj, sigma)]


def is_discrete(cl: Classifier) -> list:
    """Unique-lift check: exactly one morphism over each arrow into each
    object's image, and fibers contain only identities."""
    total, base, P = cl.total, cl.base, cl.proj
    bad = []
    for F in total.objects:
        gamma = P.obj_map[F]
        for sigma in base.morphisms:
            if base.tgt[sigma] != gamma:
                continue
            lifts = [m for m in total.into(F) if P.mor_map[m] == sigma]
            if len(lifts) != 1:
                bad.append(f"{cl.name}: {len(lifts)} lifts of {sigma!r} at {F!r}")
    return bad


def is_thin(cl: Classifier) -> list:
    """At most one morphism between two total objects over each base arrow."""
    total, P = cl.total, cl.proj
    seen = {}
    bad = []
    for m in total.morphisms:
        key = (total.src[m], total.tgt[m], P.mor_map[m])
        if key in seen:
            bad.append(f"{cl.name}: parallel morphisms {seen[key]!r}, {m!r} "
                       f"over {key[2]!r}")
        seen[key] = m
    return bad


def verify_kind(cl: Classifier, expect=None, check_thin=False) -> list:
    """Classify a classifier (fibration / opfibration / discrete) and
    populate its cleavage(s).  Returns diagnostics; ``expect`` (if given)
    adds a diagnostic when the computed kind does not include it."""
    bad = validate_functor(cl.proj)
    if bad:
        return bad
    kinds = []
    cleavage, fib_bad = compute_cleavage(cl)
    if not fib_bad:
        kinds.append("fibration")
        cl.cleavage = cleavage
    opcleavage, opfib_bad = compute_op_cleavage(cl)
    if not opfib_bad:
        kinds.append("opfibration")
        cl.op_cleavage = opcleavage
    if not is_discrete(cl):
        kinds.append("discrete")
    if check_thin or (expect and "thin" in expect):
        if not is_thin(cl):
            kinds.append("thin")
    cl.kind = "+".join(kinds) if kinds else "functor"
    if expect:
        have = set(kinds)
        for want in expect.split("+"):
            if want not in have:
                reason = fib_bad or opfib_bad or [f"{cl.name}: not {want}"]
                bad.append(f"{cl.name}: expected {want}, got {cl.kind}: {reason[0]}")
    return bad


@dataclass
class IndexedData:
    """A strict contravariant indexing: a fiber category per base object
    and a restriction functor per base morphism."""

    name: str
    base: FinCategory
    fibers: dict        # base object -> FinCategory
    restrictions: dict  # base morphism σ: Θ→Γ -> FunctorMap fiber(Γ) → fiber(Θ)


def validate_indexed(ix: IndexedData) -> list:
    bad = []
    for o in ix.base.objects:
        if o not in ix.fibers:
            bad.append(f"{ix.name}: missing fiber over {o!r}")
    for m in ix.base.morphisms:
        if m not in ix.restrictions:
            bad.append(f"{ix.name}: missing restriction along {m!r}")
    if bad:
        return bad
    for m in ix.base.morphisms:
        r = ix.restrictions[m]
        bad += validate_functor(r)
        if r.dom.objects != ix.fibers[ix.base.tgt[m]].objects:
            bad.append(f"{ix.name}: restriction along {m!r} has wrong domain")
        if r.cod.objects != ix.fibers[ix.base.src[m]].objects:
            bad.append(f"{ix.name}: restriction along {m!r} has wrong codomain")
    if bad:
        return bad
    for o in ix.base.objects:
        r = ix.restrictions[ix.base.identity[o]]
        if any(r.obj_map[x] != x for x in r.dom.objects) or \
           any(r.mor_map[x] != x for x in r.dom.morphisms):
            bad.append(f"{ix.name}: restriction along id_{o!r} is not the identity")
    for (g, f), h in ix.base.compose.items():
        rg, rf, rh = ix.restrictions[g], ix.restrictions[f], ix.restrictions[h]
        for x in rg.dom.objects:
            if rf.obj_map[rg.obj_map[x]] != rh.obj_map[x]:
                bad.append(f"{ix.name}: strict functoriality fails at ({g!r},{f!r})")
                break
    return bad


def grothendieck_construct(ix: IndexedData, name=None) -> Classifier:
    """Total category of a strict indexing, with its canonical projection
    and split cleavage (lift of σ at (Γ,φ) is (σ, id over the restriction)).
    """
    nm = name or f"∫{ix.name}"
    base = ix.base
    objs, mors, src, tgt = [], [], {}, {}
    for gamma in base.objects:
        for phi in ix.fibers[gamma].objects:
            objs.append((gamma, phi))
    # A morphism (Θ,ψ) → (Γ,φ) is (σ: Θ→Γ, φ, α: ψ → σ*φ vertical over Θ).
    for sigma in base.morphisms:
        theta, gamma = base.src[sigma], base.tgt[sigma]
        r = ix.restrictions[sigma]
        fib = ix.fibers[theta]
        for phi in ix.fibers[gamma].objects:
            rphi = r.obj_map[phi]
            for alpha in fib.morphisms:
                if fib.tgt[alpha] != rphi:
                    continue
                m = (sigma, phi, alpha)
                mors.append(m)
                src[m] = (theta, fib.src[alpha])
                tgt[m] = (gamma, phi)
    identity = {}
    for (gamma, phi) in objs:
        identity[(gamma, phi)] = (base.identity[gamma], phi,
                                  ix.fibers[gamma].identity[phi])
    compose = {}
    by_src = {}
    for m in mors:
        by_src.setdefault(src[m], []).append(m)
    for m in mors:  # m = (τ, ψ, β): (Ξ,χ) → (Θ,ψ)
        tau, psi, beta = m
        xi = base.src[tau]
        rt = ix.restrictions[tau]
        fib_xi = ix.fibers[xi]
        for m2 in by_src.get(tgt[m], ()):  # m2 = (σ, φ, α): (Θ,ψ) → (Γ,φ)
            sigma, phi, alpha = m2
            compose[(m2, m)] = (base.comp(sigma, tau), phi,
                                fib_xi.comp(rt.mor_map[alpha], beta))
    total = make_category(nm, objs, mors, src, tgt, identity, compose)
    proj = FunctorMap(f"{nm}.p", total, base,
                      {o: o[0] for o in objs}, {m: m[0] for m in mors})
    cl = Classifier(nm, total, base, proj, kind="fibration")
    cl.cleavage = {}
    for (gamma, phi) in objs:
        for sigma in base.into(gamma):
            theta = base.src[sigma]
            rphi = ix.restrictions[sigma].obj_map[phi]
            cl.cleavage[((gamma, phi), sigma)] = \
                (sigma, phi, ix.fibers[theta].identity[rphi])
    return cl


def slice_classifier(ctx: FinCategory, gamma, name=None) -> Classifier:
    """The slice ctx_{/Γ} with its domain projection (a discrete fibration).

    Objects are arrows into Γ; morphisms (σ', σ, τ) are triangles σ∘τ = σ'.
    """
    nm = name or f"{ctx.name}/{gamma}"
    objs = list(ctx.into(gamma))
    mors, src, tgt = [], {}, {}
    for s1 in objs:
        for s2 in objs:
            for tau in ctx.hom(ctx.src[s1], ctx.src[s2]):
                if ctx.comp(s2, tau) == s1:
                    m = (s1, s2, tau)
                    mors.append(m)
                    src[m] = s1
                    tgt[m] = s2
    identity = {s: (s, s, ctx.identity[ctx.src[s]]) for s in objs}
    compose = {}
    by_src = {}
    for m in mors:
        by_src.setdefault(src[m], []).append(m)
    for m in mors:
        (s1, s2, tau) = m
        for m2 in by_src.get(s2, ()):
            (_, s3, tau2) = m2
            compose[(m2, m)] = (s1, s3, ctx.comp(tau2, tau))
    total = make_category(nm, objs, mors, src, tgt, identity, compose)
    proj = FunctorMap(f"{nm}.dom", total, ctx,
                      {s: ctx.src[s] for s in objs}, {m: m[2] for m in mors})
    return Classifier(nm, total, ctx, proj, kind="discrete")


def coslice_classifier(ctx: FinCategory, gamma, name=None) -> Classifier:
    """The coslice ctx_{Γ/} with its codomain projection."""
    nm = name or f"{gamma}\\{ctx.name}"
    objs = [m for m in ctx.sorted_morphisms() if ctx.src[m] == gamma]
    mors, src, tgt = [], {}, {}
    for s1 in objs:
        for s2 in objs:
            for tau in ctx.hom(ctx.tgt[s1], ctx.tgt[s2]):
                if ctx.comp(tau, s1) == s2:
                    m = (s1, s2, tau)
                    mors.append(m)
                    src[m] = s1
                    tgt[m] = s2
    identity = {s: (s, s, ctx.identity[ctx.tgt[s]]) for s in objs}
    compose = {}
    by_src = {}
    for m in mors:
        by_src.setdefault(src[m], []).append(m)
    for m in mors:
        (s1, s2, tau) = m
        for m2 in by_src.get(s2, ()):
            (_, s3, tau2) = m2
            compose[(m2, m)] = (s1, s3, ctx.comp(tau2, tau))
    total = make_category(nm, objs, mors, src, tgt, identity, compose)
    proj = FunctorMap(f"{nm}.cod", total, ctx,
                      {s: ctx.tgt[s] for s in objs}, {m: m[2] for m in mors})
    return Classifier(nm, total, ctx, proj, kind="functor")


def yoneda_fiber_functor(cl: Classifier, F, name=None):
    """The functor ctx_{/Γ} → total sending σ: Θ → Γ to the domain of the
    chosen cartesian lift of σ at F (with Γ the image of F).

    Witnesses the fibrational Yoneda correspondence: sections of the
    fibration over the slice correspond to objects of the fiber.
    Returns ``(slice_classifier, functor)``.
    """
    gamma = cl.proj.obj_map[F]
    sl = slice_classifier(cl.base, gamma)
    total = cl.total
    obj_map, lift_of = {}, {}
    for s in sl.total.objects:
        m = cartesian_lift(cl, F, s)
        obj_map[s] = total.src[m]
        lift_of[s] = m
    mor_map = {}
    for (s1, s2, tau) in sl.total.morphisms:
        hits = [h for h in total.hom(obj_map[s1], obj_map[s2])
                if cl.proj.mor_map[h] == tau
                and total.comp(lift_of[s2], h) == lift_of[s1]]
        if len(hits) != 1:
            raise ValueError(
                f"{cl.name}: {len(hits)} factorizations through the lift of "
                f"{s2!r} at {F!r} over {tau!r}")
        mor_map[(s1, s2, tau)] = hits[0]
    fun = FunctorMap(name or f"y({F})", sl.total, total, obj_map, mor_map)
    return sl, fun


def is_cartesian_functor(F: FunctorMap, cl_dom: Classifier, cl_cod: Classifier) -> list:
    """Morphism-of-fibrations check: F commutes with the projections and
    sends the chosen cartesian lifts to cartesian morphisms."""
    bad = []
    for o in cl_dom.total.objects:
        if cl_cod.proj.obj_map.get(F.obj_map[o]) is None:
            return [f"{F.name}: image of {o!r} not in {cl_cod.name}"]
    if cl_dom.cleavage is None:
        cl_dom.cleavage, cbad = compute_cleavage(cl_dom)
        if cbad:
            return cbad
    for (obj, sigma), m in cl_dom.cleavage.items():
        if cl_dom.total.is_identity(m):
            continue
        if not is_cartesian(cl_cod, F.mor_map[m]):
            bad.append(f"{F.name}: image of the lift of {sigma!r} at {obj!r} "
                       f"is not cartesian")
    return bad


def is_cartesian_nat_trans(t: NatTrans, cl: Classifier) -> list:
    """Check every component of a transformation is cartesian for cl."""
    bad = []
    for o, m in t.components.items():
        if not is_cartesian(cl, m):
            bad.append(f"{t.name}: component at {o!r} is not cartesian")
    return bad
