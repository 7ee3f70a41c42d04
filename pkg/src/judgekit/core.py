"""Explicit finite categories with total composition tables.

Everything downstream (limits, fibrations, derived deduction rules) is
built on four kinds of data: finite categories, functors between them,
natural transformations, and adjunctions.  All of them are plain tables,
and all laws are checked by exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product


def sort_key(x):
    """Deterministic ordering key for arbitrary (hashable) identifiers."""
    return (x.__class__.__name__, repr(x))


@dataclass
class FinCategory:
    """A finite category given by explicit tables.

    * ``objects`` and ``morphisms`` are sets of hashable identifiers.
    * ``src``/``tgt`` assign endpoints to every morphism.
    * ``identity`` maps each object to its identity morphism.
    * ``compose`` maps every composable pair ``(g, f)`` (meaning g after f)
      to the composite morphism.
    """

    name: str
    objects: frozenset
    morphisms: frozenset
    src: dict
    tgt: dict
    identity: dict
    compose: dict
    _hom: dict = field(default=None, repr=False, compare=False)
    _into: dict = field(default=None, repr=False, compare=False)

    def id_of(self, obj):
        return self.identity[obj]

    def comp(self, g, f):
        """Composite ``g ∘ f`` (first f, then g)."""
        return self.compose[(g, f)]

    def is_identity(self, m):
        return self.identity.get(self.src[m]) == m

    def hom(self, a, b):
        """All morphisms a → b, deterministically ordered."""
        if self._hom is None:
            table = {}
            for m in sorted(self.morphisms, key=sort_key):
                table.setdefault((self.src[m], self.tgt[m]), []).append(m)
            self._hom = table
        return self._hom.get((a, b), [])

    def into(self, b):
        """All morphisms with target b, deterministically ordered."""
        if self._into is None:
            table = {}
            for m in sorted(self.morphisms, key=sort_key):
                table.setdefault(self.tgt[m], []).append(m)
            self._into = table
        return self._into.get(b, [])

    def sorted_objects(self):
        return sorted(self.objects, key=sort_key)

    def sorted_morphisms(self):
        return sorted(self.morphisms, key=sort_key)

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self.into_from(self.tgt[f]):
                yield g, f

    def into_from(self, a):
        """All morphisms with source a."""
        return [m for m in self.morphisms if self.src[m] == a]


def make_category(name, objects, morphisms, src, tgt, identity, compose):
    return FinCategory(
        name=name,
        objects=frozenset(objects),
        morphisms=frozenset(morphisms),
        src=dict(src),
        tgt=dict(tgt),
        identity=dict(identity),
        compose=dict(compose),
    )


def validate_category(c: FinCategory) -> list:
    """Exhaustively check the category laws.  Returns diagnostics ([] = ok)."""
    bad = []
    for m in c.morphisms:
        if m not in c.src or m not in c.tgt:
            bad.append(f"{c.name}: morphism {m!r} lacks endpoints")
            return bad
        if c.src[m] not in c.objects or c.tgt[m] not in c.objects:
            bad.append(f"{c.name}: morphism {m!r} has endpoints outside the object set")
    for o in c.objects:
        i = c.identity.get(o)
        if i is None or i not in c.morphisms:
            bad.append(f"{c.name}: object {o!r} has no identity morphism")
        elif c.src[i] != o or c.tgt[i] != o:
            bad.append(f"{c.name}: identity of {o!r} is not an endomorphism")
    if bad:
        return bad
    # Composition is total on composable pairs and only on them.
    for (g, f), h in c.compose.items():
        if g not in c.morphisms or f not in c.morphisms or h not in c.morphisms:
            bad.append(f"{c.name}: composition entry ({g!r}, {f!r}) mentions unknown morphisms")
            return bad
        if c.tgt[f] != c.src[g]:
            bad.append(f"{c.name}: composition defined on non-composable pair ({g!r}, {f!r})")
        elif c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
            bad.append(f"{c.name}: composite of ({g!r}, {f!r}) has wrong endpoints")
    for f in c.morphisms:
        for g in c.morphisms:
            if c.tgt[f] == c.src[g] and (g, f) not in c.compose:
                bad.append(f"{c.name}: composition missing for ({g!r}, {f!r})")
    if bad:
        return bad
    # Unit laws.
    for f in c.morphisms:
        if c.comp(f, c.identity[c.src[f]]) != f:
            bad.append(f"{c.name}: right unit law fails at {f!r}")
        if c.comp(c.identity[c.tgt[f]], f) != f:
            bad.append(f"{c.name}: left unit law fails at {f!r}")
    # Associativity.
    by_src = {}
    for m in c.morphisms:
        by_src.setdefault(c.src[m], []).append(m)
    for f in c.morphisms:
        for g in by_src.get(c.tgt[f], ()):
            gf = c.comp(g, f)
            for h in by_src.get(c.tgt[g], ()):
                if c.comp(h, gf) != c.comp(c.comp(h, g), f):
                    bad.append(f"{c.name}: associativity fails at ({h!r}, {g!r}, {f!r})")
    return bad


def terminal_objects(c: FinCategory) -> list:
    """Objects receiving exactly one morphism from every object."""
    return [t for t in c.sorted_objects()
            if all(len(c.hom(a, t)) == 1 for a in c.objects)]


@dataclass
class FunctorMap:
    """A functor given by explicit object and morphism tables."""

    name: str
    dom: FinCategory
    cod: FinCategory
    obj_map: dict
    mor_map: dict

    def on_obj(self, o):
        return self.obj_map[o]

    def on_mor(self, m):
        return self.mor_map[m]


def identity_functor(c: FinCategory, name=None) -> FunctorMap:
    return FunctorMap(
        name=name or f"id_{c.name}",
        dom=c,
        cod=c,
        obj_map={o: o for o in c.objects},
        mor_map={m: m for m in c.morphisms},
    )


def compose_functors(g: FunctorMap, f: FunctorMap, name=None) -> FunctorMap:
    if f.cod.name != g.dom.name:
        raise ValueError(f"cannot compose {g.name} after {f.name}: middle categories differ")
    return FunctorMap(
        name=name or f"({g.name}∘{f.name})",
        dom=f.dom,
        cod=g.cod,
        obj_map={o: g.obj_map[f.obj_map[o]] for o in f.dom.objects},
        mor_map={m: g.mor_map[f.mor_map[m]] for m in f.dom.morphisms},
    )


def validate_functor(F: FunctorMap) -> list:
    """Exhaustively check functoriality.  Returns diagnostics ([] = ok)."""
    bad = []
    c, d = F.dom, F.cod
    for o in c.objects:
        if o not in F.obj_map:
            bad.append(f"{F.name}: no image for object {o!r}")
        elif F.obj_map[o] not in d.objects:
            bad.append(f"{F.name}: object image {F.obj_map[o]!r} not in {d.name}")
    for m in c.morphisms:
        if m not in F.mor_map:
            bad.append(f"{F.name}: no image for morphism {m!r}")
    if bad:
        return bad
    for m in c.morphisms:
        fm = F.mor_map[m]
        if fm not in d.morphisms:
            bad.append(f"{F.name}: morphism image {fm!r} not in {d.name}")
        elif (d.src[fm] != F.obj_map[c.src[m]] or d.tgt[fm] != F.obj_map[c.tgt[m]]):
            bad.append(f"{F.name}: image of {m!r} has wrong endpoints")
    if bad:
        return bad
    for o in c.objects:
        if F.mor_map[c.identity[o]] != d.identity[F.obj_map[o]]:
            bad.append(f"{F.name}: identity of {o!r} not preserved")
    for (g, f), h in c.compose.items():
        if d.comp(F.mor_map[g], F.mor_map[f]) != F.mor_map[h]:
            bad.append(f"{F.name}: composition not preserved at ({g!r}, {f!r})")
    return bad


def same_functor(F: FunctorMap, G: FunctorMap) -> bool:
    """Table equality of two functors (strict identifier equality)."""
    return (F.dom.objects == G.dom.objects
            and F.dom.morphisms == G.dom.morphisms
            and F.obj_map == G.obj_map
            and F.mor_map == G.mor_map)


@dataclass
class NatTrans:
    """A natural transformation ``source ⇒ target`` as a component table."""

    name: str
    source: FunctorMap
    target: FunctorMap
    components: dict  # object of source.dom -> morphism of source.cod

    def at(self, o):
        return self.components[o]


def validate_nat_trans(t: NatTrans) -> list:
    """Exhaustively check every naturality square.  Returns diagnostics."""
    bad = []
    F, G = t.source, t.target
    if F.dom.objects != G.dom.objects or F.cod.objects != G.cod.objects:
        return [f"{t.name}: source and target functors are not parallel"]
    c, d = F.dom, F.cod
    for o in c.objects:
        m = t.components.get(o)
        if m is None or m not in d.morphisms:
            bad.append(f"{t.name}: missing or alien component at {o!r}")
        elif d.src[m] != F.obj_map[o] or d.tgt[m] != G.obj_map[o]:
            bad.append(f"{t.name}: component at {o!r} has wrong endpoints")
    if bad:
        return bad
    for f in c.morphisms:
        a, b = c.src[f], c.tgt[f]
        left = d.comp(t.components[b], F.mor_map[f])
        right = d.comp(G.mor_map[f], t.components[a])
        if left != right:
            bad.append(f"{t.name}: naturality square fails at {f!r}")
    return bad


def identity_nat_trans(F: FunctorMap, name=None) -> NatTrans:
    return NatTrans(
        name=name or f"id_{F.name}",
        source=F,
        target=F,
        components={o: F.cod.identity[F.obj_map[o]] for o in F.dom.objects},
    )


def whisker_left(H: FunctorMap, t: NatTrans, name=None) -> NatTrans:
    """Post-compose: ``H·t : H∘source ⇒ H∘target`` with components H(t_o)."""
    return NatTrans(
        name=name or f"({H.name}·{t.name})",
        source=compose_functors(H, t.source),
        target=compose_functors(H, t.target),
        components={o: H.mor_map[t.components[o]] for o in t.source.dom.objects},
    )


def whisker_right(t: NatTrans, K: FunctorMap, name=None) -> NatTrans:
    """Pre-compose: ``t·K : source∘K ⇒ target∘K`` with components t_{K o}."""
    return NatTrans(
        name=name or f"({t.name}·{K.name})",
        source=compose_functors(t.source, K),
        target=compose_functors(t.target, K),
        components={o: t.components[K.obj_map[o]] for o in K.dom.objects},
    )


def vertical_compose(u: NatTrans, t: NatTrans, name=None) -> NatTrans:
    """``u ∘ t`` where t: F ⇒ G and u: G ⇒ H."""
    d = t.source.cod
    return NatTrans(
        name=name or f"({u.name}∘{t.name})",
        source=t.source,
        target=u.target,
        components={o: d.comp(u.components[o], t.components[o])
                    for o in t.source.dom.objects},
    )


@dataclass
class AdjunctionData:
    """An adjunction ``left ⊣ right`` with explicit unit and counit."""

    name: str
    left: FunctorMap   # F : A → B
    right: FunctorMap  # G : B → A
    unit: NatTrans     # Id_A ⇒ G∘F
    counit: NatTrans   # F∘G ⇒ Id_B


def check_adjunction(adj: AdjunctionData) -> list:
    """Check unit/counit naturality and both triangle identities."""
    bad = []
    F, G = adj.left, adj.right
    A, B = F.dom, G.dom
    if F.cod.objects != B.objects or G.cod.objects != A.objects:
        return [f"{adj.name}: functor endpoints do not match"]
    bad += validate_functor(F)
    bad += validate_functor(G)
    bad += validate_nat_trans(adj.unit)
    bad += validate_nat_trans(adj.counit)
    if bad:
        return bad
    for a in A.objects:
        # counit_{F a} ∘ F(unit_a) = id_{F a}
        lhs = B.comp(adj.counit.components[F.obj_map[a]],
                     F.mor_map[adj.unit.components[a]])
        if lhs != B.identity[F.obj_map[a]]:
            bad.append(f"{adj.name}: triangle identity (left leg) fails at {a!r}")
    for b in B.objects:
        # G(counit_b) ∘ unit_{G b} = id_{G b}
        lhs = A.comp(G.mor_map[adj.counit.components[b]],
                     adj.unit.components[G.obj_map[b]])
        if lhs != A.identity[G.obj_map[b]]:
            bad.append(f"{adj.name}: triangle identity (right leg) fails at {b!r}")
    return bad


def check_category_iso(F: FunctorMap):
    """Check that F is an isomorphism of categories.

    Returns ``(diagnostics, inverse_or_None)``; the inverse is produced only
    when the check succeeds.
    """
    bad = validate_functor(F)
    if bad:
        return bad, None
    c, d = F.dom, F.cod
    obj_inv, mor_inv = {}, {}
    for o in c.objects:
        img = F.obj_map[o]
        if img in obj_inv:
            bad.append(f"{F.name}: objects {obj_inv[img]!r} and {o!r} collide at {img!r}")
        obj_inv[img] = o
    for m in c.morphisms:
        img = F.mor_map[m]
        if img in mor_inv:
            bad.append(f"{F.name}: morphisms {mor_inv[img]!r} and {m!r} collide at {img!r}")
        mor_inv[img] = m
    for o in d.objects:
        if o not in obj_inv:
            bad.append(f"{F.name}: object {o!r} of {d.name} is not hit")
    for m in d.morphisms:
        if m not in mor_inv:
            bad.append(f"{F.name}: morphism {m!r} of {d.name} is not hit")
    if bad:
        return bad, None
    inverse = FunctorMap(
        name=f"{F.name}⁻¹", dom=d, cod=c, obj_map=obj_inv, mor_map=mor_inv)
    return [], inverse


def all_functors(c: FinCategory, d: FinCategory):
    """Enumerate every functor c → d (exhaustive; use on tiny categories)."""
    objs = c.sorted_objects()
    results = []
    for images in product(d.sorted_objects(), repeat=len(objs)):
        obj_map = dict(zip(objs, images))
        mors = c.sorted_morphisms()
        choices = []
        ok = True
        for m in mors:
            cands = d.hom(obj_map[c.src[m]], obj_map[c.tgt[m]])
            if c.is_identity(m):
                cands = [d.identity[obj_map[c.src[m]]]]
            if not cands:
                ok = False
                break
            choices.append(cands)
        if not ok:
            continue
        for picks in product(*choices):
            F = FunctorMap("cand", c, d, obj_map, dict(zip(mors, picks)))
            if not validate_functor(F):
                results.append(F)
    return results
