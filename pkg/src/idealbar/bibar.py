"""Bisimplicial object attached to a morphism of crossed modules.

Bilevel (n, m) is B2_n x (B1_n)^m, where B1 and B2 are the bar objects
of the source and target crossed modules.  The comparison maps

    phi_n(s1, r_1 .. r_n) = (alpha2 s1, alpha1 r_1, .., alpha1 r_n)

let B1_n act on B2_n by translation, and row n of the bisimplicial
object is the bar object of that action.  Columns are simplicial through
the blockwise operators of the two bars.  The verifier checks simplicial
identities in both directions, commutation of every mixed pair, and
multiplicativity of the vertical operators for the componentwise level
products.
"""

from __future__ import annotations

from .bar import (TruncatedBarAlgebra, TruncatedBarModule,
                  verify_simplicial_identities)
from .core import (Algebra, BilinearMap, ModuleHom, StructuralError,
                   direct_sum, identity_hom, maps_equal_report,
                   multiplicativity_report)
from .crossed_ideal import XModMorphism
from .policy import Policy
from .report import NOTE, THEOREM, Report, group, leaf
from .xmod import ModuleAction

CONVENTIONS = (
    ("rows-are-translation-bars",
     "row n is the bar object of B1_n acting on B2_n by translation "
     "through phi_n; the first letter block is the one d0 consumes"),
    ("columns-are-blockwise",
     "vertical operators apply the level-n bar operator of the target to "
     "the base block and the one of the source to every letter block"),
    ("commutation-scope",
     "every horizontal operator must commute with every vertical one "
     "inside the truncation, mixed degeneracy families included"),
)


def phi_maps(morphism: XModMorphism, n_depth: int, drop=()) -> list[ModuleHom]:
    """The comparison maps phi_0 .. phi_N as module homs between bar
    levels.  drop is a collection of (n, j) pairs; letter j of phi_n is
    sent to zero instead of through alpha1 there, which breaks the
    square with the face maps and serves as the negative control."""
    drop = set(drop)
    src, tgt = morphism.source, morphism.target
    s1m, r1m = src.s_alg.carrier, src.r_alg.carrier
    s2m, r2m = tgt.s_alg.carrier, tgt.r_alg.carrier
    a1, a2 = morphism.alpha1.apply, morphism.alpha2.apply
    out = []
    for n in range(n_depth + 1):
        dom = direct_sum([s1m] + [r1m] * n)
        cod = direct_sum([s2m] + [r2m] * n)

        def fn(t, n=n):
            img = list(a2(t[:s1m.rank]))
            for j in range(n):
                blk = t[s1m.rank + j * r1m.rank: s1m.rank + (j + 1) * r1m.rank]
                img.extend(r2m.zero if (n, j) in drop else a1(blk))
            return tuple(img)

        images = [fn(g) for g in dom.generators()]
        out.append(ModuleHom(dom, cod, images, fn=fn, name=f"phi@{n}"))
    return out


class BiBar:
    """Truncated bisimplicial module of a crossed module morphism, with
    componentwise products at every bilevel."""

    def __init__(self, morphism: XModMorphism, n_depth: int = 2,
                 m_depth: int = 2, phi: list[ModuleHom] | None = None):
        self.morphism = morphism
        self.n_depth = n_depth
        self.m_depth = m_depth
        self.bar1 = TruncatedBarAlgebra(morphism.source, n_depth)
        self.bar2 = TruncatedBarAlgebra(morphism.target, n_depth)
        self.phi = phi if phi is not None else phi_maps(morphism, n_depth)
        if len(self.phi) != n_depth + 1:
            raise StructuralError("one phi per row is required")
        for n, p in enumerate(self.phi):
            if p.domain != self.bar1.levels[n] or p.codomain != self.bar2.levels[n]:
                raise StructuralError(f"phi@{n} must map B1_{n} to B2_{n}")
        self.notes = CONVENTIONS

        self.rows = []
        for n in range(n_depth + 1):
            base = self.bar2.levels[n]
            act = ModuleAction.from_function(
                self.bar1.algebras[n], base,
                lambda x, w, n=n, base=base: base.add(x, self.phi[n].apply(w)))
            self.rows.append(TruncatedBarModule(act, m_depth))

        self._vfaces = {}
        self._vdegens = {}
        for m in range(m_depth + 1):
            for n in range(1, n_depth + 1):
                for i in range(n + 1):
                    self._vfaces[(n, m, i)] = self._build_vertical(
                        n, m, i, self.bar2.face(n, i), self.bar1.face(n, i),
                        n - 1, f"dv{i}@({n},{m})")
            for n in range(n_depth):
                for i in range(n + 1):
                    self._vdegens[(n, m, i)] = self._build_vertical(
                        n, m, i, self.bar2.degen(n, i), self.bar1.degen(n, i),
                        n + 1, f"sv{i}@({n},{m})")
        self._algebras = {}

    def level(self, n, m):
        return self.rows[n].levels[m]

    def split(self, t, n, m):
        return self.rows[n].split(t, m)

    def join(self, n, x, blocks):
        return self.rows[n].join(x, blocks)

    def h_face(self, n, m, i) -> ModuleHom:
        return self.rows[n].face(m, i)

    def h_degen(self, n, m, i) -> ModuleHom:
        return self.rows[n].degen(m, i)

    def v_face(self, n, m, i) -> ModuleHom:
        return self._vfaces[(n, m, i)]

    def v_degen(self, n, m, i) -> ModuleHom:
        return self._vdegens[(n, m, i)]

    def _build_vertical(self, n, m, i, base_op, letter_op, n_out, name):
        def fn(t):
            x, ws = self.rows[n].split(t, m)
            return self.rows[n_out].join(base_op.apply(x),
                                         [letter_op.apply(w) for w in ws])

        dom, cod = self.level(n, m), self.rows[n_out].levels[m]
        images = [fn(g) for g in dom.generators()]
        return ModuleHom(dom, cod, images, fn=fn, name=name)

    def multiply(self, n, m, u, v):
        xu, wu = self.split(u, n, m)
        xv, wv = self.split(v, n, m)
        x = self.bar2.multiply(n, xu, xv)
        ws = [self.bar1.multiply(n, a, b) for a, b in zip(wu, wv)]
        return self.join(n, x, ws)

    def algebra(self, n, m) -> Algebra:
        """Componentwise product algebra at bilevel (n, m)."""
        key = (n, m)
        if key not in self._algebras:
            carrier = self.level(n, m)
            gens = carrier.generators()
            constants = [[self.multiply(n, m, gi, gj) for gj in gens]
                         for gi in gens]
            self._algebras[key] = Algebra(
                carrier, BilinearMap(carrier, carrier, carrier, constants),
                name=f"B({n},{m})")
        return self._algebras[key]


def build_bibar(morphism: XModMorphism, n_depth: int = 2, m_depth: int = 2,
                phi: list[ModuleHom] | None = None) -> BiBar:
    return BiBar(morphism, n_depth, m_depth, phi=phi)


def verify_bibar(bb: BiBar, policy: Policy | None = None) -> Report:
    checks = [group("conventions", [
        leaf(name, NOTE, None, detail=detail) for name, detail in bb.notes])]

    rows = []
    for n in range(bb.n_depth + 1):
        rep = verify_simplicial_identities(bb.rows[n], policy)
        rep.name = f"horizontal-simplicial @ row {n}"
        rows.append(rep)
    checks.append(group("horizontal-identities", rows))

    cols = []
    for m in range(bb.m_depth + 1):
        ff, ss, ds = [], [], []
        for n in range(2, bb.n_depth + 1):
            for j in range(n + 1):
                for i in range(j):
                    ff.append(maps_equal_report(
                        f"dv{i} dv{j} = dv{j - 1} dv{i} @ ({n},{m})",
                        bb.v_face(n - 1, m, i).compose(bb.v_face(n, m, j)),
                        bb.v_face(n - 1, m, j - 1).compose(bb.v_face(n, m, i)),
                        policy))
        for n in range(bb.n_depth - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    ss.append(maps_equal_report(
                        f"sv{i} sv{j} = sv{j + 1} sv{i} @ ({n},{m})",
                        bb.v_degen(n + 1, m, i).compose(bb.v_degen(n, m, j)),
                        bb.v_degen(n + 1, m, j + 1).compose(bb.v_degen(n, m, i)),
                        policy))
        for n in range(bb.n_depth):
            for j in range(n + 1):
                for i in range(n + 2):
                    if i in (j, j + 1):
                        ds.append(maps_equal_report(
                            f"dv{i} sv{j} = id @ ({n},{m})",
                            bb.v_face(n + 1, m, i).compose(bb.v_degen(n, m, j)),
                            identity_hom(bb.level(n, m)), policy))
                    elif i < j:
                        ds.append(maps_equal_report(
                            f"dv{i} sv{j} = sv{j - 1} dv{i} @ ({n},{m})",
                            bb.v_face(n + 1, m, i).compose(bb.v_degen(n, m, j)),
                            bb.v_degen(n - 1, m, j - 1).compose(bb.v_face(n, m, i)),
                            policy))
                    else:
                        ds.append(maps_equal_report(
                            f"dv{i} sv{j} = sv{j} dv{i - 1} @ ({n},{m})",
                            bb.v_face(n + 1, m, i).compose(bb.v_degen(n, m, j)),
                            bb.v_degen(n - 1, m, j).compose(bb.v_face(n, m, i - 1)),
                            policy))
        cols.append(group(f"vertical-simplicial @ column {m}",
                          [group("face-face", ff),
                           group("degeneracy-degeneracy", ss),
                           group("face-degeneracy", ds)]))
    checks.append(group("vertical-identities", cols))

    comm = []
    for n in range(1, bb.n_depth + 1):
        for m in range(1, bb.m_depth + 1):
            for i in range(n + 1):
                for j in range(m + 1):
                    comm.append(maps_equal_report(
                        f"dv{i} dh{j} = dh{j} dv{i} @ ({n},{m})",
                        bb.v_face(n, m - 1, i).compose(bb.h_face(n, m, j)),
                        bb.h_face(n - 1, m, j).compose(bb.v_face(n, m, i)),
                        policy))
    for n in range(1, bb.n_depth + 1):
        for m in range(bb.m_depth):
            for i in range(n + 1):
                for j in range(m + 1):
                    comm.append(maps_equal_report(
                        f"dv{i} sh{j} = sh{j} dv{i} @ ({n},{m})",
                        bb.v_face(n, m + 1, i).compose(bb.h_degen(n, m, j)),
                        bb.h_degen(n - 1, m, j).compose(bb.v_face(n, m, i)),
                        policy))
    for n in range(bb.n_depth):
        for m in range(1, bb.m_depth + 1):
            for i in range(n + 1):
                for j in range(m + 1):
                    comm.append(maps_equal_report(
                        f"sv{i} dh{j} = dh{j} sv{i} @ ({n},{m})",
                        bb.v_degen(n, m - 1, i).compose(bb.h_face(n, m, j)),
                        bb.h_face(n + 1, m, j).compose(bb.v_degen(n, m, i)),
                        policy))
    for n in range(bb.n_depth):
        for m in range(bb.m_depth):
            for i in range(n + 1):
                for j in range(m + 1):
                    comm.append(maps_equal_report(
                        f"sv{i} sh{j} = sh{j} sv{i} @ ({n},{m})",
                        bb.v_degen(n, m + 1, i).compose(bb.h_degen(n, m, j)),
                        bb.h_degen(n + 1, m, j).compose(bb.v_degen(n, m, i)),
                        policy))
    checks.append(group("horizontal-vertical-commutation", comm))

    mult = []
    for m in range(bb.m_depth + 1):
        for n in range(1, bb.n_depth + 1):
            for i in range(n + 1):
                mult.append(multiplicativity_report(
                    f"dv{i}@({n},{m}) multiplicative", bb.v_face(n, m, i),
                    bb.algebra(n, m), bb.algebra(n - 1, m), policy,
                    kind=THEOREM))
        for n in range(bb.n_depth):
            for i in range(n + 1):
                mult.append(multiplicativity_report(
                    f"sv{i}@({n},{m}) multiplicative", bb.v_degen(n, m, i),
                    bb.algebra(n, m), bb.algebra(n + 1, m), policy,
                    kind=THEOREM))
    checks.append(group("vertical-multiplicativity", mult))

    name = bb.morphism.name or "morphism"
    return group(f"bibar-verify {name} ({bb.n_depth},{bb.m_depth})", checks)
