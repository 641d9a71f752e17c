"""Truncated bar construction Bar(S, R) and its level algebras.

Level k of the bar object on an action of R on X is X x R^k, stored as
one flat coefficient tuple.  Faces act by the action (d_0), by merging
neighbouring letters, or by dropping the last one; degeneracies insert a
zero letter.  When the action is translation through an algebra hom
eta: R -> S, each level also carries a multiplication

    (s, a_1..a_k)(s', b_1..b_k)
      = (ss', ..., s.b_j + s'.a_j + (a_1+..+a_{j-1}) b_j
                   + a_j (b_1+..+b_j), ...)

realised both as that closed formula and as a structure-constant tensor
built from it; the two are cross-checked in the test suite.
"""

from __future__ import annotations

from .core import (MAX_ENUM, Algebra, AlgebraHom, BilinearMap, FiniteModule,
                   ModuleHom, PreconditionError, Submodule,
                   UnsupportedScaleError, direct_sum, identity_hom, is_ideal,
                   kernel, maps_equal_report, multiplicativity_report,
                   validate_algebra, validate_hom)
from .policy import Policy, sweep
from .report import (AXIOM, FAIL, PASS, STRUCTURAL, THEOREM, Report, group,
                     leaf)
from .xmod import (CrossedModule, ModuleAction, translation_action,
                   validate_module_action)

DEFAULT_DEPTH = 4


class TruncatedBarModule:
    """Levels 0..depth of the bar object of a module action, with every
    face and degeneracy inside the truncation."""

    def __init__(self, act: ModuleAction, depth: int):
        if depth < 1:
            raise PreconditionError("bar truncation depth must be at least 1")
        self.act = act
        self.depth = depth
        self.x_mod = act.space
        self.r_mod = act.algebra.carrier
        if self.x_mod.size * (self.r_mod.size ** depth) > MAX_ENUM:
            raise UnsupportedScaleError(
                "bar levels exceed the enumeration bound at this depth")
        self.levels = [direct_sum([self.x_mod] + [self.r_mod] * n)
                       for n in range(depth + 1)]
        self._faces = {}
        self._degens = {}
        for n in range(1, depth + 1):
            for i in range(n + 1):
                self._faces[(n, i)] = self._build_face(n, i)
        for n in range(depth):
            for i in range(n + 1):
                self._degens[(n, i)] = self._build_degen(n, i)

    # flat tuple <-> (x, letter blocks)
    def split(self, t, n):
        px, pr = self.x_mod.rank, self.r_mod.rank
        x = t[:px]
        blocks = [t[px + j * pr: px + (j + 1) * pr] for j in range(n)]
        return x, blocks

    def join(self, x, blocks):
        out = tuple(x)
        for b in blocks:
            out += tuple(b)
        return out

    def face(self, n, i) -> ModuleHom:
        return self._faces[(n, i)]

    def degen(self, n, i) -> ModuleHom:
        return self._degens[(n, i)]

    def _build_face(self, n, i):
        act, radd = self.act, self.r_mod.add

        if i == 0:
            def fn(t):
                x, b = self.split(t, n)
                return self.join(act.apply(x, b[0]), b[1:])
        elif i == n:
            def fn(t):
                x, b = self.split(t, n)
                return self.join(x, b[:n - 1])
        else:
            def fn(t):
                x, b = self.split(t, n)
                return self.join(x, b[:i - 1] + [radd(b[i - 1], b[i])] + b[i + 1:])

        dom = self.levels[n]
        images = [fn(g) for g in dom.generators()]
        return ModuleHom(dom, self.levels[n - 1], images, fn=fn, name=f"d{i}@{n}")

    def _build_degen(self, n, i):
        zero = self.r_mod.zero

        def fn(t):
            x, b = self.split(t, n)
            return self.join(x, b[:i] + [zero] + b[i:])

        dom = self.levels[n]
        images = [fn(g) for g in dom.generators()]
        return ModuleHom(dom, self.levels[n + 1], images, fn=fn, name=f"s{i}@{n}")


def build_bar_module(act: ModuleAction, depth: int = DEFAULT_DEPTH,
                     policy: Policy | None = None) -> TruncatedBarModule:
    """Bar object of a validated module action."""
    rep = validate_module_action(act, policy)
    if not rep.passed:
        raise PreconditionError("build_bar_module needs a valid module action")
    return TruncatedBarModule(act, depth)


class TruncatedBarAlgebra:
    """Bar object of a crossed-module candidate, with level products.

    level_tensors overrides the canonical products (used by the
    perturbation harness); by default every level tensor is built from
    the closed product formula.
    """

    def __init__(self, xm: CrossedModule, depth: int, level_tensors=None):
        self.xm = xm
        self.depth = depth
        self.module = TruncatedBarModule(translation_action(xm.eta), depth)
        self.levels = self.module.levels
        s_alg = xm.s_alg
        self.algebras = []
        for n in range(depth + 1):
            carrier = self.levels[n]
            if level_tensors is not None and level_tensors[n] is not None:
                tensor = level_tensors[n]
            else:
                gens = carrier.generators()
                constants = [[self.product_formula(n, gi, gj) for gj in gens]
                             for gi in gens]
                tensor = BilinearMap(carrier, carrier, carrier, constants)
            name = s_alg.name or "S"
            self.algebras.append(Algebra(carrier, tensor, name=f"B{n}({name})"))

    def face(self, n, i):
        return self.module.face(n, i)

    def degen(self, n, i):
        return self.module.degen(n, i)

    def multiply(self, n, u, v):
        return self.algebras[n].multiply(u, v)

    def product_formula(self, n, u, v):
        """Closed form of the level-n product."""
        xm = self.xm
        smul = xm.s_alg.multiply
        radd, rmul = xm.r_alg.carrier.add, xm.r_alg.multiply
        act = xm.action.apply
        rzero = xm.r_alg.zero
        s, a = self.module.split(u, n)
        s2, b = self.module.split(v, n)
        out = [smul(s, s2)]
        pa, pb = rzero, rzero
        for j in range(n):
            coord = radd(radd(act(s, b[j]), act(s2, a[j])),
                         radd(rmul(pa, b[j]), rmul(a[j], radd(pb, b[j]))))
            out.append(coord)
            pa, pb = radd(pa, a[j]), radd(pb, b[j])
        return self.module.join(out[0], out[1:])

    def embed_s(self, n, s):
        return self.module.join(s, [self.module.r_mod.zero] * n)

    def embed_r(self, n, blocks):
        return self.module.join(self.module.x_mod.zero, blocks)

    def level_tensors(self):
        return [alg.mul for alg in self.algebras]


def build_bar_algebra(xm: CrossedModule, depth: int = DEFAULT_DEPTH,
                      level_tensors=None) -> TruncatedBarAlgebra:
    """No validity gate: broken candidates must still build so that the
    verifiers can show where they fail."""
    return TruncatedBarAlgebra(xm, depth, level_tensors=level_tensors)


def _bar_module_of(obj) -> TruncatedBarModule:
    return obj.module if isinstance(obj, TruncatedBarAlgebra) else obj


def verify_simplicial_identities(bar, policy: Policy | None = None) -> Report:
    bm = _bar_module_of(bar)
    n_max = bm.depth
    face, degen = bm.face, bm.degen

    ff = []
    for n in range(2, n_max + 1):
        for j in range(n + 1):
            for i in range(j):
                ff.append(maps_equal_report(
                    f"d{i} d{j} = d{j - 1} d{i} @ {n}",
                    face(n - 1, i).compose(face(n, j)),
                    face(n - 1, j - 1).compose(face(n, i)), policy))

    ss = []
    for n in range(n_max - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                ss.append(maps_equal_report(
                    f"s{i} s{j} = s{j + 1} s{i} @ {n}",
                    degen(n + 1, i).compose(degen(n, j)),
                    degen(n + 1, j + 1).compose(degen(n, i)), policy))

    ds = []
    for n in range(n_max):
        for j in range(n + 1):
            for i in range(n + 2):
                if i in (j, j + 1):
                    ds.append(maps_equal_report(
                        f"d{i} s{j} = id @ {n}",
                        face(n + 1, i).compose(degen(n, j)),
                        identity_hom(bm.levels[n]), policy))
                elif i < j:
                    ds.append(maps_equal_report(
                        f"d{i} s{j} = s{j - 1} d{i} @ {n}",
                        face(n + 1, i).compose(degen(n, j)),
                        degen(n - 1, j - 1).compose(face(n, i)), policy))
                else:
                    ds.append(maps_equal_report(
                        f"d{i} s{j} = s{j} d{i - 1} @ {n}",
                        face(n + 1, i).compose(degen(n, j)),
                        degen(n - 1, j).compose(face(n, i - 1)), policy))

    return group("simplicial-identities", [
        group("face-face", ff),
        group("degeneracy-degeneracy", ss),
        group("face-degeneracy", ds),
    ])


def verify_level_homomorphisms(bar: TruncatedBarAlgebra,
                               policy: Policy | None = None) -> Report:
    checks = []
    for n in range(1, bar.depth + 1):
        for i in range(n + 1):
            checks.append(multiplicativity_report(
                f"d{i}@{n} multiplicative", bar.face(n, i),
                bar.algebras[n], bar.algebras[n - 1], policy))
    for n in range(bar.depth):
        for i in range(n + 1):
            checks.append(multiplicativity_report(
                f"s{i}@{n} multiplicative", bar.degen(n, i),
                bar.algebras[n], bar.algebras[n + 1], policy))
    return group("level-homomorphisms", checks)


def verify_ideal_axiom(bar: TruncatedBarAlgebra,
                       policy: Policy | None = None) -> Report:
    """The clauses that exhibit the tail as an ideal acted on by the base:

    base-subalgebra   (s,0)(s',0) = (ss',0)
    mixed-into-tail   (s,0)(0,b) has base coordinate 0
    mixed-letterwise  (s,0)(0,b_1..b_n) = (0, s*b_1, .., s*b_n), where
                      s*b is the letter of the level-1 product (s,0)(0,b)

    The letterwise clause ties every level of the tensor family to the
    single bilinear map read off at level 1."""
    s_alg = bar.xm.s_alg
    r_mod = bar.module.r_mod
    x_zero = bar.module.x_mod.zero

    def ell(s, b):
        prod = bar.multiply(1, bar.embed_s(1, s), bar.embed_r(1, [b]))
        return bar.module.split(prod, 1)[1][0]

    checks = []
    res = sweep([s_alg.elements(), r_mod.elements()],
                lambda s, b: bar.module.split(
                    bar.multiply(1, bar.embed_s(1, s), bar.embed_r(1, [b])),
                    1)[0] == x_zero, policy)
    checks.append(leaf("mixed-into-tail @ 1", PASS if res.ok else FAIL, AXIOM,
                       detail="(s,0)(0,b) has base coordinate 0",
                       witness=res.witness, meta=res.meta()))

    for n in range(1, bar.depth + 1):
        res = sweep([s_alg.elements(), s_alg.elements()],
                    lambda a, b, n=n:
                    bar.multiply(n, bar.embed_s(n, a), bar.embed_s(n, b))
                    == bar.embed_s(n, s_alg.multiply(a, b)), policy)
        checks.append(leaf(f"base-subalgebra @ {n}", PASS if res.ok else FAIL,
                           AXIOM, witness=res.witness, meta=res.meta()))

        tail = direct_sum([r_mod] * n)
        pr = r_mod.rank

        def letterwise(s, t, n=n):
            blocks = [t[j * pr:(j + 1) * pr] for j in range(n)]
            return bar.multiply(n, bar.embed_s(n, s), bar.embed_r(n, blocks)) \
                == bar.embed_r(n, [ell(s, b) for b in blocks])

        res = sweep([s_alg.elements(), tail.elements()], letterwise, policy)
        checks.append(leaf(f"mixed-letterwise @ {n}", PASS if res.ok else FAIL,
                           AXIOM,
                           detail="base times tail is the level-1 letter rule "
                                  "in every letter",
                           witness=res.witness, meta=res.meta()))
    return group("tail-absorption", checks)


def verify_decomposition(bar: TruncatedBarAlgebra, k: int,
                         policy: Policy | None = None) -> Report:
    """Level k splits as the subalgebra S_k = {(s,0)}, a copy of S, plus
    the tail ideal R_k = {(0,r)}, with trivial intersection; R_k is also
    the kernel of the chain of top faces down to level 0."""
    s_alg = bar.xm.s_alg
    lvl = bar.levels[k]
    r_tail = direct_sum([bar.module.r_mod] * k)
    pr = bar.module.r_mod.rank
    r_elems = []
    for tail in r_tail.elements():
        blocks = [tail[j * pr:(j + 1) * pr] for j in range(k)]
        r_elems.append(bar.embed_r(k, blocks))
    rk = Submodule(lvl, r_elems)
    sk = Submodule(lvl, [bar.embed_s(k, s) for s in s_alg.elements()])

    checks = []
    embed = ModuleHom(s_alg.carrier, lvl,
                      [bar.embed_s(k, g) for g in s_alg.generators()],
                      name="embed-s")
    checks.append(multiplicativity_report(
        f"sk-subalgebra-isomorphic-to-s @ {k}", embed, s_alg,
        bar.algebras[k], policy, kind=THEOREM))

    rep = is_ideal(bar.algebras[k], rk, policy)
    rep.name = f"rk-is-ideal @ {k}"
    for node in rep.walk():
        if node.kind == AXIOM:
            node.kind = THEOREM
    checks.append(rep)

    # top face at every level, applied from level k down to 0
    comp = bar.face(k, k)
    for j in range(k - 1, 0, -1):
        comp = bar.face(j, j).compose(comp)
    ker = kernel(comp)
    checks.append(leaf(
        f"rk-is-kernel-of-top-face-chain @ {k}",
        PASS if ker.elements == rk.elements else FAIL, THEOREM,
        meta={"kernel_size": ker.size, "tail_size": rk.size}))

    inter = sorted(set(sk.elements) & set(rk.elements))
    direct = (len(inter) == 1 and sk.size * rk.size == lvl.size)
    checks.append(leaf(f"direct-sum @ {k}", PASS if direct else FAIL,
                       STRUCTURAL,
                       detail="S_k + R_k spans, S_k meet R_k = 0",
                       meta={"sk": sk.size, "rk": rk.size, "level": lvl.size}))
    return group(f"decomposition @ {k}", checks)


def rk_closed_formulas(bar: TruncatedBarAlgebra, k: int,
                       policy: Policy | None = None) -> Report:
    """Products touching the tail ideal have closed forms; compare them
    with the generic level product."""
    xm = bar.xm
    radd, rmul = xm.r_alg.carrier.add, xm.r_alg.multiply
    act = xm.action.apply
    r_tail = direct_sum([xm.r_alg.carrier] * k)
    pr = xm.r_alg.carrier.rank

    def blocks_of(tail):
        return [tail[j * pr:(j + 1) * pr] for j in range(k)]

    def tail_product_ok(ta, tb):
        a, b = blocks_of(ta), blocks_of(tb)
        expect = []
        pa, pb = xm.r_alg.zero, xm.r_alg.zero
        for j in range(k):
            expect.append(radd(rmul(pa, b[j]), rmul(a[j], radd(pb, b[j]))))
            pa, pb = radd(pa, a[j]), radd(pb, b[j])
        return bar.multiply(k, bar.embed_r(k, a), bar.embed_r(k, b)) \
            == bar.embed_r(k, expect)

    checks = []
    res = sweep([r_tail.elements(), r_tail.elements()], tail_product_ok, policy)
    checks.append(leaf(
        f"tail-tail-product @ {k}", PASS if res.ok else FAIL, THEOREM,
        detail="(0,a)(0,b) has j-th letter (a_1+..+a_{j-1})b_j + a_j(b_1+..+b_j)",
        witness=res.witness, meta=res.meta()))

    def mixed_product_ok(ta, s):
        a = blocks_of(ta)
        expect = [act(s, a[j]) for j in range(k)]
        return bar.multiply(k, bar.embed_r(k, a), bar.embed_s(k, s)) \
            == bar.embed_r(k, expect)

    res = sweep([r_tail.elements(), xm.s_alg.elements()], mixed_product_ok, policy)
    checks.append(leaf(
        f"tail-base-product @ {k}", PASS if res.ok else FAIL, THEOREM,
        detail="(0,a)(s,0) = (0, s.a_1, .., s.a_k)",
        witness=res.witness, meta=res.meta()))
    return group(f"tail-ideal-products @ {k}", checks)


def eta_k(bar: TruncatedBarAlgebra, k: int, policy: Policy | None = None):
    """The level-k hom (s, a_1..a_k) -> s + eta(a_1 + .. + a_k) back to S,
    returned together with its validation report."""
    xm = bar.xm
    s_mod = xm.s_alg.carrier
    lvl = bar.levels[k]

    def fn(t):
        s, blocks = bar.module.split(t, k)
        acc = xm.r_alg.zero
        for b in blocks:
            acc = xm.r_alg.carrier.add(acc, b)
        return s_mod.add(s, xm.eta.apply(acc))

    images = [fn(g) for g in lvl.generators()]
    hom = AlgebraHom(bar.algebras[k], xm.s_alg,
                     ModuleHom(lvl, s_mod, images, fn=fn, name=f"eta{k}"),
                     name=f"eta{k}")
    rep = validate_hom(hom, policy)
    rep.name = f"eta-k @ {k}"
    return hom, rep


def definition_checks(bar: TruncatedBarAlgebra,
                      policy: Policy | None = None) -> Report:
    """The clauses that make a level-product family an ideal simplicial
    structure: valid level algebras, faces and degeneracies that are
    algebra maps, and the absorption axiom.  This is the filter used by
    the perturbation harness."""
    algs = [validate_algebra(alg, policy) for alg in bar.algebras]
    for n, rep in enumerate(algs):
        rep.name = f"level-{n}-algebra"
    return group("ideal-structure-definition", [
        group("level-algebras", algs),
        verify_level_homomorphisms(bar, policy),
        verify_ideal_axiom(bar, policy),
    ])


def verify_bar(bar: TruncatedBarAlgebra, policy: Policy | None = None) -> Report:
    checks = [
        verify_simplicial_identities(bar, policy),
        definition_checks(bar, policy),
    ]
    for k in range(1, bar.depth + 1):
        checks.append(verify_decomposition(bar, k, policy))
    for k in range(1, bar.depth + 1):
        checks.append(rk_closed_formulas(bar, k, policy))
    eta_reps = []
    for k in range(1, bar.depth + 1):
        _, rep = eta_k(bar, k, policy)
        eta_reps.append(rep)
    checks.append(group("eta-k-family", eta_reps))
    name = bar.xm.name or "xmod"
    return group(f"bar-verify {name} depth {bar.depth}", checks)
