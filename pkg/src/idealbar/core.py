"""Finite commutative algebra arithmetic over Z/m.

Everything here is desk scale and exact.  A module is a direct sum of
cyclic groups Z/d_i with every d_i dividing the base modulus m; its
elements are plain int tuples of coefficients, reduced componentwise.
Multiplications and actions are structure-constant tensors, so k-bilinear
identities hold by construction and the validators only search the
identities that can actually fail.
"""

from __future__ import annotations

from itertools import product

from .policy import Policy, sweep
from .report import (AXIOM, FAIL, NOTE, PASS, STRUCTURAL, Report, group,
                     leaf)

MAX_ENUM = 1 << 20


class IdealbarError(Exception):
    pass


class StructuralError(IdealbarError):
    """Shape, torsion or reference problems in the input data."""


class PreconditionError(IdealbarError):
    """An operation was handed data that fails its stated precondition."""


class UnsupportedScaleError(IdealbarError):
    """The requested enumeration exceeds the desk-scale bound."""


class FiniteModule:
    """Finite Z/m-module presented as Z/d_1 + ... + Z/d_n.

    Order-1 summands carry no data and are dropped on construction.
    Elements are coefficient tuples in lexicographic order, first
    coordinate most significant; that order fixes every witness this
    package reports.
    """

    def __init__(self, modulus: int, orders):
        if modulus < 2:
            raise StructuralError(f"modulus must be at least 2, got {modulus}")
        orders = tuple(int(d) for d in orders)
        for d in orders:
            if d < 1:
                raise StructuralError(f"summand order {d} is not positive")
            if modulus % d != 0:
                raise StructuralError(
                    f"summand order {d} does not divide modulus {modulus}")
        self.modulus = modulus
        self.orders = tuple(d for d in orders if d > 1)
        self.rank = len(self.orders)
        self.zero = (0,) * self.rank
        size = 1
        for d in self.orders:
            size *= d
        self.size = size
        self._elements = None

    def __eq__(self, other):
        return (isinstance(other, FiniteModule)
                and self.modulus == other.modulus
                and self.orders == other.orders)

    def __hash__(self):
        return hash((self.modulus, self.orders))

    def __repr__(self):
        return f"FiniteModule(mod {self.modulus}, orders {list(self.orders)})"

    def contains(self, x) -> bool:
        return (len(x) == self.rank
                and all(0 <= c < d for c, d in zip(x, self.orders)))

    def reduce(self, coeffs):
        if len(coeffs) != self.rank:
            raise StructuralError(
                f"element of length {len(coeffs)} in module of rank {self.rank}")
        return tuple(c % d for c, d in zip(coeffs, self.orders))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def sub(self, x, y):
        return tuple((a - b) % d for a, b, d in zip(x, y, self.orders))

    def scale(self, k, x):
        return tuple((k * a) % d for a, d in zip(x, self.orders))

    def generators(self):
        gs = []
        for i in range(self.rank):
            g = [0] * self.rank
            g[i] = 1
            gs.append(tuple(g))
        return gs

    def elements(self):
        if self._elements is None:
            if self.size > MAX_ENUM:
                raise UnsupportedScaleError(
                    f"module has {self.size} elements, bound is {MAX_ENUM}")
            self._elements = [tuple(t) for t in
                              product(*(range(d) for d in self.orders))]
        return self._elements

    def element_order(self, x) -> int:
        t, acc = 1, x
        while acc != self.zero:
            acc = self.add(acc, x)
            t += 1
        return t


def direct_sum(mods) -> FiniteModule:
    mods = list(mods)
    orders = tuple(d for m in mods for d in m.orders)
    return FiniteModule(mods[0].modulus, orders)


class BilinearMap:
    """Structure-constant tensor for a k-bilinear map left x right -> target.

    constants[i][j] is the coefficient tuple of g_i * g_j in the target.
    Bilinearity over Z/m is automatic; whether the extension is well
    defined is exactly the torsion compatibility reported by the
    validators, so torsion-violating tensors are storable on purpose.
    """

    def __init__(self, left: FiniteModule, right: FiniteModule,
                 target: FiniteModule, constants):
        constants = tuple(tuple(tuple(int(v) for v in vec) for vec in row)
                          for row in constants)
        if len(constants) != left.rank:
            raise StructuralError(
                f"tensor has {len(constants)} rows, left rank is {left.rank}")
        for row in constants:
            if len(row) != right.rank:
                raise StructuralError(
                    f"tensor row has {len(row)} entries, right rank is {right.rank}")
            for vec in row:
                if len(vec) != target.rank:
                    raise StructuralError(
                        f"tensor entry has length {len(vec)}, target rank is {target.rank}")
        self.left = left
        self.right = right
        self.target = target
        self.constants = tuple(tuple(target.reduce(vec) for vec in row)
                               for row in constants)
        self._nz = None

    def _nonzero(self):
        if self._nz is None:
            zero = self.target.zero
            self._nz = [
                (i, j, tuple((l, v) for l, v in enumerate(vec) if v))
                for i, row in enumerate(self.constants)
                for j, vec in enumerate(row) if vec != zero
            ]
        return self._nz

    def evaluate(self, x, y):
        if len(x) != self.left.rank or len(y) != self.right.rank:
            raise StructuralError("operand length does not match the tensor")
        out = [0] * self.target.rank
        for i, j, vec in self._nonzero():
            c = x[i] * y[j]
            if c:
                for l, v in vec:
                    out[l] += c * v
        return self.target.reduce(out)

    def torsion_violations(self):
        """Yield index triples (i, j, l) where the bilinear extension is
        not well defined, in lexicographic order."""
        d = self.left.orders
        e = self.right.orders
        f = self.target.orders
        for i in range(self.left.rank):
            for j in range(self.right.rank):
                vec = self.constants[i][j]
                for l in range(self.target.rank):
                    if (d[i] * vec[l]) % f[l] or (e[j] * vec[l]) % f[l]:
                        yield (i, j, l)

    def __eq__(self, other):
        return (isinstance(other, BilinearMap)
                and self.left == other.left and self.right == other.right
                and self.target == other.target
                and self.constants == other.constants)

    def __hash__(self):
        return hash((self.left, self.right, self.target, self.constants))


class Algebra:
    """Commutative, not necessarily unital, finite Z/m-algebra."""

    def __init__(self, carrier: FiniteModule, mul: BilinearMap, name: str = ""):
        if mul.left != carrier or mul.right != carrier or mul.target != carrier:
            raise StructuralError("multiplication tensor does not live on the carrier")
        self.carrier = carrier
        self.mul = mul
        self.name = name

    @property
    def modulus(self):
        return self.carrier.modulus

    @property
    def orders(self):
        return self.carrier.orders

    @property
    def zero(self):
        return self.carrier.zero

    def elements(self):
        return self.carrier.elements()

    def generators(self):
        return self.carrier.generators()

    def multiply(self, x, y):
        return self.mul.evaluate(x, y)

    def __eq__(self, other):
        # name is presentation only
        return (isinstance(other, Algebra) and self.carrier == other.carrier
                and self.mul == other.mul)

    def __hash__(self):
        return hash((self.carrier, self.mul))

    def __repr__(self):
        tag = self.name or "Algebra"
        return f"{tag}(mod {self.modulus}, orders {list(self.orders)})"


class ModuleHom:
    """Z/m-linear map given by generator images; optional fast evaluator.

    The images define the map.  When fn is supplied it must agree with the
    linear extension; it only exists so composite sweeps avoid the
    generator expansion on every call.
    """

    def __init__(self, domain: FiniteModule, codomain: FiniteModule,
                 images, fn=None, name: str = ""):
        images = tuple(codomain.reduce(tuple(img)) for img in images)
        if len(images) != domain.rank:
            raise StructuralError(
                f"{len(images)} images for a domain of rank {domain.rank}")
        self.domain = domain
        self.codomain = codomain
        self.images = images
        self.fn = fn
        self.name = name
        if fn is not None:
            for g, img in zip(domain.generators(), images):
                if tuple(fn(g)) != img:
                    raise StructuralError(
                        f"evaluator disagrees with generator image at {g}")

    def order_violations(self):
        """Indices i where d_i * images[i] != 0, i.e. the map is not well
        defined on Z/d_i."""
        out = []
        for i, (d, img) in enumerate(zip(self.domain.orders, self.images)):
            if self.codomain.scale(d, img) != self.codomain.zero:
                out.append(i)
        return out

    def apply(self, x):
        if self.fn is not None:
            return self.codomain.reduce(tuple(self.fn(x)))
        out = [0] * self.codomain.rank
        for c, img in zip(x, self.images):
            if c:
                for l, v in enumerate(img):
                    out[l] += c * v
        return self.codomain.reduce(out)

    def compose(self, inner: "ModuleHom") -> "ModuleHom":
        """self after inner."""
        if inner.codomain != self.domain:
            raise StructuralError("composite maps do not chain")
        images = [self.apply(inner.apply(g)) for g in inner.domain.generators()]
        fn = None
        if self.fn is not None and inner.fn is not None:
            outer = self
            fn = lambda x: outer.apply(inner.apply(x))
        return ModuleHom(inner.domain, self.codomain, images, fn=fn,
                         name=f"{self.name}.{inner.name}" if self.name or inner.name else "")

    def __eq__(self, other):
        return (isinstance(other, ModuleHom)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.images == other.images)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.images))


def identity_hom(mod: FiniteModule, name: str = "id") -> ModuleHom:
    return ModuleHom(mod, mod, mod.generators(), fn=lambda x: x, name=name)


class AlgebraHom:
    """Module hom between the carriers of two algebras; multiplicativity
    is what validate_hom checks, not what the type enforces."""

    def __init__(self, dom: Algebra, cod: Algebra, hom: ModuleHom, name: str = ""):
        if hom.domain != dom.carrier or hom.codomain != cod.carrier:
            raise StructuralError("hom does not match the algebra carriers")
        self.dom = dom
        self.cod = cod
        self.hom = hom
        self.name = name or hom.name

    @property
    def images(self):
        return self.hom.images

    def apply(self, x):
        return self.hom.apply(x)

    def __eq__(self, other):
        return (isinstance(other, AlgebraHom) and self.hom == other.hom)

    def __hash__(self):
        return hash(self.hom)


class Submodule:
    """Subset of a module that is expected to be closed under addition;
    stored sorted so every iteration over it is deterministic."""

    def __init__(self, ambient: FiniteModule, elements):
        elems = sorted(set(tuple(e) for e in elements))
        for e in elems:
            if not ambient.contains(e):
                raise StructuralError(f"{e} is not an element of the ambient module")
        if ambient.zero not in elems:
            elems = sorted(elems + [ambient.zero])
        self.ambient = ambient
        self.elements = tuple(elems)
        self._set = frozenset(elems)

    @classmethod
    def from_generators(cls, ambient: FiniteModule, gens) -> "Submodule":
        seen = {ambient.zero}
        frontier = [ambient.reduce(tuple(g)) for g in gens]
        seen.update(frontier)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = ambient.add(x, ambient.reduce(tuple(g)))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return cls(ambient, seen)

    def contains(self, x) -> bool:
        return tuple(x) in self._set

    @property
    def size(self):
        return len(self.elements)

    def addition_violation(self):
        """First pair (lex) whose sum escapes the subset, or None."""
        for x in self.elements:
            for y in self.elements:
                if not self.contains(self.ambient.add(x, y)):
                    return (x, y)
        return None

    def __eq__(self, other):
        return (isinstance(other, Submodule) and self.ambient == other.ambient
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.ambient, self.elements))


# ---------------------------------------------------------------------------
# validators


def validate_algebra(alg: Algebra, policy: Policy | None = None) -> Report:
    """Torsion compatibility, commutativity and associativity of the
    multiplication tensor.  Generator checks are complete here because
    every side of every identity is multilinear."""
    checks = []
    bad = next(alg.mul.torsion_violations(), None)
    checks.append(leaf(
        "torsion-compatibility", FAIL if bad else PASS, STRUCTURAL,
        detail="d_i*c[i][j] and d_j*c[i][j] vanish mod target orders",
        witness=bad))

    n = alg.carrier.rank
    comm = None
    for i in range(n):
        for j in range(n):
            if alg.mul.constants[i][j] != alg.mul.constants[j][i]:
                comm = (i, j)
                break
        if comm:
            break
    checks.append(leaf("commutativity", FAIL if comm else PASS, AXIOM,
                       detail="c[i][j] = c[j][i] on generator pairs",
                       witness=comm, meta={"pairs": n * n}))

    gens = alg.generators()
    assoc = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = alg.multiply(alg.multiply(gens[i], gens[j]), gens[k])
                rhs = alg.multiply(gens[i], alg.multiply(gens[j], gens[k]))
                if lhs != rhs:
                    assoc = (i, j, k)
                    break
            if assoc:
                break
        if assoc:
            break
    checks.append(leaf(
        "associativity", FAIL if assoc else PASS, AXIOM,
        detail="(g_i g_j) g_k = g_i (g_j g_k), complete by trilinearity",
        witness=assoc, meta={"triples": n ** 3}))

    checks.append(_unit_note(alg))
    name = alg.name or "algebra"
    return group(f"validate-algebra {name}", checks)


def _unit_note(alg: Algebra) -> Report:
    # informational only, a unit is never required
    if alg.carrier.size > 4096:
        return leaf("unital", NOTE, None, detail="unit detection skipped, carrier too large")
    unit = None
    for e in alg.elements():
        if all(alg.multiply(e, x) == x for x in alg.elements()):
            unit = e
            break
    if unit is not None:
        return leaf("unital", NOTE, None, detail=f"unit {unit}")
    return leaf("unital", NOTE, None, detail="no unit")


def multiplicativity_report(name: str, hom: ModuleHom, dom: Algebra,
                            cod: Algebra, policy: Policy | None = None,
                            kind: str = AXIOM) -> Report:
    """Check f(uv) = f(u)f(v).  Both sides are bilinear in (u, v), so the
    generator-pair comparison decides the property for every pair of
    elements; an element-level sweep only runs to pin down the least
    witness after a mismatch."""
    policy = policy or Policy()
    n = dom.carrier.rank
    mismatch = None
    for i in range(n):
        for j in range(n):
            lhs = hom.apply(dom.mul.constants[i][j])
            rhs = cod.mul.evaluate(hom.apply(dom.generators()[i]),
                                   hom.apply(dom.generators()[j]))
            if lhs != rhs:
                mismatch = (i, j)
                break
        if mismatch:
            break
    total = dom.carrier.size ** 2
    if mismatch is None:
        return leaf(name, PASS, kind,
                    detail="f(uv) = f(u)f(v), generator pairs, complete by bilinearity",
                    meta={"mode": "exhaustive", "checked": total,
                          "generator_pairs": n * n})
    if total <= policy.exhaustive_bound:
        res = sweep([dom.elements(), dom.elements()],
                    lambda u, v: hom.apply(dom.multiply(u, v))
                    == cod.multiply(hom.apply(u), hom.apply(v)),
                    policy)
        return leaf(name, FAIL, kind, detail="f(uv) != f(u)f(v)",
                    witness=res.witness, meta=res.meta())
    gens = dom.generators()
    return leaf(name, FAIL, kind,
                detail="f(uv) != f(u)f(v), witness is a generator pair",
                witness=(gens[mismatch[0]], gens[mismatch[1]]),
                meta={"mode": "generators", "checked": n * n})


def maps_equal_report(name: str, f: ModuleHom, g: ModuleHom,
                      policy: Policy | None = None, kind: str = AXIOM,
                      detail: str = "") -> Report:
    """Equality of two linear maps; generator images decide it."""
    policy = policy or Policy()
    if f.domain != g.domain or f.codomain != g.codomain:
        return leaf(name, FAIL, STRUCTURAL,
                    detail="maps do not share domain and codomain")
    total = f.domain.size
    if f.images == g.images:
        return leaf(name, PASS, kind, detail=detail,
                    meta={"mode": "exhaustive", "checked": total})
    if total <= policy.exhaustive_bound:
        res = sweep([f.domain.elements()],
                    lambda x: f.apply(x) == g.apply(x), policy)
        return leaf(name, FAIL, kind, detail=detail or "maps differ",
                    witness=res.witness, meta=res.meta())
    bad = next(gen for gen, a, b in
               zip(f.domain.generators(), f.images, g.images) if a != b)
    return leaf(name, FAIL, kind,
                detail=(detail or "maps differ") + ", witness is a generator",
                witness=(bad,), meta={"mode": "generators"})


def validate_hom(f: AlgebraHom, policy: Policy | None = None) -> Report:
    checks = []
    bad = f.hom.order_violations()
    checks.append(leaf(
        "order-compatibility", FAIL if bad else PASS, STRUCTURAL,
        detail="d_i * f(g_i) = 0 in the codomain",
        witness=(bad[0],) if bad else None))
    checks.append(multiplicativity_report("multiplicativity", f.hom, f.dom,
                                          f.cod, policy))
    name = f.name or "hom"
    return group(f"validate-hom {name}", checks)


def image(f: ModuleHom) -> Submodule:
    return Submodule.from_generators(f.codomain, f.images)


def kernel(f: ModuleHom) -> Submodule:
    zero = f.codomain.zero
    return Submodule(f.domain,
                     [x for x in f.domain.elements() if f.apply(x) == zero])


def is_ideal(alg: Algebra, sub: Submodule, policy: Policy | None = None) -> Report:
    if sub.ambient != alg.carrier:
        raise StructuralError("submodule does not live in the algebra carrier")
    checks = []
    bad = sub.addition_violation()
    checks.append(leaf("additive-closure", FAIL if bad else PASS, STRUCTURAL,
                       detail="contains 0 and is closed under addition",
                       witness=bad))
    res = sweep([alg.elements(), list(sub.elements)],
                lambda a, x: sub.contains(alg.multiply(a, x)), policy)
    checks.append(leaf("absorption", PASS if res.ok else FAIL, AXIOM,
                       detail="a*x stays in the subset for a in the algebra",
                       witness=res.witness, meta=res.meta()))
    return group("is-ideal", checks)


# ---------------------------------------------------------------------------
# presentations of subgroups and quotients


def decompose_abelian(elements, add, zero):
    """Cyclic decomposition of a finite abelian group given by a sorted
    element list and an addition callable.  Returns (orders, generators)
    with every order at least 2.  Deterministic: the generator of maximal
    order is the least such element, and lifts are least in their coset.
    """
    elems = sorted(elements)
    if len(elems) <= 1:
        return (), []

    def order_of(x):
        t, acc = 1, x
        while acc != zero:
            acc = add(acc, x)
            t += 1
        return t

    orders = {x: order_of(x) for x in elems}
    d = max(orders.values())
    g = min(x for x in elems if orders[x] == d)
    cyc = []
    acc = zero
    for _ in range(d):
        cyc.append(acc)
        acc = add(acc, g)

    rep = {}
    for x in elems:
        rep[x] = min(add(x, c) for c in cyc)
    reps = sorted(set(rep.values()))
    sub_orders, sub_gens = decompose_abelian(
        reps, lambda a, b: rep[add(a, b)], rep[zero])

    lifted = []
    for h, e in zip(sub_gens, sub_orders):
        # a lift of the same additive order exists because g has maximal
        # order in the group
        cand = None
        for c in cyc:
            y = add(h, c)
            if orders[y] == e and (cand is None or y < cand):
                cand = y
        if cand is None:
            raise IdealbarError("no order-preserving lift; input was not a group")
        lifted.append(cand)
    return (d,) + tuple(sub_orders), [g] + lifted


def _coordinates(orders, gens, add, zero, elements):
    coords = {}
    for tup in product(*(range(d) for d in orders)):
        v = zero
        for c, gen in zip(tup, gens):
            for _ in range(c):
                v = add(v, gen)
        if v in coords:
            raise IdealbarError("decomposition is not direct")
        coords[v] = tup
    if len(coords) != len(set(elements)):
        raise IdealbarError("decomposition does not span")
    return coords


def subalgebra_presentation(alg: Algebra, sub: Submodule):
    """Present a multiplicatively closed submodule as an algebra of its
    own.  Returns (sub_algebra, embedding AlgebraHom, coords) where coords
    maps ambient tuples of the subset to coordinates in the presentation.
    """
    if sub.ambient != alg.carrier:
        raise StructuralError("submodule does not live in the algebra carrier")
    if sub.addition_violation() is not None:
        raise PreconditionError("subset is not closed under addition")
    amb = alg.carrier
    for x in sub.elements:
        for y in sub.elements:
            if not sub.contains(alg.multiply(x, y)):
                raise PreconditionError(
                    f"subset is not closed under multiplication at {(x, y)}")
    orders, gens = decompose_abelian(list(sub.elements), amb.add, amb.zero)
    carrier = FiniteModule(amb.modulus, orders)
    coords = _coordinates(orders, gens, amb.add, amb.zero, sub.elements)
    constants = [[coords[alg.multiply(gi, gj)] for gj in gens] for gi in gens]
    sub_alg = Algebra(carrier, BilinearMap(carrier, carrier, carrier, constants),
                      name=f"{alg.name}-sub" if alg.name else "sub")
    embed = AlgebraHom(sub_alg, alg, ModuleHom(carrier, amb, gens), name="embed")
    return sub_alg, embed, coords


def quotient_algebra(alg: Algebra, ideal: Submodule):
    """Quotient by a two-sided ideal.  Returns (quotient, projection)."""
    rep_check = is_ideal(alg, ideal)
    if not rep_check.passed:
        raise PreconditionError("quotient requires an ideal; is_ideal failed")
    amb = alg.carrier
    rep = {}
    for x in amb.elements():
        rep[x] = min(amb.add(x, i) for i in ideal.elements)
    reps = sorted(set(rep.values()))
    zero_rep = rep[amb.zero]

    def add_q(a, b):
        return rep[amb.add(a, b)]

    orders, gens = decompose_abelian(reps, add_q, zero_rep)
    carrier = FiniteModule(amb.modulus, orders)
    coords = _coordinates(orders, gens, add_q, zero_rep, reps)
    constants = [[coords[rep[alg.multiply(gi, gj)]] for gj in gens] for gi in gens]
    quot = Algebra(carrier, BilinearMap(carrier, carrier, carrier, constants),
                   name=f"{alg.name}/I" if alg.name else "quotient")
    images = [coords[rep[g]] for g in amb.generators()]
    proj = AlgebraHom(alg, quot, ModuleHom(amb, carrier, images), name="projection")
    return quot, proj


def semidirect_product(s_alg: Algebra, r_alg: Algebra, act: BilinearMap,
                       name: str = "") -> Algebra:
    """S |x R with product (s,r)(s',r') = (ss', s.r' + s'.r + rr')."""
    if act.left != s_alg.carrier or act.right != r_alg.carrier \
            or act.target != r_alg.carrier:
        raise StructuralError("action tensor must map S x R into R")
    carrier = direct_sum([s_alg.carrier, r_alg.carrier])
    ps, pr = s_alg.carrier.rank, r_alg.carrier.rank
    zs, zr = (0,) * ps, (0,) * pr
    constants = []
    for i in range(ps + pr):
        row = []
        for j in range(ps + pr):
            if i < ps and j < ps:
                row.append(s_alg.mul.constants[i][j] + zr)
            elif i < ps:
                row.append(zs + act.constants[i][j - ps])
            elif j < ps:
                row.append(zs + act.constants[j][i - ps])
            else:
                row.append(zs + r_alg.mul.constants[i - ps][j - ps])
        constants.append(row)
    return Algebra(carrier, BilinearMap(carrier, carrier, carrier, constants),
                   name=name or "semidirect")
