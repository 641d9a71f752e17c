"""Actions and crossed modules of commutative Z/m-algebras.

Two kinds of action live here.  A ModuleAction is a raw table x^r with
the translation-style axioms (adding actors composes the action); these
are exactly the actions the bar construction is built from.  An
AlgebraAction is a bilinear tensor S x R -> R; together with an algebra
hom eta: R -> S and the two crossed-module axioms

    CM1:  eta(s.r)    = s * eta(r)
    CM2:  eta(r).r'   = r * r'

it forms a crossed module.
"""

from __future__ import annotations

from .core import (Algebra, AlgebraHom, BilinearMap, FiniteModule,
                   ModuleHom, PreconditionError, StructuralError, Submodule,
                   image, is_ideal, kernel, subalgebra_presentation,
                   validate_algebra, validate_hom)
from .policy import Policy, sweep
from .report import AXIOM, FAIL, NOTE, PASS, STRUCTURAL, THEOREM, Report, group, leaf


class ModuleAction:
    """Tabulated right action of an algebra R on a module X."""

    def __init__(self, algebra: Algebra, space: FiniteModule, table: dict):
        self.algebra = algebra
        self.space = space
        self.table = dict(table)
        for x in space.elements():
            for r in algebra.elements():
                if (x, r) not in self.table:
                    raise StructuralError(f"action table misses {(x, r)}")

    @classmethod
    def from_function(cls, algebra: Algebra, space: FiniteModule, fn) -> "ModuleAction":
        table = {(x, r): space.reduce(tuple(fn(x, r)))
                 for x in space.elements() for r in algebra.elements()}
        return cls(algebra, space, table)

    def apply(self, x, r):
        return self.table[(tuple(x), tuple(r))]

    def translation_hom(self) -> ModuleHom:
        """The additive map r -> 0^r.  For a valid action x^r = x + 0^r,
        so this hom carries all of the action's content."""
        zero = self.space.zero
        images = [self.apply(zero, g) for g in self.algebra.generators()]
        return ModuleHom(self.algebra.carrier, self.space, images, name="translation")


def translation_action(eta: AlgebraHom) -> ModuleAction:
    """Action of R on the module of S by x^r = x + eta(r)."""
    s_mod = eta.cod.carrier
    return ModuleAction.from_function(
        eta.dom, s_mod, lambda x, r: s_mod.add(x, eta.apply(r)))


def validate_module_action(act: ModuleAction, policy: Policy | None = None) -> Report:
    alg, sp = act.algebra, act.space
    xs, rs = sp.elements(), alg.elements()
    checks = []

    res = sweep([xs, rs, rs],
                lambda x, r1, r2: act.apply(x, alg.carrier.add(r1, r2))
                == act.apply(act.apply(x, r1), r2), policy)
    checks.append(leaf("actor-sum-composes", PASS if res.ok else FAIL, AXIOM,
                       detail="x^(r1+r2) = (x^r1)^r2", witness=res.witness,
                       meta=res.meta()))

    res = sweep([xs], lambda x: act.apply(x, alg.zero) == x, policy)
    checks.append(leaf("zero-acts-trivially", PASS if res.ok else FAIL, AXIOM,
                       detail="x^0 = x", witness=res.witness, meta=res.meta()))

    res = sweep([xs, xs, rs, rs],
                lambda x1, x2, r1, r2:
                act.apply(sp.add(x1, x2), alg.carrier.add(r1, r2))
                == sp.add(act.apply(x1, r1), act.apply(x2, r2)), policy)
    checks.append(leaf("additivity", PASS if res.ok else FAIL, AXIOM,
                       detail="(x1+x2)^(r1+r2) = x1^r1 + x2^r2",
                       witness=res.witness, meta=res.meta()))

    scalars = list(range(alg.modulus))
    res = sweep([scalars, xs, rs],
                lambda k, x, r: sp.scale(k, act.apply(x, r))
                == act.apply(sp.scale(k, x), alg.carrier.scale(k, r)), policy)
    checks.append(leaf("scalar-compatibility", PASS if res.ok else FAIL, AXIOM,
                       detail="k(x^r) = (kx)^(kr)", witness=res.witness,
                       meta=res.meta()))
    return group("validate-module-action", checks)


class AlgebraAction:
    """Bilinear action tensor of an algebra S on an algebra R."""

    def __init__(self, actor: Algebra, acted: Algebra, tensor: BilinearMap):
        if tensor.left != actor.carrier or tensor.right != acted.carrier \
                or tensor.target != acted.carrier:
            raise StructuralError("action tensor must map S x R into R")
        self.actor = actor
        self.acted = acted
        self.tensor = tensor

    def apply(self, s, r):
        return self.tensor.evaluate(s, r)

    def __eq__(self, other):
        return (isinstance(other, AlgebraAction) and self.actor == other.actor
                and self.acted == other.acted and self.tensor == other.tensor)

    def __hash__(self):
        return hash((self.actor, self.acted, self.tensor))


def validate_algebra_action(act: AlgebraAction, policy: Policy | None = None) -> Report:
    """k-bilinearity is carried by the tensor encoding; what can fail is
    torsion, compatibility with the product of R, and composition of
    actors."""
    s_alg, r_alg = act.actor, act.acted
    ss, rs = s_alg.elements(), r_alg.elements()
    checks = []

    bad = next(act.tensor.torsion_violations(), None)
    checks.append(leaf("torsion-compatibility", FAIL if bad else PASS,
                       STRUCTURAL, witness=bad))
    checks.append(leaf("k-bilinearity", PASS, STRUCTURAL,
                       detail="holds by the tensor encoding"))

    def compat(s, r1, r2):
        lhs = act.apply(s, r_alg.multiply(r1, r2))
        return (lhs == r_alg.multiply(act.apply(s, r1), r2)
                and lhs == r_alg.multiply(r1, act.apply(s, r2)))

    res = sweep([ss, rs, rs], compat, policy)
    checks.append(leaf("product-compatibility", PASS if res.ok else FAIL, AXIOM,
                       detail="s.(r1 r2) = (s.r1) r2 = r1 (s.r2)",
                       witness=res.witness, meta=res.meta()))

    res = sweep([ss, ss, rs],
                lambda s1, s2, r: act.apply(s_alg.multiply(s1, s2), r)
                == act.apply(s1, act.apply(s2, r)), policy)
    checks.append(leaf("actor-composition", PASS if res.ok else FAIL, AXIOM,
                       detail="(s1 s2).r = s1.(s2.r)", witness=res.witness,
                       meta=res.meta()))
    return group("validate-algebra-action", checks)


class CrossedModule:
    def __init__(self, eta: AlgebraHom, action: AlgebraAction, name: str = ""):
        if action.actor != eta.cod or action.acted != eta.dom:
            raise StructuralError("action does not match the hom eta: R -> S")
        self.eta = eta
        self.action = action
        self.name = name

    @property
    def r_alg(self) -> Algebra:
        return self.eta.dom

    @property
    def s_alg(self) -> Algebra:
        return self.eta.cod

    def __eq__(self, other):
        return (isinstance(other, CrossedModule) and self.eta == other.eta
                and self.action == other.action)

    def __hash__(self):
        return hash((self.eta, self.action))

    def __repr__(self):
        return f"CrossedModule({self.name or 'unnamed'})"


def cm1_report(xm: CrossedModule, policy: Policy | None = None) -> Report:
    s_alg, r_alg = xm.s_alg, xm.r_alg
    res = sweep([s_alg.elements(), r_alg.elements()],
                lambda s, r: xm.eta.apply(xm.action.apply(s, r))
                == s_alg.multiply(s, xm.eta.apply(r)), policy)
    return leaf("cm1", PASS if res.ok else FAIL, AXIOM,
                detail="eta(s.r) = s eta(r)", witness=res.witness,
                meta=res.meta())


def cm2_report(xm: CrossedModule, policy: Policy | None = None) -> Report:
    r_alg = xm.r_alg
    res = sweep([r_alg.elements(), r_alg.elements()],
                lambda r1, r2: xm.action.apply(xm.eta.apply(r1), r2)
                == r_alg.multiply(r1, r2), policy)
    return leaf("cm2", PASS if res.ok else FAIL, AXIOM,
                detail="eta(r1).r2 = r1 r2", witness=res.witness,
                meta=res.meta())


def validate_crossed_module(xm: CrossedModule, policy: Policy | None = None) -> Report:
    """Full stack of checks.  Reported in layers rather than gated, so an
    input that is not even an action still gets CM1/CM2 verdicts."""
    checks = [
        validate_algebra(xm.r_alg, policy),
        validate_algebra(xm.s_alg, policy),
        validate_hom(xm.eta, policy),
        validate_algebra_action(xm.action, policy),
        cm1_report(xm, policy),
        cm2_report(xm, policy),
    ]
    name = xm.name or "xmod"
    return group(f"validate-crossed-module {name}", checks)


def inclusion_xmod(alg: Algebra, ideal: Submodule, name: str = "") -> CrossedModule:
    """The inclusion of an ideal, with S acting on I by multiplication."""
    check = is_ideal(alg, ideal)
    if not check.passed:
        raise PreconditionError("inclusion_xmod requires an ideal")
    sub_alg, embed, coords = subalgebra_presentation(alg, ideal)
    s_gens = alg.generators()
    constants = [[coords[alg.multiply(sg, emb)] for emb in embed.images]
                 for sg in s_gens]
    tensor = BilinearMap(alg.carrier, sub_alg.carrier, sub_alg.carrier, constants)
    return CrossedModule(embed, AlgebraAction(alg, sub_alg, tensor),
                         name=name or f"incl-{alg.name or 'ideal'}")


def consequence_checks(xm: CrossedModule, policy: Policy | None = None) -> Report:
    """Statements that follow from CM1/CM2; a failure on a validated
    crossed module is an implementation bug, so these are THEOREM class."""
    s_alg, r_alg = xm.s_alg, xm.r_alg
    im = image(xm.eta.hom)
    ker = kernel(xm.eta.hom)
    checks = []

    img_rep = is_ideal(s_alg, im, policy)
    img_rep.name = "image-is-ideal"
    _rekind(img_rep, THEOREM)
    checks.append(img_rep)

    ker_rep = is_ideal(r_alg, ker, policy)
    ker_rep.name = "kernel-is-ideal"
    _rekind(ker_rep, THEOREM)
    checks.append(ker_rep)

    res = sweep([list(ker.elements), r_alg.elements()],
                lambda x, r: r_alg.multiply(x, r) == r_alg.zero, policy)
    checks.append(leaf("kernel-annihilates", PASS if res.ok else FAIL, THEOREM,
                       detail="x r = 0 for x in ker(eta)", witness=res.witness,
                       meta=res.meta()))

    quotient_checks = []
    res = sweep([s_alg.elements(), list(ker.elements)],
                lambda s, x: ker.contains(xm.action.apply(s, x)), policy)
    quotient_checks.append(leaf("kernel-closed-under-action",
                                PASS if res.ok else FAIL, THEOREM,
                                witness=res.witness, meta=res.meta()))
    res = sweep([list(im.elements), list(ker.elements)],
                lambda t, x: xm.action.apply(t, x) == r_alg.zero, policy)
    quotient_checks.append(leaf("image-acts-trivially-on-kernel",
                                PASS if res.ok else FAIL, THEOREM,
                                detail="makes the action of S/im(eta) well defined",
                                witness=res.witness, meta=res.meta()))
    res = sweep([s_alg.elements(), s_alg.elements(), list(ker.elements)],
                lambda s1, s2, x: xm.action.apply(s_alg.multiply(s1, s2), x)
                == xm.action.apply(s1, xm.action.apply(s2, x)), policy)
    quotient_checks.append(leaf("induced-action-composes",
                                PASS if res.ok else FAIL, THEOREM,
                                witness=res.witness, meta=res.meta()))
    quotient_checks.append(leaf(
        "induced-action-reading", NOTE, None,
        detail="checked as a k-bilinear module action; translation-style "
               "axioms are not imposed, they fail for linear actions"))
    checks.append(group("quotient-action-well-defined", quotient_checks))

    name = xm.name or "xmod"
    return group(f"consequence-checks {name}", checks)


def _rekind(rep: Report, kind: str) -> None:
    for node in rep.walk():
        if node.kind == AXIOM:
            node.kind = kind


def phi_cm1_criterion(xm: CrossedModule, policy: Policy | None = None) -> Report:
    """(s, r) -> s + eta(r) from S |x R to S is multiplicative exactly
    when CM1 holds; checked directly from the product formula."""
    s_alg, r_alg = xm.s_alg, xm.r_alg
    eta, act = xm.eta, xm.action

    def phi_ok(s, r, s2, r2):
        prod_r = r_alg.carrier.add(
            r_alg.carrier.add(act.apply(s, r2), act.apply(s2, r)),
            r_alg.multiply(r, r2))
        lhs = s_alg.carrier.add(s_alg.multiply(s, s2), eta.apply(prod_r))
        rhs = s_alg.multiply(s_alg.carrier.add(s, eta.apply(r)),
                             s_alg.carrier.add(s2, eta.apply(r2)))
        return lhs == rhs

    res = sweep([s_alg.elements(), r_alg.elements(),
                 s_alg.elements(), r_alg.elements()], phi_ok, policy)
    return leaf("cm1-phi-criterion", PASS if res.ok else FAIL, AXIOM,
                detail="s + eta(r) multiplicative on S|xR, equivalent to CM1",
                witness=res.witness, meta=res.meta())


def phi_cm2_criterion(xm: CrossedModule, policy: Policy | None = None) -> Report:
    """(a, b) -> (eta(a), b) from R |x R (multiplication action) to S |x R
    is multiplicative exactly when CM2 holds."""
    s_alg, r_alg = xm.s_alg, xm.r_alg
    radd, rmul = r_alg.carrier.add, r_alg.multiply
    eta, act = xm.eta, xm.action

    def phi_ok(a, b, c, d):
        left_s = eta.apply(rmul(a, c))
        left_r = radd(radd(rmul(a, d), rmul(c, b)), rmul(b, d))
        right_s = s_alg.multiply(eta.apply(a), eta.apply(c))
        right_r = radd(radd(act.apply(eta.apply(a), d),
                            act.apply(eta.apply(c), b)), rmul(b, d))
        return left_s == right_s and left_r == right_r

    rs = r_alg.elements()
    res = sweep([rs, rs, rs, rs], phi_ok, policy)
    return leaf("cm2-phi-criterion", PASS if res.ok else FAIL, AXIOM,
                detail="(a, b) -> (eta(a), b) multiplicative into S|xR, "
                       "equivalent to CM2",
                witness=res.witness, meta=res.meta())
