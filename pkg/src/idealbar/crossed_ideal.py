"""Morphisms of crossed modules, crossed ideals, and crossed ideal maps.

A crossed ideal is a sub crossed module (R' -> S') of (R -> S) whose
pieces are ideals and whose action closures hold:

    CI1  R', S' are subalgebras, the action of S' on R' is induced,
         the sub is itself a crossed module and the inclusion square
         commutes
    CI2  R'R is contained in R', S'S in S'
    CI3  S'.R is contained in R'
    CI4  S.R' is contained in R'

A crossed ideal map over a morphism (alpha1, alpha2) consists of crossed
module structures on alpha1 and alpha2 plus a bilinear h: R2 x S1 -> R1
compatible with everything in sight.  The image of a valid crossed ideal
map is a crossed ideal; inclusions of crossed ideals conversely carry a
canonical crossed ideal map.
"""

from __future__ import annotations

from .core import (AlgebraHom, BilinearMap, ModuleHom, PreconditionError,
                   StructuralError, Submodule, image, maps_equal_report,
                   multiplicativity_report, subalgebra_presentation)
from .policy import Policy, sweep
from .report import (AXIOM, FAIL, PASS, SKIP, STRUCTURAL, THEOREM,
                     Report, group, leaf)
from .xmod import (AlgebraAction, CrossedModule, validate_crossed_module,
                   validate_hom)


class XModMorphism:
    """Pair of algebra homs alpha1: R1 -> R2, alpha2: S1 -> S2 between
    crossed modules."""

    def __init__(self, source: CrossedModule, target: CrossedModule,
                 alpha1: AlgebraHom, alpha2: AlgebraHom, name: str = ""):
        if alpha1.dom != source.r_alg or alpha1.cod != target.r_alg:
            raise StructuralError("alpha1 must map R1 to R2")
        if alpha2.dom != source.s_alg or alpha2.cod != target.s_alg:
            raise StructuralError("alpha2 must map S1 to S2")
        self.source = source
        self.target = target
        self.alpha1 = alpha1
        self.alpha2 = alpha2
        self.name = name


def validate_morphism(mor: XModMorphism, policy: Policy | None = None) -> Report:
    checks = []
    rep = validate_hom(mor.alpha1, policy)
    rep.name = "alpha1-hom"
    checks.append(rep)
    rep = validate_hom(mor.alpha2, policy)
    rep.name = "alpha2-hom"
    checks.append(rep)

    checks.append(maps_equal_report(
        "square-commutes",
        mor.alpha2.hom.compose(mor.source.eta.hom),
        mor.target.eta.hom.compose(mor.alpha1.hom),
        policy, detail="alpha2 eta1 = eta2 alpha1"))

    res = sweep([mor.source.s_alg.elements(), mor.source.r_alg.elements()],
                lambda s1, r1: mor.alpha1.apply(mor.source.action.apply(s1, r1))
                == mor.target.action.apply(mor.alpha2.apply(s1),
                                           mor.alpha1.apply(r1)), policy)
    checks.append(leaf("equivariance", PASS if res.ok else FAIL, AXIOM,
                       detail="alpha1(s1.r1) = alpha2(s1).alpha1(r1)",
                       witness=res.witness, meta=res.meta()))
    name = mor.name or "morphism"
    return group(f"validate-morphism {name}", checks)


class SubXMod:
    """Sub crossed module candidate, kept together with the subsets it
    spans inside the ambient carriers.  sub may be None when the subsets
    do not support a crossed module at all; the obstructions found during
    construction are kept in problems and surface in the CI1 report."""

    def __init__(self, ambient: CrossedModule, sub: CrossedModule | None,
                 mu: AlgebraHom | None, nu: AlgebraHom | None,
                 r_subset: Submodule, s_subset: Submodule,
                 problems=(), name: str = ""):
        self.ambient = ambient
        self.sub = sub
        self.mu = mu
        self.nu = nu
        self.r_subset = r_subset
        self.s_subset = s_subset
        self.problems = tuple(problems)
        self.name = name

    @classmethod
    def from_inclusions(cls, ambient: CrossedModule, sub: CrossedModule,
                        mu: AlgebraHom, nu: AlgebraHom, name: str = "") -> "SubXMod":
        if mu.dom != sub.r_alg or mu.cod != ambient.r_alg:
            raise StructuralError("mu must map the sub R into the ambient R")
        if nu.dom != sub.s_alg or nu.cod != ambient.s_alg:
            raise StructuralError("nu must map the sub S into the ambient S")
        return cls(ambient, sub, mu, nu, image(mu.hom), image(nu.hom), name=name)

    def r_coords(self) -> dict:
        return {self.mu.apply(x): x for x in self.sub.r_alg.elements()}

    def s_coords(self) -> dict:
        return {self.nu.apply(x): x for x in self.sub.s_alg.elements()}

    def __eq__(self, other):
        return (isinstance(other, SubXMod)
                and self.ambient == other.ambient and self.sub == other.sub
                and (self.mu.hom if self.mu else None) == (other.mu.hom if other.mu else None)
                and (self.nu.hom if self.nu else None) == (other.nu.hom if other.nu else None))


def sub_crossed_module(ambient: CrossedModule, r_subset: Submodule,
                       s_subset: Submodule, name: str = "") -> SubXMod:
    """Assemble the sub crossed module spanned by two subsets, inducing
    eta and the action from the ambient structure.  Obstructions are
    recorded instead of raised so the CI report can show them."""
    r_amb, s_amb = ambient.r_alg, ambient.s_alg
    problems = []

    def closed_subalgebra(alg, sub, tag):
        bad = sub.addition_violation()
        if bad is not None:
            problems.append(leaf(f"{tag}-additively-closed", FAIL, STRUCTURAL,
                                 witness=bad))
            return False
        for x in sub.elements:
            for y in sub.elements:
                if not sub.contains(alg.multiply(x, y)):
                    problems.append(leaf(f"{tag}-multiplicatively-closed",
                                         FAIL, AXIOM, witness=(x, y)))
                    return False
        return True

    ok = closed_subalgebra(r_amb, r_subset, "r-subset")
    ok = closed_subalgebra(s_amb, s_subset, "s-subset") and ok

    eta_ok = True
    for x in r_subset.elements:
        if not s_subset.contains(ambient.eta.apply(x)):
            problems.append(leaf("eta-maps-sub-into-sub", FAIL, AXIOM,
                                 detail="eta(R') must land in S'", witness=(x,)))
            eta_ok = False
            break

    act_ok = True
    for s in s_subset.elements:
        for x in r_subset.elements:
            if not r_subset.contains(ambient.action.apply(s, x)):
                problems.append(leaf("induced-action-closed", FAIL, AXIOM,
                                     witness=(s, x)))
                act_ok = False
                break
        if not act_ok:
            break

    if not (ok and eta_ok and act_ok):
        return SubXMod(ambient, None, None, None, r_subset, s_subset,
                       problems, name=name)

    r_alg, mu, r_coords = subalgebra_presentation(r_amb, r_subset)
    s_alg, nu, s_coords = subalgebra_presentation(s_amb, s_subset)
    eta_images = [s_coords[ambient.eta.apply(img)] for img in mu.images]
    eta = AlgebraHom(r_alg, s_alg,
                     ModuleHom(r_alg.carrier, s_alg.carrier, eta_images),
                     name="eta-sub")
    constants = [[r_coords[ambient.action.apply(si, rj)]
                  for rj in mu.images] for si in nu.images]
    act = AlgebraAction(s_alg, r_alg,
                        BilinearMap(s_alg.carrier, r_alg.carrier,
                                    r_alg.carrier, constants))
    sub = CrossedModule(eta, act, name=name or "sub")
    mu = AlgebraHom(r_alg, r_amb, mu.hom, name="mu")
    nu = AlgebraHom(s_alg, s_amb, nu.hom, name="nu")
    return SubXMod(ambient, sub, mu, nu, r_subset, s_subset, name=name)


def validate_crossed_ideal(sx: SubXMod, policy: Policy | None = None) -> Report:
    amb = sx.ambient
    r_amb, s_amb = amb.r_alg, amb.s_alg
    ci1 = list(sx.problems)

    if sx.sub is not None:
        inj = (len(sx.r_coords()) == sx.sub.r_alg.carrier.size
               and len(sx.s_coords()) == sx.sub.s_alg.carrier.size)
        ci1.append(leaf("inclusions-injective", PASS if inj else FAIL,
                        STRUCTURAL))
        ci1.append(multiplicativity_report(
            "mu-multiplicative", sx.mu.hom, sx.sub.r_alg, r_amb, policy))
        ci1.append(multiplicativity_report(
            "nu-multiplicative", sx.nu.hom, sx.sub.s_alg, s_amb, policy))

        res = sweep([sx.sub.s_alg.elements(), sx.sub.r_alg.elements()],
                    lambda s, x: sx.mu.apply(sx.sub.action.apply(s, x))
                    == amb.action.apply(sx.nu.apply(s), sx.mu.apply(x)), policy)
        ci1.append(leaf("action-is-induced", PASS if res.ok else FAIL, AXIOM,
                        detail="mu(s'.r') = nu(s').mu(r')",
                        witness=res.witness, meta=res.meta()))

        sub_rep = validate_crossed_module(sx.sub, policy)
        sub_rep.name = "sub-is-crossed-module"
        ci1.append(sub_rep)

        ci1.append(maps_equal_report(
            "inclusion-square", sx.nu.hom.compose(sx.sub.eta.hom),
            amb.eta.hom.compose(sx.mu.hom), policy,
            detail="nu eta' = eta mu"))
    else:
        ci1.append(leaf("sub-structure", SKIP, None,
                        detail="sub crossed module could not be assembled"))

    checks = [group("ci1-sub-crossed-module", ci1)]

    res = sweep([list(sx.r_subset.elements), r_amb.elements()],
                lambda x, r: sx.r_subset.contains(r_amb.multiply(x, r)), policy)
    r_ideal = leaf("r-sub-is-ideal", PASS if res.ok else FAIL, AXIOM,
                   witness=res.witness, meta=res.meta())
    res = sweep([list(sx.s_subset.elements), s_amb.elements()],
                lambda x, s: sx.s_subset.contains(s_amb.multiply(x, s)), policy)
    s_ideal = leaf("s-sub-is-ideal", PASS if res.ok else FAIL, AXIOM,
                   witness=res.witness, meta=res.meta())
    checks.append(group("ci2-ideals", [r_ideal, s_ideal]))

    res = sweep([list(sx.s_subset.elements), r_amb.elements()],
                lambda s, r: sx.r_subset.contains(amb.action.apply(s, r)), policy)
    checks.append(leaf("ci3-sub-base-acts-into-sub",
                       PASS if res.ok else FAIL, AXIOM,
                       detail="S'.R lands in R'", witness=res.witness,
                       meta=res.meta()))

    res = sweep([s_amb.elements(), list(sx.r_subset.elements)],
                lambda s, x: sx.r_subset.contains(amb.action.apply(s, x)), policy)
    checks.append(leaf("ci4-base-acts-into-sub", PASS if res.ok else FAIL,
                       AXIOM, detail="S.R' lands in R'", witness=res.witness,
                       meta=res.meta()))
    name = sx.name or "sub"
    return group(f"validate-crossed-ideal {name}", checks)


class CrossedIdealMap:
    """A morphism, crossed module structures on both legs, and the mixed
    bilinear map h: R2 x S1 -> R1."""

    def __init__(self, morphism: XModMorphism, act1: AlgebraAction,
                 act2: AlgebraAction, h: BilinearMap, name: str = ""):
        src, tgt = morphism.source, morphism.target
        if act1.actor != tgt.r_alg or act1.acted != src.r_alg:
            raise StructuralError("act1 must let R2 act on R1")
        if act2.actor != tgt.s_alg or act2.acted != src.s_alg:
            raise StructuralError("act2 must let S2 act on S1")
        if h.left != tgt.r_alg.carrier or h.right != src.s_alg.carrier \
                or h.target != src.r_alg.carrier:
            raise StructuralError("h must map R2 x S1 into R1")
        self.morphism = morphism
        self.act1 = act1
        self.act2 = act2
        self.h = h
        self.name = name

    @property
    def alpha1_xmod(self) -> CrossedModule:
        return CrossedModule(self.morphism.alpha1, self.act1, name="alpha1")

    @property
    def alpha2_xmod(self) -> CrossedModule:
        return CrossedModule(self.morphism.alpha2, self.act2, name="alpha2")


def validate_crossed_ideal_map(cim: CrossedIdealMap,
                               policy: Policy | None = None,
                               check_balance: bool = True) -> Report:
    mor = cim.morphism
    src, tgt = mor.source, mor.target
    r1, s1 = src.r_alg, src.s_alg
    r2, s2 = tgt.r_alg, tgt.s_alg

    rep1 = validate_crossed_module(cim.alpha1_xmod, policy)
    rep1.name = "alpha1-crossed-module"
    rep2 = validate_crossed_module(cim.alpha2_xmod, policy)
    rep2.name = "alpha2-crossed-module"
    checks = [rep1, rep2]

    checks.append(maps_equal_report(
        "square-commutes", mor.alpha2.hom.compose(src.eta.hom),
        tgt.eta.hom.compose(mor.alpha1.hom), policy,
        detail="eta2 alpha1 = alpha2 eta1"))

    checks.append(leaf("h-bilinearity", PASS, STRUCTURAL,
                       detail="holds by the tensor encoding"))

    res = sweep([r2.elements(), s1.elements()],
                lambda x, s: mor.alpha1.apply(cim.h.evaluate(x, s))
                == tgt.action.apply(mor.alpha2.apply(s), x), policy)
    checks.append(leaf("alpha1-of-h", PASS if res.ok else FAIL, AXIOM,
                       detail="alpha1 h(r2, s1) = alpha2(s1).r2",
                       witness=res.witness, meta=res.meta()))

    res = sweep([r2.elements(), s1.elements()],
                lambda x, s: src.eta.apply(cim.h.evaluate(x, s))
                == cim.act2.apply(tgt.eta.apply(x), s), policy)
    checks.append(leaf("eta1-of-h", PASS if res.ok else FAIL, AXIOM,
                       detail="eta1 h(r2, s1) = eta2(r2).s1",
                       witness=res.witness, meta=res.meta()))

    res = sweep([r1.elements(), s1.elements()],
                lambda r, s: cim.h.evaluate(mor.alpha1.apply(r), s)
                == src.action.apply(s, r), policy)
    checks.append(leaf("h-on-alpha1-image", PASS if res.ok else FAIL, AXIOM,
                       detail="h(alpha1 r1, s1) = s1.r1",
                       witness=res.witness, meta=res.meta()))

    res = sweep([r2.elements(), r1.elements()],
                lambda x, r: cim.h.evaluate(x, src.eta.apply(r))
                == cim.act1.apply(x, r), policy)
    checks.append(leaf("h-on-eta1-image", PASS if res.ok else FAIL, AXIOM,
                       detail="h(r2, eta1 r1) = r2.r1",
                       witness=res.witness, meta=res.meta()))

    if check_balance:
        res = sweep([s2.elements(), r2.elements(), s1.elements()],
                    lambda t, x, s: cim.h.evaluate(tgt.action.apply(t, x), s)
                    == cim.h.evaluate(x, cim.act2.apply(t, s)), policy)
        checks.append(leaf("h-base-balance", PASS if res.ok else FAIL, AXIOM,
                           detail="h(s2.r2, s1) = h(r2, s2.s1); interpreted "
                                  "reading, no action of S2 on R1 is given",
                           witness=res.witness, meta=res.meta()))
    else:
        checks.append(leaf("h-base-balance", SKIP, None,
                           detail="disabled by flag"))
    name = cim.name or "cim"
    return group(f"validate-crossed-ideal-map {name}", checks)


def image_sub_xmod(cim: CrossedIdealMap) -> SubXMod:
    """The image of the morphism underlying a crossed ideal map, presented
    as a sub crossed module of the target."""
    mor = cim.morphism
    r_img = image(mor.alpha1.hom)
    s_img = image(mor.alpha2.hom)
    return sub_crossed_module(mor.target, r_img, s_img,
                              name=f"image-{cim.name or 'cim'}")


def image_crossed_ideal_check(cim: CrossedIdealMap,
                              policy: Policy | None = None) -> Report:
    """The image of a validated crossed ideal map is a crossed ideal.
    Any failure here on validated input is an implementation bug."""
    sx = image_sub_xmod(cim)
    rep = validate_crossed_ideal(sx, policy)
    for node in rep.walk():
        if node.kind == AXIOM:
            node.kind = THEOREM

    mor = cim.morphism
    res = sweep([mor.source.s_alg.elements(), mor.source.r_alg.elements()],
                lambda s1, r1: mor.alpha1.apply(mor.source.action.apply(s1, r1))
                == mor.target.action.apply(mor.alpha2.apply(s1),
                                           mor.alpha1.apply(r1)), policy)
    push = leaf("pushforward-action-agrees", PASS if res.ok else FAIL, THEOREM,
                detail="the induced action on the image is the restricted "
                       "ambient action, independent of preimage choices",
                witness=res.witness, meta=res.meta())
    return group(f"image-crossed-ideal {cim.name or 'cim'}",
                 [rep, push])


def inclusion_cim(sx: SubXMod, name: str = "") -> CrossedIdealMap:
    """The canonical crossed ideal map carried by a crossed ideal
    inclusion: both legs act by multiplication, h(r, s') = s'.r."""
    if sx.sub is None:
        raise PreconditionError("inclusion_cim needs an assembled sub")
    amb = sx.ambient
    r_amb, s_amb = amb.r_alg, amb.s_alg
    r_coords, s_coords = sx.r_coords(), sx.s_coords()
    mor = XModMorphism(sx.sub, amb, sx.mu, sx.nu,
                       name=name or f"incl-{sx.name or 'sub'}")

    try:
        c1 = [[r_coords[r_amb.multiply(g, img)] for img in sx.mu.images]
              for g in r_amb.generators()]
        c2 = [[s_coords[s_amb.multiply(g, img)] for img in sx.nu.images]
              for g in s_amb.generators()]
        ch = [[r_coords[amb.action.apply(nimg, g)] for nimg in sx.nu.images]
              for g in r_amb.generators()]
    except KeyError as exc:
        raise PreconditionError(
            f"subsets are not closed the way CI2/CI3 require: {exc}") from exc

    act1 = AlgebraAction(r_amb, sx.sub.r_alg,
                         BilinearMap(r_amb.carrier, sx.sub.r_alg.carrier,
                                     sx.sub.r_alg.carrier, c1))
    act2 = AlgebraAction(s_amb, sx.sub.s_alg,
                         BilinearMap(s_amb.carrier, sx.sub.s_alg.carrier,
                                     sx.sub.s_alg.carrier, c2))
    h = BilinearMap(r_amb.carrier, sx.sub.s_alg.carrier,
                    sx.sub.r_alg.carrier, ch)
    return CrossedIdealMap(mor, act1, act2, h,
                           name=name or f"incl-{sx.name or 'sub'}")
