"""Round trip between crossed modules and ideal structures on the bar.

The level-1 product stores the action: (s,0)(0,r) = (0, s.r).  Reading
it off and rebuilding must reproduce every level tensor exactly, in both
directions.  A seeded perturbation harness mutates the canonical level
tensors, filters candidates through the ideal-structure definition, and
round-trips every survivor.
"""

from __future__ import annotations

import random

from .core import (AlgebraHom, BilinearMap, ModuleHom, StructuralError,
                   multiplicativity_report, validate_algebra)
from .bar import (TruncatedBarAlgebra, build_bar_algebra, definition_checks,
                  verify_ideal_axiom, verify_level_homomorphisms)
from .policy import Policy, sweep
from .report import (AXIOM, FAIL, NOTE, PASS, SKIP, STRUCTURAL, THEOREM,
                     Report, group, leaf)
from .xmod import (AlgebraAction, CrossedModule, cm1_report, cm2_report,
                   validate_algebra_action, validate_crossed_module)


class MalformedStructureError(StructuralError):
    """A product of (s,0) with (0,r) left the tail ideal."""


def extract_action(bar: TruncatedBarAlgebra) -> AlgebraAction:
    """Read the action tensor back out of the level-1 product."""
    xm = bar.xm
    s_alg, r_alg = xm.s_alg, xm.r_alg
    constants = []
    for gs in s_alg.generators():
        row = []
        for gr in r_alg.generators():
            w = bar.multiply(1, bar.embed_s(1, gs), bar.embed_r(1, [gr]))
            s_part, blocks = bar.module.split(w, 1)
            if s_part != s_alg.zero:
                raise MalformedStructureError(
                    f"(s,0)(0,r) has base coordinate {s_part} at {(gs, gr)}")
            row.append(blocks[0])
        constants.append(row)
    tensor = BilinearMap(s_alg.carrier, r_alg.carrier, r_alg.carrier, constants)
    return AlgebraAction(s_alg, r_alg, tensor)


def extract_eta(bar: TruncatedBarAlgebra) -> AlgebraHom:
    """eta(r) = d_0(0, r) at level 1."""
    xm = bar.xm
    images = [bar.face(1, 0).apply(bar.embed_r(1, [g]))
              for g in xm.r_alg.generators()]
    hom = ModuleHom(xm.r_alg.carrier, xm.s_alg.carrier, images, name="eta")
    return AlgebraHom(xm.r_alg, xm.s_alg, hom, name="eta")


def _tail_face_multiplicativity(bar: TruncatedBarAlgebra,
                                policy: Policy | None) -> Report:
    """d_0 restricted to the level-2 tail ideal (0,a,b) -> (eta(a), b);
    multiplicative exactly when CM2 holds."""
    if bar.depth < 2:
        return leaf("d0-on-tail-multiplicative @ 2", SKIP, None,
                    detail="needs depth at least 2")
    r_mod = bar.xm.r_alg.carrier
    d0 = bar.face(2, 0)

    def ok(a1, a2, b1, b2):
        u = bar.embed_r(2, [a1, a2])
        v = bar.embed_r(2, [b1, b2])
        lhs = d0.apply(bar.multiply(2, u, v))
        rhs = bar.multiply(1, d0.apply(u), d0.apply(v))
        return lhs == rhs

    rs = r_mod.elements()
    res = sweep([rs, rs, rs, rs], ok, policy)
    return leaf("d0-on-tail-multiplicative @ 2", PASS if res.ok else FAIL,
                AXIOM, witness=res.witness,
                detail="fails exactly on CM2 violations", meta=res.meta())


def verify_extracted(bar: TruncatedBarAlgebra,
                     policy: Policy | None = None) -> Report:
    """Validate the crossed module read off a bar structure, routing the
    CM axioms through the face maps that detect them."""
    checks = []
    try:
        act = extract_action(bar)
    except MalformedStructureError as exc:
        checks.append(leaf("extraction", FAIL, STRUCTURAL, detail=str(exc)))
        return group("verify-extracted", checks)
    eta = extract_eta(bar)
    ext = CrossedModule(eta, act, name="extracted")
    checks.append(validate_algebra_action(act, policy))
    checks.append(cm1_report(ext, policy))
    checks.append(cm2_report(ext, policy))
    checks.append(multiplicativity_report(
        "d0-multiplicative @ 1", bar.face(1, 0), bar.algebras[1],
        bar.algebras[0], policy))
    checks.append(_tail_face_multiplicativity(bar, policy))
    return group("verify-extracted", checks)


def _tensors_mismatch(bar_a: TruncatedBarAlgebra, bar_b: TruncatedBarAlgebra):
    for k, (ta, tb) in enumerate(zip(bar_a.level_tensors(),
                                     bar_b.level_tensors())):
        if ta.constants != tb.constants:
            for i, (ra, rb) in enumerate(zip(ta.constants, tb.constants)):
                for j, (va, vb) in enumerate(zip(ra, rb)):
                    if va != vb:
                        return (k, i, j)
    return None


def roundtrip_from_structure(bar: TruncatedBarAlgebra,
                             policy: Policy | None = None) -> Report:
    """Direction from a structure: extract, rebuild, compare tensors."""
    checks = []
    try:
        act = extract_action(bar)
    except MalformedStructureError as exc:
        checks.append(leaf("extraction", FAIL, STRUCTURAL, detail=str(exc)))
        return group("roundtrip-from-structure", checks)
    ext = CrossedModule(extract_eta(bar), act, name="extracted")
    rebuilt = build_bar_algebra(ext, bar.depth)
    bad = _tensors_mismatch(bar, rebuilt)
    checks.append(leaf(
        "rebuild-products-exact", PASS if bad is None else FAIL, THEOREM,
        detail="level tensors of the rebuilt bar match the input",
        witness=bad, meta={"levels": bar.depth}))
    return group("roundtrip-from-structure", checks)


def roundtrip_check(xm: CrossedModule, depth: int = 4,
                    policy: Policy | None = None) -> Report:
    checks = [validate_crossed_module(xm, policy)]
    bar = build_bar_algebra(xm, depth)

    act = extract_action(bar)
    checks.append(leaf(
        "action-extraction-exact",
        PASS if act.tensor.constants == xm.action.tensor.constants else FAIL,
        THEOREM, detail="(s,0)(0,r) = (0, s.r) recovers the action tensor"))
    eta = extract_eta(bar)
    checks.append(leaf(
        "eta-readback-exact",
        PASS if eta.hom == xm.eta.hom else FAIL, THEOREM,
        detail="d_0 at level 1 recovers eta"))

    checks.append(roundtrip_from_structure(bar, policy))
    checks.append(verify_extracted(bar, policy))
    name = xm.name or "xmod"
    return group(f"roundtrip {name} depth {depth}", checks)


# ---------------------------------------------------------------------------
# perturbation harness


def _mutate_tensors(bar: TruncatedBarAlgebra, rng: random.Random):
    tensors = []
    for k, tensor in enumerate(bar.level_tensors()):
        tensors.append([[list(vec) for vec in row] for row in tensor.constants])
    k = rng.randrange(1, bar.depth + 1)
    lvl = bar.levels[k]
    n = lvl.rank
    for _ in range(rng.randrange(1, 4)):
        i = rng.randrange(n)
        j = rng.randrange(n)
        l = rng.randrange(n)
        cur = tensors[k][i][j][l]
        # always move to a different value, no-op mutants tell us nothing
        v = (cur + 1 + rng.randrange(lvl.orders[l] - 1)) % lvl.orders[l]
        tensors[k][i][j][l] = v
        tensors[k][j][i][l] = v  # keep the tensor symmetric
    out = []
    for k, raw in enumerate(tensors):
        lvl = bar.levels[k]
        out.append(BilinearMap(lvl, lvl, lvl, raw))
    return out


def _passes_definition(bar: TruncatedBarAlgebra, policy: Policy | None) -> bool:
    # sequential early exit; same primitives as definition_checks
    for alg in bar.algebras:
        if not validate_algebra(alg, policy).passed:
            return False
    if not verify_level_homomorphisms(bar, policy).passed:
        return False
    return verify_ideal_axiom(bar, policy).passed


def perturb_and_filter(xm: CrossedModule, depth: int = 2, seed: int = 0,
                       budget: int = 1000,
                       policy: Policy | None = None) -> Report:
    """Candidate 0 is the canonical structure; the rest mutate one level
    tensor at random.  Survivors of the definition filter must round-trip
    exactly."""
    rng = random.Random(seed)
    canonical = build_bar_algebra(xm, depth)
    survivors = 0
    failures = []
    for t in range(budget):
        if t == 0:
            cand = canonical
        else:
            cand = build_bar_algebra(xm, depth,
                                     level_tensors=_mutate_tensors(canonical, rng))
        if not _passes_definition(cand, policy):
            continue
        survivors += 1
        rep = roundtrip_from_structure(cand, policy)
        if not rep.passed:
            failures.append(t)
    checks = [
        leaf("candidates", NOTE, None,
             meta={"budget": budget, "seed": seed, "depth": depth}),
        leaf("survivors", NOTE, None, meta={"count": survivors}),
        leaf("survivors-roundtrip-exact",
             PASS if not failures else FAIL, THEOREM,
             detail="every survivor of the definition filter round-trips",
             witness=tuple(failures[:4]) or None,
             meta={"survivors": survivors}),
    ]
    name = xm.name or "xmod"
    return group(f"perturb-and-filter {name}", checks)
