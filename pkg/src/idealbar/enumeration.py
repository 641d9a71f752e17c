"""Exhaustive enumeration at desk scale, and the seeded fuzz pipeline.

Everything here is deterministic: order tuples, tensors and images are
produced in lexicographic order, and the fuzzer draws from a seeded
generator, so two runs with the same arguments list the same objects.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, product

from .core import (Algebra, AlgebraHom, BilinearMap, FiniteModule, ModuleHom,
                   Submodule, UnsupportedScaleError, is_ideal,
                   subalgebra_presentation)
from .crossed_ideal import (inclusion_cim, sub_crossed_module,
                            validate_crossed_ideal,
                            validate_crossed_ideal_map,
                            image_crossed_ideal_check)
from .policy import Policy
from .report import FAIL, NOTE, PASS, THEOREM, Report, group, leaf
from .xmod import (AlgebraAction, CrossedModule, inclusion_xmod,
                   validate_crossed_module)

MAX_PAIR_ENUM = 200_000


def enumerate_order_tuples(modulus: int, rank: int) -> list[tuple]:
    """Non-decreasing tuples of summand orders dividing the modulus."""
    divisors = [d for d in range(2, modulus + 1) if modulus % d == 0]
    return [tuple(t) for t in combinations_with_replacement(divisors, rank)]


def _symmetric_tensors(carrier: FiniteModule):
    """All symmetric structure-constant tensors on a carrier, torsion
    violating ones filtered out."""
    rank = carrier.rank
    cells = [(i, j) for i in range(rank) for j in range(i, rank)]
    for combo in product(carrier.elements(), repeat=len(cells)):
        constants = [[None] * rank for _ in range(rank)]
        for (i, j), val in zip(cells, combo):
            constants[i][j] = val
            constants[j][i] = val
        tensor = BilinearMap(carrier, carrier, carrier, constants)
        if next(tensor.torsion_violations(), None) is None:
            yield tensor


def enumerate_algebras(modulus: int, rank: int) -> list[Algebra]:
    """Every commutative associative algebra structure on every module of
    the given rank, one entry per structure-constant tensor."""
    out = []
    for orders in enumerate_order_tuples(modulus, rank):
        carrier = FiniteModule(modulus, orders)
        if carrier.size ** (rank * (rank + 1) // 2) > MAX_PAIR_ENUM:
            raise UnsupportedScaleError(
                "tensor space too large to enumerate at this rank")
        gens = carrier.generators()
        for tensor in _symmetric_tensors(carrier):
            alg = Algebra(carrier, tensor)
            if all(alg.multiply(alg.multiply(a, b), c)
                   == alg.multiply(a, alg.multiply(b, c))
                   for a in gens for b in gens for c in gens):
                alg.name = f"m{modulus}o{'x'.join(map(str, orders)) or '1'}#{len(out)}"
                out.append(alg)
    return out


def enumerate_homs(dom: Algebra, cod: Algebra) -> list[AlgebraHom]:
    """All multiplicative module homs between two algebras."""
    dgens = dom.generators()
    choices = []
    for d in dom.carrier.orders:
        choices.append([y for y in cod.carrier.elements()
                        if cod.carrier.scale(d, y) == cod.carrier.zero])
    out = []
    for images in product(*choices):
        f = ModuleHom(dom.carrier, cod.carrier, list(images))
        if all(f.apply(dom.multiply(a, b))
               == cod.multiply(f.apply(a), f.apply(b))
               for a in dgens for b in dgens):
            out.append(AlgebraHom(dom, cod, f))
    return out


def enumerate_action_tensors(s_alg: Algebra, r_alg: Algebra) -> list[BilinearMap]:
    """All torsion-compatible bilinear tensors S x R -> R.  These are
    action candidates, not validated actions."""
    s_mod, r_mod = s_alg.carrier, r_alg.carrier
    cells = s_mod.rank * r_mod.rank
    out = []
    for combo in product(r_mod.elements(), repeat=cells):
        constants = [list(combo[i * r_mod.rank:(i + 1) * r_mod.rank])
                     for i in range(s_mod.rank)]
        tensor = BilinearMap(s_mod, r_mod, r_mod, constants)
        if next(tensor.torsion_violations(), None) is None:
            out.append(tensor)
    return out


def enumerate_xmods(r_alg: Algebra, s_alg: Algebra) -> list[CrossedModule]:
    """Every (eta, action tensor) candidate on a fixed pair of algebras."""
    out = []
    for eta in enumerate_homs(r_alg, s_alg):
        for tensor in enumerate_action_tensors(s_alg, r_alg):
            out.append(CrossedModule(
                eta, AlgebraAction(s_alg, r_alg, tensor),
                name=f"cand{len(out)}"))
    return out


def classify_xmods(r_alg: Algebra, s_alg: Algebra,
                   policy: Policy | None = None):
    """Split the candidates into valid crossed modules and rejects, each
    reject paired with its failing report."""
    valid, invalid = [], []
    for xm in enumerate_xmods(r_alg, s_alg):
        rep = validate_crossed_module(xm, policy)
        if rep.passed:
            valid.append(xm)
        else:
            invalid.append((xm, rep))
    return valid, invalid


def all_valid_xmods(modulus: int, max_rank: int,
                    policy: Policy | None = None) -> list[CrossedModule]:
    """Valid crossed modules over every pair of algebras of rank at most
    max_rank."""
    algebras = [a for r in range(max_rank + 1)
                for a in enumerate_algebras(modulus, r)]
    out = []
    for r_alg in algebras:
        for s_alg in algebras:
            valid, _ = classify_xmods(r_alg, s_alg, policy)
            out.extend(valid)
    return out


def enumerate_ideals(alg: Algebra) -> list[Submodule]:
    """All ideals, found by closing subgroups one generator at a time.
    Sorted by size then by element list, so the order is reproducible."""
    carrier = alg.carrier
    zero_sub = Submodule(carrier, [carrier.zero])
    seen = {zero_sub.elements: zero_sub}
    frontier = [zero_sub]
    while frontier:
        base = frontier.pop()
        for e in carrier.elements():
            if base.contains(e):
                continue
            grown = Submodule.from_generators(carrier,
                                              list(base.elements) + [e])
            if grown.elements not in seen:
                seen[grown.elements] = grown
                frontier.append(grown)
    subs = sorted(seen.values(), key=lambda s: (s.size, s.elements))
    return [s for s in subs if is_ideal(alg, s).passed]


def fuzz_cims(modulus: int, max_rank: int, count: int, seed: int = 0):
    """Seeded stream of validated crossed ideal maps.

    Each draw picks an algebra S, an ideal I, and an ideal J inside I;
    the inclusion J -> I -> S then carries a canonical crossed ideal map.
    The construction lands on valid instances by design, but every draw
    is still pushed through the validators and dropped on failure rather
    than trusted."""
    rng = random.Random(seed)
    algebras = [a for r in range(1, max_rank + 1)
                for a in enumerate_algebras(modulus, r)]
    ideal_cache: dict[int, list[Submodule]] = {}
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 50 * count:
            raise UnsupportedScaleError("fuzzer cannot reach the requested count")
        idx = rng.randrange(len(algebras))
        s_alg = algebras[idx]
        if idx not in ideal_cache:
            ideal_cache[idx] = enumerate_ideals(s_alg)
        ideals = ideal_cache[idx]
        big = ideals[rng.randrange(len(ideals))]
        inside = [j for j in ideals if set(j.elements) <= set(big.elements)]
        small = inside[rng.randrange(len(inside))]

        ambient = inclusion_xmod(s_alg, big, name=f"fuzz{len(out)}")
        _, _, coords = subalgebra_presentation(s_alg, big)
        r_subset = Submodule(ambient.r_alg.carrier,
                             [coords[x] for x in small.elements])
        s_subset = Submodule(s_alg.carrier, list(small.elements))
        sx = sub_crossed_module(ambient, r_subset, s_subset,
                                name=f"fuzz{len(out)}")
        if sx.sub is None or not validate_crossed_ideal(sx).passed:
            continue
        out.append((sx, inclusion_cim(sx)))
    return out


def fuzz_report(modulus: int, max_rank: int, count: int, seed: int = 0,
                policy: Policy | None = None) -> Report:
    """Validate every fuzzed instance and its image construction, rolled
    up to one leaf per instance."""
    rows = []
    failures = 0
    for sx, cim in fuzz_cims(modulus, max_rank, count, seed):
        ok = (validate_crossed_ideal_map(cim, policy).passed
              and image_crossed_ideal_check(cim, policy).passed)
        failures += 0 if ok else 1
        rows.append(leaf(cim.name, PASS if ok else FAIL, THEOREM,
                         meta={"r_size": cim.morphism.source.r_alg.carrier.size,
                               "s_size": cim.morphism.target.s_alg.carrier.size}))
    summary = leaf("fuzz-summary", PASS if failures == 0 else FAIL, THEOREM,
                   detail="inclusion maps of fuzzed ideal chains, validated "
                          "and pushed through the image construction",
                   meta={"modulus": modulus, "max_rank": max_rank,
                         "count": count, "seed": seed, "failures": failures})
    return group(f"cim-fuzz m={modulus} rank<={max_rank}", [summary] + rows)


def enumeration_report(modulus: int, max_rank: int,
                       policy: Policy | None = None) -> Report:
    """Counting report: algebras per rank, then crossed module candidates
    over every algebra pair, split into valid and invalid."""
    checks = []
    per_rank = {}
    for r in range(max_rank + 1):
        algs = enumerate_algebras(modulus, r)
        per_rank[r] = algs
        checks.append(leaf(f"algebras @ rank {r}", NOTE, None,
                           meta={"count": len(algs)}))
    total = valid_count = 0
    for r_alg in (a for algs in per_rank.values() for a in algs):
        for s_alg in (a for algs in per_rank.values() for a in algs):
            valid, invalid = classify_xmods(r_alg, s_alg, policy)
            total += len(valid) + len(invalid)
            valid_count += len(valid)
    checks.append(leaf("xmod-candidates", NOTE, None,
                       meta={"total": total, "valid": valid_count,
                             "invalid": total - valid_count}))
    return group(f"enumerate m={modulus} rank<={max_rank}", checks)
