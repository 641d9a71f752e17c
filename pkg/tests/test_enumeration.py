"""Exhaustive enumeration at desk scale and the seeded fuzzer."""

import pytest

from idealbar.core import validate_algebra
from idealbar.crossed_ideal import (
    validate_crossed_ideal,
    validate_crossed_ideal_map,
)
from idealbar.enumeration import (
    all_valid_xmods,
    classify_xmods,
    enumerate_algebras,
    enumerate_action_tensors,
    enumerate_homs,
    enumerate_ideals,
    enumerate_order_tuples,
    enumerate_xmods,
    enumeration_report,
    fuzz_cims,
    fuzz_report,
)
from idealbar.fixtures import (
    nilcube_algebra,
    nilsquare_algebra,
    nilsquare_ideal_algebra,
)
from idealbar.xmod import cm1_report, cm2_report, validate_algebra_action


def test_order_tuples():
    assert enumerate_order_tuples(2, 1) == [(2,)]
    assert enumerate_order_tuples(4, 2) == [(2, 2), (2, 4), (4, 4)]
    assert enumerate_order_tuples(5, 0) == [()]


def test_algebra_counts_at_rank_one():
    assert len(enumerate_algebras(2, 1)) == 2
    assert len(enumerate_algebras(3, 1)) == 3
    assert len(enumerate_algebras(4, 1)) == 6


def test_enumerated_algebras_all_validate():
    for alg in enumerate_algebras(4, 1):
        assert validate_algebra(alg).passed


def test_rank_zero_is_the_zero_algebra():
    algs = enumerate_algebras(2, 0)
    assert len(algs) == 1
    assert algs[0].carrier.size == 1


def test_hom_candidates_for_the_nilsquare_pair():
    r, s = nilsquare_ideal_algebra(), nilsquare_algebra()
    homs = enumerate_homs(r, s)
    assert [h.images for h in homs] == [((0, 0),), ((0, 1),)]


def test_action_tensor_and_candidate_counts():
    r, s = nilsquare_ideal_algebra(), nilsquare_algebra()
    assert len(enumerate_action_tensors(s, r)) == 4
    cands = enumerate_xmods(r, s)
    assert len(cands) == 8
    assert cands[0].name == "cand0"


def test_classification_of_the_nilsquare_pair():
    r, s = nilsquare_ideal_algebra(), nilsquare_algebra()
    valid, invalid = classify_xmods(r, s)
    assert len(valid) == 3
    assert len(invalid) == 5
    for _, rep in invalid:
        assert not rep.passed


def test_a_cm1_only_candidate_exists():
    """Some candidate satisfies everything except CM2; it is the one the
    localization tests lean on.  The witnesses live over R = Z/2 with an
    idempotent generator: eta = 0 makes CM1 vacuous while r r' != 0."""
    algs = [a for rank in (0, 1) for a in enumerate_algebras(2, rank)]
    hits = [xm
            for r_alg in algs for s_alg in algs
            for xm in enumerate_xmods(r_alg, s_alg)
            if validate_algebra_action(xm.action).passed
            and cm1_report(xm).passed and not cm2_report(xm).passed]
    assert hits
    for xm in hits:
        gen = xm.r_alg.generators()[0]
        assert xm.r_alg.multiply(gen, gen) == gen
        assert xm.eta.apply(gen) == xm.s_alg.zero


def test_all_valid_xmods_total():
    assert len(all_valid_xmods(2, 1)) == 9


def test_ideal_lattice_of_the_nilcube():
    sizes = [i.size for i in enumerate_ideals(nilcube_algebra())]
    assert sizes == [1, 2, 4, 8]


def test_ideals_are_sorted_and_reproducible():
    a = enumerate_ideals(nilcube_algebra())
    b = enumerate_ideals(nilcube_algebra())
    assert [i.elements for i in a] == [i.elements for i in b]


def test_fuzzer_yields_validated_instances():
    pairs = fuzz_cims(2, 2, 5, seed=7)
    assert len(pairs) == 5
    for sx, cim in pairs:
        assert validate_crossed_ideal(sx).passed
        assert validate_crossed_ideal_map(cim).passed


def test_fuzzer_is_seed_deterministic():
    a = fuzz_cims(2, 2, 6, seed=3)
    b = fuzz_cims(2, 2, 6, seed=3)
    sizes_a = [(sx.r_subset.size, sx.s_subset.size) for sx, _ in a]
    sizes_b = [(sx.r_subset.size, sx.s_subset.size) for sx, _ in b]
    assert sizes_a == sizes_b
    c = fuzz_cims(2, 2, 6, seed=4)
    sizes_c = [(sx.r_subset.size, sx.s_subset.size) for sx, _ in c]
    assert sizes_a != sizes_c


def test_fuzz_report_rolls_up():
    rep = fuzz_report(2, 2, 8, seed=1)
    assert rep.passed, rep.render()
    summary = rep.find("fuzz-summary")
    assert summary.meta["count"] == 8
    assert summary.meta["failures"] == 0
    # one row per instance on top of the summary
    assert len(rep.checks) == 9


def test_enumeration_report_counts():
    rep = enumeration_report(2, 1)
    assert rep.find("algebras @ rank 0").meta == {"count": 1}
    assert rep.find("algebras @ rank 1").meta == {"count": 2}
    cand = rep.find("xmod-candidates")
    assert cand.meta["total"] == 17
    assert cand.meta["valid"] == 9
    assert cand.meta["invalid"] == 8
