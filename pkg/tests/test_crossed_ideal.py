"""Sub crossed modules, crossed ideals and crossed ideal maps."""

import pytest

from idealbar.core import (
    BilinearMap,
    ModuleHom,
    PreconditionError,
    StructuralError,
    Submodule,
)
from idealbar.crossed_ideal import (
    CrossedIdealMap,
    SubXMod,
    XModMorphism,
    image_crossed_ideal_check,
    image_sub_xmod,
    inclusion_cim,
    sub_crossed_module,
    validate_crossed_ideal,
    validate_crossed_ideal_map,
    validate_morphism,
)
from idealbar.fixtures import (
    nilcube_bad_sub,
    nilcube_cim,
    nilcube_morphism,
    nilcube_sub,
    nilcube_xmod,
)


def test_fixture_morphism_validates():
    rep = validate_morphism(nilcube_morphism())
    assert rep.passed, rep.render()


def test_morphism_square_detects_wrong_base_leg():
    mor = nilcube_morphism()
    # send the sub generator x^2 to x instead
    wrong_nu = type(mor.alpha2)(
        mor.alpha2.dom, mor.alpha2.cod,
        ModuleHom(mor.alpha2.dom.carrier, mor.alpha2.cod.carrier, [(0, 1, 0)]),
        name="nu")
    rep = validate_morphism(XModMorphism(mor.source, mor.target,
                                         mor.alpha1, wrong_nu))
    assert rep.find("square-commutes").status == "FAIL"


def test_morphism_shape_errors():
    mor = nilcube_morphism()
    with pytest.raises(StructuralError):
        XModMorphism(mor.source, mor.target, mor.alpha2, mor.alpha2)


def test_sub_assembles_from_subsets():
    sx = nilcube_sub()
    assert sx.sub is not None
    assert sx.problems == ()
    assert sx.sub.r_alg.carrier.orders == (2,)
    assert sx.sub.s_alg.carrier.orders == (2,)
    # x^2 * x^2 = 0 in both layers
    assert sx.sub.r_alg.multiply((1,), (1,)) == (0,)
    assert sx.sub.s_alg.multiply((1,), (1,)) == (0,)


def test_two_construction_paths_agree():
    sx = nilcube_sub()
    mor = nilcube_morphism()
    declared = SubXMod.from_inclusions(mor.target, mor.source,
                                       mor.alpha1, mor.alpha2,
                                       name="declared")
    assert declared == sx


def test_crossed_ideal_passes_on_the_good_sub():
    rep = validate_crossed_ideal(nilcube_sub())
    assert rep.passed, rep.render()
    names = {n.name for n in rep.walk()}
    assert {"ci1-sub-crossed-module", "ci2-ideals",
            "ci3-sub-base-acts-into-sub", "ci4-base-acts-into-sub"} <= names


def test_bad_sub_fails_eta_containment():
    sx = nilcube_bad_sub()
    assert sx.sub is None
    rep = validate_crossed_ideal(sx)
    assert not rep.passed
    node = rep.find("eta-maps-sub-into-sub")
    assert node.status == "FAIL"
    # eta(x) = x lies outside the span of x^2
    assert node.witness == ((1, 0),)
    # with no assembled sub the dependent checks are skipped, not failed
    assert rep.find("sub-structure").status == "SKIP"


def test_non_ideal_base_subset_fails_ci2():
    xm = nilcube_xmod()
    zero_r = Submodule(xm.r_alg.carrier, [(0, 0)])
    span_one = Submodule.from_generators(xm.s_alg.carrier, [(1, 0, 0)])
    sx = sub_crossed_module(xm, zero_r, span_one, name="unit-span")
    # the sub assembles fine; what breaks is the ideal clause
    assert sx.sub is not None
    rep = validate_crossed_ideal(sx)
    assert rep.find("s-sub-is-ideal").status == "FAIL"
    # and the canonical map cannot be built over a non-ideal
    with pytest.raises(PreconditionError):
        inclusion_cim(sx)


def test_inclusion_cim_tensors():
    cim = nilcube_cim()
    # x^2 annihilates R, so h is identically zero here
    assert cim.h.constants == (((0,),), ((0,),))
    # S acts on the span of x^2 through its constant term
    assert cim.act2.tensor.constants == (((1,),), ((0,),), ((0,),))


def test_inclusion_cim_validates():
    rep = validate_crossed_ideal_map(nilcube_cim())
    assert rep.passed, rep.render()
    assert rep.find("h-base-balance").status == "PASS"


def test_balance_flag_skips_the_interpreted_clause():
    rep = validate_crossed_ideal_map(nilcube_cim(), check_balance=False)
    node = rep.find("h-base-balance")
    assert node.status == "SKIP"
    assert rep.passed


def test_mutated_h_is_caught():
    cim = nilcube_cim()
    bad_h = BilinearMap(cim.h.left, cim.h.right, cim.h.target,
                        [[(1,)], [(0,)]])
    mutated = CrossedIdealMap(cim.morphism, cim.act1, cim.act2, bad_h,
                              name="mutated")
    rep = validate_crossed_ideal_map(mutated)
    assert not rep.passed
    node = rep.find("alpha1-of-h")
    assert node.status == "FAIL"
    assert node.witness == ((1, 0), (1,))


def test_cim_shape_errors():
    cim = nilcube_cim()
    with pytest.raises(StructuralError):
        CrossedIdealMap(cim.morphism, cim.act2, cim.act2, cim.h)


def test_image_is_a_crossed_ideal():
    cim = nilcube_cim()
    sx = image_sub_xmod(cim)
    assert sx.sub is not None
    rep = image_crossed_ideal_check(cim)
    assert rep.passed, rep.render()
    for node in rep.walk():
        if node.kind is not None:
            assert node.kind in ("THEOREM", "STRUCTURAL")


def test_image_of_inclusion_recovers_the_subsets():
    cim = nilcube_cim()
    sx = image_sub_xmod(cim)
    assert set(sx.r_subset.elements) == {(0, 0), (0, 1)}
    assert set(sx.s_subset.elements) == {(0, 0, 0), (0, 0, 1)}
