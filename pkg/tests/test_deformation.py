import logging
from fractions import Fraction

import pytest

import homnambu.resource
from homnambu.deformation import (MultiIndex, DeformationFamily,
                                  build_cross_deformation,
                                  build_jacobian_deformation,
                                  build_qvw_deformation, create_family,
                                  dumps, eval_deformed_bracket,
                                  jacobian_parameter_names,
                                  jacobian_parameter_shape, load, loads,
                                  save, split_by_index, verify_deformation)
from homnambu.deformation import _builders
from homnambu.errors import (ArityError, CarrierMismatchError, FormatError,
                             InvalidParameterError, NotAnEndomorphismError,
                             NotUnimodularError, UnknownNameError)
from homnambu.homalgebra import (AlgebraElement, CoefficientMap, Coordinate,
                                 Generator, IdentityMap, Monomial,
                                 SubstitutionMap, TableMap, TernaryHomAlgebra)
from homnambu.models import (cross4_algebra, cross4_triples, cross4_tuples,
                             jacobian3_algebra, jacobian_triples,
                             jacobian_tuples, vw_tuples)
from homnambu.scalars import TruncSeries, series_cos, series_sin

e1, e2, e3, e4 = (Coordinate(i) for i in range(1, 5))


def Q(n):
    return Generator("Q", n)


def R(n):
    return Generator("R", n)


def test_multi_index_enumeration():
    assert MultiIndex.enumerate(2, 2) == [(0, 0), (1, 0), (0, 1), (2, 0),
                                          (1, 1), (0, 2)]
    assert len(MultiIndex.enumerate(3, 2)) == 10
    assert MultiIndex.enumerate(1, 0) == [(0,)]


def test_multi_index_order_and_validation():
    assert MultiIndex((1, 0)).leq(MultiIndex((1, 2)))
    assert not MultiIndex((2, 0)).leq(MultiIndex((1, 2)))
    assert MultiIndex((1, 2)).degree == 3
    assert str(MultiIndex((1, 2))) == "1 2"
    with pytest.raises(InvalidParameterError):
        MultiIndex((1, -1))
    with pytest.raises(ArityError):
        MultiIndex((1,)).leq(MultiIndex((1, 0)))


def test_split_by_index_treats_scalars_as_constants():
    t = TruncSeries.variable(0, 1, 2)
    element = AlgebraElement({e1: 2, e2: t + 1})
    parts = split_by_index(element, 1)
    assert list(parts) == [(0,), (1,)]
    assert parts[(0,)] == AlgebraElement({e1: 2, e2: 1})
    assert parts[(1,)] == AlgebraElement({e2: 1})


# q-deformed Virasoro-Witt


def test_qvw_alpha_is_scaling_by_powers_of_one_plus_t():
    F = build_qvw_deformation(order=2)
    value = F.deformed.alpha(AlgebraElement.basis(Q(-1)))
    assert value.coefficient(Q(-1)) == \
        TruncSeries({(0,): 1, (1,): -1, (2,): 1}, 1, 2)
    assert F.alpha_component((1,), Q(-1)) == AlgebraElement({Q(-1): -1})
    assert F.alpha_component((0,), R(2)) == AlgebraElement({R(2): 1})


def test_qvw_bracket_components():
    F = build_qvw_deformation(order=3)
    value = eval_deformed_bracket(F, Q(1), Q(2), Q(3))
    assert value.coefficient(R(6)) == \
        TruncSeries({(0,): -2, (1,): -12, (2,): -30, (3,): -40}, 1, 3)
    assert F.bracket_component((1,), Q(0), Q(1), R(0)) == \
        AlgebraElement({Q(1): -1})
    assert F.bracket_component((0,), Q(0), Q(1), R(0)) == \
        AlgebraElement({Q(1): -1})
    assert not F.bracket_component((2,), Q(0), Q(1), R(0))


def test_qvw_refuses_non_nambu_lie_base():
    with pytest.raises(InvalidParameterError):
        build_qvw_deformation(order=1, z="1")


def test_qvw_override_warns(caplog):
    with caplog.at_level(logging.WARNING):
        F = build_qvw_deformation(order=1, z="1", allow_any_z=True)
    assert F.params["allow_any_z"] is True
    assert any("not Nambu-Lie" in r.getMessage() for r in caplog.records)


def test_qvw_verifies():
    F = build_qvw_deformation(order=2)
    report = verify_deformation(F, tuples=vw_tuples((0, 1)))
    assert report.passed
    assert report.sample_size == 4 ** 5
    assert [row.degree for row in report.degrees] == [0, 1, 2]
    assert all(row.failing == 0 for row in report.degrees)


def test_qvw_over_other_z_fails_in_degree_zero():
    F = build_qvw_deformation(order=1, z="1", allow_any_z=True,
                              range=(0, 2))
    witness = (Q(0), R(1), Q(2), Q(1), Q(0))
    report = verify_deformation(F, tuples=[witness])
    assert not report.passed
    assert report.degrees[0].failing == 1
    assert report.failures[0].coefficients[(0,)] == \
        AlgebraElement({R(4): -10})


@pytest.mark.slow
def test_qvw_verifies_on_default_sample():
    assert verify_deformation(build_qvw_deformation()).passed


# rotated cross product


def test_cross_alpha_series():
    F = build_cross_deformation(order=3)
    value = F.deformed.alpha(AlgebraElement.basis(e1))
    assert value.coefficient(e1) == \
        TruncSeries({(0, 0): 1, (2, 0): Fraction(-1, 2)}, 2, 3)
    assert value.coefficient(e3) == \
        TruncSeries({(1, 0): 1, (3, 0): Fraction(-1, 6)}, 2, 3)
    assert value.coefficient(e1) == series_cos(0, 3, 2)
    assert value.coefficient(e3) == series_sin(0, 3, 2)


def test_cross_bracket_components():
    F = build_cross_deformation(order=1)
    assert F.bracket_component((0, 0), e1, e2, e3) == AlgebraElement({e4: 1})
    assert F.bracket_component((0, 1), e1, e2, e3) == \
        AlgebraElement({e2: -1})
    assert not F.bracket_component((1, 0), e1, e2, e3)


def test_cross_specializes_to_cross_product():
    F = build_cross_deformation(order=2)
    base = F.specialize()
    cross = cross4_algebra()
    for triple in cross4_triples():
        assert base.bracket(*triple) == cross.bracket(*triple)
    for e in (e1, e2, e3, e4):
        assert base.alpha(AlgebraElement.basis(e)) == AlgebraElement.basis(e)


def test_cross_verifies():
    F = build_cross_deformation(order=2)
    report = verify_deformation(F, tuples=cross4_tuples()[:256])
    assert report.passed
    assert report.skew.passed


def _corrupted_cross_family():
    F = build_cross_deformation(order=1)
    t1 = TruncSeries.variable(0, 2, 1)
    rho = F.deformed.alpha
    table = {e: rho(AlgebraElement.basis(e)) for e in (e1, e2, e3, e4)}
    table[e1] = table[e1] + AlgebraElement({e1: t1})
    alpha = TableMap(table, F.ring, name="rho+t1*P")
    corrupted = TernaryHomAlgebra("cross4[corrupted]", F.deformed.carrier,
                                  F.deformed.rule, alpha, rho, F.ring)
    return DeformationFamily("corrupted", F.base, corrupted, 2, 1)


def test_corrupted_twist_fails_in_degree_one():
    F = _corrupted_cross_family()
    witness = (e1, e2, e2, e1, e3)
    report = verify_deformation(F, tuples=[witness])
    assert not report.passed
    assert report.degrees[0].failing == 0
    assert report.degrees[1].failing == 1
    failure = report.failures[0]
    assert failure.witness == witness
    assert failure.coefficients == {MultiIndex((1, 0)):
                                    AlgebraElement({e3: 1})}
    assert failure.degrees() == [1]
    assert report.to_dict()["failures"][0]["coefficients"] == {"1 0": "e3"}


@pytest.mark.slow
def test_cross_verifies_at_order_six():
    F = build_cross_deformation(order=6)
    assert verify_deformation(F).passed


# Jacobian


def test_jacobian_translation_only():
    F = build_jacobian_deformation(order=2, degree=0)
    assert F.arity == 1
    assert F.params["parameters"] == ["k4"]
    x1, x2, x3 = Monomial((1, 0, 0)), Monomial((0, 1, 0)), Monomial((0, 0, 1))
    cube = Monomial((0, 0, 3))
    assert F.bracket_component((0,), x1, x2, cube) == \
        AlgebraElement({Monomial((0, 0, 2)): 3})
    assert F.bracket_component((1,), x1, x2, cube) == \
        AlgebraElement({x3: 6})
    assert F.bracket_component((2,), x1, x2, cube) == \
        AlgebraElement({Monomial((0, 0, 0)): 3})


def test_jacobian_parameters():
    assert jacobian_parameter_names(1) == ["k4", "p1[x2]", "p1[x3]",
                                           "p2[x3]"]
    p1, p2 = jacobian_parameter_shape(2)
    assert len(p1) == 5 and len(p2) == 2
    assert build_jacobian_deformation(order=1).arity == 4
    with pytest.raises(InvalidParameterError):
        jacobian_parameter_shape(-1)


def test_jacobian_requires_unimodular_k():
    with pytest.raises(NotUnimodularError):
        build_jacobian_deformation(order=1, k=(2, 1, 1))
    F = build_jacobian_deformation(order=1, k=("2", "1/2", "1"))
    assert F.params["k"] == ["2", "1/2", "1"]


def test_jacobian_verifies():
    F = build_jacobian_deformation(order=2)
    report = verify_deformation(F, tuples=jacobian_tuples()[:20])
    assert report.passed


@pytest.mark.slow
def test_jacobian_verifies_at_default_order():
    assert verify_deformation(build_jacobian_deformation()).passed


# truncation and the family interface


def test_truncate_lowers_order():
    F = build_cross_deformation(order=3)
    G = F.truncate(1)
    assert G.order == 1
    cosine = G.deformed.alpha(AlgebraElement.basis(e1)).coefficient(e1)
    assert cosine.order == 1
    assert cosine == TruncSeries.constant(1, 2, 1)
    assert G.bracket_component((0, 1), e1, e2, e3) == \
        F.bracket_component((0, 1), e1, e2, e3)
    with pytest.raises(InvalidParameterError):
        F.truncate(4)


@pytest.mark.parametrize("build", [build_cross_deformation,
                                   build_qvw_deformation])
def test_truncation_matches_a_direct_build(build):
    assert dumps(build(order=3).truncate(1)) == dumps(build(order=1))
    assert dumps(build(order=2).truncate(2)) == dumps(build(order=2))


def test_verify_needs_a_sample():
    F = build_cross_deformation(order=1)
    with pytest.raises(InvalidParameterError):
        verify_deformation(F, tuples=[])


def test_report_dict():
    F = build_cross_deformation(order=1)
    data = verify_deformation(F, tuples=cross4_tuples()[:8]).to_dict()
    assert data["schema"] == "homnambu.deformation-report/1"
    assert data["family"] == "cross4(n=2, N=1)"
    assert data["passed"] is True
    assert [row["degree"] for row in data["degrees"]] == [0, 1]
    assert data["failures"] == []


def test_family_registry():
    F = create_family("jacobian", {"order": 1, "degree": 0})
    assert str(F) == "jacobian(n=1, N=1)"
    assert create_family("cross4").order == 6
    with pytest.raises(UnknownNameError):
        create_family("sl2")
    with pytest.raises(InvalidParameterError):
        create_family("cross4", {"order": -1})
    with pytest.raises(InvalidParameterError):
        create_family("qvw", {"z": "1"})


def _doubling(*args, **kwargs):
    return CoefficientMap(IdentityMap(), lambda c: 2 * c, name="doubling")


def test_builders_reject_a_twist_that_is_no_endomorphism(monkeypatch):
    monkeypatch.setattr(_builders, "rho_q", _doubling)
    with pytest.raises(NotAnEndomorphismError):
        build_qvw_deformation(order=1)

    def doubled_substitution(images, ring, name=None):
        return CoefficientMap(SubstitutionMap(images, ring),
                              lambda c: 2 * c, ring, name="doubled")

    monkeypatch.setattr(_builders, "SubstitutionMap", doubled_substitution)
    with pytest.raises(NotAnEndomorphismError):
        build_jacobian_deformation(order=1, degree=0)


# text format


def test_dumps_is_stable_under_loads():
    text = dumps(build_cross_deformation(order=1))
    assert text.startswith("homnambu-deformation 1\nfamily cross4\n")
    assert "component 0 1\n" in text
    assert text.endswith("end\n")
    assert dumps(loads(text)) == text


def test_loaded_family_keeps_components():
    F = build_qvw_deformation(order=1)
    G = loads(dumps(F))
    assert G.order == 1 and G.arity == 1
    assert G.params == F.params
    assert G.bracket_component((1,), Q(0), Q(1), R(0)) == \
        AlgebraElement({Q(1): -1})
    assert G.alpha_component((1,), Q(1)) == AlgebraElement({Q(1): 1})


def test_loaded_family_rejects_keys_outside_basis():
    G = loads(dumps(build_qvw_deformation(order=1)))
    with pytest.raises(CarrierMismatchError):
        G.deformed.bracket(Q(2), Q(0), Q(1))
    with pytest.raises(CarrierMismatchError):
        G.deformed.alpha(AlgebraElement.basis(Q(2)))


def test_save_and_load(tmp_path):
    F = build_cross_deformation(order=1)
    path = tmp_path / "cross4.hnd"
    save(F, str(path))
    assert dumps(load(str(path))) == dumps(F)
    assert dumps(homnambu.resource.load(str(path))) == dumps(F)


@pytest.mark.parametrize("text", [
    "",
    "not a deformation\n",
    "homnambu-deformation 1\nfamily x\n",
    "homnambu-deformation 1\nfamily x\nbase x\ncarrier coordinate:4\n"
    "params {}\narity 1\norder 1\nbasis e1\nbracket e1 e1 e1 = e1:1\nend\n",
    "homnambu-deformation 1\nfamily x\nbase x\ncarrier coordinate:4\n"
    "params {}\narity 1\norder 1\nbasis e1\ncomponent 0\n",
    "homnambu-deformation 1\nfamily x\nbase x\ncarrier coordinate:4\n"
    "params {}\narity 1\norder 1\nbasis e1\ncomponent 2\nend\n",
])
def test_loads_rejects_malformed_text(text):
    with pytest.raises(FormatError):
        loads(text)


def test_jacobian_specializes_to_jacobian_bracket():
    F = build_jacobian_deformation(order=1)
    base = F.specialize()
    jacobian = jacobian3_algebra()
    for triple in jacobian_triples(1):
        assert base.bracket(*triple) == jacobian.bracket(*triple)
