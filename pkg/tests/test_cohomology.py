from fractions import Fraction

import pytest

from sullivan.cdga import FreeCDGA, Morphism, rename_generators
from sullivan.cohomology import (
    Cohomology,
    RingPresentation,
    betti,
    class_of,
    cup_product,
    is_quasi_iso,
    max_basis_cap,
    quotient_ring_dims,
)
from sullivan.constructors import bsp_model, hp_model, sphere_model
from sullivan.errors import NotACocycleError, ResourceLimitError
from sullivan.gradedalg import Generator, Polynomial

from helpers import betti_by_elimination, random_pure_model, total_dim


def gen_of(model, name):
    return next(g for g in model.generators if g.name == name)


def test_sphere_betti():
    assert betti(sphere_model(4), 12).nonzero() == {0: 1, 4: 1}
    assert betti(sphere_model(8), 20).nonzero() == {0: 1, 8: 1}


def test_quaternionic_projective_space_betti():
    assert betti(hp_model(1), 8).nonzero() == {0: 1, 4: 1}
    assert betti(hp_model(2), 12).nonzero() == {0: 1, 4: 1, 8: 1}
    assert betti(hp_model(3), 16).nonzero() == {0: 1, 4: 1, 8: 1, 12: 1}


def test_classifying_space_betti_is_polynomial():
    # polynomial algebra on degrees 4 and 8
    got = betti(bsp_model(2), 16).nonzero()
    assert got == {0: 1, 4: 1, 8: 2, 12: 2, 16: 3}


def test_betti_agrees_with_dense_oracle_on_random_models(rng):
    for _ in range(25):
        m = random_pure_model(rng)
        assert betti(m, 11).nonzero() == betti_by_elimination(m, 11)


def test_report_bookkeeping_fields():
    report = betti(hp_model(2), 12, representatives=True)
    assert report.max_degree == 12
    assert report.total_dim() == 3
    assert report.betti[5] == 0
    assert [str(p) for p in report.representatives[8]] == ["x4^2"]
    # rank(d) in one degree is shared between the two tallies
    for n in range(1, 12):
        assert report.cocycle_rank[n] >= 0
        assert report.coboundary_rank[n] >= 0


def test_representatives_are_cocycles_and_not_coboundaries():
    m = hp_model(2)
    coh = Cohomology(m)
    report = betti(m, 12, representatives=True)
    for degree, reps in report.representatives.items():
        for p in reps:
            cls = class_of(m, p, coh)
            assert cls.degree == degree
            assert not cls.is_zero()


def test_class_of_rejects_non_cocycles():
    m = hp_model(2)
    x7 = gen_of(m, "x11")
    with pytest.raises(NotACocycleError):
        class_of(m, Polynomial.gen(x7))


def test_class_of_kills_coboundaries():
    m = hp_model(2)
    y4 = gen_of(m, "x4")
    # d(x11) = x4^3 is a coboundary
    cls = class_of(m, Polynomial.gen(y4) ** 3)
    assert cls.is_zero()


def test_cup_product_truncated_polynomial_structure():
    m = hp_model(2)
    y4 = Polynomial.gen(gen_of(m, "x4"))
    square = cup_product(m, y4, y4)
    assert not square.is_zero()
    assert square.degree == 8
    cube = cup_product(m, y4, square.representative)
    assert cube.is_zero()


def test_quotient_ring_dims_matches_truncated_algebra():
    x = Generator("x4", 4)
    pres = RingPresentation((x,), (Polynomial.gen(x) ** 3,))
    dims = quotient_ring_dims(pres, 16)
    assert {n: d for n, d in dims.items() if d} == {0: 1, 4: 1, 8: 1}


def test_quotient_ring_dims_two_variable_complete_intersection():
    x = Generator("x4", 4)
    y = Generator("y4", 4)
    r1 = Polynomial.gen(x) ** 2 + Polynomial.gen(x) * Polynomial.gen(y) + Polynomial.gen(y) ** 2
    r2 = Polynomial.gen(y) ** 3
    dims = quotient_ring_dims(RingPresentation((x, y), (r1, r2)), 16)
    assert {n: d for n, d in dims.items() if d} == {0: 1, 4: 2, 8: 2, 12: 1}


def test_ring_presentation_validates_input():
    x = Generator("x4", 4)
    odd = Generator("z3", 3)
    with pytest.raises(ValueError, match="odd degree"):
        RingPresentation((odd,), ())
    with pytest.raises(ValueError, match="unknown generators"):
        RingPresentation((x,), (Polynomial.gen(Generator("w4", 4)),))
    inhomog = Polynomial.gen(x) + Polynomial.gen(x) ** 2
    with pytest.raises(Exception, match="not homogeneous"):
        RingPresentation((x,), (inhomog,))


def test_is_quasi_iso_accepts_isomorphic_relabeling():
    m = hp_model(2)
    other = rename_generators(
        m, {g: Generator("z" + g.name[1:], g.degree) for g in m.generators}
    )
    f = Morphism(
        m,
        other,
        {g: Polynomial.gen(Generator("z" + g.name[1:], g.degree)) for g in m.generators},
    )
    report = is_quasi_iso(f, 12)
    assert report.ok
    assert report.failing_degrees() == []
    assert all(v.describe() == "bijective" for v in report.per_degree.values())


def test_is_quasi_iso_flags_failures_per_degree():
    s4 = sphere_model(4)
    bs = bsp_model(1)
    a4 = gen_of(s4, "a4")
    y4 = gen_of(bs, "y4")
    f = Morphism(bs, s4, {y4: Polynomial.gen(a4)})
    report = is_quasi_iso(f, 8)
    assert not report.ok
    assert report.failing_degrees() == [8]
    verdict = report.per_degree[8]
    assert verdict.source_dim == 1 and verdict.target_dim == 0
    assert verdict.describe() == "not-injective"


def test_is_quasi_iso_rejects_non_chain_maps():
    m = hp_model(2)
    y11 = gen_of(m, "x11")
    bad = Morphism(m, m, {gen_of(m, "x4"): Polynomial.gen(gen_of(m, "x4")), y11: Polynomial.zero()})
    with pytest.raises(ValueError, match="chain condition"):
        is_quasi_iso(bad, 12)


def test_max_basis_cap_env_override(monkeypatch):
    monkeypatch.delenv("RHT_MAX_BASIS", raising=False)
    default = max_basis_cap()
    monkeypatch.setenv("RHT_MAX_BASIS", "123")
    assert max_basis_cap() == 123
    assert max_basis_cap(7) == 7
    monkeypatch.setenv("RHT_MAX_BASIS", "not-a-number")
    with pytest.raises(ResourceLimitError, match="bad RHT_MAX_BASIS"):
        max_basis_cap()
    assert default > 0


def test_betti_respects_basis_cap():
    with pytest.raises(ResourceLimitError):
        betti(bsp_model(3), 40, max_basis=10)
