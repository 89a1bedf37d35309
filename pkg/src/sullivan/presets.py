"""Shipped case configurations and their known-discrepancy records.

Four case ids are recognized: prop31, prop32, thm33, thm34.  Each names a
two-sided quotient configuration (classifying generators plus the two
restriction maps) that the verification harness can build, reduce, and
compare against an independently constructed projectivization or an
expected reduced model.  The configurations are also shipped as plain
documents under ``sullivan/data`` so they can be fed back through the
command line; ``scripts/gen_presets.py`` regenerates those files from the
functions here, and the test suite asserts the two agree.

Coefficients that the source derivations leave as free rational parameters
(the beta coefficients of prop32 and the integer coefficients of thm33)
are stored as overridable configuration, never as hardcoded truth.

Each case carries a tuple of Discrepancy records: formulas or claims
transcribed verbatim into the configuration's ``.discrepancies`` file that
the engine rejects or contradicts, together with the corrected form it
uses instead.  The verification report prints them; they are data, not
errors.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from sullivan.cdga import FreeCDGA, Morphism
from sullivan.constructors import (
    ClassifyingData,
    PontryaginData,
    hp_model,
    projectivize,
    sphere_model,
)
from sullivan.gradedalg import Generator, Polynomial

CASES = ("prop31", "prop32", "thm33", "thm34")


def _data_root():
    return resources.files("sullivan").joinpath("data")


def data_text(filename: str) -> str:
    """Contents of a shipped data file."""
    return _data_root().joinpath(filename).read_text(encoding="utf-8")


def data_files() -> tuple[str, ...]:
    """Sorted names of all shipped data files."""
    return tuple(sorted(p.name for p in _data_root().iterdir() if p.is_file()))


@dataclass(frozen=True)
class Discrepancy:
    """One recorded conflict between a transcribed formula and the engine.

    claim is the formula or statement verbatim, issue explains what the
    engine finds wrong with it, corrected is the form actually used (when
    one exists), and evidence names a shipped data file that exhibits the
    rejection.
    """

    key: str
    title: str
    claim: str
    issue: str
    corrected: Optional[str] = None
    evidence: Optional[str] = None


def discrepancies(case: str) -> tuple[Discrepancy, ...]:
    """Known-discrepancy records of a case, parsed from its data file."""
    _check_case(case)
    parser = configparser.ConfigParser()
    parser.read_string(data_text(f"{case}.discrepancies"))
    out = []
    for key in parser.sections():
        section = parser[key]
        for required in ("title", "claim", "issue"):
            if required not in section:
                raise ValueError(
                    f"discrepancy {key!r} of case {case} lacks the {required!r} field"
                )
        out.append(
            Discrepancy(
                key=key,
                title=section["title"],
                claim=section["claim"],
                issue=section["issue"],
                corrected=section.get("corrected"),
                evidence=section.get("evidence"),
            )
        )
    return tuple(out)


def _check_case(case: str) -> None:
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")


def default_n(case: str) -> Optional[int]:
    """The parameter value used when none is given; thm34 takes none."""
    _check_case(case)
    return None if case == "thm34" else 2


def _binomials(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(math.comb(n + 1, i)) for i in range(1, n + 2))


def default_betas(case: str, n: int) -> Optional[tuple[Fraction, ...]]:
    """Default free coefficients of a case.

    prop32 uses one beta per middle generator (binomial defaults, which
    reproduce the pinned acceptance values 3, 3, 1 at n = 2); thm33 uses
    n + 1 for every non-top restriction image and 1 for the top one.
    thm34 and prop31 have no free coefficients.
    """
    _check_case(case)
    if case == "prop32":
        return _binomials(n)
    if case == "thm33":
        return tuple(Fraction(n + 1) for _ in range(2 * n - 1)) + (Fraction(1),)
    return None


def classifying_data(
    case: str, n: Optional[int] = None, betas: Optional[tuple[Fraction, ...]] = None
) -> ClassifyingData:
    """Build the classifying configuration of a case.

    n defaults per case (thm34 accepts none); betas override the free
    coefficients where the case has any.  Middle generators whose
    restriction image is zero are omitted from the maps, matching the
    shipped document files.
    """
    _check_case(case)
    if case == "thm34":
        if n is not None:
            raise ValueError("case thm34 takes no parameter n")
        if betas is not None:
            raise ValueError("case thm34 has no free coefficients")
        return _thm34_data()
    if n is None:
        n = default_n(case)
    assert n is not None
    if case == "prop31":
        if betas is not None:
            raise ValueError("case prop31 has no free coefficients")
        if n < 2:
            raise ValueError(f"case prop31 needs n >= 2, got {n}")
        return _prop31_data(n)
    if betas is None:
        betas = default_betas(case, n)
    assert betas is not None
    if case == "prop32":
        if n < 2:
            raise ValueError(f"case prop32 needs n >= 2, got {n}")
        if len(betas) != n + 1:
            raise ValueError(f"case prop32 at n = {n} needs {n + 1} betas, got {len(betas)}")
        return _prop32_data(n, betas)
    if n < 1:
        raise ValueError(f"case thm33 needs n >= 1, got {n}")
    if len(betas) != 2 * n:
        raise ValueError(f"case thm33 at n = {n} needs {2 * n} coefficients, got {len(betas)}")
    return _thm33_data(n, betas)


def _thm34_data() -> ClassifyingData:
    a4, c4 = Generator("a4", 4), Generator("c4", 4)
    b4 = Generator("b4", 4)
    v4, v8, v12 = Generator("v4", 4), Generator("v8", 8), Generator("v12", 12)
    pa, pc, pb = Polynomial.gen(a4), Polynomial.gen(c4), Polynomial.gen(b4)
    return ClassifyingData(
        wh=(a4, c4),
        wk=(b4,),
        v=(v4, v8, v12),
        phi_h={v4: pa + pc, v8: pa * pc},
        phi_k={v4: 3 * pb, v8: 3 * pb**2, v12: pb**3},
        suspension_names={v4: "v3", v8: "v7", v12: "v11"},
    )


def _prop31_data(n: int) -> ClassifyingData:
    wh = tuple(Generator(f"v{4 * i}", 4 * i) for i in range(1, n))
    a4 = Generator("a4", 4)
    b4 = Generator("b4", 4)
    zs = tuple(Generator(f"z{4 * i}", 4 * i) for i in range(1, n))
    pa = Polynomial.gen(a4)
    phi_h = {b4: Polynomial.gen(wh[0])}
    phi_h.update({z: Polynomial.gen(wh[i]) for i, z in enumerate(zs)})
    phi_k = {b4: pa, zs[0]: pa}
    suspension_names = {b4: "b3"}
    suspension_names.update({z: f"z{4 * i - 1}" for i, z in enumerate(zs, start=1)})
    return ClassifyingData(
        wh=wh, wk=(a4,), v=(b4,) + zs, phi_h=phi_h, phi_k=phi_k,
        suspension_names=suspension_names,
    )


def _prop32_data(n: int, betas: tuple[Fraction, ...]) -> ClassifyingData:
    x4 = Generator("x4", 4)
    bs = tuple(Generator(f"b{4 * i}", 4 * i) for i in range(1, n))
    c4 = Generator("c4", 4)
    middles = tuple(Generator(f"a{4 * i}", 4 * i) for i in range(1, n + 2))
    px, pc = Polynomial.gen(x4), Polynomial.gen(c4)

    def b_poly(i: int) -> Polynomial:
        if i == 0:
            return Polynomial.scalar(Fraction(1))
        if i <= n - 1:
            return Polynomial.gen(bs[i - 1])
        return Polynomial.zero()

    phi_h = {}
    for i, a in enumerate(middles, start=1):
        img = px * b_poly(i - 1) + b_poly(i)
        if not img.is_zero():
            phi_h[a] = img
    phi_k = {
        a: beta * pc**i
        for i, (a, beta) in enumerate(zip(middles, betas), start=1)
        if beta != 0
    }
    suspension_names = {a: f"a{a.degree - 1}" for a in middles}
    return ClassifyingData(
        wh=(x4,) + bs, wk=(c4,), v=middles, phi_h=phi_h, phi_k=phi_k,
        suspension_names=suspension_names,
    )


def _thm33_data(n: int, coefficients: tuple[Fraction, ...]) -> ClassifyingData:
    zs = tuple(Generator(f"z{4 * i}", 4 * i) for i in range(1, 2 * n))
    b4 = Generator("b4", 4)
    middles = tuple(Generator(f"y{4 * i}", 4 * i) for i in range(1, 2 * n + 1))
    pb = Polynomial.gen(b4)
    phi_h = {y: Polynomial.gen(z) for y, z in zip(middles, zs)}
    phi_k = {
        y: c * pb**i
        for i, (y, c) in enumerate(zip(middles, coefficients), start=1)
        if c != 0
    }
    suspension_names = {y: f"v{y.degree - 1}" for y in middles}
    return ClassifyingData(
        wh=zs, wk=(b4,), v=middles, phi_h=phi_h, phi_k=phi_k,
        suspension_names=suspension_names,
    )


def pontryagin_setup(case: str, n: Optional[int] = None) -> PontryaginData:
    """Base model, rank, and characteristic cocycles of a projectivization case.

    thm34: rank-2 bundle over the quaternionic plane (y-prefixed model)
    with p1 = y4, p2 = y4^2.  thm33 at n: rank-n bundle over the 4n-sphere
    with p_n = a_{4n} the only nonzero class.  The other cases have no
    projectivization side.
    """
    _check_case(case)
    if case == "thm34":
        if n is not None:
            raise ValueError("case thm34 takes no parameter n")
        base = hp_model(2, prefix="y")
        y4 = Polynomial.gen(base.gen("y4"))
        return PontryaginData(base=base, rank=2, classes=(y4, y4**2))
    if case != "thm33":
        raise ValueError(f"case {case} has no projectivization side")
    if n is None:
        n = 2
    if n < 1:
        raise ValueError(f"case thm33 needs n >= 1, got {n}")
    base = sphere_model(4 * n)
    top_class = Polynomial.gen(base.gen(f"a{4 * n}"))
    classes = tuple(Polynomial.zero() for _ in range(n - 1)) + (top_class,)
    return PontryaginData(base=base, rank=n, classes=classes)


def comparison_morphism(case: str, n: Optional[int] = None) -> Morphism:
    """The sign-corrected comparison map of a case.

    thm34: from the reduced four-generator quotient model into the full
    projectivization model.  thm33: between the two reduced two-generator
    models.  Both pass the chain check; the verbatim transcriptions that
    do not are shipped separately as *_verbatim.morphism exhibits.
    """
    _check_case(case)
    if case == "thm34":
        if n is not None:
            raise ValueError("case thm34 takes no parameter n")
        a4, b4 = Generator("a4", 4), Generator("b4", 4)
        v7, v11 = Generator("v7", 7), Generator("v11", 11)
        pa, pb = Polynomial.gen(a4), Polynomial.gen(b4)
        source = FreeCDGA(
            (a4, b4, v7, v11),
            {v7: -(pa**2) + 3 * pa * pb - 3 * pb**2, v11: -(pb**3)},
        )
        target = projectivize(pontryagin_setup("thm34"))
        x4, y4 = target.gen("x4"), target.gen("y4")
        images = {
            a4: Polynomial.gen(x4) - Polynomial.gen(y4),
            b4: -Polynomial.gen(y4),
            v7: -Polynomial.gen(target.gen("x7")),
            v11: Polynomial.gen(target.gen("y11")),
        }
        return Morphism(source, target, images)
    if case != "thm33":
        raise ValueError(f"case {case} has no comparison morphism")
    if n is None:
        n = 2
    if n < 1:
        raise ValueError(f"case thm33 needs n >= 1, got {n}")
    b4 = Generator("b4", 4)
    v_top = Generator(f"v{8 * n - 1}", 8 * n - 1)
    source = FreeCDGA((b4, v_top), {v_top: -(Polynomial.gen(b4) ** (2 * n))})
    x4 = Generator("x4", 4)
    a_top = Generator(f"a{8 * n - 1}", 8 * n - 1)
    target = FreeCDGA((x4, a_top), {a_top: Polynomial.gen(x4) ** (2 * n)})
    images = {b4: Polynomial.gen(x4), v_top: -Polynomial.gen(a_top)}
    return Morphism(source, target, images)


_DESCRIPTIONS = {
    "prop31": (
        "Sp(1)\\(Sp(1)xSp(n-1))/Sp(n-1): the recorded conclusion calls the "
        "model contractible; the computed cohomology is nontrivial in "
        "degrees 3 and 4."
    ),
    "prop32": (
        "Sp(1)\\Sp(n+1)/(Sp(1)xSp(n-1)): reduces to a four-generator model "
        "with configurable beta coefficients; at n = 2 with betas 3, 3, 1 "
        "it reproduces the thm34 reduced model after renaming."
    ),
    "thm33": (
        "Sp(1)\\Sp(2n)/Sp(2n-1): reduces to two generators and compares "
        "with the rank-n projectivization over the 4n-sphere."
    ),
    "thm34": (
        "Sp(1)\\Sp(3)/(Sp(1)xSp(1)): reduces to four generators and "
        "compares with the rank-2 projectivization over the quaternionic "
        "plane."
    ),
}


@dataclass(frozen=True)
class PresetCase:
    """A fully assembled case: configuration, coefficients, and records."""

    case: str
    n: Optional[int]
    description: str
    classifying: ClassifyingData
    betas: Optional[tuple[Fraction, ...]]
    discrepancies: tuple[Discrepancy, ...]


def preset_case(
    case: str, n: Optional[int] = None, betas: Optional[tuple[Fraction, ...]] = None
) -> PresetCase:
    """Assemble a case by id, with optional parameter and coefficients."""
    _check_case(case)
    if case != "thm34" and n is None:
        n = default_n(case)
    data = classifying_data(case, n, betas)
    if betas is None and case in ("prop32", "thm33"):
        assert n is not None
        betas = default_betas(case, n)
    return PresetCase(
        case=case,
        n=n,
        description=_DESCRIPTIONS[case],
        classifying=data,
        betas=betas,
        discrepancies=discrepancies(case),
    )
