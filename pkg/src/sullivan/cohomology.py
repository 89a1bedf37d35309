"""Exact degree-truncated cohomology of free CDGAs.

Everything is brute force on purpose: each degree gets its full monomial
basis, the differential becomes a sparse matrix of Fractions, and ranks,
kernels, and quotient bases come from exact row reduction.  Cohomology
representatives are the reduced-row-echelon pivots of the cocycle space
modulo coboundaries, so repeated runs pick identical representatives.

RHT_MAX_BASIS in the environment overrides the default cap of 200000
monomials per degree.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sullivan.cdga import FreeCDGA, Morphism, apply_d, compose_and_check
from sullivan.errors import (
    DegreeMismatchError,
    NotACocycleError,
    ResourceLimitError,
)
from sullivan.gradedalg import Generator, Monomial, Polynomial, basis_of_degree
from sullivan.linalg import RowSpace, Vec

DEFAULT_MAX_BASIS = 200_000


def max_basis_cap(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("RHT_MAX_BASIS")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ResourceLimitError(f"bad RHT_MAX_BASIS value {env!r}") from exc
    return DEFAULT_MAX_BASIS


def default_max_degree(model: FreeCDGA) -> int:
    return min(4 * len(model.generators), 40)


@dataclass
class _Stage:
    """Linear data of one degree n: basis, cocycles, and d_n image."""

    basis: list[Monomial]
    index: dict[Monomial, int]
    cocycles: list[Vec]          # kernel of d_n over the degree-n basis
    image: RowSpace              # column span of d_n, over the degree-(n+1) basis
    rank: int                    # rank of d_n


class Cohomology:
    """Per-model cache of exact cohomology data by degree."""

    def __init__(self, model: FreeCDGA, max_basis: Optional[int] = None):
        self.model = model
        self.cap = max_basis_cap(max_basis)
        self._stages: dict[int, _Stage] = {}
        self._h: dict[int, tuple[RowSpace, list[Vec]]] = {}

    def basis(self, n: int) -> list[Monomial]:
        return self._stage(n).basis

    def _stage(self, n: int) -> _Stage:
        if n in self._stages:
            return self._stages[n]
        basis = basis_of_degree(self.model.generators, n, self.cap)
        index = {m: i for i, m in enumerate(basis)}
        target = basis_of_degree(self.model.generators, n + 1, self.cap)
        target_index = {m: i for i, m in enumerate(target)}
        image = RowSpace()
        cocycles: list[Vec] = []
        for j, mono in enumerate(basis):
            dp = apply_d(self.model, Polynomial.monomial(mono))
            col: Vec = {target_index[m]: c for m, c in dp.terms.items()}
            residue, tag = image.add(col, {j: Fraction(1)})
            if not residue:
                cocycles.append(tag)
        stage = _Stage(basis, index, cocycles, image, image.rank)
        # Rank-nullity double entry: dim ker + dim im = dim of the degree.
        assert len(cocycles) + stage.rank == len(basis)
        self._stages[n] = stage
        return stage

    def to_vector(self, p: Polynomial, n: int) -> Vec:
        stage = self._stage(n)
        vec: Vec = {}
        for m, c in p.terms.items():
            if m.degree != n:
                raise DegreeMismatchError(f"term {m} has degree {m.degree}, expected {n}")
            vec[stage.index[m]] = c
        return vec

    def to_polynomial(self, vec: Vec, n: int) -> Polynomial:
        basis = self._stage(n).basis
        return Polynomial({basis[i]: c for i, c in vec.items()})

    def coboundaries(self, n: int) -> RowSpace:
        """Echelon of the d-image landing in degree n."""
        if n == 0:
            return RowSpace()
        return self._stage(n - 1).image

    def cocycle_rank(self, n: int) -> int:
        return len(self._stage(n).cocycles)

    def coboundary_rank(self, n: int) -> int:
        return 0 if n == 0 else self._stage(n - 1).rank

    def betti(self, n: int) -> int:
        return self.cocycle_rank(n) - self.coboundary_rank(n)

    def h_space(self, n: int) -> tuple[RowSpace, list[Vec]]:
        """RREF basis of cocycles modulo coboundaries in degree n."""
        if n not in self._h:
            cob = self.coboundaries(n)
            space = RowSpace()
            for z in self._stage(n).cocycles:
                residue, _ = cob.reduce(z)
                space.add(residue)
            # Rows are mutually reduced; report them in pivot order.
            self._h[n] = (space, space.basis())
        return self._h[n]

    def representatives(self, n: int) -> list[Polynomial]:
        _, reps = self.h_space(n)
        return [self.to_polynomial(v, n) for v in reps]

    def class_coordinates(self, cocycle: Polynomial, n: int) -> list[Fraction]:
        """Coordinates of a cocycle in the chosen basis of H^n."""
        space, _ = self.h_space(n)
        vec = self.to_vector(cocycle, n)
        residue, _ = self.coboundaries(n).reduce(vec)
        coords = space.coordinates(residue)
        if coords is None:  # cannot happen for an actual cocycle
            raise AssertionError("cocycle not in the span of cohomology representatives")
        return coords


@dataclass
class CohomologyReport:
    max_degree: int
    betti: dict[int, int]
    cocycle_rank: dict[int, int]
    coboundary_rank: dict[int, int]
    representatives: Optional[dict[int, list[Polynomial]]] = None

    def total_dim(self) -> int:
        return sum(self.betti.values())

    def nonzero(self) -> dict[int, int]:
        return {n: b for n, b in self.betti.items() if b}


def betti(
    model: FreeCDGA,
    max_degree: Optional[int] = None,
    representatives: bool = False,
    max_basis: Optional[int] = None,
) -> CohomologyReport:
    """Betti numbers (and optionally representatives) up to max_degree."""
    if max_degree is None:
        max_degree = default_max_degree(model)
    coh = Cohomology(model, max_basis)
    b: dict[int, int] = {}
    zr: dict[int, int] = {}
    br: dict[int, int] = {}
    reps: dict[int, list[Polynomial]] = {}
    for n in range(max_degree + 1):
        b[n] = coh.betti(n)
        zr[n] = coh.cocycle_rank(n)
        br[n] = coh.coboundary_rank(n)
        if representatives:
            reps[n] = coh.representatives(n)
    return CohomologyReport(max_degree, b, zr, br, reps if representatives else None)


@dataclass(frozen=True)
class CohomologyClass:
    degree: int
    coordinates: tuple[Fraction, ...]
    representative: Polynomial

    def is_zero(self) -> bool:
        return not any(self.coordinates)


def class_of(
    model: FreeCDGA,
    cocycle: Polynomial,
    coh: Optional[Cohomology] = None,
) -> CohomologyClass:
    """The cohomology class of a cocycle, reduced modulo coboundaries."""
    if coh is None:
        coh = Cohomology(model)
    if not cocycle.is_homogeneous() or cocycle.is_zero():
        raise DegreeMismatchError("expected a nonzero homogeneous cocycle")
    n = cocycle.degree()
    assert n is not None
    if not apply_d(model, cocycle).is_zero():
        raise NotACocycleError(f"d({cocycle}) = {apply_d(model, cocycle)} is nonzero")
    coords = coh.class_coordinates(cocycle, n)
    vec = coh.to_vector(cocycle, n)
    residue, _ = coh.coboundaries(n).reduce(vec)
    return CohomologyClass(n, tuple(coords), coh.to_polynomial(residue, n))


def cup_product(
    model: FreeCDGA,
    a: Polynomial,
    b: Polynomial,
    max_degree: Optional[int] = None,
    max_basis: Optional[int] = None,
) -> CohomologyClass:
    """[a] * [b] as coordinates in the chosen basis of H of the product degree."""
    for p in (a, b):
        if not p.is_homogeneous() or p.is_zero():
            raise DegreeMismatchError("cup product expects nonzero homogeneous cocycles")
        if not apply_d(model, p).is_zero():
            raise NotACocycleError(f"d({p}) = {apply_d(model, p)} is nonzero")
    da, db = a.degree(), b.degree()
    assert da is not None and db is not None
    if max_degree is not None and da + db > max_degree:
        raise DegreeMismatchError(
            f"product degree {da + db} exceeds max degree {max_degree}"
        )
    coh = Cohomology(model, max_basis)
    product = a * b
    n = da + db
    if product.is_zero():
        dim = coh.betti(n)
        return CohomologyClass(n, tuple([Fraction(0)] * dim), Polynomial.zero())
    return class_of(model, product, coh)


@dataclass(frozen=True)
class RingPresentation:
    """A graded quotient of a free commutative algebra on even generators."""

    generators: tuple[Generator, ...]
    relations: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.odd:
                raise ValueError(f"presentation generator {g.name} has odd degree")
        known = set(self.generators)
        for r in self.relations:
            if r.is_zero():
                continue
            unknown = r.generators() - known
            if unknown:
                names = ", ".join(sorted(g.name for g in unknown))
                raise ValueError(f"relation {r} mentions unknown generators: {names}")
            if not r.is_homogeneous():
                raise DegreeMismatchError(f"relation {r} is not homogeneous")


def quotient_ring_dims(
    pres: RingPresentation,
    max_degree: int,
    max_basis: Optional[int] = None,
) -> dict[int, int]:
    """Graded dimensions of the quotient, by brute-force spanning.

    In each degree the ideal is spanned by monomial multiples of the
    relations; no Groebner machinery, just exact ranks.
    """
    cap = max_basis_cap(max_basis)
    dims: dict[int, int] = {}
    for n in range(max_degree + 1):
        basis = basis_of_degree(pres.generators, n, cap)
        index = {m: i for i, m in enumerate(basis)}
        span = RowSpace()
        for r in pres.relations:
            if r.is_zero():
                continue
            rdeg = r.degree()
            assert rdeg is not None
            if rdeg > n:
                continue
            for m in basis_of_degree(pres.generators, n - rdeg, cap):
                product = Polynomial.monomial(m) * r
                span.add({index[mm]: c for mm, c in product.terms.items()})
        dims[n] = len(basis) - span.rank
    return dims


@dataclass
class DegreeVerdict:
    source_dim: int
    target_dim: int
    rank: int

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def describe(self) -> str:
        if self.bijective:
            return "bijective"
        parts = []
        if not self.injective:
            parts.append("not-injective")
        if not self.surjective:
            parts.append("not-surjective")
        return ", ".join(parts)


@dataclass
class QuasiIsoReport:
    max_degree: int
    per_degree: dict[int, DegreeVerdict]

    @property
    def ok(self) -> bool:
        return all(v.bijective for v in self.per_degree.values())

    def failing_degrees(self) -> list[int]:
        return [n for n, v in self.per_degree.items() if not v.bijective]


def is_quasi_iso(
    m: Morphism,
    max_degree: int,
    max_basis: Optional[int] = None,
) -> QuasiIsoReport:
    """Check bijectivity of the induced map on cohomology, degree by degree."""
    violations = compose_and_check(m)
    if violations:
        raise ValueError("not a CDGA morphism: " + "; ".join(violations))
    src = Cohomology(m.source, max_basis)
    tgt = Cohomology(m.target, max_basis)
    per_degree: dict[int, DegreeVerdict] = {}
    for n in range(max_degree + 1):
        reps = src.representatives(n)
        image_span = RowSpace()
        for rep in reps:
            pushed = m.push(rep)
            coords = tgt.class_coordinates(pushed, n) if not pushed.is_zero() else []
            vec = {i: c for i, c in enumerate(coords) if c}
            image_span.add(vec)
        per_degree[n] = DegreeVerdict(
            source_dim=src.betti(n),
            target_dim=tgt.betti(n),
            rank=image_span.rank,
        )
    return QuasiIsoReport(max_degree, per_degree)
