"""Free graded-commutative algebras over Q.

A generator is a named symbol with a positive integer degree; its parity is
the degree mod 2.  A monomial is a product of generator powers kept in a
canonical order (ascending degree, then name), with odd generators never
exceeding exponent 1.  A polynomial is a sparse map from monomials to
nonzero Fractions.  Reordering factors follows the Koszul rule: swapping
two odd factors flips the sign, and the square of any odd factor is zero.

All arithmetic is exact.  Floats never appear.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from sullivan.errors import (
    DegreeMismatchError,
    ParityMismatchError,
    ResourceLimitError,
)

Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*'*\Z")


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"generator degree must be >= 1, got {self.degree}")
        if not _NAME_RE.match(self.name):
            raise ValueError(f"bad generator name {self.name!r}")

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.degree, self.name)

    def __lt__(self, other: "Generator") -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return f"Generator({self.name!r}, {self.degree})"


@dataclass(frozen=True)
class Monomial:
    """A canonical product of generator powers; the empty product is 1."""

    powers: tuple[tuple[Generator, int], ...] = ()

    def __post_init__(self) -> None:
        prev: Optional[Generator] = None
        for g, e in self.powers:
            if e < 1:
                raise ValueError(f"exponent must be positive, got {g.name}^{e}")
            if g.odd and e > 1:
                raise ValueError(f"odd generator squared: {g.name}^{e}")
            if prev is not None and not prev < g:
                raise ValueError("monomial factors out of order")
            prev = g

    @property
    def degree(self) -> int:
        return sum(g.degree * e for g, e in self.powers)

    def generators(self) -> Iterator[Generator]:
        return (g for g, _ in self.powers)

    def exponent_of(self, gen: Generator) -> int:
        for g, e in self.powers:
            if g == gen:
                return e
        return 0

    @property
    def sort_key(self) -> tuple:
        # Graded order; within a degree, lexicographic with higher powers of
        # earlier generators first (so x^2 precedes x*y precedes y^2).
        return (self.degree, tuple((g.degree, g.name, -e) for g, e in self.powers))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(g.name if e == 1 else f"{g.name}^{e}" for g, e in self.powers)

    def __repr__(self) -> str:
        return f"Monomial<{self}>"


UNIT = Monomial()


def sort_with_sign(word: Sequence[tuple[Generator, int]]) -> tuple[Optional[Monomial], int]:
    """Put a word of generator powers into canonical order.

    Returns (monomial, sign) where sign is +1 or -1, or (None, 0) when the
    word contains an odd generator twice and therefore collapses to zero.
    """
    items = [(g, e) for g, e in word if e != 0]
    for g, e in items:
        if g.odd and e > 1:
            return None, 0
    sign = 1
    # Insertion sort; each adjacent swap of two odd factors flips the sign.
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j][0] < items[j - 1][0]:
            if items[j][0].odd and items[j - 1][0].odd:
                sign = -sign
            items[j - 1], items[j] = items[j], items[j - 1]
            j -= 1
    merged: list[tuple[Generator, int]] = []
    for g, e in items:
        if merged and merged[-1][0] == g:
            if g.odd:
                return None, 0
            merged[-1] = (g, merged[-1][1] + e)
        else:
            merged.append((g, e))
    return Monomial(tuple(merged)), sign


class Polynomial:
    """Sparse polynomial: canonical monomial -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[m] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def scalar(c: Scalar) -> "Polynomial":
        return Polynomial({UNIT: Fraction(c)})

    @staticmethod
    def gen(g: Generator, exp: int = 1) -> "Polynomial":
        if exp == 0:
            return Polynomial.scalar(1)
        return Polynomial({Monomial(((g, exp),)): Fraction(1)})

    @staticmethod
    def monomial(m: Monomial, c: Scalar = 1) -> "Polynomial":
        return Polynomial({m: Fraction(c)})

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degrees = {m.degree for m in self.terms}
        return len(degrees) <= 1

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous polynomial; None for zero."""
        degrees = {m.degree for m in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous polynomial: degrees {sorted(degrees)}")
        return degrees.pop()

    def generators(self) -> frozenset[Generator]:
        return frozenset(g for m in self.terms for g in m.generators())

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) - c
        return Polynomial(acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged, sign = sort_with_sign(m1.powers + m2.powers)
                if sign == 0:
                    continue
                assert merged is not None
                acc[merged] = acc.get(merged, Fraction(0)) + c1 * c2 * sign
        return Polynomial(acc)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- rendering (doubles as the DSL expression form) ------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for m, c in self.sorted_terms():
            mono = str(m)
            if m is UNIT or not m.powers:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial<{self}>"


ZERO = Polynomial.zero()
ONE = Polynomial.scalar(1)


def basis_of_degree(
    gens: Iterable[Generator],
    n: int,
    max_size: Optional[int] = None,
) -> list[Monomial]:
    """All canonical monomials of total degree n, in canonical order.

    Raises ResourceLimitError when the count would exceed max_size.
    """
    ordered = sorted(set(gens))
    if n < 0:
        return []
    out: list[Monomial] = []

    def extend(idx: int, remaining: int, acc: list[tuple[Generator, int]]) -> None:
        if remaining == 0:
            out.append(Monomial(tuple(acc)))
            if max_size is not None and len(out) > max_size:
                raise ResourceLimitError(
                    f"basis in degree {n} exceeds cap of {max_size} monomials"
                )
            return
        if idx == len(ordered):
            return
        g = ordered[idx]
        top = 1 if g.odd else remaining // g.degree
        extend(idx + 1, remaining, acc)
        for e in range(1, top + 1):
            if g.degree * e > remaining:
                break
            extend(idx + 1, remaining - g.degree * e, acc + [(g, e)])

    extend(0, n, [])
    out.sort(key=lambda m: m.sort_key)
    return out


def substitute(p: Polynomial, gen: Generator, replacement: Polynomial) -> Polynomial:
    """Replace every occurrence of gen in p by the given polynomial.

    The replacement must be homogeneous of the same degree as gen (zero is
    always allowed).  Parity disagreements are reported before plain degree
    disagreements.
    """
    if not replacement.is_zero():
        if not replacement.is_homogeneous():
            degs = sorted({m.degree for m in replacement.terms})
            raise DegreeMismatchError(
                f"replacement for {gen.name} is inhomogeneous: degrees {degs}"
            )
        rdeg = replacement.degree()
        assert rdeg is not None
        if rdeg % 2 != gen.degree % 2:
            raise ParityMismatchError(
                f"replacement for {gen.name} has degree {rdeg} of the wrong parity"
            )
        if rdeg != gen.degree:
            raise DegreeMismatchError(
                f"replacement for {gen.name} has degree {rdeg}, expected {gen.degree}"
            )
    result = Polynomial.zero()
    for m, c in p.terms.items():
        acc = Polynomial.scalar(c)
        for g, e in m.powers:
            if g == gen:
                acc = acc * replacement**e
                if acc.is_zero():
                    break
            else:
                acc = acc * Polynomial.gen(g, e)
        result = result + acc
    return result
