"""Free CDGAs: differentials, validation, tensor products, and the two
structural moves the reduction loop is built from.

A FreeCDGA is a free graded-commutative algebra together with a degree +1
differential given on generators.  Construction never validates; validate()
reports every violation (inhomogeneity, unknown generators, d*d != 0) so
that defective inputs can be diagnosed rather than rejected blindly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from sullivan.errors import (
    DegreeMismatchError,
    NotLinearDifferentialError,
    NotSolvableError,
    ResidualOccurrenceError,
    UnknownGeneratorError,
)
from sullivan.gradedalg import (
    Generator,
    Monomial,
    Polynomial,
    sort_with_sign,
    substitute,
)


@dataclass(frozen=True)
class FreeCDGA:
    generators: tuple[Generator, ...]
    differential: Mapping[Generator, Polynomial] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.generators))
        names = [g.name for g in ordered]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate generator names: {', '.join(dupes)}")
        diff = {g: p for g, p in self.differential.items() if not p.is_zero()}
        for g in diff:
            if g not in ordered:
                raise UnknownGeneratorError(
                    f"differential assigned to unknown generator {g.name}"
                )
        object.__setattr__(self, "generators", ordered)
        object.__setattr__(self, "differential", diff)

    def d(self, g: Generator) -> Polynomial:
        return self.differential.get(g, Polynomial.zero())

    def gen(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise UnknownGeneratorError(f"no generator named {name}")

    def has_gen(self, name: str) -> bool:
        return any(g.name == name for g in self.generators)

    def odd_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.odd)

    def even_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if not g.odd)

    def __repr__(self) -> str:
        gens = ", ".join(g.name for g in self.generators)
        return f"FreeCDGA({gens})"


def apply_d(model: FreeCDGA, p: Polynomial) -> Polynomial:
    """Extend the generator differential to p by the graded Leibniz rule."""
    known = set(model.generators)
    missing = p.generators() - known
    if missing:
        names = ", ".join(sorted(g.name for g in missing))
        raise UnknownGeneratorError(f"polynomial mentions unknown generators: {names}")
    result = Polynomial.zero()
    for mono, coeff in p.terms.items():
        prefix_degree = 0
        for i, (g, e) in enumerate(mono.powers):
            dg = model.d(g)
            if not dg.is_zero():
                # d(g^e) = e * g^(e-1) * dg, with the Koszul sign of moving
                # d past the factors before position i.
                sign = -1 if prefix_degree % 2 else 1
                left = Polynomial.monomial(Monomial(mono.powers[:i]), coeff * e * sign)
                mid = left * Polynomial.gen(g, e - 1) * dg
                result = result + mid * Polynomial.monomial(Monomial(mono.powers[i + 1 :]))
            prefix_degree += g.degree * e
    return result


def validate(model: FreeCDGA) -> list[str]:
    """All violations of the CDGA axioms, empty when the model is valid."""
    violations: list[str] = []
    known = set(model.generators)
    clean: list[Generator] = []
    for g in model.generators:
        dg = model.d(g)
        ok = True
        missing = dg.generators() - known
        if missing:
            names = ", ".join(sorted(h.name for h in missing))
            violations.append(f"d({g.name}) mentions unknown generators: {names}")
            ok = False
        for mono in dg.terms:
            if mono.degree != g.degree + 1:
                violations.append(
                    f"d({g.name}) is not homogeneous of degree {g.degree + 1}: "
                    f"term {mono} has degree {mono.degree}"
                )
                ok = False
        if ok:
            clean.append(g)
    for g in clean:
        dd = apply_d(model, model.d(g))
        if not dd.is_zero():
            violations.append(f"d(d({g.name})) = {dd} is nonzero")
    return violations


def rename_generators(model: FreeCDGA, mapping: Mapping[Generator, Generator]) -> FreeCDGA:
    """Simultaneously relabel generators; degrees must be preserved."""
    for old, new in mapping.items():
        if old.degree != new.degree:
            raise DegreeMismatchError(
                f"renaming {old.name} -> {new.name} changes degree "
                f"{old.degree} -> {new.degree}"
            )
    table = {g: mapping.get(g, g) for g in model.generators}

    def rename_poly(p: Polynomial) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in p.terms.items():
            word = tuple((table.get(g, g), e) for g, e in mono.powers)
            merged, sign = sort_with_sign(word)
            if sign == 0:
                continue
            assert merged is not None
            acc[merged] = acc.get(merged, Fraction(0)) + coeff * sign
        return Polynomial(acc)

    gens = tuple(table[g] for g in model.generators)
    diff = {table[g]: rename_poly(p) for g, p in model.differential.items()}
    return FreeCDGA(gens, diff)


def tensor(a: FreeCDGA, b: FreeCDGA) -> FreeCDGA:
    """Tensor product; colliding names in the second factor are primed."""
    taken = {g.name for g in a.generators}
    mapping: dict[Generator, Generator] = {}
    for g in b.generators:
        name = g.name
        while name in taken:
            name += "'"
        taken.add(name)
        if name != g.name:
            mapping[g] = Generator(name, g.degree)
    b2 = rename_generators(b, mapping) if mapping else b
    diff = dict(a.differential)
    diff.update(b2.differential)
    return FreeCDGA(a.generators + b2.generators, diff)


def _linear_part(relation: Polynomial, old: Generator) -> tuple[Fraction, Polynomial]:
    """Split relation as lam * old + rest; NotSolvable unless old is isolated."""
    bare = Monomial(((old, 1),))
    lam = relation.coefficient(bare)
    if not lam:
        raise NotSolvableError(
            f"relation {relation} has no isolated linear term in {old.name}"
        )
    rest = relation - Polynomial.monomial(bare, lam)
    if old in rest.generators():
        raise NotSolvableError(
            f"{old.name} occurs in the relation beyond its linear term: {relation}"
        )
    return lam, rest


def change_of_variable(
    model: FreeCDGA,
    old: Generator,
    fresh: Generator,
    relation: Polynomial,
) -> FreeCDGA:
    """Replace old by a fresh generator defined as relation = lam*old + rest.

    The inverse substitution old = (fresh - rest) / lam is applied to every
    differential, and d(fresh) is transported from d(relation).  This is an
    isomorphism of CDGAs, so the result always validates.
    """
    if old not in model.generators:
        raise UnknownGeneratorError(f"no generator {old.name} in the model")
    if model.has_gen(fresh.name):
        raise ValueError(f"fresh name {fresh.name} already in use")
    if fresh.degree != old.degree:
        raise DegreeMismatchError(
            f"fresh generator degree {fresh.degree} != {old.degree}"
        )
    if not relation.is_homogeneous() or relation.degree() != old.degree:
        raise DegreeMismatchError(
            f"relation must be homogeneous of degree {old.degree}, got {relation}"
        )
    unknown = relation.generators() - set(model.generators)
    if unknown:
        names = ", ".join(sorted(g.name for g in unknown))
        raise UnknownGeneratorError(f"relation mentions unknown generators: {names}")
    lam, rest = _linear_part(relation, old)
    # old = (fresh - rest) / lam
    inverse = (Polynomial.gen(fresh) - rest) * (Fraction(1) / lam)
    d_relation = apply_d(model, relation)
    gens = tuple(g for g in model.generators if g != old) + (fresh,)
    diff: dict[Generator, Polynomial] = {}
    for g in model.generators:
        if g == old:
            continue
        diff[g] = substitute(model.d(g), old, inverse)
    diff[fresh] = substitute(d_relation, old, inverse)
    out = FreeCDGA(gens, diff)
    bad = validate(out)
    if bad:  # conjugation by an isomorphism cannot break the axioms
        raise AssertionError("change_of_variable produced an invalid model: " + "; ".join(bad))
    return out


@dataclass(frozen=True)
class CancellationCertificate:
    odd_gen: Generator
    even_gen: Generator
    scalar: Fraction


def cancel_acyclic_pair(model: FreeCDGA, v: Generator) -> tuple[FreeCDGA, CancellationCertificate]:
    """Strike the contractible pair (v, x) where d(v) = lam * x exactly.

    Every remaining differential has x set to zero afterwards; if v still
    occurs anywhere the quotient would not be free on the survivors and the
    operation refuses.  Exactly one odd and one even generator go per call.
    """
    if v not in model.generators:
        raise UnknownGeneratorError(f"no generator {v.name} in the model")
    if not v.odd:
        raise NotLinearDifferentialError(f"{v.name} has even degree {v.degree}")
    dv = model.d(v)
    if len(dv.terms) != 1:
        raise NotLinearDifferentialError(
            f"d({v.name}) = {dv} is not a scalar multiple of a single generator"
        )
    ((mono, lam),) = dv.terms.items()
    if len(mono.powers) != 1 or mono.powers[0][1] != 1:
        raise NotLinearDifferentialError(
            f"d({v.name}) = {dv} is not linear in a generator"
        )
    x = mono.powers[0][0]
    if x.odd:
        raise NotLinearDifferentialError(f"d({v.name}) lands on odd generator {x.name}")
    gens = tuple(g for g in model.generators if g not in (v, x))
    diff: dict[Generator, Polynomial] = {}
    for g in gens:
        new_dg = substitute(model.d(g), x, Polynomial.zero())
        if v in new_dg.generators():
            raise ResidualOccurrenceError(
                f"cannot cancel ({v.name}, {x.name}): d({g.name}) still "
                f"mentions {v.name} after setting {x.name} = 0"
            )
        diff[g] = new_dg
    out = FreeCDGA(gens, diff)
    bad = validate(out)
    if bad:
        raise AssertionError("cancel_acyclic_pair produced an invalid model: " + "; ".join(bad))
    return out, CancellationCertificate(v, x, Fraction(lam))


@dataclass(frozen=True)
class Morphism:
    source: FreeCDGA
    target: FreeCDGA
    images: Mapping[Generator, Polynomial] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {g: p for g, p in self.images.items() if not p.is_zero()}
        object.__setattr__(self, "images", clean)

    def image_of(self, g: Generator) -> Polynomial:
        return self.images.get(g, Polynomial.zero())

    def push(self, p: Polynomial) -> Polynomial:
        """Apply the algebra-map extension of the generator images."""
        result = Polynomial.zero()
        for mono, coeff in p.terms.items():
            acc = Polynomial.scalar(coeff)
            for g, e in mono.powers:
                acc = acc * self.image_of(g) ** e
                if acc.is_zero():
                    break
            result = result + acc
        return result


def identity_morphism(model: FreeCDGA) -> Morphism:
    return Morphism(model, model, {g: Polynomial.gen(g) for g in model.generators})


def compose_and_check(m: Morphism) -> list[str]:
    """Violations of m being a CDGA morphism (degrees and chain condition)."""
    violations: list[str] = []
    src = set(m.source.generators)
    tgt = set(m.target.generators)
    for g in m.images:
        if g not in src:
            violations.append(f"image assigned to non-source generator {g.name}")
    checkable: list[Generator] = []
    for g in m.source.generators:
        img = m.image_of(g)
        ok = True
        missing = img.generators() - tgt
        if missing:
            names = ", ".join(sorted(h.name for h in missing))
            violations.append(f"image of {g.name} mentions unknown generators: {names}")
            ok = False
        if not img.is_zero():
            if not img.is_homogeneous():
                violations.append(f"image of {g.name} is inhomogeneous: {img}")
                ok = False
            elif img.degree() != g.degree:
                violations.append(
                    f"image of {g.name} has degree {img.degree()}, expected {g.degree}"
                )
                ok = False
        if ok:
            checkable.append(g)
    for g in checkable:
        lhs = m.push(m.source.d(g))
        rhs = apply_d(m.target, m.image_of(g))
        if lhs != rhs:
            violations.append(
                f"chain condition fails on {g.name}: "
                f"image of d({g.name}) is {lhs}, but d of the image is {rhs}"
            )
    return violations
