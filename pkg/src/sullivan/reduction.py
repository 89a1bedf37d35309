"""Model reduction: repeatedly solve a linear term out of an odd
differential and cancel the resulting acyclic pair.

Each round finds an odd generator v with d(v) = lam*x + Q where x is an
even generator that occurs nowhere else in d(v).  If Q is nonzero a change
of variable introduces t = lam*x + Q so that d(v) = t; the pair (v, t) is
then cancelled.  Pairs are chosen deterministically: odd generators are
scanned in (degree, name) order, and among the eligible linear candidates
inside one differential the generator latest in that order is eliminated,
which keeps the earliest-named generators in the final presentation.

With a positive check degree every step is verified to preserve Betti
numbers, and the verified snapshots are kept in the log.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from sullivan.cdga import (
    FreeCDGA,
    cancel_acyclic_pair,
    change_of_variable,
)
from sullivan.cohomology import betti
from sullivan.errors import VerificationFailedError
from sullivan.gradedalg import Generator, Monomial, Polynomial, substitute

DEFAULT_CHECK_DEGREE = 20


@dataclass(frozen=True)
class ReduciblePair:
    odd_gen: Generator
    even_gen: Generator
    scalar: Fraction
    residue: Polynomial  # d(odd_gen) - scalar * even_gen


def find_reducible(model: FreeCDGA) -> Optional[ReduciblePair]:
    """First cancellable pair in the deterministic scan order, or None."""
    for v in model.odd_generators():
        dv = model.d(v)
        candidates: list[tuple[Generator, Fraction]] = []
        for mono, coeff in dv.terms.items():
            if len(mono.powers) == 1 and mono.powers[0][1] == 1:
                candidates.append((mono.powers[0][0], coeff))
        candidates.sort(key=lambda t: t[0].sort_key)
        for x, lam in reversed(candidates):
            residue = dv - Polynomial.monomial(Monomial(((x, 1),)), lam)
            if x in residue.generators():
                continue
            # After eliminating x and striking the pair, x ends up replaced
            # by -residue/lam everywhere; v must not survive anywhere else.
            replacement = residue * (Fraction(-1) / lam)
            ok = True
            for g in model.generators:
                if g in (v, x):
                    continue
                if v in substitute(model.d(g), x, replacement).generators():
                    ok = False
                    break
            if ok:
                return ReduciblePair(v, x, Fraction(lam), residue)
    return None


@dataclass(frozen=True)
class ChangeOfVariable:
    old: Generator
    fresh: Generator
    relation: Polynomial

    def describe(self) -> str:
        return f"introduce {self.fresh.name} = {self.relation}   [replacing {self.old.name}]"


@dataclass(frozen=True)
class Cancellation:
    odd_gen: Generator
    even_gen: Generator
    scalar: Fraction

    def describe(self) -> str:
        note = "" if self.scalar == 1 else f"   [scalar {self.scalar}]"
        return f"cancel ({self.odd_gen.name}, {self.even_gen.name}){note}"


Step = Union[ChangeOfVariable, Cancellation]


@dataclass
class ReductionStep:
    action: Step
    betti_after: Optional[dict[int, int]] = None


@dataclass
class ReductionLog:
    check_degree: int
    betti_before: Optional[dict[int, int]]
    steps: list[ReductionStep]

    def render(self) -> str:
        lines = []
        for i, step in enumerate(self.steps, start=1):
            lines.append(f"step {i}: {step.action.describe()}")
        if not self.steps:
            lines.append("no reducible pair; model unchanged")
        elif self.check_degree > 0:
            lines.append(
                f"betti numbers verified unchanged up to degree {self.check_degree} "
                f"after every step"
            )
        return "\n".join(lines)

    def changes(self) -> list[ChangeOfVariable]:
        return [s.action for s in self.steps if isinstance(s.action, ChangeOfVariable)]

    def cancellations(self) -> list[Cancellation]:
        return [s.action for s in self.steps if isinstance(s.action, Cancellation)]


def _fresh_generator(model: FreeCDGA, degree: int) -> Generator:
    name = f"t{degree}"
    while model.has_gen(name):
        name += "'"
    return Generator(name, degree)


def _betti_map(model: FreeCDGA, check_degree: int) -> dict[int, int]:
    return betti(model, check_degree).betti


def reduce(
    model: FreeCDGA,
    check_degree: int = DEFAULT_CHECK_DEGREE,
) -> tuple[FreeCDGA, ReductionLog]:
    """Reduce until no pair is cancellable; verify Betti numbers per step.

    check_degree = 0 skips verification (and snapshots).
    """
    current = model
    snapshot = _betti_map(current, check_degree) if check_degree > 0 else None
    log = ReductionLog(check_degree, snapshot, [])

    def advance(next_model: FreeCDGA, action: Step) -> FreeCDGA:
        nonlocal snapshot
        after: Optional[dict[int, int]] = None
        if check_degree > 0:
            after = _betti_map(next_model, check_degree)
            assert snapshot is not None
            if after != snapshot:
                diffs = {
                    n: (snapshot.get(n, 0), after.get(n, 0))
                    for n in sorted(set(snapshot) | set(after))
                    if snapshot.get(n, 0) != after.get(n, 0)
                }
                raise VerificationFailedError(
                    f"betti numbers changed at step '{action.describe()}': {diffs}"
                )
            snapshot = after
        log.steps.append(ReductionStep(action, after))
        return next_model

    while True:
        pair = find_reducible(current)
        if pair is None:
            break
        v, x = pair.odd_gen, pair.even_gen
        if pair.residue.is_zero():
            next_model, cert = cancel_acyclic_pair(current, v)
            current = advance(next_model, Cancellation(cert.odd_gen, cert.even_gen, cert.scalar))
        else:
            fresh = _fresh_generator(current, x.degree)
            relation = current.d(v)
            changed = change_of_variable(current, x, fresh, relation)
            current = advance(changed, ChangeOfVariable(x, fresh, relation))
            next_model, cert = cancel_acyclic_pair(current, v)
            current = advance(next_model, Cancellation(cert.odd_gen, cert.even_gen, cert.scalar))
    return current, log


def replay(model: FreeCDGA, log: ReductionLog) -> FreeCDGA:
    """Re-run a recorded reduction; the result is reproduced exactly."""
    current = model
    for step in log.steps:
        action = step.action
        if isinstance(action, ChangeOfVariable):
            current = change_of_variable(current, action.old, action.fresh, action.relation)
        else:
            current, cert = cancel_acyclic_pair(current, action.odd_gen)
            if cert.even_gen != action.even_gen or cert.scalar != action.scalar:
                raise VerificationFailedError(
                    f"replay diverged at '{action.describe()}': "
                    f"got ({cert.odd_gen.name}, {cert.even_gen.name}, {cert.scalar})"
                )
    return current
