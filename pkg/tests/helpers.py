"""Shared reference implementations for the test suite.

Everything in here is written the slow, obvious way on purpose.  The
package computes ranks with a sparse row-echelon structure and enumerates
monomial bases recursively; the tests cross-check those against dense
Fraction elimination and brute-force exponent enumeration, so a bug would
have to appear in two unrelated implementations to slip through.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from sullivan.cdga import FreeCDGA, apply_d
from sullivan.gradedalg import Generator, Monomial, Polynomial

COEFF_POOL = [
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-3),
    Fraction(1, 2),
    Fraction(-2, 3),
    Fraction(5),
]


def brute_monomials(gens, degree):
    """Every degree-n monomial, by exhausting exponent vectors."""
    gens = sorted(gens)
    if degree == 0:
        return {Monomial(())}
    ranges = []
    for g in gens:
        top = 1 if g.odd else degree // g.degree
        ranges.append(range(top + 1))
    found = set()
    for exps in itertools.product(*ranges):
        total = sum(e * g.degree for e, g in zip(exps, gens))
        if total == degree:
            found.add(Monomial(tuple((g, e) for g, e in zip(gens, exps) if e)))
    return found


def dense_rank(rows):
    """Rank of a dense matrix of Fractions by plain Gaussian elimination."""
    matrix = [list(r) for r in rows]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = None
        for i in range(rank, len(matrix)):
            if matrix[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = Fraction(1) / matrix[rank][col]
        matrix[rank] = [x * inv for x in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        rank += 1
    return rank


def _d_matrix(model, domain_basis, target_basis):
    index = {m: j for j, m in enumerate(target_basis)}
    rows = []
    for m in domain_basis:
        image = apply_d(model, Polynomial.monomial(m))
        row = [Fraction(0)] * len(target_basis)
        for mm, c in image.terms.items():
            row[index[mm]] = c
        rows.append(row)
    return rows


def betti_by_elimination(model, max_degree):
    """Betti numbers from dense rank computations, degree by degree."""
    bases = {
        n: sorted(brute_monomials(model.generators, n), key=lambda m: m.sort_key)
        for n in range(max_degree + 2)
    }
    rank_d = {}
    for n in range(max_degree + 1):
        rank_d[n] = dense_rank(_d_matrix(model, bases[n], bases[n + 1]))
    out = {}
    for n in range(max_degree + 1):
        kernel = len(bases[n]) - rank_d[n]
        image = rank_d[n - 1] if n > 0 else 0
        b = kernel - image
        if b:
            out[n] = b
    return out


def random_polynomial(rng: random.Random, gens, degree, max_terms=3):
    """A random polynomial of one degree over the given generators."""
    pool = sorted(brute_monomials(gens, degree), key=lambda m: m.sort_key)
    if not pool:
        return Polynomial.zero()
    picked = rng.sample(pool, k=min(len(pool), rng.randint(1, max_terms)))
    terms = {m: rng.choice(COEFF_POOL) for m in picked}
    return Polynomial(terms)


def random_pure_model(rng: random.Random, max_even=3, max_odd=3) -> FreeCDGA:
    """A random valid model: closed even generators, odd ones mapped into them."""
    even_degrees = rng.sample([2, 4, 6, 8], k=rng.randint(1, max_even))
    evens = tuple(Generator(f"x{d}", d) for d in sorted(even_degrees))
    odds = []
    diff = {}
    targets = sorted(
        {d for d in range(4, 17, 2) if brute_monomials(evens, d)}
    )
    for i in range(rng.randint(1, max_odd)):
        target = rng.choice(targets)
        g = Generator(f"y{target - 1}" + "'" * i, target - 1)
        odds.append(g)
        if rng.random() < 0.85:
            diff[g] = random_polynomial(rng, evens, target)
    return FreeCDGA(evens + tuple(odds), diff)


def random_reducible_model(rng: random.Random) -> FreeCDGA:
    """A random pure model guaranteed to contain a cancellable pair."""
    model = random_pure_model(rng)
    evens = tuple(g for g in model.generators if not g.odd)
    anchor = rng.choice(evens)
    name = f"v{anchor.degree - 1}"
    while model.has_gen(name):
        name += "'"
    v = Generator(name, anchor.degree - 1)
    dv = Polynomial.gen(anchor)
    extra = random_polynomial(rng, tuple(g for g in evens if g != anchor), anchor.degree)
    diff = dict(model.differential)
    diff[v] = dv + extra
    return FreeCDGA(model.generators + (v,), diff)


def total_dim(betti_map) -> int:
    return sum(betti_map.values())
