"""Shared helpers: random value generators and the independent kernel oracle.

The oracle deliberately avoids the library's graded decomposition: it
enumerates all degree-d ring monomials with itertools and row-reduces the
full (ungraded) matrix of the derivation by sparse elimination, so a bug
in the piece bookkeeping cannot hide in both paths.
"""

import itertools
from fractions import Fraction

from weitzenboeck import Ambient, Polynomial, WeitzenboeckDerivation


def random_rational(rng, lo=-9, hi=9, max_den=9):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_polynomial(rng, ambient, max_terms=4, max_degree=4, coeff_lo=-9, coeff_hi=9, covariants=False):
    width = ambient.width if covariants else ambient.ring_width
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * ambient.width
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(width)] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + rng.randint(coeff_lo, coeff_hi)
    return Polynomial(ambient, terms)


def random_covariant_polynomial(rng, ambient, order, max_terms=3, max_ring_degree=3):
    """Random polynomial homogeneous of the given degree in CX, CY."""
    cx = ambient.ring_width
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ambient.width
        a = rng.randint(0, order)
        exps[cx] = a
        exps[cx + 1] = order - a
        for _ in range(rng.randint(0, max_ring_degree)):
            exps[rng.randrange(ambient.ring_width)] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + rng.randint(-9, 9)
    return Polynomial(ambient, terms)


def all_ring_monomials(ambient, degree):
    """Every ring monomial of the given total degree (full-width tuples)."""
    for combo in itertools.combinations_with_replacement(range(ambient.ring_width), degree):
        exps = [0] * ambient.width
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def sparse_rank(rows):
    """Rank of sparse rows (dict col -> coeff) by incremental elimination."""
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                pivots[c] = row
                break
            piv = pivots[c]
            factor = row[c] / piv[c]
            for cc, vv in piv.items():
                nv = row.get(cc, Fraction(0)) - factor * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    return len(pivots)


def ungraded_kernel_dimension(n, k, degree):
    """Kernel dimension in degree d computed without any grading split."""
    ambient = Ambient(n, k)
    deriv = WeitzenboeckDerivation(n, k)
    monomials = sorted(all_ring_monomials(ambient, degree))
    rows = {}
    for j, mono in enumerate(monomials):
        image = deriv.apply(Polynomial(ambient, {mono: 1}))
        for exps, coeff in image.items():
            rows.setdefault(exps, {})[j] = coeff
    return len(monomials) - sparse_rank(rows.values())
