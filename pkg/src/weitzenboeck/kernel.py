"""Exact kernel computation and generator completeness certificates.

The derivation preserves the per-block multidegree of a monomial and
lowers its weight (sum of level * exponent) by exactly 1.  The space of
degree-d ring monomials therefore splits into graded pieces keyed by
(block_degrees, weight), D maps the piece (b, w) into (b, w-1), and the
kernel in degree d is the direct sum of the per-piece nullspaces.  All
linear algebra is exact Gauss-Jordan over Fraction with first-nonzero
pivoting, so bases and dimensions are deterministic and reproducible.

A completeness certificate for a degree d compares, piece by piece, the
kernel dimension against the dimension spanned by all degree-d products
of the known generators.  Equality certifies that the generators span
the kernel in that degree.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .derivation import GeneratorSet, WeitzenboeckDerivation, generators
from .errors import InvalidKey, NonHomogeneous, NotInKernel, NotInSpan
from .poly import Ambient, Exponents, Polynomial, monomial_sort_key


class GradedPieceKey(NamedTuple):
    block_degrees: tuple[int, ...]
    weight: int


class PieceReport(NamedTuple):
    key: GradedPieceKey
    kernel_dim: int
    span_dim: int


@dataclass(frozen=True)
class CompletenessReport:
    """Per-degree certificate: do generator products span the kernel?"""

    n: int
    k: int
    degree: int
    kernel_dim: int
    span_dim: int
    complete: bool
    per_piece: tuple[PieceReport, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "degree": self.degree,
            "kernel_dim": self.kernel_dim,
            "span_dim": self.span_dim,
            "complete": self.complete,
            "per_piece": [
                {
                    "block_degrees": list(piece.key.block_degrees),
                    "weight": piece.key.weight,
                    "kernel_dim": piece.kernel_dim,
                    "span_dim": piece.span_dim,
                }
                for piece in self.per_piece
            ],
        }


class Product(NamedTuple):
    """A product of generators: the label multiset and its expanded value."""

    labels: tuple[str, ...]
    value: Polynomial


# -- monomial enumeration ----------------------------------------------------


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`, ascending lex."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def graded_monomials(n: int, k: int, key: GradedPieceKey) -> list[Exponents]:
    """All ring monomials with the given block multidegree and weight.

    Returned as full-width exponent tuples (covariant slots zero) in
    canonical order, highest first.
    """
    block_degrees = tuple(key.block_degrees)
    weight = key.weight
    if len(block_degrees) != n or any(d < 0 for d in block_degrees):
        raise InvalidKey(f"block_degrees {block_degrees} invalid for n = {n}")
    if weight < 0 or weight > k * sum(block_degrees):
        raise InvalidKey(f"weight {weight} outside 0..{k * sum(block_degrees)} for {block_degrees}")

    by_weight: list[dict[int, list[tuple[int, ...]]]] = []
    for d in block_degrees:
        table: dict[int, list[tuple[int, ...]]] = defaultdict(list)
        for exps in compositions(d, k + 1):
            table[sum(j * e for j, e in enumerate(exps))].append(exps)
        by_weight.append(table)

    out: list[Exponents] = []

    def rec(block: int, remaining: int, prefix: tuple[int, ...]):
        if block == n:
            if remaining == 0:
                out.append(prefix + (0, 0))
            return
        for w, vecs in by_weight[block].items():
            if w <= remaining:
                for exps in vecs:
                    rec(block + 1, remaining - w, prefix + exps)

    rec(0, weight, ())
    out.sort(key=monomial_sort_key, reverse=True)
    return out


def piece_keys(n: int, k: int, degree: int) -> list[GradedPieceKey]:
    """Every graded piece key of total degree `degree`, sorted."""
    keys = [
        GradedPieceKey(bd, w)
        for bd in compositions(degree, n)
        for w in range(k * degree + 1)
    ]
    keys.sort()
    return keys


# -- exact linear algebra ----------------------------------------------------

RationalMatrix = list[list[Fraction]]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns the reduced matrix and the pivot column list; pivots are
    normalized to 1 and cleared everywhere else.
    """
    m = [list(map(Fraction, row)) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Canonical basis of {v : M v = 0}, exact.

    The basis itself is returned in reduced echelon form (each vector's
    leading entry is 1 and is the only nonzero entry of its column across
    the basis), which makes the output unique and order-deterministic.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    raw: list[list[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            v[p] = -reduced[row_idx][free]
        raw.append(v)
    canonical, _ = rref(raw, ncols)
    return [tuple(row) for row in canonical]


# -- kernel bases ------------------------------------------------------------


def derivation_matrix(n: int, k: int, key: GradedPieceKey) -> tuple[RationalMatrix, list[Exponents], list[Exponents]]:
    """Matrix of D from piece `key` to the piece one weight lower.

    Returns (matrix, column monomials, row monomials); for weight 0 the
    target space is empty and the matrix has no rows.
    """
    cols = graded_monomials(n, k, key)
    rows_monos = (
        graded_monomials(n, k, GradedPieceKey(key.block_degrees, key.weight - 1)) if key.weight else []
    )
    row_index = {m: i for i, m in enumerate(rows_monos)}
    amb = Ambient(n, k)
    deriv = WeitzenboeckDerivation(n, k)
    matrix = [[Fraction(0)] * len(cols) for _ in rows_monos]
    for j, mono in enumerate(cols):
        image = deriv.apply(Polynomial(amb, {mono: 1}))
        for exps, coeff in image.items():
            matrix[row_index[exps]][j] = coeff
    return matrix, cols, rows_monos


def kernel_piece_basis(n: int, k: int, key: GradedPieceKey) -> list[Polynomial]:
    """Echelon basis of ker D within a single graded piece."""
    matrix, cols, _ = derivation_matrix(n, k, key)
    amb = Ambient(n, k)
    basis = []
    for vec in nullspace(matrix, len(cols)):
        basis.append(Polynomial(amb, {mono: c for mono, c in zip(cols, vec) if c}))
    return basis


def kernel_basis(n: int, k: int, degree: int) -> list[Polynomial]:
    """Basis of the degree-d homogeneous component of ker D.

    Direct sum of per-piece nullspaces, concatenated over sorted piece
    keys; every element is annihilated by D exactly.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    basis: list[Polynomial] = []
    for key in piece_keys(n, k, degree):
        basis.extend(kernel_piece_basis(n, k, key))
    return basis


def kernel_census(n: int, k: int, max_degree: int) -> dict[int, int]:
    """Per-degree kernel dimensions for 0..max_degree; makes no claim of generation."""
    return {d: len(kernel_basis(n, k, d)) for d in range(max_degree + 1)}


# -- generator products and spans ---------------------------------------------


def generator_products(gens: GeneratorSet, degree: int) -> list[Product]:
    """All monomials in the generators of total ring degree exactly `degree`.

    Enumerated as label multisets in label order (higher multiplicity of
    earlier generators first); linear dependence among the values is
    allowed and handled downstream by rank computations.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    items = list(gens.items)
    degrees = [p.total_degree() for _, p in items]
    out: list[Product] = []

    def rec(idx: int, remaining: int, labels: tuple[str, ...], value: Polynomial):
        if remaining == 0:
            out.append(Product(labels, value))
            return
        if idx == len(items):
            return
        label, g = items[idx]
        d = degrees[idx]
        for mult in range(remaining // d, -1, -1):
            rec(idx + 1, remaining - mult * d, labels + (label,) * mult, value * g**mult)

    rec(0, degree, (), Polynomial.one(Ambient(gens.n, gens.k)))
    return out


def span_dimension(polys: Sequence[Polynomial], where: int | GradedPieceKey | None = None) -> int:
    """Rank of the coefficient matrix of the polynomials, exact.

    Every nonzero polynomial must be homogeneous; `where` narrows the
    check to a total degree (int) or to a single graded piece key.
    Raises NonHomogeneous on violations.
    """
    rows = []
    monos: set[Exponents] = set()
    nonzero = []
    for p in polys:
        if p.is_zero:
            continue
        d = p.homogeneous_degree()
        if d is None:
            raise NonHomogeneous(f"polynomial mixes total degrees: {p}")
        if isinstance(where, GradedPieceKey):
            if p.gradings() != {(tuple(where.block_degrees), where.weight, 0)}:
                raise NonHomogeneous(f"polynomial lies outside piece {where}: {p}")
        elif where is not None and d != where:
            raise NonHomogeneous(f"expected degree {where}, got {d}: {p}")
        nonzero.append(p)
        monos.update(exps for exps, _ in p.items())
    if not nonzero:
        return 0
    columns = sorted(monos, key=monomial_sort_key, reverse=True)
    col_index = {m: i for i, m in enumerate(columns)}
    for p in nonzero:
        row = [Fraction(0)] * len(columns)
        for exps, c in p.items():
            row[col_index[exps]] = c
        rows.append(row)
    return rank(rows, len(columns))


def _product_key(product: Product) -> GradedPieceKey:
    # generator products are concentrated in a single graded piece
    (bd, w, _), = product.value.gradings()
    return GradedPieceKey(bd, w)


def completeness_check(n: int, k: int, degree: int, exclude: Sequence[str] = ()) -> CompletenessReport:
    """Compare kernel dimension with the generator-product span, piece by piece."""
    gens = generators_for(n, k, exclude)
    products = generator_products(gens, degree)
    by_piece: dict[GradedPieceKey, list[Polynomial]] = defaultdict(list)
    for product in products:
        by_piece[_product_key(product)].append(product.value)

    pieces: list[PieceReport] = []
    kernel_total = 0
    span_total = 0
    for key in piece_keys(n, k, degree):
        kdim = len(kernel_piece_basis(n, k, key))
        sdim = span_dimension(by_piece.get(key, ()), key)
        if kdim or sdim:
            pieces.append(PieceReport(key, kdim, sdim))
            kernel_total += kdim
            span_total += sdim
    return CompletenessReport(
        n=n,
        k=k,
        degree=degree,
        kernel_dim=kernel_total,
        span_dim=span_total,
        complete=span_total == kernel_total,
        per_piece=tuple(pieces),
    )


def generators_for(n: int, k: int, exclude: Sequence[str] = ()) -> GeneratorSet:
    gens = generators(n, k)
    return gens.without(*exclude) if exclude else gens


Combination = dict[tuple[str, ...], Fraction]


def express_in_generators(p: Polynomial, gens: GeneratorSet) -> Combination:
    """Write a homogeneous kernel element as a combination of generator products.

    Returns a map from label multisets to coefficients such that
    sum(coeff * prod(generators)) reconstructs p exactly.  The solution is
    the one picked by the deterministic echelon solve over the products in
    enumeration order, with free coefficients set to zero (products satisfy
    relations, e.g. x_i*J_{j,l} - x_j*J_{i,l} + x_l*J_{i,j} = 0, so the
    representation is not unique).  Raises NotInKernel if D(p) != 0 and
    NotInSpan if the system is inconsistent.
    """
    deriv = WeitzenboeckDerivation(gens.n, gens.k)
    if not deriv.is_in_kernel(p):
        raise NotInKernel(f"D({p}) != 0")
    if p.is_zero:
        return {}
    degree = p.homogeneous_degree()
    if degree is None:
        raise NonHomogeneous(f"polynomial mixes total degrees: {p}")
    gradings = p.gradings()
    if any(cov for _, _, cov in gradings):
        raise NotInSpan("polynomial involves covariant variables")
    target_keys = {GradedPieceKey(bd, w) for bd, w, _ in gradings}

    # restricting to products in p's pieces reproduces the full echelon
    # solution: pieces have disjoint monomial support, so out-of-piece
    # coefficients of the free-variables-zero solution are exactly 0
    products = [pr for pr in generator_products(gens, degree) if _product_key(pr) in target_keys]

    monos: set[Exponents] = {exps for exps, _ in p.items()}
    for pr in products:
        monos.update(exps for exps, _ in pr.value.items())
    columns = sorted(monos, key=monomial_sort_key, reverse=True)
    col_index = {m: i for i, m in enumerate(columns)}

    width = len(products) + 1
    augmented = [[Fraction(0)] * width for _ in columns]
    for j, pr in enumerate(products):
        for exps, c in pr.value.items():
            augmented[col_index[exps]][j] = c
    for exps, c in p.items():
        augmented[col_index[exps]][-1] = c

    reduced, pivots = rref(augmented, len(products))
    for row in reduced:
        if row[-1] and not any(row[:-1]):
            raise NotInSpan(f"{p} is not spanned by generator products of degree {degree}")
    combination: Combination = {}
    for row_idx, col in enumerate(pivots):
        if reduced[row_idx][-1]:
            combination[products[col].labels] = reduced[row_idx][-1]
    return combination


def evaluate_combination(combination: Combination, gens: GeneratorSet, ambient: Ambient | None = None) -> Polynomial:
    """Expand a label-multiset combination back into a polynomial."""
    amb = ambient or Ambient(gens.n, gens.k)
    total = Polynomial.zero(amb)
    for labels, coeff in combination.items():
        term = Polynomial.constant(amb, coeff)
        for label in labels:
            term = term * gens.value(label)
        total = total + term
    return total
