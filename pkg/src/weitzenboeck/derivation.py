"""The chain derivation D and its known kernel generator families.

D acts on each block by shifting one level down: D(v_{i,j}) = v_{i,j-1}
for j >= 1, D(x_i) = 0, and D annihilates CX and CY.  It extends to the
whole ring by linearity and the Leibniz rule.  Each application strictly
lowers the weight of every surviving term, so D is locally nilpotent.

For k = 1 the kernel is generated by x_1..x_n together with the 2x2
Jacobian determinants J_{i,j} = x_i*y_j - x_j*y_i (Nowicki's family).
For k = 2 the family extends by H_{i,j} = x_i*z_j - y_i*y_j + z_i*x_j
(i <= j; the diagonal H_{i,i} = 2*x_i*z_i - y_i^2 is required) and the
3x3 determinants D_{i,j,l} in the x/y/z rows.  No generating family is
implemented for k >= 3; use the kernel census for that open case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import AmbientMismatch, UnsupportedK
from .poly import Ambient, Exponents, Polynomial, x, y, z


@dataclass(frozen=True)
class WeitzenboeckDerivation:
    """The down-shift derivation on n chains of length k+1."""

    n: int
    k: int

    @property
    def ambient(self) -> Ambient:
        return Ambient(self.n, self.k)

    def _check(self, p: Polynomial):
        if (p.ambient.n, p.ambient.k) != (self.n, self.k):
            raise AmbientMismatch(
                f"polynomial ambient (n={p.ambient.n}, k={p.ambient.k}) "
                f"does not match derivation (n={self.n}, k={self.k})"
            )

    def apply(self, p: Polynomial) -> Polynomial:
        """Leibniz expansion of D over each term of p.

        In the dense layout a ring slot of level j >= 1 sits directly after
        its level j-1 neighbour, so differentiating one factor moves a unit
        of exponent from slot i to slot i-1 with multiplier e_i.
        """
        self._check(p)
        step = self.k + 1
        ring_width = self.n * step
        out: dict[Exponents, Fraction] = {}
        for exps, c in p.items():
            for i in range(ring_width):
                e = exps[i]
                if e and i % step:
                    key = exps[: i - 1] + (exps[i - 1] + 1, e - 1) + exps[i + 1 :]
                    acc = out.get(key, 0) + c * e
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
        return Polynomial(p.ambient, out)

    __call__ = apply

    def is_in_kernel(self, p: Polynomial) -> bool:
        return self.apply(p).is_zero

    def nilpotency_index(self, p: Polynomial) -> int:
        """Smallest r with D^r(p) = 0; 0 iff p = 0, 1 iff p is a nonzero kernel element."""
        self._check(p)
        r = 0
        while p:
            p = self.apply(p)
            r += 1
        return r


@dataclass(frozen=True)
class GeneratorSet:
    """Labeled kernel generators for D on (n, k), in deterministic order."""

    n: int
    k: int
    items: tuple[tuple[str, Polynomial], ...]

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def labels(self) -> list[str]:
        return [label for label, _ in self.items]

    def value(self, label: str) -> Polynomial:
        for lab, p in self.items:
            if lab == label:
                return p
        raise KeyError(label)

    def without(self, *labels: str) -> "GeneratorSet":
        """A copy with the given generators removed (KeyError if a label is unknown)."""
        known = set(self.labels())
        for lab in labels:
            if lab not in known:
                raise KeyError(lab)
        dropped = set(labels)
        return GeneratorSet(self.n, self.k, tuple(it for it in self.items if it[0] not in dropped))


def generators(n: int, k: int) -> GeneratorSet:
    """The known kernel generator family for k = 1 or k = 2.

    Counts: n + C(n,2) for k = 1; additionally C(n+1,2) H's and C(n,3)
    determinants for k = 2.  Raises UnsupportedK for k >= 3, where finding
    a generating family is an open problem.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k not in (1, 2):
        raise UnsupportedK(f"no generator family for k = {k} (only k = 1 and k = 2)")
    amb = Ambient(n, k)

    def var(v):
        return Polynomial.variable(amb, v)

    items: list[tuple[str, Polynomial]] = []
    for i in range(1, n + 1):
        items.append((f"x{i}", var(x(i))))
    for i, j in combinations(range(1, n + 1), 2):
        items.append((f"J{i},{j}", var(x(i)) * var(y(j)) - var(x(j)) * var(y(i))))
    if k == 2:
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                # at i = j this collapses to 2*x_i*z_i - y_i^2
                h = var(x(i)) * var(z(j)) - var(y(i)) * var(y(j)) + var(z(i)) * var(x(j))
                items.append((f"H{i},{j}", h))
        for i, j, l in combinations(range(1, n + 1), 3):
            det = (
                var(x(i)) * (var(y(j)) * var(z(l)) - var(y(l)) * var(z(j)))
                - var(x(j)) * (var(y(i)) * var(z(l)) - var(y(l)) * var(z(i)))
                + var(x(l)) * (var(y(i)) * var(z(j)) - var(y(j)) * var(z(i)))
            )
            items.append((f"D{i},{j},{l}", det))
    return GeneratorSet(n, k, tuple(items))
