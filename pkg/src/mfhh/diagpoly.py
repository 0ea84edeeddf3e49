"""Diagonal polynomial data: transpose, Milnor number, fixed-locus
restrictions, and graded monomial bases of Jacobi rings.

Only diagonal polynomials sum(z_i^{k_i}) are representable.  Every
restriction of such a polynomial to a coordinate subspace is again diagonal,
hence has an isolated critical point at the origin, which is what keeps the
cohomology bookkeeping downstream concentrated in a single Koszul degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Mapping

from mfhh.charlat import CharacterLattice, GroupElement, Weight
from mfhh.intlat import checked


@dataclass(frozen=True)
class DiagonalPolynomial:
    """sum(z_i^{k_i}) for i = 1..N, optionally stabilized by an extra
    variable z_0 (which never appears in the polynomial itself)."""

    exponents: tuple[int, ...]
    stabilized: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(k) for k in self.exponents))
        if not self.exponents:
            raise ValueError("need at least one exponent")
        if any(k < 2 for k in self.exponents):
            raise ValueError("every exponent must be >= 2")

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def variables(self) -> tuple[int, ...]:
        """All variable indices, the stabilizer (index 0) first when present."""
        if self.stabilized:
            return tuple(range(0, self.num_vars + 1))
        return tuple(range(1, self.num_vars + 1))

    def exponent_of(self, i: int) -> int:
        if not 1 <= i <= self.num_vars:
            raise ValueError(f"no polynomial variable with index {i}")
        return self.exponents[i - 1]


@dataclass(frozen=True)
class Restriction:
    """Restriction of a diagonal polynomial to the fixed locus of a group
    element: the surviving polynomial variables and their exponents.  The
    stabilizer never appears in the polynomial, so its being fixed is
    reported separately."""

    fixed_vars: tuple[int, ...]
    exponents: dict[int, int]
    z0_fixed: bool


@dataclass(frozen=True)
class JacobiBasisElement:
    """A monomial basis element of a Jacobi ring: exponents (var, power)
    with 0 <= power <= k_var - 2, together with its canonical weight."""

    exponents: tuple[tuple[int, int], ...]
    weight: Weight

    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)


def transpose(p: DiagonalPolynomial) -> DiagonalPolynomial:
    """Polynomial of the transposed exponent matrix.

    The exponent matrix of a diagonal polynomial is diagonal, hence
    symmetric, so this is the identity map; it exists so that callers can
    pass any representable polynomial through the mirror construction
    uniformly.
    """
    return DiagonalPolynomial(p.exponents, p.stabilized)


def milnor_number(p: DiagonalPolynomial) -> int:
    """prod(k_i - 1) over the polynomial variables (stabilizer excluded)."""
    mu = 1
    for k in p.exponents:
        mu = checked(mu * (k - 1))
    return mu


def restrict(p: DiagonalPolynomial, gamma: GroupElement) -> Restriction:
    """Restriction of p to the coordinate subspace fixed by gamma."""
    fixed_vars = tuple(sorted(i for i in gamma.fixed if i != 0))
    return Restriction(
        fixed_vars=fixed_vars,
        exponents={i: p.exponent_of(i) for i in fixed_vars},
        z0_fixed=p.stabilized and 0 in gamma.fixed,
    )


def jacobi_basis(lat: CharacterLattice,
                 exponents: Mapping[int, int]) -> list[JacobiBasisElement]:
    """Monomial basis of the Jacobi ring of a diagonal sub-polynomial.

    ``exponents`` maps a subset S of polynomial variable indices to their
    powers; the basis consists of all monomials with 0 <= a_i <= k_i - 2 for
    i in S, in lexicographic order, each with its weight.  The empty subset
    yields the unit monomial alone.
    """
    if 0 in exponents:
        raise ValueError("the stabilizer does not enter a Jacobi ring")
    variables = sorted(exponents)
    single = {
        i: [lat.variable_weight(i).scaled(a) for a in range(exponents[i] - 1)]
        for i in variables
    }
    basis = []
    for combo in itertools.product(*(range(exponents[i] - 1) for i in variables)):
        weight = lat.zero_weight()
        for i, a in zip(variables, combo):
            weight = weight + single[i][a]
        basis.append(JacobiBasisElement(tuple(zip(variables, combo)), weight))
    return basis


def jacobi_dimension(exponents: Mapping[int, int]) -> int:
    """Expected basis size prod(k_i - 1), without enumerating."""
    return prod(k - 1 for k in exponents.values())
