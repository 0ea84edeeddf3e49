"""Character lattice of the maximal diagonal symmetry group.

A diagonal polynomial z_1^{k_1} + ... + z_N^{k_N} is preserved by every
diagonal scaling (t_1, ..., t_N) for which t_i^{k_i} is independent of i; the
common value is the distinguished character chi.  The character lattice of
this symmetry group is therefore the abelian group on generators
chi_1, ..., chi_N (the degrees of the variables) and chi, modulo the
relations k_i*chi_i - chi.  The stabilized variant adjoins one more variable
z_0 of degree chi_0 := chi - (chi_1 + ... + chi_N), i.e. one more generator
and the relation chi_0 + chi_1 + ... + chi_N - chi.

Smith normal form of the relation matrix converts the lattice into canonical
coordinates: exactly one free integer coordinate (the group is a rank-one
extension of a finite group) plus torsion coordinates taken modulo the
invariant factors.  Every weight comparison in the package goes through
these coordinates, so equality never relies on ad-hoc modular reasoning.

Variables are indexed 1..N, with index 0 reserved for the stabilizer z_0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from mfhh.intlat import IntMatrix, cokernel, checked, smith_normal_form


class RankError(ValueError):
    """The lattice did not come out as a rank-one extension of a finite group."""


class AmbiguousGradingError(ValueError):
    """The stabilizer degree chi_0 is torsion (sum of 1/k_i equals 1), so
    powers of z_0 cannot be solved from the free coordinate."""


@dataclass(frozen=True)
class Weight:
    """A lattice element in canonical coordinates.

    ``free`` is the coordinate along the unique infinite direction;
    ``torsion[i]`` is stored reduced modulo ``mods[i]``.  Two weights are
    equal iff their coordinates agree componentwise.
    """

    free: int
    torsion: tuple[int, ...]
    mods: tuple[int, ...]

    def _require_same_lattice(self, other: Weight) -> None:
        if self.mods != other.mods:
            raise ValueError("weights from different lattices")

    def __add__(self, other: Weight) -> Weight:
        self._require_same_lattice(other)
        return Weight(checked(self.free + other.free),
                      tuple((a + b) % m for a, b, m in zip(self.torsion, other.torsion, self.mods)),
                      self.mods)

    def __sub__(self, other: Weight) -> Weight:
        self._require_same_lattice(other)
        return Weight(checked(self.free - other.free),
                      tuple((a - b) % m for a, b, m in zip(self.torsion, other.torsion, self.mods)),
                      self.mods)

    def __neg__(self) -> Weight:
        return Weight(-self.free,
                      tuple(-a % m for a, m in zip(self.torsion, self.mods)),
                      self.mods)

    def scaled(self, n: int) -> Weight:
        return Weight(checked(self.free * n),
                      tuple((a * n) % m for a, m in zip(self.torsion, self.mods)),
                      self.mods)

    def is_zero(self) -> bool:
        return self.free == 0 and not any(self.torsion)


@dataclass(frozen=True)
class GroupElement:
    """An element of ker(chi), stored as one rational phase in [0, 1) per
    variable (z_0 first when present).  ``fixed`` / ``moving`` partition the
    variable indices according to whether the phase vanishes."""

    phases: tuple[Fraction, ...]
    fixed: frozenset[int]
    moving: frozenset[int]


class CharacterLattice:
    """Canonical weight arithmetic for one diagonal polynomial.

    Immutable after construction; all methods are pure.  Use
    :func:`build_character_lattice` to create instances.
    """

    def __init__(self, exponents: Iterable[int], stabilized: bool):
        exps = tuple(int(k) for k in exponents)
        if not exps:
            raise ValueError("need at least one exponent")
        if any(k < 2 for k in exps):
            raise ValueError("every exponent must be >= 2")
        self.exponents = exps
        self.stabilized = bool(stabilized)
        self.num_vars = len(exps)
        # Variable indices: 0 is the stabilizer (when present), 1..N the
        # polynomial variables.
        self.variables: tuple[int, ...] = (
            tuple(range(0, self.num_vars + 1)) if self.stabilized
            else tuple(range(1, self.num_vars + 1))
        )

        # Generator columns: [chi_0,] chi_1, ..., chi_N, chi.
        n = self.num_vars
        offset = 1 if self.stabilized else 0
        self._gen_count = n + 1 + offset
        self._chi_col = self._gen_count - 1
        self._var_col = {i: offset + i - 1 for i in range(1, n + 1)}
        if self.stabilized:
            self._var_col[0] = 0
        self.generator_labels = tuple(
            (["chi0"] if self.stabilized else [])
            + [f"chi{i}" for i in range(1, n + 1)]
            + ["chi"]
        )

        rows = []
        for i, k in enumerate(exps, start=1):
            row = [0] * self._gen_count
            row[self._var_col[i]] = k
            row[self._chi_col] = -1
            rows.append(row)
        if self.stabilized:
            row = [0] * self._gen_count
            for col in self._var_col.values():
                row[col] = 1
            row[self._chi_col] = -1
            rows.append(row)
        self.relation_matrix = IntMatrix.from_rows(rows, self._gen_count)
        self.snf = smith_normal_form(self.relation_matrix)

        # Coordinates of x in the quotient Z^g / rowspan(R) are V^T x, after
        # which the j-th coordinate lives modulo the j-th diagonal entry of D
        # (0 meaning a free coordinate, 1 a dropped one).
        proj = self.snf.V.transpose().to_rows()
        nrel = self.relation_matrix.rows
        diag = [self.snf.D.entry(j, j) if j < nrel else 0 for j in range(self._gen_count)]
        free_cols = [j for j, dj in enumerate(diag) if dj == 0]
        if len(free_cols) != 1:
            raise RankError(f"free rank {len(free_cols)} != 1 for exponents {exps}")
        self._free_row = proj[free_cols[0]]
        torsion_cols = [j for j, dj in enumerate(diag) if dj >= 2]
        self._torsion_rows = [proj[j] for j in torsion_cols]
        self.torsion_mods: tuple[int, ...] = tuple(diag[j] for j in torsion_cols)

        self._zero = self._weight_from_coords([0] * self._gen_count)
        self._chi = self._weight_from_gen(self._chi_col)
        self._var_weight = {i: self._weight_from_gen(col) for i, col in self._var_col.items()}
        if self._chi.free == 0:
            raise RankError("total degree chi has no free component")
        for row in self.relation_matrix.to_rows():
            assert self._weight_from_coords(row).is_zero()
        self._kernel: tuple[GroupElement, ...] | None = None

    # -- canonical coordinates ------------------------------------------

    def _weight_from_coords(self, coords) -> Weight:
        free = checked(sum(a * b for a, b in zip(self._free_row, coords)))
        torsion = tuple(
            sum(a * b for a, b in zip(row, coords)) % m
            for row, m in zip(self._torsion_rows, self.torsion_mods)
        )
        return Weight(free, torsion, self.torsion_mods)

    def _weight_from_gen(self, col: int) -> Weight:
        coords = [0] * self._gen_count
        coords[col] = 1
        return self._weight_from_coords(coords)

    @property
    def chi(self) -> Weight:
        return self._chi

    def variable_weight(self, i: int) -> Weight:
        """Degree of the i-th variable (i = 0 is the stabilizer)."""
        try:
            return self._var_weight[i]
        except KeyError:
            raise ValueError(f"no variable with index {i}") from None

    def zero_weight(self) -> Weight:
        return self._zero

    # -- weight operations --------------------------------------------------

    def weight_of_monomial(self, exponents: Mapping[int, int],
                           duals: Iterable[int] = (),
                           include_z0_dual: bool = False) -> Weight:
        """Canonical form of sum(a_i * chi_i) - sum(chi_j over duals).

        ``duals`` is a multiset of variable indices contributing -chi_j each;
        ``include_z0_dual`` subtracts one extra chi_0.
        """
        w = self._zero
        for i, a in exponents.items():
            if a < 0:
                raise ValueError("monomial exponents must be nonnegative")
            if a:
                w = w + self.variable_weight(i).scaled(a)
        for j in duals:
            w = w - self.variable_weight(j)
        if include_z0_dual:
            w = w - self.variable_weight(0)
        return w

    def is_multiple_of_chi(self, w: Weight) -> int | None:
        """Return the unique u with w == u*chi, or None.

        Uniqueness holds because chi has a nonzero free coordinate.
        """
        fc = self._chi.free
        if w.free % fc:
            return None
        u = w.free // fc
        return u if w == self._chi.scaled(u) else None

    def solve_a0(self, u: int, partial: Weight) -> int | None:
        """Unique a0 >= 0 with partial + a0*chi_0 == u*chi, if any.

        The free coordinate pins a0 (chi_0 is non-torsion away from the
        degenerate sum-of-reciprocals-equal-one case); the torsion
        coordinates are then verified in full.
        """
        if not self.stabilized:
            raise ValueError("solve_a0 requires a stabilized lattice")
        chi0 = self._var_weight[0]
        if chi0.free == 0:
            raise AmbiguousGradingError(
                f"stabilizer degree is torsion for exponents {self.exponents}"
            )
        num = checked(u * self._chi.free) - partial.free
        if num % chi0.free:
            return None
        a0 = num // chi0.free
        if a0 < 0:
            return None
        if partial + chi0.scaled(a0) != self._chi.scaled(u):
            return None
        return a0

    def enumerate_ker_chi(self) -> tuple[GroupElement, ...]:
        """All group elements with trivial chi-value, as phase vectors.

        For a diagonal polynomial these are exactly the tuples with
        q_i in (1/k_i)Z/Z for i >= 1, the stabilizer phase being
        q_0 = -sum(q_i) mod 1.  Order: lexicographic in the numerator
        tuple (n_1, ..., n_N) of q_i = n_i / k_i.
        """
        if self._kernel is not None:
            return self._kernel
        elements = []
        for nums in itertools.product(*(range(k) for k in self.exponents)):
            phases = [Fraction(n, k) for n, k in zip(nums, self.exponents)]
            if self.stabilized:
                phases.insert(0, (-sum(phases)) % 1)
            phases = tuple(phases)
            fixed = frozenset(v for v, q in zip(self.variables, phases) if q == 0)
            moving = frozenset(self.variables) - fixed
            elements.append(GroupElement(phases, fixed, moving))
        self._kernel = tuple(elements)
        return self._kernel

    # -- cross-checks ------------------------------------------------------

    def chi_quotient(self):
        """Structure of the lattice modulo chi; finite, and its order is an
        independent count of ker(chi)."""
        g = self._gen_count
        rows = self.relation_matrix.to_rows()
        chi_row = [0] * g
        chi_row[self._chi_col] = 1
        rows.append(chi_row)
        return cokernel(IntMatrix.from_rows(rows, g))


def build_character_lattice(exponents: Iterable[int], stabilized: bool) -> CharacterLattice:
    """Construct the character lattice for the given diagonal exponents."""
    return CharacterLattice(exponents, stabilized)
