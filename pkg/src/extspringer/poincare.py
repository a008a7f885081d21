"""Poincaré polynomials of Springer and extended Springer fibers.

All polynomials are modified Poincaré polynomials in ``t`` (``t^j`` counts
``H^{2j}``).  Cohomology is taken over a field of characteristic 0 or prime
to ``n``; the dimensions do not depend on which.

Where a closed formula exists it is evaluated alongside the cell-by-cell sum
over row-strict tableaux, and the two must agree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .inversions import inversion_count
from .partitions import (
    Partition,
    as_partition,
    dim_shift,
    divides,
    divisor_list,
    nilcone_dim,
    quotient_partition,
)
from .tableaux import RowStrictTableau, max_divisor, rst_list


class ConsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagreed."""


class IntPolynomial:
    """Dense polynomial in ``t`` with nonnegative integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ValueError(f"negative coefficient in {cs}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> IntPolynomial:
        """Generating function ``sum t^e`` of a multiset of exponents."""
        cs: list[int] = []
        for e in exps:
            if e >= len(cs):
                cs.extend([0] * (e + 1 - len(cs)))
            cs[e] += 1
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial([other])
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[j] + other[j] for j in range(m))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        """Difference; raises ValueError if a coefficient would go negative."""
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[j] - other[j] for j in range(m))

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t^k``."""
        if k < 0:
            raise ValueError("negative shift")
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()

    def _terms(self, power) -> list[str]:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                terms.append(("" if c == 1 else str(c)) + power(j))
        return terms

    def to_text(self) -> str:
        terms = self._terms(lambda j: "t" if j == 1 else f"t^{j}")
        return " + ".join(terms) if terms else "0"

    def to_latex(self) -> str:
        terms = self._terms(lambda j: "t" if j == 1 else f"t^{{{j}}}")
        return "+".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict | str) -> IntPolynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["coeffs"])


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


@dataclass(frozen=True)
class EquivariantPolynomial:
    """``sum_i P_{chi_i}(t) chi_i`` for the characters ``chi_0..chi_{n-1}`` of the center."""

    n: int
    by_char: tuple[IntPolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "by_char", tuple(self.by_char))
        if len(self.by_char) != self.n:
            raise ValueError(f"need {self.n} components, got {len(self.by_char)}")

    def __getitem__(self, i: int) -> IntPolynomial:
        return self.by_char[i]

    def total(self) -> IntPolynomial:
        """Evaluation at the identity of the center: the plain Poincaré polynomial."""
        return sum(self.by_char, ZERO)

    def support(self) -> list[int]:
        return [i for i, p in enumerate(self.by_char) if p]

    def to_json(self) -> dict:
        return {"n": self.n, "by_char": [p.to_json() for p in self.by_char]}

    @classmethod
    def from_json(cls, obj: dict | str) -> EquivariantPolynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["n"], [IntPolynomial.from_json(p) for p in obj["by_char"]])


@dataclass(frozen=True)
class ExtendedCell:
    tableau: RowStrictTableau
    r: int
    dim: int

    def to_json(self) -> dict:
        return {"tableau": self.tableau.to_json(), "r": self.r, "dim": self.dim}


@dataclass(frozen=True)
class StalkPolynomial:
    """``t^shift * poly``; a zero ``poly`` means the stalk vanishes."""

    shift: int
    poly: IntPolynomial

    def expanded(self) -> IntPolynomial:
        return self.poly.shift(self.shift)

    def to_json(self) -> dict:
        return {"shift": self.shift, "poly": self.poly.to_json()}


@dataclass(frozen=True)
class SmallerGroupForm:
    shift: int
    base_partition: Partition

    def to_json(self) -> dict:
        return {"shift": self.shift, "base_partition": list(self.base_partition.parts)}


@lru_cache(maxsize=None)
def cell_statistics(lam: Partition) -> tuple[tuple[int, int], ...]:
    """``(|sigma|, d_sigma)`` for every ``sigma`` in RST(lam), in enumeration order."""
    return tuple((inversion_count(s), max_divisor(s)) for s in rst_list(as_partition(lam)))


def char_divisor(n: int, i: int) -> int:
    """``n / gcd(n, i)``, with ``gcd(n, 0) = n``."""
    if not 0 <= i < n:
        raise ValueError(f"character index must lie in 0..{n - 1}, got {i}")
    return n // math.gcd(n, i)


def euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)


@lru_cache(maxsize=None)
def _springer_poincare(lam: Partition) -> IntPolynomial:
    return IntPolynomial.from_exponents(e for e, _ in cell_statistics(lam))


def springer_poincare(lam: Partition) -> IntPolynomial:
    """``sum_sigma t^{|sigma|}`` over row-strict tableaux of shape ``lam``."""
    return _springer_poincare(as_partition(lam))


def q_poly(lam: Partition) -> IntPolynomial:
    """Generating function of ``|sigma|`` over indivisible tableaux (``d_sigma = 1``)."""
    return IntPolynomial.from_exponents(e for e, d in cell_statistics(as_partition(lam)) if d == 1)


def extended_poincare(lam: Partition) -> IntPolynomial:
    """``sum_sigma d_sigma t^{|sigma|}``."""
    cs: dict[int, int] = {}
    for e, d in cell_statistics(as_partition(lam)):
        cs[e] = cs.get(e, 0) + d
    return IntPolynomial(cs.get(j, 0) for j in range(max(cs) + 1))


def _isotypic_cells(lam: Partition, d: int) -> IntPolynomial:
    # chi_i occurs in E_{d_sigma} iff n/d_sigma divides i iff d divides d_sigma
    return IntPolynomial.from_exponents(e for e, ds in cell_statistics(lam) if ds % d == 0)


def _isotypic_closed(lam: Partition, d: int) -> IntPolynomial:
    if not divides(d, lam):
        return ZERO
    return springer_poincare(quotient_partition(lam, d)).shift(dim_shift(lam, d))


def isotypic_poincare(lam: Partition, i: int) -> IntPolynomial:
    """``P_{chi_i}`` of the extended Springer fiber, from cells and from the closed form."""
    lam = as_partition(lam)
    d = char_divisor(lam.n, i)
    cells = _isotypic_cells(lam, d)
    closed = _isotypic_closed(lam, d)
    if cells != closed:
        raise ConsistencyError(f"isotypic mismatch for {lam}, chi_{i}: cells {cells}, closed {closed}")
    return closed


def equivariant_poincare(lam: Partition) -> EquivariantPolynomial:
    """Each cell family of ``sigma`` contributes ``t^{|sigma|}`` to ``chi_0, chi_{n/d}, ...``."""
    lam = as_partition(lam)
    n = lam.n
    exps: list[list[int]] = [[] for _ in range(n)]
    for e, d in cell_statistics(lam):
        for i in range(0, n, n // d):
            exps[i].append(e)
    eq = EquivariantPolynomial(n, [IntPolynomial.from_exponents(x) for x in exps])
    for i in range(n):
        if eq[i] != isotypic_poincare(lam, i):
            raise ConsistencyError(f"equivariant component chi_{i} of {lam} disagrees")
    return eq


def totient_terms(lam: Partition) -> list[tuple[int, int, int, Partition]]:
    """``(d, phi(d), D_{lam,d}, lam/d)`` for each common divisor ``d`` of the parts."""
    lam = as_partition(lam)
    return [(d, euler_phi(d), dim_shift(lam, d), quotient_partition(lam, d)) for d in divisor_list(lam)]


def extended_poincare_totient(lam: Partition) -> IntPolynomial:
    """``sum_{d | lam} phi(d) t^{D_{lam,d}} P(Sp_{lam/d})``."""
    return sum(
        (springer_poincare(mu).shift(D) * ph for _, ph, D, mu in totient_terms(lam)), ZERO
    )


def lusztig_stalk_poincare(lam: Partition, i: int) -> StalkPolynomial:
    """Stalk at ``x_lam`` of the Lusztig sheaf for ``chi_i``: ``t^{N + D} P(Sp_{lam/d})``."""
    lam = as_partition(lam)
    d = char_divisor(lam.n, i)
    if not divides(d, lam):
        return StalkPolynomial(0, ZERO)
    return StalkPolynomial(
        nilcone_dim(lam.n) + dim_shift(lam, d), springer_poincare(quotient_partition(lam, d))
    )


def smaller_group_form(lam: Partition, i: int) -> SmallerGroupForm:
    """The same stalk written as a shifted Springer-sheaf stalk of SL_{n/d}."""
    lam = as_partition(lam)
    n = lam.n
    d = char_divisor(n, i)
    if not divides(d, lam):
        raise ValueError(f"d={d} does not divide {lam}")
    shift = nilcone_dim(n) - nilcone_dim(n // d) + dim_shift(lam, d)
    form = SmallerGroupForm(shift, quotient_partition(lam, d))
    stalk = lusztig_stalk_poincare(lam, i)
    springer_stalk = springer_poincare(form.base_partition).shift(nilcone_dim(n // d))
    if springer_stalk.shift(shift) != stalk.expanded():
        raise ConsistencyError(f"smaller-group form disagrees with stalk for {lam}, chi_{i}")
    return form


def extended_cells(lam: Partition) -> list[ExtendedCell]:
    """Cells ``(sigma, r)``, ``0 <= r < d_sigma``, each of dimension ``|sigma|``."""
    lam = as_partition(lam)
    return [
        ExtendedCell(s, r, e)
        for s, (e, d) in zip(rst_list(lam), cell_statistics(lam))
        for r in range(d)
    ]


def center_action(cell: ExtendedCell) -> ExtendedCell:
    """The central generator sends ``(sigma, r)`` to ``(sigma, r + 1 mod d_sigma)``."""
    d = max_divisor(cell.tableau)
    return ExtendedCell(cell.tableau, (cell.r + 1) % d, cell.dim)


def center_orbits(cells: Sequence[ExtendedCell]) -> Iterator[list[ExtendedCell]]:
    """Orbits of :func:`center_action`, found by iterating the action."""
    seen: set[tuple[RowStrictTableau, int]] = set()
    for c in cells:
        if (c.tableau, c.r) in seen:
            continue
        orbit = [c]
        seen.add((c.tableau, c.r))
        nxt = center_action(c)
        while (nxt.tableau, nxt.r) != (c.tableau, c.r):
            orbit.append(nxt)
            seen.add((nxt.tableau, nxt.r))
            nxt = center_action(nxt)
        yield orbit
