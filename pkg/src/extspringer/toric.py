"""Character-lattice arithmetic for the isogenies of the torus of SL_n.

Coordinates: ``z_1..z_{n-1}`` on the n-fold cover (``z_i = e^{alpha_i/n}``),
``x_i = z_i^n`` on the adjoint torus and ``y_k = e^{lambda_k}`` on the
maximal torus.  Roots of unity are always stored as exponents of a fixed
primitive n-th root ``omega``; nothing in here touches floating point.

The finite groups ``H_hat = (Z_n)^{n-1}``, ``H`` and ``H_J`` act diagonally,
``omega^a`` scaling ``z_r`` by ``omega^{a_r}``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Mapping, Sequence


@dataclass(frozen=True)
class ToricFrame:
    """A set partition ``[n-1] = I | J | K``.

    On the adjoint side it cuts out ``x_j = 1 (j in J)``, ``x_k = 0 (k in K)``,
    leaving the ``x_i`` with ``i in I`` free.
    """

    n: int
    I: frozenset[int]
    J: frozenset[int]
    K: frozenset[int]

    def __init__(self, n: int, I: Iterable[int], J: Iterable[int], K: Iterable[int]):
        I, J, K = frozenset(I), frozenset(J), frozenset(K)
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if I & J or I & K or J & K:
            raise ValueError("I, J, K must be pairwise disjoint")
        if I | J | K != frozenset(range(1, n)):
            raise ValueError(f"I, J, K must cover 1..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "K", K)

    @classmethod
    def from_jk(cls, n: int, J: Iterable[int], K: Iterable[int] = ()) -> ToricFrame:
        """Frame with the given ``J`` and ``K``; everything else goes to ``I``."""
        J, K = set(J), set(K)
        return cls(n, set(range(1, n)) - J - K, J, K)

    @property
    def j_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.J))

    def to_json(self) -> dict:
        return {"n": self.n, "I": sorted(self.I), "J": sorted(self.J), "K": sorted(self.K)}

    @classmethod
    def from_json(cls, obj: dict | str) -> ToricFrame:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["n"], obj["I"], obj["J"], obj["K"])


def all_frames(n: int) -> Iterator[ToricFrame]:
    """Every set partition of ``[n-1]`` into labelled blocks I, J, K (3^(n-1) of them)."""
    for labels in itertools.product("IJK", repeat=n - 1):
        sets = {"I": [], "J": [], "K": []}
        for r, lab in enumerate(labels, start=1):
            sets[lab].append(r)
        yield ToricFrame(n, sets["I"], sets["J"], sets["K"])


@dataclass(frozen=True)
class ExponentVector:
    """Exponents ``b`` of the monomial ``z_1^{b_1} ... z_{n-1}^{b_{n-1}}``."""

    n: int
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(b) for b in self.exps))
        if len(self.exps) != self.n - 1:
            raise ValueError(f"need {self.n - 1} exponents, got {len(self.exps)}")
        if any(b < 0 for b in self.exps):
            raise ValueError("exponents must be nonnegative")

    def __getitem__(self, r: int) -> int:
        """1-based access: exponent of ``z_r``."""
        if not 1 <= r <= self.n - 1:
            raise IndexError(r)
        return self.exps[r - 1]

    def __iter__(self):
        return iter(self.exps)

    def to_json(self) -> dict:
        return {"n": self.n, "exps": list(self.exps)}


@dataclass(frozen=True)
class GroupElement:
    """``(omega^{a_1}, ..., omega^{a_{n-1}})`` in ``H_hat``."""

    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) % self.n for x in self.a))
        if len(self.a) != self.n - 1:
            raise ValueError(f"need {self.n - 1} residues, got {len(self.a)}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.n, [x + y for x, y in zip(self.a, other.a)])

    def character(self) -> int:
        """Image in Z = H_hat/H, as the exponent of the central generator."""
        return sum(r * x for r, x in enumerate(self.a, start=1)) % self.n


@dataclass(frozen=True)
class ComponentIndex:
    """Component ``W_r`` of the preimage of ``W_ad``, with ``r`` taken mod d*."""

    frame: ToricFrame
    r: int

    def __post_init__(self):
        object.__setattr__(self, "r", self.r % d_star(self.frame))


@dataclass(frozen=True)
class InvariantDecomposition:
    """``f = c^{-1} g + c^{-1} u`` with ``g`` H-invariant and ``u`` in the ideal of W_hat."""

    g: ExponentVector
    m: dict[int, int] = field(hash=False)
    scalar_exponent: int
    proportionality: int


def _check_index(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"index must lie in 1..{n - 1}, got {k}")


def weight_numerators(n: int, k: int) -> list[int]:
    """Coefficients of ``n * lambda_k`` in the simple roots ``alpha_1..alpha_{n-1}``."""
    _check_index(n, k)
    return [j * (n - k) if j <= k else k * (n - j) for j in range(1, n)]


def mu_coefficients(n: int, k: int) -> list[Fraction]:
    """Root coordinates of the minimal representative of ``lambda_k`` mod the root lattice."""
    return [Fraction(c % n, n) for c in weight_numerators(n, k)]


def v_exponents(n: int, k: int) -> ExponentVector:
    """``v_k = e^{mu_k}`` pulled back to the z-coordinates."""
    return ExponentVector(n, [c % n for c in weight_numerators(n, k)])


def y_exponents(n: int, k: int) -> ExponentVector:
    """``y_k = e^{lambda_k}`` in the z-coordinates."""
    return ExponentVector(n, weight_numerators(n, k))


def z_divides_v(n: int, k: int, i: int) -> bool:
    """Whether ``z_k`` divides ``v_i``: iff ``n/gcd(k, n)`` does not divide ``i``."""
    _check_index(n, k)
    _check_index(n, i)
    return i % (n // math.gcd(k, n)) != 0


def in_H(h: GroupElement) -> bool:
    return h.character() == 0


def in_H_J(h: GroupElement, J: Iterable[int]) -> bool:
    J = set(J)
    if any(h.a[j - 1] != 0 for j in J):
        return False
    return sum(r * x for r, x in enumerate(h.a, start=1) if r not in J) % h.n == 0


def hat_H_elements(n: int) -> Iterator[GroupElement]:
    for a in itertools.product(range(n), repeat=n - 1):
        yield GroupElement(n, a)


def H_J_elements(n: int, J: Iterable[int] = ()) -> Iterator[GroupElement]:
    """Enumerate ``H_J`` (``H`` itself for empty ``J``) by solving the congruence directly."""
    J = set(J)
    free = [r for r in range(1, n) if r not in J]
    for vals in itertools.product(range(n), repeat=len(free)):
        if sum(r * v for r, v in zip(free, vals)) % n == 0:
            a = [0] * (n - 1)
            for r, v in zip(free, vals):
                a[r - 1] = v
            yield GroupElement(n, a)


def H_generators(n: int) -> list[GroupElement]:
    """Generators ``e_r + r e_{n-1}`` (r = 1..n-2) of ``H``."""
    gens = []
    for r in range(1, n - 1):
        a = [0] * (n - 1)
        a[r - 1] = 1
        a[n - 2] = r
        gens.append(GroupElement(n, a))
    return gens


def _proportionality(b: Sequence[int], n: int, support: Sequence[int]) -> int | None:
    """Least ``a`` in ``0..n-1`` with ``b_r = a*r mod n`` for every ``r`` in ``support``."""
    for a in range(n):
        if all((b[r - 1] - a * r) % n == 0 for r in support):
            return a
    return None


def is_invariant_monomial(b: ExponentVector, J: Iterable[int] | str = "full") -> bool:
    """Invariance of ``z^b`` under ``H`` (``J="full"``) or under ``H_J``."""
    J = set() if J == "full" else set(J)
    support = [r for r in range(1, b.n) if r not in J]
    return _proportionality(b.exps, b.n, support) is not None


def invariant_sum_decomposition(
    b: ExponentVector, J: Iterable[int], c: Mapping[int, int] | Sequence[int]
) -> InvariantDecomposition:
    """Split an ``H_J``-invariant monomial into an ``H``-invariant one plus an ideal element.

    Each ``b_j`` (``j`` in ``J``) is raised by the least ``m_j >= 0`` that makes the
    whole exponent vector proportional to ``(1, ..., n-1)`` mod n.  ``c`` gives the
    values ``z_j = omega^{c_j}`` on ``W_hat``; the returned scalar exponent is
    ``sum c_j m_j mod n``.
    """
    n = b.n
    Js = sorted(set(J))
    cmap = _c_mapping(Js, c)
    support = [r for r in range(1, n) if r not in Js]
    a = _proportionality(b.exps, n, support)
    if a is None:
        raise ValueError(f"{b.exps} is not invariant under H_J for J={Js}")
    m = {j: (a * j - b[j]) % n for j in Js}
    g = ExponentVector(n, [e + m.get(r, 0) for r, e in enumerate(b.exps, start=1)])
    scalar = sum(cmap[j] * m[j] for j in Js) % n
    return InvariantDecomposition(g=g, m=m, scalar_exponent=scalar, proportionality=a)


def _c_mapping(Js: Sequence[int], c: Mapping[int, int] | Sequence[int]) -> dict[int, int]:
    if isinstance(c, Mapping):
        cmap = {int(j): int(v) for j, v in c.items()}
        if set(cmap) != set(Js):
            raise ValueError(f"c-tuple keys {sorted(cmap)} do not match J={list(Js)}")
        return cmap
    c = list(c)
    if len(c) != len(Js):
        raise ValueError(f"c-tuple has {len(c)} entries, J has {len(Js)}")
    return dict(zip(Js, map(int, c)))


def d_star(frame: ToricFrame) -> int:
    """gcd of ``[n] \\ J``."""
    return reduce(math.gcd, frame.I | frame.K, frame.n)


def phi(frame: ToricFrame, c: Mapping[int, int] | Sequence[int]) -> ComponentIndex:
    """Component label ``sum_j j*c_j mod d*`` of the tuple ``c`` (aligned with sorted J)."""
    cmap = _c_mapping(frame.j_sorted, c)
    for j, v in cmap.items():
        if not 0 <= v < frame.n:
            raise ValueError(f"c_{j}={v} outside 0..{frame.n - 1}")
    return ComponentIndex(frame, sum(j * v for j, v in cmap.items()))


def z_shift(idx: ComponentIndex) -> ComponentIndex:
    """Action of the central generator: ``W_r -> W_{r+1}``."""
    return ComponentIndex(idx.frame, idx.r + 1)


def component_characters(frame: ToricFrame) -> list[int]:
    """Characters ``0, q, 2q, ..., (d*-1)q`` (``q = n/d*``) on the span of the components."""
    ds = d_star(frame)
    q = frame.n // ds
    return [k * q for k in range(ds)]
