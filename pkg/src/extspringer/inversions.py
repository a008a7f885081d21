"""Springer inversions and Springer pairs of row-strict tableaux.

A pair ``(i, j)`` with ``i > j`` is a Springer pair when ``i`` sits in the
column of ``j`` or in a column strictly to its left, and ``i < r`` for the
label ``r`` directly right of ``j`` (no condition at a row end).  It is a
Springer inversion when additionally, in the shared-column case, ``i`` lies
below ``j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Literal

from .tableaux import RowStrictTableau, as_tableau, ijk_decomposition

PairKind = Literal["inv", "pairs", "i_tilde"]


@dataclass(frozen=True)
class PairSet:
    kind: PairKind
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.sorted())

    def __contains__(self, item) -> bool:
        return tuple(item) in self.pairs

    def __le__(self, other: PairSet) -> bool:
        return self.pairs <= other.pairs

    def sorted(self) -> list[tuple[int, int]]:
        return sorted(self.pairs, reverse=True)

    def to_json(self) -> dict:
        return {"kind": self.kind, "pairs": [list(p) for p in self.sorted()]}

    @classmethod
    def from_json(cls, obj: dict | str) -> PairSet:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["kind"], frozenset(tuple(p) for p in obj["pairs"]))


def _scan(sigma: RowStrictTableau, strict: bool) -> Iterator[tuple[int, int]]:
    pos = sigma.positions
    right = sigma.right_neighbour
    n = sigma.n
    for j in range(1, n):
        rj, cj = pos[j]
        bound = right[j] or n + 1
        for i in range(j + 1, min(bound, n + 1)):
            ri, ci = pos[i]
            if ci < cj or (ci == cj and (ri > rj or not strict)):
                yield (i, j)


def springer_inversions(sigma: RowStrictTableau) -> PairSet:
    return PairSet("inv", frozenset(_scan(as_tableau(sigma), strict=True)))


def inversion_count(sigma: RowStrictTableau) -> int:
    """``|sigma|``, the number of Springer inversions."""
    return sum(1 for _ in _scan(as_tableau(sigma), strict=True))


def springer_pairs(sigma: RowStrictTableau) -> PairSet:
    return PairSet("pairs", frozenset(_scan(as_tableau(sigma), strict=False)))


def pair_count(sigma: RowStrictTableau) -> int:
    return sum(1 for _ in _scan(as_tableau(sigma), strict=False))


def i_tilde(sigma: RowStrictTableau) -> PairSet:
    """Inversions ``(i, l(i+1))`` for ``i`` in ``I``, ``l(i+1)`` the label left of ``i+1``."""
    sigma = as_tableau(sigma)
    left = {b: a for a, b in sigma.right_neighbour.items() if b is not None}
    return PairSet("i_tilde", frozenset((i, left[i + 1]) for i in ijk_decomposition(sigma).I))
