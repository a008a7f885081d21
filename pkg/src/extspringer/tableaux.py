"""Row-strict tableaux in English convention.

Rows are listed top to bottom, longest first; rows and columns are 1-based in
every public interface.  A tableau of shape ``lam`` is filled with ``1..n``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Iterator, NamedTuple, Sequence

from .partitions import ParseError, Partition, as_partition, quotient_partition
from .toric import ToricFrame


@dataclass(frozen=True)
class RowStrictTableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or any(not row for row in rows):
            raise ValueError("rows must be nonempty")
        lengths = [len(r) for r in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths {lengths} are not weakly decreasing")
        n = sum(lengths)
        if sorted(itertools.chain.from_iterable(rows)) != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {list(row)} is not strictly increasing")
        object.__setattr__(self, "rows", rows)

    @cached_property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """label -> (row, column), both 1-based."""
        return {x: (i, j) for i, row in enumerate(self.rows, 1) for j, x in enumerate(row, 1)}

    @cached_property
    def right_neighbour(self) -> dict[int, int | None]:
        """label -> label of the box directly to its right, or None at a row end."""
        out: dict[int, int | None] = {}
        for row in self.rows:
            for a, b in zip(row, row[1:] + (None,)):
                out[a] = b
        return out

    def columns(self) -> list[list[int]]:
        return [[row[c] for row in self.rows if len(row) > c] for c in range(len(self.rows[0]))]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RowStrictTableau({[list(r) for r in self.rows]})"

    def to_text(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)

    @classmethod
    def parse(cls, text: str) -> RowStrictTableau:
        """Parse ``"3,4,5,6/1,2,9,10/7,8/11,12"``."""
        rows = []
        for row in text.strip().split("/"):
            entries = []
            for token in row.split(","):
                token = token.strip()
                if not token.isdigit():
                    raise ParseError(f"bad tableau token {token!r} in {text!r}", token)
                entries.append(int(token))
            rows.append(entries)
        try:
            return cls(rows)
        except ValueError as exc:
            raise ParseError(f"invalid tableau {text!r}: {exc}", text) from exc

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict | str) -> RowStrictTableau:
        if isinstance(obj, str):
            obj = json.loads(obj)
        tab = cls(obj["rows"])
        if "shape" in obj and list(tab.shape.parts) != list(obj["shape"]):
            raise ValueError(f"rows do not have shape {obj['shape']}")
        return tab


class IJKDecomposition(NamedTuple):
    I: frozenset[int]
    J: frozenset[int]
    K: frozenset[int]


def as_tableau(sigma: RowStrictTableau | Sequence[Sequence[int]] | str) -> RowStrictTableau:
    if isinstance(sigma, RowStrictTableau):
        return sigma
    if isinstance(sigma, str):
        return RowStrictTableau.parse(sigma)
    return RowStrictTableau(sigma)


def enumerate_rst(lam: Partition) -> Iterator[RowStrictTableau]:
    """Every row-strict tableau of shape ``lam``, lexicographic in the row-reading word."""
    lam = as_partition(lam)

    def rec(remaining: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(lam):
            yield ()
            return
        for row in itertools.combinations(remaining, lam[k]):
            rest = tuple(x for x in remaining if x not in row)
            for tail in rec(rest, k + 1):
                yield (row, *tail)

    for rows in rec(tuple(range(1, lam.n + 1)), 0):
        yield RowStrictTableau(rows)


@lru_cache(maxsize=None)
def rst_list(lam: Partition) -> tuple[RowStrictTableau, ...]:
    """Cached, materialised :func:`enumerate_rst`."""
    return tuple(enumerate_rst(lam))


def base_box_order(lam: Partition) -> list[tuple[int, int]]:
    """Boxes (row, col) in base-filling order: each column bottom to top, columns left to right."""
    lam = as_partition(lam)
    conj = lam.conjugate()
    return [(r, c) for c in range(1, lam[0] + 1) for r in range(conj[c - 1], 0, -1)]


def base_filling(lam: Partition) -> RowStrictTableau:
    lam = as_partition(lam)
    rows = [[0] * p for p in lam]
    for label, (r, c) in enumerate(base_box_order(lam), start=1):
        rows[r - 1][c - 1] = label
    return RowStrictTableau(rows)


@lru_cache(maxsize=1 << 18)
def _ijk(sigma: RowStrictTableau) -> IJKDecomposition:
    pos = sigma.positions
    I, J, K = set(), set(), set()
    for i in range(1, sigma.n):
        (ri, ci), (rn, cn) = pos[i], pos[i + 1]
        if rn == ri:
            J.add(i)
        elif cn >= ci + 2 or (cn == ci + 1 and rn < ri):
            I.add(i)
        else:
            K.add(i)
    return IJKDecomposition(frozenset(I), frozenset(J), frozenset(K))


def ijk_decomposition(sigma: RowStrictTableau) -> IJKDecomposition:
    """Classify each ``i < n`` by where ``i+1`` sits relative to ``i``.

    J: directly to the right.  I: one column right and strictly higher, or at
    least two columns right.  K: everything else.
    """
    return _ijk(as_tableau(sigma))


def blocks(sigma: RowStrictTableau) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive labels in consecutive boxes of one row, in label order."""
    sigma = as_tableau(sigma)
    out: list[tuple[int, ...]] = []
    current = [1]
    for i in range(1, sigma.n):
        if sigma.right_neighbour[i] == i + 1:
            current.append(i + 1)
        else:
            out.append(tuple(current))
            current = [i + 1]
    out.append(tuple(current))
    return out


def max_divisor(sigma: RowStrictTableau) -> int:
    """``d_sigma = gcd(I | K | {n})``; cross-checked against the block lengths."""
    return _max_divisor(as_tableau(sigma))


@lru_cache(maxsize=1 << 18)
def _max_divisor(sigma: RowStrictTableau) -> int:
    dec = ijk_decomposition(sigma)
    d = reduce(math.gcd, dec.I | dec.K, sigma.n)
    assert d == reduce(math.gcd, (len(b) for b in blocks(sigma))), "block gcd disagrees"
    return d


def divisor_set(sigma: RowStrictTableau) -> list[int]:
    d = max_divisor(sigma)
    return [e for e in range(1, d + 1) if d % e == 0]


def quotient_tableau(sigma: RowStrictTableau, d: int) -> RowStrictTableau:
    """Merge the size-``d`` blocks ``(m-1)d+1..md`` into a single box labelled ``m``."""
    sigma = as_tableau(sigma)
    if d < 1 or max_divisor(sigma) % d:
        raise ValueError(f"{d} is not a divisor of {sigma}")
    quotient_partition(sigma.shape, d)
    return RowStrictTableau([[row[k] // d for k in range(d - 1, len(row), d)] for row in sigma.rows])


def standardize(sigma: RowStrictTableau) -> RowStrictTableau:
    """Sort every column so it increases from top to bottom."""
    sigma = as_tableau(sigma)
    rows = [list(r) for r in sigma.rows]
    for c, col in enumerate(sigma.columns()):
        for r, x in enumerate(sorted(col)):
            rows[r][c] = x
    return RowStrictTableau(rows)


def is_standard(sigma: RowStrictTableau) -> bool:
    sigma = as_tableau(sigma)
    return all(all(a < b for a, b in zip(col, col[1:])) for col in sigma.columns())


def w_sigma(sigma: RowStrictTableau) -> list[int]:
    """One-line notation of ``w_sigma^{-1}``: entries of ``sigma`` read in base-filling box order."""
    sigma = as_tableau(sigma)
    return [sigma.rows[r - 1][c - 1] for r, c in base_box_order(sigma.shape)]


def x_lambda_positions(lam: Partition) -> set[tuple[int, int]]:
    """Pairs (l, r) with ``r`` directly right of ``l`` in the base filling."""
    base = base_filling(lam)
    return {(a, b) for row in base.rows for a, b in zip(row, row[1:])}


def cell_frame(sigma: RowStrictTableau) -> ToricFrame:
    sigma = as_tableau(sigma)
    dec = ijk_decomposition(sigma)
    return ToricFrame(sigma.n, dec.I, dec.J, dec.K)
