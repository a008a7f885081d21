"""Integer partitions: divisibility, quotients and Springer fiber dimensions."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed textual input; ``token`` names the offending piece."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True)
class Partition:
    """A partition of ``n``, parts stored weakly decreasing.

    Any iterable of positive integers is accepted; it is sorted on construction.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise ValueError("a partition needs at least one part")
        if parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def conjugate(self) -> Partition:
        return Partition(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"4,4,2,2"`` or the exponent shorthand ``"4^2,2^2"``."""
        parts: list[int] = []
        for token in text.replace(" ", "").split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m or int(m.group(1)) < 1 or (m.group(2) is not None and int(m.group(2)) < 1):
                raise ParseError(f"bad partition token {token!r} in {text!r}", token)
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(parts)

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    @classmethod
    def from_json(cls, obj: dict | str) -> Partition:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["parts"])


def as_partition(lam: Partition | Iterable[int] | str) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return Partition(lam)


def divides(d: int, lam: Partition) -> bool:
    """True iff every part of ``lam`` is a multiple of ``d``."""
    if d < 1:
        raise ValueError(f"divisor must be positive, got {d}")
    return all(p % d == 0 for p in as_partition(lam))


def quotient_partition(lam: Partition, d: int) -> Partition:
    lam = as_partition(lam)
    if not divides(d, lam):
        raise ValueError(f"{d} does not divide every part of {lam}")
    return Partition(p // d for p in lam)


def springer_dim(lam: Partition) -> int:
    """Dimension of the Springer fiber of Jordan type ``lam``: sum of (i-1)*lam_i."""
    return sum(i * p for i, p in enumerate(as_partition(lam)))


def dim_shift(lam: Partition, d: int) -> int:
    """Dimension drop from ``lam`` to ``lam/d``, computed as (d-1)/d * springer_dim."""
    lam = as_partition(lam)
    if not divides(d, lam):
        raise ValueError(f"{d} does not divide every part of {lam}")
    total = (d - 1) * springer_dim(lam)
    assert total % d == 0
    return total // d


def nilcone_dim(n: int) -> int:
    """Dimension of the nilpotent cone of sl_n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n * n - n


def divisor_list(lam: Partition) -> list[int]:
    """All common divisors of the parts, ascending."""
    g = reduce(math.gcd, as_partition(lam).parts)
    return [d for d in range(1, g + 1) if g % d == 0]


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order ([n] first)."""

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first, *rest)

    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for parts in rec(n, n):
        yield Partition(parts)


def multinomial_count(lam: Partition) -> int:
    """n! / prod(lam_i!), the number of row-strict fillings."""
    lam = as_partition(lam)
    return math.factorial(lam.n) // math.prod(math.factorial(p) for p in lam)


def hook_length_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` by the hook length formula."""
    lam = as_partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(lam.n) // hooks
