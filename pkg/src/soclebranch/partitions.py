"""Integer partitions and the extended naturals.

Partitions are stored trimmed (no trailing zeros) as a ``tuple`` subclass, so
they hash and compare like plain tuples and can be used as dictionary keys
throughout the coefficient tables.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Union


class Partition(tuple):
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 0:
                raise ValueError(f"negative part in partition {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def rows(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def contains(self, other: Iterable[int]) -> bool:
        other = tuple(other)
        return len(other) <= len(self) and all(self[i] >= x for i, x in enumerate(other))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"

    def to_json(self) -> list[int]:
        return list(self)


EMPTY = Partition()


def parse_partition(text: str | Iterable[int]) -> Partition:
    """Read the textual form ``"[3,1]"`` (or any iterable of ints)."""
    if isinstance(text, str):
        value = json.loads(text)
        if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
            raise ValueError(f"partition must be a JSON array of integers: {text!r}")
        return Partition(value)
    return Partition(text)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))


def interlaces(sigma: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff lam_1 >= sigma_1 >= lam_2 >= sigma_2 >= ... (zero padded)."""
    sigma, lam = tuple(sigma), tuple(lam)
    if len(sigma) > len(lam):
        return False
    for i, s in enumerate(sigma):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if not lam[i] >= s >= nxt:
            return False
    # sigma is zero past its end; lam must then vanish two rows later
    return len(lam) <= len(sigma) + 1


def double(delta: Iterable[int]) -> Partition:
    """All rows even: (2d_1, 2d_2, ...)."""
    return Partition(2 * x for x in delta)


def double_conjugate(delta: Iterable[int]) -> Partition:
    """All columns even: the conjugate of ``double(delta)``."""
    return conjugate(double(delta))


def hooks(lam: Iterable[int]) -> Iterator[tuple[int, int, int]]:
    """Yield (row, column, hook length) for every box of lam."""
    lam = tuple(lam)
    conj = conjugate(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            yield i, j, (row - j - 1) + (conj[j] - i - 1) + 1


@lru_cache(maxsize=None)
def _sym_dim(lam: tuple[int, ...]) -> int:
    prod = 1
    for _, _, h in hooks(lam):
        prod *= h
    return factorial(sum(lam)) // prod


def sym_dim(lam: Iterable[int]) -> int:
    """Dimension of the symmetric-group irreducible (hook-length formula)."""
    return _sym_dim(tuple(lam))


@lru_cache(maxsize=None)
def _ssyt_count(lam: tuple[int, ...], k: int) -> int:
    if len(lam) > k:
        return 0
    num, den = 1, 1
    for i, j, h in hooks(lam):
        num *= k + j - i
        den *= h
    return num // den


def ssyt_count(lam: Iterable[int], k: int) -> int:
    """Number of semistandard tableaux of shape lam with entries in 1..k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _ssyt_count(tuple(lam), k)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, max_parts: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_parts - 1):
            out.append(Partition((first,) + rest))
    return tuple(out)


def enumerate_partitions(n: int, max_parts: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions(n, n, n if max_parts is None else max_parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from enumerate_partitions(m)


class ExtendedNat:
    """A value in N ∪ {∞} with the semiring conventions ∞·0 = 0."""

    __slots__ = ("_v",)

    def __init__(self, value: Union[int, "ExtendedNat", str, None]) -> None:
        if isinstance(value, ExtendedNat):
            self._v = value._v
        elif value is None or value == "inf":
            self._v = None
        elif isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an extended natural: {value!r}")
        elif value < 0:
            raise ValueError(f"negative multiplicity {value}")
        else:
            self._v = value

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> int:
        if self._v is None:
            raise ValueError("infinite value has no integer form")
        return self._v

    def __add__(self, other: "ExtNatLike") -> "ExtendedNat":
        other = ext(other)
        if self._v is None or other._v is None:
            return INF
        return ExtendedNat(self._v + other._v)

    __radd__ = __add__

    def __mul__(self, other: "ExtNatLike") -> "ExtendedNat":
        other = ext(other)
        if self._v == 0 or other._v == 0:
            return ZERO
        if self._v is None or other._v is None:
            return INF
        return ExtendedNat(self._v * other._v)

    __rmul__ = __mul__

    def _key(self) -> float:
        return float("inf") if self._v is None else self._v

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, ExtendedNat, str)) and not isinstance(other, bool):
            try:
                return self._v == ext(other)._v
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._v) if self._v is not None else hash("inf")

    def __lt__(self, other: "ExtNatLike") -> bool:
        return self._key() < ext(other)._key()

    def __le__(self, other: "ExtNatLike") -> bool:
        return self._key() <= ext(other)._key()

    def __gt__(self, other: "ExtNatLike") -> bool:
        return self._key() > ext(other)._key()

    def __ge__(self, other: "ExtNatLike") -> bool:
        return self._key() >= ext(other)._key()

    def __bool__(self) -> bool:
        return self._v != 0

    def __repr__(self) -> str:
        return "∞" if self._v is None else str(self._v)

    def to_json(self) -> Union[int, str]:
        return "inf" if self._v is None else self._v


ExtNatLike = Union[int, ExtendedNat]

INF = ExtendedNat(None)
ZERO = ExtendedNat(0)
ONE = ExtendedNat(1)


def ext(x: Union[ExtNatLike, str]) -> ExtendedNat:
    return x if isinstance(x, ExtendedNat) else ExtendedNat(x)


def ext_min(*values: ExtNatLike) -> ExtendedNat:
    return min((ext(v) for v in values), key=lambda v: v._key())


def ext_sum(values: Iterable[ExtNatLike]) -> ExtendedNat:
    total = ZERO
    for v in values:
        total = total + v
    return total


def parse_ext(text: Union[str, int]) -> ExtendedNat:
    """Parse ``"inf"``/``"∞"`` or a nonnegative integer."""
    if isinstance(text, int):
        return ExtendedNat(text)
    t = text.strip().lower()
    if t in ("inf", "∞", "infinity"):
        return INF
    return ExtendedNat(int(t))
