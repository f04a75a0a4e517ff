"""Finite-rank oracle: Weyl dimensions, Freudenthal characters, decompositions.

Everything is written in the epsilon basis of the Cartan subalgebra of
gl(n), sp(2m), so(2m+1) and so(2m), so restriction along a block embedding is
plain arithmetic on weight coordinates.  Inner products are the standard
Euclidean one and rho is always carried doubled so that type B stays integral.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator

from .partitions import EMPTY, Partition

Weight = tuple[int, ...]
Character = dict[Weight, int]

DEFAULT_DIM_BOUND = 20000
FAMILIES = ("GL", "SP", "SO")


class OracleError(Exception):
    code = "oracle-error"


class WeightOutOfRange(OracleError):
    code = "weight-out-of-range"


class OracleTooLarge(OracleError):
    code = "oracle-too-large"


class NotACharacter(OracleError):
    code = "not-a-character"


def dim_bound() -> int:
    return int(os.environ.get("SOCLE_ORACLE_DIM_BOUND", DEFAULT_DIM_BOUND))


@dataclass(frozen=True)
class HighestWeight:
    """(lam, mu) for GL; lam alone (mu empty) for SP and SO."""

    lam: Partition = EMPTY
    mu: Partition = EMPTY

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "mu", Partition(self.mu))

    def __repr__(self) -> str:
        return f"({self.lam!r},{self.mu!r})" if self.mu else repr(self.lam)


@dataclass(frozen=True)
class RankedAlgebra:
    """gl(n), sp(a) with a even, or so(a); ``rank`` is n or a."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam == "GL" and self.rank < 1:
            raise ValueError("GL rank must be >= 1")
        if fam == "SP" and (self.rank < 2 or self.rank % 2):
            raise ValueError("SP rank parameter must be even and >= 2")
        if fam == "SO" and self.rank < 3:
            raise ValueError("SO rank parameter must be >= 3")
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def __repr__(self) -> str:
        return f"{self.family.lower()}({self.rank})"

    @property
    def cartan_rank(self) -> int:
        return self.rank if self.family == "GL" else self.rank // 2

    @property
    def root_type(self) -> str:
        if self.family == "GL":
            return "A"
        if self.family == "SP":
            return "C"
        return "B" if self.rank % 2 else "D"

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        m, t = self.cartan_rank, self.root_type
        roots = []

        def e(*pairs: tuple[int, int]) -> Weight:
            v = [0] * m
            for i, s in pairs:
                v[i] += s
            return tuple(v)

        for i in range(m):
            for j in range(i + 1, m):
                roots.append(e((i, 1), (j, -1)))
                if t != "A":
                    roots.append(e((i, 1), (j, 1)))
            if t == "B":
                roots.append(e((i, 1)))
            elif t == "C":
                roots.append(e((i, 2)))
        return tuple(roots)

    @cached_property
    def rho2(self) -> Weight:
        """Twice the Weyl vector."""
        m = self.cartan_rank
        return tuple(
            sum(a[i] for a in self.positive_roots) for i in range(m)
        ) if m else ()

    def weight_of(self, hw: HighestWeight) -> Weight:
        """The epsilon-coordinates of a highest weight, validating its range."""
        m = self.cartan_rank
        if self.family == "GL":
            if hw.lam.rows + hw.mu.rows > m:
                raise WeightOutOfRange(f"{hw!r} needs more than {m} rows for {self!r}")
            return tuple(hw.lam) + (0,) * (m - hw.lam.rows - hw.mu.rows) + tuple(-x for x in reversed(hw.mu))
        if hw.mu:
            raise WeightOutOfRange(f"{self!r} weights are single partitions")
        if hw.lam.rows > m:
            raise WeightOutOfRange(f"{hw!r} has more than {m} rows for {self!r}")
        if self.root_type == "D" and hw.lam.rows == m:
            raise WeightOutOfRange(f"{hw!r} has {m} rows and splits over {self!r}")
        return tuple(hw.lam) + (0,) * (m - hw.lam.rows)

    def label_of(self, w: Weight) -> HighestWeight:
        """Inverse of ``weight_of`` on dominant weights."""
        if self.family == "GL":
            return HighestWeight(Partition(x for x in w if x > 0), Partition(-x for x in reversed(w) if x < 0))
        if w and w[-1] < 0:
            raise WeightOutOfRange(f"weight {w} is a split type D weight of {self!r}")
        hw = HighestWeight(Partition(w))
        self.weight_of(hw)
        return hw

    def is_dominant(self, w: Weight) -> bool:
        t = self.root_type
        for i in range(len(w) - 1):
            if w[i] < w[i + 1]:
                return False
        if t in ("B", "C") and w and w[-1] < 0:
            return False
        if t == "D" and len(w) >= 2 and w[-2] < abs(w[-1]):
            return False
        return True

    def dominant_rep(self, w: Weight) -> Weight:
        t = self.root_type
        if t == "A":
            return tuple(sorted(w, reverse=True))
        out = sorted((abs(x) for x in w), reverse=True)
        if t == "D" and out and out[-1] and sum(1 for x in w if x < 0) % 2:
            out[-1] = -out[-1]
        return tuple(out)

    def orbit(self, w: Weight) -> Iterator[Weight]:
        t = self.root_type
        if t == "A":
            yield from _multiset_permutations(w)
            return
        need_even = None
        if t == "D" and all(w):
            need_even = sum(1 for x in w if x < 0) % 2
        for perm in _multiset_permutations(tuple(abs(x) for x in w)):
            nz = [i for i, x in enumerate(perm) if x]
            for mask in range(1 << len(nz)):
                if need_even is not None and bin(mask).count("1") % 2 != need_even:
                    continue
                v = list(perm)
                for b, i in enumerate(nz):
                    if mask >> b & 1:
                        v[i] = -v[i]
                yield tuple(v)


def _multiset_permutations(w: Weight) -> Iterator[Weight]:
    counts = Counter(w)
    keys = sorted(counts, reverse=True)
    n = len(w)
    cur: list[int] = []

    def go() -> Iterator[Weight]:
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from go()
                cur.pop()
                counts[k] += 1

    yield from go()


def _dot(u: Iterable[int], v: Iterable[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _hw(hw: HighestWeight | tuple) -> HighestWeight:
    if isinstance(hw, HighestWeight):
        return hw
    if len(hw) == 2 and all(isinstance(x, (tuple, list)) for x in hw):
        return HighestWeight(hw[0], hw[1])
    return HighestWeight(hw)


def weyl_dim(alg: RankedAlgebra, hw: HighestWeight | tuple) -> int:
    """Weyl dimension formula: prod over positive roots of (lam+rho, a)/(rho, a)."""
    lam = alg.weight_of(_hw(hw))
    shifted = tuple(2 * x + r for x, r in zip(lam, alg.rho2))
    value = Fraction(1)
    for a in alg.positive_roots:
        value *= Fraction(_dot(shifted, a), _dot(alg.rho2, a))
    assert value.denominator == 1
    return int(value)


def dim_or_zero(alg: RankedAlgebra, hw: HighestWeight | tuple) -> int:
    """Like ``weyl_dim`` but a label with too many rows names the zero module."""
    try:
        return weyl_dim(alg, hw)
    except WeightOutOfRange:
        hw = _hw(hw)
        if alg.root_type == "D" and hw.lam.rows == alg.cartan_rank and not hw.mu:
            raise
        return 0


@lru_cache(maxsize=None)
def _dominant_multiplicities(alg: RankedAlgebra, lam: Weight) -> dict[Weight, int]:
    roots = alg.positive_roots
    rho2 = alg.rho2
    found = {lam}
    queue = [lam]
    while queue:
        nu = queue.pop()
        for a in roots:
            mu = tuple(x - y for x, y in zip(nu, a))
            if mu not in found and alg.is_dominant(mu):
                found.add(mu)
                queue.append(mu)
    order = sorted(found, key=lambda mu: _dot([x - y for x, y in zip(lam, mu)], rho2))
    mult: dict[Weight, int] = {lam: 1}
    lam_shift = tuple(x + r for x, r in zip(lam, rho2))
    for mu in order[1:]:
        total = 0
        for a in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(alg.dominant_rep(nu))
                if not m:
                    break
                total += m * _dot(nu, a)
                k += 1
        # (lam+rho)^2 - (mu+rho)^2 = (lam - mu, lam + mu + 2 rho)
        denom = _dot([x - y for x, y in zip(lam, mu)], [x + y for x, y in zip(lam_shift, mu)])
        value, rem = divmod(2 * total, denom)
        assert rem == 0, (alg, lam, mu)
        if value:
            mult[mu] = value
    return mult


@lru_cache(maxsize=None)
def _irr_char(alg: RankedAlgebra, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    out: Character = {}
    for mu, m in _dominant_multiplicities(alg, lam).items():
        for w in alg.orbit(mu):
            out[w] = m
    return tuple(sorted(out.items()))


def irr_char(alg: RankedAlgebra, hw: HighestWeight | tuple) -> Character:
    """Full weight-multiplicity map of the irreducible module."""
    hw = _hw(hw)
    lam = alg.weight_of(hw)
    d = weyl_dim(alg, hw)
    if d > dim_bound():
        raise OracleTooLarge(f"dim {d} of {hw!r} over {alg!r} exceeds the bound {dim_bound()}")
    return dict(_irr_char(alg, lam))


def char_dim(ch: Character) -> int:
    return sum(ch.values())


def tensor(ch1: Character, ch2: Character) -> Character:
    out: Counter = Counter()
    for w1, m1 in ch1.items():
        for w2, m2 in ch2.items():
            out[tuple(x + y for x, y in zip(w1, w2))] += m1 * m2
    return dict(out)


def add_chars(*chars: Character) -> Character:
    out: Counter = Counter()
    for ch in chars:
        out.update(ch)
    return {w: m for w, m in out.items() if m}


def map_weights(ch: Character, f: Callable[[Weight], Weight]) -> Character:
    out: Counter = Counter()
    for w, m in ch.items():
        out[f(w)] += m
    return dict(out)


def decompose(alg: RankedAlgebra, ch: Character) -> dict[HighestWeight, int]:
    """Greedy leading-term decomposition into irreducible characters."""
    residue = {w: m for w, m in ch.items() if m}
    for w in residue:
        if len(w) != alg.cartan_rank:
            raise ValueError(f"weight {w} has wrong length for {alg!r}")
    result: dict[HighestWeight, int] = {}
    while residue:
        top = max(w for w in residue if alg.is_dominant(w))
        m = residue[top]
        if m < 0:
            raise NotACharacter(f"negative residue {m} at {top} over {alg!r}")
        hw = alg.label_of(top)
        result[hw] = m
        for w, k in _irr_char(alg, top):
            left = residue.get(w, 0) - m * k
            if left:
                residue[w] = left
            else:
                residue.pop(w, None)
    return result


def restrict_diagonal(big_rank: int, hw: HighestWeight | tuple, signature: tuple[int, int, int], small_rank: int) -> Character:
    """Restrict a gl(big_rank)-module to gl(small_rank) of signature (k, l, z)."""
    k, l, z = signature
    n = small_rank
    if big_rank != (k + l) * n + z or min(k, l, z) < 0:
        raise ValueError(f"rank mismatch: {big_rank} != ({k}+{l})*{n}+{z}")
    ch = irr_char(RankedAlgebra("GL", big_rank), hw)

    def fold(w: Weight) -> Weight:
        out = [0] * n
        for b in range(k + l):
            s = 1 if b < k else -1
            for i in range(n):
                out[i] += s * w[b * n + i]
        return tuple(out)

    return map_weights(ch, fold)


def fold_to_subtype(w: Weight) -> Weight:
    """gl(a) weight -> sp/so weight: i-th coordinate minus its mirror."""
    a = len(w)
    return tuple(w[i] - w[a - 1 - i] for i in range(a // 2))


def restrict_to_subtype(a: int, hw: HighestWeight | tuple, target: str) -> Character:
    """Restrict a gl(a)-module to sp(a) or so(a) via the mirrored folding."""
    target = target.upper()
    if target == "SP" and a % 2:
        raise ValueError("sp(a) needs a even")
    if target not in ("SP", "SO"):
        raise ValueError(f"target must be SP or SO, not {target!r}")
    RankedAlgebra(target, a)  # validates the rank
    return map_weights(irr_char(RankedAlgebra("GL", a), hw), fold_to_subtype)
