"""Littlewood–Richardson coefficients by tableau enumeration.

Two enumerations are used:

* ``skew_expand`` fills a fixed skew shape lam/sigma with every lattice-word
  filling and tallies the contents, so one pass yields c^lam_{sigma,gamma} for
  all gamma.  ``lr`` reads off this table.
* ``product_expand`` grows mu by one horizontal strip per letter of nu, pruning
  with the row-by-row lattice condition, and tallies the final shapes.

The two are independent codings of the same rule and are cross-checked in the
test-suite.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .partitions import Partition

_SKEW_CACHE: dict[tuple[Partition, Partition], dict[Partition, int]] = {}
_PRODUCT_CACHE: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def _contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    return len(inner) <= len(outer) and all(outer[i] >= x for i, x in enumerate(inner))


def _skew_fillings(lam: tuple[int, ...], sigma: tuple[int, ...]) -> dict[Partition, int]:
    cells = []
    for r, row in enumerate(lam):
        start = sigma[r] if r < len(sigma) else 0
        for c in range(row - 1, start - 1, -1):
            cells.append((r, c))
    inner = lambda r: sigma[r] if 0 <= r < len(sigma) else 0  # noqa: E731
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 2)  # counts[x] for letters x >= 1
    tally: Counter = Counter()

    def place(idx: int) -> None:
        if idx == len(cells):
            content = []
            x = 1
            while counts[x]:
                content.append(counts[x])
                x += 1
            tally[Partition(content)] += 1
            return
        r, c = cells[idx]
        lo = grid[(r - 1, c)] + 1 if r > 0 and c >= inner(r - 1) else 1
        hi = grid.get((r, c + 1), r + 1)
        hi = min(hi, r + 1)
        for x in range(lo, hi + 1):
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            grid[(r, c)] = x
            place(idx + 1)
            counts[x] -= 1
        grid.pop((r, c), None)

    place(0)
    return dict(tally)


def skew_expand(lam: Iterable[int], sigma: Iterable[int]) -> dict[Partition, int]:
    """Map gamma -> c^lam_{sigma, gamma}, restricted to its support."""
    lam, sigma = Partition(lam), Partition(sigma)
    key = (lam, sigma)
    hit = _SKEW_CACHE.get(key)
    if hit is not None:
        return hit
    result = _skew_fillings(lam, sigma) if _contains(lam, sigma) else {}
    _SKEW_CACHE.setdefault(key, result)
    return result


def lr(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """The Littlewood–Richardson coefficient c^lam_{mu, nu}."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not (_contains(lam, mu) and _contains(lam, nu)):
        return 0
    return skew_expand(lam, mu).get(nu, 0)


def _strips(shape: list[int], m: int):
    """Yield shapes obtained by adding a horizontal strip of m boxes."""
    rows = len(shape)

    def go(r: int, left: int, cur: list[int]):
        if left == 0:
            yield cur[:]
            return
        if r > rows:
            return
        base = shape[r] if r < rows else 0
        cap = left if r == 0 else min(left, shape[r - 1] - base)
        for add in range(cap, -1, -1):
            if r < rows:
                cur[r] = base + add
            elif add:
                cur.append(add)
            yield from go(r + 1, left - add, cur)
            if r < rows:
                cur[r] = base
            elif add:
                cur.pop()

    yield from go(0, m, list(shape))


def product_expand(mu: Iterable[int], nu: Iterable[int]) -> dict[Partition, int]:
    """Map lam -> c^lam_{mu, nu} by adding the letters of nu strip by strip."""
    mu, nu = Partition(mu), Partition(nu)
    key = (mu, nu)
    hit = _PRODUCT_CACHE.get(key)
    if hit is not None:
        return hit
    tally: Counter = Counter()

    # per_row[i][r] = number of letter i+1 in row r
    def grow(i: int, shape: list[int], per_row: list[list[int]]):
        if i == len(nu):
            tally[Partition(shape)] += 1
            return
        for new in _strips(shape, nu[i]):
            added = [new[r] - (shape[r] if r < len(shape) else 0) for r in range(len(new))]
            if i > 0:
                prev = per_row[i - 1]
                ok, run_i, run_prev = True, 0, 0
                for r in range(len(added)):
                    run_i += added[r]
                    if run_i > run_prev:
                        ok = False
                        break
                    run_prev += prev[r] if r < len(prev) else 0
                if not ok:
                    continue
            per_row.append(added)
            grow(i + 1, new, per_row)
            per_row.pop()

    grow(0, list(mu), [])
    result = dict(tally)
    _PRODUCT_CACHE.setdefault(key, result)
    return result


def clear_caches() -> None:
    _SKEW_CACHE.clear()
    _PRODUCT_CACHE.clear()


__all__ = ["lr", "skew_expand", "product_expand", "clear_caches"]
