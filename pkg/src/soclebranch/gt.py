"""Extended Gelfand–Tsetlin multiplicities m^k_{lam, sigma}, k in N ∪ {∞}."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Union

from .lr import skew_expand
from .partitions import INF, ONE, ZERO, ExtendedNat, Partition, ext, ssyt_count


@lru_cache(maxsize=None)
def _finite(lam: Partition, sigma: Partition, k: int) -> int:
    if k == 0:
        return int(lam == sigma)
    return sum(c * ssyt_count(gamma, k) for gamma, c in skew_expand(lam, sigma).items())


def gt_mult(lam: Iterable[int], sigma: Iterable[int], k: Union[int, ExtendedNat]) -> ExtendedNat:
    """Number of k-step interlacing chains from lam down to sigma.

    Finite k is the skew evaluation s_{lam/sigma}(1^k).  For k = ∞ the
    monotone sequence in k is probed once at k = |lam/sigma|: a chain exists
    for some k iff it exists at that k, and any nonconstant chain can absorb
    an extra idle step in several places, so the limit is 0, 1 or ∞.
    """
    lam, sigma = Partition(lam), Partition(sigma)
    k = ext(k)
    if not k.is_infinite:
        return ExtendedNat(_finite(lam, sigma, k.value))
    if lam == sigma:
        return ONE
    if not lam.contains(sigma):
        return ZERO
    return INF if _finite(lam, sigma, lam.size - sigma.size) else ZERO
