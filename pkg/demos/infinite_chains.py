"""Gelfand–Tsetlin multiplicities as the number of interlacing steps grows.

m^k(λ, σ) counts chains λ ⊇ ... ⊇ σ of k interlacing steps.  It is a
polynomial in k, so it is either constant (only when λ = σ) or unbounded,
and the infinite-rank value is 1 or ∞ accordingly.
"""

from soclebranch import gt_mult
from soclebranch.partitions import INF, Partition

cases = [((2,), (1,)), ((1, 1), (1,)), ((2, 1), (2, 1)), ((2, 1), ()), ((1,), (2,))]
print(f"{'λ':>8} {'σ':>8}  " + " ".join(f"k={k}" for k in range(6)) + "   k=∞")
for lam, sigma in cases:
    row = " ".join(f"{gt_mult(lam, sigma, k).value:>3}" for k in range(6))
    print(f"{str(Partition(lam)):>8} {str(Partition(sigma)):>8}  {row}   {gt_mult(lam, sigma, INF)}")
