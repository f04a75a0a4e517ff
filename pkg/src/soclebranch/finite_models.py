"""Finite-rank stand-ins for each embedding type.

Each model realizes an embedding of finite-dimensional classical Lie algebras
whose restriction decomposes with the same total multiplicities as the
infinite-rank socle layers.  Finite restrictions are semisimple, so only the
totals (the sum over layers) can be compared.

All weight maps act on epsilon-coordinates: gl weights have one entry per
basis vector, sp(2n)/so(2n)/so(2n+1) weights have n entries.
"""

from __future__ import annotations

from collections import Counter

from . import finite_rank as fr
from .branching import SimpleModule


def _decomposed(alg: fr.RankedAlgebra, ch: fr.Character, family: str) -> dict[SimpleModule, int]:
    out = {}
    for hw, m in fr.decompose(alg, ch).items():
        out[SimpleModule(family, hw.lam, hw.mu)] = m
    return out


def _char(module: SimpleModule, rank: int) -> fr.Character:
    return fr.irr_char(fr.RankedAlgebra(module.family, rank), fr.HighestWeight(module.lam, module.mu))


def _block_sum(w, k: int, n: int, sign_blocks: int = 0):
    """Sum k blocks of n coordinates, then subtract sign_blocks further blocks."""
    out = [0] * n
    for b in range(k + sign_blocks):
        s = 1 if b < k else -1
        for i in range(n):
            out[i] += s * w[b * n + i]
    return tuple(out)


def diagonal(module: SimpleModule, k: int, l: int, z: int, n: int) -> dict[SimpleModule, int]:
    """gl((k+l)n + z) ⊃ gl(n) with signature (k, l, z)."""
    ch = fr.restrict_diagonal((k + l) * n + z, fr.HighestWeight(module.lam, module.mu), (k, l, z), n)
    return _decomposed(fr.RankedAlgebra("GL", n), ch, "GL")


def gl_type_i(module: SimpleModule, z: int, n: int) -> dict[SimpleModule, int]:
    """Types I and II over gl both collapse to gl(n + z) ⊃ gl(n) at the level of totals."""
    return diagonal(module, 1, 0, z, n)


def sym_type_i(module: SimpleModule, b: int, n: int) -> dict[SimpleModule, int]:
    """Type I over sp/so with a = 0.

    V' ⊂ V has codimension b and V'^⊥ = 0, which no nondegenerate finite
    form realizes: the finite stand-in is the quotient picture in which the b
    extra vectors span the radical.  Tensors that avoid contractions then
    branch exactly as gl(n + b) ⊃ gl(n), relabelled by the sp/so family.
    """
    ch = fr.restrict_diagonal(n + b, fr.HighestWeight(module.lam), (1, 0, b), n)
    out = {}
    for m, v in _decomposed(fr.RankedAlgebra("GL", n), ch, "GL").items():
        if m.mu:
            raise AssertionError("covariant module produced a dual part")
        out[SimpleModule(module.family, m.lam)] = v
    return out


def sym_type_ii(module: SimpleModule, a: int, n: int) -> dict[SimpleModule, int]:
    """sp(2n + a) ⊃ sp(2n) or so(2n + a) ⊃ so(2n): keep the first n coordinates."""
    fam = module.family
    ch = _char(module, 2 * n + a)
    ch = fr.map_weights(ch, lambda w: tuple(w[:n]))
    return _decomposed(fr.RankedAlgebra(fam, 2 * n), ch, fam)


def type_ii(module: SimpleModule, a: int, n: int) -> dict[SimpleModule, int]:
    if module.family == "GL":
        return gl_type_i(module, a, n)
    return sym_type_ii(module, a, n)


def type_iii(module: SimpleModule, sub: str, k: int, l: int, n: int) -> dict[SimpleModule, int]:
    """Diagonal stage from module.family to ``sub`` with table copy count k.

    ``n`` is the rank parameter of the subalgebra: gl(n), sp(n), so(n).
    """
    amb = module.family
    if amb == "GL" and sub == "GL":
        return diagonal(module, k, l, 0, n)
    if amb == "GL":
        # gl(kn) ⊃ gl(n) diagonally, then gl(n) ⊃ sp(n)/so(n) by folding
        ch = _char(module, k * n)
        ch = fr.map_weights(ch, lambda w: fr.fold_to_subtype(_block_sum(w, k, n)))
        return _decomposed(fr.RankedAlgebra(sub, n), ch, sub)
    if sub == "GL":
        # Levi gl(kn) of sp(2kn)/so(2kn), then gl(kn) ⊃ gl(n)
        ch = _char(module, 2 * k * n)
        ch = fr.map_weights(ch, lambda w: _block_sum(w, k, n))
        return _decomposed(fr.RankedAlgebra("GL", n), ch, "GL")
    if amb == sub:
        # k orthogonal copies; for odd so(n) the leftover coordinates vanish on the subalgebra
        half = n // 2
        ch = _char(module, k * n)
        ch = fr.map_weights(ch, lambda w: _block_sum(w, k, half))
        return _decomposed(fr.RankedAlgebra(sub, n), ch, sub)
    # sp(2kn) ⊃ gl(kn) ⊃ gl(n) ⊃ so(n), or so(2kn) ⊃ gl(kn) ⊃ gl(n) ⊃ sp(n)
    ch = _char(module, 2 * k * n)
    ch = fr.map_weights(ch, lambda w: fr.fold_to_subtype(_block_sum(w, k, n)))
    return _decomposed(fr.RankedAlgebra(sub, n), ch, sub)


def general_gl(module: SimpleModule, sub: str, k: int, l: int, z: int, n: int) -> dict[SimpleModule, int]:
    """Whole composite with gl ambient: gl((k+l)n + z) ⊃ gl(n) [⊃ sp(n)/so(n)].

    Valid when the trivial pieces of V and V_* have equal total dimension z.
    """
    ch = fr.restrict_diagonal((k + l) * n + z, fr.HighestWeight(module.lam, module.mu), (k, l, z), n)
    if sub == "GL":
        return _decomposed(fr.RankedAlgebra("GL", n), ch, "GL")
    if l:
        raise ValueError("sp/so subalgebras take l = 0")
    ch = fr.map_weights(ch, fr.fold_to_subtype)
    return _decomposed(fr.RankedAlgebra(sub, n), ch, sub)


def as_counter(totals) -> Counter:
    """Normalize a totals map with ExtendedNat values to plain ints (finite only)."""
    out: Counter = Counter()
    for m, v in totals.items():
        v = v if isinstance(v, int) else v.value
        if v:
            out[m] += v
    return out


__all__ = [
    "diagonal",
    "gl_type_i",
    "sym_type_i",
    "sym_type_ii",
    "type_ii",
    "type_iii",
    "general_gl",
    "as_counter",
]
