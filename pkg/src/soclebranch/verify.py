"""Self-check suites run by ``soclebranch verify``.

Each suite returns a :class:`Report` listing how many cases were checked and a
payload for every failing case.  Suites that compare against the finite-rank
oracle only compare totals, since finite restrictions are semisimple.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator, Optional

from . import branching as br
from . import finite_models as fm
from . import finite_rank as fr
from .gt import gt_mult
from .lr import lr, product_expand, skew_expand
from .partitions import (
    Partition,
    enumerate_partitions,
    interlaces,
    partitions_up_to,
    ssyt_count,
    sym_dim,
)


@dataclass
class Report:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **payload) -> None:
        self.checks += 1
        if not ok:
            self.failures.append({k: _plain(v) for k, v in payload.items()})

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


def _plain(v):
    """Turn partitions, modules and ExtendedNat values into JSON-friendly data."""
    if isinstance(v, Partition):
        return list(v)
    if isinstance(v, br.SimpleModule):
        return v.to_json()
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, dict):
        return [{"key": _plain(k), "value": _plain(x)} for k, x in v.items()]
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def gl_modules(max_degree: int) -> Iterator[br.SimpleModule]:
    for deg in range(max_degree + 1):
        for p in range(deg, -1, -1):
            for lam in enumerate_partitions(p):
                for mu in enumerate_partitions(deg - p):
                    yield br.gl(lam, mu)


def sym_modules(family: str, max_degree: int) -> Iterator[br.SimpleModule]:
    for lam in partitions_up_to(max_degree):
        yield br.SimpleModule(family, lam)


def modules(family: str, max_degree: int) -> Iterator[br.SimpleModule]:
    return gl_modules(max_degree) if family == "GL" else sym_modules(family, max_degree)


def totals(layers: br.SocleLayers) -> Counter:
    return fm.as_counter(br.total_multiplicities(layers))


# ---------------------------------------------------------------- lr


def suite_lr(size: int = 6, samples: int = 200, seed: int = 0) -> Report:
    rep = Report("lr")
    for n in range(size + 1):
        for lam in enumerate_partitions(n):
            for m in range(n + 1):
                for mu in enumerate_partitions(m):
                    table = skew_expand(lam, mu)
                    for nu in enumerate_partitions(n - m):
                        c = table.get(nu, 0)
                        rep.check(c == lr(lam, nu, mu), law="symmetry", lam=lam, mu=mu, nu=nu)
                        rep.check(c == product_expand(mu, nu).get(lam, 0), law="two-routes", lam=lam, mu=mu, nu=nu)
    for m in range(size + 1):
        for n in range(size + 1 - m):
            for mu in enumerate_partitions(m):
                for nu in enumerate_partitions(n):
                    lhs = sum(c * sym_dim(lam) for lam, c in product_expand(mu, nu).items())
                    rhs = comb(m + n, m) * sym_dim(mu) * sym_dim(nu)
                    rep.check(lhs == rhs, law="dimension", mu=mu, nu=nu, lhs=lhs, rhs=rhs)
    rng = random.Random(seed)
    pool = [p for p in partitions_up_to(8)]
    done = 0
    while done < samples:
        al, be, ga = (rng.choice(pool) for _ in range(3))
        if al.size + be.size + ga.size > 8:
            continue
        done += 1
        left: Counter = Counter()
        for tau, x in product_expand(al, be).items():
            for lam, y in product_expand(tau, ga).items():
                left[lam] += x * y
        right: Counter = Counter()
        for tau, x in product_expand(be, ga).items():
            for lam, y in product_expand(al, tau).items():
                right[lam] += x * y
        rep.check(left == right, law="associativity", alpha=al, beta=be, gamma=ga)
    return rep


# ---------------------------------------------------------------- gt


@lru_cache(maxsize=None)
def _interlacing_below(lam: Partition) -> tuple[Partition, ...]:
    out = []
    for sigma in partitions_up_to(lam.size):
        if interlaces(sigma, lam):
            out.append(sigma)
    return tuple(out)


@lru_cache(maxsize=None)
def chain_count(lam: Partition, sigma: Partition, k: int) -> int:
    """Brute-force count of k-step interlacing chains from lam down to sigma."""
    if k == 0:
        return int(lam == sigma)
    return sum(chain_count(rho, sigma, k - 1) for rho in _interlacing_below(lam) if rho.contains(sigma))


def suite_gt(size: int = 6) -> Report:
    rep = Report("gt")
    for lam in partitions_up_to(size):
        for sigma in partitions_up_to(lam.size):
            m1 = gt_mult(lam, sigma, 1)
            rep.check(m1 == int(interlaces(sigma, lam)), law="one-step", lam=lam, sigma=sigma)
            for k in range(5):
                val = gt_mult(lam, sigma, k)
                rep.check(val == chain_count(lam, sigma, k), law="chains", lam=lam, sigma=sigma, k=k)
                ssyt = sum(c * ssyt_count(g, k) for g, c in skew_expand(lam, sigma).items())
                rep.check(val == ssyt, law="skew-ssyt", lam=lam, sigma=sigma, k=k)
            for j in range(4):
                for k in range(4):
                    mids = [tau for tau in partitions_up_to(lam.size) if lam.contains(tau) and tau.contains(sigma)]
                    total = sum(gt_mult(lam, tau, j).value * gt_mult(tau, sigma, k).value for tau in mids)
                    rep.check(gt_mult(lam, sigma, j + k) == total, law="composition", lam=lam, sigma=sigma, j=j, k=k)
    return rep


# ---------------------------------------------------------------- identities


def suite_identity(pq: int = 5) -> Report:
    rep = Report("identity")
    for p in range(pq + 1):
        for q in range(pq + 1):
            for r in range(min(p, q) + 1):
                for lp in enumerate_partitions(p - r):
                    for mp in enumerate_partitions(q - r):
                        lhs = comb(p, r) * comb(q, r) * factorial(r) * sym_dim(lp) * sym_dim(mp)
                        rhs = 0
                        for g in enumerate_partitions(r):
                            left = sum(sym_dim(lam) * c for lam, c in product_expand(lp, g).items())
                            right = sum(sym_dim(mu) * c for mu, c in product_expand(mp, g).items())
                            rhs += left * right
                        rep.check(lhs == rhs, p=p, q=q, r=r, lam1=lp, mu1=mp, lhs=lhs, rhs=rhs)
    return rep


def suite_schur_weyl(pq: int = 5, max_rank: int = 4) -> Report:
    rep = Report("schur-weyl")
    for a in range(1, max_rank + 1):
        alg = fr.RankedAlgebra("GL", a)
        for p in range(pq + 1):
            for q in range(pq + 1 - p):
                total = 0
                for lam in enumerate_partitions(p):
                    for mu in enumerate_partitions(q):
                        total += (
                            fr.dim_or_zero(alg, fr.HighestWeight(lam))
                            * fr.dim_or_zero(alg, fr.HighestWeight((), mu))
                            * sym_dim(lam)
                            * sym_dim(mu)
                        )
                rep.check(total == a ** (p + q), a=a, p=p, q=q, got=total)
    return rep


# ---------------------------------------------------------------- oracle suites


def suite_oracle_type_i(size: int = 4) -> Report:
    rep = Report("oracle-typeI")
    for b in (1, 2):
        for m in gl_modules(size):
            got = totals(br.layers_type_i(m, 0, b, 0, b))
            rep.check(got == fm.gl_type_i(m, b, 5), family="GL", b=b, module=m, got=dict(got))
        for fam in ("SP", "SO"):
            for m in sym_modules(fam, size):
                got = totals(br.layers_type_i(m, 0, b))
                rep.check(got == fm.sym_type_i(m, b, 4), family=fam, b=b, module=m, got=dict(got))
    return rep


def suite_oracle_type_ii(size: int = 3, a2: int = 2, rank: int = 4) -> Report:
    rep = Report("oracle-typeII")
    for m in gl_modules(size):
        got = totals(br.layers_type_ii(m, a2))
        want = fm.type_ii(m, a2, rank)
        rep.check(got == want, module=m, a2=a2, got=dict(got), oracle=dict(want))
    worked = br.layers_type_ii(br.gl((1,), (1,)), 2)
    expected = br.SocleLayers(
        [
            {br.gl((1,), (1,)): 1, br.gl((1,)): 2, br.gl((), (1,)): 2, br.gl(): 3},
            {br.gl(): 1},
        ]
    )
    rep.check(worked == expected, case="worked V{(1);(1)} example", got=worked.to_json())
    return rep


TYPE_III_CASES = (
    # ambient, sub, table k, l, subalgebra rank parameter
    ("GL", "GL", 2, 0, 3),
    ("GL", "GL", 1, 1, 3),
    ("GL", "SP", 1, 0, 6),
    ("GL", "SO", 1, 0, 7),
)


def suite_oracle_type_iii(size: int = 3, cases=TYPE_III_CASES) -> Report:
    rep = Report("oracle-typeIII")
    for amb, sub, k, l, n in cases:
        for m in modules(amb, size):
            got = totals(br.layers_type_iii(m, amb, sub, k, l))
            want = fm.type_iii(m, sub, k, l, n)
            rep.check(got == want, ambient=amb, sub=sub, k=k, l=l, module=m, got=dict(got), oracle=dict(want))
    return rep


# ---------------------------------------------------------------- composition

FAMILY_PAIRS = tuple((a, s) for a in ("GL", "SP", "SO") for s in ("GL", "SP", "SO"))


def minimal_spec(ambient: str, sub: str, **params) -> br.EmbeddingSpec:
    """The simplest valid spec for a family pair: one copy, or the least multiple allowed."""
    if ambient == sub:
        k, l = 1, 0
    elif sub == "GL":
        k, l = 1, 1
    elif ambient == "GL":
        k, l = 1, 0
    else:
        k, l = 2, 0
    return br.EmbeddingSpec(ambient, sub, k=params.pop("k", k), l=params.pop("l", l), **params)


def suite_compose(size: int = 3) -> Report:
    rep = Report("compose")
    for amb, sub in FAMILY_PAIRS:
        spec = minimal_spec(amb, sub)
        for m in modules(amb, size):
            got = br.layers_general(spec, m)
            want = br.layers_type_iii(m, amb, sub, spec.table_k, spec.l if sub == amb == "GL" else 0)
            rep.check(got == want, stage="III", ambient=amb, sub=sub, module=m)
            if amb == sub:
                for params in ({"b": 1}, {"b": 2}):
                    spec1 = minimal_spec(amb, sub, **params, **({"d": params["b"]} if amb == "GL" else {}))
                    got = br.layers_general(spec1, m)
                    want = br.layers_type_i(m, spec1.a1, spec1.b, spec1.c1, spec1.d)
                    rep.check(got == want, stage="I", ambient=amb, module=m, params=params)
                a2 = 3 if amb == "SO" else 2  # so(2) labels are unsupported
                got = br.layers_general(minimal_spec(amb, sub, a2=a2), m)
                want = br.layers_type_ii(m, a2)
                rep.check(got == want, stage="II", ambient=amb, module=m, a2=a2)
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "lr": suite_lr,
    "gt": suite_gt,
    "identity": suite_identity,
    "schur-weyl": suite_schur_weyl,
    "oracle-typeI": suite_oracle_type_i,
    "oracle-typeII": suite_oracle_type_ii,
    "oracle-typeIII": suite_oracle_type_iii,
    "compose": suite_compose,
}


def run(suite: str, size: Optional[int] = None, pq: Optional[int] = None) -> Report:
    """Run a suite; ``size`` bounds partition sizes, ``pq`` bounds tensor degrees."""
    if suite not in SUITES:
        raise KeyError(suite)
    kwargs = {}
    bound = pq if suite in ("identity", "schur-weyl") else size
    if bound is not None:
        kwargs["pq" if suite in ("identity", "schur-weyl") else "size"] = bound
    t0 = time.perf_counter()
    rep = SUITES[suite](**kwargs)
    rep.seconds = time.perf_counter() - t0
    return rep


__all__ = ["Report", "SUITES", "run", "chain_count", "gl_modules", "sym_modules", "modules", "totals", "minimal_spec", "FAMILY_PAIRS"]
