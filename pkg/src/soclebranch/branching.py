"""Socle layers of simple tensor modules along embeddings of general tensor type.

An embedding is described by an :class:`EmbeddingSpec`.  It factors into three
elementary stages which are computed separately and then convolved:

1. a type I stage (trivial pieces of dimension a1, c1 in the socle and b, d in
   the top, with the a/c pieces pairing trivially),
2. a type II stage (a complement of dimension a2 paired nondegenerately),
3. a type III stage (diagonal embedding with k natural and l dual copies,
   possibly changing the family).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb, factorial
from typing import Iterable, Mapping, Optional

from . import coefficients as co
from .gt import gt_mult
from .partitions import (
    EMPTY,
    ONE,
    ZERO,
    ExtendedNat,
    Partition,
    enumerate_partitions,
    ext,
    parse_ext,
    sym_dim,
)

FAMILIES = ("GL", "SP", "SO")


class InvalidSpec(ValueError):
    code = "invalid-spec"


def normalize_family(name: str) -> str:
    """Upper-case a family name and map SL to GL."""
    fam = str(name).strip().upper()
    if fam == "SL":
        return "GL"
    if fam not in FAMILIES:
        raise InvalidSpec(f"unknown family {name!r}")
    return fam


@dataclass(frozen=True, order=False)
class SimpleModule:
    family: str
    lam: Partition = EMPTY
    mu: Partition = EMPTY

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", normalize_family(self.family))
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "mu", Partition(self.mu))
        if self.family != "GL" and self.mu:
            raise InvalidSpec(f"{self.family} modules carry a single partition")

    @property
    def degree(self) -> int:
        return self.lam.size + self.mu.size

    @property
    def is_trivial(self) -> bool:
        return not self.lam and not self.mu

    def sort_key(self):
        # larger partitions first; the trailing 0 makes (1) sort before ∅
        return (-self.degree, tuple(-x for x in self.lam) + (0,), tuple(-x for x in self.mu) + (0,))

    def __repr__(self) -> str:
        if self.family == "GL":
            return f"V{{{self.lam!r};{self.mu!r}}}"
        br = "<>" if self.family == "SP" else "[]"
        return f"V{br[0]}{self.lam!r}{br[1]}"

    def to_json(self) -> dict:
        out = {"family": self.family.lower(), "lambda": self.lam.to_json()}
        if self.family == "GL":
            out["mu"] = self.mu.to_json()
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "SimpleModule":
        if not isinstance(data, Mapping) or "family" not in data:
            raise InvalidSpec("module needs a 'family' field")
        unknown = set(data) - {"family", "lambda", "mu"}
        if unknown:
            raise InvalidSpec(f"unknown module fields {sorted(unknown)}")
        try:
            return cls(data["family"], Partition(data.get("lambda", [])), Partition(data.get("mu", [])))
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InvalidSpec):
                raise
            raise InvalidSpec(str(exc)) from exc


def gl(lam: Iterable[int] = (), mu: Iterable[int] = ()) -> SimpleModule:
    return SimpleModule("GL", Partition(lam), Partition(mu))


def sp(lam: Iterable[int] = ()) -> SimpleModule:
    return SimpleModule("SP", Partition(lam))


def so(lam: Iterable[int] = ()) -> SimpleModule:
    return SimpleModule("SO", Partition(lam))


Layer = dict  # SimpleModule -> ExtendedNat


class SocleLayers:
    """Layers r = 0, 1, ... of a socle filtration, trimmed and zero-free."""

    __slots__ = ("layers",)

    def __init__(self, layers: Iterable[Mapping[SimpleModule, object]]) -> None:
        cleaned = []
        for layer in layers:
            items = [(m, ext(v)) for m, v in layer.items() if ext(v)]
            items.sort(key=lambda mv: mv[0].sort_key())
            cleaned.append(dict(items))
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        self.layers: tuple[dict[SimpleModule, ExtendedNat], ...] = tuple(cleaned)

    def __len__(self) -> int:
        return len(self.layers)

    def __getitem__(self, r: int) -> dict[SimpleModule, ExtendedNat]:
        return self.layers[r] if r < len(self.layers) else {}

    def __iter__(self):
        return iter(self.layers)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SocleLayers):
            return self.layers == other.layers
        return NotImplemented

    def __repr__(self) -> str:
        return f"SocleLayers({list(self.layers)!r})"

    def truncated(self, max_layers: Optional[int]) -> "SocleLayers":
        if max_layers is None:
            return self
        return SocleLayers(self.layers[:max_layers])

    def to_json(self) -> dict:
        return {
            "layers": [
                [{"module": m.to_json(), "mult": v.to_json()} for m, v in layer.items()]
                for layer in self.layers
            ]
        }


def total_multiplicities(layers: SocleLayers) -> dict[SimpleModule, ExtendedNat]:
    """Collapse the grading: module -> sum of its multiplicities over all layers."""
    out: dict[SimpleModule, ExtendedNat] = {}
    for layer in layers:
        for m, v in layer.items():
            out[m] = out.get(m, ZERO) + v
    return dict(sorted(out.items(), key=lambda mv: mv[0].sort_key()))


def identity_layers(module: SimpleModule) -> SocleLayers:
    return SocleLayers([{module: ONE}])


def _accumulate(buckets: list, r: int, module: SimpleModule, value) -> None:
    value = ext(value)
    if not value:
        return
    while len(buckets) <= r:
        buckets.append({})
    buckets[r][module] = buckets[r].get(module, ZERO) + value


# ---------------------------------------------------------------- spec


@dataclass(frozen=True)
class EmbeddingSpec:
    """Parameters of an embedding of general tensor type.

    V  ≅ k V' ⊕ l V'_* ⊕ (a1 + a2 trivial, in the socle) ⊕ (b trivial, on top)
    V_* ≅ k V'_* ⊕ l V' ⊕ (c1 + a2 trivial, in the socle) ⊕ (d trivial, on top)

    For SP/SO ambient algebras V = V_*, so c1 and d must mirror a1 and b.
    """

    ambient: str = "GL"
    sub: str = "GL"
    k: int = 1
    l: int = 0
    a1: ExtendedNat = ZERO
    a2: ExtendedNat = ZERO
    b: ExtendedNat = ZERO
    c1: Optional[ExtendedNat] = None
    d: Optional[ExtendedNat] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "ambient", normalize_family(self.ambient))
        object.__setattr__(self, "sub", normalize_family(self.sub))
        for name in ("a1", "a2", "b", "c1", "d"):
            v = getattr(self, name)
            if v is None:
                continue
            try:
                object.__setattr__(self, name, parse_ext(v) if isinstance(v, str) else ext(v))
            except (TypeError, ValueError) as exc:
                raise InvalidSpec(f"{name}: {exc}") from exc
        if self.ambient != "GL":
            if self.c1 is not None and self.c1 != self.a1:
                raise InvalidSpec("for sp/so ambient algebras c1 must equal a1 (V = V_*)")
            if self.d is not None and self.d != self.b:
                raise InvalidSpec("for sp/so ambient algebras d must equal b (V = V_*)")
        if self.c1 is None:
            object.__setattr__(self, "c1", self.a1 if self.ambient != "GL" else ZERO)
        if self.d is None:
            object.__setattr__(self, "d", self.b if self.ambient != "GL" else ZERO)
        self.validate()

    def validate(self) -> None:
        for name in ("k", "l"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InvalidSpec(f"{name} must be a nonnegative integer")
        if self.k + self.l < 1:
            raise InvalidSpec("need k + l >= 1")
        amb, sub = self.ambient, self.sub
        if sub != "GL" and self.l != 0:
            raise InvalidSpec("sp/so subalgebras are self-dual: give the copy count as k with l = 0")
        if sub == "GL" and amb != "GL" and self.l != self.k:
            raise InvalidSpec("gl inside sp/so needs l = k (V ≅ kV' ⊕ kV'_*)")
        if {amb, sub} == {"SP", "SO"} and self.k % 2:
            raise InvalidSpec("so inside sp (or sp inside so) needs an even multiple k")
        if amb == "SP" and not self.a2.is_infinite and self.a2.value % 2:
            raise InvalidSpec("sp complement a2 must be even")
        if self.a1 and not self.d:
            raise InvalidSpec("a1 > 0 needs d > 0: the socle part must pair with the top")
        if self.c1 and not self.b:
            raise InvalidSpec("c1 > 0 needs b > 0: the socle part must pair with the top")

    @property
    def table_k(self) -> int:
        """Copy count as used by the type III formulas."""
        if {self.ambient, self.sub} == {"SP", "SO"}:
            return self.k // 2
        return self.k

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.lower(),
            "sub": self.sub.lower(),
            "k": self.k,
            "l": self.l,
            "a1": self.a1.to_json(),
            "a2": self.a2.to_json(),
            "b": self.b.to_json(),
            "c1": self.c1.to_json(),
            "d": self.d.to_json(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "EmbeddingSpec":
        if not isinstance(data, Mapping):
            raise InvalidSpec("spec must be a JSON object")
        allowed = {"ambient", "sub", "k", "l", "a1", "a2", "b", "c1", "d"}
        unknown = set(data) - allowed
        if unknown:
            raise InvalidSpec(f"unknown spec fields {sorted(unknown)}")
        return cls(**dict(data))


def normalize_sl(spec: EmbeddingSpec, module: SimpleModule) -> tuple[EmbeddingSpec, SimpleModule]:
    """SL families are replaced by GL; the dataclasses already do this on construction."""
    return replace(spec), SimpleModule(normalize_family(module.family), module.lam, module.mu)


# ---------------------------------------------------------------- type I


def _side_layers(lam: Partition, a, b) -> dict[tuple[int, Partition], ExtendedNat]:
    """(n, lam') -> sum over lam'' of m^a_{lam lam''} m^b_{lam'' lam'}, |lam'| = |lam''| - n."""
    out: dict = {}
    for l2 in co.subpartitions(lam):
        x = gt_mult(lam, l2, a)
        if not x:
            continue
        for l1 in co.subpartitions(l2):
            y = gt_mult(l2, l1, b)
            if y:
                key = (l2.size - l1.size, l1)
                out[key] = out.get(key, ZERO) + x * y
    return out


def layers_type_i(module: SimpleModule, a=0, b=0, c=0, d=0) -> SocleLayers:
    """Type I: the a/c pieces sit in the socle, the b/d pieces on top."""
    buckets: list = []
    left = _side_layers(module.lam, ext(a), ext(b))
    if module.family != "GL":
        for (n, lp), v in left.items():
            _accumulate(buckets, n, SimpleModule(module.family, lp), v)
        return SocleLayers(buckets)
    right = _side_layers(module.mu, ext(c), ext(d))
    for (n1, lp), x in left.items():
        for (n2, mp), y in right.items():
            _accumulate(buckets, n1 + n2, gl(lp, mp), x * y)
    return SocleLayers(buckets)


# ---------------------------------------------------------------- type II


def _sub_by_size(lam: Partition, size: int) -> Iterable[Partition]:
    for s in co.subpartitions(lam):
        if s.size == size:
            yield s


def layers_type_ii(module: SimpleModule, a2, branch: Optional[str] = None) -> SocleLayers:
    """Type II: a complement of dimension a2 paired nondegenerately with itself."""
    a = ext(a2)
    if not a:
        return identity_layers(module)
    if module.family == "GL":
        return _type_ii_gl(module, a, branch)
    return _type_ii_sym(module, a, branch)


def _type_ii_gl(module: SimpleModule, a: ExtendedNat, branch) -> SocleLayers:
    lam, mu = module.lam, module.mu
    p, q = lam.size, mu.size
    buckets: list = []
    for r in range(min(p, q) + 1):
        for k in range(p - r + 1):
            for l in range(q - r + 1):
                for lp in _sub_by_size(lam, p - k):
                    if not gt_mult(lam, lp, a):
                        continue
                    for mp in _sub_by_size(mu, q - l):
                        if not gt_mult(mu, mp, a):
                            continue
                        for (l2, m2) in co.stable_contractions(lp, mp, r):
                            t = co.t_coeff_gl(a, lam, mu, lp, mp, l2, m2, r, branch)
                            _accumulate(buckets, r, gl(l2, m2), t)
    return SocleLayers(buckets)


def _type_ii_sym(module: SimpleModule, a: ExtendedNat, branch) -> SocleLayers:
    fam, lam = module.family, module.lam
    d = lam.size
    buckets: list = []
    for r in range(d // 2 + 1):
        for s in range(d - 2 * r + 1):
            for lp in _sub_by_size(lam, d - s):
                if not gt_mult(lam, lp, a):
                    continue
                for l2 in _sub_by_size(lp, lp.size - 2 * r):
                    t = co.t_coeff_sym(fam, a, lam, lp, l2, r, branch)
                    _accumulate(buckets, r, SimpleModule(fam, l2), t)
    return SocleLayers(buckets)


def layers_tensor_type_ii(p: int, q: int, a2, branch: Optional[str] = None) -> SocleLayers:
    """Layers of the whole mixed tensor space V^{p,q} (traceless part) under type II.

    Layer r collects (N_a contraction space) ⊗ V'^{p-k-r, q-l-r}; the trivial
    factor contributes its dimension, read from the K coefficients.
    """
    a = ext(a2)
    buckets: list = []
    if branch is None:
        branch = "stable" if "stable" in co.t_branches("GL", a, p, q) else "finite"
    for r in range(min(p, q) + 1):
        for k in range(p - r + 1):
            for l in range(q - r + 1):
                if branch == "finite":
                    dim = comb(p, k + r) * comb(q, l + r) * co.k_coeff("GL", a, r, k + r, l + r)
                else:
                    dim = factorial(r) * comb(p, r) * comb(q, r) * comb(p - r, k) * comb(q - r, l)
                    dim = dim * co.k_coeff("GL", a, 0, k, l)
                if not dim:
                    continue
                for l2 in enumerate_partitions(p - r - k):
                    for m2 in enumerate_partitions(q - r - l):
                        _accumulate(buckets, r, gl(l2, m2), dim * sym_dim(l2) * sym_dim(m2))
    return SocleLayers(buckets)


# ---------------------------------------------------------------- type III


def type_iii_totals(module: SimpleModule, ambient: str, sub: str, k: int, l: int = 0) -> dict[SimpleModule, int]:
    """Total multiplicities for the diagonal stage, keyed by submodule.

    ``k`` is the table copy count (already halved for the sp/so cross pairs).
    """
    amb, sub = normalize_family(ambient), normalize_family(sub)
    if module.family != amb:
        raise InvalidSpec(f"module family {module.family} does not match ambient {amb}")
    top = (module.lam, module.mu)
    if amb == "GL" and sub == "GL":
        table = co.diag_branch(top, k, l)
        return {gl(*key): v for key, v in table.items()}
    if amb == "GL":
        return {SimpleModule(sub, s): v for s, v in co.sym_in_gl(sub, top, k).items()}
    if sub == "GL":
        return {gl(*key): v for key, v in co.gl_in_sym(amb, module.lam, k).items()}
    if amb == sub:
        return {SimpleModule(sub, s): v for s, v in co.same_type_branch(amb, module.lam, k).items()}
    return {SimpleModule(sub, s): v for s, v in co.cross_sym(amb, module.lam, k).items()}


def layers_type_iii(module: SimpleModule, ambient: str, sub: str, k: int, l: int = 0) -> SocleLayers:
    """Type III: layer r holds the constituents of degree (degree of module) - 2r."""
    buckets: list = []
    top = module.degree
    for m, v in type_iii_totals(module, ambient, sub, k, l).items():
        drop = top - m.degree
        if drop % 2 or drop < 0:
            raise AssertionError(f"degree parity violated for {m!r}")
        _accumulate(buckets, drop // 2, m, v)
    return SocleLayers(buckets)


def _type_iii_for_spec(module: SimpleModule, spec: EmbeddingSpec) -> SocleLayers:
    if module.is_trivial:
        return SocleLayers([{SimpleModule(spec.sub): ONE}])
    return layers_type_iii(module, spec.ambient, spec.sub, spec.table_k, spec.l if spec.sub == "GL" and spec.ambient == "GL" else 0)


# ---------------------------------------------------------------- composition


def _convolve(outer: SocleLayers, stage) -> SocleLayers:
    buckets: list = []
    for r, layer in enumerate(outer):
        for module, x in layer.items():
            for s, inner in enumerate(stage(module)):
                for m, y in inner.items():
                    _accumulate(buckets, r + s, m, x * y)
    return SocleLayers(buckets)


def layers_general(spec: EmbeddingSpec, module: SimpleModule, branch: Optional[str] = None) -> SocleLayers:
    """Compose the type I, type II and type III stages of ``spec``."""
    spec, module = normalize_sl(spec, module)
    if module.family != spec.ambient:
        raise InvalidSpec(f"module family {module.family} does not match ambient {spec.ambient}")
    stage1 = layers_type_i(module, spec.a1, spec.b, spec.c1, spec.d)
    stage2 = _convolve(stage1, lambda m: layers_type_ii(m, spec.a2, branch) if not m.is_trivial else identity_layers(m))
    return _convolve(stage2, lambda m: _type_iii_for_spec(m, spec))


__all__ = [
    "InvalidSpec",
    "SimpleModule",
    "SocleLayers",
    "EmbeddingSpec",
    "gl",
    "sp",
    "so",
    "normalize_family",
    "normalize_sl",
    "identity_layers",
    "total_multiplicities",
    "layers_type_i",
    "layers_type_ii",
    "layers_tensor_type_ii",
    "type_iii_totals",
    "layers_type_iii",
    "layers_general",
]
