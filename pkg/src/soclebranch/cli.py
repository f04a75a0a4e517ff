"""Command-line front end.

Exit codes: 0 on success, 1 with a JSON ``{"code", "message"}`` object on
validation or oracle errors, 2 on usage errors (bad flags, malformed JSON,
unknown suite).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import branching as br
from . import coefficients as co
from . import finite_rank as fr
from . import verify
from .gt import gt_mult
from .lr import lr
from .partitions import Partition, parse_ext, parse_partition


class UsageError(Exception):
    pass


def _emit(obj: Any) -> None:
    print(json.dumps(obj, ensure_ascii=False, sort_keys=False))


def _fail(code: str, message: str, status: int) -> int:
    _emit({"code": code, "message": message})
    return status


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _load_json(text: str) -> Any:
    """Inline JSON, or the contents of a file when ``text`` names one."""
    src = text
    if not text.lstrip().startswith(("{", "[")):
        path = Path(text)
        if not path.is_file():
            raise UsageError(f"no such file: {text}")
        src = path.read_text()
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc


def _weight_json(hw: fr.HighestWeight, family: str) -> dict:
    out = {"lambda": list(hw.lam)}
    if family == "GL":
        out["mu"] = list(hw.mu)
    return out


def _decomposition_json(dec: dict, family: str) -> list:
    rows = [{"weight": _weight_json(hw, family), "mult": m} for hw, m in dec.items()]
    rows.sort(key=lambda r: br.SimpleModule(family, r["weight"]["lambda"], r["weight"].get("mu", [])).sort_key())
    return rows


def _char_json(ch: dict) -> list:
    return [{"weight": list(w), "mult": m} for w, m in sorted(ch.items(), reverse=True)]


# ---------------------------------------------------------------- subcommands


def cmd_branch(args) -> Any:
    spec = br.EmbeddingSpec.from_json(_load_json(args.spec))
    module = br.SimpleModule.from_json(_load_json(args.module))
    layers = br.layers_general(spec, module, args.branch).truncated(args.max_layers)
    return layers.to_json()


def _pair(obj, key: str) -> tuple[Partition, Partition]:
    val = obj.get(key, [[], []])
    if not (isinstance(val, list) and len(val) == 2):
        raise UsageError(f"{key} must be a pair [[...], [...]]")
    return Partition(val[0]), Partition(val[1])


def _p(obj, key: str, default=None) -> Partition:
    if key not in obj:
        if default is None:
            raise UsageError(f"missing field {key!r}")
        return Partition(default)
    return Partition(obj[key])


def _label_key(key) -> tuple:
    parts = key if isinstance(key[0] if key else (), tuple) else (key,)
    return (-sum(sum(p) for p in parts), tuple(tuple(-x for x in p) + (0,) for p in parts))


def _table_json(table: dict, label: Callable[[Any], Any]) -> list:
    return [{"label": label(k), "mult": table[k]} for k in sorted(table, key=_label_key) if table[k]]


def _pair_label(key) -> dict:
    return {"lambda": list(key[0]), "mu": list(key[1])}


def _plist(obj, key: str) -> list[Partition]:
    val = obj.get(key)
    if not isinstance(val, list):
        raise UsageError(f"{key} must be a list of partitions")
    return [Partition(x) for x in val]


def _coeff_named(name: str, obj: dict) -> Any:
    fam = br.normalize_family(obj.get("family", "gl"))
    if name == "smallC":
        (ap, am), (bp, bm) = _pair(obj, "alpha"), _pair(obj, "beta")
        return co.small_c(_p(obj, "lambda", []), _p(obj, "mu", []), ap, am, bp, bm)
    if name == "bigC":
        return co.big_c(_p(obj, "lambda", []), _p(obj, "mu", []), _plist(obj, "betaPlus"), _plist(obj, "betaMinus"))
    if name == "smallD":
        (ap, am), (bp, bm) = _pair(obj, "alpha"), _pair(obj, "beta")
        return co.small_d(_p(obj, "lambda", []), _p(obj, "mu", []), ap, am, bp, bm)
    if name == "bigD":
        return co.big_d(_p(obj, "lambda", []), _p(obj, "mu", []), _plist(obj, "betaPlus"), _plist(obj, "betaMinus"))
    if name == "diag":
        table = co.diag_branch((_p(obj, "lambda", []), _p(obj, "mu", [])), int(obj.get("k", 1)), int(obj.get("l", 0)))
        if "lambdaPrime" in obj or "muPrime" in obj:
            return table.get((_p(obj, "lambdaPrime", []), _p(obj, "muPrime", [])), 0)
        return _table_json(table, _pair_label)
    if name == "tildeC":
        a = parse_ext(obj.get("a", "inf"))
        if fam == "GL":
            return co.tilde_c_gl(a, _p(obj, "lambda", []), _p(obj, "mu", []), _p(obj, "lambdaPrime", []), _p(obj, "muPrime", []))
        return co.tilde_c_sym(fam, a, _p(obj, "lambda", []), _p(obj, "lambdaPrime", []))
    if name == "K":
        a = parse_ext(obj.get("a", "inf"))
        p = int(obj.get("p", obj.get("d", 0)))
        return co.k_coeff(fam, a, int(obj.get("r", 0)), p, int(obj.get("q", 0))).to_json()
    if name == "T":
        a = parse_ext(obj.get("a", "inf"))
        branch = obj.get("branch")
        if fam == "GL":
            val = co.t_coeff_gl(
                a,
                _p(obj, "lambda", []),
                _p(obj, "mu", []),
                _p(obj, "lambdaPrime", []),
                _p(obj, "muPrime", []),
                _p(obj, "lambdaPrime2", []),
                _p(obj, "muPrime2", []),
                int(obj.get("r", 0)),
                branch,
            )
        else:
            val = co.t_coeff_sym(
                fam, a, _p(obj, "lambda", []), _p(obj, "lambdaPrime", []), _p(obj, "lambdaPrime2", []), int(obj.get("r", 0)), branch
            )
        return val.to_json()
    if name == "abPair":
        return list(co.ab_pair(fam, _p(obj, "lambda", []), _p(obj, "mu", []), _p(obj, "nu", [])))
    if name in ("chainA", "A"):
        table = co.chain_a(fam, _p(obj, "lambda", []), len(_plist(obj, "mus")))
        return table.get(tuple(_plist(obj, "mus")), 0)
    if name in ("chainB", "B"):
        return co.chain_b(_plist(obj, "mus")).get(_p(obj, "lambda", []), 0)
    k = int(obj.get("k", 1))
    if name == "sameType":
        table = co.same_type_branch(fam, _p(obj, "lambda", []), k)
        return table.get(_p(obj, "lambdaPrime"), 0) if "lambdaPrime" in obj else _table_json(table, list)
    if name in ("spInGl", "soInGl"):
        sub = "SP" if name == "spInGl" else "SO"
        table = co.sym_in_gl(sub, (_p(obj, "lambda", []), _p(obj, "mu", [])), k)
        return table.get(_p(obj, "sigma"), 0) if "sigma" in obj else _table_json(table, list)
    if name in ("glInSp", "glInSo"):
        amb = "SP" if name == "glInSp" else "SO"
        table = co.gl_in_sym(amb, _p(obj, "lambda", []), k)
        if "lambdaPrime" in obj or "muPrime" in obj:
            return table.get((_p(obj, "lambdaPrime", []), _p(obj, "muPrime", [])), 0)
        return _table_json(table, _pair_label)
    if name in ("soInSp", "spInSo"):
        amb = "SP" if name == "soInSp" else "SO"
        table = co.cross_sym(amb, _p(obj, "lambda", []), k, bool(obj.get("printed", False)))
        return table.get(_p(obj, "lambdaPrime"), 0) if "lambdaPrime" in obj else _table_json(table, list)
    raise UsageError(f"unknown coefficient {name!r}")


NAMED_COEFFS = (
    "smallC", "bigC", "smallD", "bigD", "diag", "tildeC", "K", "T", "abPair",
    "A", "B", "chainA", "chainB", "sameType", "spInGl", "soInGl", "glInSp", "glInSo", "soInSp", "spInSo",
)


def cmd_coeff(args) -> Any:
    if args.name == "lr":
        if args.outer is None or args.inner1 is None or args.inner2 is None:
            raise UsageError("coeff lr needs --outer, --inner1 and --inner2")
        return lr(_partition_arg(args.outer), _partition_arg(args.inner1), _partition_arg(args.inner2))
    if args.name == "gt":
        if args.top is None or args.bottom is None or args.k is None:
            raise UsageError("coeff gt needs --top, --bottom and --k")
        try:
            k = parse_ext(args.k)
        except ValueError as exc:
            raise UsageError(f"bad --k: {exc}") from exc
        return gt_mult(_partition_arg(args.top), _partition_arg(args.bottom), k).to_json()
    if args.name not in NAMED_COEFFS:
        raise UsageError(f"unknown coefficient {args.name!r}")
    if args.json is None:
        raise UsageError(f"coeff {args.name} needs --json")
    obj = _load_json(args.json)
    if not isinstance(obj, dict):
        raise UsageError("--json must be an object")
    try:
        return _coeff_named(args.name, obj)
    except (TypeError, KeyError) as exc:
        raise UsageError(f"bad arguments for {args.name}: {exc}") from exc


def _algebra(args) -> fr.RankedAlgebra:
    try:
        return fr.RankedAlgebra(br.normalize_family(args.family), args.rank)
    except ValueError as exc:
        raise br.InvalidSpec(str(exc)) from exc


def _hw(args, suffix: str = "") -> fr.HighestWeight:
    lam = getattr(args, "lambda" + suffix)
    mu = getattr(args, "mu" + suffix)
    return fr.HighestWeight(_partition_arg(lam or "[]"), _partition_arg(mu or "[]"))


def cmd_dim(args) -> Any:
    return fr.weyl_dim(_algebra(args), _hw(args))


def cmd_oracle(args) -> Any:
    alg = _algebra(args)
    fam = alg.family
    if args.action == "char":
        return _char_json(fr.irr_char(alg, _hw(args)))
    if args.action == "tensor":
        ch = fr.tensor(fr.irr_char(alg, _hw(args)), fr.irr_char(alg, _hw(args, "2")))
        return _decomposition_json(fr.decompose(alg, ch), fam)
    # restrict
    if args.target:
        if fam != "GL":
            raise br.InvalidSpec("restriction to a subtype starts from gl")
        target = br.normalize_family(args.target)
        ch = fr.restrict_to_subtype(args.rank, _hw(args), target)
        return _decomposition_json(fr.decompose(fr.RankedAlgebra(target, args.rank), ch), target)
    if not args.signature or args.small_rank is None:
        raise UsageError("oracle restrict needs --target, or --signature and --small-rank")
    try:
        sig = tuple(int(x) for x in args.signature.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --signature {args.signature!r}") from exc
    if len(sig) != 3:
        raise UsageError("--signature takes k,l,z")
    if fam != "GL":
        raise br.InvalidSpec("diagonal restriction is defined for gl")
    try:
        ch = fr.restrict_diagonal(args.rank, _hw(args), sig, args.small_rank)
    except ValueError as exc:
        raise br.InvalidSpec(str(exc)) from exc
    return _decomposition_json(fr.decompose(fr.RankedAlgebra("GL", args.small_rank), ch), "GL")


def cmd_verify(args) -> tuple[Any, int]:
    if args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(verify.SUITES)}")
    rep = verify.run(args.suite, size=args.size, pq=args.pq)
    return rep.to_json(), 0 if rep.passed else 1


def cmd_tables(args) -> Any:
    amb = br.normalize_family(args.ambient)
    sub = br.normalize_family(args.sub or args.ambient)
    if args.type != "III" and sub != amb:
        raise br.InvalidSpec("types I and II keep the family")
    rows = []
    for m in verify.modules(amb, args.size):
        if args.type == "I":
            layers = br.layers_type_i(m, parse_ext(args.a), parse_ext(args.b), parse_ext(args.c), parse_ext(args.d))
            params = {k: parse_ext(getattr(args, k)).to_json() for k in "abcd"}
        elif args.type == "II":
            layers = br.layers_type_ii(m, parse_ext(args.a2))
            params = {"a2": parse_ext(args.a2).to_json()}
        else:
            spec = br.EmbeddingSpec(amb, sub, k=args.k, l=args.l)
            layers = br.layers_type_iii(m, amb, sub, spec.table_k, spec.l if amb == sub == "GL" else 0)
            params = {"k": args.k, "l": args.l}
        rows.append({"type": args.type, "ambient": amb.lower(), "sub": sub.lower(), "params": params, "module": m.to_json(), **layers.to_json()})
    return rows


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # structured usage errors
        self.exit(2, json.dumps({"code": "usage", "message": message}) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="soclebranch", description="Socle layers of tensor modules under embeddings of general tensor type.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("branch", help="socle layers of a simple module along an embedding")
    p.add_argument("--spec", required=True, help="EmbeddingSpec as a JSON file or inline JSON")
    p.add_argument("--module", required=True, help='e.g. {"family":"gl","lambda":[2],"mu":[1]}')
    p.add_argument("--max-layers", type=int, default=None)
    p.add_argument("--branch", choices=("finite", "stable"), default=None, help="force a type II T formula")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("coeff", help="a single coefficient")
    p.add_argument("name", help="lr, gt, or one of: " + ", ".join(NAMED_COEFFS))
    p.add_argument("--outer")
    p.add_argument("--inner1")
    p.add_argument("--inner2")
    p.add_argument("--top")
    p.add_argument("--bottom")
    p.add_argument("--k")
    p.add_argument("--json", help="arguments of a named coefficient")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("dim", help="Weyl dimension")
    _algebra_flags(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("oracle", help="finite-rank characters and decompositions")
    p.add_argument("action", choices=("restrict", "tensor", "char"))
    _algebra_flags(p)
    p.add_argument("--lambda2", default="[]")
    p.add_argument("--mu2", default="[]")
    p.add_argument("--signature", help="k,l,z for a diagonal gl restriction")
    p.add_argument("--small-rank", type=int)
    p.add_argument("--target", choices=("sp", "so", "SP", "SO"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("suite")
    p.add_argument("--size", type=int)
    p.add_argument("--pq", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="layer tables for all modules up to a size")
    p.add_argument("--type", choices=("I", "II", "III"), required=True)
    p.add_argument("--ambient", default="gl")
    p.add_argument("--sub")
    p.add_argument("--size", type=int, default=2)
    p.add_argument("--a", default="0")
    p.add_argument("--b", default="1")
    p.add_argument("--c", default="0")
    p.add_argument("--d", default="1")
    p.add_argument("--a2", default="2")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=0)
    p.set_defaults(func=cmd_tables)
    return parser


def _algebra_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=("gl", "sl", "sp", "so", "GL", "SL", "SP", "SO"))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--lambda", dest="lambda", default="[]")
    p.add_argument("--mu", default="[]")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except br.InvalidSpec as exc:
        return _fail(exc.code, str(exc), 1)
    except fr.OracleError as exc:
        return _fail(exc.code, str(exc), 1)
    except ValueError as exc:
        return _fail("invalid-input", str(exc), 1)
    status = 0
    if isinstance(result, tuple):
        result, status = result
    _emit(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
