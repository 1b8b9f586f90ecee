"""Command-line front end.

Every subcommand reads flags and/or one JSON document (a file path or inline
JSON) and prints a report. Exit codes: 0 ok, 1 negative verdict, 2 bad input,
3 a checked theorem failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, Optional, Sequence

from .abelian import FinAbGroup, GroupHom, Subgroup
from .building_data import (
    CyclicBuildingData,
    abelian_building_data_verify,
    abelian_data_from_json,
    epsilon_identities,
    epsilon_table,
    lchi_all,
    verify_real_building_data,
)
from .errors import InputError, TheoremViolation
from .extensions import (
    BasicCover,
    FactoredRatFunc,
    IRREDUCIBLE,
    build_from_json,
    check_power_criterion,
    decompose_to_basic,
    fibre_product,
)
from .group_ext import basic_case_type
from .involutions import (
    analyze_involution,
    classify_cyclic_involution,
    enumerate_compatible_involutions,
    enumerate_cyclic_involutions,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_PANIC = 0, 1, 2, 3

Result = tuple[Any, int]


def _load(arg: Optional[str]) -> dict:
    if arg is None:
        return {}
    text = arg
    if not arg.lstrip().startswith(("{", "[")):
        if not os.path.exists(arg):
            raise InputError(f"{arg!r} is neither inline JSON nor an existing file")
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("top-level JSON value must be an object")
    return obj


def _need(obj: dict, key: str, flag: Any = None) -> Any:
    if flag is not None:
        return flag
    if key not in obj:
        raise InputError(f"missing {key!r} (flag --{key} or JSON field)")
    return obj[key]


def _int(obj: dict, key: str, flag: Optional[int] = None) -> int:
    v = _need(obj, key, flag)
    try:
        return int(v)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{key} must be an integer, got {v!r}") from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args, obj) -> Result:
    c = classify_cyclic_involution(_int(obj, "n", args.n), _int(obj, "m", args.m))
    return c.to_json(), EXIT_OK


def cmd_enumerate(args, obj) -> Result:
    n = _int(obj, "n", args.n)
    return {"n": n, "involutions": enumerate_cyclic_involutions(n)}, EXIT_OK


def _group_and_map(obj: dict) -> tuple[FinAbGroup, GroupHom]:
    try:
        G = FinAbGroup.from_json(obj["group"])
        M = GroupHom.from_json(obj["M"], G)
    except (KeyError, TypeError) as exc:
        raise InputError(f"expected {{'group': ..., 'M': ...}}: {exc}") from exc
    return G, M


def cmd_analyze(args, obj) -> Result:
    G, M = _group_and_map(obj)
    return analyze_involution(G, M).to_json(), EXIT_OK


def cmd_compatible(args, obj) -> Result:
    try:
        G = FinAbGroup.from_json(obj["group"])
        plus = Subgroup.generated(G, obj["Gplus"])
        minus = Subgroup.generated(G, obj["Gminus"])
        W = Subgroup.generated(G, obj["W"]) if "W" in obj else None
    except (KeyError, TypeError) as exc:
        raise InputError(f"expected {{'group', 'Gplus', 'Gminus'}}: {exc}") from exc
    maps = enumerate_compatible_involutions(G, plus, minus, W)
    return {"group": G.to_json(), "count": len(maps), "involutions": [h.to_json() for h in maps]}, EXIT_OK


def cmd_case_type(args, obj) -> Result:
    n, m = _int(obj, "n", args.n), _int(obj, "m", args.m)
    out = basic_case_type(n, m).to_json()
    out["decomposition"] = [c.to_json() for c in decompose_to_basic(n, m)]
    return out, EXIT_OK


def cmd_build(args, obj) -> Result:
    spec = dict(obj)
    for key in ("case", "n", "f", "p", "q", "theta"):
        v = getattr(args, key, None)
        if v is not None:
            spec[key] = v
    return build_from_json(spec).to_json(), EXIT_OK


def cmd_check_power(args, obj) -> Result:
    n = _int(obj, "n", args.n)
    field = args.field or obj.get("coefficient_field", "closure")
    f = FactoredRatFunc.from_json(obj)
    v = check_power_criterion(f, n, field)
    out = {"f": f.to_json(), "coefficient_field": field, **v.to_json()}
    return out, EXIT_OK if v.status == IRREDUCIBLE else EXIT_NEGATIVE


def _cover(obj: Any):
    if not isinstance(obj, dict):
        raise InputError("each factor must be a JSON object")
    if "case" in obj:
        return build_from_json(obj)
    return BasicCover(_int(obj, "n"), _int(obj, "m"))


def cmd_fibre(args, obj) -> Result:
    if "first" not in obj or "second" not in obj:
        raise InputError("expected {'first': ..., 'second': ...}")
    return fibre_product(_cover(obj["first"]), _cover(obj["second"])).to_json(), EXIT_OK


def cmd_epsilon_table(args, obj) -> Result:
    n = _int(obj, "n", args.n)
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    E = epsilon_table(n)
    i = args.i if args.i is not None else obj.get("i")
    idx = [int(i) % n] if i is not None else range(1, n)
    return {"n": n, "table": {str(k): E[k].tolist() for k in idx}}, EXIT_OK


def cmd_lchi(args, obj) -> Result:
    bd = CyclicBuildingData.from_json(obj)
    Ls = lchi_all(bd)
    return {"n": bd.n, "L": [list(x) for x in Ls], "verified": True}, EXIT_OK


def cmd_verify_bd(args, obj) -> Result:
    report = verify_real_building_data(CyclicBuildingData.from_json(obj))
    return report.to_json(), EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_verify_abelian(args, obj) -> Result:
    report = abelian_building_data_verify(*abelian_data_from_json(obj))
    return report.to_json(), EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_epsilon_identities(args, obj) -> Result:
    return epsilon_identities(_int(obj, "n", args.n), _int(obj, "m", args.m)).to_json(), EXIT_OK


COMMANDS: dict[str, tuple[Callable[..., Result], str]] = {
    "classify-involution": (cmd_classify, "CRT decomposition of an involution m of Z/n"),
    "enumerate-involutions": (cmd_enumerate, "all m with m^2 = 1 mod n"),
    "analyze-abelian": (cmd_analyze, "eigenspace analysis of an involution of a finite abelian group"),
    "enumerate-compatible": (cmd_compatible, "all involutions with prescribed eigenspaces"),
    "case-type": (cmd_case_type, "basic case type and basic factors of (n, m)"),
    "build-extension": (cmd_build, "build and verify a basic real cyclic extension"),
    "check-power": (cmd_check_power, "power criterion for z^n - f from a factored f"),
    "fibre-product": (cmd_fibre, "fibre product of two coprime-degree extensions"),
    "epsilon-table": (cmd_epsilon_table, "carry bits eps^i_{j,h}"),
    "lchi": (cmd_lchi, "character classes L_0 .. L_{n-1}"),
    "verify-building-data": (cmd_verify_bd, "reality report for cyclic building data"),
    "verify-abelian-data": (cmd_verify_abelian, "checks for abelian building data"),
    "epsilon-identities": (cmd_epsilon_identities, "exhaustive check of the carry-bit identities"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realcyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("input", nargs="?", help="JSON file or inline JSON")
        p.add_argument("--output", choices=("json", "text"), default="json")
        if name in ("classify-involution", "enumerate-involutions", "case-type", "epsilon-table",
                    "epsilon-identities", "check-power", "build-extension"):
            p.add_argument("--n", type=int)
        if name in ("classify-involution", "case-type", "epsilon-identities"):
            p.add_argument("--m", type=int)
        if name == "epsilon-table":
            p.add_argument("--i", type=int)
        if name == "check-power":
            p.add_argument("--field", choices=("closure", "gaussian"))
        if name == "build-extension":
            p.add_argument("--case", choices=("standard", "dihedral_like", "twisted", "esoteric"))
            for key in ("f", "p", "q", "theta"):
                p.add_argument(f"--{key}")
    return parser


def _text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(obj, list):
        for v in obj:
            sub = _text(v, indent + 1)
            lines.append(f"{pad}-")
            lines.extend(sub)
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def render(obj: Any, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(_text(obj))
    return json.dumps(obj, sort_keys=True, indent=2)


def dispatch(argv: Sequence[str]) -> tuple[int, str]:
    """Run one subcommand; returns ``(exit code, text for stdout)``.

    Error messages go into the returned text as a JSON object with an
    ``error`` field.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), ""
    handler = COMMANDS[args.command][0]
    try:
        obj = _load(args.input)
        payload, code = handler(args, obj)
    except TheoremViolation as exc:
        return EXIT_PANIC, render({"error": "TheoremViolation", "message": str(exc)}, args.output)
    except (InputError, ValueError, ZeroDivisionError) as exc:
        return EXIT_INPUT, render({"error": type(exc).__name__, "message": str(exc)}, args.output)
    return code, render(payload, args.output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = dispatch(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code in (EXIT_OK, EXIT_NEGATIVE) else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
