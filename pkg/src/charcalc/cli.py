"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from itertools import product

from . import __version__
from .category_o import (
    char_dimension,
    is_finite_dim_char,
    kostant_p,
    pullback_character,
    satisfies_O_necessary,
    simple_character,
    tensor_obstruction,
    theorem_sweep,
    verma_character,
    verma_decomposition,
    weyl_character,
)
from .char_ring import (
    LaurentPoly,
    RationalChar,
    char_from_json,
    char_to_json,
    format_char,
    reduce,
    root_text,
    series_expand,
    weight_text,
)
from .errors import CharCalcError, ParseError
from .oracles import freudenthal_multiplicity, kostant_partition_count, weight_multiplicities, weyl_dimension
from .root_system import build_root_system, default_cap, format_weight, parse_weight

DEFAULT_DEPTH = 10
_NEG_VALUE = re.compile(r"^-\d[\d/,;:-]*$")
_FACTORS = (1, 2, 3, 4)


class _Operand(argparse.Action):
    """Collects character operands in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        ops = list(getattr(namespace, "operands", None) or [])
        ops.append((self.const, values))
        namespace.operands = ops


def _add_common(p: argparse.ArgumentParser, depth=False):
    p.add_argument("--rs", required=True, help='root system: "A2", "B2", "A1xA1" or {"cartan": [[...]]}')
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--cap", type=int, default=None, help="Weyl group enumeration cap (default $CHARCALC_CAP or 10^6)")
    if depth:
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="series truncation depth")


def _add_operands(p: argparse.ArgumentParser, factors=False):
    g = p.add_argument_group("characters")
    g.add_argument("--verma", action=_Operand, const=("verma", None), metavar="W", help="Verma character M(W)")
    g.add_argument("--simple", action=_Operand, const=("simple", None), metavar="W", help="simple character V(W)")
    g.add_argument("--weyl", action=_Operand, const=("weyl", None), metavar="W", help="Weyl character of dominant W")
    g.add_argument("--p", action=_Operand, const=("p", None), nargs=0, help="Kostant partition element")
    g.add_argument("--input", action=_Operand, const=("input", None), metavar="FILE", help="character JSON ('-' = stdin)")
    if factors:
        for k in _FACTORS:
            g.add_argument(f"--verma{k}", action=_Operand, const=("verma", k), metavar="W",
                           help=f"Verma character of simple component {k}, pulled back" if k == 1 else argparse.SUPPRESS)
            g.add_argument(f"--simple{k}", action=_Operand, const=("simple", k), metavar="W",
                           help=f"simple character of simple component {k}, pulled back" if k == 1 else argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charcalc", description="Exact formal-character calculus for category O.")
    parser.add_argument("--version", action="version", version=f"charcalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="describe a root system")
    _add_common(p)

    p = sub.add_parser("char", help="build a character and print its reduced form")
    _add_common(p)
    _add_operands(p, factors=True)

    p = sub.add_parser("tensor", help="multiply two characters and test for squared denominators")
    _add_common(p)
    _add_operands(p, factors=True)

    p = sub.add_parser("reduce", help="reduce a character given as JSON")
    _add_common(p)
    _add_operands(p)

    p = sub.add_parser("expand", help="truncated series expansion")
    _add_common(p, depth=True)
    _add_operands(p, factors=True)

    p = sub.add_parser("check", help="denominator roots, O-necessary condition, finite dimensionality")
    _add_common(p)
    _add_operands(p, factors=True)

    p = sub.add_parser("decompose", help="express a character in the Verma basis")
    _add_common(p)
    _add_operands(p, factors=True)

    p = sub.add_parser("linkage", help="linkage and partial order of two weights")
    _add_common(p)
    p.add_argument("--weight", action="append", required=True, metavar="W")
    p.add_argument("--orbit", action="store_true", help="also list the shifted orbit of the first weight")

    p = sub.add_parser("sweep", help="self-tensor-square obstruction sweep over simple characters")
    _add_common(p)
    p.add_argument("--weight", action="append", default=[], metavar="W")
    p.add_argument("--grid", metavar="LO:HI:STEP",
                   help="every weight with fundamental coordinates in LO, LO+STEP, ..., HI")

    p = sub.add_parser("oracle", help="brute-force reference values")
    _add_common(p)
    p.add_argument("kind", choices=["kostant", "freudenthal", "dimension", "multiplicities"])
    p.add_argument("--gamma", metavar="V", help="simple-root coordinates (kostant)")
    p.add_argument("--lam", metavar="W", help="dominant highest weight")
    p.add_argument("--mu", metavar="W", help="weight whose multiplicity is wanted (freudenthal)")
    return parser


def _preprocess(argv):
    # argparse would read "-1/2" or "-1,0" as options
    out = []
    for tok in argv:
        if out and _NEG_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read character JSON from {path}: {exc}") from None


def _operand(rs, kind, comp, text, cap):
    if kind == "p":
        return kostant_p(rs)
    if kind == "input":
        return char_from_json(_load_json(text), rs)
    target = rs
    if comp is not None:
        if comp > len(rs.components):
            raise ParseError(f"{rs.label} has only {len(rs.components)} simple components")
        target, _ = rs.component_system(comp - 1)
    lam = parse_weight(text, target.rank)
    if kind == "verma":
        chi = verma_character(target, lam)
    elif kind == "simple":
        chi = simple_character(target, lam, cap)
    else:
        chi = weyl_character(target, lam, cap)
    return pullback_character(rs, comp - 1, chi) if comp is not None else chi


def _operands(args, rs, count):
    ops = getattr(args, "operands", None) or []
    if len(ops) != count:
        raise ParseError(f"'{args.command}' needs exactly {count} character operand(s), got {len(ops)}")
    return [_operand(rs, kind, comp, text, args.cap) for (kind, comp), text in ops]


def _verma_weight(chi: RationalChar):
    """Highest weight if ``chi`` is exactly a Verma character, else None."""
    red = reduce(chi)
    full = tuple((b, 1) for b in chi.rs.posroots)
    if len(red.terms) == 1 and red.terms[0][1] == LaurentPoly.one(chi.rs.rank) and red.denom == full:
        return red.terms[0][0]
    return None


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _frange(spec):
    parts = spec.split(":")
    if len(parts) != 3:
        raise ParseError(f"--grid expects LO:HI:STEP, got {spec!r}")
    lo, hi, step = (parse_weight(x).real[0] for x in parts)
    if step <= 0:
        raise ParseError("grid STEP must be positive")
    out = []
    while lo <= hi:
        out.append(lo)
        lo += step
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_rootsys(args, rs):
    payload = {
        "label": rs.label,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "d": [str(x) for x in rs.d],
        "posroots": [list(b) for b in rs.posroots],
        "rho_root_coords": [str(x) for x in rs.rho_root],
        "weyl_order": rs.weyl_order(),
    }
    text = "\n".join(
        [
            f"{rs.label}: rank {rs.rank}, {len(rs.posroots)} positive roots, |W| = {rs.weyl_order()}",
            "cartan: " + json.dumps(payload["cartan"]),
            "d: " + ", ".join(payload["d"]),
            "positive roots: " + ", ".join(root_text(b) for b in rs.posroots),
            "rho = " + " + ".join(f"omega_{i + 1}" for i in range(rs.rank)),
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_char(args, rs):
    (chi,) = _operands(args, rs, 1)
    chi = reduce(chi)
    _emit(args, char_to_json(chi), format_char(chi))
    return 0


cmd_reduce = cmd_char


def cmd_tensor(args, rs):
    a, b = _operands(args, rs, 2)
    verdict = tensor_obstruction(a, b)
    vw = _verma_weight(verdict.product)
    payload = {
        "obstructed": verdict.obstructed,
        "witnesses": [list(w) for w in verdict.witnesses],
        "product": char_to_json(verdict.product),
        "equals_verma": format_weight(vw) if vw is not None else None,
    }
    line = verdict.describe()
    if vw is not None and not verdict.obstructed:
        line += f"; equals Verma character M({weight_text(vw)})"
    _emit(args, payload, f"{line}\nproduct: {format_char(verdict.product)}")
    return 0


def cmd_expand(args, rs):
    (chi,) = _operands(args, rs, 1)
    window = series_expand(chi, args.depth)
    text = "\n".join(f"{weight_text(w)}: {c}" for w, c in window.items()) or "(empty)"
    _emit(args, window.to_json(), text)
    return 0


def cmd_check(args, rs):
    (chi,) = _operands(args, rs, 1)
    red = reduce(chi)
    finite = is_finite_dim_char(red)
    dim = char_dimension(red) if finite else None
    payload = {
        "reduced": char_to_json(red),
        "denominator_roots": [{"beta": list(b), "n": n} for b, n in red.denom],
        "satisfies_O_necessary": satisfies_O_necessary(red),
        "finite_dim": finite,
        "dimension": dim,
    }
    roots = ", ".join(root_text(b) + (f"^{n}" if n > 1 else "") for b, n in red.denom) or "none"
    text = "\n".join(
        [
            f"reduced: {format_char(red)}",
            f"denominator roots: {roots}",
            f"O-necessary condition (all n_beta = 1): {'yes' if payload['satisfies_O_necessary'] else 'no'}",
            f"finite dimensional: {'yes' if finite else 'no'}" + (f" (dimension {dim})" if finite else ""),
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_decompose(args, rs):
    (chi,) = _operands(args, rs, 1)
    dec = verma_decomposition(rs, chi)
    text = "\n".join(f"{c:+d} M({weight_text(w)})" for w, c in dec) or "0"
    _emit(args, dec.to_json(), text)
    return 0


def cmd_linkage(args, rs):
    if len(args.weight) != 2:
        raise ParseError("linkage needs exactly two --weight values")
    lam, mu = (parse_weight(w, rs.rank) for w in args.weight)
    payload = {
        "lambda": format_weight(lam),
        "mu": format_weight(mu),
        "linked": rs.are_linked(lam, mu, args.cap),
        "mu_leq_lambda": rs.leq(mu, lam),
        "lambda_leq_mu": rs.leq(lam, mu),
    }
    lines = [
        f"linked: {'yes' if payload['linked'] else 'no'}",
        f"mu <= lambda: {'yes' if payload['mu_leq_lambda'] else 'no'}",
        f"lambda <= mu: {'yes' if payload['lambda_leq_mu'] else 'no'}",
    ]
    if args.orbit:
        orbit = rs.linkage_orbit(lam, args.cap)
        payload["orbit"] = [format_weight(w) for w in orbit]
        lines.append("orbit: " + "; ".join(weight_text(w) for w in orbit))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_sweep(args, rs):
    weights = [parse_weight(w, rs.rank) for w in args.weight]
    if args.grid:
        vals = _frange(args.grid)
        weights += [parse_weight(",".join(str(v) for v in c), rs.rank) for c in product(vals, repeat=rs.rank)]
    if not weights:
        raise ParseError("sweep needs --weight or --grid")
    report = theorem_sweep(rs, weights, args.cap)
    lines = []
    for r in report.records:
        desc = f"finite (dim {r.dimension})" if r.finite_dim else "infinite"
        verdict = "obstructed: " + ", ".join(f"{root_text(b)} squared" for b in r.witnesses) if r.obstructed else "no obstruction found"
        lines.append(f"{weight_text(r.weight)}: {desc}; {verdict}" + ("  VIOLATION" if r.violation else ""))
    lines.append(f"violations: {len(report.violations)}")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.ok else 1


def cmd_oracle(args, rs):
    if args.kind == "kostant":
        if not args.gamma:
            raise ParseError("kostant needs --gamma")
        gamma = parse_weight(args.gamma, rs.rank).real
        if any(g.denominator != 1 for g in gamma):
            raise ParseError("--gamma must be an integer vector")
        value = kostant_partition_count(rs, [int(g) for g in gamma])
        payload = {"kind": "kostant", "gamma": [int(g) for g in gamma], "value": value}
        _emit(args, payload, str(value))
        return 0
    if not args.lam:
        raise ParseError(f"{args.kind} needs --lam")
    lam = parse_weight(args.lam, rs.rank)
    if args.kind == "dimension":
        value = weyl_dimension(rs, lam)
        _emit(args, {"kind": "dimension", "lam": format_weight(lam), "value": value}, str(value))
    elif args.kind == "freudenthal":
        if not args.mu:
            raise ParseError("freudenthal needs --mu")
        mu = parse_weight(args.mu, rs.rank)
        value = freudenthal_multiplicity(rs, lam, mu)
        _emit(args, {"kind": "freudenthal", "lam": format_weight(lam), "mu": format_weight(mu), "value": value}, str(value))
    else:
        mults = sorted(weight_multiplicities(rs, lam).items(), key=lambda kv: kv[0].sort_key())
        payload = {"kind": "multiplicities", "lam": format_weight(lam), "weights": [[format_weight(w), m] for w, m in mults]}
        _emit(args, payload, "\n".join(f"{weight_text(w)}: {m}" for w, m in mults))
    return 0


COMMANDS = {
    "rootsys": cmd_rootsys,
    "char": cmd_char,
    "tensor": cmd_tensor,
    "reduce": cmd_reduce,
    "expand": cmd_expand,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "linkage": cmd_linkage,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
}


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cap is None:
            args.cap = default_cap()
        rs = build_root_system(args.rs)
        return COMMANDS[args.command](args, rs)
    except CharCalcError as exc:
        code = 2 if isinstance(exc, ParseError) else 1
        if args.json:
            print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}, indent=2))
        else:
            print(f"charcalc: error: {exc}", file=sys.stderr)
        return code


def main():
    sys.exit(run())
