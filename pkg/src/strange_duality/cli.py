"""Command-line front end.

Exit codes: 0 ok, 1 computational error, 2 usage error.  With ``--json``
the payload is printed as compact JSON with every integer written as a
decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from strange_duality import duality, kring, rep3, series
from strange_duality.errors import StrangeDualityError

EXIT_OK, EXIT_ERROR, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str
    payload: Any
    text: str = ""
    exit_code: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _triple(text: str):
    try:
        return kring.parse_triple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed triple {text!r}: {exc}") from None


def _partition(text: str):
    parts = [p.strip() for p in text.split(",")]
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}") from None
    if not 1 <= len(vals) <= 3:
        raise argparse.ArgumentTypeError(f"partition {text!r} must have 1 to 3 parts")
    return vals


def _sample(text: str):
    k, sep, h = text.partition("=")
    try:
        if not sep:
            raise ValueError
        return int(k), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed sample {text!r}, expected k=h0") from None


def _int_list(text: str):
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed coefficient list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="strange-duality", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    kr = top.add_parser("kring", help="arithmetic in K(P2)")
    kr.add_argument("op", choices=["mul", "pair", "dual", "dim", "orth", "chern"])
    kr.add_argument("--c", type=_triple, required=True, help="class r,c1,chi")
    kr.add_argument("--u", type=_triple, help="second class r,c1,chi")
    kr.add_argument("--chern", action="store_true", help="read --c/--u as r,c1,c2")

    rp = top.add_parser("rep", help="SL(3) characters")
    rp.add_argument("op", choices=["dim", "sym", "ext", "tensor", "decompose"])
    rp.add_argument("--partition", type=_partition, action="append", default=[], help="a,b,c (repeatable)")
    rp.add_argument("--n", type=int, default=None)

    se = top.add_parser("series", help="Poincare series")
    se_sub = se.add_subparsers(dest="op", required=True, parser_class=_Parser)
    rc = se_sub.add_parser("reconstruct")
    rc.add_argument("--dim", type=int, required=True)
    rc.add_argument("--delta", type=int, required=True)
    rc.add_argument("--q1", type=int, required=True)
    rc.add_argument("--sample", type=_sample, action="append", default=[])
    co = se_sub.add_parser("coeff")
    co.add_argument("--k", type=int, required=True)
    co.add_argument("--n", type=int, choices=sorted(series.PAPER_SERIES), help="built-in series for c2 = n")
    co.add_argument("--numerator", type=_int_list, help="q0,q1,...")
    co.add_argument("--dim", type=int)
    co.add_argument("--delta", type=int, default=1)

    du = top.add_parser("duality", help="strange duality dimension checks")
    du_sub = du.add_subparsers(dest="op", required=True, parser_class=_Parser)
    ch = du_sub.add_parser("check")
    ch.add_argument("--n", type=int, required=True)
    ch.add_argument("--d", type=int, required=True)
    au = du_sub.add_parser("audit-alpha")
    au.add_argument("--n", type=int, required=True)
    tb = du_sub.add_parser("table")
    tb.add_argument("--nmax", type=int, required=True)
    return p


def _s(x: int) -> str:
    return str(x)


def _class_payload(c: kring.KClass):
    return {"r": _s(c.rank), "c1": _s(c.c1), "chi": _s(c.chi)}


def _decomp_payload(d: rep3.SchurDecomposition):
    return [{"partition": [_s(x) for x in lam], "coefficient": _s(c)} for lam, c in d.items()]


def _decomp_text(d: rep3.SchurDecomposition) -> str:
    if not len(d):
        return "0"
    return " + ".join(f"{c}*S^{{{','.join(map(str, lam))}}}" for lam, c in d.items())


def _read_class(t, chern: bool) -> kring.KClass:
    if chern:
        return kring.chern_to_chi(kring.ChernData(*t))
    return kring.KClass(*t)


def _kring(a) -> CommandResult:
    c = _read_class(a.c, a.chern)
    u = _read_class(a.u, a.chern) if a.u is not None else None
    if a.op in ("mul", "pair") and u is None:
        raise UsageError(f"kring {a.op} requires --u")
    if a.op == "mul":
        r = kring.mul(c, u)
        return CommandResult("ok", _class_payload(r), str(r))
    if a.op == "pair":
        v = kring.euler_pair(c, u)
        return CommandResult("ok", {"pair": _s(v)}, str(v))
    if a.op == "dual":
        r = kring.dual(c)
        return CommandResult("ok", _class_payload(r), str(r))
    if a.op == "dim":
        v = kring.moduli_dim(c)
        return CommandResult("ok", {"dim": _s(v)}, str(v))
    if a.op == "orth":
        g, delta = kring.orth_generator(c)
        return CommandResult("ok", {"u": _class_payload(g), "delta": _s(delta)}, f"u={g} delta={delta}")
    cd = kring.chi_to_chern(c)
    return CommandResult("ok", {"r": _s(cd.rank), "c1": _s(cd.c1), "c2": _s(cd.c2)}, f"({cd.rank},{cd.c1},{cd.c2})")


def _rep(a) -> CommandResult:
    parts = a.partition
    if not parts:
        raise UsageError(f"rep {a.op} requires --partition")
    if a.op == "dim":
        v = rep3.weyl_dim(parts[0])
        return CommandResult("ok", {"dim": _s(v)}, str(v))
    if a.op == "tensor":
        if len(parts) < 2:
            raise UsageError("rep tensor requires two --partition values")
        x = rep3.TRIVIAL
        for lam in parts:
            x = rep3.tensor(x, rep3.schur_char(lam))
    elif a.op in ("sym", "ext"):
        if a.n is None:
            raise UsageError(f"rep {a.op} requires --n")
        f = rep3.sym_power if a.op == "sym" else rep3.ext_power
        x = f(rep3.schur_char(parts[0]), a.n)
    else:
        x = rep3.TRIVIAL
        for lam in parts:
            x = rep3.tensor(x, rep3.schur_char(lam))
        if a.n is not None:
            x = rep3.sym_power(x, a.n)
    d = rep3.decompose(x)
    payload = {"dim": _s(x.dim), "decomposition": _decomp_payload(d), "virtual": d.is_virtual}
    return CommandResult("ok", payload, f"dim {x.dim}: {_decomp_text(d)}")


def _series_payload(s: series.PoincareSeries):
    return {
        "numerator": [_s(c) for c in s.numerator.coeffs],
        "dim": _s(s.dim),
        "delta": _s(s.delta),
    }


def _series(a) -> CommandResult:
    if a.op == "reconstruct":
        s = series.reconstruct(a.dim, a.delta, a.q1, a.sample)
        text = f"Q = {s.numerator}\nQ coefficients {list(s.numerator.coeffs)}\nP(t) = Q(t)/(1-t)^{s.dim + 1}"
        return CommandResult("ok", _series_payload(s), text)
    if a.n is not None:
        s = series.PAPER_SERIES[a.n]
    elif a.numerator is not None and a.dim is not None:
        s = series.PoincareSeries(series.IntPolynomial(tuple(a.numerator)), a.dim, a.delta)
    else:
        raise UsageError("series coeff requires --n, or --numerator together with --dim")
    v = series.coefficient(s, a.k)
    return CommandResult("ok", {"k": _s(a.k), "coefficient": _s(v)}, str(v))


def _report_payload(r: duality.DualityReport):
    return {
        "lhs": _s(r.lhs_dim),
        "rhs": _s(r.rhs_dim),
        "orthogonal": r.orthogonal,
        "asserted": r.asserted_by_paper,
    }


def _duality(a) -> CommandResult:
    if a.op == "check":
        r = duality.check(a.n, a.d)
        text = f"n={r.n} d={r.d} lhs={r.lhs_dim} rhs={r.rhs_dim} orthogonal={r.orthogonal} {r.status}"
        code = EXIT_ERROR if r.status == "FAILED" else EXIT_OK
        return CommandResult("ok" if code == EXIT_OK else "error", _report_payload(r), text, code)
    if a.op == "audit-alpha":
        au = duality.alpha_audit(a.n)
        payload = {
            "n": _s(au.n),
            "sources": [{"label": lab, "dim": _s(v)} for lab, v in au.sources],
            "targets": [{"label": lab, "dim": _s(v)} for lab, v in au.targets],
            "ker_dim": _s(au.ker_dim),
            "coker_dim": _s(au.coker_dim),
            "identities": au.identities,
            "passed": au.passed,
        }
        lines = [f"alpha audit n={au.n}: {'pass' if au.passed else 'FAIL'}"]
        lines += [f"  source {lab}: {v}" for lab, v in au.sources]
        lines += [f"  target {lab}: {v}" for lab, v in au.targets]
        lines.append(f"  ker {au.ker_dim}  coker {au.coker_dim}")
        return CommandResult("ok", payload, "\n".join(lines))
    if a.nmax < 0:
        raise UsageError(f"--nmax must be >= 0, got {a.nmax}")
    rows = duality.table(a.nmax)
    ok = all(r.agree for r in rows if r.asserted_by_paper)
    payload = {
        "rows": [dict(n=_s(r.n), d=_s(r.d), **_report_payload(r)) for r in rows],
        "all_asserted_agree": ok,
    }
    lines = [f"{'n':>3} {'d':>2} {'lhs':>8} {'rhs':>8}  status"]
    lines += [f"{r.n:>3} {r.d:>2} {r.lhs_dim:>8} {r.rhs_dim:>8}  {r.status}" for r in rows]
    return CommandResult("ok" if ok else "error", payload, "\n".join(lines), EXIT_OK if ok else EXIT_ERROR)


_DISPATCH = {"kring": _kring, "rep": _rep, "series": _series, "duality": _duality}


def to_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"), default=_json_default)


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"not serializable: {type(o).__name__}")


def run(argv: Sequence[str]) -> CommandResult:
    """Parse and execute ``argv``; never raises for bad input."""
    argv = [a for a in argv if a != "--json"]
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return CommandResult("error", {"error": f"usage: {exc}"}, f"usage error: {exc}", EXIT_USAGE)
    try:
        return _DISPATCH[args.group](args)
    except UsageError as exc:
        return CommandResult("error", {"error": f"usage: {exc}"}, f"usage error: {exc}", EXIT_USAGE)
    except StrangeDualityError as exc:
        return CommandResult("error", {"error": str(exc)}, f"error: {exc}", EXIT_ERROR)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    res = run(argv)
    if res.exit_code == EXIT_OK:
        print(to_json(res.payload) if as_json else res.text)
    else:
        if res.payload and "error" not in res.payload:
            print(to_json(res.payload) if as_json else res.text)
        else:
            print(res.text, file=sys.stderr)
            if as_json:
                print(to_json({"status": "error", **res.payload}))
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
