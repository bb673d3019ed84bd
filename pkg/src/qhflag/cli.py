"""Command-line interface.

Five console scripts share this module: ``qh`` (ring computations), ``tnn``
(Toeplitz stratum and minor checks), ``pf`` (fiber solves), ``verify`` (the
verification suite with optional rendered report), and ``peterson``
(evaluation of classes at points).  Exit codes: 0 success, 2 validation
error, 3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .poly import Poly
from .weyl import ParabolicShape, in_wp


def _parse_scalar(tok: str):
    tok = tok.strip()
    if any(ch in tok for ch in ".eE") and "/" not in tok:
        return float(tok)
    f = Fraction(tok)
    return int(f) if f.denominator == 1 else f


def _parse_scalars(text: str):
    if not text.strip():
        return []
    return [_parse_scalar(t) for t in text.split(",")]


def _parse_ints(text: str):
    if not text.strip():
        return []
    return [int(t) for t in text.split(",")]


def _shape(args) -> ParabolicShape:
    return ParabolicShape(args.n, tuple(_parse_ints(args.ip)))


def _scalar_json(v):
    if isinstance(v, (int, Fraction)):
        return str(v)
    return v


def _expansion_json(expn):
    return {
        "terms": [
            {"w": list(w), "coefficient": cq.to_json()}
            for w, cq in sorted(expn.items())
        ]
    }


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _point_from_args(args):
    from .toeplitz import ToeplitzPoint

    a = _parse_scalars(args.a)
    return ToeplitzPoint(len(a) + 1, tuple(a))


def _cmd_qh(args) -> int:
    from . import qcoh

    p = _shape(args)
    if args.command == "mul":
        u = tuple(_parse_ints(args.u))
        v = tuple(_parse_ints(args.v))
        prod = qcoh.multiply(qcoh.schubert_class(u, p), qcoh.schubert_class(v, p), p)
        _emit({"n": p.n, "ip": list(p.ip), "u": list(u), "v": list(v), "product": _expansion_json(prod)})
    elif args.command == "table":
        table = qcoh.structure_table(p)
        records = [
            {"u": list(u), "v": list(v), "w": list(w), "d": list(d), "c": c}
            for (u, v, w, d), c in sorted(table.items())
        ]
        if any(r["c"] < 0 for r in records):
            raise ValueError("negative structure constant")
        _emit({"n": p.n, "ip": list(p.ip), "entries": records})
    elif args.command == "euler":
        _emit({"n": p.n, "ip": list(p.ip), "euler": _expansion_json(qcoh.quantum_euler(p))})
    elif args.command == "jacobian-check":
        ok = qcoh.jacobian_check(p)
        _emit({"n": p.n, "ip": list(p.ip), "jacobian_equals_euler": ok})
        if not ok:
            return 1
    return 0


def _cmd_tnn(args) -> int:
    from . import toeplitz

    if args.command == "check":
        x = _point_from_args(args)
        tnn, margin = toeplitz.is_tnn(x, tol=args.tol)
        strat = toeplitz.stratum(x, tol=args.tol)
        _emit(
            {
                "point": toeplitz.to_json(x),
                "tnn": tnn,
                "margin": _scalar_json(margin),
                "stratum": list(strat.ip),
                "deltas": [_scalar_json(d) for d in toeplitz.deltas(x)],
            }
        )
    elif args.command == "invert":
        from .solver import tnn_inverse

        dv = [float(v) for v in _parse_scalars(args.deltas)]
        x = tnn_inverse(dv, tol=args.tol)
        out = toeplitz.deltas(x)
        residuals = [abs(out[i] - dv[i - 1]) for i in range(1, x.n)]
        _emit(
            {
                "point": toeplitz.to_json(x),
                "deltas": [_scalar_json(d) for d in out],
                "residuals": residuals,
            }
        )
    return 0


def _cmd_pf(args) -> int:
    from .solver import positive_point

    p = _shape(args)
    Q = [float(v) for v in _parse_scalars(args.q)]
    pp = positive_point(p, Q, tol=args.tol)
    from .toeplitz import to_json

    _emit(
        {
            "n": p.n,
            "ip": list(p.ip),
            "q": list(pp.q),
            "eigenvalue": pp.eigenvalue,
            "residual": pp.residual,
            "schubert_values": [
                {"w": list(w), "value": v} for w, v in sorted(pp.schubert_values.items())
            ],
            "point": to_json(pp.point),
        }
    )
    return 0


def _cmd_verify(args) -> int:
    from .solver import verify_suite

    report = verify_suite(max_n=args.max_n, seed=args.seed)
    if args.out:
        from .report import render_report

        report["artifacts"] = render_report(report, args.out)
    _emit(report)
    return 0


def _cmd_peterson(args) -> int:
    from . import peterson, toeplitz

    x = _point_from_args(args)
    p = ParabolicShape(x.n, tuple(_parse_ints(args.ip)))
    if args.command == "eval":
        w = tuple(_parse_ints(args.w))
        if not in_wp(w, p):
            raise ValueError("%r is not in W^P" % (w,))
        val = peterson.eval_schubert(w, x, p)
        _emit({"w": list(w), "value": _scalar_json(val)})
    elif args.command == "qvals":
        qv = peterson.q_values(x, p)
        _emit({"n": x.n, "ip": list(p.ip), "q": [_scalar_json(v) for v in qv]})
    return 0


def _build_parser(prog: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=prog)
    sub = parser.add_subparsers(dest="command", required=prog != "verify")

    def add(name, *specs):
        sp = sub.add_parser(name)
        for flag, kw in specs:
            sp.add_argument(flag, **kw)
        return sp

    n_arg = ("--n", {"type": int, "required": True})
    ip_arg = ("--ip", {"default": "", "help": "comma-separated indices n_1,..,n_k"})
    a_arg = ("--a", {"required": True, "help": "comma-separated a_1,..,a_{n-1}"})
    tol_arg = ("--tol", {"type": float})

    if prog == "qh":
        add("mul", n_arg, ip_arg, ("--u", {"required": True}), ("--v", {"required": True}))
        add("table", n_arg, ip_arg)
        add("euler", n_arg, ip_arg)
        add("jacobian-check", n_arg, ip_arg)
    elif prog == "tnn":
        add("check", a_arg, ("--tol", {"type": float, "default": 1e-10}))
        add("invert", ("--deltas", {"required": True}), ("--tol", {"type": float, "default": 1e-8}))
    elif prog == "pf":
        add("solve", n_arg, ip_arg, ("--q", {"required": True}), ("--tol", {"type": float, "default": 1e-10}))
    elif prog == "verify":
        parser.add_argument("--max-n", type=int, default=4, dest="max_n")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--out", default=None, help="directory for rendered report")
    elif prog == "peterson":
        add("eval", a_arg, ip_arg, ("--w", {"required": True}))
        add("qvals", a_arg, ip_arg)
    return parser


def _dispatch(prog: str, args) -> int:
    from .solver import NonConvergenceError

    try:
        if prog == "qh":
            return _cmd_qh(args)
        if prog == "tnn":
            return _cmd_tnn(args)
        if prog == "pf":
            return _cmd_pf(args)
        if prog == "verify":
            return _cmd_verify(args)
        if prog == "peterson":
            return _cmd_peterson(args)
        raise AssertionError("unknown prog")
    except NonConvergenceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def _main(prog: str, argv=None) -> int:
    parser = _build_parser(prog)
    args = parser.parse_args(argv)
    return _dispatch(prog, args)


def qh_main(argv=None) -> int:
    return _main("qh", argv)


def tnn_main(argv=None) -> int:
    return _main("tnn", argv)


def pf_main(argv=None) -> int:
    return _main("pf", argv)


def verify_main(argv=None) -> int:
    return _main("verify", argv)


def peterson_main(argv=None) -> int:
    return _main("peterson", argv)


if __name__ == "__main__":
    sys.exit(_main(sys.argv[1] if len(sys.argv) > 1 else "verify", sys.argv[2:]))
