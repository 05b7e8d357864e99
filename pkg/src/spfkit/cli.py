"""Batch experiment runner: one subcommand per construction.

Outputs are deterministic for a fixed seed and config.  CSV is RFC-4180
with complex values split into adjacent <name>_re / <name>_im columns, the
imaginary part carrying a trailing "i"; JSON mirrors the result structures
field for field with complex numbers as {"re": .., "im": ..} objects.
Numeric parameters are validated against each operation's preconditions
before anything runs; a violation reports the broken rule and exits 2.
"""

from __future__ import annotations

import os

# honor the thread cap before numpy spins up its pools
_threads = os.environ.get("SPFKIT_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                 "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import acceptance
from .best import extremal_fraction, omega_from_delta, remez_constant, vallee_poussin_bound
from .hsums import (
    diff_nodes,
    extrap_freqs,
    extrapolate,
    hsum_pade,
    int_nodes,
    prony_solve,
    reg_diff,
    reg_diff_generating,
    reg_extrap,
)
from .interp import (
    generalized_interp_simple,
    interpolate_constant,
    pade_spf,
)
from .metrics import (
    HalfPlanePoles,
    derivative_suite,
    inequality_suite,
    l2_quadrature,
    notch_points,
)
from .numkit import power_sums

__all__ = ["main"]


class ParameterError(Exception):
    """A precondition violated before dispatch; the message names the rule."""


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ParameterError("cannot parse %r as a complex number" % text)


def _parse_complex_list(text: str) -> list:
    return [_parse_complex(tok) for tok in text.split(",") if tok.strip()]


def _load_coeffs(path: str) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("coeffs", data.get("coefficients"))
        if data is None:
            raise ParameterError("coefficient file must hold a list or a 'coeffs' key")
    out = []
    for item in data:
        if isinstance(item, (list, tuple)):
            out.append(complex(item[0], item[1]))
        elif isinstance(item, str):
            out.append(_parse_complex(item))
        else:
            out.append(complex(item))
    return out


def _jnum(v):
    v = complex(v)
    if v.imag == 0:
        return v.real
    return {"re": v.real, "im": v.imag}


def _jlist(values):
    return [_jnum(v) for v in values]


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def _to_csv(fieldnames, rows) -> str:
    """Rectangular table; a column holding any complex value splits into
    adjacent <name>_re / <name>_im columns, the imaginary cell tagged i."""
    is_complex = {
        name: any(isinstance(r.get(name), (complex, np.complexfloating)) for r in rows)
        for name in fieldnames
    }
    header = []
    for name in fieldnames:
        header.extend([name + "_re", name + "_im"] if is_complex[name] else [name])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        cells = []
        for name in fieldnames:
            v = row.get(name, "")
            if is_complex[name]:
                if isinstance(v, (complex, np.complexfloating)):
                    v = complex(v)
                    cells.extend([repr(v.real), repr(v.imag) + "i"])
                else:
                    cells.extend([_cell(v) if v != "" else "", ""])
            else:
                cells.append(_cell(v))
        writer.writerow(cells)
    return buf.getvalue()


def _emit(ns, fieldnames, rows, payload) -> None:
    text = _to_csv(fieldnames, rows) if ns.format == "csv" else json.dumps(payload, indent=2) + "\n"
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require(cond: bool, rule: str) -> None:
    if not cond:
        raise ParameterError(rule)


def _cmd_pade(ns) -> int:
    _require(ns.n >= 1, "n must be at least 1")
    f = _load_coeffs(ns.f)
    _require(len(f) >= ns.n, "need at least n coefficients in the target file")
    frac = pade_spf(f, ns.n)
    match = frac.maclaurin(ns.n)
    poles = list(frac.pole_array)
    rows = []
    for k in range(ns.n):
        row = {"n": ns.n, "k": k, "target": complex(f[k]), "match": complex(match[k]),
               "residual": float(abs(match[k] - f[k]))}
        if k < len(poles):
            row["pole"] = complex(poles[k])
        rows.append(row)
    payload = {
        "command": "pade", "n": ns.n, "f": ns.f,
        "poles": _jlist(poles),
        "coefficients": {"target": _jlist(f[: ns.n]), "match": _jlist(match),
                         "residual": [float(abs(match[k] - f[k])) for k in range(ns.n)]},
    }
    _emit(ns, ["n", "k", "pole", "target", "match", "residual"], rows, payload)
    return 0


def _cmd_interp(ns) -> int:
    nodes = _parse_complex_list(ns.nodes)
    values = _parse_complex_list(ns.values)
    _require(len(nodes) == len(values), "need as many values as nodes")
    _require(len(nodes) >= 1, "need at least one node")
    n = ns.n if ns.n is not None else len(nodes)
    _require(n >= 1, "degree bound n must be at least 1")
    fam = generalized_interp_simple(nodes, values, n=n)

    def sol_dict(sol):
        return {"degree": int(sol.Q.degree), "Q": _jlist(sol.Q.array),
                "node_status": list(sol.node_status)}

    rows = []
    for idx, sol in enumerate(fam.basis):
        for node, status in zip(nodes, sol.node_status):
            rows.append({"member": "basis-%d" % idx, "node": complex(node),
                         "status": status, "degree": int(sol.Q.degree)})
    if fam.ordinary is not None:
        for node, status in zip(nodes, fam.ordinary.node_status):
            rows.append({"member": "ordinary", "node": complex(node),
                         "status": status, "degree": int(fam.ordinary.Q.degree)})
    payload = {"command": "interp", "n": n, "nodes": _jlist(nodes), "values": _jlist(values),
               "ordinary_status": fam.ordinary_status,
               "basis": [sol_dict(s) for s in fam.basis],
               "ordinary": None if fam.ordinary is None else sol_dict(fam.ordinary)}
    _emit(ns, ["member", "degree", "node", "status"], rows, payload)
    return 0


def _cmd_const(ns) -> int:
    _require(ns.c != 0, "constant c must be nonzero")
    _require(ns.n >= 1, "n must be at least 1")
    nodes = np.cos((2.0 * np.arange(ns.n, 0, -1) - 1.0) * np.pi / (2.0 * ns.n))
    sol = interpolate_constant(ns.c, nodes)
    poles = sol.spf.pole_array
    rows = [{"c": ns.c, "n": ns.n, "k": k, "pole": complex(p), "abs_pole": float(abs(p))}
            for k, p in enumerate(poles)]
    payload = {"command": "const", "c": ns.c, "n": ns.n,
               "nodes": [float(x) for x in nodes],
               "poles": _jlist(poles), "node_status": list(sol.node_status)}
    _emit(ns, ["c", "n", "k", "pole", "abs_pole"], rows, payload)
    return 0


def _cmd_remez(ns) -> int:
    _require(ns.c != 0, "constant c must be nonzero")
    _require(ns.n >= 1, "n must be at least 1")
    _require(ns.tol > 0, "tolerance must be positive")
    res = remez_constant(ns.c, ns.n, tol=ns.tol)
    c, n = abs(ns.c), ns.n
    fact = float(math.factorial(n))
    lower = c ** (n + 1) * math.exp(-2 * c) / (2.0 ** (n - 1) * fact * (1 + 2 * c * math.exp(c)))
    upper = 2.0 * (1 + c) * math.exp(2 * c) * c ** (n + 1) / (2.0 ** (n - 1) * fact)
    try:
        vp = float(vallee_poussin_bound(ns.c, res.spf, res.report.points))
    except ValueError:
        vp = None
    rows = [{"kind": "pole", "index": k, "value": complex(p), "c": ns.c, "n": ns.n,
             "deviation": res.deviation}
            for k, p in enumerate(res.spf.pole_array)]
    rows += [{"kind": "alternance", "index": k, "value": complex(x), "residual": float(r),
              "c": ns.c, "n": ns.n, "deviation": res.deviation}
             for k, (x, r) in enumerate(zip(res.report.points, res.report.residuals))]
    payload = {
        "command": "remez", "c": ns.c, "n": ns.n, "tol": ns.tol,
        "deviation": res.deviation, "bound": [float(lower), float(upper)],
        "alternance": {"points": _jlist(res.report.points),
                       "residuals": [float(r) for r in res.report.residuals],
                       "count": res.report.count, "equalization": res.report.equalization},
        "poles": _jlist(res.spf.pole_array),
        "iterations": res.iterations, "converged": res.converged,
        "in_guarantee_regime": res.in_guarantee_regime,
        "vallee_poussin": vp,
    }
    _emit(ns, ["kind", "index", "value", "residual", "c", "n", "deviation"], rows, payload)
    return 0


def _cmd_extremal(ns) -> int:
    _require((ns.omega is None) != (ns.delta is None), "give exactly one of --omega / --delta")
    _require(ns.n >= 1, "n must be at least 1")
    if ns.delta is not None:
        _require(ns.delta > 0, "delta must be positive")
        omega = omega_from_delta(ns.delta, ns.n)
    else:
        _require(ns.omega > 1, "omega must exceed 1")
        omega = ns.omega
    ex = extremal_fraction(omega, ns.n)
    rows = [{"kind": "pole", "index": k, "value": complex(p), "omega": ex.omega, "n": ns.n}
            for k, p in enumerate(ex.poles)]
    rows.append({"kind": "summary", "omega": ex.omega, "n": ns.n,
                 "weighted_norm": ex.weighted_norm(), "norm_star": ex.norm_star(),
                 "delta": ex.delta, "ellipse_residual": ex.ellipse_residual()})
    payload = {
        "command": "extremal", "omega": ex.omega, "n": ns.n, "delta": ex.delta,
        "poles": _jlist(ex.poles),
        "weighted_norm": ex.weighted_norm(), "norm_star": ex.norm_star(),
        "equioscillation_phis": [float(p) for p in ex.equioscillation_phis()],
        "ellipse_residual": ex.ellipse_residual(),
    }
    _emit(ns, ["kind", "index", "value", "omega", "n", "weighted_norm", "norm_star",
               "delta", "ellipse_residual"], rows, payload)
    return 0


def _cmd_metrics(ns) -> int:
    poles = _parse_complex_list(ns.poles)
    _require(len(poles) >= 1, "need at least one pole")
    _require(all(p.imag > 0 for p in poles),
             "all poles must lie in the open upper half-plane")
    _require(0 < ns.phi < 2 * np.pi, "phi must lie in (0, 2 pi)")
    hp = HalfPlanePoles.make(poles)
    notch = notch_points(hp, ns.phi)
    quad_mu = l2_quadrature(hp, ns.phi)
    quad_nu = l2_quadrature(hp, ns.phi, form="nu")
    checks = inequality_suite(poles)
    rows = [{"kind": "notch", "index": k, "value": float(t), "phi": ns.phi}
            for k, t in enumerate(notch.points)]
    rows.append({"kind": "quadrature", "phi": ns.phi, "left": quad_mu, "right": quad_nu})
    rows += [{"kind": "check", "name": c.name, "left": c.left, "right": c.right,
              "passed": "" if c.passed is None else c.passed, "note": c.note}
             for c in checks]
    payload = {
        "command": "metrics", "poles": _jlist(poles), "phi": ns.phi,
        "notch_points": [float(t) for t in notch.points],
        "l2_quadrature": {"mu_form": quad_mu, "nu_form": quad_nu},
        "checks": [{"name": c.name, "left": c.left, "right": c.right,
                    "passed": c.passed, "note": c.note} for c in checks],
    }
    _emit(ns, ["kind", "index", "value", "phi", "name", "left", "right", "passed", "note"],
          rows, payload)
    all_flagged = all(c.passed for c in checks if c.passed is not None)
    return 0 if all_flagged else 1


def _cmd_derivs(ns) -> int:
    poles = _parse_complex_list(ns.poles)
    _require(len(poles) >= 1, "need at least one pole")
    _require(ns.r > 0, "circle radius must be positive")
    _require(ns.samples >= 16, "need at least 16 samples")
    checks = derivative_suite(poles, r=ns.r, x_window=ns.window, samples=ns.samples)
    rows = [{"name": c.name, "left": c.left, "right": c.right,
             "passed": "" if c.passed is None else c.passed, "note": c.note}
            for c in checks]
    payload = {"command": "derivs", "poles": _jlist(poles), "r": ns.r,
               "window": ns.window, "samples": ns.samples,
               "checks": [{"name": c.name, "left": c.left, "right": c.right,
                           "passed": c.passed, "note": c.note} for c in checks]}
    _emit(ns, ["name", "left", "right", "passed", "note"], rows, payload)
    all_flagged = all(c.passed for c in checks if c.passed is not None)
    return 0 if all_flagged else 1


def _cmd_hsum(ns) -> int:
    _require(ns.n >= 1, "n must be at least 1")
    if ns.op == "pade":
        _require(ns.f is not None and ns.h is not None, "op=pade needs --f and --h files")
        f = _load_coeffs(ns.f)
        h = _load_coeffs(ns.h)
        hs = hsum_pade(f, h, ns.n)
        contact = hs.maclaurin(ns.n)
        target = np.array(f[: ns.n] + [0.0] * max(0, ns.n - len(f)))
        rows = [{"op": "pade", "n": ns.n, "k": k, "freq": complex(l),
                 "residual": float(abs(contact[k] - target[k]))}
                for k, l in enumerate(hs.freqs)]
        payload = {"command": "hsum", "op": "pade", "n": ns.n,
                   "freqs": _jlist(hs.freqs),
                   "contact_residual": [float(abs(contact[k] - target[k])) for k in range(ns.n)]}
    elif ns.op in ("diff", "int"):
        lam = diff_nodes(ns.n) if ns.op == "diff" else int_nodes(ns.n)
        target = np.arange(1, ns.n + 1, dtype=float)
        if ns.op == "int":
            target = 1.0 / target
        resid = np.abs(power_sums(lam, ns.n) - target)
        rows = [{"op": ns.op, "n": ns.n, "k": k, "freq": complex(l)}
                for k, l in enumerate(lam)]
        rows.append({"op": ns.op, "n": ns.n, "power_sum_residual": float(resid.max())})
        payload = {"command": "hsum", "op": ns.op, "n": ns.n, "freqs": _jlist(lam),
                   "power_sum_residual": float(resid.max())}
    else:  # extrap
        _require(ns.a is not None and ns.a > 1, "op=extrap needs --a greater than 1")
        _require(ns.mu >= 1, "iteration depth must be at least 1")
        lam = extrap_freqs(ns.a, ns.n)
        bound = ns.a - (ns.a - 1.0) / ns.n
        rows = [{"op": "extrap", "a": ns.a, "n": ns.n, "k": k, "freq": complex(l)}
                for k, l in enumerate(lam)]
        rows.append({"op": "extrap", "a": ns.a, "n": ns.n,
                     "max_freq": float(np.abs(lam).max()), "bound": float(bound)})
        payload = {"command": "hsum", "op": "extrap", "a": ns.a, "n": ns.n, "mu": ns.mu,
                   "freqs": _jlist(lam), "max_freq": float(np.abs(lam).max()),
                   "bound": float(bound)}
        if ns.z is not None and ns.h is not None:
            z = _parse_complex(ns.z)
            val = extrapolate(_load_coeffs(ns.h), ns.a, ns.n, ns.mu, z)
            rows.append({"op": "extrap", "a": ns.a, "n": ns.n, "value": val})
            payload["value_at_z"] = _jnum(val)
    _emit(ns, sorted({k for r in rows for k in r}, key=lambda s: (s != "op", s)), rows, payload)
    return 0


def _cmd_prony(ns) -> int:
    s = _parse_complex_list(ns.s)
    _require(len(s) >= 2 and len(s) % 2 == 0, "need an even, positive number of moments")
    sol = prony_solve(s)
    rows = [{"kind": "pair", "index": k, "freq": complex(l), "amp": complex(m)}
            for k, (l, m) in enumerate(zip(sol.freqs, sol.amps))]
    rows += [{"kind": "coeff", "index": k, "value": complex(g)}
             for k, g in enumerate(sol.generating.array)]
    rows.append({"kind": "summary", "regular": sol.regular, "condition": sol.condition,
                 "residual": sol.moment_residual, "note": sol.note})
    payload = {"command": "prony", "moments": _jlist(s),
               "generating": _jlist(sol.generating.array),
               "freqs": _jlist(sol.freqs), "amps": _jlist(sol.amps),
               "regular": sol.regular, "condition": sol.condition,
               "moment_residual": sol.moment_residual, "note": sol.note}
    _emit(ns, ["kind", "index", "freq", "amp", "value", "regular", "condition",
               "residual", "note"], rows, payload)
    return 0 if sol.regular else 1


def _cmd_regdiff(ns) -> int:
    _require(ns.n >= 3, "n must be at least 3")
    _require(ns.p != 0, "regularization size must be nonzero")
    p_used, q, af = reg_diff(ns.n, ns.p)
    closed = reg_diff_generating(ns.n, p_used)
    rows = [{"kind": "pair", "index": k, "freq": complex(l), "amp": complex(m),
             "n": ns.n} for k, (l, m) in enumerate(zip(af.freqs, af.amps))]
    rows.append({"kind": "summary", "n": ns.n, "p_used": p_used, "q": q})
    payload = {"command": "regdiff", "n": ns.n, "p": ns.p, "p_used": p_used, "q": q,
               "freqs": _jlist(af.freqs), "amps": _jlist(af.amps),
               "generating_closed_form": _jlist(closed.array)}
    _emit(ns, ["kind", "index", "freq", "amp", "n", "p_used", "q"], rows, payload)
    return 0


def _cmd_regextrap(ns) -> int:
    _require(ns.a > 0, "a must be positive")
    _require(ns.p > 0, "p must be positive")
    _require(ns.n >= 1, "n must be at least 1")
    af, rep = reg_extrap(ns.a, ns.n, ns.p)
    rows = [{"kind": "pair", "index": k, "freq": complex(l), "amp": complex(m)}
            for k, (l, m) in enumerate(zip(af.freqs, af.amps))]
    rows.append({"kind": "summary", "delta": rep.delta, "radius": rep.radius,
                 "max_freq": rep.max_freq, "bound_holds": rep.bound_holds,
                 "collision": rep.collision, "generating_error": rep.generating_error})
    payload = {"command": "regextrap", "a": ns.a, "n": ns.n, "p": ns.p,
               "freqs": _jlist(af.freqs), "amps": _jlist(af.amps),
               "delta": rep.delta, "radius": rep.radius, "max_freq": rep.max_freq,
               "bound_holds": rep.bound_holds, "collision": rep.collision,
               "generating_error": rep.generating_error}
    _emit(ns, ["kind", "index", "freq", "amp", "delta", "radius", "max_freq",
               "bound_holds", "collision", "generating_error"], rows, payload)
    return 0 if rep.bound_holds and not rep.collision else 1


def _cmd_suite(ns) -> int:
    if ns.criteria:
        wanted = sorted({int(tok) for tok in ns.criteria.split(",") if tok.strip()})
    else:
        wanted = None
    results = acceptance.run(wanted, seed=ns.seed)
    rows = [{"id": r.ident, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results]
    all_passed = all(r.passed for r in results)
    payload = {"command": "suite", "seed": ns.seed,
               "criteria": rows, "all_passed": all_passed}
    _emit(ns, ["id", "name", "passed", "detail"], rows, payload)
    return 0 if all_passed else 1


_RUNNERS = {
    "pade": _cmd_pade,
    "interp": _cmd_interp,
    "const": _cmd_const,
    "remez": _cmd_remez,
    "extremal": _cmd_extremal,
    "metrics": _cmd_metrics,
    "derivs": _cmd_derivs,
    "hsum": _cmd_hsum,
    "prony": _cmd_prony,
    "regdiff": _cmd_regdiff,
    "regextrap": _cmd_regextrap,
    "suite": _cmd_suite,
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spfkit",
        description="experiment runner for simple partial fraction constructions",
    )
    top.add_argument("--config", help="JSON file of defaults for the chosen subcommand")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default=None)

    p = sub.add_parser("pade", help="contact interpolation of series coefficients")
    p.add_argument("--f", help="JSON file with target coefficients")
    p.add_argument("--n", type=int, help="contact order")
    common(p)
    p = sub.add_parser("interp", help="generalized multi-node interpolation")
    p.add_argument("--nodes", help="comma-separated complex nodes")
    p.add_argument("--values", help="comma-separated complex values")
    p.add_argument("--n", type=int, default=None, help="degree bound (default: node count)")
    common(p)
    p = sub.add_parser("const", help="constant interpolation at Chebyshev nodes")
    p.add_argument("--c", type=float, help="constant to interpolate")
    p.add_argument("--n", type=int, help="order")
    common(p)
    p = sub.add_parser("remez", help="best uniform constant approximation")
    p.add_argument("--c", type=float, help="constant to approximate")
    p.add_argument("--n", type=int, help="order")
    p.add_argument("--tol", type=float, default=None, help="equalization tolerance")
    common(p)
    p = sub.add_parser("extremal", help="extremal fraction with poles on an ellipse")
    p.add_argument("--omega", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--n", type=int, help="order")
    common(p)
    p = sub.add_parser("metrics", help="notch points, quadrature, norm inequalities")
    p.add_argument("--poles", help="comma-separated upper half-plane poles")
    p.add_argument("--phi", type=float, default=None, help="angle in (0, 2 pi)")
    common(p)
    p = sub.add_parser("derivs", help="derivative bounds on line, circle, segment")
    p.add_argument("--poles", help="comma-separated poles")
    p.add_argument("--r", type=float, default=None, help="circle radius")
    p.add_argument("--window", type=float, default=None, help="half-width of the line sample")
    p.add_argument("--samples", type=int, default=None)
    common(p)
    p = sub.add_parser("hsum", help="h-sum node systems and extrapolation")
    p.add_argument("--op", choices=("pade", "diff", "int", "extrap"), default=None)
    p.add_argument("--n", type=int, help="order")
    p.add_argument("--f", default=None, help="target coefficients (op=pade)")
    p.add_argument("--h", default=None, help="base coefficients (op=pade / op=extrap value)")
    p.add_argument("--a", type=float, default=None, help="extrapolation stretch (op=extrap)")
    p.add_argument("--mu", type=int, default=None, help="iteration depth (op=extrap)")
    p.add_argument("--z", default=None, help="evaluation point (op=extrap)")
    common(p)
    p = sub.add_parser("prony", help="amplitude/frequency recovery from moments")
    p.add_argument("--s", help="comma-separated moments s_0..s_{2n-1}")
    common(p)
    p = sub.add_parser("regdiff", help="regularized differentiation nodes")
    p.add_argument("--n", type=int, help="order (at least 3)")
    p.add_argument("--p", type=float, default=None, help="regularization size")
    common(p)
    p = sub.add_parser("regextrap", help="regularized extrapolation nodes")
    p.add_argument("--a", type=float, help="stretch factor")
    p.add_argument("--n", type=int, help="order")
    p.add_argument("--p", type=float, help="regularization size (positive)")
    common(p)
    p = sub.add_parser("suite", help="run the acceptance checks")
    p.add_argument("--all", action="store_true", help="run every criterion (default)")
    p.add_argument("--criteria", default=None, help="comma-separated criterion ids")
    p.add_argument("--seed", type=int, default=None)
    common(p)
    return top


# built-in defaults, applied after any config file so precedence is
# explicit flag > config value > default
_DEFAULTS = {
    "remez": {"tol": 1e-8},
    "metrics": {"phi": float(np.pi)},
    "derivs": {"r": 1.0, "window": 50.0, "samples": 2001},
    "hsum": {"op": "diff", "mu": 1},
    "regdiff": {"p": 1.0},
    "suite": {"seed": 42},
}


_REQUIRED = {
    "pade": ("f", "n"),
    "interp": ("nodes", "values"),
    "const": ("c", "n"),
    "remez": ("c", "n"),
    "extremal": ("n",),
    "metrics": ("poles",),
    "derivs": ("poles",),
    "hsum": ("n",),
    "prony": ("s",),
    "regdiff": ("n",),
    "regextrap": ("a", "n", "p"),
    "suite": (),
}


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.config:
        try:
            with open(ns.config, "r", encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, ValueError) as exc:
            print("config error: %s" % exc, file=sys.stderr)
            return 2
        for key, value in cfg.items():
            if key == "command":
                continue
            if getattr(ns, key, None) is None:
                setattr(ns, key, value)
    for key, value in _DEFAULTS.get(ns.command, {}).items():
        if getattr(ns, key, None) is None:
            setattr(ns, key, value)
    if ns.format is None:
        ns.format = "csv"
    try:
        for name in _REQUIRED[ns.command]:
            if getattr(ns, name, None) is None:
                raise ParameterError("missing required parameter --%s" % name)
        return _RUNNERS[ns.command](ns)
    except ParameterError as exc:
        print("parameter error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
