"""Command-line front end: ``qosc <command> [flags]``.

Every command writes one document to stdout (or ``--out``): a ``meta``
block describing the invocation and a ``data`` block with the results.
Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
error.  See ``docs/cli_schema.md`` for the layout of each document.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .oscrep import (
    BasisWindow,
    RepSpec,
    basis_vector_residual,
    build_h0,
    build_hgamma,
    central_deviation,
    commutation_residual,
    commutator_with_center,
    verify_ordering_identity,
)
from .qcore import (
    DomainError,
    QoscError,
    QParams,
    SeriesPolicy,
    q_bracket,
    q_factorial_lambda,
    q_pochhammer,
)
from .qfunc import big_E_q, convergence_class, e_q, e_q_product, exp_q_lambda
from .qhermite import (
    eigendecompose,
    hermite_sequence,
    jacobi_from_moments,
    jacobi_matrix,
    measure_moments,
    moment_discrepancy,
    orthonormality_check,
    recurrence_coefficients,
)
from .qmeasure import jackson_integral, jackson_moment, resolution_of_unity_diag
from .qstates import (
    TruncationWarning,
    coherent_state,
    eigen_residual,
    generating_vector,
    hgamma_creation_coherent,
    norm_squared,
    overlap,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("all", "algebra", "exponentials", "measure", "hermite", "states")
EXPRS = ("bracket", "factorial", "eq", "Eq", "exp_lambda", "pochhammer")


class UsageError(QoscError):
    pass


# ---------------------------------------------------------------- output


def _plain(v):
    """Convert numpy scalars and containers into JSON-ready Python values."""
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, np.ndarray):
        return [_plain(x) for x in v.tolist()]
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, (complex, np.complexfloating)):
        return {"re": float(v.real), "im": float(v.imag)}
    return v


def emit_json(doc):
    """Serialize a document; floats use the shortest round-trip repr."""
    return json.dumps(_plain(doc), indent=2, sort_keys=False) + "\n"


def parse_json(text):
    return json.loads(text)


def _csv_cell(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def emit_csv(doc):
    """Metadata as ``# key: value`` comment lines, then the primary table."""
    doc = _plain(doc)
    buf = io.StringIO()
    for k, v in doc["meta"].items():
        buf.write(f"# {k}: {json.dumps(v, separators=(',', ':'))}\n")
    if "error" in doc:
        buf.write(f"# error: {json.dumps(doc['error'], separators=(',', ':'))}\n")
    data = doc["data"]
    for k, v in data.items():
        if k not in ("columns", "rows"):
            buf.write(f"# data.{k}: {json.dumps(v, separators=(',', ':'))}\n")
    w = csv.writer(buf, lineterminator="\n")
    if "columns" in data:
        w.writerow(data["columns"])
        for row in data["rows"]:
            w.writerow([_csv_cell(c) for c in row])
    return buf.getvalue()


def table(columns, rows, **extra):
    d = {"columns": list(columns), "rows": [list(r) for r in rows]}
    d.update(extra)
    return d


# ---------------------------------------------------------------- helpers


def _params(args, need_gamma=False):
    gamma = getattr(args, "gamma", None)
    return QParams(args.q, args.lam, gamma if need_gamma else None)


def _policy(args):
    if args.eps is not None:
        return SeriesPolicy.from_env(eps_term=args.eps)
    return SeriesPolicy.from_env()


def _complex(text):
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def _value(v):
    if isinstance(v, complex) and v.imag == 0:
        return v.real
    return v


# ---------------------------------------------------------------- commands


def cmd_eval(args):
    policy = _policy(args)
    q, lam, x = args.q, args.lam, args.x
    diag = {}
    if args.expr == "bracket":
        _need(args, "n")
        value = q_bracket(args.n, q)
        identity = "[n;q] = (1-q^n)/(1-q)"
    elif args.expr == "factorial":
        _need(args, "n")
        value = q_factorial_lambda(args.n, q, lam)
        identity = "[n;q,lam]! = prod_k q^(lam(1-k)) [k;q]"
    elif args.expr == "eq":
        if 0 < q < 1 and abs(x) >= 1 / (1 - q):
            value = e_q_product(x, q, policy)
            diag["method"] = "product"
        else:
            value = e_q(x, q, policy)
            diag["method"] = "series"
        identity = "e_q(z) = sum z^n/[n;q]! = 1/((1-q)z;q)_inf"
    elif args.expr == "Eq":
        value = big_E_q(x, q, policy)
        identity = "E_q(z) = sum z^m/[m]_q!"
    elif args.expr == "exp_lambda":
        res = exp_q_lambda(x, q, lam, policy, mode=args.mode)
        value = res.value
        cls = convergence_class(q, lam)
        diag.update(
            terms=res.terms,
            converged=res.converged,
            diverging=res.diverging,
            convergence_class=cls.kind.value,
            radius=cls.radius,
        )
        identity = "exp(z;q,lam) = sum q^(lam n(n-1)/2) z^n/[n;q]!"
    else:  # pochhammer
        n = math.inf if args.n is None else args.n
        value = q_pochhammer(x, q, n, policy)
        identity = "(x;q)_n = prod_{k<n} (1 - x q^k)"
    return EXIT_OK, {
        "input": {"expr": args.expr, "q": q, "lambda": lam, "x": x, "n": args.n},
        "value": _value(value),
        "identity": identity,
        "diagnostics": diag,
    }


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name} is required for --expr {args.expr}")


def cmd_rep(args):
    if args.gamma is not None:
        p = _params(args, need_gamma=True)
        spec = RepSpec.hgamma(p, args.nmin, args.nmax)
        rep = build_hgamma(spec)
    else:
        p = _params(args)
        rep = build_h0(RepSpec.h0(p, args.dim))
    a = rep.a.entries
    idx = rep.window.indices
    rows = [[int(n), float(a[i - 1, i].real)] for i, n in enumerate(idx) if i > 0]
    return EXIT_OK, table(
        ["n", "lowering"],
        rows,
        kind=rep.kind.value,
        identity="a(lam)|n> = lowering_n |n-1>",
        commutation_residual=commutation_residual(rep),
    )


def cmd_spectrum(args):
    p = _params(args)
    meas = eigendecompose(jacobi_matrix(p, args.dim))
    rows = [
        [i, float(x), float(w), float(lw)]
        for i, (x, w, lw) in enumerate(zip(meas.nodes, meas.weights, meas.log_weights))
    ]
    return EXIT_OK, table(
        ["i", "node", "weight", "log_weight"],
        rows,
        identity="J = a(lam) + a_dagger(lam); weights = (first eigenvector component)^2",
        weight_sum=math.fsum(meas.weights),
    )


def cmd_hermite(args):
    p = _params(args)
    H = hermite_sequence(args.x_real, args.nmax, p)
    return EXIT_OK, table(
        ["n", "H_n"],
        [[n, float(h)] for n, h in enumerate(H)],
        x=args.x_real,
        identity="c_n H_{n-1} + c_{n+1} H_{n+1} = x H_n, c_n = sqrt([n;q,lam])",
    )


def cmd_coherent(args):
    p = _params(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", TruncationWarning)
        st = coherent_state(args.z, p, args.dim)
    rep = build_h0(RepSpec.h0(p, args.dim))
    res = eigen_residual(rep.a, st, args.z)
    rows = [[n, float(c.real), float(c.imag), float(abs(c))] for n, c in enumerate(st.coeffs)]
    extra = {}
    if p.lam == 0 and 0 < p.q < 1:
        extra["norm_squared"] = norm_squared(st)
        extra["e_q_abs_z2"] = _value(e_q(abs(args.z) ** 2, p.q, _policy(args)))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return EXIT_OK, table(
        ["n", "re", "im", "abs"],
        rows,
        z=args.z,
        tail_mass=st.tail_mass,
        eigen_residual=res,
        identity="a(lam)|z> = z|z>, <n|z> = q^(lam n(n-1)/4) z^n/sqrt([n;q]!)",
        **extra,
    )


def cmd_moments(args):
    policy = _policy(args)
    rows = []
    for n in range(args.nmax + 1):
        jm = jackson_moment(n, args.q, policy)
        target = q_factorial_lambda(n, args.q, 0.0)
        rows.append([n, jm, target, abs(jm / target - 1)])
    return EXIT_OK, table(
        ["n", "jackson", "target", "rel_err"],
        rows,
        identity="int_0^{1/(1-q)} x^n / e_q(qx) d_qx = [n;q]!",
    )


# ---------------------------------------------------------------- verify


def _check(name, identity, residual, tol):
    return {
        "name": name,
        "identity": identity,
        "residual": float(residual),
        "tolerance": float(tol),
        "pass": bool(residual <= tol),
    }


def _suite_algebra(args):
    checks, skipped = [], []
    p = _params(args)
    for D in (args.dim, 2 * args.dim):
        rep = build_h0(RepSpec.h0(p, D))
        checks.append(
            _check(
                f"commutation H0 D={D}",
                "a(lam)a+(lam) - q^(1-lam) a+(lam)a(lam) = q^(-lam N)",
                commutation_residual(rep),
                1e-12,
            )
        )
    rep = build_h0(RepSpec.h0(p, args.dim))
    for m in range(1, 6):
        checks.append(
            _check(
                f"ordering m={m}",
                "a (a+)^m = (p a+)^m a + (p a+)^(m-1) r^N [m; r/p]",
                verify_ordering_identity(rep, m),
                1e-12,
            )
        )
    checks.append(
        _check(
            "basis vectors",
            "(a+)^n |0> = sqrt([n;q,lam]!) |n>",
            basis_vector_residual(rep, min(args.dim - 1, 20)),
            1e-12,
        )
    )
    if 0 < args.q < 1:
        p0 = QParams(args.q, 0.0)
        rep0 = build_h0(RepSpec.h0(p0, min(args.dim, 16)), precision="extended")
        checks.append(
            _check(
                "central element H0",
                "q^(-N)([N] - a+a) = 0 on H0",
                central_deviation(rep0)[0],
                1e-13,
            )
        )
        gc = p0.gamma_c
        gammas = [args.gamma] if args.gamma is not None else [gc, gc + 1, 3 * gc]
        for g in gammas:
            pg = QParams(args.q, 0.0, g)
            repg = build_hgamma(RepSpec.hgamma(pg, args.nmin, args.nmax), "extended")
            dev, off = central_deviation(repg)
            checks.append(
                _check(
                    f"central element Hgamma gamma={g!r}",
                    "q^(-N)([N] - a+a) = -gamma on Hgamma",
                    max(dev, off),
                    1e-12,
                )
            )
            checks.append(
                _check(
                    f"commutation Hgamma gamma={g!r}",
                    "a a+ - q a+ a = 1",
                    commutation_residual(build_hgamma(RepSpec.hgamma(pg, args.nmin, args.nmax))),
                    1e-12,
                )
            )
    else:
        skipped.append(
            {"name": "Hgamma checks", "reason": f"Hgamma modules need 0 < q < 1, got q={args.q!r}"}
        )
    return checks, skipped


def _suite_exponentials(args):
    checks, skipped = [], []
    policy = _policy(args)
    q = args.q
    if 0 < q < 1:
        worst = 0.0
        for x in np.linspace(0, 0.95 / (1 - q), 50):
            worst = max(worst, abs(e_q(x, q, policy) / e_q_product(x, q, policy) - 1))
        checks.append(
            _check("series vs product", "sum z^n/[n;q]! = 1/((1-q)z;q)_inf", worst, 1e-12)
        )
        w1 = w2 = 0.0
        for r in np.linspace(0, 5, 11):
            for t in np.linspace(0, 2 * np.pi, 13):
                z = r * np.exp(1j * t)
                a = exp_q_lambda(z, q, 1.0, policy).value
                b = e_q(z, 1 / q, policy)
                w1 = max(w1, abs(a - b) / e_q(r, 1 / q, policy).real)
                c = exp_q_lambda(z, q * q, 0.5, policy).value
                d = big_E_q(z, q, policy)
                w2 = max(w2, abs(c - d) / big_E_q(r, q, policy).real)
        checks.append(_check("contracted family", "exp(z;q,1) = e_{1/q}(z)", w1, 1e-12))
        checks.append(_check("symmetric family", "exp(z;q^2,1/2) = E_q(z)", w2, 1e-12))
        refused = 0
        zs = [1e-3, 0.5, -1.0, 2j, 10.0]
        for z in zs:
            try:
                exp_q_lambda(z, q, -0.5, policy)
            except QoscError:
                refused += 1
        checks.append(
            _check(
                "zero radius refused",
                "exp(z;q,lam<0) has zero radius of convergence",
                len(zs) - refused,
                0,
            )
        )
        formal = exp_q_lambda(1.0, q, -0.5, policy, mode="formal")
        checks.append(
            _check("formal mode flags growth", "terms of exp(z;q,lam<0) grow", 0 if formal.diverging else 1, 0)
        )
    else:
        skipped.append({"name": "exponential checks", "reason": f"need 0 < q < 1, got q={q!r}"})
    return checks, skipped


def _suite_measure(args):
    checks, skipped = [], []
    q = args.q
    if not 0 < q < 1:
        skipped.append({"name": "Jackson checks", "reason": f"need 0 < q < 1, got q={q!r}"})
        return checks, skipped
    policy = _policy(args)
    for n in range(13):
        checks.append(
            _check(
                f"resolution of unity n={n}",
                "([n;q]!)^-1 int_0^{1/(1-q)} x^n / e_q(qx) d_qx = 1",
                abs(resolution_of_unity_diag(n, q, policy) - 1),
                1e-10,
            )
        )
    worst = 0.0
    for n in range(6):
        exact = 1.0 / q_bracket(n + 1, q)
        worst = max(worst, abs(jackson_integral(lambda x: x**n, 1.0, q, policy) - exact) / exact)
    checks.append(_check("Jackson power closed form", "int_0^1 x^n d_qx = 1/[n+1;q]", worst, 1e-13))
    return checks, skipped


def _suite_hermite(args):
    checks = []
    p = _params(args)
    D = args.dim
    J = jacobi_matrix(p, D)
    meas = eigendecompose(J)
    checks.append(_check("weights sum", "sum_i w_i = 1", abs(math.fsum(meas.weights) - 1), 1e-13))
    kmax = min(16, 2 * D - 2)
    checks.append(
        _check("quadrature moments", "sum_i w_i x_i^k = <0|J^k|0>", moment_discrepancy(meas, J, kmax), 1e-9)
    )
    mmax = min(40, D - 1)
    checks.append(
        _check("orthonormality", "sum_i w_i H_m(x_i) H_n(x_i) = delta_mn", orthonormality_check(p, D, mmax), 1e-9)
    )
    n_out = min(13, D // 2)
    try:
        rec = jacobi_from_moments(measure_moments(meas, 2 * n_out), n_out)
        c = recurrence_coefficients(p, n_out - 1)
        err = float(np.max(np.abs(rec.offdiag - c) / c))
    except QoscError as exc:
        err = math.inf
        checks.append({**_check("moment round trip", "c_n from moments", err, 1e-8), "note": str(exc)})
    else:
        checks.append(_check("moment round trip", "moments -> c_n = sqrt([n;q,lam])", err, 1e-8))
    return checks, []


def _suite_states(args):
    checks, skipped = [], []
    p = _params(args)
    q = args.q
    policy = _policy(args)
    if q < 1:
        cls = convergence_class(q, p.lam)
        if cls.kind.value == "zero_radius":
            skipped.append({"name": "coherent states", "reason": "lambda < 0: not normalizable"})
        else:
            zabs = 0.9 * math.sqrt(cls.radius) if math.isfinite(cls.radius) else 3.0
            rep = build_h0(RepSpec.h0(p, 40))
            worst = 0.0
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", TruncationWarning)
                for t in np.linspace(0, 2 * np.pi, 7):
                    z = zabs * np.exp(1j * t)
                    worst = max(worst, eigen_residual(rep.a, coherent_state(z, p, 40), z))
            checks.append(_check("coherent eigen-residual D=40", "a(lam)|z> = z|z>", worst, 1e-12))
        if p.lam == 0:
            zz = 0.9 / math.sqrt(1 - q)
            w, z = zz * np.exp(0.4j), zz * np.exp(-1.1j)
            D = 600
            sw, sz = coherent_state(w, p, D), coherent_state(z, p, D)
            checks.append(
                _check(
                    "coherent norm",
                    "<z|z> = e_q(|z|^2)",
                    abs(norm_squared(sz) / e_q(abs(z) ** 2, q, policy).real - 1),
                    1e-12,
                )
            )
            checks.append(
                _check(
                    "coherent overlap",
                    "<w|z> = e_q(conj(w) z)",
                    abs(overlap(sw, sz) / e_q(np.conj(w) * z, q, policy) - 1),
                    1e-12,
                )
            )
        gamma = args.gamma if args.gamma is not None else 3.0
        pg = QParams(q, 0.0, gamma)
        win = BasisWindow(-30, 60)
        zs = [0.1, 0.5, 1.0, 1.5, 2.0, 5.0, 10.0, 20.0]
        verdicts = [hgamma_creation_coherent(z, pg, win).normalizable for z in zs]
        mono = all(not a or b for a, b in zip(verdicts, verdicts[1:]))
        wide = [hgamma_creation_coherent(z, pg, BasisWindow(-60, 120)).normalizable for z in zs]
        stable = all(not a or b for a, b in zip(verdicts, wide))
        checks.append(_check("creation verdict monotone", "normalizable at |z| => at larger |z|", 0 if mono else 1, 0))
        checks.append(_check("creation verdict window-stable", "widening keeps normalizable", 0 if stable else 1, 0))
        repg = build_hgamma(RepSpec.hgamma(pg, win.n_min, win.n_max))
        worst = 0.0
        for z, ok in zip(zs, verdicts):
            if ok:
                st = hgamma_creation_coherent(z, pg, win).state
                worst = max(worst, eigen_residual(repg.a_dagger, st, z, exclude="first"))
        checks.append(_check("creation eigen-residual", "a+|psi> = z|psi>", worst, 1e-10))
    else:
        skipped.append({"name": "coherent and Hgamma checks", "reason": f"need 0 < q < 1, got q={q!r}"})
    D = 24
    x = float(eigendecompose(jacobi_matrix(p, D)).nodes[-1])
    gv = generating_vector(x, 12, p, D)
    checks.append(_check("generating difference equation", "[n+1;q,lam] w_{n+1} + w_{n-1} = 2x w_n", gv.max_residual, 1e-10))
    return checks, skipped


_SUITES = {
    "algebra": _suite_algebra,
    "exponentials": _suite_exponentials,
    "measure": _suite_measure,
    "hermite": _suite_hermite,
    "states": _suite_states,
}


def cmd_verify(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks, skipped = [], []
    for name in names:
        c, s = _SUITES[name](args)
        checks += [{"suite": name, **x} for x in c]
        skipped += [{"suite": name, **x} for x in s]
    ok = all(c["pass"] for c in checks)
    cols = ["suite", "name", "identity", "residual", "tolerance", "pass"]
    rows = [[c[k] for k in cols] for c in checks]
    return (EXIT_OK if ok else EXIT_FAIL), table(cols, rows, skipped=skipped, all_pass=ok)


# ---------------------------------------------------------------- parser


COMMANDS = {
    "eval": cmd_eval,
    "rep": cmd_rep,
    "spectrum": cmd_spectrum,
    "hermite": cmd_hermite,
    "coherent": cmd_coherent,
    "moments": cmd_moments,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="qosc", description="q-deformed oscillator numerics")
    parser.add_argument("--version", action="version", version=f"qosc {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=float, default=0.5, help="deformation parameter (default 0.5)")
    common.add_argument("--lambda", dest="lam", type=float, default=0.0, help="generator family")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--eps", type=float, default=None, help="series term tolerance")
    common.add_argument("--stamp", action="store_true", help="add a UTC timestamp to meta")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a scalar function")
    p.add_argument("--expr", choices=EXPRS, required=True)
    p.add_argument("--x", type=_complex, default=0j)
    p.add_argument("--n", type=_nonneg_int, default=None)
    p.add_argument("--mode", choices=("strict", "formal"), default="strict")

    p = sub.add_parser("rep", parents=[common], help="matrix elements of a representation")
    p.add_argument("--dim", type=_positive_int, default=16)
    p.add_argument("--gamma", type=float, default=None, help="build Hgamma instead of H0")
    p.add_argument("--nmin", type=int, default=-20)
    p.add_argument("--nmax", type=int, default=20)

    p = sub.add_parser("spectrum", parents=[common], help="nodes and weights of the coordinate matrix")
    p.add_argument("--dim", type=_positive_int, default=16)

    p = sub.add_parser("hermite", parents=[common], help="q-Hermite values at x")
    p.add_argument("--x", dest="x_real", type=float, required=True)
    p.add_argument("--nmax", type=_nonneg_int, default=10)

    p = sub.add_parser("coherent", parents=[common], help="coherent-state coefficients")
    p.add_argument("--z", type=_complex, required=True)
    p.add_argument("--dim", type=_positive_int, default=40)

    p = sub.add_parser("moments", parents=[common], help="Jackson moments vs [n;q]!")
    p.add_argument("--nmax", type=_nonneg_int, default=12)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--dim", type=_positive_int, default=32)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--nmin", type=int, default=-20)
    p.add_argument("--nmax", type=int, default=20)
    return parser


def _meta(args):
    flags = {
        k: _plain(v)
        for k, v in sorted(vars(args).items())
        if k not in ("command", "format", "out", "stamp")
    }
    meta = {"tool": "qosc", "version": __version__, "command": args.command, "flags": flags}
    if args.stamp:
        meta["created"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return meta


def _write(args, doc):
    text = emit_json(doc) if args.format == "json" else emit_csv(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, data = COMMANDS[args.command](args)
    except (QoscError, ValueError, OverflowError, ZeroDivisionError) as exc:
        err = {"type": type(exc).__name__, "message": str(exc)}
        _write(args, {"meta": _meta(args), "data": {}, "error": err})
        print(f"qosc: error: {err['message']}", file=sys.stderr)
        return EXIT_USAGE
    _write(args, {"meta": _meta(args), "data": data})
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
