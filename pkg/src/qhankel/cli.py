"""Command line front end: sequences, polynomials, determinants, J-fractions,
and the named verification suite.

Output contract
---------------
* ``--format`` picks json, text, or latex; the QHANKEL_FORMAT environment
  variable overrides the default (text) when the flag is absent.
* JSON output is byte-deterministic: sorted keys, fixed separators, canonical
  value encoding from :func:`qhankel.ratcore.serialize`.
* Exit codes: 0 success, 1 computation error, 2 invalid flags, 3 an identity
  that should hold failed to.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional

import click

from .carlitz import MomentSeq, q_bernoulli_seq, q_euler_seq
from .functionals import theta_moment_seq, xi_moment_seq
from .hankel import (
    JFraction,
    HankelResult,
    closed_form_chapoton_zeng,
    closed_form_theorem1,
    closed_form_theta_det,
    closed_form_xi_det,
    det_exact,
    det_heilermann,
    det_shifted_via_favard,
    hankel_matrix,
    jfraction_expand,
    jfraction_for_eps,
    jfraction_for_theta,
    jfraction_for_xi,
)
from .orthopoly import (
    ZPoly,
    build_j_via_phi2,
    build_jtilde_via_phi2,
    build_p_via_phi2,
)
from .ratcore import PoleError, QPoly, RatFuncQ, serialize
from .verification import available_checks, run_checks

_FORMATS = ("json", "text", "latex")

_SEQ_SYMBOLS = {
    "qeuler": r"\varepsilon",
    "qbernoulli": r"\beta",
    "theta": r"\Theta",
    "xi": r"\Xi",
}


def _pick_format(fmt: Optional[str]) -> str:
    if fmt is not None:
        return fmt
    env = os.environ.get("QHANKEL_FORMAT", "").strip().lower()
    return env if env in _FORMATS else "text"


def _dumps(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _parse_at_q(raw: Optional[str]) -> Optional[Fraction]:
    if raw is None:
        return None
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"--at-q needs an exact rational, got {raw!r}")


def _value_json(v: RatFuncQ) -> dict:
    return json.loads(serialize(v))


def _rational_str(f: Fraction) -> str:
    return str(f)


def _latex_qpoly(p: QPoly) -> str:
    if p.is_zero:
        return "0"
    chunks = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            var = "q" if i == 1 else f"q^{{{i}}}"
            body = var if abs(c) == 1 else f"{abs(c)}{var}"
        chunks.append((c < 0, body))
    neg, body = chunks[0]
    text = ("-" if neg else "") + body
    for neg, body in chunks[1:]:
        text += (" - " if neg else " + ") + body
    return text


def _latex_ratfunc(v: RatFuncQ) -> str:
    if v.den.coeffs == (1,):
        return _latex_qpoly(v.num)
    return rf"\frac{{{_latex_qpoly(v.num)}}}{{{_latex_qpoly(v.den)}}}"


def _latex_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    return rf"{sign}\frac{{{abs(f.numerator)}}}{{{f.denominator}}}"


def _zpoly_terms(p: ZPoly) -> List[tuple]:
    return [(k, c) for k, c in enumerate(p.coeffs) if not c.is_zero]


def _zpoly_text(p: ZPoly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for k, c in _zpoly_terms(p):
        if k == 0:
            pieces.append(str(c))
        else:
            z = "z" if k == 1 else f"z^{k}"
            pieces.append(z if c.is_one else f"({c})*{z}")
    return " + ".join(pieces)


def _latex_zpoly(p: ZPoly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for k, c in _zpoly_terms(p):
        z = "" if k == 0 else ("z" if k == 1 else f"z^{{{k}}}")
        if not z:
            pieces.append(_latex_ratfunc(c))
        elif c.is_one:
            pieces.append(z)
        else:
            pieces.append(rf"\left({_latex_ratfunc(c)}\right){z}")
    return " + ".join(pieces)


def _resolve_seq(seq_id: str, ell: Optional[int]) -> MomentSeq:
    if seq_id in ("qeuler", "qbernoulli"):
        if ell is not None:
            raise click.UsageError(f"--ell does not apply to --id {seq_id}")
        return q_euler_seq() if seq_id == "qeuler" else q_bernoulli_seq()
    shift = 0 if ell is None else ell
    if shift < 0:
        raise click.UsageError("--ell must be >= 0")
    return theta_moment_seq(shift) if seq_id == "theta" else xi_moment_seq(shift)


_COMPUTE_ERRORS = (ValueError, ArithmeticError, OverflowError)


@click.group()
def main() -> None:
    """Exact Hankel determinant toolkit for Carlitz q-sequences."""


@main.command("seq")
@click.option(
    "--id",
    "seq_id",
    type=click.Choice(["qeuler", "qbernoulli", "theta", "xi"]),
    required=True,
    help="Which moment sequence to print.",
)
@click.option("--ell", type=int, default=None, help="Shift parameter for theta/xi.")
@click.option("--max-n", "max_n", type=click.IntRange(min=0), required=True)
@click.option("--format", "-f", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--at-q", "at_q", default=None, help="Evaluate at an exact rational q.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_seq(seq_id, ell, max_n, fmt, at_q, out) -> None:
    """Print sequence values 0..MAX_N."""
    fmt = _pick_format(fmt)
    point = _parse_at_q(at_q)
    seq = _resolve_seq(seq_id, ell)
    try:
        values = seq.prefix(max_n)
        at_point = None if point is None else [v.eval_at(point) for v in values]
    except PoleError as exc:
        raise click.ClickException(f"pole at q={point}: {exc}")
    except _COMPUTE_ERRORS as exc:
        raise click.ClickException(str(exc))

    if fmt == "json":
        payload: Dict[str, object] = {"id": seq.id, "max_n": max_n}
        if at_point is None:
            payload["values"] = [_value_json(v) for v in values]
        else:
            payload["at_q"] = str(point)
            payload["values"] = [_rational_str(f) for f in at_point]
        _emit(_dumps(payload), out)
    elif fmt == "latex":
        sym = _SEQ_SYMBOLS[seq_id]
        sup = "" if ell is None or seq_id in ("qeuler", "qbernoulli") else rf"^{{({ell})}}"
        if at_point is None:
            body = ",\\quad ".join(
                rf"{sym}{sup}_{{{n}}} = {_latex_ratfunc(v)}" for n, v in enumerate(values)
            )
        else:
            body = ",\\quad ".join(
                rf"{sym}{sup}_{{{n}}} = {_latex_fraction(f)}"
                for n, f in enumerate(at_point)
            )
        _emit(body, out)
    else:
        lines = []
        for n in range(max_n + 1):
            shown = str(values[n]) if at_point is None else _rational_str(at_point[n])
            lines.append(f"{seq.id}[{n}] = {shown}")
        _emit("\n".join(lines), out)


@main.command("poly")
@click.option(
    "--family",
    type=click.Choice(["p", "monic", "j"]),
    required=True,
    help="p: affine-normalized family; monic: monic big q-Jacobi; j: series form.",
)
@click.option("--ell", type=click.IntRange(min=0), default=0)
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--format", "-f", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--at-q", "at_q", default=None, help="Evaluate coefficients at q.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_poly(family, ell, n, fmt, at_q, out) -> None:
    """Print one orthogonal-family polynomial in z."""
    fmt = _pick_format(fmt)
    point = _parse_at_q(at_q)
    builders = {"p": build_p_via_phi2, "monic": build_jtilde_via_phi2, "j": build_j_via_phi2}
    try:
        p = builders[family](ell, n)
        coeffs_at = (
            None if point is None else [c.eval_at(point) for c in p.coeffs]
        )
    except PoleError as exc:
        raise click.ClickException(f"pole at q={point}: {exc}")
    except _COMPUTE_ERRORS as exc:
        raise click.ClickException(str(exc))

    if fmt == "json":
        payload: Dict[str, object] = {"family": family, "ell": ell, "n": n}
        if coeffs_at is None:
            payload["coeffs"] = [_value_json(c) for c in p.coeffs]
        else:
            payload["at_q"] = str(point)
            payload["coeffs"] = [_rational_str(f) for f in coeffs_at]
        _emit(_dumps(payload), out)
    elif fmt == "latex":
        if coeffs_at is None:
            _emit(_latex_zpoly(p), out)
        else:
            pieces = []
            for k, f in enumerate(coeffs_at):
                if f == 0:
                    continue
                z = "" if k == 0 else ("z" if k == 1 else f"z^{{{k}}}")
                if not z:
                    pieces.append(_latex_fraction(f))
                elif f == 1:
                    pieces.append(z)
                else:
                    pieces.append(rf"\left({_latex_fraction(f)}\right){z}")
            _emit(" + ".join(pieces) if pieces else "0", out)
    else:
        if coeffs_at is None:
            _emit(_zpoly_text(p), out)
        else:
            pieces = []
            for k, f in enumerate(coeffs_at):
                if f == 0:
                    continue
                z = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                if not z:
                    pieces.append(str(f))
                elif f == 1:
                    pieces.append(z)
                else:
                    pieces.append(f"({f})*{z}")
            _emit(" + ".join(pieces) if pieces else "0", out)


def _det_methods(
    seq_id: str, ell: Optional[int], shift: int, n: int, wanted: str
) -> Dict[str, RatFuncQ]:
    """The requested determinant method(s), keyed by method name."""
    pick = lambda m: wanted in ("all", m)  # noqa: E731
    out: Dict[str, RatFuncQ] = {}
    shift_ell = 0 if ell is None else ell
    if seq_id == "qeuler":
        if pick("bruteforce"):
            out["bruteforce"] = det_exact(hankel_matrix(q_euler_seq(), shift, n))
        if pick("closedform"):
            out["closedform"] = closed_form_theorem1(shift, n)
        if pick("heilermann"):
            if shift == 0:
                out["heilermann"] = det_heilermann(jfraction_for_eps(0), n)
            elif shift == 1:
                out["heilermann"] = det_shifted_via_favard(jfraction_for_eps(0), n)
            else:
                out["heilermann"] = det_shifted_via_favard(jfraction_for_eps(1), n)
    elif seq_id == "qbernoulli":
        if pick("bruteforce"):
            out["bruteforce"] = det_exact(hankel_matrix(q_bernoulli_seq(), 0, n))
        if pick("closedform"):
            out["closedform"] = closed_form_chapoton_zeng(n)
    elif seq_id == "theta":
        if pick("bruteforce"):
            out["bruteforce"] = det_exact(hankel_matrix(theta_moment_seq(shift_ell), 0, n))
        if pick("closedform"):
            out["closedform"] = closed_form_theta_det(shift_ell, n)
        if pick("heilermann"):
            out["heilermann"] = det_heilermann(jfraction_for_theta(shift_ell), n)
    else:
        if pick("bruteforce"):
            out["bruteforce"] = det_exact(hankel_matrix(xi_moment_seq(shift_ell), 0, n))
        if pick("closedform"):
            out["closedform"] = closed_form_xi_det(shift_ell, n)
        if pick("heilermann"):
            out["heilermann"] = det_heilermann(jfraction_for_xi(shift_ell), n)
    return out


@main.command("det")
@click.option(
    "--id",
    "seq_id",
    type=click.Choice(["qeuler", "qbernoulli", "theta", "xi"]),
    required=True,
)
@click.option("--ell", type=int, default=None, help="Shift parameter for theta/xi.")
@click.option("--shift", type=click.IntRange(0, 2), default=0)
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option(
    "--method",
    type=click.Choice(["bruteforce", "heilermann", "closedform", "all"]),
    default="all",
)
@click.option("--format", "-f", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--at-q", "at_q", default=None, help="Evaluate the result at q.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_det(seq_id, ell, shift, n, method, fmt, at_q, out) -> None:
    """Hankel determinant of a moment sequence, by one or every method."""
    fmt = _pick_format(fmt)
    point = _parse_at_q(at_q)
    if seq_id in ("qeuler", "qbernoulli") and ell is not None:
        raise click.UsageError(f"--ell does not apply to --id {seq_id}")
    if seq_id != "qeuler" and shift != 0:
        raise click.UsageError(f"--shift applies only to --id qeuler (got {shift})")
    if seq_id == "qbernoulli" and method == "heilermann":
        raise click.UsageError("no recurrence route is wired up for qbernoulli")
    if ell is not None and ell < 0:
        raise click.UsageError("--ell must be >= 0")

    try:
        values = _det_methods(seq_id, ell, shift, n, method)
    except _COMPUTE_ERRORS as exc:
        raise click.ClickException(str(exc))

    label = seq_id if ell is None or seq_id in ("qeuler", "qbernoulli") else f"{seq_id}({ell})"
    distinct = len({serialize(v) for v in values.values()})
    agree = distinct == 1

    def _shown(v: RatFuncQ):
        if point is None:
            return _value_json(v)
        return _rational_str(v.eval_at(point))

    try:
        if fmt == "json":
            if method == "all":
                payload: Dict[str, object] = {
                    "seq": label,
                    "shift": shift,
                    "n": n,
                    "results": {m: _shown(v) for m, v in sorted(values.items())},
                    "equal": agree,
                }
                if point is not None:
                    payload["at_q"] = str(point)
                _emit(_dumps(payload), out)
            else:
                result = HankelResult(label, shift, n, method, next(iter(values.values())))
                payload = result.to_json_dict()
                if point is not None:
                    payload["value"] = _rational_str(
                        next(iter(values.values())).eval_at(point)
                    )
                    payload["at_q"] = str(point)
                _emit(_dumps(payload), out)
        elif fmt == "latex":
            v = next(iter(values.values()))
            body = (
                _latex_ratfunc(v) if point is None else _latex_fraction(v.eval_at(point))
            )
            _emit(rf"\det H^{{({shift})}}_{{{n}}} = {body}", out)
        else:
            lines = []
            for m, v in sorted(values.items()):
                shown = str(v) if point is None else _rational_str(v.eval_at(point))
                lines.append(f"{label} shift={shift} n={n} {m} = {shown}")
            if method == "all":
                lines.append("agree" if agree else "MISMATCH")
            _emit("\n".join(lines), out)
    except PoleError as exc:
        raise click.ClickException(f"pole at q={point}: {exc}")

    if method == "all" and not agree:
        click.echo("determinant methods disagree", err=True)
        sys.exit(3)


@main.command("jfrac")
@click.option(
    "--id",
    "seq_id",
    type=click.Choice(["qeuler", "theta", "xi"]),
    required=True,
)
@click.option("--ell", type=click.IntRange(min=0), default=0)
@click.option("--depth", type=click.IntRange(min=1), default=None, help="How many a/b coefficients to print.")
@click.option("--expand", "order", type=click.IntRange(min=0), default=None, help="Also expand the series to this order.")
@click.option("--format", "-f", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_jfrac(seq_id, ell, depth, order, fmt, out) -> None:
    """Continued-fraction data (mu0, a_n, b_n) and optional series expansion."""
    fmt = _pick_format(fmt)
    if depth is None and order is None:
        raise click.UsageError("need --depth and/or --expand")
    if seq_id == "qeuler" and ell not in (0, 1):
        raise click.UsageError("--id qeuler supports only --ell 0 or 1")

    makers = {"qeuler": jfraction_for_eps, "theta": jfraction_for_theta, "xi": jfraction_for_xi}
    try:
        jf: JFraction = makers[seq_id](ell)
        a_vals = [] if depth is None else [jf.a(k) for k in range(depth)]
        b_vals = [] if depth is None else [jf.b(k) for k in range(1, depth)]
        expansion = None if order is None else jfraction_expand(jf, order)
    except _COMPUTE_ERRORS as exc:
        raise click.ClickException(str(exc))

    label = f"{seq_id}({ell})"
    if fmt == "json":
        payload: Dict[str, object] = {"id": label, "mu0": _value_json(jf.mu0)}
        if depth is not None:
            payload["a"] = [_value_json(v) for v in a_vals]
            payload["b"] = [_value_json(v) for v in b_vals]
        if expansion is not None:
            payload["expansion"] = [_value_json(v) for v in expansion]
        _emit(_dumps(payload), out)
    elif fmt == "latex":
        parts = [rf"\mu_0 = {_latex_ratfunc(jf.mu0)}"]
        parts += [rf"a_{{{k}}} = {_latex_ratfunc(v)}" for k, v in enumerate(a_vals)]
        parts += [rf"b_{{{k + 1}}} = {_latex_ratfunc(v)}" for k, v in enumerate(b_vals)]
        if expansion is not None:
            parts += [
                rf"\mu_{{{k}}} = {_latex_ratfunc(v)}" for k, v in enumerate(expansion)
            ]
        _emit(",\\quad ".join(parts), out)
    else:
        lines = [f"{label} mu0 = {jf.mu0}"]
        lines += [f"a[{k}] = {v}" for k, v in enumerate(a_vals)]
        lines += [f"b[{k + 1}] = {v}" for k, v in enumerate(b_vals)]
        if expansion is not None:
            lines += [f"series[{k}] = {v}" for k, v in enumerate(expansion)]
        _emit("\n".join(lines), out)


@main.command("verify")
@click.option("--max-n", "max_n", type=click.IntRange(min=0), default=5)
@click.option("--only", default=None, help="Run only checks whose name starts with this prefix.")
@click.option("--format", "-f", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_verify(max_n, only, fmt, out) -> None:
    """Run the named identity checks and report pass/fail per check."""
    fmt = _pick_format(fmt)
    if only is not None and not any(n.startswith(only) for n in available_checks()):
        raise click.UsageError(
            f"--only {only!r} matches no checks; known: {', '.join(available_checks())}"
        )
    results = run_checks(max_n, only)
    all_passed = all(r.passed for r in results)

    if fmt == "json":
        payload = {
            "max_n": max_n,
            "only": only,
            "all_passed": all_passed,
            "checks": [r.to_json_dict() for r in results],
        }
        _emit(_dumps(payload), out)
    else:
        lines = []
        for r in results:
            if r.passed:
                lines.append(f"PASS {r.name} ({r.cases} cases)")
            else:
                lines.append(f"FAIL {r.name}: {r.detail}")
        passed = sum(1 for r in results if r.passed)
        lines.append(f"{passed}/{len(results)} checks passed (max_n={max_n})")
        _emit("\n".join(lines), out)

    if not all_passed:
        sys.exit(3)


if __name__ == "__main__":
    main()
