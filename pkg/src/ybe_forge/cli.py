"""Command-line surface.

Exit codes: 0 success, 2 verification/computation failure (degenerate form,
pole proximity, failed suite), 3 invalid input.  Documents go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import cuspidal, elliptic, stolin, verify
from .document import (
    document_from_tensor,
    dumps,
    render_latex,
    render_text,
)

EXIT_FAIL = 2
EXIT_BADINPUT = 3


def _fail(message: str, code: int):
    click.echo("error: %s" % message, err=True)
    sys.exit(code)


def _parse_rat(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        _fail("%s must be an exact rational like 3/4, got %r" % (name, text), EXIT_BADINPUT)


def _parse_complex(text: str, name: str) -> complex:
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        _fail("%s must be a complex number like 0.3+1i, got %r" % (name, text), EXIT_BADINPUT)


def _emit(tensor, provenance: dict, fmt: str):
    doc = document_from_tensor(tensor, provenance)
    if fmt == "json":
        click.echo(dumps(doc))
    elif fmt == "latex":
        click.echo(render_latex(doc))
    else:
        click.echo(render_text(doc))


@click.group()
def main():
    """Exact and numeric classical r-matrices for sl(n): construction,
    serialization, and verification."""


@main.command()
@click.argument("e", type=int)
@click.argument("d", type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "both"]), default="both")
def jmatrix(e, d, fmt):
    """Print the recursive 0/1 matrix for the coprime pair (E, D)."""
    try:
        j = cuspidal.build_j(e, d)
    except cuspidal.NonCoprimeError as exc:
        _fail("not coprime: %s" % exc, EXIT_BADINPUT)
    if fmt in ("text", "both"):
        for row in j.matrix:
            click.echo(" ".join(str(v) for v in row))
    if fmt in ("json", "both"):
        click.echo(json.dumps({"e": e, "d": d, "matrix": [list(r) for r in j.matrix]}))


@main.command()
@click.argument("n", type=int)
@click.argument("d", type=int)
@click.option("--x", required=True, help="exact rational, e.g. 1/3")
@click.option("--y", required=True, help="exact rational, distinct from --x")
@click.option("--format", "fmt", type=click.Choice(["json", "latex", "text"]), default="json")
def rational(n, d, x, y, fmt):
    """Geometric-pipeline solution for (N, D) at exact points."""
    x_val = _parse_rat(x, "--x")
    y_val = _parse_rat(y, "--y")
    if not 0 < d < n:
        _fail("need 0 < d < n", EXIT_BADINPUT)
    if x_val == y_val:
        _fail("need x != y", EXIT_BADINPUT)
    e = n - d
    try:
        tensor = cuspidal.assemble_r(e, d, x_val, y_val)
    except cuspidal.NonCoprimeError as exc:
        _fail(str(exc), EXIT_BADINPUT)
    provenance = {
        "pipeline": "cuspidal",
        "e": e,
        "d": d,
        "x": str(x_val),
        "y": str(y_val),
    }
    _emit(tensor, provenance, fmt)


def _load_k_matrix(spec: str, e: int, d: int):
    if spec == "default":
        return stolin.j_matrix_rat(e, d), "J(%d,%d)" % (e, d)
    if spec == "neg-j":
        return stolin.neg_j_matrix(e, d), "-J(%d,%d)" % (e, d)
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            rows = json.load(fh)
        K = tuple(tuple(Fraction(str(v)) for v in row) for row in rows)
    except (OSError, ValueError) as exc:
        _fail("cannot read K matrix from %r: %s" % (spec, exc), EXIT_BADINPUT)
    n = e + d
    if len(K) != n or any(len(r) != n for r in K):
        _fail("K matrix must be %d x %d" % (n, n), EXIT_BADINPUT)
    return K, "file:%s" % spec


@main.command("stolin")
@click.argument("n", type=int)
@click.argument("e", type=int)
@click.option("--k-matrix", "kspec", default="default",
              help="default | neg-j | path to a JSON matrix of rationals")
@click.option("--x", required=True)
@click.option("--y", required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "latex", "text"]), default="json")
def stolin_cmd(n, e, kspec, x, y, fmt):
    """Parabolic-pipeline solution for the triple with parabolic index E."""
    x_val = _parse_rat(x, "--x")
    y_val = _parse_rat(y, "--y")
    if not 0 < e < n:
        _fail("need 0 < e < n", EXIT_BADINPUT)
    if x_val == y_val:
        _fail("need x != y", EXIT_BADINPUT)
    d = n - e
    K, k_name = _load_k_matrix(kspec, e, d)
    try:
        tensor = stolin.assemble_stolin_r(e, d, K, x_val, y_val)
    except stolin.DegenerateFormError as exc:
        _fail("Frobenius form degenerate: %s" % exc, EXIT_FAIL)
    except cuspidal.NonCoprimeError as exc:
        _fail(str(exc), EXIT_BADINPUT)
    provenance = {
        "pipeline": "stolin",
        "e": e,
        "d": d,
        "k_matrix": k_name,
        "x": str(x_val),
        "y": str(y_val),
    }
    _emit(tensor, provenance, fmt)


@main.command("elliptic")
@click.argument("n", type=int)
@click.argument("d", type=int)
@click.option("--tau", required=True, help="modulus with positive imaginary part, e.g. 0.3+1i")
@click.option("--x", required=True)
@click.option("--y", required=True)
@click.option("--terms", type=int, default=60, help="theta series truncation")
def elliptic_cmd(n, d, tau, x, y, terms):
    """Torus solution for (N, D) at complex points; JSON document output."""
    tau_val = _parse_complex(tau, "--tau")
    x_val = _parse_complex(x, "--x")
    y_val = _parse_complex(y, "--y")
    try:
        ctx = elliptic.ThetaContext(tau=tau_val, terms=terms)
    except ValueError as exc:
        _fail(str(exc), EXIT_BADINPUT)
    try:
        tensor = elliptic.belavin_r(n, d, ctx, x_val, y_val)
    except elliptic.PoleProximityError as exc:
        _fail("pole: %s" % exc, EXIT_FAIL)
    except ValueError as exc:
        _fail(str(exc), EXIT_BADINPUT)
    provenance = {
        "pipeline": "elliptic",
        "n": n,
        "d": d,
        "tau": [tau_val.real, tau_val.imag],
        "x": [x_val.real, x_val.imag],
        "y": [y_val.real, y_val.imag],
        "terms": terms,
        "difference_convention": elliptic.v_sign_convention(),
        "tolerance": ctx.tol,
    }
    _emit(tensor, provenance, "json")


@main.command("verify")
@click.option("--suite", type=click.Choice(list(verify.SUITES)), default="all")
@click.option("--n-max", type=int, default=4)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--inject-sign-flip", is_flag=True, hidden=True)
def verify_cmd(suite, n_max, fmt, inject_sign_flip):
    """Run a verification suite; exit 0 iff every check passes."""
    if n_max < 2:
        _fail("--n-max must be at least 2", EXIT_BADINPUT)
    report = verify.run_suite(suite, n_max=n_max, inject_sign_flip=inject_sign_flip)
    if fmt == "json":
        click.echo(verify.report_json(report))
    else:
        click.echo(report.render_text())
    if not report.passed:
        sys.exit(EXIT_FAIL)


if __name__ == "__main__":
    main()
