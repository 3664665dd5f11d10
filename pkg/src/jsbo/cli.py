"""Command line surface.

Emits kernels and operators, runs the verification suites, and serializes
everything as deterministic JSON: dictionary keys are sorted, term orders
are canonical, so a fixed flag set (and seed) reproduces output byte for
byte.  Exit status is 0 on success, 1 when a verification fails, 2 on
usage errors; failures land on stderr as one-line JSON diagnostics.
"""

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import click

from .domains import DomainSpec
from .expansions import ExpansionMismatch, expand_h_power
from .identities import SUITE, IdentityFailure, run_identity
from .operators import (holographic, display_matches_oracle, intertwine_check,
                        mult_weight_solve, normal_weight_solve, rc_tensor,
                        tensor_intertwine_check)
from .pairs import CLI_NAMES, UnsupportedPairError, make_pair
from .param import parse_fraction
from .poly import MultiPoly, var_name
from .residues import ResidueOrderError, pole_order, residue_operator
from .spaces import jack_phi_tilde, repkernel_K, trace_coordinate_poly

TENSOR_PAIRS = {"tensor-sl2": "sym:1", "tensor-sp2": "sym:2"}


class VerifyFailed(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_lambda(text):
    if text is None or text == "symbolic":
        return None
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError("cannot parse parameter value %r" % text)


def _parse_tuple(text):
    try:
        return tuple(int(t) for t in text.split(",") if t != "")
    except ValueError:
        raise click.UsageError("expected a comma separated integer "
                               "list, got %r" % text)


def _parse_domain(text):
    try:
        return DomainSpec.parse(text)
    except (ValueError, AssertionError):
        raise click.UsageError("cannot parse domain %r (try sym:2, "
                               "mat:2x3, skew:4, quadric:3)" % text)


def _threads():
    try:
        return max(1, int(os.environ.get("JSBO_THREADS", "1")))
    except ValueError:
        return 1


@click.group()
def cli():
    """Exact calculus of bounded symmetric domains."""


# -- domains ----------------------------------------------------------------

@cli.group()
def domains():
    """Inspect the supported domain kinds."""


@domains.command("list")
@click.option("--out", default=None, type=click.Path())
def domains_list(out):
    """Table of kinds with their structure constants at desk sizes."""
    rows = [("kind", "example", "rank", "dim", "mult", "genus", "eps")]
    for text in ("sym:2", "mat:2x2", "skew:4", "quadric:3"):
        dom = _parse_domain(text)
        rows.append((dom.kind.lower(), text, str(dom.rank), str(dom.dim),
                     str(dom.mult_d), str(dom.genus), str(dom.eps)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
             for r in rows]
    legend = ("sym:r real rank r; mat:qxs rank min(q,s); skew:s rank "
              "floor(s/2); quadric:n rank 2 (n >= 2)")
    _emit("\n".join(lines) + "\n" + legend + "\n", out)


# -- kernels and expansions -------------------------------------------------

@cli.command("kernel-expand")
@click.option("--domain", "domain_text", required=True)
@click.option("--degree", type=int, required=True)
@click.option("--lambda", "lam_text", default="symbolic")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", default=None, type=click.Path())
def kernel_expand(domain_text, degree, lam_text, as_json, out):
    """Expand the inverse generic norm power, dual-route checked."""
    dom = _parse_domain(domain_text)
    lam = _parse_lambda(lam_text)
    series = expand_h_power(dom, degree, lam=lam)
    if as_json:
        _emit(_dumps(series.to_json()), out)
        return
    lines = ["%s to degree %d, parameter %s"
             % (dom.name(), degree, lam_text)]
    for label, coeff, p in series.terms:
        lines.append("m=%s  coeff %s  kernel %r"
                     % (list(label), coeff, p))
    _emit("\n".join(lines) + "\n", out)


@cli.command("schur")
@click.option("--d", "mult_d", type=int, required=True)
@click.option("--m", "m_text", required=True)
@click.option("--rank", type=int, default=None)
@click.option("--out", default=None, type=click.Path())
def schur(mult_d, m_text, rank, out):
    """Normalized spherical polynomial in power sum coordinates."""
    m = _parse_tuple(m_text)
    r = rank if rank is not None else max(len(m), 1)
    if len(m) > r:
        raise click.UsageError("partition longer than the rank")
    f = jack_phi_tilde(m, mult_d, r)
    tp = trace_coordinate_poly(f, r)
    rows = []
    for key in sorted(tp.terms, key=lambda k: (sum(e for _, e in k), k)):
        pw = {"p%d" % v[2]: e for v, e in key}
        rows.append({"coeff": str(tp.terms[key]), "powers": pw})
    _emit(_dumps({"d": mult_d, "m": list(m), "rank": r,
                  "powersum_terms": rows}), out)


@cli.command("kernel")
@click.option("--domain", "domain_text", required=True)
@click.option("--m", "m_text", required=True)
@click.option("--out", default=None, type=click.Path())
def kernel(domain_text, m_text, out):
    """Reproducing kernel of one polynomial type as JSON."""
    dom = _parse_domain(domain_text)
    m = _parse_tuple(m_text)
    if len(m) > dom.rank:
        raise click.UsageError("partition longer than the domain rank")
    km = repkernel_K(dom, m)
    _emit(_dumps({"domain": dom.name(), "m": list(m),
                  "kernel": km.to_json()}), out)


# -- operators --------------------------------------------------------------

def _build_operator(pair_name, sizes, k, l, lam, mu, m_budget):
    if pair_name in TENSOR_PAIRS:
        dom = _parse_domain(TENSOR_PAIRS[pair_name])
        return rc_tensor(dom, lam, mu, k)
    if pair_name not in CLI_NAMES:
        raise click.UsageError("unknown pair %r; choose from %s"
                               % (pair_name,
                                  sorted(CLI_NAMES) + sorted(TENSOR_PAIRS)))
    if not sizes:
        raise click.UsageError("--sizes is required for this pair")
    pair = make_pair(pair_name, sizes, k, l)
    return holographic(pair, m_budget, lam=lam)


@cli.group()
def operator():
    """Closed-form operator families."""


@operator.command("emit")
@click.option("--pair", "pair_name", required=True)
@click.option("--sizes", "sizes_text", default="")
@click.option("--k", type=int, default=0)
@click.option("--l", type=int, default=0)
@click.option("--lambda", "lam_text", default="symbolic")
@click.option("--mu", "mu_text", default="symbolic")
@click.option("--m-budget", type=int, default=3, show_default=True,
              help="partition weight truncation of the series")
@click.option("--format", "fmt", type=click.Choice(["json", "latex"]),
              default="json", show_default=True)
@click.option("--out", default=None, type=click.Path())
def operator_emit(pair_name, sizes_text, k, l, lam_text, mu_text, m_budget,
                  fmt, out):
    """Emit one operator, symbolic in the parameter unless evaluated."""
    sizes = _parse_tuple(sizes_text) if sizes_text else ()
    lam = _parse_lambda(lam_text)
    mu = _parse_lambda(mu_text)
    op = _build_operator(pair_name, sizes, k, l, lam, mu, m_budget)
    if fmt == "latex":
        _emit(op.latex() + "\n", out)
    else:
        _emit(_dumps(op.to_json()), out)


# -- verification -----------------------------------------------------------

@cli.group()
def verify():
    """Machine verification suites."""


@verify.command("jordan")
@click.option("--domain", "domain_text", required=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--points", type=int, default=100, show_default=True)
@click.option("--out", default=None, type=click.Path())
def verify_jordan(domain_text, seed, points, out):
    """Quadratic-map identity suite at seeded rational points."""
    dom = _parse_domain(domain_text)
    workers = min(_threads(), len(SUITE))
    try:
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futs = {name: pool.submit(run_identity, dom, name,
                                          seed, points)
                        for name in SUITE}
                counts = {name: futs[name].result() for name in SUITE}
        else:
            counts = {name: run_identity(dom, name, seed, points)
                      for name in SUITE}
    except IdentityFailure as e:
        raise VerifyFailed(str(e))
    _emit(_dumps({"domain": dom.name(), "seed": seed, "points": points,
                  "identities": counts, "status": "ok"}), out)


@verify.command("expansion")
@click.option("--domain", "domain_text", required=True)
@click.option("--degree", type=int, required=True)
@click.option("--lambda", "lam_text", default="symbolic")
@click.option("--out", default=None, type=click.Path())
def verify_expansion(domain_text, degree, lam_text, out):
    """Dual-route check of the inverse norm power expansion."""
    dom = _parse_domain(domain_text)
    try:
        series = expand_h_power(dom, degree, lam=_parse_lambda(lam_text))
    except ExpansionMismatch as e:
        raise VerifyFailed(str(e))
    _emit(_dumps({"domain": dom.name(), "degree": degree,
                  "parameter": lam_text, "components": len(series.terms),
                  "status": "ok"}), out)


@verify.command("intertwine")
@click.option("--pair", "pair_name", required=True)
@click.option("--sizes", "sizes_text", default="")
@click.option("--k", type=int, default=0)
@click.option("--l", type=int, default=0)
@click.option("--max-degree", type=int, default=3, show_default=True)
@click.option("--lambda", "lam_text", default="symbolic")
@click.option("--mu", "mu_text", default="symbolic")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--out", default=None, type=click.Path())
def verify_intertwine(pair_name, sizes_text, k, l, max_degree, lam_text,
                      mu_text, seed, out):
    """Equivariance checks for one operator family.

    Rational parameters check the operator against both group actions
    monomial by monomial.  The symbolic mode compares the closed form
    against the kernel-expansion route exactly in the parameter (tensor
    pairs intertwine symbolically as such).
    """
    sizes = _parse_tuple(sizes_text) if sizes_text else ()
    lam = _parse_lambda(lam_text)
    mu = _parse_lambda(mu_text)
    payload = {"pair": pair_name, "max_degree": max_degree,
               "parameter": lam_text, "seed": seed, "status": "ok"}
    try:
        if pair_name in TENSOR_PAIRS:
            dom = _parse_domain(TENSOR_PAIRS[pair_name])
            payload["checks"] = tensor_intertwine_check(
                dom, k, lam, mu, max_degree)
        elif pair_name == "u-normal":
            payload["checks"] = _verify_normal(sizes, lam, max_degree)
        elif pair_name in CLI_NAMES:
            if not sizes:
                raise click.UsageError("--sizes is required for this pair")
            pair = make_pair(pair_name, sizes, k, l)
            if lam is None:
                display_matches_oracle(pair, max(2, max_degree))
                payload["checks"] = 1
                payload["mode"] = "symbol-vs-expansion"
            else:
                payload["checks"] = intertwine_check(pair, lam, max_degree)
                payload["mode"] = "equivariance"
        else:
            raise click.UsageError(
                "unknown pair %r" % pair_name)
    except AssertionError as e:
        raise VerifyFailed(str(e))
    _emit(_dumps(payload), out)


def _verify_normal(sizes, lam, max_degree):
    """Weight solves for the jet and multiplication families."""
    if len(sizes) != 3:
        raise click.UsageError("u-normal needs --sizes q,s1,s2")
    if lam is None:
        raise click.UsageError("u-normal verification needs a rational "
                               "--lambda")
    pair = make_pair("u-normal", sizes)
    checks = 0
    for j in range(3):
        got = normal_weight_solve(pair, (j,), lam, degree=max_degree)
        if got != lam:
            raise AssertionError("jet component %d maps weight %s to %s"
                                 % (j, lam, got))
        checks += 1
    x2 = MultiPoly.var(("c", 1, 1))
    for t in range(3):
        got = mult_weight_solve(pair, x2 ** t, lam, degree=max_degree)
        if got != lam + t:
            raise AssertionError("multiplier of degree %d maps weight %s "
                                 "to %s" % (t, lam, got))
        checks += 1
    return checks


# -- residues ---------------------------------------------------------------

@cli.command("residue")
@click.option("--pair", "pair_name", required=True)
@click.option("--sizes", "sizes_text", required=True)
@click.option("--k", type=int, default=0)
@click.option("--l", type=int, default=0)
@click.option("--mu", "mu_text", required=True)
@click.option("--order", type=int, required=True)
@click.option("--m-budget", type=int, default=3, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", default=None, type=click.Path())
def residue(pair_name, sizes_text, k, l, mu_text, order, m_budget,
            as_json, out):
    """Renormalized operator at a pole of the coefficient family."""
    if pair_name not in CLI_NAMES:
        raise click.UsageError("unknown pair %r" % pair_name)
    pair = make_pair(pair_name, _parse_tuple(sizes_text), k, l)
    if pair.residue_family is None:
        raise click.UsageError("no residue family for pair %r" % pair_name)
    mu = _parse_lambda(mu_text)
    if mu is None:
        raise click.UsageError("--mu must be rational")
    nu0 = mu - k - l
    op = holographic(pair, m_budget)
    expected = pair.pole_order_expected(mu)
    structural = pole_order(op, nu0)
    if structural != expected:
        raise VerifyFailed("structural order %d at mu=%s disagrees with "
                           "the counting rule %d"
                           % (structural, mu, expected))
    try:
        res = residue_operator(op, nu0, order)
    except ResidueOrderError as e:
        raise VerifyFailed(str(e))
    payload = {"pair": pair_name, "sizes": list(pair.sizes), "k": k, "l": l,
               "mu": str(mu), "nu": str(nu0), "order": order,
               "expected_order": expected, "structural_order": structural,
               "m_budget": m_budget, "operator": res.to_json()}
    if as_json:
        _emit(_dumps(payload), out)
    else:
        _emit("pair %s mu=%s: pole order %d (budget %d); %d residue terms\n"
              % (pair_name, mu, structural, m_budget, len(res)), out)


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as e:
        return int(e.exit_code)
    except click.UsageError as e:
        sys.stderr.write(json.dumps(
            {"error": "usage", "detail": e.format_message()}) + "\n")
        return 2
    except click.ClickException as e:
        sys.stderr.write(json.dumps(
            {"error": "cli", "detail": e.format_message()}) + "\n")
        return 2
    except VerifyFailed as e:
        sys.stderr.write(json.dumps(
            {"error": "verification", "detail": str(e)}) + "\n")
        return 1
    except (UnsupportedPairError, ExpansionMismatch) as e:
        sys.stderr.write(json.dumps(
            {"error": "unsupported", "detail": str(e)}) + "\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
