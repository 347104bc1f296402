"""Command-line interface.

Exit codes: 0 success, 1 invariant violation (an internal certified check
failed, i.e. a bug), 2 undetermined (a resource cap was hit before the
answer was certified).
"""

from __future__ import annotations

import functools
import json
import sys
import time

import click

from . import __version__
from ._kernels import BACKEND_NAME
from .bounds import build_table, emit
from .cuplength import (DEFAULT_SEARCH_BUDGET, ZclResult, explicit_witness,
                        g_stabilization_probe, zcl_exact)
from .errors import InvariantViolationError, SizeLimitError, UndeterminedError
from .join_model import sample_report
from .parity import two_adic_profile
from .ring import DEFAULT_BIT_LIMIT, RingSpec
from .zero_divisors import verify_generators_lemma


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (UndeterminedError, SizeLimitError) as exc:
            click.echo(f"undetermined: {exc}", err=True)
            sys.exit(2)
        except InvariantViolationError as exc:
            click.echo(f"invariant violation: {exc}", err=True)
            sys.exit(1)
    return wrapper


def _echo_json(payload: dict) -> None:
    click.echo(json.dumps(payload, separators=(",", ":")))


def _parse_range(_ctx, _param, value: str) -> tuple[int, int]:
    lo, sep, hi = value.partition("..")
    if not sep:
        lo = hi = value
    try:
        bounds = int(lo), int(hi)
    except ValueError:
        raise click.BadParameter(f"expected A..B, got {value!r}")
    if bounds[0] > bounds[1]:
        raise click.BadParameter(f"empty range {value!r}")
    return bounds


def _zcl_payload(result: ZclResult, elapsed_ms: float) -> dict:
    return {"m": result.m, "s": result.s, "zcl": result.value,
            "method": result.method, "g": result.g,
            "witness": result.witness.as_dict(),
            "elapsed_ms": round(elapsed_ms, 3)}


@click.group()
@click.version_option(version=__version__, message=f"%(prog)s %(version)s ({BACKEND_NAME} kernel)")
def main():
    """Zero-divisor cup-lengths of (RP^m)^s and TC_s bound tables."""


@main.command()
@click.option("--m", type=int, required=True)
@_guarded
def profile(m):
    """Dyadic profile of m: trailing-ones length e, z, and sigma."""
    _echo_json(two_adic_profile(m).as_dict())


@main.group()
def zcl():
    """Zero-divisor cup-length computations."""


@zcl.command("exact")
@click.option("--m", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--max-candidates", type=int, default=DEFAULT_SEARCH_BUDGET,
              show_default=True, help="Search budget; exceeding it exits 2.")
@_guarded
def zcl_exact_cmd(m, s, max_candidates):
    """Exact cup-length by certified descending search."""
    t0 = time.perf_counter()
    result = zcl_exact(m, s, max_candidates=max_candidates)
    _echo_json(_zcl_payload(result, (time.perf_counter() - t0) * 1000))


@zcl.command("witness")
@click.option("--m", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--limit-bits", type=int, default=DEFAULT_BIT_LIMIT,
              show_default=True, help="Cap on the basis size (m+1)^s.")
@_guarded
def zcl_witness_cmd(m, s, limit_bits):
    """Closed-form lower-bound witness (no search); witness may be null."""
    t0 = time.perf_counter()
    w = explicit_witness(m, s, bit_limit=limit_bits)
    elapsed = (time.perf_counter() - t0) * 1000
    if w is None:
        _echo_json({"m": m, "s": s, "zcl": None, "method": None, "g": None,
                    "witness": None, "elapsed_ms": round(elapsed, 3)})
        return
    _echo_json({"m": m, "s": s, "zcl": w.length, "method": "witness_lower_bound",
                "g": s * m - w.length, "witness": w.as_dict(),
                "elapsed_ms": round(elapsed, 3)})


@zcl.command("probe")
@click.option("--m", type=int, required=True)
@click.option("--s-max", type=int, required=True)
@click.option("--max-candidates", type=int, default=DEFAULT_SEARCH_BUDGET,
              show_default=True)
@_guarded
def zcl_probe_cmd(m, s_max, max_candidates):
    """Gap sequence s*m - zcl over s = 2..s-max, with stabilization flag."""
    probe = g_stabilization_probe(m, s_max, max_candidates=max_candidates)
    _echo_json(probe.as_dict())


@main.group()
def verify():
    """Structural verifications (linear algebra, join model)."""


@verify.command("generators")
@click.option("--m", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--max-degree", type=int, default=None)
@click.option("--limit-bits", type=int, default=DEFAULT_BIT_LIMIT, show_default=True)
@_guarded
def verify_generators_cmd(m, s, max_degree, limit_bits):
    """Per degree: substitution kernel == span of (x_i + x_s) multiples."""
    spec = RingSpec(m, s, limit_bits)
    checks = verify_generators_lemma(spec, max_degree)
    for check in checks:
        _echo_json(check.as_dict())
    if not all(c.passed for c in checks):
        raise InvariantViolationError("some degree failed; see output")


@verify.command("join")
@click.option("--s", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_guarded
def verify_join_cmd(s, k, samples, seed):
    """Sampled component structure of U_j inside the stage-k join."""
    report = sample_report(s, k, samples=samples, seed=seed)
    _echo_json(report.as_dict())
    if not (report.transitive and report.segment_checks_passed == report.samples):
        raise InvariantViolationError("join component checks failed")


@main.command()
@click.option("--m-range", callback=_parse_range, required=True,
              help="Inclusive range A..B of m values.")
@click.option("--s-range", callback=_parse_range, required=True,
              help="Inclusive range C..D of s values.")
@click.option("--policy", type=click.Choice(["exact", "witness-only"]),
              default="exact", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False),
              default=None, envvar="ZCLRP_CACHE",
              help="Append-only JSONL result cache (default: $ZCLRP_CACHE).")
@click.option("--limit-bits", type=int, default=DEFAULT_BIT_LIMIT, show_default=True)
@click.option("--max-candidates", type=int, default=DEFAULT_SEARCH_BUDGET,
              show_default=True)
@_guarded
def report(m_range, s_range, policy, fmt, cache_path, limit_bits, max_candidates):
    """Bound-table rows s*m >= TC_s >= secat >= zcl over the given ranges.

    Rows over the size cap are skipped with a note on stderr and exit code 2.
    """
    rows, skipped = build_table(m_range, s_range, policy.replace("-", "_"),
                                cache_path=cache_path, bit_limit=limit_bits,
                                max_candidates=max_candidates)
    click.echo(emit(rows, fmt).decode(), nl=False)
    if skipped:
        for m, s, reason in skipped:
            click.echo(f"skipped ({m},{s}): {reason}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()
