"""Command-line client for the rkit service.

Every computation goes through the HTTP API: against a remote server when
--server (or RKIT_SERVER) is set, otherwise against an in-process instance
of the same app, so no daemon is needed for one-shot use.  File handling
(sequence caches, b-files, saved reports) stays on the client side.

Exit codes: 0 success, 1 legitimate domain outcome (no representation,
infeasible pairing), 2 usage error, 3 verification counterexample or
cross-validation mismatch.
"""

import json
from pathlib import Path

import click
import httpx

from .bfile import parse_bfile
from .cache import CACHE_DIR_ENV, cache_dir, cache_write
from .derivation import DerivedSequence
from .errors import BFileParseError, CacheIoError
from .reports import report_from_dict, report_to_json, reports_to_csv
from .verification import CASES

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3


class Ratio(click.ParamType):
    name = "ratio"

    def convert(self, value, param, ctx):
        try:
            num, den = value.split("/")
            return int(num), int(den)
        except (ValueError, AttributeError):
            self.fail(f"{value!r} is not of the form A/B", param, ctx)


RATIO = Ratio()


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app())


def _call(ctx, method: str, path: str, **kwargs) -> dict:
    client = ctx.obj["client"]
    resp = client.request(method, path, **kwargs)
    if resp.status_code == 422:
        detail = resp.json().get("detail", resp.text)
        raise click.UsageError(f"{path}: {detail}")
    resp.raise_for_status()
    return resp.json()


@click.group()
@click.option(
    "--server",
    envvar="RKIT_SERVER",
    default=None,
    help="Base URL of a running rkit server; defaults to in-process execution.",
)
@click.pass_context
def main(ctx, server):
    """Ramanujan-prime toolkit: sequences, constructions, inequality sweeps."""
    ctx.ensure_object(dict)
    ctx.obj["client"] = _client(server)


@main.command()
@click.option("--limit", type=int, required=True, help="Inclusive sieve bound.")
@click.pass_context
def sieve(ctx, limit):
    """Build (or warm) the prime sieve and print the prime count."""
    data = _call(ctx, "POST", "/sieve", json={"limit": limit})
    click.echo(f"pi({data['limit']}) = {data['prime_count']}  [{data['elapsed_s']:.2f}s]")


@main.command()
@click.option("--level", type=int, default=1, show_default=True)
@click.option("--limit", type=int, required=True)
@click.option("--terms", type=int, default=None, help="Max terms to return (default: all certified).")
@click.option("--cache", "cache_path", type=str, default=None, help="Write a binary cache file.")
@click.pass_context
def seq(ctx, level, limit, terms, cache_path):
    """Certified prefix of the level-K derived sequence."""
    payload = {"level": level, "limit": limit, "max_terms": terms}
    data = _call(ctx, "POST", "/sequence", json=payload)
    click.echo(" ".join(str(v) for v in data["elements"]))
    if data["truncated"]:
        click.echo(
            f"note: only {data['certified_count']} terms certified at limit {limit}", err=True
        )
    if cache_path:
        seq_obj = DerivedSequence(
            level=data["level"],
            elements=data["elements"],
            certified_count=data["certified_count"],
            source_limit=data["source_limit"],
        )
        try:
            target = cache_write(seq_obj, cache_path)
        except CacheIoError as exc:
            raise click.ClickException(str(exc))
        click.echo(f"cached {len(data['elements'])} terms -> {target}", err=True)


@main.command()
@click.option("--c", "ratio", type=RATIO, required=True, help="Interval ratio A/B in (0,1).")
@click.option("--n", type=int, required=True)
@click.option("--limit", type=int, default=100_000, show_default=True)
@click.pass_context
def cram(ctx, ratio, n, limit):
    """Smallest R with at least n primes in (c*x, x] for all x >= R."""
    c_num, c_den = ratio
    data = _call(
        ctx, "POST", "/c-ramanujan", json={"c_num": c_num, "c_den": c_den, "n": n, "limit": limit}
    )
    click.echo(f"R_({data['c_num']}/{data['c_den']}),{n} = {data['value']}")


@main.command()
@click.argument("n", type=int)
@click.pass_context
def represent(ctx, n):
    """Write N as a sum of distinct Ramanujan primes."""
    data = _call(ctx, "POST", "/represent", json={"n": n})
    if not data["found"]:
        click.echo(f"{n}: no representation", err=True)
        ctx.exit(EXIT_DOMAIN)
    click.echo(f"{n} = " + "+".join(str(p) for p in data["parts"]))


@main.command()
@click.option("--scan-limit", type=int, default=500, show_default=True)
@click.pass_context
def unrep(ctx, scan_limit):
    """Largest integer <= scan-limit with no distinct-sum representation."""
    data = _call(ctx, "POST", "/unrep", json={"scan_limit": scan_limit})
    click.echo(str(data["largest_unrepresentable"]))


@main.command()
@click.argument("k", type=int)
@click.option("--oracle", is_flag=True, help="Use the exhaustive matcher (k <= 20).")
@click.pass_context
def pair(ctx, k, oracle):
    """Pair {1..2K} so every pair sums to a Ramanujan prime."""
    data = _call(ctx, "POST", "/pair", json={"k": k, "oracle": oracle})
    if not data["feasible"]:
        click.echo(f"k={k}: infeasible", err=True)
        ctx.exit(EXIT_DOMAIN)
    for a, b in data["pairs"]:
        click.echo(f"{a}+{b}={a + b}")


def _reports_dir() -> Path:
    return cache_dir() / "reports"


@main.command()
@click.argument("case", type=click.Choice(sorted(CASES), case_sensitive=False))
@click.option("--x-max", type=int, default=None)
@click.option("--n-max", type=int, default=None)
@click.option("--full", is_flag=True, help="Sweep the full published range (slow).")
@click.option("--c", "ratio", type=RATIO, default=None, help="Interval ratio for T6_REPORT.")
@click.option("--eps", type=RATIO, default=None, help="Epsilon for C1 as A/B.")
@click.option("--n-levels", type=int, default=12, show_default=True)
@click.option("--out", type=str, default=None, help="Also write the JSON report here.")
@click.pass_context
def verify(ctx, case, x_max, n_max, full, ratio, eps, n_levels, out):
    """Sweep one registered inequality case and save its report."""
    payload = {"case": case, "x_max": x_max, "n_max": n_max, "full": full, "n_levels": n_levels}
    if ratio:
        payload["c_num"], payload["c_den"] = ratio
    if eps:
        payload["eps_num"], payload["eps_den"] = eps
    data = _call(ctx, "POST", "/verify", json=payload)
    report = report_from_dict(data)
    text = report_to_json(report)
    click.echo(text)
    target = Path(out) if out else _reports_dir() / f"{report.case_id}.json"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text + "\n")
    click.echo(f"report saved -> {target}", err=True)
    if report.counterexamples:
        click.echo(f"{len(report.counterexamples)} counterexample(s) found", err=True)
        ctx.exit(EXIT_COUNTEREXAMPLE)


@main.command()
@click.option("--level", type=int, default=1, show_default=True)
@click.option("--bfile", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--max-n", type=int, default=None)
@click.option("--limit", type=int, default=None, help="Sieve limit override.")
@click.pass_context
def crosscheck(ctx, level, bfile, max_n, limit):
    """Compare certified terms against a local OEIS b-file."""
    try:
        entries = parse_bfile(bfile)
    except BFileParseError as exc:
        raise click.UsageError(f"{bfile}: {exc}")
    payload = {
        "level": level,
        "entries": [[e.index, e.value] for e in entries],
        "max_n": max_n,
        "limit": limit,
    }
    data = _call(ctx, "POST", "/crosscheck", json=payload)
    click.echo(
        f"checked {data['checked']} certified terms from index {data['base_index']}: "
        f"{len(data['mismatches'])} mismatch(es)"
    )
    for m in data["mismatches"]:
        click.echo(f"  n={m['n']}: computed {m['computed']} != bfile {m['bfile']}", err=True)
    if data["mismatches"]:
        ctx.exit(EXIT_COUNTEREXAMPLE)


@main.command()
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), required=True)
@click.option(
    "--reports-dir",
    type=click.Path(file_okay=False),
    default=None,
    help=f"Where verify saved its reports (default: ${CACHE_DIR_ENV}/reports).",
)
def report(fmt, reports_dir):
    """Emit all saved verification reports as CSV or JSON."""
    directory = Path(reports_dir) if reports_dir else _reports_dir()
    files = sorted(directory.glob("*.json")) if directory.is_dir() else []
    if not files:
        raise click.UsageError(f"no saved reports under {directory}")
    reports = [report_from_dict(json.loads(f.read_text())) for f in files]
    if fmt == "json":
        click.echo(report_to_json(reports))
    else:
        click.echo(reports_to_csv(reports), nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8037, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("rkit.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
