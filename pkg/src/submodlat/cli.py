"""Command-line front end.

Commands run in-process by default; pass --server URL to delegate the
computation to a running service instance instead (output is identical
either way because JSON rendering is canonicalized here).
"""

from __future__ import annotations

import json
import os
import sys

import click

from .catalog import catalog_names
from .context import Context, Limits
from .errors import ResourceLimitError, SpecParseError
from .groups import GroupSpec
from .specfile import parse_spec_file
from .service import (
    handle_analyze,
    handle_catalog,
    handle_lattice,
    handle_verify,
)

EXIT_VERIFY_FAILED = 1
EXIT_RESOURCE = 3


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _resolve_group_arg(arg: str) -> GroupSpec:
    if arg in catalog_names():
        from .catalog import catalog_spec
        return catalog_spec(arg)
    if os.path.isfile(arg):
        return parse_spec_file(arg)
    raise click.UsageError(
        f"{arg!r} is neither a catalog group nor a spec file "
        f"(see `submodlat catalog list`)"
    )


def _make_ctx(subgroup_cap: int | None, element_cap: int | None) -> Context:
    limits = Limits()
    return Context(Limits(
        element_cap=element_cap or limits.element_cap,
        subgroup_cap=subgroup_cap or limits.subgroup_cap,
    ))


def _post(server: str, path: str, payload: dict) -> dict:
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    if resp.status_code == 413:
        raise ResourceLimitError(resp.json().get("detail", "resource limit"))
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text)
        raise click.UsageError(f"server rejected request: {detail}")
    return resp.json()


def _get(server: str, path: str) -> dict:
    import httpx

    resp = httpx.get(server.rstrip("/") + path, timeout=600.0)
    resp.raise_for_status()
    return resp.json()


def _spec_payload(spec: GroupSpec, subgroup_cap, element_cap) -> dict:
    from .specfile import format_spec

    payload = {"spec": format_spec(spec)}
    if subgroup_cap:
        payload["subgroup_cap"] = subgroup_cap
    if element_cap:
        payload["element_cap"] = element_cap
    return payload


def _yesno(v: bool) -> str:
    return "yes" if v else "no"


def _render_analyze_text(rep: dict) -> str:
    lines = [f"group {rep['name']}  order {rep['order']}  degree {rep['degree']}"]
    lines.append("primes: " + (", ".join(str(p) for p in rep["primes"]) or "none"))
    lines.append("flags:")
    for key, val in rep["flags"].items():
        lines.append(f"  {key}: {_yesno(val)}")
    lines.append("p-nilpotent: " + (", ".join(
        f"{p}: {_yesno(v)}" for p, v in rep["p_nilpotent"].items()) or "n/a"))
    if rep["ore_chain_orders"] is not None:
        lines.append("ore chain orders: " +
                     " < ".join(str(o) for o in rep["ore_chain_orders"]))
    else:
        lines.append("ore chain orders: none")
    lines.append("chief factors:")
    for f in rep["chief_factors"]:
        tag = f"p={f['prime']}" if f["prime"] is not None else "non-prime-power"
        lines.append(f"  order {f['order']} ({tag}, centralizer order "
                     f"{f['centralizer_order']})")
    lines.append("sylow subgroups:")
    for s in rep["sylows"]:
        lines.append(f"  p={s['p']}: order {s['order']}, "
                     f"submodular: {_yesno(s['submodular'])}, "
                     f"prime-index subnormal: {_yesno(s['p_subnormal'])}")
        if s["chain"]:
            orders = " < ".join(str(c["order"]) for c in s["chain"])
            lines.append(f"    chain: {orders}")
            for c in s["chain"]:
                gens = ", ".join(c["generators"]) or "()"
                lines.append(f"      order {c['order']}: <{gens}>")
    return "\n".join(lines) + "\n"


def _render_verify_text(report: dict) -> str:
    lines = []
    for s in report["suites"]:
        status = "pass" if s["pass"] else "FAIL"
        lines.append(f"{s['suite_id']}: {status} ({len(s['instances'])} instances)")
        if not s["pass"]:
            for inst in s["instances"]:
                if not inst["pass"]:
                    lines.append(f"  {inst['group']}: {json.dumps(inst['witness'], sort_keys=True)}")
    lines.append("result: " + ("pass" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


@click.group()
@click.version_option(package_name="submodlat")
def main():
    """Analyze finite permutation groups: subgroup lattices, modularity,
    and the supersolubility-related group classes."""


_common = [
    click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                 default="text", show_default=True, help="output format"),
    click.option("--subgroup-cap", type=click.IntRange(min=1), default=None,
                 help="abort if a lattice would exceed this many subgroups"),
    click.option("--element-cap", type=click.IntRange(min=1), default=None,
                 help="abort if a group would exceed this many elements"),
    click.option("--server", default=None, metavar="URL",
                 help="delegate computation to a running service"),
]


def _with_common(fn):
    for opt in reversed(_common):
        fn = opt(fn)
    return fn


@main.command()
@click.argument("group")
@_with_common
def analyze(group, fmt, subgroup_cap, element_cap, server):
    """Full class-membership report for GROUP (catalog name or spec file)."""
    spec = _resolve_group_arg(group)
    try:
        if server:
            rep = _post(server, "/analyze",
                        _spec_payload(spec, subgroup_cap, element_cap))["report"]
        else:
            rep = handle_analyze(_make_ctx(subgroup_cap, element_cap), spec)
    except SpecParseError as e:
        raise click.UsageError(str(e))
    except ResourceLimitError as e:
        click.echo(f"resource limit: {e}", err=True)
        sys.exit(EXIT_RESOURCE)
    click.echo(canonical_json(rep) if fmt == "json" else _render_analyze_text(rep),
               nl=False)


@main.command()
@click.argument("group")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None,
              help="write the DOT graph to this file instead of stdout")
@_with_common
def lattice(group, dot_path, fmt, subgroup_cap, element_cap, server):
    """Export the subgroup lattice of GROUP as a DOT Hasse diagram."""
    spec = _resolve_group_arg(group)
    try:
        if server:
            res = _post(server, "/lattice",
                        _spec_payload(spec, subgroup_cap, element_cap))
        else:
            res = handle_lattice(_make_ctx(subgroup_cap, element_cap), spec)
    except SpecParseError as e:
        raise click.UsageError(str(e))
    except ResourceLimitError as e:
        click.echo(f"resource limit: {e}", err=True)
        sys.exit(EXIT_RESOURCE)
    if dot_path:
        with open(dot_path, "w") as fh:
            fh.write(res["dot"])
        click.echo(f"{res['name']}: {res['nodes']} subgroups, "
                   f"{res['edges']} covering edges -> {dot_path}")
    elif fmt == "json":
        click.echo(canonical_json(res), nl=False)
    else:
        click.echo(res["dot"], nl=False)


@main.command()
@click.option("--suite", "suites", multiple=True, default=("all",),
              show_default=True, help="suite id (repeatable), or 'all'")
@click.option("--extra", "extras", multiple=True,
              type=click.Path(exists=True, dir_okay=False),
              help="additional group spec file to include in the universe")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True,
              help="parallel worker processes")
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              default=None, help="write the JSON report to this file")
@_with_common
def verify(suites, extras, jobs, report_path, fmt, subgroup_cap, element_cap,
           server):
    """Run verification suites; exit 0 only if every requested suite passes."""
    extra_texts = []
    for path in extras:
        with open(path) as fh:
            extra_texts.append(fh.read())
    try:
        if server:
            report = _post(server, "/verify", {
                "suites": list(suites),
                "extra_specs": extra_texts,
                "jobs": jobs,
            })["report"]
        else:
            report = handle_verify(_make_ctx(subgroup_cap, element_cap),
                                   list(suites), extra_texts, jobs=jobs,
                                   progress=fmt == "text")
    except (SpecParseError, ValueError) as e:
        raise click.UsageError(str(e))
    except ResourceLimitError as e:
        click.echo(f"resource limit: {e}", err=True)
        sys.exit(EXIT_RESOURCE)
    if report_path:
        with open(report_path, "w") as fh:
            fh.write(canonical_json(report))
    click.echo(canonical_json(report) if fmt == "json"
               else _render_verify_text(report), nl=False)
    if not report["pass"]:
        sys.exit(EXIT_VERIFY_FAILED)


@main.group()
def catalog():
    """Built-in group catalog."""


@catalog.command("list")
@_with_common
def catalog_list(fmt, subgroup_cap, element_cap, server):
    """List the built-in groups with order and degree."""
    if server:
        res = _get(server, "/catalog")
    else:
        res = handle_catalog(_make_ctx(subgroup_cap, element_cap))
    if fmt == "json":
        click.echo(canonical_json(res), nl=False)
        return
    width = max(len(g["name"]) for g in res["groups"])
    click.echo(f"{'name':<{width}}  order  degree")
    for g in res["groups"]:
        click.echo(f"{g['name']:<{width}}  {g['order']:>5}  {g['degree']:>6}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
