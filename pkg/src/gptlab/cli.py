"""``gptlab`` command line.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 when an input does not parse, 3 on any other engine error.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import catalog
from .determinism import _fmt
from .errors import CheckFailure, GptlabError, ParseError
from .gpm import effect_measures, structure_measures, verify_structure
from .bodies import ArcBody
from .gpt import DualEffectBody, system_to_json
from .io import load_json, load_system, structure_from_json
from .render import Plane, render_cross_section
from .report import CHECKS, build_report, dumps

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_ENGINE = 0, 1, 2, 3


def _inputs(catalog_names, input_paths):
    """``(label, system, entry)`` in the order given: catalog names first, then files."""
    out = []
    for name in catalog_names:
        entry = catalog.build(name)
        out.append((f"catalog:{name}", entry.system, entry))
    for path in input_paths:
        out.append((str(path), load_system(path), None))
    if not out:
        raise click.UsageError("give at least one --catalog name or --input file")
    return out


def _emit(text: str, output, filename: str):
    if output is None:
        click.echo(text, nl=False)
        return
    target = Path(output)
    if target.is_dir():
        target = target / filename
    target.write_text(text)


def _write_reports(reports, output):
    """One report per system; several systems need ``-o`` to name a directory."""
    if len(reports) > 1 and output is not None:
        Path(output).mkdir(parents=True, exist_ok=True)
    for label, rep in reports:
        stem = label.replace("catalog:", "").replace("/", "_").replace(".json", "")
        _emit(dumps(rep), output, f"{Path(stem).name}.report.json")
    if not all(rep["passed"] for _, rep in reports):
        failed = ", ".join(label for label, rep in reports if not rep["passed"])
        raise CheckFailure(f"checks failed for {failed}")


def _guard(fn):
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except click.ClickException:
            raise
        except ParseError as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except CheckFailure as exc:
            click.echo(f"check failed: {exc}", err=True)
            sys.exit(EXIT_FAIL)
        except GptlabError as exc:
            click.echo(f"engine error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(EXIT_ENGINE)
        except (ValueError, TypeError, ArithmeticError) as exc:
            click.echo(f"engine error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(EXIT_ENGINE)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


catalog_option = click.option("--catalog", "catalog_names", multiple=True, type=click.Choice(catalog.NAMES),
                              help="Catalog system to load (repeatable).")
input_option = click.option("--input", "input_paths", multiple=True, type=click.Path(dir_okay=False),
                            help="System JSON file (repeatable).")
output_option = click.option("-o", "output", type=click.Path(), default=None,
                             help="Output file, or directory when several systems are given.")
seed_option = click.option("--seed", type=int, default=0, show_default=True, help="Seed recorded in reports.")
tol_option = click.option("--tol", type=float, default=None, help="Tolerance for arc-body computations.")


@click.group()
def main():
    """Exact checks on general probabilistic theories."""


@main.command()
@catalog_option
@input_option
@click.option("--all", "run_all", is_flag=True, help="Run every check.")
@click.option("--determinism", "determinism_only", is_flag=True, help="Only the intermediate determinism check.")
@tol_option
@seed_option
@output_option
@_guard
def check(catalog_names, input_paths, run_all, determinism_only, tol, seed, output):
    """Validate, classify and test intermediate determinism (default), or a selection."""
    if run_all:
        checks = set(CHECKS)
    elif determinism_only:
        checks = {"determinism"}
    else:
        checks = {"validate", "classify", "determinism"}
    reports = [(label, build_report(system, checks, seed, tol, label, entry))
               for label, system, entry in _inputs(catalog_names, input_paths)]
    _write_reports(reports, output)


@main.command()
@catalog_option
@input_option
@tol_option
@seed_option
@output_option
@_guard
def classify(catalog_names, input_paths, tol, seed, output):
    """Restriction class and Gleason type."""
    reports = [(label, build_report(system, {"classify"}, seed, tol, label, entry))
               for label, system, entry in _inputs(catalog_names, input_paths)]
    _write_reports(reports, output)


def _catalog_labels(name: str, body_kind: str) -> dict:
    if body_kind != "effects":
        return {}
    if name in ("classical_bit", "nu_bit", "anu_bit"):
        labels = {"0": (0, 0), "u": (0, 1)}
        if name == "classical_bit":
            labels.update({"e+": ("1/2", "1/2"), "e-": ("-1/2", "1/2")})
        elif name == "nu_bit":
            labels.update({"pe+": ("1/4", "1/4"), "pe-": ("-1/4", "1/4"),
                           "u-pe+": ("-1/4", "3/4"), "u-pe-": ("1/4", "3/4")})
        return labels
    if name.startswith("octagon"):
        verts = catalog.octagon_effect_vertices()
        labels = {"0": verts[0], "u": verts[1]}
        skip = {4, 8} if name == "octagon_anu" else set()
        labels.update({f"e{k - 1}": verts[k] for k in range(2, 10) if k not in skip})
        return labels
    return {}


@main.command()
@click.option("--catalog", "catalog_name", type=click.Choice(catalog.NAMES), default=None)
@click.option("--input", "input_path", type=click.Path(dir_okay=False), default=None)
@click.option("--body", "body_kind", type=click.Choice(["effects", "states"]), default="effects", show_default=True)
@click.option("--plane", default=None, help="Cutting plane such as 'z=1/2' (omit for two-coordinate bodies).")
@click.option("-o", "output", type=click.Path(dir_okay=False), required=True)
@_guard
def render(catalog_name, input_path, body_kind, plane, output):
    """Draw a planar cross-section of a state or effect body as SVG."""
    if (catalog_name is None) == (input_path is None):
        raise click.UsageError("give exactly one of --catalog or --input")
    system = catalog.build(catalog_name).system if catalog_name else load_system(input_path)
    body = system.effects if body_kind == "effects" else system.states
    if isinstance(body, DualEffectBody):
        raise click.UsageError("this effect body is the dual of a curved state space; render --body states")
    labels = _catalog_labels(catalog_name, body_kind) if catalog_name else {}
    plane_obj = Plane.parse(plane) if plane else None
    title = f"{catalog_name or Path(input_path).stem} {body_kind}" + (f" at {plane_obj}" if plane_obj else "")
    section = render_cross_section(body, plane_obj, output, labels, title)
    click.echo(f"wrote {output} ({len(section.outline)} outline points)")


@main.group(name="catalog")
def catalog_group():
    """List or export the built-in systems."""


@catalog_group.command(name="list")
def catalog_list():
    for name in catalog.NAMES:
        entry = catalog.build(name)
        click.echo(f"{name:22s} {entry.provenance}")


@catalog_group.command(name="export")
@click.argument("name", type=click.Choice(catalog.NAMES))
@output_option
@_guard
def catalog_export(name, output):
    """Write a catalog system in the system JSON format."""
    doc = system_to_json(catalog.build(name).system)
    doc["name"] = name
    _emit(json.dumps(doc, indent=2) + "\n", output, f"{name}.json")


@main.command()
@click.option("--catalog", "catalog_name", type=click.Choice(catalog.NAMES), default=None)
@click.option("--input", "input_path", type=click.Path(dir_okay=False), default=None,
              help="Probability structure JSON file.")
@seed_option
@output_option
@_guard
def gpm(catalog_name, input_path, seed, output):
    """Axiom check and measure enumeration for a structure file or a catalog effect list."""
    if (catalog_name is None) == (input_path is None):
        raise click.UsageError("give exactly one of --catalog or --input")
    if input_path:
        s = structure_from_json(load_json(input_path))
        rep = verify_structure(s)
        doc = {"schema": "gptlab-report/1", "seed": seed, "source": str(input_path),
               "axioms": {"ok": rep.ok, "violations": [list(v) for v in rep.violations]}}
        if rep.ok:
            doc["measures"] = [_fmt(v) for v in structure_measures(s).vertices()]
        doc["passed"] = rep.ok
        _emit(json.dumps(doc, indent=2) + "\n", output, f"{Path(input_path).stem}.gpm.json")
        if not rep.ok:
            raise CheckFailure(f"{len(rep.violations)} axiom violations")
        return
    system = catalog.build(catalog_name).system
    if isinstance(system.effects, (ArcBody, DualEffectBody)):
        raise click.UsageError(f"{catalog_name} has a curved effect body; measures need a finite list")
    rep = build_report(system, {"gpm"}, seed, None, f"catalog:{catalog_name}")
    rep["measures"] = [_fmt(v) for v in effect_measures(list(system.effects.vertices)).vertices()]
    _emit(dumps(rep), output, f"{catalog_name}.gpm.json")
    if not rep["passed"]:
        raise CheckFailure("some measure vertices are not induced by any vector")


if __name__ == "__main__":
    main()
