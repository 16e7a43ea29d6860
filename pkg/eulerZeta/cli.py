from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Optional

import orjson
import typer
from pydantic import BaseModel, ConfigDict, ValidationError

from .algebra import format_rational, parse_rational, ratfunc_expand
from .config import Settings, load_settings
from .coxeter import CoxeterSystem, enumerate_by_length, growth_series
from .euler import (
    CHAMBER,
    euler_building,
    euler_chevalley,
    euler_from_lattice,
    euler_from_orbits,
    euler_graph_of_groups,
    parahoric_context,
    parahoric_id,
)
from .exceptions import EulerZetaError, InvalidInputError
from .hecke import HeckeAlgebra, hattori_stallings_rank, hecke_trace
from .log import get_logger, setup_logging
from .measures import HaarMeasure, IndexDeclaration, SubgroupContext, measure_sign
from .models import ChevalleyDatum, CommandRequest, CommandResult, IdentityCheck, OutputFormat
from .readers import (
    read_context,
    read_coxeter,
    read_graph_of_groups,
    read_hecke_elements,
    read_hecke_matrix,
    read_orbit_complex,
)
from .verify import run_suite
from .zeta import (
    ZetaResult,
    parabolic_zeta_data,
    pro_p_data,
    zeta_chamber,
    zeta_chamber_value,
    zeta_parabolic,
    zeta_pro_p,
    zeta_tree_edge,
    zeta_tree_vertex,
)

LOG = get_logger(__name__)

APP_NAME = "eulerzeta"
APP_DESCRIPTION = "Euler-Poincaré characteristics and double coset zeta functions of groups acting on trees and buildings."

EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2

cli = typer.Typer(help=APP_DESCRIPTION, no_args_is_help=True)
euler_cli = typer.Typer(help="Euler-Poincaré characteristics as multiples of a Haar measure.", no_args_is_help=True)
zeta_cli = typer.Typer(help="Double coset zeta functions, truncated, with closed forms where known.", no_args_is_help=True)
cli.add_typer(euler_cli, name="euler")
cli.add_typer(zeta_cli, name="zeta")


class TreeSubgroup(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class HeckeAction(str, Enum):
    MULT = "mult"
    TRACE = "trace"
    RANK = "rank"


class Suite(str, Enum):
    GROWTH = "growth"
    EULER = "euler"
    ZETA = "zeta"
    HECKE = "hecke"
    ALL = "all"


class CliState(BaseModel):
    """Options shared by every subcommand."""

    model_config = ConfigDict(frozen=True)

    output_format: OutputFormat = OutputFormat.TEXT
    settings: Settings


@contextmanager
def _input_errors():
    """Turn library errors into exit status 1 with the message on stderr."""
    try:
        yield
    except EulerZetaError as e:
        LOG.debug("Input error", exc_info=True)
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_INPUT_ERROR) from e
    except ValidationError as e:
        typer.echo(f"error: {e.errors()[0]['msg']}", err=True)
        raise typer.Exit(code=EXIT_INPUT_ERROR) from e


def _state(ctx: typer.Context) -> CliState:
    return ctx.obj


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _check_line(check: IdentityCheck) -> str:
    if check.passed:
        return f"PASS {check.name}"
    detail = f": {check.detail}" if check.detail else ""
    return f"FAIL {check.name} [{check.anchor}]{detail}"


def _emit(
    ctx: typer.Context,
    command: str,
    inputs: dict[str, Any],
    lines: list[str],
    result: Any,
    checks: list[IdentityCheck] = (),
):
    """Write the header, the echoed inputs and the result in the selected format."""
    state = _state(ctx)
    echoed = {"max_len": state.settings.max_len, "truncate": state.settings.truncate}
    echoed.update(inputs)
    request = CommandRequest(command=command, inputs=_jsonable(echoed), output_format=state.output_format)
    if request.output_format is OutputFormat.JSON:
        payload = CommandResult(
            command=request.command, inputs=request.inputs, result=_jsonable(result), identity_checks=list(checks)
        )
        typer.echo(orjson.dumps(payload.model_dump(mode="json"), option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode())
        return
    typer.echo(f"# {APP_NAME} {request.command}")
    for key, value in request.inputs.items():
        typer.echo(f"# {key} = {'-' if value is None else value}")
    for line in lines:
        typer.echo(line)
    for check in checks:
        typer.echo(_check_line(check))


def _measure_lines(measure: HaarMeasure) -> list[str]:
    return [measure.to_text(), f"sign: {measure_sign(measure).value}"]


def _measure_result(measure: HaarMeasure) -> dict[str, Any]:
    return {
        "measure": measure.to_text(),
        "coefficient": measure.coefficient,
        "base": measure.base,
        "sign": measure_sign(measure).value,
    }


def _subset(text: Optional[str], system: CoxeterSystem) -> frozenset[int]:
    """Parse a comma separated list of 1-based generator indices."""
    if not text:
        return frozenset()
    try:
        subset = frozenset(int(tok) - 1 for tok in text.split(",") if tok.strip())
    except ValueError:
        raise InvalidInputError(f"expected generator indices like '1,2', got {text!r}") from None
    for s in subset:
        system.check_word((s,))
    return subset


@cli.callback()
def main(
    ctx: typer.Context,
    json_output: Annotated[bool, typer.Option("--json", help="Emit a stable JSON document instead of text.")] = False,
    debug: Annotated[bool, typer.Option(help="Log debug messages to stderr.")] = False,
    log_json: Annotated[bool, typer.Option(help="Log ECS JSON lines instead of plain text.")] = False,
    config: Annotated[Optional[Path], typer.Option(help="YAML file overriding the packaged defaults.")] = None,
):
    """Exact Euler characteristics and zeta functions of totally disconnected groups."""
    setup_logging(debug=debug, structured=log_json)
    with _input_errors():
        settings = load_settings(config)
    ctx.obj = CliState(output_format=OutputFormat.JSON if json_output else OutputFormat.TEXT, settings=settings)


@cli.command()
def growth(
    ctx: typer.Context,
    coxeter: Annotated[Path, typer.Option("--coxeter", "-c", help="Coxeter system file.")],
    max_len: Annotated[Optional[int], typer.Option(help="Enumerate elements up to this length.")] = None,
    exact: Annotated[bool, typer.Option(help="Also compute the rational growth series.")] = False,
):
    """Count Coxeter group elements by length."""
    max_len = _state(ctx).settings.max_len if max_len is None else max_len
    with _input_errors():
        if max_len < 0:
            raise InvalidInputError("--max-len must be non-negative")
        system = read_coxeter(coxeter)
        counts = enumerate_by_length(system, max_len).counts
        lines = ["counts " + " ".join(str(c) for c in counts)]
        result: dict[str, Any] = {"system": str(system), "counts": counts, "series": None}
        checks = []
        if exact:
            series = growth_series(system)
            lines.append(f"series {series.to_text()}")
            result["series"] = series.to_text()
            expansion = [int(c) for c in ratfunc_expand(series, max_len).coefficients]
            checks.append(
                IdentityCheck(
                    name=f"series expansion matches enumeration to order {max_len}",
                    anchor="growth(t) = sum_w t^l(w)",
                    passed=expansion == counts,
                    detail="" if expansion == counts else f"{expansion} vs {counts}",
                )
            )
    _emit(ctx, "growth", {"coxeter": coxeter, "max_len": max_len, "exact": exact}, lines, result, checks)


@euler_cli.command("building")
def euler_building_command(
    ctx: typer.Context,
    coxeter: Annotated[Path, typer.Option("--coxeter", "-c", help="Coxeter system of the building.")],
    q: Annotated[int, typer.Option("--q", "-q", help="Uniform thickness is q + 1.")],
):
    """Chamber transitive action on a building."""
    with _input_errors():
        measure = euler_building(read_coxeter(coxeter), q)
    _emit(ctx, "euler building", {"coxeter": coxeter, "q": q}, _measure_lines(measure), _measure_result(measure))


@euler_cli.command("gog")
def euler_gog_command(
    ctx: typer.Context,
    graph: Annotated[Path, typer.Option("--graph", "-g", help="Graph of groups file.")],
    base: Annotated[Optional[str], typer.Option(help="Subgroup whose Haar measure is the base.")] = None,
):
    """Fundamental group of a finite graph of profinite groups."""
    with _input_errors():
        result = euler_graph_of_groups(read_graph_of_groups(graph), base)
        measure = result.measure
    data = _measure_result(measure) | {"volumes": result.report.volumes, "root": result.report.root}
    _emit(ctx, "euler gog", {"graph": graph, "base": base}, _measure_lines(measure), data)


@euler_cli.command("chevalley")
def euler_chevalley_command(
    ctx: typer.Context,
    family: Annotated[str, typer.Option("--type", help="Finite type letter, e.g. A, B, G.")],
    rank: Annotated[int, typer.Option(help="Semisimple rank n.")],
    q: Annotated[int, typer.Option("--q", "-q", help="Residue field cardinality.")],
):
    """Chevalley group over a local field, in the Iwahori base."""
    with _input_errors():
        measure = euler_chevalley(ChevalleyDatum(family=family, rank=rank, q=q))
    _emit(
        ctx,
        "euler chevalley",
        {"type": family, "rank": rank, "q": q},
        _measure_lines(measure),
        _measure_result(measure),
    )


@euler_cli.command("complex")
def euler_complex_command(
    ctx: typer.Context,
    orbits: Annotated[Path, typer.Option("--orbits", "-f", help="Cell orbit stabilizer file.")],
    context: Annotated[Optional[Path], typer.Option("--ctx", help="Subgroup index file.")] = None,
    base: Annotated[Optional[str], typer.Option(help="Base subgroup; defaults to the first vertex stabilizer.")] = None,
):
    """Proper cocompact action on a contractible complex."""
    with _input_errors():
        data = read_orbit_complex(orbits)
        stabilizers = data.stabilizers()
        ctx_data = read_context(context) if context else SubgroupContext()
        ctx_data = ctx_data.merge(SubgroupContext(subgroups=stabilizers))
        if base is None:
            if not data.orbits.get(0):
                raise InvalidInputError("no vertex orbits; pass --base")
            base = data.orbits[0][0]
        measure = euler_from_orbits(data, ctx_data, base)
    _emit(
        ctx,
        "euler complex",
        {"orbits": orbits, "ctx": context, "base": base},
        _measure_lines(measure),
        _measure_result(measure),
    )


@euler_cli.command("lattice")
def euler_lattice_command(
    ctx: typer.Context,
    chi: Annotated[str, typer.Option(help="Euler characteristic of the lattice, P/Q.")],
    covol: Annotated[str, typer.Option(help="Covolume of the lattice against mu_base, P/Q.")],
    base: Annotated[str, typer.Option(help="Base subgroup of the covolume.")] = "O",
):
    """Group containing a cocompact torsion-free lattice."""
    with _input_errors():
        measure = euler_from_lattice(parse_rational(chi), parse_rational(covol), base)
    _emit(
        ctx,
        "euler lattice",
        {"chi": chi, "covol": covol, "base": base},
        _measure_lines(measure),
        _measure_result(measure),
    )


def _zeta_lines(result: ZetaResult, substitution: Optional[str]) -> list[str]:
    lines = [f"# series bound N = {result.series.bound}"]
    lines += result.series.to_lines()
    if result.rational is not None:
        lines.append(f"# rational form in t = {substitution}")
        lines.append(f"rational {result.rational.to_text()}")
    lines.append("value(-1) " + ("pole" if result.value is None else format_rational(result.value)))
    return lines


def _zeta_result(result: ZetaResult) -> dict[str, Any]:
    return {
        "series": result.series.as_dict(),
        "bound": result.series.bound,
        "rational": None if result.rational is None else result.rational.to_text(),
        "value": result.value,
    }


def _level_check(chi: HaarMeasure, result: ZetaResult, level: str, ctx: SubgroupContext) -> IdentityCheck:
    if result.value is None:
        return IdentityCheck(name=f"chi against zeta at {level}", anchor="chi = zeta(-1)^-1 mu_O", passed=False, detail="pole")
    expected = HaarMeasure(1 / result.value, level)
    passed = chi.equals(expected, ctx)
    return IdentityCheck(
        name=f"chi against zeta at {level}",
        anchor="chi = zeta(-1)^-1 mu_O",
        passed=passed,
        detail="" if passed else f"{chi.to_text()} vs {expected.to_text()}",
    )


@zeta_cli.command("building")
def zeta_building_command(
    ctx: typer.Context,
    coxeter: Annotated[Path, typer.Option("--coxeter", "-c", help="Coxeter system of the building.")],
    q: Annotated[int, typer.Option("--q", "-q", help="Uniform thickness is q + 1.")],
    parabolic: Annotated[Optional[str], typer.Option(help="Spherical subset J as 1-based indices, e.g. 1,2.")] = None,
    pro_p: Annotated[bool, typer.Option(help="Use the pro-p radical of the parahoric.")] = False,
    ssrank: Annotated[Optional[int], typer.Option(help="Semisimple rank of the residue quotients.")] = None,
    max_len: Annotated[Optional[int], typer.Option(help="Enumeration length bound.")] = None,
    truncate: Annotated[Optional[int], typer.Option(help="Largest n in the truncated series.")] = None,
    eval_at: Annotated[Optional[int], typer.Option(help="Exact value of the chamber zeta function at s.")] = None,
):
    """Zeta function of the chamber stabilizer, a parahoric, or its pro-p radical."""
    settings = _state(ctx).settings
    max_len = settings.max_len if max_len is None else max_len
    truncate = settings.truncate if truncate is None else truncate
    inputs = {
        "coxeter": coxeter,
        "q": q,
        "parabolic": parabolic,
        "pro_p": pro_p,
        "ssrank": ssrank,
        "max_len": max_len,
        "truncate": truncate,
        "eval_at": eval_at,
    }
    with _input_errors():
        if truncate < 1:
            raise InvalidInputError("--truncate must be positive")
        system = read_coxeter(coxeter)
        J = _subset(parabolic, system)
        chi = euler_building(system, q)
        if not J and not pro_p:
            result = zeta_chamber(system, q, max_len, truncate)
            level, context = CHAMBER, parahoric_context(system, q, [])
        else:
            if eval_at is not None:
                raise InvalidInputError("--eval-at applies to the chamber level only")
            if pro_p:
                data = pro_p_data(system, q, J, max_len, semisimple_rank=ssrank)
                result = zeta_pro_p(data, truncate)
                level = f"{parahoric_id(J)}^1"
                context = parahoric_context(system, q, [J]).merge(
                    SubgroupContext([IndexDeclaration(parahoric_id(J), level, data.radical_index, 1)])
                )
            else:
                result = zeta_parabolic(parabolic_zeta_data(system, q, J, max_len), truncate)
                level, context = parahoric_id(J), parahoric_context(system, q, [J])
        lines = [f"# level {level}"] + _zeta_lines(result, f"{q}^-s")
        data = _zeta_result(result) | {"level": level, "chi": chi.to_text()}
        if eval_at is not None:
            value = zeta_chamber_value(system, q, eval_at)
            lines.append(f"value({eval_at}) {format_rational(value)}")
            data["eval_at"] = value
        checks = [_level_check(chi, result, level, context)]
    _emit(ctx, "zeta building", inputs, lines, data, checks)


@zeta_cli.command("tree")
def zeta_tree_command(
    ctx: typer.Context,
    d: Annotated[int, typer.Option("--degree", "-d", help="The tree is (d+1)-regular.")],
    subgroup: Annotated[TreeSubgroup, typer.Option(help="Stabilizer of a vertex or of an edge.")],
    truncate: Annotated[Optional[int], typer.Option(help="Largest n in the truncated series.")] = None,
):
    """Zeta function of the full automorphism group of a regular tree."""
    truncate = _state(ctx).settings.truncate if truncate is None else truncate
    with _input_errors():
        if truncate < 1:
            raise InvalidInputError("--truncate must be positive")
        if subgroup is TreeSubgroup.EDGE:
            result = zeta_tree_edge(d, truncate)
        else:
            result = zeta_tree_vertex(d, truncate)
    _emit(
        ctx,
        "zeta tree",
        {"d": d, "subgroup": subgroup, "truncate": truncate},
        _zeta_lines(result, f"{d}^-s"),
        _zeta_result(result),
    )


@cli.command()
def hecke(
    ctx: typer.Context,
    coxeter: Annotated[Path, typer.Option("--coxeter", "-c", help="Coxeter system of the building.")],
    q: Annotated[int, typer.Option("--q", "-q", help="Hecke parameter, at least 2.")],
    action: Annotated[HeckeAction, typer.Argument(help="mult, trace or rank.")],
    input_file: Annotated[Path, typer.Option("--input", "-i", help="Element file, or a matrix file for rank.")],
):
    """Products, traces and Hattori-Stallings ranks in the Iwahori-Hecke algebra."""
    inputs = {"coxeter": coxeter, "q": q, "action": action, "input": input_file}
    with _input_errors():
        algebra = HeckeAlgebra(read_coxeter(coxeter), q)
        if action is HeckeAction.RANK:
            measure = hattori_stallings_rank(read_hecke_matrix(input_file, algebra), CHAMBER)
            lines, result = _measure_lines(measure), _measure_result(measure)
        else:
            elements = read_hecke_elements(input_file, algebra)
            if action is HeckeAction.MULT:
                product = algebra.one()
                for element in elements:
                    product = product * element
                lines, result = [product.to_text()], {"product": product.to_text()}
            else:
                traces = [hecke_trace(element) for element in elements]
                lines = [f"trace {format_rational(t)}" for t in traces]
                result = {"traces": traces}
    _emit(ctx, "hecke", inputs, lines, result)


@cli.command()
def verify(
    ctx: typer.Context,
    suite: Annotated[Suite, typer.Option(help="Identity suite to run.")] = Suite.ALL,
):
    """Run identity checks; exit status 2 if any fails."""
    settings = _state(ctx).settings
    report = run_suite(suite.value, settings)
    passed = sum(c.passed for c in report.checks)
    lines = [f"{passed}/{len(report.checks)} checks passed"]
    inputs = {
        "suite": suite,
        "seed": settings.seed,
        "random_samples": settings.random_samples,
        "graph_samples": settings.graph_samples,
        "oracle_q": settings.oracle_q,
    }
    _emit(ctx, "verify", inputs, lines, {"passed": report.passed, "count": len(report.checks)}, report.checks)
    if not report.passed:
        raise typer.Exit(code=EXIT_VERIFICATION_FAILED)


if __name__ == "__main__":
    cli()
