"""Command-line entry point (``arq``)."""

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import yaml
from pydantic import BaseModel

from nakayama_ar import __version__
from nakayama_ar.config import Settings
from nakayama_ar.core.algebra import NakayamaAlgebra
from nakayama_ar.core.ar import AREngine, ARTriangle, create_engine
from nakayama_ar.core.component import build_component, component_report, export_dot
from nakayama_ar.core.homalg import gdim_bound, global_dimension, resolution
from nakayama_ar.core.verify import run_verifier
from nakayama_ar.errors import (
    AlgebraFileError,
    BudgetExceeded,
    DomainError,
    ExpressionSyntaxError,
    NakayamaError,
)
from nakayama_ar.loader import PRESETS, resolve_algebra
from nakayama_ar.metrics import MetricsExporter
from nakayama_ar.models import ComponentReport, SummandReport, TriangleReport
from nakayama_ar.naming import Namer, module_name, parse_expression, parse_module
from nakayama_ar.utils import configure_logging, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4


class CommandContext:
    """Algebra, settings and output target shared by every subcommand."""

    def __init__(self, args: argparse.Namespace) -> None:
        overrides: dict[str, object] = {"seed": args.seed} if args.seed is not None else {}
        if args.log_level:
            overrides["log_level"] = args.log_level
        self.settings = Settings(**overrides)
        self.args = args
        self._algebra: NakayamaAlgebra | None = None
        self._engine: AREngine | None = None
        self._namer: Namer | None = None

    @property
    def algebra(self) -> NakayamaAlgebra:
        if self._algebra is None:
            preset = self.args.preset
            if preset is None and self.args.algebra is None:
                preset = "a4gamma"
            self._algebra = resolve_algebra(preset, self.args.algebra)
        return self._algebra

    @property
    def engine(self) -> AREngine:
        if self._engine is None:
            self._engine = create_engine(self.algebra, self.settings)
        return self._engine

    @property
    def namer(self) -> Namer:
        if self._namer is None:
            self._namer = Namer(self.algebra)
        return self._namer

    @property
    def output_format(self) -> str:
        return self.args.format or self.settings.output_format

    def require(self, name: str) -> str:
        value = getattr(self.args, name)
        if value is None:
            raise AlgebraFileError(f"--{name} is required for {self.args.command}")
        return value

    def emit(self, text: str) -> None:
        """Write to ``--out`` when given, otherwise to standard output."""
        if self.args.out:
            Path(self.args.out).write_text(text, encoding="utf-8")
            logger.info("output.written", path=self.args.out, bytes=len(text))
        else:
            sys.stdout.write(text)

    def emit_model(self, model: BaseModel) -> None:
        data = model.model_dump(mode="json")
        if self.args.out and Path(self.args.out).suffix in (".yaml", ".yml"):
            self.emit(yaml.safe_dump(data, sort_keys=False))
        else:
            self.emit(json.dumps(data, indent=2) + "\n")


# Queries


def cmd_info(ctx: CommandContext) -> int:
    algebra = ctx.algebra
    lines = [
        f"algebra: {algebra.label}",
        f"n={algebra.n}",
        f"relations: {', '.join(f'[{u},{v}]' for u, v in algebra.relations) or 'none'}",
        f"projective lengths: {' '.join(map(str, algebra.proj_len))}",
        f"injective lengths: {' '.join(map(str, algebra.inj_len))}",
    ]
    ctx.emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_modules(ctx: CommandContext) -> int:
    algebra = ctx.algebra
    lines = [f"{module_name(algebra, m)}\t{m}" for m in algebra.indecomposables()]
    ctx.emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_resolve(ctx: CommandContext) -> int:
    algebra = ctx.algebra
    module = parse_module(algebra, ctx.require("module"))
    res = resolution(algebra, module, ctx.args.side)
    if res.side.value == "proj":
        names = [f"P{term.hi}" for term in reversed(res.terms)]
        line = " -> ".join(["0", *names])
    else:
        names = [f"I{term.lo}" for term in res.terms]
        line = " -> ".join([*names, "0"])
    ctx.emit(line + "\n")
    return EXIT_OK


def cmd_hom(ctx: CommandContext) -> int:
    algebra = ctx.algebra
    source = parse_module(algebra, ctx.require("module"))
    target = parse_module(algebra, ctx.require("target"))
    ctx.emit(f"hom={algebra.hom_dim(source, target)}\n")
    return EXIT_OK


def cmd_gldim(ctx: CommandContext) -> int:
    algebra = ctx.algebra
    ctx.emit(f"gldim={global_dimension(algebra)} bound={gdim_bound(algebra)}\n")
    return EXIT_OK


# AR computations


def _middle_names(ctx: CommandContext, triangle: ARTriangle) -> list[str]:
    return sorted(ctx.namer.name(c) for c, m in triangle.middle for _ in range(m))


def triangle_report(ctx: CommandContext, triangle: ARTriangle) -> TriangleReport:
    middle = [
        SummandReport(name=ctx.namer.name(c), descriptor=str(c), multiplicity=m)
        for c, m in triangle.middle
    ]
    return TriangleReport(
        algebra=ctx.algebra.label,
        end=ctx.namer.name(triangle.end),
        start=ctx.namer.name(triangle.start),
        middle=sorted(middle, key=lambda s: s.name),
        stripped=[f"P{s.hi} -> P{s.hi} at degree {k}" for s, k in triangle.stripped],
    )


def cmd_triangle(ctx: CommandContext) -> int:
    end = parse_expression(ctx.algebra, ctx.require("end"))
    triangle = ctx.engine.triangle_ending(end)
    if ctx.output_format == "structured":
        ctx.emit_model(triangle_report(ctx, triangle))
        return EXIT_OK
    lines = [
        f"start: {ctx.namer.name(triangle.start)}",
        f"middle: {' (+) '.join(_middle_names(ctx, triangle)) or '0'}",
        f"end: {ctx.namer.name(triangle.end)}",
    ]
    if triangle.stripped:
        lines.append(f"stripped: {len(triangle.stripped)}")
    ctx.emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_tau_orbit(ctx: CommandContext) -> int:
    current = ctx.engine.normalize(parse_expression(ctx.algebra, ctx.require("start")))
    names = []
    for _ in range(ctx.args.steps):
        names.append(ctx.namer.name(current))
        current = ctx.engine.tau(current)
    ctx.emit(", ".join(names) + "\n")
    return EXIT_OK


def _component_text(report: ComponentReport) -> str:
    lines = [
        f"algebra: {report.algebra}",
        f"classes: {report.classes} triangles: {report.triangles}",
        f"orbits: {report.orbit_count} verdict: {report.verdict}",
        f"shift: [-1] = tau^{report.shift_power}"
        if report.shift_power is not None
        else "shift: [-1] permutes the orbits",
    ]
    for orbit in report.orbits:
        lines.append(
            f"  {orbit.label}\tperiod={orbit.tau_period} shift={orbit.shift} "
            f"[-1] -> {orbit.shift_image} valency={orbit.valency}"
        )
    if report.strip_events:
        lines.append(f"strip starts: {', '.join(report.strip_events)}")
    return "\n".join(lines) + "\n"


def cmd_component(ctx: CommandContext) -> int:
    if ctx.output_format in ("dot", "structured"):
        ctx.require("out")
    start = parse_expression(ctx.algebra, ctx.require("start"))
    component = build_component(ctx.engine, start, ctx.args.budget)
    if ctx.output_format == "dot":
        ctx.emit(export_dot(component, ctx.namer))
        return EXIT_OK
    report = component_report(component, ctx.namer)
    if ctx.output_format == "structured":
        ctx.emit_model(report)
    else:
        ctx.emit(_component_text(report))
    return EXIT_OK


def cmd_verify(ctx: CommandContext) -> int:
    report = run_verifier(ctx.args.name, ctx.settings)
    if ctx.output_format == "structured":
        ctx.emit_model(report)
    elif report.passed:
        ctx.emit(f"PASS {report.name} ({len(report.checks)} checks)\n")
    else:
        failure = report.first_failure
        assert failure is not None
        detail = f": {failure.detail}" if failure.detail else ""
        ctx.emit(f"FAIL {report.name}: {failure.name}{detail}\n")
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS: dict[str, Callable[[CommandContext], int]] = {
    "info": cmd_info,
    "modules": cmd_modules,
    "resolve": cmd_resolve,
    "hom": cmd_hom,
    "gldim": cmd_gldim,
    "triangle": cmd_triangle,
    "tau-orbit": cmd_tau_orbit,
    "component": cmd_component,
    "verify": cmd_verify,
}


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--preset", help=f"Built-in algebra: {' | '.join(PRESETS)}")
    source.add_argument("--algebra", help="JSON or YAML algebra file")
    common.add_argument("--format", choices=["text", "dot", "structured"], help="Output format")
    common.add_argument("--out", help="Write output to this file")
    common.add_argument("--seed", type=int, help="Seed for randomized internals")
    common.add_argument("--metrics-out", help="Write Prometheus metrics here ('-' for stdout)")
    common.add_argument(
        "--log-level", choices=["debug", "info", "warning", "error"], help="Logging level"
    )

    parser = argparse.ArgumentParser(
        prog="arq",
        description="AR triangles and components in derived categories of linear Nakayama algebras",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common], help="Kupisch data")
    sub.add_parser("modules", parents=[common], help="Indecomposable modules with aliases")
    p = sub.add_parser("resolve", parents=[common], help="Minimal resolution of a module")
    p.add_argument("--module", help="Module expression")
    p.add_argument("--side", choices=["proj", "inj"], default="proj")
    p = sub.add_parser("hom", parents=[common], help="dim Hom(module, target)")
    p.add_argument("--module", help="Source module")
    p.add_argument("--target", help="Target module")
    sub.add_parser("gldim", parents=[common], help="Global dimension and its relation bound")
    p = sub.add_parser("triangle", parents=[common], help="AR triangle ending in a complex")
    p.add_argument("--end", help="Complex expression")
    p = sub.add_parser("tau-orbit", parents=[common], help="Names of X, tau X, tau^2 X, ...")
    p.add_argument("--start", help="Complex expression")
    p.add_argument("--steps", type=_non_negative, default=4)
    p = sub.add_parser("component", parents=[common], help="Knit the AR component of a complex")
    p.add_argument("--start", help="Complex expression")
    p.add_argument("--budget", type=_non_negative, help="Maximum number of triangles")
    p = sub.add_parser("verify", parents=[common], help="Run a theorem verifier")
    p.add_argument("name", help="example-d4 | zan:<n> | zdn:<n>")
    return parser


def _write_metrics(target: str) -> None:
    if target == "-":
        _, body = MetricsExporter.get_prometheus_format()
        sys.stdout.write(body.decode("utf-8"))
    else:
        MetricsExporter.write_textfile(target)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    ctx = CommandContext(args)
    configure_logging(ctx.settings.log_level, ctx.settings.log_json)
    logger.debug("command.start", command=args.command, seed=ctx.settings.seed)

    try:
        code = COMMANDS[args.command](ctx)
    except (AlgebraFileError, ExpressionSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as e:
        classes = len(e.partial.classes) if e.partial is not None else 0
        print(f"error: {e} ({classes} classes found)", file=sys.stderr)
        return EXIT_BUDGET
    except NakayamaError as e:
        logger.error("command.failed", command=args.command, error=str(e))
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_FAIL

    if args.metrics_out:
        _write_metrics(args.metrics_out)
    return code


if __name__ == "__main__":
    sys.exit(main())
