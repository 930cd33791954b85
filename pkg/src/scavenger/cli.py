"""Command-line driver: file ingestion, searches, and report emission.

Reports use a stable line grammar — `CHECK <name> PASS|FAIL|WARN <detail>`
lines followed by a `VERDICT` line — so runs can be diffed.  Exit codes:
0 pass, 1 fail, 2 pass with warnings, 64 usage or malformed input.  Worker
counts never change output bytes; `SCAVENGER_WORKERS` overrides `--workers`.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cycles import find_5cycle, find_symmetric_5cycle, gen_vectors, scan_d
from .geom import circle_param, embed_isosceles, equidistant_circle, rational_point_on_circle
from .hunts import (
    ASpec,
    Certificate,
    Check,
    Report,
    farey_parameters,
    greedy_hunt,
    grotzsch_subgraph_hunt,
    grotzsch_type_hunt,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from .numtheory import (
    TernaryForm,
    UnsolvableFormError,
    is_quadratic_residue,
    legendre_solution,
    normalize_form,
)
from .qcore import QPoint3, Rational, format_point, format_rational, parse_rational

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_WARN = 2
EXIT_USAGE = 64


# --- file ingestion ---------------------------------------------------------------


@dataclass(frozen=True)
class VertexFile:
    """A parsed point-list file: `t=<rational>` header, one point per line,
    `#` comments.  Points are deduplicated; each dropped row is a warning."""

    path: str
    t: Rational
    points: tuple[QPoint3, ...]
    warnings: tuple[str, ...] = ()


def _parse_point_line(line: str, lineno: int) -> QPoint3:
    tokens = line.split()
    if len(tokens) != 3:
        raise ValueError(f"line {lineno}: expected three coordinates, got {len(tokens)}")
    coords = []
    for tok in tokens:
        try:
            coords.append(parse_rational(tok))
        except ValueError as exc:
            column = line.index(tok) + 1
            raise ValueError(f"line {lineno}, column {column}: {exc}") from None
    return QPoint3(*coords)


def parse_vertex_file(path) -> VertexFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from None
    t = None
    points: list[QPoint3] = []
    first_seen: dict[QPoint3, int] = {}
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if t is None:
            if not line.startswith("t="):
                raise ValueError(f"line {lineno}: expected header t=<rational>, got {line!r}")
            try:
                t = parse_rational(line[2:])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            if t <= 0:
                raise ValueError(f"line {lineno}: squared distance must be positive, got {t}")
            continue
        p = _parse_point_line(line, lineno)
        if p in first_seen:
            warnings.append(
                f"line {lineno}: duplicate of line {first_seen[p]}: {format_point(p)}"
            )
            continue
        first_seen[p] = lineno
        points.append(p)
    if t is None:
        raise ValueError("missing header line t=<rational>")
    if not points:
        raise ValueError("no points after the header")
    return VertexFile(str(path), t, tuple(points), tuple(warnings))


def write_vertex_file(path, t: Rational, points) -> None:
    lines = [f"t={format_rational(Fraction(t))}"]
    lines.extend(format_point(p) for p in points)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class RunConfig:
    """Validated per-command bounds and plumbing."""

    workers: int = 1
    out: str | None = None
    height: int = 12
    box: Fraction = Fraction(10)
    cap: int = 1000
    denominator: int = 3
    d_bound: int | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.height < 1:
            raise ValueError(f"height must be positive, got {self.height}")
        if self.box <= 0:
            raise ValueError(f"box radius must be positive, got {self.box}")
        if self.cap < 1:
            raise ValueError(f"cap must be positive, got {self.cap}")
        if self.d_bound is not None and self.d_bound < 1:
            raise ValueError(f"d bound must be positive, got {self.d_bound}")


def _config(args) -> RunConfig:
    workers = getattr(args, "workers", 1)
    env = os.environ.get("SCAVENGER_WORKERS")
    if env is not None:
        try:
            workers = int(env)
        except ValueError:
            raise ValueError(f"SCAVENGER_WORKERS must be an integer, got {env!r}") from None
    return RunConfig(
        workers=workers,
        out=getattr(args, "out", None),
        height=getattr(args, "height", 12),
        box=parse_rational(getattr(args, "box", "10")),
        cap=getattr(args, "cap", 1000),
        denominator=getattr(args, "denominator", 3),
        d_bound=getattr(args, "d_bound", None),
    )


# --- subcommands ------------------------------------------------------------------


def _sniff_certificate(path) -> bool:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.startswith("certificate ")
    raise ValueError(f"{path} is empty")


def _cmd_verify(args) -> int:
    if _sniff_certificate(args.file):
        report = verify_certificate(read_certificate(args.file))
    else:
        vf = parse_vertex_file(args.file)
        cert = Certificate("direct-chromatic", vf.t, vf.points, None, {})
        inner = verify_certificate(cert)
        checks = list(inner.checks)
        if vf.warnings:
            checks.insert(
                0,
                Check("file-duplicates", "WARN", f"{len(vf.warnings)} duplicate rows dropped"),
            )
        report = Report(inner.kind, inner.t, tuple(checks))
    sys.stdout.write(report.render())
    return report.exit_code


def _int_t(t: Rational, context: str) -> int:
    t = Fraction(t)
    if t.denominator != 1:
        raise ValueError(f"{context} requires an integer squared distance, got {t}")
    return int(t)


def _emit_certificate(cert: Certificate, cfg: RunConfig) -> int:
    report = verify_certificate(cert)
    if report.failed:
        raise RuntimeError("internal error: a hunt emitted a certificate that fails verification")
    sys.stdout.write(report.render())
    if cfg.out:
        write_certificate(cert, cfg.out)
    return report.exit_code


def _cmd_hunt_greedy(args) -> int:
    cfg = _config(args)
    vf = parse_vertex_file(args.seed)
    t = _int_t(vf.t, "hunt-greedy")
    spec = ASpec(cfg.denominator, -cfg.box, cfg.box)
    result = greedy_hunt(t, list(vf.points), spec, cap=cfg.cap)
    if not result.succeeded:
        sys.stdout.write(
            f"HUNT FAIL order={result.order} cap={cfg.cap} "
            f"colors={result.state.stored_coloring.color_count()}\n"
        )
        return EXIT_FAIL
    g = result.graph
    sys.stdout.write(f"HUNT PASS order={g.order} edges={len(g.edges)} iterations={result.iterations}\n")
    cert = Certificate("direct-chromatic", t, g.vertices, tuple(sorted(g.edges)), {})
    return _emit_certificate(cert, cfg)


def _cmd_hunt_grotzsch_type(args) -> int:
    cfg = _config(args)
    vf = parse_vertex_file(args.cycle)
    t = _int_t(vf.t, "hunt-grotzsch-type")
    if len(vf.points) != 5:
        raise ValueError(f"cycle file must contain exactly 5 points, got {len(vf.points)}")
    out = grotzsch_type_hunt(
        t, list(vf.points), farey_parameters(cfg.height), workers=cfg.workers
    )
    if out is None:
        sys.stdout.write(f"HUNT FAIL height={cfg.height}\n")
        return EXIT_FAIL
    _, cert = out
    sys.stdout.write("HUNT PASS order=25\n")
    return _emit_certificate(cert, cfg)


def _cmd_hunt_grotzsch_subgraph(args) -> int:
    cfg = _config(args)
    t = _int_t(parse_rational(args.t), "hunt-grotzsch-subgraph")
    sym = find_symmetric_5cycle(t, d=args.d, d_bound=cfg.d_bound)
    if sym is None:
        sys.stdout.write("HUNT FAIL no symmetric 5-cycle within bounds\n")
        return EXIT_FAIL
    sys.stdout.write(f"cycle d={format_rational(Fraction(sym.base_dist_sq))}\n")
    params = farey_parameters(cfg.height)
    cert = grotzsch_subgraph_hunt(
        t, sym, [(a, b) for a in params for b in params], workers=cfg.workers
    )
    if cert is None:
        sys.stdout.write(f"HUNT FAIL height={cfg.height}\n")
        return EXIT_FAIL
    sys.stdout.write("HUNT PASS order=10\n")
    return _emit_certificate(cert, cfg)


def _cmd_find_cycle(args) -> int:
    cfg = _config(args)
    t = _int_t(parse_rational(args.t), "find-cycle")
    denominators = {int(d) for d in args.denominators.split(",")}
    pool = gen_vectors(t, denominators, args.height)
    cycle = find_5cycle(t, pool)
    if cycle is None:
        sys.stdout.write("no 5-cycle found within bounds\n")
        return EXIT_FAIL
    for p in cycle:
        sys.stdout.write(format_point(p) + "\n")
    if cfg.out:
        write_vertex_file(cfg.out, t, cycle)
    return EXIT_PASS


def _cmd_find_symmetric_cycle(args) -> int:
    cfg = _config(args)
    t = _int_t(parse_rational(args.t), "find-symmetric-cycle")
    sym = find_symmetric_5cycle(t, d=args.d, d_bound=cfg.d_bound)
    if sym is None:
        sys.stdout.write("no symmetric 5-cycle found within bounds\n")
        return EXIT_FAIL
    sys.stdout.write(f"d={format_rational(Fraction(sym.base_dist_sq))}\n")
    for p in sym.points():
        sys.stdout.write(format_point(p) + "\n")
    if cfg.out:
        write_vertex_file(cfg.out, t, sym.points())
    return EXIT_PASS


def _cmd_scan_d(args) -> int:
    cfg = _config(args)
    t = _int_t(parse_rational(args.t), "scan-d")
    bound = args.bound if args.bound is not None else 4 * t - 1
    d = scan_d(t, bound, workers=cfg.workers)
    if d is None:
        sys.stdout.write(f"no admissible d up to {bound}\n")
        return EXIT_FAIL
    sys.stdout.write(f"d={format_rational(Fraction(d))}\n")
    for base, legs in ((Fraction(t), Fraction(d)), (Fraction(d), Fraction(t))):
        b1, b2, apex = embed_isosceles(base, legs)
        sys.stdout.write(
            f"triangle base_sq={format_rational(base)} legs_sq={format_rational(legs)}: "
            f"({format_point(b1)}) ({format_point(b2)}) ({format_point(apex)})\n"
        )
    return EXIT_PASS


def _cmd_solve_legendre(args) -> int:
    form = TernaryForm(args.a, args.b, args.c)
    (a, b, c), _ = normalize_form(form)
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        sys.stdout.write("unsolvable: definite form, only the trivial zero\n")
        return EXIT_FAIL
    conditions = (
        ("-ab", -a * b, abs(c)),
        ("-ac", -a * c, abs(b)),
        ("-bc", -b * c, abs(a)),
    )
    for name, value, modulus in conditions:
        if not is_quadratic_residue(value, modulus):
            sys.stdout.write(f"unsolvable: {name} = {value} not a QR of {modulus}\n")
            return EXIT_FAIL
    x, y, z = legendre_solution(form)
    assert form.value(x, y, z) == 0
    sys.stdout.write(f"solution: {x} {y} {z}\n")
    return EXIT_PASS


def _cmd_param_circle(args) -> int:
    cfg = _config(args)
    vf = parse_vertex_file(args.foci)
    if len(vf.points) != 2:
        raise ValueError(f"foci file must contain exactly 2 points, got {len(vf.points)}")
    circle = equidistant_circle(vf.points[0], vf.points[1], vf.t)
    try:
        chart = circle_param(circle, rational_point_on_circle(circle))
    except UnsolvableFormError as exc:
        sys.stdout.write(f"no rational points: {exc}\n")
        return EXIT_FAIL
    if args.params:
        values = [parse_rational(s) for s in args.params]
    else:
        values = list(farey_parameters(cfg.height))[: args.count]
    for s in values:
        p = chart.point_at(s)
        sys.stdout.write(f"s={format_rational(s)} {format_point(p)}\n")
    return EXIT_PASS


# --- dispatch ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="scavenger",
        description="Exact search and verification of 4-chromatic rational distance subgraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("verify", help="check a vertex or certificate file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hunt-greedy", help="grow a non-3-colorable set from a seed 5-cycle")
    p.add_argument("seed", help="vertex file with the seed 5-cycle")
    p.add_argument("--box", default="10", help="half-width of the candidate box (default 10)")
    p.add_argument("--cap", type=int, default=1000)
    p.add_argument("--denominator", type=int, default=3)
    p.add_argument("--out", help="write the certificate here")
    p.set_defaults(func=_cmd_hunt_greedy)

    p = sub.add_parser("hunt-grotzsch-type", help="decorate a 5-cycle into the order-25 shape")
    p.add_argument("cycle", help="vertex file with the base 5-cycle")
    p.add_argument("--height", type=int, default=12, help="parameter height bound (default 12)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hunt_grotzsch_type)

    p = sub.add_parser(
        "hunt-grotzsch-subgraph", help="build the forced-pair device over a symmetric 5-cycle"
    )
    p.add_argument("t")
    p.add_argument("--d", type=parse_rational, default=None, help="force this base squared distance")
    p.add_argument("--d-bound", dest="d_bound", type=int, default=None)
    p.add_argument("--height", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hunt_grotzsch_subgraph)

    p = sub.add_parser("find-cycle", help="find a 5-cycle at a given squared distance")
    p.add_argument("t")
    p.add_argument("--height", type=int, default=60)
    p.add_argument("--denominators", default="1,3")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_find_cycle)

    p = sub.add_parser("find-symmetric-cycle", help="find a mirror-symmetric 5-cycle")
    p.add_argument("t")
    p.add_argument("--d", type=parse_rational, default=None)
    p.add_argument("--d-bound", dest="d_bound", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_find_symmetric_cycle)

    p = sub.add_parser("scan-d", help="minimal d admitting both equidistant-pair triangles")
    p.add_argument("t")
    p.add_argument("--bound", type=int, default=None, help="search limit (default 4t-1)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_scan_d)

    p = sub.add_parser("solve-legendre", help="solve a x^2 + b y^2 + c z^2 = 0")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_solve_legendre)

    p = sub.add_parser("param-circle", help="exact rational points on an equidistant circle")
    p.add_argument("foci", help="vertex file with the two foci; header t is the focal squared distance")
    p.add_argument("--params", nargs="*", default=None, help="explicit parameter values")
    p.add_argument("--count", type=int, default=10, help="number of default parameters")
    p.add_argument("--height", type=int, default=12)
    p.set_defaults(func=_cmd_param_circle)

    return parser


def dispatch(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, UnsolvableFormError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> int:
    return dispatch(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
