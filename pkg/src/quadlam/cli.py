"""Command line interface: ``quadlam <command> ...``.

Exit status 0 on success, 1 for usage errors and 2 for bad input data.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from .angles import parse_angle
from .cleaning import build_qml_l, limit_class_of_qlam
from .lamination import Chord, hausdorff_distance
from .leaffile import format_leaves, format_sections, read_lamination, write_text
from .pullback import build_pullback, critical_leaf, critical_quadrilateral
from .qml import as_minor, component_type, is_fixed_return, is_valid_minor, lavaurs_qml
from .render import GEODESIC, STRAIGHT, RenderStyle, render_svg
from .renorm import build_qml_nr, hyperbolic_root, tune, untune


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class JobConfig:
    command: str
    max_period: int | None = None
    depth: int | None = None
    inputs: list = field(default_factory=list)
    output: str | None = None
    style: RenderStyle = field(default_factory=RenderStyle)

    def __post_init__(self):
        for p in self.inputs + ([self.output] if self.output is not None else []):
            if not p:
                raise UsageError("empty path")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return v


def _angle(text):
    try:
        return parse_angle(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an angle: {text}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quadlam", description="Quadratic invariant laminations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen-qml", help="minors of period up to N")
    s.add_argument("--max-period", type=_positive, required=True)
    s.add_argument("--out", required=True)

    s = sub.add_parser("clean-l", help="kept and erased minors of the cleaned lamination")
    s.add_argument("--max-period", type=_positive, required=True)
    s.add_argument("--out-kept", required=True)
    s.add_argument("--out-erased", required=True)

    s = sub.add_parser("nr", help="unpinched lamination and its gap edges")
    s.add_argument("--max-period", type=_positive, required=True)
    s.add_argument("--dyadic-depth", type=_positive, required=True)
    s.add_argument("--out-dir", required=True)

    s = sub.add_parser("pullback", help="pullback lamination of a critical portrait")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--leaf", type=_angle, metavar="p/q")
    g.add_argument("--quad", type=_angle, nargs=4, metavar="p/q")
    s.add_argument("--depth", type=_positive, required=True)
    s.add_argument("--out", required=True)

    for name in ("tune", "untune"):
        s = sub.add_parser(name, help=f"{name} an angle by a root minor")
        s.add_argument("--root", type=_angle, nargs=2, required=True, metavar="p/q")
        s.add_argument("--angle", type=_angle, required=True)

    s = sub.add_parser("classify", help="component type and return behaviour of a minor")
    s.add_argument("--minor", type=_angle, nargs=2, required=True, metavar="p/q")
    s.add_argument("--limit-classes", action="store_true",
                   help="print the limit-lamination classes instead")

    s = sub.add_parser("hausdorff", help="distance between two leaf files")
    s.add_argument("first")
    s.add_argument("second")

    s = sub.add_parser("render", help="draw leaf files as SVG")
    s.add_argument("--in", dest="inputs", required=True, help="comma separated leaf files")
    s.add_argument("--out", required=True)
    s.add_argument("--zoom", type=float, nargs=3, metavar=("CX", "CY", "SCALE"))
    s.add_argument("--size", type=_positive, default=800)
    s.add_argument("--straight", action="store_true", help="draw straight chords")
    return p


def _minor(pair):
    m = as_minor(Chord(*pair))
    if not is_valid_minor(m):
        raise ValueError(f"{m.chord} is not a minor")
    return m


def _run(args, out) -> None:
    cmd = args.command
    if cmd == "gen-qml":
        if args.max_period < 2:
            raise UsageError("--max-period must be at least 2")
        sections = {}
        for m in lavaurs_qml(args.max_period):
            sections.setdefault(m.period, []).append(m.chord)
        write_text(args.out, format_sections(sections, f"minors of period <= {args.max_period}"))
    elif cmd == "clean-l":
        if args.max_period < 2:
            raise UsageError("--max-period must be at least 2")
        r = build_qml_l(args.max_period)
        write_text(args.out_kept, format_leaves(r.leaves(), "kept minors and retained endpoints"))
        write_text(args.out_erased, format_leaves([m.chord for m in r.erased], "erased minors"))
    elif cmd == "nr":
        if args.max_period < 2:
            raise UsageError("--max-period must be at least 2")
        r = build_qml_nr(args.max_period, args.dyadic_depth)
        os.makedirs(args.out_dir, exist_ok=True)
        files = {
            "kept.leaves": [m.chord for m in r.kept],
            "erased.leaves": [m.chord for m in r.erased],
            "vgaps.leaves": r.v_gap_edges,
            "canr.leaves": r.ca_nr_edges,
        }
        for name, chords in files.items():
            write_text(os.path.join(args.out_dir, name), format_leaves(chords))
    elif cmd == "pullback":
        portrait = critical_leaf(args.leaf) if args.leaf is not None else critical_quadrilateral(*args.quad)
        lam = build_pullback(portrait, args.depth)
        write_text(args.out, format_leaves(lam, f"{lam.label}\ndepth {args.depth}"))
    elif cmd in ("tune", "untune"):
        root = hyperbolic_root(_minor(args.root))
        value = tune(root, args.angle) if cmd == "tune" else untune(root, args.angle)
        print("none" if value is None else value, file=out)
    elif cmd == "classify":
        m = _minor(args.minor)
        if args.limit_classes:
            for c in limit_class_of_qlam(m):
                print(c.report_line(str(m)), file=out)
        else:
            ret = "fixed-return" if is_fixed_return(m) else "non-fixed-return"
            print(f"{component_type(m)} {ret}", file=out)
    elif cmd == "hausdorff":
        d = hausdorff_distance(read_lamination(args.first), read_lamination(args.second))
        print(d, file=out)
    elif cmd == "render":
        if args.size == 0:
            raise UsageError("--size must be positive")
        if args.zoom is not None and args.zoom[2] <= 0:
            raise UsageError("zoom scale must be positive")
        style = RenderStyle(image_size_px=args.size, arc_mode=STRAIGHT if args.straight else GEODESIC)
        job = JobConfig("render", inputs=args.inputs.split(","), output=args.out, style=style)
        layers = [read_lamination(p) for p in job.inputs]
        write_text(job.output, render_svg(layers, job.style, zoom=args.zoom))


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        _run(args, out)
    except UsageError as e:
        print(f"quadlam: usage error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"quadlam: {e}", file=sys.stderr)
        return 2
    return 0


run_cli = main
