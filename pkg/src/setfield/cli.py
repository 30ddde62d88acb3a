"""Command line surface: gen / matrices / det / check / phase / group / kaehler.

Every number in a report comes straight from the library; the CLI only
parses, dispatches and serializes.  Reports are deterministic for a fixed
(input, seed): JSON is emitted with sorted keys, the random field preset uses
Python's seeded Mersenne Twister, and SVG plots are assembled by hand.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from dataclasses import dataclass, field

from . import __version__, determinants, identities, kaehler, scalars, spectral
from .connection import (EnergyFunction, build_matrices, explicit_field,
                         omega_field, ones_field, random_field, roots_field)
from .scalars import KINDS
from .setsystem import SetSystem, parse_system, system_to_json

ENV_TOLERANCE = "SETFIELD_TOLERANCE"
ENV_STEP_CAP = "SETFIELD_STEP_CAP"
ENV_LEIBNIZ_CAP = "SETFIELD_LEIBNIZ_CAP"


@dataclass
class RunConfig:
    """Everything one subcommand run needs, resolved from flags and env vars."""

    command: str
    inline: str | None = None
    input_path: str | None = None
    closure: bool = False
    preset: str = "omega"
    kind_name: str | None = None
    tolerance: float = scalars.DEFAULT_TOL
    steps: int = spectral.DEFAULT_STEPS
    output_dir: str | None = None
    method: str = "all"
    identity: str = "all"
    wheel: int | None = None
    pivot_log: bool = False
    heatmap: str | None = None
    extra: dict = field(default_factory=dict)


def load_system(config: RunConfig) -> SetSystem:
    if config.input_path:
        with open(config.input_path) as fh:
            text = fh.read()
    elif config.inline:
        text = config.inline
    else:
        raise ValueError("need --input FILE or --inline TEXT")
    return parse_system(text, closure=config.closure)


def split_literals(text):
    """Split a comma list of scalar literals, ignoring commas inside parens."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def make_field(system: SetSystem, config: RunConfig) -> EnergyFunction:
    preset = config.preset
    kind = KINDS[config.kind_name] if config.kind_name else None
    if preset == "omega":
        return omega_field(system)
    if preset == "ones":
        return ones_field(system, kind or scalars.REAL)
    if preset.startswith("roots:"):
        order = int(preset.split(":", 1)[1])
        if kind not in (None, scalars.COMPLEX):
            raise ValueError("preset roots:n needs the complex kind")
        return roots_field(system, order)
    if preset.startswith("random:"):
        parts = preset.split(":")
        seed = int(parts[1])
        rkind = KINDS[parts[2]] if len(parts) > 2 else (kind or scalars.COMPLEX)
        unit = len(parts) > 3 and parts[3] == "unit"
        return random_field(system, rkind, random.Random(seed), unit=unit)
    if preset.startswith("values:"):
        lits = split_literals(preset.split(":", 1)[1])
        values = [scalars.parse_scalar(t, kind) for t in lits]
        if len(values) != len(system):
            raise ValueError("field has %d values for %d elements"
                             % (len(values), len(system)))
        return explicit_field(values, kind)
    raise ValueError("unknown field preset %r" % preset)


def matrix_to_json(M):
    return [[scalars.to_jsonable(v) for v in row] for row in M]


def emit(report: dict, config: RunConfig, name: str) -> None:
    report = dict(report)
    report["version"] = __version__
    text = json.dumps(report, sort_keys=True, indent=2, default=_json_default)
    print(text)
    if config.output_dir:
        os.makedirs(config.output_dir, exist_ok=True)
        with open(os.path.join(config.output_dir, name + ".json"), "w") as fh:
            fh.write(text + "\n")


def _json_default(v):
    if isinstance(v, (scalars.Quaternion, scalars.Octonion,
                      scalars.GaussianRational)):
        return scalars.to_jsonable(v)
    if hasattr(v, "item"):
        return v.item()
    raise TypeError("not JSON serializable: %r" % (v,))


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(config: RunConfig) -> int:
    system = load_system(config)
    emit({
        "elements": system_to_json(system),
        "n": len(system),
        "dimension": system.dimension,
        "is_simplicial_complex": system.is_simplicial_complex(),
        "vertices": sorted(system.vertex_union),
    }, config, "gen")
    return 0


def cmd_matrices(config: RunConfig) -> int:
    system = load_system(config)
    h = make_field(system, config)
    cm = build_matrices(system, h)
    gbar_L = identities.mat_mul(identities.entrywise_conjugate(cm.g), cm.L,
                                h.kind)
    emit({
        "elements": system_to_json(system),
        "kind": h.kind.name,
        "field": [scalars.to_jsonable(v) for v in h.values],
        "L": matrix_to_json(cm.L),
        "g": matrix_to_json(cm.g),
        "S": list(cm.signs),
        "conj_g_L": matrix_to_json(gbar_L),
    }, config, "matrices")
    return 0


def cmd_det(config: RunConfig) -> int:
    system = load_system(config)
    h = make_field(system, config)
    cm = build_matrices(system, h)
    leib_cap = int(os.environ.get(ENV_LEIBNIZ_CAP,
                                  determinants.DEFAULT_LEIBNIZ_CAP))
    out = {"kind": h.kind.name, "n": len(system), "method": config.method}
    for label, M in (("L", cm.L), ("g", cm.g)):
        entry = {}
        if config.method in ("study", "all"):
            entry["study"] = determinants.study_det(M, h.kind)
        if config.method in ("dieudonne", "all") and h.kind is not scalars.OCTONION:
            entry["dieudonne"] = scalars.to_jsonable(
                determinants.dieudonne_det(M, h.kind))
        if config.method in ("leibniz", "all"):
            try:
                entry["leibniz"] = scalars.to_jsonable(
                    determinants.leibniz_det(M, h.kind, leib_cap))
            except determinants.MatrixSizeError as exc:
                entry["leibniz_skipped"] = str(exc)
        if config.pivot_log:
            entry["pivot_log"] = determinants.row_reduce(
                M, h.kind, want_log=True).log
        out[label] = entry
    emit(out, config, "det")
    return 0


def cmd_check(config: RunConfig) -> int:
    system = load_system(config)
    h = make_field(system, config)
    names = (["greenstar", "energy", "gaussbonnet", "unimodular", "signature"]
             if config.identity == "all" else [config.identity])
    reports = identities.run_checks(system, h, names, config.tolerance)
    failed = [r.name for r in reports if r.applicability is None and not r.holds]
    emit({
        "checks": [{
            "name": r.name,
            "holds": r.holds,
            "max_abs_deviation": r.max_abs_deviation,
            "applicability": r.applicability,
            "witnesses": [list(w) for w in r.witnesses],
            "details": r.details,
        } for r in reports],
        "failed": failed,
    }, config, "check")
    return 1 if failed else 0


def _step_cap() -> int | None:
    cap = os.environ.get(ENV_STEP_CAP)
    return int(cap) if cap else None


def cmd_phase(config: RunConfig) -> int:
    system = load_system(config)
    h = make_field(system, config)
    wheels = ([config.wheel] if config.wheel is not None
              else list(range(len(system))))
    summary = []
    for w in wheels:
        path = spectral.track_wheel(system, h, w, config.steps, _step_cap())
        perm = spectral.path_permutation(path)
        winds = spectral.winding_numbers(path)
        summary.append({
            "wheel": w,
            "steps": path.steps,
            "permutation": spectral.format_cycles(perm),
            "windings": winds,
        })
        if config.output_dir:
            os.makedirs(config.output_dir, exist_ok=True)
            base = os.path.join(config.output_dir, "wheel_%02d" % w)
            _write_path_csv(base + ".csv", path)
            _write_path_svg(base + ".svg", path)
    emit({"wheels": summary, "kind": h.kind.name}, config, "phase")
    return 0


def cmd_group(config: RunConfig) -> int:
    system = load_system(config)
    h = make_field(system, config)
    try:
        report = spectral.monodromy_report(system, h, config.steps,
                                           max_steps=_step_cap())
    except spectral.TrackingAmbiguityError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    emit({
        "n": len(system),
        "steps": config.steps,
        "order": report.group_order,
        "generators": [{
            "wheel": w.wheel,
            "cycles": w.cycle_string(),
            "order": w.order,
            "windings": list(w.windings),
        } for w in report.generators],
        "presentation_finite": report.pi_big_presentation,
        "presentation_mixed": report.pi_small_presentation,
        "commuting_pairs": [list(p) for p in report.commuting_pairs],
        "relations_verified": report.relations_verified,
        "duplicate_wheels": [list(p) for p in report.duplicate_wheels],
        "multi_winding_wheels": report.multi_winding_wheels,
    }, config, "group")
    return 0


def cmd_kaehler(config: RunConfig) -> int:
    system = load_system(config)
    report = kaehler.kaehler_report(system)
    if config.heatmap:
        _write_form_svg(config.heatmap, report.form)
    emit({
        "n": report.n,
        "rank": report.rank,
        "det": str(report.det),
        "factorization": [[p, e] for p, e in report.factorization],
        "dimension": system.dimension,
        "divisible_by_3": report.det % 3 == 0,
    }, config, "kaehler")
    return 0


# ---------------------------------------------------------------------------
# csv / svg writers

def _write_path_csv(path_name: str, path) -> None:
    with open(path_name, "w") as fh:
        head = ["t"]
        for k in range(path.n):
            head += ["re_lambda_%d" % (k + 1), "im_lambda_%d" % (k + 1)]
        fh.write(",".join(head) + "\n")
        for row, t in zip(path.values, path.ts):
            cells = ["%.12g" % t]
            for v in row:
                cells += ["%.12g" % v.real, "%.12g" % v.imag]
            fh.write(",".join(cells) + "\n")


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")


def _write_path_svg(path_name: str, path, size=480) -> None:
    vals = path.values
    span = max(1e-9, float(abs(vals).max()) * 1.1)

    def sx(x):
        return "%.2f" % (size / 2 + x / span * size / 2)

    def sy(y):
        return "%.2f" % (size / 2 - y / span * size / 2)

    lines = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="0 0 %d %d">' % (size, size, size, size),
             '<title>spectral curves, wheel %d</title>' % path.wheel,
             '<rect width="%d" height="%d" fill="white"/>' % (size, size),
             '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#999"/>'
             % (sx(-span), sy(0), sx(span), sy(0)),
             '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#999"/>'
             % (sx(0), sy(-span), sx(0), sy(span)),
             '<circle cx="%s" cy="%s" r="3" fill="black"/>' % (sx(0), sy(0))]
    for k in range(path.n):
        pts = " ".join("%s,%s" % (sx(v.real), sy(v.imag)) for v in vals[:, k])
        lines.append('<polyline points="%s" fill="none" stroke="%s" '
                     'stroke-width="1"/>' % (pts, _PALETTE[k % len(_PALETTE)]))
    lines.append("</svg>")
    with open(path_name, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_form_svg(path_name: str, form, cell=8) -> None:
    n = form.shape[0]
    peak = max(1, int(form.max()))
    lines = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">'
             % (n * cell, n * cell)]
    for i in range(n):
        for j in range(n):
            v = int(form[i, j])
            shade = 255 - int(200 * math.sqrt(v / peak))
            lines.append('<rect x="%d" y="%d" width="%d" height="%d" '
                         'fill="rgb(%d,%d,%d)"/>'
                         % (j * cell, i * cell, cell, cell,
                            shade, shade, 255 if v else shade))
    lines.append("</svg>")
    with open(path_name, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setfield",
        description="connection matrices, determinant identities, spectral "
                    "monodromy and exact Kaehler forms of fields on finite "
                    "set systems")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_field=True):
        p.add_argument("--input", dest="input_path", help="file with one complex")
        p.add_argument("--inline", help="inline complex, JSON or {{1,2},{2,3}}")
        p.add_argument("--closure", action="store_true",
                       help="generate the downward closure of the input sets")
        p.add_argument("--output", dest="output_dir", help="report directory")
        if with_field:
            p.add_argument("--field", dest="preset", default="omega",
                           help="omega | ones | roots:N | random:SEED:KIND"
                                " | values:a,b,c")
            p.add_argument("--kind", dest="kind_name", choices=sorted(KINDS),
                           help="scalar kind for ones/values presets")
        p.add_argument("--tolerance", type=float,
                       default=float(os.environ.get(ENV_TOLERANCE,
                                                    scalars.DEFAULT_TOL)))

    p = sub.add_parser("gen", help="parse / close a complex and describe it")
    common(p, with_field=False)

    p = sub.add_parser("matrices", help="emit L, g, S and conjugate(g).L")
    common(p)

    p = sub.add_parser("det", help="determinants of L and g")
    common(p)
    p.add_argument("--method", choices=["leibniz", "study", "dieudonne", "all"],
                   default="all")
    p.add_argument("--pivot-log", dest="pivot_log", action="store_true")

    p = sub.add_parser("check", help="structural identity checks")
    common(p)
    p.add_argument("--identity", default="all",
                   choices=["greenstar", "energy", "gaussbonnet", "unimodular",
                            "signature", "all"])

    p = sub.add_parser("phase", help="eigenvalue paths for turned wheels")
    common(p)
    p.add_argument("--wheel", type=int, help="single wheel index (default all)")
    p.add_argument("--steps", type=int, default=spectral.DEFAULT_STEPS)

    p = sub.add_parser("group", help="monodromy permutation group")
    common(p)
    p.add_argument("--steps", type=int, default=spectral.DEFAULT_STEPS)

    p = sub.add_parser("kaehler", help="exact bilinear form determinant")
    common(p, with_field=False)
    p.add_argument("--heatmap", help="write an SVG heatmap of the form here")
    return parser


COMMANDS = {
    "gen": cmd_gen,
    "matrices": cmd_matrices,
    "det": cmd_det,
    "check": cmd_check,
    "phase": cmd_phase,
    "group": cmd_group,
    "kaehler": cmd_kaehler,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fields = {f for f in RunConfig.__dataclass_fields__}
    config = RunConfig(**{k: v for k, v in vars(args).items() if k in fields})
    try:
        return COMMANDS[config.command](config)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
