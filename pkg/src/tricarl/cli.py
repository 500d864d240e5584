"""Command-line front end.

Three modes, selected by the flags:

  tricarl --rho 100 --delta 3.5 --gamma1 .5 --gamma2 .5 --kappa .5 --tau 10
      single-point evolution, JSON report on stdout
  tricarl --rho 100 --delta 3.5 ... --tau 2 --sweep delta:-5:10:301 --outputs n1,xi12
      one-axis sweep, CSV (or JSON) table
  tricarl --preset fig5 --out fig5.csv
      figure preset: one labeled sweep per curve

Data files are byte-identical across identical invocations; run metadata
(timestamp, versions) goes to a separate ``<out>.run.json`` sidecar when
--out is used.  Exit codes: 0 success, 2 invalid specification, 3
numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

import numpy as np

from .errors import InvalidSpec, TricarlError
from .model import ModelParams
from .sweep import (
    AXES,
    OUTPUTS,
    FigurePreset,
    SweepSpec,
    evolve_point,
    figure_preset,
    run_preset,
    run_sweep,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricarl",
        description="Closed-form three-mode collective-recoil simulator",
    )
    parser.add_argument("--rho", type=float, help="collective coupling parameter (> 0)")
    parser.add_argument("--delta", type=float, default=0.0, help="pump-probe detuning")
    parser.add_argument("--gamma1", type=float, default=0.0, help="mode-1 decoherence rate")
    parser.add_argument("--gamma2", type=float, default=0.0, help="mode-2 decoherence rate")
    parser.add_argument("--kappa", type=float, default=0.0, help="cavity decay rate")
    parser.add_argument("--tau", type=float, help="evolution time (scaled units)")
    parser.add_argument(
        "--sweep",
        metavar="AXIS:START:STOP:POINTS",
        help=f"sweep one axis ({', '.join(AXES)}) over a uniform grid",
    )
    parser.add_argument(
        "--outputs",
        default="n1,n2,n3",
        help="comma-separated observables for sweeps: " + ",".join(OUTPUTS),
    )
    parser.add_argument("--preset", help="figure preset id (fig1 .. fig15, fig1a, ...)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="include the closed-form vs moment-ODE deviation in point reports",
    )
    parser.add_argument("--workers", type=int, help="parallel row evaluators")
    parser.add_argument(
        "--epsilon", type=float, default=1e-9, help="separability sign tolerance"
    )
    parser.add_argument(
        "--atoms", type=float, default=1e6, help="atom number for the bunching observable"
    )
    return parser


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _rows_to_csv(rows: list[dict], meta: list[str]) -> str:
    buffer = io.StringIO()
    for line in meta:
        buffer.write(f"# {line}\n")
    if rows:
        header = list(rows[0].keys())
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format_cell(row.get(key)) for key in header])
    return buffer.getvalue()


def _sweep_meta(spec: SweepSpec) -> list[str]:
    fixed = spec.fixed.to_dict()
    return [
        "tricarl sweep",
        " ".join(f"{k}={_format_cell(v)}" for k, v in fixed.items()),
        f"axis={spec.axis} start={_format_cell(spec.start)} "
        f"stop={_format_cell(spec.stop)} points={spec.points} "
        f"tau={_format_cell(spec.tau)} atoms={_format_cell(spec.atom_number)} "
        f"epsilon={_format_cell(spec.epsilon)}",
        "outputs=" + ",".join(spec.outputs),
    ]


def _emit(text: str, out: str | None, argv: list[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    sidecar = {
        "argv": argv,
        "written_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "numpy": np.__version__,
        "python": sys.version.split()[0],
    }
    path.with_suffix(path.suffix + ".run.json").write_text(
        json.dumps(sidecar, indent=2) + "\n", encoding="utf-8"
    )


def _json_dumps(payload) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _run_point(args: argparse.Namespace, params: ModelParams) -> str:
    if args.tau is None:
        raise InvalidSpec("single-point evolution requires --tau")
    if args.tau < 0:
        raise InvalidSpec(f"tau must be >= 0, got {args.tau!r}")
    report = evolve_point(
        params,
        args.tau,
        atom_number=args.atoms,
        epsilon=args.epsilon,
        oracle=args.oracle,
    )
    return _json_dumps(report)


def _parse_sweep_flag(text: str) -> tuple[str, float, float, int]:
    parts = text.split(":")
    if len(parts) != 4:
        raise InvalidSpec(f"--sweep wants AXIS:START:STOP:POINTS, got {text!r}")
    axis = parts[0]
    try:
        start, stop, points = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError as exc:
        raise InvalidSpec(f"bad --sweep numbers in {text!r}: {exc}") from exc
    return axis, start, stop, points


def _run_sweep_mode(args: argparse.Namespace, params: ModelParams) -> str:
    axis, start, stop, points = _parse_sweep_flag(args.sweep)
    spec = SweepSpec(
        axis=axis,
        start=start,
        stop=stop,
        points=points,
        fixed=params,
        outputs=tuple(name for name in args.outputs.split(",") if name),
        tau=args.tau,
        atom_number=args.atoms,
        epsilon=args.epsilon,
    )
    rows = run_sweep(spec, workers=args.workers)
    if args.format == "json":
        return _json_dumps({"kind": "sweep", "spec": spec.to_dict(), "rows": rows})
    return _rows_to_csv(rows, _sweep_meta(spec))


def _run_preset_mode(args: argparse.Namespace) -> str:
    preset: FigurePreset = figure_preset(args.preset)
    rows = run_preset(preset, workers=args.workers)
    if args.format == "json":
        payload = {
            "kind": "preset",
            "id": preset.id,
            "description": preset.description,
            "curves": [
                {"label": label, "spec": spec.to_dict()}
                for label, spec in preset.curves
            ],
            "rows": rows,
        }
        return _json_dumps(payload)
    meta = [f"tricarl preset {preset.id}", preset.description]
    return _rows_to_csv(rows, meta)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    effective_argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(effective_argv)
    try:
        if args.preset:
            text = _run_preset_mode(args)
        else:
            if args.rho is None:
                raise InvalidSpec("--rho is required without --preset")
            try:
                params = ModelParams(
                    rho=args.rho,
                    delta=args.delta,
                    gamma1=args.gamma1,
                    gamma2=args.gamma2,
                    kappa=args.kappa,
                )
            except ValueError as exc:
                raise InvalidSpec(str(exc)) from exc
            if args.sweep:
                text = _run_sweep_mode(args, params)
            else:
                text = _run_point(args, params)
    except InvalidSpec as exc:
        sys.stderr.write(_json_dumps({"error": {"code": exc.code, "message": str(exc)}}))
        return EXIT_INVALID
    except TricarlError as exc:
        sys.stderr.write(_json_dumps({"error": {"code": exc.code, "message": str(exc)}}))
        return EXIT_NUMERICAL
    _emit(text, args.out, effective_argv)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
