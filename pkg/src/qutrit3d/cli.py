"""Command-line front end.

Subcommands analyze, scene, mub, pseudo, evolve, bridge, ortho and
random wrap the library operations over simple JSON files.

Exit codes: 0 success; 1 I/O or parse failure (including files that are
not Hermitian / trace-one / normalized); 2 structurally well-formed but
invalid state (not positive semidefinite, out of the admissible ball, or
a degenerate-scene export request); 3 internal inconsistency (library
self-checks disagree).

Sign convention: evolution uses U = exp(-i theta G).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .dynamics import (
    custom,
    evolve,
    one_axis_twist,
    rotation,
    trajectory,
    two_axis_counter,
)
from .errors import (
    DegenerateMeshError,
    InvalidStateError,
    MetricUndefinedError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    NotSymmetricError,
    OutOfBallError,
    QutritError,
    TraceError,
)
from .geometry import build_scene, export_scene_json, export_scene_obj, scene_to_dict
from .linalg import eig_hermitian3, eig_sym3
from .purestates import mub_bases, rik_decompose
from .spin1 import from_two_qubit, to_two_qubit
from .state import (
    RankReport,
    StateParams,
    ValidityReport,
    classify_rank,
    compose,
    decompose,
    gamma_norm,
    metric_tensor,
    params_from_bloch_tensor,
    random_density,
    semi_axes,
    validate,
)
from .tolerances import RANK_TOL

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


class CliIOError(QutritError):
    """File, JSON or structural parse failure (exit code 1)."""


class InternalCheckError(QutritError):
    """Two independent library routes disagree (exit code 3)."""


def _fmt(x: float) -> str:
    s = format(float(x), ".12g")
    return "0" if s == "-0" else s


def _vec(v) -> str:
    return " ".join(_fmt(x) for x in v)


def _float(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CliIOError(f"{where} is not a number")
    return float(value)


def _grid(obj, key: str, n: int):
    rows = obj.get(key)
    if not isinstance(rows, list) or len(rows) != n:
        raise CliIOError(f'"{key}" must be a {n}x{n} array')
    out = np.zeros((n, n))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise CliIOError(f'"{key}" row {i} must have {n} entries')
        for j, cell in enumerate(row):
            out[i, j] = _float(cell, f'"{key}"[{i}][{j}]')
    return out


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CliIOError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliIOError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise CliIOError(f"{path}: top-level JSON value must be an object")
    return obj


def _matrix_from_obj(obj: dict, path: str, n: int) -> np.ndarray:
    M = _grid(obj, "re", n) + 1j * _grid(obj, "im", n)
    return M


def load_state_file(path: str) -> np.ndarray:
    """Parse a state file into a Hermitian trace-one 3x3 matrix.

    Accepts {"re": .., "im": ..} densities or {"amplitudes": ..} pure
    states; Hermiticity / trace / normalization failures count as parse
    failures because they violate the file-format invariants.
    """
    obj = _read_json(path)
    if "amplitudes" in obj:
        amps = obj["amplitudes"]
        if not isinstance(amps, list) or len(amps) != 3:
            raise CliIOError('"amplitudes" must hold 3 [re, im] pairs')
        psi = np.zeros(3, dtype=complex)
        for i, pair in enumerate(amps):
            if not isinstance(pair, list) or len(pair) != 2:
                raise CliIOError(f'"amplitudes"[{i}] must be an [re, im] pair')
            psi[i] = _float(pair[0], f'"amplitudes"[{i}][0]') + 1j * _float(
                pair[1], f'"amplitudes"[{i}][1]'
            )
        try:
            p = rik_decompose(psi)
        except NotNormalizedError as exc:
            raise CliIOError(f"{path}: {exc}") from exc
        return np.outer(p.amp, p.amp.conj())
    if "re" in obj or "im" in obj:
        M = _matrix_from_obj(obj, path, 3)
        try:
            from .state import assert_density

            assert_density(M)
        except (NotHermitianError, TraceError) as exc:
            raise CliIOError(f"{path}: {exc}") from exc
        return M
    raise CliIOError(f'{path}: expected "re"/"im" or "amplitudes" keys')


def load_two_qubit_file(path: str) -> np.ndarray:
    obj = _read_json(path)
    M = _matrix_from_obj(obj, path, 4)
    dev = float(np.max(np.abs(M - M.conj().T)))
    if dev > 1e-10:
        raise CliIOError(f"{path}: matrix is not Hermitian (deviation {dev:.3e})")
    tr = complex(np.trace(M))
    if abs(tr - 1.0) > 1e-10:
        raise CliIOError(f"{path}: trace = {tr.real:.15g}, expected 1")
    return M


def load_hermitian_file(path: str) -> np.ndarray:
    obj = _read_json(path)
    M = _matrix_from_obj(obj, path, 3)
    dev = float(np.max(np.abs(M - M.conj().T)))
    if dev > 1e-10:
        raise CliIOError(f"{path}: matrix is not Hermitian (deviation {dev:.3e})")
    return M


def density_payload(rho: np.ndarray) -> dict:
    return {
        "re": [[float(x) for x in row] for row in rho.real],
        "im": [[float(x) for x in row] for row in rho.imag],
    }


def amplitudes_payload(psi: np.ndarray) -> dict:
    return {"amplitudes": [[float(c.real), float(c.imag)] for c in psi]}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
    else:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
        except OSError as exc:
            raise CliIOError(f"cannot write {out}: {exc}") from exc


# ---------------------------------------------------------------------------
# report assembly


@dataclass
class Report:
    params: StateParams
    validity: ValidityReport
    tensor_eigenvalues: np.ndarray
    axes: np.ndarray
    gamma: float | None
    rank: RankReport | None
    scene_case: str | None


_C1_TEXT = "diagonal weight outside [0, 1] (c1)"
_C2_TEXT = "2x2 principal minor negative (c2)"
_C3_TEXT = "determinant minor negative (c3)"
_SPECTRUM_TEXT = "negative eigenvalue with all minors inside tolerance (spectrum)"


def first_violation(v: ValidityReport) -> str | None:
    if v.overall:
        return None
    if not v.c1_ok:
        return _C1_TEXT
    if not v.c2_ok:
        return _C2_TEXT
    if not v.c3_ok:
        return _C3_TEXT
    return _SPECTRUM_TEXT


def build_report(rho: np.ndarray) -> Report:
    p = decompose(rho)
    v = validate(p)
    tvals, _ = eig_sym3(p.T)
    axes = semi_axes(tvals)
    try:
        gamma = gamma_norm(p.a, p.T)
    except MetricUndefinedError:
        gamma = None
    rank = None
    scene_case = None
    if v.overall:
        rank = classify_rank(rho)
        scene_case = build_scene(rho).case
    return Report(
        params=p,
        validity=v,
        tensor_eigenvalues=tvals,
        axes=axes,
        gamma=gamma,
        rank=rank,
        scene_case=scene_case,
    )


def report_text(r: Report) -> str:
    lines = [
        f"a: {_vec(r.params.a)}",
        f"q: {_vec(r.params.q)}",
        f"omega: {_vec(r.params.omega)}",
        f"tensor eigenvalues: {_vec(r.tensor_eigenvalues)}",
        f"semi-axes: {_vec(r.axes)}",
        f"gamma-norm: {'degenerate' if r.gamma is None else _fmt(r.gamma)}",
    ]
    bad = first_violation(r.validity)
    lines.append("validity: ok" if bad is None else f"validity: violated: {bad}")
    if r.rank is not None:
        lines.append(f"rank: {r.rank.rank}")
        lines.append(f"case: {r.rank.case}")
        lines.append(f"scene: {r.scene_case}")
    else:
        lines.append("rank: n/a")
        lines.append("case: n/a")
        lines.append("scene: n/a")
    return "\n".join(lines) + "\n"


def report_dict(r: Report) -> dict:
    m = metric_tensor(r.params.T)
    return {
        "params": {
            "a": [float(x) for x in r.params.a],
            "q": [float(x) for x in r.params.q],
            "omega": [float(x) for x in r.params.omega],
            "tensor": [[float(x) for x in row] for row in r.params.T],
        },
        "validity": {
            "c1_ok": r.validity.c1_ok,
            "c2_ok": r.validity.c2_ok,
            "c3_ok": r.validity.c3_ok,
            "overall": r.validity.overall,
        },
        "tensor_eigenvalues": [float(x) for x in r.tensor_eigenvalues],
        "semi_axes": [float(x) for x in r.axes],
        "gamma_norm": None if r.gamma is None else float(r.gamma),
        "metric": "degenerate"
        if not m.defined
        else [[float(x) for x in row] for row in m.gamma],
        "rank": None
        if r.rank is None
        else {
            "rank": r.rank.rank,
            "case": r.rank.case,
            "eigenvalues": [float(x) for x in r.rank.eigenvalues],
        },
        "scene_case": r.scene_case,
    }


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    rho = load_state_file(args.path)
    report = build_report(rho)
    text = (
        json.dumps(report_dict(report), indent=2) + "\n"
        if args.json
        else report_text(report)
    )
    _emit(text, args.out)
    return EXIT_OK if report.validity.overall else EXIT_INVALID


def cmd_scene(args) -> int:
    rho = load_state_file(args.path)
    scene = build_scene(rho)
    if args.format == "json":
        _emit(export_scene_json(scene) + "\n", args.out)
    else:
        _emit(
            export_scene_obj(scene, lat=args.lat, lon=args.lon, surface_only=args.surface_only),
            args.out,
        )
    return EXIT_OK


def cmd_mub(args) -> int:
    if args.basis not in (1, 2, 3, 4):
        raise CliIOError(f"--basis must be 1..4, got {args.basis}")
    if args.vector not in (1, 2, 3):
        raise CliIOError(f"--vector must be 1..3, got {args.vector}")
    fam = mub_bases()
    state = fam.bases[args.basis - 1][args.vector - 1]
    cross = []
    for b, basis in enumerate(fam.bases):
        if b == args.basis - 1:
            continue
        for other in basis:
            cross.append(abs(complex(state.amp.conj() @ other.amp)))
    if max(cross) - min(cross) > 1e-12:
        raise InternalCheckError("cross-basis overlaps are not uniform")
    rho = np.outer(state.amp, state.amp.conj())
    report = build_report(rho)
    out = json.dumps(amplitudes_payload(state.amp), indent=2) + "\n"
    out += f"cross-basis overlap modulus: {_fmt(sum(cross) / len(cross))}\n"
    out += report_text(report)
    _emit(out, args.out)
    return EXIT_OK


def cmd_pseudo(args) -> int:
    # build the tensor-=identity/3 state for any requested vector and let
    # the validity report say whether it is admissible, mirroring analyze
    p = params_from_bloch_tensor([args.ax, args.ay, args.az], np.eye(3) / 3.0)
    rho = compose(p)
    report = build_report(rho)
    out = json.dumps(density_payload(rho), indent=2) + "\n"
    out += report_text(report)
    _emit(out, args.out)
    return EXIT_OK if report.validity.overall else EXIT_INVALID


def _generator_from_flag(flag: str):
    if flag.startswith("custom:"):
        H = load_hermitian_file(flag.split(":", 1)[1])
        try:
            return custom(H)
        except NotHermitianError as exc:
            raise CliIOError(str(exc)) from exc
    try:
        kind, axis = flag.split(":", 1)
    except ValueError:
        raise CliIOError(f"generator flag {flag!r} is not of the form kind:axis")
    makers = {"rot": rotation, "twist": one_axis_twist, "counter": two_axis_counter}
    if kind not in makers or axis not in ("x", "y", "z"):
        raise CliIOError(
            f"unknown generator {flag!r}; use rot|twist|counter:x|y|z or custom:<path>"
        )
    return makers[kind](axis)


def cmd_evolve(args) -> int:
    rho = load_state_file(args.path)
    g = _generator_from_flag(args.generator)
    traj = trajectory(rho, g, args.theta, args.steps, with_scenes=args.scenes)
    records = []
    for i, theta in enumerate(traj.thetas):
        record = {"theta": float(theta), "state": density_payload(traj.states[i])}
        if traj.scenes is not None:
            record["scene"] = scene_to_dict(traj.scenes[i])
        records.append(record)
    _emit(json.dumps(records, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_bridge(args) -> int:
    if args.direction == "to2q":
        rho3 = load_state_file(args.path)
        rho4 = to_two_qubit(rho3)
        _emit(json.dumps(density_payload(rho4), indent=2) + "\n", args.out)
    else:
        rho4 = load_two_qubit_file(args.path)
        rho3 = from_two_qubit(rho4)
        _emit(json.dumps(density_payload(rho3), indent=2) + "\n", args.out)
    return EXIT_OK


def _load_pure(path: str):
    obj = _read_json(path)
    if "amplitudes" not in obj:
        raise CliIOError(f'{path}: pure-state file needs an "amplitudes" key')
    amps = obj["amplitudes"]
    if not isinstance(amps, list) or len(amps) != 3:
        raise CliIOError('"amplitudes" must hold 3 [re, im] pairs')
    psi = np.zeros(3, dtype=complex)
    for i, pair in enumerate(amps):
        if not isinstance(pair, list) or len(pair) != 2:
            raise CliIOError(f'"amplitudes"[{i}] must be an [re, im] pair')
        psi[i] = _float(pair[0], f'"amplitudes"[{i}][0]') + 1j * _float(
            pair[1], f'"amplitudes"[{i}][1]'
        )
    try:
        return rik_decompose(psi)
    except NotNormalizedError as exc:
        raise CliIOError(f"{path}: {exc}") from exc


def cmd_ortho(args) -> int:
    p = _load_pure(args.path_a)
    q = _load_pure(args.path_b)
    from .purestates import orthogonal

    overlap = abs(complex(p.amp.conj() @ q.amp))
    inner_verdict = overlap < 1e-10
    rk_verdict = orthogonal(p, q)
    print(f"inner-product modulus: {_fmt(overlap)}")
    print(f"inner-product verdict: {'orthogonal' if inner_verdict else 'not orthogonal'}")
    print(f"rk-condition verdict: {'orthogonal' if rk_verdict else 'not orthogonal'}")
    if inner_verdict != rk_verdict:
        raise InternalCheckError("orthogonality criteria disagree")
    return EXIT_OK


def cmd_random(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("QUTRIT_SEED")
        seed = int(env) if env else 0
    rho = random_density(rank=args.rank, rng=seed)
    achieved = int(np.sum(eig_hermitian3(rho).values > RANK_TOL))
    out = json.dumps(density_payload(rho), indent=2) + "\n"
    out += f"rank: {achieved}\n"
    _emit(out, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and dispatch


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems with the parse exit code."""

    def error(self, message):
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qutrit3d",
        description="Three-dimensional qutrit representation toolkit.",
        epilog=(
            "exit codes: 0 success, 1 I/O or parse failure, 2 invalid state, "
            "3 internal inconsistency. Evolution convention: U = exp(-i theta G)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report state parameters, validity, rank and case")
    p.add_argument("path", help="state JSON file (re/im density or amplitudes)")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--out", default=None, help="write output to a file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scene", help="export the ellipsoid scene")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "obj"), default="json")
    p.add_argument("--lat", type=int, default=12, help="mesh rings (obj)")
    p.add_argument("--lon", type=int, default=24, help="mesh columns (obj)")
    p.add_argument(
        "--surface-only",
        action="store_true",
        help="mesh only; fails for degenerate scenes",
    )
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scene)

    p = sub.add_parser("mub", help="emit a mutually unbiased basis state")
    p.add_argument("--basis", type=int, required=True, help="basis index 1..4")
    p.add_argument("--vector", type=int, required=True, help="vector index 1..3")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_mub)

    p = sub.add_parser("pseudo", help="emit a pseudo-qubit state (tensor = identity/3)")
    p.add_argument("--ax", type=float, default=0.0)
    p.add_argument("--ay", type=float, default=0.0)
    p.add_argument("--az", type=float, default=0.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_pseudo)

    p = sub.add_parser("evolve", help="sample a unitary trajectory (U = exp(-i theta G))")
    p.add_argument("path")
    p.add_argument(
        "--generator",
        required=True,
        help="rot:x|y|z, twist:x|y|z, counter:x|y|z or custom:<hermitian-json>",
    )
    p.add_argument("--theta", type=float, required=True, help="grid end point (radians)")
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--scenes", action="store_true", help="attach a scene per sample")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("bridge", help="map to/from the symmetric two-qubit picture")
    p.add_argument("path")
    p.add_argument("--direction", choices=("to2q", "from2q"), required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("ortho", help="compare two orthogonality criteria on pure states")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_ortho)

    p = sub.add_parser("random", help="sample a random density matrix")
    p.add_argument("--rank", type=int, choices=(1, 2, 3), default=3)
    p.add_argument("--seed", type=int, default=None, help="defaults to QUTRIT_SEED or 0")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (
        NotPositiveError,
        InvalidStateError,
        OutOfBallError,
        NotSymmetricError,
        DegenerateMeshError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
