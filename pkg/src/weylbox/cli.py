"""Batch command-line front end.

Usage::

    weylbox COMMAND [--key value ...] [--config FILE]

Unitaries are always given by ``--mu --m0 --m1 --m2 --m3``. A config file
holds ``key=value`` lines (``#`` starts a comment); flags on the command line
override it. Exit codes: 0 success, 1 numeric or consistency failure, 2 usage
error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .algebra import Rep, UnitaryParams, alpha_matrix, gamma_pair
from .boundary import (
    BoundarySpec,
    PhaseBC,
    bc_dirac_rep,
    bc_weyl_axis,
    classify_confinement,
    format_record,
    reality_admissible,
    to_record,
)
from .checks import run_checks
from .dynamics import (
    EvolutionRun,
    TruncationError,
    gaussian_spinor,
    spectral_basis,
    time_series,
    weyl1d_basis,
)
from .kinematics import (
    BoostParams,
    PlaneWave3D,
    RotationParams,
    boost_1d,
    boost_4d,
    classical_velocity,
    covariance_residual,
    helicity_eigenvalue,
    rotation_4d,
    spin_along_velocity,
)
from .representations import rep_change_matrix
from .spectral import (
    DEGENERACY_TOL,
    ROOT_TOL,
    ConsistencyError,
    ContinuumFamilyError,
    NumericError,
    SpectralProblem,
    Weyl1DProblem,
    eigenfunction,
    find_spectrum,
    spectrum_1d_weyl,
)

USAGE = __doc__.split("Usage::", 1)[1].split("Unitaries", 1)[0].strip()

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2

_OUTPUT_KEYS = {"format", "output-path"}
_FAMILY_KEYS = {"axis", "rep", "mu", "m0", "m1", "m2", "m3"}
_PARAM_KEYS = {"mu", "m0", "m1", "m2", "m3"}

# command -> (required, optional); "family" stands for axis-or-rep plus params
COMMANDS: dict[str, tuple[set[str], set[str]]] = {
    "matrices": ({"rep"}, {"target"}),
    "bc": (_PARAM_KEYS, {"axis", "rep"}),
    "classify": (_PARAM_KEYS, {"axis", "rep", "tol"}),
    "spectrum": (_PARAM_KEYS | {"kmin", "kmax"}, {"axis", "rep", "length", "a"}),
    "eigenfunction": (
        _PARAM_KEYS | {"kmin", "kmax"},
        {"axis", "rep", "length", "a", "index", "branch", "grid"},
    ),
    "weyl1d": ({"eta"}, {"length", "a", "nmin", "nmax"}),
    "boost": ({"omega"}, {"axis"}),
    "rotate": ({"axis", "theta"}, set()),
    "helicity": ({"px", "py", "pz", "energy-sign", "kind"}, set()),
    "evolve": (
        {"times"},
        _FAMILY_KEYS
        | {"eta", "length", "a", "kmin", "kmax", "nmin", "nmax", "grid", "center", "width", "force"},
    ),
    "check": (set(), {"seed", "samples"}),
}


class UsageError(ValueError):
    """Bad command line; carries the offending key when there is one."""


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(text)


def _float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(text)
    return value


def _axis_or_1d(text: str):
    low = text.strip().lower()
    if low in ("1d", "1+1"):
        return None
    value = int(low)
    if value not in (1, 2, 3):
        raise ValueError(text)
    return value


def _axis(text: str) -> int:
    value = int(text)
    if value not in (1, 2, 3):
        raise ValueError(text)
    return value


def _choice(*options):
    def convert(text: str):
        value = int(text)
        if value not in options:
            raise ValueError(text)
        return value

    return convert


def _fmt(text: str) -> str:
    if text not in ("text", "csv", "json"):
        raise ValueError(text)
    return text


def _positive(convert):
    def wrapped(text: str):
        value = convert(text)
        if not value > 0:
            raise ValueError(text)
        return value

    return wrapped


def _times(text: str) -> list[float]:
    """``t1,t2,...`` or ``start:stop:count`` (inclusive, evenly spaced)."""
    if ":" in text:
        start, stop, count = text.split(":")
        n = int(count)
        if n < 1:
            raise ValueError(text)
        return [float(t) for t in np.linspace(_float(start), _float(stop), n)]
    return [_float(t) for t in text.split(",") if t.strip()]


CONVERTERS = {
    "axis": _axis,
    "rep": lambda s: Rep.parse(s),
    "target": lambda s: Rep.parse(s),
    "mu": _float,
    "m0": _float,
    "m1": _float,
    "m2": _float,
    "m3": _float,
    "eta": _float,
    "length": _positive(_float),
    "kmin": _float,
    "kmax": _float,
    "omega": _float,
    "theta": _float,
    "a": _choice(1, 2),
    "grid": _positive(int),
    "times": _times,
    "format": _fmt,
    "output-path": str,
    "index": int,
    "branch": int,
    "nmin": int,
    "nmax": int,
    "seed": int,
    "samples": _positive(int),
    "center": _float,
    "width": _positive(_float),
    "force": _bool,
    "px": _float,
    "py": _float,
    "pz": _float,
    "energy-sign": _choice(1, -1),
    "kind": _choice(1, 2),
    "tol": _positive(_float),
}


@dataclass
class CommandConfig:
    command: str
    parameters: dict = field(default_factory=dict)

    def get(self, key: str, default=None):
        return self.parameters.get(key, default)


def _read_config_file(path: str) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"config: cannot read {path!r}: {exc.strerror}") from None
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"config: line {lineno} is not key=value")
        values[key.strip()] = value.strip()
    return values


def parse_args(argv: list[str]) -> CommandConfig:
    """Build a validated :class:`CommandConfig`; raises :class:`UsageError`."""
    if not argv:
        raise UsageError("missing command")
    command, rest = argv[0], list(argv[1:])
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    flags: dict[str, str] = {}
    config_path = None
    i = 0
    while i < len(rest):
        token = rest[i]
        if not token.startswith("--") or len(token) == 2:
            raise UsageError(f"expected --key, got {token!r}")
        key = token[2:]
        if i + 1 >= len(rest):
            raise UsageError(f"--{key}: missing value")
        if key == "config":
            config_path = rest[i + 1]
        else:
            flags[key] = rest[i + 1]
        i += 2
    raw = _read_config_file(config_path) if config_path else {}
    raw.update(flags)

    required, optional = COMMANDS[command]
    allowed = required | optional | _OUTPUT_KEYS
    for key in raw:
        if key not in allowed:
            raise UsageError(f"--{key}: unknown key for {command}")
    for key in sorted(required):
        if key not in raw:
            raise UsageError(f"--{key}: required for {command}")
    params = {}
    for key, text in raw.items():
        convert = _axis_or_1d if (command, key) == ("boost", "axis") else CONVERTERS[key]
        try:
            params[key] = convert(text)
        except ValueError:
            raise UsageError(f"--{key}: invalid value {text!r}") from None
    if command in ("bc", "classify", "spectrum", "eigenfunction") and not (
        "axis" in params or "rep" in params
    ):
        raise UsageError("--axis: give --axis or --rep")
    if command == "evolve" and "eta" not in params and not _PARAM_KEYS <= params.keys():
        missing = sorted(_PARAM_KEYS - params.keys())[0]
        raise UsageError(f"--{missing}: evolve needs --eta or a full boundary family")
    return CommandConfig(command, params)


# output -------------------------------------------------------------------


def _meta(config: CommandConfig) -> dict:
    return {
        "command": config.command,
        "units": {"k": "1/l", "energy": "hbar c / l", "x": "l", "t": "l / c"},
        "tolerances": {"root": ROOT_TOL, "degeneracy": DEGENERACY_TOL},
    }


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def render(config: CommandConfig, rows: list[dict], text: str | None = None) -> str:
    fmt = config.get("format", "text")
    if fmt == "json":
        return json.dumps({"meta": _meta(config), "rows": rows}, indent=2) + "\n"
    if fmt == "csv" or text is None:
        buf = io.StringIO()
        if rows:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(list(rows[0]))
            for row in rows:
                writer.writerow([_cell(v) for v in row.values()])
        return buf.getvalue()
    return text


def _matrix_rows(name: str, m: np.ndarray) -> list[dict]:
    m = np.asarray(m, dtype=complex)
    return [
        {"name": name, "row": r, "col": c, "re": float(m[r, c].real), "im": float(m[r, c].imag)}
        for r in range(m.shape[0])
        for c in range(m.shape[1])
    ]


def _matrix_text(name: str, m: np.ndarray) -> str:
    m = np.asarray(m, dtype=complex)
    lines = [f"{name} ="]
    for row in m:
        cells = []
        for z in row:
            re, im = (0.0 if abs(x) < 5e-16 else x for x in (z.real, z.imag))
            cells.append(f"{re:+.12f}{im:+.12f}j")
        lines.append("  [" + "  ".join(cells) + "]")
    return "\n".join(lines)


# commands -----------------------------------------------------------------


def _family(config: CommandConfig) -> BoundarySpec:
    try:
        params = UnitaryParams(*(config.get(k) for k in ("mu", "m0", "m1", "m2", "m3")))
    except ValueError as exc:
        raise UsageError(f"--m0..--m3: {exc}") from None
    rep = config.get("rep")
    if rep is None:
        return bc_weyl_axis(config.get("axis"), params)
    spec = bc_dirac_rep(rep, params)
    if config.get("axis") is not None and config.get("axis") != spec.axis:
        raise UsageError(f"--axis: {rep.value} uses axis {spec.axis}")
    return spec


def _problem(config: CommandConfig) -> SpectralProblem:
    spec = _family(config)
    return SpectralProblem(spec.axis, spec, config.get("length", 1.0), config.get("a", 1))


def _cmd_matrices(config):
    rep = config.get("rep")
    g0, g1 = gamma_pair(rep)
    named = [("gamma0", g0), ("gamma1", g1), ("alpha", alpha_matrix(rep))]
    target = config.get("target")
    if target is not None:
        named.append((f"S[{rep.value}->{target.value}]", rep_change_matrix(rep, target).S))
    rows = [r for name, m in named for r in _matrix_rows(name, m)]
    text = f"representation: {rep.value}\n" + "\n".join(_matrix_text(n, m) for n, m in named)
    return rows, text + "\n"


def _cmd_bc(config):
    spec = _family(config)
    record = to_record(spec)
    flag = reality_admissible(spec)
    rows = [{**record, "reality_admissible": flag}]
    text = format_record(record) + f"reality_admissible={_cell(flag)}\n"
    return rows, text


def _cmd_classify(config):
    spec = _family(config)
    cls = classify_confinement(spec, config.get("tol", 1e-10))
    n0, nl = cls.wall_current_norms
    rows = [{"class": cls.label.value, "J0_norm": n0, "Jl_norm": nl, "imbalance": cls.imbalance}]
    text = (
        f"{cls.label.value}\n"
        f"wall current form norm at 0: {n0:.3e}\n"
        f"wall current form norm at l: {nl:.3e}\n"
        f"|J(l) - J(0)| form norm: {cls.imbalance:.3e}\n"
    )
    return rows, text


def _spectrum(config):
    prob = _problem(config)
    return prob, find_spectrum(prob, (config.get("kmin"), config.get("kmax")))


def _cmd_spectrum(config):
    prob, pairs = _spectrum(config)
    ell = prob.length
    rows = [
        {"index": i, "k": p.k * ell, "energy": p.energy * ell, "degeneracy": p.degeneracy}
        for i, p in enumerate(pairs)
    ]
    lines = [f"{'index':>5}  {'k*l':>20}  {'k*l/pi':>14}  {'E*l':>20}  deg"]
    for r in rows:
        lines.append(
            f"{r['index']:>5}  {r['k']:>20.12f}  {r['k'] / math.pi:>14.9f}  "
            f"{r['energy']:>20.12f}  {r['degeneracy']}"
        )
    return rows, "\n".join(lines) + "\n"


def _cmd_eigenfunction(config):
    prob, pairs = _spectrum(config)
    index = config.get("index", 0)
    if not 0 <= index < len(pairs):
        raise UsageError(f"--index: {index} out of range ({len(pairs)} eigenvalues in window)")
    pair = pairs[index]
    states = eigenfunction(prob, pair, config.get("grid", 201))
    branch = config.get("branch", 0)
    if not 0 <= branch < len(states):
        raise UsageError(f"--branch: {branch} out of range (degeneracy {len(states)})")
    st = states[branch]
    rows = [
        {
            "x": float(x),
            "re_top": float(v[0].real),
            "im_top": float(v[0].imag),
            "re_bottom": float(v[1].real),
            "im_bottom": float(v[1].imag),
        }
        for x, v in zip(st.grid, st.values)
    ]
    return rows, None


def _phase_bc(config: CommandConfig) -> PhaseBC:
    try:
        return PhaseBC(config.get("eta"))
    except ValueError as exc:
        raise UsageError(f"--eta: {exc}") from None


def _cmd_weyl1d(config):
    a = config.get("a", 1)
    eta = config.get("eta")
    length = config.get("length", 1.0)
    bc = _phase_bc(config)
    pairs = spectrum_1d_weyl(a, eta, length, (config.get("nmin", -3), config.get("nmax", 3)))
    prob = Weyl1DProblem(bc, length, a)
    rows = [{"n": n, "k": prob.wavenumber(n) * length, "energy": e * length} for n, e in pairs]
    head = f"bc: {bc.name}  reality_admissible={_cell(bc.reality_admissible)}\n"
    lines = [f"{r['n']:>5}  k*l={r['k']:+.12f}  E*l={r['energy']:+.12f}" for r in rows]
    return rows, head + "\n".join(lines) + "\n"


def _cmd_boost(config):
    omega = config.get("omega")
    axis = config.get("axis")
    if axis is None:
        lam, s1, s2 = boost_1d(omega)
        rows = _matrix_rows("Lambda", lam) + [
            {"name": "s1", "row": 0, "col": 0, "re": s1, "im": 0.0},
            {"name": "s2", "row": 0, "col": 0, "re": s2, "im": 0.0},
        ]
        text = _matrix_text("Lambda", lam) + f"\ns1 = {s1!r}\ns2 = {s2!r}\ns1*s2 = {s1 * s2!r}\n"
        return rows, text
    bp = BoostParams(axis, omega)
    lam, spin = boost_4d(bp)
    res = covariance_residual(lam, spin)
    rows = _matrix_rows("Lambda", lam) + _matrix_rows("S", spin)
    text = (
        f"boost along axis {axis}, rapidity {omega!r} (beta = {bp.beta!r})\n"
        + _matrix_text("Lambda", lam)
        + "\n"
        + _matrix_text("S", spin)
        + f"\ncovariance residual = {res:.3e}\n"
    )
    return rows, text


def _cmd_rotate(config):
    rp = RotationParams(config.get("axis"), config.get("theta"))
    lam, spin = rotation_4d(rp)
    res = covariance_residual(lam, spin)
    rows = _matrix_rows("Lambda", lam) + _matrix_rows("S", spin)
    text = (
        f"rotation about axis {rp.axis}, angle {rp.angle!r}\n"
        + _matrix_text("Lambda", lam)
        + "\n"
        + _matrix_text("S", spin)
        + f"\ncovariance residual = {res:.3e}\n"
    )
    return rows, text


def _cmd_helicity(config):
    p = [config.get(k) for k in ("px", "py", "pz")]
    try:
        pw = PlaneWave3D.create(p, config.get("energy-sign"), config.get("kind"))
    except ValueError as exc:
        raise UsageError(f"--px: {exc}") from None
    h = helicity_eigenvalue(pw)
    v = classical_velocity(pw)
    s = spin_along_velocity(pw)
    rows = [
        {
            "kind": pw.kind,
            "energy_sign": pw.energy_sign,
            "helicity": h,
            "vx": float(v[0]),
            "vy": float(v[1]),
            "vz": float(v[2]),
            "spin_along_velocity": s,
        }
    ]
    text = (
        f"kind {pw.kind}, energy sign {pw.energy_sign:+d}\n"
        f"helicity = {h:+d}\n"
        f"velocity / c = ({v[0]:+.12f}, {v[1]:+.12f}, {v[2]:+.12f})\n"
        f"spin along velocity = {s:+d}\n"
    )
    return rows, text


def _cmd_evolve(config):
    length = config.get("length", 1.0)
    n_points = config.get("grid", 1024)
    center = config.get("center", 0.5 * length)
    width = config.get("width", 0.05 * length)
    if "eta" in config.parameters:
        prob = Weyl1DProblem(_phase_bc(config), length, config.get("a", 1))
        basis = weyl1d_basis(prob, (config.get("nmin", -32), config.get("nmax", 31)), n_points)
        psi0 = gaussian_spinor(length, n_points, center, width, (1.0,))
    else:
        prob = _problem(config)
        window = (config.get("kmin", -100.0), config.get("kmax", 100.0))
        basis = spectral_basis(prob, window, n_points)
        psi0 = gaussian_spinor(length, n_points, center, width)
    run = EvolutionRun.create(prob, psi0, basis, force=config.get("force", False))
    rows = time_series(run, config.get("times"))
    head = f"modes: {len(run.basis)}  captured norm: {run.captured_norm!r}\n"
    lines = [f"{'t':>10}  {'norm':>20}  {'J0':>12}  {'Jl':>12}  continuity_residual"]
    for r in rows:
        res = "-" if r["continuity_residual"] is None else f"{r['continuity_residual']:.6e}"
        lines.append(f"{r['t']:>10.6f}  {r['norm']:>20.15f}  {r['J0']:>+12.4e}  {r['Jl']:>+12.4e}  {res}")
    return rows, head + "\n".join(lines) + "\n"


def _cmd_check(config):
    results = run_checks(config.get("seed", 0), config.get("samples", 50))
    rows = [
        {"check": r.name, "passed": r.passed, "value": r.value, "limit": r.limit} for r in results
    ]
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}  (value {r.value:.3e}, limit {r.limit:.1e})"
        for r in results
    ]
    return rows, "\n".join(lines) + "\n"


_HANDLERS = {
    "matrices": _cmd_matrices,
    "bc": _cmd_bc,
    "classify": _cmd_classify,
    "spectrum": _cmd_spectrum,
    "eigenfunction": _cmd_eigenfunction,
    "weyl1d": _cmd_weyl1d,
    "boost": _cmd_boost,
    "rotate": _cmd_rotate,
    "helicity": _cmd_helicity,
    "evolve": _cmd_evolve,
    "check": _cmd_check,
}


def run(config: CommandConfig, stdout=None, stderr=None) -> int:
    """Execute ``config``; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        rows, text = _HANDLERS[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ContinuumFamilyError, ConsistencyError, NumericError, TruncationError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NUMERIC
    except (ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NUMERIC
    out = render(config, rows, text)
    path = config.get("output-path")
    if path:
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"error: --output-path: {exc.strerror}", file=stderr)
            return EXIT_USAGE
    else:
        stdout.write(out)
    if config.command == "check" and not all(r["passed"] for r in rows):
        return EXIT_NUMERIC
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv and argv[0] in ("-h", "--help"):
        print(USAGE)
        print("commands: " + ", ".join(COMMANDS))
        return EXIT_OK
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"usage: {USAGE}\ncommands: {', '.join(COMMANDS)}", file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
