"""Scenario runner: ``zitterlab run`` and ``zitterlab sweep``.

A scenario is a JSON object with a ``kind`` (dirac, integrate, stability,
zerospin, cronon, audit) and kind-specific fields.  Vectors are 4-element
arrays ordered (t, x, y, z); boosts are 3-vectors or a speed combined with
``boost_direction``.  Each run writes ``trajectory.csv`` (when the kind
produces one) and ``report.json`` into the output directory.
"""

from __future__ import annotations

import argparse
import ast
import copy
import csv
import json
import math
import operator
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import cronon as cr
from . import dirac
from . import integrator as it
from . import kinematics as kin
from . import lagrangian as lg
from . import minkowski as mk
from . import stability as stab
from . import zerospin as zs
from .errors import (
    ConfigError,
    ConstraintViolation,
    InvalidParams,
    NumericalFailure,
    UnsupportedOrder,
    ZitterError,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PHYSICS = 3
EXIT_NUMERICAL = 4

CSV_COLUMNS = (
    ["tau", "t", "x", "y", "z"]
    + [f"v{i}" for i in range(4)]
    + [f"a{i}" for i in range(4)]
    + [f"p{i}" for i in range(4)]
    + ["H", "s_x", "s_y", "s_z", "vsq", "times_ratio", "drift_p", "drift_J", "drift_H"]
)
CRONON_COLUMNS = ["tau", "v0", "v1", "v2", "v3", "vsq"]
KINDS = ("dirac", "integrate", "stability", "zerospin", "cronon", "audit")

TEMPLATES = {
    "dirac": {
        "kind": "dirac",
        "m": 1.0,
        "p": [1.0, 0.0, 0.0, 0.0],
        "E": [0.0, 1.0, 0.0, 0.0],
        "H": [0.0, 0.0, 1.0, 0.0],
        "x0": [0.0, 0.0, 0.0, 0.0],
        "boost": [0.0, 0.0, 0.0],
        "tau_start": 0.0,
        "tau_end": 3.141592653589793,
        "samples": 201,
    },
    "integrate": {
        "kind": "integrate",
        "m": 1.0,
        "coeffs": [-0.25],
        "init_dirac": {"p": [1.0, 0.0, 0.0, 0.0], "E": [0.0, 1.0, 0.0, 0.0], "H": [0.0, 0.0, 1.0, 0.0]},
        "tau_end": 31.41592653589793,
        "dtau": 0.0015707963267948967,
        "sample_every": 50,
    },
    "stability": {"kind": "stability", "m": 1.0, "coeffs": [-0.25]},
    "zerospin": {
        "kind": "zerospin",
        "m": 1.0,
        "k1": -0.25,
        "p": [1.0, 0.0, 0.0, 0.0],
        "F": [0.0, 1.0, 0.0, 0.0],
        "phase": 0.0,
        "boost": [0.0, 0.6, 0.0],
        "samples": 201,
    },
    "cronon": {
        "kind": "cronon",
        "m": 1.0,
        "e": 1.0,
        "T": 0.01,
        "E": [1.0, 0.0, 0.0],
        "B": [0.0, 0.0, 0.0],
        "v0": [1.0, 0.0, 0.0, 0.0],
        "steps": 100,
    },
    "audit": {
        "kind": "audit",
        "m": 1.0,
        "p": [1.0, 0.0, 0.0, 0.0],
        "E": [0.0, 1.0, 0.0, 0.0],
        "H": [0.0, 0.0, 1.0, 0.0],
        "boost": [0.0, 0.0, 0.0],
        "tau_end": 31.41592653589793,
        "dtau": 0.0015707963267948967,
        "sample_every": 50,
    },
}


# ---------------------------------------------------------------- config


def load_config(path):
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    kind = cfg.get("kind")
    if kind is None:
        raise ConfigError("missing field 'kind'", field="kind")
    if kind not in KINDS:
        raise ConfigError(f"unknown kind {kind!r}; expected one of {KINDS}", field="kind")
    return cfg


def _get(cfg, name, default=None, required=False):
    if name in cfg:
        return cfg[name]
    if required:
        raise ConfigError(f"missing field {name!r}", field=name)
    return default


def _number(cfg, name, default=None, required=False):
    val = _get(cfg, name, default, required)
    if val is None:
        return None
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ConfigError(f"field {name!r} must be a number", field=name)
    return float(val)


def _vector(cfg, name, size, default=None, required=False):
    val = _get(cfg, name, default, required)
    if val is None:
        return None
    arr = np.asarray(val, dtype=float) if _is_numeric_list(val) else None
    if arr is None or arr.shape != (size,):
        raise ConfigError(f"field {name!r} must be a list of {size} numbers", field=name)
    return arr


def _is_numeric_list(val):
    return isinstance(val, list) and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in val)


def _boost(cfg):
    val = _get(cfg, "boost", [0.0, 0.0, 0.0])
    if isinstance(val, (int, float)) and not isinstance(val, bool):
        direction = _vector(cfg, "boost_direction", 3, [1.0, 0.0, 0.0])
        norm = np.linalg.norm(direction)
        if norm == 0:
            raise ConfigError("boost_direction must be nonzero", field="boost_direction")
        return float(val) * direction / norm
    return _vector({"boost": val}, "boost", 3)


def _dirac_params(cfg, tol=dirac.PARAM_TOLERANCE):
    m = _number(cfg, "m", 1.0)
    if not m > 0:
        raise ConfigError("field 'm' must be positive", field="m")
    params = dirac.DiracParams(
        m,
        _vector(cfg, "p", 4, required=True),
        _vector(cfg, "E", 4, required=True),
        _vector(cfg, "H", 4, required=True),
        _vector(cfg, "x0", 4, [0.0, 0.0, 0.0, 0.0]),
        tol=tol,
    )
    w = _boost(cfg)
    return params.boosted(w) if np.any(w) else params


def _spec(cfg):
    m = _number(cfg, "m", 1.0)
    coeffs = _get(cfg, "coeffs", [])
    if not _is_numeric_list(coeffs):
        raise ConfigError("field 'coeffs' must be a list of numbers", field="coeffs")
    try:
        return lg.LagrangianSpec(m, tuple(coeffs))
    except ValueError as exc:
        raise ConfigError(str(exc), field="m") from exc


# ---------------------------------------------------------------- helpers


def _json_safe(obj):
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _json_safe(obj.tolist())
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def _spectrum_dict(spec):
    if spec.order_n < 1:
        return None
    sp = stab.spectrum(spec)
    return {
        "roots_z2": [[u.real, u.imag] for u in sp.roots_z2],
        "frequencies": list(sp.frequencies),
        "oscillatory": sp.oscillatory,
        "growth_rates": list(sp.growth_rates),
        "descartes": stab.descartes_check(spec),
    }


def _drift(value, ref):
    value = np.asarray(value, dtype=float)
    ref = np.asarray(ref, dtype=float)
    return float(np.max(np.abs(value - ref)) / max(1.0, float(np.max(np.abs(ref)))))


def _rows(spec, states):
    """CSV rows and per-quantity maximum drifts for a list of states."""
    rows = []
    p_ref = j_ref = h_ref = None
    max_drift = {"p": 0.0, "J": None, "H": None}
    has_spin = spec.order_n <= 3
    has_h = spec.order_n <= 2
    for st in states:
        p = lg.canonical_momentum(spec, st)
        h = lg.hamiltonian(spec, st) if has_h else None
        j = lg.total_angular_momentum(spec, st) if has_spin else None
        s = lg.spin_vector(spec, st) if has_spin else None
        if p_ref is None:
            p_ref, j_ref, h_ref = p, j, h
        dp = _drift(p, p_ref)
        dj = _drift(j, j_ref) if j is not None else None
        dh = _drift(h, h_ref) if h is not None else None
        max_drift["p"] = max(max_drift["p"], dp)
        if dj is not None:
            max_drift["J"] = max(max_drift["J"] or 0.0, dj)
        if dh is not None:
            max_drift["H"] = max(max_drift["H"] or 0.0, dh)
        row = [st.tau, *st.x, *st.v, *st.a, *p]
        row.append("" if h is None else h)
        row.extend([""] * 3 if s is None else list(s))
        row.extend([mk.square(st.v), st.v[0], dp, "" if dj is None else dj, "" if dh is None else dh])
        rows.append(row)
    return rows, max_drift


def _audit_states(spec, states):
    """Largest kinematic-constraint residuals over a list of states."""
    worst = {"h1": 0.0, "h2": 0.0, "orthogonality": 0.0, "v2_max": -math.inf, "v2_identity": 0.0}
    m = spec.m
    for st in states:
        p = lg.canonical_momentum(spec, st)
        h1, h2 = kin.shell_residuals(st.v, p, m)
        orth = mk.minkowski_dot(p / m, st.v - p / m)
        worst["h1"] = max(worst["h1"], abs(h1))
        worst["h2"] = max(worst["h2"], abs(h2))
        worst["orthogonality"] = max(worst["orthogonality"], abs(orth))
        worst["v2_max"] = max(worst["v2_max"], mk.square(st.v))
        if 1 <= spec.order_n <= 3 and len(st) > 2 * spec.order_n + 2:
            r1, r2 = kin.v2_identities_residual(st.v, p, m, lg.spin_tensor_rate(spec, st))
            worst["v2_identity"] = max(worst["v2_identity"], abs(r1), abs(r2))
    return worst


def _report(**sections):
    base = {"conservation": None, "constraints": None, "spectrum": None, "spin": None, "discrepancies": []}
    base.update(sections)
    return base


# ---------------------------------------------------------------- kinds


def _run_dirac(cfg, tol):
    params = _dirac_params(cfg, tol)
    if not dirac.is_valid(params):
        raise InvalidParams(f"Dirac parameters violate constraints: {dirac.validate(params)}")
    tau0 = _number(cfg, "tau_start", 0.0)
    tau1 = _number(cfg, "tau_end", tau0 + params.period)
    n = int(_number(cfg, "samples", 201))
    if n < 2:
        raise ConfigError("field 'samples' must be at least 2", field="samples")
    taus = np.linspace(tau0, tau1, n)
    states = [dirac.state_at(params, t) for t in taus]
    spec = params.spec
    rows, drift = _rows(spec, states)
    audit = _audit_states(spec, states)
    audit["sdot_identity"] = max(max(dirac.sdot_identity_residuals(params, t)) for t in taus)
    w_vec, helicity = dirac.pauli_lubanski(params)
    pol = dirac.polarization_info(params)
    cv2 = dirac.constant_v2_info(params)
    report = _report(
        conservation={"p_drift": drift["p"], "j_drift": drift["J"], "h_drift": drift["H"]},
        constraints={
            "parameters": dirac.validate(params),
            "spin_half_residual": dirac.spin_half_residual(params),
            "audit": audit,
        },
        spectrum=_spectrum_dict(spec),
        spin={
            "cmf_spin": dirac.cmf_spin(params),
            "pauli_lubanski": w_vec,
            "pauli_lubanski_square": mk.square(w_vec),
            "helicity": helicity,
            "mean_boost_vector": dirac.mean_boost_vector(params),
            "standard_frame": pol.is_standard_frame,
            "longitudinal_amp": pol.longitudinal_amp,
            "transverse_amp": pol.transverse_amp,
        },
        summary={
            "times_ratio_mean": dirac.times_ratio_mean(params),
            "times_ratio_min": float(min(r[CSV_COLUMNS.index("times_ratio")] for r in rows)),
            "times_ratio_max": float(max(r[CSV_COLUMNS.index("times_ratio")] for r in rows)),
            "constant_v2": None if cv2 is None else vars(cv2),
        },
    )
    return rows, report


def _integration_init(cfg, spec, tol):
    if "init_dirac" in cfg:
        sub = cfg["init_dirac"]
        if not isinstance(sub, dict):
            raise ConfigError("field 'init_dirac' must be an object", field="init_dirac")
        sub = dict(sub, m=spec.m)
        if spec.order_n != 1 or not math.isclose(spec.coeffs[0], -1.0 / (4.0 * spec.m)):
            raise ConfigError("init_dirac requires the Dirac Lagrangian (coeffs = [-1/4m])", field="init_dirac")
        params = _dirac_params(sub, tol)
        return params, dirac.state_at(params, _number(cfg, "tau0", 0.0))
    init = _get(cfg, "init", required=True)
    if not isinstance(init, list) or not all(_is_numeric_list(v) and len(v) == 4 for v in init):
        raise ConfigError("field 'init' must be a list of 4-vectors x, v, a, ...", field="init")
    return None, lg.KinematicState(_number(cfg, "tau0", 0.0), np.asarray(init, dtype=float))


def _integrate(cfg, spec, init):
    tau_end = _number(cfg, "tau_end", required=True)
    dtau = _number(cfg, "dtau", required=True)
    if not dtau > 0:
        raise ConfigError("field 'dtau' must be positive", field="dtau")
    if not tau_end > init.tau:
        raise ConfigError("field 'tau_end' must exceed the initial proper time", field="tau_end")
    return it.integrate(spec, init, tau_end, dtau)


def _integration_report(cfg, traj, params=None):
    spec = traj.spec
    every = max(1, int(_number(cfg, "sample_every", 1)))
    picked = traj.samples[::every]
    rows, _ = _rows(spec, picked)
    cons = it.conservation_report(traj)
    spin = None
    if spec.order_n <= 3:
        spin = {"initial_spin": lg.spin_vector(spec, traj[0]), "final_spin": lg.spin_vector(spec, traj[-1])}
    constraints = {"audit": _audit_states(spec, picked)}
    summary = {"steps": len(traj) - 1, "dtau": traj.dtau}
    if params is not None:
        exact = np.array([dirac.state_at(params, t, n_derivs=2).v for t in traj.taus])
        summary["max_velocity_error"] = float(np.max(np.abs(traj.derivs[:, 1] - exact)))
        zbw = traj.derivs[:, 1] - params.p / params.m
        component = int(np.argmax(np.max(np.abs(zbw), axis=0)))
        summary["compton_frequency"] = it.zero_crossing_frequency(traj.taus, zbw[:, component])
    report = _report(
        conservation=cons.as_dict(),
        constraints=constraints,
        spectrum=_spectrum_dict(spec),
        spin=spin,
        summary=summary,
    )
    return rows, report


def _run_integrate(cfg, tol):
    spec = _spec(cfg)
    params, init = _integration_init(cfg, spec, tol)
    traj = _integrate(cfg, spec, init)
    return _integration_report(cfg, traj, params)


def _run_audit(cfg, tol):
    params = _dirac_params(cfg, tol)
    if not dirac.is_valid(params):
        raise InvalidParams(f"Dirac parameters violate constraints: {dirac.validate(params)}")
    init = dirac.state_at(params, 0.0)
    cfg = dict(cfg)
    cfg.setdefault("tau_end", 10 * params.period)
    cfg.setdefault("dtau", params.period / 2000)
    traj = _integrate(cfg, params.spec, init)
    rows, report = _integration_report(cfg, traj, params)
    report["constraints"]["parameters"] = dirac.validate(params)
    report["constraints"]["spin_half_residual"] = dirac.spin_half_residual(params)
    return rows, report


def _run_stability(cfg, tol):
    spec = _spec(cfg)
    if spec.order_n < 1:
        raise ConfigError("stability needs at least one coefficient", field="coeffs")
    return None, _report(spectrum=_spectrum_dict(spec))


def _run_zerospin(cfg, tol):
    m = _number(cfg, "m", 1.0)
    params = zs.LinearOscParams(
        m,
        _number(cfg, "k1", required=True),
        _vector(cfg, "p", 4, required=True),
        _vector(cfg, "F", 4, required=True),
        _number(cfg, "phase", 0.0),
        tol=tol,
    )
    zs.validate(params)
    w = _boost(cfg)
    moved = params.boosted(w)
    n = int(_number(cfg, "samples", 201))
    taus = np.linspace(_number(cfg, "tau_start", 0.0), _number(cfg, "tau_end", params.period), n)
    states = [zs.linear_state_at(moved, t) for t in taus]
    rows, drift = _rows(moved.spec, states)
    msq = zs.mean_spin_squared(params, w)
    hel = zs.helicity_zero_check(params, w)
    cmf_max = max(float(np.max(np.abs(zs.cmf_spin(params, t)))) for t in taus)
    discrepancies = []
    if msq.flagged:
        discrepancies.append({
            "quantity": "mean_spin_squared",
            "implemented": msq.implemented,
            "variant_formula": msq.variant_formula,
            "note": "average of |k1 v x a|^2 gives 1/(2 omega^2); the variant closed form has 1/(2 omega)",
        })
    amp = zs.spin_amplitude(params, w)
    variant = zs.variant_spin_amplitude(params, w)
    if not np.allclose(amp, variant):
        discrepancies.append({
            "quantity": "spin_amplitude",
            "implemented": amp,
            "variant_formula": variant,
            "note": "k1 v x a gives (p x F_perp)/omega; the variant closed form has (F_perp x p)/sqrt(omega)",
        })
    report = _report(
        conservation={"p_drift": drift["p"], "j_drift": drift["J"], "h_drift": drift["H"]},
        constraints={"audit": _audit_states(moved.spec, states)},
        spectrum=_spectrum_dict(params.spec),
        spin={
            "cmf_spin_max": cmf_max,
            "mean_spin": zs.mean_boosted_spin(params, w),
            "mean_spin_squared": msq.implemented,
            "max_helicity": hel.max_helicity,
            "max_pauli_lubanski": hel.max_pauli_lubanski,
        },
        discrepancies=discrepancies,
    )
    return rows, report


def _run_cronon(cfg, tol):
    m = _number(cfg, "m", 1.0)
    charge = _number(cfg, "e", required=True)
    try:
        params = cr.CrononParams(
            m, charge, cr.field_tensor(_vector(cfg, "E", 3, [0, 0, 0]), _vector(cfg, "B", 3, [0, 0, 0])),
            _number(cfg, "T"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    v0 = _vector(cfg, "v0", 4, required=True)
    steps = int(_number(cfg, "steps", required=True))
    v_prev = _vector(cfg, "v_prev", 4)
    if v_prev is None:
        seeds = {"euler": cr.euler_seed, "taylor": cr.taylor_seed}
        seed = _get(cfg, "seed", "euler")
        if seed not in seeds:
            raise ConfigError(f"field 'seed' must be one of {sorted(seeds)}", field="seed")
        v_prev = seeds[seed](params, v0)
    vel = cr.simulate_cronon(params, (v_prev, v0), steps)
    taus = cr.cronon_taus(params, steps)
    vv = vel[:, 0] ** 2 - np.sum(vel[:, 1:] ** 2, axis=1)
    rows = [[t, *v, q] for t, v, q in zip(taus, vel, vv)]
    coeff_signs = all(
        np.sign(cr.cronon_coefficient(m, params.T, i)) == (-1) ** i for i in range(cr.MAX_COEFFICIENT_INDEX + 1)
    )
    report = _report(
        constraints={"max_abs_vv_minus_1": float(np.max(np.abs(vv - 1.0))), "coefficient_signs_alternate": coeff_signs},
        summary={"final_velocity": vel[-1], "steps": steps, "T": params.T},
    )
    return rows, report


RUNNERS = {
    "dirac": _run_dirac,
    "integrate": _run_integrate,
    "stability": _run_stability,
    "zerospin": _run_zerospin,
    "cronon": _run_cronon,
    "audit": _run_audit,
}


# ---------------------------------------------------------------- output


def _fmt(x):
    if isinstance(x, str):
        return x
    return repr(float(x))


def write_outputs(out_dir, kind, rows, report):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if rows is not None:
        columns = CRONON_COLUMNS if kind == "cronon" else CSV_COLUMNS
        with open(out / "trajectory.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_fmt(x) for x in row])
    with open(out / "report.json", "w") as fh:
        json.dump(_json_safe(report), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _error_record(exc):
    rec = {"error": type(exc).__name__, "message": str(exc)}
    if getattr(exc, "field", None):
        rec["field"] = exc.field
    if getattr(exc, "tau", None) is not None:
        rec["tau"] = exc.tau
    return rec


def exit_code_for(exc):
    if isinstance(exc, ConfigError):
        return EXIT_CONFIG
    if isinstance(exc, (NumericalFailure,)):
        return EXIT_NUMERICAL
    if isinstance(exc, (ConstraintViolation, UnsupportedOrder)):
        return EXIT_PHYSICS
    if isinstance(exc, ZitterError):
        return EXIT_PHYSICS
    return EXIT_CONFIG


def run_config(cfg, out_dir, tolerance=dirac.PARAM_TOLERANCE):
    """Run one already-parsed scenario; returns the exit status."""
    out = Path(out_dir)
    try:
        if cfg.get("kind") not in KINDS:
            raise ConfigError(f"unknown kind {cfg.get('kind')!r}", field="kind")
        rows, report = RUNNERS[cfg["kind"]](cfg, tolerance)
        report["kind"] = cfg["kind"]
        write_outputs(out, cfg["kind"], rows, report)
        return EXIT_OK
    except (ZitterError, ValueError) as exc:
        code = exit_code_for(exc)
        rec = _error_record(exc)
        rec["exit_code"] = code
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "error.json", "w") as fh:
            json.dump(_json_safe(rec), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(json.dumps(_json_safe(rec)), file=sys.stderr)
        return code


def run(config_path, out_dir, tolerance=dirac.PARAM_TOLERANCE):
    try:
        cfg = load_config(config_path)
    except ConfigError as exc:
        return _fail(exc, out_dir)
    return run_config(cfg, out_dir, tolerance)


def _fail(exc, out_dir):
    rec = _error_record(exc)
    rec["exit_code"] = exit_code_for(exc)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "error.json", "w") as fh:
        json.dump(rec, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(json.dumps(rec), file=sys.stderr)
    return rec["exit_code"]


# ---------------------------------------------------------------- sweep

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv,
           ast.Pow: operator.pow}
_UNOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def parse_value(text):
    """Parse a sweep value: a number or simple arithmetic with ``pi`` (e.g. ``pi/500``)."""

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
            return _UNOPS[type(node.op)](ev(node.operand))
        raise ConfigError(f"cannot parse sweep value {text!r}", field="values")

    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ConfigError(f"cannot parse sweep value {text!r}", field="values") from exc
    return ev(tree.body)


def parse_values(text):
    return [parse_value(tok) for tok in text.split(",") if tok.strip()]


def _set_path(cfg, dotted, value):
    keys = dotted.split(".")
    node = cfg
    for key in keys[:-1]:
        if not isinstance(node.get(key), dict):
            raise ConfigError(f"sweep parameter {dotted!r} does not name a config field", field=dotted)
        node = node[key]
    node[keys[-1]] = value


def sweep(config_path, parameter, values, out_dir, tolerance=dirac.PARAM_TOLERANCE, workers=None):
    """Run one scenario per value, concurrently; returns the worst exit status."""
    try:
        cfg = load_config(config_path)
    except ConfigError as exc:
        return _fail(exc, out_dir)
    if not values:
        return EXIT_OK
    jobs = []
    for idx, value in enumerate(values):
        run_cfg = copy.deepcopy(cfg)
        try:
            _set_path(run_cfg, parameter, value)
        except ConfigError as exc:
            return _fail(exc, out_dir)
        jobs.append((idx, value, run_cfg, Path(out_dir) / f"{parameter}_{idx:03d}"))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        codes = list(pool.map(lambda job: run_config(job[2], job[3], tolerance), jobs))

    summary = []
    for (idx, value, _, path), code in zip(jobs, codes):
        entry = {"index": idx, "value": value, "exit_code": code, "out": path.name}
        report_path = path / "report.json"
        if code == EXIT_OK and report_path.exists():
            with open(report_path) as fh:
                rep = json.load(fh)
            entry["conservation"] = rep.get("conservation")
            entry["summary"] = rep.get("summary")
        summary.append(entry)
    with open(Path(out_dir) / "sweep.json", "w") as fh:
        json.dump({"parameter": parameter, "runs": summary}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return max(codes)


# ---------------------------------------------------------------- entry point


def build_parser():
    parser = argparse.ArgumentParser(prog="zitterlab", description=__doc__.splitlines()[0])
    parser.add_argument("--seed-format", metavar="KIND", nargs="?", const="dirac", choices=KINDS,
                        help="print a template config for KIND (default dirac) and exit")
    sub = parser.add_subparsers(dest="command")

    p_run = sub.add_parser("run", help="run one scenario")
    p_run.add_argument("config")
    p_run.add_argument("--out", required=True)
    p_run.add_argument("--tolerance", type=float, default=dirac.PARAM_TOLERANCE)

    p_sweep = sub.add_parser("sweep", help="run a scenario once per parameter value")
    p_sweep.add_argument("config")
    p_sweep.add_argument("--param", required=True, help="config field to vary (dotted path for nesting)")
    p_sweep.add_argument("--values", required=True, help="comma-separated values, e.g. 'pi/500,pi/1000'")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--tolerance", type=float, default=dirac.PARAM_TOLERANCE)
    p_sweep.add_argument("--workers", type=int, default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed_format:
        print(json.dumps(TEMPLATES[args.seed_format], indent=2))
        return EXIT_OK
    if args.command == "run":
        return run(args.config, args.out, args.tolerance)
    if args.command == "sweep":
        try:
            values = parse_values(args.values)
        except ConfigError as exc:
            return _fail(exc, args.out)
        return sweep(args.config, args.param, values, args.out, args.tolerance, args.workers)
    parser.print_help()
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
