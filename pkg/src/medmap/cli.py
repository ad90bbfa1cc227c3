"""Command-line front end.

Subcommands: dispersion, map, surface, forces, experiments, sweep.
Output is JSON (default), CSV (header row always present) or human text;
numeric JSON/CSV values round-trip exactly, human text uses 6 significant
digits.  Exit codes: 0 success, 2 usage or configuration error, 3 internal
invariant violation.  Every report re-validates its own residuals before
printing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .dispersion import (
    cherenkov_cone,
    cherenkov_parameter,
    cherenkov_regime,
    classify_wave_surface,
    dispersion_residual,
    solve_k0,
)
from .emtensor import classify_momentum
from .forces import ForceSample, experiment_suite
from .fourvec import LOWER, FourVector, InvariantViolation, minkowski_dot
from .mapping import (
    map_four_momentum,
    map_polarization,
    map_wavevector,
    medium_polarization_basis,
    vacuum_polarization_basis,
)
from .medium import MediumSpec

DEFAULTS = {
    "medium_n": 1.0,
    "medium_mu": 1.0,
    "velocity": (0.0, 0.0, 0.0),
    "format": "json",
}


def _parse_triple(text: str) -> tuple[float, float, float]:
    parts = [p for p in text.replace(";", ",").split(",") if p.strip() != ""]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated numbers, got {text!r}")
    return tuple(float(p) for p in parts)


def _parse_quad(text: str) -> tuple[float, float, float, float]:
    parts = [p for p in text.replace(";", ",").split(",") if p.strip() != ""]
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated numbers, got {text!r}")
    return tuple(float(p) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--medium-n", type=float, default=None, help="refractive index")
    common.add_argument("--medium-mu", type=float, default=None, help="relative permeability")
    common.add_argument("--velocity", type=str, default=None, help="medium 3-velocity vx,vy,vz (units of c)")
    common.add_argument("--format", choices=["json", "csv", "text"], default=None, help="output format")
    common.add_argument("--config", type=str, default=None, help="flat JSON config file; flags take precedence")

    parser = argparse.ArgumentParser(prog="medmap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dispersion", parents=[common], help="frequency branches for a spatial wave vector")
    p.add_argument("--kvec", type=str, default=None, help="spatial wave vector kx,ky,kz")

    p = sub.add_parser("map", parents=[common], help="map a vacuum photon onto the medium shell")
    p.add_argument("--wavevector", type=str, default=None, help="four components w0,w1,w2,w3")
    p.add_argument("--inverse", action="store_true", help="map a medium wave vector back to vacuum")

    p = sub.add_parser("surface", parents=[common], help="classify the constant-frequency surface")
    p.add_argument("--k0", type=float, default=None, help="frequency of the surface (default 1.0)")

    p = sub.add_parser("forces", parents=[common], help="force densities at a sample point (SI)")
    p.add_argument("--e-field", type=float, default=None, help="electric field magnitude, V/m")
    p.add_argument("--grad-eps", type=str, default=None, help="permittivity gradient gx,gy,gz, 1/m")
    p.add_argument("--ds-dt", type=str, default=None, help="d(E x H)/dt sx,sy,sz, W/m^2/s")

    p = sub.add_parser("experiments", parents=[common], help="bench experiment predictors (SI)")
    p.add_argument("--reflectivity", type=float, default=None)
    p.add_argument("--poynting", type=float, default=None, help="incident flux, W/m^2")
    p.add_argument("--omega", type=float, default=None, help="optical angular frequency, rad/s")
    p.add_argument("--power", type=float, default=None, help="circulating power, W")
    p.add_argument("--modulation", type=float, default=None, help="modulation frequency, rad/s")
    p.add_argument("--ring-radius", type=float, default=None, help="ring radius, m")

    p = sub.add_parser("sweep", parents=[common], help="tabulate dispersion quantities over v or n")
    p.add_argument("--sweep-var", choices=["v", "n"], default=None)
    p.add_argument("--start", type=float, default=None)
    p.add_argument("--stop", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--kvec", type=str, default=None, help="spatial wave vector kx,ky,kz")

    return parser


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"config file is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ValueError("config file must hold a flat JSON object")
    return cfg


def _setting(args: argparse.Namespace, config: dict, key: str, default=None):
    """Flag > config file > default."""
    value = getattr(args, key, None)
    if key == "inverse" and value is False:
        value = None  # store_true default; let the config supply it
    if value is None and key in config:
        value = config[key]
    if value is None:
        value = default
    return value


def _medium_from(args: argparse.Namespace, config: dict) -> MediumSpec:
    n = _setting(args, config, "medium_n", DEFAULTS["medium_n"])
    mu = _setting(args, config, "medium_mu", DEFAULTS["medium_mu"])
    velocity = _setting(args, config, "velocity", DEFAULTS["velocity"])
    if isinstance(velocity, str):
        velocity = _parse_triple(velocity)
    return MediumSpec(n=float(n), mu=float(mu), velocity=tuple(float(v) for v in velocity))


def _require(config: dict, args: argparse.Namespace, keys: list[str]) -> dict:
    values = {}
    missing = []
    for key in keys:
        val = _setting(args, config, key)
        if val is None:
            missing.append(key.replace("_", "-"))
        values[key] = val
    if missing:
        raise ValueError("missing required parameters: " + ", ".join(missing))
    return values


def _wave_scale(components) -> float:
    return 1.0 + float(np.sum(np.abs(np.asarray(components)) ** 2))


def cmd_dispersion(m: MediumSpec, kvec) -> dict:
    upper, lower = solve_k0(m, kvec)
    residuals = []
    for k0 in (upper, lower):
        k = FourVector(np.concatenate(([k0], np.asarray(kvec, dtype=float))), LOWER)
        res = dispersion_residual(m, k)
        if abs(res) > 1e-9 * _wave_scale(k.components):
            raise InvariantViolation(f"dispersion root fails its own residual check: {res:.3e}")
        residuals.append(res)
    return {
        "medium_n": m.n,
        "medium_mu": m.mu,
        "velocity": list(m.velocity),
        "kvec": list(np.asarray(kvec, dtype=float)),
        "k_a": upper,
        "k_b": lower,
        "residual_a": residuals[0],
        "residual_b": residuals[1],
        "cherenkov_regime": cherenkov_regime(m),
        "kappa_v2": cherenkov_parameter(m),
        "surface_class": classify_wave_surface(m, 1.0).kind,
    }


def cmd_map(m: MediumSpec, wavevector, inverse: bool) -> dict:
    wv = FourVector(np.asarray(wavevector, dtype=float), LOWER)
    mapped = map_wavevector(m, wv, inverse=inverse)
    if inverse:
        basis_in = medium_polarization_basis(m, wv)
        basis_out = map_polarization(m, basis_in, inverse=True)
        momentum = map_four_momentum(m, wv, inverse=True)
    else:
        basis_in = vacuum_polarization_basis(m, wv)
        basis_out = map_polarization(m, basis_in)
        momentum = map_four_momentum(m, wv)
    p_sq = float(np.real(minkowski_dot(momentum, momentum)))
    causal = classify_momentum(momentum)
    return {
        "medium_n": m.n,
        "medium_mu": m.mu,
        "velocity": list(m.velocity),
        "inverse": inverse,
        "input_wavevector": list(np.real(wv.components)),
        "mapped_wavevector": list(np.real(mapped.components)),
        "input_polarization_2": list(np.real(basis_in.e2.components)),
        "input_polarization_3": list(np.real(basis_in.e3.components)),
        "mapped_polarization_2": list(np.real(basis_out.e2.components)),
        "mapped_polarization_3": list(np.real(basis_out.e3.components)),
        "p_mapped": list(np.real(momentum.components)),
        "p_dot_p": p_sq,
        "causal_class": causal,
    }


def cmd_surface(m: MediumSpec, k0: float) -> dict:
    surf = classify_wave_surface(m, k0)
    return {
        "medium_n": m.n,
        "medium_mu": m.mu,
        "velocity": list(m.velocity),
        "k0": k0,
        "kind": surf.kind,
        "center_offset": surf.center_offset,
        "semi_axes": list(surf.semi_axes) if surf.semi_axes is not None else None,
        "kappa_v2": surf.kappa_v2,
        "cherenkov_regime": cherenkov_regime(m),
    }


def cmd_forces(m: MediumSpec, e_field: float, grad_eps, ds_dt) -> dict:
    sample = ForceSample.at((0.0, 0.0, 0.0), e_field, grad_eps, m.n, ds_dt)
    if not np.array_equal(sample.f_total, sample.f_am + sample.f_a):
        raise InvariantViolation("force decomposition does not sum to the total")
    return {
        "medium_n": m.n,
        "e_field_v_m": e_field,
        "grad_eps_1_m": list(np.asarray(grad_eps, dtype=float)),
        "ds_dt_w_m2_s": list(np.asarray(ds_dt, dtype=float)),
        "f_am_n_m3": list(sample.f_am),
        "f_a_n_m3": list(sample.f_a),
        "f_total_n_m3": list(sample.f_total),
    }


def cmd_experiments(m: MediumSpec, params: dict) -> dict:
    predictions = experiment_suite(
        n=m.n,
        reflectivity=float(params["reflectivity"]),
        poynting=float(params["poynting"]),
        omega=float(params["omega"]),
        power=float(params["power"]),
        modulation=float(params["modulation"]),
        ring_radius=float(params["ring_radius"]),
    )
    by_name = {p.name: p.value for p in predictions}
    return {
        "medium_n": m.n,
        "jones_ratio": by_name["jones_ratio"],
        "mirror_pressure_pa": by_name["mirror_pressure"],
        "photon_recoil_kg_m_s": by_name["photon_recoil"],
        "abraham_torque_nm": by_name["abraham_torque"],
    }


def sweep_rows(m: MediumSpec, sweep_var: str, values, kvec) -> list[dict]:
    """Dispersion summary rows over a sweep of v or n; rows are independent
    and deterministic, ordered exactly as the input values."""
    rows = []
    direction = np.asarray(m.velocity, dtype=float)
    norm = np.linalg.norm(direction)
    direction = direction / norm if norm > 0.0 else np.array([1.0, 0.0, 0.0])
    for value in values:
        if sweep_var == "v":
            medium = MediumSpec(n=m.n, mu=m.mu, velocity=tuple(value * direction))
        else:
            medium = MediumSpec(n=float(value), mu=m.mu, velocity=tuple(m.velocity))
        upper, lower = solve_k0(medium, kvec)
        in_regime = cherenkov_regime(medium)
        rows.append(
            {
                sweep_var: float(value),
                "k_a": upper,
                "k_b": lower,
                "cherenkov": in_regime,
                "cone_angle_rad": cherenkov_cone(medium) if in_regime else None,
                "surface_class": classify_wave_surface(medium, 1.0).kind,
            }
        )
    return rows


def cmd_sweep(m: MediumSpec, sweep_var: str, start: float, stop: float, steps: int, kvec) -> dict:
    if steps is None or steps < 1:
        raise ValueError("empty sweep range: steps must be at least 1")
    values = np.linspace(start, stop, steps) if steps > 1 else np.array([start])
    rows = sweep_rows(m, sweep_var, values, kvec)
    return {"sweep_var": sweep_var, "rows": rows}


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_cell(v) for v in value)
    return str(value)


def render_csv(payload: dict) -> str:
    rows = payload.get("rows") if isinstance(payload.get("rows"), list) else [payload]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    fieldnames = [k for k in rows[0].keys()]
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([_csv_cell(row.get(k)) for k in fieldnames])
    return buf.getvalue()


def _text_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    return str(value)


def render_text(payload: dict) -> str:
    lines = []
    if isinstance(payload.get("rows"), list):
        lines.append(f"sweep over {payload.get('sweep_var')}")
        for row in payload["rows"]:
            lines.append("  ".join(f"{k}={_text_value(v)}" for k, v in row.items()))
    else:
        for key, value in payload.items():
            lines.append(f"{key} = {_text_value(value)}")
    return "\n".join(lines) + "\n"


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return render_csv(payload)
    return render_text(payload)


def run(args: argparse.Namespace, config: dict) -> dict:
    medium = _medium_from(args, config)

    if args.command == "dispersion":
        kvec_text = _setting(args, config, "kvec")
        if kvec_text is None:
            raise ValueError("missing required parameters: kvec")
        kvec = _parse_triple(kvec_text) if isinstance(kvec_text, str) else tuple(kvec_text)
        return cmd_dispersion(medium, kvec)

    if args.command == "map":
        wv_text = _setting(args, config, "wavevector")
        if wv_text is None:
            raise ValueError("missing required parameters: wavevector")
        wv = _parse_quad(wv_text) if isinstance(wv_text, str) else tuple(wv_text)
        inverse = bool(_setting(args, config, "inverse", False))
        return cmd_map(medium, wv, inverse)

    if args.command == "surface":
        k0 = _setting(args, config, "k0", 1.0)
        return cmd_surface(medium, float(k0))

    if args.command == "forces":
        e_field = float(_setting(args, config, "e_field", 0.0))
        grad_eps = _setting(args, config, "grad_eps", (0.0, 0.0, 0.0))
        if isinstance(grad_eps, str):
            grad_eps = _parse_triple(grad_eps)
        ds_dt = _setting(args, config, "ds_dt", (0.0, 0.0, 0.0))
        if isinstance(ds_dt, str):
            ds_dt = _parse_triple(ds_dt)
        return cmd_forces(medium, e_field, grad_eps, ds_dt)

    if args.command == "experiments":
        params = _require(config, args, ["reflectivity", "poynting", "omega", "power", "modulation", "ring_radius"])
        return cmd_experiments(medium, params)

    if args.command == "sweep":
        params = _require(config, args, ["sweep_var", "start", "stop", "steps", "kvec"])
        kvec = params["kvec"]
        kvec = _parse_triple(kvec) if isinstance(kvec, str) else tuple(kvec)
        return cmd_sweep(medium, params["sweep_var"], float(params["start"]), float(params["stop"]),
                         int(params["steps"]), kvec)

    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config) if getattr(args, "config", None) else {}
        payload = run(args, config)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    fmt = _setting(args, config, "format", DEFAULTS["format"])
    sys.stdout.write(render(payload, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
