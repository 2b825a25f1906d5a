"""Batch command-line front end.

Reads a JSON manifest describing a singularity (variables, defining
matrix, rank bound t, 1-form coefficients, optional topological data),
dispatches one computation, and emits a byte-stable JSON report: sorted
keys, exact integers, the string "INFINITE" for infinite colengths, and
no floats anywhere.  Emitted reports embed the normalized manifest, so a
report file can itself be fed back as input and reproduces its output.

Exit codes: 0 success, 1 manifest or usage validation error (the message
names the offending field), 2 a computation signalled an infinite value
where a finite one was required, or the oracle disagreed with the engine.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .conversions import (
    chi_bar_hyperplane,
    chi_fiber,
    coeff_matrices,
    isolated_indices,
    ph_index,
    phn_from_radial,
    radial_from_phn,
    StrataIndexData,
)
from .determinantal import (
    DetSingularity,
    OneForm,
    chi_singular_stratum,
    classify,
    minors,
)
from .form_indices import (
    algebra_ideal,
    gmvs_ideal,
    icis_ideal,
    omega_quotient_generators,
)
from .rings import PolyParseError, RingContext, parse_poly
from .standard_bases import INFINITE, Ideal, colength, module_colength
from .truncation import (
    ORACLE_CEILING,
    stabilized_colength,
    stabilized_module_colength,
)


class ManifestError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__("manifest field '%s': %s" % (field, message))
        self.field = field


def _jsonable(value):
    if value == INFINITE:
        return "INFINITE"
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    raise TypeError("value %r is not representable in a report" % (value,))


def _dump(doc: dict) -> str:
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# manifest loading and validation

def load_manifest(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ManifestError("(file)", str(exc)) from None
    except json.JSONDecodeError as exc:
        raise ManifestError("(file)", "invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict):
        raise ManifestError("(file)", "top-level value must be an object")
    if "manifest" in doc and "command" in doc:
        doc = doc["manifest"]  # a previously emitted report
        if not isinstance(doc, dict):
            raise ManifestError("manifest", "embedded manifest must be an object")
    return doc


def _require_string_list(manifest: dict, field: str) -> list:
    value = manifest.get(field)
    if not isinstance(value, list) or not value or not all(isinstance(s, str) for s in value):
        raise ManifestError(field, "must be a nonempty list of strings")
    return value


def _require_int_list(manifest: dict, field: str, length: Optional[int] = None) -> list:
    value = manifest.get(field)
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ManifestError(field, "must be a list of integers")
    if length is not None and len(value) != length:
        raise ManifestError(field, "must have length %d" % length)
    return value


class ManifestData:
    """Validated manifest: ring plus whatever optional blocks are present."""

    def __init__(self, manifest: dict, characteristic: int = 0):
        self.raw = manifest
        self.ring = None
        self.matrix = None
        self.t = None
        self.form = None
        self.ideal = None
        if "variables" in manifest:
            names = _require_string_list(manifest, "variables")
            try:
                self.ring = RingContext(tuple(names), characteristic)
            except ValueError as exc:
                raise ManifestError("variables", str(exc)) from None
        if "matrix" in manifest:
            if self.ring is None:
                raise ManifestError("variables", "required when a matrix is given")
            rows = manifest["matrix"]
            if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
                raise ManifestError("matrix", "must be a nonempty list of rows")
            width = len(rows[0])
            parsed = []
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise ManifestError("matrix", "row %d has length %d, expected %d" % (i, len(row), width))
                prow = []
                for j, entry in enumerate(row):
                    if not isinstance(entry, str):
                        raise ManifestError("matrix", "entry [%d][%d] must be a string" % (i, j))
                    try:
                        prow.append(parse_poly(entry, self.ring))
                    except PolyParseError as exc:
                        raise ManifestError("matrix", "entry [%d][%d]: %s" % (i, j, exc)) from None
                parsed.append(prow)
            self.matrix = parsed
            if "t" not in manifest:
                raise ManifestError("t", "required when a matrix is given")
            t = manifest["t"]
            if not isinstance(t, int) or isinstance(t, bool):
                raise ManifestError("t", "must be an integer")
            self.t = t
        if "form" in manifest:
            if self.ring is None:
                raise ManifestError("variables", "required when a form is given")
            entries = _require_string_list(manifest, "form")
            if len(entries) != self.ring.nvars:
                raise ManifestError("form", "must list one coefficient per variable")
            coeffs = []
            for i, entry in enumerate(entries):
                try:
                    coeffs.append(parse_poly(entry, self.ring))
                except PolyParseError as exc:
                    raise ManifestError("form", "entry [%d]: %s" % (i, exc)) from None
            self.form = OneForm(coeffs)
        if "ideal" in manifest:
            if self.ring is None:
                raise ManifestError("variables", "required when an ideal is given")
            entries = _require_string_list(manifest, "ideal")
            gens = []
            for i, entry in enumerate(entries):
                try:
                    gens.append(parse_poly(entry, self.ring))
                except PolyParseError as exc:
                    raise ManifestError("ideal", "entry [%d]: %s" % (i, exc)) from None
            self.ideal = gens

    def singularity(self) -> DetSingularity:
        if self.matrix is None:
            raise ManifestError("matrix", "required for this command")
        try:
            return DetSingularity.create(self.ring, self.matrix, self.t)
        except ValueError as exc:
            raise ManifestError("matrix", str(exc)) from None

    def one_form(self) -> OneForm:
        if self.form is None:
            raise ManifestError("form", "required for this command")
        return self.form

    def type_triple(self):
        if self.matrix is not None:
            sing = self.singularity()
            return sing.m, sing.n, sing.t, sing.ambient_dim
        triple = self.raw.get("type")
        if triple is None:
            raise ManifestError("type", "required when no matrix is given")
        triple = _require_int_list(self.raw, "type", 3)
        m, n, t = triple
        ambient = self.raw.get("N", self.ring.nvars if self.ring else None)
        if not isinstance(ambient, int) or isinstance(ambient, bool):
            raise ManifestError("N", "required (integer) when no matrix is given")
        return m, n, t, ambient


def normalized_manifest(manifest: dict, data: ManifestData) -> dict:
    out = {}
    if data.ring is not None:
        out["variables"] = list(data.ring.variables)
    if data.matrix is not None:
        out["matrix"] = [[p.render() for p in row] for row in data.matrix]
        out["t"] = data.t
    if data.form is not None:
        out["form"] = [p.render() for p in data.form.coefficients]
    if data.ideal is not None:
        out["ideal"] = [p.render() for p in data.ideal]
    for key in ("type", "N", "radial", "chi", "chi_sing"):
        if key in manifest:
            out[key] = manifest[key]
    return out


# ---------------------------------------------------------------------------
# oracle and modular cross-checks

def _oracle_block(report, engine_value) -> dict:
    return {
        "value": report.value if report.stabilized else None,
        "stabilized": report.stabilized,
        "degree_cap": report.degree_cap,
        "agrees": report.agrees_with(engine_value),
    }


def _ideal_command(data: ManifestData, gens, args, finite_required: bool):
    """Shared engine/oracle/modular plumbing for ideal colength commands."""
    ideal = Ideal(gens)
    value = colength(ideal)
    extras = {}
    exit_code = 0
    if finite_required and value == INFINITE:
        exit_code = 2
    if args.oracle:
        rep = stabilized_colength(ideal, ceiling=args.degree_cap)
        extras["oracle"] = _oracle_block(rep, value)
        if not rep.agrees_with(value):
            exit_code = 2
    return value, extras, exit_code


# ---------------------------------------------------------------------------
# commands

def _cmd_check(data: ManifestData, args):
    sing = data.singularity()
    cls = classify(sing)
    result = {
        "type": [sing.m, sing.n, sing.t],
        "ambient_dim": sing.ambient_dim,
        "dim": sing.dim,
        "codim": sing.codim,
        "transposed": sing.transposed,
        "smoothable": cls.smoothable,
        "isolated": cls.isolated,
        "stratum_dims": list(cls.stratum_dims),
        "sing_stratum_colength_finite": cls.sing_stratum_colength_finite,
    }
    bound = (sing.m - sing.t + 2) * (sing.n - sing.t + 2)
    if sing.t >= 2 and sing.ambient_dim == bound and cls.sing_stratum_colength_finite:
        result["chi_sing"] = chi_singular_stratum(sing)
    return result, {"transposed": sing.transposed}, 0


def _cmd_minors(data: ManifestData, args):
    sing = data.singularity()
    size = args.size if args.size is not None else sing.t
    try:
        polys = minors(sing.matrix, size)
    except ValueError as exc:
        raise ManifestError("(--size)", str(exc)) from None
    return {"size": size, "minors": [p.render() for p in polys]}, {}, 0


def _cmd_colength(data: ManifestData, args):
    if data.ideal is not None:
        gens = data.ideal
    else:
        gens = data.singularity().defining_minors()
    value, extras, code = _ideal_command(data, gens, args, finite_required=False)
    return {"colength": value}, extras, code


def _cmd_alg_index(data: ManifestData, args):
    sing = data.singularity()
    ideal = algebra_ideal(sing, data.one_form())
    value, extras, code = _ideal_command(data, ideal.generators, args, finite_required=True)
    return {"alg_index": value}, extras, code


def _cmd_hom_index(data: ManifestData, args):
    sing = data.singularity()
    rank, gens = omega_quotient_generators(sing, data.one_form())
    value = module_colength(rank, gens)
    extras = {}
    code = 2 if value == INFINITE else 0
    if args.oracle:
        rep = stabilized_module_colength(rank, gens, ceiling=args.degree_cap)
        extras["oracle"] = _oracle_block(rep, value)
        if not rep.agrees_with(value):
            code = 2
    return {"omega_quotient_dim": value}, extras, code


def _cmd_icis(data: ManifestData, args):
    sing = data.singularity()
    if sing.m != 1 or sing.t != 1:
        raise ManifestError("matrix", "complete-intersection command needs a single-row matrix and t = 1")
    defs = [p for p in sing.matrix[0]]
    try:
        ideal = icis_ideal(defs, data.one_form())
    except ValueError as exc:
        raise ManifestError("matrix", str(exc)) from None
    value, extras, code = _ideal_command(data, ideal.generators, args, finite_required=True)
    return {"icis_index": value}, extras, code


def _cmd_gmvs(data: ManifestData, args):
    sing = data.singularity()
    try:
        ideal = gmvs_ideal(sing, data.one_form())
    except ValueError as exc:
        raise ManifestError("matrix", str(exc)) from None
    value, extras, code = _ideal_command(data, ideal.generators, args, finite_required=True)
    return {"gmvs_index": value}, extras, code


def _cmd_convert(data: ManifestData, args):
    m, n, t, ambient = data.type_triple()
    radial = _require_int_list(data.raw, "radial", t) if "radial" in data.raw else None
    chi = _require_int_list(data.raw, "chi", t) if "chi" in data.raw else None
    if radial is None:
        raise ManifestError("radial", "required for conversions")
    if chi is None:
        raise ManifestError("chi", "required for conversions")
    try:
        sid = StrataIndexData(m, n, t, ambient, tuple(radial), tuple(chi))
    except ValueError as exc:
        raise ManifestError("type", str(exc)) from None
    chibar = [chi[i] - 1 for i in range(t)]
    phn_per = [
        phn_from_radial(radial[:j], chibar[:j], m, n, j, ambient) for j in range(1, t + 1)
    ]
    result = {
        "ph_index": {str(k): ph_index(sid, k) for k in (1, 2, 3)},
        "phn_index": phn_per[-1],
        "phn_per_stratum": phn_per,
        "radial_roundtrip": radial_from_phn(phn_per, m, n, t, ambient, chibar[-1]),
    }
    code = 0
    bound = (m - t + 2) * (n - t + 2)
    if ambient == bound:
        chi_sing = data.raw.get("chi_sing")
        if chi_sing is None and data.matrix is not None and t >= 2:
            try:
                chi_sing = chi_singular_stratum(data.singularity())
            except ValueError:
                chi_sing = None
                code = 2
        if chi_sing is not None:
            if not isinstance(chi_sing, int) or isinstance(chi_sing, bool):
                raise ManifestError("chi_sing", "must be an integer")
            iso = {
                str(k): isolated_indices(m, n, t, ambient, radial[-1], chibar[-1], chi_sing, k)
                for k in (1, 2, 3)
            }
            result["isolated"] = {
                "chi_sing": chi_sing,
                "ph_index": {k: v[0] for k, v in iso.items()},
                "phn_index": iso["1"][1],
            }
    return result, {}, code


def _cmd_tables(data: Optional[ManifestData], args):
    if args.type is not None:
        try:
            m, n, t = (int(x) for x in args.type.split(","))
        except ValueError:
            raise ManifestError("(--type)", "expected m,n,t integers") from None
        ambient = None
    else:
        if data is None:
            raise ManifestError("(--type)", "required when no manifest is given")
        m, n, t, ambient = data.type_triple()
    if not 1 <= t <= m <= n:
        raise ManifestError("type", "need 1 <= t <= m <= n")
    mats = coeff_matrices(m, n, t)
    result = {
        "type": [m, n, t],
        "nmat": [list(row) for row in mats.nmat],
        "mmat": [list(row) for row in mats.mmat],
        "chi_bar_hyperplane": chi_bar_hyperplane(m, n, t),
        "chi_fiber": {
            str(k): [chi_fiber(i, k, m, n, t) for i in range(1, t + 1)] for k in (1, 2, 3)
        },
    }
    return result, {}, 0


_COMMANDS = {
    "check": (_cmd_check, True),
    "minors": (_cmd_minors, True),
    "colength": (_cmd_colength, True),
    "alg-index": (_cmd_alg_index, True),
    "hom-index": (_cmd_hom_index, True),
    "icis": (_cmd_icis, True),
    "gmvs": (_cmd_gmvs, True),
    "convert": (_cmd_convert, True),
    "tables": (_cmd_tables, False),
}


def _parse_field(field: str):
    if field == "q":
        return 0
    if field.startswith("p:"):
        try:
            return int(field[2:])
        except ValueError:
            raise ManifestError("(--field)", "expected p:<prime>") from None
    raise ManifestError("(--field)", "expected 'q' or 'p:<prime>'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detindex",
        description="Indices of holomorphic 1-forms on determinantal singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("manifest", nargs="?" if name == "tables" else None, help="path to a JSON manifest (or an emitted report)")
        cmd.add_argument("--oracle", action="store_true", help="re-derive the value by truncated linear algebra and assert agreement")
        cmd.add_argument("--field", default="q", help="'q' (rationals, default) or 'p:<prime>' to add a modular pre-check")
        cmd.add_argument("--degree-cap", type=int, default=ORACLE_CEILING, help="hard cap for the oracle's truncation degree")
        cmd.add_argument("--output", help="write the report to this path instead of stdout")
        if name == "minors":
            cmd.add_argument("--size", type=int, default=None, help="minor size (default: the rank bound t)")
        if name == "tables":
            cmd.add_argument("--type", default=None, help="type triple m,n,t")
    return parser


_MODULAR_KEYS = {
    "colength": "colength",
    "alg-index": "alg_index",
    "icis": "icis_index",
    "gmvs": "gmvs_index",
    "hom-index": "omega_quotient_dim",
}


def _modular_precheck(manifest: dict, args, rational_result: dict) -> dict:
    p = _parse_field(args.field)
    if p == 0:
        return {}
    key = _MODULAR_KEYS.get(args.command)
    if key is None:
        return {}
    data_p = ManifestData(manifest, characteristic=p)
    saved_oracle = args.oracle
    args.oracle = False
    try:
        handler = _COMMANDS[args.command][0]
        result_p, _, _ = handler(data_p, args)
    finally:
        args.oracle = saved_oracle
    return {
        "modular_precheck": {
            "characteristic": p,
            "value": result_p[key],
            "agrees_with_rational": result_p[key] == rational_result[key],
        }
    }


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, needs_manifest = _COMMANDS[args.command]
    try:
        _parse_field(args.field)
        manifest = None
        data = None
        if getattr(args, "manifest", None) is not None:
            manifest = load_manifest(args.manifest)
            data = ManifestData(manifest)
        elif needs_manifest:
            raise ManifestError("(file)", "a manifest path is required")
        result, extras, code = handler(data, args)
        provenance = {
            "ordering": "anti-graded reverse lexicographic",
            "coefficient_field": "rationals",
        }
        provenance.update(extras)
        if manifest is not None:
            provenance.update(_modular_precheck(manifest, args, result))
        report = {
            "command": args.command,
            "result": result,
            "provenance": provenance,
        }
        if manifest is not None and data is not None:
            report["manifest"] = normalized_manifest(manifest, data)
        text = _dump(report)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except ManifestError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
