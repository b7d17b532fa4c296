import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence

from . import document as documents
from .check import run_checks
from .exc_geometry import spectrum
from .multiplier import (
    adjoint_conditions,
    lct,
    monomial_multiplier,
    multiplier_conditions,
    omega_quotient_dims,
    punctual_jumping_numbers,
    skoda_extend,
)
from .nc_engine import (
    NCModel,
    d_alpha_nc,
    jumping_nc,
    multiplier_nc,
    v_bf_generators,
    v_generator,
)
from .rationals import format_rational, parse_rational
from .resolution import DocumentError, milnor_number

logger = logging.getLogger(__name__)

COMMANDS = ("vfilt", "multiplier", "jumping", "spectrum", "adjoint", "omega", "check")
DEFAULT_JUMPING_BOUND = Fraction(1)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCONSISTENT = 2


def _vfilt(model: NCModel, alpha: Optional[Fraction], bound: Fraction) -> Dict[str, Any]:
    if alpha is None:
        return {"vfilt": [
            {
                "alpha": format_rational(jump),
                "v_generator": list(v_generator(model, jump)),
                "multiplier": list(multiplier_nc(model, jump).generator),
            }
            for jump in jumping_nc(model, bound)
        ]}
    output: Dict[str, Any] = {
        "alpha": format_rational(alpha),
        "v_generator": list(v_generator(model, alpha)),
        "multiplier": list(multiplier_nc(model, alpha).generator),
        "bf_generators": [[list(exponent), power] for exponent, power in v_bf_generators(model, alpha)],
    }
    if 0 < alpha <= 1:
        output["d_alpha"] = sorted(d_alpha_nc(model, alpha))
    return output

def _multiplier(document: Mapping[str, Any], alpha: Fraction) -> Dict[str, Any]:
    if documents.variant(document) == "nc":
        ideal = multiplier_nc(documents.nc_model(document), alpha)
        return {"multiplier": str(ideal), "generators": [list(g) for g in ideal.generators]}
    res = documents.germ(document)
    output: Dict[str, Any] = {"conditions": multiplier_conditions(res, alpha).as_dict()}
    if documents.variant(document) in ("newton", "qh") and alpha < 1:
        ideal = monomial_multiplier(res, alpha)
        output["monomial_generators"] = [list(g) for g in ideal.generators]
    return output

def _jumping(document: Mapping[str, Any], bound: Fraction) -> Dict[str, Any]:
    if documents.variant(document) == "nc":
        return {"jumping": [format_rational(x) for x in jumping_nc(documents.nc_model(document), bound)]}
    res = documents.germ(document)
    punctual = punctual_jumping_numbers(res)
    return {
        "jumping": [format_rational(x) for x in skoda_extend([alpha for alpha, _ in punctual], bound)],
        "punctual": [[format_rational(alpha), dim] for alpha, dim in punctual],
        "lct": format_rational(lct(res)),
        # -1 is a root of every b-function, whether or not 1 is a punctual jump
        "one_is_root": True,
    }

def run(
    command: str,
    document: Mapping[str, Any],
    alpha: Optional[Fraction] = None,
    bound: Fraction = DEFAULT_JUMPING_BOUND,
    parallelism: Optional[int] = None,
) -> Dict[str, Any]:
    if command not in COMMANDS:
        raise DocumentError(f"Unknown command {command!r}")
    kind = documents.variant(document)
    if command == "vfilt":
        return _vfilt(documents.nc_model(document), alpha, bound)
    if command == "multiplier":
        if alpha is None:
            raise DocumentError("multiplier needs --alpha")
        return _multiplier(document, alpha)
    if command == "jumping":
        return _jumping(document, bound)
    if command == "check":
        results = run_checks(document)
        return {
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            "passed": all(r.passed for r in results),
        }

    if kind == "nc":
        raise DocumentError(f"{command} needs a curve germ, not a normal crossing model")
    res = documents.germ(document)
    if command == "spectrum":
        sp = spectrum(res, parallelism)
        return {
            "spectrum": sp.as_pairs(),
            "mu": milnor_number(res) if res.is_reduced else sp.total(),
            "symmetric": sp.is_symmetric(2),
        }
    if command == "adjoint":
        return {"conditions": adjoint_conditions(res).as_dict()}
    quotient = omega_quotient_dims(res)
    return {
        "omega": [[format_rational(k), v] for k, v in sorted(quotient.dims.items())],
        "bound_at_one": quotient.bound_at_one,
        "delta": quotient.delta,
        "sandwich": list(quotient.sandwich),
    }

def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "(" + ", ".join(_cell(v) for v in value) + ")"
    return str(value)

def render_table(output: Mapping[str, Any]) -> str:
    """Plain text rendering of a command's output: scalars as key: value,
    mappings and lists of records as aligned columns."""
    lines: List[str] = []
    for key, value in output.items():
        rows: List[Sequence[str]] = []
        if isinstance(value, Mapping):
            rows = [(str(k), _cell(v)) for k, v in value.items()]
        elif isinstance(value, list) and value and isinstance(value[0], Mapping):
            headers = list(value[0].keys())
            rows = [headers] + [[_cell(record[h]) for h in headers] for record in value]
        elif isinstance(value, list) and value and isinstance(value[0], list):
            rows = [[_cell(v) for v in entry] for entry in value]
        else:
            lines.append(f"{key}: {_cell(value)}")
            continue
        lines.append(f"{key}:")
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        for row in rows:
            lines.append("  " + "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines)

def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singspec",
        description="Exact multiplier ideals, V-filtrations and spectra of divisor germs.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="JSON input document")
    parser.add_argument("--alpha", default=None, help="exact rational p/q")
    parser.add_argument("--max", default=None, help="jumping number bound p/q (default 1)")
    parser.add_argument("--parallelism", type=int, default=None, help="worker processes for spectrum")
    formats = parser.add_mutually_exclusive_group()
    formats.add_argument("--json", dest="table", action="store_false", help="emit JSON (default)")
    formats.add_argument("--table", dest="table", action="store_true", help="emit aligned plain text")
    parser.add_argument("--verbose", action="store_true", help="log debug output")
    parser.set_defaults(table=False)
    return parser

def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(
        format="%(name)s:%(levelname)s:%(message)s",
        level=logging.DEBUG if args.verbose else logging.WARNING,
    )

    try:
        alpha = parse_rational(args.alpha) if args.alpha is not None else None
        bound = parse_rational(args.max) if args.max is not None else DEFAULT_JUMPING_BOUND
        document = documents.load(args.input)
        output = run(args.command, document, alpha, bound, args.parallelism)
    except RuntimeError as exc:
        logger.error("%s", exc)
        print(f"singspec: inconsistent result: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"singspec: {exc}", file=sys.stderr)
        return EXIT_INVALID

    print(render_table(output) if args.table else json.dumps(output))
    if args.command == "check" and not output["passed"]:
        return EXIT_INVALID
    return EXIT_OK
