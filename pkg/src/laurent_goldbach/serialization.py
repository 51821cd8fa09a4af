"""JSON form of a decomposition, and an independent checker for it."""
from __future__ import annotations

from typing import Any

from .decompose import DecompositionResult
from .errors import LaurentGoldbachError
from .irreducibility import certificate_from_dict, verify_certificate
from .laurent import LaurentPoly
from .notation import format_poly, parse_poly

SCHEMA_VERSION = 1


def _plain(v: Any) -> Any:
    return format_poly(v) if isinstance(v, LaurentPoly) else v


def result_to_dict(f: LaurentPoly, result: DecompositionResult) -> dict:
    t = result.trace
    return {
        "schema": SCHEMA_VERSION,
        "input": format_poly(f),
        "parts": [format_poly(result.part_a), format_poly(result.part_b)],
        "certificates": [
            {"kind": c.kind, "data": c.data()} for c in (result.cert_a, result.cert_b)
        ],
        "trace": {
            "branch": t.branch,
            "prime": t.prime,
            "alpha": t.split.alpha if t.split else None,
            "beta": t.split.beta if t.split else None,
            "peel_amount": t.peel_amount,
            "intermediates": {k: _plain(v) for k, v in t.intermediates.items()},
        },
    }


def verify_document(doc: dict) -> list[str]:
    """Problems found in a decomposition document; empty means it checks out.

    Only ``input``, ``parts`` and ``certificates`` are trusted as claims; the
    trace is informational and is not consulted.
    """
    problems = []
    if doc.get("schema") != SCHEMA_VERSION:
        problems.append(f"unsupported schema {doc.get('schema')!r}")
        return problems
    try:
        f = parse_poly(doc["input"])
        parts = [parse_poly(p) for p in doc["parts"]]
        certs = [certificate_from_dict(c) for c in doc["certificates"]]
    except (KeyError, TypeError, ValueError, LaurentGoldbachError) as e:
        return [f"malformed document: {e}"]
    if len(parts) != 2 or len(certs) != 2:
        return ["expected exactly two parts and two certificates"]
    if any(p.is_zero() for p in parts):
        problems.append("a part is zero")
    if parts[0] + parts[1] != f:
        problems.append("parts do not sum to the input")
    for i, (p, c) in enumerate(zip(parts, certs)):
        try:
            ok = verify_certificate(p, c)
        except LaurentGoldbachError as e:
            ok = False
            problems.append(f"certificate {i} could not be checked: {e}")
            continue
        if not ok:
            problems.append(f"certificate {i} ({c.kind}) does not hold for {format_poly(p)}")
    return problems
