"""JSON complex files and profile output (TSV / JSON)."""

from __future__ import annotations

import json
import logging
from collections import Counter
from pathlib import Path
from typing import Any

import jsonschema

from .complex import CfkComplex, DiffTerm, Generator
from .invariants import InvariantProfile, NuResult

log = logging.getLogger(__name__)


class SchemaError(ValueError):
    pass


COMPLEX_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["name", "generators", "differential"],
    "properties": {
        "name": {"type": "string"},
        "allow_non_knot": {"type": "boolean"},
        "generators": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "maslov"],
                "anyOf": [{"required": ["alexander"]}, {"required": ["position"]}],
                "properties": {
                    "id": {"type": "string"},
                    "alexander": {"type": "integer"},
                    "maslov": {"type": "integer"},
                    "position": {
                        "type": "array",
                        "items": {"type": "integer"},
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
                "additionalProperties": False,
            },
        },
        "differential": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to"],
                "properties": {
                    "from": {"type": "string"},
                    "to": {"type": "string"},
                    "u_power": {"type": "integer", "minimum": 0},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


def complex_from_dict(doc: Any) -> CfkComplex:
    """Build a complex from a parsed JSON document.

    A generator given with ``"position": [i, j]`` is translated to its i = 0
    representative: A = j - i, and its ``maslov`` (read at that position)
    drops by 2i. An arrow between two positioned generators may omit
    ``u_power``; it is then the drop in i.
    """
    try:
        jsonschema.validate(doc, COMPLEX_SCHEMA)
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {e.message}") from None

    gens: list[Generator] = []
    pos_i: dict[str, int] = {}
    for g in doc["generators"]:
        if "position" in g:
            i, j = g["position"]
            if "alexander" in g and g["alexander"] != j - i:
                raise SchemaError(f"generator {g['id']}: alexander {g['alexander']} disagrees with position {[i, j]}")
            pos_i[g["id"]] = i
            gens.append(Generator(g["id"], j - i, g["maslov"] - 2 * i))
        else:
            gens.append(Generator(g["id"], g["alexander"], g["maslov"]))

    terms: list[DiffTerm] = []
    for d in doc["differential"]:
        src, dst = d["from"], d["to"]
        derived = pos_i[src] - pos_i[dst] if src in pos_i and dst in pos_i else None
        if "u_power" in d:
            a = d["u_power"]
            if derived is not None and a != derived:
                raise SchemaError(f"arrow {src}->{dst}: u_power {a} disagrees with positions (drop {derived})")
        elif derived is None:
            raise SchemaError(f"arrow {src}->{dst}: u_power required unless both ends have positions")
        else:
            a = derived
        terms.append(DiffTerm(src, dst, a))

    dup = [t for t, k in Counter(terms).items() if k > 1]
    if dup:
        log.warning(
            "reducing %d repeated differential term(s) mod 2: %s",
            len(dup),
            ", ".join(f"{t.source}->{t.target} (U^{t.u_power})" for t in dup),
        )
    return CfkComplex(doc["name"], tuple(gens), tuple(terms), bool(doc.get("allow_non_knot", False)))


def complex_to_dict(c: CfkComplex) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": c.name,
        "generators": [{"id": g.id, "alexander": g.alexander, "maslov": g.maslov} for g in c.generators],
        "differential": [{"from": t.source, "to": t.target, "u_power": t.u_power} for t in c.differential],
    }
    if c.allow_non_knot:
        doc["allow_non_knot"] = True
    return doc


def parse(path: str | Path) -> CfkComplex:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"malformed JSON: {e}") from None
    return complex_from_dict(doc)


def dumps(c: CfkComplex) -> str:
    return json.dumps(complex_to_dict(c), indent=2) + "\n"


def serialize(c: CfkComplex, path: str | Path) -> None:
    Path(path).write_text(dumps(c))


def _flag(b: bool) -> str:
    return "true" if b else "false"


def profile_to_tsv(p: InvariantProfile) -> str:
    lines = [
        f"# tau={p.tau}",
        f"# nu_plus={p.nu_plus} (n_used={p.nu_plus_n_used}, verified={_flag(p.stabilization_verified)})",
        f"# nu_plus_prime={p.nu_plus_prime}",
        "n\tnu_n\tmonotone_flag",
    ]
    for n, r in sorted(p.entries.items()):
        lines.append(f"{n}\t{r.value}\t{_flag(r.monotone_flag)}")
    return "\n".join(lines) + "\n"


def profile_to_dict(p: InvariantProfile) -> dict[str, Any]:
    return {
        "name": p.name,
        "tau": p.tau,
        "nu_plus": {"value": p.nu_plus, "n_used": p.nu_plus_n_used},
        "nu_plus_prime": {"value": p.nu_plus_prime, "n_used": p.nu_plus_prime_n_used},
        "stabilization_verified": p.stabilization_verified,
        "entries": [
            {
                "n": n,
                "nu_n": r.value,
                "monotone_flag": r.monotone_flag,
                "witness_s": sorted(r.witness_s_set),
                "scan_range": list(r.scan_range),
            }
            for n, r in sorted(p.entries.items())
        ],
        "diagnostics": list(p.diagnostics),
    }


def profile_from_dict(doc: dict[str, Any]) -> InvariantProfile:
    entries = {
        e["n"]: NuResult(e["n"], e["nu_n"], frozenset(e["witness_s"]), e["monotone_flag"], tuple(e["scan_range"]))
        for e in doc["entries"]
    }
    return InvariantProfile(
        name=doc["name"],
        tau=doc["tau"],
        entries=entries,
        nu_plus=doc["nu_plus"]["value"],
        nu_plus_n_used=doc["nu_plus"]["n_used"],
        nu_plus_prime=doc["nu_plus_prime"]["value"],
        nu_plus_prime_n_used=doc["nu_plus_prime"]["n_used"],
        stabilization_verified=doc["stabilization_verified"],
        diagnostics=list(doc["diagnostics"]),
    )


def profile_to_json(p: InvariantProfile) -> str:
    return json.dumps(profile_to_dict(p), indent=2) + "\n"
