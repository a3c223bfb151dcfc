"""Registry manifest: a versioned JSON file describing every problem record."""

from __future__ import annotations

import json

from .core import Dimensions
from .registry import KnownSolution, ParamSpec, ProblemRecord, aliases, records

SCHEMA_VERSION = 1


def _solution_dict(s: KnownSolution) -> dict:
    return {
        "x": None if s.x is None else list(s.x),
        "y": None if s.y is None else list(s.y),
        "status": s.status,
        "claimed_F": s.claimed_F,
        "claimed_f": s.claimed_f,
        "label": s.label,
        "note": s.note,
        "family": s.family,
        "value_tol": s.value_tol,
    }


def record_dict(rec: ProblemRecord) -> dict:
    return {
        "name": rec.name,
        "source": rec.source_ref,
        "solution_source": rec.solution_ref,
        # F G H f g h, each over {N, L, O}
        "labels": rec.full_labels,
        "dims": {"n_x": rec.dims.n_x, "n_y": rec.dims.n_y, "n_G": rec.dims.n_G, "n_g": rec.dims.n_g},
        "equality_dims": None if rec.equality_dims is None else list(rec.equality_dims),
        "params": [
            {
                "name": p.name,
                "default": p.default,
                "lower": p.lower,
                "lower_inclusive": p.lower_inclusive,
                "description": p.description,
            }
            for p in rec.params
        ],
        "known_solutions": [_solution_dict(s) for s in rec.known_solutions],
        "claimed_F": rec.claimed_F,
        "claimed_f": rec.claimed_f,
        "flags": sorted(rec.flags),
        "notes": list(rec.notes),
    }


def emit(recs: list[ProblemRecord] | None = None, alias_map: dict | None = None) -> str:
    """Manifest text for ``recs`` (default: the whole registry)."""
    if recs is None:
        recs = records()
        alias_map = aliases() if alias_map is None else alias_map
    doc = {
        "schema_version": SCHEMA_VERSION,
        "aliases": dict(sorted((alias_map or {}).items())),
        "problems": [record_dict(r) for r in recs],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _tuple(v):
    return None if v is None else tuple(float(a) for a in v)


def record_from_dict(d: dict) -> ProblemRecord:
    lab = d["labels"]
    if len(lab) != 6 or set(lab) - set("NLO"):
        raise ValueError(f"bad label string {lab!r}")
    return ProblemRecord(
        name=d["name"],
        source_ref=d["source"],
        solution_ref=d["solution_source"],
        labels=(lab[0], lab[1], lab[3], lab[4]),
        equality_labels=(lab[2], lab[5]),
        dims=Dimensions(**d["dims"]),
        equality_dims=None if d["equality_dims"] is None else tuple(d["equality_dims"]),
        params=tuple(ParamSpec(**p) for p in d["params"]),
        known_solutions=tuple(
            KnownSolution(**{**s, "x": _tuple(s["x"]), "y": _tuple(s["y"])}) for s in d["known_solutions"]
        ),
        claimed_F=d["claimed_F"],
        claimed_f=d["claimed_f"],
        flags=frozenset(d["flags"]),
        notes=tuple(d["notes"]),
    )


def load(text: str) -> tuple[list[ProblemRecord], dict]:
    """Parse manifest text into ``(records, aliases)``."""
    doc = json.loads(text)
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported manifest schema_version {version!r}")
    return [record_from_dict(d) for d in doc["problems"]], dict(doc["aliases"])
