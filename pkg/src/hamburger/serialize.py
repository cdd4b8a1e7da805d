"""JSON forms of measures and decompositions.

Measure:        {"atoms": [{"x", "re", "im"}, ...], "origin": {"re", "im"}}
Decomposition:  {"terms": [{"d", "e", "re", "im"}, ...]}

Floats are written with Python's shortest round-trip representation, so
writing and reading back reproduces every double exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .measures import AtomicEvenMeasure, TdeDecomposition, TdeTerm


def _complex(obj: dict) -> complex:
    return complex(float(obj.get("re", 0.0)), float(obj.get("im", 0.0)))


def measure_to_dict(m: AtomicEvenMeasure) -> dict:
    return {
        "atoms": [{"x": x, "re": a.real, "im": a.imag} for x, a in m.atoms()],
        "origin": {"re": m.origin.real, "im": m.origin.imag},
    }


def measure_from_dict(obj: dict) -> AtomicEvenMeasure:
    atoms = [(float(a["x"]), _complex(a)) for a in obj.get("atoms", [])]
    return AtomicEvenMeasure.from_atoms(atoms, _complex(obj.get("origin", {})))


def decomposition_to_dict(dec: TdeDecomposition) -> dict:
    return {"terms": [{"d": t.d, "e": t.e, "re": t.coefficient.real, "im": t.coefficient.imag}
                      for t in dec.terms]}


def decomposition_from_dict(obj: dict, *, canonicalize: bool = True) -> TdeDecomposition:
    """Read a decomposition; non-canonical pairs are reduced unless told otherwise."""
    terms = [(float(t["d"]), float(t["e"]), _complex(t)) for t in obj.get("terms", [])]
    if canonicalize:
        return TdeDecomposition.from_terms(terms)
    return TdeDecomposition(tuple(TdeTerm(d, e, c) for d, e, c in terms))


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1)


def write_json(obj: dict, path: str | Path) -> None:
    Path(path).write_text(dumps(obj) + "\n")


def read_json(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
