"""Exact rational invariants of tuples of subspaces under GL_n.

Configurations are dicts ``{"n": int, "d": int, "subspaces": [basis, ...]}``
where each basis is a list of n rows of d ``Fraction`` entries.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from . import _grinv
from ._grinv import GrinvError, classify_case, enumerate_words, expected_quotient_dim, letter_count

__all__ = [
    "GrinvError",
    "classify_case",
    "embed",
    "enumerate_words",
    "error_kind",
    "expected_quotient_dim",
    "general_position",
    "invariants",
    "jacobian_rank",
    "letter_count",
    "sample_config",
    "same_orbit_test",
]


def error_kind(err: GrinvError) -> str:
    """Kind name carried in front of the message, e.g. ``"Degenerate"``."""
    return str(err).split(":", 1)[0]


def _to_text(config: dict) -> str:
    return json.dumps(
        {
            "n": int(config["n"]),
            "d": int(config["d"]),
            "subspaces": [[[str(Fraction(x)) for x in row] for row in basis] for basis in config["subspaces"]],
        }
    )


def _from_text(text: str) -> dict:
    raw = json.loads(text)
    raw["subspaces"] = [[[Fraction(x) for x in row] for row in basis] for basis in raw["subspaces"]]
    return raw


def sample_config(n: int, d: int, s: int, seed: int = 1, bound: int = 10) -> dict:
    return _from_text(_grinv.sample_config_json(n, d, s, seed, bound))


def general_position(config: dict) -> bool:
    return _grinv.general_position_json(_to_text(config))


def invariants(config: dict, max_len: Optional[int] = None) -> dict:
    """Invariant file contents with ``Fraction`` values and letter matrices."""
    out = json.loads(_grinv.invariants_json(_to_text(config), max_len))
    for entry in out["invariants"]:
        entry["value"] = Fraction(entry["value"])
    out["letter_matrices"] = [[[Fraction(x) for x in row] for row in m] for m in out["letter_matrices"]]
    return out


def _invariant_text(inv: dict) -> str:
    plain = dict(inv)
    plain["invariants"] = [{"word": e["word"], "value": str(e["value"])} for e in inv["invariants"]]
    plain["letter_matrices"] = [[[str(Fraction(x)) for x in row] for row in m] for m in inv["letter_matrices"]]
    return json.dumps(plain)


def same_orbit_test(a: dict, b: dict, max_len: Optional[int] = None) -> str:
    """``"Equivalent"``, ``"Distinct"`` or ``"Inconclusive"``."""
    return _grinv.same_orbit_test_json(_to_text(a), _to_text(b), max_len)


def jacobian_rank(config: dict, max_len: Optional[int] = None) -> tuple[int, int]:
    """(exact rank, expected dimension)."""
    return _grinv.jacobian_rank_json(_to_text(config), max_len)


def embed(inv: dict) -> dict:
    """Configuration whose divisible-case letters are those of ``inv``."""
    return _from_text(_grinv.embed_json(_invariant_text(inv)))
