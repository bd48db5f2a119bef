"""Slope gap distributions of square-tiled surfaces."""

import json

from ._slopegap import (
    Distribution,
    Origami,
    SlopegapError,
    analyze_json,
    congruence_gaps_10tile,
    empirical_gaps,
    fixtures,
    hall_reference,
    orbit_size,
    verify,
)

__all__ = [
    "Distribution",
    "Origami",
    "SlopegapError",
    "analyze",
    "congruence_gaps_10tile",
    "empirical_gaps",
    "fixtures",
    "hall_reference",
    "orbit_size",
    "verify",
]


def analyze(origami, orbit_cap=1_000_000):
    """Full analysis report as a dict; rationals are "p/q" strings."""
    return json.loads(analyze_json(origami, orbit_cap))
