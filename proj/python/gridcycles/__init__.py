"""Exact counts of cyclic permutations in monotone grid classes.

Thin wrapper over the C++ extension: scalar helpers re-export directly,
the structured entry points parse the extension's JSON into plain dicts.
"""

import json as _json

from ._gridcycles import (
    __version__,
    class_count_formula,
    count_cyclic_in_class,
    count_segmentations,
    enumerate_cycles,
    in_class,
    is_cyclic,
    lyndon_count,
    lyndon_density_count,
    lyndon_odd_count,
    peaks,
    segmentation_sum,
    segmentations,
    star_count,
    theta,
    unimodal_cycle_count,
    unimodal_peak_count,
    valleys,
)
from . import _gridcycles as _ext

TABLE_SIGNATURES = ("+++", "---", "+-+", "-+-", "++-", "+--", "-++", "--+")


def verify(target="all", n_max=8, max_n=11, shards=4):
    """Run one verification family (or all); returns a dict with records."""
    return _json.loads(_ext.verify_json(target, n_max, max_n, shards))


def classify(n_max=9, counter="oracle", max_n=11, shards=4):
    """Group the eight length-3 signatures by their count sequences."""
    return _json.loads(_ext.classify_json(n_max, counter, max_n, shards))


def conjecture(which, k_max=3, n_max=8, max_n=11, shards=4):
    """Probe the complement or alternating conjecture; returns record dicts."""
    return _json.loads(_ext.conjecture_json(which, k_max, n_max, max_n, shards))


def sequence(sigma, n_max, max_n=11, shards=4):
    """Counts for n = 3..n_max, via the closed form when one covers the
    class (table indices 3..8) and the exhaustive scan otherwise."""
    try:
        index = TABLE_SIGNATURES.index(sigma) + 1
    except ValueError:
        index = 0
    out = []
    for n in range(3, n_max + 1):
        if index >= 3:
            out.append(class_count_formula(index, n))
        else:
            out.append(count_cyclic_in_class(sigma, n, max_n, shards))
    return out


__all__ = [
    "__version__",
    "TABLE_SIGNATURES",
    "class_count_formula",
    "classify",
    "conjecture",
    "count_cyclic_in_class",
    "count_segmentations",
    "enumerate_cycles",
    "in_class",
    "is_cyclic",
    "lyndon_count",
    "lyndon_density_count",
    "lyndon_odd_count",
    "peaks",
    "segmentation_sum",
    "segmentations",
    "sequence",
    "star_count",
    "theta",
    "unimodal_cycle_count",
    "unimodal_peak_count",
    "valleys",
    "verify",
]
