"""Conway's audioactive decay: splitting, elements, lambda and the Cosmo search."""

import json

from ._core import (
    AudioactiveError,
    LongevityCapExceeded,
    ParseError,
    abundances,
    char_poly,
    conway_constant,
    evolve,
    jhc,
    longevity,
    screen,
    split_atoms,
    splits_after,
    table_json,
)
from . import _core


def periodic_table(seed="1"):
    return json.loads(table_json(seed))


def cosmo(depth=8, cap_days=50, generation_cap=200, threads=1, seed="1"):
    return json.loads(_core.cosmo(depth, cap_days, generation_cap, threads, seed))


__all__ = [
    "AudioactiveError",
    "LongevityCapExceeded",
    "ParseError",
    "abundances",
    "char_poly",
    "conway_constant",
    "cosmo",
    "evolve",
    "jhc",
    "longevity",
    "periodic_table",
    "screen",
    "split_atoms",
    "splits_after",
]
