"""Exact rank statistics for partitions and overpartitions."""

import json

from ._core import (
    CoefficientOverflow,
    IndexOutOfRange,
    NonUnitConstantTerm,
    QSeries,
    RankTable,
    UnsupportedLevel,
    akm_tables_by_recurrence,
    bkm_table,
    check_names,
    count_overpartitions,
    count_partitions,
    d_rank,
    dyson_rank,
    expand_rank_kernel,
    finite_pochhammer,
    first_difference_series,
    fmk,
    gf_rank_table,
    inverse,
    m2_rank,
    oracle_rank_table,
    overpartitions,
    resolve_m2_convention,
    shift,
    substitute_power,
)
from ._core import _verify_json


def verify(check="all", max_n=40):
    """Run a named check and return its reports as a list of dicts."""
    return json.loads(_verify_json(check, max_n))


__all__ = [name for name in dir() if not name.startswith("_")]
