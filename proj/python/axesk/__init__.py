"""Exact K-theory of coordinate axes."""

from ._axesk import (
    AxeskError,
    a_count,
    connes,
    cyc_count,
    enumerate_necklaces,
    grw_c,
    hc,
    homology,
    k_char_zero,
    k_groups,
    run_cli,
    tc_local,
)

__all__ = [
    "AxeskError",
    "a_count",
    "connes",
    "cyc_count",
    "enumerate_necklaces",
    "grw_c",
    "hc",
    "homology",
    "k_char_zero",
    "k_groups",
    "run_cli",
    "tc_local",
]
