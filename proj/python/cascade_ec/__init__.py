"""Cascaded-parity locally repairable codes: layouts, codec, repair planning,
repair-cost metrics, and reliability modeling (thin wrapper over the C++ core).
"""

from _cascade_ec import (
    PRESETS,
    InvalidSpec,
    Layout,
    Undecodable,
    decodable,
    decode,
    encode,
    metrics,
    mttdl,
    plan_repair,
    reconstruct,
    survival_profile,
    verify_cascade,
)

__all__ = [
    "PRESETS",
    "InvalidSpec",
    "Layout",
    "Undecodable",
    "decodable",
    "decode",
    "encode",
    "metrics",
    "mttdl",
    "plan_repair",
    "reconstruct",
    "survival_profile",
    "verify_cascade",
]
