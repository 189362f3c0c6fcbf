"""Deterministic random-stream derivation.

Every source of randomness in a run is a fresh generator derived from the
global seed plus a purpose label (and optional ids such as client or round).
Streams are therefore independent of consumption order, which is what makes
paired runs of different strategies bit-comparable.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(*parts) -> int:
    """Hash (seed, purpose, ids...) into a stable 64-bit stream seed."""
    key = ":".join(str(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "little")


def stream(*parts) -> np.random.Generator:
    """A fresh PCG64 generator for the given (seed, purpose, ids...) tuple."""
    return np.random.default_rng(derive_seed(*parts))
