"""Seedable random streams.

Every stochastic choice in the package draws from a named PCG64 stream
derived from a master seed, so maze generation, start-cell selection and
epsilon-greedy draws stay independently reproducible.
"""

from __future__ import annotations

import hashlib

import numpy as np

__all__ = ["stream", "derive_seed"]

_MASK64 = 0xFFFFFFFFFFFFFFFF


def _purpose_words(purpose: str) -> list[int]:
    # sha256 keeps the purpose-derived entropy stable across processes and runs
    digest = hashlib.sha256(purpose.encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4)]


def stream(master_seed: int, purpose: str) -> np.random.Generator:
    """PCG64 generator for one named purpose under a master seed."""
    seq = np.random.SeedSequence([master_seed & _MASK64, *_purpose_words(purpose)])
    return np.random.Generator(np.random.PCG64(seq))


def derive_seed(master_seed: int, purpose: str) -> int:
    """Stable 63-bit sub-seed for one named purpose."""
    seq = np.random.SeedSequence([master_seed & _MASK64, *_purpose_words(purpose)])
    return int(seq.generate_state(1, np.uint64)[0] >> 1)
