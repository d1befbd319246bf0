"""
Counter-based random streams.

Replicate r of an experiment draws from a Philox generator whose key is derived
from (master seed, experiment id) and whose counter starts at r in the high word,
so serial and threaded runs see identical numbers.
"""
import hashlib
from typing import Tuple

import numpy as np

StreamKey = Tuple[int, int]


def experiment_key(seed: int, experiment_id: str) -> StreamKey:
    """
    Derive a 128-bit Philox key from a master seed and an experiment id.

    Args:
        seed: Master seed
        experiment_id: Stable experiment name

    Returns:
        Two 64-bit words
    """
    digest = hashlib.blake2b(experiment_id.encode("utf-8"), digest_size=8).digest()
    tag = int.from_bytes(digest, "little")
    words = np.random.SeedSequence(seed, spawn_key=(tag,)).generate_state(2, dtype=np.uint64)
    return int(words[0]), int(words[1])


def derive_key(rng: np.random.Generator) -> StreamKey:
    """Draw a fresh key from an existing generator."""
    words = rng.integers(0, np.iinfo(np.uint64).max, size=2, dtype=np.uint64, endpoint=True)
    return int(words[0]), int(words[1])


def replicate_stream(key: StreamKey, replicate: int) -> np.random.Generator:
    """
    Generator for one replicate.

    Args:
        key: Experiment key
        replicate: Replicate index (>= 0)

    Returns:
        numpy Generator over Philox(key, counter=[0, 0, 0, replicate])
    """
    if replicate < 0:
        raise ValueError("replicate index must be non-negative")
    key_int = key[0] | (key[1] << 64)
    counter = np.array([0, 0, 0, replicate], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key_int, counter=counter))


def seeded(seed: int) -> np.random.Generator:
    """Plain Philox generator for a single seed."""
    return np.random.Generator(np.random.Philox(seed))
