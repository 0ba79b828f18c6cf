"""Deterministic seed derivation for multi-task certification runs."""

from __future__ import annotations

import numpy as np


def derive_seeds(seed: int, count: int) -> list[int]:
    """Expand one global seed into ``count`` independent child seeds.

    Uses ``numpy.random.SeedSequence.spawn``, so serial and parallel drivers
    that agree on (seed, task index) reproduce exactly the same streams.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    return [int(c.generate_state(1)[0]) for c in np.random.SeedSequence(seed).spawn(count)]
