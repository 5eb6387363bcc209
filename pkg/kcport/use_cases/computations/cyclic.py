"""Round-robin decomposition of return sequences into cyclic subsequences."""

import numpy as np

from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import CyclicDecomposition, ReturnsSequence, Subsequence


def decompose(returns: ReturnsSequence, k: int) -> CyclicDecomposition:
    """Split returns by period index mod k.

    Subsequence i holds the periods i, i + k, i + 2k, ... (0-based). When
    k > n the trailing subsequences are empty.

    Args:
        returns: Sequence to split.
        k: Cycle length, at least 1.

    Returns:
        Decomposition with exactly k subsequences.

    Raises:
        InputValidationError: If k < 1.
    """
    if k < 1:
        msg = f"cycle length must be >= 1, got {k}"
        raise InputValidationError(msg)
    subsequences = []
    for position in range(k):
        indices = np.arange(position, returns.n, k)
        subsequences.append(
            Subsequence(position=position, indices=indices, rows=returns.values[indices])
        )
    return CyclicDecomposition(k=k, n=returns.n, m=returns.m, subsequences=tuple(subsequences))
