"""Pure-numpy fallback for the hot transform kernel.

Used when the compiled extension is unavailable or when the
ISINGSYM_PURE_PYTHON environment variable is set.
"""

import numpy as np

BACKEND = "python"


def fwht(a: np.ndarray) -> None:
    """Unnormalized Walsh-Hadamard butterfly, in place.

    `a` must be a contiguous complex128 array of length 2^n.
    """
    n = a.size
    h = 1
    while h < n:
        x = a.reshape(-1, 2, h)
        lo = x[:, 0, :] + x[:, 1, :]
        hi = x[:, 0, :] - x[:, 1, :]
        x[:, 0, :] = lo
        x[:, 1, :] = hi
        h *= 2
