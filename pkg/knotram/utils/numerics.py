"""Floating-point companions of the exact pipeline. Nothing here produces a
value that enters a certificate directly: the routines estimate sizes, fix
signs that an exact square root cannot see, and provide an independent
high-precision oracle for the sign of s_n."""

import mpmath
import numpy as np

from knotram.logger import logger


# Below this magnitude a float64 value of E_t(c) is rechecked with mpmath
SIGN_GUARD = 1e-6
ORACLE_PRECISION = 256


def real_conjugates(d):
    """The Galois conjugates ``2cos(2 pi j / d)`` of ``2cos(2 pi / d)``, for
    ``1 <= j <= (d - 1) / 2`` coprime to ``d``.

    Parameters
    ----------
    d : int
        Odd, at least 3.

    Returns
    -------
    numpy.ndarray, numpy.ndarray
        The indices ``j`` and the conjugates.
    """

    j = np.arange(1, (d - 1) // 2 + 1, dtype=np.int64)
    j = j[np.gcd(j, d) == 1]
    return j, 2.0 * np.cos(2.0 * np.pi * j / d)


def _elem_values(t, c):
    a = (t + 1) // 2
    return a * c**2 - (2 * t + 1)


def conjugate_sign(t, d):
    """Sign of the norm of ``E_t(2cos(2 pi / d))`` from Q(zeta_d)^+ to Q,
    i.e. ``(-1)`` to the number of real conjugates where ``E_t`` is
    negative.

    Values that land within ``SIGN_GUARD`` of zero in double precision are
    recomputed with mpmath.

    Parameters
    ----------
    t : int
    d : int

    Returns
    -------
    int
        +1 or -1.
    """

    j, c = real_conjugates(d)
    values = _elem_values(t, c)
    negative = int(np.count_nonzero(values < 0.0))
    close = np.flatnonzero(np.abs(values) < SIGN_GUARD)
    if close.size > 0:
        logger.debug(f"Rechecking {close.size} conjugate(s) for d={d}")
        a = (t + 1) // 2
        with mpmath.workprec(ORACLE_PRECISION):
            for ii in close.tolist():
                cc = 2 * mpmath.cos(2 * mpmath.pi * int(j[ii]) / d)
                exact_negative = a * cc**2 - (2 * t + 1) < 0
                negative += int(exact_negative) - int(values[ii] < 0.0)
    return -1 if negative % 2 else 1


def norm_digits(t, d):
    """Estimated number of decimal digits of ``|N_d|``, the norm of
    ``E_t(2cos(2 pi / d))``.

    Returns
    -------
    int
    """

    _, c = real_conjugates(d)
    log_size = float(np.sum(np.log10(np.abs(_elem_values(t, c)))))
    return max(int(np.floor(log_size)) + 1, 1)


def s_sign_oracle(t, n, prec=ORACLE_PRECISION, max_prec=2**16):
    """Sign of ``s_n = 2 Im(y^n)`` evaluated in floating point, where
    ``y = (sqrt(2t + 1) + i) / 2``. Since ``s_n = 2 |y|^n sin(n arg y)``,
    only ``sin(n arg y)`` is evaluated. The working precision is doubled
    until the computed value is safely away from zero.

    Parameters
    ----------
    t : int
    n : int
    prec : int, optional
        Initial working precision in bits.
    max_prec : int, optional
        Give up beyond this precision.

    Returns
    -------
    int
        +1 or -1.

    Raises
    ------
    ArithmeticError
        If the sign cannot be separated from zero at ``max_prec``.
    """

    while prec <= max_prec:
        with mpmath.workprec(prec):
            theta = mpmath.atan2(1, mpmath.sqrt(2 * t + 1))
            value = mpmath.sin(n * theta)
            bound = mpmath.mpf(n) * mpmath.mpf(2) ** (16 - prec)
            if abs(value) > bound:
                return 1 if value > 0 else -1
        prec *= 2
    raise ArithmeticError(f"sign of s_{n} unresolved at {max_prec} bits")
