"""Norms of the Alexander polynomial at squared roots of unity.

For odd ``d`` the norm from Q(zeta_d)^+ to Q of ``Delta_{K_t}(zeta_d^2)``,
up to a unit, is the norm of the real element
``E_t(c) = ((t + 1)/2)(c^2 - 2) - t`` at ``c = 2cos(2 pi / d)``. That is the
resultant of ``Psi_d`` and ``E_t``.

The companion sequence ``s_n = 2 Im(y^n)``, ``y = (sqrt(2t + 1) + i)/2``,
never materializes ``y``: ``y^2`` is a root of
``z^2 - t z + ((t + 1)/2)^2``, which yields an integer recurrence.
"""

from gmpy2 import mpz
from monty.json import MSONable

from knotram.engine.knotpoly import alexander
from knotram.engine.poly_core import (
    IntPoly,
    cyclotomic,
    isqrt,
    real_cyclotomic,
    resultant,
)
from knotram.logger import logger
from knotram.utils.arithmetic import divisors
from knotram.utils.numerics import conjugate_sign
from knotram.utils.utils import timeit


NORM_METHODS = ["resultant", "square"]


def _check_t(t):
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t={t} must be an odd integer >= 3")


def _check_odd(name, x):
    if x < 1 or x % 2 == 0:
        raise ValueError(f"{name}={x} must be an odd positive integer")


class NormRecord(MSONable):
    """Signed norm ``N_d`` of ``E_t(2cos(2 pi / d))``.

    Parameters
    ----------
    t, d : int
    value : int
    via : {"resultant", "square-root", "trivial-d1"}
    """

    def __init__(self, t, d, value, via):
        self.t = t
        self.d = d
        self.value = int(value)
        self.via = via

    def to_record(self):
        return {
            "t": self.t,
            "d": self.d,
            "value": str(self.value),
            "via": self.via,
        }

    def __repr__(self):
        return f"NormRecord(t={self.t}, d={self.d}, via={self.via!r})"


class SRecord(MSONable):
    def __init__(self, t, n, s):
        self.t = t
        self.n = n
        self.s = int(s)

    def to_record(self):
        return {"t": self.t, "n": self.n, "s": str(self.s)}


def elem_poly(t):
    """``E_t(x) = ((t + 1)/2)(x^2 - 2) - t``."""

    _check_t(t)
    a = (t + 1) // 2
    return IntPoly([-2 * a - t, 0, a])


def _squared_alexander(t):
    a = (t + 1) // 2
    return IntPoly([a, 0, -t, 0, a])


def norm_real(t, d, method="resultant"):
    """Signed norm of ``E_t(2cos(2 pi / d))`` from Q(zeta_d)^+ to Q.

    Parameters
    ----------
    t : int
        Odd, at least 3.
    d : int
        Odd, positive. ``d = 1`` gives ``Delta_{K_t}(1) = 1``.
    method : {"resultant", "square"}, optional
        ``"resultant"`` evaluates ``Res(Psi_d, E_t)`` directly.
        ``"square"`` takes the exact square root of
        ``Res(Phi_d, Delta_{K_t}(x^2))`` and fixes the sign by counting the
        real conjugates at which ``E_t`` is negative; it avoids building
        ``Psi_d`` and is the faster route for large ``d``.

    Returns
    -------
    NormRecord
    """

    _check_t(t)
    _check_odd("d", d)
    if method not in NORM_METHODS:
        raise ValueError(f"method={method} must be one of {NORM_METHODS}")

    if d == 1:
        return NormRecord(t=t, d=1, value=alexander(t)(1), via="trivial-d1")

    if method == "resultant":
        with timeit(logger.debug, f"Norm N_{d} for t={t} by resultant"):
            value = resultant(real_cyclotomic(d), elem_poly(t))
        return NormRecord(t=t, d=d, value=value, via="resultant")

    with timeit(logger.debug, f"Norm N_{d} for t={t} by square root"):
        square = resultant(cyclotomic(d), _squared_alexander(t))
        root = isqrt(abs(square))
        if root is None:
            raise ArithmeticError(
                f"Res(Phi_{d}, Delta(x^2)) for t={t} is not a perfect square"
            )
        sign = conjugate_sign(t, d)
    return NormRecord(t=t, d=d, value=sign * root, via="square-root")


def norm_square_check(t, d):
    """True iff ``Res(Phi_d, Delta_{K_t}(x^2)) = norm_real(t, d)^2``."""

    _check_odd("d", d)
    square = resultant(cyclotomic(d), _squared_alexander(t))
    value = norm_real(t, d).value
    if square != value * value:
        logger.error(
            f"Res(Phi_{d}, Delta(x^2)) differs from N_{d}^2 for t={t}"
        )
        return False
    return True


def _mat_mul(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _mat_pow(A, k):
    result = ((mpz(1), mpz(0)), (mpz(0), mpz(1)))
    while k:
        if k & 1:
            result = _mat_mul(result, A)
        A = _mat_mul(A, A)
        k >>= 1
    return result


def _s_value(t, n):
    # a_0 = 1, a_1 = (3t + 1)/2, a_{m+1} = t a_m - a^2 a_{m-1}
    m = (n - 1) // 2
    if m == 0:
        return mpz(1)
    a = mpz((t + 1) // 2)
    step = ((mpz(t), -a * a), (mpz(1), mpz(0)))
    M = _mat_pow(step, m - 1)
    a1, a0 = mpz((3 * t + 1) // 2), mpz(1)
    return M[0][0] * a1 + M[0][1] * a0


def s_seq(t, n):
    """The integer ``s_n = i(ybar^n - y^n) = 2 Im(y^n)`` for odd ``n``.

    With ``s_{2m+1} = a_m`` the sequence satisfies
    ``a_{m+1} = t a_m - ((t + 1)/2)^2 a_{m-1}``, ``a_0 = 1`` and
    ``a_1 = (3t + 1)/2``. The recurrence is advanced by powering its
    2 x 2 companion matrix.

    Parameters
    ----------
    t : int
        Odd, at least 3.
    n : int
        Odd, positive.

    Returns
    -------
    SRecord
    """

    _check_t(t)
    _check_odd("n", n)
    return SRecord(t=t, n=n, s=_s_value(t, n))


def s_sign(t, n):
    """Sign of ``s_n`` (+1 or -1). ``s_n`` never vanishes for odd ``n``."""

    s = s_seq(t, n).s
    if s == 0:
        raise ArithmeticError(f"s_{n} vanishes for t={t}")
    return 1 if s > 0 else -1


def omega(t, n):
    """``omega(n) = prod_{d | n} N_d``, multiplied in ascending order of
    ``d``. The norms are computed independently of ``s_n``, and
    ``omega(n) = (-1)^((n - 1)/2) s_n`` holds for every odd ``n``.

    Returns
    -------
    int
    """

    _check_t(t)
    _check_odd("n", n)
    total = mpz(1)
    for d in divisors(n):
        total *= norm_real(t, d).value
    return int(total)


def omega_record(t, n):
    """Summary of ``omega(n)`` against ``s_n``, as printed by the command
    line."""

    w = omega(t, n)
    s = s_seq(t, n).s
    sign = -1 if (n - 1) // 2 % 2 else 1
    return {
        "t": t,
        "n": n,
        "omega": str(w),
        "s": str(s),
        "signed_identity": w == sign * s,
    }
