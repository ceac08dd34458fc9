"""Exact big-integer and integer-polynomial arithmetic.

Everything in this module is a pure function of its inputs (factorization
additionally of the seed in its :class:`knotram.config.FactorBudget`), and
every value it returns is immutable.
"""

from functools import lru_cache
import random
import time

import gmpy2
from gmpy2 import mpz
import numpy as np
from monty.json import MSONable

from knotram.config import FactorBudget
from knotram.logger import logger
from knotram.utils.arithmetic import (
    divisors,
    factor_small,
    mobius,
    primes_up_to,
    totient,
)


# Miller-Rabin with these bases is deterministic below the limit
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
MR_RANDOM_ROUNDS = 64

RHO_BATCH = 128
MULT_ORDER_FACTOR_LIMIT = 10**6


class IntPoly(MSONable):
    """Dense univariate polynomial with arbitrary-precision integer
    coefficients. ``coeffs[i]`` is the coefficient of ``x^i``; trailing zeros
    are stripped at construction, so the leading coefficient of a nonzero
    polynomial is never zero.

    Parameters
    ----------
    coeffs : iterable of int
        Coefficients in ascending order of degree.
    var : str, optional
        Name of the variable, used only for printing.
    """

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def var(self):
        return self._var

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""

        return len(self._coeffs) - 1

    @property
    def is_zero(self):
        return len(self._coeffs) == 0

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""

        return self._coeffs[-1] if self._coeffs else 0

    def __init__(self, coeffs, var="x"):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)
        self._var = var

    @classmethod
    def x(cls, var="x"):
        return cls([0, 1], var=var)

    @classmethod
    def monomial(cls, k, coeff=1, var="x"):
        return cls([0] * k + [coeff], var=var)

    def __getitem__(self, i):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            return other
        return IntPoly([other], var=self._var)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(
            [self[i] + other[i] for i in range(n)], var=self._var
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self._coeffs], var=self._var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, IntPoly):
            return IntPoly([c * other for c in self._coeffs], var=self._var)
        if self.is_zero or other.is_zero:
            return IntPoly([], var=self._var)
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPoly(out, var=self._var)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = IntPoly([1], var=self._var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == IntPoly([other])._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __call__(self, x):
        """Horner evaluation. Works for ints, ``mpz``, floats and ``mpmath``
        numbers alike."""

        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def derivative(self):
        return IntPoly(
            [i * c for i, c in enumerate(self._coeffs)][1:], var=self._var
        )

    def reduce(self, m):
        """Coefficients reduced into ``[0, m)``."""

        return IntPoly([c % m for c in self._coeffs], var=self._var)

    def __repr__(self):
        return f"IntPoly({list(self._coeffs)}, var={self._var!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = f"{mag}"
            else:
                power = self._var if i == 1 else f"{self._var}^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class Factorization(MSONable):
    """Multiset of prime factors of a nonzero integer, plus an optional
    cofactor that could not be split within budget.

    ``sign * prod(p ** e) * cofactor == n`` always holds. Every listed prime
    passed :func:`is_probable_prime`; the cofactor, when present, is
    composite or unresolved, and the factorization is then incomplete.

    Parameters
    ----------
    n : int
        The factored integer.
    factors : list of (int, int)
        Pairs ``(prime, multiplicity)``, ascending by prime.
    cofactor : int, optional
        Unfactored part (> 1), or None.
    sign : int
        +1 or -1.
    """

    @property
    def n(self):
        return self._n

    @property
    def factors(self):
        return list(self._factors)

    @property
    def cofactor(self):
        return self._cofactor

    @property
    def sign(self):
        return self._sign

    @property
    def complete(self):
        return self._cofactor is None

    @property
    def primes(self):
        return [p for p, _ in self._factors]

    def __init__(self, n, factors, cofactor=None, sign=1):
        self._n = int(n)
        self._factors = tuple(
            sorted((int(p), int(e)) for p, e in factors)
        )
        self._cofactor = None if cofactor in (None, 1) else int(cofactor)
        self._sign = int(sign)

    def multiplicity(self, p):
        for q, e in self._factors:
            if q == p:
                return e
        return 0

    def value(self):
        """Reassembles the factored integer."""

        total = mpz(self._sign)
        for p, e in self._factors:
            total *= mpz(p) ** e
        if self._cofactor is not None:
            total *= self._cofactor
        return int(total)

    def to_record(self):
        return {
            "n": str(self._n),
            "sign": self._sign,
            "factors": [[str(p), e] for p, e in self._factors],
            "cofactor": None if self._cofactor is None else str(
                self._cofactor
            ),
            "complete": self.complete,
        }

    def __str__(self):
        parts = [f"{p}^{e}" if e > 1 else f"{p}" for p, e in self._factors]
        if self._cofactor is not None:
            parts.append(f"[{self._cofactor}]")
        head = "-" if self._sign < 0 else ""
        return head + (" * ".join(parts) if parts else "1")


class SplittingType(MSONable):
    """Decomposition of an odd prime ``l`` not dividing ``d`` in Q(zeta_d)
    and its maximal real subfield.

    Parameters
    ----------
    l, d : int
    inertia_degree : int
        Residue degree in Q(zeta_d), the multiplicative order of l mod d.
    num_primes : int
        Number of primes of Q(zeta_d) above l.
    real_inertia_degree : int
        Residue degree in Q(zeta_d)^+.
    inert_in_cyclotomic : bool
        Whether the primes of Q(zeta_d)^+ above l stay prime in Q(zeta_d).
    """

    def __init__(
        self,
        l,
        d,
        inertia_degree,
        num_primes,
        real_inertia_degree,
        inert_in_cyclotomic,
    ):
        self.l = l
        self.d = d
        self.inertia_degree = inertia_degree
        self.num_primes = num_primes
        self.real_inertia_degree = real_inertia_degree
        self.inert_in_cyclotomic = inert_in_cyclotomic


def _bareiss_det(matrix):
    """Fraction-free Gaussian elimination. All intermediate divisions are
    exact."""

    size = len(matrix)
    if size == 0:
        return mpz(1)
    M = [[mpz(x) for x in row] for row in matrix]
    sign = 1
    prev = mpz(1)
    for ii in range(size - 1):
        if M[ii][ii] == 0:
            for rr in range(ii + 1, size):
                if M[rr][ii] != 0:
                    M[ii], M[rr] = M[rr], M[ii]
                    sign = -sign
                    break
            else:
                return mpz(0)
        pivot = M[ii][ii]
        row_i = M[ii]
        for rr in range(ii + 1, size):
            row_r = M[rr]
            factor = row_r[ii]
            for cc in range(ii + 1, size):
                row_r[cc] = (row_r[cc] * pivot - factor * row_i[cc]) // prev
        prev = pivot
    return sign * M[size - 1][size - 1]


def _sylvester_det(a, b):
    """``det Syl(A, B) = lc(A)^deg(B) * prod_{A(alpha)=0} B(alpha)`` for
    coefficient lists ``a``, ``b`` (ascending, no trailing zeros)."""

    p, q = len(a) - 1, len(b) - 1
    size = p + q
    rows = []
    a_desc, b_desc = a[::-1], b[::-1]
    for ii in range(q):
        rows.append([0] * ii + a_desc + [0] * (size - ii - p - 1))
    for ii in range(p):
        rows.append([0] * ii + b_desc + [0] * (size - ii - q - 1))
    return _bareiss_det(rows)


def _scaled_remainder(f, g):
    """Integer Horner reduction of ``f`` modulo ``g``.

    Returns ``(rem, e)`` with ``rem = lc(g)^e * (f mod g)``, the remainder
    taken over Q, as a coefficient list of length ``deg g``. Costs
    ``O(deg f * deg g)`` operations.
    """

    k = g.degree
    L = mpz(g.lc)
    gc = [mpz(c) for c in g.coeffs]
    acc = [mpz(0)] * k
    S = mpz(1)
    e = 0
    for fi in reversed(f.coeffs):
        T = [S * fi] + acc
        top = T[k]
        if top == 0:
            acc = T[:k]
        else:
            acc = [L * T[jj] - top * gc[jj] for jj in range(k)]
            S *= L
            e += 1
    return acc, e


def resultant(f, g):
    """Resultant with the convention

    ``Res(f, g) = lc(g)^deg(f) * prod_{g(beta)=0} f(beta)
    = (-1)^(deg f * deg g) * Res(g, f)``.

    The larger operand is first reduced modulo the smaller one by an integer
    Horner scheme; the remaining Sylvester determinant, of size below
    ``2 * min(deg f, deg g)``, is evaluated by Bareiss elimination.

    Parameters
    ----------
    f, g : IntPoly

    Returns
    -------
    int

    Raises
    ------
    ValueError
        If either polynomial is zero.
    """

    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial has no resultant")
    n, k = f.degree, g.degree
    if k == 0:
        return int(mpz(g.lc) ** n)
    if n == 0:
        return int(mpz(f.lc) ** k)
    if n < k:
        sign = -1 if (n * k) % 2 else 1
        return sign * resultant(g, f)

    rem, e = _scaled_remainder(f, g)
    while rem and rem[-1] == 0:
        rem.pop()
    if not rem:
        return 0
    L = mpz(g.lc)
    det = _sylvester_det([mpz(c) for c in g.coeffs], rem)
    numerator = L ** (n - (len(rem) - 1)) * det
    q, r = divmod(numerator, L ** (e * k))
    if r != 0:
        raise ArithmeticError("inexact division in resultant reduction")
    return int(q)


def _resultant_fp(f, g, p):
    """Resultant over F_p with formal degrees ``len(f) - 1`` and
    ``len(g) - 1``: vanishing leading coefficients are expanded out of the
    Sylvester determinant rather than dropped."""

    f, g = list(f), list(g)
    result = 1
    while True:
        n, k = len(f) - 1, len(g) - 1
        if k == 0:
            return result * pow(g[0], n, p) % p
        if n == 0:
            return result * pow(f[0], k, p) % p
        if g[-1] == 0:
            result = result * (-1 if n % 2 else 1) * f[-1] % p
            g.pop()
            continue
        if f[-1] == 0:
            result = result * g[-1] % p
            f.pop()
            continue
        if n < k:
            if (n * k) % 2:
                result = -result % p
            f, g = g, f
            continue
        lc_inv = pow(g[-1], -1, p)
        r = f[:]
        for ii in range(n, k - 1, -1):
            coef = r[ii] * lc_inv % p
            if coef:
                base = ii - k
                for jj in range(k + 1):
                    r[base + jj] = (r[base + jj] - coef * g[jj]) % p
        result = result * pow(g[-1], n - k + 1, p) % p
        f = r[:k]


def resultant_mod(f, g, m):
    """``resultant(f, g) mod m`` without forming the integer resultant when
    ``m`` is squarefree.

    Every prime ``p`` dividing ``m`` exactly once is handled by a Euclidean
    scheme over F_p that tracks formal degrees; prime-power components fall
    back to the exact resultant. The pieces are joined by the Chinese
    remainder theorem.

    Parameters
    ----------
    f, g : IntPoly
        ``f`` may carry coefficients already reduced modulo ``m``, as long as
        its degree is that of the integer polynomial it represents.
    m : int
        Modulus, at least 2, small enough for trial division.

    Returns
    -------
    int
        In ``[0, m)``.

    Raises
    ------
    ValueError
        On a zero polynomial, ``m < 2``, or when ``lc(f) = 0 mod m``
        ("degree collapse").
    """

    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial has no resultant")
    if f.lc % m == 0:
        raise ValueError("degree collapse")

    exact = None
    x, M = mpz(0), mpz(1)
    for p, e in factor_small(m):
        pe = p**e
        if e == 1:
            r = _resultant_fp(
                [c % p for c in f.coeffs], [c % p for c in g.coeffs], p
            )
        else:
            if exact is None:
                exact = resultant(f, g)
            r = exact % pe
        x += M * ((r - x) * gmpy2.invert(M, pe) % pe)
        M *= pe
    return int(x % m)


def _multiply_binomial(c, e, modulus):
    """``c * (x^e - 1)``."""

    out = np.zeros(len(c) + e, dtype=c.dtype)
    out[e:] += c
    out[: len(c)] -= c
    return out if modulus is None else out % modulus


def _divide_binomial(a, e, modulus):
    """Exact quotient of ``a`` by ``x^e - 1``.

    From ``a_i = q_{i-e} - q_i`` the quotient is minus the running sum of
    ``a`` over residue classes mod ``e``, which vectorizes as a cumulative
    sum over blocks of length ``e``.
    """

    L = len(a) - e
    nb = -(-L // e)
    padded = np.zeros(nb * e, dtype=a.dtype)
    padded[:L] = a[:L]
    q = -np.cumsum(padded.reshape(nb, e), axis=0).reshape(-1)[:L]
    if modulus is not None:
        q %= modulus

    expected = np.zeros(e, dtype=a.dtype)
    lo = max(L - e, 0)
    expected[e - (L - lo) :] = q[lo:L]
    tail = a[L:]
    if modulus is not None:
        expected, tail = expected % modulus, tail % modulus
    if not all(int(u) == int(v) for u, v in zip(expected, tail)):
        raise ArithmeticError(f"x^{e} - 1 does not divide the product")
    return q


def _coefficient_dtype(modulus):
    if modulus is not None and modulus < 2**31:
        return np.int64
    return object


@lru_cache(maxsize=256)
def _cyclotomic_array(d, modulus=None):
    dtype = _coefficient_dtype(modulus)
    numerator = [e for e in divisors(d) if mobius(d // e) == 1]
    denominator = [e for e in divisors(d) if mobius(d // e) == -1]
    c = np.zeros(1, dtype=dtype)
    c[0] = 1
    for e in numerator:
        c = _multiply_binomial(c, e, modulus)
    for e in denominator:
        c = _divide_binomial(c, e, modulus)
    c.setflags(write=False)
    return c


def cyclotomic(d, modulus=None):
    """The ``d``-th cyclotomic polynomial.

    Computed as the exact quotient of ``x^d - 1`` by the lower cyclotomic
    factors, organized through the Möbius product
    ``prod_{e | d} (x^e - 1)^mu(d/e)``: every multiplication and division is
    by a binomial, so the cost is linear in ``d`` per divisor.

    Parameters
    ----------
    d : int
        At least 1.
    modulus : int, optional
        If given, coefficients are computed and returned reduced into
        ``[0, modulus)``.

    Returns
    -------
    IntPoly
        Monic of degree ``phi(d)``.
    """

    if d < 1:
        raise ValueError(f"cyclotomic requires d >= 1, got {d}")
    return IntPoly(_cyclotomic_array(d, modulus).tolist())


@lru_cache(maxsize=256)
def _real_cyclotomic_array(d, modulus=None):
    c = _cyclotomic_array(d, modulus)
    dtype = c.dtype
    k = (len(c) - 1) // 2

    # Clenshaw for sum_j c[k + j] V_j(y) with V_{j+1} = y V_j - V_{j-1}
    b1 = np.zeros(k + 1, dtype=dtype)
    b2 = np.zeros(k + 1, dtype=dtype)
    for j in range(k, 0, -1):
        top = k - j
        bj = np.zeros(k + 1, dtype=dtype)
        bj[1 : top + 1] = b1[:top]
        bj[: top + 1] -= b2[: top + 1]
        bj[0] += c[k + j]
        if modulus is not None:
            bj %= modulus
        b2, b1 = b1, bj

    psi = np.zeros(k + 1, dtype=dtype)
    psi[1:] = b1[:k]
    psi -= 2 * b2
    psi[0] += c[k]
    if modulus is not None:
        psi %= modulus
    psi.setflags(write=False)
    return psi


def real_cyclotomic(d, modulus=None):
    """Minimal polynomial ``Psi_d`` of ``2cos(2 pi / d)``, characterized by
    ``Phi_d(x) = x^(phi(d)/2) * Psi_d(x + 1/x)``.

    The palindromic ``Phi_d`` is ``c_k + sum_j c_{k+j} V_j(x + 1/x)`` with
    ``V_j = x^j + x^-j``; that sum is converted to the monomial basis by a
    Clenshaw recurrence.

    Parameters
    ----------
    d : int
        At least 3.
    modulus : int, optional
        If given, coefficients are reduced into ``[0, modulus)``. The result
        stays monic and is suitable as the first operand of
        :func:`resultant_mod`.

    Returns
    -------
    IntPoly
        Monic of degree ``phi(d) / 2``.
    """

    if d < 3:
        raise ValueError(f"real subfield is degenerate for d={d} < 3")
    return IntPoly(_real_cyclotomic_array(d, modulus).tolist())


def isqrt(n):
    """Exact square root.

    Returns
    -------
    int or None
        ``r`` with ``r * r == n``, or None when ``n`` is not a perfect
        square.
    """

    if n < 0:
        raise ValueError(f"isqrt requires n >= 0, got {n}")
    r = gmpy2.isqrt(mpz(n))
    if r * r != n:
        return None
    return int(r)


def is_probable_prime(n, seed=0):
    """Miller-Rabin test. Deterministic (bases 2..41) below
    ``MR_DETERMINISTIC_LIMIT``; above it, ``MR_RANDOM_ROUNDS`` further
    rounds with bases drawn from ``random.Random(seed)``."""

    n = int(n)
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p

    nn = mpz(n)
    d, s = nn - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def _is_witness(a):
        x = gmpy2.powmod(a, d, nn)
        if x == 1 or x == nn - 1:
            return False
        for _ in range(s - 1):
            x = gmpy2.powmod(x, 2, nn)
            if x == nn - 1:
                return False
        return True

    if any(_is_witness(a) for a in MR_BASES):
        return False
    if n < MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(seed)
    for _ in range(MR_RANDOM_ROUNDS):
        if _is_witness(mpz(rng.randrange(2, n - 1))):
            return False
    return True


def _brent_rho(n, rng, iter_cap, deadline):
    """Brent's variant of Pollard rho with batched gcds. Returns a proper
    factor of the odd composite ``n``, or None once the iteration cap or the
    deadline is reached."""

    n = mpz(n)
    iterations = 0
    while iterations < iter_cap:
        y = mpz(rng.randrange(1, int(n)))
        c = mpz(rng.randrange(1, int(n)))
        g = r = q = mpz(1)
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(RHO_BATCH, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gmpy2.gcd(q, n)
                k += RHO_BATCH
                if time.monotonic() > deadline:
                    return None
            iterations += 2 * r
            r *= 2
            if g == 1 and iterations >= iter_cap:
                return None
        if g == n:
            g = mpz(1)
            while g == 1:
                ys = (ys * ys + c) % n
                g = gmpy2.gcd(abs(x - ys), n)
        if g != n:
            return int(g)
    return None


def factorize(n, budget=None):
    """Factors a nonzero integer within a :class:`FactorBudget`.

    Trial division by all primes up to ``budget.trial_bound`` comes first,
    then Miller-Rabin on what remains, then Brent's rho on composites. A
    composite that survives the rho iteration cap or the wall clock is
    carried as the cofactor and marks the result incomplete.

    Parameters
    ----------
    n : int
    budget : FactorBudget, optional

    Returns
    -------
    Factorization
        Deterministic for a fixed seed (unless the wall clock runs out).
    """

    if n == 0:
        raise ValueError("cannot factor 0")
    if budget is None:
        budget = FactorBudget()

    sign = -1 if n < 0 else 1
    m = abs(int(n))
    found = {}
    deadline = time.monotonic() + budget.wall_ms / 1000.0

    for p in primes_up_to(budget.trial_bound).tolist():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e

    rng = random.Random(budget.seed)
    cofactor = 1
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if is_probable_prime(x, seed=budget.seed):
            found[x] = found.get(x, 0) + 1
            continue
        if gmpy2.is_square(x):
            r = int(gmpy2.isqrt(x))
            stack.extend([r, r])
            continue
        f = _brent_rho(x, rng, budget.rho_iter_cap, deadline)
        if f is None:
            logger.warning(
                f"Unresolved composite of {len(str(x))} digits carried as "
                "cofactor"
            )
            cofactor *= x
        else:
            stack.extend([f, x // f])

    return Factorization(
        n, sorted(found.items()), cofactor=cofactor, sign=sign
    )


def mult_order(l, d):
    """Least ``k >= 1`` with ``l^k = 1 (mod d)``.

    For ``d <= 10^6`` the order is found by stripping prime factors from
    ``phi(d)``; above that, by direct iteration (at most ``d`` steps).

    Raises
    ------
    ValueError
        If ``gcd(l, d) > 1``.
    """

    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if gmpy2.gcd(l, d) != 1:
        raise ValueError(f"gcd({l}, {d}) > 1: no multiplicative order")
    if d == 1:
        return 1
    l = l % d
    if d <= MULT_ORDER_FACTOR_LIMIT:
        order = totient(d)
        for p, _ in factor_small(order):
            while order % p == 0 and pow(l, order // p, d) == 1:
                order //= p
        return order
    x, k = l, 1
    while x != 1:
        x = x * l % d
        k += 1
        if k > d:
            raise ArithmeticError(f"order of {l} mod {d} not found")
    return k


def splitting(l, d):
    """Splitting type of the odd prime ``l`` (not dividing ``d >= 3``) in
    Q(zeta_d) and Q(zeta_d)^+.

    The Galois group of Q(zeta_d)^+ is ``(Z/d)^* / {+1, -1}``, so the real
    residue degree halves exactly when -1 lies in the cyclic group generated
    by ``l``, which happens iff its order ``f`` is even and
    ``l^(f/2) = -1 (mod d)``. In that case the real primes are inert in
    Q(zeta_d).

    Returns
    -------
    SplittingType
    """

    f = mult_order(l, d)
    minus_one = f % 2 == 0 and pow(l, f // 2, d) == d - 1
    return SplittingType(
        l=l,
        d=d,
        inertia_degree=f,
        num_primes=totient(d) // f,
        real_inertia_degree=f // 2 if minus_one else f,
        inert_in_cyclotomic=minus_one,
    )
