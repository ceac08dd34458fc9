"""Character-variety polynomials of the twist knots K_t.

The canonical component of the character variety of K_t is cut out by
``h_t(R, Y) = Phi_t(R) Phi_{-t-1}(R) (Y - R) - 1`` in the coordinates
``R = chi(a b^-1)``, ``Y = chi(a^2)``. Writing ``Z = chi(a)`` with
``Y = Z^2 - 2`` gives ``f_t(R, Z)``, and clearing denominators of
``f_t(R, Z + 1/Z)`` gives ``g_t(R, Z)``, whose Newton polygon certifies
absolute irreducibility.
"""

from functools import lru_cache
import math

from monty.json import MSONable
from scipy.special import comb

from knotram.engine.poly_core import IntPoly, resultant
from knotram.logger import logger


def _check_t(t):
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t={t} must be an odd integer >= 3")


class BiPoly(MSONable):
    """Sparse bivariate integer polynomial in ``R`` and a second variable
    (``Y`` or ``Z``). Zero coefficients are never stored.

    Parameters
    ----------
    terms : dict or iterable
        Either a mapping ``(i, j) -> c`` or triples ``(i, j, c)``, where
        ``i`` is the power of ``R`` and ``j`` the power of the second
        variable.
    var2 : {"Y", "Z"}
    """

    @property
    def terms(self):
        """Sorted ``(i, j, c)`` triples."""

        return [(i, j, c) for (i, j), c in sorted(self._terms.items())]

    @property
    def var2(self):
        return self._var2

    @property
    def bidegree(self):
        if not self._terms:
            return (-1, -1)
        return (
            max(i for i, _ in self._terms),
            max(j for _, j in self._terms),
        )

    def __init__(self, terms, var2="Z"):
        if isinstance(terms, dict):
            items = ((i, j, c) for (i, j), c in terms.items())
        else:
            items = terms
        self._terms = {}
        for i, j, c in items:
            key = (int(i), int(j))
            value = self._terms.get(key, 0) + int(c)
            if value == 0:
                self._terms.pop(key, None)
            else:
                self._terms[key] = value
        self._var2 = var2

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def exponents(self):
        return sorted(self._terms)

    def __add__(self, other):
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return BiPoly(terms, var2=self._var2)

    def __neg__(self):
        return BiPoly(
            {key: -c for key, c in self._terms.items()}, var2=self._var2
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly(
                {key: c * other for key, c in self._terms.items()},
                var2=self._var2,
            )
        terms = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BiPoly(terms, var2=self._var2)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms and self._var2 == other._var2

    def __hash__(self):
        return hash((tuple(sorted(self._terms.items())), self._var2))

    def coeff_in_r(self, i):
        """Coefficient of ``R^i`` as a polynomial in the second variable."""

        coeffs = [0] * (self.bidegree[1] + 1)
        for (ii, j), c in self._terms.items():
            if ii == i:
                coeffs[j] = c
        return IntPoly(coeffs, var=self._var2)

    def evaluate_r(self, value):
        """Specializes ``R = value``, leaving a polynomial in the second
        variable."""

        coeffs = [0] * (self.bidegree[1] + 1)
        for (i, j), c in self._terms.items():
            coeffs[j] += c * value**i
        return IntPoly(coeffs, var=self._var2)

    def evaluate_second(self, value):
        """Specializes the second variable, leaving a polynomial in ``R``."""

        coeffs = [0] * (self.bidegree[0] + 1)
        for (i, j), c in self._terms.items():
            coeffs[i] += c * value**j
        return IntPoly(coeffs, var="R")

    def substitute(self, poly, var2=None):
        """Replaces the second variable by the univariate ``poly``.

        Parameters
        ----------
        poly : IntPoly
        var2 : str, optional
            Name of the new second variable. Defaults to ``poly.var``.

        Returns
        -------
        BiPoly
        """

        powers = [IntPoly([1])]
        for _ in range(self.bidegree[1]):
            powers.append(powers[-1] * poly)
        terms = {}
        for (i, j), c in self._terms.items():
            for k, pc in enumerate(powers[j].coeffs):
                if pc:
                    terms[(i, k)] = terms.get((i, k), 0) + c * pc
        return BiPoly(terms, var2=var2 or poly.var)

    def laurent_lift(self):
        """``Z^D F(R, Z + 1/Z)`` with ``D`` the degree in the second
        variable, expanded with exact binomial coefficients:
        ``Z^(D-j) (Z + 1/Z)^j Z^j = Z^(D-j) (Z^2 + 1)^j``."""

        D = self.bidegree[1]
        terms = {}
        for (i, j), c in self._terms.items():
            for k in range(j + 1):
                key = (i, D - j + 2 * k)
                terms[key] = terms.get(key, 0) + c * comb(j, k, exact=True)
        return BiPoly(terms, var2="Z")

    def scale_second(self, m):
        """The polynomial ``F(R, Z^m)``."""

        return BiPoly(
            {(i, m * j): c for (i, j), c in self._terms.items()},
            var2=self._var2,
        )

    def __repr__(self):
        return f"BiPoly({self.terms}, var2={self._var2!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i in range(self.bidegree[0], -1, -1):
            coeff = self.coeff_in_r(i)
            if coeff.is_zero:
                continue
            power = "" if i == 0 else ("R" if i == 1 else f"R^{i}")
            if not power:
                parts.append(f"({coeff})")
            elif coeff == 1:
                parts.append(power)
            else:
                parts.append(f"({coeff})*{power}")
        return " + ".join(parts)


class ChebPhi(MSONable):
    """The polynomial ``Phi_i(u)``, with ``Phi_{2i} = sigma_i`` and
    ``Phi_{2i-1} = tau_i = sigma_i - sigma_{i-1}``."""

    def __init__(self, index, poly):
        self.index = index
        self.poly = poly

    def __repr__(self):
        return f"ChebPhi({self.index}, {self.poly})"


@lru_cache(maxsize=1024)
def _sigma(n):
    """``sigma_0 = 0``, ``sigma_1 = 1``,
    ``sigma_{n+1} = u sigma_n - sigma_{n-1}``, ``sigma_{-n} = -sigma_n``."""

    if n < 0:
        return -_sigma(-n)
    if n == 0:
        return IntPoly([], var="u")
    if n == 1:
        return IntPoly([1], var="u")
    return IntPoly.x("u") * _sigma(n - 1) - _sigma(n - 2)


def cheb_phi(i):
    """Computes ``Phi_i`` for any integer ``i``.

    Parameters
    ----------
    i : int

    Returns
    -------
    ChebPhi
    """

    if i % 2 == 0:
        poly = _sigma(i // 2)
    else:
        n = (i + 1) // 2
        poly = _sigma(n) - _sigma(n - 1)
    return ChebPhi(index=i, poly=poly)


@lru_cache(maxsize=64)
def h_poly(t):
    """``h_t(R, Y) = Phi_t(R) Phi_{-t-1}(R) (Y - R) - 1``, expanded."""

    _check_t(t)
    P = cheb_phi(t).poly * cheb_phi(-t - 1).poly
    terms = {(0, 0): -1}
    for i, c in enumerate(P.coeffs):
        terms[(i, 1)] = terms.get((i, 1), 0) + c
        terms[(i + 1, 0)] = terms.get((i + 1, 0), 0) - c
    return BiPoly(terms, var2="Y")


@lru_cache(maxsize=64)
def f_poly(t):
    """``f_t(R, Z) = h_t(R, Z^2 - 2)``, of bidegree ``(t, 2)``."""

    return h_poly(t).substitute(IntPoly([-2, 0, 1], var="Z"), var2="Z")


@lru_cache(maxsize=64)
def g_poly(t):
    """``g_t(R, Z) = Z^2 f_t(R, Z + 1/Z)``."""

    return f_poly(t).laurent_lift()


def alexander(t):
    """``Delta_{K_t}(x) = ((t + 1)/2) x^2 - t x + (t + 1)/2``."""

    _check_t(t)
    a = (t + 1) // 2
    return IntPoly([a, -t, a])


class ValidationReport(MSONable):
    """Outcome of the structural checks on ``f_t``. A failed check is
    recorded with a detail message; nothing is raised."""

    def __init__(self, t, checks):
        self.t = t
        self.checks = [dict(check) for check in checks]

    @property
    def passed(self):
        return all(check["passed"] for check in self.checks)

    @property
    def failures(self):
        return [check["name"] for check in self.checks if not check["passed"]]

    def to_record(self):
        return {"t": self.t, "passed": self.passed, "checks": self.checks}


def _run_check(name, fn):
    try:
        ok, detail = fn()
    except Exception as err:
        ok, detail = False, f"{type(err).__name__}: {err}"
    if not ok:
        logger.error(f"Structural check '{name}' failed: {detail}")
    return {"name": name, "passed": bool(ok), "detail": detail}


def validate_structure(t):
    """Checks the shape of ``f_t`` and the identity
    ``x^2 f_t(2, x + 1/x) + Delta_{K_t}(x^2) = 0``,
    and that ``Delta_{K_t}`` has distinct roots.

    Parameters
    ----------
    t : int
        Odd, at least 3.

    Returns
    -------
    ValidationReport
    """

    _check_t(t)
    f = f_poly(t)
    Z = IntPoly.x("Z")
    one = IntPoly([1], var="Z")

    def _bidegree():
        return f.bidegree == (t, 2), f"bidegree {f.bidegree}"

    def _even_z():
        odd = [(i, j) for i, j in f.exponents() if j % 2]
        return not odd, f"odd Z powers at {odd}" if odd else "none"

    def _monic():
        lead = f.coeff_in_r(t)
        return lead == 1, f"leading coefficient {lead}"

    def _second():
        second = f.coeff_in_r(t - 1)
        return second == one - Z * Z, f"R^{t - 1} coefficient {second}"

    def _constant():
        expected = one - Z * Z if t % 4 == 1 else IntPoly([-1], var="Z")
        constant = f.coeff_in_r(0)
        return constant == expected, f"constant coefficient {constant}"

    def _laurent():
        a = (t + 1) // 2
        delta_sq = IntPoly([a, 0, -t, 0, a], var="Z")
        residual = g_poly(t).evaluate_r(2) + delta_sq
        return residual.is_zero, f"residual {residual}"

    def _separable():
        # Res(Delta, Delta') = a (4 a^2 - t^2) = a (2 t + 1)
        delta = alexander(t)
        a = (t + 1) // 2
        res = resultant(delta, delta.derivative())
        return res == a * (2 * t + 1), f"Res(Delta, Delta') = {res}"

    def _phi_at_two():
        bad = []
        for i in range(-2 * t, 2 * t + 1):
            if i == 0:
                continue
            expected = 1 if i % 2 else i // 2
            if cheb_phi(i).poly(2) != expected:
                bad.append(i)
        return not bad, f"mismatches at {bad}" if bad else "ok"

    checks = [
        _run_check("bidegree", _bidegree),
        _run_check("even_z_powers", _even_z),
        _run_check("monic_in_r", _monic),
        _run_check("second_coefficient", _second),
        _run_check("constant_coefficient", _constant),
        _run_check("laurent_identity", _laurent),
        _run_check("phi_at_two", _phi_at_two),
        _run_check("separable_alexander", _separable),
    ]
    return ValidationReport(t=t, checks=checks)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(points):
    """Convex hull of integer points by the monotone chain algorithm.

    Cross products are exact integers and collinear points are dropped.
    Vertices are returned counter-clockwise, starting from the
    lexicographically smallest point.

    Parameters
    ----------
    points : iterable of (int, int)

    Returns
    -------
    list of (int, int)
    """

    pts = sorted(set((int(x), int(y)) for x, y in points))
    if len(pts) <= 2:
        return pts

    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


class NewtonCertificate(MSONable):
    """Newton polygon of ``g_t(R, Z^m)`` with exponent pairs written as
    ``(power of Z, power of R)``."""

    def __init__(self, t, m, vertices, top_vertices):
        self.t = t
        self.m = m
        self.vertices = [tuple(v) for v in vertices]
        self.top_vertices = [tuple(v) for v in top_vertices]

    @property
    def expected_top_vertices(self):
        t, m = self.t, self.m
        return [(0, t - 1), (2 * m, t), (4 * m, t - 1)]

    @property
    def top_vertices_ok(self):
        return self.top_vertices == self.expected_top_vertices

    @property
    def gcd(self):
        g = 0
        for x, y in self.vertices:
            g = math.gcd(g, math.gcd(x, y))
        return g

    @property
    def certified(self):
        return self.gcd == 1


def newton_certificate(t, m):
    """Builds the :class:`NewtonCertificate` of ``g_t(R, Z^m)``."""

    _check_t(t)
    if m < 1:
        raise ValueError(f"m={m} must be a positive integer")
    g = g_poly(t).scale_second(m)
    vertices = newton_polygon((j, i) for i, j in g.exponents())
    top = sorted(v for v in vertices if v[1] >= t - 1)
    return NewtonCertificate(t=t, m=m, vertices=vertices, top_vertices=top)


def newton_cert(t, m):
    """True iff the vertex coordinates of the Newton polygon of
    ``g_t(R, Z^m)`` have gcd 1, which makes ``g_t(R, Z^m)`` absolutely
    irreducible. The top vertices are checked against
    ``(0, t-1), (2m, t), (4m, t-1)`` and a mismatch is logged."""

    cert = newton_certificate(t, m)
    if not cert.top_vertices_ok:
        logger.error(
            f"Newton polygon of g_{t}(R, Z^{m}) has top vertices "
            f"{cert.top_vertices}, expected {cert.expected_top_vertices}"
        )
    return cert.certified
