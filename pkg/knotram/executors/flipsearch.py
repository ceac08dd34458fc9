"""Sign-flip search along the semigroup generated by two primes.

When ``pq | (t + 1)/2`` every norm ``N_d`` is ``+1`` or ``-1`` modulo
``pq`` up to sign, and so is ``s_n``. If ``n0 | n1`` and ``s_{n0}`` and
``s_{n1}`` have opposite signs, some divisor ``d`` of ``n1`` not dividing
``n0`` has ``|N_d| != 1 (mod pq)``. Such divisors are the candidates for a
new ramified residue characteristic.
"""

from monty.json import MSONable

from knotram.config import FactorBudget
from knotram.engine.cyclonorm import elem_poly, norm_real, s_sign
from knotram.engine.poly_core import (
    is_probable_prime,
    real_cyclotomic,
    resultant_mod,
)
from knotram.executors.ramify import certify
from knotram.logger import logger
from knotram.utils.arithmetic import divisors
from knotram.utils.numerics import norm_digits
from knotram.utils.utils import timeit


LOCALIZED_STATUSES = ["candidate", "not_candidate", "indeterminate"]


class FlipWitness(MSONable):
    """A pair ``n_prev | n_next`` on which ``s_n`` changes sign.

    Parameters
    ----------
    n_prev, n_next : int
    sign_prev, sign_next : int
        Signs of ``s_{n_prev}`` and ``s_{n_next}``; they differ.
    localized : list of dict
        One entry per divisor ``d`` of ``n_next`` not dividing ``n_prev``,
        with keys ``d``, ``norm_mod_pq``, ``norm_sign`` (None when the exact
        norm was not computed), ``norm_digits``, ``status``, ``ramified``
        (None unless certified) and ``is_candidate``.

    Raises
    ------
    ValueError
        If ``n_prev`` does not divide ``n_next`` or the signs do not differ.
    """

    def __init__(self, n_prev, n_next, sign_prev, sign_next, localized=None):
        if n_prev < 1 or n_next % n_prev != 0:
            raise ValueError(f"{n_prev} does not divide {n_next}")
        if {sign_prev, sign_next} != {-1, 1}:
            raise ValueError(
                f"signs {sign_prev}, {sign_next} are not a sign change"
            )
        self.n_prev = n_prev
        self.n_next = n_next
        self.sign_prev = sign_prev
        self.sign_next = sign_next
        self.localized = [dict(x) for x in (localized or [])]

    @property
    def candidates(self):
        return [x["d"] for x in self.localized if x["is_candidate"]]

    def to_record(self):
        localized = []
        for entry in self.localized:
            entry = dict(entry)
            if entry["ramified"] is not None:
                entry["ramified"] = [str(l) for l in entry["ramified"]]
            localized.append(entry)
        return {
            "n_prev": self.n_prev,
            "n_next": self.n_next,
            "sign_prev": self.sign_prev,
            "sign_next": self.sign_next,
            "localized": localized,
            "candidates": self.candidates,
        }

    def __repr__(self):
        return (
            f"FlipWitness({self.n_prev} ({self.sign_prev:+d}) -> "
            f"{self.n_next} ({self.sign_next:+d}))"
        )


class SearchResult(MSONable):
    """Witnesses found along the walk, the walked chain points and whether
    the exponent cap stopped the walk before enough flips were found."""

    def __init__(self, t, p, q, witnesses, chain, budget_exhausted):
        self.t = t
        self.p = p
        self.q = q
        self.witnesses = list(witnesses)
        self.chain = [dict(x) for x in chain]
        self.budget_exhausted = budget_exhausted

    def to_record(self):
        return {
            "t": self.t,
            "p": self.p,
            "q": self.q,
            "witnesses": [w.to_record() for w in self.witnesses],
            "chain": self.chain,
            "budget_exhausted": self.budget_exhausted,
        }


def validate_hypotheses(t, p, q):
    """Checks that ``p`` and ``q`` are distinct odd primes with
    ``pq | (t + 1)/2`` and ``t = -1 (mod pq)``, for odd ``t >= 3``.

    Returns
    -------
    list of str
        Violations; empty when the hypotheses hold.
    """

    violations = []
    if t < 3 or t % 2 == 0:
        violations.append(f"t={t} must be an odd integer >= 3")
    for name, x in (("p", p), ("q", q)):
        if not is_probable_prime(x) or x == 2:
            violations.append(f"{name}={x} must be an odd prime")
    if p == q:
        violations.append(f"p and q must be distinct, both are {p}")
    pq = p * q
    a = (t + 1) // 2
    if pq == 0 or a % pq != 0:
        violations.append(f"{pq} does not divide (t+1)/2 = {a}")
    if pq > 0 and (t + 1) % pq != 0:
        violations.append(f"t={t} is not -1 mod {pq}")
    return violations


def _exponent_start(prime):
    """Smallest allowed exponent and its step: exponents of a prime
    ``= 3 (mod 4)`` are kept even."""

    if prime % 4 == 3:
        return 2, 2
    return 1, 1


def find_flips(t, p, q, max_flips=2, exponent_cap=8):
    """Walks ``n = p^u q^v``, holding ``u`` at its smallest allowed value
    and increasing ``v``; when ``v`` passes ``exponent_cap`` the walk moves
    on to the next ``u`` and starts a new chain. A witness is recorded each
    time the sign of ``s_n`` changes along a chain, paired with the first
    point of the previous sign run.

    Parameters
    ----------
    t, p, q : int
        Satisfying :func:`validate_hypotheses`.
    max_flips : int, optional
    exponent_cap : int, optional
        Bound on both ``u`` and ``v``.

    Returns
    -------
    SearchResult
        ``budget_exhausted`` is set when fewer than ``max_flips`` witnesses
        were found.
    """

    u_start, u_step = _exponent_start(p)
    v_start, v_step = _exponent_start(q)

    witnesses, chain = [], []
    u = u_start
    while u <= exponent_cap and len(witnesses) < max_flips:
        run_start, run_sign = None, None
        v = v_start
        while v <= exponent_cap and len(witnesses) < max_flips:
            n = p**u * q**v
            with timeit(logger.debug, f"Sign of s_{n}"):
                sign = s_sign(t, n)
            chain.append({"n": n, "u": u, "v": v, "sign": sign})
            if run_start is None:
                run_start, run_sign = n, sign
            elif sign != run_sign:
                logger.info(f"Sign flip {run_start} ({run_sign:+d}) -> {n}")
                witnesses.append(
                    FlipWitness(
                        n_prev=run_start,
                        n_next=n,
                        sign_prev=run_sign,
                        sign_next=sign,
                    )
                )
                run_start, run_sign = n, sign
            v += v_step
        u += u_step

    budget_exhausted = len(witnesses) < max_flips
    if budget_exhausted:
        logger.warning(
            f"Found {len(witnesses)} of {max_flips} flips below exponent "
            f"cap {exponent_cap}"
        )
    return SearchResult(
        t=t,
        p=p,
        q=q,
        witnesses=witnesses,
        chain=chain,
        budget_exhausted=budget_exhausted,
    )


def _localize_one(t, d, pq, digit_cap, certify_digits, budget):
    residue = resultant_mod(
        real_cyclotomic(d, modulus=pq), elem_poly(t), pq
    )
    digits = norm_digits(t, d)
    sign, ramified = None, None

    if digits <= digit_cap:
        norm = norm_real(t, d, method="square").value
        sign = 1 if norm > 0 else -1
        if norm % pq != residue:
            logger.error(
                f"N_{d} mod {pq} = {norm % pq} disagrees with the modular "
                f"resultant {residue}"
            )
        if digits <= certify_digits:
            ramified = certify(t, d, budget).primes

    if sign is not None:
        magnitude = residue if sign > 0 else (-residue) % pq
        status = "candidate" if magnitude != 1 else "not_candidate"
    elif residue not in (1, pq - 1):
        status = "candidate"
    else:
        status = "indeterminate"

    return {
        "d": d,
        "norm_mod_pq": residue,
        "norm_sign": sign,
        "norm_digits": digits,
        "status": status,
        "ramified": ramified,
        "is_candidate": status == "candidate" or bool(ramified),
    }


def localize(
    t,
    p,
    q,
    witness,
    digit_cap=40000,
    certify_digits=30,
    budget=None,
):
    """Fills ``witness.localized`` with one entry per divisor ``d`` of
    ``n_next`` not dividing ``n_prev``, ascending in ``d``.

    The residue of ``N_d`` modulo ``pq`` is always computed, by a modular
    resultant. The exact signed norm is computed when its estimated size is
    at most ``digit_cap`` digits, and then certified when it is at most
    ``certify_digits`` digits. A divisor is a candidate when
    ``|N_d| != 1 (mod pq)``; without the sign that is decidable only for a
    residue outside ``{1, pq - 1}``, and the entry is ``"indeterminate"``
    otherwise.

    Returns
    -------
    FlipWitness
        The same witness, updated in place.
    """

    if budget is None:
        budget = FactorBudget()
    pq = p * q
    localized = []
    for d in divisors(witness.n_next):
        if witness.n_prev % d == 0:
            continue
        with timeit(logger.debug, f"Localized d={d}"):
            localized.append(
                _localize_one(t, d, pq, digit_cap, certify_digits, budget)
            )
    witness.localized = localized
    return witness


def search(
    t,
    p,
    q,
    max_flips=2,
    exponent_cap=8,
    digit_cap=40000,
    certify_digits=30,
    budget=None,
):
    """Validates the hypotheses, finds the flips and localizes every
    witness.

    Raises
    ------
    ValueError
        If :func:`validate_hypotheses` reports a violation.
    """

    violations = validate_hypotheses(t, p, q)
    if violations:
        raise ValueError("; ".join(violations))
    result = find_flips(t, p, q, max_flips, exponent_cap)
    for witness in result.witnesses:
        localize(
            t,
            p,
            q,
            witness,
            digit_cap=digit_cap,
            certify_digits=certify_digits,
            budget=budget,
        )
    return result
