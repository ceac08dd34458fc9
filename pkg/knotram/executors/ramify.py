"""Certification of ramified residue characteristics for the (d, 0)
surgeries on K_t, one surgery coefficient at a time, and the table runner
that drives certification over a range of d."""

from pathlib import Path

from monty.json import MSONable
from monty.serialization import dumpfn, loadfn
from tqdm import tqdm

from knotram.config import FactorBudget
from knotram.engine.cyclonorm import norm_real
from knotram.engine.knotpoly import newton_cert
from knotram.engine.poly_core import factorize, mult_order, splitting
from knotram.logger import logger
from knotram.utils.arithmetic import is_prime_power
from knotram.utils.utils import chunk_jobs, timeit


EXCLUSION_REASONS = [
    "divides_2d",
    "divides_t_or_a",
    "even_multiplicity",
    "l_equiv_1_mod_d",
    "order_anomaly",
    "order_two_not_minus_one",
]


def _check_td(t, d):
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t={t} must be an odd integer >= 3")
    if d < 3 or d % 2 == 0:
        raise ValueError(f"d={d} must be an odd integer >= 3")


class RamificationCertificate(MSONable):
    """Certified ramified residue characteristics of the (d, 0) surgery on
    K_t.

    Parameters
    ----------
    t, d : int
    norm : NormRecord or None
        None only for a row whose computation failed.
    factorization : Factorization or None
    ramified : list of dict
        Entries with keys ``l``, ``multiplicity``, ``l_mod_d``,
        ``order_mod_d``, ``real_inertia_degree`` and ``inert_in_cyclotomic``.
    excluded : list of dict
        Entries with keys ``l`` and ``reason``.
    status : {"complete", "incomplete"}
    d_is_prime_power : bool
    newton_certified : bool or None
    anomalies : list of dict, optional
        What :func:`order_sanity` reported for the factorization.
    error : str, optional
    """

    def __init__(
        self,
        t,
        d,
        norm,
        factorization,
        ramified,
        excluded,
        status,
        d_is_prime_power,
        newton_certified=None,
        error=None,
        anomalies=None,
    ):
        self.t = t
        self.d = d
        self.norm = norm
        self.factorization = factorization
        self.ramified = [dict(entry) for entry in ramified]
        self.excluded = [dict(entry) for entry in excluded]
        self.status = status
        self.d_is_prime_power = d_is_prime_power
        self.newton_certified = newton_certified
        self.error = error
        self.anomalies = [dict(entry) for entry in (anomalies or [])]

    @classmethod
    def from_error(cls, t, d, error):
        return cls(
            t=t,
            d=d,
            norm=None,
            factorization=None,
            ramified=[],
            excluded=[],
            status="incomplete",
            d_is_prime_power=d > 1 and is_prime_power(d),
            error=error,
        )

    @property
    def primes(self):
        return [entry["l"] for entry in self.ramified]

    def to_record(self):
        return {
            "t": self.t,
            "d": self.d,
            "norm": None if self.norm is None else self.norm.to_record(),
            "factorization": None
            if self.factorization is None
            else self.factorization.to_record(),
            "ramified": [
                {**entry, "l": str(entry["l"])} for entry in self.ramified
            ],
            "excluded": [
                {**entry, "l": str(entry["l"])} for entry in self.excluded
            ],
            "status": self.status,
            "d_is_prime_power": self.d_is_prime_power,
            "newton_certified": self.newton_certified,
            "anomalies": [
                {**entry, "l": str(entry["l"])} for entry in self.anomalies
            ],
            "error": self.error,
        }

    def __repr__(self):
        return (
            f"RamificationCertificate(t={self.t}, d={self.d}, "
            f"primes={self.primes}, status={self.status!r})"
        )


def order_sanity(t, d, factorization):
    """Prime factors ``l`` of the norm with ``gcd(l, 2 d t (t + 1)) = 1``
    whose multiplicative order modulo ``d`` is neither 1 nor 2. The result
    is expected to be empty.

    Returns
    -------
    list of dict
        Entries with keys ``l`` and ``order``.
    """

    anomalies = []
    bad = 2 * d * t * (t + 1)
    for l in factorization.primes:
        if bad % l == 0:
            continue
        order = mult_order(l, d)
        if order not in (1, 2):
            anomalies.append({"l": l, "order": order})
    for anomaly in anomalies:
        logger.error(
            f"Prime {anomaly['l']} has order {anomaly['order']} mod {d} "
            f"for t={t}"
        )
    return anomalies


def _exclusion_reason(t, d, l, e):
    """Why the prime factor ``l`` (multiplicity ``e``) of ``N_d`` is not
    certified, or None when it is."""

    a = (t + 1) // 2
    if l == 2 or d % l == 0:
        return "divides_2d"
    if t % l == 0 or a % l == 0:
        return "divides_t_or_a"
    if e % 2 == 0:
        return "even_multiplicity"
    order = mult_order(l, d)
    if order == 1:
        return "l_equiv_1_mod_d"
    if order > 2:
        return "order_anomaly"
    # order 2 with l != -1 needs two distinct prime factors of d
    if l % d != d - 1:
        return "order_two_not_minus_one"
    return None


def certify(t, d, budget=None):
    """Factors ``N_d`` and keeps the prime factors ``l`` that ramify the
    canonical quaternion algebra: odd multiplicity, ``l`` prime to ``2d``
    and to ``t (t + 1)/2``, and ``l = -1 (mod d)``. Every other prime factor
    is listed with the reason for its exclusion.

    Parameters
    ----------
    t, d : int
        Odd, at least 3.
    budget : FactorBudget, optional

    Returns
    -------
    RamificationCertificate
        With status ``"incomplete"`` when the factorization ran out of
        budget; only primes from the factored part are certified then.
    """

    _check_td(t, d)
    if budget is None:
        budget = FactorBudget()

    prime_power = is_prime_power(d)
    if prime_power:
        logger.warning(f"d={d} is a prime power")

    norm = norm_real(t, d)
    with timeit(logger.debug, f"Factored N_{d} for t={t}"):
        factorization = factorize(abs(norm.value), budget)

    ramified, excluded = [], []
    for l, e in factorization.factors:
        reason = _exclusion_reason(t, d, l, e)
        if reason is not None:
            excluded.append({"l": l, "reason": reason})
            continue
        split = splitting(l, d)
        ramified.append(
            {
                "l": l,
                "multiplicity": e,
                "l_mod_d": l % d,
                "order_mod_d": split.inertia_degree,
                "real_inertia_degree": split.real_inertia_degree,
                "inert_in_cyclotomic": split.inert_in_cyclotomic,
            }
        )

    anomalies = order_sanity(t, d, factorization)
    status = "complete" if factorization.complete else "incomplete"
    if status == "incomplete":
        logger.warning(f"Factorization of N_{d} for t={t} is incomplete")

    return RamificationCertificate(
        t=t,
        d=d,
        norm=norm,
        factorization=factorization,
        ramified=ramified,
        excluded=excluded,
        status=status,
        d_is_prime_power=prime_power,
        newton_certified=newton_cert(t, d),
        anomalies=anomalies,
    )


class TableRunner:
    """Certifies every odd ``d`` of a range, in serial or distributed over
    an MPI communicator. Rows are checkpointed as JSON, one file per ``d``,
    when a root directory is given, and are reloaded rather than recomputed
    on a later run.

    Parameters
    ----------
    t : int
    budget : FactorBudget, optional
    root : os.PathLike, optional
        Checkpoint directory. It should only ever hold rows computed with
        the same ``t`` and budget.
    mpi_comm : mpi4py.MPI.Intracomm, optional

    Raises
    ------
    ValueError
        If t is even or below 3; rows are never attempted then.
    """

    @property
    def t(self):
        return self._t

    @property
    def budget(self):
        return self._budget

    @property
    def root(self):
        return self._root

    @property
    def mpi_comm(self):
        return self._mpi_comm

    @property
    def mpi_rank(self):
        if self._mpi_comm is not None:
            return self._mpi_comm.Get_rank()
        return 0

    @property
    def mpi_world_size(self):
        if self._mpi_comm is not None:
            return self._mpi_comm.Get_size()
        return 1

    def __init__(self, t, budget=None, root=None, mpi_comm=None):
        if t < 3 or t % 2 == 0:
            raise ValueError(f"t={t} must be an odd integer >= 3")
        self._t = t
        self._budget = budget if budget is not None else FactorBudget()
        self._mpi_comm = mpi_comm
        self._root = None if root is None else Path(root)
        if self._root is not None:
            self._root.mkdir(exist_ok=True, parents=True)

    def get_jobs_on_this_rank(self, jobs):
        if self.mpi_comm is None:
            return jobs
        return chunk_jobs(jobs, self.mpi_world_size, self.mpi_rank)

    def _checkpoint_path(self, d):
        if self._root is None:
            return None
        return self._root / f"t{self._t}_d{d:06d}.json"

    def _pre_certify(self, d):
        path = self._checkpoint_path(d)
        if path is not None and path.exists():
            logger.debug(f"Row d={d} reloaded from {path}")
            return loadfn(path), path
        return None, path

    def _post_certify(self, certificate, path):
        if path is not None and certificate.error is None:
            dumpfn(certificate, path)

    def certify_row(self, d):
        """Certificate for one ``d``. Any failure is captured into the row's
        ``error`` field instead of propagating."""

        certificate, path = self._pre_certify(d)
        if certificate is not None:
            return certificate
        try:
            certificate = certify(self._t, d, self._budget)
        except Exception as err:
            logger.error(f"Row d={d} failed: {type(err).__name__}: {err}")
            certificate = RamificationCertificate.from_error(
                self._t, d, f"{type(err).__name__}: {err}"
            )
        self._post_certify(certificate, path)
        return certificate

    def run(self, d_min, d_max, pbar=False):
        """Certificates for every odd ``d`` in ``[max(d_min, 3), d_max]``,
        ascending in ``d``. Under MPI only rank 0 returns the rows; the other
        ranks return None.
        """

        if d_min > d_max:
            raise ValueError(f"d_min={d_min} exceeds d_max={d_max}")
        start = max(d_min, 3)
        start += 1 - start % 2
        jobs = list(range(start, d_max + 1, 2))
        jobs_on_rank = self.get_jobs_on_this_rank(jobs)

        rows = []
        for d in tqdm(jobs_on_rank, disable=not pbar):
            rows.append(self.certify_row(d))

        if self.mpi_comm is not None:
            all_rows = self.mpi_comm.gather(rows, root=0)
            if self.mpi_rank != 0:
                return None
            rows = [row for chunk in all_rows for row in chunk]

        return sorted(rows, key=lambda row: row.d)


def table(t, d_min, d_max, budget=None, root=None, mpi_comm=None, pbar=False):
    """Table of ramified residue characteristics for odd ``d`` in
    ``[d_min, d_max]``. See :class:`TableRunner`."""

    runner = TableRunner(t, budget=budget, root=root, mpi_comm=mpi_comm)
    with timeit(logger.info, f"Table for t={t}, d in [{d_min}, {d_max}]"):
        return runner.run(d_min, d_max, pbar=pbar)


def recurrence_audit(certificates):
    """Certified primes that occur for more than one ``d``.

    Returns
    -------
    list of dict
        Entries ``{"l": l, "d": [d1, d2, ...]}``, ascending in ``l``.
    """

    seen = {}
    for certificate in certificates:
        for l in certificate.primes:
            seen.setdefault(l, []).append(certificate.d)
    return [
        {"l": l, "d": sorted(ds)}
        for l, ds in sorted(seen.items())
        if len(ds) > 1
    ]


def certificates_to_csv(rows):
    lines = ["d,primes,status"]
    for row in rows:
        primes = ";".join(str(l) for l in sorted(row.primes))
        lines.append(f"{row.d},{primes},{row.status}")
    return "\n".join(lines)


def certificates_to_text(rows):
    lines = []
    for row in rows:
        primes = ", ".join(str(l) for l in sorted(row.primes)) or "∅"
        flag = "" if row.status == "complete" else f"  ({row.status})"
        lines.append(f"{row.d:>5}: {primes}{flag}")
    return "\n".join(lines)
