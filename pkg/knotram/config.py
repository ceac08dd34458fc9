import os

from monty.json import MSONable

from knotram.logger import logger


OUTPUT_FORMATS = ["json", "csv", "text"]
SEED_ENV_VAR = "SEED"
MAX_SEED = 2**64 - 1


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


class FactorBudget(MSONable):
    """Resources granted to a single integer factorization. A factorization
    that runs out of budget is not an error: it returns with its unresolved
    part carried as a cofactor.

    Parameters
    ----------
    trial_bound : int
        Trial division is performed by all primes up to this bound.
    rho_iter_cap : int
        Maximum number of Pollard rho iterations per composite.
    wall_ms : int
        Wall-clock allowance for the whole factorization, in milliseconds.
    seed : int
        Seed of the random sequence used by Pollard rho and by the
        Miller-Rabin rounds above the deterministic range.
    """

    @property
    def trial_bound(self):
        return self._trial_bound

    @trial_bound.setter
    def trial_bound(self, x):
        if not _is_int(x) or x < 2:
            logger.critical(f"trial_bound={x} must be an int >= 2")
        self._trial_bound = x

    @property
    def rho_iter_cap(self):
        return self._rho_iter_cap

    @rho_iter_cap.setter
    def rho_iter_cap(self, x):
        if not _is_int(x) or x < 1:
            logger.critical(f"rho_iter_cap={x} must be a positive int")
        self._rho_iter_cap = x

    @property
    def wall_ms(self):
        return self._wall_ms

    @wall_ms.setter
    def wall_ms(self, x):
        if not _is_int(x) or x < 1:
            logger.critical(f"wall_ms={x} must be a positive int")
        self._wall_ms = x

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, x):
        if not _is_int(x) or not 0 <= x <= MAX_SEED:
            logger.critical(f"seed={x} must be a 64 bit unsigned int")
        self._seed = x

    def __init__(
        self, trial_bound=10**6, rho_iter_cap=2**26, wall_ms=60000, seed=0
    ):
        self.trial_bound = trial_bound
        self.rho_iter_cap = rho_iter_cap
        self.wall_ms = wall_ms
        self.seed = seed

    def __repr__(self):
        return (
            f"FactorBudget(trial_bound={self.trial_bound}, "
            f"rho_iter_cap={self.rho_iter_cap}, wall_ms={self.wall_ms}, "
            f"seed={self.seed})"
        )


class RunConfig(MSONable):
    """Everything that determines the output of a run besides the command
    arguments. Two runs with equal ``RunConfig`` and arguments produce
    byte-identical output.

    .. note::

        It is recommended to use :class:`from_parameters`, which honors the
        ``SEED`` environment variable and keeps the factorization seed
        aligned with the run seed.
    """

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, x):
        if not _is_int(x) or not 0 <= x <= MAX_SEED:
            logger.critical(f"seed={x} must be a 64 bit unsigned int")
        self._seed = x

    @property
    def budget(self):
        return self._budget

    @budget.setter
    def budget(self, x):
        if not isinstance(x, FactorBudget):
            logger.critical(f"budget {x} must be a FactorBudget")
        self._budget = x

    @property
    def digit_cap(self):
        """Localized norms estimated to exceed this many decimal digits are
        reported from their residue only."""

        return self._digit_cap

    @digit_cap.setter
    def digit_cap(self, x):
        if not _is_int(x) or x < 1:
            logger.critical(f"digit_cap={x} must be a positive int")
        self._digit_cap = x

    @property
    def certify_digits(self):
        """Localized norms with at most this many digits are also factored
        and certified."""

        return self._certify_digits

    @certify_digits.setter
    def certify_digits(self, x):
        if not _is_int(x) or x < 0:
            logger.critical(f"certify_digits={x} must be a non-negative int")
        self._certify_digits = x

    @property
    def output(self):
        return self._output

    @output.setter
    def output(self, x):
        if x not in OUTPUT_FORMATS:
            logger.critical(f"output={x} must be one of {OUTPUT_FORMATS}")
        self._output = x

    def __init__(
        self,
        seed=0,
        budget=None,
        digit_cap=40000,
        certify_digits=30,
        output="json",
    ):
        self.seed = seed
        self.budget = budget if budget is not None else FactorBudget(seed=seed)
        self.digit_cap = digit_cap
        self.certify_digits = certify_digits
        self.output = output

    @classmethod
    def from_parameters(
        cls,
        seed=None,
        trial_bound=10**6,
        rho_iter_cap=2**26,
        wall_ms=60000,
        digit_cap=40000,
        certify_digits=30,
        output="json",
    ):
        """Convenience method for initializing the run configuration.

        Parameters
        ----------
        seed : int, optional
            If None, the ``SEED`` environment variable is used when set, and
            0 otherwise. An explicit seed takes precedence over the
            environment.
        trial_bound, rho_iter_cap, wall_ms : int, optional
            Forwarded to :class:`FactorBudget`.
        digit_cap : int, optional
            Default is 40000.
        certify_digits : int, optional
            Default is 30.
        output : {"json", "csv", "text"}, optional

        Returns
        -------
        RunConfig
        """

        if seed is None:
            env_seed = os.environ.get(SEED_ENV_VAR)
            if env_seed is None:
                seed = 0
            else:
                try:
                    seed = int(env_seed)
                except ValueError:
                    logger.critical(f"{SEED_ENV_VAR}={env_seed} is not an int")
                logger.debug(f"Seed {seed} taken from ${SEED_ENV_VAR}")

        budget = FactorBudget(
            trial_bound=trial_bound,
            rho_iter_cap=rho_iter_cap,
            wall_ms=wall_ms,
            seed=seed,
        )
        return cls(
            seed=seed,
            budget=budget,
            digit_cap=digit_cap,
            certify_digits=certify_digits,
            output=output,
        )
