"""Exception taxonomy shared by the library and the command line."""


class AutJacError(Exception):
    """Base class for every error raised by autjac."""


class InexactDivision(AutJacError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


# spectrum

class SpectrumError(AutJacError, ValueError):
    pass


class NonCyclotomicFactor(SpectrumError):
    """The polynomial is not a product of cyclotomic factors of the given order."""


class NotADivisor(SpectrumError):
    pass


class MissingCount(SpectrumError):
    """An M-value map does not cover every divisor of the order."""


class NegativeCount(SpectrumError):
    pass


class NonOrbitCount(SpectrumError):
    """N_d is not a multiple of phi(d)."""


# theorem

class TheoremError(AutJacError, ValueError):
    pass


class InadmissibleTriple(TheoremError):
    def __init__(self, g, n, nbar, reason):
        super().__init__(f"(g={g}, n={n}, nbar={nbar}) is inadmissible: {reason}")
        self.triple = (g, n, nbar)
        self.reason = reason


class NonIntegralGenus(TheoremError):
    pass


class NotPossibleConfiguration(TheoremError):
    pass


class UncoveredByLemma(TheoremError):
    pass


class InvalidE1(TheoremError):
    pass


class InvalidRamConfig(TheoremError):
    """A ramification configuration violates its own invariants (e.g. even m > 2 in characteristic 2)."""


# oracle

class OracleError(AutJacError):
    pass


class OutOfRange(OracleError, ValueError):
    pass


class NonIntegralCoefficient(OracleError, ArithmeticError):
    pass


class VerificationFailure(OracleError):
    def __init__(self, counterexample):
        super().__init__(f"oracle/theorem mismatch: {counterexample}")
        self.counterexample = counterexample
