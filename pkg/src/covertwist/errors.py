"""Exception hierarchy shared by all covertwist modules."""


class CovertwistError(Exception):
    """Base class for every error raised by this package."""


# -- field / element level ---------------------------------------------------

class NotPrime(CovertwistError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class DegreeOutOfRange(CovertwistError):
    pass


class CapExceeded(CovertwistError):
    pass


class FieldMismatch(CovertwistError):
    pass


class DivisionByZero(CovertwistError, ZeroDivisionError):
    pass


# -- polynomial level --------------------------------------------------------

class NotMonic(CovertwistError):
    pass


class NotSquarefree(CovertwistError):
    """Signals a ramified specialization; census callers bucket these."""


class BadInput(CovertwistError):
    pass


class DegreeTooSmall(CovertwistError):
    pass


class InseparableCover(CovertwistError):
    """disc_y(P) vanishes identically in the working characteristic."""


# -- group level ---------------------------------------------------------

class DegreeMismatch(CovertwistError):
    pass


class NotAHomomorphism(CovertwistError):
    pass


class DomainMismatch(CovertwistError):
    pass


class NotASubgroup(CovertwistError):
    pass


class NotNormal(CovertwistError):
    pass


# -- twisting level ------------------------------------------------------

class ConstCompFails(CovertwistError):
    pass


class HypothesisFails(CovertwistError):
    pass


class ModelInvariantViolated(CovertwistError):
    pass


# -- local-global level ----------------------------------------------------

class NoResidue(CovertwistError):
    """No residue class mod p realizes the requested degree divisor.

    ``theory_violated`` is True when p is good and at or above the
    4*r^2*(n!)^2 bound, where existence is guaranteed; callers should
    treat that case as a falsification event, not a soft miss.
    """

    def __init__(self, p, target, below_bound, good):
        self.p = p
        self.target = target
        self.below_bound = below_bound
        self.good = good
        self.theory_violated = good and not below_bound
        verdict = (
            "existence guarantee violated"
            if self.theory_violated
            else "no guarantee applies at this prime"
        )
        super().__init__(f"no residue mod {p} has divisor {target} ({verdict})")


class NotEnoughPrimes(CovertwistError):
    pass


class DuplicatePrime(CovertwistError):
    pass


class DegreeDrop(CovertwistError):
    """Leading Y-coefficient vanished where a full-degree fiber was required."""


# -- parsing -----------------------------------------------------------------

class PolySyntaxError(CovertwistError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownVariable(PolySyntaxError):
    def __init__(self, name, offset):
        super().__init__(f"unknown variable {name!r}", offset)
        self.name = name
