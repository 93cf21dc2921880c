"""Exception hierarchy shared by every module of the package."""


class FinError(Exception):
    """Base class for all errors raised by symsimp."""


# -- malformed maps ---------------------------------------------------------

class LengthMismatch(FinError, ValueError):
    pass


class EntryOutOfRange(FinError, ValueError):
    pass


class DimMismatch(FinError, ValueError):
    pass


class IndexOutOfRange(FinError, IndexError):
    pass


class NotAPermutation(FinError, ValueError):
    pass


# -- word syntax ------------------------------------------------------------

class WordSyntaxError(FinError, ValueError):
    """Raised by the word parser; the CLI maps these to exit status 1."""


class BadToken(WordSyntaxError):
    pass


class InvalidInverse(WordSyntaxError):
    pass


class WordIndexError(WordSyntaxError, IndexOutOfRange):
    """An index that is never valid for its generator kind (u0, r0)."""


# -- word typing ------------------------------------------------------------

class StageIndexError(FinError, IndexError):
    def __init__(self, position, symbol, stage_dim, reason=""):
        self.position = position
        self.symbol = symbol
        self.stage_dim = stage_dim
        msg = f"symbol {symbol!s} at position {position} is invalid at stage dimension {stage_dim}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class NegativeDim(FinError, ValueError):
    pass


# -- rewriting and factorization -------------------------------------------

class UnknownFamily(FinError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown family"


class ForbiddenSymbol(FinError, ValueError):
    pass


class NotMonotonic(FinError, ValueError):
    pass


class NotQuasiMonotonic(FinError, ValueError):
    def __init__(self, failed, message):
        self.failed = failed  # "QM1" or "QM2"
        super().__init__(message)


class ZeroExcluded(FinError, ValueError):
    pass


class NotZeroFixing(FinError, ValueError):
    pass


class ContainsT0(FinError, ValueError):
    pass
