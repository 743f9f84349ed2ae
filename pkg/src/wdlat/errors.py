"""Exception hierarchy shared by all modules.

Every domain failure raised by this package derives from WdlatError, so
callers (notably the CLI) can map it to a diagnostic + nonzero exit in one
place.  Witnesses are kept on the exception so tests can re-evaluate them.
"""


class WdlatError(Exception):
    pass


class NotAPartialOrder(WdlatError):
    def __init__(self, reason, witness):
        super().__init__(f"not a partial order: {reason}, witness {witness}")
        self.reason = reason
        self.witness = witness


class NotALattice(WdlatError):
    def __init__(self, kind, pair):
        super().__init__(f"not a lattice: pair {pair} has no {kind}")
        self.kind = kind  # "meet" or "join"
        self.pair = pair


class NoBounds(WdlatError):
    pass


class SizeCapExceeded(WdlatError):
    pass


class InvalidInput(WdlatError):
    """Bad argument values (counts, ranges, labels) outside any file format."""


class FormatError(WdlatError):
    """Malformed .lat.json or .cxt input."""


class NotAWdl(WdlatError):
    def __init__(self, report):
        super().__init__(f"dicomplementation axioms fail: {report.failing()}")
        self.report = report


class UnknownName(WdlatError):
    pass


class CarrierMismatch(WdlatError):
    pass


class NotACongruence(WdlatError):
    def __init__(self, witness):
        super().__init__(f"not a congruence, witness {witness}")
        self.witness = witness


class NotNormal(WdlatError):
    def __init__(self, witness, msg="subset is not a normal filter/ideal"):
        super().__init__(f"{msg}, witness {witness}")
        self.witness = witness


class NotASubalgebra(WdlatError):
    def __init__(self, witness):
        super().__init__(f"subset not closed under the operations, witness {witness}")
        self.witness = witness


class NotClosed(WdlatError):
    def __init__(self, witness):
        super().__init__(f"subset not closed under the induced operations, witness {witness}")
        self.witness = witness


class InsufficientGenerators(WdlatError):
    pass


class EmptySubset(WdlatError):
    pass


class InvalidCoordinate(WdlatError):
    pass


class HypothesisError(WdlatError):
    """A theorem-instance check was invoked outside its hypotheses."""
