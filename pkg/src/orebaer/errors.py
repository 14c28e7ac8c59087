"""Exception hierarchy. Every violation carries its witness."""


class OreBaerError(Exception):
    """Base class for all errors raised by the package."""


class DescriptorError(OreBaerError, ValueError):
    pass


class ParseError(OreBaerError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class RingTooLarge(OreBaerError):
    pass


class RingAxiomError(OreBaerError):
    def __init__(self, axiom, witness):
        super().__init__(f"ring axiom '{axiom}' fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class RingMismatch(OreBaerError, TypeError):
    pass


class MapViolation(OreBaerError):
    """A proposed endomorphism or derivation breaks one of its laws."""

    law = "map law"

    def __init__(self, witness=None):
        self.witness = witness
        msg = self.law if witness is None else f"{self.law} fails at {witness}"
        super().__init__(msg)


class AdditivityViolation(MapViolation):
    law = "additivity"


class MultiplicativityViolation(MapViolation):
    law = "multiplicativity"


class NotUnital(MapViolation):
    law = "unitality"


class NotBijective(MapViolation):
    law = "bijectivity"


class LeibnizViolation(MapViolation):
    law = "twisted Leibniz rule"


class IndexOutOfRange(OreBaerError, IndexError):
    pass


class ContextMismatch(OreBaerError, TypeError):
    pass


class NotIdempotent(OreBaerError, ValueError):
    pass


class BudgetExceeded(OreBaerError):
    def __init__(self, required, budget):
        super().__init__(f"search needs {required} candidates, budget is {budget}")
        self.required = required
        self.budget = budget


class HypothesisViolated(OreBaerError):
    def __init__(self, failed, detail=None):
        super().__init__("hypothesis not met: " + ", ".join(failed))
        self.failed = list(failed)
        self.detail = detail or {}


class UnknownExample(OreBaerError, KeyError):
    pass


class UnknownClaim(OreBaerError, KeyError):
    pass
