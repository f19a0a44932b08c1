"""Exception hierarchy shared by every engine module.

All errors derive from ValueError so callers that only know about bad input keep working.
"""


class HopfEngineError(ValueError):
    """Base class for every error raised by the engine."""


class ParameterOutOfRange(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"parameter out of range{': ' + detail if detail else ''}")


class InconsistentSystem(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"inconsistent system{': ' + detail if detail else ''}")


class PresentationMismatch(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"presentation mismatch{': ' + detail if detail else ''}")


class UnsupportedPresentation(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"unsupported presentation{': ' + detail if detail else ''}")


class ConfluenceError(HopfEngineError):
    """A critical pair of the declared rules does not join."""


class CatalogIncomplete(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"catalog incomplete{': ' + detail if detail else ''}")


class LabelOutOfFamily(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"label out of family{': ' + detail if detail else ''}")


class CriterionNotApplicable(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"criterion not applicable{': ' + detail if detail else ''}")


class BijectionNotDimensionPreserving(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"bijection not dimension-preserving{': ' + detail if detail else ''}")


class UnstableRelations(HopfEngineError):
    def __init__(self, generator: str, detail: str = ""):
        self.generator = generator
        super().__init__(
            f"relation subspace not H-stable under {generator}{': ' + detail if detail else ''}"
        )


class ExtensionConditionFails(HopfEngineError):
    def __init__(self, generator: str, detail: str = ""):
        self.generator = generator
        super().__init__(
            f"extension condition fails at generator {generator}{': ' + detail if detail else ''}"
        )


class DegreeBoundTooSmall(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"degree bound too small{': ' + detail if detail else ''}")


class UnsupportedRing(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(f"unsupported ring{': ' + detail if detail else ''}")


class InnerFaithfulnessPrecondition(HopfEngineError):
    def __init__(self, detail: str = ""):
        super().__init__(
            f"parameters violate inner-faithfulness precondition{': ' + detail if detail else ''}"
        )
