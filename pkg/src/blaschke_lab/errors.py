"""Exception hierarchy shared by all modules."""


class BlaschkeLabError(Exception):
    """Base class for every error raised by this package."""


class BandOverflowError(BlaschkeLabError):
    """A product would exceed the configured hard cap on band size."""


class AliasingError(BlaschkeLabError):
    """Grid too small to represent a coefficient band without aliasing."""


class PoleError(BlaschkeLabError):
    """Evaluation point coincides with a pole of a Blaschke factor."""


class BandMismatchError(BlaschkeLabError):
    """A vector has support outside the band an operator acts on."""


class InsufficientRangeError(BlaschkeLabError):
    """Requested Wold exponent range does not cover the input band."""

    def __init__(self, requested, minimal):
        self.requested = requested
        self.minimal = minimal
        super().__init__(
            f"k-range {requested} does not cover the input band; "
            f"minimal adequate range is {minimal}"
        )


class ProbeOutsideSubspaceError(BlaschkeLabError):
    """An invariance probe does not lie in the claimed source subspace."""


class NotInCommutantError(BlaschkeLabError):
    """Symbol extraction was attempted on an operator outside the commutant."""

    def __init__(self, residual, tol):
        self.residual = residual
        self.tol = tol
        super().__init__(
            f"operator does not commute with the reference multiplication "
            f"operator: residual {residual:.3e} exceeds tolerance {tol:.1e}"
        )


class NotInModelSpaceError(BlaschkeLabError):
    """Input vector is not in the model space it was claimed to be in."""


class NotAConjugationError(BlaschkeLabError):
    """An operator failed the conjugation axioms where they are required."""


class HypothesisFailure(BlaschkeLabError):
    """A structure-theorem hypothesis failed; carries the condition name."""

    def __init__(self, condition, residual=None, report=None):
        self.condition = condition
        self.residual = residual
        self.report = report
        msg = f"hypothesis failed: {condition}"
        if residual is not None:
            msg += f" (residual {residual:.3e})"
        super().__init__(msg)


class StructureViolation(BlaschkeLabError):
    """A symbol has a coefficient outside the support a theorem allows."""

    def __init__(self, symbol_name, index, value):
        self.symbol_name = symbol_name
        self.index = index
        self.value = value
        super().__init__(
            f"{symbol_name} has unexpected coefficient {value!r} at index {index}"
        )


class RelationViolation(BlaschkeLabError):
    """A conjugation does not satisfy the commutation/intertwining relation."""


class WrongDegreeError(BlaschkeLabError):
    """Operation requires a Blaschke product of a specific degree."""


class GeneratorExhaustion(BlaschkeLabError):
    """A rejection sampler failed too many times; indicates a generator bug."""
