"""Errors raised by the eulerZeta package."""


class EulerZetaError(Exception):
    """Base class for every error the package raises on bad input"""


class ZeroDivisionPolynomial(EulerZetaError, ZeroDivisionError):
    """division by zero polynomial"""

    def __init__(self):
        self.args = ("division by zero polynomial",)


class PoleError(EulerZetaError):
    """Evaluation point is a root of the denominator"""

    def __init__(self, point, multiplicity: int):
        self.point = point
        self.multiplicity = multiplicity
        self.args = (f"pole at t = {point} of multiplicity {multiplicity}",)


class NotExpandableError(EulerZetaError):
    """Denominator vanishes at the origin"""

    def __init__(self):
        self.args = ("not expandable at origin",)


class NotSphericalError(EulerZetaError):
    """Coxeter system or generator subset does not generate a finite group"""

    def __init__(self, detail: str = ""):
        self.args = (f"not spherical{': ' + detail if detail else ''}",)


class ParabolicNotCompact(EulerZetaError):
    """Parabolic subgroup of a non-spherical subset"""

    def __init__(self, subset):
        self.args = (f"parabolic not compact: {sorted(subset)} is not spherical",)


class NotMinimalRepresentative(EulerZetaError):
    """Element is not of minimal length in its double coset"""

    def __init__(self, word):
        self.args = (f"not a minimal representative: {list(word)}",)


class IncommensurableError(EulerZetaError):
    """No declared commensurability path between two subgroups"""

    def __init__(self, first: str, second: str):
        self.args = (f"incommensurable or undeclared pair: {first}, {second}",)


class InconsistentContext(EulerZetaError):
    """Declared indices contradict each other along a cycle"""


class NonUnimodularError(EulerZetaError):
    """Graph of groups has a cycle with index ratio different from 1"""

    def __init__(self, cycle: list[str], ratio):
        self.cycle = cycle
        self.ratio = ratio
        self.args = (f"non-unimodular: cycle {' -> '.join(cycle)} has index ratio {ratio}",)


class DisconnectedGraphError(EulerZetaError):
    """Graph of groups is not connected"""


class NotIdempotentError(EulerZetaError):
    """Matrix does not square to itself"""

    def __init__(self):
        self.args = ("not idempotent",)


class MixedSystemsError(EulerZetaError):
    """Hecke elements belong to different algebras"""

    def __init__(self):
        self.args = ("mixed systems: operands belong to different Hecke algebras",)


class InconsistentIndexTable(EulerZetaError):
    """Index table fails the integrality or power-of-q requirement"""


class NotAffineError(EulerZetaError):
    """System has no recognizable spherical part"""


class InvalidInputError(EulerZetaError):
    """Input fails validation"""


class ParseError(EulerZetaError):
    """Malformed input file"""

    def __init__(self, message: str, line: int, source: str = "<input>"):
        self.line = line
        self.source = source
        self.args = (f"{source}:{line}: {message}",)
