"""Exception types raised across the package.

Every witness-carrying error stores the offending indices as attributes so
callers (and the CLI) can report exactly which element or triple broke an
axiom.
"""

from __future__ import annotations


class TwistcommError(Exception):
    """Base class for all errors raised by this package."""


class NotAssociative(TwistcommError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"table is not associative at triple (a,b,c)=({a},{b},{c})")


class NoIdentityAtZero(TwistcommError):
    def __init__(self, a: int):
        self.witness = a
        super().__init__(f"index 0 is not a two-sided identity (fails at element {a})")


class MissingInverse(TwistcommError):
    def __init__(self, a: int):
        self.witness = a
        super().__init__(f"element {a} has no two-sided inverse")


class SizeCapExceeded(TwistcommError):
    def __init__(self, size: int, cap: int, what: str = "group"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class NotHomomorphism(TwistcommError):
    def __init__(self, a: int, b: int):
        self.witness = (a, b)
        super().__init__(f"map is not a homomorphism: fails at pair (a,b)=({a},{b})")


class DomainMismatch(TwistcommError):
    pass


class SearchBudgetExceeded(TwistcommError):
    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"search space of size {size} exceeds budget {budget}")


class NotAutomorphism(TwistcommError):
    def __init__(self, b: int):
        self.witness = b
        super().__init__(f"action table row {b} is not an automorphism")


class NotFunctorial(TwistcommError):
    def __init__(self, b: int, b2: int):
        self.witness = (b, b2)
        super().__init__(f"action table is not functorial at pair ({b},{b2})")


class IdentityNotFixed(TwistcommError):
    def __init__(self):
        super().__init__("action table row 0 is not the identity permutation")


class ConjugateEscapesKernel(TwistcommError):
    def __init__(self, b: int, x: int):
        self.witness = (b, x)
        super().__init__(
            f"conjugate of kernel element {x} by section image of {b} "
            "is outside the kernel; the extension data is invalid"
        )


class CospanNotExtremallyEpic(TwistcommError):
    def __init__(self):
        super().__init__("cospan images do not jointly generate the codomain")


class NotNormal(TwistcommError):
    def __init__(self, g: int, s: int):
        self.witness = (g, s)
        super().__init__(f"subgroup is not normal: conjugate of {s} by {g} escapes")


class NotSurjective(TwistcommError):
    pass


class NotInjective(TwistcommError):
    pass


class InternalCrossCheckFailure(TwistcommError):
    """Two algorithms that must agree disagreed.  Always a bug, never data."""


class PcmFails(TwistcommError):
    def __init__(self):
        super().__init__("candidate does not satisfy the precrossed-module condition")


class DuplicateName(TwistcommError):
    def __init__(self, kind: str, name: str):
        super().__init__(f"duplicate {kind} name {name!r}")


class WorkspaceSyntaxError(TwistcommError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class WorkspaceValidationError(TwistcommError):
    def __init__(self, line: int, cause: Exception):
        self.line = line
        self.cause = cause
        super().__init__(f"line {line}: {cause}")
