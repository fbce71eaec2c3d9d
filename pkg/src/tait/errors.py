"""Exception hierarchy shared by every kernel.

Each class carries the CLI exit code it maps to, so the driver never has to
know which calculus raised it.
"""

from __future__ import annotations


class KernelError(Exception):
    exit_code = 5
    kind = "internal"


class TypingError(KernelError):
    exit_code = 3
    kind = "type"


class UnboundVariable(TypingError):
    def __init__(self, index: int, sort: str = "term"):
        super().__init__(f"unbound {sort} variable with index {index}")
        self.index = index
        self.sort = sort


class NotAFunction(TypingError):
    def __init__(self, actual):
        super().__init__(f"expected a function, got something of type {actual}")
        self.actual = actual


class NotAProduct(TypingError):
    def __init__(self, actual):
        super().__init__(f"expected a pair, got something of type {actual}")
        self.actual = actual


class ArgumentMismatch(TypingError):
    def __init__(self, expected, actual):
        super().__init__(f"argument mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class TypeMismatch(TypingError):
    def __init__(self, left, right):
        super().__init__(f"the two sides have different types: {left} and {right}")
        self.left = left
        self.right = right


class NotClosed(TypingError):
    def __init__(self):
        super().__init__("term has free variables")


class NotAns(TypingError):
    def __init__(self, actual):
        super().__init__(f"expected a term of type Ans, got {actual}")
        self.actual = actual


class IndexOutOfRange(KernelError):
    def __init__(self, index: int, size: int):
        super().__init__(f"index {index} out of range for a context of length {size}")
        self.index = index
        self.size = size


class LevelOutOfRange(KernelError):
    def __init__(self, level: int, depth: int):
        super().__init__(f"level {level} out of range at depth {depth}")
        self.level = level
        self.depth = depth


class FuelExhausted(KernelError):
    exit_code = 4
    kind = "fuel"

    def __init__(self, steps_taken: int):
        super().__init__(f"fuel exhausted after {steps_taken} steps")
        self.steps_taken = steps_taken


class InternalInvariantViolation(KernelError):
    """A semantic operation met a value of the wrong shape.

    On well-typed input this never happens; seeing it means a checker upstream
    let something through.
    """


class SizeOverflow(KernelError):
    def __init__(self, size: int, bound: int):
        super().__init__(f"set of size {size} exceeds the bound {bound}")
        self.size = size
        self.bound = bound
