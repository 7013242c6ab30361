"""Exception types raised by c2framed."""


class C2FramedError(Exception):
    """Base class for all errors raised by this package."""


class GradeMismatch(C2FramedError, ValueError):
    """A component kind or manifold is used at a grade where it is not legal."""


class ParseError(C2FramedError, ValueError):
    """A manifold expression could not be parsed."""

    def __init__(self, position: int, expected: str, text: str = ""):
        self.position = position
        self.expected = expected
        self.text = text
        found = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(f"at position {position}: expected {expected}, found {found}")


class StepTooLarge(C2FramedError, ValueError):
    """Consecutive loop samples are too far apart to unwrap reliably."""


class LiftAmbiguous(C2FramedError, ValueError):
    """Both quaternion lifts of a sample are (nearly) equally close to the previous lift."""


class SymmetryViolated(C2FramedError, ValueError):
    """A loop expected to satisfy f(theta + pi) = f(theta) does not."""
