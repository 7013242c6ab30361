"""The two C2-representations that grade framings: trivial R and sign sigma."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class FramingGrade(enum.Enum):
    TRIVIAL_R = "R"
    SIGN_SIGMA = "sigma"

    @classmethod
    def parse(cls, text: str) -> FramingGrade:
        for grade in cls:
            if grade.value == text:
                return grade
        raise ValueError(f"unknown grade {text!r}; expected 'R' or 'sigma'")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ReprDims:
    """Dimensions of the representation n + k*sigma."""

    trivial_copies: int
    sign_copies: int

    def __post_init__(self):
        if self.trivial_copies < 0 or self.sign_copies < 0:
            raise ValueError("representation multiplicities must be non-negative")

    @property
    def total(self) -> int:
        return self.trivial_copies + self.sign_copies

    @property
    def fixed(self) -> int:
        """Dimension of the C2-fixed subspace."""
        return self.trivial_copies

    def __str__(self) -> str:
        parts = []
        if self.trivial_copies:
            parts.append(str(self.trivial_copies))
        if self.sign_copies:
            parts.append("sigma" if self.sign_copies == 1 else f"{self.sign_copies}sigma")
        return "+".join(parts) or "0"


def dims_of(grade: FramingGrade) -> ReprDims:
    if grade is FramingGrade.TRIVIAL_R:
        return ReprDims(1, 0)
    return ReprDims(0, 1)
