"""Target groups of the Pontryagin-Thom map.

``Pi1Element`` lives in the R-graded 1-stem, identified with (Z/2)^3 via the
tom Dieck splitting with coordinates ordered as

    (pi_1(S), H_0(BC2; Z/2), H_1(BC2; Z)).

``PiSigmaElement`` lives in the sigma-graded stem, which is Z generated by
the equivariant Hopf map.  ``Omega0Element`` is a class in omega_0 = Z, the
target of the fixed-point map.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Summand(enum.Enum):
    PI1_SPHERE = "pi1"
    H0 = "h0"
    H1 = "h1"


@dataclass(frozen=True)
class Pi1Element:
    pi1_sphere: int = 0
    h0_bc2: int = 0
    h1_bc2: int = 0

    def __post_init__(self):
        for v in (self.pi1_sphere, self.h0_bc2, self.h1_bc2):
            if v not in (0, 1):
                raise ValueError(f"Z/2 coordinates must be 0 or 1, got {v!r}")

    @classmethod
    def reduce(cls, pi1_sphere: int, h0_bc2: int, h1_bc2: int) -> Pi1Element:
        """Build an element from arbitrary integers, reducing each mod 2."""
        return cls(pi1_sphere % 2, h0_bc2 % 2, h1_bc2 % 2)

    @classmethod
    def zero(cls) -> Pi1Element:
        return cls()

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.pi1_sphere, self.h0_bc2, self.h1_bc2)

    def __add__(self, other: Pi1Element) -> Pi1Element:
        if not isinstance(other, Pi1Element):
            return NotImplemented
        return Pi1Element(*(a ^ b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __neg__(self) -> Pi1Element:
        return self

    def __sub__(self, other: Pi1Element) -> Pi1Element:
        return self + (-other)

    def to_json(self) -> dict:
        return {"pi1": self.pi1_sphere, "h0": self.h0_bc2, "h1": self.h1_bc2}

    def __str__(self) -> str:
        return f"pi1={self.pi1_sphere} h0={self.h0_bc2} h1={self.h1_bc2}"


@dataclass(frozen=True)
class _IntegerClass:
    value: int = 0

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise TypeError(f"value must be an int, got {type(self.value).__name__}")

    @classmethod
    def zero(cls):
        return cls(0)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.value + other.value)

    def __neg__(self):
        return type(self)(-self.value)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return type(self)(self.value * k)

    __rmul__ = __mul__

    def to_json(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


class PiSigmaElement(_IntegerClass):
    """Multiple of the equivariant Hopf class."""


class Omega0Element(_IntegerClass):
    """Signed count of framed points."""


StemElement = Pi1Element | PiSigmaElement | Omega0Element


def add(a: StemElement, b: StemElement) -> StemElement:
    if type(a) is not type(b):
        raise TypeError(f"cannot add {type(a).__name__} and {type(b).__name__}")
    return a + b


def tom_dieck_project(a: Pi1Element, summand: Summand) -> int:
    if summand is Summand.PI1_SPHERE:
        return a.pi1_sphere
    if summand is Summand.H0:
        return a.h0_bc2
    return a.h1_bc2
