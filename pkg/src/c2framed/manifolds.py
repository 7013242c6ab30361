"""Framed one-dimensional C2-manifolds as a free commutative monoid on generators.

A framed manifold is stored as a grade plus a multiset of components.  Each
component is one of the four connected generators together with the integer
twist that selects its framing relative to a fixed reference framing.

Twists are plain Python ints, so they are unbounded and never wrap.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import GradeMismatch
from .grading import FramingGrade


class ComponentKind(enum.IntEnum):
    # Values fix the canonical sort order.
    TRIVIAL_CIRCLE = 0     # S^1 with trivial action
    FREE_DOUBLE_CIRCLE = 1  # C2 x S^1
    ANTIPODAL_CIRCLE = 2    # S(2 sigma)
    REFLECTION_CIRCLE = 3   # S(1 + sigma)

    @property
    def token(self) -> str:
        return _TOKENS[self]

    @classmethod
    def from_token(cls, token: str) -> ComponentKind:
        for kind, name in _TOKENS.items():
            if name == token:
                return kind
        raise ValueError(f"unknown generator {token!r}")

    @property
    def is_free(self) -> bool:
        """True when C2 acts freely on the underlying circle(s)."""
        return self in (ComponentKind.FREE_DOUBLE_CIRCLE, ComponentKind.ANTIPODAL_CIRCLE)


_TOKENS = {
    ComponentKind.TRIVIAL_CIRCLE: "S1",
    ComponentKind.FREE_DOUBLE_CIRCLE: "C2xS1",
    ComponentKind.ANTIPODAL_CIRCLE: "S2s",
    ComponentKind.REFLECTION_CIRCLE: "S1s",
}

LEGAL_KINDS = {
    FramingGrade.TRIVIAL_R: frozenset(
        {ComponentKind.TRIVIAL_CIRCLE, ComponentKind.FREE_DOUBLE_CIRCLE, ComponentKind.ANTIPODAL_CIRCLE}
    ),
    FramingGrade.SIGN_SIGMA: frozenset(
        {ComponentKind.FREE_DOUBLE_CIRCLE, ComponentKind.REFLECTION_CIRCLE}
    ),
}


def is_legal(kind: ComponentKind, grade: FramingGrade) -> bool:
    return kind in LEGAL_KINDS[grade]


@dataclass(frozen=True, order=True)
class FramedComponent:
    """One connected generator with its framing twist.

    The twist is the degree of the map to SO(2) for ``S1`` and ``C2xS1``,
    the ``n`` of the degree ``2n`` equivariant map for ``S2s``, and the
    ``n`` of the degree ``n`` equivariant map for ``S1s``.
    """

    kind: ComponentKind
    twist: int

    def __post_init__(self):
        if not isinstance(self.twist, int) or isinstance(self.twist, bool):
            raise TypeError(f"twist must be an int, got {type(self.twist).__name__}")
        object.__setattr__(self, "kind", ComponentKind(self.kind))

    def __str__(self) -> str:
        return f"{self.kind.token}[{self.twist}]"


def make_component(kind: ComponentKind, twist: int, grade: FramingGrade) -> FramedComponent:
    if not is_legal(kind, grade):
        raise GradeMismatch(f"{ComponentKind(kind).token} admits no {grade}-framing")
    return FramedComponent(kind, twist)


@dataclass(frozen=True, eq=False)
class FramedManifold:
    """A finite disjoint union of framed components, all of one grade.

    Equality and hashing are structural: two manifolds are equal iff they
    have the same grade and the same component multiset.  Cobordance is a
    different, coarser relation (see :func:`c2framed.ptmap.is_cobordant`).
    """

    grade: FramingGrade
    components: tuple[FramedComponent, ...] = ()

    def __post_init__(self):
        comps = tuple(self.components)
        for c in comps:
            if not is_legal(c.kind, self.grade):
                raise GradeMismatch(f"{c.kind.token} is not legal at grade {self.grade}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def empty(cls, grade: FramingGrade) -> FramedManifold:
        return cls(grade, ())

    @classmethod
    def of(cls, grade: FramingGrade, *pairs: tuple[ComponentKind, int]) -> FramedManifold:
        return cls(grade, tuple(make_component(k, n, grade) for k, n in pairs))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FramedManifold):
            return NotImplemented
        return self.grade is other.grade and sorted(self.components) == sorted(other.components)

    def __hash__(self) -> int:
        return hash((self.grade, tuple(sorted(self.components))))

    def __or__(self, other: FramedManifold) -> FramedManifold:
        return disjoint_union(self, other)

    def multiplicities(self) -> Counter:
        return Counter(self.components)

    def __str__(self) -> str:
        body = " + ".join(str(c) for c in self.components) or "empty"
        return f"{body} ({self.grade}-framed)"


def disjoint_union(m: FramedManifold, n: FramedManifold) -> FramedManifold:
    if m.grade is not n.grade:
        raise GradeMismatch(f"cannot take disjoint union of {m.grade}- and {n.grade}-framed manifolds")
    return FramedManifold(m.grade, m.components + n.components)


def union_all(grade: FramingGrade, manifolds: Iterable[FramedManifold]) -> FramedManifold:
    result = FramedManifold.empty(grade)
    for m in manifolds:
        result = disjoint_union(result, m)
    return result


def normalize(m: FramedManifold) -> FramedManifold:
    """Sort components by kind, then by twist."""
    return FramedManifold(m.grade, tuple(sorted(m.components)))
