"""Exact arithmetic in the dihedral groups D_2n, the infinite group of
matrices ``(±1, a; 0, 1)`` and its bounded subset ``|a| < n``.

An element is stored as the pair ``(sign, shift)`` standing for the matrix
``[[sign, shift], [0, 1]]``. Multiplication is matrix multiplication::

    (s1, a1) * (s2, a2) = (s1 * s2, a1 + s1 * a2)

so ``r = (+1, 1)`` and ``s = (-1, 0)``. Elements carry no context of their
own; every operation takes a :class:`GroupContext` deciding how shifts are
reduced or range-checked.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import OutOfRange, ParseError

MAX_N = 2**31


class DihedralElement(NamedTuple):
    sign: int
    shift: int

    @property
    def is_reflection(self) -> bool:
        return self.sign < 0

    @property
    def is_rotation(self) -> bool:
        return self.sign > 0

    def __str__(self) -> str:
        return format_element(self)


IDENTITY = DihedralElement(1, 0)
R = DihedralElement(1, 1)
S = DihedralElement(-1, 0)


class Kind(enum.Enum):
    MOD = "D2n"          # D_2n, shifts reduced to [0, n)
    BOUNDED = "Dlt"      # subset of the infinite group with |shift| < n
    INFINITE = "Dinf"    # the infinite group itself
    CYCLIC = "Zn"        # rotation subgroup <r> of D_2n, i.e. Z_n


@dataclass(frozen=True)
class GroupContext:
    kind: Kind
    n: int = 0

    def __post_init__(self):
        if self.kind is not Kind.INFINITE:
            if not 2 <= self.n <= MAX_N:
                raise ValueError(f"n must lie in [2, {MAX_N}], got {self.n}")

    @classmethod
    def mod(cls, n: int) -> "GroupContext":
        return cls(Kind.MOD, n)

    @classmethod
    def bounded(cls, n: int) -> "GroupContext":
        return cls(Kind.BOUNDED, n)

    @classmethod
    def cyclic(cls, n: int) -> "GroupContext":
        return cls(Kind.CYCLIC, n)

    @classmethod
    def infinite(cls) -> "GroupContext":
        return cls(Kind.INFINITE, 0)

    @property
    def is_finite(self) -> bool:
        return self.kind is not Kind.INFINITE

    def __str__(self) -> str:
        if self.kind is Kind.INFINITE:
            return "Dinf"
        return f"{self.kind.value}:{self.n}"

    def normalize(self, x: DihedralElement) -> DihedralElement:
        """Bring ``x`` into canonical form, raising if it cannot belong here."""
        sign, shift = x
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if self.kind is Kind.MOD:
            return DihedralElement(sign, shift % self.n)
        if self.kind is Kind.CYCLIC:
            if sign != 1:
                raise ValueError("the rotation subgroup has no reflections")
            return DihedralElement(1, shift % self.n)
        if self.kind is Kind.BOUNDED and abs(shift) >= self.n:
            raise OutOfRange(f"|{shift}| >= {self.n}")
        return DihedralElement(sign, shift)

    def contains(self, x: DihedralElement) -> bool:
        sign, shift = x
        if sign not in (1, -1):
            return False
        if self.kind is Kind.MOD:
            return 0 <= shift < self.n
        if self.kind is Kind.CYCLIC:
            return sign == 1 and 0 <= shift < self.n
        if self.kind is Kind.BOUNDED:
            return abs(shift) < self.n
        return True

    def elements(self, include_identity: bool = True) -> list[DihedralElement]:
        """All elements in search order: rotations by ascending shift, then
        reflections by ascending shift."""
        if self.kind is Kind.INFINITE:
            raise ValueError("the infinite group cannot be enumerated")
        if self.kind is Kind.BOUNDED:
            shifts = range(-(self.n - 1), self.n)
        else:
            shifts = range(self.n)
        out = [DihedralElement(1, a) for a in shifts]
        if self.kind is not Kind.CYCLIC:
            out += [DihedralElement(-1, a) for a in shifts]
        if not include_identity:
            out.remove(IDENTITY)
        return out

    def reflections(self) -> list[DihedralElement]:
        return [x for x in self.elements() if x.sign < 0]


def multiply(x: DihedralElement, y: DihedralElement, ctx: GroupContext) -> DihedralElement:
    """Matrix product ``x*y``; raises :class:`OutOfRange` when a bounded
    context is left."""
    return ctx.normalize(DihedralElement(x[0] * y[0], x[1] + x[0] * y[1]))


def inverse(x: DihedralElement, ctx: GroupContext) -> DihedralElement:
    return ctx.normalize(DihedralElement(x[0], -x[0] * x[1]))


def product(items, ctx: GroupContext) -> DihedralElement:
    """Left-to-right product; intermediate values are exact integers so a
    bounded context only checks the final result."""
    sign, shift = 1, 0
    for s, a in items:
        sign, shift = sign * s, shift + sign * a
    return ctx.normalize(DihedralElement(sign, shift))


def power(x: DihedralElement, k: int, ctx: GroupContext) -> DihedralElement:
    if x[0] < 0:
        return ctx.normalize(x if k % 2 else IDENTITY)
    return ctx.normalize(DihedralElement(1, x[1] * k))


def project(x: DihedralElement, n: int) -> DihedralElement:
    """The reduction homomorphism onto D_2n."""
    return DihedralElement(x[0], x[1] % n)


def in_commutator_subgroup(x: DihedralElement, ctx: GroupContext) -> bool:
    # [D2n, D2n] = <r^2>; the infinite group's commutator subgroup is the
    # even rotations.
    sign, shift = x
    if sign < 0:
        return False
    if ctx.kind in (Kind.BOUNDED, Kind.INFINITE):
        return shift % 2 == 0
    if ctx.kind is Kind.CYCLIC:
        return shift % ctx.n == 0
    if ctx.n % 2:
        return True
    return shift % 2 == 0


def commutator_subgroup_order(n: int) -> int:
    return n // 2 if n % 2 == 0 else n


def iter_elements(ctx: GroupContext, include_identity: bool = True) -> Iterator[DihedralElement]:
    yield from ctx.elements(include_identity)


_ELEMENT_RE = re.compile(r"^([+-])(-?\d+)$")
_CTX_RE = re.compile(r"^(D2n|Dlt|Zn):(\d+)$")


def parse_element(text: str) -> DihedralElement:
    """Parse ``+a`` / ``-a``: the leading symbol is the sign, the rest the
    shift, e.g. ``-2`` is the reflection ``(-1, 2)`` and ``+-1`` is ``r^-1``."""
    m = _ELEMENT_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad element {text!r}")
    return DihedralElement(1 if m.group(1) == "+" else -1, int(m.group(2)))


def format_element(x: DihedralElement) -> str:
    return f"{'+' if x[0] > 0 else '-'}{x[1]}"


def parse_context(text: str) -> GroupContext:
    m = _CTX_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad group context {text!r} (expected D2n:n, Dlt:n or Zn:n)")
    n = int(m.group(2))
    if not 2 <= n <= MAX_N:
        raise ParseError(f"n={n} outside [2, {MAX_N}]")
    return GroupContext(Kind(m.group(1)), n)
