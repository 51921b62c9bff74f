"""Domain types for signed permutations and interval-search instances.

Conventions used throughout the package:

- Elements are the integers 1..n.  A signed permutation stores its values
  (unsigned, a bijection of 1..n) and a per-element sign.
- An instance holds K permutations whose first permutation is the identity
  with all signs positive; `renumber` normalizes arbitrary input to that
  form.
- An interval (t..x) with 1 <= t < x <= n is the set {t, t+1, ..., x}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple, Sequence


class ValidationError(Exception):
    """Raw input does not form a usable problem instance."""


class DuplicateElement(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class ConservedEndpointViolation(ValidationError):
    """A conserved-class instance must start with +1 and end with +n."""


class IntervalClass(Enum):
    COMMON = "common"
    NESTED = "nested"
    CONSERVED = "conserved"
    IRREDUCIBLE_COMMON = "irreducible-common"
    SAME_SIGN_COMMON = "same-sign-common"
    MAXIMAL_NESTED = "maximal-nested"
    IRREDUCIBLE_CONSERVED = "irreducible-conserved"


# Classes whose delimiting conditions involve signs of neighbouring elements.
CONSERVED_CLASSES = frozenset(
    {IntervalClass.CONSERVED, IntervalClass.IRREDUCIBLE_CONSERVED}
)


class Interval(NamedTuple):
    """Closed interval of consecutive integers, identified by its endpoints."""

    t: int
    x: int


@dataclass(frozen=True)
class SignedPermutation:
    """Unsigned values plus per-element signs and the inverse permutation.

    `values[i]` is the element at 1-based position i+1.  `positive[e-1]` is
    True when element e carries a positive sign.  `inverse[e-1]` is the
    1-based position of element e.
    """

    values: tuple[int, ...]
    positive: tuple[bool, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_signed(cls, seq: Iterable[int]) -> "SignedPermutation":
        raw = tuple(seq)
        n = len(raw)
        values = []
        positive = [True] * n
        for v in raw:
            e = abs(v)
            if e < 1 or e > n:
                raise OutOfRange(f"element {v} outside 1..{n}")
            values.append(e)
            positive[e - 1] = v > 0
        inverse = [0] * n
        for i, e in enumerate(values):
            if inverse[e - 1]:
                raise DuplicateElement(f"element {e} appears twice")
            inverse[e - 1] = i + 1
        return cls(tuple(values), tuple(positive), tuple(inverse))

    @property
    def n(self) -> int:
        return len(self.values)

    def position(self, e: int) -> int:
        return self.inverse[e - 1]

    def sign(self, e: int) -> int:
        return 1 if self.positive[e - 1] else -1

    def to_signed(self) -> tuple[int, ...]:
        return tuple(v if self.positive[v - 1] else -v for v in self.values)

    def is_positive_identity(self) -> bool:
        return self.values == tuple(range(1, self.n + 1)) and all(self.positive)


@dataclass
class ProblemInstance:
    """K signed permutations over 1..n, the first being the identity."""

    permutations: tuple[SignedPermutation, ...]
    _checked: set = field(default_factory=set, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.permutations[0].n

    @property
    def k(self) -> int:
        return len(self.permutations)

    def ensure_class(self, interval_class: IntervalClass) -> None:
        """Check class preconditions once, caching the verdict."""
        if interval_class in self._checked:
            return
        if interval_class in CONSERVED_CLASSES:
            n = self.n
            for idx, p in enumerate(self.permutations):
                first, last = p.values[0], p.values[-1]
                if first != 1 or not p.positive[0]:
                    raise ConservedEndpointViolation(
                        f"permutation {idx + 1} does not start with +1"
                    )
                if last != n or not p.positive[n - 1]:
                    raise ConservedEndpointViolation(
                        f"permutation {idx + 1} does not end with +{n}"
                    )
        self._checked.add(interval_class)


def renumber(perms: Sequence[SignedPermutation]) -> ProblemInstance:
    """Relabel elements so the first permutation becomes the positive identity.

    Element e maps to its position in the first permutation.  Signs propagate
    multiplicatively: the new sign of an element in permutation k is the
    product of its old sign there and its old sign in the first permutation.
    """
    p1 = perms[0]
    n = p1.n
    rho = p1.inverse
    out = []
    for p in perms:
        values = tuple(rho[e - 1] for e in p.values)
        positive = [True] * n
        for e in range(1, n + 1):
            positive[rho[e - 1] - 1] = p.positive[e - 1] == p1.positive[e - 1]
        inverse = [0] * n
        for i, e in enumerate(values):
            inverse[e - 1] = i + 1
        out.append(SignedPermutation(values, tuple(positive), tuple(inverse)))
    return ProblemInstance(tuple(out))


def validate(
    raw_perms: Sequence[Iterable[int]], interval_class: IntervalClass
) -> ProblemInstance:
    """Build a normalized instance from raw signed sequences.

    Checks that every sequence is a signed permutation of 1..n, that all
    lengths agree, renumbers so the first permutation is the positive
    identity, and verifies the class preconditions on the result.
    """
    perms = []
    n = None
    for idx, raw in enumerate(raw_perms):
        p = SignedPermutation.from_signed(raw)
        if n is None:
            n = p.n
        elif p.n != n:
            raise LengthMismatch(
                f"permutation {idx + 1} has length {p.n}, expected {n}"
            )
        perms.append(p)
    if not perms or n == 0:
        raise LengthMismatch("instance needs at least one nonempty permutation")
    instance = renumber(perms)
    instance.ensure_class(interval_class)
    return instance
