"""Tuple taxonomy: decreasing / semi-decreasing / integral classes,
monodromy residues, and Shale-Weil tuples.

All coordinates are exact rationals.  A tuple is decreasing when consecutive
gaps are nonnegative integers (so rho = (n, ..., 1) is decreasing), and
semi-decreasing when it is not decreasing but removing a single coordinate
makes it so.  The monodromy of a semi-decreasing tuple is the residue
(t - lambda_1) mod 1 where t is the removed coordinate and lambda_1 the
first coordinate of the decreasing remainder; it lives in Q/Z and is stored
as a reduced fraction in [0, 1).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotSemiDecreasing, TupleTooShort


def as_tuple(entries):
    return tuple(Fraction(x) for x in entries)


def rho(n):
    """(n, n-1, ..., 1)."""
    return tuple(Fraction(k) for k in range(n, 0, -1))


def mu0(n):
    """The minimal positive Shale-Weil tuple (n - 1/2, ..., 3/2, 1/2)."""
    return tuple(Fraction(2 * k - 1, 2) for k in range(n, 0, -1))


def _is_decreasing(t):
    return all(
        (t[i] - t[i + 1]).denominator == 1 and t[i] >= t[i + 1]
        for i in range(len(t) - 1)
    )


def _is_integral(t):
    return all((t[i] - t[0]).denominator == 1 for i in range(1, len(t)))


class TupleClass:
    """Result of classify_tuple."""

    __slots__ = ("kind", "removable_indices", "integral", "semi_integral", "regular")

    def __init__(self, kind, removable_indices, integral, semi_integral, regular):
        self.kind = kind  # "Decreasing" | "SemiDecreasing" | "Neither"
        self.removable_indices = frozenset(removable_indices)
        self.integral = integral
        self.semi_integral = semi_integral
        self.regular = regular

    @property
    def semi_decreasing(self):
        return self.kind == "SemiDecreasing"

    def __repr__(self):
        return (
            "TupleClass(%s, removable=%s, integral=%s, semi_integral=%s, "
            "regular=%s)"
            % (
                self.kind,
                sorted(self.removable_indices),
                self.integral,
                self.semi_integral,
                self.regular,
            )
        )


def classify_tuple(entries) -> TupleClass:
    t = as_tuple(entries)
    integral = _is_integral(t)
    semi_integral = False
    if not integral:
        for r in range(len(t)):
            if _is_integral(t[:r] + t[r + 1 :]):
                semi_integral = True
                break
    regular = len(set(t)) == len(t)
    if _is_decreasing(t):
        return TupleClass("Decreasing", (), integral, semi_integral, regular)
    removable = [
        r for r in range(len(t)) if _is_decreasing(t[:r] + t[r + 1 :])
    ]
    if removable:
        return TupleClass(
            "SemiDecreasing", removable, integral, semi_integral, regular
        )
    return TupleClass("Neither", (), integral, semi_integral, regular)


class MonodromyClass:
    """A residue in Q/Z (multiplicative: e^{2 pi i residue}), or a generic tag."""

    __slots__ = ("residue", "tag")

    def __init__(self, residue=None, tag=None):
        if (residue is None) == (tag is None):
            raise ValueError("exactly one of residue/tag required")
        self.residue = None if residue is None else Fraction(residue) % 1
        self.tag = tag

    @classmethod
    def generic(cls, tag="generic"):
        return cls(tag=tag)

    @property
    def is_generic(self):
        return self.tag is not None

    def __eq__(self, other):
        return (
            isinstance(other, MonodromyClass)
            and self.residue == other.residue
            and self.tag == other.tag
        )

    def __hash__(self):
        return hash((self.residue, self.tag))

    def __repr__(self):
        if self.is_generic:
            return "MonodromyClass.generic(%r)" % (self.tag,)
        return "MonodromyClass(%r)" % (str(self.residue),)

    def __str__(self):
        return "generic(%s)" % self.tag if self.is_generic else str(self.residue)


def removal_residues(entries):
    """Residue (t - lambda_1) mod 1 for every removable index; used to check
    that the monodromy does not depend on the removal choice."""
    t = as_tuple(entries)
    cls = classify_tuple(t)
    out = set()
    for r in cls.removable_indices:
        rest = t[:r] + t[r + 1 :]
        out.add((t[r] - rest[0]) % 1)
    return out


def monodromy(entries) -> MonodromyClass:
    t = as_tuple(entries)
    if len(t) < 3:
        raise TupleTooShort("monodromy needs at least 3 coordinates")
    cls = classify_tuple(t)
    if not cls.semi_decreasing:
        raise NotSemiDecreasing("tuple %r is not semi-decreasing" % (entries,))
    if cls.integral:
        return MonodromyClass(0)
    r = min(cls.removable_indices)
    rest = t[:r] + t[r + 1 :]
    return MonodromyClass((t[r] - rest[0]) % 1)


def is_shale_weil(entries) -> bool:
    """Strictly descending half-integers with mu_{n-1} > |mu_n|."""
    t = as_tuple(entries)
    if not t:
        return False
    if any((2 * x).denominator != 1 or x.denominator != 2 for x in t):
        return False
    if any(t[i] <= t[i + 1] for i in range(len(t) - 2)):
        return False
    if len(t) >= 2 and t[-2] <= abs(t[-1]):
        return False
    return True


def is_positive_sw(entries) -> bool:
    t = as_tuple(entries)
    return is_shale_weil(t) and t[-1] > 0


def sigma(entries):
    t = as_tuple(entries)
    return t[:-1] + (-t[-1],)
