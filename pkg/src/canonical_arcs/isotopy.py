"""Isotopy classes of arc pairs as coprime slopes r/s.

A class (r, s) selects the primitive period ``omega1 = r*omega1_0 + s*omega2_0``
of the labelled basis; the sign convention is s >= 0, with r = 1 when s = 0.
"""

import enum
import math
from dataclasses import dataclass

from .errors import InvalidInput, NotPrimitive


class Pairing(enum.Enum):
    P01_23 = "01|23"
    P02_13 = "02|13"
    P03_12 = "03|12"

    def __str__(self):
        return self.value

    @property
    def pairs(self):
        """The two index pairs, e.g. ((0, 1), (2, 3))."""
        a, b = self.value.split("|")
        return (int(a[0]), int(a[1])), (int(b[0]), int(b[1]))

    @classmethod
    def parse(cls, text):
        t = text.strip().replace("-", "|").replace("/", "|")
        for p in cls:
            if p.value == t or p.value.replace("|", "") == t:
                return p
        raise InvalidInput(f"unknown pairing {text!r}; expected one of 01|23, 02|13, 03|12")


@dataclass(frozen=True, order=True)
class IsotopyClass:
    r: int
    s: int

    def __post_init__(self):
        if math.gcd(self.r, self.s) != 1:
            raise NotPrimitive(f"({self.r}, {self.s}) is not a primitive vector")
        if self.s < 0 or (self.s == 0 and self.r != 1):
            raise InvalidInput(f"({self.r}, {self.s}) is not in canonical sign form; use canonical_class")

    def __str__(self):
        return f"{self.r}/{self.s}"

    @property
    def height(self):
        return max(abs(self.r), abs(self.s))


def canonical_class(r, s):
    """Canonical representative of the slope of (r, s); rejects non-primitive input."""
    r, s = int(r), int(s)
    if r == 0 and s == 0:
        raise InvalidInput("(0, 0) does not define a slope")
    if math.gcd(r, s) != 1:
        raise NotPrimitive(f"gcd({r}, {s}) = {math.gcd(r, s)}; primitive vectors only")
    if s < 0 or (s == 0 and r < 0):
        r, s = -r, -s
    return IsotopyClass(r, s)


def parse_class(text):
    """Parse ``r/s`` (or ``r,s``) into a canonical class."""
    t = text.strip().replace(",", "/")
    try:
        r, s = (int(x) for x in t.split("/"))
    except ValueError:
        raise InvalidInput(f"cannot parse class {text!r}; expected r/s") from None
    return canonical_class(r, s)


def class_pairing(cls):
    """Pairing of marked points induced by the parity of (r, s)."""
    return {
        (1, 0): Pairing.P01_23,
        (0, 1): Pairing.P02_13,
        (1, 1): Pairing.P03_12,
    }[(cls.r % 2, cls.s % 2)]


def _ext_euclid(a, b):
    # returns (g, x, y) with a*x + b*y = g
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def companion_coefficients(cls, basis):
    """Integers (p, q) with r*q - s*p = 1 such that p*omega1_0 + q*omega2_0
    is a shortest completion of omega1 to a positively oriented basis."""
    r, s = cls.r, cls.s
    g, x, y = _ext_euclid(r, -s)
    # r*x - s*y = g = +-1
    q, p = x * g, y * g
    assert r * q - s * p == 1
    om1 = r * basis.omega1_0 + s * basis.omega2_0
    om2 = p * basis.omega1_0 + q * basis.omega2_0
    n0 = -round((om2 * om1.conjugate()).real / abs(om1) ** 2)
    cands = []
    for n in (n0 - 1, n0, n0 + 1):
        v = om2 + n * om1
        cands.append((abs(v), -((v / om1).real >= 0), n))
    best = min(abs(v) for v, _, _ in cands)
    ties = [c for c in cands if c[0] <= best * (1 + 1e-12)]
    _, _, n = min(ties, key=lambda c: (c[1], c[2]))
    return p + n * r, q + n * s


def companion_period(cls, basis):
    p, q = companion_coefficients(cls, basis)
    return p * basis.omega1_0 + q * basis.omega2_0


def enumerate_classes(max_height):
    """All canonical classes with |r| <= H and 0 <= s <= H, sorted by (s, r)."""
    if max_height < 1:
        raise InvalidInput("max height must be at least 1")
    out = [IsotopyClass(1, 0)]
    for s in range(1, max_height + 1):
        for r in range(-max_height, max_height + 1):
            if math.gcd(r, s) == 1:
                out.append(IsotopyClass(r, s))
    return out
