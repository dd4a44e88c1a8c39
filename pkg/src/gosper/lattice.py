"""Exact arithmetic on the triangular lattice Z[w], w = exp(i*pi/3).

Everything geometric in this package lives on this lattice.  A point is
a + b*w with integer a, b and the reduction rule w**2 = w - 1, so that
multiplication by w is rotation by pi/3.  Python integers are arbitrary
precision, hence all operations are exact.

The honeycomb structure is read off residues mod 3: color class 0 points
are hexagon centers, classes 1 and 2 are the two alternating vertex
families of the hexagons.  Class 1 is the family W carrying all curve
endpoints.

The two mirror 7-fold substitutions scale by the conjugate factors of
norm 7: 2 + w for chirality '+' and 3 - w for chirality '-'.  Which
mirror image gets which sign is a convention; this one makes the
coverings of a '+' tile carry the base turn sequence (+1,+2,-1,-2,0,-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

Chirality = Literal["+", "-"]


@dataclass(frozen=True)
class Eisenstein:
    """Lattice point a + b*w, w = exp(i*pi/3), with w*w = w - 1."""

    a: int
    b: int

    def __add__(self, other: "Eisenstein") -> "Eisenstein":
        return Eisenstein(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Eisenstein") -> "Eisenstein":
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other: "Eisenstein") -> "Eisenstein":
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c + b * d)

    def conj(self) -> "Eisenstein":
        return Eisenstein(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    def rot(self, k: int) -> "Eisenstein":
        """Rotate by k * pi/3 about the origin."""
        return self * OMEGA[k % 6]

    def key(self) -> tuple[int, int]:
        """Lexicographic sort key; the canonical order used everywhere."""
        return (self.a, self.b)

    def embed(self) -> tuple[float, float]:
        """Real coordinates (only for rendering; exact code never calls this)."""
        return (self.a + self.b / 2.0, self.b * 0.8660254037844386)

    def __repr__(self) -> str:
        return f"Eisenstein({self.a}, {self.b})"


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = (
    Eisenstein(1, 0),
    Eisenstein(0, 1),
    Eisenstein(-1, 1),
    Eisenstein(-1, 0),
    Eisenstein(0, -1),
    Eisenstein(1, -1),
)

#: Offset from a hexagon center to an adjacent center (times a unit).
CENTER_STEP = Eisenstein(1, 1)  # 1 + w, norm 3

#: The 7-fold substitution scale per chirality; conjugates of norm 7.
GAMMA: dict[str, Eisenstein] = {"+": Eisenstein(2, 1), "-": Eisenstein(3, -1)}

#: Digit set for base-gamma decomposition: zero and the six units.
#: A complete residue system mod gamma for either chirality (norm 7).
DIGITS = (ZERO,) + OMEGA


def color_class(z: Eisenstein) -> int:
    """Residue class in {0,1,2}: 0 = hexagon centers, 1 = W vertices, 2 = the rest.

    Ring homomorphism onto Z/3 (w maps to -1), so it is multiplicative and
    translation by a class-0 point preserves classes.
    """
    return (z.a - z.b) % 3


def divides(d: Eisenstein, z: Eisenstein) -> bool:
    n = d.norm()
    if n == 0:
        return z == ZERO
    t = z * d.conj()
    return t.a % n == 0 and t.b % n == 0


def div_exact(z: Eisenstein, d: Eisenstein) -> Eisenstein:
    """Exact quotient z / d; raises ValueError if d does not divide z."""
    n = d.norm()
    if n == 0:
        raise ValueError("division by zero")
    t = z * d.conj()
    if t.a % n or t.b % n:
        raise ValueError(f"{d!r} does not divide {z!r}")
    return Eisenstein(t.a // n, t.b // n)


def split_digit(z: Eisenstein, chirality: Chirality) -> tuple[Eisenstein, Eisenstein]:
    """Decompose z = gamma(chirality) * q + d with d in DIGITS.

    The decomposition is unique because the seven digits form a complete
    residue system mod gamma.  Repeated application terminates: |q| < |z|
    for every nonzero z.
    """
    g = GAMMA[chirality]
    gc = g.conj()
    for d in DIGITS:
        t = (z - d) * gc
        if t.a % 7 == 0 and t.b % 7 == 0:
            return Eisenstein(t.a // 7, t.b // 7), d
    raise AssertionError("digit set is a complete residue system; unreachable")


def product(factors: Iterable[Eisenstein]) -> Eisenstein:
    out = ONE
    for f in factors:
        out = out * f
    return out
