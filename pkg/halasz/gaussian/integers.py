"""Gaussian integers and canonical ideal generators"""
import math
from dataclasses import dataclass

from exceptions import InvalidArgument

HALF_PI = math.pi / 2


@dataclass(frozen=True)
class GaussInt:
    """
    The Gaussian integer re + im*i
    """

    re: int
    im: int

    def __mul__(self, other):
        other = as_gauss(other)
        return GaussInt(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    @property
    def norm(self):
        return self.re * self.re + self.im * self.im

    def conjugate(self):
        return GaussInt(self.re, -self.im)


@dataclass(frozen=True, order=True)
class CanonicalGenerator:
    """
    The unique first-quadrant generator of a nonzero ideal

    re >= 1 and im >= 0, i.e. 0 <= arg < pi/2. Serves as the ideal key everywhere.
    """

    re: int
    im: int

    def __post_init__(self):
        if self.re < 1 or self.im < 0:
            raise InvalidArgument(f"Not a canonical generator: ({self.re}, {self.im})")

    def __str__(self):
        if self.im == 0:
            return f"({self.re})"
        return f"({self.re}+{self.im}i)"

    @property
    def norm(self):
        return self.re * self.re + self.im * self.im

    @property
    def arg(self):
        return ideal_arg(self)

    def as_gauss(self):
        return GaussInt(self.re, self.im)


UNIT_IDEAL = CanonicalGenerator(1, 0)


def as_gauss(z):
    if isinstance(z, GaussInt):
        return z
    if isinstance(z, CanonicalGenerator):
        return z.as_gauss()
    if isinstance(z, complex):
        return GaussInt(int(z.real), int(z.imag))
    re, im = z
    return GaussInt(int(re), int(im))


def canonicalize(z):
    """
    Return the associate u*z (u a unit) lying in the quadrant re >= 1, im >= 0
    """
    z = as_gauss(z)
    a, b = z.re, z.im

    if not z:
        raise InvalidArgument("The zero element generates no nonzero ideal")

    if a > 0 and b >= 0:
        return CanonicalGenerator(a, b)
    if a <= 0 and b > 0:
        # multiply by -i
        return CanonicalGenerator(b, -a)
    if a < 0 and b <= 0:
        return CanonicalGenerator(-a, -b)
    # a >= 0 and b < 0: multiply by i
    return CanonicalGenerator(-b, a)


def ideal_arg(g):
    """
    Argument of the canonical generator, in [0, pi/2)
    """
    return math.atan2(g.im, g.re)


def conjugate_ideal(g):
    return canonicalize(GaussInt(g.re, -g.im))


def multiply(z, w):
    return as_gauss(z) * as_gauss(w)


def divides(d, z):
    """
    Exact divisibility d | z in Z[i]
    """
    d, z = as_gauss(d), as_gauss(z)
    norm = d.norm
    if norm == 0:
        raise InvalidArgument("Division by zero in Z[i]")

    # z / d = z * conj(d) / N(d)
    quotient = z * d.conjugate()
    return quotient.re % norm == 0 and quotient.im % norm == 0


def circle_distance(theta, phi):
    """
    Distance of theta - phi to the nearest multiple of pi/2
    """
    diff = (theta - phi) % HALF_PI
    return min(diff, HALF_PI - diff)
