"""Closed-form spectra and energies of suns and double suns.

The published double-sun energy formulas are kept verbatim next to repaired
versions that agree with the eigensolver; :func:`cross_validate` records how
far each one is from the numerical value.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import families
from .graph import Graph
from .spectra import randic_energy

__all__ = [
    "QuarticCoeffs",
    "FormulaReport",
    "PairingError",
    "sun_energy",
    "sun_spectrum",
    "double_sun_quartic",
    "quartic_pairing",
    "double_sun_spectrum",
    "double_sun_energy_from_spectrum",
    "double_sun_energy_printed",
    "double_sun_energy_corrected",
    "conjectured_max",
    "cross_validate",
]

SQRT2 = math.sqrt(2.0)
HIGH = (2 + SQRT2) / 2
LOW = (2 - SQRT2) / 2


class PairingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuarticCoeffs:
    """Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0 with rational coefficients."""

    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __call__(self, x: float) -> float:
        return (((x + float(self.c3)) * x + float(self.c2)) * x + float(self.c1)) * x + float(self.c0)


@dataclass(frozen=True)
class FormulaReport:
    family: str
    params: tuple[int, ...]
    n: int
    printed_value: float
    corrected_value: float
    numeric_value: float

    @property
    def discrepancy_printed(self) -> float:
        return abs(self.printed_value - self.numeric_value)

    @property
    def discrepancy_corrected(self) -> float:
        return abs(self.corrected_value - self.numeric_value)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["params"] = list(self.params)
        d["discrepancy_printed"] = self.discrepancy_printed
        d["discrepancy_corrected"] = self.discrepancy_corrected
        return d


# --- suns -------------------------------------------------------------------


def sun_energy(p: int) -> float:
    """Randić energy of the p-sun, (n - 3) sqrt(2)/2 + 2 with n = 2p + 1."""
    if p < 1:
        raise ValueError(f"sun energy formula needs p >= 1, got {p}")
    n = 2 * p + 1
    return (n - 3) * SQRT2 / 2 + 2


def sun_spectrum(p: int) -> list[float]:
    """Normalized Laplacian spectrum of the p-sun, sorted."""
    if p < 1:
        raise ValueError(f"sun spectrum formula needs p >= 1, got {p}")
    return sorted([0.0, 1.0, 2.0] + [HIGH] * (p - 1) + [LOW] * (p - 1))


# --- double suns ------------------------------------------------------------


def _check_double_sun(p: int, q: int) -> None:
    if q < 0 or p < q or p + q < 2:
        raise ValueError(f"double-sun formulas need p >= q >= 0 and p + q >= 2, got ({p}, {q})")


def double_sun_quartic(p: int, q: int) -> QuarticCoeffs:
    """The degree-4 factor of the double sun's characteristic polynomial.

    The linear coefficient is published without its variable; it is read as
    the coefficient of x, which is what makes the bipartite pairing exact.
    """
    _check_double_sun(p, q)
    den = 4 * (q + 1) * (p + 1)
    return QuarticCoeffs(
        c3=Fraction(-4),
        c2=Fraction(22 * p + 20 * p * q + 22 * q + 20, den),
        c1=Fraction(-12 * p - 8 * p * q - 12 * q - 8, den),
        c0=Fraction(1 + 2 * p + 2 * q, den),
    )


def quartic_pairing(c: QuarticCoeffs) -> tuple[float, float]:
    """``(u, v)`` with ``c = (x^2 - 2x + u)(x^2 - 2x + v)``, ``u <= v``.

    The product expands to x^4 - 4x^3 + (4 + u + v) x^2 - 2(u + v) x + uv,
    so u + v and uv are read off c2 and c0, and c1 must equal -2(u + v).
    """
    if c.c3 != -4:
        raise PairingError(f"x^3 coefficient must be -4 for a bipartite pairing, got {c.c3}")
    s = c.c2 - 4
    if c.c1 != -2 * s:
        raise PairingError(f"pairing inconsistency: c1={c.c1} but -2(u+v)={-2 * s}")
    disc = s * s - 4 * c.c0
    if disc < 0:
        raise PairingError(f"u, v are not real (discriminant {disc})")
    r = math.sqrt(disc)
    return (float(s) - r) / 2, (float(s) + r) / 2


def double_sun_spectrum(p: int, q: int) -> list[float]:
    """Normalized Laplacian spectrum of D^{p,q}, sorted."""
    u, v = quartic_pairing(double_sun_quartic(p, q))
    roots = []
    for w in (u, v):
        r = math.sqrt(max(1.0 - w, 0.0))
        roots += [1 - r, 1 + r]
    k = p + q - 2
    return sorted([0.0, 2.0] + [HIGH] * k + [LOW] * k + roots)


def double_sun_energy_from_spectrum(p: int, q: int) -> float:
    return sum(abs(mu - 1) for mu in double_sun_spectrum(p, q))


def _balanced_shape(p: int, q: int) -> str:
    _check_double_sun(p, q)
    if q == p:
        return "equal"
    if q == p - 1:
        return "offset"
    raise ValueError(f"closed forms exist only for balanced shapes q in (p, p-1), got ({p}, {q})")


def _offset_radicals(n: int) -> float:
    d = math.sqrt(n**4 - 64 * n + 64)
    return 2 * math.sqrt(n * (n + 4) * (n * n + 8 + d)) + 2 * math.sqrt(n * (n + 4) * (n * n + 8 - d))


def double_sun_energy_printed(p: int, q: int) -> float:
    """The published balanced double-sun formulas, evaluated as printed."""
    n = 2 * (p + q + 1)
    if _balanced_shape(p, q) == "equal":
        return (SQRT2 * (n * n - 4 * n - 12) + 4 * math.sqrt(n * n + 4 * n + 20)) / (2 * (n + 2))
    return SQRT2 / (2 * n * (n + 4)) * (n**3 - 2 * n**2 - 24 + _offset_radicals(n))


def double_sun_energy_corrected(p: int, q: int) -> float:
    """Published formulas repaired to match the eigensolver.

    Both drop the contribution 2 of the eigenvalues 0 and 2; the q = p - 1
    case also has ``24`` where ``24 n`` is needed.
    """
    n = 2 * (p + q + 1)
    if _balanced_shape(p, q) == "equal":
        return double_sun_energy_printed(p, q) + 2
    return 2 + SQRT2 / (2 * n * (n + 4)) * (n**3 - 2 * n**2 - 24 * n + _offset_radicals(n))


def conjectured_max(n: int) -> tuple[float, Graph]:
    """Conjectured maximum Randić energy over connected graphs of order n,
    with the graph attaining it (sun for odd n, balanced double sun for even)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0.0, families.sun(0)
    if n % 2:
        p = (n - 1) // 2
        return sun_energy(p), families.sun(p)
    g = families.balanced_double_sun(n)
    p, q = families.balanced_parameters(n)
    if p + q < 2:
        return randic_energy(g), g
    return double_sun_energy_corrected(p, q), g


def cross_validate(p: int, q: int | None = None) -> FormulaReport:
    """Compare formula values with the eigensolver.

    ``q=None`` selects the p-sun (printed and corrected formulas coincide);
    otherwise the balanced double sun D^{p,q}.
    """
    if q is None:
        value = sun_energy(p)
        g = families.sun(p)
        return FormulaReport("sun", (p,), g.n, value, value, randic_energy(g))
    g = families.double_sun(p, q)
    return FormulaReport(
        "double_sun",
        (p, q),
        g.n,
        double_sun_energy_printed(p, q),
        double_sun_energy_corrected(p, q),
        randic_energy(g),
    )
