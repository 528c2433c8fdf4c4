"""Exact ratio handling on top of :class:`fractions.Fraction`.

Ratios (beta, alpha, neighbourhood fractions) are always exact. Decimal
input is refused rather than rounded, because the packing property is a
sharp inequality and ``0.5`` vs ``1/2`` drift would flip boundary cases.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

__all__ = [
    "Fraction",
    "parse_ratio",
    "check_unit_ratio",
    "format_ratio",
    "floor_mul",
    "ceil_mul",
]

_RATIO_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_ratio(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer into a reduced Fraction.

    >>> parse_ratio("2/4")
    Fraction(1, 2)
    """
    if isinstance(text, Fraction):
        return text
    s = str(text)
    m = _RATIO_RE.match(s)
    if m is None:
        if re.match(r"^\s*\d*\.\d*\s*$", s):
            raise InputError(
                f"decimal ratio {s.strip()!r} is not accepted; write an exact fraction such as 1/2"
            )
        raise InputError(f"cannot parse ratio {s!r}; expected p/q")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def check_unit_ratio(value, name: str = "beta") -> Fraction:
    """Coerce to Fraction and require ``0 < value <= 1``."""
    if isinstance(value, str):
        value = parse_ratio(value)
    elif isinstance(value, float):
        raise InputError(f"{name} must be exact (int or Fraction), got float {value!r}")
    else:
        value = Fraction(value)
    if not 0 < value <= 1:
        raise InputError(f"{name} must lie in (0, 1], got {value}")
    return value


def format_ratio(value: Fraction) -> str:
    """Always ``p/q``, including ``1/1`` and ``0/1``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def floor_mul(ratio: Fraction, k: int) -> int:
    """``floor(ratio * k)`` by integer division."""
    return (ratio.numerator * k) // ratio.denominator


def ceil_mul(ratio: Fraction, k: int) -> int:
    return -((-ratio.numerator * k) // ratio.denominator)
