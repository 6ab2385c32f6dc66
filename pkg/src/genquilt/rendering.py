"""Exact decimal rendering for rationals (no float round-trips)."""

from __future__ import annotations

from fractions import Fraction


def decimal_string(value: Fraction, places: int) -> str:
    """``value`` as a fixed-point decimal with ``places`` digits, half-up."""
    if places < 0:
        raise ValueError(f"places must be >= 0, got {places}")
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**places
    units = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    digits = str(units).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def percent_string(ratio: Fraction, places: int = 4) -> str:
    """A ratio as a percentage with ``places`` decimals, e.g. 92.4623."""
    return decimal_string(ratio * 100, places)
