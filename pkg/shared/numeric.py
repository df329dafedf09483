"""
High-precision roots of exact integers and fixed 12-decimal rendering
"""
from decimal import Decimal, ROUND_HALF_EVEN, localcontext

import mpmath as mp

DECIMAL_PLACES = 12
_QUANTUM = Decimal(1).scaleb(-DECIMAL_PLACES)


def integer_root(value: int, k: int, precision: int = 40) -> mp.mpf:
    """value^(1/k) via ln(value)/k, computed at `precision` significant digits."""
    if value < 1:
        raise ValueError("root of a non-positive count")
    if k < 1:
        raise ValueError("root index must be >= 1")
    with mp.workdps(precision):
        if value == 1:
            return mp.mpf(1)
        return mp.exp(mp.log(mp.mpf(value)) / k)


def integer_log(value: int, precision: int = 40) -> mp.mpf:
    with mp.workdps(precision):
        return mp.log(mp.mpf(value))


def to_decimal(value, precision: int = 40) -> Decimal:
    """Render an mpf (or int) with exactly 12 fractional digits, round-half-even."""
    with mp.workdps(precision):
        text = mp.nstr(mp.mpf(value), precision, min_fixed=-mp.inf, max_fixed=mp.inf)
    with localcontext() as ctx:
        ctx.prec = precision + 20
        return Decimal(text).quantize(_QUANTUM, rounding=ROUND_HALF_EVEN)


def render_decimal(value: Decimal) -> str:
    return format(value.quantize(_QUANTUM, rounding=ROUND_HALF_EVEN), "f")
