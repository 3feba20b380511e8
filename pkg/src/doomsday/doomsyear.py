"""The doomsyear term: three interchangeable strategies for a 2-digit year.

Every strategy maps a year-within-century x in {0..99} to the same Z_7
residue. ``conway`` evaluates the classic dozens expression
``x//12 + x%12 + (x%12)//4``. ``odd11`` runs the accumulator-only
procedure (add 11 if odd, halve, add 11 if odd, mod 7, 7's complement),
which needs no temporary values and no divisibility-by-4 test.
``walters`` adds 11 until the accumulator is divisible by 4, halves it,
and negates mod 7 via the complement.

The odd11 and walters strategies return a full step trace; conway gets a
minimal one (the three terms, then the reduction of their sum).
"""

from __future__ import annotations

from functools import lru_cache

from . import trace
from .trace import Trace, TraceStep
from .z7 import sevens_complement

METHODS = ("conway", "odd11", "walters")


def _check_year_two(x: int) -> None:
    if not 0 <= x <= 99:
        raise ValueError(f"year within century out of range 0..99: {x}")


def conway_doomsyear(x: int) -> int:
    """Dozens expression, reduced mod 7 once at the end."""
    _check_year_two(x)
    rem = x % 12
    return (x // 12 + rem + rem // 4) % 7


def simplified_doomsyear(x: int) -> int:
    """mod7(x + x//4); the reference form the other strategies are congruent to."""
    _check_year_two(x)
    return (x + x // 4) % 7


def odd11_doomsyear(x: int) -> tuple[int, Trace]:
    """Odd+11 procedure with a complete trace.

    Steps: if the accumulator is odd add 11, halve it, if odd add 11
    again, reduce mod 7, and finish with the 7's complement. Both parity
    checks are always recorded, including the skipped branches, and the
    value entering the mod-7 step is always even.
    """
    _check_year_two(x)
    steps = []
    acc = x
    for stage in range(2):
        parity = "odd" if acc % 2 else "even"
        steps.append(TraceStep(trace.PARITY_CHECK, acc, acc, parity))
        if acc % 2:
            steps.append(TraceStep(trace.ADD_11, acc, acc + 11))
            acc += 11
        if stage == 0:
            steps.append(TraceStep(trace.HALVE, acc, acc // 2))
            acc //= 2
    rem = acc % 7
    steps.append(TraceStep(trace.MOD_7, acc, rem))
    residue = sevens_complement(rem)
    steps.append(TraceStep(trace.COMPLEMENT, rem, residue))
    return residue, Trace(tuple(steps))


def walters_doomsyear(x: int) -> tuple[int, Trace]:
    """Walters' procedure with a complete trace.

    Adds 11 to the accumulator until it is divisible by 4 (that takes
    exactly x mod 4 rounds), halves it, reduces mod 7, and negates via the
    7's complement. The pre-halving value is divisible by 4, so the
    halving is exact.
    """
    _check_year_two(x)
    steps = []
    acc = x
    while acc % 4:
        steps.append(TraceStep(trace.ITERATE_ADD_11, acc, acc + 11))
        acc += 11
    steps.append(TraceStep(trace.HALVE, acc, acc // 2))
    acc //= 2
    rem = acc % 7
    steps.append(TraceStep(trace.MOD_7, acc, rem))
    residue = sevens_complement(rem)
    steps.append(TraceStep(trace.COMPLEMENT, rem, residue))
    return residue, Trace(tuple(steps))


def _conway_with_trace(x: int) -> tuple[int, Trace]:
    # Minimal trace: the three terms, then their sum reduced mod 7.
    dozens = x // 12
    rem = x % 12
    fours = rem // 4
    total = dozens + rem + fours
    residue = total % 7
    steps = (
        TraceStep(trace.TERM_DIV12, x, dozens),
        TraceStep(trace.TERM_MOD12, x, rem),
        TraceStep(trace.TERM_DIV4, rem, fours),
        TraceStep(trace.MOD_7, total, residue),
    )
    return residue, Trace(steps)


@lru_cache(maxsize=None)
def doomsyear(x: int, method: str = "odd11") -> tuple[int, Trace]:
    """Dispatch to one of the three strategies by name."""
    _check_year_two(x)
    if method == "conway":
        return _conway_with_trace(x)
    if method == "odd11":
        return odd11_doomsyear(x)
    if method == "walters":
        return walters_doomsyear(x)
    raise ValueError(f"unknown method: {method!r} (choose from {', '.join(METHODS)})")
