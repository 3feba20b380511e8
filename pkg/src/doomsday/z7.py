"""Arithmetic in Z_7, the additive group of residues modulo seven.

Weekdays are isomorphic to Z_7 with Sunday as 0, so day-of-week work
reduces to sums of small residues. Negation never appears explicitly:
the additive inverse of a residue is its 7's complement, ``7 - d``,
with 0 staying 0.
"""

from __future__ import annotations

from enum import IntEnum

from . import trace
from .trace import Trace, TraceStep


class Weekday(IntEnum):
    """Days of the week, coded Sunday=0 through Saturday=6."""

    SUNDAY = 0
    MONDAY = 1
    TUESDAY = 2
    WEDNESDAY = 3
    THURSDAY = 4
    FRIDAY = 5
    SATURDAY = 6

    def __str__(self) -> str:
        return self.name.capitalize()


def mod7(n: int) -> int:
    """Least nonnegative residue of ``n`` modulo 7; ``n`` may be negative."""
    return n % 7


def sevens_complement(d: int) -> int:
    """7 minus the residue ``d``, reduced back into {0..6}.

    The complement of 0 is 0 (seven is equivalent to zero), and for
    d in {1..6} the complement is the additive inverse of d in Z_7.
    """
    if not 0 <= d <= 6:
        raise ValueError(f"not a Z_7 residue: {d}")
    return (7 - d) % 7


def closest_multiple_mod7(n: int) -> tuple[int, Trace]:
    """Reduce ``n`` mod 7 the mental way, via the nearest multiple of 7.

    Picks the multiple of 7 closest to ``n``, takes the signed difference,
    and applies a 7's complement when the multiple overshoots. Returns the
    residue together with a trace recording the chosen multiple, the
    difference, and whether a complement was needed.
    """
    if not 0 <= n <= 199:
        raise ValueError(f"out of supported range 0..199: {n}")
    below = n - n % 7
    # The two candidate differences sum to 7, so an exact tie is impossible;
    # <= keeps the smaller multiple anyway.
    multiple = below if n - below <= (below + 7) - n else below + 7
    diff = n - multiple
    steps = [
        TraceStep(trace.CLOSEST_MULTIPLE, n, multiple),
        TraceStep(trace.SUBTRACT, n, diff),
    ]
    if diff < 0:
        residue = sevens_complement(-diff)
        steps.append(TraceStep(trace.COMPLEMENT, -diff, residue))
    else:
        residue = diff
    return residue, Trace(tuple(steps))


def weekday_add(w: Weekday, k: int) -> Weekday:
    """The weekday ``k`` days after ``w`` (before, when ``k`` is negative)."""
    return Weekday(mod7(int(w) + k))
