"""The full Doomsday rule: century anchor + doomsyear + month offset.

``day_of_week`` evaluates the key sum

    weekday code = (doomscentury + doomsyear + doomsmonth) mod 7

computing the doomsyear term first (it needs no temporaries), then adding
the century anchor and the month offset, with a single mod-7 reduction at
the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import trace
from .dates import YEAR_MAX, YEAR_MIN, is_leap
from .doomsyear import doomsyear
from .trace import Trace, TraceStep
from .z7 import Weekday, mod7

# Canonical doomsdates: the day in each month that falls on the year's
# anchor weekday. January and February shift on leap years.
_DOOMSDATES_COMMON = {1: 3, 2: 28, 3: 7, 4: 4, 5: 9, 6: 6, 7: 11, 8: 8, 9: 5, 10: 10, 11: 7, 12: 12}
_DOOMSDATES_LEAP = {1: 4, 2: 29}

# Leap-year mnemonic alternates, exactly one week off the canonical dates.
ALT_LEAP_DOOMSDATES = {1: 11, 2: 22}

_MONTH_LENGTHS_COMMON = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


@dataclass(frozen=True)
class DoomsdayBreakdown:
    """The three summands of the key equation plus the resulting weekday."""

    doomscentury: int
    doomsyear: int
    doomsmonth: int
    weekday: Weekday

    def as_dict(self) -> dict:
        return {
            "doomscentury": self.doomscentury,
            "doomsyear": self.doomsyear,
            "doomsmonth": self.doomsmonth,
            "sum_mod7": int(self.weekday),
        }


def doomscentury(year: int) -> int:
    """Weekday code of the century's anchor day.

    The anchors repeat on the 400-year Gregorian cycle; for century
    c = year//100 the code is (5*(c mod 4) + 2) mod 7.
    """
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise ValueError(f"year out of supported range {YEAR_MIN}..{YEAR_MAX}: {year}")
    c = year // 100
    return (5 * (c % 4) + 2) % 7


def doomsdate(month: int, leap: bool) -> int:
    """Day-of-month of the canonical doomsdate in ``month``."""
    if not 1 <= month <= 12:
        raise ValueError(f"invalid month: {month}")
    if leap and month in _DOOMSDATES_LEAP:
        return _DOOMSDATES_LEAP[month]
    return _DOOMSDATES_COMMON[month]


def doomsmonth(month: int, day: int, leap: bool) -> int:
    """Signed offset of (month, day) from the month's doomsdate."""
    if not 1 <= month <= 12:
        raise ValueError(f"invalid month: {month}")
    limit = 29 if month == 2 and leap else _MONTH_LENGTHS_COMMON[month - 1]
    if not 1 <= day <= limit:
        raise ValueError(f"invalid day: {day}")
    return day - doomsdate(month, leap)


def day_of_week(date, method: str = "odd11") -> tuple[Weekday, DoomsdayBreakdown, Trace]:
    """Weekday of ``date`` with the term breakdown and the full trace.

    The trace is the doomsyear trace followed by the two accumulation
    steps and the final reduction.
    """
    leap = is_leap(date.year)
    dy, dy_trace = doomsyear(date.year % 100, method)
    dc = doomscentury(date.year)
    dm = doomsmonth(date.month, date.day, leap)

    steps = list(dy_trace.steps)
    total = dy + dc
    steps.append(TraceStep(trace.ADD_DOOMSCENTURY, dy, total))
    note = f"doomsdate {date.month}/{doomsdate(date.month, leap)}"
    if leap and date.month in ALT_LEAP_DOOMSDATES:
        note += f", alt {date.month}/{ALT_LEAP_DOOMSDATES[date.month]}"
    steps.append(TraceStep(trace.ADD_DOOMSMONTH, total, total + dm, note))
    total += dm
    code = mod7(total)
    steps.append(TraceStep(trace.MOD_7, total, code))

    weekday = Weekday(code)
    return weekday, DoomsdayBreakdown(dc, dy, dm, weekday), Trace(tuple(steps))
