"""Independent day-of-week oracle based on a days-since-epoch count.

This module is the ground truth the Doomsday pipeline is checked against,
so it deliberately shares no arithmetic with ``z7``, ``doomsyear``, or
``rule`` (it imports only the ``Weekday`` enum as a return type). Its own
correctness rests on two auditable facts, both pinned by tests: the day
count increases by exactly 1 from each valid date to the next, and
1970-01-01 (day 0) was a Thursday.
"""

from __future__ import annotations

from .z7 import Weekday

# 1970-01-01 was a Thursday, code 4 under Sunday=0.
EPOCH_WEEKDAY_CODE = 4


def days_from_civil(year: int, month: int, day: int):
    """Days since 1970-01-01 of a Gregorian date, by shifted-era counting.

    Years are taken to start in March, pushing the leap day to the end of
    the (shifted) year, and are grouped into 400-year eras of exactly
    146097 days. Within an era, ``yoe*365 + yoe//4 - yoe//100`` counts the
    days before the shifted year and ``(153*mp + 2)//5`` the days before
    the shifted month; 719468 is the day count from 0000-03-01 to the
    epoch. Uses only +, -, *, //, %, so array arguments broadcast too.
    """
    y = year - (month <= 2)
    era = y // 400
    yoe = y - era * 400
    mp = (month + 9) % 12
    doy = (153 * mp + 2) // 5 + day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe - 719468


def to_epoch_days(date) -> int:
    """Day number of a ``CivilDate``, with 1970-01-01 as day 0."""
    return days_from_civil(date.year, date.month, date.day)


def oracle_weekday(date) -> Weekday:
    """Weekday of ``date`` from its day number alone."""
    return Weekday((to_epoch_days(date) + EPOCH_WEEKDAY_CODE) % 7)
