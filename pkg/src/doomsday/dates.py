"""Gregorian civil dates, restricted to the post-reform years 1583..9999."""

from __future__ import annotations

import re
from dataclasses import dataclass

YEAR_MIN = 1583
YEAR_MAX = 9999

MONTH_NAMES = (
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
)

_MONTH_LENGTHS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)

_ISO_DATE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")


def is_leap(year: int) -> bool:
    """Gregorian leap rule: divisible by 4, except centuries not divisible by 400."""
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise ValueError(f"year out of supported range {YEAR_MIN}..{YEAR_MAX}: {year}")
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    if not 1 <= month <= 12:
        raise ValueError(f"invalid month: {month}")
    if month == 2 and is_leap(year):
        return 29
    return _MONTH_LENGTHS[month - 1]


@dataclass(frozen=True, order=True)
class CivilDate:
    """A validated Gregorian calendar date."""

    year: int
    month: int
    day: int

    def __post_init__(self) -> None:
        if not YEAR_MIN <= self.year <= YEAR_MAX:
            raise ValueError(
                f"year out of supported range {YEAR_MIN}..{YEAR_MAX}: {self.year}"
            )
        if not 1 <= self.month <= 12:
            raise ValueError(f"invalid month: {self.month}")
        if not 1 <= self.day <= days_in_month(self.year, self.month):
            raise ValueError(f"invalid day: {self.day}")

    @classmethod
    def parse(cls, text: str) -> "CivilDate":
        """Parse a strict ISO 8601 date, ``YYYY-MM-DD``."""
        m = _ISO_DATE.match(text)
        if m is None:
            raise ValueError(f"not an ISO date (expected YYYY-MM-DD): {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))

    def isoformat(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    def __str__(self) -> str:
        return self.isoformat()
