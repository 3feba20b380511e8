"""Day-of-week computation with Conway's Doomsday rule.

Three interchangeable doomsyear strategies (conway, odd11, walters) on a
7's-complement Z_7 core, a full date pipeline with step traces, and an
independent calendar oracle for verification.
"""

from .dates import YEAR_MAX, YEAR_MIN, CivilDate, days_in_month, is_leap
from .doomsyear import (
    METHODS,
    conway_doomsyear,
    doomsyear,
    odd11_doomsyear,
    simplified_doomsyear,
    walters_doomsyear,
)
from .oracle import days_from_civil, oracle_weekday, to_epoch_days
from .rule import DoomsdayBreakdown, day_of_week, doomscentury, doomsdate, doomsmonth
from .stats import MethodCost, cost_report, method_cost
from .trace import Trace, TraceStep
from .z7 import Weekday, closest_multiple_mod7, mod7, sevens_complement, weekday_add

__version__ = "0.1.0"

__all__ = [
    "CivilDate",
    "DoomsdayBreakdown",
    "METHODS",
    "MethodCost",
    "Trace",
    "TraceStep",
    "Weekday",
    "YEAR_MAX",
    "YEAR_MIN",
    "closest_multiple_mod7",
    "conway_doomsyear",
    "cost_report",
    "day_of_week",
    "days_from_civil",
    "days_in_month",
    "doomscentury",
    "doomsdate",
    "doomsmonth",
    "doomsyear",
    "is_leap",
    "method_cost",
    "mod7",
    "odd11_doomsyear",
    "oracle_weekday",
    "sevens_complement",
    "simplified_doomsyear",
    "to_epoch_days",
    "walters_doomsyear",
    "weekday_add",
]
