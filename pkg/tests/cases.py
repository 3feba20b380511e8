"""Known-good worked examples shared by the unit and acceptance tests.

All values were worked out by hand (and cross-checked against the closed
forms) before any implementation ran; tests compare against these frozen
tables, never the other way around.
"""

from doomsday.z7 import Weekday

# x -> (residue, full expected step sequence) for the odd11 strategy.
# Steps are (label, value_in, value_out, note).
ODD11_CASES = {
    85: (1, (
        ("parity_check", 85, 85, "odd"),
        ("add_11", 85, 96, None),
        ("halve", 96, 48, None),
        ("parity_check", 48, 48, "even"),
        ("mod_7", 48, 6, None),
        ("complement", 6, 1, None),
    )),
    99: (4, (
        ("parity_check", 99, 99, "odd"),
        ("add_11", 99, 110, None),
        ("halve", 110, 55, None),
        ("parity_check", 55, 55, "odd"),
        ("add_11", 55, 66, None),
        ("mod_7", 66, 3, None),
        ("complement", 3, 4, None),
    )),
    74: (1, (
        ("parity_check", 74, 74, "even"),
        ("halve", 74, 37, None),
        ("parity_check", 37, 37, "odd"),
        ("add_11", 37, 48, None),
        ("mod_7", 48, 6, None),
        ("complement", 6, 1, None),
    )),
    40: (1, (
        ("parity_check", 40, 40, "even"),
        ("halve", 40, 20, None),
        ("parity_check", 20, 20, "even"),
        ("mod_7", 20, 6, None),
        ("complement", 6, 1, None),
    )),
    10: (5, (
        ("parity_check", 10, 10, "even"),
        ("halve", 10, 5, None),
        ("parity_check", 5, 5, "odd"),
        ("add_11", 5, 16, None),
        ("mod_7", 16, 2, None),
        ("complement", 2, 5, None),
    )),
    88: (5, (
        ("parity_check", 88, 88, "even"),
        ("halve", 88, 44, None),
        ("parity_check", 44, 44, "even"),
        ("mod_7", 44, 2, None),
        ("complement", 2, 5, None),
    )),
    7: (1, (
        ("parity_check", 7, 7, "odd"),
        ("add_11", 7, 18, None),
        ("halve", 18, 9, None),
        ("parity_check", 9, 9, "odd"),
        ("add_11", 9, 20, None),
        ("mod_7", 20, 6, None),
        ("complement", 6, 1, None),
    )),
    98: (3, (
        ("parity_check", 98, 98, "even"),
        ("halve", 98, 49, None),
        ("parity_check", 49, 49, "odd"),
        ("add_11", 49, 60, None),
        ("mod_7", 60, 4, None),
        ("complement", 4, 3, None),
    )),
    93: (4, (
        ("parity_check", 93, 93, "odd"),
        ("add_11", 93, 104, None),
        ("halve", 104, 52, None),
        ("parity_check", 52, 52, "even"),
        ("mod_7", 52, 3, None),
        ("complement", 3, 4, None),
    )),
    0: (0, (
        ("parity_check", 0, 0, "even"),
        ("halve", 0, 0, None),
        ("parity_check", 0, 0, "even"),
        ("mod_7", 0, 0, None),
        ("complement", 0, 0, None),
    )),
    26: (4, (
        ("parity_check", 26, 26, "even"),
        ("halve", 26, 13, None),
        ("parity_check", 13, 13, "odd"),
        ("add_11", 13, 24, None),
        ("mod_7", 24, 3, None),
        ("complement", 3, 4, None),
    )),
    35: (1, (
        ("parity_check", 35, 35, "odd"),
        ("add_11", 35, 46, None),
        ("halve", 46, 23, None),
        ("parity_check", 23, 23, "odd"),
        ("add_11", 23, 34, None),
        ("mod_7", 34, 6, None),
        ("complement", 6, 1, None),
    )),
    11: (6, (
        ("parity_check", 11, 11, "odd"),
        ("add_11", 11, 22, None),
        ("halve", 22, 11, None),
        ("parity_check", 11, 11, "odd"),
        ("add_11", 11, 22, None),
        ("mod_7", 22, 1, None),
        ("complement", 1, 6, None),
    )),
}

# (n, residue, chosen multiple, signed difference, complement applied)
CLOSEST_MULTIPLE_CASES = (
    (32, 4, 35, -3, True),
    (58, 2, 56, 2, False),
    (40, 5, 42, -2, True),
    (62, 6, 63, -1, True),
    (24, 3, 21, 3, False),
)

# (start weekday, day shift, expected weekday)
WEEKDAY_CASES = (
    (Weekday.MONDAY, 2, Weekday.WEDNESDAY),
    (Weekday.TUESDAY, 3, Weekday.FRIDAY),
    (Weekday.TUESDAY, -3, Weekday.SATURDAY),
    (Weekday.FRIDAY, 18, Weekday.TUESDAY),
    (Weekday.FRIDAY, -18, Weekday.MONDAY),
    (Weekday.SUNDAY, -60, Weekday.WEDNESDAY),
)
