"""Step traces: the audit trail of a mental calculation.

A trace is an ordered list of labeled steps, each carrying the value that
went in and the value that came out. Steps that record a decision rather
than a new value (parity checks) keep the value unchanged and put the
outcome in ``note``.
"""

from __future__ import annotations

from dataclasses import dataclass

# Step labels used by the doomsyear strategies and the mod-7 trick.
PARITY_CHECK = "parity_check"
ADD_11 = "add_11"
HALVE = "halve"
MOD_7 = "mod_7"
COMPLEMENT = "complement"
CLOSEST_MULTIPLE = "closest_multiple"
SUBTRACT = "subtract"
ITERATE_ADD_11 = "iterate_add_11"

# Extra labels for the dozens-expression breakdown and the final pipeline
# accumulation; they never appear in doomsyear golden traces.
TERM_DIV12 = "term_div12"
TERM_MOD12 = "term_mod12"
TERM_DIV4 = "term_div4"
ADD_DOOMSCENTURY = "add_doomscentury"
ADD_DOOMSMONTH = "add_doomsmonth"

_ARROW_PHRASES = {
    PARITY_CHECK: "{inp} is {note}",
    ADD_11: "plus eleven is {out}",
    ITERATE_ADD_11: "plus eleven is {out}",
    HALVE: "divided by two is {out}",
    MOD_7: "modulo seven is {out}",
    COMPLEMENT: "whose seven's complement is {out}",
    CLOSEST_MULTIPLE: "closest multiple of seven is {out}",
    SUBTRACT: "difference is {out}",
    TERM_DIV12: "{inp} has {out} dozens",
    TERM_MOD12: "remainder is {out}",
    TERM_DIV4: "remainder has {out} fours",
    ADD_DOOMSCENTURY: "plus doomscentury is {out}",
    ADD_DOOMSMONTH: "plus doomsmonth is {out}",
}


@dataclass(frozen=True)
class TraceStep:
    """One labeled step: ``value_in`` went in, ``value_out`` came out."""

    label: str
    value_in: int
    value_out: int
    note: str | None = None

    def render(self) -> str:
        """Normalized one-line form, ``label: in -> out``."""
        text = f"{self.label}: {self.value_in} -> {self.value_out}"
        if self.note:
            text += f" ({self.note})"
        return text

    def as_dict(self) -> dict:
        d: dict = {"label": self.label, "in": self.value_in, "out": self.value_out}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class Trace:
    """Immutable sequence of steps, in execution order."""

    steps: tuple[TraceStep, ...] = ()

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def count(self, label: str) -> int:
        return sum(1 for step in self.steps if step.label == label)

    def find(self, label: str) -> TraceStep:
        """First step with the given label; KeyError if absent."""
        for step in self.steps:
            if step.label == label:
                return step
        raise KeyError(label)

    def render(self) -> str:
        """Normalized multi-line form, one step per line."""
        return "\n".join(step.render() for step in self.steps)

    def arrow_text(self) -> str:
        """Single-line narration joined by arrows, e.g. ``85 is odd -> plus eleven is 96``."""
        parts = []
        for step in self.steps:
            phrase = _ARROW_PHRASES.get(step.label, "{label} is {out}")
            parts.append(
                phrase.format(
                    label=step.label, inp=step.value_in, out=step.value_out, note=step.note
                )
            )
        return " → ".join(parts)

    def as_dicts(self) -> list[dict]:
        return [step.as_dict() for step in self.steps]
