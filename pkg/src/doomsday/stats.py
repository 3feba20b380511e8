"""Operation-count profiles of the doomsyear strategies.

Quantifies mental cost by running each strategy over every x in {0..99}
and tallying its trace steps, plus the spread of the accumulator values a
calculator would have to hold.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import trace
from .doomsyear import METHODS, doomsyear


@dataclass(frozen=True)
class MethodCost:
    """Aggregated step counts for one strategy over the full century."""

    method: str
    step_counts: dict[str, int]
    add11_first_stage: int
    add11_second_stage: int
    accumulator_min: int
    accumulator_max: int
    accumulator_mean: float

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "steps": dict(self.step_counts),
            "add_11_first_stage": self.add11_first_stage,
            "add_11_second_stage": self.add11_second_stage,
            "accumulator": {
                "min": self.accumulator_min,
                "max": self.accumulator_max,
                "mean": self.accumulator_mean,
            },
        }


def method_cost(method: str) -> MethodCost:
    """Tally one strategy's steps over x = 0..99.

    Accumulator values are the input year plus every step output; add-11
    steps are split by whether they happen before or after the halving.
    """
    counts: Counter[str] = Counter()
    first = second = 0
    values: list[int] = []
    for x in range(100):
        _, tr = doomsyear(x, method)
        values.append(x)
        seen_halve = False
        for step in tr.steps:
            counts[step.label] += 1
            if step.label == trace.HALVE:
                seen_halve = True
            elif step.label == trace.ADD_11:
                if seen_halve:
                    second += 1
                else:
                    first += 1
            values.append(step.value_out)
    magnitudes = [abs(v) for v in values]
    return MethodCost(
        method=method,
        step_counts=dict(counts),
        add11_first_stage=first,
        add11_second_stage=second,
        accumulator_min=min(magnitudes),
        accumulator_max=max(magnitudes),
        accumulator_mean=sum(magnitudes) / len(magnitudes),
    )


def cost_report() -> list[MethodCost]:
    """Costs for all three strategies, in canonical method order."""
    return [method_cost(m) for m in METHODS]
