"""Sets of pairwise noncontiguous integers, as used by the exact-value problems."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContiguousSet


@dataclass(frozen=True)
class ExactSet:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(sorted(set(self.values)))
        if not vals:
            raise ContiguousSet("exact set must be nonempty")
        if vals[0] < 0:
            raise ContiguousSet(f"negative member {vals[0]}")
        for a, b in zip(vals, vals[1:]):
            if b - a == 1:
                raise ContiguousSet(f"{a} and {b} are contiguous")
        object.__setattr__(self, "values", vals)

    def __contains__(self, x: int) -> bool:
        return x in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @classmethod
    def of(cls, values: Iterable[int]) -> "ExactSet":
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> "ExactSet":
        """Parse ``"5"`` or ``"9,11"``."""
        return cls(tuple(int(x) for x in text.split(",") if x.strip()))
