"""Degree of an incidence scroll by counting fillings of a 2 x (n-1) rectangle.

Label i (one per base space) is used c_i = n - 1 - n_i times, which is the
codimension of the incidence condition, and the extra label r+1 sits in
the lower-right cell.  Rows weakly increase left to right and columns
strictly increase top to bottom.  The count is computed by plain
backtracking over cells, independently of the Pieri machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .base import IncidenceBase
from .errors import FillingSpecError, InvalidBaseError


@dataclass(frozen=True)
class FillingSpec:
    """Content of a filling: ``content[i-1]`` copies of label i, then one r+1."""

    n: int
    content: tuple[int, ...]

    def __post_init__(self):
        content = tuple(int(c) for c in self.content)
        object.__setattr__(self, "content", content)
        if self.n < 2:
            raise FillingSpecError(f"need n >= 2, got {self.n}")
        if any(c < 1 for c in content):
            raise FillingSpecError(f"every label needs at least one copy: {content}")
        if sum(content) + 1 != 2 * (self.n - 1):
            raise FillingSpecError(
                f"content {content} plus the final label fills {sum(content) + 1} "
                f"cells, the rectangle has {2 * (self.n - 1)}"
            )

    @property
    def final_label(self) -> int:
        return len(self.content) + 1

    @classmethod
    def from_base(cls, base: IncidenceBase) -> "FillingSpec":
        """Codimension content; hyperplane spaces (codim 0) carry no label."""
        if not base.is_valid():
            raise InvalidBaseError(f"{base} fails the IS count")
        content = tuple(c for c in base.codims() if c > 0)
        return cls(base.n, content)


def _fill(spec: FillingSpec, emit: bool) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]] | int:
    w = spec.n - 1
    last = spec.final_label
    remaining = list(spec.content)
    top = [0] * w
    bottom = [0] * w
    # column-major order: (0,0),(1,0),(0,1),(1,1),... so constraints bite early
    cells = [(row, col) for col in range(w) for row in (0, 1)]
    count = 0
    found = []

    def rec(k: int):
        nonlocal count
        if k == len(cells) - 1:
            # The lower-right cell holds r+1, larger than every other label,
            # and the content total guarantees every copy has been placed.
            count += 1
            if emit:
                bottom[w - 1] = last
                found.append((tuple(top), tuple(bottom)))
            return
        row, col = cells[k]
        if row == 0:
            lo = top[col - 1] if col > 0 else 1
        else:
            lo = max(bottom[col - 1] if col > 0 else 1, top[col] + 1)
        for v in range(lo, last):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            if row == 0:
                top[col] = v
            else:
                bottom[col] = v
            rec(k + 1)
            remaining[v - 1] += 1

    rec(0)
    return iter(found) if emit else count


def count_fillings_spec(spec: FillingSpec) -> int:
    """Number of valid fillings for an explicit content vector."""
    return _fill(spec, emit=False)


def enumerate_fillings(spec: FillingSpec) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every valid filling as ``(top_row, bottom_row)``; meant for small cases."""
    return _fill(spec, emit=True)


def count_fillings(base: IncidenceBase) -> int:
    """Tableau count for an IS-valid base; equals the scroll degree."""
    return count_fillings_spec(FillingSpec.from_base(base))
