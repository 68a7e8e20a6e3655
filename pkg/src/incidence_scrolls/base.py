"""The incidence base: an ambient P^n plus a multiset of linear subspaces."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import DomainError


@dataclass(frozen=True)
class IncidenceBase:
    """Ambient dimension ``n`` and the dimensions of the base spaces.

    ``dims`` is stored sorted ascending, so two bases that differ only in
    the order of their spaces compare (and hash) equal.
    """

    n: int
    dims: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"ambient dimension must be an integer >= 2, got {self.n!r}")
        dims = tuple(sorted(int(d) for d in self.dims))
        for d in dims:
            if d < 0 or d > self.n - 1:
                raise DomainError(f"base space P^{d} does not fit properly inside P^{self.n}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def from_counts(cls, n: int, counts: dict[int, int]) -> "IncidenceBase":
        """Build from ``{dimension: multiplicity}``."""
        dims = []
        for d, k in counts.items():
            if k < 0:
                raise DomainError(f"negative multiplicity {k} for P^{d}")
            dims.extend([d] * k)
        return cls(n, tuple(dims))

    @property
    def r(self) -> int:
        """Number of base spaces."""
        return len(self.dims)

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.dims).items()))

    def codims(self) -> tuple[int, ...]:
        """Codimension in G(1,n) of each incidence condition, n - 1 - n_i."""
        return tuple(self.n - 1 - d for d in self.dims)

    def is_lhs(self) -> int:
        """Left side of the IS count, r*n - sum(n_i) - r."""
        return self.r * self.n - sum(self.dims) - self.r

    def is_target(self) -> int:
        return 2 * self.n - 3

    def is_valid(self) -> bool:
        return self.is_lhs() == self.is_target()

    def without_hyperplanes(self) -> "IncidenceBase":
        """Drop P^{n-1} entries; they impose no condition and keep the IS count."""
        return IncidenceBase(self.n, tuple(d for d in self.dims if d != self.n - 1))

    def pretty(self) -> str:
        parts = []
        for d, k in self.counts().items():
            parts.append(f"P^{d}" if k == 1 else f"{k}xP^{d}")
        return "{" + ", ".join(parts) + "} in P^" + str(self.n)

    def __str__(self) -> str:
        return self.pretty()
