"""Incidence bases: validation, the fundamental scroll, joins and the B(n, i) family.

A base {P^{n_1}, ..., P^{n_r}} of general subspaces of P^n cuts out a curve
in G(1,n) exactly when r*n - sum(n_i) - r = 2n - 3 (the IS count); the lines
of that curve sweep out the incidence scroll.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .base import IncidenceBase
from .errors import (
    ConsistencyFault,
    DomainError,
    JoinNotApplicable,
    TransformNotApplicable,
)
from .ktheory import ktheory_genus
from .schubert import curve_class_degree, intersection_number

__all__ = [
    "IncidenceBase",
    "ValidationReport",
    "ScrollInvariants",
    "StandardFamilyKey",
    "Transformed",
    "validate_base",
    "fundamental_base",
    "fundamental_invariants",
    "join_reduce",
    "standard_family_invariants",
    "elementary_transform",
    "catalog",
    "standard_key_for_base",
    "GenusReport",
    "genus_report",
]


@dataclass(frozen=True)
class ValidationReport:
    base: IncidenceBase
    valid: bool
    lhs: int
    target: int
    vacuous: tuple[int, ...]
    cone: bool

    def describe(self) -> str:
        verdict = "valid" if self.valid else "invalid"
        text = (
            f"{self.base}: IS {verdict} "
            f"(r*n - sum - r = {self.lhs}, 2n - 3 = {self.target})"
        )
        if self.vacuous:
            text += f"; {len(self.vacuous)} hyperplane condition(s) are vacuous"
        if self.cone:
            text += "; contains a point, so the scroll is a cone (a plane)"
        return text


@dataclass(frozen=True)
class ScrollInvariants:
    degree: int
    genus: int | None
    min_directrix_degree: int | None = None


@dataclass(frozen=True)
class StandardFamilyKey:
    """Key (n; i_1, ..., i_s) for B(n, i) = {i_s P^{n-s-2}, ..., i_1 P^{n-3}, rest P^{n-2}}."""

    n: int
    i: tuple[int, ...] = field(default=())

    def __post_init__(self):
        i = tuple(int(x) for x in self.i)
        object.__setattr__(self, "i", i)
        if self.n < 3:
            raise DomainError(f"standard family needs n >= 3, got {self.n}")
        if any(x < 0 for x in i):
            raise DomainError(f"negative multiplicity in {i}")
        if self.top_count < 0:
            raise DomainError(f"key {i} leaves {self.top_count} copies of P^{self.n - 2}")
        s = len(self.trimmed().i)
        if s and self.n - s - 2 < 1:
            raise DomainError(
                f"key {i} needs P^{self.n - s - 2}; only spaces of dimension >= 1 are allowed"
            )

    @property
    def weight(self) -> int:
        return sum((j + 1) * x for j, x in enumerate(self.i, start=1))

    @property
    def top_count(self) -> int:
        """Number of P^{n-2}'s, 2n - 3 - sum (j+1) i_j."""
        return 2 * self.n - 3 - self.weight

    def trimmed(self) -> "StandardFamilyKey":
        i = list(self.i)
        while i and i[-1] == 0:
            i.pop()
        return StandardFamilyKey.__new_unchecked(self.n, tuple(i))

    @classmethod
    def __new_unchecked(cls, n, i):
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "i", i)
        return obj

    def base(self) -> IncidenceBase:
        counts = {self.n - 2: self.top_count}
        for j, x in enumerate(self.i, start=1):
            if x:
                counts[self.n - j - 2] = x
        return IncidenceBase.from_counts(self.n, counts)


def validate_base(base: IncidenceBase) -> ValidationReport:
    """IS check with diagnostics; never raises."""
    return ValidationReport(
        base=base,
        valid=base.is_valid(),
        lhs=base.is_lhs(),
        target=base.is_target(),
        vacuous=tuple(d for d in base.dims if d == base.n - 1),
        cone=any(d == 0 for d in base.dims),
    )


def fundamental_base(n: int) -> IncidenceBase:
    """(2n - 3) general P^{n-2}'s in P^n."""
    if n < 3:
        raise DomainError(f"fundamental scroll needs n >= 3, got {n}")
    return IncidenceBase(n, (n - 2,) * (2 * n - 3))


def fundamental_invariants(n: int) -> ScrollInvariants:
    """Degree (a Catalan number), genus and minimal directrix degree in P^n."""
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"fundamental scroll needs n >= 3, got {n!r}")
    degree = comb(2 * n - 2, n) // (n - 1)
    if n == 3:
        return ScrollInvariants(degree, 0, 1)
    # adjunction gives K_C = (n-4)H restricted to C, so 2g - 2 = (n-4) d
    genus = (n - 4) * degree // 2 + 1
    directrix = 3 * factorial(2 * n - 4) // (factorial(n - 3) * factorial(n))
    return ScrollInvariants(degree, genus, directrix)


def directrix_intersection(n: int) -> int:
    """Schubert count of lines meeting one P^{n-3} and 2n-4 general P^{n-2}'s."""
    return intersection_number([n - 2] * (2 * n - 4) + [n - 3], n)


@dataclass(frozen=True)
class Transformed:
    """Result of a join or elementary transform, with its invariant bookkeeping."""

    source: IncidenceBase
    base: IncidenceBase
    degree_shift: int = -1
    genus_shift: int = 0


def join_reduce(base: IncidenceBase, i: int, j: int) -> Transformed:
    """Join spaces ``i`` and ``j`` (positions in ``base.dims``) into a hyperplane.

    The two joined spaces keep their dimensions; every other space drops by
    one and the ambient space becomes P^{n-1}.  The scroll loses a plane, so
    the degree drops by one and the genus is unchanged.
    """
    dims = base.dims
    if i == j or not (0 <= i < len(dims) and 0 <= j < len(dims)):
        raise JoinNotApplicable(f"bad positions {i}, {j} for a base with {len(dims)} spaces")
    if dims[i] + dims[j] != base.n - 1:
        raise JoinNotApplicable(
            f"P^{dims[i]} and P^{dims[j]} do not span a hyperplane of P^{base.n} "
            f"({dims[i]} + {dims[j]} != {base.n - 1})"
        )
    rest = [d - 1 for k, d in enumerate(dims) if k not in (i, j)]
    if any(d < 0 for d in rest):
        raise JoinNotApplicable("a point base space cannot be lowered further")
    return Transformed(base, IncidenceBase(base.n - 1, (dims[i], dims[j], *rest)))


def elementary_transform(base: IncidenceBase, pair: tuple[int, int] | None = None) -> Transformed:
    """Projection of the scroll from a general point of it.

    The two directrix spaces (by default the two smallest base spaces) must
    span P^n, i.e. n_1 + n_2 = n - 1; they are kept and every other space is
    lowered by one inside P^{n-1}.  The degree drops by one and the genus is
    unchanged.
    """
    if not base.is_valid():
        raise TransformNotApplicable(f"{base} fails the IS count")
    if base.r < 3:
        raise TransformNotApplicable("the transform needs at least three base spaces")
    i, j = pair if pair is not None else (0, 1)
    dims = base.dims
    if dims[i] + dims[j] != base.n - 1:
        raise TransformNotApplicable(
            f"P^{dims[i]} and P^{dims[j]} are not complementary in P^{base.n} "
            f"({dims[i]} + {dims[j]} != {base.n - 1})"
        )
    if any(d - 1 < 0 for k, d in enumerate(dims) if k not in (i, j)):
        raise TransformNotApplicable("a point base space cannot be lowered")
    return join_reduce(base, i, j)


def _trim(i: tuple[int, ...]) -> tuple[int, ...]:
    i = list(i)
    while i and i[-1] == 0:
        i.pop()
    return tuple(i)


@lru_cache(maxsize=None)
def _standard_rec(n: int, i: tuple[int, ...]) -> tuple[int, int]:
    # lru_cache is internally locked and the values are pure, so concurrent
    # callers at worst recompute an entry and always see identical results.
    # The degenerations pass through configurations outside the family proper.
    # Two bottom cases close them off: one point in P^2 (the pencil of lines
    # through it, a plane: d = 1, g = 0), and a key whose smallest space would
    # be P^{-1}, which no line meets (d = 0 and chi(O_C) = 0, i.e. g = 1, so
    # that g = g_1 + g_2 + kappa - 1 stays the additivity of chi).
    i = _trim(i)
    if i and n - len(i) - 2 < 0:
        return 0, 1
    if not i:
        if n == 2:
            return 1, 0
        inv = fundamental_invariants(n)
        return inv.degree, inv.genus
    s = len(i)
    if s == 1:
        split = (i[0] - 1,)
        other = (i[0] - 1,)
    else:
        split = i[:-2] + (i[-2] + 1, i[-1] - 1)
        if s == 2:
            other = (i[0], i[1] - 1)
        else:
            other = i[:-3] + (i[-3] + 1, i[-2], i[-1] - 1)
    d_split, g_split = _standard_rec(n, split)
    d_other, g_other = _standard_rec(n - 1, other)
    kappa, _ = _standard_rec(n - 1, split)
    return d_split - d_other, g_split - g_other - kappa + 1


def standard_family_invariants(key: StandardFamilyKey) -> ScrollInvariants:
    """Degree and genus of B(n, i) from the degeneration recursion.

    The recursion degree is recomputed with the Pieri rule and the genus
    with the K-theory oracle; any disagreement raises ConsistencyFault.
    """
    key = key.trimmed()
    degree, genus = _standard_rec(key.n, key.i)
    base = key.base()
    pieri = curve_class_degree(base)
    if pieri != degree:
        raise ConsistencyFault("standard family degree (recursion vs Pieri)", degree, pieri, key)
    kgenus = ktheory_genus(base)
    if kgenus != genus:
        raise ConsistencyFault("standard family genus (recursion vs K-theory)", genus, kgenus, key)
    directrix = fundamental_invariants(key.n).min_directrix_degree if not key.i else None
    return ScrollInvariants(degree, genus, directrix)


def standard_family_keys(n: int) -> Iterator[StandardFamilyKey]:
    """Every valid key in P^n with trailing entries nonzero, including the empty key."""
    smax = n - 3  # smallest space P^{n-s-2} must have dimension >= 1

    def rec(prefix: tuple[int, ...], weight: int):
        if not prefix or prefix[-1] != 0:
            yield StandardFamilyKey(n, prefix)
        j = len(prefix) + 1
        if j > smax:
            return
        for x in range(0, (2 * n - 3 - weight) // (j + 1) + 1):
            yield from rec(prefix + (x,), weight + (j + 1) * x)

    yield from rec((), 0)


def catalog(n: int, include_cones: bool = False) -> list[IncidenceBase]:
    """All IS-valid bases of P^n with spaces of dimension n - 2 or less.

    Bases containing a point (n_i = 0) are cones and are left out unless
    ``include_cones`` is set.
    """
    if n < 3:
        raise DomainError(f"catalog needs n >= 3, got {n}")
    lo = 0 if include_cones else 1
    out: list[IncidenceBase] = []

    def rec(start: int, remaining: int, cur: list[int]):
        if remaining == 0:
            out.append(IncidenceBase(n, tuple(cur)))
            return
        for d in range(start, n - 1):
            c = n - 1 - d
            if c <= remaining:
                cur.append(d)
                rec(d, remaining - c, cur)
                cur.pop()

    # IS is equivalent to sum of codimensions n - 1 - n_i = 2n - 3
    rec(lo, 2 * n - 3, [])
    return out


def standard_key_for_base(base: IncidenceBase) -> StandardFamilyKey | None:
    """The B(n, i) key with the same base, or None for cones.

    Hyperplanes are dropped first; every other IS-valid base whose spaces
    all have dimension >= 1 is a member of the standard family.
    """
    core = base.without_hyperplanes()
    if not core.is_valid() or core.n < 3 or any(d == 0 for d in core.dims):
        return None
    counts = core.counts()
    smax = core.n - 3
    i = tuple(counts.get(core.n - j - 2, 0) for j in range(1, smax + 1))
    key = StandardFamilyKey(core.n, _trim(i))
    return key if key.base() == core else None


@dataclass(frozen=True)
class GenusReport:
    genus: int | None
    status: str  # "ok" or "unavailable"
    source: str
    reason: str = ""


def genus_report(base: IncidenceBase, degree: int) -> GenusReport:
    """Genus of the scroll of an IS-valid base, with where it came from.

    Standard-family bases use the degeneration recursion (checked against
    K-theory inside :func:`standard_family_invariants`); cones fall back to
    the K-theory value alone.  An empty incidence curve has no genus.
    """
    if degree == 0:
        return GenusReport(None, "unavailable", "none", "no line meets the base: the scroll is empty")
    key = standard_key_for_base(base)
    if key is not None:
        inv = standard_family_invariants(key)
        return GenusReport(inv.genus, "ok", f"standard family B({key.n}; {','.join(map(str, key.i)) or '-'})")
    genus = ktheory_genus(base)
    if genus < 0:
        return GenusReport(None, "unavailable", "K-theory", f"chi(O_C) = {1 - genus} > 1: the curve is disconnected")
    return GenusReport(genus, "ok", "K-theory")
