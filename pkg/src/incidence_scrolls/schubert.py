"""Schubert calculus in the Grassmannian G(l,n) driven by the Pieri rule.

A Schubert class is written omega(a_0, ..., a_l) with 0 <= a_0 < ... < a_l <= n,
the dimensions of the flag spaces a moving P^l must meet in dimension
>= 0, 1, ..., l.  The special class attached to a fixed P^h (P^l's meeting
it) is omega(h, n-l+1, ..., n); for lines this is omega(h, n) with
codimension n - 1 - h.

Everything here is exact integer arithmetic.  Products are canonicalized
after every step: terms merged, zeros pruned, indices sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .base import IncidenceBase
from .errors import ConsistencyFault, DimensionError, DomainError, InvalidBaseError


@dataclass(frozen=True, order=True)
class SchubertIndex:
    """Index omega(a_0, ..., a_l) of a Schubert class in G(l,n)."""

    n: int
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(a) for a in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise DomainError("a Schubert index needs at least one entry")
        if dims[0] < 0 or dims[-1] > self.n:
            raise DomainError(f"index {dims} out of range for P^{self.n}")
        if any(x >= y for x, y in zip(dims, dims[1:])):
            raise DomainError(f"index {dims} is not strictly increasing")

    @property
    def l(self) -> int:
        return len(self.dims) - 1

    @property
    def dimension(self) -> int:
        l = self.l
        return sum(self.dims) - l * (l + 1) // 2

    @property
    def codimension(self) -> int:
        l = self.l
        return (l + 1) * (self.n - l) - self.dimension

    def __str__(self) -> str:
        return "w(" + ",".join(map(str, self.dims)) + ")"


def _codim(dims: tuple[int, ...], n: int) -> int:
    l = len(dims) - 1
    return (l + 1) * (n - l) - (sum(dims) - l * (l + 1) // 2)


@dataclass(frozen=True)
class ClassSum:
    """A homogeneous integer combination of Schubert classes in G(l,n).

    ``terms`` is a sorted tuple of ``(dims, coefficient)`` pairs with no zero
    coefficients.  Use :meth:`from_mapping` to build one from loose data.
    """

    n: int
    l: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self):
        codims = set()
        seen = set()
        for dims, c in self.terms:
            SchubertIndex(self.n, dims)
            if len(dims) != self.l + 1:
                raise DomainError(f"index {dims} does not live in G({self.l},{self.n})")
            if c == 0:
                raise DomainError("zero coefficients are never stored")
            if dims in seen:
                raise DomainError(f"duplicate index {dims}")
            seen.add(dims)
            codims.add(_codim(dims, self.n))
        if len(codims) > 1:
            raise DomainError(f"class is not homogeneous (codimensions {sorted(codims)})")
        if list(self.terms) != sorted(self.terms):
            raise DomainError("terms must be sorted; use ClassSum.from_mapping")

    @classmethod
    def from_mapping(cls, n: int, l: int, mapping: Mapping) -> "ClassSum":
        """Canonicalize ``{index: coeff}``; keys may be tuples or SchubertIndex."""
        merged: dict[tuple[int, ...], int] = {}
        for key, c in mapping.items():
            dims = key.dims if isinstance(key, SchubertIndex) else tuple(key)
            merged[dims] = merged.get(dims, 0) + int(c)
        terms = tuple(sorted((d, c) for d, c in merged.items() if c != 0))
        return cls(n, l, terms)

    @classmethod
    def fundamental(cls, n: int, l: int = 1) -> "ClassSum":
        """The unit class omega(n-l, ..., n), codimension 0."""
        return cls(n, l, ((tuple(range(n - l, n + 1)), 1),))

    @property
    def codimension(self) -> int | None:
        """Common codimension of the terms; None for the zero class."""
        if not self.terms:
            return None
        return _codim(self.terms[0][0], self.n)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, dims) -> int:
        dims = dims.dims if isinstance(dims, SchubertIndex) else tuple(dims)
        for d, c in self.terms:
            if d == dims:
                return c
        return 0

    def items(self) -> Iterator[tuple[SchubertIndex, int]]:
        for d, c in self.terms:
            yield SchubertIndex(self.n, d), c

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __add__(self, other: "ClassSum") -> "ClassSum":
        if (self.n, self.l) != (other.n, other.l):
            raise DomainError("cannot add classes from different Grassmannians")
        merged = dict(self.terms)
        for d, c in other.terms:
            merged[d] = merged.get(d, 0) + c
        return ClassSum.from_mapping(self.n, self.l, merged)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for d, c in self.terms:
            idx = "w(" + ",".join(map(str, d)) + ")"
            out.append(idx if c == 1 else f"{c}*{idx}")
        return " + ".join(out)


def _check_special(h: int, n: int, l: int) -> None:
    if not isinstance(h, int) or h < 0 or h > n - l:
        raise DomainError(f"special class needs 0 <= h <= {n - l} in G({l},{n}), got {h!r}")


def special_class(h: int, n: int, l: int = 1) -> ClassSum:
    """Class of the P^l's meeting a fixed P^h, i.e. omega(h, n-l+1, ..., n).

    For lines (``l = 1``) this is omega(h, n), of codimension n - 1 - h.
    ``h = n - l`` gives the fundamental class.
    """
    if l < 0 or n < l:
        raise DomainError(f"no Grassmannian G({l},{n})")
    _check_special(h, n, l)
    return ClassSum(n, l, (((h,) + tuple(range(n - l + 1, n + 1)), 1),))


def pieri_terms(a: tuple[int, ...], h: int, n: int) -> Iterator[tuple[int, ...]]:
    """Indices b with b_0 <= a_0 < b_1 <= a_1 < ... < b_l <= a_l of the right weight.

    The weight condition is sum(b) = sum(a) - (n - l - h).  Every emitted
    index is automatically strictly increasing and inside [0, n].
    """
    l = len(a) - 1
    target = sum(a) - (n - l - h)
    lows = [0] + [x + 1 for x in a[:-1]]
    # suffix bounds let us prune partial sequences early
    min_rest = [0] * (l + 2)
    max_rest = [0] * (l + 2)
    for i in range(l, -1, -1):
        min_rest[i] = min_rest[i + 1] + lows[i]
        max_rest[i] = max_rest[i + 1] + a[i]

    def rec(i: int, acc: int, prefix: tuple[int, ...]):
        if i > l:
            if acc == target:
                yield prefix
            return
        for b in range(lows[i], a[i] + 1):
            s = acc + b
            if s + min_rest[i + 1] > target:
                break
            if s + max_rest[i + 1] < target:
                continue
            yield from rec(i + 1, s, prefix + (b,))

    if target < 0:
        return
    yield from rec(0, 0, ())


def _pieri_raw(terms: Iterable[tuple[tuple[int, ...], int]], h: int, n: int) -> tuple:
    out: dict[tuple[int, ...], int] = {}
    for a, c in terms:
        for b in pieri_terms(a, h, n):
            out[b] = out.get(b, 0) + c
    return tuple(sorted((b, c) for b, c in out.items() if c != 0))


def pieri_multiply(c: ClassSum, h: int) -> ClassSum:
    """Multiply ``c`` by the special class of a P^h (Pieri rule)."""
    _check_special(h, c.n, c.l)
    return ClassSum(c.n, c.l, _pieri_raw(c.terms, h, c.n))


@lru_cache(maxsize=1 << 16)
def _ordered_product(n: int, hs: tuple[int, ...]) -> tuple:
    # Folds in the given order; prefixes are shared through the cache.
    if not hs:
        return ClassSum.fundamental(n).terms
    return _pieri_raw(_ordered_product(n, hs[:-1]), hs[-1], n)


def _check_line_specials(hs: Iterable[int], n: int) -> tuple[int, ...]:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"ambient dimension must be >= 1, got {n!r}")
    hs = tuple(hs)
    for h in hs:
        _check_special(h, n, 1)
    return hs


def product_of_specials(hs: Iterable[int], n: int) -> ClassSum:
    """Left fold of :func:`pieri_multiply` over ``hs`` in G(1,n)."""
    hs = _check_line_specials(hs, n)
    return ClassSum(n, 1, _ordered_product(n, hs))


def _canonical_product(hs: tuple[int, ...], n: int) -> tuple:
    # Hyperplane conditions are the identity; dropping them and sorting
    # maximizes cache reuse without changing the class.
    core = tuple(sorted((h for h in hs if h != n - 1), reverse=True))
    return _ordered_product(n, core)


def intersection_number(hs: Iterable[int], n: int) -> int:
    """Number of lines of P^n meeting general P^{h_i}'s (point-class coefficient).

    Total codimension sum(n - 1 - h_i) must equal dim G(1,n) = 2n - 2.
    """
    hs = _check_line_specials(hs, n)
    total = sum(n - 1 - h for h in hs)
    if total != 2 * n - 2:
        raise DimensionError(2 * n - 2, total)
    for dims, c in _canonical_product(hs, n):
        if dims == (0, 1):
            return c
    return 0


def curve_class_degree(base: IncidenceBase) -> int:
    """Degree of the incidence scroll: coefficient of omega(0,2) in the product."""
    if not base.is_valid():
        raise InvalidBaseError(
            f"{base} fails the IS count: {base.is_lhs()} != {base.is_target()}"
        )
    terms = _canonical_product(base.dims, base.n)
    support = [d for d, _ in terms]
    if support and support != [(0, 2)]:
        raise ConsistencyFault("curve class support", support, [(0, 2)], base.pretty())
    return terms[0][1] if terms else 0


def clear_caches() -> None:
    """Drop memoized products (useful for timing measurements)."""
    _ordered_product.cache_clear()
