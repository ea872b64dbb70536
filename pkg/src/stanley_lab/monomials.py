"""Multidegrees and exact monomial-ideal arithmetic.

A multidegree is a tuple of nonnegative integer exponents in a fixed ambient
variable count n; x^a divides x^b iff a <= b componentwise.  A MonomialIdeal
stores the unique minimal generating set, sorted lexicographically, so that
ideal equality is plain value equality.  All values are immutable and all
operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as lattice_product
from typing import Iterable, Iterator, Sequence

from .errors import InputError

Multidegree = tuple[int, ...]


def as_degree(exponents: Sequence[int], n: int | None = None) -> Multidegree:
    """Coerce to a validated exponent tuple, optionally enforcing length n."""
    deg = tuple(int(e) for e in exponents)
    if any(e < 0 for e in deg):
        raise InputError(f"negative exponent in {deg}")
    if n is not None and len(deg) != n:
        raise InputError(f"expected a multidegree of length {n}, got {deg}")
    return deg


def divides(a: Multidegree, b: Multidegree) -> bool:
    """x^a | x^b, i.e. a <= b componentwise."""
    if len(a) != len(b):
        raise InputError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def deg_add(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(x + y for x, y in zip(a, b))


def deg_lcm(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(max(x, y) for x, y in zip(a, b))


def deg_colon(g: Multidegree, m: Multidegree) -> Multidegree:
    """Exponent of x^g / gcd(x^g, x^m), the colon step for one generator."""
    return tuple(max(x - y, 0) for x, y in zip(g, m))


def support(a: Multidegree) -> frozenset[int]:
    """1-based variable indices with positive exponent."""
    return frozenset(j + 1 for j, e in enumerate(a) if e > 0)


def iter_box(corner: Multidegree) -> Iterator[Multidegree]:
    """All multidegrees a with 0 <= a <= corner, in lexicographic order."""
    return lattice_product(*(range(c + 1) for c in corner))


def minimalize(gens: Iterable[Sequence[int]], n: int) -> tuple[Multidegree, ...]:
    """The unique minimal generating set: divisibility-redundant degrees dropped.

    Sorting by total degree first makes a single forward divisibility scan
    sufficient (a proper divisor always has strictly smaller total degree).
    """
    degs = sorted({as_degree(g, n) for g in gens}, key=lambda d: (sum(d), d))
    kept: list[Multidegree] = []
    for d in degs:
        if not any(divides(m, d) for m in kept):
            kept.append(d)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in K[x_1..x_n], as its minimal generating set.

    The zero ideal has no generators; the unit ideal has the single
    generator (0,...,0).
    """

    n: int
    gens: tuple[Multidegree, ...]

    @classmethod
    def make(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        if n < 1:
            raise InputError(f"ambient variable count must be positive, got {n}")
        return cls(n, minimalize(gens, n))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls.make(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls.make(n, ((0,) * n,))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def _check_ambient(self, other: "MonomialIdeal") -> None:
        if self.n != other.n:
            raise InputError(f"ambient mismatch: {self.n} vs {other.n}")

    def contains(self, a: Sequence[int]) -> bool:
        """Membership of the monomial x^a."""
        deg = as_degree(a, self.n)
        return any(divides(g, deg) for g in self.gens)

    def subset_of(self, other: "MonomialIdeal") -> bool:
        self._check_ambient(other)
        return all(other.contains(g) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        return MonomialIdeal.make(self.n, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        return MonomialIdeal.make(
            self.n, (deg_add(a, b) for a in self.gens for b in other.gens)
        )

    def __pow__(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise InputError(f"negative power {k}")
        out = MonomialIdeal.unit(self.n)
        for _ in range(k):
            out = out * self
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        return MonomialIdeal.make(
            self.n, (deg_lcm(a, b) for a in self.gens for b in other.gens)
        )

    def colon(self, m: Sequence[int]) -> "MonomialIdeal":
        """The colon ideal (I : x^m)."""
        deg = as_degree(m, self.n)
        return MonomialIdeal.make(self.n, (deg_colon(g, deg) for g in self.gens))

    def restrict(self, labels: Sequence[int]) -> "MonomialIdeal":
        """I intersected with K[x_j : j in labels], re-indexed to ambient len(labels).

        Valid for monomial ideals because a monomial supported on the label set
        lies in I iff some generator supported on the label set divides it.
        """
        labs = _as_labels(labels, self.n)
        keep = frozenset(labs)
        gens = [
            tuple(g[v - 1] for v in labs)
            for g in self.gens
            if support(g) <= keep
        ]
        return MonomialIdeal.make(len(labs), gens)

    def extend(self, labels: Sequence[int], n: int) -> "MonomialIdeal":
        """Zero-pad into ambient n, coordinate i landing on variable labels[i]."""
        labs = _as_labels(labels, n)
        if len(labs) != self.n:
            raise InputError(
                f"label count {len(labs)} does not match ambient {self.n}"
            )
        gens = []
        for g in self.gens:
            ext = [0] * n
            for e, v in zip(g, labs):
                ext[v - 1] = e
            gens.append(tuple(ext))
        return MonomialIdeal.make(n, gens)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialIdeal":
        try:
            return cls.make(int(obj["n"]), obj["gens"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed ideal JSON: {obj!r}") from exc


def _as_labels(labels: Sequence[int], n: int) -> tuple[int, ...]:
    labs = tuple(int(v) for v in labels)
    if any(not 1 <= v <= n for v in labs):
        raise InputError(f"variable labels {labs} out of range 1..{n}")
    if any(x >= y for x, y in zip(labs, labs[1:])):
        raise InputError(f"variable labels must be strictly increasing: {labs}")
    return labs


def members_in_box(ideal: MonomialIdeal, corner: Multidegree) -> set[Multidegree]:
    """All multidegrees a <= corner with x^a in the ideal.

    Dynamic programming over the box: a is a member iff a is a generator or
    a - e_j is a member for some positive coordinate j.  Linear in the box
    size, independent of the number of generators.
    """
    corner = as_degree(corner, ideal.n)
    genset = frozenset(ideal.gens)
    members: set[Multidegree] = set()
    for a in iter_box(corner):
        if a in genset or any(
            e > 0 and a[:j] + (e - 1,) + a[j + 1 :] in members
            for j, e in enumerate(a)
        ):
            members.add(a)
    return members
