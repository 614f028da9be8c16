"""Skeletal finite pointed sets, the simplex category, and the circle functor.

Everything downstream is built from three kinds of combinatorial data:

* ``PointedSet(n)`` stands for the pointed set ``<n> = {*, 1, ..., n}``.
  Elements are encoded as integers with ``0`` reserved for the basepoint.
* ``PointedMap`` is a basepoint-preserving function between such sets,
  stored as a dense tuple (``assignment[i-1]`` is the image of ``i``).
* ``DeltaMap`` is a monotone map ``[a] -> [b]`` between finite ordinals,
  i.e. a morphism of the simplex category.

The bridge between the two categories is the circle functor
(``circle_level`` / ``circle_map``): the simplicial circle, the interval
with its endpoints identified, has ``m + 1`` simplices in level ``m``, and
the non-basepoint simplex ``i`` encodes the monotone map ``[m] -> [1]``
whose value jumps to ``1`` exactly at position ``i``.  This jump-position
encoding is fixed project-wide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class PointedSet:
    """The skeletal pointed set ``<size>``; two are equal iff sizes agree."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"pointed set size must be non-negative, got {self.size}")

    def elements(self) -> range:
        """All element codes, basepoint 0 first."""
        return range(self.size + 1)

    def nonbasepoint(self) -> range:
        return range(1, self.size + 1)

    def __repr__(self) -> str:
        return f"<{self.size}>"


def _size(s: PointedSet | int) -> int:
    return s.size if isinstance(s, PointedSet) else int(s)


@dataclass(frozen=True, slots=True)
class PointedMap:
    """A basepoint-preserving map between skeletal pointed sets.

    The basepoint is implicit: ``0`` always maps to ``0``, and assignment
    values of ``0`` record non-basepoint elements being collapsed.
    """

    domain: PointedSet
    codomain: PointedSet
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.domain.size:
            raise ValueError(
                f"assignment length {len(self.assignment)} does not match domain {self.domain}"
            )
        for v in self.assignment:
            if not 0 <= v <= self.codomain.size:
                raise ValueError(f"value {v} outside codomain {self.codomain}")

    def __call__(self, x: int) -> int:
        return 0 if x == 0 else self.assignment[x - 1]

    def is_identity(self) -> bool:
        return self.domain == self.codomain and self.assignment == tuple(
            self.domain.nonbasepoint()
        )

    def __repr__(self) -> str:
        return f"PointedMap({self.domain}->{self.codomain}, {self.assignment})"


def ptd_map(domain: PointedSet | int, codomain: PointedSet | int, values) -> PointedMap:
    """Convenience constructor accepting plain sizes and any iterable of values."""
    return PointedMap(PointedSet(_size(domain)), PointedSet(_size(codomain)), tuple(values))


def identity_map(n: PointedSet | int) -> PointedMap:
    n = _size(n)
    return ptd_map(n, n, range(1, n + 1))


def zero_map(m: PointedSet | int, n: PointedSet | int) -> PointedMap:
    """The map collapsing everything to the basepoint."""
    return ptd_map(m, n, (0,) * _size(m))


def compose(g: PointedMap, f: PointedMap) -> PointedMap:
    """The composite ``g after f``; domains and codomains must match up."""
    if f.codomain != g.domain:
        raise ValueError(f"cannot compose: {f.codomain} != {g.domain}")
    return PointedMap(f.domain, g.codomain, tuple(g(v) for v in f.assignment))


def enumerate_ptd_maps(m: PointedSet | int, n: PointedSet | int) -> list[PointedMap]:
    """All ``(n+1)**m`` pointed maps ``<m> -> <n>``, lexicographic on assignments."""
    m, n = _size(m), _size(n)
    dom, cod = PointedSet(m), PointedSet(n)
    return [
        PointedMap(dom, cod, values)
        for values in itertools.product(range(n + 1), repeat=m)
    ]


def smash(f: PointedMap, g: PointedMap) -> PointedMap:
    """Smash product of maps under the fixed pairing ``(i, j) -> (i-1)*c + j``.

    The encoding makes ``<1>`` a strict two-sided unit and the product
    strictly associative, so iterated constructions need no coherence
    bookkeeping.  ``<0>`` is absorbing.
    """
    a, c = f.domain.size, g.domain.size
    d = g.codomain.size
    values = []
    for i in range(1, a + 1):
        fi = f(i)
        for j in range(1, c + 1):
            gj = g(j)
            values.append(0 if fi == 0 or gj == 0 else (fi - 1) * d + gj)
    return ptd_map(a * c, f.codomain.size * d, values)


def wedge(f: PointedMap, g: PointedMap) -> PointedMap:
    """Wedge (block) sum: the left summand keeps its indices, the right is offset."""
    a, b = f.domain.size, f.codomain.size
    values = list(f.assignment)
    for v in g.assignment:
        values.append(0 if v == 0 else v + b)
    return ptd_map(a + g.domain.size, b + g.codomain.size, values)


def gamma_face(i: int, k: int) -> PointedMap:
    """The i-th face ``<k> -> <k-1>`` transported from the simplex category.

    ``i = 0`` collapses 1 and shifts down, ``i = k`` collapses k, and
    ``0 < i < k`` conflates ``i`` and ``i+1``.
    """
    if not 0 <= i <= k or k < 1:
        raise ValueError(f"face index {i} out of range for <{k}>")
    values = []
    for x in range(1, k + 1):
        if i == 0:
            values.append(0 if x == 1 else x - 1)
        elif i == k:
            values.append(0 if x == k else x)
        else:
            values.append(x if x <= i else x - 1)
    return ptd_map(k, k - 1, values)


# ---------------------------------------------------------------------------
# the simplex category
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class DeltaMap:
    """A monotone map ``[domain] -> [codomain]`` between finite ordinals."""

    domain: int
    codomain: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.domain < 0 or self.codomain < 0:
            raise ValueError("ordinals must be non-negative")
        if len(self.assignment) != self.domain + 1:
            raise ValueError(
                f"assignment length {len(self.assignment)} does not match [{self.domain}]"
            )
        prev = 0
        for v in self.assignment:
            if not 0 <= v <= self.codomain:
                raise ValueError(f"value {v} outside [{self.codomain}]")
            if v < prev:
                raise ValueError(f"assignment {self.assignment} is not monotone")
            prev = v

    def __call__(self, t: int) -> int:
        return self.assignment[t]

    def is_identity(self) -> bool:
        return self.domain == self.codomain and self.assignment == tuple(
            range(self.domain + 1)
        )

    def __repr__(self) -> str:
        return f"DeltaMap([{self.domain}]->[{self.codomain}], {self.assignment})"


def delta_map(a: int, b: int, values) -> DeltaMap:
    return DeltaMap(a, b, tuple(values))


def delta_identity(n: int) -> DeltaMap:
    return DeltaMap(n, n, tuple(range(n + 1)))


def compose_delta(g: DeltaMap, f: DeltaMap) -> DeltaMap:
    """The composite ``g after f`` in the simplex category."""
    if f.codomain != g.domain:
        raise ValueError(f"cannot compose: [{f.codomain}] != [{g.domain}]")
    return DeltaMap(f.domain, g.codomain, tuple(g(v) for v in f.assignment))


def coface(i: int, n: int) -> DeltaMap:
    """The injection ``[n-1] -> [n]`` skipping the value ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"coface index {i} out of range for [{n}]")
    return DeltaMap(n - 1, n, tuple(t if t < i else t + 1 for t in range(n)))


def codegeneracy(j: int, n: int) -> DeltaMap:
    """The surjection ``[n+1] -> [n]`` repeating the value ``j``."""
    if not 0 <= j <= n:
        raise ValueError(f"codegeneracy index {j} out of range for [{n}]")
    return DeltaMap(n + 1, n, tuple(t if t <= j else t - 1 for t in range(n + 2)))


def enumerate_delta_maps(a: int, b: int) -> list[DeltaMap]:
    """All monotone maps ``[a] -> [b]`` in lexicographic order."""
    return [
        DeltaMap(a, b, values)
        for values in itertools.combinations_with_replacement(range(b + 1), a + 1)
    ]


# ---------------------------------------------------------------------------
# the circle functor
# ---------------------------------------------------------------------------

def circle_level(m: int) -> PointedSet:
    """Level ``m`` of the simplicial circle: ``<m>`` under the jump encoding."""
    if m < 0:
        raise ValueError("level must be non-negative")
    return PointedSet(m)


def circle_map(alpha: DeltaMap) -> PointedMap:
    """The circle functor on a monotone map, contravariantly: ``<b> -> <a>``.

    Non-basepoint ``i`` (jump position in ``[b]``) goes to the first ``t``
    with ``alpha(t) >= i`` when the precomposed map is non-constant, and to
    the basepoint otherwise.
    """
    a, b = alpha.domain, alpha.codomain
    lo, hi = alpha(0), alpha(a)
    values = []
    for i in range(1, b + 1):
        if lo < i <= hi:
            values.append(next(t for t in range(1, a + 1) if alpha(t) >= i))
        else:
            values.append(0)
    return ptd_map(b, a, values)
