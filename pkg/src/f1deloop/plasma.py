"""Commutative plasmas: sets with a multivalued partial addition.

A commutative plasma is a pointed set ``(X, 0)`` with a hyperoperation
``x + y`` valued in subsets of ``X``, subject to commutativity and the lax
identity law ``x in x + 0``.  Abelian groups are the plasmas whose
hyperoperation is singleton-valued and associative; partial monoids are the
ones where some sums are empty.  All carriers here are tiny, so axioms are
checked by exhaustive table scans and violations are reported as data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Plasma:
    """A finite carrier with a distinguished zero and a subset-valued addition."""

    carrier: tuple
    zero: object
    hyperop: dict = field(compare=False)
    name: str = field(default="", compare=False)

    def add(self, x, y) -> frozenset:
        return self.hyperop[(x, y)]

    def __repr__(self) -> str:
        return f"Plasma({self.name or self.carrier})"


def make_plasma(carrier, zero, table, name="") -> Plasma:
    """Build a plasma from any mapping ``(x, y) -> iterable of elements``."""
    carrier = tuple(carrier)
    hyperop = {
        (x, y): frozenset(table[(x, y)]) for x in carrier for y in carrier
    }
    return Plasma(carrier, zero, hyperop, name)


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.law} fails at {self.witness}"


@dataclass(frozen=True)
class PlasmaReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_plasma(p: Plasma) -> PlasmaReport:
    """Check the commutative-plasma axioms; violations come back with witnesses."""
    bad = []
    if p.zero not in p.carrier:
        bad.append(Violation("zero-in-carrier", (p.zero,)))
        return PlasmaReport(tuple(bad))
    for x in p.carrier:
        for y in p.carrier:
            if (x, y) not in p.hyperop:
                bad.append(Violation("totality", (x, y)))
                continue
            value = p.hyperop[(x, y)]
            if not value <= frozenset(p.carrier):
                bad.append(Violation("values-in-carrier", (x, y)))
            if p.hyperop.get((y, x)) != value:
                bad.append(Violation("commutativity", (x, y)))
        if x not in p.hyperop.get((x, p.zero), frozenset()):
            bad.append(Violation("lax-identity", (x,)))
    return PlasmaReport(tuple(bad))


def has_strict_identity(p: Plasma) -> bool:
    """Whether ``x + 0 = {x}`` on the nose, not merely ``x in x + 0``."""
    return all(p.add(x, p.zero) == frozenset({x}) for x in p.carrier)


@dataclass(frozen=True)
class MorphismCheck:
    ok: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_plasma_morphism(f: dict, p: Plasma, q: Plasma) -> MorphismCheck:
    """Check that ``f`` preserves zero and satisfies ``f(x + y) <= f(x) + f(y)``."""
    for x in p.carrier:
        if x not in f:
            raise ValueError(f"assignment not total: missing {x!r}")
    if f[p.zero] != q.zero:
        return MorphismCheck(False, (p.zero,), "zero not preserved")
    for x in p.carrier:
        for y in p.carrier:
            image = {f[z] for z in p.add(x, y)}
            if not image <= q.add(f[x], f[y]):
                return MorphismCheck(False, (x, y), "image containment fails")
    return MorphismCheck(True)


def standard_plasmas() -> dict[str, Plasma]:
    """The four strict-identity plasma structures on ``{0, 1}``.

    They differ only in the value of ``1 + 1``: the cyclic group gives
    ``{0}``, the boolean monoid ``{1}``, the Krasner hypergroup ``{0, 1}``,
    and the free partial monoid leaves it undefined.
    """
    table = {(0, 0): {0}, (0, 1): {1}, (1, 0): {1}}
    out = {}
    for name, sum11 in (
        ("Z2", {0}),
        ("boolean", {1}),
        ("krasner", {0, 1}),
        ("free", set()),
    ):
        out[name] = make_plasma((0, 1), 0, {**table, (1, 1): sum11}, name)
    return out


def enumerate_strict_plasmas(size: int) -> list[Plasma]:
    """All commutative plasmas on ``{0, ..., size-1}`` with strict identity.

    Strictness pins every sum involving 0, so only sums of non-zero pairs
    are free; the search ranges over all subset assignments for those and
    keeps the ones passing ``validate_plasma``.
    """
    elements = tuple(range(size))
    subsets = [frozenset(s) for r in range(size + 1)
               for s in itertools.combinations(elements, r)]
    pairs = [(x, y) for x in elements[1:] for y in elements[1:] if x <= y]
    found = []
    for choice in itertools.product(subsets, repeat=len(pairs)):
        table = {(x, 0): {x} for x in elements}
        table.update({(0, x): {x} for x in elements})
        for (x, y), value in zip(pairs, choice):
            table[(x, y)] = value
            table[(y, x)] = value
        p = make_plasma(elements, 0, table)
        if validate_plasma(p).ok:
            found.append(p)
    return found


def group_table_violations(table) -> list[Violation]:
    """Abelian-group axioms for an addition table over ``{0, ..., n-1}``.

    The identity is required to be the element 0.  Returns the first
    witness found for each failing axiom.
    """
    n = len(table)
    if any(len(row) != n for row in table):
        return [Violation("shape", (n,))]
    for row in table:
        for v in row:
            if not 0 <= v < n:
                return [Violation("closure", (v,))]
    bad = []
    for law, witness in (
        ("identity", next(((x,) for x in range(n) if table[0][x] != x or table[x][0] != x), None)),
        ("commutativity", next(((x, y) for x in range(n) for y in range(n)
                                if table[x][y] != table[y][x]), None)),
        ("associativity", next(((x, y, z) for x in range(n) for y in range(n) for z in range(n)
                                if table[table[x][y]][z] != table[x][table[y][z]]), None)),
        ("inverses", next(((x,) for x in range(n)
                           if all(table[x][y] != 0 for y in range(n))), None)),
    ):
        if witness is not None:
            bad.append(Violation(law, witness))
    return bad


def plasma_of_abelian_group(table, name="") -> Plasma:
    """The singleton-valued plasma of an abelian group given by its table."""
    bad = group_table_violations(table)
    if bad:
        raise ValueError(f"not an abelian group table: {bad[0]}")
    n = len(table)
    return make_plasma(
        range(n), 0,
        {(x, y): {table[x][y]} for x in range(n) for y in range(n)},
        name or f"Z{n}" if _is_cyclic(table) else name,
    )


def _is_cyclic(table) -> bool:
    n = len(table)
    return all(table[x][y] == (x + y) % n for x in range(n) for y in range(n))
