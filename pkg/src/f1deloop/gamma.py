"""Gamma-sets as executable functors from finite pointed sets to pointed sets.

A ``GammaSet`` is described by two callbacks: the labelled value at each
level ``<m>`` (a tuple whose first entry is the basepoint label) and the
pointwise action of a pointed map on a label.  Materialized actions are
index arrays, built lazily and memoized, so levels that are never touched
are never enumerated — the Eilenberg-MacLane functor has ``|A|**d``
elements at level ``d`` and is evaluated pointwise wherever possible.

Provided functors: the unit (the inclusion of finite pointed sets),
corepresentables, finite products, and Eilenberg-MacLane functors of
finite abelian groups, together with the axes inclusion of the unit into
the mod-2 Eilenberg-MacLane functor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .finset import PointedMap, PointedSet, compose, enumerate_ptd_maps, identity_map, ptd_map
from .isosearch import LevelSystem, search_natural_bijection
from .plasma import group_table_violations


class GammaSet:
    """Base class for executable pointed functors; subclasses implement
    ``_level`` and ``apply``."""

    name = "gamma-set"

    def __init__(self):
        self._levels: dict[int, tuple] = {}
        self._indexes: dict[int, dict] = {}
        self._tables: dict[PointedMap, tuple[int, ...]] = {}

    def _level(self, m: int) -> tuple:
        raise NotImplementedError

    def apply(self, f: PointedMap, x):
        """Action of ``f`` on one label of ``level(f.domain.size)``."""
        raise NotImplementedError

    def level(self, m: int) -> tuple:
        """Labels at level ``<m>``, basepoint first."""
        if m not in self._levels:
            self._levels[m] = self._level(m)
        return self._levels[m]

    def index(self, m: int) -> dict:
        if m not in self._indexes:
            self._indexes[m] = {x: i for i, x in enumerate(self.level(m))}
        return self._indexes[m]

    def size(self, m: int) -> int:
        return len(self.level(m))

    def basepoint(self, m: int):
        return self.level(m)[0]

    def table(self, f: PointedMap) -> tuple[int, ...]:
        """The action of ``f`` as an index array over ``level(f.domain.size)``."""
        if f not in self._tables:
            idx = self.index(f.codomain.size)
            self._tables[f] = tuple(idx[self.apply(f, x)] for x in self.level(f.domain.size))
        return self._tables[f]

    def __repr__(self) -> str:
        return self.name


class _F1(GammaSet):
    """The unit: level ``<m>`` is ``<m>`` itself and maps act as themselves."""

    name = "F1"

    def _level(self, m):
        return tuple(range(m + 1))

    def apply(self, f, x):
        return f(x)


class _Corepresentable(GammaSet):
    """Maps out of ``<n>``, with the zero map as basepoint; acts by postcomposition."""

    def __init__(self, n: int):
        super().__init__()
        self.n = n
        self.name = f"Gamma({n})"

    def _level(self, m):
        return tuple(itertools.product(range(m + 1), repeat=self.n))

    def apply(self, f, x):
        return tuple(f(v) for v in x)


class _Product(GammaSet):
    def __init__(self, left: GammaSet, right: GammaSet):
        super().__init__()
        self.left = left
        self.right = right
        self.name = f"({left.name} x {right.name})"

    def _level(self, m):
        return tuple(itertools.product(self.left.level(m), self.right.level(m)))

    def apply(self, f, x):
        return (self.left.apply(f, x[0]), self.right.apply(f, x[1]))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """An abelian group on ``{0, ..., order-1}`` given by its addition table."""

    table: tuple[tuple[int, ...], ...]
    name: str = "A"

    def __post_init__(self):
        bad = group_table_violations(self.table)
        if bad:
            raise ValueError(f"not an abelian group table: {bad[0]}")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        table = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
        return cls(table, f"Z/{n}")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def zero(self) -> int:
        return 0

    def add(self, x: int, y: int) -> int:
        return self.table[x][y]


class _EilenbergMacLane(GammaSet):
    """Level ``<d>`` is ``A**d``; a map acts by summing over its fibers."""

    def __init__(self, group: FiniteAbelianGroup):
        super().__init__()
        self.group = group
        self.name = f"H({group.name})"

    def _level(self, d):
        return tuple(itertools.product(range(self.group.order), repeat=d))

    def apply(self, f, x):
        out = [0] * f.codomain.size
        for i, v in enumerate(x, start=1):
            j = f(i)
            if j:
                out[j - 1] = self.group.add(out[j - 1], v)
        return tuple(out)


def f1() -> GammaSet:
    return _F1()


def corepresentable(n: int) -> GammaSet:
    if n < 0:
        raise ValueError("corepresenting object must be <n> with n >= 0")
    return _Corepresentable(n)


def gamma_product(left: GammaSet, right: GammaSet) -> GammaSet:
    return _Product(left, right)


def eilenberg_maclane(group: FiniteAbelianGroup) -> GammaSet:
    return _EilenbergMacLane(group)


# ---------------------------------------------------------------------------
# natural transformations
# ---------------------------------------------------------------------------

class GammaNatTrans:
    """A levelwise map between gamma-sets, given pointwise on labels."""

    def __init__(self, source: GammaSet, target: GammaSet, component, name=""):
        self.source = source
        self.target = target
        self._component = component
        self.name = name or f"{source.name} => {target.name}"

    def component(self, m: int, x):
        return self._component(m, x)

    def __repr__(self) -> str:
        return self.name


def axes_inclusion() -> GammaNatTrans:
    """The inclusion of the unit into mod-2 Eilenberg-MacLane: level ``<d>``
    sends ``i`` to the i-th standard basis tuple of ``(Z/2)**d``."""
    target = eilenberg_maclane(FiniteAbelianGroup.cyclic(2))

    def component(d, x):
        return tuple(1 if i == x else 0 for i in range(1, d + 1))

    return GammaNatTrans(f1(), target, component, "axes")


@dataclass(frozen=True)
class NatTransReport:
    injective: bool
    natural: bool
    truncation: int
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.injective and self.natural


def check_nat_trans(eta: GammaNatTrans, T: int) -> NatTransReport:
    """Verify levelwise injectivity and naturality against every pointed map
    between levels up to ``T``, evaluating the target only pointwise."""
    for m in range(T + 1):
        images = [eta.component(m, x) for x in eta.source.level(m)]
        if len(set(images)) != len(images):
            return NatTransReport(False, True, T, f"not injective at level {m}")
    for a in range(T + 1):
        for b in range(T + 1):
            for f in enumerate_ptd_maps(a, b):
                for x in eta.source.level(a):
                    lhs = eta.component(b, eta.source.apply(f, x))
                    rhs = eta.target.apply(f, eta.component(a, x))
                    if lhs != rhs:
                        return NatTransReport(
                            True, False, T,
                            f"naturality fails for {f} at element {x!r}",
                        )
    return NatTransReport(True, True, T)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FunctorReport:
    violations: tuple
    truncation: int
    composites_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_functor(X: GammaSet, T: int) -> FunctorReport:
    """Check the functor laws on all pointed maps between levels up to ``T``
    and all composable pairs among them.

    Composites are compared through raw assignment tuples so the sweep stays
    a few dictionary lookups per pair.
    """
    violations = []
    if X.size(0) != 1:
        violations.append(("pointedness", "level <0> is not a single point"))
    tables: dict[tuple[int, int], dict[tuple, tuple]] = {}
    for a in range(T + 1):
        for b in range(T + 1):
            tables[(a, b)] = {f.assignment: X.table(f) for f in enumerate_ptd_maps(a, b)}
    for m in range(T + 1):
        if X.table(identity_map(m)) != tuple(range(X.size(m))):
            violations.append(("identity", f"identity law fails at level {m}"))
    for (a, b), block in tables.items():
        for assignment, t in block.items():
            if t[0] != 0:
                violations.append(("basepoint", f"map {assignment} at ({a},{b}) moves the basepoint"))
    checked = 0
    for b in range(T + 1):
        for a in range(T + 1):
            for f_asgn, tf in tables[(a, b)].items():
                for c in range(T + 1):
                    block_bc = tables[(b, c)]
                    block_ac = tables[(a, c)]
                    for g_asgn, tg in block_bc.items():
                        checked += 1
                        comp = tuple(g_asgn[v - 1] if v else 0 for v in f_asgn)
                        if tuple(tg[i] for i in tf) != block_ac[comp]:
                            violations.append(
                                ("composition",
                                 f"g{g_asgn} after f{f_asgn} at sizes ({a},{b},{c})")
                            )
                            if len(violations) > 10:
                                return FunctorReport(tuple(violations), T, checked)
    return FunctorReport(tuple(violations), T, checked)


def segal_comparison(X: GammaSet, d: int) -> tuple[bool, bool]:
    """Inject/surject status of the comparison ``X<d> -> X<1>**d`` induced by
    the ``d`` projections; a bijection here is the Segal condition."""
    projections = [
        ptd_map(d, 1, tuple(1 if j == i else 0 for j in range(1, d + 1)))
        for i in range(1, d + 1)
    ]
    images = [tuple(X.apply(p, x) for p in projections) for x in X.level(d)]
    injective = len(set(images)) == len(images)
    surjective = len(set(images)) == X.size(1) ** d
    return injective, surjective


@dataclass(frozen=True)
class GammaIso:
    """A levelwise bijection commuting with every pointed map within the bound."""

    mapping: dict[int, dict]
    truncation: int


def gamma_iso_on_truncation(X: GammaSet, Y: GammaSet, T: int) -> GammaIso | None:
    """Search for a natural levelwise bijection between two gamma-sets,
    checking naturality against all pointed maps within the truncation.
    Deterministic; returns None when no isomorphism exists."""
    keys = list(range(T + 1))
    sizes_x = {m: X.size(m) for m in keys}
    sizes_y = {m: Y.size(m) for m in keys}
    if sizes_x != sizes_y:
        return None
    maps = [f for a in keys for b in keys for f in enumerate_ptd_maps(a, b)]
    sys_x = LevelSystem(sizes_x, [
        (("g", f.domain.size, f.codomain.size, f.assignment),
         f.domain.size, f.codomain.size, X.table(f))
        for f in maps
    ])
    sys_y = LevelSystem(sizes_y, [
        (("g", f.domain.size, f.codomain.size, f.assignment),
         f.domain.size, f.codomain.size, Y.table(f))
        for f in maps
    ])
    result = search_natural_bijection(sys_x, sys_y)
    if result is None:
        return None
    mapping = {
        m: {X.level(m)[i]: Y.level(m)[j] for i, j in enumerate(result[m])}
        for m in keys
    }
    return GammaIso(mapping, T)
