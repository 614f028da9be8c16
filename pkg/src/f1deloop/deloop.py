"""Multisimplicial gamma-sets and the iterated delooping construction.

An n-fold simplicial gamma-set is an executable functor taking a
multidegree — an n-tuple of simplicial levels plus one gamma level — to a
labelled pointed set, contravariantly functorial in each simplicial
coordinate and covariantly in the gamma coordinate.  Multidegrees are plain
tuples of non-negative integers, and as everywhere else index 0 of a level
is its basepoint.

Delooping adds one simplicial coordinate, appended last: the new level ``k``
is absorbed into the gamma level through the smash ``<k> ^ <m> = <k*m>``,
the new coordinate acts through the circle functor, and the old gamma
action is smashed with the identity.  Because the smash encoding is
strictly unital and associative, evaluating the new coordinate at 1
recovers the original functor on the nose, and the n-fold delooping of the
unit has the literal closed form ``<k_1 * ... * k_n * m>``.

Also here: spheres built as external smashes of circles, the cube-quotient
model built independently by precomposition of monotone maps, wedges and
folds (the free partial commutative monoid structure), the inclusion of the
delooped unit into the mod-2 Eilenberg-MacLane object, and the mechanical
verifiers for all of it.  Functors are descriptions: values and action
tables are computed lazily and memoized, and big Eilenberg-MacLane levels
are only ever touched pointwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .finset import (
    DeltaMap,
    PointedMap,
    circle_map,
    codegeneracy,
    coface,
    compose,
    compose_delta,
    delta_identity,
    enumerate_delta_maps,
    enumerate_ptd_maps,
    gamma_face,
    identity_map,
    ptd_map,
    smash,
)
from .gamma import FiniteAbelianGroup, GammaNatTrans, GammaSet, axes_inclusion, eilenberg_maclane, f1
from .isosearch import LevelSystem, search_natural_bijection


@lru_cache(maxsize=None)
def _circle_assignment(alpha: DeltaMap) -> tuple[int, ...]:
    return circle_map(alpha).assignment


@lru_cache(maxsize=None)
def _smash_circle_right(alpha: DeltaMap, m: int) -> PointedMap:
    """The pointed map ``<b*m> -> <a*m>`` a delooped coordinate action factors through."""
    return smash(circle_map(alpha), identity_map(m))


@lru_cache(maxsize=None)
def _smash_left_identity(k: int, f: PointedMap) -> PointedMap:
    return smash(identity_map(k), f)


# ---------------------------------------------------------------------------
# functor base classes
# ---------------------------------------------------------------------------

class MultiSimplicialGammaSet:
    """Functor on n simplicial coordinates and one gamma coordinate.

    Subclasses implement ``_level`` plus the pointwise actions.  The action
    of a monotone map ``alpha: [a] -> [b]`` in coordinate ``i`` carries the
    multidegree ``at`` (with ``at[i] == b``) to ``at`` with coordinate ``i``
    replaced by ``a``; the action of a pointed map carries gamma level
    ``f.domain`` to ``f.codomain``.
    """

    arity = 0
    name = "multisimplicial gamma-set"

    def __init__(self):
        self._levels = {}
        self._indexes = {}
        self._delta_tables = {}
        self._gamma_tables = {}

    def _level(self, ks: tuple[int, ...], m: int) -> tuple:
        raise NotImplementedError

    def act_delta(self, i: int, alpha: DeltaMap, at: tuple[int, ...], m: int, x):
        raise NotImplementedError

    def act_gamma(self, f: PointedMap, ks: tuple[int, ...], x):
        raise NotImplementedError

    def level(self, ks: tuple[int, ...], m: int) -> tuple:
        key = (ks, m)
        if key not in self._levels:
            self._levels[key] = self._level(ks, m)
        return self._levels[key]

    def index(self, ks, m) -> dict:
        key = (ks, m)
        if key not in self._indexes:
            self._indexes[key] = {x: i for i, x in enumerate(self.level(ks, m))}
        return self._indexes[key]

    def size(self, ks, m) -> int:
        return len(self.level(ks, m))

    def basepoint(self, ks, m):
        return self.level(ks, m)[0]

    def delta_table(self, i: int, alpha: DeltaMap, at: tuple[int, ...], m: int) -> tuple[int, ...]:
        key = (i, alpha, at, m)
        if key not in self._delta_tables:
            target = at[:i] + (alpha.domain,) + at[i + 1:]
            idx = self.index(target, m)
            self._delta_tables[key] = tuple(
                idx[self.act_delta(i, alpha, at, m, x)] for x in self.level(at, m)
            )
        return self._delta_tables[key]

    def gamma_table(self, f: PointedMap, ks: tuple[int, ...]) -> tuple[int, ...]:
        key = (f, ks)
        if key not in self._gamma_tables:
            idx = self.index(ks, f.codomain.size)
            self._gamma_tables[key] = tuple(
                idx[self.act_gamma(f, ks, x)] for x in self.level(ks, f.domain.size)
            )
        return self._gamma_tables[key]

    def at_gamma(self, k: int) -> "MultiSimplicialPointedSet":
        """The underlying multisimplicial pointed set at gamma level ``<k>``."""
        return _GammaSlice(self, k)

    def __repr__(self):
        return self.name


class MultiSimplicialPointedSet:
    """Functor on n simplicial coordinates only; same conventions as above."""

    arity = 0
    name = "multisimplicial pointed set"

    def __init__(self):
        self._levels = {}
        self._indexes = {}
        self._delta_tables = {}

    def _level(self, ks: tuple[int, ...]) -> tuple:
        raise NotImplementedError

    def act_delta(self, i: int, alpha: DeltaMap, at: tuple[int, ...], x):
        raise NotImplementedError

    def level(self, ks) -> tuple:
        if ks not in self._levels:
            self._levels[ks] = self._level(ks)
        return self._levels[ks]

    def index(self, ks) -> dict:
        if ks not in self._indexes:
            self._indexes[ks] = {x: i for i, x in enumerate(self.level(ks))}
        return self._indexes[ks]

    def size(self, ks) -> int:
        return len(self.level(ks))

    def basepoint(self, ks):
        return self.level(ks)[0]

    def delta_table(self, i, alpha, at) -> tuple[int, ...]:
        key = (i, alpha, at)
        if key not in self._delta_tables:
            target = at[:i] + (alpha.domain,) + at[i + 1:]
            idx = self.index(target)
            self._delta_tables[key] = tuple(
                idx[self.act_delta(i, alpha, at, x)] for x in self.level(at)
            )
        return self._delta_tables[key]

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------------------
# lifting, delooping, evaluating back at 1
# ---------------------------------------------------------------------------

class _Lifted(MultiSimplicialGammaSet):
    """A gamma-set viewed as an arity-0 multisimplicial gamma-set."""

    arity = 0

    def __init__(self, g: GammaSet):
        super().__init__()
        self.inner = g
        self.name = g.name

    def _level(self, ks, m):
        return self.inner.level(m)

    def act_delta(self, i, alpha, at, m, x):
        raise IndexError("an arity-0 functor has no simplicial coordinates")

    def act_gamma(self, f, ks, x):
        return self.inner.apply(f, x)

    def gamma_table(self, f, ks):
        return self.inner.table(f)


class _Deloop(MultiSimplicialGammaSet):
    def __init__(self, inner: MultiSimplicialGammaSet):
        super().__init__()
        self.inner = inner
        self.arity = inner.arity + 1
        self.name = f"B({inner.name})"

    def _level(self, ks, m):
        return self.inner.level(ks[:-1], ks[-1] * m)

    def act_delta(self, i, alpha, at, m, x):
        if i < self.arity - 1:
            return self.inner.act_delta(i, alpha, at[:-1], at[-1] * m, x)
        return self.inner.act_gamma(_smash_circle_right(alpha, m), at[:-1], x)

    def act_gamma(self, f, ks, x):
        return self.inner.act_gamma(_smash_left_identity(ks[-1], f), ks[:-1], x)

    def delta_table(self, i, alpha, at, m):
        if i < self.arity - 1:
            return self.inner.delta_table(i, alpha, at[:-1], at[-1] * m)
        return self.inner.gamma_table(_smash_circle_right(alpha, m), at[:-1])

    def gamma_table(self, f, ks):
        return self.inner.gamma_table(_smash_left_identity(ks[-1], f), ks[:-1])


class _EvaluateAtOne(MultiSimplicialGammaSet):
    def __init__(self, inner: MultiSimplicialGammaSet):
        if inner.arity < 1:
            raise ValueError("need at least one simplicial coordinate to evaluate at 1")
        super().__init__()
        self.inner = inner
        self.arity = inner.arity - 1
        self.name = f"{inner.name}|[1]"

    def _level(self, ks, m):
        return self.inner.level(ks + (1,), m)

    def act_delta(self, i, alpha, at, m, x):
        return self.inner.act_delta(i, alpha, at + (1,), m, x)

    def act_gamma(self, f, ks, x):
        return self.inner.act_gamma(f, ks + (1,), x)

    def delta_table(self, i, alpha, at, m):
        return self.inner.delta_table(i, alpha, at + (1,), m)

    def gamma_table(self, f, ks):
        return self.inner.gamma_table(f, ks + (1,))


def lift_gamma(g: GammaSet) -> MultiSimplicialGammaSet:
    return _Lifted(g)


def _as_multi(X) -> MultiSimplicialGammaSet:
    return lift_gamma(X) if isinstance(X, GammaSet) else X


def deloop(X) -> MultiSimplicialGammaSet:
    """One delooping: a new last simplicial coordinate, fed through smash."""
    return _Deloop(_as_multi(X))


def deloop_n(X, n: int) -> MultiSimplicialGammaSet:
    if n < 0:
        raise ValueError("cannot deloop a negative number of times")
    out = _as_multi(X)
    for _ in range(n):
        out = _Deloop(out)
    return out


def evaluate_at_one(X: MultiSimplicialGammaSet) -> MultiSimplicialGammaSet:
    """Restrict the last simplicial coordinate to level 1; a strict right
    inverse to ``deloop`` under the fixed smash encoding."""
    return _EvaluateAtOne(X)


def em_deloop(group: FiniteAbelianGroup, n: int) -> MultiSimplicialGammaSet:
    """The n-fold delooping of the Eilenberg-MacLane gamma-set of ``group``."""
    return deloop_n(eilenberg_maclane(group), n)


class _GammaSlice(MultiSimplicialPointedSet):
    def __init__(self, inner: MultiSimplicialGammaSet, k: int):
        super().__init__()
        self.inner = inner
        self.k = k
        self.arity = inner.arity
        self.name = f"{inner.name}<{k}>"

    def _level(self, ks):
        return self.inner.level(ks, self.k)

    def act_delta(self, i, alpha, at, x):
        return self.inner.act_delta(i, alpha, at, self.k, x)

    def delta_table(self, i, alpha, at):
        return self.inner.delta_table(i, alpha, at, self.k)


# ---------------------------------------------------------------------------
# spheres, cubes, products, wedges
# ---------------------------------------------------------------------------

def _decode(code: int, radices: tuple[int, ...]) -> tuple[int, ...]:
    digits = []
    for r in reversed(radices):
        code, d = divmod(code, r)
        digits.append(d)
    return tuple(reversed(digits))


def _encode(digits, radices) -> int:
    acc = 0
    for d, r in zip(digits, radices):
        acc = acc * r + d
    return acc


class _Sphere(MultiSimplicialPointedSet):
    """External smash of n circles: level ``ks`` is ``<k_1 * ... * k_n>``
    under the mixed-radix pairing, coordinate actions via the circle functor."""

    def __init__(self, n: int):
        super().__init__()
        self.arity = n
        self.name = f"S^{n}"

    def _level(self, ks):
        return tuple(range(prod(ks) + 1))

    def act_delta(self, i, alpha, at, x):
        if x == 0:
            return 0
        digits = _decode(x - 1, at)
        image = _circle_assignment(alpha)[digits[i]]
        if image == 0:
            return 0
        target = at[:i] + (alpha.domain,) + at[i + 1:]
        digits = digits[:i] + (image - 1,) + digits[i + 1:]
        return _encode(digits, target) + 1


class _CubeQuotient(MultiSimplicialPointedSet):
    """The n-cube with its boundary collapsed, built from first principles.

    Levels are tuples of non-constant monotone maps to ``[1]``, one per
    coordinate and encoded by jump position; tuples with a constant
    coordinate lie on the boundary and are identified with the basepoint.
    Actions precompose each coordinate, independently of the closed formula
    the sphere uses, so agreement between the two is a real cross-check.
    """

    def __init__(self, n: int):
        super().__init__()
        self.arity = n
        self.name = f"cube-quotient^{n}"

    def _level(self, ks):
        cells = itertools.product(*[range(1, k + 1) for k in ks])
        return (0,) + tuple(cells)

    def act_delta(self, i, alpha, at, x):
        if x == 0:
            return 0
        j = x[i]
        values = [1 if alpha(t) >= j else 0 for t in range(alpha.domain + 1)]
        if values[0] == 1 or values[-1] == 0:
            return 0
        return x[:i] + (values.index(1),) + x[i + 1:]


def sphere(n: int) -> MultiSimplicialPointedSet:
    if n < 0:
        raise ValueError("sphere dimension must be non-negative")
    return _Sphere(n)


def cube_quotient(n: int) -> MultiSimplicialPointedSet:
    if n < 0:
        raise ValueError("cube dimension must be non-negative")
    return _CubeQuotient(n)


class _ProductPointed(MultiSimplicialPointedSet):
    def __init__(self, left: MultiSimplicialPointedSet, right: MultiSimplicialPointedSet):
        if left.arity != right.arity:
            raise ValueError("product factors must have equal arity")
        super().__init__()
        self.left = left
        self.right = right
        self.arity = left.arity
        self.name = f"({left.name} x {right.name})"

    def _level(self, ks):
        return tuple(itertools.product(self.left.level(ks), self.right.level(ks)))

    def act_delta(self, i, alpha, at, x):
        return (self.left.act_delta(i, alpha, at, x[0]),
                self.right.act_delta(i, alpha, at, x[1]))


class _ProductMulti(MultiSimplicialGammaSet):
    def __init__(self, left: MultiSimplicialGammaSet, right: MultiSimplicialGammaSet):
        if left.arity != right.arity:
            raise ValueError("product factors must have equal arity")
        super().__init__()
        self.left = left
        self.right = right
        self.arity = left.arity
        self.name = f"({left.name} x {right.name})"

    def _level(self, ks, m):
        return tuple(itertools.product(self.left.level(ks, m), self.right.level(ks, m)))

    def act_delta(self, i, alpha, at, m, x):
        return (self.left.act_delta(i, alpha, at, m, x[0]),
                self.right.act_delta(i, alpha, at, m, x[1]))

    def act_gamma(self, f, ks, x):
        return (self.left.act_gamma(f, ks, x[0]),
                self.right.act_gamma(f, ks, x[1]))


def product_pointed(left, right) -> MultiSimplicialPointedSet:
    return _ProductPointed(left, right)


def product_multi(left, right) -> MultiSimplicialGammaSet:
    return _ProductMulti(_as_multi(left), _as_multi(right))


class _Fold(MultiSimplicialGammaSet):
    """The free partial commutative monoid on a pointed multisimplicial set.

    Gamma level ``<m>`` is the wedge of m labelled copies; pointed maps
    relabel summands and fold them together, collapsing summands sent to the
    basepoint, while simplicial actions work inside each summand.
    """

    def __init__(self, summand: MultiSimplicialPointedSet):
        super().__init__()
        self.summand = summand
        self.arity = summand.arity
        self.name = f"({summand.name})-fold"

    def _level(self, ks, m):
        cells = self.summand.level(ks)[1:]
        return (0,) + tuple((i, x) for i in range(1, m + 1) for x in cells)

    def act_gamma(self, f, ks, x):
        if x == 0:
            return 0
        i, s = x
        j = f(i)
        return (j, s) if j else 0

    def act_delta(self, i, alpha, at, m, x):
        if x == 0:
            return 0
        summand_index, s = x
        y = self.summand.act_delta(i, alpha, at, s)
        target = at[:i] + (alpha.domain,) + at[i + 1:]
        if y == self.summand.basepoint(target):
            return 0
        return (summand_index, y)


def fold_construction(summand: MultiSimplicialPointedSet) -> MultiSimplicialGammaSet:
    return _Fold(summand)


def wedge_pointed(summand: MultiSimplicialPointedSet, k: int) -> MultiSimplicialPointedSet:
    """The k-fold wedge of a pointed multisimplicial set with itself."""
    return _Fold(summand).at_gamma(k)


# ---------------------------------------------------------------------------
# degeneracy bookkeeping
# ---------------------------------------------------------------------------

def degenerate_indices(X: MultiSimplicialPointedSet, ks: tuple[int, ...]) -> frozenset:
    """Indices at ``ks`` lying in the image of some degeneracy operator,
    found by enumerating degeneracy images one level down per coordinate."""
    out = set()
    for i, k in enumerate(ks):
        if k == 0:
            continue
        below = ks[:i] + (k - 1,) + ks[i + 1:]
        for j in range(k):
            out.update(X.delta_table(i, codegeneracy(j, k - 1), below))
    return frozenset(out)


def is_degenerate(X: MultiSimplicialPointedSet, ks: tuple[int, ...], e) -> bool:
    idx = X.index(ks)[e]
    if idx == 0:
        raise ValueError("the basepoint is neither degenerate nor non-degenerate here")
    return idx in degenerate_indices(X, ks)


def nondegenerate_census(X: MultiSimplicialPointedSet, K: int) -> dict[tuple[int, ...], int]:
    """Non-basepoint, non-degenerate cell counts at every multidegree up to K."""
    out = {}
    for ks in itertools.product(range(K + 1), repeat=X.arity):
        degenerate = degenerate_indices(X, ks)
        out[ks] = X.size(ks) - 1 - sum(1 for t in degenerate if t != 0)
    return out


# ---------------------------------------------------------------------------
# isomorphism search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiIso:
    """A natural levelwise bijection within the stated truncations."""

    mapping: dict
    trunc_simplicial: int
    trunc_gamma: int | None


def _delta_action_specs(arity: int, K: int):
    """Canonical order of coordinate actions: multidegree, coordinate, map."""
    for at in itertools.product(range(K + 1), repeat=arity):
        for i in range(arity):
            for a in range(K + 1):
                for alpha in enumerate_delta_maps(a, at[i]):
                    yield at, i, alpha


def multisimp_iso_on_truncation(X, Y, K: int, T: int | None = None) -> MultiIso | None:
    """Search for a levelwise bijection commuting with every coordinate action
    within ``K`` (and every gamma action within ``T`` for gamma-set inputs).

    The search is deterministic; None certifies no isomorphism exists at
    these truncations, with level sizes the first obstruction tried.
    """
    if X.arity != Y.arity:
        return None
    pointed = isinstance(X, MultiSimplicialPointedSet)
    if pointed != isinstance(Y, MultiSimplicialPointedSet):
        raise ValueError("cannot compare a gamma-set object with a pointed one")
    if not pointed and T is None:
        raise ValueError("gamma-set comparison needs a gamma truncation")

    if pointed:
        keys = list(itertools.product(range(K + 1), repeat=X.arity))
        sizes_x = {ks: X.size(ks) for ks in keys}
        sizes_y = {ks: Y.size(ks) for ks in keys}
    else:
        keys = [
            (ks, m)
            for ks in itertools.product(range(K + 1), repeat=X.arity)
            for m in range(T + 1)
        ]
        sizes_x = {key: X.size(*key) for key in keys}
        sizes_y = {key: Y.size(*key) for key in keys}
    if sizes_x != sizes_y:
        return None

    actions_x, actions_y = [], []
    if pointed:
        for at, i, alpha in _delta_action_specs(X.arity, K):
            aid = ("d", i, alpha.domain, alpha.codomain, alpha.assignment)
            dst = at[:i] + (alpha.domain,) + at[i + 1:]
            actions_x.append((aid + (at,), at, dst, X.delta_table(i, alpha, at)))
            actions_y.append((aid + (at,), at, dst, Y.delta_table(i, alpha, at)))
    else:
        for at, i, alpha in _delta_action_specs(X.arity, K):
            aid = ("d", i, alpha.domain, alpha.codomain, alpha.assignment)
            for m in range(T + 1):
                dst = at[:i] + (alpha.domain,) + at[i + 1:]
                actions_x.append((aid + (at, m), (at, m), (dst, m),
                                  X.delta_table(i, alpha, at, m)))
                actions_y.append((aid + (at, m), (at, m), (dst, m),
                                  Y.delta_table(i, alpha, at, m)))
        for ks in itertools.product(range(K + 1), repeat=X.arity):
            for a in range(T + 1):
                for b in range(T + 1):
                    for f in enumerate_ptd_maps(a, b):
                        aid = ("g", a, b, f.assignment, ks)
                        actions_x.append((aid, (ks, a), (ks, b), X.gamma_table(f, ks)))
                        actions_y.append((aid, (ks, a), (ks, b), Y.gamma_table(f, ks)))

    result = search_natural_bijection(
        LevelSystem(sizes_x, actions_x), LevelSystem(sizes_y, actions_y)
    )
    if result is None:
        return None
    if pointed:
        mapping = {
            ks: {X.level(ks)[i]: Y.level(ks)[j] for i, j in enumerate(result[ks])}
            for ks in keys
        }
    else:
        mapping = {
            key: {X.level(*key)[i]: Y.level(*key)[j] for i, j in enumerate(result[key])}
            for key in keys
        }
    return MultiIso(mapping, K, None if pointed else T)


# ---------------------------------------------------------------------------
# natural transformations of multisimplicial gamma-sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiNatCertificate:
    injective: bool
    natural: bool
    trunc_simplicial: int
    trunc_gamma: int
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.injective and self.natural


class MultiNatTrans:
    """A levelwise map of multisimplicial gamma-sets, given pointwise.

    Targets are only ever evaluated pointwise, so the transformation stays
    usable when target levels are exponentially large.
    """

    def __init__(self, source, target, component, name=""):
        self.source = source
        self.target = target
        self._component = component
        self.name = name or f"{source.name} => {target.name}"

    def component(self, ks, m, x):
        return self._component(ks, m, x)

    def certify(self, K: int, T: int) -> MultiNatCertificate:
        src, tgt = self.source, self.target
        for ks in itertools.product(range(K + 1), repeat=src.arity):
            for m in range(T + 1):
                images = [self.component(ks, m, x) for x in src.level(ks, m)]
                if len(set(images)) != len(images):
                    return MultiNatCertificate(
                        False, True, K, T, f"not injective at {ks} <{m}>"
                    )
        for at, i, alpha in _delta_action_specs(src.arity, K):
            dst = at[:i] + (alpha.domain,) + at[i + 1:]
            for m in range(T + 1):
                for x in src.level(at, m):
                    lhs = self.component(dst, m, src.act_delta(i, alpha, at, m, x))
                    rhs = tgt.act_delta(i, alpha, at, m, self.component(at, m, x))
                    if lhs != rhs:
                        return MultiNatCertificate(
                            True, False, K, T,
                            f"coordinate {i} action of {alpha} at {at} <{m}> on {x!r}",
                        )
        for ks in itertools.product(range(K + 1), repeat=src.arity):
            for a in range(T + 1):
                for b in range(T + 1):
                    for f in enumerate_ptd_maps(a, b):
                        for x in src.level(ks, a):
                            lhs = self.component(ks, b, src.act_gamma(f, ks, x))
                            rhs = tgt.act_gamma(f, ks, self.component(ks, a, x))
                            if lhs != rhs:
                                return MultiNatCertificate(
                                    True, False, K, T,
                                    f"gamma action of {f} at {ks} on {x!r}",
                                )
        return MultiNatCertificate(True, True, K, T)

    def __repr__(self):
        return self.name


def lift_nat(eta: GammaNatTrans) -> MultiNatTrans:
    return MultiNatTrans(
        lift_gamma(eta.source),
        lift_gamma(eta.target),
        lambda ks, m, x: eta.component(m, x),
        eta.name,
    )


def deloop_nat(eta: MultiNatTrans) -> MultiNatTrans:
    """Deloop a natural transformation: the new coordinate passes through the
    smashed gamma level, so components just re-index."""
    return MultiNatTrans(
        _Deloop(eta.source),
        _Deloop(eta.target),
        lambda ks, m, x: eta.component(ks[:-1], ks[-1] * m, x),
        f"B({eta.name})",
    )


def em_inclusion(n: int, K: int, T: int) -> MultiNatTrans:
    """The delooped axes inclusion of the unit into the mod-2
    Eilenberg-MacLane object, certified injective and natural within the
    truncations; the certificate is attached to the result."""
    eta = lift_nat(axes_inclusion())
    for _ in range(n):
        eta = deloop_nat(eta)
    eta.certificate = eta.certify(K, T)
    return eta


# ---------------------------------------------------------------------------
# verification sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepReport:
    violations: tuple
    checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def levelwise_equal(X: MultiSimplicialGammaSet, Y: MultiSimplicialGammaSet,
                    K: int, T: int) -> str | None:
    """Strict levelwise equality of labels and of every action table within
    the truncations; returns a witness string or None when identical."""
    if X.arity != Y.arity:
        return f"arity {X.arity} != {Y.arity}"
    for ks in itertools.product(range(K + 1), repeat=X.arity):
        for m in range(T + 1):
            if X.level(ks, m) != Y.level(ks, m):
                return f"levels differ at {ks} <{m}>"
    for at, i, alpha in _delta_action_specs(X.arity, K):
        for m in range(T + 1):
            if X.delta_table(i, alpha, at, m) != Y.delta_table(i, alpha, at, m):
                return f"coordinate {i} action of {alpha} differs at {at} <{m}>"
    for ks in itertools.product(range(K + 1), repeat=X.arity):
        for a in range(T + 1):
            for b in range(T + 1):
                for f in enumerate_ptd_maps(a, b):
                    if X.gamma_table(f, ks) != Y.gamma_table(f, ks):
                        return f"gamma action of {f} differs at {ks}"
    return None


def _delta_generators(K: int):
    """Cofaces and codegeneracies with both endpoints within ``[0, K]``."""
    gens = []
    for k in range(1, K + 1):
        gens.extend(coface(i, k) for i in range(k + 1))
    for k in range(K):
        gens.extend(codegeneracy(j, k) for j in range(k + 1))
    return gens


def _gamma_generators(T: int):
    """A generating family of pointed maps with all levels within ``[0, T]``:
    collapses and conflations, order-preserving one-point insertions, and
    adjacent transpositions.  Every pointed map is a composite of these."""
    gens = []
    for k in range(1, T + 1):
        gens.extend(gamma_face(i, k) for i in range(k + 1))
    for k in range(T):
        for skip in range(1, k + 2):
            gens.append(ptd_map(k, k + 1,
                                tuple(x if x < skip else x + 1 for x in range(1, k + 1))))
    for k in range(2, T + 1):
        for s in range(1, k):
            values = list(range(1, k + 1))
            values[s - 1], values[s] = values[s], values[s - 1]
            gens.append(ptd_map(k, k, tuple(values)))
    return gens


def verify_multisimplicial(X: MultiSimplicialGammaSet, K: int, T: int,
                           morphisms: str = "generators") -> SweepReport:
    """Functor laws per coordinate and commutation across coordinates.

    ``morphisms="all"`` ranges over every monotone/pointed map within the
    truncations and is exhaustive but quadratic in their number; the default
    checks all generator pairs, which determine the rest by composition.
    """
    if morphisms == "all":
        deltas = [alpha for a in range(K + 1) for b in range(K + 1)
                  for alpha in enumerate_delta_maps(a, b)]
        gammas = [f for a in range(T + 1) for b in range(T + 1)
                  for f in enumerate_ptd_maps(a, b)]
    elif morphisms == "generators":
        deltas = _delta_generators(K)
        gammas = _gamma_generators(T)
    else:
        raise ValueError(f"unknown morphism selection {morphisms!r}")

    violations = []
    checked = 0
    n = X.arity

    def note(kind, detail):
        violations.append((kind, detail))

    multidegrees = list(itertools.product(range(K + 1), repeat=n))

    # identities and basepoint preservation
    for at in multidegrees:
        for m in range(T + 1):
            for i in range(n):
                ident = X.delta_table(i, delta_identity(at[i]), at, m)
                checked += 1
                if ident != tuple(range(X.size(at, m))):
                    note("delta-identity", (i, at, m))
            if X.gamma_table(identity_map(m), at) != tuple(range(X.size(at, m))):
                note("gamma-identity", (at, m))

    by_cod: dict[int, list[DeltaMap]] = {}
    for alpha in deltas:
        by_cod.setdefault(alpha.codomain, []).append(alpha)

    # composition within one simplicial coordinate (contravariant)
    for at in multidegrees:
        for i in range(n):
            for beta in by_cod.get(at[i], []):
                mid = at[:i] + (beta.domain,) + at[i + 1:]
                if beta.domain > K:
                    continue
                for alpha in by_cod.get(beta.domain, []):
                    if alpha.domain > K:
                        continue
                    for m in range(T + 1):
                        tb = X.delta_table(i, beta, at, m)
                        ta = X.delta_table(i, alpha, mid, m)
                        composite = compose_delta(beta, alpha)
                        tc = X.delta_table(i, composite, at, m)
                        checked += 1
                        if tc != tuple(ta[v] for v in tb):
                            note("delta-composition", (i, alpha, beta, at, m))

    # composition in the gamma coordinate (covariant)
    by_dom: dict[int, list[PointedMap]] = {}
    for f in gammas:
        by_dom.setdefault(f.domain.size, []).append(f)
    for at in multidegrees:
        for f in gammas:
            tf = X.gamma_table(f, at)
            for g in by_dom.get(f.codomain.size, []):
                tg = X.gamma_table(g, at)
                tc = X.gamma_table(compose(g, f), at)
                checked += 1
                if tc != tuple(tg[v] for v in tf):
                    note("gamma-composition", (f, g, at))

    # commutation of actions in distinct coordinates
    for at in multidegrees:
        for i in range(n):
            for j in range(i + 1, n):
                for alpha in by_cod.get(at[i], []):
                    if alpha.domain > K:
                        continue
                    for beta in by_cod.get(at[j], []):
                        if beta.domain > K:
                            continue
                        mid_i = at[:i] + (alpha.domain,) + at[i + 1:]
                        mid_j = at[:j] + (beta.domain,) + at[j + 1:]
                        for m in range(T + 1):
                            first_i = X.delta_table(i, alpha, at, m)
                            then_j = X.delta_table(j, beta, mid_i, m)
                            first_j = X.delta_table(j, beta, at, m)
                            then_i = X.delta_table(i, alpha, mid_j, m)
                            checked += 1
                            if (tuple(then_j[v] for v in first_i)
                                    != tuple(then_i[v] for v in first_j)):
                                note("coordinate-commutation", (i, j, alpha, beta, at, m))
        for i in range(n):
            for alpha in by_cod.get(at[i], []):
                if alpha.domain > K:
                    continue
                mid_i = at[:i] + (alpha.domain,) + at[i + 1:]
                for f in gammas:
                    td_first = X.delta_table(i, alpha, at, f.domain.size)
                    tg_then = X.gamma_table(f, mid_i)
                    tg_first = X.gamma_table(f, at)
                    td_then = X.delta_table(i, alpha, at, f.codomain.size)
                    checked += 1
                    if (tuple(tg_then[v] for v in td_first)
                            != tuple(td_then[v] for v in tg_first)):
                        note("delta-gamma-commutation", (i, alpha, f, at))

    return SweepReport(tuple(violations), checked)


def verify_face_action(n: int, k: int, K: int) -> SweepReport:
    """Transport the face actions of the delooped unit at gamma level ``<k>``
    along the wedge decomposition and confirm the outer faces project a
    summand away while inner faces fold two adjacent summands together.

    The wedge decomposition itself (images of the k summand inclusions
    partitioning the level) is re-established at every multidegree as part
    of the check.
    """
    if k < 1:
        raise ValueError("face actions need a gamma level of at least 1")
    X = deloop_n(f1(), n)
    inclusions = [ptd_map(1, k, (j,)) for j in range(1, k + 1)]
    inclusions_below = [ptd_map(1, k - 1, (j,)) for j in range(1, k)]
    violations = []
    checked = 0
    for at in itertools.product(range(K + 1), repeat=n):
        cells = X.size(at, 1) - 1
        wedge_label = {}
        for j, incl in enumerate(inclusions, start=1):
            table = X.gamma_table(incl, at)
            for e in range(1, cells + 1):
                t = table[e]
                if t == 0 or t in wedge_label:
                    violations.append(("wedge-decomposition", (at, j, e)))
                    continue
                wedge_label[t] = (j, e)
        if len(wedge_label) != X.size(at, k) - 1:
            violations.append(("wedge-coverage", (at, len(wedge_label))))
            continue
        below = {}
        for j, incl in enumerate(inclusions_below, start=1):
            table = X.gamma_table(incl, at)
            for e in range(1, cells + 1):
                below[(j, e)] = table[e]
        for i in range(k + 1):
            face = gamma_face(i, k)
            actual = X.gamma_table(face, at)
            for t, (j, e) in wedge_label.items():
                target_summand = face(j)
                expected = 0 if target_summand == 0 else below[(target_summand, e)]
                checked += 1
                if actual[t] != expected:
                    violations.append(("face-action", (at, i, j, e)))
    return SweepReport(tuple(violations), checked)
