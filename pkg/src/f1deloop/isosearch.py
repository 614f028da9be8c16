"""Deterministic search for natural bijections between leveled systems.

A functor restricted to a finite truncation is, concretely, a family of
finite pointed sets (one per level key) together with index arrays for the
action of every morphism inside the truncation.  Two such systems are
isomorphic exactly when there is a levelwise bijection commuting with every
action and fixing basepoints, which is a labelled-transition-system
isomorphism problem.

The search proceeds in three stages:

1. cheap obstructions: level sizes must agree;
2. color refinement: vertices are colored by basepoint status and incoming
   multiplicity profiles, then iteratively refined by the colors of their
   images under every action until stable; mismatched color histograms rule
   out an isomorphism without search;
3. backtracking: unassigned vertices are matched to same-colored candidates
   in canonical order, and every assignment propagates forward along all
   actions, so a completed assignment has been checked against every
   morphism in the system.

All iteration orders are canonical, so results are reproducible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


@dataclass
class LevelSystem:
    """Sizes per level key plus actions ``(action_id, src, dst, index_table)``.

    Index 0 of every level is its basepoint.  Actions must be listed in the
    same order, with the same identifiers, in any two systems being compared.
    """

    sizes: dict
    actions: list


def search_natural_bijection(X: LevelSystem, Y: LevelSystem):
    """Return ``{key: tuple_of_indices}`` mapping X to Y naturally, or None."""
    keys = sorted(X.sizes)
    if sorted(Y.sizes) != keys:
        return None
    for k in keys:
        if X.sizes[k] != Y.sizes[k]:
            return None
    if len(X.actions) != len(Y.actions):
        raise ValueError("systems list different numbers of actions")
    out_pairs = {k: [] for k in keys}
    for (aid_x, src_x, dst_x, tx), (aid_y, src_y, dst_y, ty) in zip(X.actions, Y.actions):
        if (aid_x, src_x, dst_x) != (aid_y, src_y, dst_y):
            raise ValueError("action lists are not aligned")
        out_pairs[src_x].append((tx, ty, dst_x))

    colx, coly = _refined_colors(X, Y, keys)
    for k in keys:
        if Counter(colx[k]) != Counter(coly[k]):
            return None

    sizes = X.sizes
    phi = {k: [None] * sizes[k] for k in keys}
    psi = {k: [None] * sizes[k] for k in keys}
    trail: list[tuple] = []

    def assign(k, i, j) -> bool:
        queue = [(k, i, j)]
        while queue:
            k0, i0, j0 = queue.pop()
            cur = phi[k0][i0]
            if cur is not None:
                if cur != j0:
                    return False
                continue
            if psi[k0][j0] is not None or colx[k0][i0] != coly[k0][j0]:
                return False
            phi[k0][i0] = j0
            psi[k0][j0] = i0
            trail.append((k0, i0, j0))
            for tx, ty, d in out_pairs[k0]:
                queue.append((d, tx[i0], ty[j0]))
        return True

    def undo(mark) -> None:
        while len(trail) > mark:
            k0, i0, j0 = trail.pop()
            phi[k0][i0] = None
            psi[k0][j0] = None

    for k in keys:
        if not assign(k, 0, 0):
            return None

    order = [(k, i) for k in keys for i in range(sizes[k])]
    stack = []
    while True:
        v = next(((k, i) for k, i in order if phi[k][i] is None), None)
        if v is None:
            break
        k, i = v
        cands = [j for j in range(sizes[k])
                 if psi[k][j] is None and coly[k][j] == colx[k][i]]
        stack.append([k, i, cands, 0, len(trail)])
        advanced = False
        while stack and not advanced:
            frame = stack[-1]
            fk, fi, fcands, ci, mark = frame
            undo(mark)
            while ci < len(fcands):
                j = fcands[ci]
                ci += 1
                if assign(fk, fi, j):
                    frame[3] = ci
                    advanced = True
                    break
                undo(mark)
            if not advanced:
                stack.pop()
        if not advanced and not stack:
            return None

    for (aid, src, dst, tx), (_, _, _, ty) in zip(X.actions, Y.actions):
        for i in range(sizes[src]):
            if phi[dst][tx[i]] != ty[phi[src][i]]:
                raise AssertionError(f"propagation missed action {aid} at {src}:{i}")
    return {k: tuple(phi[k]) for k in keys}


def _refined_colors(X: LevelSystem, Y: LevelSystem, keys) -> tuple[dict, dict]:
    """Stable coloring of both systems over a shared palette.

    Initial colors come from the level key, basepoint status, and incoming
    multiplicity profile; each round recolors a vertex by the colors of its
    images under every action.  Both systems are interned together so equal
    colors mean equal signatures across systems, and refinement stops when
    the joint partition stops splitting.
    """
    def prepare(system):
        sizes = system.sizes
        incoming = {k: [[] for _ in range(sizes[k])] for k in keys}
        outs = {k: [] for k in keys}
        for pos, (aid, src, dst, table) in enumerate(system.actions):
            outs[src].append((pos, table, dst))
            for i, cnt in sorted(Counter(table).items()):
                incoming[dst][i].append((pos, cnt))
        return incoming, outs

    in_x, out_x = prepare(X)
    in_y, out_y = prepare(Y)

    intern: dict = {}

    def shade(sig):
        if sig not in intern:
            intern[sig] = len(intern)
        return intern[sig]

    def initial(system, incoming):
        return {
            k: [shade((k, i == 0, tuple(incoming[k][i])))
                for i in range(system.sizes[k])]
            for k in keys
        }

    colx = initial(X, in_x)
    coly = initial(Y, in_y)

    def recolor(system, colors, outs):
        return {
            k: [
                shade((colors[k][i],
                       tuple((pos, colors[d][t[i]]) for pos, t, d in outs[k])))
                for i in range(system.sizes[k])
            ]
            for k in keys
        }

    previous = -1
    while len(intern) != previous:
        previous = len(intern)
        intern = {}
        colx = recolor(X, colx, out_x)
        coly = recolor(Y, coly, out_y)
    return colx, coly
