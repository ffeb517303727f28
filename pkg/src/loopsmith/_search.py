"""Constraint-propagating backtracking over bijections between two Cayley tables.

Strict mode finds maps with f(xy) = f(x)f(y); half mode accepts
f(xy) ∈ {f(x)f(y), f(y)f(x)}. Domains are int bitmasks over target indices.
Whenever two assigned elements a, b meet, the images of ab, a\\b and b/a are
narrowed to at most two candidates, which is what makes half mode tractable:
the images of a generating set do not determine a half-automorphism.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .loops import FiniteLoop, generate_subloop


class _Found(Exception):
    pass


def generating_sequence(L: FiniteLoop) -> list:
    """Greedy generators: repeatedly take the lowest index outside the generated subloop."""
    gens: list = []
    covered = {0}
    for x in range(L.order):
        if x not in covered:
            gens.append(x)
            covered = set(generate_subloop(L, gens))
    return gens


def assignment_order(L: FiniteLoop) -> list:
    gens = generating_sequence(L)
    seen = set(gens) | {0}
    return [0, *gens, *(x for x in range(L.order) if x not in seen)]


class _Ctx:
    def __init__(self, src: FiniteLoop, dst: FiniteLoop, half: bool):
        self.n = src.order
        self.S, self.Sl, self.Sr = src.rows, src.ldiv, src.rdiv
        self.D, self.Dl, self.Dr = dst.rows, dst.ldiv, dst.rdiv
        self.St, self.Dt = src.table, dst.table
        self.half = half
        self.order = assignment_order(src)

    def verify(self, img) -> bool:
        f = np.asarray(img)
        lhs = f[self.St]
        fwd = self.Dt[np.ix_(f, f)]
        if self.half:
            return bool(((lhs == fwd) | (lhs == fwd.T)).all())
        return bool((lhs == fwd).all())


def _propagate(ctx: _Ctx, dom, img, used, assigned, queue):
    """Run pair constraints to fixpoint. Returns the new ``used`` mask or None on conflict."""
    S, Sl, Sr, D, Dl, Dr, half = ctx.S, ctx.Sl, ctx.Sr, ctx.D, ctx.Dl, ctx.Dr, ctx.half

    def restrict(z, mask):
        nonlocal used
        d = dom[z] & mask
        if img[z] >= 0:
            return d != 0
        d &= ~used
        if not d:
            return False
        dom[z] = d
        if not d & (d - 1):
            y = d.bit_length() - 1
            img[z] = y
            used |= d
            assigned.append(z)
            queue.append(z)
        return True

    while queue:
        x = queue.pop()
        fx = img[x]
        for b in assigned[:]:
            fb = img[b]
            for a, fa, c, fc in ((x, fx, b, fb), (b, fb, x, fx)):
                p = D[fa][fc]
                m = 1 << p
                if half:
                    m |= 1 << D[fc][fa]
                if not restrict(S[a][c], m):
                    return None
                m = 1 << Dl[fa][fc]
                if half:
                    m |= 1 << Dr[fa][fc]
                if not restrict(Sl[a][c], m):
                    return None
                m = 1 << Dr[fa][fc]
                if half:
                    m |= 1 << Dl[fa][fc]
                if not restrict(Sr[a][c], m):
                    return None
    return used


def _assign(dom, img, used, assigned, queue, z, y):
    bit = 1 << y
    if used & bit:
        return None
    img[z] = y
    dom[z] = bit
    assigned.append(z)
    queue.append(z)
    return used | bit


def _explore(ctx: _Ctx, dom, img, used, assigned, queue, out, first):
    while True:
        used = _propagate(ctx, dom, img, used, assigned, queue)
        if used is None:
            return
        best, best_count, best_eff, forced = None, 0, 0, None
        for z in ctx.order:
            if img[z] >= 0:
                continue
            eff = dom[z] & ~used
            if not eff:
                return
            c = eff.bit_count()
            if c == 1:
                forced = (z, eff.bit_length() - 1)
                break
            if best is None or c < best_count:
                best, best_count, best_eff = z, c, eff
        if forced is None:
            break
        used = _assign(dom, img, used, assigned, queue, *forced)
        if used is None:
            return
    if best is None:
        if ctx.verify(img):
            out.append(tuple(img))
            if first:
                raise _Found
        return
    for y in _bits(best_eff):
        d2, i2, a2 = dom[:], img[:], assigned[:]
        u2 = _assign(d2, i2, used, a2, [], best, y)
        if u2 is not None:
            _explore(ctx, d2, i2, u2, a2, [best], out, first)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _root(ctx: _Ctx, src: FiniteLoop, dst: FiniteLoop, order_prune: bool):
    n = ctx.n
    full = (1 << n) - 1
    if order_prune:
        by_order: dict = {}
        for y, o in enumerate(dst.element_orders):
            by_order[o] = by_order.get(o, 0) | (1 << y)
        dom = [by_order.get(o, 0) for o in src.element_orders]
    else:
        dom = [full] * n
    img = [-1] * n
    assigned: list = []
    queue: list = []
    used = _assign(dom, img, 0, assigned, queue, 0, 0)
    return dom, img, used, assigned, queue


def _subtree(src, dst, half, dom, img, used, assigned, z, y):
    ctx = _Ctx(src, dst, half)
    out: list = []
    u2 = _assign(dom, img, used, assigned, [], z, y)
    if u2 is not None:
        _explore(ctx, dom, img, u2, assigned, [z], out, False)
    return out


def search(
    src: FiniteLoop,
    dst: FiniteLoop,
    *,
    half: bool,
    first: bool = False,
    order_prune: bool = True,
    parallel: int = 1,
) -> list:
    """All bijections src -> dst satisfying the mode's constraint, sorted by image tuple."""
    if src.order != dst.order:
        return []
    ctx = _Ctx(src, dst, half)
    dom, img, used, assigned, queue = _root(ctx, src, dst, order_prune)
    out: list = []
    if parallel <= 1 or first:
        try:
            _explore(ctx, dom, img, used, assigned, queue, out, first)
        except _Found:
            pass
        return sorted(out)

    # split at the first branching variable; each branch owns its state
    used = _propagate(ctx, dom, img, used, assigned, queue)
    if used is None:
        return []
    pending = [z for z in ctx.order if img[z] < 0]
    if not pending:
        return [tuple(img)] if ctx.verify(img) else []
    z = min(pending, key=lambda v: ((dom[v] & ~used).bit_count(), ctx.order.index(v)))
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        futures = [
            pool.submit(_subtree, src, dst, half, dom[:], img[:], used, assigned[:], z, y)
            for y in _bits(dom[z] & ~used)
        ]
        for fut in futures:
            out.extend(fut.result())
    return sorted(out)
