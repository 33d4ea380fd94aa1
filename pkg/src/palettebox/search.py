"""Resumable backtracking kernels with numba and pure-Python backends.

Three searches live here: proper k-edge-colorability, minimum-palette
search with a distinct-palette cap, and search constrained to a fixed
family of target palettes.  Each kernel advances by at most ``node_limit``
nodes per call and leaves its entire stack in the caller's arrays, so
wall-clock budgets are enforced between calls; compiled code never reads
the clock.  Budget interruptions therefore cannot change which solution
is found, only whether the search finishes.

The same function bodies serve both backends: when numba is importable
they are compiled with ``njit``, and the uncompiled originals remain
available as the fallback.  Select a backend explicitly with the
environment variable ``PALETTEBOX_BACKEND=python`` or ``=numba``.

Colors are tracked in int64 bitmasks (bit c-1 for color c), which caps
usable colors at 62; exact search beyond that is out of desk scale anyway.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


BACKEND_ENV = "PALETTEBOX_BACKEND"
MAX_COLORS = 62

FOUND = 1
EXHAUSTED = 0
PAUSED = 2
BUDGET = 3

_CHUNK_NODES = 1 << 17


def active_backend() -> str:
    """Resolve the kernel backend from the environment."""
    choice = os.environ.get(BACKEND_ENV, "").strip().lower()
    if choice == "python":
        return "python"
    if choice == "numba":
        if not HAS_NUMBA:
            raise RuntimeError("PALETTEBOX_BACKEND=numba but numba is not importable")
        return "numba"
    if choice:
        raise RuntimeError(f"unknown {BACKEND_ENV} value {choice!r}")
    return "numba" if HAS_NUMBA else "python"


# ---------------------------------------------------------------------------
# kernel bodies (compiled and interpreted from the same source)


def _color_chunk_py(eu, ev, m, k, assign, vmask, maxused, pos, node_limit):
    """Extend a proper k-coloring depth-first; new colors ascend.

    Returns (status, pos, nodes).  At depth d, ``assign[d]`` is the last
    color tried there; its bits are set only while the search sits deeper.
    """
    d = pos
    nodes = 0
    while True:
        if nodes >= node_limit:
            return PAUSED, d, nodes
        nodes += 1
        u = eu[d]
        v = ev[d]
        both = vmask[u] | vmask[v]
        cap = maxused[d] + 1
        if cap > k:
            cap = k
        c = assign[d] + 1
        while c <= cap and (both >> (c - 1)) & 1 == 1:
            c += 1
        if c <= cap:
            assign[d] = c
            bit = 1 << (c - 1)
            vmask[u] |= bit
            vmask[v] |= bit
            maxused[d + 1] = c if c > maxused[d] else maxused[d]
            d += 1
            if d == m:
                return FOUND, d, nodes
        else:
            assign[d] = 0
            d -= 1
            if d < 0:
                return EXHAUSTED, d, nodes
            bit = 1 << (assign[d] - 1)
            vmask[eu[d]] ^= bit
            vmask[ev[d]] ^= bit


def _pcount_chunk_py(eu, ev, m, k, deg, p_target, assign, vmask, maxused,
                     deg_left, distinct, dsize, added, dcount, pos, node_limit):
    """Proper-coloring search allowing at most p_target distinct palettes.

    ``vmask`` doubles as the running palette of each vertex.  A vertex is
    complete once its last incident edge is colored; completed palettes
    are collected in ``distinct[:dcount]`` and may never exceed p_target
    distinct values.  Once the cap is reached, every partially colored
    vertex must still fit inside some collected palette of its exact
    degree, which prunes hard.

    Returns (status, pos, dcount, nodes).
    """
    d = pos
    nodes = 0
    while True:
        if nodes >= node_limit:
            return PAUSED, d, dcount, nodes
        nodes += 1
        u = eu[d]
        v = ev[d]
        both = vmask[u] | vmask[v]
        cap = maxused[d] + 1
        if cap > k:
            cap = k
        c = assign[d] + 1
        committed = False
        while c <= cap:
            if (both >> (c - 1)) & 1 == 0:
                bit = 1 << (c - 1)
                new_u = vmask[u] | bit
                new_v = vmask[v] | bit
                ok = True
                n_new = 0
                w1 = np.int64(-1)
                w2 = np.int64(-1)
                if deg_left[u] == 1:
                    hit = False
                    for i in range(dcount):
                        if distinct[i] == new_u:
                            hit = True
                            break
                    if not hit:
                        w1 = new_u
                        n_new = 1
                elif dcount == p_target:
                    fits = False
                    for i in range(dcount):
                        if (new_u & ~distinct[i]) == 0 and dsize[i] == deg[u]:
                            fits = True
                            break
                    ok = fits
                if ok:
                    if deg_left[v] == 1:
                        hit = new_v == w1
                        if not hit:
                            for i in range(dcount):
                                if distinct[i] == new_v:
                                    hit = True
                                    break
                        if not hit:
                            w2 = new_v
                            n_new += 1
                    elif dcount == p_target:
                        fits = False
                        for i in range(dcount):
                            if (new_v & ~distinct[i]) == 0 and dsize[i] == deg[v]:
                                fits = True
                                break
                        ok = fits
                if ok and dcount + n_new > p_target:
                    ok = False
                if ok:
                    assign[d] = c
                    vmask[u] = new_u
                    vmask[v] = new_v
                    deg_left[u] -= 1
                    deg_left[v] -= 1
                    if w1 >= 0:
                        distinct[dcount] = w1
                        sz = 0
                        t = w1
                        while t != 0:
                            sz += t & 1
                            t >>= 1
                        dsize[dcount] = sz
                        dcount += 1
                    if w2 >= 0:
                        distinct[dcount] = w2
                        sz = 0
                        t = w2
                        while t != 0:
                            sz += t & 1
                            t >>= 1
                        dsize[dcount] = sz
                        dcount += 1
                    added[d] = n_new
                    maxused[d + 1] = c if c > maxused[d] else maxused[d]
                    committed = True
                    break
            c += 1
        if committed:
            d += 1
            if d == m:
                return FOUND, d, dcount, nodes
        else:
            assign[d] = 0
            d -= 1
            if d < 0:
                return EXHAUSTED, d, dcount, nodes
            bit = 1 << (assign[d] - 1)
            u = eu[d]
            v = ev[d]
            vmask[u] ^= bit
            vmask[v] ^= bit
            deg_left[u] += 1
            deg_left[v] += 1
            dcount -= added[d]


def _family_chunk_py(eu, ev, m, k, allowed, nallowed, union_mask, assign,
                     vmask, deg_left, pos, node_limit):
    """Proper-coloring search whose vertex palettes must land in a family.

    Every partial palette must stay a subset of some allowed mask and
    every completed palette must equal one.  The family fixes concrete
    colors, so color-symmetry breaking does not apply here.

    Returns (status, pos, nodes).
    """
    d = pos
    nodes = 0
    while True:
        if nodes >= node_limit:
            return PAUSED, d, nodes
        nodes += 1
        u = eu[d]
        v = ev[d]
        both = vmask[u] | vmask[v]
        c = assign[d] + 1
        committed = False
        while c <= k:
            bit = 1 << (c - 1)
            if (both & bit) == 0 and (union_mask & bit) != 0:
                new_u = vmask[u] | bit
                new_v = vmask[v] | bit
                ok = False
                for i in range(nallowed):
                    a = allowed[i]
                    if deg_left[u] == 1:
                        if a == new_u:
                            ok = True
                            break
                    elif (new_u & ~a) == 0:
                        ok = True
                        break
                if ok:
                    ok = False
                    for i in range(nallowed):
                        a = allowed[i]
                        if deg_left[v] == 1:
                            if a == new_v:
                                ok = True
                                break
                        elif (new_v & ~a) == 0:
                            ok = True
                            break
                if ok:
                    assign[d] = c
                    vmask[u] = new_u
                    vmask[v] = new_v
                    deg_left[u] -= 1
                    deg_left[v] -= 1
                    committed = True
                    break
            c += 1
        if committed:
            d += 1
            if d == m:
                return FOUND, d, nodes
        else:
            assign[d] = 0
            d -= 1
            if d < 0:
                return EXHAUSTED, d, nodes
            bit = 1 << (assign[d] - 1)
            vmask[eu[d]] ^= bit
            vmask[ev[d]] ^= bit
            deg_left[eu[d]] += 1
            deg_left[ev[d]] += 1


if HAS_NUMBA:
    _color_chunk_nb = njit(cache=True)(_color_chunk_py)
    _pcount_chunk_nb = njit(cache=True)(_pcount_chunk_py)
    _family_chunk_nb = njit(cache=True)(_family_chunk_py)


def _steps():
    if active_backend() == "numba":
        return _color_chunk_nb, _pcount_chunk_nb, _family_chunk_nb
    return _color_chunk_py, _pcount_chunk_py, _family_chunk_py


# ---------------------------------------------------------------------------
# budgets


@dataclass(frozen=True)
class SearchBudget:
    """Limits for exhaustive searches.

    ``max_nodes`` bounds backtracking nodes; ``max_seconds`` bounds wall
    time, checked between kernel chunks.  All searches are single worker
    and order-deterministic; ``deterministic`` additionally ignores the
    wall-clock limit so the outcome depends only on the node budget and
    is reproducible across machines.
    """

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    deterministic: bool = False

    def tracker(self) -> "BudgetTracker":
        return BudgetTracker(self)


class BudgetTracker:
    """Mutable consumption state shared by the searches of one operation."""

    def __init__(self, budget: Optional[SearchBudget]):
        budget = budget if budget is not None else SearchBudget()
        self.max_nodes = budget.max_nodes
        self.max_seconds = None if budget.deterministic else budget.max_seconds
        self.started = time.monotonic()
        self.nodes = 0

    def exceeded(self) -> bool:
        if self.max_nodes is not None and self.nodes >= self.max_nodes:
            return True
        if self.max_seconds is not None and time.monotonic() - self.started >= self.max_seconds:
            return True
        return False

    def next_chunk(self) -> int:
        if self.max_nodes is None:
            return _CHUNK_NODES
        return max(0, min(_CHUNK_NODES, self.max_nodes - self.nodes))

    @property
    def seconds(self) -> float:
        return time.monotonic() - self.started


def ensure_tracker(budget) -> BudgetTracker:
    if isinstance(budget, BudgetTracker):
        return budget
    return BudgetTracker(budget)


# ---------------------------------------------------------------------------
# wrappers


def _int64(xs) -> np.ndarray:
    return np.asarray(list(xs), dtype=np.int64)


def search_k_coloring(eu, ev, n: int, k: int, budget=None):
    """Search a proper edge coloring with colors in [k].

    ``eu``/``ev`` give edge endpoints in the intended search order.
    Returns (status, colors or None) with status FOUND, EXHAUSTED, or
    BUDGET; colors follow the search order.
    """
    m = len(eu)
    if m == 0:
        return FOUND, []
    if k <= 0:
        return EXHAUSTED, None
    if k > MAX_COLORS:
        raise ValueError(f"color count {k} exceeds the kernel limit of {MAX_COLORS}")
    tracker = ensure_tracker(budget)
    step = _steps()[0]
    eu_a, ev_a = _int64(eu), _int64(ev)
    assign = np.zeros(m, dtype=np.int64)
    vmask = np.zeros(n, dtype=np.int64)
    maxused = np.zeros(m + 1, dtype=np.int64)
    pos = 0
    while True:
        chunk = tracker.next_chunk()
        if chunk <= 0 or tracker.exceeded():
            return BUDGET, None
        status, pos, nodes = step(eu_a, ev_a, m, k, assign, vmask, maxused, pos, chunk)
        tracker.nodes += int(nodes)
        if status == FOUND:
            return FOUND, [int(c) for c in assign]
        if status == EXHAUSTED:
            return EXHAUSTED, None


def search_palette_count(eu, ev, n: int, deg, k: int, p_target: int, budget=None):
    """Search a proper coloring with at most p_target distinct palettes.

    Isolated vertices contribute an empty palette, pre-seeded into the
    collection.  Returns (status, colors or None).
    """
    m = len(eu)
    tracker = ensure_tracker(budget)
    seed_empty = 1 if any(d == 0 for d in deg) else 0
    if seed_empty and p_target < 1:
        return EXHAUSTED, None
    if m == 0:
        return FOUND, []
    if p_target < 1 or k <= 0:
        return EXHAUSTED, None
    if k > MAX_COLORS:
        raise ValueError(f"color count {k} exceeds the kernel limit of {MAX_COLORS}")
    step = _steps()[1]
    eu_a, ev_a = _int64(eu), _int64(ev)
    deg_a = _int64(deg)
    assign = np.zeros(m, dtype=np.int64)
    vmask = np.zeros(n, dtype=np.int64)
    maxused = np.zeros(m + 1, dtype=np.int64)
    deg_left = deg_a.copy()
    distinct = np.zeros(p_target + 1, dtype=np.int64)
    dsize = np.zeros(p_target + 1, dtype=np.int64)
    added = np.zeros(m, dtype=np.int64)
    dcount = seed_empty
    pos = 0
    while True:
        chunk = tracker.next_chunk()
        if chunk <= 0 or tracker.exceeded():
            return BUDGET, None
        status, pos, dcount, nodes = step(eu_a, ev_a, m, k, deg_a, p_target, assign,
                                          vmask, maxused, deg_left, distinct, dsize,
                                          added, dcount, pos, chunk)
        tracker.nodes += int(nodes)
        if status == FOUND:
            return FOUND, [int(c) for c in assign]
        if status == EXHAUSTED:
            return EXHAUSTED, None


def search_palette_family(eu, ev, n: int, deg, family, budget=None):
    """Search a proper coloring whose vertex palettes all lie in ``family``.

    ``family`` is an iterable of color sets.  Infeasible immediately if
    some vertex degree matches no family member's size.
    """
    m = len(eu)
    masks = []
    for pal in family:
        mask = 0
        for c in pal:
            if not (1 <= c <= MAX_COLORS):
                raise ValueError(f"family color {c} out of kernel range")
            mask |= 1 << (c - 1)
        masks.append(mask)
    if not masks:
        raise ValueError("palette family must be nonempty")
    sizes = {bin(mask).count("1") for mask in masks}
    if any(d not in sizes and d > 0 for d in deg):
        return EXHAUSTED, None
    if any(d == 0 for d in deg) and 0 not in sizes:
        return EXHAUSTED, None
    if m == 0:
        return FOUND, []
    tracker = ensure_tracker(budget)
    step = _steps()[2]
    union = 0
    for mask in masks:
        union |= mask
    k = union.bit_length()
    eu_a, ev_a = _int64(eu), _int64(ev)
    allowed = _int64(masks)
    assign = np.zeros(m, dtype=np.int64)
    vmask = np.zeros(n, dtype=np.int64)
    deg_left = _int64(deg)
    pos = 0
    while True:
        chunk = tracker.next_chunk()
        if chunk <= 0 or tracker.exceeded():
            return BUDGET, None
        status, pos, nodes = step(eu_a, ev_a, m, k, allowed, len(masks),
                                  np.int64(union), assign, vmask, deg_left, pos, chunk)
        tracker.nodes += int(nodes)
        if status == FOUND:
            return FOUND, [int(c) for c in assign]
        if status == EXHAUSTED:
            return EXHAUSTED, None
