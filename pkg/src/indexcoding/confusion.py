"""Confusion graphs and their exact coloring.

Two message tuples confound some receiver when they agree on everything it
knows but differ in the message it wants; no zero-error code may give them
the same codeword.  The optimal codelength is therefore ceil(log2 chi) of
the confusion graph, and proper colorings with 2^L colors are exactly the
valid codes of length L.

The confusion graph is translation invariant: u and v are adjacent iff
u xor v lies in a difference set, so it is built once from that set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from indexcoding.bounds import mais, minrank
from indexcoding.graph import MAX_ENUM_VERTICES, Digraph


@dataclass(frozen=True)
class ConfusionGraph:
    """Vertices are all message tuples of n_messages bits; adj[u] is the
    bitmask of tuples confusable with u."""

    n_messages: int
    diffs: tuple[int, ...]
    adj: tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 << self.n_messages


def confusion_diffs(g: Digraph) -> tuple[int, ...]:
    """Nonzero difference patterns z that confound some receiver: z flips
    the wanted bit of receiver i while fixing all of i's priors."""
    out = []
    for z in range(1, 1 << g.n):
        for i in range(g.n):
            if z >> i & 1 and z & g.rows[i] == 0:
                out.append(z)
                break
    return tuple(out)


def build_confusion(g: Digraph) -> ConfusionGraph:
    diffs = confusion_diffs(g)
    size = 1 << g.n
    adj = []
    for u in range(size):
        mask = 0
        for z in diffs:
            mask |= 1 << (u ^ z)
        adj.append(mask)
    return ConfusionGraph(g.n, diffs, tuple(adj))


def _greedy_clique(adj: Sequence[int], nv: int) -> int:
    """Maximal clique bitmask, grown by highest degree inside the candidate
    set, lowest index on ties.  Deterministic lower-bound seed."""
    clique = 0
    cand = (1 << nv) - 1
    while cand:
        best_v = -1
        best_deg = -1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (adj[v] & cand).bit_count()
            if deg > best_deg:
                best_v, best_deg = v, deg
        clique |= 1 << best_v
        cand &= adj[best_v]
    return clique


def _max_clique(adj: Sequence[int], nv: int) -> int:
    """Maximum clique bitmask by pivoted branch and bound; sharpens the
    chromatic lower bound enough to skip most colorability proofs."""
    best = 0
    stack = [(0, (1 << nv) - 1)]
    while stack:
        cur, cand = stack.pop()
        if cur.bit_count() + cand.bit_count() <= best.bit_count():
            continue
        if cand == 0:
            best = cur
            continue
        pivot = -1
        pivot_deg = -1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (adj[v] & cand).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        ext = cand & ~adj[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            stack.append((cur | (1 << v), cand & adj[v]))
            cand ^= 1 << v
    return best


def _dsatur_order_and_bound(adj: Sequence[int], nv: int) -> tuple[list[int], int]:
    """Greedy coloring by descending saturation; returns the visit order and
    the number of colors used (an upper bound on chi)."""
    colors = [-1] * nv
    seen_colors = [0] * nv
    uncolored = (1 << nv) - 1
    order = []
    for _ in range(nv):
        best_v = -1
        best_rank = (-1, -1)
        m = uncolored
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            rank = (seen_colors[v].bit_count(), (adj[v] & uncolored).bit_count())
            if rank > best_rank:
                best_v, best_rank = v, rank
        c = 0
        while seen_colors[best_v] >> c & 1:
            c += 1
        colors[best_v] = c
        order.append(best_v)
        uncolored ^= 1 << best_v
        m = adj[best_v] & uncolored
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            seen_colors[w] |= 1 << c
    return order, max(colors) + 1


def _search_coloring(adj: Sequence[int], nv: int, k: int, clique: int | None = None) -> list[int] | None:
    """Exhaustive k-coloring by backtracking, or None.

    The next vertex to color is always a most-saturated uncolored one, so
    dead ends surface early.  Symmetry is broken two ways: a clique (greedy
    unless a better one is passed in) is preassigned distinct colors, and an
    uncolored vertex may open at most one fresh color.
    """
    if k <= 0:
        return None if nv else []
    if k >= nv:
        return list(range(nv))
    if clique is None:
        clique = _greedy_clique(adj, nv)
    if clique.bit_count() > k:
        return None
    colors = [-1] * nv
    seen = [0] * nv
    uncolored = (1 << nv) - 1
    used = 0
    m = clique
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        colors[v] = used
        uncolored ^= 1 << v
        w_mask = adj[v]
        while w_mask:
            w = (w_mask & -w_mask).bit_length() - 1
            w_mask &= w_mask - 1
            seen[w] |= 1 << used
        used += 1

    def assign(uncolored: int, used: int) -> bool:
        if uncolored == 0:
            return True
        v = -1
        rank = (-1, -1)
        m = uncolored
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            r = (seen[w].bit_count(), (adj[w] & uncolored).bit_count())
            if r > rank:
                v, rank = w, r
        remaining = uncolored ^ (1 << v)
        for c in range(min(k, used + 1)):
            if seen[v] >> c & 1:
                continue
            colors[v] = c
            touched = 0
            w_mask = adj[v] & remaining
            while w_mask:
                w = (w_mask & -w_mask).bit_length() - 1
                w_mask &= w_mask - 1
                if not seen[w] >> c & 1:
                    seen[w] |= 1 << c
                    touched |= 1 << w
            if assign(remaining, max(used, c + 1)):
                return True
            while touched:
                w = (touched & -touched).bit_length() - 1
                touched &= touched - 1
                seen[w] ^= 1 << c
        colors[v] = -1
        return False

    if assign(uncolored, used):
        return colors
    return None


def find_coloring(cg: ConfusionGraph, k: int) -> tuple[int, ...] | None:
    """A proper k-coloring as a color-per-tuple vector, or None if chi > k."""
    found = _search_coloring(cg.adj, cg.size, k)
    return None if found is None else tuple(found)


def is_k_colorable(cg: ConfusionGraph, k: int) -> bool:
    return _search_coloring(cg.adj, cg.size, k) is not None


def is_proper_coloring(cg: ConfusionGraph, colors: Sequence[int]) -> bool:
    if len(colors) != cg.size:
        return False
    for u in range(cg.size):
        m = cg.adj[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if v > u and colors[v] == colors[u]:
                return False
    return True


def chromatic_number(cg: ConfusionGraph) -> int:
    nv = cg.size
    clique = _max_clique(cg.adj, nv)
    _, ub = _dsatur_order_and_bound(cg.adj, nv)
    for k in range(clique.bit_count(), ub):
        if _search_coloring(cg.adj, nv, k, clique) is not None:
            return k
    return ub


def ell_star(g: Digraph) -> int:
    """Exact optimal zero-error codelength.

    Equal bounds settle it outright.  Otherwise walk candidate lengths L
    from the acyclic bound up, accepting the first L whose confusion graph
    is 2^L-colorable; the minrank fallthrough is always achievable because
    a fitting matrix of that rank is itself a valid linear code.
    """
    lo = mais(g)
    hi = minrank(g)
    if lo == hi:
        return lo
    if g.n > MAX_ENUM_VERTICES:
        raise ValueError(f"exact codelength between differing bounds needs n <= {MAX_ENUM_VERTICES}")
    cg = build_confusion(g)
    for length in range(lo, hi):
        if is_k_colorable(cg, 1 << length):
            return length
    return hi
