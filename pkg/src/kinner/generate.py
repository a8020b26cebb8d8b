"""Seeded random k-inner plane graphs.

Construction works purely on the rotation system: start from a cycle on
n - k outer vertices, drop each inner vertex into an inner face and join
it to at least two corners of that face, then add random chords inside
inner faces.  Every step splits a face, so the result is connected,
simple and plane by construction, and the outer face never changes.
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from .goodtree import NoGoodTreeError, RootedOrderedTree, SearchBudgetExceeded, find_good_tree
from .graph import EmbeddedGraph, _trace_cycles


def _faces(rot: Dict[int, List[int]]) -> List[List[int]]:
    cycles, _ = _trace_cycles({v: tuple(r) for v, r in rot.items()})
    return [[d[0] for d in c] for c in cycles]


def _insert_after(rot: Dict[int, List[int]], v: int, after: int, new: int) -> None:
    nbrs = rot[v]
    nbrs.insert(nbrs.index(after) + 1, new)


def generate_k_inner(seed: int, n: int, k: int, chord_rate: float = 0.5) -> EmbeddedGraph:
    """Random connected plane graph with n vertices, at most k of them inner.

    Outer vertices are 1..n-k in clockwise order, the root is 1 and the
    inner vertices are n-k+1..n.
    """
    if n < 3 or k < 0 or k > n - 3:
        raise ValueError(f"infeasible parameters n={n}, k={k} (need n >= 3 and 0 <= k <= n - 3)")
    rng = random.Random(seed)
    m = n - k
    # clockwise cycle 1..m: the face on the left of i -> i+1 is the outer one
    rot: Dict[int, List[int]] = {}
    for i in range(1, m + 1):
        prev = m if i == 1 else i - 1
        nxt = 1 if i == m else i + 1
        rot[i] = [nxt, prev]
    outer = tuple(range(1, m + 1))

    def inner_faces() -> List[List[int]]:
        out = []
        for f in _faces(rot):
            if len(f) == len(outer) and sorted(f) == sorted(outer) and _is_outer(f):
                continue
            out.append(f)
        return out

    def _is_outer(f: List[int]) -> bool:
        i = f.index(1)
        return tuple(f[i:] + f[:i]) == outer

    for x in range(m + 1, n + 1):
        face = rng.choice(inner_faces())
        size = len(face)
        deg = rng.randint(2, min(size, 4))
        picks = sorted(rng.sample(range(size), deg))
        rot[x] = []
        for i in picks:
            _insert_after(rot, face[i], face[i - 1], x)
        rot[x] = [face[i] for i in reversed(picks)]

    n_chords = rng.randint(0, max(0, int(chord_rate * n)))
    for _ in range(n_chords):
        options = []
        for face in inner_faces():
            size = len(face)
            for i in range(size):
                for j in range(i + 2, size):
                    if i == 0 and j == size - 1:
                        continue
                    a, b = face[i], face[j]
                    if a != b and b not in rot[a]:
                        options.append((face, i, j))
        if not options:
            break
        face, i, j = rng.choice(options)
        a, b = face[i], face[j]
        _insert_after(rot, a, face[i - 1], b)
        _insert_after(rot, b, face[j - 1], a)

    return EmbeddedGraph(n=n, rotation={v: tuple(r) for v, r in rot.items()}, outer_walk=outer, root=1)


def generate_drawable(
    seed: int, n: int, k: int, attempts: int = 200, max_steps: Optional[int] = 200_000
) -> Tuple[EmbeddedGraph, RootedOrderedTree, int]:
    """First instance from seed, seed+1, ... that admits a good spanning tree.

    Returns the graph, its tree and the seed that was actually used.
    """
    for s in range(seed, seed + attempts):
        g = generate_k_inner(s, n, k)
        try:
            return g, find_good_tree(g, max_steps=max_steps), s
        except (NoGoodTreeError, SearchBudgetExceeded):
            continue
    raise NoGoodTreeError(f"no drawable instance for n={n}, k={k} in seeds {seed}..{seed + attempts - 1}")
