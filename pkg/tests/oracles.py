"""Slow, independent reference implementations used to check the library.

Nothing here calls the library's group arithmetic, face tracing, bridge
finder or flow search; graphs are read only through their rotation tuples.
"""

from __future__ import annotations

import itertools

import numpy as np
from hypothesis import strategies as st


# ---------------------------------------------------------------- matrices

def mat(sign: int, shift: int) -> np.ndarray:
    return np.array([[sign, shift], [0, 1]], dtype=np.int64)


def reduce_mat(m: np.ndarray, n: int | None) -> tuple[int, int]:
    """(sign, shift) of an affine matrix, shift reduced mod n when given."""
    assert m[1, 0] == 0 and m[1, 1] == 1
    return int(m[0, 0]), int(m[0, 1] % n) if n else int(m[0, 1])


def mat_inv(m: np.ndarray) -> np.ndarray:
    # affine inverse of x -> s x + a is x -> s x - s a
    s, a = int(m[0, 0]), int(m[0, 1])
    return mat(s, -s * a)


def elements(kind: str, n: int, identity: bool = False) -> list[tuple[int, int]]:
    if kind == "D2n":
        out = [(s, a) for s in (1, -1) for a in range(n)]
    elif kind == "Dlt":
        out = [(s, a) for s in (1, -1) for a in range(-n + 1, n)]
    else:
        out = [(1, a) for a in range(n)]
    return out if identity else [x for x in out if x != (1, 0)]


def is_flow(rotations, values, kind: str, n: int) -> bool:
    """Kirchhoff at every vertex, walking the rotation with matrices.

    ``values[e]`` is read along dart ``2e`` (head); at the tail dart the
    inverse is used.
    """
    mod = n if kind != "Dlt" else None
    for rot in rotations:
        m = np.eye(2, dtype=np.int64)
        for d in rot:
            x = mat(*values[d >> 1])
            m = m @ (x if d % 2 == 0 else mat_inv(x))
        if reduce_mat(m, mod) != (1, 0):
            return False
    return True


def brute_count(rotations, kind: str, n: int, identity: bool = False) -> int:
    ne = sum(len(r) for r in rotations) // 2
    return sum(is_flow(rotations, vals, kind, n)
               for vals in itertools.product(elements(kind, n, identity), repeat=ne))


# ------------------------------------------------------------------- faces

def face_count(rotations) -> int:
    """Orbits of 'take the other end, then step to the next dart in its
    rotation', built as explicit permutation arrays."""
    nd = sum(len(r) for r in rotations)
    nxt = [0] * nd
    for r in rotations:
        for i, d in enumerate(r):
            nxt[d] = r[(i + 1) % len(r)]
    alpha = [d ^ 1 for d in range(nd)]
    phi = [nxt[alpha[d]] for d in range(nd)]
    seen, faces = set(), 0
    for d in range(nd):
        if d not in seen:
            faces += 1
            while d not in seen:
                seen.add(d)
                d = phi[d]
    return faces


def euler_genus(rotations) -> int:
    v = len(rotations)
    e = sum(len(r) for r in rotations) // 2
    return (2 - v + e - face_count(rotations)) // 2


# ----------------------------------------------------------------- bridges

def endpoints(rotations) -> list[tuple[int, int]]:
    where = {d: v for v, r in enumerate(rotations) for d in r}
    return [(where[2 * e + 1], where[2 * e]) for e in range(len(where) // 2)]


def components(nv: int, edges) -> int:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x
    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(x) for x in range(nv)})


def brute_bridges(rotations) -> set[int]:
    ends = endpoints(rotations)
    base = components(len(rotations), ends)
    return {e for e in range(len(ends))
            if components(len(rotations), ends[:e] + ends[e + 1:]) > base}


# -------------------------------------------------------------- strategies

@st.composite
def embedded_rotations(draw, max_vertices: int = 4, max_edges: int = 5, min_edges: int = 1):
    """Rotation tuples of a random connected embedded multigraph (loops and
    parallel edges allowed)."""
    nv = draw(st.integers(1, max_vertices))
    lo = max(nv - 1, min_edges)
    ne = draw(st.integers(lo, max(lo, max_edges)))
    edges = []
    for v in range(1, nv):
        edges.append((draw(st.integers(0, v - 1)), v))
    while len(edges) < ne:
        edges.append((draw(st.integers(0, nv - 1)), draw(st.integers(0, nv - 1))))
    order = draw(st.permutations(range(ne)))
    edges = [edges[i] for i in order]
    flips = draw(st.lists(st.booleans(), min_size=ne, max_size=ne))
    darts = [[] for _ in range(nv)]
    for e, (a, b) in enumerate(edges):
        if flips[e]:
            a, b = b, a
        darts[b].append(2 * e)
        darts[a].append(2 * e + 1)
    return tuple(tuple(draw(st.permutations(ds))) for ds in darts)


def faces(rotations) -> list[list[int]]:
    nd = sum(len(r) for r in rotations)
    nxt = {}
    for r in rotations:
        for i, d in enumerate(r):
            nxt[d] = r[(i + 1) % len(r)]
    seen, out = set(), []
    for d in range(nd):
        if d in seen:
            continue
        face = []
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = nxt[d ^ 1]
        out.append(face)
    return out


def contractible(rotations, cycle_edges) -> bool:
    """A simple cycle bounds a disk iff some set S of faces has exactly the
    cycle as its mod-2 edge boundary and the side made of S, capped by a
    disk, is a sphere."""
    fs = faces(rotations)
    where = {d: v for v, r in enumerate(rotations) for d in r}
    target = set(cycle_edges)
    for k in range(1, len(fs)):
        for subset in itertools.combinations(range(len(fs)), k):
            odd = set()
            for i in subset:
                for d in fs[i]:
                    odd ^= {d >> 1}
            if odd != target:
                continue
            darts = [d for i in subset for d in fs[i]]
            verts = {where[d] for d in darts}
            edges = {d >> 1 for d in darts}
            chi = len(verts) - len(edges) + len(subset) + 1
            if chi == 2:
                return True
    return False
