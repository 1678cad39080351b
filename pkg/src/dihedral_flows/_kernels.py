"""Exhaustive scan over co-tree assignments.

Two interchangeable back ends: a scalar odometer compiled with numba and a
chunked, vectorised numpy version. The numba odometer also prunes: when a
vertex equation fails, every assignment agreeing on the co-tree digits that
equation depends on is skipped at once. ``DFLOW_NUMBA=0`` (or a missing numba)
selects numpy. Both walk the same index range in the same order, so counts
and the first ``limit`` solutions agree exactly.

Element encoding: ``(sign, shift)`` int64 pairs. ``kind`` is 0 for D_2n
(shifts mod n), 1 for the bounded set ``|shift| < n`` (exact integers) and 2
for Z_n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

KIND_MOD, KIND_BOUNDED, KIND_CYCLIC = 0, 1, 2

try:
    import numba
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    _HAVE_NUMBA = False


def numba_enabled() -> bool:
    flag = os.environ.get("DFLOW_NUMBA", "1").strip().lower()
    return _HAVE_NUMBA and flag not in ("0", "false", "no", "off")


@dataclass
class ScanProblem:
    kind: int
    n: int
    vstart: np.ndarray      # (V+1,) offsets into vdarts
    vdarts: np.ndarray      # (2E,) darts per vertex in rotation order
    cot: np.ndarray         # (K,) co-tree edges, ascending
    cand_sign: np.ndarray   # (K, M)
    cand_shift: np.ndarray  # (K, M)
    ncand: np.ndarray       # (K,)
    plan_v: np.ndarray      # (T,) vertex solved at step t
    plan_e: np.ndarray      # (T,) its unknown tree edge
    plan_pos: np.ndarray    # (T,) position of the unknown dart in vdarts
    plan_dep: np.ndarray    # (T,) last co-tree digit the step depends on (-1: none)
    allowed: np.ndarray     # (E, table) admissible values per edge
    root: int
    num_edges: int

    @property
    def total(self) -> int:
        t = 1
        for c in self.ncand:
            t *= int(c)
        return t

    @property
    def weights(self) -> np.ndarray:
        """Place values of the mixed-radix index, first digit most
        significant."""
        w = np.ones(len(self.ncand), np.int64)
        for j in range(len(self.ncand) - 2, -1, -1):
            w[j] = w[j + 1] * self.ncand[j + 1]
        return w


def table_size(kind: int, n: int) -> int:
    if kind == KIND_MOD:
        return 2 * n
    if kind == KIND_CYCLIC:
        return n
    return 2 * (2 * n - 1)


def table_index(kind: int, n: int, sign, shift):
    """Works on scalars and arrays alike; callers range-check bounded shifts."""
    neg = sign < 0
    if kind == KIND_MOD:
        return neg * n + shift
    if kind == KIND_CYCLIC:
        return shift
    return neg * (2 * n - 1) + shift + n - 1


# ---------------------------------------------------------------- numba path

def _njit(fn):
    if not _HAVE_NUMBA:
        return None
    return numba.njit(cache=True, nogil=True)(fn)


@_njit
def _reduce(a, kind, n):
    if kind == 1:
        return a
    return a % n


@_njit
def _numba_scan(kind, n, vstart, vdarts, cot, cand_sign, cand_shift, ncand,
                plan_v, plan_e, plan_pos, plan_dep, weights, allowed, root,
                start, stop, limit, out_sign, out_shift):
    K = cot.shape[0]
    T = plan_v.shape[0]
    E = allowed.shape[0]
    vs = np.zeros(E, np.int64)
    va = np.zeros(E, np.int64)
    digits = np.zeros(K, np.int64)
    count = 0
    found = 0
    idx = start
    while idx < stop:
        rem = idx
        for j in range(K):
            digits[j] = rem // weights[j]
            rem -= digits[j] * weights[j]
            vs[cot[j]] = cand_sign[j, digits[j]]
            va[cot[j]] = cand_shift[j, digits[j]]
        ok = True
        fail_dep = K - 1
        for t in range(T):
            v = plan_v[t]
            p = plan_pos[t]
            # B*A where the rotation word is A x^eps B
            bs = 1
            ba = 0
            lo = vstart[v]
            hi = vstart[v + 1]
            for q in range(lo + p + 1, hi):
                d = vdarts[q]
                e = d >> 1
                s = vs[e]
                a = va[e]
                if d & 1:
                    a = -s * a
                ba = ba + bs * a
                bs = bs * s
            for q in range(lo, lo + p):
                d = vdarts[q]
                e = d >> 1
                s = vs[e]
                a = va[e]
                if d & 1:
                    a = -s * a
                ba = ba + bs * a
                bs = bs * s
            if vdarts[lo + p] & 1:
                xs = bs
                xa = ba
            else:
                xs = bs
                xa = -bs * ba
            xa = _reduce(xa, kind, n)
            if kind == 1 and (xa >= n or xa <= -n):
                ok = False
                fail_dep = plan_dep[t]
                break
            if kind == 0:
                tix = (n if xs < 0 else 0) + xa
            elif kind == 2:
                tix = xa
            else:
                tix = (2 * n - 1 if xs < 0 else 0) + xa + n - 1
            if not allowed[plan_e[t], tix]:
                ok = False
                fail_dep = plan_dep[t]
                break
            vs[plan_e[t]] = xs
            va[plan_e[t]] = xa
        if ok:
            rs = 1
            ra = 0
            for q in range(vstart[root], vstart[root + 1]):
                d = vdarts[q]
                e = d >> 1
                s = vs[e]
                a = va[e]
                if d & 1:
                    a = -s * a
                ra = ra + rs * a
                rs = rs * s
            ra = _reduce(ra, kind, n)
            ok = rs == 1 and ra == 0
        if ok:
            count += 1
            if limit > 0:
                for e in range(E):
                    out_sign[found, e] = vs[e]
                    out_shift[found, e] = va[e]
                found += 1
                if found == limit:
                    return count, found
            idx += 1
        elif fail_dep < 0:
            break
        else:
            # every assignment sharing digits 0..fail_dep fails too
            w = weights[fail_dep]
            idx = (idx // w + 1) * w
    return count, found


# ---------------------------------------------------------------- numpy path

CHUNK = 1 << 15


def _numpy_scan(pb: ScanProblem, start: int, stop: int, limit: int):
    kind, n = pb.kind, pb.n
    K = len(pb.cot)
    E = pb.num_edges
    count = 0
    sols_s, sols_a = [], []
    radix = [int(c) for c in pb.ncand]
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        idx = np.arange(lo, hi, dtype=np.int64)
        C = len(idx)
        vs = np.ones((C, E), np.int64)
        va = np.zeros((C, E), np.int64)
        rem = idx.copy()
        for j in range(K - 1, -1, -1):
            dig = rem % radix[j]
            rem //= radix[j]
            vs[:, pb.cot[j]] = pb.cand_sign[j, dig]
            va[:, pb.cot[j]] = pb.cand_shift[j, dig]
        ok = np.ones(C, bool)
        for t in range(len(pb.plan_v)):
            v, p = int(pb.plan_v[t]), int(pb.plan_pos[t])
            darts = pb.vdarts[pb.vstart[v]:pb.vstart[v + 1]]
            word = list(darts[p + 1:]) + list(darts[:p])
            bs = np.ones(C, np.int64)
            ba = np.zeros(C, np.int64)
            for d in word:
                s = vs[:, d >> 1]
                a = va[:, d >> 1]
                if d & 1:
                    a = -s * a
                ba = ba + bs * a
                bs = bs * s
            if darts[p] & 1:
                xs, xa = bs, ba
            else:
                xs, xa = bs, -bs * ba
            if kind != KIND_BOUNDED:
                xa = xa % n
                good = ok.copy()
            else:
                good = ok & (np.abs(xa) < n)
            tidx = table_index(kind, n, xs, np.where(good, xa, 0))
            good &= pb.allowed[pb.plan_e[t], tidx]
            ok = good
            vs[:, pb.plan_e[t]] = xs
            va[:, pb.plan_e[t]] = xa
        rs = np.ones(C, np.int64)
        ra = np.zeros(C, np.int64)
        for d in pb.vdarts[pb.vstart[pb.root]:pb.vstart[pb.root + 1]]:
            s = vs[:, d >> 1]
            a = va[:, d >> 1]
            if d & 1:
                a = -s * a
            ra = ra + rs * a
            rs = rs * s
        if kind != KIND_BOUNDED:
            ra = ra % n
        ok &= (rs == 1) & (ra == 0)
        hits = np.flatnonzero(ok)
        if limit > 0:
            need = limit - len(sols_s)
            take = hits[:need]
            sols_s.extend(vs[take])
            sols_a.extend(va[take])
            if len(sols_s) == limit:
                count += int(np.searchsorted(hits, take[-1]) + 1)
                return count, sols_s, sols_a
        count += len(hits)
    return count, sols_s, sols_a


def scan(pb: ScanProblem, start: int, stop: int, limit: int = 0, use_numba: bool | None = None):
    """Scan indices ``[start, stop)``.

    Returns ``(count, signs, shifts)``; with ``limit > 0`` the scan stops at
    the ``limit``-th solution, ``count`` then being the solutions seen so
    far and ``signs``/``shifts`` lists of per-edge arrays.
    """
    if use_numba is None:
        use_numba = numba_enabled()
    if stop <= start:
        return 0, [], []
    if use_numba:
        fn = _numba_scan
        E = pb.num_edges
        out_s = np.zeros((max(limit, 1), E), np.int64)
        out_a = np.zeros((max(limit, 1), E), np.int64)
        count, found = fn(pb.kind, pb.n, pb.vstart, pb.vdarts, pb.cot,
                          pb.cand_sign, pb.cand_shift, pb.ncand,
                          pb.plan_v, pb.plan_e, pb.plan_pos, pb.plan_dep,
                          pb.weights, pb.allowed, pb.root, start, stop, limit,
                          out_s, out_a)
        return int(count), list(out_s[:found]), list(out_a[:found])
    return _numpy_scan(pb, start, stop, limit)
