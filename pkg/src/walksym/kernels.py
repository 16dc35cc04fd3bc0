"""Hot inner loops, each in a numba and a pure-numpy flavour.

The public entry points dispatch on :data:`walksym._accel.USE_NUMBA`; the
``*_numba`` / ``*_numpy`` functions are importable directly so tests and the
benchmark can compare both paths.  Both flavours must return identical
arrays for identical inputs.

Edge-mask codes
---------------
A graph on ``n`` vertices is packed into an integer of ``L = n(n-1)/2`` bits.
Bit positions follow graph6 order, (0,1), (0,2), (1,2), (0,3), ..., with the
first pair in the most significant bit.  Numeric order of codes is then the
lexicographic order of graph6 bodies, which is what canonical forms and the
enumerator sort by.

Random stream
-------------
The walk simulator draws from SplitMix64 used as a counter-based generator.
Trial ``i`` under master seed ``s`` gets the key ``mix(s + (i+1)*G)`` (the
``i``-th SplitMix64 output for seed ``s``), and step ``j`` of that trial uses
``mix(key + (j+1)*G)``.  Each draw is a pure function of (seed, trial, step),
so results do not depend on how trials are scheduled.  A neighbour index is
taken from the top 32 bits by multiply-shift, ``((w >> 32) * deg) >> 32``.
"""
import numpy as np

from ._accel import USE_NUMBA, njit, prange

MAX_SCAN_N = 7

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S32 = np.uint64(32)
_ONE = np.uint64(1)
_U64 = (1 << 64) - 1


def pair_tables(n):
    """Return arrays ``(lo, hi)`` listing vertex pairs in graph6 bit order."""
    lo = []
    hi = []
    for j in range(1, n):
        for i in range(j):
            lo.append(i)
            hi.append(j)
    return np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64)


# --------------------------------------------------------------------------
# edge-mask scan


@njit
def _scan_codes_numba(n, lo, hi, require_sorted):
    L = lo.shape[0]
    total = 1 << L
    full = (1 << n) - 1
    keep = np.zeros(total, dtype=np.bool_)
    rows = np.zeros(n, dtype=np.int64)
    for code in range(total):
        for v in range(n):
            rows[v] = 0
        for k in range(L):
            if (code >> (L - 1 - k)) & 1:
                rows[lo[k]] |= 1 << hi[k]
                rows[hi[k]] |= 1 << lo[k]
        if require_sorted:
            ok = True
            prev = n
            for v in range(n):
                d = 0
                r = rows[v]
                while r:
                    r &= r - 1
                    d += 1
                if d > prev:
                    ok = False
                    break
                prev = d
            if not ok:
                continue
        reach = 1
        last = 0
        while reach != last:
            last = reach
            for v in range(n):
                if (reach >> v) & 1:
                    reach |= rows[v]
        if reach == full:
            keep[code] = True
    return np.nonzero(keep)[0].astype(np.int64)


def _scan_codes_numpy(n, lo, hi, require_sorted, chunk=1 << 16):
    L = lo.shape[0]
    total = 1 << L
    full = (1 << n) - 1
    out = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        rows = np.zeros((codes.shape[0], n), dtype=np.int64)
        for k in range(L):
            bit = (codes >> (L - 1 - k)) & 1
            rows[:, lo[k]] |= bit << hi[k]
            rows[:, hi[k]] |= bit << lo[k]
        mask = np.ones(codes.shape[0], dtype=bool)
        if require_sorted:
            deg = np.zeros_like(rows)
            for u in range(n):
                deg += (rows >> u) & 1
            mask &= np.all(deg[:, :-1] >= deg[:, 1:], axis=1)
        reach = np.ones(codes.shape[0], dtype=np.int64)
        for _ in range(n - 1):
            for v in range(n):
                hit = ((reach >> v) & 1).astype(bool)
                reach = np.where(hit, reach | rows[:, v], reach)
        mask &= reach == full
        out.append(codes[mask])
    if not out:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(out)


def scan_codes_numba(n, require_sorted=True):
    lo, hi = pair_tables(n)
    return _scan_codes_numba(n, lo, hi, require_sorted)


def scan_codes_numpy(n, require_sorted=True):
    lo, hi = pair_tables(n)
    return _scan_codes_numpy(n, lo, hi, require_sorted)


def scan_codes(n, require_sorted=True):
    """Codes of all connected graphs on ``n`` labeled vertices.

    With ``require_sorted`` only labelings whose degree sequence is
    non-increasing in vertex order are kept.  Every isomorphism class has at
    least one such labeling, so the result still meets every class.
    """
    if not 1 <= n <= MAX_SCAN_N:
        raise ValueError(f"mask scan supports 1 <= n <= {MAX_SCAN_N}, got {n}")
    if USE_NUMBA:
        return scan_codes_numba(n, require_sorted)
    return scan_codes_numpy(n, require_sorted)


# --------------------------------------------------------------------------
# random walk simulation


@njit
def _mix64_numba(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(parallel=True)
def _walk_endpoints_numba(nbr, deg, start, steps, trials, seed):
    out = np.empty(trials, dtype=np.int64)
    for i in prange(trials):
        key = _mix64_numba(seed + (np.uint64(i) + _ONE) * GOLDEN)
        pos = start
        for j in range(steps):
            w = _mix64_numba(key + (np.uint64(j) + _ONE) * GOLDEN)
            d = np.uint64(deg[pos])
            idx = np.int64(((w >> _S32) * d) >> _S32)
            pos = nbr[pos, idx]
        out[i] = pos
    return out


def _mix64_numpy(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


def _walk_endpoints_numpy(nbr, deg, start, steps, trials, seed):
    with np.errstate(over="ignore"):
        counters = np.arange(1, trials + 1, dtype=np.uint64)
        keys = _mix64_numpy(seed + counters * GOLDEN)
        pos = np.full(trials, start, dtype=np.int64)
        for j in range(steps):
            w = _mix64_numpy(keys + np.uint64(j + 1) * GOLDEN)
            d = deg[pos].astype(np.uint64)
            idx = (((w >> _S32) * d) >> _S32).astype(np.int64)
            pos = nbr[pos, idx]
    return pos


def _walk_args(nbr, deg, start, steps, trials, seed):
    return (
        np.ascontiguousarray(nbr, dtype=np.int64),
        np.ascontiguousarray(deg, dtype=np.int64),
        int(start),
        int(steps),
        int(trials),
        np.uint64(int(seed) & _U64),
    )


def walk_endpoints_numba(nbr, deg, start, steps, trials, seed):
    return _walk_endpoints_numba(*_walk_args(nbr, deg, start, steps, trials, seed))


def walk_endpoints_numpy(nbr, deg, start, steps, trials, seed):
    return _walk_endpoints_numpy(*_walk_args(nbr, deg, start, steps, trials, seed))


def walk_endpoints(nbr, deg, start, steps, trials, seed):
    """Final positions of ``trials`` simple random walks of ``steps`` steps.

    Parameters
    ----------
    nbr : (n, maxdeg) int array
        Row ``v`` lists the neighbours of ``v`` in ascending order; padding
        beyond ``deg[v]`` is never read.
    deg : (n,) int array
        Vertex degrees, all positive.
    start : int
        Start vertex shared by every trial.
    steps, trials : int
    seed : int
        Master seed, reduced modulo 2**64.

    Returns
    -------
    ndarray of int64, shape (trials,)
    """
    if USE_NUMBA:
        return walk_endpoints_numba(nbr, deg, start, steps, trials, seed)
    return walk_endpoints_numpy(nbr, deg, start, steps, trials, seed)


def splitmix64(seed, index):
    """Pure-Python reference for a single SplitMix64 output (used by tests)."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _U64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
    return z ^ (z >> 31)
