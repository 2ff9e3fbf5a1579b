# cython: language_level=3
"""Compiled twins of the kernels in _kernels_pure.

Same signatures, same exact results.  Machine integers are used only where
a bound proves they cannot overflow (label sums below 2**19 keep every
intermediate under 2**62); anything larger drops to object arithmetic,
which is the pure-Python algorithm compiled as-is.
"""

from itertools import product

from .errors import TermCapExceeded

BACKEND = "cython"

DEF MAX_RANK = 64

cdef long long FAST_SUM_LIMIT = 1 << 19
cdef long long CAP_CLAMP = 1 << 62


def branch_child_counts(p):
    """One SU(n) -> SU(n-1) step: child-label tuples with multiplicities."""
    if 2 <= len(p) <= MAX_RANK and sum(p) < FAST_SUM_LIMIT:
        return _branch_fast(tuple(p))
    return _branch_object(tuple(p))


cdef dict _branch_fast(tuple p):
    cdef Py_ssize_t m = len(p)
    cdef long long[MAX_RANK] pv
    cdef long long[MAX_RANK] kv
    cdef Py_ssize_t i, j
    for i in range(m):
        pv[i] = p[i]
        kv[i] = 1
    counts = {}
    while True:
        child = tuple([pv[j] - kv[j] + kv[j + 1] for j in range(m - 1)])
        counts[child] = counts.get(child, 0) + 1
        j = m - 1
        while j >= 0 and kv[j] == pv[j]:
            kv[j] = 1
            j -= 1
        if j < 0:
            break
        kv[j] += 1
    return counts


cdef dict _branch_object(tuple p):
    cdef Py_ssize_t m = len(p)
    counts = {}
    for ks in product(*(range(1, pj + 1) for pj in p)):
        child = tuple(p[j] - ks[j] + ks[j + 1] for j in range(m - 1))
        counts[child] = counts.get(child, 0) + 1
    return counts


def literal_dimension_sum(p, term_cap):
    """Chain every branching step down to SU(3) with no aggregation."""
    cdef long long cap
    if 2 <= len(p) <= MAX_RANK and sum(p) < FAST_SUM_LIMIT:
        cap = min(int(term_cap), CAP_CLAMP)
        return _literal_fast(tuple(p), cap)
    return _literal_object(tuple(p), term_cap)


cdef _literal_fast(tuple p, long long cap):
    cdef long long[MAX_RANK] q
    cdef Py_ssize_t i, m = len(p)
    for i in range(m):
        q[i] = p[i]
    box = [0]
    cdef long long terms = _lit_rec(q, m, cap, 0, box)
    return box[0], terms


cdef long long _lit_rec(long long* q, Py_ssize_t m, long long cap,
                        long long terms, list box) except -1:
    # Label sums never grow along a chain (child_j <= P_j + P_{j+1} - 1),
    # so the per-term product stays under 2**62 given the entry guard.
    cdef long long[MAX_RANK] kv
    cdef long long[MAX_RANK] child
    cdef Py_ssize_t i, j
    if m == 2:
        terms += 1
        if terms > cap:
            raise TermCapExceeded(
                f"literal enumeration needs more than {cap} terms"
            )
        box[0] = box[0] + (q[0] + q[1]) * q[1] * q[0] // 2
        return terms
    for i in range(m):
        kv[i] = 1
    while True:
        for j in range(m - 1):
            child[j] = q[j] - kv[j] + kv[j + 1]
        terms = _lit_rec(child, m - 1, cap, terms, box)
        j = m - 1
        while j >= 0 and kv[j] == q[j]:
            kv[j] = 1
            j -= 1
        if j < 0:
            break
        kv[j] += 1
    return terms


def _literal_object(tuple p, term_cap):
    total = 0
    terms = 0

    def descend(q):
        nonlocal total, terms
        if len(q) == 2:
            terms += 1
            if terms > term_cap:
                raise TermCapExceeded(
                    f"literal enumeration needs more than {term_cap} terms"
                )
            q1, q2 = q
            total += (q1 + q2) * q2 * q1 // 2
            return
        m = len(q)
        for ks in product(*(range(1, qj + 1) for qj in q)):
            descend(tuple(q[j] - ks[j] + ks[j + 1] for j in range(m - 1)))

    descend(p)
    return total, terms


def lattice_harmonic_grid(radius):
    """Rows (a, b, N(a,b), six-neighbor sum minus 6*N) for |a|,|b| <= radius."""
    if 0 <= radius < FAST_SUM_LIMIT:
        return _grid_fast(radius)
    return _grid_object(radius)


cdef inline long long _ln(long long a, long long b):
    # a*b*(a-b) is always even; C truncation equals floor on exact division.
    return a * b * (a - b) // 2


cdef list _grid_fast(long long radius):
    cdef long long a, b, n, check
    rows = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            n = _ln(a, b)
            check = (
                _ln(a + 1, b) + _ln(a - 1, b)
                + _ln(a, b + 1) + _ln(a, b - 1)
                + _ln(a + 1, b + 1) + _ln(a - 1, b - 1)
                - 6 * n
            )
            rows.append((a, b, n, check))
    return rows


def _grid_object(radius):
    def ln(a, b):
        return a * b * (a - b) // 2

    rows = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            n = ln(a, b)
            check = (
                ln(a + 1, b) + ln(a - 1, b)
                + ln(a, b + 1) + ln(a, b - 1)
                + ln(a + 1, b + 1) + ln(a - 1, b - 1)
                - 6 * n
            )
            rows.append((a, b, n, check))
    return rows
