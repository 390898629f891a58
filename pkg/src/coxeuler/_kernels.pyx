# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census and scan kernels over signed permutations.

Mirrors ``coxeuler._pykernels``. Words live in fixed C arrays; permutations
advance in lexicographic order and sign masks count in binary.
"""

from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 16

# class index from (d0, d1): [CGE2, C1, C0GE2, C01] for d0*2 + d1
cdef int CLASS_OF[4]
CLASS_OF[:] = [2, 0, 3, 1]
# class of hat(w) from class of w
cdef int HAT_OF[4]
HAT_OF[:] = [3, 1, 2, 0]


cdef bint next_perm(int* a, int n) nogil:
    cdef int i = n - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


cdef inline int popcount(unsigned int m) nogil:
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


cdef inline int d_stats(int* w, int n, int* cls, unsigned int* des) nogil:
    # D-descents of w[0..n-1]; returns the count, writes class and bitmask
    cdef int d0 = (-w[1] > w[0])
    cdef int d1 = (w[0] > w[1])
    cdef int k = d0 + d1, i
    cdef unsigned int bits = d0 | (d1 << 1)
    for i in range(1, n - 1):
        if w[i] > w[i + 1]:
            k += 1
            bits |= 1u << (i + 1)
    cls[0] = CLASS_OF[d0 * 2 + d1]
    des[0] = bits
    return k


cdef inline void apply_mask(int* perm, unsigned int mask, int* w, int n) nogil:
    cdef int i
    for i in range(n):
        w[i] = -perm[i] if (mask >> i) & 1 else perm[i]


def _check_rank(int n, int lo, int hi):
    if n < lo or n > hi:
        raise ValueError(f"rank {n} outside supported range {lo}..{hi}")


def sub_census(int n):
    """Counts ``[class_index][descents]`` over ``D_n``."""
    _check_rank(n, 2, 12)
    cdef long long counts[4][MAXN + 1]
    cdef int perm[MAXN]
    cdef int w[MAXN]
    cdef int i, k, c
    cdef unsigned int mask, des, top = 1u << n
    for c in range(4):
        for i in range(MAXN + 1):
            counts[c][i] = 0
    for i in range(n):
        perm[i] = i + 1
    with nogil:
        while True:
            for mask in range(top):
                if popcount(mask) & 1:
                    continue
                apply_mask(perm, mask, w, n)
                k = d_stats(w, n, &c, &des)
                counts[c][k] += 1
            if not next_perm(perm, n):
                break
    return [[counts[c][i] for i in range(n + 1)] for c in range(4)]


def eulerian_census(int n, str family):
    """Descent-number counts over ``A_n`` (i.e. S_n), ``B_n`` or ``D_n``."""
    cdef int fam
    if family == "A":
        fam = 0
    elif family == "B":
        fam = 1
    elif family == "D":
        fam = 2
    else:
        raise ValueError(f"unknown family {family!r}")
    _check_rank(n, 2 if fam == 2 else 1, 12)
    cdef long long counts[MAXN + 1]
    cdef int perm[MAXN]
    cdef int w[MAXN]
    cdef int i, k, c
    cdef unsigned int mask, des, top = 1u << n
    if fam == 0:
        top = 1
    for i in range(MAXN + 1):
        counts[i] = 0
    for i in range(n):
        perm[i] = i + 1
    with nogil:
        while True:
            for mask in range(top):
                if fam == 2 and popcount(mask) & 1:
                    continue
                apply_mask(perm, mask, w, n)
                if fam == 2:
                    k = d_stats(w, n, &c, &des)
                else:
                    k = 1 if (fam == 1 and w[0] < 0) else 0
                    for i in range(n - 1):
                        if w[i] > w[i + 1]:
                            k += 1
                counts[k] += 1
            if not next_perm(perm, n):
                break
    return [counts[i] for i in range(n + 1)]


def hat_scan(int n):
    """First element of ``D_n`` violating the hat correspondence, or None."""
    _check_rank(n, 2, 12)
    cdef int perm[MAXN]
    cdef int w[MAXN]
    cdef int i, k, kh, c, ch
    cdef unsigned int mask, des, top = 1u << n
    cdef int bad = 0
    for i in range(n):
        perm[i] = i + 1
    with nogil:
        while not bad:
            for mask in range(top):
                if popcount(mask) & 1:
                    continue
                apply_mask(perm, mask, w, n)
                k = d_stats(w, n, &c, &des)
                w[0] = -w[0]
                kh = d_stats(w, n, &ch, &des)
                w[0] = -w[0]
                if kh != k:
                    bad = 1
                    break
                if ch != HAT_OF[c]:
                    bad = 2
                    break
            if bad or not next_perm(perm, n):
                break
    if not bad:
        return None
    word = tuple(w[i] for i in range(n))
    names = ("sub1", "sub01", "subge2", "sub0ge2")
    if bad == 1:
        return word, f"descents {k} -> {kh}"
    return word, f"class {names[c]} -> {names[ch]}"


cdef long long perm_rank(int* w, int n) nogil:
    # Lehmer rank of the absolute values of w
    cdef long long r = 0
    cdef int i, j, a, smaller
    for i in range(n):
        a = w[i] if w[i] > 0 else -w[i]
        smaller = 0
        for j in range(i + 1, n):
            if (w[j] if w[j] > 0 else -w[j]) < a:
                smaller += 1
        r = r * (n - i) + smaller
    return r


def insertion_scan(int n, rule_classes, rule_deltas):
    """Insert ``+-n`` at every position of every element of ``D_{n-1}``.

    ``rule_classes``/``rule_deltas`` are the flattened front/second-position
    rules from ``signed.rule_arrays``. Returns ``(products, failure)``.
    """
    _check_rank(n, 3, 9)
    cdef int rc[16]
    cdef int rd[16]
    cdef int i
    for i in range(16):
        rc[i] = rule_classes[i]
        rd[i] = rule_deltas[i]
    cdef int m = n - 1
    cdef long long nfact = 1
    for i in range(2, n + 1):
        nfact *= i
    cdef long long slots = nfact << (n - 1)
    cdef unsigned char* seen = <unsigned char*> calloc(slots, 1)
    if seen == NULL:
        raise MemoryError()
    cdef int perm[MAXN]
    cdef int src[MAXN]
    cdef int base[MAXN]
    cdef int u[MAXN]
    cdef int k, c, ku, cu, sgn, pos, j, tc, dk, bad = 0
    cdef unsigned int mask, des, desu, umask, top = 1u << m
    cdef long long count = 0, idx
    for i in range(m):
        perm[i] = i + 1
    try:
        with nogil:
            while not bad:
                for mask in range(top):
                    if popcount(mask) & 1:
                        continue
                    apply_mask(perm, mask, src, m)
                    k = d_stats(src, m, &c, &des)
                    for sgn in range(2):
                        for i in range(m):
                            base[i] = src[i]
                        if sgn:
                            base[0] = -base[0]
                        for pos in range(n):
                            j = 0
                            for i in range(n):
                                if i == pos:
                                    u[i] = -n if sgn else n
                                else:
                                    u[i] = base[j]
                                    j += 1
                            count += 1
                            umask = 0
                            for i in range(n):
                                if u[i] < 0:
                                    umask |= 1u << i
                            if popcount(umask) & 1:
                                bad = 1
                                break
                            idx = (perm_rank(u, n) << (n - 1)) | (umask >> 1)
                            if seen[idx]:
                                bad = 2
                                break
                            seen[idx] = 1
                            ku = d_stats(u, n, &cu, &desu)
                            if pos <= 1:
                                tc = rc[(pos * 2 + sgn) * 4 + c]
                                dk = rd[(pos * 2 + sgn) * 4 + c]
                            else:
                                tc = HAT_OF[c] if sgn else c
                                if pos == n - 1:
                                    dk = sgn
                                else:
                                    dk = 0 if (des >> pos) & 1 else 1
                            if cu != tc or ku != k + dk:
                                bad = 3
                                break
                        if bad:
                            break
                    if bad:
                        break
                if bad or not next_perm(perm, m):
                    break
    finally:
        free(seen)
    if not bad:
        if count != nfact << (n - 1):
            return count, {"source": None, "position": None, "sign": None, "word": None,
                           "reason": "product count", "expected": str(nfact << (n - 1)),
                           "actual": str(count)}
        return count, None
    names = ("sub1", "sub01", "subge2", "sub0ge2")
    info = {
        "source": tuple(src[i] for i in range(m)),
        "position": pos,
        "sign": -1 if sgn else 1,
        "word": tuple(u[i] for i in range(n)),
    }
    if bad == 1:
        info.update(reason="not even-signed", expected="even", actual="odd")
    elif bad == 2:
        info.update(reason="duplicate product", expected="new", actual="repeat")
    else:
        info.update(reason="rule mismatch", expected=f"{names[tc]},k={k + dk}",
                    actual=f"{names[cu]},k={ku}")
    return count, info
