"""Compiled kernels for eventually periodic bit sequences.

A sequence is stored most-significant-bit first in a uint64 array.  Every
array carries at least one spare word past the last used bit so that 64-bit
windows can always be read.  An expansion ``0.pre(per)`` is the prefix
``pre + per`` of such an array together with the preperiod length ``k``;
canonical forms are again prefixes of the same array, so canonicalisation
only returns new lengths.

The tuning substitution replaces every digit by an n-bit word (n <= 32).
"""

import numpy as np
from numba import njit

U64 = np.uint64
ONE = np.uint64(1)
ZERO = np.uint64(0)
FULL = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, inline="always")
def get_bit(w, i):
    return (w[i >> 6] >> U64(63 - (i & 63))) & ONE


@njit(cache=True, inline="always")
def window(w, i):
    """64 bits starting at bit i."""
    j = i >> 6
    s = i & 63
    if s == 0:
        return w[j]
    return (w[j] << U64(s)) | (w[j + 1] >> U64(64 - s))


@njit(cache=True, inline="always")
def put_bits(w, pos, value, nbits):
    """OR the low ``nbits`` of value into w at bit position pos."""
    if nbits == 0:
        return
    if nbits < 64:
        v = value << U64(64 - nbits)
    else:
        v = value
    j = pos >> 6
    s = pos & 63
    w[j] |= v >> U64(s)
    if s + nbits > 64:
        w[j + 1] |= v << U64(64 - s)


@njit(cache=True)
def ranges_differ(x, xo, y, yo, m):
    """True when bits x[xo:xo+m] and y[yo:yo+m] differ somewhere."""
    i = 0
    while i + 64 <= m:
        if window(x, xo + i) != window(y, yo + i):
            return True
        i += 64
    r = m - i
    if r > 0:
        d = window(x, xo + i) ^ window(y, yo + i)
        if (d >> U64(64 - r)) != ZERO:
            return True
    return False


@njit(cache=True)
def clear(w, nbits):
    for j in range((nbits >> 6) + 2):
        if j < w.shape[0]:
            w[j] = ZERO


@njit(cache=True)
def copy_bits(src, so, dst, do, m):
    """OR src[so:so+m] into dst at do; dst region must be clear."""
    i = 0
    while i < m:
        c = min(64, m - i)
        v = window(src, so + i)
        if c < 64:
            v = v >> U64(64 - c)
        put_bits(dst, do + i, v, c)
        i += c


def chunk_table(a_word, b_word, n):
    """Images of all g-digit chunks under 0 -> a_word, 1 -> b_word.

    g = min(8, 64 // n) so that an image fits one machine word.
    """
    if not 1 <= n <= 32:
        raise ValueError("word length must be between 1 and 32")
    g = min(8, 64 // n)
    table = np.zeros(1 << g, dtype=np.uint64)
    for chunk in range(1 << g):
        v = 0
        for bit in range(g - 1, -1, -1):
            v = (v << n) | (b_word if (chunk >> bit) & 1 else a_word)
        table[chunk] = np.uint64(v)
    return table


@njit(cache=True)
def substitute(src, nsrc, table, a_word, b_word, n, out):
    """Write the substitution of src[:nsrc] into out (cleared first)."""
    clear(out, nsrc * n)
    g = 0
    while (1 << g) < table.shape[0]:
        g += 1
    pos = 0
    i = 0
    step = g * n
    while i + g <= nsrc:
        chunk = window(src, i) >> U64(64 - g)
        put_bits(out, pos, table[chunk], step)
        pos += step
        i += g
    while i < nsrc:
        if get_bit(src, i):
            put_bits(out, pos, b_word, n)
        else:
            put_bits(out, pos, a_word, n)
        pos += n
        i += 1
    return pos


@njit(cache=True)
def canonicalize(w, k, length):
    """Canonical (preperiod, period) lengths of the prefix w[:length].

    The period is reduced to its primitive root and the preperiod shortened
    as far as possible.  A period of a single 1 is rewritten in place into
    the terminating form, so w may be modified.
    """
    L = length - k
    best = L
    r = 1
    while r * r <= L:
        if L % r == 0:
            d = r
            if d < best and not ranges_differ(w, k + d, w, k, L - d):
                best = d
            d = L // r
            if d < best and not ranges_differ(w, k + d, w, k, L - d):
                best = d
        r += 1
    L = best
    while k > 0 and get_bit(w, k - 1) == get_bit(w, k - 1 + L):
        k -= 1
    if L == 1 and get_bit(w, k) == ONE:
        # ...0111... -> ...1000...
        z = k - 1
        while z >= 0 and get_bit(w, z) == ONE:
            z -= 1
        if z < 0:
            w[0] = ZERO
            return 0, 1
        j = z >> 6
        w[j] |= ONE << U64(63 - (z & 63))
        for pos in range(z + 1, k + 1):
            w[pos >> 6] &= ~(ONE << U64(63 - (pos & 63)))
        return z + 1, 1
    return k, L


@njit(cache=True)
def shifted_equal(x, k, L, m, y, k2, L2):
    """Is the m-fold left shift of canonical (x, k, L) equal to (y, k2, L2)?"""
    if k >= m:
        if k - m != k2 or L != L2:
            return False
        return not ranges_differ(x, m, y, 0, k2 + L2)
    if k2 != 0 or L != L2:
        return False
    r = (m - k) % L
    if ranges_differ(x, k + r, y, 0, L - r):
        return False
    return not ranges_differ(x, k, y, L - r, r)


@njit(cache=True)
def unroll(w, k, L, total, out):
    """Write the first ``total`` digits of the sequence (w, k, L) into out."""
    clear(out, total)
    m = min(k, total)
    copy_bits(w, 0, out, 0, m)
    i = m
    while i < total:
        off = (i - k) % L
        c = min(L - off, total - i)
        copy_bits(w, k + off, out, i, c)
        i += c


@njit(cache=True)
def block_parse(w, k, L, table, a_word, b_word, n, out, tmp, tmp2):
    """Parse (w, k, L) as a stream of n-bit blocks a_word / b_word.

    The stream is read from position 0; the preperiod is unrolled to a
    multiple of n and the period to lcm(L, n).  On success out holds the
    block indicators and the canonical (k, L) of the result is returned,
    otherwise (-1, -1).
    """
    k2 = -(-k // n) * n
    g = L
    x = n
    while x:
        g, x = x, g % x
    L2 = L // g * n
    total = k2 + L2
    nb = total // n
    if (total >> 6) + 2 > min(tmp.shape[0], tmp2.shape[0]) or (nb >> 6) + 2 > out.shape[0]:
        return -2, -2
    unroll(w, k, L, total, tmp)
    diff = a_word ^ b_word
    top = 0
    while (diff >> U64(top + 1)) != ZERO:
        top += 1
    f = n - 1 - top
    bf = (b_word >> U64(top)) & ONE
    clear(out, nb)
    for b in range(nb):
        if get_bit(tmp, b * n + f) == bf:
            put_bits(out, b, ONE, 1)
    substitute(out, nb, table, a_word, b_word, n, tmp2)
    if ranges_differ(tmp, 0, tmp2, 0, total):
        return -1, -1
    return canonicalize(out, k2 // n, nb)


@njit(cache=True)
def tuning_scan(flat, offs, ks, ls, order, image, table, a_word, b_word, n):
    """Exhaustive tuning check over a packed family of canonical expansions.

    For every index i (visited in ``order``) with image index image[i]
    (the expansion of the doubled angle) it checks

      * shift^n(tune(e_i)) == tune(e_image[i])  (canonical forms), and
      * block_parse(tune(e_i)) == e_i.

    Returns (number of semiconjugacy failures, number of round-trip
    failures, first failing index or -1).  When order visits image[i]
    right after i, the tuned image is reused instead of recomputed.
    """
    maxlen = 0
    for i in range(ks.shape[0]):
        if ks[i] + ls[i] > maxlen:
            maxlen = ks[i] + ls[i]
    words = (maxlen * n) // 64 + 4
    cur = np.zeros(words, np.uint64)
    nxt = np.zeros(words, np.uint64)
    tmp = np.zeros(words, np.uint64)
    tmp2 = np.zeros(words, np.uint64)
    back = np.zeros(words, np.uint64)
    bad_conj = 0
    bad_trip = 0
    first = -1
    have = -1
    kc = 0
    lc = 0
    for t in range(order.shape[0]):
        i = order[t]
        e = flat[offs[i]:]
        if have != i:
            substitute(e, ks[i] + ls[i], table, a_word, b_word, n, cur)
            kc, lc = canonicalize(cur, ks[i] * n, (ks[i] + ls[i]) * n)
        j = image[i]
        ej = flat[offs[j]:]
        substitute(ej, ks[j] + ls[j], table, a_word, b_word, n, nxt)
        kj, lj = canonicalize(nxt, ks[j] * n, (ks[j] + ls[j]) * n)
        if not shifted_equal(cur, kc, lc, n, nxt, kj, lj):
            bad_conj += 1
            if first < 0:
                first = i
        ku, lu = block_parse(cur, kc, lc, table, a_word, b_word, n, back, tmp, tmp2)
        if ku != ks[i] or lu != ls[i] or ranges_differ(back, 0, e, 0, ku + lu):
            bad_trip += 1
            if first < 0:
                first = i
        if t + 1 < order.shape[0] and order[t + 1] == j:
            cur, nxt = nxt, cur
            kc, lc = kj, lj
            have = j
        else:
            have = -1
    return bad_conj, bad_trip, first
