# cython: language_level=3
"""Compiled twin of _termkernel_py.

Same five functions, same dict-of-packed-int contract, bit-identical
output.  Coefficients and packed monomials stay arbitrary-precision
Python ints; the win is compiling away the interpreter loop around the
dict traffic, which is where the checkers spend their time.
"""

FIELD_MASK = (1 << 16) - 1


def mul(fa: dict, fb: dict) -> dict:
    cdef dict out = {}
    if not fa or not fb:
        return out
    if len(fa) > len(fb):
        fa, fb = fb, fa
    for ma, ca in fa.items():
        for mb, cb in fb.items():
            k = ma + mb
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    return {k: v for k, v in out.items() if v}


def addmul(acc: dict, f: dict, mono, coef) -> None:
    if not coef:
        return
    for m, c in f.items():
        k = m + mono
        v = acc.get(k)
        if v is None:
            acc[k] = c * coef
        else:
            acc[k] = v + c * coef


def prune(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


def divdiff(f: dict, sh_i, sh_j, ui, uj) -> dict:
    cdef dict out = {}
    cdef long a, b, t
    mask = FIELD_MASK
    for m, c in f.items():
        a = (m >> sh_i) & mask
        b = (m >> sh_j) & mask
        if a == b:
            continue
        base = m - a * ui - b * uj
        if a > b:
            for t in range(a - b):
                k = base + (a - 1 - t) * ui + (b + t) * uj
                v = out.get(k)
                if v is None:
                    out[k] = c
                else:
                    out[k] = v + c
        else:
            for t in range(b - a):
                k = base + (a + t) * ui + (b - 1 - t) * uj
                v = out.get(k)
                if v is None:
                    out[k] = -c
                else:
                    out[k] = v - c
    return {k: v for k, v in out.items() if v}


def swap(f: dict, sh_i, sh_j, ui, uj) -> dict:
    cdef dict out = {}
    cdef long a, b
    mask = FIELD_MASK
    for m, c in f.items():
        a = (m >> sh_i) & mask
        b = (m >> sh_j) & mask
        if a != b:
            m = m + (b - a) * ui + (a - b) * uj
        out[m] = c
    return out
