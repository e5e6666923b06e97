# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; semantics must match `_pykernels.py` exactly.

Exponents are Python ints inside tuples (always small in practice) but the
loops, tuple construction and dict bookkeeping run at C speed. Coefficients
stay Python objects so Fraction and big-int arithmetic remain exact.
"""

BACKEND = "compiled"


def exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


def exp_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] if a[i] >= b[i] else b[i]
    return tuple(out)


def exp_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    total = 0
    for i in range(n):
        total += a[i]
    return total


cdef int _grevlex_cmp(tuple a, tuple b) except? -2:
    cdef Py_ssize_t i, n = len(a)
    da = 0
    db = 0
    for i in range(n):
        da += a[i]
        db += b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, -1, -1):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


cdef int _cmp(tuple a, tuple b, int code, tuple front, tuple back) except? -2:
    cdef Py_ssize_t i, n
    if code == 1:
        return _grevlex_cmp(a, b)
    if code == 0:
        n = len(a)
        for i in range(n):
            if a[i] != b[i]:
                return 1 if a[i] > b[i] else -1
        return 0
    cdef int c = _grevlex_cmp(tuple([a[i] for i in front]), tuple([b[i] for i in front]))
    if c:
        return c
    return _grevlex_cmp(tuple([a[i] for i in back]), tuple([b[i] for i in back]))


def exp_cmp(tuple a, tuple b, int code, tuple front=(), tuple back=()):
    return _cmp(a, b, code, front, back)


def exp_max(exps, int code, tuple front=(), tuple back=()):
    best = None
    for e in exps:
        if best is None or _cmp(<tuple> e, <tuple> best, code, front, back) > 0:
            best = e
    return best


def dict_add(dict d1, dict d2, p):
    cdef dict out = dict(d1)
    for k, v in d2.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = (w + v) % p if p else w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def dict_neg(dict d, p):
    cdef dict out = {}
    if p:
        for k, v in d.items():
            out[k] = -v % p
    else:
        for k, v in d.items():
            out[k] = -v
    return out


def dict_scale(dict d, c, p):
    cdef dict out = {}
    if p:
        c = c % p
        if c == 0:
            return out
        for k, v in d.items():
            out[k] = v * c % p
        return out
    if not c:
        return out
    for k, v in d.items():
        out[k] = v * c
    return out


def dict_mul(dict d1, dict d2, p):
    if len(d1) > len(d2):
        d1, d2 = d2, d1
    cdef dict out = {}
    for k1, v1 in d1.items():
        for k2, v2 in d2.items():
            k = exp_add(<tuple> k1, <tuple> k2)
            w = out.get(k)
            if w is None:
                w = v1 * v2 % p if p else v1 * v2
            else:
                w = (w + v1 * v2) % p if p else w + v1 * v2
            if w:
                out[k] = w
            elif k in out:
                del out[k]
    return out


def dict_iadd_scaled(dict target, dict src, c, tuple shift, p):
    """target += c * X^shift * src, in place; drops cancelled terms."""
    if p:
        for k, v in src.items():
            kk = exp_add(<tuple> k, shift)
            w = (target.get(kk, 0) + v * c) % p
            if w:
                target[kk] = w
            elif kk in target:
                del target[kk]
    else:
        for k, v in src.items():
            kk = exp_add(<tuple> k, shift)
            w = target.get(kk, 0) + v * c
            if w:
                target[kk] = w
            elif kk in target:
                del target[kk]
    return target
