"""Pure-Python kernels for monomial exponent vectors and term dictionaries.

This is the fallback backend; `_ckernels.pyx` is the compiled twin with the
exact same semantics. Exponent vectors are tuples of ints, term dicts map
exponent tuple -> nonzero coefficient. `p` is the field characteristic
(0 means coefficients are Fractions, otherwise ints reduced mod p).

Order codes: 0 = lex, 1 = grevlex, 2 = block order (grevlex on the `front`
index tuple, ties broken by grevlex on `back`).
"""

BACKEND = "pure"


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def exp_deg(a):
    return sum(a)


def _grevlex_cmp(a, b):
    da = sum(a)
    db = sum(b)
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


def exp_cmp(a, b, code, front=(), back=()):
    if code == 1:
        return _grevlex_cmp(a, b)
    if code == 0:
        for x, y in zip(a, b):
            if x != y:
                return 1 if x > y else -1
        return 0
    c = _grevlex_cmp(tuple(a[i] for i in front), tuple(b[i] for i in front))
    if c:
        return c
    return _grevlex_cmp(tuple(a[i] for i in back), tuple(b[i] for i in back))


def exp_max(exps, code, front=(), back=()):
    best = None
    for e in exps:
        if best is None or exp_cmp(e, best, code, front, back) > 0:
            best = e
    return best


def dict_add(d1, d2, p):
    out = dict(d1)
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


def dict_neg(d, p):
    if p:
        return {k: -v % p for k, v in d.items()}
    return {k: -v for k, v in d.items()}


def dict_scale(d, c, p):
    if p:
        c %= p
        if c == 0:
            return {}
        return {k: v * c % p for k, v in d.items()}
    if not c:
        return {}
    return {k: v * c for k, v in d.items()}


def dict_mul(d1, d2, p):
    if len(d1) > len(d2):
        d1, d2 = d2, d1
    out = {}
    for k1, v1 in d1.items():
        for k2, v2 in d2.items():
            k = exp_add(k1, k2)
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


def dict_iadd_scaled(target, src, c, shift, p):
    """target += c * X^shift * src, in place; drops cancelled terms."""
    if p:
        for k, v in src.items():
            kk = exp_add(k, shift)
            w = (target.get(kk, 0) + v * c) % p
            if w:
                target[kk] = w
            elif kk in target:
                del target[kk]
    else:
        for k, v in src.items():
            kk = exp_add(k, shift)
            w = target.get(kk, 0) + v * c
            if w:
                target[kk] = w
            elif kk in target:
                del target[kk]
    return target
