# cython: language_level=3
"""Compiled exact rational arithmetic.

Drop-in subset of ``fractions.Fraction`` for the arithmetic this package
actually performs: normalized numerator/denominator, exact field operations,
total order, and a hash compatible with the stdlib numeric tower.  Components
below 2**30 take a pure C path (overflow-safe: all intermediate products stay
under 2**61); anything larger falls back to Python integers, so values are
never rounded or clamped.
"""

import numbers
import sys
from math import gcd as _pygcd

from cpython.object cimport Py_EQ, Py_GE, Py_GT, Py_LE, Py_LT, Py_NE

cdef extern from "Python.h":
    long long PyLong_AsLongLongAndOverflow(object, int*) except? -1

DEF SMALL = 1073741824  # 2**30

_HASH_MODULUS = sys.hash_info.modulus
_HASH_INF = sys.hash_info.inf


cdef inline long long _cgcd(long long a, long long b):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _fit(object o, long long* out):
    # True iff o is an int with |o| < 2**30; stores the C value in out.
    cdef int overflow = 0
    cdef long long v
    if type(o) is not int:
        return False
    v = PyLong_AsLongLongAndOverflow(o, &overflow)
    if overflow or v >= SMALL or v <= -SMALL:
        return False
    out[0] = v
    return True


cdef inline Rat _mk(object n, object d):
    # Internal factory: n/d must already be normalized with d > 0.
    cdef Rat r = Rat.__new__(Rat)
    r._n = n
    r._d = d
    return r


cdef inline Rat _mk_ll(long long n, long long d):
    return _mk(n, d)


cdef object _norm_make(object n, object d):
    # Normalize a big-int pair (d > 0 already) and build.
    cdef object g = _pygcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return _mk(n, d)


cdef object _add_sub(object an, object ad, object bn, object bd, bint sub):
    cdef long long a, b, c, d, n, dd, g
    if _fit(an, &a) and _fit(ad, &b) and _fit(bn, &c) and _fit(bd, &d):
        n = a * d - c * b if sub else a * d + c * b
        dd = b * d
        g = _cgcd(n if n >= 0 else -n, dd)
        if g > 1:
            n //= g
            dd //= g
        return _mk_ll(n, dd)
    return _norm_make(an * bd - bn * ad if sub else an * bd + bn * ad, ad * bd)


cdef object _mul(object an, object ad, object bn, object bd):
    cdef long long a, b, c, d, n, dd, g
    if _fit(an, &a) and _fit(ad, &b) and _fit(bn, &c) and _fit(bd, &d):
        n = a * c
        dd = b * d
        g = _cgcd(n if n >= 0 else -n, dd)
        if g > 1:
            n //= g
            dd //= g
        return _mk_ll(n, dd)
    return _norm_make(an * bn, ad * bd)


cdef object _div(object an, object ad, object bn, object bd):
    # (an/ad) / (bn/bd); divisor must be nonzero.
    cdef long long a, b, c, d, n, dd, g
    if bn == 0:
        raise ZeroDivisionError("rational division by zero")
    if _fit(an, &a) and _fit(ad, &b) and _fit(bn, &c) and _fit(bd, &d):
        n = a * d
        dd = b * c
        if dd < 0:
            n = -n
            dd = -dd
        g = _cgcd(n if n >= 0 else -n, dd)
        if g > 1:
            n //= g
            dd //= g
        return _mk_ll(n, dd)
    n_o = an * bd
    d_o = ad * bn
    if d_o < 0:
        n_o = -n_o
        d_o = -d_o
    return _norm_make(n_o, d_o)


cdef int _cmp(object an, object ad, object bn, object bd):
    # Sign of an/ad - bn/bd; denominators positive.
    cdef long long a, b, c, d, l, r
    if _fit(an, &a) and _fit(ad, &b) and _fit(bn, &c) and _fit(bd, &d):
        l = a * d
        r = c * b
        return (l > r) - (l < r)
    lo = an * bd
    ro = bn * ad
    return (lo > ro) - (lo < ro)


cdef tuple _components(object x):
    # (numerator, denominator) view of x, or None if x is not rational.
    if type(x) is Rat:
        return ((<Rat> x)._n, (<Rat> x)._d)
    if isinstance(x, int):
        return (x, 1)
    if isinstance(x, numbers.Rational):
        return (x.numerator, x.denominator)
    return None


cdef class Rat:
    """Normalized exact rational: gcd(|num|, den) == 1 and den > 0."""

    cdef object _n
    cdef object _d

    def __init__(self, num=0, den=None):
        cdef object n, d, g
        if den is None:
            if type(num) is Rat:
                self._n = (<Rat> num)._n
                self._d = (<Rat> num)._d
                return
            if isinstance(num, int):
                self._n = num
                self._d = 1
                return
            if isinstance(num, numbers.Rational):
                self._n = num.numerator
                self._d = num.denominator
                return
            raise TypeError(f"cannot build a rational from {type(num).__name__}")
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("two-argument Rat takes integers")
        if den == 0:
            raise ZeroDivisionError(f"Rat({num}, 0)")
        n, d = num, den
        if d < 0:
            n = -n
            d = -d
        g = _pygcd(n, d)
        if g > 1:
            n //= g
            d //= g
        self._n = n
        self._d = d

    @property
    def numerator(self):
        return self._n

    @property
    def denominator(self):
        return self._d

    def __reduce__(self):
        return (Rat, (self._n, self._d))

    def __repr__(self):
        return f"Rat({self._n}, {self._d})"

    def __str__(self):
        if self._d == 1:
            return str(self._n)
        return f"{self._n}/{self._d}"

    def __bool__(self):
        return self._n != 0

    def __float__(self):
        return self._n / self._d

    def __hash__(self):
        # The stdlib numeric-tower hash, so Rat == Fraction == int hashes agree.
        dinv = pow(self._d, _HASH_MODULUS - 2, _HASH_MODULUS)
        if not dinv:
            h = _HASH_INF
        else:
            h = abs(self._n) * dinv % _HASH_MODULUS
        result = h if self._n >= 0 else -h
        return -2 if result == -1 else result

    def __neg__(self):
        return _mk(-self._n, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        if self._n < 0:
            return _mk(-self._n, self._d)
        return self

    def __add__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _add_sub((<Rat> self)._n, (<Rat> self)._d, nd[0], nd[1], False)

    def __radd__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _add_sub(nd[0], nd[1], (<Rat> self)._n, (<Rat> self)._d, False)

    def __sub__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _add_sub((<Rat> self)._n, (<Rat> self)._d, nd[0], nd[1], True)

    def __rsub__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _add_sub(nd[0], nd[1], (<Rat> self)._n, (<Rat> self)._d, True)

    def __mul__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _mul((<Rat> self)._n, (<Rat> self)._d, nd[0], nd[1])

    def __rmul__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _mul(nd[0], nd[1], (<Rat> self)._n, (<Rat> self)._d)

    def __truediv__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _div((<Rat> self)._n, (<Rat> self)._d, nd[0], nd[1])

    def __rtruediv__(self, other):
        cdef tuple nd = _components(other)
        if nd is None:
            return NotImplemented
        return _div(nd[0], nd[1], (<Rat> self)._n, (<Rat> self)._d)

    def __richcmp__(self, other, int op):
        cdef object n, d
        cdef int sign
        if type(other) is Rat:
            if op == Py_EQ:
                return self._n == (<Rat> other)._n and self._d == (<Rat> other)._d
            if op == Py_NE:
                return self._n != (<Rat> other)._n or self._d != (<Rat> other)._d
            n = (<Rat> other)._n
            d = (<Rat> other)._d
        elif isinstance(other, int):
            if op == Py_EQ:
                return self._d == 1 and self._n == other
            if op == Py_NE:
                return self._d != 1 or self._n != other
            n = other
            d = 1
        elif isinstance(other, numbers.Rational):
            n = other.numerator
            d = other.denominator
        else:
            return NotImplemented
        sign = _cmp(self._n, self._d, n, d)
        if op == Py_LT:
            return sign < 0
        if op == Py_LE:
            return sign <= 0
        if op == Py_GT:
            return sign > 0
        if op == Py_GE:
            return sign >= 0
        if op == Py_EQ:
            return sign == 0
        return sign != 0


numbers.Rational.register(Rat)
