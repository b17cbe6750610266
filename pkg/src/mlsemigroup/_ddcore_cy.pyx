# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernel; the fast twin of mlsemigroup._ddcore.

Same algorithm, same operation order, same constants as the pure Python
module, so results are bit-identical (the extension is compiled with
-ffp-contract=off to keep the error-free transforms intact).  See
mlsemigroup._ddcore for the algorithm notes.
"""

from libc.math cimport ceil, fabs, floor, isfinite, ldexp, log, INFINITY

BACKEND = "cython"

EPS_DD = 2.0 ** -104
EPS_OUT = 2.0 ** -53
CERT_FLOOR = 2.0 ** -52
GUARD_RATIO = 1e-8 * 2.0 ** -52
ROUNDOFF_SCALE = 32.0

cdef double _SPLITTER = 134217729.0
cdef double _LN2_HI = 0.6931471805599453
cdef double _LN2_LO = 2.3190468138462996e-17
cdef double _LN2PI2_HI = 0.9189385332046728
cdef double _LN2PI2_LO = -3.8782941580672414e-17
cdef double _EPS_DD = 2.0 ** -104
cdef double _EPS_OUT = 2.0 ** -53
cdef double _CERT_FLOOR = 2.0 ** -52
cdef double _GUARD_RATIO = 1e-8 * 2.0 ** -52
cdef double _ROUNDOFF_SCALE = 32.0
cdef double _STIRLING_CUTOFF = 32.0

cdef double[13] _STIR_HI
cdef double[13] _STIR_LO
_STIR_HI[0] = 0.08333333333333333; _STIR_LO[0] = 4.625929269271485e-18
_STIR_HI[1] = -0.002777777777777778; _STIR_LO[1] = 1.0601087908747154e-19
_STIR_HI[2] = 0.0007936507936507937; _STIR_LO[2] = 6.883823317368282e-22
_STIR_HI[3] = -0.0005952380952380953; _STIR_LO[3] = 5.36938218754726e-20
_STIR_HI[4] = 0.0008417508417508417; _STIR_LO[4] = 3.6870174889237694e-20
_STIR_HI[5] = -0.0019175269175269176; _STIR_LO[5] = 1.0675702776872475e-19
_STIR_HI[6] = 0.00641025641025641; _STIR_LO[6] = 2.2240044563805217e-19
_STIR_HI[7] = -0.029550653594771242; _STIR_LO[7] = 4.861760957508855e-19
_STIR_HI[8] = 0.17964437236883057; _STIR_LO[8] = -6.401600482710946e-19
_STIR_HI[9] = -1.3924322169059011; _STIR_LO[9] = 1.5837056989230303e-17
_STIR_HI[10] = 13.402864044168393; _STIR_LO[10] = -6.154114101993966e-16
_STIR_HI[11] = -156.84828462600203; _STIR_LO[11] = 9.391823141715389e-15
_STIR_HI[12] = 2193.1033333333335; _STIR_LO[12] = -1.3339255626002948e-13

cdef struct dd:
    double hi
    double lo


cdef inline dd _two_sum(double a, double b) noexcept nogil:
    cdef dd r
    cdef double s = a + b
    cdef double bb = s - a
    r.hi = s
    r.lo = (a - (s - bb)) + (b - bb)
    return r


cdef inline dd _quick_two_sum(double a, double b) noexcept nogil:
    cdef dd r
    cdef double s = a + b
    r.hi = s
    r.lo = b - (s - a)
    return r


cdef inline dd _two_prod(double a, double b) noexcept nogil:
    cdef dd r
    cdef double p = a * b
    cdef double t = _SPLITTER * a
    cdef double ah = t - (t - a)
    cdef double al = a - ah
    cdef double bh, bl
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    r.hi = p
    r.lo = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return r


cdef inline dd _dd_add(dd a, dd b) noexcept nogil:
    cdef dd s = _two_sum(a.hi, b.hi)
    cdef dd t = _two_sum(a.lo, b.lo)
    cdef double e = s.lo + t.hi
    s = _quick_two_sum(s.hi, e)
    e = s.lo + t.lo
    return _quick_two_sum(s.hi, e)


cdef inline dd _dd_add_d(dd a, double b) noexcept nogil:
    cdef dd s = _two_sum(a.hi, b)
    cdef double e = s.lo + a.lo
    return _quick_two_sum(s.hi, e)


cdef inline dd _dd_mul(dd a, dd b) noexcept nogil:
    cdef dd p = _two_prod(a.hi, b.hi)
    cdef double e = p.lo + (a.hi * b.lo + a.lo * b.hi)
    return _quick_two_sum(p.hi, e)


cdef inline dd _dd_mul_d(dd a, double b) noexcept nogil:
    cdef dd p = _two_prod(a.hi, b)
    cdef double e = p.lo + a.lo * b
    return _quick_two_sum(p.hi, e)


cdef inline dd _dd_div(dd a, dd b) noexcept nogil:
    cdef double q1 = a.hi / b.hi
    cdef dd t = _dd_mul_d(b, q1)
    cdef dd r = _dd_add(a, _dd_neg(t))
    cdef double q2 = r.hi / b.hi
    t = _dd_mul_d(b, q2)
    r = _dd_add(r, _dd_neg(t))
    cdef double q3 = r.hi / b.hi
    cdef dd q = _quick_two_sum(q1, q2)
    return _dd_add_d(q, q3)


cdef inline dd _dd_neg(dd a) noexcept nogil:
    cdef dd r
    r.hi = -a.hi
    r.lo = -a.lo
    return r


cdef inline dd _mk(double h, double l) noexcept nogil:
    cdef dd r
    r.hi = h
    r.lo = l
    return r


cdef double[13] _INV_FACT_HI
cdef double[13] _INV_FACT_LO


def _init_inv_fact():
    cdef double f = 1.0
    cdef dd q
    cdef int k
    _INV_FACT_HI[0] = 1.0; _INV_FACT_LO[0] = 0.0
    _INV_FACT_HI[1] = 1.0; _INV_FACT_LO[1] = 0.0
    for k in range(2, 13):
        f *= k
        q = _dd_div(_mk(1.0, 0.0), _mk(f, 0.0))
        _INV_FACT_HI[k] = q.hi
        _INV_FACT_LO[k] = q.lo


_init_inv_fact()


cdef dd _dd_exp(dd a) noexcept nogil:
    cdef dd r, s, p, t, u
    cdef double m
    cdef int k, i
    if a.hi != a.hi:
        return _mk(a.hi, 0.0)
    # exp overflows past ln(DBL_MAX) = 709.7827...; ldexp saturates exactly
    if a.hi > 709.8:
        return _mk(INFINITY, 0.0)
    if a.hi < -745.0:
        return _mk(0.0, 0.0)
    m = floor(a.hi / _LN2_HI + 0.5)
    t = _dd_mul_d(_mk(_LN2_HI, _LN2_LO), m)
    r = _dd_add(a, _dd_neg(t))
    r.hi *= 0.00048828125
    r.lo *= 0.00048828125
    s = r
    p = r
    for k in range(2, 10):
        p = _dd_mul(p, r)
        t = _dd_mul(p, _mk(_INV_FACT_HI[k], _INV_FACT_LO[k]))
        s = _dd_add(s, t)
    for i in range(11):
        t = _dd_mul(s, s)
        u = _dd_mul_d(s, 2.0)
        s = _dd_add(t, u)
    s = _dd_add_d(s, 1.0)
    return _mk(ldexp(s.hi, <int> m), ldexp(s.lo, <int> m))


cdef dd _dd_log(dd a) noexcept nogil:
    cdef double y = log(a.hi)
    cdef dd e = _dd_exp(_mk(-y, 0.0))
    cdef dd p = _dd_mul(a, e)
    p = _dd_add_d(p, -1.0)
    return _dd_add(_mk(y, 0.0), p)


cdef dd _dd_lgamma(dd x) noexcept nogil:
    cdef int k = 0
    cdef dd p = _mk(1.0, 0.0)
    cdef dd f, l, a, r, inv, v, s, lp
    cdef int i, j
    if x.hi < _STIRLING_CUTOFF:
        k = <int> ceil(_STIRLING_CUTOFF - x.hi)
    if k:
        for i in range(k):
            f = _dd_add_d(x, <double> i)
            p = _dd_mul(p, f)
        x = _dd_add_d(x, <double> k)
    l = _dd_log(x)
    a = _dd_add_d(x, -0.5)
    r = _dd_mul(a, l)
    r = _dd_add(r, _dd_neg(x))
    r = _dd_add(r, _mk(_LN2PI2_HI, _LN2PI2_LO))
    inv = _dd_div(_mk(1.0, 0.0), x)
    v = _dd_mul(inv, inv)
    s = _mk(_STIR_HI[12], _STIR_LO[12])
    for j in range(11, -1, -1):
        s = _dd_mul(s, v)
        s = _dd_add(s, _mk(_STIR_HI[j], _STIR_LO[j]))
    s = _dd_mul(s, inv)
    r = _dd_add(r, s)
    if k:
        lp = _dd_log(p)
        r = _dd_add(r, _dd_neg(lp))
    return r


def dd_exp(double ah, double al):
    """exp of a double-double; returns the (hi, lo) pair."""
    cdef dd r = _dd_exp(_mk(ah, al))
    return r.hi, r.lo


def dd_log(double ah, double al):
    cdef dd r = _dd_log(_mk(ah, al))
    return r.hi, r.lo


def dd_lgamma(double xh, double xl):
    cdef dd r = _dd_lgamma(_mk(xh, xl))
    return r.hi, r.lo


def gamma_stirling(double x):
    """Gamma(x) for x > 0 through the double-double pipeline (one rounding)."""
    cdef dd l = _dd_lgamma(_mk(x, 0.0))
    cdef dd g = _dd_exp(l)
    return g.hi + g.lo


def ml_series(double alpha, double beta, double z, double tol, long max_terms):
    """Sum z^n / Gamma(alpha n + beta); see the pure Python twin for details.

    Returns ``(value, error_estimate, terms_used, converged)``.
    """
    cdef dd lg = _dd_lgamma(_mk(beta, 0.0))
    cdef dd term = _dd_exp(_dd_neg(lg))
    cdef dd accum = term
    cdef double abs_sum = fabs(term.hi)
    cdef double max_term = fabs(term.hi)
    cdef long n_used = 1
    cdef double tail = INFINITY
    cdef bint stopped = False
    cdef bint exact_ratio = alpha == 1.0
    cdef long n
    cdef dd den, ratio, x, nlg, g, e, w
    cdef double r, a, value, error_estimate
    cdef bint converged
    with nogil:
        while n_used < max_terms:
            n = n_used - 1
            if exact_ratio:
                den = _two_sum(<double> n, beta)
                ratio = _dd_div(_mk(z, 0.0), den)
            else:
                x = _two_prod(alpha, <double> (n + 1))
                x = _dd_add_d(x, beta)
                nlg = _dd_lgamma(x)
                g = _dd_add(lg, _dd_neg(nlg))
                e = _dd_exp(g)
                ratio = _dd_mul_d(e, z)
                lg = nlg
            w = _dd_mul(term, ratio)
            if w.hi == 0.0:
                tail = 0.0
                stopped = True
                break
            if not isfinite(w.hi):
                tail = INFINITY
                break
            r = fabs(w.hi) / fabs(term.hi)
            if r < 1.0:
                tail = fabs(w.hi) / (1.0 - r)
                if tail <= 0.5 * tol * (fabs(accum.hi) if fabs(accum.hi) > 1.0 else 1.0):
                    stopped = True
                    break
            accum = _dd_add(accum, w)
            a = fabs(w.hi)
            abs_sum += a
            if a > max_term:
                max_term = a
            term = w
            n_used += 1
    value = accum.hi
    error_estimate = tail + _ROUNDOFF_SCALE * _EPS_DD * abs_sum + _EPS_OUT * fabs(value)
    converged = (
        stopped
        and isfinite(value)
        and error_estimate
        <= (tol if tol > _CERT_FLOOR else _CERT_FLOOR)
        * (fabs(value) if fabs(value) > 1.0 else 1.0)
        and fabs(value) >= _GUARD_RATIO * max_term
    )
    return value, error_estimate, n_used, converged
