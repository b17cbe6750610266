"""Pure Python evaluation kernel for the Mittag-Leffler power series.

This module is the reference twin of the compiled kernel
(``mlsemigroup._ddcore_cy``).  Both implement the same algorithm with the
same operation order, so they produce bit-identical results; the compiled
one is merely fast.  Import :mod:`mlsemigroup.backend` to get whichever is
available.

The series sum_n z^n / Gamma(alpha*n + beta) is brutally ill-conditioned on
the negative axis: for alpha = 0.3, z ~ -3 the largest term is ~1e16 while
the sum is ~0.2, so plain double summation retains no correct digits.  The
kernel therefore runs entirely in double-double ("compensated") arithmetic:

* the accumulator, the running term, and the term ratios are all (hi, lo)
  pairs built from error-free transforms (two_sum / Dekker two_prod),
  carrying ~31 significant digits;
* term ratios z * Gamma(alpha*n + beta) / Gamma(alpha*(n+1) + beta) come
  from a double-double log-gamma (Stirling series with argument raising,
  truncation below 1e-29) so the ratio chain does not inherit the ~1e-14
  floor of an ordinary double gamma;
* for alpha == 1 the ratio is the exact rational z / (n + beta) and the
  gamma machinery is bypassed.

Summation stops once the observed term ratio r drops below 1 and the
geometric tail bound |term| * r / (1 - r) falls below tol * max(|sum|, 1).
The reported error estimate adds a roundoff term proportional to the sum of
absolute terms, so heavy cancellation shows up in the estimate instead of
being silently absorbed.  A result is flagged converged only when the
estimate meets the requested tolerance and the sum has not cancelled below
what the accumulator can certify.
"""

import math

BACKEND = "python"

# Unit roundoff of the double-double accumulator and the cancellation guard
# floor (the 1e-8 single-double guard rescaled by the 2^-52 precision gain).
EPS_DD = 2.0 ** -104
EPS_OUT = 2.0 ** -53  # final rounding of the returned double
CERT_FLOOR = 2.0 ** -52  # certification saturates at one ulp relative
GUARD_RATIO = 1e-8 * 2.0 ** -52
ROUNDOFF_SCALE = 32.0

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant

# ln 2 and ln(2*pi)/2 as double-double constants.
_LN2_HI, _LN2_LO = 0.6931471805599453, 2.3190468138462996e-17
_LN2PI2_HI, _LN2PI2_LO = 0.9189385332046728, -3.8782941580672414e-17

# Stirling series coefficients B_{2k} / (2k (2k-1)), k = 1..13, split into
# double-double pairs.  With arguments raised to >= 32 the truncated tail is
# below 4e-34.
_STIRLING = (
    (0.08333333333333333, 4.625929269271485e-18),
    (-0.002777777777777778, 1.0601087908747154e-19),
    (0.0007936507936507937, 6.883823317368282e-22),
    (-0.0005952380952380953, 5.36938218754726e-20),
    (0.0008417508417508417, 3.6870174889237694e-20),
    (-0.0019175269175269176, 1.0675702776872475e-19),
    (0.00641025641025641, 2.2240044563805217e-19),
    (-0.029550653594771242, 4.861760957508855e-19),
    (0.17964437236883057, -6.401600482710946e-19),
    (-1.3924322169059011, 1.5837056989230303e-17),
    (13.402864044168393, -6.154114101993966e-16),
    (-156.84828462600203, 9.391823141715389e-15),
    (2193.1033333333335, -1.3339255626002948e-13),
)

_STIRLING_CUTOFF = 32.0


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    t, f = _two_sum(al, bl)
    e += t
    s, e = _quick_two_sum(s, e)
    e += f
    return _quick_two_sum(s, e)


def _dd_add_d(ah, al, b):
    s, e = _two_sum(ah, b)
    e += al
    return _quick_two_sum(s, e)


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e += ah * bl + al * bh
    return _quick_two_sum(p, e)


def _dd_mul_d(ah, al, b):
    p, e = _two_prod(ah, b)
    e += al * b
    return _quick_two_sum(p, e)


def _dd_div(ah, al, bh, bl):
    q1 = ah / bh
    th, tl = _dd_mul_d(bh, bl, q1)
    rh, rl = _dd_add(ah, al, -th, -tl)
    q2 = rh / bh
    th, tl = _dd_mul_d(bh, bl, q2)
    rh, rl = _dd_add(rh, rl, -th, -tl)
    q3 = rh / bh
    qh, ql = _quick_two_sum(q1, q2)
    return _dd_add_d(qh, ql, q3)


def _inv_factorials():
    out = [(1.0, 0.0), (1.0, 0.0)]
    f = 1.0
    for k in range(2, 13):
        f *= k  # exact: 12! < 2**53
        out.append(_dd_div(1.0, 0.0, f, 0.0))
    return tuple(out)


_INV_FACT = _inv_factorials()


def dd_exp(ah, al):
    """exp of a double-double, accurate to ~1e-30 relative."""
    if ah != ah:
        return math.nan, 0.0
    # exp overflows past ln(DBL_MAX) = 709.7827...; ldexp saturates exactly
    if ah > 709.8:
        return math.inf, 0.0
    if ah < -745.0:
        return 0.0, 0.0
    m = math.floor(ah / _LN2_HI + 0.5)
    th, tl = _dd_mul_d(_LN2_HI, _LN2_LO, m)
    rh, rl = _dd_add(ah, al, -th, -tl)
    # scale by 2^-11 (exact), run the expm1 Taylor, then square back up
    rh *= 0.00048828125
    rl *= 0.00048828125
    sh, sl = rh, rl
    ph, pl = rh, rl
    for k in range(2, 10):
        ph, pl = _dd_mul(ph, pl, rh, rl)
        ch, cl = _INV_FACT[k]
        th, tl = _dd_mul(ph, pl, ch, cl)
        sh, sl = _dd_add(sh, sl, th, tl)
    for _ in range(11):
        th, tl = _dd_mul(sh, sl, sh, sl)
        uh, ul = _dd_mul_d(sh, sl, 2.0)
        sh, sl = _dd_add(th, tl, uh, ul)
    sh, sl = _dd_add_d(sh, sl, 1.0)
    m = int(m)
    return math.ldexp(sh, m), math.ldexp(sl, m)


def dd_log(ah, al):
    """log of a positive double-double via one Newton step off libm's seed."""
    y = math.log(ah)
    eh, el = dd_exp(-y, 0.0)
    ph, pl = _dd_mul(ah, al, eh, el)
    ph, pl = _dd_add_d(ph, pl, -1.0)
    return _dd_add(y, 0.0, ph, pl)


def dd_lgamma(xh, xl):
    """log Gamma of a positive double-double.

    Stirling series above 32; smaller arguments are raised with the
    recurrence Gamma(x+1) = x Gamma(x) (the raising product stays well
    below double overflow since x+k <= 33).
    """
    k = 0 if xh >= _STIRLING_CUTOFF else int(math.ceil(_STIRLING_CUTOFF - xh))
    ph, pl = 1.0, 0.0
    if k:
        for i in range(k):
            fh, fl = _dd_add_d(xh, xl, float(i))
            ph, pl = _dd_mul(ph, pl, fh, fl)
        xh, xl = _dd_add_d(xh, xl, float(k))
    lh, ll = dd_log(xh, xl)
    ah, al = _dd_add_d(xh, xl, -0.5)
    rh, rl = _dd_mul(ah, al, lh, ll)
    rh, rl = _dd_add(rh, rl, -xh, -xl)
    rh, rl = _dd_add(rh, rl, _LN2PI2_HI, _LN2PI2_LO)
    ih, il = _dd_div(1.0, 0.0, xh, xl)
    vh, vl = _dd_mul(ih, il, ih, il)
    sh, sl = _STIRLING[12]
    for j in range(11, -1, -1):
        sh, sl = _dd_mul(sh, sl, vh, vl)
        sh, sl = _dd_add(sh, sl, _STIRLING[j][0], _STIRLING[j][1])
    sh, sl = _dd_mul(sh, sl, ih, il)
    rh, rl = _dd_add(rh, rl, sh, sl)
    if k:
        lph, lpl = dd_log(ph, pl)
        rh, rl = _dd_add(rh, rl, -lph, -lpl)
    return rh, rl


def gamma_stirling(x):
    """Gamma(x) for x > 0 through the double-double pipeline (one rounding)."""
    lh, ll = dd_lgamma(x, 0.0)
    gh, gl = dd_exp(lh, ll)
    return gh + gl


def ml_series(alpha, beta, z, tol, max_terms):
    """Sum z^n / Gamma(alpha n + beta) with certified truncation control.

    Returns ``(value, error_estimate, terms_used, converged)``.  The error
    estimate is the geometric tail bound at the stopping point, plus a
    roundoff allowance proportional to the accumulated absolute terms, plus
    the final rounding of the returned double.  ``converged`` certifies
    ``error_estimate <= max(tol, 1 ulp) * max(|value|, 1)`` (no double can
    promise better than its own last bit) and that cancellation has not
    eaten past the accumulator's precision.
    """
    lgh, lgl = dd_lgamma(beta, 0.0)
    th, tl = dd_exp(-lgh, -lgl)  # first term: 1 / Gamma(beta)
    sh, sl = th, tl
    abs_sum = abs(th)
    max_term = abs(th)
    n_used = 1
    tail = math.inf
    stopped = False
    exact_ratio = alpha == 1.0
    while n_used < max_terms:
        n = n_used - 1
        if exact_ratio:
            dh, dl = _two_sum(float(n), beta)
            rh, rl = _dd_div(z, 0.0, dh, dl)
        else:
            xh, xl = _two_prod(alpha, float(n + 1))
            xh, xl = _dd_add_d(xh, xl, beta)
            nh, nl = dd_lgamma(xh, xl)
            gh, gl = _dd_add(lgh, lgl, -nh, -nl)
            eh, el = dd_exp(gh, gl)
            rh, rl = _dd_mul_d(eh, el, z)
            lgh, lgl = nh, nl
        wh, wl = _dd_mul(th, tl, rh, rl)
        if wh == 0.0:
            tail = 0.0
            stopped = True
            break
        if not math.isfinite(wh):
            tail = math.inf
            break
        r = abs(wh) / abs(th)
        if r < 1.0:
            tail = abs(wh) / (1.0 - r)
            if tail <= 0.5 * tol * max(abs(sh), 1.0):
                stopped = True
                break
        sh, sl = _dd_add(sh, sl, wh, wl)
        a = abs(wh)
        abs_sum += a
        if a > max_term:
            max_term = a
        th, tl = wh, wl
        n_used += 1
    value = sh
    error_estimate = tail + ROUNDOFF_SCALE * EPS_DD * abs_sum + EPS_OUT * abs(value)
    converged = (
        stopped
        and math.isfinite(value)
        and error_estimate <= max(tol, CERT_FLOOR) * max(abs(value), 1.0)
        and abs(value) >= GUARD_RATIO * max_term
    )
    return value, error_estimate, n_used, converged
