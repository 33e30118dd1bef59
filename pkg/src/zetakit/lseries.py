"""High-precision evaluation of zeta(s), Hurwitz zeta, Dirichlet L-functions
and their s-derivatives.

One Euler-Maclaurin engine serves everything: the direct sum of length N is
followed by the integral and Bernoulli corrections, and the reported tail
bound is |first omitted term| * |(s+2m+1)/(sigma+2m+1)|, minimized over the
number of correction terms actually used.  Values near s = 1 go through the
regularized forms (zeta(s,a) - 1/(s-1) and its derivative at 1) so that
L(1, chi) never divides by a vanishing pole term.

A complex128 fast path (`fast_*`) with the same formulas backs the zero
scanning in module `zeros`, where ~1e-13 absolute accuracy is enough.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp
from scipy.special import loggamma as _sc_loggamma

from .characters import (DirichletCharacter, is_principal, values_vector,
                         character_value_mp)
from .errors import NearZeroError, PoleError, PrecisionError

__all__ = [
    "EvalParams", "LaurentData", "hurwitz_zeta", "hurwitz_zeta_ds",
    "hurwitz_star", "hurwitz_star_ds", "l_value", "l_value_ds",
    "l_log_derivative", "zeta_k_value", "zeta_k_log_derivative", "residue",
    "fast_hurwitz_vec", "fast_zeta", "fast_l", "fast_completed",
]


@dataclass
class EvalParams:
    """Working precision and Euler-Maclaurin truncation knobs.

    `tail_bound` records the propagated truncation bound of the most recent
    top-level call made with this object (a-posteriori, heuristic but
    tested).  `require_accuracy`, when set, turns an unreachable bound into
    a PrecisionError instead of a silently large report.
    """

    precision_bits: int = 192
    em_cutoff: int = 50
    bernoulli_terms: int = 60
    tail_bound: float = 0.0
    require_accuracy: float | None = None

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be at least 64")

    def _record(self, bound):
        self.tail_bound = float(bound)
        if self.require_accuracy is not None and self.tail_bound > self.require_accuracy:
            raise PrecisionError(
                f"tail bound {self.tail_bound:.3g} exceeds requested "
                f"accuracy {self.require_accuracy:.3g}")


@dataclass
class LaurentData:
    """Leading Laurent data of a Dedekind zeta function at s = 1."""

    residue: float
    ek_constant: float
    method: str  # l_factorization | z_limit | stark_zero_sum
    error_estimate: float


def _effective_n(params: EvalParams, s) -> int:
    return max(params.em_cutoff, int(0.9 * abs(mp.im(s))) + 20)


def _em_core(s, a, n_terms, m_max):
    """Euler-Maclaurin value, s-derivative and tail bounds for zeta(s, a).

    Runs under the caller's mpmath precision.  Returns
    (value, dvalue, bound, dbound).
    """
    w = n_terms + a
    logw = mp.log(w)
    val = mp.mpf(0)
    dval = mp.mpf(0)
    for k in range(n_terms):
        base = k + a
        t = base ** (-s)
        val += t
        dval -= mp.log(base) * t
    w1s = w ** (1 - s)
    val += w1s / (s - 1)
    dval += w1s * (-logw / (s - 1) - 1 / (s - 1) ** 2)
    ws = w ** (-s)
    val += ws / 2
    dval -= logw * ws / 2
    sigma = mp.re(s)
    # Bernoulli corrections; stop at the smallest certified bound.
    poch = s                    # prod_{i=0}^{2j-2} (s+i), here j=1
    hsum = 1 / s                # sum_{i=0}^{2j-2} 1/(s+i)
    wpow = ws / w               # w^(-s-2j+1), here j=1
    best = mp.inf
    dbest = mp.inf
    j = 1
    while j <= m_max:
        coef = mp.bernoulli(2 * j) / mp.factorial(2 * j)
        term = coef * poch * wpow
        dterm = coef * wpow * (poch * hsum - poch * logw)
        denom = sigma + 2 * j - 1
        if denom <= 0:
            val += term
            dval += dterm
        else:
            # |remainder| <= |(s+2j-1)/(sigma+2j-1)| * |term| once we stop
            safety = abs(s + 2 * j - 1) / denom
            b = abs(term) * safety
            if b >= best:
                break       # divergence onset: keep the best certified stop
            val += term
            dval += dterm
            best = b
            dbest = b * (abs(hsum) + logw + 1)
            if b < mp.mpf(2) ** (-mp.prec - 8):
                break
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        hsum += 1 / (s + 2 * j - 1) + 1 / (s + 2 * j)
        wpow /= w * w
        j += 1
    if best == mp.inf:
        best = abs(poch * wpow)
        dbest = best * (logw + 1)
    return val, dval, best, dbest


def _em_core_star(a, n_terms, m_max):
    """Regularized value/derivative of zeta(s, a) - 1/(s-1) at s = 1."""
    w = n_terms + a
    logw = mp.log(w)
    val = mp.mpf(0)
    dval = mp.mpf(0)
    for k in range(n_terms):
        base = k + a
        val += 1 / base
        dval -= mp.log(base) / base
    val += -logw
    dval += logw ** 2 / 2
    val += 1 / (2 * w)
    dval -= logw / (2 * w)
    wpow = mp.mpf(1) / (w * w)
    best = mp.inf
    dbest = mp.inf
    harmonic = mp.mpf(1)        # H_{2j-1} at j=1
    fact = mp.mpf(1)            # (2j-1)! at j=1
    j = 1
    while j <= m_max:
        coef = mp.bernoulli(2 * j) / mp.factorial(2 * j)
        term = coef * fact * wpow
        dterm = coef * fact * wpow * (harmonic - logw)
        b = abs(term) * (2 * j + 1)       # |(1+2j)/(1+2j)| = 1; slack factor
        if b >= best:
            break
        val += term
        dval += dterm
        best = b
        dbest = b * (harmonic + logw + 1)
        if b < mp.mpf(2) ** (-mp.prec - 8):
            break
        fact *= (2 * j) * (2 * j + 1)
        harmonic += mp.mpf(1) / (2 * j) + mp.mpf(1) / (2 * j + 1)
        wpow /= w * w
        j += 1
    return val, dval, best, dbest


def _as_mp_fraction(a):
    if isinstance(a, Fraction):
        return mp.mpf(a.numerator) / a.denominator
    return mp.mpmathify(a)


def hurwitz_zeta(s, a, params: EvalParams | None = None):
    """zeta(s, a) for a in (0, 1], continued everywhere except s = 1."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        s = mp.mpmathify(s)
        av = _as_mp_fraction(a)
        if not 0 < av <= 1:
            raise ValueError("a must lie in (0, 1]")
        if s == 1:
            raise PoleError("hurwitz zeta has a simple pole at s = 1")
        val, _, bound, _ = _em_core(s, av, _effective_n(params, s),
                                    params.bernoulli_terms)
    params._record(bound)
    return val


def hurwitz_zeta_ds(s, a, params: EvalParams | None = None):
    """d/ds zeta(s, a), by term-wise analytic differentiation."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        s = mp.mpmathify(s)
        av = _as_mp_fraction(a)
        if not 0 < av <= 1:
            raise ValueError("a must lie in (0, 1]")
        if s == 1:
            raise PoleError("hurwitz zeta has a simple pole at s = 1")
        _, dval, _, dbound = _em_core(s, av, _effective_n(params, s),
                                      params.bernoulli_terms)
    params._record(dbound)
    return dval


def hurwitz_star(a, params: EvalParams | None = None):
    """Value of zeta(s, a) - 1/(s-1) at s = 1 (equals -digamma(a))."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        av = _as_mp_fraction(a)
        val, _, bound, _ = _em_core_star(av, max(params.em_cutoff, 30),
                                         params.bernoulli_terms)
    params._record(bound)
    return val


def hurwitz_star_ds(a, params: EvalParams | None = None):
    """Derivative of zeta(s, a) - 1/(s-1) at s = 1 (= -gamma_1(a))."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        av = _as_mp_fraction(a)
        _, dval, _, dbound = _em_core_star(av, max(params.em_cutoff, 30),
                                           params.bernoulli_terms)
    params._record(dbound)
    return dval


@functools.lru_cache(maxsize=4096)
def _hurwitz_vec_mp(q, s_key, prec, n_terms, m_max):
    """(value, dvalue, bound, dbound) of zeta(s, a/q) for a = 1..q."""
    with mp.workprec(prec):
        s = mp.mpmathify(s_key)
        out = []
        for a in range(1, q + 1):
            av = mp.mpf(a) / q
            if s == 1:
                out.append(_em_core_star(av, n_terms, m_max))
            else:
                out.append(_em_core(s, av, n_terms, m_max))
    return tuple(out)


def _l_pieces(chi, s, params):
    """Shared worker: (L, L', value bound, derivative bound) as mp numbers."""
    if chi.conductor != chi.modulus:
        raise ValueError("l_value requires a primitive character")
    q = chi.modulus
    prec = params.precision_bits + 20
    with mp.workprec(prec):
        s = mp.mpmathify(s)
        if is_principal(chi):
            if s == 1:
                raise PoleError("L(s, principal) reduces to zeta: pole at s = 1")
            val, dval, b, db = _em_core(s, mp.mpf(1),
                                        _effective_n(params, s),
                                        params.bernoulli_terms)
            return val, dval, b, db
        n_terms = _effective_n(params, s)
        vec = _hurwitz_vec_mp(q, s, prec, n_terms, params.bernoulli_terms)
        lsum = mp.mpc(0)
        dsum = mp.mpc(0)
        bsum = mp.mpf(0)
        dbsum = mp.mpf(0)
        for a in range(1, q):
            cv = character_value_mp(chi, a)
            if cv == 0:
                continue
            hv, hd, hb, hdb = vec[a - 1]
            lsum += cv * hv
            dsum += cv * hd
            bsum += hb
            dbsum += hdb
        qs = q ** (-s)
        lval = qs * lsum
        # L'(s) = -log(q) L(s) + q^{-s} sum chi(a) zeta'(s, a/q); at s = 1 the
        # pole parts cancel because sum chi(a) = 0, so the starred pieces are
        # exactly right there too.
        dlval = -mp.log(q) * lval + qs * dsum
        bound = abs(qs) * bsum
        dbound = abs(qs) * (dbsum + mp.log(q) * bsum)
        return lval, dlval, bound, dbound


def l_value(chi, s, params: EvalParams | None = None):
    """L(s, chi) for primitive chi; regularized (finite) value at s = 1."""
    params = params or EvalParams()
    val, _, bound, _ = _l_pieces(chi, s, params)
    params._record(bound)
    return val


def l_value_ds(chi, s, params: EvalParams | None = None):
    params = params or EvalParams()
    _, dval, _, dbound = _l_pieces(chi, s, params)
    params._record(dbound)
    return dval


def l_log_derivative(chi, s, params: EvalParams | None = None):
    """L'/L (s, chi), guarded against evaluation too close to a zero."""
    params = params or EvalParams()
    val, dval, bound, dbound = _l_pieces(chi, s, params)
    with mp.workprec(params.precision_bits + 20):
        mag = abs(val)
        if mag < 10 * bound or mag == 0:
            raise NearZeroError(
                f"|L| = {mpmath.nstr(mag, 5)} is within 10x the error bound")
        out = dval / val
        err = (dbound * mag + bound * abs(dval)) / mag ** 2
    params._record(err)
    return out


def _nontrivial_primitives(fld):
    return [chi for chi in fld.characters if not is_principal(chi)]


def zeta_k_value(fld, s, params: EvalParams | None = None):
    """zeta_K(s) = zeta(s) * prod L(s, chi) over the field's characters."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        s = mp.mpmathify(s)
        if s == 1:
            raise PoleError("zeta_K has a simple pole at s = 1")
        val, _, bound, _ = _em_core(s, mp.mpf(1), _effective_n(params, s),
                                    params.bernoulli_terms)
        total_rel = bound / max(abs(val), mp.mpf(1e-30))
        out = val
        for chi in _nontrivial_primitives(fld):
            lv, _, lb, _ = _l_pieces(chi, s, params)
            out *= lv
            total_rel += lb / max(abs(lv), mp.mpf(1e-30))
        bound = abs(out) * total_rel
        if mp.im(s) == 0 and abs(mp.im(out)) < mp.mpf(1e-20) * (1 + abs(out)):
            out = mp.re(out)
    params._record(bound)
    return out


def zeta_k_log_derivative(fld, s, params: EvalParams | None = None):
    """zeta_K'/zeta_K(s) via the character factorization."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        s = mp.mpmathify(s)
        if s == 1:
            raise PoleError("zeta_K'/zeta_K has a pole at s = 1")
        val, dval, b, db = _em_core(s, mp.mpf(1), _effective_n(params, s),
                                    params.bernoulli_terms)
        if abs(val) < 10 * b:
            raise NearZeroError("zeta(s) too close to zero")
        out = dval / val
        err = (db * abs(val) + b * abs(dval)) / abs(val) ** 2
        for chi in _nontrivial_primitives(fld):
            lv, ld, lb, ldb = _l_pieces(chi, s, params)
            if abs(lv) < 10 * lb:
                raise NearZeroError("L(s, chi) too close to zero")
            out += ld / lv
            err += (ldb * abs(lv) + lb * abs(ld)) / abs(lv) ** 2
        if mp.im(s) == 0 and abs(mp.im(out)) < mp.mpf(1e-18) * (1 + abs(out)):
            out = mp.re(out)
    params._record(err)
    return out


def residue(fld, params: EvalParams | None = None):
    """rho_K, the residue of zeta_K at s = 1: prod of L(1, chi)."""
    params = params or EvalParams()
    with mp.workprec(params.precision_bits + 20):
        out = mp.mpf(1)
        total_rel = mp.mpf(0)
        for chi in _nontrivial_primitives(fld):
            lv, _, lb, _ = _l_pieces(chi, 1, params)
            out *= lv
            total_rel += lb / max(abs(lv), mp.mpf(1e-30))
        bound = abs(out) * total_rel
        if abs(mp.im(out)) > mp.mpf(1e-15) * (1 + abs(out)) + bound:
            raise PrecisionError("residue came out non-real")
        out = mp.re(out)
        if out <= 0:
            raise PrecisionError("residue came out non-positive")
    params._record(bound)
    return out


# ----------------------------------------------------------------------
# complex128 fast path (zero scanning / dense scans).

_FAST_BERN = None


def _fast_bern():
    global _FAST_BERN
    if _FAST_BERN is None:
        with mp.workprec(80):
            _FAST_BERN = [float(mp.bernoulli(2 * j) / mp.factorial(2 * j))
                          for j in range(1, 17)]
    return _FAST_BERN


@functools.lru_cache(maxsize=256)
def _fast_log_grid(q, n_terms):
    a = np.arange(1, q + 1) / q
    k = np.arange(n_terms)
    grid = np.log(k[None, :] + a[:, None])    # (q, N)
    w = n_terms + a
    return grid, np.log(w), w


def fast_hurwitz_vec(s: complex, q: int, n_terms: int | None = None) -> np.ndarray:
    """zeta(s, a/q) for a = 1..q at double precision (~1e-13 absolute)."""
    if s == 1:
        raise PoleError("pole at s = 1")
    if n_terms is None:
        n_terms = max(24, int(0.85 * abs(s.imag)) + 24)
    grid, logw, w = _fast_log_grid(q, n_terms)
    vals = np.exp(-s * grid).sum(axis=1)
    w1s = np.exp((1 - s) * logw)
    vals += w1s / (s - 1)
    ws = np.exp(-s * logw)
    vals += ws / 2
    wpow = ws / w
    poch = s
    sigma = s.real
    prev = math.inf
    for j, coef in enumerate(_fast_bern(), start=1):
        term = coef * poch * wpow
        size = float(np.max(np.abs(term)))
        if sigma + 2 * j - 1 > 0 and size >= prev:
            break
        vals += term
        prev = size
        if size < 1e-18 * (1 + float(np.max(np.abs(vals)))):
            break
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        wpow = wpow / (w * w)
    return vals


def fast_zeta(s: complex) -> complex:
    return complex(fast_hurwitz_vec(s, 1)[0])


def fast_l(chi: DirichletCharacter, s: complex) -> complex:
    """L(s, chi) for primitive chi, double precision."""
    q = chi.modulus
    if q == 1:
        return fast_zeta(s)
    vec = fast_hurwitz_vec(s, q)
    vals = values_vector(chi)
    # a runs 1..q; chi(q mod q) = chi(0) = 0, so the last slot drops out
    acc = np.dot(vals[1:], vec[: q - 1])
    return complex(np.exp(-s * math.log(q)) * acc)


def fast_completed(chi: DirichletCharacter, s: complex) -> complex:
    """Completed L-function: entire, nonzero off the nontrivial zeros.

    For the trivial character this is (1/2) s (s-1) pi^(-s/2) Gamma(s/2)
    zeta(s); otherwise (q/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi) with a the
    parity exponent.
    """
    if chi.modulus == 1:
        lg = _sc_loggamma(s / 2)
        return 0.5 * s * (s - 1) * np.exp(-s / 2 * math.log(math.pi) + lg) \
            * fast_zeta(s)
    a = 0 if chi.parity == "even" else 1
    z = (s + a) / 2
    pref = np.exp(z * math.log(chi.modulus / math.pi) + _sc_loggamma(z))
    return complex(pref * fast_l(chi, s))
