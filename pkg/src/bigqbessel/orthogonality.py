"""Weighted L^2_q inner products, the Lommel-type product integral, norm
closed forms, the Gram matrix of the zero family, and Fourier expansion.

The central identity is the two-sided product-integral evaluation: with
C = (1-q)(1-q^(2a+2))/q^(2a+2) and W(a) = (-a^2; q^2)_inf / (-a^2 q^(2a+2);
q^2)_inf,

  (lam^2 - mu^2) * Int_0^a w(x) J_{a+1}(x,lam) J_{a+1}(x,mu) d_q x
      = C * ( W(a) * B(a/q, a; lam, mu) - B(0, 0; lam, mu) ),

  B(u, v; lam, mu) = J_{a+1}(u,lam) J_a(v,mu) - J_{a+1}(u,mu) J_a(v,lam).

The x -> 0 boundary term B(0,0;...) does not vanish (J_a(0, lam) != 0),
and it is what breaks the orthogonality of {J_{a+1}(., j_n)}: at a pair of
zeros lam = j_n, mu = j_m the lattice boundary term at x = a dies but the
one at x = 0 survives, so the off-diagonal Gram entries are O(1) rather
than zero.  The closed forms below include the boundary term, which is the
form that matches the direct q-integral to working precision; the
boundary-free display is available behind printed=True for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List

import mpmath as mp

from .bqbessel import eval_dJ_dz, eval_J
from .defaults import DEFAULT_TOL, RESIDUAL_TOL
from .errors import (
    LengthMismatch,
    NotAZero,
    OrderOutOfRange,
    ScaleMismatch,
)
from .qcalc import QContext, SeriesValue, fused_product_ratio, q_integral
from .zerofinder import ZeroTable

__all__ = [
    "QLatticeSignal",
    "GramReport",
    "weight",
    "inner_product",
    "lommel_integral_direct",
    "lommel_rhs_closed",
    "norm_sq_closed",
    "gram_matrix",
    "fourier_coefficients",
    "fourier_partial_sum",
]


def _mpf(x) -> mp.mpf:
    return x if isinstance(x, mp.mpf) else mp.mpf(x)


def _workdigits(tol: float) -> int:
    return max(30, int(-math.log10(tol)) + 15)


@dataclass(frozen=True)
class QLatticeSignal:
    """A finitely supported function on the geometric lattice {a q^k}:
    values[k] = f(a q^k) for k = 0..K, zero beyond."""

    values: List[float]
    a: float = 1.0

    def __post_init__(self) -> None:
        if len(self.values) < 1:
            raise ValueError("signal needs at least one lattice value")
        if self.a <= 0:
            raise ValueError("lattice scale a must be positive")

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict:
        return {"a": self.a, "values": list(self.values)}

    @classmethod
    def from_dict(cls, d: dict) -> "QLatticeSignal":
        return cls(values=[mp.mpf(v) for v in d["values"]], a=float(d["a"]))


@dataclass(frozen=True)
class GramReport:
    """Pairwise inner products of {J_{alpha+1}(., j_n)} plus the closed-form
    norms and the worst off-diagonal size relative to its diagonals."""

    matrix: List[List[mp.mpf]]
    norm_closed: List[mp.mpf]
    max_offdiag_rel: mp.mpf

    def to_dict(self) -> dict:
        return {
            "matrix": [list(row) for row in self.matrix],
            "norm_closed": list(self.norm_closed),
            "max_offdiag_rel": self.max_offdiag_rel,
        }


def weight(ctx: QContext, alpha, x, tol: float = DEFAULT_TOL):
    """Inner-product weight x (-x^2 q^2; q^2)_inf / (-x^2 q^(2a+4); q^2)_inf
    computed as one fused product."""
    if x < 0:
        raise ValueError("weight is defined for x >= 0")
    if x == 0:
        return mp.mpf(0)
    x = _mpf(x)
    return x * fused_product_ratio(x * x, 2, 2 * _mpf(alpha) + 4, ctx.q, tol)


def inner_product(
    ctx: QContext,
    alpha,
    f: QLatticeSignal,
    g: QLatticeSignal,
    tol: float = DEFAULT_TOL,
) -> SeriesValue:
    """Weighted q-integral <f, g> over [0, a] of two lattice signals
    (real-valued; conjugation is the identity)."""
    if f.a != g.a:
        raise ScaleMismatch(f"lattice scales differ: {f.a} vs {g.a}")
    q = _mpf(ctx.q)
    a = _mpf(f.a)
    n = min(len(f), len(g))
    with mp.workdps(_workdigits(tol)):
        s = mp.mpf(0)
        for k in range(n):
            fv = _mpf(f.values[k])
            gv = _mpf(g.values[k])
            if fv == 0 or gv == 0:
                continue
            s += weight(ctx, alpha, a * q**k, tol) * fv * gv * q**k
        val = (1 - q) * a * s
        # Finite sum: only rounding error remains.
        err = abs(val) * mp.mpf(10) ** (10 - mp.mp.dps)
        return SeriesValue(+val, +err, max(n, 1))


def lommel_integral_direct(
    ctx: QContext, alpha, a, lam, mu, tol: float = DEFAULT_TOL
) -> SeriesValue:
    """(lam^2 - mu^2) times the direct weighted q-integral of
    J_{alpha+1}(x, lam) J_{alpha+1}(x, mu) over [0, a]."""
    lam = _mpf(lam)
    mu = _mpf(mu)
    am = _mpf(alpha)
    with mp.workdps(_workdigits(tol)):
        if lam * lam == mu * mu:
            return SeriesValue(mp.mpf(0), mp.mpf(0), 1)

        def integrand(x):
            return (
                weight(ctx, alpha, x, tol)
                * eval_J(ctx, am + 1, x, lam * lam, tol).value
                * eval_J(ctx, am + 1, x, mu * mu, tol).value
            )

        sv = q_integral(integrand, a, ctx.q, tol)
        fac = lam * lam - mu * mu
        return SeriesValue(fac * sv.value, abs(fac) * sv.abs_error, sv.terms_used)


def _bracket(ctx, alpha, u, v, z_lam, z_mu, tol):
    """B(u, v) = J_{a+1}(u, lam) J_a(v, mu) - J_{a+1}(u, mu) J_a(v, lam)."""
    am = _mpf(alpha)
    return eval_J(ctx, am + 1, u, z_lam, tol).value * eval_J(
        ctx, am, v, z_mu, tol
    ).value - eval_J(ctx, am + 1, u, z_mu, tol).value * eval_J(
        ctx, am, v, z_lam, tol
    ).value


def lommel_rhs_closed(
    ctx: QContext,
    alpha,
    a,
    lam,
    mu,
    tol: float = DEFAULT_TOL,
    printed: bool = False,
) -> SeriesValue:
    """Closed form of the Lommel-type product integral (times lam^2-mu^2).

    The default form includes the x -> 0 lattice boundary term and orients
    the bracket so both sides agree (verified against the direct integral
    to working precision).  printed=True evaluates the boundary-free
    display verbatim instead; it does not match the direct integral.
    """
    q = _mpf(ctx.q)
    am = _mpf(alpha)
    a = _mpf(a)
    lam = _mpf(lam)
    mu = _mpf(mu)
    with mp.workdps(_workdigits(tol)):
        z_lam = lam * lam
        z_mu = mu * mu
        C = (1 - q) * (1 - q ** (2 * am + 2)) / q ** (2 * am + 2)
        W = fused_product_ratio(a * a, 0, 2 * am + 2, q, tol)
        if printed:
            val = C * W * _bracket(ctx, am, a / q, a, z_mu, z_lam, tol)
        else:
            bq = _bracket(ctx, am, a / q, a, z_lam, z_mu, tol)
            b0 = _bracket(ctx, am, 0, 0, z_lam, z_mu, tol)
            val = C * (W * bq - b0)
        err = abs(val) * mp.mpf(10) ** (10 - mp.mp.dps) + mp.mpf(tol)
        return SeriesValue(+val, +err, 1)


def norm_sq_closed(
    ctx: QContext,
    alpha,
    zero,
    deriv,
    a: float = 1.0,
    tol: float = DEFAULT_TOL,
    residual_tol: float = 1e-6,
    printed: bool = False,
) -> mp.mpf:
    """Closed form of mu_k = ||J_{alpha+1}(., j_k)||^2 in L^2_q(0, a).

    Differentiating the product-integral closed form at mu = lam = j_k
    (a zero of J_alpha(a, .; q^2), with deriv the lambda-derivative there):

        mu_k = -C/(2 j_k) * ( W(a) J_{alpha+1}(a/q, j_k) * deriv
                              - J_{alpha+1}(0, j_k) dJ_alpha(0)
                              + dJ_{alpha+1}(0) J_alpha(0, j_k) ),

    where dF(0) denotes the lambda-derivative at x = 0.  printed=True drops
    the x -> 0 boundary derivative terms and uses the opposite sign, i.e.
    the display verbatim; that variant does not match the direct integral.
    """
    q = _mpf(ctx.q)
    am = _mpf(alpha)
    a = _mpf(a)
    zero = _mpf(zero)
    deriv = _mpf(deriv)
    with mp.workdps(_workdigits(tol)):
        z = zero * zero
        resid = abs(eval_J(ctx, am, a, z, tol).value)
        if resid > residual_tol:
            raise NotAZero(
                f"|J_alpha(a, {mp.nstr(zero)})| = {mp.nstr(resid)} exceeds "
                f"{residual_tol}"
            )
        C = (1 - q) * (1 - q ** (2 * am + 2)) / q ** (2 * am + 2)
        W = fused_product_ratio(a * a, 0, 2 * am + 2, q, tol)
        jp_aq = eval_J(ctx, am + 1, a / q, z, tol).value
        if printed:
            return C / (2 * zero) * W * jp_aq * deriv
        jp0 = eval_J(ctx, am + 1, 0, z, tol).value
        jm0 = eval_J(ctx, am, 0, z, tol).value
        djm0 = 2 * zero * eval_dJ_dz(ctx, am, 0, z, tol).value
        djp0 = 2 * zero * eval_dJ_dz(ctx, am + 1, 0, z, tol).value
        return -C / (2 * zero) * (W * jp_aq * deriv - jp0 * djm0 + djp0 * jm0)


def gram_matrix(
    ctx: QContext,
    alpha,
    table: ZeroTable,
    tol: float = DEFAULT_TOL,
    a: float = 1.0,
) -> GramReport:
    """Pairwise direct inner products of {J_{alpha+1}(., j_n)}.

    max_offdiag_rel is the largest |G_nm| / sqrt(G_nn G_mm) over n != m.
    Entries are computed for n <= m and mirrored (the integrand is
    symmetric in the two indices).
    """
    if alpha <= -0.5:
        raise OrderOutOfRange(f"Gram analysis requires alpha > -1/2; got {alpha}")
    n = len(table)
    am = _mpf(alpha)
    with mp.workdps(_workdigits(tol)):
        zs = [_mpf(j) * _mpf(j) for j in table.zeros]
        mat = [[mp.mpf(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                def integrand(x, zi=zs[i], zj=zs[j]):
                    return (
                        weight(ctx, alpha, x, tol)
                        * eval_J(ctx, am + 1, x, zi, tol).value
                        * eval_J(ctx, am + 1, x, zj, tol).value
                    )

                v = q_integral(integrand, a, ctx.q, tol).value
                mat[i][j] = v
                mat[j][i] = v
        norms = [
            norm_sq_closed(ctx, alpha, table.zeros[k], table.derivs[k], a, tol)
            for k in range(n)
        ]
        worst = mp.mpf(0)
        for i in range(n):
            for j in range(n):
                if i != j:
                    rel = abs(mat[i][j]) / mp.sqrt(mat[i][i] * mat[j][j])
                    worst = max(worst, rel)
        return GramReport(mat, norms, +worst)


def fourier_coefficients(
    ctx: QContext,
    alpha,
    f: QLatticeSignal,
    table: ZeroTable,
    tol: float = DEFAULT_TOL,
) -> List[mp.mpf]:
    """Expansion coefficients a_k(f) = <f, J_{alpha+1}(., j_k)> / mu_k with
    mu_k from norm_sq_closed."""
    if len(table) < 1:
        raise ValueError("zero table must contain at least one zero")
    q = _mpf(ctx.q)
    a = _mpf(f.a)
    am = _mpf(alpha)
    with mp.workdps(_workdigits(tol)):
        coeffs = []
        for k in range(len(table)):
            z = _mpf(table.zeros[k]) ** 2
            ip = mp.mpf(0)
            for m, fv in enumerate(f.values):
                fv = _mpf(fv)
                if fv == 0:
                    continue
                x = a * q**m
                ip += (
                    weight(ctx, alpha, x, tol)
                    * fv
                    * eval_J(ctx, am + 1, x, z, tol).value
                    * q**m
                )
            ip *= (1 - q) * a
            mu = norm_sq_closed(
                ctx, alpha, table.zeros[k], table.derivs[k], float(a), tol
            )
            coeffs.append(ip / mu)
        return coeffs


def fourier_partial_sum(
    ctx: QContext,
    alpha,
    coeffs: List,
    table: ZeroTable,
    x,
    tol: float = DEFAULT_TOL,
):
    """Partial sum sum_k a_k J_{alpha+1}(x, j_k; q^2)."""
    if len(coeffs) != len(table):
        raise LengthMismatch(
            f"{len(coeffs)} coefficients vs {len(table)} zeros"
        )
    am = _mpf(alpha)
    x = _mpf(x)
    with mp.workdps(_workdigits(tol)):
        s = mp.mpf(0)
        for c, j in zip(coeffs, table.zeros):
            c = _mpf(c)
            if c == 0:
                continue
            s += c * eval_J(ctx, am + 1, x, _mpf(j) ** 2, tol).value
        return +s
