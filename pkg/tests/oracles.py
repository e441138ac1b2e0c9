"""Independent oracles used by the test suite.

Everything here is computed without touching the package's series engine:
the big q-Bessel series is summed directly from its printed definition
with mpmath's q-Pochhammer, and zeros are located by a dense float64 grid
scan (numpy Horner) followed by bisection on the brute-force series.
Frozen constants below were produced by these same routines at 40 digits.
"""

import mpmath as mp
import numpy as np

# --- frozen constants (independent brute-force series, 40-digit run) ----

# J_0(x=1, lambda^2=0.01; q^2=0.25)
J_Q05_A0_X1_Z001 = mp.mpf("0.9911190109920320792818971")

# (0.5; 0.5)_infinity
QPOCH_INF_HALF = mp.mpf("0.2887880950866024212788997")

# first five positive lambda-zeros of J_0(1, lambda; q^2) at q = 0.5
ZEROS_Q05_A0 = [
    mp.mpf("1.124253358794089558641119"),
    mp.mpf("3.611837405451427421334845"),
    mp.mpf("7.942826252026860059857569"),
    mp.mpf("15.99801718635127601501381"),
    mp.mpf("31.99998405512801460400392"),
]

# first five positive lambda-zeros of J_{1/2}(1, lambda; q^2) at q = 0.8
ZEROS_Q08_A05 = [
    mp.mpf("0.4911775424836051737926656"),
    mp.mpf("1.042458602695282648589552"),
    mp.mpf("1.690099497046688274768611"),
    mp.mpf("2.442892004164352558599584"),
    mp.mpf("3.290652996991748371331285"),
]

# squared norms of J_{alpha+1}(., j_k) under the weighted q-integral,
# computed by the direct lattice sum with mpmath q-Pochhammer weights
NORMS_Q05_A0 = [
    mp.mpf("0.51284394476785248543"),
    mp.mpf("0.33054908209216879303"),
    mp.mpf("1.8955092105260872154"),
    mp.mpf("35.111901556676647486"),
    mp.mpf("2117.2513148323931047"),
]

NORMS_Q08_A05 = [
    mp.mpf("0.25050503676786297665"),
    mp.mpf("0.03954265323045082277"),
    mp.mpf("0.05312313691394864216"),
    mp.mpf("0.33719770033207594009"),
    mp.mpf("2.1555061151091784717"),
]


def brute_J(alpha, x, z, q2, dps=40):
    """Direct summation of the printed series, with the product
    prod_{j<k}(x^2 + q^{2j}) in place of the (-1/x^2; q^2)_k x^{2k}
    factor so x = 0 is regular.  Entirely independent of the package.
    """
    with mp.workdps(dps):
        alpha = mp.mpf(alpha)
        x = mp.mpf(x)
        z = mp.mpf(z)
        q2 = mp.mpf(q2)
        s = mp.mpf(0)
        for k in range(500):
            pk = mp.mpf(1)
            for j in range(k):
                pk *= x * x + q2 ** j
            t = (
                (-1) ** k
                * q2 ** (k * (k - 1) // 2)
                * q2 ** (k * (alpha + 1))
                * pk
                * z ** k
                / (mp.qp(q2, q2, k) * mp.qp(q2 ** (alpha + 1), q2, k))
            )
            s += t
            if k > 4 and abs(t) < mp.mpf(10) ** (5 - dps) * max(1, abs(s)):
                break
        return +s


def dense_grid_zeros(q, alpha, count, lam_lo, lam_hi, n=400000, dps=40):
    """Independent zero oracle: float64 Horner evaluation of the series
    in z = lambda^2 on a dense uniform lambda grid, then bisection of
    each sign-change bracket on the brute-force mpmath series.
    """
    q2 = float(q) ** 2
    coeff = [1.0]
    for k in range(80):
        coeff.append(
            coeff[-1]
            * (-(q2 ** k))
            * q2 ** (alpha + 1)
            * (1 + q2 ** k)
            / ((1 - q2 ** (k + 1)) * (1 - q2 ** (alpha + 1 + k)))
        )
    lams = np.linspace(lam_lo, lam_hi, n)
    zv = lams ** 2
    p = np.zeros_like(zv)
    for ck in reversed(coeff):
        p = p * zv + ck
    sign = np.sign(p)
    idx = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    out = []
    with mp.workdps(dps):
        for i in idx[:count]:
            a, b = mp.mpf(float(lams[i])), mp.mpf(float(lams[i + 1]))
            fa = brute_J(alpha, 1, a * a, q2, dps)
            for _ in range(140):
                m = (a + b) / 2
                fm = brute_J(alpha, 1, m * m, q2, dps)
                if fa * fm <= 0:
                    b = m
                else:
                    a, fa = m, fm
            out.append((a + b) / 2)
    return out
