"""Locate the minimizer of T_6(t)/(t - pi)^2 two ways.

The float golden-section search used by the suite, and a 40-digit mpmath
Newton solve on the derivative as a cross-check.
"""

import mpmath

from sturmcert.cert import lemma1_minimum
from sturmcert.paperlib import build_T_n


def main():
    rec = lemma1_minimum()
    print(f"float search : t = {rec.minimizer:.12f}  min = {rec.minimum:.12f}")

    mpmath.mp.dps = 40
    coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in build_T_n(6).cos_coeffs]

    def ratio(t):
        return sum(c * mpmath.cos(k * t) for k, c in enumerate(coeffs)) / (t - mpmath.pi) ** 2

    t = mpmath.findroot(lambda s: mpmath.diff(ratio, s), rec.minimizer)
    print(f"mpmath       : t = {mpmath.nstr(t, 15)}  min = {mpmath.nstr(ratio(t), 15)}")
    print(f"|t - 0.726657| = {abs(float(t) - 0.726657):.2e}")


if __name__ == "__main__":
    main()
