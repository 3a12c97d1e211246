#!/usr/bin/env python3
"""Print 30-digit reference decimals for the sharp constants.

The library computes the constants from the same closed forms in double
precision; the values printed here are the documentation record against
which those doubles are checked (see the table in ellipbounds/bounds.py).

Usage: python scripts/print_sharp_constants.py
"""

import mpmath as mp

mp.mp.dps = 40

pi = mp.pi
half = mp.mpf(1) / 2

constants = {
    "beta_star": half - 2 * mp.sqrt(2 * (pi**2 - 8)) / pi**2,
    "alpha_star": half - mp.sqrt(2) / 4,
    "alzer_alpha": half - mp.sqrt(2) / 4,
    "alzer_beta": half + mp.sqrt(2) / 4,
    "lambda_star": half + mp.sqrt(2) / 8,
    "mu_star": half + mp.sqrt((4 / pi) ** 2 - 1) / 2,
}

if __name__ == "__main__":
    for name, value in constants.items():
        print(f"{name:12s} {mp.nstr(value, 30)}   (double: {float(value)!r})")
    for p in (half, mp.mpf(1), mp.mpf(2)):
        t1 = half + mp.sqrt(1 / (4 * p)) / 2
        t2 = half + mp.sqrt((4 / pi) ** (1 / p) - 1) / 2
        print(f"t1*(p={float(p):g}) {mp.nstr(t1, 30)}")
        print(f"t2*(p={float(p):g}) {mp.nstr(t2, 30)}")
