"""Expand the finite chain symbolically and watch cos's series appear.

The chain at depth n is a polynomial of degree 2**(n+1) in x.  Expanding
it with exact rationals shows every coefficient approaching the matching
Maclaurin coefficient of cosine, alternating signs included.
"""

import math

from fractions import Fraction

from nestrad import EvalConfig, expand_nested_cos, nested_cos


def coefficient_table(max_depth):
    print("coefficient of x**4 as depth grows (exact value is 1/24)")
    for n in range(1, max_depth + 1):
        c = expand_nested_cos(n).coefficient(2)
        gap = abs(c - Fraction(1, 24))
        print(f"  depth {n}: {c}  (gap {float(gap):.3e})")
    print()


def low_order_view(n):
    poly = expand_nested_cos(n)
    print(f"depth {n}: {len(poly)} coefficients, first five as fractions")
    for j in range(5):
        print(f"  x**{2 * j}: {poly.coefficient(j)}")
    print()


if __name__ == "__main__":
    low_order_view(3)
    coefficient_table(8)

    # polynomial evaluation and the floating chain agree to roundoff
    x = math.pi / 3
    for n in (2, 4, 6):
        p = expand_nested_cos(n).evaluate(x)
        c = nested_cos(x, EvalConfig(n, 2))
        print(f"depth {n}: polynomial {p:.15f}, chain {c:.15f}")
    print()

    # hyperbolic variant: same magnitudes, all signs positive
    hp = expand_nested_cos(3, "hyperbolic")
    print("hyperbolic depth 3, first five coefficients")
    for j in range(5):
        print(f"  x**{2 * j}: {hp.coefficient(j)}")
