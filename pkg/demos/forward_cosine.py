"""Walk the doubled-angle chain from a tiny series seed up to cos(x).

Each doubling step maps y to -1 + 2*y**2, so one pass through the chain
turns cos(x/2**n) into cos(x).  The seed only needs a few series terms
because x/2**n is small.
"""

import math

from nestrad import EvalConfig, nested_cos, nested_cos_sequence


def show_chain(x, depth, order):
    cfg = EvalConfig(depth, order)
    print(f"x = {x:.15g}, depth {depth}, seed order {order}")
    for i, y in enumerate(nested_cos_sequence(x, cfg)):
        angle = x / 2 ** (depth - i)
        print(f"  after {i} doublings: {y:+.15f}   (= cos({angle:.6g}))")
    err = abs(nested_cos(x, cfg) - math.cos(x))
    print(f"  abs error vs math.cos: {err:.3e}")
    print()


def depth_table(x):
    print(f"error at x = {x:.15g} as the chain deepens")
    print("depth   order 1       order 2       order 4")
    for depth in range(2, 13, 2):
        errs = [abs(nested_cos(x, EvalConfig(depth, m)) - math.cos(x))
                for m in (1, 2, 4)]
        print(f"  {depth:2d}   {errs[0]:.4e}    {errs[1]:.4e}    {errs[2]:.4e}")
    print()


if __name__ == "__main__":
    show_chain(math.pi / 3, 4, 2)
    show_chain(math.pi / 3, 4, 4)
    depth_table(math.pi / 3)
    depth_table(1.0)
    # the same chain with imaginary input lands on cosh
    z = nested_cos(2j, EvalConfig(10, 2))
    print(f"nested_cos(2i) = {z.real:.12f} ({z.imag:+.1e}i)")
    print(f"math.cosh(2)   = {math.cosh(2):.12f}")
