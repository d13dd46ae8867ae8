"""Run the chain backwards: nested square roots that converge to acos.

Averaging toward 1 through y <- sqrt((1 + y) / 2) halves the angle each
time, so after n steps the leftover angle is acos(y) / 2**n and a small
angle approximation finishes the job.
"""

import cmath
import math

from nestrad import nested_acos, nested_acos_sequence, nested_acosh


def show_tower(y, depth):
    print(f"y = {y}, depth {depth}")
    seq = nested_acos_sequence(y, depth)
    for i, v in enumerate(seq[:-1]):
        print(f"  after {i + 1} halvings: {v:.15f}")
    print(f"  angle estimate: {seq[-1]:.15f}")
    print(f"  math.acos(y):   {math.acos(y):.15f}")
    print()


def accuracy_by_depth(y):
    exact = math.acos(y)
    print(f"abs error of the tower at y = {y}")
    for depth in (2, 4, 6, 8, 10, 12, 14):
        print(f"  depth {depth:2d}: {abs(nested_acos(y, depth) - exact):.3e}")
    print()


if __name__ == "__main__":
    show_tower(0.0, 4)
    show_tower(0.5, 4)
    accuracy_by_depth(0.0)
    accuracy_by_depth(0.5)

    # outside [-1, 1] the radicals go complex on their own; the tower
    # lands on the +i sheet where cmath.acos picks -i
    print("past the endpoints the same formula keeps working:")
    print(f"  nested_acos(2, 14)  = {nested_acos(2.0, 14):.12g}")
    print(f"  cmath.acos(2)       = {cmath.acos(2.0):.12g}")
    print(f"  nested_acosh(2, 14) = {nested_acosh(2.0, 14):.12g}")
    print(f"  math.acosh(2)       = {math.acosh(2.0):.12g}")
    print()

    # pushing depth too far hurts: the 2**n prefactor amplifies the
    # quantization of iterates that have almost reached 1.0
    print("depth is not free, the gap to pi/2 at y = 0:")
    for depth in (10, 15, 20, 25):
        gap = abs(nested_acos(0.0, depth) - math.pi / 2)
        print(f"  depth {depth:2d}: {gap:.3e}")
