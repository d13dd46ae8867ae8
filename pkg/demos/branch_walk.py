"""Pick inverse-cosine branches by flipping radical signs in Gray order."""

import math

from nestrad import (
    branch_oracle_acos,
    extract_branch,
    gray_signs,
    nested_acos_branch,
)


def sign_table(width):
    print(f"innermost-first sign tuples, width {width}")
    for k in range(8):
        marks = "".join("+" if s > 0 else "-" for s in gray_signs(k, width))
        print(f"  k={k}: {marks}")
    print()


def branch_values(y, depth):
    print(f"branch values at y = {y}, depth {depth}")
    print("  k   tower value        closed form")
    for k in range(8):
        v = nested_acos_branch(y, k, depth)
        print(f"  {k}   {v:.12f}    {branch_oracle_acos(y, k):.12f}")
    print()


if __name__ == "__main__":
    sign_table(10)
    branch_values(0.0, 10)
    branch_values(0.5, 10)

    # each tuple differs from the next in exactly one slot, so walking
    # k -> k+1 flips a single radical sign
    flips = [gray_signs(k, 6) != gray_signs(k + 1, 6) for k in range(16)]
    print(f"adjacent tuples always differ: {all(flips)}")
    print()

    # recover the branch index from the value alone
    for k in (3, 100, 10 ** 6):
        depth = 30 if k > 1000 else 15
        est = extract_branch(nested_acos_branch(0.0, k, depth))
        print(f"extract_branch round trip, k={k}: {est:.9f}")
