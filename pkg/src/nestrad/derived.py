"""Odd functions, logarithm, and exponential built on the even kernels.

Everything here reduces to nested_cos / nested_cosh / nested_acos /
nested_acosh through square-root identities.  The square roots forget
signs, so for real input the sign is restored from a period-reduced
argument (circular case) or from the argument itself (hyperbolic case);
complex input gets the principal root unmodified.
"""

from __future__ import annotations

import math

from .core import (
    DEFAULT_CONFIG,
    EvalConfig,
    Scalar,
    nested_acos,
    nested_acosh,
    nested_cos,
    nested_cosh,
    principal_sqrt,
)

__all__ = [
    "nested_sin",
    "nested_tan",
    "nested_asin",
    "nested_atan",
    "nested_sinh",
    "nested_tanh",
    "nested_asinh",
    "nested_atanh",
    "nested_log",
    "nested_exp",
    "exp_limit",
    "log_limit",
]


def _is_real(z: Scalar) -> bool:
    # A complex carrying a zero imaginary part counts as real input.
    return not isinstance(z, complex) or z.imag == 0.0


def _real(z: Scalar) -> float:
    return z.real if isinstance(z, complex) else float(z)


def nested_sin(x: Scalar, cfg: EvalConfig = DEFAULT_CONFIG) -> Scalar:
    """Approximate sin(x) as the principal root of 1 - nested_cos(x)**2.

    For real x the sign comes from the period-reduced argument
    x - 2*pi*round(x/(2*pi)), which is positive exactly where sin is.
    """
    c = nested_cos(x, cfg)
    s = principal_sqrt(1.0 - c * c)
    if _is_real(x) and math.remainder(_real(x), math.tau) < 0.0:
        return -s
    return s


def nested_tan(x: Scalar, cfg: EvalConfig = DEFAULT_CONFIG) -> Scalar:
    """Approximate tan(x) as the principal root of nested_cos(x)**-2 - 1.

    Sign restored from x - pi*round(x/pi) for real x.  Raises
    ZeroDivisionError when the nested cosine is exactly zero.
    """
    c = nested_cos(x, cfg)
    if c == 0:
        raise ZeroDivisionError("nested cosine is exactly zero; tangent pole")
    t = principal_sqrt(1.0 / (c * c) - 1.0)
    if _is_real(x) and math.remainder(_real(x), math.pi) < 0.0:
        return -t
    return t


def nested_asin(y: Scalar, depth: int = 10, *, allow_deep: bool = False) -> Scalar:
    """nested_acos of the principal root of 1 - y**2.

    Returns the magnitude branch: real y and -y give the same value.
    """
    return nested_acos(principal_sqrt(1.0 - y * y), depth, allow_deep=allow_deep)


def nested_atan(y: Scalar, depth: int = 10, *, allow_deep: bool = False) -> Scalar:
    """nested_acos of 1/sqrt(1 + y**2), negated for real y < 0.

    Raises ZeroDivisionError at y = +-1j where 1 + y**2 vanishes.
    """
    d = 1.0 + y * y
    if d == 0:
        raise ZeroDivisionError("1 + y**2 is zero; arctangent poles at +-1j")
    v = nested_acos(1.0 / principal_sqrt(d), depth, allow_deep=allow_deep)
    if _is_real(y) and _real(y) < 0.0:
        return -v
    return v


def nested_sinh(x: Scalar, cfg: EvalConfig = DEFAULT_CONFIG) -> Scalar:
    """Principal root of nested_cosh(x)**2 - 1, with the sign of real x."""
    c = nested_cosh(x, cfg)
    s = principal_sqrt(c * c - 1.0)
    if _is_real(x) and _real(x) < 0.0:
        return -s
    return s


def nested_tanh(x: Scalar, cfg: EvalConfig = DEFAULT_CONFIG) -> Scalar:
    """Principal root of 1 - nested_cosh(x)**-2, with the sign of real x."""
    c = nested_cosh(x, cfg)
    t = principal_sqrt(1.0 - 1.0 / (c * c))
    if _is_real(x) and _real(x) < 0.0:
        return -t
    return t


def nested_asinh(y: Scalar, depth: int = 10, *, allow_deep: bool = False) -> Scalar:
    """nested_acosh of sqrt(1 + y**2), with the sign of real y."""
    v = nested_acosh(principal_sqrt(1.0 + y * y), depth, allow_deep=allow_deep)
    if _is_real(y) and _real(y) < 0.0:
        return -v
    return v


def nested_atanh(y: Scalar, depth: int = 10, *, allow_deep: bool = False) -> Scalar:
    """nested_acosh of 1/sqrt(1 - y**2), with the sign of real y.

    Raises ZeroDivisionError at the poles y = +-1.
    """
    d = 1.0 - y * y
    if d == 0:
        raise ZeroDivisionError("y is +-1; inverse hyperbolic tangent pole")
    v = nested_acosh(1.0 / principal_sqrt(d), depth, allow_deep=allow_deep)
    if _is_real(y) and _real(y) < 0.0:
        return -v
    return v


def nested_log(y: Scalar, depth: int = 10, *, allow_deep: bool = False) -> Scalar:
    """Logarithm via nested_acosh of the symmetric mean (y + 1/y)/2.

    The mean collapses y and 1/y, so the principal inverse returns
    |log y| for real y > 0; the sign is restored from y < 1.  Raises
    ZeroDivisionError at y = 0.
    """
    if y == 0:
        raise ZeroDivisionError("logarithm of zero")
    v = nested_acosh((y + 1.0 / y) / 2.0, depth, allow_deep=allow_deep)
    if _is_real(y) and 0.0 < _real(y) < 1.0:
        return -v
    return v


def nested_exp(x: Scalar, cfg: EvalConfig = DEFAULT_CONFIG) -> Scalar:
    """exp(x) as nested_cosh(x) + nested_sinh(x) (sign-corrected sinh)."""
    return nested_cosh(x, cfg) + nested_sinh(x, cfg)


def exp_limit(x: Scalar, n: int) -> Scalar:
    """The classic limit (1 + x/n)**n by explicit square-and-multiply."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    base: Scalar = 1.0 + x / n
    result: Scalar = 1.0
    e = n
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def log_limit(y: Scalar, n: int) -> Scalar:
    """The limit n*(y**(1/n) - 1) with the root as a chain of square roots.

    n must be a power of two so the n-th root stays radical-only.
    Raises ZeroDivisionError at y = 0 (log pole).
    """
    if n < 1 or n & (n - 1):
        raise ValueError(f"n must be a power of two, got {n}")
    if y == 0:
        raise ZeroDivisionError("logarithm of zero")
    r: Scalar = y
    k = n
    while k > 1:
        r = principal_sqrt(r)
        k >>= 1
    return n * (r - 1.0)
