"""Shared helpers for randomized tests.

Every generator takes an explicit random.Random so each test controls its
own seed.  naive_product is a reference oracle: a plain double loop over
Python ints, deliberately independent of the numpy kernel it checks.
"""

import contextlib
import io

from nottingham.group import GroupElement
from nottingham.series import Series


def random_series(rng, p, trunc):
    return Series(p, trunc, [rng.randrange(p) for _ in range(trunc + 1)])


def random_unit(rng, p, trunc):
    """Random series with invertible constant term."""
    coeffs = [rng.randrange(p) for _ in range(trunc + 1)]
    coeffs[0] = rng.randrange(1, p)
    return Series(p, trunc, coeffs)


def random_one_unit(rng, p, trunc):
    """Random series with constant term exactly 1 (m-th root domain)."""
    coeffs = [rng.randrange(p) for _ in range(trunc + 1)]
    coeffs[0] = 1
    return Series(p, trunc, coeffs)


def random_no_constant(rng, p, trunc):
    """Random series with valuation >= 1."""
    coeffs = [rng.randrange(p) for _ in range(trunc + 1)]
    coeffs[0] = 0
    return Series(p, trunc, coeffs)


def random_invertible(rng, p, trunc):
    """Random series with f(0) = 0 and f_1 != 0 (reversion domain)."""
    coeffs = [rng.randrange(p) for _ in range(trunc + 1)]
    coeffs[0] = 0
    coeffs[1] = rng.randrange(1, p)
    return Series(p, trunc, coeffs)


def random_group_element(rng, p, trunc, depth=None):
    """Random t + (higher order); optionally with a forced exact depth."""
    coeffs = [rng.randrange(p) for _ in range(trunc + 1)]
    coeffs[0] = 0
    coeffs[1] = 1
    if depth is not None:
        for e in range(2, min(depth + 1, trunc) + 1):
            coeffs[e] = 0
        if depth + 1 <= trunc:
            coeffs[depth + 1] = rng.randrange(1, p)
    return GroupElement(Series(p, trunc, coeffs))


def naive_product(f, g):
    """Quadratic-time product over Python ints; the multiplication oracle."""
    p, n = f.p, f.trunc
    out = [0] * (n + 1)
    for i in range(n + 1):
        fi = f[i]
        if fi:
            for j in range(n + 1 - i):
                out[i + j] = (out[i + j] + fi * g[j]) % p
    return Series(p, n, out)


def naive_power(f, k):
    """Repeated naive_product; oracle for small powers."""
    out = Series.one(f.p, f.trunc)
    for _ in range(k):
        out = naive_product(out, f)
    return out


def run_cli(argv):
    """Invoke the CLI in-process, capturing (exit_code, stdout, stderr)."""
    from nottingham.cli import run

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()
