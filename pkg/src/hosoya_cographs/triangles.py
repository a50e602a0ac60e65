"""Entry- and row-level access to the determinant Hosoya and Hosoya triangles.

Both triangles are indexed by row r >= 1 and position 1 <= k <= r, read left
to right.  The determinant-triangle entry is the 2x2 Fibonacci determinant
F(k+1)F(r-k+2) - F(k)F(r-k+1); the Hosoya-triangle entry is the product
F(k)F(r-k+1).  Entries are evaluated by the closed forms (O(1) once the
Fibonacci table is warm); the defining recurrences are kept as test oracles.
"""

from __future__ import annotations

from math import gcd

from .fibcore import fib

KINDS = ("det", "hosoya")

GENFUNC_MAX = 64


def _check_position(r: int, k: int) -> None:
    if r < 1 or k < 1 or k > r:
        raise ValueError(f"invalid triangle position (r={r}, k={k}); need 1 <= k <= r")


def det_entry(r: int, k: int) -> int:
    """Determinant-triangle entry at row r, position k."""
    _check_position(r, k)
    return fib(k + 1) * fib(r - k + 2) - fib(k) * fib(r - k + 1)


def hosoya_entry(r: int, k: int) -> int:
    """Hosoya-triangle entry F(k) * F(r-k+1)."""
    _check_position(r, k)
    return fib(k) * fib(r - k + 1)


def row(kind: str, r: int) -> list[int]:
    """Row r of the chosen triangle as a list of length r (palindromic)."""
    if kind not in KINDS:
        raise ValueError(f"unknown triangle kind {kind!r}; expected one of {KINDS}")
    if r < 1:
        raise ValueError(f"row index must be positive, got {r}")
    entry = det_entry if kind == "det" else hosoya_entry
    return [entry(r, k) for k in range(1, r + 1)]


def divisibility_witnesses(r: int, k: int) -> tuple[int, int]:
    """Fibonacci divisors (F(gcd(k+1, r+2)), F(gcd(k, r+2))) of the determinant entry.

    Both values divide det_entry(r, k) exactly; every integer divides 0.
    """
    _check_position(r, k)
    d1 = fib(gcd(k + 1, r + 2))
    d2 = fib(gcd(k, r + 2))
    value = det_entry(r, k)
    assert value % d1 == 0 and value % d2 == 0
    return d1, d2


def _series_inverse(den: tuple[int, ...], degree: int) -> list[int]:
    """Coefficients of 1/den(x) up to the given degree; den must have constant term 1."""
    assert den[0] == 1
    inv = [1] + [0] * degree
    for m in range(1, degree + 1):
        acc = 0
        for i in range(1, min(m, len(den) - 1) + 1):
            acc -= den[i] * inv[m - i]
        inv[m] = acc
    return inv


def genfunc_table(max_r: int) -> list[list[int]]:
    """Triangle rows recovered from the series (x + y + xy)/((1-x-x^2)(1-y-y^2)).

    The series is expanded exactly to total degree max_r.  Index mapping: the
    coefficient of x^(k-1) * y^(r-k) is placed at row r, position k, which
    reproduces det_entry(r, k) across the whole table.
    """
    if not 1 <= max_r <= GENFUNC_MAX:
        raise ValueError(f"max_r must be in 1..{GENFUNC_MAX}, got {max_r}")
    inv = _series_inverse((1, -1, -1), max_r - 1)

    def coeff(a: int, b: int) -> int:
        total = 0
        for p, q in ((1, 0), (0, 1), (1, 1)):
            if a >= p and b >= q:
                total += inv[a - p] * inv[b - q]
        return total

    return [[coeff(k - 1, r - k) for k in range(1, r + 1)] for r in range(1, max_r + 1)]
