"""Exact Fibonacci numbers and the parity shortcut built on them."""

from __future__ import annotations

import threading

_table = [0, 1]
_lock = threading.Lock()


def fib(n: int) -> int:
    """Return F(n) under the convention F(0) = 0, F(1) = 1.

    Values live in an append-only table, so repeated lookups are O(1).
    Extension is guarded by a lock; readers never see a partial table.
    """
    if n < 0:
        raise ValueError(f"Fibonacci index must be non-negative, got {n}")
    if n >= len(_table):
        with _lock:
            while len(_table) <= n:
                _table.append(_table[-1] + _table[-2])
    return _table[n]


def fib_is_even(n: int) -> bool:
    """Parity of F(n) without computing it: F(n) is even exactly when 3 divides n."""
    if n < 0:
        raise ValueError(f"Fibonacci index must be non-negative, got {n}")
    return n % 3 == 0
