"""Exact rank of small integer matrices."""

from __future__ import annotations

from typing import Sequence


def rank(matrix: Sequence[Sequence[int]], characteristic: int = 0) -> int:
    """Rank over Q (``characteristic == 0``) or over GF(p)."""
    rows = [list(map(int, r)) for r in matrix if any(r)]
    if not rows:
        return 0
    if characteristic == 0:
        return _rank_bareiss(rows)
    if characteristic < 2 or any(characteristic % q == 0 for q in range(2, int(characteristic**0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
    return _rank_mod_p(rows, characteristic)


def _rank_bareiss(a: list[list[int]]) -> int:
    """Fraction-free elimination: every intermediate entry stays an integer."""
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            f = a[i][col]
            row_i, row_r = a[i], a[r]
            for j in range(col + 1, n):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def _rank_mod_p(a: list[list[int]], p: int) -> int:
    a = [[x % p for x in row] for row in a]
    m, n = len(a), len(a[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        row_r = [x * inv % p for x in a[r]]
        a[r] = row_r
        for i in range(m):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], row_r)]
        r += 1
        if r == m:
            break
    return r
