"""The linear parametrization h -> L(h), its 0/1 Jacobian, and the exact
integer bilinear form J^T J with big-integer determinant and factorization.

The map from field values to connection matrices is linear, so its Jacobian
is a constant n^2 x n matrix of zeros and ones depending only on the system.
Determinants of the resulting Gram form grow like 10^60 already for medium
complexes, so everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .determinants import bareiss_det
from .setsystem import SetSystem

TRIAL_DIVISION_BOUND = 10 ** 6


def jacobian_dr(system: SetSystem) -> np.ndarray:
    """n^2 x n matrix; column k is L built from the k-th standard basis field.

    Entry at (flattened (i,j), k) is 1 iff x_k lies in core(x_i) & core(x_j).
    """
    n = len(system)
    sub = np.zeros((n, n), dtype=np.int64)
    for k in range(n):
        ek = system.elements[k]
        for i in range(n):
            sub[k, i] = 1 if ek <= system.elements[i] else 0
    cols = [np.outer(sub[k], sub[k]).reshape(n * n) for k in range(n)]
    if not cols:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def kaehler_form(system: SetSystem) -> np.ndarray:
    """The integer Gram matrix J^T J of the parametrization Jacobian."""
    J = jacobian_dr(system)
    return J.T @ J


def exact_det(form) -> int:
    return bareiss_det(form)


def exact_rank(M) -> int:
    """Rank over the rationals by exact fraction elimination."""
    A = [[Fraction(int(v)) for v in row] for row in M]
    rank = 0
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, rows) if A[k][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for k in range(rows):
            if k != r and A[k][c] != 0:
                f = A[k][c]
                A[k] = [a - f * b for a, b in zip(A[k], A[r])]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial division up to 10^6, then a strong-pseudoprime check on the rest.

    The determinants seen in practice factor into tiny primes; a composite
    leftover would be surprising and is reported loudly.
    """
    if n == 0:
        return [(0, 1)]
    out = []
    if n < 0:
        out.append((-1, 1))
        n = -n
    for p in range(2, TRIAL_DIVISION_BOUND + 1):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        if not _is_probable_prime(n):
            raise ValueError("composite cofactor %d survived trial division" % n)
        out.append((n, 1))
    return out


def exact_det_factor(form) -> tuple[int, list[tuple[int, int]]]:
    """Exact determinant together with its prime factorization."""
    det = exact_det(form)
    return det, factorize(det)


@dataclass
class KaehlerReport:
    n: int
    jacobian: np.ndarray
    form: np.ndarray
    det: int
    factorization: list
    rank: int


def kaehler_report(system: SetSystem) -> KaehlerReport:
    J = jacobian_dr(system)
    form = J.T @ J
    det = exact_det(form)
    return KaehlerReport(len(system), J, form, det, factorize(det),
                         exact_rank(form))


def divisibility_scan(systems) -> list[dict]:
    """Dimension, determinant and 3-divisibility for each complex in a family.

    Zero-dimensional systems are exempt from the divisibility observation
    (their form is a permutation-free diagonal with unit determinant).
    """
    out = []
    for system in systems:
        det = exact_det(kaehler_form(system))
        dim = system.dimension
        out.append({
            "elements": len(system),
            "dimension": dim,
            "det": det,
            "divisible_by_3": det % 3 == 0,
            "exempt": dim <= 0,
        })
    return out


def complete_complex_exponent(n: int) -> int:
    """Conjectured exponent e with det = 3^e for the full simplex on n vertices."""
    return sum(math.comb(n, k) * (n - k) for k in range(1, n))
