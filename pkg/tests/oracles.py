"""Independent oracles the tests check the library against.

Everything here is deliberately naive: cofactor expansions, chain
enumerations and per-eigenvalue greedy tracking.  None of it shares code
with the production paths it validates.
"""

import cmath
import itertools
import math

import numpy as np


def laplace_det(M):
    """Cofactor expansion along the first row; commutative scalars, n <= 6."""
    n = len(M)
    if n > 6:
        raise ValueError("laplace oracle is for tiny matrices only")
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * laplace_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def closure_by_enumeration(generators):
    """All nonempty subsets of the generators, as a set of frozensets."""
    out = set()
    for g in generators:
        members = sorted(set(g))
        for r in range(1, len(members) + 1):
            out.update(map(frozenset, itertools.combinations(members, r)))
    return out


def chain_euler_characteristic(poset):
    """Euler characteristic of the order complex of a poset of sets.

    Counts every nonempty chain x1 < x2 < ... < xk (strict inclusions) with
    sign (-1)^(k-1); this is the complex the inclusion structure spans, not
    the plain signed count of the member sets.  f(i) sums the signed chains
    whose minimum is element i, so f(i) = 1 - sum of f over elements above i.
    """
    elems = sorted(poset, key=lambda s: (len(s), sorted(s)))
    n = len(elems)
    f = [0] * n
    for i in reversed(range(n)):
        f[i] = 1 - sum(f[j] for j in range(n) if elems[i] < elems[j])
    return sum(f)


def chain_euler_characteristic_by_enumeration(poset):
    """Same quantity by listing every chain; exponential, tiny posets only."""
    elems = sorted(poset, key=lambda s: (len(s), sorted(s)))
    n = len(elems)
    total = 0
    for r in range(1, n + 1):
        for combo in itertools.combinations(range(n), r):
            if all(elems[combo[k]] < elems[combo[k + 1]] for k in range(r - 1)):
                total += (-1) ** (r - 1)
    return total


def greedy_eigen_tracking(L_of_h, h0, wheel, steps):
    """Per-eigenvalue nearest-neighbor tracking, one label at a time.

    Mirrors a straightforward implementation: every label is followed
    independently through the deformation and matched greedily at each step;
    the result maps start labels to the index of the nearest original
    eigenvalue at the end of the turn.
    """
    h0 = np.asarray(h0, dtype=complex)
    V0 = np.sort_complex(np.linalg.eigvals(L_of_h(h0)))
    n = len(V0)
    perm = []
    for m in range(n):
        x = V0[m]
        for s in range(1, steps + 1):
            t = 2 * math.pi * s / steps
            hv = h0.copy()
            hv[wheel] = h0[wheel] * cmath.exp(1j * t)
            V1 = np.linalg.eigvals(L_of_h(hv))
            x = V1[np.abs(V1 - x).argmin()]
        perm.append(int(np.abs(V0 - x).argmin()))
    return tuple(perm)
