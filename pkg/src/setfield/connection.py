"""Energy valuations on set systems and the connection matrices they induce.

A field h assigns one scalar to every element of a system G.  H(A) sums h
over a subset A of G, the matrix L(x,y) = H(core(x) & core(y)) couples cores,
and g(x,y) = omega(x) omega(y) H(star(x) & star(y)) couples stars with a sign
conjugation.  Entries are plain sums, so L and g are symmetric as arrays for
every scalar kind, commutative or not.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scalars
from .scalars import COMPLEX, GAUSSIAN, REAL, ScalarKind
from .setsystem import SetSystem


@dataclass(frozen=True)
class EnergyFunction:
    """One scalar per element of an associated system, all of one kind."""

    kind: ScalarKind
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def replace_value(self, k, value) -> "EnergyFunction":
        vals = list(self.values)
        vals[k] = value
        return EnergyFunction(self.kind, tuple(vals))

    def all_units(self, tol=scalars.DEFAULT_TOL) -> bool:
        return all(scalars.is_unit(v, tol) for v in self.values)

    def all_nonzero(self) -> bool:
        return not any(scalars.is_zero(v) for v in self.values)


def omega(x) -> int:
    """The sign (-1)^dim(x) with dim(x) = |x| - 1."""
    return -1 if len(x) % 2 == 0 else 1


def omega_vector(system: SetSystem) -> tuple:
    return tuple(omega(e) for e in system.elements)


def energy_sum(system: SetSystem, h: EnergyFunction, members):
    """H(A): sum of h over element indices A; the empty collection gives 0."""
    total = h.kind.zero
    for k in sorted(members):  # fixed accumulation order keeps float output reproducible
        total = total + h.values[k]
    return total


@dataclass(frozen=True)
class ConnectionMatrices:
    """L, g and the diagonal sign matrix S, tied to the element order used."""

    system: SetSystem
    kind: ScalarKind
    L: tuple
    g: tuple
    signs: tuple  # diagonal of S, i.e. omega(x_k)

    @property
    def n(self):
        return len(self.signs)


def build_matrices(system: SetSystem, h: EnergyFunction) -> ConnectionMatrices:
    """Construct L, g, S for a system and a field, in the system's order."""
    n = len(system)
    if len(h) != n:
        raise ValueError("field has %d values for %d elements" % (len(h), n))
    cores = [set(system.core(k)) for k in range(n)]
    stars = [set(system.star(k)) for k in range(n)]
    om = omega_vector(system)
    L = [[None] * n for _ in range(n)]
    g = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            lij = energy_sum(system, h, cores[i] & cores[j])
            L[i][j] = L[j][i] = lij
            s = energy_sum(system, h, stars[i] & stars[j])
            sgn = om[i] * om[j]
            gij = s if sgn == 1 else -s
            g[i][j] = g[j][i] = gij
    return ConnectionMatrices(system, h.kind,
                              tuple(tuple(r) for r in L),
                              tuple(tuple(r) for r in g), om)


def super_trace(M, signs):
    """Signed trace sum_x omega(x) M(x,x)."""
    total = None
    for k, s in enumerate(signs):
        term = M[k][k] if s == 1 else -M[k][k]
        total = term if total is None else total + term
    if total is None:
        raise ValueError("empty matrix has no super trace")
    return total


def potential_and_curvature(system: SetSystem, h: EnergyFunction):
    """Row sums V(x) of g and the signed diagonal K(x) = omega(x) g(x,x).

    For simplicial complexes the two vectors agree entrywise; for general set
    systems both are still defined and reported separately.
    """
    cm = build_matrices(system, h)
    n = cm.n
    V = []
    K = []
    for i in range(n):
        row = cm.g[i]
        total = h.kind.zero
        for v in row:
            total = total + v
        V.append(total)
        K.append(cm.g[i][i] if cm.signs[i] == 1 else -cm.g[i][i])
    return V, K


def green_diagonal(system: SetSystem, h: EnergyFunction):
    """The map from field values to the diagonal Green entries (g(x,x))_x."""
    n = len(system)
    stars = [system.star(k) for k in range(n)]
    out = []
    for k in range(n):
        s = energy_sum(system, h, stars[k])
        out.append(s)  # omega(x)^2 = 1 on the diagonal
    return out


# ---------------------------------------------------------------------------
# field presets

def omega_field(system: SetSystem) -> EnergyFunction:
    """The topological field h = omega; H becomes the Euler characteristic."""
    return EnergyFunction(REAL, omega_vector(system))


def ones_field(system: SetSystem, kind: ScalarKind = REAL) -> EnergyFunction:
    return EnergyFunction(kind, tuple(kind.one for _ in system.elements))


def roots_field(system: SetSystem, order: int) -> EnergyFunction:
    """h(x_k) = exp(2 pi i k / order), k = 1..n; unit complex values."""
    import cmath

    n = len(system)
    vals = tuple(cmath.exp(2j * cmath.pi * (k + 1) / order) for k in range(n))
    return EnergyFunction(COMPLEX, vals)


def random_field(system: SetSystem, kind: ScalarKind, rng,
                 unit=False) -> EnergyFunction:
    if unit:
        vals = tuple(scalars.random_unit(kind, rng) for _ in system.elements)
    else:
        vals = tuple(scalars.random_nonzero(kind, rng) for _ in system.elements)
    return EnergyFunction(kind, vals)


def explicit_field(values, kind: ScalarKind | None = None) -> EnergyFunction:
    vals = tuple(values)
    if kind is None:
        if not vals:
            raise ValueError("cannot infer kind of an empty field")
        kinds = {scalars.kind_of(v) for v in vals}
        if len(kinds) == 1:
            kind = kinds.pop()
        elif kinds == {REAL, COMPLEX}:
            kind = COMPLEX
            vals = tuple(complex(v) for v in vals)
        elif kinds == {REAL, GAUSSIAN}:
            kind = GAUSSIAN
            vals = tuple(v if scalars.kind_of(v) is GAUSSIAN
                         else scalars.GaussianRational(v) for v in vals)
        else:
            raise ValueError("mixed scalar kinds in field: %s"
                             % sorted(k.name for k in kinds))
    return EnergyFunction(kind, vals)
