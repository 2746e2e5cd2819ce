"""Complex measures supported on central elements, and their shift operators.

A measure is a finite sum of weighted point masses c_i * delta_{z_i} with
every z_i in the center of the semigroup. The operators here realize
f |-> sum_i c_i f(x * z_i) and the doubly-integrated variants; they are pure
functions over immutable inputs.

Numerical policy: every "nonzero" condition from the underlying theory is
|.| > nonzero_tol (default 1e-7) and every identity is checked against
identity_tol (default 1e-9). Character values are roots of unity, so at desk
scale errors stay near machine epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import FiniteSemigroup, InvolutiveMorphism
from .errors import ValidationError

IDENTITY_TOL = 1e-9
NONZERO_TOL = 1e-7
DEDUP_TOL = 1e-7
TIE_TOL = 1e-12


class AtomNotCentral(ValidationError):
    def __init__(self, z: int):
        self.z = z
        super().__init__(f"atom at element {z} is not central; only centrally "
                         f"supported measures are accepted")


class DuplicateAtom(ValidationError):
    def __init__(self, z: int):
        self.z = z
        super().__init__(f"duplicate atom at element {z}")


class ZeroMeasure(ValidationError):
    pass


@dataclass(frozen=True, eq=False)
class CentralMeasure:
    """sum_i c_i * delta_{z_i} with all z_i central; atoms sorted by index."""

    atoms: tuple[tuple[int, complex], ...]
    norm: float                      # sum |c_i|
    z: np.ndarray = field(repr=False)       # int32 atom indices
    coeffs: np.ndarray = field(repr=False)  # complex128 coefficients

    @property
    def total(self) -> complex:
        """The measure of the whole space, sum_i c_i."""
        return complex(self.coeffs.sum())


def validate_measure(S: FiniteSemigroup, atoms, nonzero_tol: float = NONZERO_TOL) -> CentralMeasure:
    """Validate atom list [(z, c), ...] against S and compute the norm."""
    seen = set()
    pairs = []
    for z, c in atoms:
        z = int(z)
        c = complex(c)
        if z < 0 or z >= S.n:
            raise ValidationError(f"atom index {z} outside [0, {S.n})")
        if z in seen:
            raise DuplicateAtom(z)
        seen.add(z)
        if z not in S.center:
            raise AtomNotCentral(z)
        pairs.append((z, c))
    pairs.sort(key=lambda p: p[0])
    coeffs = np.array([c for _, c in pairs], dtype=np.complex128)
    if coeffs.size == 0 or not (np.abs(coeffs) > nonzero_tol).any():
        raise ZeroMeasure("measure needs at least one atom with a nonzero coefficient")
    zs = np.ascontiguousarray([z for z, _ in pairs], dtype=np.int32)
    zs.setflags(write=False)
    coeffs.setflags(write=False)
    return CentralMeasure(
        atoms=tuple(pairs),
        norm=float(np.abs(coeffs).sum()),
        z=zs,
        coeffs=coeffs,
    )


def as_cfunc(values, n: int) -> np.ndarray:
    """Coerce values to a complex vector of length n with finite entries."""
    f = np.ascontiguousarray(values, dtype=np.complex128)
    if f.shape != (n,):
        raise ValidationError(f"function has shape {f.shape}, expected ({n},)")
    if not np.isfinite(f).all():
        raise ValidationError("function values must be finite")
    return f


def integrate(f, mu: CentralMeasure) -> complex:
    """sum_i c_i f(z_i)."""
    f = np.asarray(f, dtype=np.complex128)
    return complex((f[mu.z] * mu.coeffs).sum())


def shifted_integral_table(f, S: FiniteSemigroup, mu: CentralMeasure) -> np.ndarray:
    """Vector H with H[x] = sum_i c_i f(x * z_i), for every x at once."""
    f = np.asarray(f, dtype=np.complex128)
    return (f[S.table[:, mu.z]] * mu.coeffs).sum(axis=1)


def shifted_integrate(f, x: int, S: FiniteSemigroup, mu: CentralMeasure) -> complex:
    """sum_i c_i f(x * z_i)."""
    f = np.asarray(f, dtype=np.complex128)
    return complex((f[S.table[x, mu.z]] * mu.coeffs).sum())


def double_shifted_integrate(
    f,
    x: int,
    S: FiniteSemigroup,
    mu: CentralMeasure,
    first_twist: InvolutiveMorphism | None = None,
) -> complex:
    """sum_{i,j} c_i c_j f(x * tau(z_i) * z_j) with tau the twist or identity."""
    f = np.asarray(f, dtype=np.complex128)
    z1 = mu.z if first_twist is None else first_twist.map[mu.z]
    rows = S.table[x, z1]                       # x * tau(z_i)
    inner = (f[S.table[np.ix_(rows, mu.z)]] * mu.coeffs).sum(axis=1)
    return complex((inner * mu.coeffs).sum())


def double_integrate(
    f,
    S: FiniteSemigroup,
    mu: CentralMeasure,
    first_twist: InvolutiveMorphism | None = None,
) -> complex:
    """sum_{i,j} c_i c_j f(tau(z_i) * z_j)."""
    f = np.asarray(f, dtype=np.complex128)
    z1 = mu.z if first_twist is None else first_twist.map[mu.z]
    inner = (f[S.table[np.ix_(z1, mu.z)]] * mu.coeffs).sum(axis=1)
    return complex((inner * mu.coeffs).sum())


def measure_to_json(mu: CentralMeasure) -> dict:
    return {"atoms": [{"z": z, "c": [c.real, c.imag]} for z, c in mu.atoms]}


def measure_from_json(S: FiniteSemigroup, obj: dict, nonzero_tol: float = NONZERO_TOL) -> CentralMeasure:
    try:
        raw = obj["atoms"]
        atoms = [(int(a["z"]), complex(a["c"][0], a["c"][1])) for a in raw]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValidationError(f"measure JSON needs atoms: [{{'z': int, 'c': [re, im]}}]: {exc}") from exc
    return validate_measure(S, atoms, nonzero_tol)


def complex_to_pair(c: complex) -> list[float]:
    return [float(c.real), float(c.imag)]


def values_to_json(f) -> list[list[float]]:
    f = np.asarray(f, dtype=np.complex128)
    return [[float(v.real), float(v.imag)] for v in f]


def values_from_json(pairs, n: int) -> np.ndarray:
    try:
        vals = [complex(p[0], p[1]) for p in pairs]
    except (TypeError, IndexError) as exc:
        raise ValidationError(f"values must be [[re, im], ...]: {exc}") from exc
    return as_cfunc(vals, n)
