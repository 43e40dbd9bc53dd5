"""Structural checks on computed spectra and position-space reconstruction.

Two theorem-shaped properties are verified mechanically: truncated-matrix
eigenvalues must sit above the exact ones, decrease monotonically and
interlace as the basis grows (upper-bound/interlacing behaviour), and the
i-th reconstructed eigenfunction must carry exactly i certified sign changes
(node structure).  All comparisons are non-strict with tolerance
tol = 1e-10 (1 + |eps|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import BasisSpec, basis_table
from .errors import DegenerateInputError
from .operators import PotentialSpec

EVEN = "even"
ODD = "odd"
MIXED = "mixed"

#: Relative floor under which samples count as boundary tail, not signal.
DEFAULT_AMPLITUDE_FLOOR = 1e-8

#: Grid used for node certification (see default_node_grid).
NODE_GRID_POINTS = 2001


@dataclass(frozen=True, eq=False)
class ConvergenceTable:
    """Spectra of one Hamiltonian family across increasing truncation sizes."""

    dims: tuple[int, ...]
    spectra: tuple[np.ndarray, ...]
    alpha: float
    potential: PotentialSpec

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) == 0 or any(d < 1 for d in dims):
            raise ValueError("dims must be positive integers")
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise ValueError("dims must be strictly increasing")
        if len(self.spectra) != len(dims):
            raise ValueError("need one spectrum per dim")
        spectra = []
        for d, spec in zip(dims, self.spectra):
            arr = np.array(spec, dtype=float)
            if arr.shape != (d,):
                raise ValueError(f"spectrum for dim {d} must have {d} entries")
            if arr.size > 1 and np.any(np.diff(arr) < -1e-12 * (1.0 + np.abs(arr[:-1]))):
                raise ValueError("each spectrum must ascend")
            arr.setflags(write=False)
            spectra.append(arr)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "spectra", tuple(spectra))
        object.__setattr__(self, "alpha", float(self.alpha))


@dataclass(frozen=True, eq=False)
class WavefunctionSamples:
    """Wavefunction sampled on an ascending grid, with certified node count."""

    grid: np.ndarray
    values: np.ndarray
    node_count: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class MhuReport:
    """Outcome of the upper-bound/monotonicity/interlacing checks."""

    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dicts(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]


def _scan_check(name, comparisons):
    """Fold (slack, tol, where) triples into a CheckResult; pass iff slack <= tol."""
    worst = None
    count = 0
    for slack, tol, where in comparisons:
        count += 1
        margin = slack - tol
        if worst is None or margin > worst[0]:
            worst = (margin, slack, where)
    if count == 0:
        return CheckResult(name, True, "vacuous: single truncation")
    margin, slack, where = worst
    if margin <= 0.0:
        return CheckResult(name, True, f"ok; worst slack {slack:.3e} at {where}")
    return CheckResult(name, False,
                       f"violated at {where}: slack {slack:.3e} above tolerance")


def check_mhu(table: ConvergenceTable, exact=None, *, tol_scale: float = 1e-10) -> MhuReport:
    """Verify upper-bound behaviour of a truncation family.

    (a) monotonicity: every level can only come down as the basis grows,
        eps_i(n) <= eps_i(m) + tol for truncations m < n;
    (b) interlacing: old levels sit between the new ones,
        eps_i(n) <= eps_i(m) <= eps_{i + (n - m)}(n) + tol;
    (c) upper bound, when `exact` energies are supplied:
        eps_i(n) >= E_i - tol for every truncation n.

    Each comparison uses tol = tol_scale * (1 + |reference eigenvalue|).
    """
    pairs = list(zip(table.dims, table.spectra))

    def monotone():
        for (dm, em), (dn, en) in zip(pairs, pairs[1:]):
            for i in range(dm):
                yield en[i] - em[i], tol_scale * (1.0 + abs(em[i])), f"(i={i}, dim={dn})"

    def interlace():
        for (dm, em), (dn, en) in zip(pairs, pairs[1:]):
            d = dn - dm
            for i in range(dm):
                tol = tol_scale * (1.0 + abs(em[i]))
                yield en[i] - em[i], tol, f"(i={i}, dim={dn}, lower)"
                yield em[i] - en[i + d], tol, f"(i={i}, dim={dn}, upper)"

    checks = [_scan_check("monotonicity", monotone()),
              _scan_check("interlacing", interlace())]

    if exact is not None:
        ref = np.asarray(exact, dtype=float)

        def bound():
            for dn, en in pairs:
                for i in range(min(ref.size, dn)):
                    yield ref[i] - en[i], tol_scale * (1.0 + abs(ref[i])), \
                        f"(i={i}, dim={dn})"

        checks.append(_scan_check("upper_bound", bound()))

    return MhuReport(tuple(checks))


def count_nodes(values, amplitude_floor: float = DEFAULT_AMPLITUDE_FLOOR) -> int:
    """Certified sign changes of a sampled function.

    Samples whose magnitude stays below amplitude_floor * max|values| are
    dropped first (boundary tails and grazing zeros carry no sign
    information); the count is over strict sign changes between consecutive
    surviving samples.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise DegenerateInputError("no samples")
    peak = float(np.abs(v).max())
    if peak == 0.0:
        raise DegenerateInputError("all samples are zero")
    kept = v[np.abs(v) > amplitude_floor * peak]
    if kept.size == 0:
        raise DegenerateInputError("all samples below the amplitude floor")
    signs = np.sign(kept)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def reconstruct(spec: BasisSpec, coeffs, grid,
                amplitude_floor: float = DEFAULT_AMPLITUDE_FLOOR) -> WavefunctionSamples:
    """Sample psi = sum_r coeffs[r] phi_r on the grid and certify its nodes."""
    c = np.asarray(coeffs, dtype=float)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("coefficients must be a non-empty vector")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must be finite")
    g = np.asarray(grid, dtype=float)
    values = c @ basis_table(spec, c.size - 1, g)
    return WavefunctionSamples(g, values, count_nodes(values, amplitude_floor))


def parity_classify(coeffs, tol: float = 1e-10) -> str:
    """Classify a coefficient vector as "even", "odd" or "mixed".

    Even (odd) means every odd-index (even-index) coefficient is at most
    tol * ||c||.  The zero vector carries no parity.
    """
    c = np.asarray(coeffs, dtype=float)
    norm = float(np.linalg.norm(c))
    if norm == 0.0:
        raise DegenerateInputError("zero vector has no parity")
    odd_part = float(np.abs(c[1::2]).max()) if c.size > 1 else 0.0
    even_part = float(np.abs(c[0::2]).max())
    if odd_part <= tol * norm:
        return EVEN
    if even_part <= tol * norm:
        return ODD
    return MIXED


def default_node_grid(spec: BasisSpec, pot: PotentialSpec, energy: float,
                      points: int = NODE_GRID_POINTS) -> np.ndarray:
    """Uniform grid over |x| <= x_turn + 5/sqrt(alpha).

    All nodes of a bound state lie inside the classically allowed region, so
    the turning point at the state's energy plus a five-decay-length margin
    covers them with room for the tail.
    """
    x_turn = pot.turning_point(energy, mass=spec.mass)
    half = x_turn + 5.0 / math.sqrt(spec.alpha)
    return np.linspace(-half, half, points)
