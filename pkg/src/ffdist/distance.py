"""Distance distributions and spherical averages for two point sets.

For E, F in F_q^s the central object is

    nu(j) = #{(x, y) in E x F : |x - y|^2 = j},

computed two ways: a literal pair loop (nu_brute, exact integers, the
oracle) and a spectral path (nu_spectral) that runs two grid transforms,
buckets the cross-spectrum conj(Ehat) * Fhat by |m|^2, and assembles all
q counts through the closed-form sphere kernel in O(q^2) extra work.
The spectral counts must round back to the brute-force integers; a
residual above 1e-6 raises RoundingDrift instead of returning drifted
values.

Spherical averages:

    sigma_E(r)   = sum_{|a|^2 = r} |Ehat(a)|^2          (real, in [0, 1])
    sigma_EF(r)  = sum_{|m|^2 = r} conj(Ehat(m)) Fhat(m)  (complex)

Point-set text format (shared with the harness): first line "q s n",
then n lines of s space-separated integers in [0, q); duplicates are
rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import charsums
from .errors import (
    DuplicatePoint,
    EmptyOffzeroSupport,
    FieldMismatch,
    PairCapExceeded,
    RoundingDrift,
)
from .field import FieldContext
from .spectral import (
    DEFAULT_GRID_CAP,
    GridFunction,
    Spectrum,
    check_grid_cap,
    forward_transform,
    norm_grid,
)

DEFAULT_PAIR_CAP = 10 ** 9


@dataclass(frozen=True, eq=False)
class PointSet:
    """A duplicate-free set of points in F_q^s, radix-sorted."""

    q: int
    s: int
    points: np.ndarray  # int64, shape (size, s), coordinates in [0, q)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def radix_indices(self) -> np.ndarray:
        """Row-major flat index of every point; sorted ascending."""
        return np.ravel_multi_index(self.points.T, (self.q,) * self.s)


def make_point_set(q: int, s: int, points: Iterable[Sequence[int]]) -> PointSet:
    """Build a PointSet, reducing coordinates mod q and rejecting duplicates."""
    pts = np.asarray(list(points), dtype=np.int64)
    if pts.size == 0:
        raise ValueError("a point set must contain at least one point")
    if pts.ndim != 2 or pts.shape[1] != s:
        raise ValueError(f"points must be {s}-tuples")
    pts = pts % q
    idx = np.ravel_multi_index(pts.T, (q,) * s)
    order = np.argsort(idx, kind="stable")
    idx = idx[order]
    if np.any(idx[1:] == idx[:-1]):
        dup = pts[order][np.flatnonzero(idx[1:] == idx[:-1])[0] + 1]
        raise DuplicatePoint(f"point {tuple(int(c) for c in dup)} appears twice")
    return PointSet(q=q, s=s, points=pts[order])


@dataclass(frozen=True, eq=False)
class DistanceDistribution:
    """nu[j] for j in F_q, as exact integers, plus the set sizes."""

    q: int
    nu: np.ndarray  # int64, length q, nonnegative
    sizeE: int
    sizeF: int


@dataclass(frozen=True, eq=False)
class SphericalProfile:
    """Values indexed by r in F_q; kind 'single_set' is real, 'cross' complex."""

    kind: str  # "single_set" | "cross"
    q: int
    s: int
    values: np.ndarray


def _require_same_field(E: PointSet, F: PointSet) -> None:
    if E.q != F.q or E.s != F.s:
        raise FieldMismatch(
            f"sets live over (q={E.q}, s={E.s}) and (q={F.q}, s={F.s})"
        )


def indicator_grid(E: PointSet) -> GridFunction:
    """The 0/1 characteristic function of E as a dense grid."""
    vals = np.zeros((E.q,) * E.s, dtype=np.complex128)
    vals.flat[E.radix_indices()] = 1.0
    return GridFunction(q=E.q, s=E.s, values=vals)


def set_spectrum(ctx: FieldContext, E: PointSet,
                 grid_cap: int = DEFAULT_GRID_CAP) -> Spectrum:
    """Fourier transform of the indicator; Ehat(0) = #E / q^s exactly."""
    check_grid_cap(E.q, E.s, grid_cap)
    return forward_transform(ctx, indicator_grid(E), grid_cap)


def nu_brute(E: PointSet, F: PointSet,
             pair_cap: int = DEFAULT_PAIR_CAP) -> DistanceDistribution:
    """Bucket |x - y|^2 over all of E x F; exact integer counts.

    The pair loop runs in blocks of E rows against all of F, so the cost
    is O(#E * #F) integer work with bounded temporaries.
    """
    _require_same_field(E, F)
    if E.size * F.size > pair_cap:
        raise PairCapExceeded(
            f"#E * #F = {E.size * F.size} exceeds pair cap {pair_cap}"
        )
    q = E.q
    nu = np.zeros(q, dtype=np.int64)
    block = max(1, 1_000_000 // max(1, F.size))
    for lo in range(0, E.size, block):
        diff = (E.points[lo:lo + block, None, :] - F.points[None, :, :]) % q
        norms = (diff * diff).sum(axis=2) % q
        nu += np.bincount(norms.ravel(), minlength=q)
    return DistanceDistribution(q=q, nu=nu, sizeE=E.size, sizeF=F.size)


def nu_spectral(ctx: FieldContext, E: PointSet, F: PointSet,
                grid_cap: int = DEFAULT_GRID_CAP,
                residual_tol: float = 1e-6,
                spectra: tuple[Spectrum, Spectrum] | None = None,
                ) -> DistanceDistribution:
    """All q counts nu(j) from the identity

        nu(j) = q^(2s) * sum_m Shat_j(m) conj(Ehat(m)) Fhat(m).

    The cross-spectrum A = conj(Ehat) * Fhat is bucketed by |m|^2 once;
    because Shat_j(m) depends on m only through |m|^2, the remaining
    j-dependence is a single length-q character sum, so every j costs
    O(q) after two transforms.  Counts are rounded to integers and the
    pre-rounding residual is gated at residual_tol (RoundingDrift).

    Pass spectra=(Ehat, Fhat) to reuse transforms computed elsewhere.
    """
    _require_same_field(E, F)
    check_grid_cap(E.q, E.s, grid_cap)
    q, s = E.q, E.s
    if spectra is None:
        Ehat = set_spectrum(ctx, E, grid_cap)
        Fhat = set_spectrum(ctx, F, grid_cap)
    else:
        Ehat, Fhat = spectra
    A = np.conj(Ehat.values) * Fhat.values
    ng = norm_grid(ctx, s).ravel()
    flat = A.ravel()
    G = np.bincount(ng, weights=flat.real, minlength=q) \
        + 1j * np.bincount(ng, weights=flat.imag, minlength=q)
    A0 = complex(flat[0])  # m = 0 sits at radix index 0 in the w = 0 bucket
    G_star = G.copy()
    G_star[0] -= A0

    # H[k] = sum_w G_star[w] e(w * inv(4) * inv(k) / q), k in F_q^*.
    inv4 = int(ctx.inv_table[4 % q])
    w = np.arange(q, dtype=np.int64)
    phase = (w[:, None] * inv4 % q) * ctx.inv_table[1:][None, :] % q
    H = G_star @ ctx.char_table[phase]

    B = A0 + H
    if s % 2 == 1:
        B = B * ctx.eta_table[1:]
    j = np.arange(q, dtype=np.int64)
    dft = ctx.char_table[np.outer(j, np.arange(1, q, dtype=np.int64)) % q] @ B

    raw = E.size * F.size / q \
        + q ** (1.5 * s - 1) * charsums.sphere_unit(ctx, s) * dft
    rounded = np.rint(raw.real)
    residual = float(np.max(np.abs(raw - rounded)))
    if residual > residual_tol:
        raise RoundingDrift(
            f"spectral counts are {residual:.3e} from integers "
            f"(tolerance {residual_tol:.1e}); reduce q**s"
        )
    return DistanceDistribution(q=q, nu=rounded.astype(np.int64),
                                sizeE=E.size, sizeF=F.size)


def distance_set(dist: DistanceDistribution) -> set[int]:
    """Support of nu: the attained values of |x - y|^2."""
    return {int(j) for j in np.flatnonzero(dist.nu > 0)}


def spherical_profile(ctx: FieldContext, E: PointSet,
                      grid_cap: int = DEFAULT_GRID_CAP,
                      spectrum: Spectrum | None = None) -> SphericalProfile:
    """sigma_E(r) for all r: one bucketing pass over |Ehat|^2."""
    if spectrum is None:
        spectrum = set_spectrum(ctx, E, grid_cap)
    power = np.abs(spectrum.values.ravel()) ** 2
    vals = np.bincount(norm_grid(ctx, E.s).ravel(), weights=power, minlength=E.q)
    return SphericalProfile(kind="single_set", q=E.q, s=E.s, values=vals)


def cross_profile(ctx: FieldContext, E: PointSet, F: PointSet,
                  grid_cap: int = DEFAULT_GRID_CAP,
                  spectra: tuple[Spectrum, Spectrum] | None = None,
                  ) -> SphericalProfile:
    """sigma_{E,F}(r) = sum_{|m|^2 = r} conj(Ehat(m)) Fhat(m), complex."""
    _require_same_field(E, F)
    if spectra is None:
        spectra = (set_spectrum(ctx, E, grid_cap), set_spectrum(ctx, F, grid_cap))
    A = (np.conj(spectra[0].values) * spectra[1].values).ravel()
    ng = norm_grid(ctx, E.s).ravel()
    vals = np.bincount(ng, weights=A.real, minlength=E.q) \
        + 1j * np.bincount(ng, weights=A.imag, minlength=E.q)
    return SphericalProfile(kind="cross", q=E.q, s=E.s, values=vals)


def intersection_count(E: PointSet, F: PointSet) -> int:
    """#(E intersect F) by exact set intersection of radix indices."""
    _require_same_field(E, F)
    return int(np.intersect1d(E.radix_indices(), F.radix_indices(),
                              assume_unique=True).size)


def support_lower_bound(dist: DistanceDistribution) -> Fraction:
    """Cauchy-Schwarz floor for the off-zero support of nu.

    Returns (sum_{j != 0} nu(j))^2 / (sum_{j != 0} nu(j)^2) as an exact
    rational; the number of distinct nonzero attained distances is always
    >= this value.
    """
    off = dist.nu[1:]
    total = int(off.sum())
    if total == 0:
        raise EmptyOffzeroSupport("all off-zero counts vanish")
    square_sum = int((off.astype(object) ** 2).sum())
    return Fraction(total * total, square_sum)
