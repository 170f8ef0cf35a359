"""Wold-type decomposition of L2 relative to a finite Blaschke product.

The circle space splits as the orthogonal sum over k of B**k times the model
space of B; regrouping by basis vector index gives the component subspaces
the multi-symbol operators act on.  For B with all zeros at the origin the
components are exactly the index classes mod degree and everything here is
exact; otherwise coefficients are computed against the truncated basis with
the geometric tail bound recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .blaschke import BlaschkeProduct, tail_bound, tm_basis, _basis_samples
from .config import TOL_SERIES
from .errors import InsufficientRangeError, ProbeOutsideSubspaceError
from .fourier import (
    FourierVector,
    ZERO,
    GridSamples,
    from_grid,
    grid_points,
    grid_size_for,
    inner_product,
    monomial,
    samples_to_vector,
    to_grid,
)

_WOLD_PAD = 32  # extra indices kept around a vector's band before truncating


# -- subspace specifications ----------------------------------------------------


@dataclass(frozen=True)
class SubspaceSpec:
    """One of the closed subspaces the invariance statements quantify over."""

    kind: str
    param: BlaschkeProduct | None = None
    index: int | None = None
    shift: int = 0

    _KINDS = ("hardy", "conj_hardy", "model", "beurling", "component")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown subspace kind {self.kind!r}")
        if self.kind in ("model", "beurling"):
            if self.param is None or self.param.degree < 1:
                raise ValueError(f"{self.kind} subspace needs a non-constant product")
        if self.kind == "component":
            if self.param is None or self.index is None:
                raise ValueError("component subspace needs a product and an index")
            if not 1 <= self.index <= self.param.degree:
                raise ValueError("component index out of range")

    @classmethod
    def hardy(cls) -> "SubspaceSpec":
        return cls("hardy")

    @classmethod
    def conj_hardy(cls, shift: int = 0) -> "SubspaceSpec":
        """Indices <= shift; shift 0 is the image of the Hardy space under J."""
        return cls("conj_hardy", shift=shift)

    @classmethod
    def model(cls, theta: BlaschkeProduct) -> "SubspaceSpec":
        return cls("model", param=theta)

    @classmethod
    def beurling(cls, alpha: BlaschkeProduct) -> "SubspaceSpec":
        return cls("beurling", param=alpha)

    @classmethod
    def component(cls, B: BlaschkeProduct, i: int) -> "SubspaceSpec":
        return cls("component", param=B, index=i)


# -- Wold coefficients -----------------------------------------------------------


@dataclass(frozen=True)
class WoldCoefficients:
    """Dense table c[j, k] = <f, e_j B**k> over a finite exponent range."""

    parent: BlaschkeProduct
    k_min: int
    k_max: int
    table: np.ndarray
    band: int
    input_norm_sq: float

    @property
    def k_range(self) -> tuple[int, int]:
        return (self.k_min, self.k_max)

    def coefficient_mass(self) -> float:
        return float(np.sum(np.abs(self.table) ** 2))

    def parseval_defect(self) -> float:
        return abs(self.input_norm_sq - self.coefficient_mass())

    def reconstruct(self) -> FourierVector:
        basis = _wold_vectors(self.parent, self.band, self.k_min, self.k_max)
        out = ZERO
        n = self.parent.degree
        for j in range(n):
            for ki, k in enumerate(range(self.k_min, self.k_max + 1)):
                c = self.table[j, ki]
                if c != 0:
                    out = out + c * basis[j][ki]
        return out

    def to_dict(self) -> dict:
        return {
            "blaschke": self.parent.to_dict(),
            "k_range": [self.k_min, self.k_max],
            "table": [
                [[float(c.real), float(c.imag)] for c in row] for row in self.table
            ],
            "parseval_defect": self.parseval_defect(),
            "tail_bound": tail_bound(self.parent, self.band),
        }


@lru_cache(maxsize=64)
def _wold_vectors(B: BlaschkeProduct, band: int, k_min: int, k_max: int):
    """Truncated expansions of e_j * B**k, sampled from closed forms."""
    n = B.degree
    if B.is_monomial:
        return tuple(
            tuple(
                monomial(n * k + j, (-1.0) ** (j + n * k))
                for k in range(k_min, k_max + 1)
            )
            for j in range(n)
        )
    m = grid_size_for(band + n * max(abs(k_min), abs(k_max)) + n)
    w = grid_points(m)
    bw = B.eval(w)
    basis_vals = _basis_samples(B, w)
    out = []
    for ej in basis_vals:
        row = []
        for k in range(k_min, k_max + 1):
            row.append(samples_to_vector(ej * bw**k, band))
        out.append(tuple(row))
    return tuple(out)


def adequate_k_range(f: FourierVector, B: BlaschkeProduct) -> tuple[int, int]:
    """Minimal exponent interval whose blocks cover the band of f."""
    if f.is_zero:
        return (0, 0)
    n = B.degree
    return (int(np.floor(f.lo / n)), int(np.floor(f.hi / n)))


def _resolve_k_range(f: FourierVector, B: BlaschkeProduct, k_range) -> tuple[int, int]:
    k_lo, k_hi = adequate_k_range(f, B)
    if k_range is None or k_range == "auto":
        return (k_lo - 1, k_hi + 1)  # minimal adequate range, padded by one
    a, b = int(k_range[0]), int(k_range[1])
    if a > k_lo or b < k_hi:
        raise InsufficientRangeError((a, b), (k_lo, k_hi))
    return (a, b)


def wold_decompose(f: FourierVector, B: BlaschkeProduct, k_range="auto", band: int | None = None) -> WoldCoefficients:
    """Coefficients of f against the blocks e_j B**k."""
    if B.degree < 1:
        raise ValueError("decomposition needs a non-constant product")
    if f.is_zero:
        k = (0, 0) if k_range in (None, "auto") else (int(k_range[0]), int(k_range[1]))
        table = np.zeros((B.degree, k[1] - k[0] + 1), dtype=np.complex128)
        return WoldCoefficients(B, k[0], k[1], table, band or 0, 0.0)
    k_min, k_max = _resolve_k_range(f, B, k_range)
    if band is None:
        band = max(abs(f.lo), abs(f.hi)) + _WOLD_PAD
    basis = _wold_vectors(B, band, k_min, k_max)
    n = B.degree
    table = np.empty((n, k_max - k_min + 1), dtype=np.complex128)
    for j in range(n):
        for ki in range(k_max - k_min + 1):
            table[j, ki] = inner_product(f, basis[j][ki])
    return WoldCoefficients(B, k_min, k_max, table, band, f.norm_sq())


def component_split(f: FourierVector, B: BlaschkeProduct, band: int | None = None) -> list[FourierVector]:
    """Orthogonal components of f, one per basis index of the model space."""
    n = B.degree
    if f.is_zero:
        return [ZERO] * n
    if B.is_monomial:
        # exact: component i holds the indices congruent to i-1 mod n
        parts = []
        idx = np.arange(f.lo, f.hi + 1)
        for i in range(n):
            mask = (idx % n) == i
            parts.append(FourierVector(f.lo, np.where(mask, f.coeffs, 0)))
        return parts
    coeffs = wold_decompose(f, B, "auto", band=band)
    basis = _wold_vectors(B, coeffs.band, coeffs.k_min, coeffs.k_max)
    parts = []
    for j in range(n):
        part = ZERO
        for ki in range(coeffs.k_max - coeffs.k_min + 1):
            c = coeffs.table[j, ki]
            if c != 0:
                part = part + c * basis[j][ki]
        parts.append(part)
    return parts


# -- projections ------------------------------------------------------------------


def _project_hardy(f: FourierVector) -> FourierVector:
    return f.band_clip(0, f.hi) if not f.is_zero else ZERO


def _project_beurling(f: FourierVector, alpha: BlaschkeProduct, band: int) -> FourierVector:
    """alpha * P_+(conj(alpha) * f), computed from closed-form samples."""
    if f.is_zero:
        return ZERO
    m = grid_size_for(max(band, abs(f.lo), abs(f.hi)) + alpha.degree)
    w = grid_points(m)
    av = alpha.eval(w)
    fv = to_grid(f, m).values
    inner = from_grid(GridSamples(m, fv * np.conj(av)), -(m // 2))
    plus = _project_hardy(inner.band_clip(-(m // 2), m // 2 - 1))
    if plus.is_zero:
        return ZERO
    back = to_grid(plus, m).values * av
    return samples_to_vector(back, band)


def project(f: FourierVector, spec: SubspaceSpec, band: int | None = None) -> FourierVector:
    """Orthogonal projection onto the given subspace."""
    if band is None:
        band = max(abs(f.lo), abs(f.hi)) + _WOLD_PAD if not f.is_zero else _WOLD_PAD
    if spec.kind == "hardy":
        return _project_hardy(f)
    if spec.kind == "conj_hardy":
        return f.band_clip(f.lo, spec.shift) if not f.is_zero else ZERO
    if spec.kind == "beurling":
        return _project_beurling(f, spec.param, band)
    if spec.kind == "model":
        return _project_hardy(f) - _project_beurling(f, spec.param, band)
    if spec.kind == "component":
        return component_split(f, spec.param, band=band)[spec.index - 1]
    raise ValueError(spec.kind)


def probes_for(spec: SubspaceSpec, band: int, count: int | None = None) -> list[FourierVector]:
    """A default probe family spanning the subspace up to the working band."""
    cap = count if count is not None else min(band, 16)
    if spec.kind == "hardy":
        return [monomial(k) for k in range(cap + 1)]
    if spec.kind == "conj_hardy":
        return [monomial(spec.shift - k) for k in range(cap + 1)]
    if spec.kind == "beurling":
        a = spec.param.as_fourier(band)
        return [a.shifted(k) for k in range(cap + 1)]
    if spec.kind == "model":
        return list(tm_basis(spec.param, band).vectors)
    if spec.kind == "component":
        vecs = _wold_vectors(spec.param, band, -2, 2)[spec.index - 1]
        return list(vecs)
    raise ValueError(spec.kind)


def invariance_residual(op, source: SubspaceSpec, probes, target: SubspaceSpec | None = None, band: int | None = None, probe_tol: float = TOL_SERIES) -> float:
    """max over probes v of ||(I - P_target)(op v)|| / ||v||.

    Zero means the operator maps the source into the target on the probe set.
    """
    apply_fn = op.apply if hasattr(op, "apply") else op
    if target is None:
        target = source
    worst = 0.0
    for v in probes:
        nv = v.norm()
        if nv == 0.0:
            continue
        drift = (v - project(v, source, band=band)).norm()
        if drift > probe_tol * nv:
            raise ProbeOutsideSubspaceError(
                f"probe has relative distance {drift / nv:.3e} from the source subspace"
            )
        image = apply_fn(v)
        leak = (image - project(image, target, band=band)).norm()
        worst = max(worst, leak / nv)
    return worst
