"""Finite Blaschke products and the rational orthonormal basis of K_B.

A product is stored as its zero list (repeats allowed, order significant for
the basis).  Each factor is (lam - z)/(1 - conj(lam) z), with no extra
unimodular prefactor, so zeros [0, 0] give exactly z**2 and the second basis
vector is -z with that sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import PoleError, WrongDegreeError
from .fourier import (
    FourierVector,
    ZERO,
    from_grid,
    GridSamples,
    grid_points,
    grid_size_for,
    inner_product,
    monomial,
    samples_to_vector,
)


class BlaschkeProduct:
    """Finite product of disk-automorphism factors, one per zero."""

    __slots__ = ("zeros",)

    def __init__(self, zeros) -> None:
        zs = tuple(complex(z) for z in zeros)
        for z in zs:
            if abs(z) >= 1.0:
                raise ValueError(f"Blaschke zero {z} must satisfy |z| < 1")
        object.__setattr__(self, "zeros", zs)

    def __setattr__(self, name, value):
        raise AttributeError("BlaschkeProduct is immutable")

    @property
    def degree(self) -> int:
        return len(self.zeros)

    @property
    def rho(self) -> float:
        """Largest zero modulus; governs all geometric tail bounds."""
        return max((abs(z) for z in self.zeros), default=0.0)

    @property
    def is_monomial(self) -> bool:
        """True when the product is exactly (-z)**degree."""
        return all(z == 0 for z in self.zeros)

    def eval(self, z):
        """Evaluate the product at one or many points (left-to-right)."""
        z = np.asarray(z, dtype=np.complex128)
        out = np.ones_like(z)
        for lam in self.zeros:
            den = 1.0 - np.conj(lam) * z
            if np.any(np.abs(den) < 1e-14):
                raise PoleError(f"evaluation at a pole of the factor for {lam}")
            out = out * (lam - z) / den
        return out if out.shape else complex(out)

    def sharp(self) -> "BlaschkeProduct":
        """Zero-wise conjugation; realizes conj(B(conj(z))) on the circle."""
        return BlaschkeProduct([np.conj(z) for z in self.zeros])

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(self.zeros + other.zeros)

    def __eq__(self, other):
        if not isinstance(other, BlaschkeProduct):
            return NotImplemented
        return self.zeros == other.zeros

    def __hash__(self):
        return hash(self.zeros)

    def __repr__(self):
        return f"BlaschkeProduct(zeros={list(self.zeros)})"

    def as_fourier(self, band: int) -> FourierVector:
        """Truncated analytic expansion on [0, band]."""
        return _blaschke_fourier(self, band)

    def to_dict(self) -> dict:
        return {"zeros": [[z.real, z.imag] for z in self.zeros]}

    @classmethod
    def from_dict(cls, data: dict) -> "BlaschkeProduct":
        return cls([complex(re, im) for re, im in data.get("zeros", [])])


@lru_cache(maxsize=256)
def _blaschke_fourier(B: BlaschkeProduct, band: int) -> FourierVector:
    if B.degree == 0:
        return monomial(0)
    if B.is_monomial:
        return monomial(B.degree, (-1.0) ** B.degree)
    m = grid_size_for(band)
    vals = B.eval(grid_points(m))
    return from_grid(GridSamples(m, vals), 0).band_clip(0, band)


def tail_bound(B: BlaschkeProduct, band: int) -> float:
    """Geometric bound on truncated mass: degree*rho**(band-degree)/(1-rho)."""
    rho = B.rho
    if rho == 0.0:
        return 0.0
    return B.degree * rho ** max(band - B.degree, 0) / (1.0 - rho)


@dataclass(frozen=True)
class TMBasis:
    """Truncated expansions of the rational orthonormal basis of K_B."""

    parent: BlaschkeProduct
    vectors: tuple
    tail_bound: float

    @property
    def degree(self) -> int:
        return len(self.vectors)

    def vector(self, j: int) -> FourierVector:
        """1-based access, matching the factor ordering."""
        if not 1 <= j <= self.degree:
            raise IndexError(f"basis index {j} out of range 1..{self.degree}")
        return self.vectors[j - 1]

    def gram(self) -> np.ndarray:
        n = self.degree
        g = np.empty((n, n), dtype=np.complex128)
        for i in range(n):
            for j in range(n):
                g[i, j] = inner_product(self.vectors[i], self.vectors[j])
        return g


def _basis_samples(B: BlaschkeProduct, w: np.ndarray) -> list[np.ndarray]:
    """Pointwise values of each basis function at the sample points w."""
    out = []
    prefix = np.ones_like(w)
    for j, lam in enumerate(B.zeros):
        ej = prefix * np.sqrt(1.0 - abs(lam) ** 2) / (1.0 - np.conj(lam) * w)
        out.append(ej)
        prefix = prefix * (lam - w) / (1.0 - np.conj(lam) * w)
    return out


@lru_cache(maxsize=256)
def tm_basis(B: BlaschkeProduct, band: int) -> TMBasis:
    """Orthonormal basis of the model space, truncated at the given band."""
    if band < B.degree:
        raise ValueError(f"band {band} too small for degree {B.degree}")
    if B.is_monomial:
        vecs = tuple(monomial(j, (-1.0) ** j) for j in range(B.degree))
        return TMBasis(B, vecs, 0.0)
    m = grid_size_for(band)
    w = grid_points(m)
    vecs = tuple(
        from_grid(GridSamples(m, ej), 0).band_clip(0, band)
        for ej in _basis_samples(B, w)
    )
    return TMBasis(B, vecs, tail_bound(B, band))


def _inverse_samples(B: BlaschkeProduct, j: int, w: np.ndarray) -> np.ndarray:
    """Closed-form reciprocal of the j-th basis function on the circle."""
    lam_j = B.zeros[j - 1]
    out = (1.0 - np.conj(lam_j) * w) / np.sqrt(1.0 - abs(lam_j) ** 2)
    for lam in B.zeros[: j - 1]:
        out = out * (1.0 - np.conj(lam) * w) / (lam - w)
    return out


def tm_inverse(B: BlaschkeProduct, j: int, band: int) -> FourierVector:
    """Two-sided truncated expansion of 1/e_j on the circle."""
    if not 1 <= j <= B.degree:
        raise IndexError(f"basis index {j} out of range 1..{B.degree}")
    if B.is_monomial:
        return monomial(-(j - 1), (-1.0) ** (j - 1))
    m = grid_size_for(band)
    w = grid_points(m)
    return samples_to_vector(_inverse_samples(B, j, w), band)


def negative_index_mass(values: np.ndarray) -> tuple[float, float]:
    """(mass on negative indices, total mass) of a sampled circle function."""
    m = len(values)
    spec = np.fft.fft(np.asarray(values, dtype=np.complex128)) / m
    total = float(np.sum(np.abs(spec) ** 2))
    neg = float(np.sum(np.abs(spec[m // 2 + 1 :]) ** 2))
    return neg, total


def divides_samples(alpha_values: np.ndarray, gamma_values: np.ndarray, tol: float) -> tuple[bool, float]:
    """Divisibility via negative-index energy of gamma * conj(alpha)."""
    neg, _total = negative_index_mass(gamma_values * np.conj(alpha_values))
    return bool(neg < tol**2), float(np.sqrt(neg))


def divides(alpha: BlaschkeProduct, gamma: BlaschkeProduct, tol: float | None = None, band: int = 64) -> bool:
    """True when gamma / alpha has no co-analytic part, i.e. alpha <= gamma."""
    m = grid_size_for(band)
    w = grid_points(m)
    gv = gamma.eval(w)
    if tol is None:
        gamma_norm = float(np.sqrt(np.mean(np.abs(gv) ** 2)))
        tol = 1e-7 * gamma_norm
    ok, _res = divides_samples(alpha.eval(w), gv, tol)
    return ok


def require_degree(B: BlaschkeProduct, degree: int) -> None:
    if B.degree != degree:
        raise WrongDegreeError(f"expected degree {degree}, got {B.degree}")


class InnerSymbol:
    """An inner function given either as a literal power z**n or a product.

    The zero-list normalization makes zeros [0]*n equal to (-z)**n, which for
    odd n differs from the plain monomial z**n by a sign.  Conjugation
    constructors care about that sign, so they accept either form: an ``int``
    n means exactly z**n, a :class:`BlaschkeProduct` means its pinned
    normalization.
    """

    __slots__ = ("product", "power")

    def __init__(self, spec) -> None:
        if isinstance(spec, InnerSymbol):
            product, power = spec.product, spec.power
        elif isinstance(spec, int):
            if spec < 1:
                raise ValueError("monomial inner function needs a power >= 1")
            product, power = None, spec
        elif isinstance(spec, BlaschkeProduct):
            product, power = spec, None
        else:
            raise TypeError(f"cannot interpret {spec!r} as an inner function")
        object.__setattr__(self, "product", product)
        object.__setattr__(self, "power", power)

    def __setattr__(self, name, value):
        raise AttributeError("InnerSymbol is immutable")

    @property
    def degree(self) -> int:
        return self.power if self.power is not None else self.product.degree

    @property
    def rho(self) -> float:
        return 0.0 if self.power is not None else self.product.rho

    @property
    def monomial_form(self) -> tuple[int, complex] | None:
        """(n, c) when the symbol is exactly c * z**n, else None."""
        if self.power is not None:
            return self.power, 1.0 + 0j
        if self.product.is_monomial:
            return self.product.degree, (-1.0 + 0j) ** self.product.degree
        return None

    def eval(self, z):
        if self.power is not None:
            return np.asarray(z, dtype=np.complex128) ** self.power
        return self.product.eval(z)

    def as_fourier(self, band: int) -> FourierVector:
        mono = self.monomial_form
        if mono is not None:
            n, c = mono
            return monomial(n, c)
        return self.product.as_fourier(band)

    def sharp(self) -> "InnerSymbol":
        if self.power is not None:
            return self
        return InnerSymbol(self.product.sharp())

    def model_product(self) -> BlaschkeProduct:
        """A zero-list product with the same model space (sign immaterial)."""
        if self.power is not None:
            return BlaschkeProduct([0.0] * self.power)
        return self.product

    def tail_bound(self, band: int) -> float:
        if self.power is not None:
            return 0.0
        return tail_bound(self.product, band)

    def __repr__(self):
        if self.power is not None:
            return f"InnerSymbol(z**{self.power})"
        return f"InnerSymbol({self.product!r})"


def as_inner(theta) -> InnerSymbol:
    return theta if isinstance(theta, InnerSymbol) else InnerSymbol(theta)
