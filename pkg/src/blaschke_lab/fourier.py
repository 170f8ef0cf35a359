"""Truncated two-sided Fourier arithmetic on the unit circle.

A :class:`FourierVector` is a finitely supported coefficient sequence; the
entry at position ``i`` is the coefficient of ``z**(lo+i)``.  Values are
canonical: leading and trailing exact zeros are trimmed and the empty
sequence with ``lo == 0`` is the unique zero vector.  All operations are
pure; products are exact convolutions and never truncate silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AliasingError, BandOverflowError

# Hard cap on the number of coefficients a product may produce.
BAND_HARD_CAP = 1 << 16


class FourierVector:
    """Coefficient sequence of a trigonometric (Laurent) polynomial."""

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int, coeffs) -> None:
        arr = np.asarray(coeffs, dtype=np.complex128).ravel()
        nz = np.flatnonzero(arr)
        if nz.size == 0:
            lo, arr = 0, np.empty(0, dtype=np.complex128)
        else:
            arr = arr[nz[0] : nz[-1] + 1].copy()
            lo = int(lo) + int(nz[0])
        arr.setflags(write=False)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("FourierVector is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def hi(self) -> int:
        """Largest index with a (possibly zero-trimmed) coefficient."""
        return self.lo + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coefficient(self, k: int) -> complex:
        """Coefficient of z**k (zero outside the stored band)."""
        if self.is_zero or k < self.lo or k > self.hi:
            return 0j
        return complex(self.coeffs[k - self.lo])

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "FourierVector") -> "FourierVector":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        buf = np.zeros(hi - lo + 1, dtype=np.complex128)
        buf[self.lo - lo : self.lo - lo + len(self.coeffs)] += self.coeffs
        buf[other.lo - lo : other.lo - lo + len(other.coeffs)] += other.coeffs
        return FourierVector(lo, buf)

    def __sub__(self, other: "FourierVector") -> "FourierVector":
        return self + (-1.0) * other

    def __neg__(self) -> "FourierVector":
        return FourierVector(self.lo, -self.coeffs)

    def __mul__(self, scalar) -> "FourierVector":
        return FourierVector(self.lo, self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def shifted(self, k: int) -> "FourierVector":
        """Multiply by z**k (index shift)."""
        return FourierVector(self.lo + k, self.coeffs)

    def band_clip(self, lo: int, hi: int) -> "FourierVector":
        """Restrict support to [lo, hi]; an explicit, auditable truncation."""
        if self.is_zero or lo > self.hi or hi < self.lo:
            return ZERO
        a = max(lo, self.lo)
        b = min(hi, self.hi)
        return FourierVector(a, self.coeffs[a - self.lo : b - self.lo + 1])

    def dense(self, lo: int, hi: int) -> np.ndarray:
        """Coefficients on [lo, hi] as a dense array (support must fit)."""
        if not self.is_zero and (self.lo < lo or self.hi > hi):
            raise ValueError(f"support [{self.lo},{self.hi}] exceeds [{lo},{hi}]")
        buf = np.zeros(hi - lo + 1, dtype=np.complex128)
        if not self.is_zero:
            buf[self.lo - lo : self.lo - lo + len(self.coeffs)] = self.coeffs
        return buf

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FourierVector):
            return NotImplemented
        return self.lo == other.lo and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.lo, self.coeffs.tobytes()))

    def allclose(self, other: "FourierVector", tol: float = 1e-12) -> bool:
        return (self - other).norm() <= tol

    def __repr__(self) -> str:
        if self.is_zero:
            return "FourierVector(0)"
        terms = ", ".join(
            f"z^{self.lo + i}: {c:.4g}" for i, c in enumerate(self.coeffs)
        )
        return f"FourierVector({terms})"

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "lo": self.lo,
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FourierVector":
        coeffs = [complex(re, im) for re, im in data.get("coeffs", [])]
        return cls(int(data.get("lo", 0)), coeffs)


ZERO = FourierVector(0, [])


def monomial(k: int, c: complex = 1.0) -> FourierVector:
    """The vector c * z**k."""
    return FourierVector(k, [c])


ONE = monomial(0)
Z = monomial(1)
ZBAR = monomial(-1)


# -- inner product and products ----------------------------------------------


def inner_product(f: FourierVector, g: FourierVector) -> complex:
    """L2 pairing: sum of a_k * conj(b_k) over the overlapping band."""
    if f.is_zero or g.is_zero:
        return 0j
    lo = max(f.lo, g.lo)
    hi = min(f.hi, g.hi)
    if lo > hi:
        return 0j
    fa = f.coeffs[lo - f.lo : hi - f.lo + 1]
    ga = g.coeffs[lo - g.lo : hi - g.lo + 1]
    return complex(np.sum(fa * np.conj(ga)))


def multiply(f: FourierVector, g: FourierVector, cap: int = BAND_HARD_CAP) -> FourierVector:
    """Exact convolution product; raises rather than truncating."""
    if f.is_zero or g.is_zero:
        return ZERO
    out_len = len(f.coeffs) + len(g.coeffs) - 1
    if out_len > cap:
        raise BandOverflowError(
            f"product band would have {out_len} coefficients (cap {cap})"
        )
    return FourierVector(f.lo + g.lo, np.convolve(f.coeffs, g.coeffs))


# -- base conjugations and substitutions ---------------------------------------


def conj_j(f: FourierVector) -> FourierVector:
    """Pointwise complex conjugate on the circle: a_k -> conj(a_{-k})."""
    if f.is_zero:
        return ZERO
    return FourierVector(-f.hi, np.conj(f.coeffs[::-1]))


def conj_jstar(f: FourierVector) -> FourierVector:
    """Coefficientwise conjugation, realizing f(z) -> conj(f(conj(z)))."""
    if f.is_zero:
        return ZERO
    return FourierVector(f.lo, np.conj(f.coeffs))


def reflect_indices(f: FourierVector) -> FourierVector:
    """Index reversal a_k -> a_{-k}, realizing the substitution z -> 1/z."""
    if f.is_zero:
        return ZERO
    return FourierVector(-f.hi, f.coeffs[::-1])


# -- parity split ---------------------------------------------------------------


@dataclass(frozen=True)
class EvenOddPair:
    """Partition of a vector into even-index and odd-index coefficients."""

    even: FourierVector
    odd: FourierVector

    def recombine(self) -> FourierVector:
        return self.even + self.odd


def even_odd_split(f: FourierVector) -> EvenOddPair:
    """Split by index parity; the two parts recombine to f exactly."""
    if f.is_zero:
        return EvenOddPair(ZERO, ZERO)
    idx = np.arange(f.lo, f.hi + 1)
    mask = (idx % 2) == 0
    ev = np.where(mask, f.coeffs, 0)
    od = np.where(mask, 0, f.coeffs)
    return EvenOddPair(FourierVector(f.lo, ev), FourierVector(f.lo, od))


def even_part(f: FourierVector) -> FourierVector:
    return even_odd_split(f).even


def odd_part(f: FourierVector) -> FourierVector:
    return even_odd_split(f).odd


# -- grid sampling ---------------------------------------------------------------


@dataclass(frozen=True)
class GridSamples:
    """Samples at the m-th roots of unity, m a power of two."""

    m: int
    values: np.ndarray

    def __post_init__(self):
        if self.m < 2 or (self.m & (self.m - 1)) != 0:
            raise AliasingError(f"grid size must be a power of two >= 2, got {self.m}")
        if len(self.values) != self.m:
            raise AliasingError("sample count does not match grid size")


def grid_size_for(band: int) -> int:
    """Smallest power of two >= 4*band + 4 (alias-safe for [-band, band])."""
    m = 2
    while m < 4 * band + 4:
        m *= 2
    return m


def grid_points(m: int) -> np.ndarray:
    """The m-th roots of unity exp(2*pi*i*t/m), t = 0..m-1."""
    return np.exp(2j * np.pi * np.arange(m) / m)


def to_grid(f: FourierVector, m: int) -> GridSamples:
    """Evaluate f at the m-th roots of unity (m alias-free for f's band)."""
    if f.is_zero:
        return GridSamples(m, np.zeros(m, dtype=np.complex128))
    if m < 2 * (f.hi - f.lo) + 2:
        raise AliasingError(
            f"grid size {m} too small for band [{f.lo},{f.hi}]"
        )
    spec = np.zeros(m, dtype=np.complex128)
    idx = np.arange(f.lo, f.hi + 1) % m
    np.add.at(spec, idx, f.coeffs)
    return GridSamples(m, np.fft.ifft(spec) * m)


def from_grid(samples: GridSamples, lo: int) -> FourierVector:
    """Inverse transform onto the index window [lo, lo+m-1]."""
    spec = np.fft.fft(samples.values) / samples.m
    idx = (np.arange(lo, lo + samples.m)) % samples.m
    return FourierVector(lo, spec[idx])


def samples_to_vector(values: np.ndarray, band: int) -> FourierVector:
    """Two-sided inverse transform of raw samples, clipped to [-band, band]."""
    m = len(values)
    fv = from_grid(GridSamples(m, np.asarray(values, dtype=np.complex128)), -(m // 2))
    return fv.band_clip(-band, band)


def eval_at(f: FourierVector, z) -> complex | np.ndarray:
    """Evaluate the Laurent polynomial at one or many nonzero points."""
    if f.is_zero:
        return np.zeros_like(np.asarray(z, dtype=np.complex128))
    z = np.asarray(z, dtype=np.complex128)
    val = np.polynomial.polynomial.polyval(z, f.coeffs)
    return val * z**f.lo
