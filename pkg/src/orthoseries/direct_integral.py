"""Discrete direct integrals of Hilbert spaces.

The ambient space is a direct integral over a finite atomic measure space:
each atom ``i`` carries a weight ``mu_i >= 0`` and a real or complex fiber
of dimension ``d_i >= 1``.  An element assigns one fiber vector per atom,
and the inner product is

    <f, g> = sum_i mu_i <f_i, g_i>,

conjugate-linear in the second slot for complex fibers.  Everything in the
package (orthonormal systems, partial-sum majorants, verification checks)
is built on the three primitives here: inner products, norms, and Gram
matrices with extremal-eigenvalue (Riesz) bounds.

All value types are immutable after construction (their arrays are marked
read-only), so they can be shared freely across parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import StructuralError

# Full symmetric eigendecompositions are used for Gram spectra up to this
# size; above it an iterative extremal-eigenvalue method (Lanczos via
# scipy.sparse.linalg.eigsh) is used instead.
DENSE_EIG_LIMIT = 512

GRAM_HERMITIAN_TOL = 1e-12


class Field(Enum):
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.complex128 if self is Field.COMPLEX else np.float64)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class MeasureSpace:
    """A finite atomic measure space: atoms 0..M-1 with nonnegative masses."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise StructuralError("weights must be a nonempty 1-d array")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise StructuralError("weights must be finite and nonnegative")
        if not np.any(w > 0):
            raise StructuralError("at least one atom must have positive mass")
        object.__setattr__(self, "weights", _readonly(w))

    @property
    def n_atoms(self) -> int:
        return self.weights.size

    @property
    def atoms(self) -> np.ndarray:
        return np.arange(self.n_atoms)

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.weights))


@dataclass(frozen=True)
class HilbertCollection:
    """Per-atom fiber dimensions and the common scalar field."""

    dims: np.ndarray
    field: Field = Field.REAL

    def __post_init__(self):
        d = np.asarray(self.dims, dtype=np.int64)
        if d.ndim != 1 or d.size == 0:
            raise StructuralError("dims must be a nonempty 1-d array")
        if np.any(d < 1):
            bad = int(np.argmax(d < 1))
            raise StructuralError(f"atom {bad}: fiber dimension {int(d[bad])} < 1")
        object.__setattr__(self, "dims", _readonly(d))

    @property
    def n_atoms(self) -> int:
        return self.dims.size

    @property
    def offsets(self) -> np.ndarray:
        # start index of each atom's block in the flat layout, plus total
        out = np.zeros(self.n_atoms + 1, dtype=np.int64)
        np.cumsum(self.dims, out=out[1:])
        return out

    @property
    def total_dim(self) -> int:
        return int(np.sum(self.dims))

    def matches(self, space: MeasureSpace) -> None:
        if self.n_atoms != space.n_atoms:
            raise StructuralError(
                f"fiber collection has {self.n_atoms} atoms, measure space has {space.n_atoms}"
            )


@dataclass(frozen=True)
class DirectIntegralElement:
    """One fiber vector per atom, stored flat with block offsets."""

    values: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.dtype.kind == "c":
            v = v.astype(np.complex128, copy=False)
        else:
            v = v.astype(np.float64, copy=False)
        off = np.asarray(self.offsets, dtype=np.int64)
        if off.ndim != 1 or off.size < 2 or off[0] != 0 or np.any(np.diff(off) < 1):
            raise StructuralError("offsets must start at 0 and strictly increase")
        if v.ndim != 1 or v.size != off[-1]:
            raise StructuralError(
                f"flat values have length {v.size}, offsets expect {int(off[-1])}"
            )
        object.__setattr__(self, "values", _readonly(v))
        object.__setattr__(self, "offsets", _readonly(off))

    @classmethod
    def from_blocks(cls, blocks: Sequence, field: Field = Field.REAL) -> "DirectIntegralElement":
        blocks = [np.atleast_1d(np.asarray(b)) for b in blocks]
        offsets = np.zeros(len(blocks) + 1, dtype=np.int64)
        np.cumsum([b.size for b in blocks], out=offsets[1:])
        flat = np.concatenate(blocks) if blocks else np.zeros(0)
        return cls(values=flat.astype(field.dtype), offsets=offsets)

    @classmethod
    def zero(cls, fibers: HilbertCollection) -> "DirectIntegralElement":
        return cls(values=np.zeros(fibers.total_dim, dtype=fibers.field.dtype),
                   offsets=fibers.offsets)

    @property
    def n_atoms(self) -> int:
        return self.offsets.size - 1

    def block(self, i: int) -> np.ndarray:
        return self.values[self.offsets[i]:self.offsets[i + 1]]

    @property
    def blocks(self) -> list[np.ndarray]:
        return [self.block(i) for i in range(self.n_atoms)]

    def conform(self, space: MeasureSpace, fibers: HilbertCollection) -> None:
        fibers.matches(space)
        if self.n_atoms != fibers.n_atoms:
            raise StructuralError(
                f"element has {self.n_atoms} atoms, collection has {fibers.n_atoms}"
            )
        mine = np.diff(self.offsets)
        if not np.array_equal(mine, fibers.dims):
            bad = int(np.argmax(mine != fibers.dims))
            raise StructuralError(
                f"atom {bad}: block length {int(mine[bad])} != fiber dim {int(fibers.dims[bad])}"
            )
        if fibers.field is Field.REAL and self.values.dtype.kind == "c":
            raise StructuralError("complex element used with a real fiber collection")


@dataclass(frozen=True)
class GramReport:
    """Pairwise inner products of a system plus spectral (Riesz) bounds."""

    gram: np.ndarray
    max_offdiag_abs: float
    max_diag_dev: float
    riesz_lower: float
    riesz_upper: float

    def __post_init__(self):
        object.__setattr__(self, "gram", _readonly(np.asarray(self.gram)))


def expanded_weights(space: MeasureSpace, fibers: HilbertCollection) -> np.ndarray:
    """Measure mass repeated per flat coordinate: weight of atom(i) at coord i."""
    fibers.matches(space)
    return np.repeat(space.weights, fibers.dims)


def inner_product(f: DirectIntegralElement, g: DirectIntegralElement,
                  space: MeasureSpace, fibers: HilbertCollection):
    """<f, g> = sum_i mu_i <f_i, g_i>, conjugate-linear in g."""
    f.conform(space, fibers)
    g.conform(space, fibers)
    w = expanded_weights(space, fibers)
    if fibers.field is Field.REAL:
        return float(np.sum(f.values * g.values * w))
    # split into real arithmetic: the imaginary terms cancel exactly when
    # f is g (numpy's fused complex multiply would leave ~1e-17 residue)
    fr, fi = f.values.real, f.values.imag
    gr, gi = g.values.real, g.values.imag
    re = np.sum((fr * gr + fi * gi) * w)
    im = np.sum((fi * gr - fr * gi) * w)
    return complex(re, im)


def norm(f: DirectIntegralElement, space: MeasureSpace, fibers: HilbertCollection) -> float:
    f.conform(space, fibers)
    w = expanded_weights(space, fibers)
    sq = np.sum(w * np.abs(f.values) ** 2)
    return float(np.sqrt(sq.real if np.iscomplexobj(sq) else sq))


class OrthonormalSystem:
    """An ordered finite system of direct-integral elements, stored as a matrix.

    Row ``n`` holds the flat coordinates of the n-th function.  The class
    does not assume orthonormality; ``validate`` checks it against the
    Gram matrix.  Systems are immutable after construction.
    """

    def __init__(self, space: MeasureSpace, fibers: HilbertCollection, values: np.ndarray):
        fibers.matches(space)
        values = np.asarray(values)
        if values.ndim != 2:
            raise StructuralError("system values must be a 2-d (n_functions, total_dim) array")
        if values.shape[1] != fibers.total_dim:
            raise StructuralError(
                f"system rows have length {values.shape[1]}, layout expects {fibers.total_dim}"
            )
        if values.shape[0] == 0:
            raise StructuralError("empty system")
        if fibers.field is Field.REAL and values.dtype.kind == "c":
            raise StructuralError("complex system values with a real fiber collection")
        self.space = space
        self.fibers = fibers
        self.values = _readonly(values.astype(fibers.field.dtype, copy=False))
        self._wflat = _readonly(expanded_weights(space, fibers))

    @classmethod
    def from_elements(cls, space: MeasureSpace, fibers: HilbertCollection,
                      elements: Iterable[DirectIntegralElement]) -> "OrthonormalSystem":
        elements = list(elements)
        if not elements:
            raise StructuralError("empty system")
        for el in elements:
            el.conform(space, fibers)
        return cls(space, fibers, np.stack([el.values for el in elements]))

    def __len__(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, n: int) -> DirectIntegralElement:
        return DirectIntegralElement(values=self.values[n], offsets=self.fibers.offsets)

    @property
    def elements(self) -> list[DirectIntegralElement]:
        return [self[n] for n in range(len(self))]

    @property
    def expanded_weights(self) -> np.ndarray:
        return self._wflat

    def gram(self) -> GramReport:
        return gram_matrix(self, self.space, self.fibers)

    def validate(self, tol: float = 1e-10) -> tuple[bool, GramReport]:
        return validate_ons(self, self.space, self.fibers, tol)


def _as_value_matrix(system, space: MeasureSpace, fibers: HilbertCollection) -> np.ndarray:
    if isinstance(system, OrthonormalSystem):
        return system.values
    elements = list(system)
    if not elements:
        raise StructuralError("empty system")
    for el in elements:
        el.conform(space, fibers)
    return np.stack([el.values for el in elements])


def _extremal_eigenvalues(gram_h: np.ndarray) -> tuple[float, float]:
    n = gram_h.shape[0]
    if n <= DENSE_EIG_LIMIT:
        eig = np.linalg.eigvalsh(gram_h)
        return float(eig[0]), float(eig[-1])
    # Lanczos extremes for large systems; the matrix is already Hermitian.
    from scipy.sparse.linalg import eigsh

    lo = eigsh(gram_h, k=1, which="SA", return_eigenvectors=False)
    hi = eigsh(gram_h, k=1, which="LA", return_eigenvectors=False)
    return float(lo[0]), float(hi[0])


def gram_matrix(system, space: MeasureSpace, fibers: HilbertCollection) -> GramReport:
    """Gram matrix G[m, n] = <phi_m, phi_n> with extremal eigenvalue bounds."""
    V = _as_value_matrix(system, space, fibers)
    w = expanded_weights(space, fibers)
    G = (V * w) @ np.conj(V).T
    herm = 0.5 * (G + np.conj(G).T)
    if np.max(np.abs(G - np.conj(G).T)) > GRAM_HERMITIAN_TOL:
        raise StructuralError("gram matrix is not Hermitian to within 1e-12")
    n = G.shape[0]
    diag = np.real(np.diagonal(G))
    off = G - np.diag(np.diagonal(G))
    max_offdiag = float(np.max(np.abs(off))) if n > 1 else 0.0
    max_diag_dev = float(np.max(np.abs(diag - 1.0)))
    lo, hi = _extremal_eigenvalues(herm)
    return GramReport(gram=G, max_offdiag_abs=max_offdiag,
                      max_diag_dev=max_diag_dev, riesz_lower=lo, riesz_upper=hi)


def validate_ons(system, space: MeasureSpace, fibers: HilbertCollection,
                 tol: float) -> tuple[bool, GramReport]:
    """True iff max |G - I| <= tol; the report is returned either way."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    report = gram_matrix(system, space, fibers)
    ok = max(report.max_offdiag_abs, report.max_diag_dev) <= tol
    return ok, report
