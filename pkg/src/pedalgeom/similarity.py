"""Plane similarity transforms and closed-form least-squares similarity fitting.

A similarity is represented by a complex coefficient pair: z -> alpha*z + beta
for direct maps and z -> alpha*conj(z) + beta for reflecting ones. Fitting a
similarity to point correspondences is then ordinary complex linear least
squares, so detection needs no iteration.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import DEFAULT_TOL, DegenerateGeometryError, Point, Polygon


@dataclass(frozen=True)
class Similarity:
    scale: float
    rotation: float
    translation: tuple[float, float]
    reflecting: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise ValueError(f"similarity scale must be positive and finite, got {self.scale}")

    @property
    def alpha(self) -> complex:
        return self.scale * cmath.exp(1j * self.rotation)

    @property
    def beta(self) -> complex:
        return complex(*self.translation)

    @classmethod
    def identity(cls) -> "Similarity":
        return cls(1.0, 0.0, (0.0, 0.0), False)

    @classmethod
    def from_coefficients(cls, alpha: complex, beta: complex, reflecting: bool = False) -> "Similarity":
        r = abs(alpha)
        if r == 0.0:
            raise ValueError("similarity coefficient must be nonzero")
        return cls(r, cmath.phase(alpha), (beta.real, beta.imag), reflecting)

    def apply(self, p: Point) -> Point:
        z = p.as_complex()
        if self.reflecting:
            z = z.conjugate()
        return Point.from_complex(self.alpha * z + self.beta)

    def apply_polygon(self, poly: Polygon) -> Polygon:
        return Polygon(tuple(self.apply(p) for p in poly.vertices))

    def compose(self, inner: "Similarity") -> "Similarity":
        """The transform that applies `inner` first and then self."""
        a1, b1 = inner.alpha, inner.beta
        if self.reflecting:
            alpha = self.alpha * a1.conjugate()
            beta = self.alpha * b1.conjugate() + self.beta
        else:
            alpha = self.alpha * a1
            beta = self.alpha * b1 + self.beta
        return Similarity.from_coefficients(alpha, beta, self.reflecting != inner.reflecting)

    def inverse(self) -> "Similarity":
        if self.reflecting:
            ac = self.alpha.conjugate()
            return Similarity.from_coefficients(1.0 / ac, -self.beta.conjugate() / ac, True)
        return Similarity.from_coefficients(1.0 / self.alpha, -self.beta / self.alpha, False)


def fit_similarity(src: Sequence[Point], dst: Sequence[Point], reflecting: bool = False) -> tuple[Similarity, float]:
    """Least-squares similarity sending src onto dst; returns (transform, rms residual).

    Closed form: with points as complex numbers, the optimal alpha is the
    covariance of the centered tuples over the source's squared spread.
    """
    if len(src) != len(dst) or len(src) < 2:
        raise ValueError("fit_similarity needs two equal-length point tuples (n >= 2)")
    p = [pt.as_complex() for pt in src]
    if reflecting:
        p = [z.conjugate() for z in p]
    q = [pt.as_complex() for pt in dst]
    n = len(p)
    pbar = sum(p) / n
    qbar = sum(q) / n
    spread = sum(abs(z - pbar) ** 2 for z in p)
    if spread == 0.0:
        raise DegenerateGeometryError("cannot fit a similarity: source points coincide")
    alpha = sum((q[i] - qbar) * (p[i] - pbar).conjugate() for i in range(n)) / spread
    if alpha == 0.0:
        raise DegenerateGeometryError("cannot fit a similarity: target points coincide")
    beta = qbar - alpha * pbar
    rms = math.sqrt(sum(abs(alpha * p[i] + beta - q[i]) ** 2 for i in range(n)) / n)
    return Similarity.from_coefficients(alpha, beta, reflecting), rms


@dataclass(frozen=True)
class Correspondence:
    """Index relabeling sigma with source index sigma(i) = shift +/- i (mod n)."""

    shift: int = 0
    reverse: bool = False

    def indices(self, n: int) -> tuple[int, ...]:
        if self.reverse:
            return tuple((self.shift - i) % n for i in range(n))
        return tuple((self.shift + i) % n for i in range(n))


def enumerate_correspondences(n: int, allow_cyclic_shift: bool) -> tuple[Correspondence, ...]:
    if not allow_cyclic_shift:
        return (Correspondence(0, False),)
    out = []
    for reverse in (False, True):
        for shift in range(n):
            out.append(Correspondence(shift, reverse))
    return tuple(out)


@dataclass(frozen=True)
class SimilarityMatch:
    similarity: Similarity
    correspondence: Correspondence
    rms: float
    max_error: float


def _best_match(v: Polygon, w: Polygon, allow_reflection: bool, allow_cyclic_shift: bool) -> Optional[SimilarityMatch]:
    n = len(v)
    if len(w) != n:
        raise ValueError("similarity search needs equal vertex counts")
    best: Optional[SimilarityMatch] = None
    wpts = w.vertices
    for corr in enumerate_correspondences(n, allow_cyclic_shift):
        src = [v.vertices[j] for j in corr.indices(n)]
        for reflecting in (False, True) if allow_reflection else (False,):
            try:
                sim, rms = fit_similarity(src, wpts, reflecting)
            except DegenerateGeometryError:
                continue
            if best is None or rms < best.rms:
                max_error = max(sim.apply(src[i]).distance_to(wpts[i]) for i in range(n))
                best = SimilarityMatch(sim, corr, rms, max_error)
    return best


def similarity_between(
    v: Polygon,
    w: Polygon,
    allow_reflection: bool = False,
    allow_cyclic_shift: bool = False,
    tol: float = DEFAULT_TOL,
) -> Optional[SimilarityMatch]:
    """Best similarity taking v onto w under the enabled correspondences, or None.

    A match is accepted when max_i |T(V_sigma(i)) - W_i| <= tol * diam(W).
    """
    best = _best_match(v, w, allow_reflection, allow_cyclic_shift)
    if best is None or best.max_error > tol * w.diameter:
        return None
    return best


def similarity_distance(
    v: Polygon,
    w: Polygon,
    allow_reflection: bool = True,
    allow_cyclic_shift: bool = True,
) -> float:
    """Normalized residual of the best similarity fit; zero iff the tuples are similar.

    Computed as the least-squares RMS of the best fit over the enabled
    correspondence set, divided by diam(W).
    """
    try:
        best = _best_match(v, w, allow_reflection, allow_cyclic_shift)
    except DegenerateGeometryError:
        return math.inf
    if best is None:
        return math.inf
    return best.rms / w.diameter
