"""Level hypersurfaces M = F^{-1}(c) on the unit sphere and their principal curvatures."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from isopar.fkm import FkmPolynomial

MAX_NEWTON_ITERATIONS = 50
MAX_HALVINGS = 5
REGULARITY_THRESHOLD = 1e-8


class GeometryError(RuntimeError):
    pass


class NonConvergence(GeometryError):
    def __init__(self, index: int, detail: str = ""):
        self.index = index
        super().__init__(f"Newton projection did not converge for sample {index}" + (f": {detail}" if detail else ""))


class IrregularPoint(GeometryError):
    pass


class AmbiguousClustering(GeometryError):
    pass


class InconsistentSpectrum(GeometryError):
    pass


@dataclass(frozen=True)
class Tolerances:
    sphere: float = 1e-12
    level: float = 1e-10
    cluster: float = 1e-5


@dataclass(frozen=True)
class SurfacePoint:
    x: np.ndarray = field(repr=False)
    level: float
    residual_sphere: float
    residual_level: float


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for sample ``index``; stable across runs and orderings."""
    return np.random.default_rng([index, seed])


def _spherical_gradient(F: FkmPolynomial, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    g = F.grad(x)
    return g, g - (g @ x) * x


def _residuals(F: FkmPolynomial, x: np.ndarray, c: float) -> np.ndarray:
    return np.array([x @ x - 1.0, F.eval(x) - c])


def project_to_level(F: FkmPolynomial, start: np.ndarray, c: float, tols: Tolerances = Tolerances(), index: int = 0) -> SurfacePoint:
    """Newton iteration on {<x,x> = 1, F(x) = c} with steps in span{x, spherical gradient}."""
    x = np.asarray(start, dtype=float)
    x = x / np.linalg.norm(x)
    for _ in range(MAX_NEWTON_ITERATIONS):
        r = _residuals(F, x, c)
        if abs(r[0]) <= tols.sphere and abs(r[1]) <= tols.level:
            break
        g, s = _spherical_gradient(F, x)
        # rows: d<x,x> = 2<x, dx>, dF = <grad F, dx>; columns: dx = alpha x + beta s
        jac = np.array([[2.0 * (x @ x), 2.0 * (x @ s)], [g @ x, g @ s]])
        try:
            alpha, beta = np.linalg.solve(jac, -r)
        except np.linalg.LinAlgError as exc:
            raise NonConvergence(index, "singular Newton system") from exc
        step = alpha * x + beta * s
        norm0 = np.linalg.norm(r)
        t = 1.0
        for _ in range(MAX_HALVINGS):
            trial = x + t * step
            if np.linalg.norm(_residuals(F, trial, c)) < norm0:
                break
            t *= 0.5
        x = x + t * step
    else:
        r = _residuals(F, x, c)
        if not (abs(r[0]) <= tols.sphere and abs(r[1]) <= tols.level):
            raise NonConvergence(index, f"residuals {abs(r[0]):.2e}, {abs(r[1]):.2e}")
    r = _residuals(F, x, c)
    _, s = _spherical_gradient(F, x)
    if np.linalg.norm(s) < REGULARITY_THRESHOLD:
        raise IrregularPoint(f"spherical gradient vanishes at sample {index}")
    return SurfacePoint(x=x, level=c, residual_sphere=abs(float(r[0])), residual_level=abs(float(r[1])))


def sample_level_set(F: FkmPolynomial, c: float, count: int, seed: int, tols: Tolerances = Tolerances()) -> list[SurfacePoint]:
    if not -1.0 < c < 1.0:
        raise ValueError(f"level c must satisfy -1 < c < 1 (+-1 are focal values), got {c}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    points = []
    for i in range(count):
        start = sample_rng(seed, i).standard_normal(F.N)
        points.append(project_to_level(F, start, c, tols, index=i))
    return points


def unit_normal(F: FkmPolynomial, x: np.ndarray) -> np.ndarray:
    _, s = _spherical_gradient(F, x)
    norm = np.linalg.norm(s)
    if norm < REGULARITY_THRESHOLD:
        raise IrregularPoint("spherical gradient vanishes")
    return s / norm


def tangent_basis(x: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of {x, xi}^perp by Gram-Schmidt on e_1, e_2, ..."""
    N = x.shape[0]
    frame = [x / np.linalg.norm(x), xi]
    basis = []
    for i in range(N):
        if len(basis) == N - 2:
            break
        v = np.zeros(N)
        v[i] = 1.0
        for _ in range(2):  # second pass restores orthogonality lost to cancellation
            for u in frame + basis:
                v -= (u @ v) * u
        nv = np.linalg.norm(v)
        if nv > 1e-6:
            basis.append(v / nv)
    return np.column_stack(basis)


def shape_operator(F: FkmPolynomial, p: SurfacePoint) -> tuple[np.ndarray, np.ndarray]:
    """Shape operator A = -(D xi)^T of M at p, in an orthonormal tangent basis.

    For tangent v, D_v s = P_T(Hess F v) - <grad F, x> v with s the spherical
    gradient, so A = -(B^T Hess B - <grad F, x> I) / |s|.  Returns (A, B).
    """
    x = p.x
    g, s = _spherical_gradient(F, x)
    norm = np.linalg.norm(s)
    if norm < REGULARITY_THRESHOLD:
        raise IrregularPoint("spherical gradient vanishes")
    B = tangent_basis(x, s / norm)
    A = -(B.T @ F.hessian(x) @ B - (g @ x) * np.eye(B.shape[1])) / norm
    return 0.5 * (A + A.T), B


@dataclass(frozen=True)
class Cluster:
    value: float
    multiplicity: int


@dataclass(frozen=True)
class CurvatureSpectrum:
    eigenvalues: tuple[float, ...]
    clusters: tuple[Cluster, ...]
    theta: float

    @property
    def g(self) -> int:
        return len(self.clusters)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(c.multiplicity for c in self.clusters)

    def angles(self) -> np.ndarray:
        return arccot(np.array([c.value for c in self.clusters]))


def arccot(v):
    """Inverse cotangent with values in (0, pi)."""
    return np.pi / 2 - np.arctan(v)


def cluster_eigenvalues(eigenvalues, cluster_tol: float) -> list[list[float]]:
    ev = np.sort(np.asarray(eigenvalues, dtype=float))
    groups = [[ev[0]]]
    for prev, cur in zip(ev[:-1], ev[1:]):
        gap = cur - prev
        if cluster_tol <= gap <= 10 * cluster_tol:
            raise AmbiguousClustering(f"eigenvalue gap {gap:.3e} between {cluster_tol:g} and {10 * cluster_tol:g}")
        if gap > 10 * cluster_tol:
            groups.append([cur])
        else:
            groups[-1].append(cur)
    for grp in groups:
        if grp[-1] - grp[0] >= cluster_tol:
            raise AmbiguousClustering(f"cluster spread {grp[-1] - grp[0]:.3e} >= {cluster_tol:g}")
    return groups


def principal_curvatures(F: FkmPolynomial, p: SurfacePoint, cluster_tol: float = 1e-5) -> CurvatureSpectrum:
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be > 0")
    A, _ = shape_operator(F, p)
    ev = np.linalg.eigvalsh(A)
    groups = cluster_eigenvalues(ev, cluster_tol)
    # largest curvature first == ascending arccot
    clusters = tuple(Cluster(float(np.mean(grp)), len(grp)) for grp in reversed(groups))
    theta = float(arccot(ev.max()))
    return CurvatureSpectrum(eigenvalues=tuple(float(v) for v in ev), clusters=clusters, theta=theta)


def progression_defect(spectrum: CurvatureSpectrum) -> float:
    """Max deviation of consecutive arccot gaps from pi/g (0 for g = 1)."""
    a = spectrum.angles()
    if len(a) < 2:
        return 0.0
    return float(np.max(np.abs(np.diff(a) - np.pi / len(a))))


@dataclass
class CurvatureReport:
    n: int
    level: float
    g: int
    multiplicities: list[int]
    values: list[float]
    theta: float
    H: float
    A2: float
    spread: float
    progression_defect: float
    samples: int
    seed: int

    @property
    def scal(self) -> float:
        """Gauss equation for a hypersurface of the unit sphere."""
        return self.n * (self.n - 1) + self.H**2 - self.A2

    @property
    def scal_paper(self) -> int:
        return self.n**2 - 4 * self.n

    @property
    def scal_delta(self) -> float:
        return self.scal - self.scal_paper

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "level": self.level,
            "g": self.g,
            "multiplicities": list(self.multiplicities),
            "values": list(self.values),
            "theta": self.theta,
            "H": self.H,
            "A2": self.A2,
            "scal": self.scal,
            "scal_paper": self.scal_paper,
            "scal_delta": self.scal_delta,
            "spread": self.spread,
            "progression_defect": self.progression_defect,
            "samples": self.samples,
            "seed": self.seed,
        }


def curvature_report(F: FkmPolynomial, c: float, count: int, seed: int, tols: Tolerances = Tolerances()) -> CurvatureReport:
    points = sample_level_set(F, c, count, seed, tols)
    spectra = [principal_curvatures(F, p, tols.cluster) for p in points]
    mults = spectra[0].multiplicities
    for i, sp in enumerate(spectra):
        if sp.multiplicities != mults:
            raise InconsistentSpectrum(f"sample {i} has multiplicities {sp.multiplicities}, sample 0 has {mults}")
    vals = np.array([[cl.value for cl in sp.clusters] for sp in spectra])
    mean = vals.mean(axis=0)
    spread = float(np.abs(vals - mean).max())
    m = np.array(mults, dtype=float)
    return CurvatureReport(
        n=F.n,
        level=float(c),
        g=len(mults),
        multiplicities=list(mults),
        values=[float(v) for v in mean],
        theta=float(np.mean([sp.theta for sp in spectra])),
        H=float(m @ mean),
        A2=float(m @ mean**2),
        spread=spread,
        progression_defect=max(progression_defect(sp) for sp in spectra),
        samples=count,
        seed=seed,
    )


def theta_range_ok(spectrum: CurvatureSpectrum) -> bool:
    return 0.0 < spectrum.theta < math.pi / spectrum.g
