"""The quartic F(x) = <x,x>^2 - 2 sum_i <P_i x, x>^2 of a Clifford system."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from isopar.clifford import CliffordSystem


class DegenerateMultiplicity(ValueError):
    """The system gives n/2 - m < 1, so there is no isoparametric family."""


@dataclass(frozen=True)
class FkmPolynomial:
    system: CliffordSystem
    _stack: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m_minus < 1:
            raise DegenerateMultiplicity(
                f"Clifford system (m={self.system.m}, k={self.system.k}) on R^{self.N} "
                f"gives multiplicities ({self.m}, {self.m_minus}); both must be >= 1"
            )
        object.__setattr__(self, "_stack", np.stack([np.asarray(p, dtype=float) for p in self.system.matrices]))

    @property
    def N(self) -> int:
        return self.system.dim

    @property
    def n(self) -> int:
        return self.N - 2

    @property
    def m(self) -> int:
        return self.system.m

    # (m_+, m_-) := (m, n/2 - m); only the sign of the Laplacian depends on it
    @property
    def m_plus(self) -> int:
        return self.m

    @property
    def m_minus(self) -> int:
        return self.n // 2 - self.m

    @property
    def mult_pair(self) -> tuple[int, int]:
        return (max(self.m_plus, self.m_minus), min(self.m_plus, self.m_minus))

    @property
    def laplacian_constant(self) -> float:
        """c with Laplacian F(x) = c <x,x>."""
        return 8.0 * (self.m_minus - self.m_plus)

    def _check(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.N,):
            raise ValueError(f"expected a vector of length {self.N}, got shape {x.shape}")
        return x

    def eval(self, x) -> float:
        x = self._check(x)
        a = self._stack @ x @ x
        r2 = x @ x
        return float(r2 * r2 - 2.0 * a @ a)

    def grad(self, x) -> np.ndarray:
        x = self._check(x)
        px = self._stack @ x
        a = px @ x
        return 4.0 * (x @ x) * x - 8.0 * a @ px

    def hessian(self, x) -> np.ndarray:
        x = self._check(x)
        px = self._stack @ x
        a = px @ x
        h = 4.0 * ((x @ x) * np.eye(self.N) + 2.0 * np.outer(x, x))
        h -= 16.0 * px.T @ px
        h -= 8.0 * np.tensordot(a, self._stack, axes=1)
        return h

    def laplacian(self, x) -> float:
        return float(np.trace(self.hessian(x)))

    # vectorized forms over rows of X, used by the sampling verifiers
    def eval_many(self, X: np.ndarray) -> np.ndarray:
        A = np.einsum("ipq,sq,sp->si", self._stack, X, X)
        r2 = np.einsum("sp,sp->s", X, X)
        return r2**2 - 2.0 * np.einsum("si,si->s", A, A)

    def grad_many(self, X: np.ndarray) -> np.ndarray:
        PX = np.einsum("ipq,sq->sip", self._stack, X)
        A = np.einsum("sip,sp->si", PX, X)
        r2 = np.einsum("sp,sp->s", X, X)
        return 4.0 * r2[:, None] * X - 8.0 * np.einsum("si,sip->sp", A, PX)


@dataclass
class CartanMunznerReport:
    passed: bool
    samples: int
    seed: int
    tol: float
    grad_norm_residual: float
    laplacian_residual: float
    laplacian_constant: float
    laplacian_ratio_spread: float
    range_min: float
    range_max: float
    exact: bool = False
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _exact_check(F: FkmPolynomial, samples: int, rng: np.random.Generator) -> list[str]:
    """Integer-point identity test; all quantities are exact Python ints."""
    mats = [[[int(v) for v in row] for row in p] for p in F.system.matrices]
    N = F.N
    expected_lap = 8 * (F.m_minus - F.m_plus)
    failures = []
    for s in range(samples):
        x = [int(v) for v in rng.integers(-50, 51, size=N)]
        r2 = sum(v * v for v in x)
        px = [[sum(row[q] * x[q] for q in range(N)) for row in p] for p in mats]
        a = [sum(u * v for u, v in zip(pxi, x)) for pxi in px]
        grad = [4 * r2 * x[p] - 8 * sum(a[i] * px[i][p] for i in range(len(a))) for p in range(N)]
        if sum(g * g for g in grad) != 16 * r2**3:
            failures.append(f"exact |grad F|^2 != 16|x|^6 at sample {s}")
        # trace of the Hessian, term by term
        lap = 4 * (N * r2 + 2 * r2) - 8 * sum(
            2 * sum(v * v for v in px[i]) + a[i] * sum(mats[i][p][p] for p in range(N)) for i in range(len(a))
        )
        if lap != expected_lap * r2:
            failures.append(f"exact Laplacian != {expected_lap}|x|^2 at sample {s}")
    return failures


def verify_cartan_munzner(
    F: FkmPolynomial,
    sample_count: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
    range_samples: int = 10_000,
    exact: bool = False,
) -> CartanMunznerReport:
    """Randomized check of |grad F|^2 = 16<x,x>^3, Lap F = 8(m_- - m_+)<x,x>,
    and F(S^(N-1)) in [-1, 1].

    Residuals are relative: the gradient identity against 16<x,x>^3, the
    Laplacian against 4(N+2)<x,x> (the size of the Lap <x,x>^2 term, which
    stays nonzero when the expected constant is 0).  ``exact=True`` adds an
    integer-point check for N <= 16.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be > 0")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((sample_count, F.N)) * rng.uniform(0.5, 2.0, size=(sample_count, 1))
    r2 = np.einsum("sp,sp->s", X, X)

    G = F.grad_many(X)
    grad_res = np.abs(np.einsum("sp,sp->s", G, G) - 16.0 * r2**3) / (16.0 * r2**3)

    laps = np.array([F.laplacian(x) for x in X])
    const = F.laplacian_constant
    lap_res = np.abs(laps - const * r2) / (4.0 * (F.N + 2) * r2)
    ratios = laps / r2
    ratio_spread = float(ratios.max() - ratios.min())

    U = rng.standard_normal((range_samples, F.N))
    U /= np.linalg.norm(U, axis=1, keepdims=True)
    vals = F.eval_many(U)

    failures = []
    if grad_res.max() > tol:
        failures.append(f"|grad F|^2 residual {grad_res.max():.3e} > {tol:.1e}")
    if lap_res.max() > tol:
        failures.append(f"Laplacian residual {lap_res.max():.3e} > {tol:.1e}")
    if vals.min() < -1 - tol or vals.max() > 1 + tol:
        failures.append(f"F on unit sphere spans [{vals.min():.6g}, {vals.max():.6g}]")
    if exact:
        if F.N > 16:
            raise ValueError("exact mode is limited to N <= 16")
        failures += _exact_check(F, min(sample_count, 50), rng)

    return CartanMunznerReport(
        passed=not failures,
        samples=sample_count,
        seed=seed,
        tol=tol,
        grad_norm_residual=float(grad_res.max()),
        laplacian_residual=float(lap_res.max()),
        laplacian_constant=const,
        laplacian_ratio_spread=ratio_spread,
        range_min=float(vals.min()),
        range_max=float(vals.max()),
        exact=exact,
        failures=failures,
    )
