"""Fundamental group, integral homology, and rational type of the homotopy fiber F.

F is the fiber of E -> DE for a double mapping cylinder whose two maps have
sphere fibers S^{m_+}, S^{m_-}.  Everything here is table lookup plus
Poincare-series arithmetic on truncated integer series.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Union


class FundamentalGroup(str, enum.Enum):
    Trivial = "1"
    Z = "Z"
    ZxZ = "ZxZ"
    ZxZ2 = "ZxZ2"
    Q8 = "Q8"


@dataclass(frozen=True)
class FiberConfig:
    m_plus: int
    m_minus: int
    twist_plus: bool = False
    twist_minus: bool = False

    def __post_init__(self):
        if self.m_minus < 1:
            raise ValueError(f"m_minus must be >= 1, got {self.m_minus}")
        if self.m_plus < self.m_minus:
            raise ValueError(f"expected m_plus >= m_minus, got ({self.m_plus}, {self.m_minus})")
        # a twist needs the other fiber to be a circle
        if self.twist_plus and self.m_minus != 1:
            raise ValueError("phi_+ can only be twisted when m_minus == 1")
        if self.twist_minus and self.m_plus != 1:
            raise ValueError("phi_- can only be twisted when m_plus == 1")

    @property
    def twists(self) -> int:
        return int(self.twist_plus) + int(self.twist_minus)


def legal_configs(m_plus: int, m_minus: int) -> list[FiberConfig]:
    out = []
    for tp in (False, True):
        for tm in (False, True):
            if (tp and m_minus != 1) or (tm and m_plus != 1):
                continue
            out.append(FiberConfig(m_plus, m_minus, tp, tm))
    return out


def fundamental_group(cfg: FiberConfig) -> FundamentalGroup:
    if cfg.m_minus > 1:
        return FundamentalGroup.Trivial
    if cfg.m_plus > 1:
        return FundamentalGroup.Z
    return (FundamentalGroup.ZxZ, FundamentalGroup.ZxZ2, FundamentalGroup.Q8)[cfg.twists]


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z_{q}" for q in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


ZERO = AbelianGroup(0)
Z1 = AbelianGroup(1)
Z2 = AbelianGroup(2)


def row_modulus(cfg: FiberConfig) -> int:
    """Period in i of the homology row that applies to ``cfg``."""
    a, b = cfg.m_plus, cfg.m_minus
    if cfg.twists == 2:
        return 3
    if a == b == 1 and cfg.twists == 1:
        return 4
    if cfg.twists == 1:
        return 2 * a + 2
    if a == b:
        return a
    return a + b


def fiber_homology(cfg: FiberConfig, i: int) -> AbelianGroup:
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    if i == 0:
        return Z1
    a, b = cfg.m_plus, cfg.m_minus
    p = row_modulus(cfg)
    r = i % p
    if cfg.twists == 2:
        return {0: Z2, 1: AbelianGroup(0, (2, 2)), 2: ZERO}[r]
    if a == b == 1 and cfg.twists == 1:
        return {0: Z2, 1: AbelianGroup(1, (2,)), 2: AbelianGroup(0, (2,)), 3: Z1}[r]
    if cfg.twists == 1:
        # m_+ > m_- = 1 with phi_+ twisted
        if r == 0:
            return Z2
        if r in (1, p - 1):
            return Z1
        if r in (a % p, (a + 1) % p):
            return AbelianGroup(0, (2,))
        return ZERO
    if a == b:
        return Z2 if r == 0 else ZERO
    if r == 0:
        return Z2
    if r in (a % p, b % p):
        return Z1
    return ZERO


# ---------------------------------------------------------------------------
# rational types


@dataclass(frozen=True)
class Sphere:
    k: int

    def __str__(self):
        return f"S^{self.k}"


@dataclass(frozen=True)
class LoopSphere:
    k: int

    def __str__(self):
        return f"Loop(S^{self.k})"


@dataclass(frozen=True)
class AmSpace:
    """Rational space with cohomology Q[x, y]/(x^m, x^2 + y^2) (x^2 + 3y^2 for m = 3, 6), |x| = |y| = k."""

    m: int
    k: int

    def __str__(self):
        return f"A_{self.m}({self.k})"


@dataclass(frozen=True)
class NamedQuotient:
    tag: str

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class Product:
    factors: tuple[Atom, ...]

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


Atom = Union[Sphere, LoopSphere, AmSpace, NamedQuotient]
Expr = Union[Atom, Product]


def prod(*factors: Expr) -> Product:
    return Product(tuple(factors))


# rational models of the homogeneous spaces appearing in the table
QUOTIENT_MODELS: dict[str, Expr] = {
    "SU(3)/T^2": AmSpace(3, 2),
    "Sp(2)/T^2": AmSpace(4, 2),
    "G2/T^2": AmSpace(6, 2),
    "Sp(3)/Sp(1)^3": AmSpace(3, 4),
    "F4/Spin(8)": AmSpace(3, 8),
    # finite quotients of compact groups share the rational cohomology of the group
    "SO(3)/(Z2+Z2)": Sphere(3),
    "SO(4)/(Z2+Z2)": prod(Sphere(3), Sphere(3)),
    "(SO(2)xSO(3))/Z2": prod(Sphere(1), Sphere(3)),
}


def rational_type(cfg: FiberConfig, homotopy_sphere_context: bool = False) -> list[Product]:
    """All rational homotopy types the table lists for ``cfg``.

    Alternatives are returned in table order without duplicates.  With
    ``homotopy_sphere_context`` the A_4(4) and A_6(4) entries are dropped.
    """
    a, b = cfg.m_plus, cfg.m_minus
    alts: list[Product] = []
    if a == b == 1 and cfg.twists == 2:
        alts = [
            prod(NamedQuotient("SO(3)/(Z2+Z2)"), LoopSphere(4)),
            prod(NamedQuotient("SO(4)/(Z2+Z2)"), LoopSphere(7)),
        ]
    elif a == b == 1 and cfg.twists == 1:
        alts = [prod(NamedQuotient("(SO(2)xSO(3))/Z2"), LoopSphere(5))]
    elif cfg.twists == 1:
        # the table lists the twisted row for odd m_+; even m_+ reuses it (same ranks)
        alts = [prod(Sphere(1), Sphere(2 * a + 1), LoopSphere(2 * a + 3))]
    elif b == 1 and a > 1:
        alts = [prod(Sphere(1), Sphere(a), LoopSphere(a + 2))]
        if a % 2 == 0:
            alts.append(prod(Sphere(1), Sphere(a), Sphere(a + 1), LoopSphere(2 * a + 3)))
    elif a > b:
        alts = [prod(Sphere(a), Sphere(b), LoopSphere(a + b + 1))]
    else:
        alts = [
            prod(Sphere(a), Sphere(a), LoopSphere(2 * a + 1)),
            prod(Sphere(a), LoopSphere(a + 1)),
        ]
        if a == 2:
            alts += [
                prod(NamedQuotient("SU(3)/T^2"), LoopSphere(7)),
                prod(NamedQuotient("Sp(2)/T^2"), LoopSphere(9)),
                prod(NamedQuotient("G2/T^2"), LoopSphere(13)),
            ]
        elif a == 4:
            alts.append(prod(NamedQuotient("Sp(3)/Sp(1)^3"), LoopSphere(13)))
            if not homotopy_sphere_context:
                alts += [prod(AmSpace(4, 4), LoopSphere(17)), prod(AmSpace(6, 4), LoopSphere(25))]
        elif a == 8:
            alts.append(prod(NamedQuotient("F4/Spin(8)"), LoopSphere(25)))
    out: list[Product] = []
    for alt in alts:
        if alt not in out:
            out.append(alt)
    return out


# ---------------------------------------------------------------------------
# Poincare series, truncated at a maximal degree


def _mul(p: list[int], q: list[int], d: int) -> list[int]:
    out = [0] * (d + 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q[: d + 1 - i]):
                out[i + j] += x * y
    return out


def _monomials(degrees_coeffs: dict[int, int], d: int) -> list[int]:
    out = [0] * (d + 1)
    for deg, c in degrees_coeffs.items():
        if deg <= d:
            out[deg] += c
    return out


def _geometric(step: int, d: int) -> list[int]:
    """1 / (1 - t^step)."""
    return [1 if i % step == 0 else 0 for i in range(d + 1)]


def _atom_series(atom: Expr, d: int) -> list[int]:
    if isinstance(atom, Product):
        return reduce(lambda s, f: _mul(s, _atom_series(f, d), d), atom.factors, _monomials({0: 1}, d))
    if isinstance(atom, Sphere):
        return _monomials({0: 1, atom.k: 1}, d)
    if isinstance(atom, LoopSphere):
        k = atom.k
        if k < 2:
            raise ValueError(f"Loop(S^{k}) is not simply connected; unsupported")
        if k % 2 == 1:
            return _geometric(k - 1, d)
        # Loop(S^2j) ~_Q S^(2j-1) x Loop(S^(4j-1))
        return _mul(_monomials({0: 1, k - 1: 1}, d), _geometric(2 * k - 2, d), d)
    if isinstance(atom, AmSpace):
        # basis 1, {x^i, x^(i-1) y} for 1 <= i < m, x^(m-1) y
        coeffs = {0: 1, atom.m * atom.k: 1}
        for i in range(1, atom.m):
            coeffs[i * atom.k] = coeffs.get(i * atom.k, 0) + 2
        if atom.m == 1:
            coeffs = {0: 1, atom.k: 1}
        return _monomials(coeffs, d)
    if isinstance(atom, NamedQuotient):
        try:
            model = QUOTIENT_MODELS[atom.tag]
        except KeyError:
            raise ValueError(f"no rational model for {atom.tag!r}") from None
        return _atom_series(model, d)
    raise TypeError(f"not a rational type: {atom!r}")


def poincare_series(rt: Expr, max_degree: int) -> list[int]:
    """Rational Betti numbers b_0..b_max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    return _atom_series(rt, max_degree)


def table_consistency(cfg: FiberConfig, max_degree: int = 60, homotopy_sphere_context: bool = False) -> list[str]:
    """Mismatches between homology ranks and every listed rational type; empty when consistent."""
    ranks = [fiber_homology(cfg, i).rank for i in range(max_degree + 1)]
    problems = []
    for rt in rational_type(cfg, homotopy_sphere_context):
        series = poincare_series(rt, max_degree)
        bad = [i for i in range(max_degree + 1) if series[i] != ranks[i]]
        if bad:
            problems.append(f"{rt}: rank mismatch in degrees {bad[:5]}")
    return problems
