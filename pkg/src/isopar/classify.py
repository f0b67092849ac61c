"""Necessary conditions on dimension triples (n; m_+, m_-) of dual pairs.

``theorem_a`` decides which of the admissible patterns a triple matches,
``stolz`` applies the delta-divisibility criterion for the ratio-two case,
and ``enumerate_fkm`` lists the triples realized by Clifford-system
hypersurfaces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from isopar.arith import delta, delta_divides


class Case(str, enum.Enum):
    EqualN = "EqualN"
    OneThird = "OneThird"
    OneQuarter = "OneQuarter"
    OneSixth = "OneSixth"
    RatioOne = "RatioOne"
    RatioTwo = "RatioTwo"


# number of distinct principal curvatures implied by each pattern
CASE_G = {
    Case.EqualN: 1,
    Case.RatioOne: 2,
    Case.OneThird: 3,
    Case.OneQuarter: 4,
    Case.RatioTwo: 4,
    Case.OneSixth: 6,
}


@dataclass(frozen=True)
class DimensionTriple:
    """n = dim of the hypersurface; m_plus, m_minus = dims of the normal spheres."""

    n: int
    m_plus: int
    m_minus: int

    def __post_init__(self):
        for name in ("n", "m_plus", "m_minus"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.m_plus > self.n or self.m_minus > self.n:
            raise ValueError(f"multiplicities must not exceed n: {self}")

    def swapped(self) -> DimensionTriple:
        return DimensionTriple(self.n, self.m_minus, self.m_plus)


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    cases: frozenset[Case]
    g: int | None

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "cases": sorted(c.value for c in self.cases),
            "g": self.g,
        }


class StolzVariant(str, enum.Enum):
    HomotopySphere = "HomotopySphere"
    Dupin = "Dupin"


class StolzReason(str, enum.Enum):
    ExceptionalPair = "ExceptionalPair"
    Divisibility = "Divisibility"
    Fails = "Fails"


@dataclass(frozen=True)
class StolzVerdict:
    admissible: bool
    reason: StolzReason

    def to_dict(self) -> dict:
        return {"admissible": self.admissible, "reason": self.reason.value}


# (m_plus, m_minus) pairs exempt from the divisibility condition
EXCEPTIONAL_PAIRS = {
    StolzVariant.HomotopySphere: frozenset({(5, 4)}),
    StolzVariant.Dupin: frozenset({(2, 2), (5, 4)}),
}


def theorem_a(triple: DimensionTriple) -> Verdict:
    n, a, b = triple.n, triple.m_plus, triple.m_minus
    cases = set()
    if a == b:
        m = a
        if m == n:
            cases.add(Case.EqualN)
        if 3 * m == n and m in (1, 2, 4, 8):
            cases.add(Case.OneThird)
        if 4 * m == n and m in (1, 2):
            cases.add(Case.OneQuarter)
        if 6 * m == n and m in (1, 2):
            cases.add(Case.OneSixth)
    total = a + b
    if n == total:
        cases.add(Case.RatioOne)
    if n == 2 * total and (min(a, b) == 1 or total % 2 == 1):
        cases.add(Case.RatioTwo)

    gs = {CASE_G[c] for c in cases}
    # every pattern fixes g = 2n / (m_+ + m_-), so overlapping tags agree
    assert len(gs) <= 1, (triple, cases)
    return Verdict(admissible=bool(cases), cases=frozenset(cases), g=gs.pop() if gs else None)


def munzner_g(triple: DimensionTriple) -> int | None:
    """g with 2n = g (m_+ + m_-), or None; odd g requires equal multiplicities."""
    total = triple.m_plus + triple.m_minus
    g, rem = divmod(2 * triple.n, total)
    if rem or g < 1:
        return None
    if g % 2 == 1 and triple.m_plus != triple.m_minus:
        return None
    return g


def stolz(m_plus: int, m_minus: int, variant: StolzVariant | str) -> StolzVerdict:
    """Divisibility criterion for the ratio n = 2 (m_+ + m_-)."""
    variant = StolzVariant(variant)
    if variant is StolzVariant.HomotopySphere:
        if m_minus < 2:
            raise ValueError(f"HomotopySphere variant needs min(m_+, m_-) >= 2, got m_minus={m_minus}")
        if not m_minus < m_plus:
            raise ValueError(f"HomotopySphere variant needs m_minus < m_plus, got ({m_plus}, {m_minus})")
    else:
        if m_minus < 1:
            raise ValueError(f"Dupin variant needs m_minus >= 1, got {m_minus}")
        if m_minus > m_plus:
            raise ValueError(f"Dupin variant needs m_minus <= m_plus, got ({m_plus}, {m_minus})")

    if (m_plus, m_minus) in EXCEPTIONAL_PAIRS[variant]:
        return StolzVerdict(True, StolzReason.ExceptionalPair)
    if delta_divides(m_minus - 1, m_plus + m_minus + 1):
        return StolzVerdict(True, StolzReason.Divisibility)
    return StolzVerdict(False, StolzReason.Fails)


@dataclass(frozen=True, order=True)
class FkmEntry:
    n: int
    m: int
    k: int
    pair: tuple[int, int]  # (larger, smaller) multiplicity

    @property
    def triple(self) -> DimensionTriple:
        return DimensionTriple(self.n, *self.pair)


def enumerate_fkm(max_ambient_dim: int) -> list[FkmEntry]:
    """All Clifford-system triples whose ambient sphere S^(n+1) has n + 1 <= max_ambient_dim.

    With l = k delta(m) the hypersurface has n = 2l - 2 and multiplicities
    {m, l - m - 1}; both must be positive.
    """
    if max_ambient_dim < 4:
        raise ValueError(f"max_ambient_dim must be >= 4, got {max_ambient_dim}")
    out = []
    m = 1
    while 2 * delta(m) <= max_ambient_dim + 1 and 2 * m + 4 <= max_ambient_dim + 1:
        d = delta(m)
        k = 1
        while 2 * k * d <= max_ambient_dim + 1:
            ell = k * d
            other = ell - m - 1
            if other >= 1:
                out.append(FkmEntry(n=2 * ell - 2, m=m, k=k, pair=(max(m, other), min(m, other))))
            k += 1
        m += 1
    out.sort(key=lambda e: (e.n, e.pair, e.m, e.k))
    return out
