"""Symmetric Clifford systems as exact signed-permutation integer matrices.

A Clifford system on R^(2l) is a tuple P_0, ..., P_m of symmetric matrices
with P_i^2 = I and P_i P_j = -P_j P_i.  Here l = k * delta(m) and every
matrix is a tensor product of the 2x2 blocks below, so all entries lie in
{-1, 0, 1} and every relation can be checked with integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from isopar.arith import delta

BLOCKS = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.int64),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.int64),
    "X": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "J": np.array([[0, -1], [1, 0]], dtype=np.int64),
}

# Maximal anticommuting families of skew complex structures on R^2, R^4, R^8,
# written as tensor words.  An odd number of J factors makes a word skew with
# square -I; two words anticommute iff they differ in an odd number of
# positions where both letters are non-identity.
BASE_WORDS = {
    1: (),
    2: ("J",),
    4: ("IJ", "JX", "JZ"),
    8: ("IIJ", "IJX", "XJZ", "ZJZ", "JIZ", "JXX", "JZX"),
}


class CliffordConstructionError(RuntimeError):
    """The built matrices violate an invariant that holds by construction."""


def word_matrix(word: str) -> np.ndarray:
    if not word:
        return np.ones((1, 1), dtype=np.int64)
    return reduce(np.kron, (BLOCKS[c] for c in word))


def _periodicity_block() -> tuple[list[np.ndarray], np.ndarray]:
    """Eight anticommuting complex structures Q_j on R^16 and S = Q_1...Q_8.

    S is a symmetric involution anticommuting with every Q_j.
    """
    octonion = [word_matrix(w) for w in BASE_WORDS[8]]
    Z, J = BLOCKS["Z"], BLOCKS["J"]
    qs = [np.kron(o, Z) for o in octonion] + [np.kron(np.eye(8, dtype=np.int64), J)]
    s = reduce(np.matmul, qs)
    return qs, s


def hurwitz_radon_family(count: int, dim: int) -> list[np.ndarray]:
    """``count`` pairwise anticommuting skew orthogonal matrices E with E^2 = -I.

    ``dim`` must be one of 1, 2, 4, 8 times a power of 16 large enough to carry
    the family (``count + 1 <= radon_hurwitz(dim)``).
    """
    if dim in BASE_WORDS:
        words = BASE_WORDS[dim]
        if count > len(words):
            raise ValueError(f"R^{dim} carries at most {len(words)} such matrices, asked for {count}")
        return [word_matrix(w) for w in words[:count]]
    if dim % 16:
        raise ValueError(f"dimension {dim} is not 1, 2, 4 or 8 times a power of 16")
    inner = hurwitz_radon_family(max(count - 8, 0), dim // 16)
    qs, s = _periodicity_block()
    family = [np.kron(a, s) for a in inner]
    family += [np.kron(np.eye(dim // 16, dtype=np.int64), q) for q in qs]
    return family[:count]


@dataclass(frozen=True)
class CliffordSystem:
    m: int
    k: int
    dim: int
    matrices: tuple[np.ndarray, ...] = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "dim": self.dim,
            "matrices": [p.tolist() for p in self.matrices],
        }

    @classmethod
    def from_dict(cls, data: dict) -> CliffordSystem:
        mats = tuple(np.array(p, dtype=np.int64) for p in data["matrices"])
        return cls(m=int(data["m"]), k=int(data["k"]), dim=int(data["dim"]), matrices=mats)

    def replace_matrix(self, index: int, matrix: np.ndarray) -> CliffordSystem:
        mats = list(self.matrices)
        mats[index] = np.asarray(matrix, dtype=np.int64)
        return CliffordSystem(self.m, self.k, self.dim, tuple(mats))


def build_clifford_system(m: int, k: int) -> CliffordSystem:
    """Clifford system P_0..P_m on R^(2 k delta(m)).

    With R^(2l) = R^l + R^l written as pairs (u, v):
    P_0 = (u, -v), P_1 = (v, u), P_{1+j} = (E_j v, -E_j u).
    """
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    d = delta(m)
    half = k * d
    eye_k = np.eye(k, dtype=np.int64)
    es = [np.kron(eye_k, e) for e in hurwitz_radon_family(m - 1, d)]

    eye = np.eye(half, dtype=np.int64)
    zero = np.zeros((half, half), dtype=np.int64)
    mats = [np.block([[eye, zero], [zero, -eye]]), np.block([[zero, eye], [eye, zero]])]
    mats += [np.block([[zero, e], [-e, zero]]) for e in es]

    system = CliffordSystem(m=m, k=k, dim=2 * half, matrices=tuple(mats))
    report = verify_clifford_system(system)
    if not report.passed:
        raise CliffordConstructionError(f"build_clifford_system({m}, {k}): {report.violations[:3]}")
    return system


@dataclass
class CliffordReport:
    passed: bool
    violations: list[str]


def _is_signed_permutation(p: np.ndarray) -> bool:
    if not np.isin(p, (-1, 0, 1)).all():
        return False
    nz = p != 0
    return bool((nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all())


def _as_signed_perm(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(perm, sign) with p[i, perm[i]] = sign[i]."""
    perm = np.argmax(p != 0, axis=1)
    return perm, p[np.arange(p.shape[0]), perm]


def verify_clifford_system(system: CliffordSystem) -> CliffordReport:
    """Check every Clifford relation exactly; never raises on bad input."""
    violations = []
    mats = [np.asarray(p) for p in system.matrices]
    shapes = {p.shape for p in mats}
    if len(shapes) != 1 or any(len(s) != 2 or s[0] != s[1] for s in shapes):
        return CliffordReport(False, [f"matrices not square of equal size: {sorted(shapes)}"])
    size = mats[0].shape[0]
    if size != system.dim:
        violations.append(f"matrix size {size} != dim {system.dim}")
    if len(mats) != system.m + 1:
        violations.append(f"expected {system.m + 1} matrices, got {len(mats)}")
    if not all(np.issubdtype(p.dtype, np.integer) for p in mats):
        violations.append("matrices are not integer")
        mats = [np.rint(p).astype(np.int64) for p in mats]

    signed = [_is_signed_permutation(p) for p in mats]
    for i, (p, ok) in enumerate(zip(mats, signed)):
        if not ok:
            violations.append(f"P_{i} not signed permutation")
        if not np.array_equal(p, p.T):
            violations.append(f"P_{i} not symmetric")
        if int(np.trace(p)) != 0:
            violations.append(f"trace(P_{i}) != 0")

    if all(signed):
        # exact products of signed permutations by index arithmetic
        sp = [_as_signed_perm(p) for p in mats]
        ident = np.arange(size)

        def compose(a, b):
            (pa, sa), (pb, sb) = a, b
            return pb[pa], sa * sb[pa]

        for i, a in enumerate(sp):
            perm, sign = compose(a, a)
            if not (np.array_equal(perm, ident) and (sign == 1).all()):
                violations.append(f"P_{i}^2 != I")
        for i in range(len(sp)):
            for j in range(i + 1, len(sp)):
                (p1, s1), (p2, s2) = compose(sp[i], sp[j]), compose(sp[j], sp[i])
                if not (np.array_equal(p1, p2) and (s1 == -s2).all()):
                    violations.append(f"P_{i}P_{j}+P_{j}P_{i} != 0")
        return CliffordReport(passed=not violations, violations=violations)

    eye = np.eye(size, dtype=np.int64)
    for i, p in enumerate(mats):
        if not np.array_equal(p @ p, eye):
            violations.append(f"P_{i}^2 != I")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if (mats[i] @ mats[j] + mats[j] @ mats[i]).any():
                violations.append(f"P_{i}P_{j}+P_{j}P_{i} != 0")
    return CliffordReport(passed=not violations, violations=violations)
