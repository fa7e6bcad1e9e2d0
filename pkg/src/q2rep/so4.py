"""so(4) = sl(2) + sl(2) in the tensor representation D^{(p-1)/2} x D^{1/2}.

The J family acts on the spin-(p-1)/2 factor, the K family on the spin-1/2
factor.  Matrix entries are square roots of rationals with assorted
radicands, which do not all live in Q[sqrt(p)]; they are kept exact in a
small multi-radical layer: finite Q-linear combinations of sqrt(r) over
squarefree positive integers r.  Every identity checked here then reduces
to integer arithmetic.

Tensor basis ordering: m descending from (p-1)/2 to -(p-1)/2 in integer
steps, and within each m the spin-1/2 label mu = +1/2 before mu = -1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .algebra import (
    B_MINUS,
    B_PLUS,
    E00_0,
    E00_1,
    E11_0,
    E11_1,
    F_MINUS,
    F_PLUS,
    GeneratorId,
)
from .linalg import Matrix
from .rep import Basis, gram_matrix, rep_matrix
from .scalars import ExtScalar


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = square * squarefree; returns (sqrt(square), squarefree)."""
    if n <= 0:
        raise ValueError("positive integers only")
    outer, inner = 1, 1
    d = 2
    while d * d <= n:
        exp = 0
        while n % d == 0:
            n //= d
            exp += 1
        outer *= d ** (exp // 2)
        if exp % 2:
            inner *= d
        d += 1
    inner *= n
    return outer, inner


class Radical:
    """A finite Q-linear combination of sqrt(r) for squarefree integers r."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None) -> None:
        clean = {}
        for r, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[r] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Radical is immutable")

    @classmethod
    def rational(cls, value: Fraction | int) -> Radical:
        return cls({1: Fraction(value)})

    @classmethod
    def sqrt(cls, value: Fraction | int) -> Radical:
        """Exact sqrt of a nonnegative rational: sqrt(a/b) = sqrt(ab)/b."""
        value = Fraction(value)
        if value < 0:
            raise ValueError("negative radicand")
        if value == 0:
            return cls({})
        outer, inner = _squarefree_split(value.numerator * value.denominator)
        return cls({inner: Fraction(outer, value.denominator)})

    @classmethod
    def from_ext(cls, x: ExtScalar) -> Radical:
        """Embed a + b*s with s -> +sqrt(p), splitting off square factors."""
        out = {1: x.rat}
        if x.irr:
            outer, inner = _squarefree_split(x.p)
            out[inner] = out.get(inner, Fraction(0)) + x.irr * outer
        return cls(out)

    def __add__(self, other: Radical) -> Radical:
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, Fraction(0)) + c
        return Radical(out)

    def __neg__(self) -> Radical:
        return Radical({r: -c for r, c in self.terms.items()})

    def __sub__(self, other: Radical) -> Radical:
        return self + (-other)

    def __mul__(self, other: object) -> Radical:
        if isinstance(other, (int, Fraction)):
            return Radical({r: c * other for r, c in self.terms.items()})
        if not isinstance(other, Radical):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                # sqrt(r1) sqrt(r2) = g sqrt(m) with g = gcd, m squarefree
                outer, inner = _squarefree_split(r1 * r2)
                out[inner] = out.get(inner, Fraction(0)) + c1 * c2 * outer
        return Radical(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Radical.rational(other)
        if not isinstance(other, Radical):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_rational(self) -> bool:
        return set(self.terms) <= {1}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.terms.get(1, Fraction(0))

    def to_float(self) -> float:
        import math

        return float(sum(float(c) * math.sqrt(r) for r, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for r, c in sorted(self.terms.items()):
            parts.append(str(c) if r == 1 else f"{c}*sqrt({r})")
        return " + ".join(parts)


RAD_ZERO = Radical({})
RAD_ONE = Radical.rational(1)


@dataclass(frozen=True)
class So4Generator:
    family: str  # "J" or "K"
    component: str  # "0", "+", "-"

    def __post_init__(self) -> None:
        if self.family not in ("J", "K") or self.component not in ("0", "+", "-"):
            raise ValueError(f"invalid so(4) generator {self.family}{self.component}")


J0 = So4Generator("J", "0")
JP = So4Generator("J", "+")
JM = So4Generator("J", "-")
K0 = So4Generator("K", "0")
KP = So4Generator("K", "+")
KM = So4Generator("K", "-")
SO4_GENERATORS = (J0, JP, JM, K0, KP, KM)


def _tensor_index(i_m: int, i_mu: int, p: int) -> int:
    # i_m = 0..p-1 counts m downward from (p-1)/2; i_mu = 0 for +1/2, 1 for -1/2
    return 2 * i_m + i_mu


def _m_value(i_m: int, p: int) -> Fraction:
    return Fraction(p - 1, 2) - i_m


@lru_cache(maxsize=None)
def so4_matrix(g: So4Generator, p: int) -> Matrix:
    """Exact matrix of a J/K generator in the tensor basis."""
    n = 2 * p
    rows = [[RAD_ZERO] * n for _ in range(n)]
    j = Fraction(p - 1, 2)
    for i_m in range(p):
        m = _m_value(i_m, p)
        for i_mu in range(2):
            mu = Fraction(1, 2) if i_mu == 0 else Fraction(-1, 2)
            col = _tensor_index(i_m, i_mu, p)
            if g is J0:
                rows[col][col] = Radical.rational(m)
            elif g is K0:
                rows[col][col] = Radical.rational(mu)
            elif g in (JP, JM):
                sign = 1 if g is JP else -1
                coeff = (j - sign * m) * (j + sign * m + 1)
                target_im = i_m - sign  # raising m means moving up the ordering
                if coeff > 0 and 0 <= target_im < p:
                    rows[_tensor_index(target_im, i_mu, p)][col] = Radical.sqrt(coeff)
            else:
                sign = 1 if g is KP else -1
                coeff = (Fraction(1, 2) - sign * mu) * (Fraction(1, 2) + sign * mu + 1)
                target_imu = i_mu - sign
                if coeff > 0 and 0 <= target_imu < 2:
                    rows[_tensor_index(i_m, target_imu, p)][col] = Radical.sqrt(coeff)
    return linalg.freeze(rows)


def rad_identity(n: int) -> Matrix:
    return linalg.identity(n, RAD_ONE, RAD_ZERO)


def rad_scale(c: Fraction | Radical, a: Matrix) -> Matrix:
    c = c if isinstance(c, Radical) else Radical.rational(c)
    return linalg.scale(c, a)


def ext_to_radical_matrix(a: Matrix) -> Matrix:
    return tuple(tuple(Radical.from_ext(x) for x in row) for row in a)


@lru_cache(maxsize=None)
def tensor_to_lambda_chi(p: int) -> Matrix:
    """Columns express Lam_0..Lam_p, chi_1..chi_{p-1} in tensor coordinates."""
    n = 2 * p
    cols: list[list[Radical]] = []
    pf = factorial(p)
    for k in range(p + 1):
        col = [RAD_ZERO] * n
        norm = Fraction(factorial(p - k) * factorial(k), pf)
        if k < p:
            amp = Radical.sqrt(norm) * Radical.sqrt(Fraction(p - k, p))
            col[_tensor_index(k, 0, p)] = amp  # m = (p-1)/2 - k, mu = +1/2
        if k > 0:
            amp = Radical.sqrt(norm) * Radical.sqrt(Fraction(k, p))
            col[_tensor_index(k - 1, 1, p)] = amp  # m = (p+1)/2 - k, mu = -1/2
        cols.append(col)
    for l in range(1, p):
        col = [RAD_ZERO] * n
        norm = Fraction(factorial(p - l - 1) * factorial(l - 1), pf)
        col[_tensor_index(l, 0, p)] = Radical.sqrt(norm) * Radical.sqrt(Fraction(l, p))
        col[_tensor_index(l - 1, 1, p)] = -(
            Radical.sqrt(norm) * Radical.sqrt(Fraction(p - l, p))
        )
        cols.append(col)
    return linalg.transpose(linalg.freeze(cols))


def _q2_matrix(combo: dict[GeneratorId, Fraction | ExtScalar], p: int) -> Matrix:
    out = None
    for g, c in combo.items():
        term = linalg.scale(ExtScalar.of(c, p) if not isinstance(c, ExtScalar) else c,
                            rep_matrix(g, Basis.LAMBDA_CHI, p))
        out = term if out is None else linalg.add(out, term)
    return ext_to_radical_matrix(out)


def _so4_combo(parts: list[tuple[Fraction | Radical, list[So4Generator]]], p: int) -> Matrix:
    n = 2 * p
    out = linalg.scale(RAD_ZERO, rad_identity(n))
    for coeff, factors in parts:
        term = rad_identity(n)
        for g in factors:
            term = linalg.matmul(term, so4_matrix(g, p))
        out = linalg.add(out, rad_scale(coeff, term))
    return out


@dataclass(frozen=True)
class IdentificationLine:
    label: str
    passed: bool
    first_difference: tuple[int, int] | None


def identification_lines(p: int) -> list[IdentificationLine]:
    """Check the q(2) <-> so(4) identification as exact matrix identities.

    Both sides are mapped into the tensor basis: with T the column map from
    (Lam, chi) coordinates and M the q(2) matrix, the check is
    so4_expression @ T == T @ M, which avoids inverting T.
    """
    one = Fraction(1)
    two = Fraction(2)
    sp = Radical.sqrt(p)
    two_over_sp = Radical.sqrt(Fraction(4, p))
    half = Fraction(1, 2)

    lines: list[tuple[str, dict, list]] = [
        ("b- = J+ + K+", {B_MINUS: one}, [(one, [JP]), (one, [KP])]),
        ("b+ = J- + K-", {B_PLUS: one}, [(one, [JM]), (one, [KM])]),
        (
            "e00_0 - e11_0 = 2J0 + 2K0",
            {E00_0: one, E11_0: -one},
            [(two, [J0]), (two, [K0])],
        ),
        ("f- = sqrt(p) K+", {F_MINUS: one}, [(sp, [KP])]),
        ("f+ = sqrt(p) K-", {F_PLUS: one}, [(sp, [KM])]),
        (
            "e00_1 - e11_1 = 2 sqrt(p) K0",
            {E00_1: one, E11_1: -one},
            [(Radical.rational(2) * sp, [K0])],
        ),
        ("e00_0 + e11_0 = p", {E00_0: one, E11_0: one}, [(Fraction(p), [])]),
        (
            "e00_1 + e11_1 = (2/sqrt(p)) (2 J0 K0 + J+ K- + J- K+ + 1/2)",
            {E00_1: one, E11_1: one},
            [
                (two_over_sp * Fraction(2), [J0, K0]),
                (two_over_sp, [JP, KM]),
                (two_over_sp, [JM, KP]),
                (two_over_sp * half, []),
            ],
        ),
    ]
    T = tensor_to_lambda_chi(p)
    out = []
    for label, q2_combo, so4_parts in lines:
        lhs = linalg.matmul(T, _q2_matrix(q2_combo, p))
        rhs = linalg.matmul(_so4_combo(so4_parts, p), T)
        diff = linalg.first_difference(rhs, lhs)
        out.append(IdentificationLine(label, diff is None, diff))
    return out


def verify_identification(p: int) -> bool:
    return all(line.passed for line in identification_lines(p))


def so4_relation_report(p: int) -> list[tuple[str, bool]]:
    """The commutation relations that hold in this tensor representation.

    Note [K+, K-] closes onto 2 K0 here (the spin-1/2 matrices), matching
    {K+, K-} = I and K0^2 = I/4; all q(2) identification lines are
    consistent with that normalization.
    """
    n = 2 * p
    ident = rad_identity(n)

    def comm(a: Matrix, b: Matrix) -> Matrix:
        return linalg.sub(linalg.matmul(a, b), linalg.matmul(b, a))

    def anti(a: Matrix, b: Matrix) -> Matrix:
        return linalg.add(linalg.matmul(a, b), linalg.matmul(b, a))

    m = {g: so4_matrix(g, p) for g in SO4_GENERATORS}
    checks = [
        ("[J0, J+] = +J+", linalg.equal(comm(m[J0], m[JP]), m[JP])),
        ("[J0, J-] = -J-", linalg.equal(comm(m[J0], m[JM]), rad_scale(Fraction(-1), m[JM]))),
        ("[J+, J-] = 2 J0", linalg.equal(comm(m[JP], m[JM]), rad_scale(Fraction(2), m[J0]))),
        ("[K0, K+] = +K+", linalg.equal(comm(m[K0], m[KP]), m[KP])),
        ("[K0, K-] = -K-", linalg.equal(comm(m[K0], m[KM]), rad_scale(Fraction(-1), m[KM]))),
        ("[K+, K-] = 2 K0", linalg.equal(comm(m[KP], m[KM]), rad_scale(Fraction(2), m[K0]))),
        ("(K+)^2 = 0", linalg.equal(linalg.matmul(m[KP], m[KP]), rad_scale(Fraction(0), ident))),
        ("(K-)^2 = 0", linalg.equal(linalg.matmul(m[KM], m[KM]), rad_scale(Fraction(0), ident))),
        ("K0^2 = I/4", linalg.equal(linalg.matmul(m[K0], m[K0]), rad_scale(Fraction(1, 4), ident))),
        ("{K+, K-} = I", linalg.equal(anti(m[KP], m[KM]), ident)),
        ("{K0, K+} = 0", linalg.equal(anti(m[K0], m[KP]), rad_scale(Fraction(0), ident))),
        ("{K0, K-} = 0", linalg.equal(anti(m[K0], m[KM]), rad_scale(Fraction(0), ident))),
    ]
    for a in (J0, JP, JM):
        for b in (K0, KP, KM):
            checks.append(
                (f"[{a.family}{a.component}, {b.family}{b.component}] = 0",
                 linalg.equal(comm(m[a], m[b]), rad_scale(Fraction(0), rad_identity(n)))),
            )
    return checks


def casimir(which: int, p: int) -> tuple[Matrix, Fraction]:
    """Build C1 or C2 from the so(4) matrices; returns (matrix, scalar value).

    C1 = J0^2 + K0^2 + (1/2){J+, J-} + (1/2){K+, K-}
    C2 = J0^2 - K0^2 + (1/2){J+, J-} - (1/2){K+, K-}

    Raises ValueError when the result is not an exact scalar matrix.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    sign = Fraction(1) if which == 1 else Fraction(-1)
    m = {g: so4_matrix(g, p) for g in SO4_GENERATORS}
    half = Fraction(1, 2)
    out = linalg.matmul(m[J0], m[J0])
    out = linalg.add(out, rad_scale(sign, linalg.matmul(m[K0], m[K0])))
    anti_j = linalg.add(linalg.matmul(m[JP], m[JM]), linalg.matmul(m[JM], m[JP]))
    anti_k = linalg.add(linalg.matmul(m[KP], m[KM]), linalg.matmul(m[KM], m[KP]))
    out = linalg.add(out, rad_scale(half, anti_j))
    out = linalg.add(out, rad_scale(sign * half, anti_k))
    if not linalg.is_scalar_matrix(out):
        raise ValueError(f"Casimir C{which} is not scalar for p={p}")
    return out, out[0][0].rational_value()


def gram_in_tensor_basis(p: int) -> Matrix:
    """T^t T: diagonal and rational; ties the V_p metric to the tensor metric."""
    T = tensor_to_lambda_chi(p)
    return linalg.matmul(linalg.transpose(T), T)


def lambda_chi_gram_as_radical(p: int) -> Matrix:
    return ext_to_radical_matrix(gram_matrix(Basis.LAMBDA_CHI, p))
