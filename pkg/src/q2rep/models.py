"""The sphaleron, Moszkowski and Jaynes-Cummings operators.

Each model is built twice: as a raw differential operator on the matching
polynomial space, and as a quadratic expression in the q(2) generators whose
representation matrix must coincide exactly.  The bases line up as follows:

    sphaleron 43/44/50   mu basis,        realization-2 space (p-1, p-1)
    sphaleron 51         Lam/chi basis,   realization-1 space (p, p-2)
    Moszkowski           mu basis,        realization-2 space
    Jaynes-Cummings      Lam/chi basis,   third-realization carrier

Sphaleron sectors require th2 = 2p(2p+1) (cases 43, 44) or 2p(2p-1)
(cases 50, 51); this is implied by (case, p), so there is no free theta
parameter.  The eigenproblem reads (Delta + lam) f = 0, so reported mode
eigenvalues are the negated matrix eigenvalues.  The Jaynes-Cummings
rewrite exists only on the resonance surface omega - omega0 = g (p-1),
which is enforced at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

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
from .diffop import DiffOp, Pauli, to_matrix, realization_basis
from .linalg import Matrix
from .rep import Basis, rep_matrix
from .scalars import ExtScalar, RationalLike, inv_sqrt_p, rational_sqrt


class ConstraintError(ValueError):
    """Model parameters violate a structural constraint."""


class NoClosedFormError(ValueError):
    """The requested model has no closed-form spectrum here."""


class Model(Enum):
    SPHALERON_43 = "sphaleron43"
    SPHALERON_44 = "sphaleron44"
    SPHALERON_50 = "sphaleron50"
    SPHALERON_51 = "sphaleron51"
    MOSZKOWSKI = "moszkowski"
    JAYNES_CUMMINGS = "jc"


SPHALERON_MODELS = {
    Model.SPHALERON_43: 43,
    Model.SPHALERON_44: 44,
    Model.SPHALERON_50: 50,
    Model.SPHALERON_51: 51,
}


@dataclass(frozen=True)
class ModelSpec:
    model: Model
    p: int
    params: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("p must be a positive integer")
        clean = {k: Fraction(v) for k, v in self.params.items()}
        object.__setattr__(self, "params", clean)
        if self.model in SPHALERON_MODELS:
            allowed = {"k2", "lambda"}
        elif self.model is Model.MOSZKOWSKI:
            allowed = {"c", "V"}
        else:
            allowed = {"omega", "omega0", "g"}
        unknown = set(clean) - allowed
        if unknown:
            raise ConstraintError(f"unknown parameters for {self.model.value}: {sorted(unknown)}")
        if self.model in SPHALERON_MODELS and clean.get("k2", Fraction(0)) < 0:
            raise ConstraintError("k2 must be nonnegative")
        if self.model is Model.JAYNES_CUMMINGS:
            omega = clean.get("omega", Fraction(0))
            g = clean.get("g", Fraction(0))
            omega0 = clean.get("omega0", omega - g * (self.p - 1))
            if omega - omega0 != g * (self.p - 1):
                raise ConstraintError(
                    "detuning constraint violated: omega - omega0 must equal g*(p-1)"
                )
            clean["omega0"] = omega0

    def param(self, name: str, default: RationalLike = 0) -> Fraction:
        return self.params.get(name, Fraction(default))


def model_basis(model: Model) -> Basis:
    if model in (Model.SPHALERON_51,):
        return Basis.LAMBDA_CHI
    if model is Model.JAYNES_CUMMINGS:
        return Basis.THIRD
    return Basis.MU


def model_space_realization(model: Model) -> int:
    if model is Model.SPHALERON_51:
        return 1
    if model is Model.JAYNES_CUMMINGS:
        return 3
    return 2


# raw differential operators ------------------------------------------------

def _sphaleron_rows(case: int, p: int, k2: Fraction) -> tuple[list, list, list, list]:
    """(upper, lower, sigma+, sigma-) coefficient lists [c0(x), c1(x)*d, c2(x)*d^2]."""
    d = 1 + k2
    xa2 = [0, 4, -4 * d, 4 * k2]  # 4 x A
    if case == 43:
        up = ([0, -k2 * (4 * p * p + 2 * p - 6)], [2, -8 * d, 14 * k2], xa2)
        low = ([-4 * d, -k2 * (4 * p * p + 2 * p - 6)], [10, -12 * d, 14 * k2], xa2)
        sp_ = ([2], [], [])
        sm = ([-6 * k2], [4 * d, -8 * k2], [])
    elif case == 44:
        up = ([-d, -k2 * (4 * p * p + 2 * p - 6)], [2, -8 * d, 14 * k2], xa2)
        low = ([-3 * d, -k2 * (4 * p * p + 2 * p - 6)], [10, -12 * d, 14 * k2], xa2)
        sp_ = ([], [], [])
        sm = ([-4 * k2], [4 * d, -8 * k2], [])
    elif case == 50:
        up = ([d, -k2 * (4 * p * p - 2 * p - 2)], [-2, -4 * d, 10 * k2], xa2)
        low = ([-d, -k2 * (4 * p * p - 2 * p - 2)], [6, -8 * d, 10 * k2], xa2)
        sp_ = ([2], [], [])
        sm = ([], [], [])
    elif case == 51:
        up = ([0, -2 * p * (2 * p - 1) * k2], [-2, 0, 2 * k2], xa2)
        low = ([-4 * d, -k2 * (4 * p * p - 2 * p - 12)], [6, -12 * d, 18 * k2], xa2)
        sp_ = ([2, -2 * d, 2 * k2], [], [])
        sm = ([], [], [])
    else:
        raise ValueError(f"unknown sphaleron case {case}")
    return up, low, sp_, sm


def _op_from_rows(p: int, rows: tuple[list, list, list, list]) -> DiffOp:
    up, low, sp_, sm = rows
    out = DiffOp.zero(p)
    half = Fraction(1, 2)

    def acc(op: DiffOp, coeff_lists: list, pauli: Pauli) -> DiffOp:
        for order, coeffs in enumerate(coeff_lists):
            if coeffs:
                op = op + DiffOp.term(p, [Fraction(c) for c in coeffs], order, pauli)
        return op

    # upper = s0 + s3 row, lower = s0 - s3 row
    s0 = [
        [Fraction(a) * half + Fraction(b) * half for a, b in _zip_pad(cu, cl)]
        for cu, cl in zip(up, low)
    ]
    s3 = [
        [Fraction(a) * half - Fraction(b) * half for a, b in _zip_pad(cu, cl)]
        for cu, cl in zip(up, low)
    ]
    out = acc(out, s0, Pauli.S0)
    out = acc(out, s3, Pauli.S3)
    out = acc(out, sp_, Pauli.SP)
    out = acc(out, sm, Pauli.SM)
    return out


def _zip_pad(a: list, b: list) -> list[tuple]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


def raw_operator(spec: ModelSpec) -> DiffOp:
    """The model's differential operator on its polynomial space.

    For sphaleron sectors this includes the +lambda shift when the "lambda"
    parameter is set; the lambda-free part is the sector matrix operator.
    """
    p = spec.p
    T = DiffOp.term
    if spec.model in SPHALERON_MODELS:
        case = SPHALERON_MODELS[spec.model]
        op = _op_from_rows(p, _sphaleron_rows(case, p, spec.param("k2")))
        lam = spec.param("lambda")
        if lam:
            op = op + DiffOp.constant(p, lam)
        return op
    if spec.model is Model.MOSZKOWSKI:
        c = spec.param("c")
        v = spec.param("V")
        op = (
            T(p, [0, -c], 1)
            + T(p, [c * Fraction(p - 1, 2)])
            + T(p, [-c * Fraction(1, 2)], 0, Pauli.S3)
            + T(p, [0, 0, -2 * v], 2)
            + T(p, [0, v * (2 * p - 4)], 1)
            + T(p, [v * p])
            + T(p, [2 * v], 1, Pauli.SM)
            + T(p, [0, 2 * v * (p - 1)], 0, Pauli.SP)
            + T(p, [0, 0, -2 * v], 1, Pauli.SP)
        )
        return op
    # Jaynes-Cummings with a+ = x, a- = d/dx
    omega = spec.param("omega")
    g = spec.param("g")
    omega0 = spec.param("omega0", omega - g * (p - 1))
    return (
        T(p, [0, omega], 1)
        + T(p, [omega * Fraction(1, 2)])
        + T(p, [-omega0 * Fraction(1, 2)], 0, Pauli.S3)
        + T(p, [g], 1, Pauli.SM)
        + T(p, [0, g], 0, Pauli.SP)
    )


def raw_matrix(spec: ModelSpec) -> Matrix:
    which = model_space_realization(spec.model)
    return to_matrix(raw_operator(spec), realization_basis(which, spec.p))


# generator expressions -------------------------------------------------------

E0_DIFF = "e0_diff"
E0_SUM = "e0_sum"
E1_DIFF = "e1_diff"
E1_SUM = "e1_sum"
COMBO_NAMES = ("b+", "b-", "f+", "f-", E0_DIFF, E0_SUM, E1_DIFF, E1_SUM)

_COMBOS: dict[str, tuple[tuple[GeneratorId, int], ...]] = {
    "b+": ((B_PLUS, 1),),
    "b-": ((B_MINUS, 1),),
    "f+": ((F_PLUS, 1),),
    "f-": ((F_MINUS, 1),),
    E0_DIFF: ((E00_0, 1), (E11_0, -1)),
    E0_SUM: ((E00_0, 1), (E11_0, 1)),
    E1_DIFF: ((E00_1, 1), (E11_1, -1)),
    E1_SUM: ((E00_1, 1), (E11_1, 1)),
}


@dataclass(frozen=True)
class GeneratorExpr:
    """Sum of coefficient * (at most quadratic) products of generator combos."""

    p: int
    terms: tuple[tuple[ExtScalar, tuple[str, ...]], ...]

    def __post_init__(self) -> None:
        for _, factors in self.terms:
            if len(factors) > 2:
                raise ValueError("expressions are at most quadratic in the generators")
            for f in factors:
                if f not in COMBO_NAMES:
                    raise KeyError(f"unknown generator combination {f!r}")

    def constant_part(self) -> ExtScalar:
        out = ExtScalar.zero(self.p)
        for coeff, factors in self.terms:
            if not factors:
                out = out + coeff
        return out


def combo_matrix(name: str, basis: Basis, p: int) -> Matrix:
    out = None
    for g, w in _COMBOS[name]:
        term = linalg.scale(ExtScalar.of(w, p), rep_matrix(g, basis, p))
        out = term if out is None else linalg.add(out, term)
    return out


def evaluate_expression(expr: GeneratorExpr, basis: Basis, p: int) -> Matrix:
    """Substitute representation matrices into the expression, exactly."""
    n = 2 * p
    out = linalg.ext_zeros(n, n, p)
    for coeff, factors in expr.terms:
        term = linalg.ext_identity(n, p)
        for name in factors:
            term = linalg.matmul(term, combo_matrix(name, basis, p))
        out = linalg.add(out, linalg.scale(coeff, term))
    return out


def _E(p: int, value: RationalLike) -> ExtScalar:
    return ExtScalar.of(Fraction(value), p)


def generator_expression(spec: ModelSpec) -> GeneratorExpr:
    """The model operator as a quadratic expression in the q(2) generators."""
    p = spec.p
    isp = inv_sqrt_p(p)
    sq = ExtScalar.sqrt_p(p)
    one = ExtScalar.one(p)
    if spec.model in SPHALERON_MODELS:
        k2 = spec.param("k2")
        lam = spec.param("lambda")
        d = 1 + k2
        case = SPHALERON_MODELS[spec.model]
        if case in (43, 44):
            terms: list[tuple[ExtScalar, tuple[str, ...]]] = [
                (_E(p, 2), (E0_DIFF, "b+")),
                (isp * -2, (E0_DIFF, "f+")),
                (_E(p, -2 * k2), (E0_DIFF, "b-")),
                (isp * (2 * k2), (E1_DIFF, "b-")),
                (_E(p, -d), (E0_DIFF, E0_DIFF)),
                (isp * 2, ("b+", E1_DIFF)),
                (_E(p, Fraction(-6, p)), ("f+", E1_DIFF)),
                (isp * d, (E1_DIFF, E0_DIFF)),
                (isp * (-2 * k2), (E0_DIFF, "f-")),
                (_E(p, Fraction(2, p) * k2), (E1_DIFF, "f-")),
                (isp * (4 * d), ("b+", "f-")),
                (_E(p, Fraction(-4, p) * d), ("f+", "f-")),
                (_E(p, 2 * (p + 2)), ("b+",)),
                (_E(p, -6 * k2 * p), ("b-",)),
                (_E(p, -d * (2 * p + 1)), (E0_DIFF,)),
                (_E(p, -p * (p + 1) * d) + _E(p, lam), ()),
            ]
            if case == 43:
                terms += [
                    (isp * (-2 * k2 * (1 - p)), ("f-",)),
                    (isp * -(2 * (p - 1)), ("f+",)),
                    (sq * d, (E1_DIFF,)),
                ]
            else:
                terms += [
                    (sq * (2 * k2), ("f-",)),
                    (sq * -2, ("f+",)),
                    (isp * (d * (p + 1)), (E1_DIFF,)),
                ]
        elif case == 50:
            terms = [
                (_E(p, 2), (E0_DIFF, "b+")),
                (isp * -2, (E0_DIFF, "f+")),
                (_E(p, -2 * k2), (E0_DIFF, "b-")),
                (isp * (2 * k2), (E0_DIFF, "f-")),
                (isp * (2 * k2), (E1_DIFF, "b-")),
                (_E(p, Fraction(-2, p) * k2), (E1_DIFF, "f-")),
                (_E(p, -d), (E0_DIFF, E0_DIFF)),
                (isp * 2, ("b+", E1_DIFF)),
                (_E(p, Fraction(-6, p)), ("f+", E1_DIFF)),
                (isp * d, (E1_DIFF, E0_DIFF)),
                (_E(p, 2 * p), ("b+",)),
                (isp * (2 * (3 - p)), ("f+",)),
                (_E(p, -2 * k2 * (3 * p - 2)), ("b-",)),
                (isp * (2 * k2 * (3 * p - 2)), ("f-",)),
                (_E(p, d * (-2 * p + 1)), (E0_DIFF,)),
                (isp * (-d * (1 - p)), (E1_DIFF,)),
                (_E(p, -p * (p - 1) * d) + _E(p, lam), ()),
            ]
        else:  # case 51, first realization space
            terms = [
                (_E(p, 2 * k2), ("b+", E0_DIFF)),
                (_E(p, -k2), ("f+", E1_SUM)),
                (isp * -1, ("b-", E1_SUM)),
                (_E(p, -2), (E0_DIFF, "b-")),
                (isp * k2, ("b+", E1_SUM)),
                (_E(p, 4 * d), ("b+", "b-")),
                (one, ("f-", E1_SUM)),
                (_E(p, Fraction(d, 2)), (E1_DIFF, E1_SUM)),
                (isp * Fraction(-d, 2), (E0_DIFF, E1_SUM)),
                (_E(p, 2 * p - 1), ("b-",)),
                (sq * k2, ("f+",)),
                (_E(p, k2 * (-6 * p + 1)), ("b+",)),
                (sq * -1, ("f-",)),
                (_E(p, d * (2 * p + Fraction(1, 2))), (E0_DIFF,)),
                (sq * -d, (E1_SUM,)),
                (sq * Fraction(-d, 2), (E1_DIFF,)),
                (_E(p, (-2 * p * p + p) * d) + _E(p, lam), ()),
            ]
        return GeneratorExpr(p, tuple(terms))
    if spec.model is Model.MOSZKOWSKI:
        c = spec.param("c")
        v = spec.param("V")
        return GeneratorExpr(
            p,
            (
                (isp * c, (E1_DIFF,)),
                (_E(p, -Fraction(c, 2)), (E0_DIFF,)),
                (_E(p, v * Fraction(p * p, 2)), ()),
                (_E(p, -Fraction(v, 2)), (E0_DIFF, E0_DIFF)),
                (sq * v, (E1_SUM,)),
            ),
        )
    omega = spec.param("omega")
    g = spec.param("g")
    # the sigma3 remainder (omega0 - omega + g(p-1))/2 vanishes on the
    # resonance surface enforced by ModelSpec
    return GeneratorExpr(
        p,
        (
            (_E(p, Fraction(omega, 2)), (E0_DIFF,)),
            (_E(p, Fraction(p, 2) * omega), ()),
            (sq * Fraction(g, 2), (E1_SUM,)),
            (isp * Fraction(g, 2), (E1_DIFF,)),
        ),
    )


def expression_matrix(spec: ModelSpec) -> Matrix:
    return evaluate_expression(generator_expression(spec), model_basis(spec.model), spec.p)


# closed-form spectra ---------------------------------------------------------

@dataclass(frozen=True)
class ClosedEig:
    """base + sign * sqrt(radicand), all rational."""

    label: str
    base: Fraction
    sign: int
    radicand: Fraction
    block: int

    def value(self) -> float:
        import math

        return float(self.base) + self.sign * math.sqrt(float(self.radicand))

    def exact_text(self) -> str:
        if self.radicand == 0 or self.sign == 0:
            return str(self.base)
        root = rational_sqrt(self.radicand)
        if root is not None:
            return str(self.base + self.sign * root)
        op = "+" if self.sign > 0 else "-"
        return f"{self.base} {op} sqrt({self.radicand})"


def closed_form_spectrum(spec: ModelSpec) -> list[ClosedEig]:
    """The published closed forms; exact radicals with rational radicands.

    Block k holds the paired labels; the two 1x1 blocks carry the extremal
    labels.  Raises NoClosedFormError for the sphaleron sectors.
    """
    p = spec.p
    if spec.model is Model.MOSZKOWSKI:
        c = spec.param("c")
        v = spec.param("V")
        out = [ClosedEig("E0+", p * v - (1 - Fraction(p, 2)) * c, 0, Fraction(0), 0)]
        for k in range(1, p):
            base = -2 * v * k * (k - p) + c * (Fraction(p, 2) - k)
            rad = v * v * p * p + c * c - 2 * (p - 2 * k) * v * c
            out.append(ClosedEig(f"E{k}+", base, 1, rad, k))
            out.append(ClosedEig(f"E{k}-", base, -1, rad, k))
        out.append(ClosedEig(f"E{p}+", p * v + (1 - Fraction(p, 2)) * c, 0, Fraction(0), p))
        return out
    if spec.model is Model.JAYNES_CUMMINGS:
        omega = spec.param("omega")
        g = spec.param("g")
        out = [ClosedEig("E0+", omega * p + Fraction(p + 1, 2) * g, 0, Fraction(0), 0)]
        for k in range(1, p):
            base = omega * (p - k)
            rad = g * g * (Fraction(p * p, 4) + Fraction(p, 2) + Fraction(1, 4) - k)
            out.append(ClosedEig(f"E{k}+", base, 1, rad, k))
            out.append(ClosedEig(f"E{k}-", base, -1, rad, k))
        out.append(ClosedEig(f"E{p}+", Fraction(p - 1, 2) * g, 0, Fraction(0), p))
        return out
    raise NoClosedFormError(f"{spec.model.value} has no closed-form spectrum")


def closed_form_blocks(spec: ModelSpec) -> dict[int, tuple[int, ...]]:
    """Index sets of the Hamiltonian blocks keyed by the closed-form block id."""
    p = spec.p
    if spec.model is Model.MOSZKOWSKI:
        # mu ordering: singletons mu_0 and mu_{2p-1}; pairs {mu_k, mu_{p+k-1}}
        blocks = {0: (0,), p: (2 * p - 1,)}
        for k in range(1, p):
            blocks[k] = (k, p + k - 1)
        return blocks
    if spec.model is Model.JAYNES_CUMMINGS:
        # Lam/chi ordering: Lam_k at k, chi_k at (p+1) + (k-1)
        blocks = {0: (0,), p: (p,)}
        for k in range(1, p):
            blocks[k] = (k, p + 1 + (k - 1))
        return blocks
    raise NoClosedFormError(f"{spec.model.value} has no closed-form blocks")
