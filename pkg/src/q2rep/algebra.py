"""The Lie superalgebra q(2): 8 graded basis generators and their bracket.

Basis elements are e_{ij}^sigma with i, j in {0, 1} and parity sigma in
{even, odd}; the even four span gl(2).  The bracket on homogeneous elements

    [[e_ij^s, e_kl^t]] = delta_jk e_il^{s+t} - (-1)^{st} delta_il e_kj^{s+t}

is a commutator unless both arguments are odd, in which case it is an
anticommutator.  Mixed-parity elements are handled by splitting into
homogeneous parts and extending bilinearly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .scalars import ExtScalar, RationalLike

EVEN = 0
ODD = 1


@dataclass(frozen=True, order=True)
class GeneratorId:
    i: int
    j: int
    parity: int

    def __post_init__(self) -> None:
        if self.i not in (0, 1) or self.j not in (0, 1) or self.parity not in (0, 1):
            raise ValueError(f"invalid generator indices ({self.i},{self.j},{self.parity})")

    @property
    def name(self) -> str:
        return f"e{self.i}{self.j}_{self.parity}"

    def __str__(self) -> str:
        return ALIAS_OF.get(self, self.name)


GENERATORS: tuple[GeneratorId, ...] = tuple(
    GeneratorId(i, j, s) for s in (EVEN, ODD) for i in (0, 1) for j in (0, 1)
)

B_PLUS = GeneratorId(1, 0, EVEN)
B_MINUS = GeneratorId(0, 1, EVEN)
F_PLUS = GeneratorId(1, 0, ODD)
F_MINUS = GeneratorId(0, 1, ODD)
E00_0 = GeneratorId(0, 0, EVEN)
E11_0 = GeneratorId(1, 1, EVEN)
E00_1 = GeneratorId(0, 0, ODD)
E11_1 = GeneratorId(1, 1, ODD)

ALIASES: dict[str, GeneratorId] = {
    "b+": B_PLUS,
    "b-": B_MINUS,
    "f+": F_PLUS,
    "f-": F_MINUS,
}
ALIAS_OF: dict[GeneratorId, str] = {g: n for n, g in ALIASES.items()}


def generator_by_name(name: str) -> GeneratorId:
    if name in ALIASES:
        return ALIASES[name]
    for g in GENERATORS:
        if g.name == name:
            return g
    raise KeyError(f"unknown generator name {name!r}")


class SuperElement:
    """A formal Q[sqrt(p)]-linear combination of the 8 basis generators.

    Zero coefficients are dropped, so the stored mapping is canonical.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: dict[GeneratorId, ExtScalar] | None = None) -> None:
        object.__setattr__(self, "p", p)
        clean = {}
        for g, c in (coeffs or {}).items():
            c = ExtScalar.of(c, p)
            if c:
                clean[g] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SuperElement is immutable")

    @classmethod
    def basis(cls, g: GeneratorId, p: int) -> SuperElement:
        return cls(p, {g: ExtScalar.one(p)})

    @classmethod
    def zero(cls, p: int) -> SuperElement:
        return cls(p, {})

    def __add__(self, other: SuperElement) -> SuperElement:
        if self.p != other.p:
            raise ValueError("p mismatch")
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, ExtScalar.zero(self.p)) + c
        return SuperElement(self.p, out)

    def __sub__(self, other: SuperElement) -> SuperElement:
        return self + (-other)

    def __neg__(self) -> SuperElement:
        return SuperElement(self.p, {g: -c for g, c in self.coeffs.items()})

    def scaled(self, c: ExtScalar | RationalLike) -> SuperElement:
        c = ExtScalar.of(c, self.p) if not isinstance(c, ExtScalar) else c
        return SuperElement(self.p, {g: c * v for g, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SuperElement)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [f"({c})*{g}" for g, c in sorted(self.coeffs.items())]
        return " + ".join(parts)

    def parity(self) -> str:
        parities = {g.parity for g in self.coeffs}
        if parities <= {EVEN}:
            return "even"
        if parities == {ODD}:
            return "odd"
        return "mixed"

    def homogeneous_parts(self) -> dict[int, SuperElement]:
        parts: dict[int, dict[GeneratorId, ExtScalar]] = {EVEN: {}, ODD: {}}
        for g, c in self.coeffs.items():
            parts[g.parity][g] = c
        return {s: SuperElement(self.p, d) for s, d in parts.items() if d}


def bracket_basis(a: GeneratorId, b: GeneratorId, p: int) -> SuperElement:
    """[[e_ij^s, e_kl^t]] on basis generators."""
    s, t = a.parity, b.parity
    out: dict[GeneratorId, ExtScalar] = {}
    if a.j == b.i:
        g = GeneratorId(a.i, b.j, (s + t) % 2)
        out[g] = out.get(g, ExtScalar.zero(p)) + 1
    if a.i == b.j:
        g = GeneratorId(b.i, a.j, (s + t) % 2)
        coeff = 1 if (s and t) else -1  # -(-1)^{st}
        out[g] = out.get(g, ExtScalar.zero(p)) + coeff
    return SuperElement(p, out)


def bracket(x: SuperElement, y: SuperElement) -> SuperElement:
    """Bilinear extension of the bracket; anticommutator on odd-odd parts."""
    if x.p != y.p:
        raise ValueError("p mismatch")
    p = x.p
    out = SuperElement.zero(p)
    for gx, cx in x.coeffs.items():
        for gy, cy in y.coeffs.items():
            out = out + bracket_basis(gx, gy, p).scaled(cx * cy)
    return out


def check_graded_jacobi(p: int = 2) -> tuple[bool, int, tuple | None]:
    """Sweep the graded Jacobi identity over all 8^3 basis triples.

    Returns (passed, number checked, first violating triple or None).  The
    structure constants are integers, so the extension parameter p is
    irrelevant to the outcome; it only fixes the coefficient ring.
    """
    checked = 0
    for gx, gy, gz in product(GENERATORS, repeat=3):
        x = SuperElement.basis(gx, p)
        y = SuperElement.basis(gy, p)
        z = SuperElement.basis(gz, p)
        sxz = -1 if (gx.parity and gz.parity) else 1
        syx = -1 if (gy.parity and gx.parity) else 1
        szy = -1 if (gz.parity and gy.parity) else 1
        total = (
            bracket(x, bracket(y, z)).scaled(Fraction(sxz))
            + bracket(y, bracket(z, x)).scaled(Fraction(syx))
            + bracket(z, bracket(x, y)).scaled(Fraction(szy))
        )
        checked += 1
        if total:
            return False, checked, (gx, gy, gz)
    return True, checked, None


def graded_antisymmetry_holds(p: int = 2) -> bool:
    """[[x, y]] = -(-1)^{|x||y|} [[y, x]] on all homogeneous basis pairs."""
    for gx, gy in product(GENERATORS, repeat=2):
        x = SuperElement.basis(gx, p)
        y = SuperElement.basis(gy, p)
        sign = -1 if (gx.parity and gy.parity) else 1
        if bracket(x, y) != bracket(y, x).scaled(Fraction(-1 * sign)):
            return False
    return True
