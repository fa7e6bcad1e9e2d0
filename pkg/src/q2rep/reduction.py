"""Independent derivation of the sphaleron polynomial eigensystems.

The two coupled mode equations (in the variable x, with A = (1-x)(1-k2 x)
and u = x A) are

    D40 W = 0,   D40 = 4u d^2 + 2 (x A)' d + lam - th2 k2 x
    D41 f = -2 sqrt(A/x) W,   D41 = 4u d^2 + 2 (-1 + k2 x^2) d + lam - th2 k2 x

Each tractable sector substitutes W and f as a square-root prefactor times
polynomial combinations of a pair (P, Q) and requires th2 = 2p(2p+1) or
2p(2p-1).  Conjugating the operators by the prefactors turns everything into
rational-function arithmetic: for prefactor F with F'/F = phi rational,

    F^{-1} (c2 d^2 + c1 d + c0) F = c2 d^2 + (c1 + 2 c2 phi) d
                                    + c0 + c1 phi + c2 (phi' + phi^2).

The four sectors and their prefactors (eps = (half-power of x, of A)):

    case 43:  W = P + x Q            f = sqrt(x A) P      th2 = 2p(2p+1)
    case 44:  W = sqrt(A) P          f = sqrt(x)(P + xQ)  th2 = 2p(2p+1)
    case 50:  W = sqrt(x) Q          f = sqrt(A) P        th2 = 2p(2p-1)
    case 51:  W = sqrt(x A) Q        f = P                th2 = 2p(2p-1)

Cases 43, 44, 50 act on (P, Q) of degrees (p-1, p-1); case 51 on (p, p-2).
After eliminating the prefactors the equations reorganize into two polynomial
rows (upper paired with P, lower with Q) whose lam-part is the identity; the
lam-free part is the sector matrix.  This module performs that reorganization
mechanically with sympy and is used as the oracle that anchors the closed-form
operators in `models`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy as sp

_x, _lam = sp.symbols("x lam")


class ReductionError(RuntimeError):
    """The substitution did not produce the expected polynomial system."""


def _conjugated(coeffs: tuple, eps_x: int, eps_a: int, k2: sp.Rational):
    """Coefficients of F^{-1} D F for F = x^{eps_x/2} A^{eps_a/2}."""
    a = (1 - _x) * (1 - k2 * _x)
    phi = sp.Rational(eps_x, 2) / _x + sp.Rational(eps_a, 2) * sp.diff(a, _x) / a
    c0, c1, c2 = coeffs
    return (
        sp.together(c0 + c1 * phi + c2 * (sp.diff(phi, _x) + phi**2)),
        sp.together(c1 + 2 * c2 * phi),
        c2,
    )


def _apply(coeffs: tuple, poly: sp.Expr) -> sp.Expr:
    c0, c1, c2 = coeffs
    return c2 * sp.diff(poly, _x, 2) + c1 * sp.diff(poly, _x) + c0 * poly


def _as_poly(expr: sp.Expr, label: str) -> sp.Poly:
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    if not den.is_number:
        raise ReductionError(f"{label} is not polynomial: denominator {den}")
    return sp.Poly(sp.expand(num / den), _x)


def _divide_x(expr: sp.Expr, power: int, label: str) -> sp.Expr:
    return sp.cancel(sp.together(expr / _x**power))


_CASES = {
    43: {"theta2": lambda p: 2 * p * (2 * p + 1), "caps": lambda p: (p - 1, p - 1)},
    44: {"theta2": lambda p: 2 * p * (2 * p + 1), "caps": lambda p: (p - 1, p - 1)},
    50: {"theta2": lambda p: 2 * p * (2 * p - 1), "caps": lambda p: (p - 1, p - 1)},
    51: {"theta2": lambda p: 2 * p * (2 * p - 1), "caps": lambda p: (p, p - 2)},
}


def sector_caps(case: int, p: int) -> tuple[int, int]:
    return _CASES[case]["caps"](p)


def _rows_for_basis_vector(
    case: int, p: int, k2: sp.Rational, lam: sp.Expr, pol_p: sp.Expr, pol_q: sp.Expr
) -> tuple[sp.Expr, sp.Expr]:
    """The (upper, lower) polynomial rows evaluated on one (P, Q) pair."""
    a = (1 - _x) * (1 - k2 * _x)
    u = _x * a
    th2 = _CASES[case]["theta2"](p)
    d40 = (lam - th2 * k2 * _x, 2 * sp.diff(u, _x), 4 * u)
    d41 = (lam - th2 * k2 * _x, 2 * (-1 + k2 * _x**2), 4 * u)

    if case == 43:
        s_w = pol_p + _x * pol_q
        e_w = _apply(d40, s_w)  # polynomial already
        conj = _conjugated(d41, 1, 1, k2)
        # the 1/x poles of the conjugated operator cancel against the coupling
        row_up = sp.cancel(sp.together(_apply(conj, pol_p) + 2 * s_w / _x))
        row_low = _divide_x(sp.together(e_w - row_up), 1, "row_low(43)")
    elif case == 44:
        conj_w = _conjugated(d40, 0, 1, k2)
        row_up = sp.cancel(sp.together(_apply(conj_w, pol_p)))
        conj_f = _conjugated(d41, 1, 0, k2)
        s_f = pol_p + _x * pol_q
        norm2 = _x * sp.together(_apply(conj_f, s_f) + 2 * (a / _x) * pol_p)
        row_low = _divide_x(sp.together(norm2 - _x * row_up), 2, "row_low(44)")
    elif case == 50:
        conj_f = _conjugated(d41, 0, 1, k2)
        row_up = sp.cancel(sp.together(_apply(conj_f, pol_p) + 2 * pol_q))
        conj_w = _conjugated(d40, 1, 0, k2)
        row_low = sp.cancel(sp.together(_apply(conj_w, pol_q)))
    elif case == 51:
        row_up = sp.expand(_apply(d41, pol_p) + 2 * a * pol_q)
        conj_w = _conjugated(d40, 1, 1, k2)
        row_low = sp.cancel(sp.together(_apply(conj_w, pol_q)))
    else:
        raise ValueError(f"unknown sector {case}")
    return row_up, row_low


@lru_cache(maxsize=None)
def derived_matrix(case: int, p: int, k2: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    """The exact 2p x 2p sector matrix M with (M + lam I) (P, Q) = 0.

    Derived from scratch for each basis monomial; validates along the way
    that the rows are polynomial, respect the degree caps, and carry lam
    exactly on the diagonal.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    k2s = sp.Rational(k2.numerator, k2.denominator)
    d_up, d_low = sector_caps(case, p)
    n_up, n_low = d_up + 1, d_low + 1
    n = n_up + n_low
    if n != 2 * p:
        raise AssertionError("sector dimension mismatch")
    cols: list[list[Fraction]] = []
    for idx in range(n):
        if idx < n_up:
            pol_p, pol_q = _x**idx, sp.Integer(0)
        else:
            pol_p, pol_q = sp.Integer(0), _x ** (idx - n_up)
        row_up, row_low = _rows_for_basis_vector(case, p, k2s, _lam, pol_p, pol_q)
        pu = _as_poly(row_up, f"upper row (case {case})")
        pl = (
            _as_poly(row_low, f"lower row (case {case})")
            if n_low
            else sp.Poly(0, _x)
        )
        # lam must appear exactly as lam * (P, Q)
        lam_up = sp.Poly(sp.expand(sp.diff(pu.as_expr(), _lam)), _x)
        lam_low = sp.Poly(sp.expand(sp.diff(pl.as_expr(), _lam)), _x)
        if lam_up.as_expr() != sp.expand(pol_p) or lam_low.as_expr() != sp.expand(pol_q):
            raise ReductionError(f"lam does not pair with the identity (case {case})")
        pu0 = sp.Poly(pu.as_expr().subs(_lam, 0), _x)
        pl0 = sp.Poly(pl.as_expr().subs(_lam, 0), _x)
        if pu0.degree() > d_up or (n_low and pl0.degree() > d_low):
            raise ReductionError(
                f"degree cap violated in case {case} (p={p}): "
                f"{pu0.degree()}, {pl0.degree()} vs {d_up}, {d_low}"
            )
        col = [_to_fraction(pu0.as_expr().coeff(_x, d)) for d in range(n_up)]
        col += [_to_fraction(pl0.as_expr().coeff(_x, d)) for d in range(n_low)]
        cols.append(col)
    return tuple(zip(*[tuple(c) for c in cols]))


def _to_fraction(value: sp.Expr) -> Fraction:
    value = sp.nsimplify(value)
    if not value.is_rational:
        raise ReductionError(f"non-rational matrix entry {value}")
    return Fraction(int(sp.numer(value)), int(sp.denom(value)))
