from fractions import Fraction

import pytest

from q2rep import linalg
from q2rep.so4 import (
    JP,
    K0,
    KM,
    KP,
    Radical,
    casimir,
    gram_in_tensor_basis,
    identification_lines,
    lambda_chi_gram_as_radical,
    rad_identity,
    rad_scale,
    so4_matrix,
    so4_relation_report,
    tensor_to_lambda_chi,
    verify_identification,
)


def test_radical_arithmetic():
    r2 = Radical.sqrt(2)
    r8 = Radical.sqrt(8)
    assert r8 == r2 * 2
    assert r2 * r2 == Radical.rational(2)
    assert Radical.sqrt(Fraction(4, 9)) == Radical.rational(Fraction(2, 3))
    assert Radical.sqrt(12) * Radical.sqrt(3) == Radical.rational(6)
    assert (Radical.sqrt(2) + Radical.sqrt(3)) * (Radical.sqrt(2) - Radical.sqrt(3)) == Radical.rational(-1)


def test_radical_rejects_negative():
    with pytest.raises(ValueError):
        Radical.sqrt(-1)


def test_k_family_relations():
    for p in (1, 2, 5):
        n = 2 * p
        kp = so4_matrix(KP, p)
        km = so4_matrix(KM, p)
        k0 = so4_matrix(K0, p)
        assert linalg.equal(linalg.matmul(kp, kp), rad_scale(Fraction(0), rad_identity(n)))
        anti = linalg.add(linalg.matmul(kp, km), linalg.matmul(km, kp))
        assert linalg.equal(anti, rad_identity(n))
        assert linalg.equal(linalg.matmul(k0, k0), rad_scale(Fraction(1, 4), rad_identity(n)))
        # K0 is diag(+-1/2) across the spin-1/2 label
        assert k0[0][0] == Radical.rational(Fraction(1, 2))
        assert k0[1][1] == Radical.rational(Fraction(-1, 2))


def test_j_plus_annihilates_top():
    for p in (2, 4):
        jp = so4_matrix(JP, p)
        n = 2 * p
        # columns 0 and 1 carry the top m; J+ sends them to zero
        assert all(not jp[i][0] and not jp[i][1] for i in range(n))


def test_all_commutation_relations():
    for p in range(1, 9):
        report = so4_relation_report(p)
        assert all(ok for _, ok in report), [name for name, ok in report if not ok]


def test_tensor_map_p1():
    t = tensor_to_lambda_chi(1)
    # Lam_0 = |0,0> x |up>, Lam_1 = |0,0> x |down>, no chi sector
    assert linalg.equal(t, rad_identity(2))


def test_tensor_map_invertibility_via_gram():
    for p in range(1, 9):
        g = gram_in_tensor_basis(p)
        n = 2 * p
        assert all(not g[i][j] for i in range(n) for j in range(n) if i != j)
        assert all(g[i][i] for i in range(n))
        # and it coincides with the V_p metric of the Lam/chi basis
        assert linalg.equal(g, lambda_chi_gram_as_radical(p))


def test_identification_lines_all_pass():
    for p in range(1, 9):
        lines = identification_lines(p)
        assert len(lines) == 8
        assert all(line.passed for line in lines), [
            line.label for line in lines if not line.passed
        ]
        assert verify_identification(p)


def test_casimirs_are_scalar():
    for p in range(1, 9):
        m1, c1 = casimir(1, p)
        m2, c2 = casimir(2, p)
        assert linalg.is_scalar_matrix(m1)
        assert linalg.is_scalar_matrix(m2)
        # exact values in this tensor representation
        assert c1 == Fraction(p * p + 2, 4)
        assert c2 == Fraction(p * p - 4, 4)
        # the Casimirs differ by a multiple of the scalar e00_0 + e11_0 image:
        # C1 - C2 = 2 K0^2 + {K+, K-} = 3/2 = (3/2p) * p
        assert c1 - c2 == Fraction(3, 2)
