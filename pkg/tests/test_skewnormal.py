"""Skew normal form: re-multiplication oracle, unimodularity, idempotence."""

from __future__ import annotations

import random

import pytest

from qnoether.skewnormal import (
    check_congruence,
    det,
    format_matrix,
    is_normal_form,
    mat_mul,
    quantum_plane_exponents,
    read_matrix_file,
    skew_normal_form,
    transpose,
)

PAPER_S3 = [
    [0, -1, -1, -2, -2, -5],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 2],
    [2, 0, -1, 0, 0, 0],
    [2, 0, -1, 0, 0, -1],
    [5, 0, -2, 0, 1, 0],
]


def random_skew(rng, n, bound=9):
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            S[i][j] = v
            S[j][i] = -v
    return S


def test_already_normal_is_fixed():
    S = [[0, 3], [-3, 0]]
    U, D = skew_normal_form(S)
    assert U == [[1, 0], [0, 1]]
    assert D == S


def test_printed_6x6_reduces_to_unit_blocks():
    U, D = skew_normal_form(PAPER_S3)
    assert is_normal_form(D)
    assert [D[i][i + 1] for i in (0, 2, 4)] == [1, 1, 1]
    assert check_congruence(PAPER_S3, U, D)


def test_non_skew_rejected():
    with pytest.raises(ValueError):
        skew_normal_form([[0, 1], [1, 0]])


def test_random_matrices_property_suite():
    rng = random.Random(20240901)
    for n in (4, 6, 8, 10):
        for _ in range(100):
            S = random_skew(rng, n)
            U, D = skew_normal_form(S)
            assert is_normal_form(D)
            assert check_congruence(S, U, D)
            ks = [D[i][i + 1] for i in range(0, n, 2)]
            nonzero = [k for k in ks if k]
            assert all(k > 0 for k in nonzero)
            assert nonzero == sorted(nonzero)
            # idempotence: a normal form maps to itself
            U2, D2 = skew_normal_form(D)
            assert D2 == D


def test_gcd_preserved_by_congruence():
    from math import gcd

    rng = random.Random(7)
    for _ in range(40):
        S = random_skew(rng, 6)
        _, D = skew_normal_form(S)
        gs = 0
        for row in S:
            for x in row:
                gs = gcd(gs, x)
        gd = 0
        for row in D:
            for x in row:
                gd = gcd(gd, x)
        assert gs == gd


def test_odd_dimension_leaves_zero_block():
    S = [[0, 2, 0], [-2, 0, 0], [0, 0, 0]]
    U, D = skew_normal_form(S)
    assert is_normal_form(D)
    assert D[0][1] == 2 and all(D[2][j] == 0 for j in range(3))
    assert check_congruence(S, U, D)


def test_quantum_plane_exponents():
    assert quantum_plane_exponents(PAPER_S3) == [1, 1, 1]
    D = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    assert quantum_plane_exponents(D) == [1, 2]
    with pytest.raises(ValueError):
        quantum_plane_exponents([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])


def test_tensor_spec_exponents():
    # q-plane tensor q^2-plane: variables (y1, x1, y2, x2)
    S = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    assert quantum_plane_exponents(S) == [1, 2]


def test_check_congruence_identity_and_singular():
    S = PAPER_S3
    n = len(S)
    eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    assert check_congruence(S, eye, S)
    bad = [row[:] for row in eye]
    bad[2] = [0] * n
    assert not check_congruence(S, bad, S)


def test_det_exact():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2], [2, 4]]) == 0
    assert det(PAPER_S3) == 1  # unimodular by the three unit blocks


def test_matrix_file_roundtrip(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2\n0 4\n-4 0\n")
    assert read_matrix_file(str(path)) == [[0, 4], [-4, 0]]
    assert format_matrix([[0, 4], [-4, 0]]) == " 0 4\n-4 0"


def test_mat_mul_transpose():
    A = [[1, 2], [3, 4]]
    assert transpose(A) == [[1, 3], [2, 4]]
    assert mat_mul(A, A) == [[7, 10], [15, 22]]
