import dataclasses
from math import gcd

import numpy as np
import pytest

from char_table import (
    CharacterTable,
    certify,
    character_table,
    class_constants,
    kernel_contains,
    restrict_to_quotient,
    splitting_prime,
)
from errors import CertificationFailed
from group_core import conjugacy_classes, p_prime_core

SMALL = ["C1", "C2", "C6", "V4", "S3", "D8", "Q8", "A4", "D10", "F20", "F21", "S4", "SL23", "A4xC2", "A5"]


def test_splitting_prime():
    assert splitting_prime(24, 12) == 61
    assert splitting_prime(6, 6) == 13
    assert splitting_prime(1, 1) == 3


def test_class_constants_abelian(c6):
    classes = conjugacy_classes(c6)
    a = class_constants(c6, classes).constants
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            product = c6.mul(ci.representative, cj.representative)
            expected = [int(ck.representative == product) for ck in classes]
            assert list(a[i, j]) == expected


def test_class_constants_s3(group):
    a = class_constants(group("S3")).constants
    # classes: identity, transpositions, 3-cycles
    assert a[1, 1, 0] == 3
    assert a[1, 1, 2] == 3
    assert a[2, 2, 0] == 2
    assert a[2, 2, 2] == 1
    assert a[0, 2, 2] == 1


@pytest.mark.parametrize("name,degrees", [
    ("C1", (1,)),
    ("S3", (1, 1, 2)),
    ("S4", (1, 1, 2, 3, 3)),
    ("Q8", (1, 1, 1, 1, 2)),
    ("F21", (1, 1, 1, 3, 3)),
    ("SL23", (1, 1, 1, 2, 2, 2, 3)),
    ("A5", (1, 3, 3, 4, 5)),
])
def test_degrees(group, name, degrees):
    assert character_table(group(name)).degrees == degrees


@pytest.mark.parametrize("name", SMALL)
def test_tables_certify(group, name):
    G = group(name)
    T = character_table(G)
    certify(T)
    assert T.order == G.order
    assert T.num_classes == len(conjugacy_classes(G))
    assert all(G.order % d == 0 for d in T.degrees)
    assert all(v.to_int() == 1 for v in T.values[0])


def test_sign_character_of_s4(s4):
    T = character_table(s4)
    assert [v.to_int() for v in T.values[1]] == [1, 1, -1, 1, -1]


def test_a5_irrational_values(a5):
    T = character_table(a5)
    five_cycles = [k for k, o in enumerate(T.class_orders) if o == 5]
    three_dim = [r for r, d in enumerate(T.degrees) if d == 3]
    assert len(five_cycles) == 2 and len(three_dim) == 2
    k = five_cycles[0]
    assert not T.value(three_dim[0], k).is_rational()
    assert (T.value(three_dim[0], k) + T.value(three_dim[1], k)).to_int() == 1
    numeric = T.numeric()
    assert abs(numeric[three_dim[0], k].imag) < 1e-9
    assert abs(abs(numeric[three_dim[0], k]) - (1 + 5 ** 0.5) / 2) < 1e-9 or \
        abs(abs(numeric[three_dim[0], k]) - (5 ** 0.5 - 1) / 2) < 1e-9


def test_cyclic_table_is_dft(c6):
    T = character_table(c6)
    numeric = T.numeric()
    gram = numeric @ np.diag(T.class_sizes) @ numeric.conj().T
    assert np.allclose(gram, 6 * np.eye(6))


def test_json_round_trip(s4):
    T = character_table(s4)
    assert CharacterTable.from_json(T.to_json()) == T
    assert T.to_json() == CharacterTable.from_json(T.to_json()).to_json()


def test_certify_rejects_bad_tables(group):
    T = character_table(group("S3"))
    with pytest.raises(CertificationFailed):
        certify(dataclasses.replace(T, degrees=(1, 1, 1)))
    with pytest.raises(CertificationFailed):
        certify(dataclasses.replace(T, values=(T.values[1], T.values[0], T.values[2])))


def test_restrict_to_quotient(s4):
    T = character_table(s4)
    V4 = p_prime_core(s4, 3)
    assert restrict_to_quotient(T, V4, s4) == [0, 1, 2]
    assert kernel_contains(T, 0, range(T.num_classes))
    assert not kernel_contains(T, 1, range(T.num_classes))


IRRATIONAL = ["C7", "C12", "F21", "A5", "A6"]


@pytest.mark.parametrize("name", SMALL + IRRATIONAL)
def test_class_algebra_identities(group, name):
    G = group(name)
    sizes = np.array([c.size for c in conjugacy_classes(G)], dtype=np.int64)
    a = class_constants(G).constants
    assert (a[0] == np.eye(len(sizes), dtype=a.dtype)).all()
    assert (a @ sizes == np.outer(sizes, sizes)).all()


@pytest.mark.parametrize("name", SMALL + IRRATIONAL)
def test_galois_permutes_rows(group, name):
    T = character_table(group(name))
    rows = set(T.values)
    for k in range(1, T.exponent + 1):
        if gcd(k, T.exponent) == 1:
            assert {tuple(v.galois(k) for v in row) for row in T.values} == rows
