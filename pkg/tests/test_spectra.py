import json

import pytest

import spectra
from char_table import character_table, restrict_to_quotient
from errors import (
    HypothesisNotMet,
    NotPrime,
    NotPSolvable,
    NotSolvable,
    OrderCapExceeded,
    PrimeDoesNotDivideOrder,
)
from spectra import (
    analyze,
    block_partition,
    energy_via_principal_block,
    lambda_values,
    nil_hypothesis,
    nullity_via_blocks,
    p_singular_profile,
    principal_block_membership,
    report_dict,
    verify_block_consistency,
    verify_corollary_large,
    verify_corollary_solvable,
    verify_diameter_conjecture,
    verify_oracle,
    verify_singularity_predicates,
    verify_spectrum_invariants,
    verify_theorem_energy,
    verify_theorem_nil,
)


def test_profile_s4(s4):
    prof = p_singular_profile(s4, 2)
    assert (prof.d_p, prof.c_p, prof.r_p, prof.order_p) == (15, 1, 24, 8)
    assert prof.H_p.order == 24
    prof = p_singular_profile(s4, 3)
    assert (prof.d_p, prof.c_p, prof.r_p, prof.order_p) == (8, 2, 6, 3)
    assert prof.O_p_prime.order == 4
    assert prof.order_p_prime == 8


def test_profile_errors(group, s4):
    with pytest.raises(PrimeDoesNotDivideOrder):
        p_singular_profile(group("C1"), 2)
    with pytest.raises(PrimeDoesNotDivideOrder):
        p_singular_profile(s4, 5)
    with pytest.raises(NotPrime):
        p_singular_profile(s4, 4)


def test_s4_anchor(s4):
    report = analyze(s4, 2).report
    assert report.eigs == ((15, 1), (3, 4), (-1, 18), (-9, 1))
    assert report.energy == 54
    assert report.hyperenergetic
    assert report.nullity == 0
    assert not report.singular
    assert report.diameter == 2
    assert report.bound_additive == 24 + 1 * 14
    assert len(analyze(s4, 2).blocks) == 1


def test_c6_at_two(c6):
    a = analyze(c6, 2)
    assert a.report.eigs == ((3, 1), (0, 4), (-3, 1))
    assert a.report.energy == 6
    assert a.report.nullity == 4
    assert a.report.diameter == 2
    assert len(a.blocks) == 3
    assert all(len(b) == 2 for b in a.blocks.blocks)
    assert sorted(a.blocks.principal) == restrict_to_quotient(a.table, a.profile.O_p_prime, c6)


def test_s3_at_three(group):
    report = analyze(group("S3"), 3).report
    assert report.eigs == ((2, 2), (-1, 4))
    assert report.energy == 8
    assert report.diameter == 1
    assert not report.singular


def test_a5_blocks_at_five(a5):
    a = analyze(a5, 5)
    T = a.table
    assert len(a.blocks) == 2
    assert sorted(T.degrees[r] for r in a.blocks.principal) == [1, 3, 3, 4]
    other = [b for i, b in enumerate(a.blocks.blocks) if i != a.blocks.principal_index]
    assert [[T.degrees[r] for r in b] for b in other] == [[5]]
    assert a.report.nullity == 25
    assert nullity_via_blocks(T, a.profile, a.blocks) == 25
    assert a.report.eigs == ((24, 1), (4, 18), (0, 25), (-6, 16))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_a5_integral_at_every_prime(a5, p):
    report = analyze(a5, p).report
    assert sum(m for _, m in report.eigs) == 60
    assert report.singular


def test_block_partition_from_classes(s4):
    from group_core import conjugacy_classes
    T = character_table(s4)
    assert block_partition(T, 3, conjugacy_classes(s4)) == block_partition(T, 3)
    assert len(block_partition(T, 3)) == 3


def test_principal_block_membership(a5):
    a = analyze(a5, 5)
    members = [r for r in range(a.table.num_classes) if principal_block_membership(a.table, a.profile, r)]
    assert members == sorted(a.blocks.principal)


def test_energy_identity(s4):
    a = analyze(s4, 3)
    assert lambda_values(a.table, a.profile) == [8, 8, 4, 0, 0]
    assert energy_via_principal_block(a.table, a.profile, a.blocks) == a.report.energy


def test_theorem_energy(s4):
    verdict = verify_theorem_energy(s4, 2)
    assert verdict.passed
    assert verdict.quantities["energy"] == 54


def test_theorem_energy_integral_clause(s4, monkeypatch):
    assert verify_theorem_energy(s4, 2).clauses["integral"]
    analyze(s4, 2)
    monkeypatch.setattr(spectra, "character_sums", lambda T, prof: [1] * T.num_classes)
    verdict = verify_theorem_energy(s4, 2)
    assert not verdict.clauses["integral"]
    assert not verdict.passed


def test_theorem_energy_needs_p_solvable(a5):
    with pytest.raises(NotPSolvable):
        verify_theorem_energy(a5, 5)


@pytest.mark.parametrize("name,p,energy", [
    ("C6", 2, 6), ("S3", 3, 8), ("A4", 3, 16), ("F21", 3, 28), ("F21", 7, 36),
])
def test_theorem_nil(group, name, p, energy):
    G = group(name)
    assert nil_hypothesis(G, p)
    verdict = verify_theorem_nil(G, p)
    assert verdict.passed
    assert verdict.quantities["energy"] == energy


def test_f21_at_three(group):
    report = analyze(group("F21"), 3).report
    assert report.nullity == 18
    assert not report.hyperenergetic


@pytest.mark.parametrize("name,p", [("S4", 2), ("A5", 5), ("D8", 3)])
def test_theorem_nil_hypothesis(group, name, p):
    with pytest.raises((HypothesisNotMet, PrimeDoesNotDivideOrder)):
        verify_theorem_nil(group(name), p)


def test_singularity_predicates(group, s4, a5, c6):
    def held(verdict):
        return {name for name, h, _ in verdict.quantities["checks"] if h}

    v = verify_singularity_predicates(group("S3"), 3)
    assert v.passed and held(v) == set()
    v = verify_singularity_predicates(s4, 3)
    assert v.passed and held(v) == {"fitting_not_p_group", "odd_p_trivial_p_core"}
    v = verify_singularity_predicates(a5, 3)
    assert v.passed and "simple_odd_p" in held(v)
    v = verify_singularity_predicates(c6, 2)
    assert v.passed and "nilpotent_not_p_group" in held(v)


def test_corollary_solvable(s4, group):
    verdict = verify_corollary_solvable(s4)
    assert verdict.passed
    assert verdict.quantities["nonsingular_primes"] == [2]
    with pytest.raises(NotSolvable):
        verify_corollary_solvable(group("S5"))


@pytest.mark.parametrize("name", ["C1", "C2", "S3", "A4"])
def test_corollary_large(group, name):
    assert verify_corollary_large(group(name)).passed


def test_corollary_large_cap(s4):
    with pytest.raises(OrderCapExceeded):
        verify_corollary_large(s4, cap=100)


def test_corollary_large_default_cap(a5):
    verdict = verify_corollary_large(a5)
    assert verdict.passed
    assert verdict.quantities["product_order"] == 360


@pytest.mark.parametrize("name,p", [("A5", 2), ("A5", 5), ("S4", 3), ("SL23", 3)])
def test_diameter_conjecture(group, name, p):
    assert verify_diameter_conjecture(group(name), p).passed


@pytest.mark.parametrize("name,p", [("S4", 2), ("S4", 3), ("A5", 5), ("Q8", 2), ("F21", 3), ("C6", 3)])
def test_block_consistency(group, name, p):
    assert verify_block_consistency(group(name), p).passed


@pytest.mark.parametrize("name,p", [("S4", 2), ("S3", 3), ("C6", 2), ("A5", 5), ("D10", 5)])
def test_oracle_agrees(group, name, p):
    verdict = verify_oracle(group(name), p)
    assert verdict.passed, verdict.clauses
    assert verdict.quantities["max_abs_error"] < 1e-6


def test_report_dict(s4):
    data = report_dict(s4, 2, [verify_theorem_energy(s4, 2)])
    assert list(data) == [
        "group", "order", "prime", "d_p", "c_p", "r_p", "order_p", "eigs", "nullity",
        "energy", "bound_additive", "bound_sqrt", "diameter_per_component", "singular",
        "hyperenergetic", "blocks", "principal_block", "verdicts",
    ]
    assert data["verdicts"]["theorem_energy"]["passed"]
    assert json.loads(json.dumps(data)) == json.loads(json.dumps(report_dict(s4, 2, [verify_theorem_energy(s4, 2)])))


@pytest.mark.parametrize("name,p", [("S4", 2), ("S3", 3), ("A5", 3), ("SL23", 3), ("F20", 5)])
def test_spectrum_invariants(group, name, p):
    verdict = verify_spectrum_invariants(group(name), p)
    assert verdict.passed, verdict.clauses
