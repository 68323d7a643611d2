import pytest

from corpus import load_manifest, mn_matches_character_table, run_corpus, run_group, select, summary_rows


def test_manifest():
    version, names = load_manifest()
    assert version == "v1"
    assert names[0] == "C1"
    assert {"S4", "A5", "F21", "SL23", "S6"} <= set(names)
    assert len(names) == len(set(names))


def test_custom_manifest(tmp_path):
    path = tmp_path / "mini.txt"
    path.write_text("# corpus mini\nS3\nD4  # Klein four\n\n")
    assert load_manifest(path) == ("mini", ["S3", "V4"])


def test_select_by_order():
    _, names = load_manifest()
    assert select(names, 1) == ["C1"]
    assert "S4" in select(names, 24)
    assert "A5" not in select(names, 24)


def test_trivial_corpus_is_empty():
    results = run_corpus(1)
    assert summary_rows(results) == []
    assert all(r.passed for r in results)


def test_run_group_s3():
    result = run_group("S3")
    assert result.passed, result.failures()
    assert [r["prime"] for r in result.reports] == [2, 3]
    names = {v.name for v in result.verdicts}
    assert {"theorem_energy", "theorem_nil", "oracle", "corollary_solvable", "corollary_large"} <= names


@pytest.mark.parametrize("n", range(1, 6))
def test_mn_rule_matches_dixon(n):
    assert mn_matches_character_table(n)


@pytest.mark.slow
def test_mn_rule_matches_dixon_s6():
    assert mn_matches_character_table(6)


@pytest.mark.slow
def test_corpus_up_to_24():
    results = run_corpus(24)
    failing = {r.group: r.failures() for r in results if not r.passed}
    assert not failing
    rows = summary_rows(results)
    assert any(r["group"] == "S4" and r["prime"] == 2 and r["energy"] == 54 for r in rows)


@pytest.mark.slow
def test_corpus_up_to_60_in_parallel():
    results = run_corpus(60, jobs=2)
    assert all(r.passed for r in results)
    _, names = load_manifest()
    assert [r.group for r in results] == select(names, 60)
    a5 = next(r for r in results if r.group == "A5")
    report = next(rep for rep in a5.reports if rep["prime"] == 5)
    assert len(report["blocks"]) == 2


@pytest.mark.slow
def test_full_corpus():
    results = run_corpus(720, jobs=2)
    failing = {r.group: r.failures() for r in results if not r.passed}
    assert not failing
