import pytest

import autorbit


def test_landmarks():
    assert autorbit.omega(autorbit.group("A5")) == 4
    assert autorbit.omega(autorbit.group("E2^4")) == 2
    assert autorbit.omega(autorbit.group("PSL2(7)")) == 5


def test_permutations():
    p = autorbit.Permutation("(1 2 3)", 4)
    assert p.order() == 3
    assert p.images() == [2, 3, 1, 4]
    assert (p * p * p) == autorbit.Permutation("()", 4)
    assert str(p.inverse()) == "(1 3 2)"
    with pytest.raises(ValueError):
        autorbit.Permutation("(1 2 2)", 3)


def test_groups_and_invariants():
    a5 = autorbit.PermGroup(5, [autorbit.Permutation("(1 2 3 4 5)", 5),
                                autorbit.Permutation("(3 4 5)", 5)], "A5")
    assert a5.order() == 60
    assert autorbit.Permutation("(1 2 3)", 5) in a5
    assert autorbit.spectrum(a5) == {1, 2, 3, 5}
    assert not autorbit.is_solvable(a5)
    assert autorbit.automorphism_group_order(a5) == 120
    assert autorbit.isomorphic(a5, autorbit.group("PSL2(5)"))
    assert autorbit.direct_product(a5, autorbit.group("C7")).order() == 420


def test_analyze():
    r = autorbit.analyze(autorbit.group("ASL24A"))
    assert r["order"] == 960
    assert r["omega"] == 6
    assert 16 in r["characteristic_orders"]
    assert sum(size for _, size in r["orbits"]) == 960
    skipped = autorbit.analyze(autorbit.group("A6"), max_order=100)
    assert "skipped" in skipped


def test_group_files():
    g = autorbit.parse_group_file("name: S3\ndegree: 3\ngens: (1 2), [2,3,1]\n")
    assert g.order() == 6
    with pytest.raises(ValueError):
        autorbit.parse_group_file("degree: 3\ngens: (1 4)\n")


def test_unknown_names():
    with pytest.raises(KeyError):
        autorbit.group("PSL2(11)")


def test_verify():
    code, verdicts = autorbit.verify("lemma-2-4")
    assert code == 0
    assert len(verdicts) == 4
    assert all(status == "PASS" for status, _, _, _ in verdicts)
    assert "theorem-a" in autorbit.verify_targets()
