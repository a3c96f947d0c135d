import json

import pytest

import foxjump

TREFOIL = "gens: a b\nrel: a^2 b^-3\n"


def test_builtin_matrix_shape():
    m = foxjump.fox_matrix()
    assert m["variables"] == ["r", "s"]
    assert len(m["entries"]) == 36
    assert m["images"]["x"] == [1, -1]


def test_trefoil_matrix():
    m = foxjump.fox_matrix(TREFOIL)
    assert [e["text"] for e in m["entries"]] == ["t^3 + 1", "-t^4 - t^2 - 1"]


def test_abelianization():
    assert foxjump.abelianization() == {"free_rank": 2, "torsion": []}
    assert foxjump.abelianization("gens: a b\nrel: a^2\n") == {"free_rank": 1, "torsion": [2]}


def test_sublattices_match_divisor_sum():
    for n in range(1, 30):
        expected = sum(d for d in range(1, n + 1) if n % d == 0)
        assert len(foxjump.sublattices(n)) == expected == foxjump.divisor_sum(n)
    assert foxjump.sublattices(2) == [[1, 0, 2], [1, 1, 2], [2, 0, 1]]


def test_census():
    c = foxjump.census(n_max=4)
    assert [t["rows"] for t in c["summary"]["per_n"]] == [1, 3, 4, 7]
    assert all(row["b1"] == 2 for row in c["rows"])
    free = foxjump.census("gens: x y\n", n_max=3)
    assert all(row["b1"] == row["n"] + 1 for row in free["rows"])


def test_strata_report():
    r = foxjump.certify_strata(modulus_bound=3, samples=5, seed=1)
    assert r["divisibility"]["checked"] == 220
    assert r["line"]["generic_rank"] == 2
    assert r["sampling"]["seed"] == 1
    assert r["verdict"] in ("confirmed", "refuted")
    with pytest.raises(ValueError):
        foxjump.certify_strata(matrix="other")


def test_invariants():
    s = foxjump.cover_invariants(5)
    assert (s["q"], s["p_g"], s["c2"], s["c1_sq"]) == (1, 5, 15, 45)
    assert s["ball_quotient"]
    with pytest.raises(foxjump.BoundViolation):
        foxjump.surface_invariants(1, 2, 5)


def test_errors():
    with pytest.raises(foxjump.ParseError):
        foxjump.fox_matrix("gens: x\nrel: x w\n")
    with pytest.raises(ValueError):
        foxjump.cover_invariants(0)


def test_cli_in_process():
    status, out, _ = foxjump.run_cli(["count", "--n", "4", "--format", "json"])
    assert status == 0
    assert json.loads(out)["count"] == 7
    assert foxjump.run_cli(["nonsense"])[0] == 2


def test_builtin_round_trip():
    text = foxjump.builtin_presentation()
    assert foxjump.fox_matrix(text)["entries"][0]["relation"] == 1
    assert len(text.splitlines()) == 13
