import json

import pytest

import u3alg


def test_census_small_genus():
    rows = [u3alg.simple_type_census(g) for g in (1, 2)]
    assert [r["count"] for r in rows] == [1, 9]
    assert all(r["match"] for r in rows)
    assert rows[1]["eigen_count"] == 27


def test_eigenvalue_set_size():
    assert len(u3alg.eigenvalue_set(1)) == 3
    assert len(u3alg.eigenvalue_set(2, 2)) == 27
    assert len(u3alg.c_lattice(3)) == 25
    with pytest.raises(ValueError):
        u3alg.eigenvalue_set(2, 3)


def test_zeta_table():
    table = u3alg.zeta_table(1, 0, m_max=3)
    assert table[0] == "1"
    assert table[1] == "-a2"


def test_lattice_count():
    assert [u3alg.lattice_count(n) for n in range(7)] == [0, 1, 1, 2, 3, 4, 5]


def test_elliptic():
    e = u3alg.elliptic_coefficients(2, 0)
    assert e["routes_agree"] and e["support_ok"]
    assert e["coefficients"][(1, 0)] == ["1/3", "0", "0", "0"]
    assert e["d_top_stated"] == "2/3"


def test_euler_and_alexander():
    assert u3alg.framed_euler_char([2], 3, "orbit") == 4
    assert u3alg.framed_euler_char([2], 3, "direct") == 4
    trefoil = u3alg.alexander_u3([1, -1, 1])
    assert trefoil[(0, 0)] == 1 and trefoil[(1, 1)] == -1
    assert trefoil == u3alg.alexander_u3([1, -1, 1], "rule")
    with pytest.raises(ValueError):
        u3alg.alexander_u3([1, 1, 1])


def test_blowup_k3():
    spec = u3alg.k3_spec_json()
    assert len(json.loads(spec)["Q"]) == 22
    gamma = ["1"] + ["0"] * 21
    lam = ["0", "1/2"] + ["0"] * 20
    for through_e in (False, True):
        r = u3alg.verify_blowup(spec, gamma, lam, order=5, through_e=through_e)
        assert r["identity_holds"] and r["factor_forms_agree"]


def test_cli_roundtrip():
    code, out, _ = u3alg.run_cli(["euler", "--group", "2", "--N", "3"])
    assert code == 0
    assert json.loads(out)["records"][0]["orbit"] == 4
    code, _, err = u3alg.run_cli(["spectrum", "--d", "3"])
    assert code == 2 and "error" in err
