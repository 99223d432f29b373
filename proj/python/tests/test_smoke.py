from fractions import Fraction

import pytest

import spectral_stokes as ss


def test_chain_verify():
    r = ss.chain_verify([3, 2])
    assert r["holds"] and r["mu"] == 4
    assert sorted(Fraction(x) for x in r["sp_stokes"]) == [Fraction(-1, 3), 0, 0, Fraction(1, 3)]


def test_e12_spectrum():
    sp = sorted(ss.qh_spectrum([Fraction(1, 3), Fraction(1, 7)]))
    assert len(sp) == 12
    assert sp[0] == Fraction(-11, 21) and sp[-1] == Fraction(11, 21)


def test_solve2_tables():
    r = ss.solve2(2)
    assert r["spp"] == [{"alpha": "-1/2", "level": 2, "mult": 1}, {"alpha": "1/2", "level": 0, "mult": 1}]
    assert r["types"][0]["str"] == "Seif(-1,1,2,1)"
    with pytest.raises(ss.StokesError, match="OutOfT"):
        ss.solve2(5)


def test_hor_and_classify():
    h = ss.hor_matrix([1, 1, 1])
    assert h["k"] == 1 and h["power_identity"]
    assert ss.hor_spectrum(1, ["1/3", "2/3"])["spectrum"] == ["1/6", "-1/6"]
    c = ss.classify([[1, 0, 0], [2, 1, 0], [2, 2, 1]])
    assert c["summary"] == "Seif(1,1,1,1) + Seif(-1,2,1)"
    assert ss.classify3([2, 2, 2])["stratum"] == "Exceptional"


def test_line3_and_orbits():
    assert ss.hor1_line3(3)["spp"] == [
        {"alpha": "-1", "level": 3, "mult": 1},
        {"alpha": "0", "level": 1, "mult": 1},
        {"alpha": "1", "level": -1, "mult": 1},
    ]
    o = ss.orbit_explore([[1, 1], [0, 1]], depth=4)
    assert o["charpoly_invariant"] and not o["exhausted"]
    rep = ss.stratum_experiment(3)
    assert set(rep) >= {"groups", "violations", "collisions"}


def test_cli_and_acceptance():
    code, out, err = ss.cli("chain", "verify", "--a", "3,2")
    assert code == 0 and out.startswith('{"a":[3,2],"mu":4,"holds":true')
    results = ss.run_acceptance([1, 2, 5])
    assert [r["id"] for r in results] == [1, 2, 5]
    assert all(r["pass"] for r in results)
