import pytest

import coxlab


def test_laplacian_display():
    assert coxlab.laplacian_charpoly("A3") == "t^3 + 12 t^2 + 48 t + 64"


def test_chain_numbers():
    assert coxlab.chain_number("A3") == 16
    assert coxlab.chain_number("H3") == 50
    assert coxlab.chain_number("A2xB2") == 72


def test_zeta():
    assert coxlab.zeta("A2", 2) == 12
    # (2*10+2)(2*10+6)(2*10+10) / (2*6*10)
    assert coxlab.zeta("H3", 2) == 143


def test_verify_report():
    report = coxlab.verify("chain-number", "A3")
    assert report["pass"] is True
    assert report["lhs"] == report["rhs"] == "16"
    assert "fr2" in coxlab.identity_names()


def test_group_and_lattice():
    info = coxlab.group_info("B3")
    assert info["order"] == 48
    assert coxlab.degrees("B3") == [[2, 4, 6]]
    lat = coxlab.lattice_summary("A3")
    assert lat["flats"] == 15
    assert lat["characteristic_polynomial"] == "t^3 - 6 t^2 + 11 t - 6"


def test_factorizations():
    fs = coxlab.factorizations("A2")
    assert len(fs) == 3
    assert all(len(f) == 2 for f in fs)


def test_errors():
    with pytest.raises(coxlab.InvalidType):
        coxlab.chain_number("Q7")
    with pytest.raises(coxlab.GroupTooLarge):
        coxlab.chain_number("E6")
    with pytest.raises(coxlab.CoxlabError):
        coxlab.group_info("E6")
    code, _, _ = coxlab.run(["verify", "chain-number", "nonsense"])
    assert code == 2
