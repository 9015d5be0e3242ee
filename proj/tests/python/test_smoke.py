import json

import pytest

import axesk


def test_counts():
    assert axesk.cyc_count(3, 12) == 335
    assert axesk.cyc_count(4, 12) == 44220
    assert axesk.a_count(3, 6) == 66
    assert axesk.grw_c(3, 2) == 3
    assert len(axesk.enumerate_necklaces(3, 6)) == 9


def test_big_values_are_python_ints():
    assert axesk.cyc_count(6, 40) > 2**63


def test_k_groups():
    k2 = axesk.k_groups(3, 3, 2, n=1)
    assert k2["symbolic"] == "W_1(k)^3"
    assert k2["concrete"] == "(Z/3)^3"
    assert axesk.k_groups(2, 3, 4)["terms"] == [(2, 3), (1, 3)]
    assert axesk.tc_local(1, 1, 3, 3, 3)["symbolic"] == "W_1(k)^2"


def test_homology_and_connes():
    assert axesk.homology("x1x2x3x1x2x3") == {5: "Z/2"}
    assert abs(axesk.connes("x1x2x1x2")) == 2


def test_char_zero():
    assert axesk.k_char_zero(2, 3, trdeg=0)["rendering"] == "k^3"
    assert axesk.hc(2, 3, birelative=True)["rendering"] == "k^2 ⊕ (Ω^1)^3"
    assert axesk.hc(1, 3, trdeg=1)["infinite_axis_part"] == (1, 3)


def test_errors_raise():
    with pytest.raises(axesk.AxeskError):
        axesk.k_groups(4, 3, 2)


def test_cli_json():
    code, out, _ = axesk.run_cli(["k", "--p", "3", "--d", "3", "--q", "6", "--n", "1", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["concrete"] == "(Z/9)^3 ⊕ (Z/3)^15"
