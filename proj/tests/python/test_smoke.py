import os
import xml.dom.minidom
from fractions import Fraction

import pytest

import pernloci

SCENARIOS = os.environ.get(
    "PERNLOCI_SCENARIOS", os.path.join(os.path.dirname(__file__), "..", "..", "scenarios")
)


def scenario(name):
    return os.path.join(SCENARIOS, name)


def test_per4_param_exact():
    r = pernloci.per4_param("2")
    assert (r["b"], r["c"], r["v"]) == ("-5", "6", "-1/24")
    assert r["in_per4_prime"] and r["P4_vanishes"]


def test_per4_excluded():
    with pytest.raises(pernloci.PernlociError) as e:
        pernloci.per4_param("1/2")
    assert e.value.code == "EXCLUDED_RHO"


def test_reduced_part():
    assert pernloci.pern_poly(4, reduced=True)["p_red"] == "2*b + c"


def test_orbit_matches_python_fractions():
    b, c = Fraction(-5), Fraction(6)
    z = Fraction(3, 7)
    want = [z]
    for _ in range(4):
        z = 1 + b / z + c / (z * z)
        want.append(z)
    got = pernloci.orbit("-5", "6", "3/7", 4)
    assert [complex(*map(float, g.split(","))) for g in got] == [complex(float(w)) for w in want]


def test_per3_fiber():
    r = pernloci.per3_fiber("4/3")
    assert sorted(m["b"] for m in r["maps"]) == ["-2/3", "2"]


def test_directions_n5():
    d = pernloci.pern_roots(5)["directions"]
    assert sum(x["inherited"] for x in d) == 1


def test_scenario_pullback_and_certificate():
    s = pernloci.load_scenario(scenario("lemma52_rho100.json"))
    assert s.marked_labels == ["0", "inf", "1", "rho", "v"]
    p = s.pullback("gamma1")
    assert p["monodromy"] == "identity"
    assert [c["degree"] for c in p["components"]] == [1, 1]
    eq = s.equalize("Gamma", twists=True)
    assert eq["certificate"]["m"] == ["1"]
    assert eq["twist"]["word"] == "T_gamma^1"


def test_round_trip_and_svg():
    s = pernloci.load_scenario(scenario("fig1_delta0v.json"))
    resolved = s.serialize()
    t = pernloci.parse_scenario(resolved)
    assert t.serialize() == resolved
    xml.dom.minidom.parseString(s.plot(["delta_0v"]))


def test_not_reduced():
    with pytest.raises(pernloci.PernlociError) as e:
        pernloci.load_scenario(scenario("missing_v.json"))
    assert e.value.code == "NOT_REDUCED"
