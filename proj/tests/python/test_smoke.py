import pytest

import sexakit
from sexakit import Quantity, Sexa, SexakitError


def test_literals_round_trip():
    x = Sexa("0;1,52,30")
    assert x == Sexa(1, 32)
    assert x.render() == "0;1,52,30"
    assert (x.numerator, x.denominator) == (1, 32)
    assert str(Sexa(1, 7)) == "1/7"
    assert Sexa(2**80).render() == Sexa(Sexa(2**80).render()).render()


def test_arithmetic():
    assert Sexa("20,3;13,21,33,45") + Sexa("1,5;55,4,41,15") == Sexa("21,9;8,26,15")
    assert sexakit.square("34;41,15") == Sexa("20,3;13,21,33,45")
    assert sexakit.halve("1,9;22,30") == Sexa("34;41,15")
    assert sexakit.sqrt_exact("21,9;8,26,15") == Sexa("35;37,30")
    assert Sexa("0;30") < Sexa("0;31")
    assert len({Sexa("0;30"), Sexa(1, 2)}) == 1


@pytest.mark.parametrize(
    "n, r",
    [("5", "0;12"), ("45", "0;1,20"), ("32", "0;1,52,30"), ("40,0", "0;0,1,30"),
     ("0;48", "1;15"), ("0;10", "6"), ("12", "0;5")],
)
def test_reciprocal_table(n, r):
    assert sexakit.reciprocal(n).render() == r


def test_errors_carry_kind():
    with pytest.raises(SexakitError) as irregular:
        sexakit.reciprocal(13)
    assert irregular.value.kind == "IrregularDivisor"
    assert irregular.value.factor == "13"
    with pytest.raises(SexakitError) as root:
        sexakit.sqrt_exact(2)
    assert root.value.kind == "NotAPerfectSquare"
    with pytest.raises(SexakitError) as render:
        Sexa(1, 7).render()
    assert render.value.kind == "NonTerminating"
    with pytest.raises(ValueError):
        Sexa("61")


def test_evaluate_modes():
    assert sexakit.evaluate("1,9;22,30 / 2") == Sexa("34;41,15")
    assert sexakit.evaluate("7;45 / 46;30", mode="recognize") == Sexa("0;10")
    assert sexakit.evaluate("1 / 7", mode="oracle") == Sexa(1, 7)
    with pytest.raises(ValueError):
        sexakit.evaluate("1", mode="guess")


def test_solvers():
    q = sexakit.solve_quadratic("14;3,45", "1,9;22,30", "4;41,15")
    assert q["root"] == Sexa(5)
    assert [s["value"] for s in q["trace"][:6]] == [
        "34;41,15", "20,3;13,21,33,45", "1,5;55,4,41,15", "21,9;8,26,15", "35;37,30",
        "1,10;18,45",
    ]
    sd = sexakit.solve_sum_difference("0;10", "0;10")
    assert (sd["x"], sd["y"]) == (Sexa("0;30"), Sexa("0;20"))
    assert sexakit.divide_by_recognition("7;45", "46;30") == Sexa("0;10")
    assert sexakit.apply_identity_sum_of_squares("0;10", "0;10") == Sexa("0;21,40")


def test_units_and_geometry():
    section = Quantity("0;30", "nindan") * Quantity("4;30", "kus")
    assert str(section) == "2;15 nindan-kus"
    assert str(Quantity(45, "nindan") * Quantity(32, "nindan-kus")) == "24,0 volume-sar"
    with pytest.raises(SexakitError) as mismatch:
        Quantity(1, "nindan") + Quantity(1, "kus")
    assert mismatch.value.kind == "DimensionMismatch"
    assert str(sexakit.trapezoid_cross_section(5, 3, 8)) == "32 nindan-kus"
    assert str(sexakit.length_from_volume("24,0", 32)) == "45 nindan"
    b = sexakit.breadths_from_constraints(5)
    assert (b["v"], b["z"]) == (Sexa(3), Sexa(8))
    d = sexakit.depth_from_labor(Quantity.parse("6 sar60"), 5, "40,0", "0;30")
    assert str(d["z"]) == "4;30 kus"
    assert str(d["z_water"]) == "3;36 kus"


def test_replay_bundled_corpus(tmp_path):
    assert sexakit.problem_ids() == ["smt24.p1", "smt24.p2", "smt25.p1"]
    for pid in sexakit.problem_ids():
        assert sexakit.replay(pid)["passed"]
    tampered = tmp_path / "t.corpus"
    tampered.write_text(sexakit.bundled_corpus_text().replace("step xy = 0;10", "step xy = 0;11"))
    report = sexakit.replay("smt24.p2", corpus=str(tampered))
    assert not report["passed"]
    assert [s["label"] for s in report["steps"] if s["status"] == "MISMATCH"] == ["xy"]
    with pytest.raises(SexakitError) as unknown:
        sexakit.replay("nosuch")
    assert unknown.value.kind == "UnknownProblem"
