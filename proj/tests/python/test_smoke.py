from fractions import Fraction
import json

import pytest

import toricbound as tb


def test_builtins():
    assert set(tb.builtin_names()) >= {"hexagon", "triangle3", "cube-unimodular", "cube-nonunimodular"}
    hexagon = tb.polytope_info("hexagon")
    assert hexagon["volume"] == 6
    assert hexagon["signature"] == 2
    assert hexagon["cox_oriented"] and hexagon["regular"]
    assert tb.polytope_info("cube-nonunimodular")["signature"] == 4


def test_posets():
    two_chains = '{"elements": ["a1", "a2", "b1", "b2"], "covers": [["a1", "a2"], ["b1", "b2"]]}'
    assert tb.sign_imbalance(two_chains) == 2
    assert tb.linear_extension_count(two_chains) == 6
    assert tb.chain_union_imbalance([2, 2]) == 2
    assert tb.poset_polytope_signature(two_chains, "order") == 2
    assert tb.poset_polytope_signature(two_chains, "chain") == 2
    with pytest.raises(tb.Error):
        tb.sign_imbalance('{"elements": ["a", "a"]}')


def test_solve():
    rep = tb.solve_builtin("triangle3", [[4, -11, 4], [-13, -1, 24]])
    assert rep["n_real"] == 9 and rep["n_complex"] == 9 and rep["generic"]
    sample = tb.sample_system("hexagon", seed=5, s="fixed:1/2")
    assert sample["s"] == Fraction(1, 2)
    rep = tb.solve_json(sample["json"])
    assert rep["n_complex"] == 6
    assert rep["n_real"] % 2 == 0 and rep["n_real"] >= 2
    assert tb.center_check("hexagon")["verdict"] == "avoided"


def test_factor():
    assert [row[2] for row in tb.factorization_table([4, 4, 5])] == [90, 210, 666, 2226, 7434, 25410, 90090]
    assert tb.factorization_bounds([4, 4, 5]) == (90, 90090, 7)
    assert tb.count_real_factorizations([2, 3], 3, 1) == tb.count_real_factorizations([2, 3], 3, 1, brute_force=True)
    assert tb.count_for_target([1, 1], [1, 3, 2]) == 2
    assert tb.count_for_target([1, 1], [1, 1, 1]) == 0


def test_experiment():
    rep = tb.run_experiment("hexagon", trials=30, seed=2)
    assert rep["histogram"] == {2: 30}
    assert rep["violations"] == 0
    assert tb.emit_report(rep, "csv") == "real_count,occurrences\n2,30\n"
    back = tb.report_from_json(tb.emit_report(rep, "json"))
    assert back == rep
    assert json.loads(tb.emit_report(rep, "json"))["lower_bound_used"] == 2
