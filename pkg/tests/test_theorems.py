import json

import pytest

from hyperlab import axioms
from hyperlab.modelio import parse_model
from hyperlab.samples import cyclic_group_table
from hyperlab.theorems import (
    THEOREM_IDS,
    qmp_premise_pairs,
    qmp_property_checks,
    search_independence,
    verify,
)

from conftest import verify_cached

import oracles


def test_unknown_theorem_and_order_caps():
    with pytest.raises(ValueError, match="unknown theorem"):
        verify("T99", 2)
    with pytest.raises(ValueError, match="outside"):
        verify("T3", 4)
    with pytest.raises(ValueError, match="outside"):
        verify("T2", 0)


def test_t2_order2and3():
    r = verify("T2", 2)
    assert r.premise_models == 8  # the labeled semigroups on two elements
    assert r.conclusion_holds
    r = verify("T2", 3)
    assert r.premise_models == 113  # the labeled semigroups on three elements
    assert r.space_size == 3 ** 9
    assert r.conclusion_holds


def _composition_identity_and_inverses(rows):
    n = len(rows)
    for e in range(n):
        if all(rows[e][x] == {x} and rows[x][e] == {x} for x in range(n)):
            return all(
                any(rows[x][y] == {e} and rows[y][x] == {e} for y in range(n))
                for x in range(n)
            )
    return False


def test_t2_drop_associativity_breaks_the_biconditional():
    r = verify("T2", 3, drop_premises=True)
    entry = r.independence_witnesses[0]
    assert entry["dropped"] == "associative"
    table = parse_model(entry["model"])
    rows = oracles.from_table(table)
    assert not oracles.law_holds(rows, "associative")
    assert oracles.law_holds(rows, "reproductive") != _composition_identity_and_inverses(rows)


def test_t3_order2_oracle():
    r = verify("T3", 2, oracle=True, drop_premises=True)
    assert r.space_size == 256
    assert r.premise_models == 14
    assert r.conclusion_holds
    assert r.counterexample is None
    dropped = {e["dropped"]: e for e in r.independence_witnesses}
    assert set(dropped) == {"associative", "reproductive"}
    assert "model" in dropped["associative"]
    assert "model" in dropped["reproductive"]
    # dropping associativity leaves the reproductive table with empty corners
    witness = parse_model(dropped["associative"]["model"])
    assert witness.cells == (0, 0b11, 0b11, 0)
    # dropping reproductivity leaves the degenerate table
    witness = parse_model(dropped["reproductive"]["model"])
    assert witness.cells == (0, 0, 0, 0)


def test_t3_order3_pruned_matches_oracle_count():
    pruned = verify_cached("T3", 3)
    assert pruned.conclusion_holds
    assert pruned.premise_models == 23192
    assert pruned.space_size == 8 ** 9


@pytest.mark.slow
def test_t3_order3_oracle_mode():
    oracle = verify_cached("T3", 3, oracle=True)
    assert oracle.conclusion_holds
    assert oracle.premise_models == 23192


def test_t7_t9_t11_order2():
    r = verify("T7", 2)
    assert r.premise_models == 65 and r.conclusion_holds
    r = verify("T9", 2)
    assert r.premise_models == 16 and r.conclusion_holds
    r = verify("T11", 2)
    assert r.premise_models == r.space_size == 256
    assert r.conclusion_holds


def test_t7_t9_t11_order3():
    r = verify_cached("T7", 3)
    assert r.conclusion_holds
    assert r.premise_models == 15322445
    r = verify_cached("T9", 3)
    assert r.conclusion_holds
    assert r.premise_models == 157510  # tables with repro and either inversion
    r = verify_cached("T11", 3)
    assert r.conclusion_holds


def test_t7_witnesses_on_drop():
    r = verify("T7", 2, drop_premises=True)
    entry = r.independence_witnesses[0]
    table = parse_model(entry["model"])
    assert not axioms.check_law(table, "cellwise-nonempty").holds


def test_qmp_pairs_contain_all_group_tables():
    for order in (1, 2, 3):
        pairs = qmp_premise_pairs(order)
        tables = {t.cells for t, _e in pairs}
        group = cyclic_group_table(order)
        assert group.cells in tables


def test_t13_t24_psuite_order2and3():
    for order in (2, 3):
        r13 = verify_cached("T13", order)
        r24 = verify_cached("T24", order)
        rp = verify_cached("P14-P23", order)
        assert r13.conclusion_holds and r24.conclusion_holds and rp.conclusion_holds
        assert r13.premise_models == r24.premise_models == rp.premise_models
        assert r13.extras["with_commutativity"]["conclusion_holds"]
    assert verify_cached("T13", 3).premise_models == 6


def test_t24_weak_reading_fails_at_order3():
    r = verify_cached("T24", 3)
    weak = r.extras["weak_polysymmetry_reading"]
    assert weak["premise_models"] == 9093
    assert not weak["conclusion_holds"]
    model = parse_model(weak["counterexample"]["model"])
    e = weak["counterexample"]["element"]
    assert axioms.check_polysymmetry(model, e, weak=True).holds
    assert not axioms.check_reversibility_poly(model, e, weak=True).holds


def test_qmp_property_checks_on_group():
    table = cyclic_group_table(3)
    assert all(ok for _cid, ok in qmp_property_checks(table, 0))


def test_qmp_suite_order4():
    r13 = verify_cached("T13", 4)
    r24 = verify_cached("T24", 4)
    rp = verify_cached("P14-P23", 4)
    assert r13.premise_models == r24.premise_models == rp.premise_models == 32
    assert r13.conclusion_holds and r24.conclusion_holds and rp.conclusion_holds
    assert "note" in r24.extras["weak_polysymmetry_reading"]


def test_qmp_spread_matches_direct_per_element_sweep():
    from hyperlab.theorems import _sweep_tables

    for order in (2, 3):
        direct = []
        for e in range(order):
            cs = (
                ("law", "associative"),
                ("identity-at", e),
                ("polysymmetry-at", e, False),
            )
            direct.extend((t.cells, e) for t in _sweep_tables(order, cs, False, 1))
        spread = [(t.cells, e) for t, e in qmp_premise_pairs(order)]
        assert sorted(direct) == sorted(spread)


@pytest.mark.slow
def test_t25_t26_t27_order4():
    r = verify_cached("T25", 4)
    assert r.premise_models == 1560 and r.conclusion_holds
    assert verify_cached("T26", 4).conclusion_holds
    r27 = verify_cached("T27", 4)
    assert r27.conclusion_holds
    bare = r27.extras["premise_sets"]["associative+commutative+unique-opposite"]
    assert bare["premise_models"] == 6000 and bare["biconditional_holds"]


def test_t25_t26_t27_order2and3():
    assert verify_cached("T25", 2).premise_models == 4
    assert verify_cached("T26", 2).conclusion_holds
    r = verify_cached("T27", 2)
    assert r.premise_models == 8 and r.conclusion_holds
    r25 = verify_cached("T25", 3)
    assert r25.premise_models == 45 and r25.conclusion_holds
    assert verify_cached("T26", 3).conclusion_holds
    r27 = verify_cached("T27", 3)
    assert r27.conclusion_holds
    sets = r27.extras["premise_sets"]
    bare = sets["associative+commutative+unique-opposite"]
    scalar = sets["associative+commutative+unique-opposite+scalar-zero"]
    assert bare["premise_models"] == 105 and bare["biconditional_holds"]
    assert scalar["premise_models"] == 57 and scalar["biconditional_holds"]


def test_t28_model_sets_identical():
    for order, count in ((2, 2), (3, 5)):
        r = verify_cached("T28", order)
        assert r.conclusion_holds
        assert r.extras["model_sets_identical"]
        assert r.extras["def15_models"] == r.extras["def14_models"] == count


def test_t6_order2and3():
    r = verify_cached("T6", 2)
    assert r.premise_models == 14 and r.conclusion_holds
    assert r.extras["row_emptiness_coherent"]
    r = verify_cached("T6", 2, oracle=True)
    assert r.premise_models == 14 and r.conclusion_holds
    r = verify_cached("T6", 3)
    assert r.premise_models == 120 and r.conclusion_holds
    assert r.extras["additive_groups"] == 3


@pytest.mark.slow
def test_t6_order3_oracle_matches_pruned():
    assert verify_cached("T6", 3, oracle=True, workers=8).premise_models == 120


def test_t6_row_engine_matches_cell_engine():
    from hyperlab.theorems import _t6_add_tables, _t6_mul_search, _t6_mul_search_generic

    for order in (2, 3):
        for zero, add in _t6_add_tables(order):
            rows = sorted(m.mul.cells for m, _ in _t6_mul_search(add, zero, order, True))
            cells = sorted(
                m.mul.cells for m, _ in _t6_mul_search_generic(add, zero, order, True)
            )
            assert rows == cells


def test_t6_order4_rejected():
    with pytest.raises(ValueError, match="outside"):
        verify("T6", 4)


def test_t29_bundled_family():
    r = verify_cached("T29", 2)
    assert r.conclusion_holds
    assert r.premise_models == 11
    assert r.extras["noncommutative_premise_models"] == 0
    assert r.extras["opposite_scalar_action_negates"]


def test_t29_order3():
    r = verify_cached("T29", 3)
    assert r.conclusion_holds
    assert r.premise_models == 26
    assert r.extras["opposite_scalar_action_negates"]


def test_oracle_equals_default_at_order2():
    for tid in ("T3", "T6", "T7", "T9", "T13", "T24", "P14-P23", "T25", "T26", "T27", "T28"):
        default = verify(tid, 2)
        oracle = verify(tid, 2, oracle=True)
        assert default.premise_models == oracle.premise_models, tid
        assert default.conclusion_holds == oracle.conclusion_holds, tid


def test_all_reports_have_invariants():
    for tid in THEOREM_IDS:
        r = verify_cached(tid, 2)
        assert r.premise_models <= r.space_size
        assert r.conclusion_holds == (r.counterexample is None)
        payload = r.to_json()
        json.dumps(payload)  # serializable


def test_independence_witnesses_revalidate():
    r = verify_cached("T3", 2, drop_premises=True)
    for entry in r.independence_witnesses:
        table = parse_model(entry["model"])
        rows = oracles.from_table(table)
        kept = {"associative", "reproductive"} - {entry["dropped"]}
        for law in kept:
            assert oracles.law_holds(rows, law)
        assert not oracles.law_holds(rows, "cellwise-nonempty")


def test_search_independence_examples():
    hit = search_independence(["associative"], "cellwise-nonempty", 1)
    assert parse_model(hit["model"]).cells == (0,)
    none = search_independence(["associative", "reproductive"], "cellwise-nonempty", 2)
    assert none == {"none_at_order": 2}
    hit = search_independence(["reproductive"], "associative", 2)
    table = parse_model(hit["model"])
    rows = oracles.from_table(table)
    assert oracles.law_holds(rows, "reproductive")
    assert not oracles.law_holds(rows, "associative")


def test_search_independence_validation():
    with pytest.raises(ValueError, match="unknown id"):
        search_independence(["nope"], "associative", 2)
    with pytest.raises(ValueError, match="cap"):
        search_independence(["associative"], "reproductive", 5)
    with pytest.raises(ValueError, match="conclusion"):
        search_independence(["reversibility-poly"], "associative", 2)


def test_verify_deterministic_across_workers():
    for tid, order in (("T3", 2), ("T7", 3), ("T13", 2)):
        a = verify(tid, order, drop_premises=True, workers=1).to_json(
            include_wall_time=False
        )
        b = verify(tid, order, drop_premises=True, workers=8).to_json(
            include_wall_time=False
        )
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
