import pytest

from conftest import LIVE_IDS, REGISTRY, instance
from orebaer.errors import UnknownClaim, UnknownExample
from orebaer.ore import OrePoly
from orebaer.registry import (
    CLAIM_CHECKS,
    PROPERTIES,
    REPORT_STATUSES,
    ExampleRecord,
    Registry,
    ReportEntry,
    check_expectation,
    instantiate_example,
    run_property,
    verify_all,
    verify_claim,
    verify_example,
)

SKIPPED = sorted(set(REGISTRY.examples) - set(LIVE_IDS))


def test_registry_contents():
    assert set(LIVE_IDS) == {"EX_2_1", "EX_2_2", "EX_2_3", "EX_2_4", "EX_3_3", "EX_3_5", "EX_FINAL"}
    assert set(SKIPPED) == {"EX_3_1", "EX_3_4", "EX_3_10"}
    assert len(REGISTRY.claims) == 10
    assert all(c.check in CLAIM_CHECKS for c in REGISTRY.claims.values())


def test_every_claim_lists_every_example():
    for c in REGISTRY.claims.values():
        assert set(c.expected) == set(LIVE_IDS), c.id
        assert set(c.expected.values()) <= set(REPORT_STATUSES)


def test_live_examples_carry_analog_notes():
    for i in LIVE_IDS:
        assert REGISTRY.example(i).analog_note


def test_skipped_examples_state_reason():
    for i in SKIPPED:
        rec = REGISTRY.example(i)
        assert rec.skipped and rec.reason.startswith("infinite ring required")
        with pytest.raises(UnknownExample):
            REGISTRY.instantiate(i)


def test_unknown_ids():
    with pytest.raises(UnknownExample):
        REGISTRY.example("EX_9_9")
    with pytest.raises(UnknownClaim):
        REGISTRY.claim("LEM_9_9")


def test_unknown_record_field_rejected():
    data = {"id": "X", "ring": "modular:2", "colour": "red"}
    with pytest.raises((TypeError, ValueError)):
        ExampleRecord.from_json(data)


def test_instantiation_examples():
    R, ctx = instantiate_example("EX_3_5")
    assert R.order == 4 and ctx.delta(R.parse("t")) == R.one
    R, ctx = instantiate_example("EX_2_4")
    assert R.order == 16 and ctx.sigma.is_automorphism
    R, ctx = instantiate_example("EX_FINAL")
    assert R.order == 9 and ctx.sigma.is_automorphism and not ctx.delta.is_zero


def test_instantiation_is_deterministic():
    a, b = Registry.load().instantiate("EX_2_1"), Registry.load().instantiate("EX_2_1")
    assert (a.ring.mul_table == b.ring.mul_table).all()
    assert (a.ctx.sigma.image == b.ctx.sigma.image).all()


@pytest.mark.parametrize("ex", LIVE_IDS)
def test_example_expectations_met(ex):
    entries = verify_example(ex, instances={ex: instance(ex)})
    assert entries
    for e in entries:
        assert e.expectation_met, (e.id, e.status, e.expected, e.detail.get("witness_mismatch"))


@pytest.mark.parametrize("ex", SKIPPED)
def test_skipped_example_gives_single_entry(ex):
    [e] = verify_example(ex)
    assert e.status == "skipped" and e.detail["reason"]


def test_matrix_units_expectation():
    v = run_property(instance("EX_3_5"), "matrix_units",
                     {"e11": "[0,t]", "e12": "[t]", "e21": "[0,1,t]", "e22": "[1,t]"})
    assert v.ok and v.detail["relations"] == 17


def test_matrix_units_detects_wrong_system():
    v = run_property(instance("EX_3_5"), "matrix_units",
                     {"e11": "[0,t]", "e12": "[t]", "e21": "[0,1]", "e22": "[1,t]"})
    assert not v.ok


def test_unknown_property():
    with pytest.raises(ValueError):
        run_property(instance("EX_3_5"), "noetherian")
    assert "skew_armendariz" in PROPERTIES


def test_claim_on_selected_examples():
    entries = verify_claim("LEM_2_1", examples=["EX_3_5", "EX_3_1"])
    assert [e.id for e in entries] == ["LEM_2_1/EX_3_1", "LEM_2_1/EX_3_5"]
    assert [e.status for e in entries] == ["skipped", "certified_bounded"]


def test_lem_2_4_on_compatible_example():
    [e] = verify_claim("LEM_2_4", examples=["EX_2_4"])
    assert e.status == "verified" and e.expectation_met


def test_lem_2_2_audit_on_dual_numbers():
    [e] = verify_claim("LEM_2_2", examples=["EX_3_5"])
    assert e.status == "hypothesis_not_met"
    assert e.detail["hypotheses_failed"] == ["skew_armendariz"]
    assert e.detail["nonconstant_found"] > 0
    assert e.detail["armendariz"]["status"] == "fails"


def test_lem_2_2_on_final_example():
    [e] = verify_claim("LEM_2_2", examples=["EX_FINAL"])
    assert e.status == "certified_bounded"
    assert e.detail["nonconstant_found"] == 0


def test_filters():
    assert verify_all(only=[]) == []
    [e] = verify_all(only=["EX_3_1"])
    assert e.status == "skipped" and "infinite" in e.detail["reason"]


def test_full_run_meets_all_expectations():
    entries = verify_all()
    unmet = [(e.id, e.status, e.expected) for e in entries if not e.expectation_met]
    assert unmet == []
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))


def test_entry_status_validated():
    with pytest.raises(ValueError):
        ReportEntry("x", "maybe")


def test_witness_only_serialised_when_refuted():
    e = ReportEntry("x", "verified", witness={"a": 1})
    assert e.to_json()["witness"] is None
    r = ReportEntry("y", "refuted", witness={"a": 1})
    assert r.to_json()["witness"] == {"a": 1}


def test_expectation_mismatch_flagged():
    inst = instance("EX_2_1")
    e = check_expectation(inst, {"property": "rigid", "status": "refuted", "witness": {"element": "[[0,2],[0,0]]"}})
    assert e.status == "refuted"
    assert e.detail["witness_mismatch"] == ["element"]
    assert not e.expectation_met


def test_instance_poly_and_cache():
    inst = instance("EX_3_5")
    assert inst.poly("[0,t]") == OrePoly.parse(inst.ctx, "[0,t]")
    assert inst.armendariz() is inst.armendariz()
