import json

import pytest

from hankelforge.verify import (
    REGISTRY,
    Status,
    UnknownIdentity,
    VerifyOptions,
    registry_json,
    run_identity,
    thread_count,
)


def test_registry_sorted_and_described():
    ids = list(REGISTRY)
    assert ids == sorted(ids)
    data = json.loads(registry_json())
    assert [d["id"] for d in data] == ids


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        run_identity("no-such-id")


def test_passing_identity():
    rep = run_identity("aigner-m1", VerifyOptions(n_max=7))
    assert rep.ok
    assert [i.value for i in rep.instances] == ["1", "0", "-1", "-1", "0", "1", "1"]


def test_mismatch_has_witness():
    rep = run_identity("b-t", VerifyOptions(n_max=2, t=(1,)))
    assert not rep.ok
    bad = [i for i in rep.instances if i.status is Status.MISMATCH]
    assert bad and bad[0].lhs and bad[0].rhs
    assert "lhs:" in rep.to_text()


def test_guard_skips_and_force_lifts():
    rep = run_identity("q-catalan-det", VerifyOptions(n_max=7))
    assert rep.instances[-1].status is Status.SKIPPED and rep.ok
    rep = run_identity("aigner-m0", VerifyOptions(n_max=17, force=True))
    assert all(i.status is Status.EQUAL for i in rep.instances)


def test_report_grade_never_fails():
    rep = run_identity("viennot-t", VerifyOptions(n_max=2))
    assert rep.ok
    assert any(i.status is Status.REPORTED for i in rep.instances)
    rep = run_identity("motzkin-gf", VerifyOptions(n_max=2))
    assert rep.ok and all(i.status is Status.REPORTED for i in rep.instances)


def test_conjecture_grade():
    rep = run_identity("delannoy-1", VerifyOptions(n_max=3))
    assert rep.ok and "conjecture" in rep.to_text()


def test_output_is_deterministic():
    a = run_identity("kratt-classical", VerifyOptions(n_max=3), ).to_dict()
    b = run_identity("kratt-classical", VerifyOptions(n_max=3, threads=1)).to_dict()
    assert json.dumps(a) == json.dumps(b)
    assert "elapsed_seconds" not in a


def test_timing_opt_in():
    rep = run_identity("aigner-m0", VerifyOptions(n_max=2), timing=True)
    assert "elapsed_seconds" in rep.to_dict()


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("HANKELFORGE_THREADS", "2")
    assert thread_count(8) == 2
    monkeypatch.setenv("HANKELFORGE_THREADS", "0")
    assert thread_count(8) == 1
    monkeypatch.setenv("HANKELFORGE_THREADS", "many")
    with pytest.raises(ValueError):
        thread_count()


def test_amended_variants_pass():
    for ident in ("b-t-amended", "d-t-amended", "viennot-t-amended"):
        assert run_identity(ident, VerifyOptions(n_max=3)).ok
