import json

import pytest

from ringlab.corpus import CorpusSpec, Limits, default_corpus, parse_corpus_line
from ringlab.errors import UnknownHypothesis, UnknownTheorem
from ringlab.registry import (
    CASES,
    DEFAULT_IDS,
    build_context,
    counterexample_search,
    verify,
)

MINI_LINES = [
    "Z12",
    "Z6",
    "Z2 x Z3",
    "triv(Z2, free(1))",
    "amalg(Z4, Z4, id, (2))",
    "Z ; ideal=(3) ; mcs=(units)",
    "Z x Z ; ideal=(0,2) ; mcs=(units,all)",
    "Z x Z ; ideal=(0,2) ; mcs=(units,units)",
    "amalgZ(4, 2) ; mcs=(units)",
    "polyring(Z3)",
]


@pytest.fixture(scope="module")
def mini():
    entries = tuple(parse_corpus_line(line) for line in MINI_LINES)
    return CorpusSpec(entries, Limits.defaults())


@pytest.fixture(scope="module")
def mini_records(mini):
    return list(verify(None, mini))


def test_registry_covers_the_catalogue():
    expected = {
        "T2.3", "T2.5", "P2.6", "T2.7", "P2.8", "P2.10", "T2.11", "T2.12",
        "C-zd", "P-jac", "P-zero", "P-colon", "P-annsum", "P-minidem",
        "P-sidem", "P-suz", "P-suzmax", "L3.1", "P3.2", "P3.3", "T4.1",
        "T4.2", "DM", "DEGEN",
    }
    assert expected <= set(CASES)
    assert set(DEFAULT_IDS) == set(CASES)


def test_default_corpus_contents():
    spec = default_corpus()
    texts = [e.text for e in spec.entries]
    assert "Z12" in texts
    assert "Z6" in texts
    assert any(t.startswith("Z x Z ; ideal=(0,2) ; mcs=(units,all)") for t in texts)
    assert any(t.startswith("polyring(Z12)") for t in texts)
    assert any(t.startswith("amalgZ(") for t in texts)
    kinds = {e.kind for e in spec.entries}
    assert kinds == {"finite", "arith", "poly", "amalgz"}


def test_mini_corpus_validates(mini):
    mini.validate()


def test_unknown_theorem(mini):
    with pytest.raises(UnknownTheorem):
        list(verify(("T9.9",), mini))


def test_unknown_hypothesis(mini):
    with pytest.raises(UnknownHypothesis):
        list(counterexample_search("T2.12", mini, ("nonsense",)))


def test_no_unexpected_violations(mini_records):
    assert all(r["outcome"] != "VIOLATION" for r in mini_records)


def test_every_theorem_produces_records(mini_records):
    seen = {r["theorem"] for r in mini_records}
    assert set(DEFAULT_IDS) <= seen


def test_records_are_replayable_shape(mini_records):
    fields = {
        "theorem", "entry", "recipe", "annotations", "hypotheses",
        "dropped", "outcome", "witness", "counterexample", "detail",
    }
    for rec in mini_records:
        assert fields <= set(rec)
        json.dumps(rec)  # JSON-serializable


def test_mcs_candidate_cap_keeps_units_and_full():
    entry = parse_corpus_line("Z12")
    limits = Limits.defaults().scaled(mcs_cap=4)
    ctx = build_context(entry, limits)
    cands = ctx.mcs_list()
    assert len(cands) <= 4
    members = [S.members for S in cands]
    assert frozenset(ctx.ring.units) in members
    assert frozenset(range(12)) in members


def test_determinism_across_runs(mini):
    first = list(verify(None, mini))
    second = list(verify(None, mini))
    assert first == second
    as_json = lambda recs: "\n".join(json.dumps(r, sort_keys=True) for r in recs)
    assert as_json(first) == as_json(second)


def test_parallel_matches_serial(mini):
    serial = list(verify(("DEGEN", "P-zero", "T2.12"), mini))
    parallel = list(verify(("DEGEN", "P-zero", "T2.12"), mini, jobs=2))
    assert serial == parallel


def test_hunt_without_drops_matches_verify(mini):
    plain = list(verify(("T2.11",), mini))
    hunted = list(counterexample_search("T2.11", mini, ()))
    for rec in hunted:
        rec.pop("expected", None)
    assert plain == hunted


def test_hunt_drop_prime_finds_expected_violation(mini):
    records = list(counterexample_search("T2.12", mini, ("prime",)))
    violations = [r for r in records if r["outcome"] == "VIOLATION"]
    assert violations, "dropping primality must expose the Z x Z example"
    assert all(r.get("expected") for r in violations)
    assert any(r["annotations"]["ideal"] == "(0,2)" for r in violations)


def test_violation_records_replay(mini):
    """A finding contains enough to re-run the single check it came from."""
    from ringlab.arith import arith_is_S_r_ideal, arith_subset_zd
    from ringlab.dsl import parse_arith_ideal, parse_arith_mcs, parse_arith_ring

    records = list(counterexample_search("T2.12", mini, ("prime",)))
    rec = next(r for r in records if r["outcome"] == "VIOLATION")
    expr = rec["entry"].split(";")[0].strip()
    ring = parse_arith_ring(expr)
    A = parse_arith_ideal(ring, rec["annotations"]["ideal"])
    S = parse_arith_mcs(ring, rec["annotations"]["mcs"])
    v = arith_is_S_r_ideal(A, S)
    assert v.holds == rec["detail"]["s_r"]
    assert arith_subset_zd(A) == rec["detail"]["inside_zd"]
    assert v.holds != arith_subset_zd(A)  # the violated equivalence


def test_exit_code_contract():
    from ringlab.cli import exit_code_for

    clean = [{"outcome": "VERIFIED"}, {"outcome": "VACUOUS"}]
    assert exit_code_for(clean) == 0
    assert exit_code_for(clean + [{"outcome": "VIOLATION"}]) == 1
    assert exit_code_for(clean + [{"outcome": "VIOLATION", "expected": True}]) == 0


def test_size_limit_env_override(monkeypatch):
    from ringlab import config

    monkeypatch.setenv(config.SIZE_LIMIT_ENV, "64")
    assert config.size_limit() == 64
    monkeypatch.setenv(config.SIZE_LIMIT_ENV, "junk")
    assert config.size_limit() == config.DEFAULT_SIZE_LIMIT
    monkeypatch.delenv(config.SIZE_LIMIT_ENV)
    assert config.size_limit() == config.DEFAULT_SIZE_LIMIT


def test_hunt_drop_reduced_terminates(mini):
    records = list(counterexample_search("P2.10", mini, ("reduced",)))
    assert records
    for rec in records:
        if rec["outcome"] == "VIOLATION":
            assert rec.get("expected")


def test_build_context_kinds(mini):
    kinds = [build_context(e, mini.limits).kind for e in mini.entries]
    assert kinds.count("arith") == 3
    assert kinds.count("amalgz") == 1
    assert kinds.count("poly") == 1


def test_p26_verified_on_failing_entry(mini_records):
    hits = [
        r
        for r in mini_records
        if r["theorem"] == "P2.6" and r["outcome"] == "VERIFIED"
    ]
    assert hits
    detail = hits[0]["detail"]
    assert detail["B_meets_regulars"] and detail["BK_in_A"]


def test_degen_nonvacuous(mini_records):
    degen = [r for r in mini_records if r["theorem"] == "DEGEN"]
    assert degen and all(r["outcome"] == "VERIFIED" for r in degen)


# -- CLI ---------------------------------------------------------------------------


def test_cli_ideals(capsys):
    from ringlab.cli import main

    assert main(["ideals", "Z12"]) == 0
    out = capsys.readouterr().out
    assert "6 ideals" in out


def test_cli_classify(capsys):
    from ringlab.cli import main

    assert main(["classify", "Z12", "--ideal", "4", "--all-predicates"]) == 0
    out = capsys.readouterr().out
    assert "r-ideal" in out and "Holds" in out


def test_cli_poly_matches_catalogue_example(capsys):
    from ringlab.cli import main

    assert main(["poly", "Z3", "kernel", "1", "0", "--mcs", "1,2", "--degree", "3"]) == 0
    out = capsys.readouterr().out
    assert "NO at degree 1, counterexample (x+2, 1)" in out


def test_cli_localize(capsys):
    from ringlab.cli import main

    assert main(["localize", "Z6", "--mcs", "3"]) == 0
    out = capsys.readouterr().out
    assert "size 2" in out


def test_cli_parse_error_exit_code(capsys):
    from ringlab.cli import main

    assert main(["ideals", "Q8"]) == 2


def test_cli_verify_writes_json(tmp_path, capsys):
    from ringlab.cli import main

    corpus = tmp_path / "tiny.corpus"
    corpus.write_text("Z6\nZ ; ideal=(3) ; mcs=(units)\n", encoding="utf-8")
    out_path = tmp_path / "report.jsonl"
    code = main(["verify", "--corpus", str(corpus), "--json", str(out_path)])
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines
    for line in lines:
        rec = json.loads(line)
        assert "millis" not in rec


def test_cli_verify_timings_adds_wall_time(tmp_path, capsys):
    from ringlab.cli import main

    corpus = tmp_path / "tiny.corpus"
    corpus.write_text("Z6\n", encoding="utf-8")
    out_path = tmp_path / "report.jsonl"
    code = main(["verify", "--corpus", str(corpus), "--json", str(out_path), "--timings"])
    assert code == 0
    recs = [json.loads(line) for line in out_path.read_text().strip().splitlines()]
    assert all("millis" in r and r["millis"] >= 0 for r in recs)
