import json
import multiprocessing
import shutil

import pytest

from knotspan.diagram import serialize_pd
from knotspan.generate import connected_sum
from knotspan.harness import (
    CACHE_ENV,
    CorpusEntry,
    InvariantCache,
    NonMinimalEntry,
    TheoremViolation,
    diagram_key,
    ingest,
    scan_table_1,
    verify_conjecture_3_3,
    verify_corollary_5_1,
    verify_corollary_5_2,
    verify_corollary_5_3,
    verify_theorem_1_1,
)
from knotspan.bracket import kauffman_bracket

from conftest import CURL_PD, DATA, TREFOIL_PD, corpus, corpus_upto, random_diagrams


def test_ingest_ten_crossing_corpus():
    entries = ingest(DATA / "knots_c10.pd")
    assert len(entries) == 165 and not entries.errors
    e = entries[0]
    assert e.name == "10_1" and e.declared_crossing_number == 10 and e.declared_alternating is True


def test_ingest_empty_file(tmp_path):
    p = tmp_path / "empty.pd"
    p.write_text("")
    assert list(ingest(p)) == []


def test_ingest_keeps_good_lines(tmp_path):
    p = tmp_path / "mixed.pd"
    p.write_text(
        "# comment\n"
        f"good c=3 alt=1 : {TREFOIL_PD}\n"
        "dup c=2 : X[1,1,2,2] X[1,1,2,2]\n"
        "\n"
        f"flag alt=7 : {TREFOIL_PD}\n"
        f"curl : {CURL_PD}\n"
    )
    entries = ingest(p)
    assert [e.name for e in entries] == ["good", "curl"]
    assert [line for line, _ in entries.errors] == [3, 5]
    assert entries[1].declared_crossing_number is None


def test_cache_roundtrip(tmp_path, trefoil):
    path = tmp_path / "cache.jsonl"
    cache = InvariantCache(path)
    key = diagram_key(trefoil)
    assert cache.get(key, "bracket") is None
    text = str(cache.bracket(trefoil))
    assert InvariantCache(path).get(key, "bracket") == text
    assert InvariantCache(path).bracket(trefoil) == kauffman_bracket(trefoil)
    lam = cache.lam(trefoil)
    assert InvariantCache(path).lam(trefoil) == lam


def test_cache_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "env.jsonl"
    monkeypatch.setenv(CACHE_ENV, str(path))
    InvariantCache().put("k", "bracket", "1")
    assert InvariantCache().get("k", "bracket") == "1"
    assert InvariantCache(None).path == path


def test_cache_skips_corrupt_lines(tmp_path, caplog):
    path = tmp_path / "c.jsonl"
    path.write_text('{"key": "a", "kind": "bracket", "value": "A"}\nnot json\n{"key": "b"}\n')
    cache = InvariantCache(path)
    assert cache.get("a", "bracket") == "A"
    assert "unreadable" in caplog.text


def test_key_ignores_labels(trefoil):
    from knotspan.diagram import parse_pd

    other = parse_pd("X[4,1,5,2] X[6,3,1,4] X[2,5,3,6]")
    assert diagram_key(other) == diagram_key(trefoil)


def _append(path, tag):
    cache = InvariantCache(path)
    for i in range(200):
        cache.put(f"{tag}{i}", "bracket", f"{tag}-{i}")


def test_concurrent_appends(tmp_path):
    path = tmp_path / "shared.jsonl"
    procs = [multiprocessing.Process(target=_append, args=(path, t)) for t in "xy"]
    for p in procs:
        p.start()
    for p in procs:
        p.join()
    lines = path.read_text().splitlines()
    assert len(lines) == 400
    assert all(json.loads(line) for line in lines)
    cache = InvariantCache(path)
    assert cache.get("x199", "bracket") == "x-199" and cache.get("y0", "bracket") == "y-0"


def test_theorem_on_ten_crossings():
    records = verify_theorem_1_1(corpus(10))
    hits = [r for r in records if r.span_jones == r.c - 1]
    assert len(hits) == 3
    assert all(r.adequate and r.gT_diagram == 1 for r in hits)
    assert all(r.theorem11_status == "adequate-genus-one" for r in hits)
    for r in records:
        if r.theorem11_status == "alternating":
            assert r.span_jones == r.c
    assert verify_corollary_5_2(records)["failures"] == []
    row = records[0].as_dict()
    assert row["span_jones"] == "10" and row["quasi_alternating"] is True


def test_non_minimal_entry_detected(trefoil):
    with pytest.raises(NonMinimalEntry):
        verify_theorem_1_1([CorpusEntry("t", trefoil, 4)])
    with pytest.raises(NonMinimalEntry):
        verify_theorem_1_1([CorpusEntry("t", trefoil, None)])


def test_violation_reported(trefoil, curl):
    # a trefoil with an extra curl has span 3 = c - 1 but is not adequate; a
    # table claiming it is minimal produces a violation
    D = connected_sum(trefoil, curl)
    bad = CorpusEntry("curly", D, 4)
    with pytest.raises(TheoremViolation) as info:
        verify_theorem_1_1([bad])
    assert info.value.pd == serialize_pd(D)
    recs = verify_theorem_1_1([bad], abort_on_violation=False)
    assert recs[0].theorem11_status == "VIOLATION"


def test_conjecture_small():
    rep = verify_conjecture_3_3(corpus_upto(8), 8)
    assert rep["checked"] == 35 and rep["violations"] == []
    for row in rep["rows"]:
        if row["gT_diagram"] == 0:
            assert row["slack"] == 0


def test_degree_report_ten():
    rep = verify_corollary_5_1(corpus(10), 10)
    assert rep["checked"] == 3 and rep["span_failures"] == []


def test_corollary_5_3_on_random_diagrams():
    rep = verify_corollary_5_3(random_diagrams(150, seed0=3, max_length=10))
    assert rep["checked"] > 0
    assert rep["at_bound"] == rep["adequate_genus_one"] + len(rep["alternating_branch_undecided"])


def test_scan_table(tmp_path):
    for c in (9, 10):
        shutil.copy(DATA / f"knots_c{c:02d}.pd", tmp_path)
    assert scan_table_1(tmp_path, [10]) == {10: 3}
    assert scan_table_1(tmp_path)[10] == 3
    with pytest.raises(FileNotFoundError):
        scan_table_1(tmp_path, [11])
    with pytest.raises(FileNotFoundError):
        scan_table_1(tmp_path / "nope")
