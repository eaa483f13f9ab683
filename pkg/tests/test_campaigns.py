import json

import pytest

from domatic_lab import campaigns, corpus
from domatic_lab.errors import TimedOut
from domatic_lab.graph import complete_graph
from domatic_lab.sat import nae3_decide, one_in_three_decide


class TestCorpus:
    def test_small_graphs_deterministic(self):
        a = corpus.small_graphs(3, 250)
        assert a == corpus.small_graphs(3, 250)
        assert len(a) == 250 and all(g.n <= 6 for g in a)

    def test_atlas_prefix(self):
        assert len(corpus.atlas_graphs(6)) == 208
        assert corpus.small_graphs(1, 300)[:208] == corpus.atlas_graphs(6)
        assert len(corpus.small_graphs(1, 15)) == 15

    def test_lemma3_corpus(self):
        graphs = corpus.lemma3_graphs(1)
        assert [label for label, _ in graphs[:4]] == ["K3", "C5", "K4", "W5"]
        assert len(graphs) == 24
        assert all(min(g.degree(v) for v in range(g.n)) >= 1 for _, g in graphs)

    def test_nae_pairs_cover_cases(self):
        pairs = corpus.nae_pairs(1, 21)
        outcomes = {(nae3_decide(a).sat, nae3_decide(b).sat) for a, b in pairs}
        assert len(pairs) == 21 and len(outcomes) == 4
        assert all(f.num_vars <= 4 and f.m <= 2 for pair in pairs for f in pair)

    def test_triple_systems_classes(self):
        groups = corpus.triple_systems(1, 10)
        for sat, group in groups.items():
            assert len(group) == 10
            assert all(one_in_three_decide(s).sat == sat for s in group)

    def test_matrix_corpora(self):
        assert len(corpus.all_matrices(3, 3)) == 512
        mats = corpus.random_matrices(1, 100, 4, 4, 10)
        assert len(mats) == 100 and all(len(tm.tasks()) <= 10 for tm in mats)

    def test_join_pairs(self):
        assert len(corpus.join_pairs(1, 50)) == 50


def _item(label, result):
    def check():
        if isinstance(result, Exception):
            raise result
        return result

    return label, {"label": label}, "expected", check


class TestReports:
    def test_status_tallies(self):
        rep = campaigns._run(
            "demo",
            1,
            1.0,
            [_item("a", (1, True)), _item("b", (2, False)), _item("c", TimedOut("slow"))],
        )
        assert [r.status for r in rep.records] == ["ok", "fail", "timeout"]
        assert rep.summary == {"ok": 1, "fail": 1, "timeout": 1}
        assert not rep.passed
        assert "demo: 1 ok, 1 fail, 1 timeout" in rep.table()

    def test_empty_report_does_not_pass(self):
        assert not campaigns.VerifyReport("x", 1, 1.0).passed

    def test_json_shape(self):
        rep = campaigns.run_campaign("thm10-k1")
        data = json.loads(json.dumps(rep.to_json(), default=str))
        assert set(data) == {"campaign", "seed", "budget", "summary", "records"}
        assert sum(data["summary"].values()) == len(data["records"])
        assert set(data["records"][0]) == {"instance", "digest", "expected", "observed", "status", "seconds"}

    def test_digest_stable(self):
        assert campaigns.digest(complete_graph(3)) == campaigns.digest(complete_graph(3))
        assert campaigns.digest(complete_graph(3)) != campaigns.digest(complete_graph(4))
        assert len(campaigns.digest({"a": 1})) == 12

    def test_thread_count_env(self, monkeypatch):
        monkeypatch.setenv("DOMATIC_LAB_THREADS", "3")
        assert campaigns.thread_count() == 3
        monkeypatch.setenv("DOMATIC_LAB_THREADS", "junk")
        assert campaigns.thread_count() == 1

    def test_threads_do_not_change_results(self, monkeypatch):
        serial = campaigns.oracle_cfsp(random_count=10)
        monkeypatch.setenv("DOMATIC_LAB_THREADS", "4")
        threaded = campaigns.oracle_cfsp(random_count=10)
        strip = lambda rep: [(r.instance, r.digest, r.observed, r.status) for r in rep.records]
        assert strip(serial) == strip(threaded)


@pytest.mark.parametrize("name", ["lemma3", "thm10-k1", "parity-k1", "thm8", "oracle-cfsp"])
def test_quick_campaigns_pass(name):
    rep = campaigns.run_campaign(name)
    assert rep.passed, rep.table()


def test_small_sweeps_pass():
    assert campaigns.oracle_srp(count=15).passed
    assert campaigns.fact1(count=15).passed
    assert campaigns.structural(count=15, pairs=5).passed


def test_budget_turns_into_timeout_records(hard_join):
    from domatic_lab.quantities import alpha

    def check():
        return alpha(hard_join, budget=0.2), True

    rep = campaigns._run("demo", 1, 0.2, [("hard", {"n": hard_join.n}, "alpha", check)])
    assert rep.summary == {"ok": 0, "fail": 0, "timeout": 1}
    assert str(rep.records[0].observed).startswith("timeout")
