import json
import subprocess
import sys

import pytest

from domatic_lab import campaigns
from domatic_lab.cli import EXIT_ERROR, EXIT_NO, EXIT_OK, EXIT_TIMEOUT, main
from domatic_lab.corpus import reference_nae_pair, single_triple
from domatic_lab.errors import TimedOut
from domatic_lab.graph import complete_graph, cycle_graph
from domatic_lab.io import graph_from_json, partition_from_json, read_dimacs, write_dimacs
from domatic_lab.reductions import kaplan_shamir, nae_construct
from domatic_lab.sigma_rho import NATURALS, POSITIVE, check_partition


@pytest.fixture
def files(tmp_path):
    def put(name, content):
        p = tmp_path / name
        p.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(p)

    return put


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


class TestSolve:
    def test_delta_with_witness(self, capsys, files, tmp_path):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        wit = tmp_path / "w.json"
        code, out, _ = run(capsys, "solve", "delta", "--in", g, "--witness", str(wit))
        assert (code, out) == (EXIT_OK, "3")
        part = partition_from_json(json.loads(wit.read_text()))
        assert check_partition(complete_graph(3), part, NATURALS, POSITIVE)

    def test_json_format(self, capsys, files):
        g = files("c5.dimacs", write_dimacs(cycle_graph(5)))
        code, out, _ = run(capsys, "solve", "chi", "--in", g, "--format", "json")
        assert json.loads(out) == {"kind": "chi", "value": 3}

    def test_undefined_quantity(self, capsys, files):
        g = files("k1.dimacs", write_dimacs(complete_graph(1)))
        assert run(capsys, "solve", "gamma", "--in", g)[:2] == (EXIT_OK, "none")

    def test_srp_answers(self, capsys, files):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        assert run(capsys, "solve", "srp", "--in", g, "--k", "2", "--sigma", "0", "--rho", "N")[:2] == (EXIT_OK, "NO")
        assert run(capsys, "solve", "srp", "--in", g, "--k", "3", "--sigma", "0", "--rho", "N")[:2] == (EXIT_OK, "YES")

    def test_srp_missing_args(self, capsys, files):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        code, _, err = run(capsys, "solve", "srp", "--in", g, "--k", "2")
        assert code == EXIT_ERROR and "--sigma" in err

    def test_timeout_exit(self, capsys, files, hard_join):
        g = files("hard.dimacs", write_dimacs(hard_join))
        code, _, err = run(capsys, "solve", "alpha", "--in", g, "--budget-seconds", "0.3")
        assert code == EXIT_TIMEOUT and "timeout" in err

    def test_parse_error(self, capsys, files):
        g = files("bad.dimacs", "p edge 2 1\ne 1 3\n")
        assert run(capsys, "solve", "delta", "--in", g)[0] == EXIT_ERROR

    def test_cfsp(self, capsys, files, tmp_path):
        m = files("m.json", {"n": 2, "m": 2, "rows": ["11", "11"]})
        wit = tmp_path / "s.json"
        assert run(capsys, "solve", "cfsp", "--in", m, "--witness", str(wit))[:2] == (EXIT_OK, "1")
        assert json.loads(wit.read_text())["switches"] == 1
        assert run(capsys, "solve", "cfsp", "--in", m, "--oracle")[:2] == (EXIT_OK, "1")
        assert run(capsys, "solve", "cfsp", "--in", m, "--start", "1")[:2] == (EXIT_OK, "2")
        assert run(capsys, "solve", "cfsp", "--in", m, "--start", "5")[0] == EXIT_ERROR


class TestReduce:
    def test_ks_round_trip(self, capsys, files, tmp_path):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        out = tmp_path / "out" / "ks3"
        code, text, _ = run(capsys, "reduce", "ks", "--in", g, "--out", str(out))
        assert code == EXIT_OK and len(text.splitlines()) == 2
        want = kaplan_shamir(complete_graph(3))
        assert read_dimacs((tmp_path / "out" / "ks3.dimacs").read_text()) == want.graph
        assert graph_from_json(json.loads((tmp_path / "out" / "ks3.json").read_text())) == want

    def test_thm1_and_parity_chain(self, capsys, files, tmp_path):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        ks = str(tmp_path / "ks3")
        run(capsys, "reduce", "ks", "--in", g, "--out", ks)
        code, _, _ = run(capsys, "reduce", "thm1", "--a", ks + ".json", "--b", ks + ".json", "--out", str(tmp_path / "j"))
        assert code == EXIT_OK
        assert read_dimacs((tmp_path / "j.dimacs").read_text()).n == 66
        code, text, _ = run(capsys, "reduce", "parity", "--inputs", ks + ".json", ks + ".json", "--out", str(tmp_path / "p"))
        assert code == EXIT_OK and (tmp_path / "p.odd.dimacs").exists() and (tmp_path / "p.even.json").exists()

    def test_thm1_needs_decoration(self, capsys, files):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        code, _, err = run(capsys, "reduce", "thm1", "--a", g, "--b", g)
        assert code == EXIT_ERROR and "decoration" in err

    def test_nae(self, capsys, files, tmp_path):
        f1, f2 = reference_nae_pair()
        a, b = files("f1.json", f1.to_json()), files("f2.json", f2.to_json())
        run(capsys, "reduce", "nae", "--f1", a, "--f2", b, "--out", str(tmp_path / "nae"))
        assert read_dimacs((tmp_path / "nae.dimacs").read_text()) == nae_construct(f1, f2)

    def test_ht13_and_thm6(self, capsys, files, tmp_path):
        s = files("s.json", single_triple().to_json())
        code, out, _ = run(capsys, "reduce", "ht13", "--in", s, "--out", str(tmp_path / "h"), "--format", "json")
        assert code == EXIT_OK and json.loads(out)["n"] == [14]
        code, out, _ = run(capsys, "reduce", "thm6", "--s1", s, "--s2", s, "--out", str(tmp_path / "t"), "--format", "json")
        assert json.loads(out)["n"] == [56]

    def test_precondition_error(self, capsys, files):
        g = files("p3.dimacs", "p edge 3 2\ne 1 2\ne 2 3\n")
        code, _, err = run(capsys, "reduce", "ks", "--in", g)
        assert code == EXIT_ERROR and err


class TestDecide:
    def test_exact_domatic(self, capsys, files):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        assert run(capsys, "decide", "exact-domatic", "--in", g, "--set", "1,3")[:2] == (EXIT_OK, "YES")
        assert run(capsys, "decide", "exact-domatic", "--in", g, "--set", "5")[:2] == (EXIT_NO, "NO")
        assert run(capsys, "decide", "exact-domatic", "--in", g, "--set", "2,3")[0] == EXIT_ERROR

    def test_dnp(self, capsys, files):
        k3 = files("k3.dimacs", write_dimacs(complete_graph(3)))
        k2 = files("k2.dimacs", write_dimacs(complete_graph(2)))
        assert run(capsys, "decide", "dnp-odd", "--in", k3)[0] == EXIT_OK
        assert run(capsys, "decide", "dnp-geq", "--in", k3, "--other", k2)[0] == EXIT_OK
        assert run(capsys, "decide", "dnp-equ", "--in", k3, "--other", k2)[0] == EXIT_NO

    def test_exact_srp_not_monotone(self, capsys, files):
        g = files("k3.dimacs", write_dimacs(complete_graph(3)))
        code, _, err = run(capsys, "decide", "exact-srp", "--in", g, "--k", "2", "--sigma", "1", "--rho", "1")
        assert code == EXIT_ERROR

    def test_exact_cfsp(self, capsys, files):
        m = files("m.json", {"n": 2, "m": 2, "rows": ["11", "11"]})
        assert run(capsys, "decide", "exact-cfsp", "--in", m, "--set", "1,3")[0] == EXIT_OK
        assert run(capsys, "decide", "exact-cfsp", "--in", m, "--set", "0")[0] == EXIT_NO


class TestGenAndVerify:
    @pytest.mark.parametrize("kind", ["graph", "cnf3", "triples", "matrix"])
    def test_gen_deterministic(self, capsys, kind):
        a = run(capsys, "gen", kind, "--seed", "4")[1]
        b = run(capsys, "gen", kind, "--seed", "4")[1]
        assert a == b and json.loads(a)

    def test_gen_oracle_safe(self, capsys):
        assert run(capsys, "gen", "graph", "--n", "20", "--oracle-safe")[0] == EXIT_ERROR

    def test_verify_pass_and_report(self, capsys, tmp_path):
        report = tmp_path / "r.json"
        code, out, _ = run(capsys, "verify", "thm10-k1", "--report", str(report))
        assert code == EXIT_OK and "0 fail" in out
        data = json.loads(report.read_text())
        assert data["campaign"] == "thm10-k1" and data["summary"]["fail"] == 0

    def test_verify_timeout_exit(self, capsys, monkeypatch):
        def stalled(seed, budget=1.0):
            def check():
                raise TimedOut("stalled")

            return campaigns._run("parity-k1", seed, budget, [("x", {}, "never", check)])

        monkeypatch.setitem(campaigns.CAMPAIGNS, "parity-k1", stalled)
        code, out, _ = run(capsys, "verify", "parity-k1")
        assert code == EXIT_TIMEOUT and "1 timeout" in out

    def test_unknown_campaign(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nope"])
        assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "domatic_lab", "gen", "cnf3", "--seed", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and "clauses" in res.stdout
