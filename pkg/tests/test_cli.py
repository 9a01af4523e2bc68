import json

from genjack import cache
from genjack.cli import main, run_suite
from genjack.envelope import transition
from genjack.ring import Specialized, Symbolic, parse


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


def test_expand_examples(capsys):
    assert run(capsys, "expand", "--r", "1", "--mp", "[1]") == (0, "J_[1] = t2*s_[1]")
    assert run(capsys, "expand", "--r", "1", "--mp", "[]") == (0, "J_[] = 1")
    code, out = run(capsys, "expand", "--r", "3", "--mp", "[],[],[1]", "--format", "json")
    coeff = json.loads(out)["coefficients"]["[],[],[1]"]
    assert parse(coeff, 3) == parse("t2*(t1+t2-u1+u3)*(t1+t2-u2+u3)", 3)


def test_expand_text_is_parseable(capsys):
    _, out = run(capsys, "expand", "--mp", "[2],[]")
    body = out.split(" = ", 1)[1]
    assert "s_[2],[]" in body


def test_expand_cap(capsys):
    try:
        main(["expand", "--mp", "[5,4]"])
    except SystemExit as exc:
        assert "cap" in str(exc)
    else:
        raise AssertionError("size cap not enforced")


def test_matrix_and_cache(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["matrix", "--r", "2", "--n", "1", "--format", "json", "--output", str(out),
                 "--cache-dir", str(tmp_path / "c")]) == 0
    doc = json.loads(out.read_text())
    assert doc["header"]["kind"] == "T" and len(doc["index"]) == 2
    entries = {(l, m): v for l, m, v in doc["entries"]}
    assert parse(entries["[1],[]", "[],[1]"], 2) == parse("(t1+t2)*t2", 2)
    assert ("[],[1]", "[1],[]") not in entries
    first = (tmp_path / "c" / "T_r2_n1_symbolic.json").read_text()
    main(["matrix", "--r", "2", "--n", "1", "--format", "json", "--output", str(out),
          "--cache-dir", str(tmp_path / "c")])
    assert (tmp_path / "c" / "T_r2_n1_symbolic.json").read_text() == first


def test_cache_hit_identical(tmp_path):
    dom = Symbolic(2)
    fresh, path, hit = cache.cached_transition("U", 2, 2, dom, tmp_path)
    assert not hit
    again, _, hit = cache.cached_transition("U", 2, 2, dom, tmp_path)
    assert hit
    assert cache.to_document(again, dom) == cache.to_document(fresh, dom)
    assert all(again[k] == v for k, v in transition("U", 2, 2).entries.items())


def test_stale_cache_recomputed(tmp_path):
    dom = Symbolic(1)
    _, path, _ = cache.cached_transition("T", 1, 2, dom, tmp_path)
    doc = json.loads(path.read_text())
    doc["header"]["convention_hash"] = "0"
    doc["entries"] = []
    path.write_text(json.dumps(doc))
    mat, _, hit = cache.cached_transition("T", 1, 2, dom, tmp_path)
    assert not hit and mat[((2,),), ((2,),)] != 0


def test_specialized_header_and_threads(tmp_path):
    dom = Specialized.random(2, seed=5)
    mat, path, _ = cache.cached_transition("T", 2, 2, dom, tmp_path, seed=5, threads=2)
    doc = json.loads(path.read_text())
    assert doc["header"]["assignment"] == dom.point.to_json()
    assert all(mat[k] == v for k, v in transition("T", 2, 2, dom).entries.items())


def test_table_latex(capsys):
    code, out = run(capsys, "table", "--r", "1", "--n", "2", "--format", "latex")
    assert code == 0
    assert "J_{[2]} = " in out and "s_{[1,1]}" in out


def test_verify(capsys):
    code, out = run(capsys, "verify", "--suite", "all", "--max-n", "0")
    assert code == 0 and out.endswith("overall: pass")
    code, out = run(capsys, "verify", "--suite", "appendixB", "--format", "json")
    assert code == 0 and json.loads(out)["reports"][0]["checked"] == 16
    code, _ = run(capsys, "verify", "--suite", "hamiltonian", "--r", "2", "--max-n", "3")
    assert code == 0


def test_rank_one_suite_reports_failure():
    reps = run_suite("rank-one", max_n=1)
    assert not reps[0].ok
    assert reps[0].witnesses[0]["variant"] == "Jstar"
