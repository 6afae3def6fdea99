import io
import json
from pathlib import Path


from arrcoh import cli
from arrcoh.documents import load_corpus

CORPUS = Path(cli.__file__).parent / "corpus"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, json.loads(out) if out else None


def doc(name):
    return CORPUS / f"{name}.json"


def test_betti_triangle():
    code, report = run_json("betti", doc("triangle"))
    assert code == 0
    assert report == {"command": "betti", "betti": [1, 3, 3], "beta": [1, 2, 1]}


def test_betti_text():
    code, out, _ = run("betti", doc("triangle"))
    assert out == "b    = [1, 3, 3]\nbeta = [1, 2, 1]\n"


def test_poset_report():
    code, report = run_json("poset", doc("concurrent_3"))
    assert code == 0
    assert report["flats"][0] == {"hyperplanes": [], "codim": 0, "mobius": 1}
    assert report["flats"][-1] == {"hyperplanes": [1, 2, 3], "codim": 2, "mobius": 2}


def test_cohomology_both_four_lines():
    code, report = run_json("cohomology", doc("concurrent_4"), "--method", "both", "--signs", "-1,1,1,1")
    assert code == 0 and report["agree"] is True
    for p in report["profiles"]:
        assert p["groups"] == [{"rank": 0, "torsion": []}, {"rank": 0, "torsion": [2]},
                               {"rank": 0, "torsion": [2, 2, 2]}]


def test_cohomology_snapshot():
    code, out, _ = run("cohomology", doc("triangle"), "--method", "both", "--format", "json")
    assert code == 0
    g = [{"rank": 0, "torsion": []}, {"rank": 0, "torsion": [2]}, {"rank": 1, "torsion": [2, 2]}]
    assert json.loads(out) == {
        "agree": True,
        "cdo": True,
        "command": "cohomology",
        "profiles": [
            {"asserted": True, "cdo": True, "groups": g, "method": "theorem"},
            {"asserted": True, "cdo": None, "groups": g, "method": "oracle"},
        ],
        "signs": [-1, 1, 1],
        "violations": [],
    }
    # stable byte layout: sorted keys, two-space indent
    assert out.startswith('{\n  "agree": true,\n  "cdo": true,\n  "command": "cohomology",')


def test_cdo_check_trivial_system_exit_2():
    code, report = run_json("cdo-check", doc("triangle"), "--signs", "1,1,1")
    assert code == 2 and report["cdo"] is False
    assert {"at_infinity": True, "hyperplanes": [0], "projective_dimension": 1, "t": 1} in report["violations"]


def test_cdo_check_pass():
    code, report = run_json("cdo-check", doc("concurrent_5"))
    assert code == 0 and report["cdo"] is True and report["violations"] == [] and report["t0"] == -1


def test_theorem_gate():
    code, out, _ = run("cohomology", doc("parallel_pair"))
    assert code == 2 and "{H0,H1,H2}" in out


def test_force_labels_output():
    code, out, _ = run("cohomology", doc("parallel_pair"), "--force")
    assert code == 0 and cli.NOT_ASSERTED in out


def test_forced_mismatch_is_not_an_error():
    code, report = run_json("cohomology", doc("parallel_pair"), "--method", "both", "--force", "--signs", "-1,-1")
    assert code == 0 and report["agree"] is False
    assert report["profiles"][0]["asserted"] is False


def test_lemma_method():
    code, report = run_json("cohomology", doc("braid_3"), "--method", "lemma")
    assert code == 0
    assert [g["torsion"] for g in report["profiles"][0]["groups"]] == [[], [2], [2, 2], []]


def test_lemma_hypothesis_failures():
    assert run("cohomology", doc("triangle"), "--method", "lemma")[0] == 2
    assert run("cohomology", doc("braid_3"), "--method", "lemma", "--signs", "1,1,1")[0] == 2


def test_oracle_unavailable():
    code, _, err = run("cohomology", doc("triangle"), "--method", "oracle", "--max-cells", "5")
    assert code == 4 and "oracle unavailable" in err


def test_dense_edges_all():
    code, report = run_json("dense-edges", doc("parallel_pair_transversal"), "--all")
    assert code == 0
    assert [e["hyperplanes"] for e in report["edges"]] == [[0], [1], [2], [3], [0, 1, 2]]
    assert all(e["t"] is not None for e in report["edges"])


def test_fuzz_is_reproducible():
    a = run("fuzz", doc("generic_planes_4"), "--count", "12", "--seed", "5", "--format", "json")
    b = run("fuzz", doc("generic_planes_4"), "--count", "12", "--seed", "5", "--format", "json")
    assert a == b and a[0] == 0
    report = json.loads(a[1])
    assert report["mismatches"] == [] and report["invariant_failures"] == []
    assert report["agreements"] == report["cdo_cases"]
    assert sum(p["count"] for p in report["non_cdo_profiles"]) == report["non_cdo_cases"]


def test_parse_errors_exit_1(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "dimension": 2,\n  "hyperplanes": [\n    {"normal": [1.5, 0], "offset": "0"}\n  ]\n}\n')
    code, out, err = run("betti", bad)
    assert code == 1 and f"{bad}:4:" in err and out == ""


def test_missing_local_system(tmp_path):
    p = tmp_path / "plain.json"
    p.write_text('{"dimension": 1, "hyperplanes": [{"normal": ["1"], "offset": "0"}]}')
    assert run("cdo-check", p)[0] == 1
    assert run("betti", p)[0] == 0


def test_signs_length_mismatch():
    assert run("cdo-check", doc("triangle"), "--signs", "1,-1")[0] == 1


def test_bad_signs_argument():
    assert run("cdo-check", doc("triangle"), "--signs", "1,2,1")[0] == 1


def test_missing_file():
    assert run("betti", "does-not-exist.json")[0] == 1


def test_every_corpus_document_runs():
    for name in load_corpus():
        assert run("betti", doc(name))[0] == 0
