import json

import networkx as nx

from egr import census, cli
from egr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_edge_list_golden(capsys, tmp_path):
    out_file = tmp_path / "w1q2.txt"
    code, stdout, _ = run(
        capsys, "generate", "--family", "wenger:n=1,q=2", "--output", str(out_file)
    )
    assert code == 0
    expected = "P0 L4\nP0 L5\nP1 L4\nP1 L7\nP2 L6\nP2 L7\nP3 L5\nP3 L6\n"
    assert stdout == expected
    assert out_file.read_text(encoding="ascii") == expected


def test_generate_line_counts(capsys):
    code, stdout, _ = run(capsys, "generate", "--family", "wenger:n=1,q=3")
    assert code == 0
    assert len(stdout.strip().splitlines()) == 27


def test_generate_lwenger_m1_matches_wenger_n1(capsys):
    _, a, _ = run(capsys, "generate", "--family", "wenger:n=1,q=3")
    _, b, _ = run(capsys, "generate", "--family", "lwenger:m=1,q=3")
    assert a == b


def test_generate_graph6_decodes(capsys):
    code, stdout, _ = run(
        capsys, "generate", "--family", "wenger:n=1,q=3", "--format", "g6"
    )
    assert code == 0
    decoded = nx.from_graph6_bytes(stdout.strip().encode("ascii"))
    assert decoded.number_of_nodes() == 18
    assert decoded.number_of_edges() == 27


def test_generate_deterministic(capsys):
    _, a, _ = run(capsys, "generate", "--family", "lwenger:m=2,q=3")
    _, b, _ = run(capsys, "generate", "--family", "lwenger:m=2,q=3")
    assert a == b


def test_certify_json_and_expectations(capsys):
    code, stdout, _ = run(
        capsys,
        "certify",
        "--family",
        "wenger:n=2,q=3",
        "--mode",
        "exhaustive",
        "--expect-predicted",
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["v"] == 54
    assert payload["lambda"] == 8
    assert payload["total_girth_cycles"] == 81
    assert payload["match"] is True
    assert payload["field"] == {"p": 3, "e": 1, "modulus": [0, 1]}


def test_certify_mismatch_exit_code(capsys):
    code, stdout, _ = run(
        capsys, "certify", "--family", "wenger:n=2,q=3", "--expect", "g=8,lambda=9"
    )
    assert code == cli.EXIT_MISMATCH
    payload = json.loads(stdout)
    assert payload["match"] is False


def test_certify_expect_parse_error(capsys):
    code, _, err = run(capsys, "certify", "--family", "wenger:n=2,q=3", "--expect", "g=8")
    assert code == cli.EXIT_ERROR
    assert "lambda" in err


def test_certify_nonuniform_exit_code(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise census.NonUniformCountsError((0, 9, 0), (1, 9, 4))

    monkeypatch.setattr(cli, "certify", boom)
    code, stdout, _ = run(capsys, "certify", "--family", "wenger:n=1,q=3")
    assert code == cli.EXIT_NONUNIFORM
    assert json.loads(stdout)["error"] == "non-uniform"


def test_certify_json_stable_modulo_elapsed(capsys):
    results = []
    for workers in ("1", "2"):
        _, stdout, _ = run(
            capsys,
            "certify",
            "--family",
            "wenger:n=2,q=3",
            "--mode",
            "exhaustive",
            "--workers",
            workers,
        )
        payload = json.loads(stdout)
        payload.pop("elapsed_ms")
        payload.pop("workers")
        results.append(json.dumps(payload, sort_keys=True))
    assert results[0] == results[1]


def test_workers_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("EGR_WORKERS", "1")
    assert cli.resolve_workers(None) == 1
    assert cli.resolve_workers(2) == 2
    monkeypatch.delenv("EGR_WORKERS")
    assert cli.resolve_workers(None) == census.default_workers()


def test_predict_json(capsys):
    code, stdout, _ = run(
        capsys, "predict", "--family", "wenger:n=1,q=3", "--bounds", "--turan"
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["girth"] == 6
    assert payload["lambda"] == 4
    assert payload["moore"] == 14
    assert payload["extremal_bipartite"] == 18
    assert payload["sandwich"] == [18, 18]
    assert payload["turan"] == 18


def test_predict_turan_even_q_is_null(capsys):
    code, stdout, _ = run(capsys, "predict", "--family", "wenger:n=1,q=4", "--turan")
    assert code == 0
    assert json.loads(stdout)["turan"] is None


def test_predict_lie_m3_fails_cleanly(capsys):
    code, _, err = run(capsys, "predict", "--family", "lie:M3,q=5")
    assert code == cli.EXIT_ERROR
    assert "lie-m3" in err


def test_table_small_grid(capsys):
    code, stdout, _ = run(
        capsys, "table", "--family", "wenger", "--index", "1,2", "--q", "2,3"
    )
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == 5
    assert all(line.endswith("yes") for line in lines[1:])


def test_table_empty_grid(capsys):
    code, stdout, _ = run(capsys, "table", "--family", "wenger", "--index", "1", "--q", "")
    assert code == 0
    assert len(stdout.strip().splitlines()) == 1  # header only


def test_table_cutoff_falls_back_to_base_edge(capsys):
    code, stdout, _ = run(
        capsys,
        "table",
        "--family",
        "wenger",
        "--index",
        "1",
        "--q",
        "3",
        "--cutoff",
        "10",
    )
    assert code == 0
    row = stdout.strip().splitlines()[1]
    assert "base-edge-only" in row
    assert row.endswith("yes")


def test_automorphism_verify(capsys):
    code, stdout, _ = run(
        capsys,
        "automorphism",
        "verify",
        "--family",
        "lwenger:m=1,q=3",
        "--mode",
        "exhaustive",
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["ok"] is True
    assert payload["counterexample"] is None
    assert payload["maps_checked"] == 9
    assert payload["edges_mapped_to_base"] == 27


def test_automorphism_rejects_other_families(capsys):
    code, _, err = run(capsys, "automorphism", "verify", "--family", "wenger:n=1,q=3")
    assert code == cli.EXIT_ERROR
    assert "lwenger" in err


def test_bench_invariance(capsys):
    code, stdout, _ = run(capsys, "bench", "wenger:n=2,q=2", "--mode", "exhaustive")
    assert code == 0
    lines = stdout.strip().splitlines()
    assert any("workers=1" in line for line in lines)
    assert all("MISMATCH" not in line for line in lines)


def test_invalid_family_spec(capsys):
    code, _, err = run(capsys, "generate", "--family", "wenger:n=1,q=6")
    assert code == cli.EXIT_ERROR
    assert "prime power" in err
