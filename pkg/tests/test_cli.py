import json

import pytest

from diffwalk.cli import main
from diffwalk.graphs import read_edge_list

from oracles import is_connected


def run_cli(*argv) -> int:
    return main(list(argv))


class TestGenerate:
    def test_writes_edge_list(self, tmp_path):
        out = tmp_path / "g.txt"
        assert run_cli("generate", "--model", "er", "--nodes", "50",
                       "--avg-degree", "4", "--seed", "3", "--out", str(out)) == 0
        text = out.read_text()
        assert text.startswith("# nodes=50\n")
        with open(out) as f:
            g = read_edge_list(f)
        assert g.node_count == 50

    def test_ba_180_nodes_connected(self, tmp_path):
        out = tmp_path / "ba.txt"
        assert run_cli("generate", "--model", "ba", "--nodes", "180",
                       "--avg-degree", "6", "--out", str(out)) == 0
        with open(out) as f:
            g = read_edge_list(f)
        assert g.node_count == 180
        assert is_connected(g)

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        run_cli("generate", "--model", "er", "--nodes", "80", "--avg-degree", "5",
                "--seed", "9", "--out", str(a))
        run_cli("generate", "--model", "er", "--nodes", "80", "--avg-degree", "5",
                "--seed", "9", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_missing_model_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("generate", "--nodes", "10")
        assert exc.value.code == 2


class TestSimulate:
    def test_reference_setting_json(self, tmp_path):
        out = tmp_path / "r.json"
        code = run_cli("simulate", "--model", "er", "--nodes", "1000",
                       "--avg-degree", "6", "--walkers", "400", "--seed-nodes", "8",
                       "--diffusion-rate", "0.4", "--seed", "7", "--out", str(out))
        assert code == 0
        data = json.loads(out.read_text())
        assert set(data) == {"saturation_time", "converged", "seed_nodes",
                             "r2_trajectory", "final_masses"}
        assert data["converged"] is True
        assert data["saturation_time"] == len(data["r2_trajectory"])
        assert len(data["seed_nodes"]) == 8

    def test_accepts_generated_edge_list(self, tmp_path):
        graph_file = tmp_path / "g.txt"
        run_cli("generate", "--model", "ba", "--nodes", "100", "--avg-degree", "4",
                "--seed", "2", "--out", str(graph_file))
        out = tmp_path / "r.json"
        code = run_cli("simulate", "--graph", str(graph_file), "--walkers", "100",
                       "--seed-nodes", "2", "--diffusion-rate", "0.5",
                       "--seed", "1", "--out", str(out))
        assert code == 0
        data = json.loads(out.read_text())
        assert len(data["final_masses"]) == 100

    def test_invalid_rate_fails_with_diagnostic(self, tmp_path, capsys):
        code = run_cli("simulate", "--model", "er", "--nodes", "50",
                       "--avg-degree", "4", "--diffusion-rate", "1.5")
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_needs_graph_or_model(self):
        assert run_cli("simulate", "--walkers", "10") == 1


class TestExperiment:
    def test_smoke_run_twice_identical_bytes(self, tmp_path):
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        for out in (out_a, out_b):
            code = run_cli("experiment", "fig3b", "--profile", "smoke",
                           "--seed", "1", "--jobs", "2", "--out", str(out))
            assert code == 0
        files_a = sorted(p.name for p in out_a.iterdir())
        assert files_a == sorted(p.name for p in out_b.iterdir())
        assert "fig3b_summary.json" in files_a
        for name in files_a:
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes()

    def test_summary_contains_config(self, tmp_path):
        run_cli("experiment", "fig3b", "--profile", "smoke", "--seed", "4",
                "--out", str(tmp_path))
        data = json.loads((tmp_path / "fig3b_summary.json").read_text())
        assert data["experiment"] == "fig3b"
        assert data["profile"] == "smoke"
        assert data["master_seed"] == 4
        cfg = data["models"]["er"]["config"]
        assert cfg["n_graphs"] == 10
        assert cfg["n_sims_per_graph"] == 20
        assert cfg["sim_config"]["diffusion_rate"] == 0.4
        assert cfg["sim_config"]["total_walkers"] == 10000.0

    def test_unknown_name_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            run_cli("experiment", "fig9", "--out", str(tmp_path))
        assert exc.value.code == 2


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run_cli("frobnicate")
    assert exc.value.code == 2
