import math

import pytest
from fastapi.testclient import TestClient

from diffwalk.server import create_app


@pytest.fixture
def client():
    return TestClient(create_app(static_dir=None))


def setup_msg(model="ba", nodes=60, avg_degree=4.0, walkers=600.0, seeds=4,
              p=0.4, graph_seed=1, sim_seed=2, layout="circular"):
    return {
        "type": "setup",
        "graph_spec": {"model": model, "node_count": nodes,
                       "avg_degree": avg_degree, "rng_seed": graph_seed},
        "sim_config": {"diffusion_rate": p, "total_walkers": walkers,
                       "seed_node_count": seeds, "rng_seed": sim_seed},
        "layout": layout,
        "coloring": "multibin",
    }


def assert_snapshot_invariants(snap, total_walkers):
    assert snap["v"] == 1
    assert snap["type"] == "snapshot"
    assert len(snap["quartile_averages"]) == 4
    assert snap["total_walkers"] == pytest.approx(total_walkers, rel=1e-9)
    if snap["node_sizes"] is not None:
        assert sum(snap["node_sizes"]) == pytest.approx(total_walkers, rel=1e-9)
    assert 0.0 <= snap["r2"] <= 1.0


class TestSetup:
    def test_graph_message(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            msg = ws.receive_json()
            assert msg["type"] == "graph"
            assert msg["v"] == 1
            assert msg["node_count"] == 60
            assert len(msg["degrees"]) == 60
            assert len(msg["layout_positions"]) == 60
            assert len(msg["quartiles"]) == 4
            assert msg["session_id"]

    def test_circular_layout_sorted_by_degree(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            msg = ws.receive_json()
            degrees = msg["degrees"]
            pos = msg["layout_positions"]
            angles = [math.atan2(y, x) % (2 * math.pi) for x, y in pos]
            order = sorted(range(len(angles)), key=lambda i: angles[i])
            ordered_degrees = [degrees[i] for i in order]
            assert ordered_degrees == sorted(ordered_degrees)

    def test_force_layout_positions_deferred(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg(layout="force"))
            msg = ws.receive_json()
            assert msg["layout_positions"] is None

    def test_invalid_spec_reports_error(self, client):
        with client.websocket_connect("/ws") as ws:
            bad = setup_msg()
            bad["sim_config"]["diffusion_rate"] = 2.0
            ws.send_json(bad)
            msg = ws.receive_json()
            assert msg["type"] == "error"


class TestStep:
    def test_single_step_from_idle(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            ws.receive_json()
            ws.send_json({"type": "step", "count": 1})
            snap = ws.receive_json()
            assert_snapshot_invariants(snap, 600.0)
            assert snap["tick"] == 1

    def test_multi_step_counts_ticks(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            ws.receive_json()
            ws.send_json({"type": "step", "count": 3})
            ticks = [ws.receive_json()["tick"] for _ in range(3)]
            assert ticks == [1, 2, 3]

    def test_tick0_seed_nodes_enlarged(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg(seeds=4))
            ws.receive_json()
            ws.send_json({"type": "reset"})
            snap = ws.receive_json()
            assert snap["tick"] == 0
            nonzero = [v for v in snap["node_sizes"] if v > 0]
            assert len(nonzero) == 4


class TestCommands:
    def test_set_rate_preserves_tick_and_mass(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            ws.receive_json()
            ws.send_json({"type": "step", "count": 1})
            first = ws.receive_json()
            ws.send_json({"type": "set_rate", "p": 0.7})
            ws.send_json({"type": "step", "count": 1})
            second = ws.receive_json()
            assert second["tick"] == first["tick"] + 1
            assert second["total_walkers"] == pytest.approx(first["total_walkers"])

    def test_set_rate_out_of_range_rejected(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            ws.receive_json()
            ws.send_json({"type": "set_rate", "p": 1.0})
            assert ws.receive_json()["type"] == "error"

    def test_malformed_message_preserves_session(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            ws.receive_json()
            ws.send_json({"no_type": True})
            assert ws.receive_json()["type"] == "error"
            ws.send_json({"type": "bogus"})
            assert ws.receive_json()["type"] == "error"
            ws.send_json({"type": "step", "count": 1})
            assert ws.receive_json()["type"] == "snapshot"

    def test_play_before_setup_is_error(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json({"type": "play"})
            assert ws.receive_json()["type"] == "error"

    def test_reset_returns_fresh_tick0(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg())
            ws.receive_json()
            ws.send_json({"type": "step", "count": 2})
            ws.receive_json()
            ws.receive_json()
            ws.send_json({"type": "reset"})
            snap = ws.receive_json()
            assert snap["tick"] == 0
            assert not snap["saturated"]


class TestLiveRun:
    def test_play_until_saturated(self, client):
        # teaching-session scenario: 180-node BA graph with 600 walkers
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg(model="ba", nodes=180, avg_degree=6.0,
                                   walkers=600.0, seeds=6))
            graph = ws.receive_json()
            assert graph["node_count"] == 180
            ws.send_json({"type": "set_speed", "ms_per_tick": 0.01})
            ws.send_json({"type": "play"})
            last_tick = 0
            final_r2 = 0.0
            saturation_time = None
            for _ in range(100_000):
                msg = ws.receive_json()
                if msg["type"] == "snapshot":
                    assert msg["tick"] > last_tick  # monotone while running
                    last_tick = msg["tick"]
                    final_r2 = msg["r2"]
                    assert_snapshot_invariants(msg, 600.0)
                elif msg["type"] == "saturated":
                    saturation_time = msg["saturation_time"]
                    break
            assert saturation_time is not None
            assert final_r2 >= 0.99 or last_tick <= saturation_time

    def test_pause_step_reset_sequence(self, client):
        # pause while running, then a manual step, then reset; the reset
        # snapshot (tick 0) is a deterministic end-of-stream sentinel.
        with client.websocket_connect("/ws") as ws:
            ws.send_json(setup_msg(nodes=150, walkers=1000.0, seeds=2, p=0.1))
            ws.receive_json()
            ws.send_json({"type": "set_speed", "ms_per_tick": 1})
            ws.send_json({"type": "play"})
            first = ws.receive_json()
            assert first["type"] == "snapshot" and first["tick"] >= 1
            ws.send_json({"type": "pause"})
            ws.send_json({"type": "step", "count": 1})
            ws.send_json({"type": "reset"})
            stepped_past_pause = False
            while True:
                msg = ws.receive_json()
                assert msg["type"] == "snapshot"  # no errors along the way
                assert_snapshot_invariants(msg, 1000.0)
                if msg["tick"] > first["tick"]:
                    stepped_past_pause = True
                if msg["tick"] == 0:
                    break
            assert stepped_past_pause
