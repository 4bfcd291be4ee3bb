"""Websocket session service driving the interactive front-end.

One connection owns one session: a graph, a walker state, and a mode
(idle -> running <-> paused -> saturated; setup/reset return to idle).
Client messages are JSON objects with a ``type`` field (setup, play, pause,
step, set_rate, set_speed, reset); the server replies with ``graph``,
``snapshot``, ``saturated`` and ``error`` messages, all carrying ``v: 1``.

Commands are applied between ticks, so a tick is atomic. While running,
snapshots go through a latest-wins slot: a lagging client skips frames but
never stalls the simulation loop. Control messages (graph, saturated, error,
and the snapshots explicitly requested via ``step``) are delivered reliably.
"""

import asyncio
import math
import uuid
from dataclasses import replace
from pathlib import Path

import numpy as np
from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from .dynamics import (
    SimConfig,
    WalkerState,
    average_mass_by_degree,
    degree_quartile_slices,
    init_state,
    quartile_averages,
    r2_vs_degree,
    step,
    uniformity_indicator,
)
from .graphs import Graph, GraphSpec, generate, giant_component
from .stats import DegenerateInputError

PROTOCOL_VERSION = 1

# Snapshots list per-node masses only up to this size; beyond it the UI works
# from the per-degree aggregates.
NODE_SIZES_LIMIT = 5000

DEFAULT_TICK_INTERVAL_MS = 50.0


def circular_layout(g: Graph) -> list[list[float]]:
    """Unit-circle positions with nodes ordered by degree (ties by index)."""
    order = np.argsort(g.degrees, kind="stable")
    n = g.node_count
    pos = [[0.0, 0.0]] * n
    for rank, node in enumerate(order):
        angle = 2.0 * math.pi * rank / n
        pos[int(node)] = [math.cos(angle), math.sin(angle)]
    return pos


def _quartile_ranges(degrees: np.ndarray, quartiles) -> list[dict | None]:
    out = []
    for q in quartiles:
        if q.size == 0:
            out.append(None)
        else:
            d = degrees[q]
            out.append({"min_degree": int(d.min()), "max_degree": int(d.max())})
    return out


class Session:
    """State machine for one connection; owns the graph and the walker state."""

    def __init__(self, ws: WebSocket):
        self.ws = ws
        self.session_id = uuid.uuid4().hex
        self.mode = "idle"
        self.graph: Graph | None = None
        self.cfg: SimConfig | None = None
        self.state: WalkerState | None = None
        self.quartiles = None
        self.regular = False
        self.last_r2 = 0.0
        self.tick_interval = DEFAULT_TICK_INTERVAL_MS / 1000.0
        self.commands: asyncio.Queue = asyncio.Queue()
        self.snapshot_slot: dict | None = None
        self.snapshot_pending = asyncio.Event()
        self.send_lock = asyncio.Lock()

    async def send(self, payload: dict) -> None:
        async with self.send_lock:
            await self.ws.send_json(payload)

    async def error(self, message: str) -> None:
        await self.send({"v": PROTOCOL_VERSION, "type": "error", "message": message})

    # -- state inspection -------------------------------------------------

    def current_r2(self) -> float:
        if self.regular:
            return uniformity_indicator(self.state)
        try:
            return r2_vs_degree(self.state, self.graph)
        except DegenerateInputError:
            return uniformity_indicator(self.state)

    def snapshot(self, saturated: bool) -> dict:
        masses = self.state.masses
        node_sizes = (
            [float(v) for v in masses] if masses.shape[0] <= NODE_SIZES_LIMIT else None
        )
        return {
            "v": PROTOCOL_VERSION,
            "type": "snapshot",
            "tick": self.state.tick,
            "r2": float(self.last_r2),
            "total_walkers": float(masses.sum()),
            "quartile_averages": quartile_averages(masses, self.quartiles),
            "node_sizes": node_sizes,
            "avg_walkers_by_degree": {
                str(d): v for d, v in average_mass_by_degree(masses, self.graph.degrees).items()
            },
            "saturated": saturated,
        }

    # -- command handling --------------------------------------------------

    async def handle(self, msg) -> None:
        if not isinstance(msg, dict) or "type" not in msg:
            await self.error("message must be an object with a 'type' field")
            return
        handler = getattr(self, f"_cmd_{msg['type']}", None)
        if handler is None:
            await self.error(f"unknown message type {msg['type']!r}")
            return
        try:
            await handler(msg)
        except (KeyError, TypeError, ValueError) as exc:
            await self.error(str(exc))

    async def _cmd_setup(self, msg) -> None:
        gs = msg["graph_spec"]
        sc = msg["sim_config"]
        layout = msg.get("layout", "circular")
        if layout not in ("circular", "force"):
            raise ValueError("layout must be 'circular' or 'force'")
        coloring = msg.get("coloring", "multibin")
        if coloring not in ("single", "multibin"):
            raise ValueError("coloring must be 'single' or 'multibin'")
        spec = GraphSpec(
            model=gs["model"],
            node_count=int(gs["node_count"]),
            avg_degree=float(gs["avg_degree"]),
            rng_seed=int(gs.get("rng_seed", 0)),
        )
        raw = generate(spec)
        giant, _ = giant_component(raw)
        cfg = SimConfig(
            diffusion_rate=float(sc["diffusion_rate"]),
            total_walkers=float(sc["total_walkers"]),
            seed_node_count=int(sc["seed_node_count"]),
            r2_threshold=float(sc.get("r2_threshold", 0.99)),
            max_steps=int(sc.get("max_steps", 100_000)),
            rng_seed=int(sc.get("rng_seed", 0)),
        )
        state = init_state(giant, cfg)  # validates seed count against graph size
        self.graph = giant
        self.cfg = cfg
        self.state = state
        self.quartiles = degree_quartile_slices(giant.degrees)
        self.regular = int(giant.degrees.min()) == int(giant.degrees.max())
        self.last_r2 = self.current_r2()
        self.mode = "idle"
        await self.send({
            "v": PROTOCOL_VERSION,
            "type": "graph",
            "session_id": self.session_id,
            "node_count": giant.node_count,
            "discarded_nodes": raw.node_count - giant.node_count,
            "edges": [[int(u), int(v)] for u, v in giant.edges()],
            "degrees": [int(d) for d in giant.degrees],
            "layout": layout,
            "coloring": coloring,
            "layout_positions": circular_layout(giant) if layout == "circular" else None,
            "quartiles": _quartile_ranges(giant.degrees, self.quartiles),
        })

    def _require_setup(self) -> None:
        if self.graph is None:
            raise ValueError("no session: send setup first")

    async def _cmd_play(self, msg) -> None:
        self._require_setup()
        if self.mode == "saturated":
            raise ValueError("already saturated; reset or setup to run again")
        self.mode = "running"

    async def _cmd_pause(self, msg) -> None:
        self._require_setup()
        if self.mode == "running":
            self.mode = "paused"

    async def _cmd_step(self, msg) -> None:
        self._require_setup()
        if self.mode == "saturated":
            raise ValueError("already saturated; reset or setup to step again")
        count = int(msg.get("count", 1))
        if count < 1:
            raise ValueError("count must be >= 1")
        self.mode = "paused"
        for _ in range(count):
            saturated = self.advance_tick()
            await self.send(self.snapshot(saturated))
            if saturated:
                await self._announce_saturated()
                break

    async def _cmd_set_rate(self, msg) -> None:
        self._require_setup()
        p = float(msg["p"])
        if not 0.0 < p < 1.0:
            raise ValueError("diffusion rate must be in the open interval (0, 1)")
        # Takes effect at the next tick; tick counter and masses are untouched.
        self.cfg = replace(self.cfg, diffusion_rate=p)

    async def _cmd_set_speed(self, msg) -> None:
        ms = float(msg["ms_per_tick"])
        if ms <= 0:
            raise ValueError("ms_per_tick must be positive")
        self.tick_interval = ms / 1000.0

    async def _cmd_reset(self, msg) -> None:
        self._require_setup()
        self.state = init_state(self.graph, self.cfg)
        self.last_r2 = self.current_r2()
        self.mode = "idle"
        await self.send(self.snapshot(False))

    # -- tick loop ----------------------------------------------------------

    def advance_tick(self) -> bool:
        """One tick; returns True when the saturation threshold is crossed."""
        self.state = step(self.state, self.graph, self.cfg.diffusion_rate)
        self.last_r2 = self.current_r2()
        return self.last_r2 >= self.cfg.r2_threshold

    async def _announce_saturated(self) -> None:
        self.mode = "saturated"
        await self.send({
            "v": PROTOCOL_VERSION,
            "type": "saturated",
            "saturation_time": self.state.tick,
        })

    def publish_snapshot(self, saturated: bool) -> None:
        self.snapshot_slot = self.snapshot(saturated)
        self.snapshot_pending.set()

    async def sender_loop(self) -> None:
        while True:
            await self.snapshot_pending.wait()
            self.snapshot_pending.clear()
            snap, self.snapshot_slot = self.snapshot_slot, None
            if snap is not None:
                await self.send(snap)

    async def run_loop(self) -> None:
        while True:
            if self.mode != "running":
                await self.handle(await self.commands.get())
                continue
            # Apply everything queued, then tick; commands land between ticks.
            while not self.commands.empty():
                await self.handle(self.commands.get_nowait())
            if self.mode != "running":
                continue
            saturated = self.advance_tick()
            self.publish_snapshot(saturated)
            if saturated:
                await self._announce_saturated()
            elif self.state.tick >= self.cfg.max_steps:
                self.mode = "paused"
                await self.error(
                    f"max_steps={self.cfg.max_steps} reached without saturation; paused"
                )
            else:
                await asyncio.sleep(self.tick_interval)


def create_app(static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="diffwalk session server")

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket):
        await ws.accept()
        session = Session(ws)
        tasks = [
            asyncio.create_task(session.run_loop()),
            asyncio.create_task(session.sender_loop()),
        ]
        try:
            while True:
                try:
                    msg = await ws.receive_json()
                except ValueError:
                    await session.error("invalid JSON")
                    continue
                await session.commands.put(msg)
        except WebSocketDisconnect:
            pass
        finally:
            for t in tasks:
                t.cancel()

    if static_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        static_dir = candidate if candidate.is_dir() else None
    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
