"""Guarded Q-increasing rewrites and a deterministic greedy ascent.

Each move checks its structural hypotheses exactly as stated and raises
PreconditionError (naming the first failed clause) otherwise. When the
hypotheses hold, the rewritten graph has strictly larger Q-index; the
test suite certifies this with separated comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import recognition
from .canon import is_transposition_automorphism
from .errors import EdgeStateError, PreconditionError
from .graphs import Graph, bits
from .spectral import q_index
from .constructions import h_gadget

PERRON_MARGIN = 1e-10

MOVE_KINDS = ("AddEdge", "PerronRotate", "LeafReattach", "PendantPull", "ChordSwap", "PathShift")


@dataclass(frozen=True)
class TransformMove:
    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class TraceStep:
    move: TransformMove
    q: float


def _require(cond: bool, clause: str) -> None:
    if not cond:
        raise PreconditionError(clause)


def add_edge_move(g: Graph, u: int, v: int) -> Graph:
    _require(g.is_connected(), "graph must be connected")
    if u == v or g.has_edge(u, v):
        raise EdgeStateError(f"cannot add edge {u}-{v}")
    return g.add_edge(u, v)


def perron_rotate(g: Graph, u: int, v: int, w: int) -> Graph:
    """Rewire vw to uw when the Perron vector satisfies x_u >= x_v.

    The vector hypothesis is accepted only with a numerical margin or an
    exact u-v transposition symmetry; borderline cases are rejected.
    """
    _require(g.is_connected(), "graph must be connected")
    _require(len({u, v, w}) == 3, "u, v, w must be distinct")
    _require(not g.has_edge(u, w), "uw must not be an edge")
    _require(g.has_edge(v, w), "vw must be an edge")
    x = q_index(g).vector
    diff = float(x[u] - x[v])
    if diff <= PERRON_MARGIN and not (
        abs(diff) <= PERRON_MARGIN and is_transposition_automorphism(g, u, v)
    ):
        if diff < -PERRON_MARGIN:
            raise PreconditionError("perron entries satisfy x_u < x_v")
        raise PreconditionError("x_u vs x_v margin indistinguishable")
    return g.remove_edge(v, w).add_edge(u, w)


def leaf_reattach(g: Graph, u: int, v: int, w: int) -> Graph:
    """Move the outside-neighbor edge vw to uw when v is a low-degree
    neighbor of u whose outside neighborhood is pendant-like."""
    _require(g.is_connected(), "graph must be connected")
    _require(g.has_edge(u, v), "v must be a neighbor of u")
    _require(g.degree(v) <= g.degree(u) - 2, "d(v) <= d(u) - 2")
    closed_u = g.adj[u] | (1 << u)
    outside = g.adj[v] & ~closed_u
    _require((outside >> w) & 1, "w must lie in N(v) minus N[u]")
    _require(outside.bit_count() in (1, 2), "|N(v) \\ N[u]| must be 1 or 2")
    allowed = g.adj[v] & ~g.adj[u]
    for z in bits(outside):
        _require(
            (g.adj[z] & ~(1 << v)) & ~allowed == 0,
            "every z in N(v) \\ N[u] must satisfy N(z)\\{v} within N(v)\\N(u)",
        )
    return g.remove_edge(v, w).add_edge(u, w)


def pendant_pull(g: Graph, u: int, w1: int, w2: int) -> Graph:
    """Reattach a pendant w1 hanging off w2 directly to the hub u."""
    _require(g.is_connected(), "graph must be connected")
    closed_u = g.adj[u] | (1 << u)
    _require(not (closed_u >> w1) & 1, "w1 must avoid N[u]")
    _require(not (closed_u >> w2) & 1, "w2 must avoid N[u]")
    _require(g.adj[w1] == (1 << w2), "N(w1) must equal {w2}")
    _require(
        g.adj[w2] & ~(1 << w1) & ~g.adj[u] == 0,
        "N(w2)\\{w1} must lie inside N(u)",
    )
    _require(g.degree(u) >= g.degree(w2) + 1, "d(u) >= d(w2) + 1")
    return g.remove_edge(w1, w2).add_edge(u, w1)


def chord_swap(g: Graph, u: int, w: int, v1: int, v2: int) -> Graph:
    """Trade the chord v1v2 inside N(u) for the edge uw."""
    _require(g.is_connected(), "graph must be connected")
    _require(recognition.neighborhood_is_paths(g, u), "G[N(u)] must consist of paths")
    _require(g.degree(u) >= 5, "d(u) >= 5")
    closed_u = g.adj[u] | (1 << u)
    _require(not (closed_u >> w) & 1, "w must avoid N[u]")
    _require(g.adj[w] == (1 << v1) | (1 << v2), "N(w) must equal {v1, v2}")
    _require((g.adj[u] >> v1) & 1 and (g.adj[u] >> v2) & 1, "v1, v2 must be neighbors of u")
    _require(g.has_edge(v1, v2), "v1v2 must be an edge")
    for vi in (v1, v2):
        _require(
            g.adj[vi] & ~closed_u & ~(1 << w) == 0,
            "N(v_i) outside N[u] and {w} must be empty",
        )
    return g.remove_edge(v1, v2).add_edge(u, w)


def path_shift(h: Graph, u: int, t: int, s: int) -> Graph:
    """Shift one vertex of the shorter attached path onto the longer one:
    the gadget on (t, s) becomes the gadget on (t+1, s-1)."""
    _require(t >= s >= 1, "need t >= s >= 1")
    return h_gadget(h, u, t + 1, s - 1)


# -- greedy ascent ----------------------------------------------------


def _scan_moves(g: Graph):
    """Candidate moves in the fixed deterministic scan order."""
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                yield TransformMove("AddEdge", (u, v)), lambda u=u, v=v: add_edge_move(g, u, v)
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if len({u, v, w}) == 3:
                    yield (
                        TransformMove("PerronRotate", (u, v, w)),
                        lambda u=u, v=v, w=w: perron_rotate(g, u, v, w),
                    )
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if len({u, v, w}) == 3:
                    yield (
                        TransformMove("LeafReattach", (u, v, w)),
                        lambda u=u, v=v, w=w: leaf_reattach(g, u, v, w),
                    )
    for u in range(n):
        for w1 in range(n):
            for w2 in range(n):
                if len({u, w1, w2}) == 3:
                    yield (
                        TransformMove("PendantPull", (u, w1, w2)),
                        lambda u=u, w1=w1, w2=w2: pendant_pull(g, u, w1, w2),
                    )
    for u in range(n):
        for w in range(n):
            if w == u:
                continue
            for v1 in range(n):
                for v2 in range(v1 + 1, n):
                    if len({u, w, v1, v2}) == 4:
                        yield (
                            TransformMove("ChordSwap", (u, w, v1, v2)),
                            lambda u=u, w=w, v1=v1, v2=v2: chord_swap(g, u, w, v1, v2),
                        )


def greedy_ascent(
    g: Graph,
    pattern: recognition.ForbiddenPattern | None,
    max_steps: int = 1000,
) -> tuple[Graph, list[TraceStep]]:
    """Apply class-preserving Q-increasing moves until a local maximum.

    At each step the first applicable move is taken, scanning move kinds
    in declaration order and vertex tuples lexicographically; a move is
    applicable when its hypotheses hold and the result stays connected,
    outerplanar, and pattern-free.
    """
    trace: list[TraceStep] = []
    current = g
    for _ in range(max_steps):
        applied = False
        for move, action in _scan_moves(current):
            try:
                candidate = action()
            except (PreconditionError, EdgeStateError):
                continue
            if not candidate.is_connected():
                continue
            if not recognition.is_outerplanar(candidate):
                continue
            if pattern is not None and not recognition.is_f_free(candidate, pattern):
                continue
            current = candidate
            trace.append(TraceStep(move, q_index(current).q))
            applied = True
            break
        if not applied:
            break
    return current, trace
