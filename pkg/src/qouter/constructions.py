"""Extremal candidate graphs: joins of path unions and the pendant-fan gadget.

The candidate families are K_1 v (union of paths). Parameters are always
resolved against the canonical decomposition (fixed largest part, then as
many full parts as fit, then the remainder); the printed closed forms are
evaluated separately and any disagreement is surfaced via a flag instead
of being silently adopted.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import recognition
from .errors import CapacityError, ConstructionError, ParameterError
from .graphs import Graph, MAX_VERTICES, disjoint_union, join_one, path


@dataclass(frozen=True)
class PathJoinSpec:
    """Multiset of path orders a_1 >= ... >= a_s >= 1 for K_1 v (U P_{a_i})."""

    parts: tuple[int, ...]

    def __post_init__(self):
        cleaned = tuple(sorted((p for p in self.parts if p != 0), reverse=True))
        if any(p < 0 for p in cleaned):
            raise ParameterError(f"negative path order in {self.parts}")
        if not cleaned:
            raise ParameterError("empty path-join spec")
        if sum(cleaned) + 1 > MAX_VERTICES:
            raise CapacityError(f"order {sum(cleaned) + 1} exceeds {MAX_VERTICES}")
        object.__setattr__(self, "parts", cleaned)

    @property
    def order(self) -> int:
        return sum(self.parts) + 1


def path_join(spec) -> Graph:
    """K_1 v (P_{a_1} u ... u P_{a_s}); the join vertex gets the last index."""
    if not isinstance(spec, PathJoinSpec):
        spec = PathJoinSpec(tuple(spec))
    return join_one(disjoint_union([path(p) for p in spec.parts]))


def _decompose(n: int, a1: int, part: int) -> tuple[int, ...]:
    """Canonical parts list: fixed a1, then alpha full parts, then remainder."""
    alpha, r = divmod(n - 1 - a1, part)
    parts = [a1] + [part] * alpha
    if r:
        parts.append(r)
    return tuple(parts)


def cycle_extremal(n: int, ell: int) -> tuple[Graph, int, int]:
    """The candidate maximizer among connected outerplanar C_ell-free graphs:
    K_1 v (alpha P_{ell-2} u P_r)."""
    if not 3 <= ell <= n:
        raise ParameterError(f"need 3 <= ell <= n, got ell={ell}, n={n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")
    alpha, r = divmod(n - 1, ell - 2)
    parts = [ell - 2] * alpha
    if r:
        parts.append(r)
    g = path_join(parts)
    _assert_class(g, recognition.ForbiddenPattern.cycle(ell))
    return g, alpha, r


def path_extremal(n: int, t: int, ell: int) -> tuple[Graph, int, int, bool]:
    """The candidate maximizer among connected outerplanar tP_ell-free graphs.

    Returns (graph, alpha, r, discrepancy_flag); the flag is set when the
    printed closed-form parameters disagree with the canonical
    decomposition (which is authoritative).
    """
    if t == 1:
        if ell < 4:
            raise ParameterError("single-path pattern needs ell >= 4")
        a1 = (ell - 2 + 1) // 2  # ceil((ell-2)/2)
        part = (ell - 2) // 2
    elif t >= 2:
        if ell < 2:
            raise ParameterError("path union needs ell >= 2")
        a1 = t * ell - ell - 1
        part = ell - 1
    else:
        raise ParameterError(f"t must be >= 1, got {t}")
    if t * ell > n - 1:
        raise ParameterError(f"need t*ell <= n-1, got {t}*{ell} vs n={n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")

    parts = _decompose(n, a1, part)
    alpha, r = divmod(n - 1 - a1, part)

    printed = _printed_parts(n, t, ell, a1, part)
    flag = sorted(printed, reverse=True) != list(parts) or sum(printed) != n - 1

    g = path_join(parts)
    _assert_class(g, recognition.ForbiddenPattern.paths(t, ell))
    return g, alpha, r, flag


def _printed_parts(n: int, t: int, ell: int, a1: int, part: int) -> list[int]:
    """The paper-facing closed forms, evaluated verbatim for cross-checking."""
    if t == 1:
        alpha_p = (n - ell + 1) // part + 1 if part else 0
        r_p = n - ell + 1 - (alpha_p - 1) * part
    else:
        alpha_p = (n - t + 2) // (ell - 1) - t + 1
        r_p = n - 2 * ell + 2 - (alpha_p - 1) * (ell - 1)
    parts = [a1] + [part] * alpha_p
    if r_p:
        parts.append(r_p)
    return parts


def h_gadget(h: Graph, u: int, t: int, s: int) -> Graph:
    """Attach P_t and P_s to h, joining every attached vertex to u.

    Equivalently: identify u with the hub of K_1 v (P_t u P_s); s = 0
    attaches only P_t.
    """
    if t < 1 or s < 0:
        raise ParameterError(f"need t >= 1, s >= 0, got t={t}, s={s}")
    if not 0 <= u < h.n:
        raise ParameterError(f"vertex {u} not in graph of order {h.n}")
    if h.n + t + s > MAX_VERTICES:
        raise CapacityError(f"gadget order {h.n + t + s} exceeds {MAX_VERTICES}")
    g = h
    for block in (t, s):
        for i in range(block):
            mask = 1 << u
            if i > 0:
                mask |= 1 << (g.n - 1)
            g = g.with_new_vertex(mask)
    return g


def _assert_class(g: Graph, pattern: recognition.ForbiddenPattern) -> None:
    if not g.is_connected():
        raise ConstructionError("constructed graph is not connected")
    if not recognition.is_outerplanar(g):
        raise ConstructionError("constructed graph is not outerplanar")
    if not recognition.is_f_free(g, pattern):
        raise ConstructionError(f"constructed graph contains {pattern}")
