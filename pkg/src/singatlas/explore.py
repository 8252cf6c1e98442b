"""Deterministic closure computation over the surgery graph.

Breadth-first enumeration of all virtual morsifications reachable from a
seed, either within one component of the discriminant complement (no s3
jumps) or across the whole parameter space (with jumps).  Components are
recovered afterwards by partitioning the full closure along its s3-free
edges; their sizes and second invariants are the two basic invariants
separating equivalence classes of components.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import vmorse
from .lattice import Family, SingularityClass, Variant
from .vmorse import SurgeryMove, VirtualMorsification

DEFAULT_STATE_CAP = 10**6


class StateCapExceeded(RuntimeError):
    """Raised when a closure grows past the configured state cap."""


@dataclass
class ClosureResult:
    seed: VirtualMorsification
    allow_s3: bool
    states: frozenset[VirtualMorsification]
    edges: list[tuple[VirtualMorsification, SurgeryMove, VirtualMorsification]] | None = None

    def __len__(self) -> int:
        return len(self.states)


@dataclass
class EquivalenceClass:
    size: int
    second_inv: int
    representative: VirtualMorsification
    states: frozenset[VirtualMorsification] = field(repr=False, default=frozenset())


def _closure(
    seed: VirtualMorsification,
    allow_s3: bool,
    state_cap: int,
    record_edges: bool,
    restrict_to: frozenset[VirtualMorsification] | None = None,
) -> ClosureResult:
    seed = vmorse.canonicalize(seed)
    visited = {seed}
    frontier = deque([seed])
    edges = [] if record_edges else None
    while frontier:
        state = frontier.popleft()
        for move, nxt in vmorse.successors(state, allow_s3):
            if restrict_to is not None and nxt not in restrict_to:
                raise AssertionError("closure left the ambient state set")
            if record_edges and nxt != state:
                edges.append((state, move, nxt))
            if nxt not in visited:
                visited.add(nxt)
                if len(visited) > state_cap:
                    raise StateCapExceeded(
                        f"closure exceeded the state cap of {state_cap}"
                    )
                frontier.append(nxt)
    return ClosureResult(seed, allow_s3, frozenset(visited), edges)


def enumerate_component(
    seed: VirtualMorsification,
    state_cap: int = DEFAULT_STATE_CAP,
    record_edges: bool = False,
) -> ClosureResult:
    """Closure of seed under surgeries (s1), (s2), (s4) only.

    This is the complete list of virtual morsifications related to real
    morsifications from the seed's component of the discriminant complement.
    """
    return _closure(seed, False, state_cap, record_edges)


def enumerate_all(
    seed: VirtualMorsification,
    state_cap: int = DEFAULT_STATE_CAP,
    record_edges: bool = False,
) -> ClosureResult:
    """Closure of seed under all surgeries including s3 jumps over zero."""
    return _closure(seed, True, state_cap, record_edges)


_CLASS_SEEDS: dict[Family, Callable[[SingularityClass], VirtualMorsification]] = {
    Family.E6plus: lambda cls: vmorse.seed_state(cls),
    Family.E6minus: lambda cls: vmorse.seed_state(cls),
    Family.E7: lambda cls: vmorse.seed_state(cls),
    Family.E8: lambda cls: vmorse.seed_state(cls),
}


def equivalence_classes(
    cls: SingularityClass, state_cap: int = DEFAULT_STATE_CAP
) -> list[EquivalenceClass]:
    """Equivalence classes of components of the discriminant complement.

    Enumerates every virtual morsification of the class, then splits the
    set along s3-free reachability.  Each part is the list shared by one
    equivalence class of components; for the E series these classes are
    single components.  Sorted by (size, -second invariant).
    """
    if cls.family not in _CLASS_SEEDS:
        raise ValueError(
            "equivalence classes via surgeries are computed for E-type classes"
        )
    seed = _CLASS_SEEDS[cls.family](cls)
    full = enumerate_all(seed, state_cap)
    return partition_s3_free(full.states)


def partition_s3_free(
    states: frozenset[VirtualMorsification],
) -> list[EquivalenceClass]:
    """Partition a full closure into its s3-free connected parts."""
    remaining = set(states)
    classes = []
    ambient = frozenset(states)
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for _, nxt in vmorse.successors(s, allow_s3=False):
                if nxt not in ambient:
                    raise AssertionError("s3-free move left the full closure")
                if nxt not in comp:
                    comp.add(nxt)
                    queue.append(nxt)
        remaining -= comp
        invs = {vmorse.second_invariant(s) for s in comp}
        if len(invs) != 1:
            raise AssertionError("second invariant not constant on a component")
        classes.append(
            EquivalenceClass(len(comp), invs.pop(), min(comp), frozenset(comp))
        )
    classes.sort(key=lambda c: (c.size, -c.second_inv))
    return classes


def component_count(cls: SingularityClass, state_cap: int = DEFAULT_STATE_CAP) -> int:
    """Number of components of the discriminant complement for an E-type class."""
    return len(equivalence_classes(cls, state_cap))


# ---------------------------------------------------------------------------
# export

def _state_key(v: VirtualMorsification) -> str:
    return json.dumps(v.to_json_obj(), separators=(",", ":"), sort_keys=False)


def export_graph(result: ClosureResult, fmt: str = "JSONL") -> bytes:
    """Serialize a closure (JSONL states or DOT graph), sorted and stable."""
    states = sorted(result.states)
    if fmt.upper() == "JSONL":
        lines = [_state_key(s) for s in states]
        return ("\n".join(lines) + "\n").encode()
    if fmt.upper() == "DOT":
        if result.edges is None:
            raise ValueError("edges not recorded")
        index = {s: n for n, s in enumerate(states)}
        out = ["graph surgeries {"]
        for s in states:
            label = "morse={} neg={} inv={}".format(
                "".join(map(str, s.morse)), s.neg, vmorse.second_invariant(s)
            )
            out.append(f'  n{index[s]} [label="{label}"];')
        seen = set()
        for a, move, b in result.edges:
            key = (min(index[a], index[b]), max(index[a], index[b]), move.kind)
            if index[a] == index[b] or key in seen:
                continue
            seen.add(key)
            out.append(f'  n{key[0]} -- n{key[1]} [label="{move.kind}"];')
        out.append("}")
        return ("\n".join(out) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}")
