"""Pseudoline arrangements in the plane, encoded as wiring diagrams.

A diagram is n horizontal wires swept left to right through a sequence of
crossing events; an event of size k reverses k adjacent wires, realizing a
point where k pseudolines meet. No curve geometry is stored: the
semilattice and all face counts depend only on the crossing pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import OutOfRange, RepeatedCrossing
from .poset import Flat, Semilattice, validate_semilattice


@dataclass(frozen=True)
class CrossingEvent:
    """k wires at positions top..top+size-1 meet at one point and reverse."""

    top: int
    size: int


@dataclass(frozen=True)
class WiringDiagram:
    """n wires and an ordered event list; final_permutation is attached by
    validate_wiring and maps exit position to wire index."""

    wires: int
    events: tuple[CrossingEvent, ...]
    final_permutation: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.wires < 1:
            raise ValueError("a wiring diagram needs at least one wire")

    @property
    def validated(self) -> bool:
        return self.final_permutation is not None


def _simulate(w: WiringDiagram) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """Run the sweep: the wire group of each event plus the exit permutation.

    Raises OutOfRange or RepeatedCrossing on the first invalid event, so
    every caller revalidates for free.
    """
    perm = list(range(w.wires))
    crossed: set[tuple[int, int]] = set()
    groups = []
    for i, e in enumerate(w.events):
        if e.size < 2:
            raise OutOfRange(f"event {i} has size {e.size}, need at least 2")
        if e.top < 0 or e.top + e.size > w.wires:
            raise OutOfRange(
                f"event {i} covers positions {e.top}..{e.top + e.size - 1} on {w.wires} wires"
            )
        group = perm[e.top: e.top + e.size]
        for a, b in combinations(group, 2):
            pair = (min(a, b), max(a, b))
            if pair in crossed:
                raise RepeatedCrossing(f"wires {pair[0]} and {pair[1]} cross twice (event {i})")
            crossed.add(pair)
        perm[e.top: e.top + e.size] = reversed(group)
        groups.append(tuple(group))
    return groups, tuple(perm)


def validate_wiring(w: WiringDiagram) -> WiringDiagram:
    """Simulate the sweep; return the diagram with final_permutation set."""
    _, perm = _simulate(w)
    return WiringDiagram(w.wires, tuple(w.events), perm)


def lattice_from_wiring(w: WiringDiagram) -> Semilattice:
    """Intersection semilattice: the plane, one line per wire, one point
    per event (supported by the wires meeting there)."""
    if not w.validated:
        raise ValueError("wiring diagram has not been validated")
    groups, _ = _simulate(w)
    n = w.wires
    flats = [Flat(0, 2, frozenset())]
    flats += [Flat(1 + i, 1, frozenset([i])) for i in range(n)]
    pairs = [(0, 1 + i) for i in range(n)]
    for k, g in enumerate(groups):
        pid = 1 + n + k
        flats.append(Flat(pid, 0, frozenset(g)))
        pairs.append((0, pid))
        pairs += [(1 + wire, pid) for wire in g]
    return validate_semilattice(Semilattice(2, flats, pairs))


def sweep_f_vector(w: WiringDiagram) -> tuple[int, int, int]:
    """Face counts (f0, f1, f2) by sweeping the diagram left to right.

    Vertices are the events; edges count, per wire, one segment more than
    its crossings; regions are tracked explicitly: each of the n+1 slab
    intervals carries a region identity, and an event of size k closes the
    k-1 interior intervals and opens k-1 fresh identities.
    """
    if not w.validated:
        raise ValueError("wiring diagram has not been validated")
    groups, _ = _simulate(w)
    n = w.wires
    f0 = len(groups)
    per_wire = [0] * n
    for g in groups:
        for wire in g:
            per_wire[wire] += 1
    f1 = sum(c + 1 for c in per_wire)
    regions = list(range(n + 1))
    next_region = n + 1
    for e in w.events:
        for gap in range(e.top + 1, e.top + e.size):
            regions[gap] = next_region
            next_region += 1
    f2 = next_region
    if f0 - f1 + f2 != 1:
        raise RuntimeError(f"sweep produced f = ({f0}, {f1}, {f2}), which fails f0 - f1 + f2 = 1")
    return f0, f1, f2


def wiring_from_json(doc: dict) -> WiringDiagram:
    """Build and validate a diagram from its JSON document form."""
    events = tuple(
        CrossingEvent(int(e["top"]), int(e["size"])) for e in doc["events"]
    )
    return validate_wiring(WiringDiagram(int(doc["wires"]), events))


def wiring_to_json(w: WiringDiagram) -> dict:
    """JSON document form."""
    return {
        "kind": "wiring",
        "wires": w.wires,
        "events": [{"top": e.top, "size": e.size} for e in w.events],
    }
