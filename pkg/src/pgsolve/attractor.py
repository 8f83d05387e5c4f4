"""Linear-time attractor computation on subgame views."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .game import NodeSet, Owner, SubgameView


class TargetNotLive(ValueError):
    def __init__(self, node: int):
        super().__init__(f"attractor target {node} is not a live node")
        self.node = node


@dataclass
class EdgeProbe:
    """Counts live edges traversed by `attractor`."""

    edges: int = 0


def attractor(
    view: SubgameView,
    player: Owner,
    targets: Iterable[int],
    strategy: dict[int, int] | None = None,
    probe: EdgeProbe | None = None,
) -> NodeSet:
    """Nodes of `view` from which `player` can force the play into `targets`.

    Backward worklist: a node of `player` joins as soon as one successor is in
    the set; an opponent node joins once its count of live successors outside
    the set drops to zero. If `strategy` is given, every `player` node added
    outside `targets` gets a move into the set recorded in it.
    """
    game = view.game
    owners = game.owners
    preds = game.predecessors
    succs = game.successors
    removed = view._removed

    attr = set()
    for t in targets:
        if t not in view:
            raise TargetNotLive(t)
        attr.add(t)
    if not attr:
        return frozenset()

    remaining: dict[int, int] = {}
    stack = list(attr)
    edges = 0
    while stack:
        u = stack.pop()
        for v in preds[u]:
            if removed[v]:
                continue
            edges += 1
            if v in attr:
                continue
            if owners[v] == player:
                attr.add(v)
                if strategy is not None:
                    strategy[v] = u
                stack.append(v)
                continue
            left = remaining.get(v)
            if left is None:
                left = 0
                for w in succs[v]:
                    if not removed[w]:
                        left += 1
                edges += left
            left -= 1
            remaining[v] = left
            if left == 0:
                attr.add(v)
                stack.append(v)
    if probe is not None:
        probe.edges += edges
    return frozenset(attr)
