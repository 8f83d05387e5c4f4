"""Parity game graphs and attractor-closed subgame views."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

NodeSet = frozenset  # frozenset[int]; the node-set type used throughout


class Owner(enum.IntEnum):
    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Owner":
        return Owner(1 - self)

    @classmethod
    def favored_by(cls, priority: int) -> "Owner":
        """The player who wins a play whose top recurring priority is `priority`."""
        return cls(priority % 2)

    def __str__(self) -> str:
        return self.name.capitalize()


class GameError(ValueError):
    """Base class for game validation errors."""

    def __init__(self, node: int, message: str):
        super().__init__(message)
        self.node = node


class EmptySuccessors(GameError):
    def __init__(self, node: int):
        super().__init__(node, f"node {node} has no successors")


class DanglingEdge(GameError):
    def __init__(self, node: int, target: int):
        super().__init__(node, f"node {node} has an edge to unknown node {target}")
        self.target = target


class SelfLoop(GameError):
    def __init__(self, node: int):
        super().__init__(node, f"node {node} has a self-loop")


class DuplicateEdge(GameError):
    def __init__(self, node: int, target: int):
        super().__init__(node, f"node {node} lists successor {target} twice")
        self.target = target


class NotAttractorClosed(ValueError):
    """Removing a set would strand a live node without live successors."""

    def __init__(self, node: int):
        super().__init__(f"node {node} would lose all of its successors")
        self.node = node


class EmptyView(ValueError):
    pass


# A raw node description: (owner, priority, successor ids).
NodeSpec = tuple[Owner, int, Sequence[int]]


@dataclass(frozen=True)
class Game:
    owners: tuple[Owner, ...]
    priorities: tuple[int, ...]
    successors: tuple[tuple[int, ...], ...]
    predecessors: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    n: int = field(init=False, repr=False, compare=False)
    by_priority: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        groups: dict[int, list[int]] = {}
        for v, p in enumerate(self.priorities):
            groups.setdefault(p, []).append(v)
        object.__setattr__(self, "n", len(self.owners))
        object.__setattr__(self, "by_priority", {p: tuple(vs) for p, vs in groups.items()})

    @property
    def h_max(self) -> int:
        return max(self.priorities, default=0)

    @property
    def nodes(self) -> range:
        return range(self.n)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.successors)

    def specs(self) -> list[NodeSpec]:
        return [(o, p, list(s)) for o, p, s in zip(self.owners, self.priorities, self.successors)]

    def full_view(self) -> "SubgameView":
        return SubgameView.full(self)


def build_game(specs: Iterable[NodeSpec]) -> Game:
    """Validate node specs and build a Game with predecessor lists.

    Self-loops are rejected here; run `normalize_self_loops` on external input first.
    """
    owners: list[Owner] = []
    priorities: list[int] = []
    successors: list[tuple[int, ...]] = []
    for owner, priority, succ in specs:
        owners.append(Owner(owner))
        if priority < 0:
            raise ValueError(f"node {len(priorities)} has negative priority {priority}")
        priorities.append(int(priority))
        successors.append(tuple(int(s) for s in succ))

    n = len(owners)
    preds: list[list[int]] = [[] for _ in range(n)]
    for v, succ in enumerate(successors):
        if not succ:
            raise EmptySuccessors(v)
        seen = set()
        for u in succ:
            if not 0 <= u < n:
                raise DanglingEdge(v, u)
            if u == v:
                raise SelfLoop(v)
            if u in seen:
                raise DuplicateEdge(v, u)
            seen.add(u)
            preds[u].append(v)
    return Game(tuple(owners), tuple(priorities), tuple(successors), tuple(tuple(p) for p in preds))


def normalize_self_loops(
    specs: Sequence[NodeSpec], report: list[str] | None = None
) -> tuple[list[NodeSpec], dict[int, int]]:
    """Remove self-loops by subdivision and drop duplicate edges.

    A loop v -> v becomes v -> v' -> v where v' is a fresh node with the
    priority of v. Fresh nodes are appended after the original ones, so the
    returned mapping (old id -> new id) is the identity on original nodes.
    Notes about every change are appended to `report` when given.
    """
    out: list[NodeSpec] = []
    extra: list[NodeSpec] = []
    n = len(specs)
    for v, (owner, priority, succ) in enumerate(specs):
        new_succ: list[int] = []
        seen = set()
        for u in succ:
            if u in seen:
                if report is not None:
                    report.append(f"node {v}: dropped duplicate edge to {u}")
                continue
            seen.add(u)
            if u == v:
                fresh = n + len(extra)
                extra.append((Owner.EVEN, priority, [v]))
                new_succ.append(fresh)
                if report is not None:
                    report.append(f"node {v}: self-loop subdivided through new node {fresh}")
            else:
                new_succ.append(u)
        out.append((Owner(owner), priority, new_succ))
    return out + extra, {v: v for v in range(n)}


class SubgameView:
    """A game with an attractor-closed set of nodes masked out.

    Views are cheap to derive: `restrict` copies only the removal mask.
    """

    __slots__ = ("game", "_removed", "_live_count")

    def __init__(self, game: Game, removed: bytearray, live_count: int):
        self.game = game
        self._removed = removed
        self._live_count = live_count

    @classmethod
    def full(cls, game: Game) -> "SubgameView":
        return cls(game, bytearray(game.n), game.n)

    def __len__(self) -> int:
        return self._live_count

    def __bool__(self) -> bool:
        return self._live_count > 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.game.n and not self._removed[v]

    def __iter__(self) -> Iterator[int]:
        removed = self._removed
        return (v for v in range(self.game.n) if not removed[v])

    def __repr__(self) -> str:
        return f"SubgameView(live={sorted(self)})"

    def is_live(self, v: int) -> bool:
        return not self._removed[v]

    @property
    def removed(self) -> NodeSet:
        return frozenset(v for v in range(self.game.n) if self._removed[v])

    def live_set(self) -> NodeSet:
        return frozenset(self)

    def live_successors(self, v: int) -> list[int]:
        removed = self._removed
        return [u for u in self.game.successors[v] if not removed[u]]

    def live_predecessors(self, v: int) -> list[int]:
        removed = self._removed
        return [u for u in self.game.predecessors[v] if not removed[u]]

    def edge_count(self) -> int:
        return sum(len(self.live_successors(v)) for v in self)

    def restrict(self, to_remove: Iterable[int], check: bool = True) -> "SubgameView":
        """Return the view with `to_remove` taken out.

        `to_remove` must be attractor-closed; with `check` set a node left
        without live successors raises NotAttractorClosed.
        """
        removed = bytearray(self._removed)
        count = self._live_count
        gone = []
        for v in to_remove:
            if not removed[v]:
                removed[v] = 1
                count -= 1
                gone.append(v)
        if not gone:
            return self
        view = SubgameView(self.game, removed, count)
        if check:
            succ = self.game.successors
            for v in gone:
                for u in self.game.predecessors[v]:
                    if not removed[u] and all(removed[w] for w in succ[u]):
                        raise NotAttractorClosed(u)
        return view

    def max_priority(self) -> int:
        if not self:
            raise EmptyView("max_priority of an empty view")
        prio = self.game.priorities
        return max(prio[v] for v in self)

    def nodes_with_priority(self, p: int) -> NodeSet:
        removed = self._removed
        return frozenset(v for v in self.game.by_priority.get(p, ()) if not removed[v])


def restrict(view: SubgameView, to_remove: Iterable[int]) -> SubgameView:
    return view.restrict(to_remove)


def max_priority(view: SubgameView) -> int:
    return view.max_priority()


def nodes_with_priority(view: SubgameView, p: int) -> NodeSet:
    return view.nodes_with_priority(p)
