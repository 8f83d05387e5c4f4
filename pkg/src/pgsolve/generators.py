"""Seeded random games and stress families.

Random games are drawn from SplitMix64 (generator format version 1):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic mod 2**64. Bounded integers use rejection sampling and
floats take the top 53 bits, so output is identical on every platform.
Changing any of this requires bumping GENERATOR_VERSION.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .game import Game, Owner, build_game

GENERATOR_VERSION = 1
_MASK = (1 << 64) - 1


class InvalidParams(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class GenParams:
    n: int
    max_priority: int
    min_out: int = 1
    max_out: int = 3
    owner_bias: float = 0.5
    seed: int = 0

    def validate(self) -> None:
        if self.n < 2:
            raise InvalidParams("need at least 2 nodes")
        if self.max_priority < 0:
            raise InvalidParams("max_priority must be non-negative")
        if not 1 <= self.min_out <= self.max_out <= self.n - 1:
            raise InvalidParams(f"need 1 <= min_out <= max_out <= n-1, got {self.min_out}..{self.max_out} for n={self.n}")
        if not 0.0 <= self.owner_bias <= 1.0:
            raise InvalidParams("owner_bias must lie in [0, 1]")


def random_game(p: GenParams) -> Game:
    """Uniform priorities, owners by bias, distinct non-self successors (sorted)."""
    p.validate()
    rng = SplitMix64(p.seed)
    specs = []
    for v in range(p.n):
        priority = rng.between(0, p.max_priority)
        owner = Owner.EVEN if rng.random() < p.owner_bias else Owner.ODD
        degree = rng.between(p.min_out, p.max_out)
        pool = [u for u in range(p.n) if u != v]
        # partial Fisher-Yates: the first `degree` slots are the sample
        for i in range(degree):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        specs.append((owner, priority, sorted(pool[:degree])))
    return build_game(specs)


def random_suite(
    count: int,
    max_n: int = 8,
    max_priority: int = 6,
    max_out: int = 3,
    min_n: int = 2,
    base_seed: int = 0,
) -> Iterator[tuple[int, Game]]:
    """`count` games with sizes drawn from [min_n, max_n]; yields (seed, game)."""
    for i in range(count):
        seed = base_seed + i
        n = SplitMix64(seed ^ 0x5EED).between(min_n, max_n)
        yield seed, random_game(GenParams(n, max_priority, 1, min(max_out, n - 1), 0.5, seed))


def family_chain(k: int) -> Game:
    """Ladder of 2k nodes with priorities 1..2k.

    Node i (priority i+1) is owned by the player its priority does not
    favor, has a rung back to node 0 and a step to i+1; the last node
    returns to node 0. Every recursive level peels off only the top node,
    so Zielonka's algorithm descends through all levels.
    """
    if k < 1:
        raise InvalidParams("chain needs k >= 1")
    n = 2 * k
    specs = []
    for i in range(n):
        priority = i + 1
        owner = Owner.favored_by(priority).opponent
        succ = sorted({0, i + 1} - {i}) if i < n - 1 else [0]
        specs.append((owner, priority, succ))
    return build_game(specs)


def family_clique(n: int) -> Game:
    """Complete graph on n nodes; node i has priority i and owner i mod 2."""
    if n < 2:
        raise InvalidParams("clique needs n >= 2")
    return build_game([(Owner(i % 2), i, [u for u in range(n) if u != i]) for i in range(n)])
