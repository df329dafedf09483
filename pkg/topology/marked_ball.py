"""
Marked Cayley balls: labeled rooted digraphs around the identity

Vertices are numbered in ball order (root 0). Only out-edges (g, i, g*x_i)
are stored; the inverse edge is the same edge read backwards.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core_groups.base import GroupRealization
from growth_engine.ball import Ball, enumerate_ball
from shared.config import DEFAULT_CAP
from shared.errors import AlphabetMismatchError, RadiusMismatchError, SpecValueError

logger = logging.getLogger("MarkedBall")

Edge = Tuple[int, int, int]  # (source, generator index, target)


@dataclass(frozen=True)
class MarkedBall:
    radius: int
    generator_names: Tuple[str, ...]
    distances: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.distances)

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def out_map(self) -> Dict[Tuple[int, int], int]:
        return {(u, i): v for u, i, v in self.edges}

    def in_map(self) -> Dict[Tuple[int, int], int]:
        return {(v, i): u for u, i, v in self.edges}

    def restrict(self, n: int) -> "MarkedBall":
        """Sub-ball of radius n; ball order keeps it a prefix of the vertices."""
        if not 0 <= n <= self.radius:
            raise SpecValueError(f"cannot restrict a radius {self.radius} ball to radius {n}")
        count = sum(1 for d in self.distances if d <= n)
        edges = tuple(e for e in self.edges if e[0] < count and e[2] < count)
        return MarkedBall(n, self.generator_names, self.distances[:count], edges)


def marked_ball_from(ball: Ball) -> MarkedBall:
    r = ball.realization
    edges: List[Edge] = []
    for u, member in enumerate(ball.members):
        for i, g in enumerate(r.generators):
            v = ball.find(r.multiply(member.element, g))
            if v is not None:
                edges.append((u, i, v))
    logger.debug(f"Marked ball of {r.name}: {len(ball)} vertices, {len(edges)} edges")
    return MarkedBall(
        radius=ball.radius,
        generator_names=r.generator_names,
        distances=tuple(m.distance for m in ball.members),
        edges=tuple(edges),
    )


def extract_marked_ball(r: GroupRealization, radius: int, cap: int = DEFAULT_CAP, workers: int = 1) -> MarkedBall:
    return marked_ball_from(enumerate_ball(r, radius, cap, workers))


def label_map(a: MarkedBall, b: MarkedBall) -> Optional[Dict[int, int]]:
    """The only candidate root- and label-preserving map a -> b, grown along
    edges in both directions; None when some edge of a has no partner in b."""
    a_out, a_in = a.out_map(), a.in_map()
    b_out, b_in = b.out_map(), b.in_map()
    phi = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for i in range(a.generator_count):
            for a_side, b_side in ((a_out, b_out), (a_in, b_in)):
                v = a_side.get((u, i))
                if v is None:
                    continue
                image = b_side.get((phi[u], i))
                if image is None:
                    return None
                if v in phi:
                    if phi[v] != image:
                        return None
                else:
                    phi[v] = image
                    queue.append(v)
    return phi


def balls_isomorphic(a: MarkedBall, b: MarkedBall) -> bool:
    if a.generator_count != b.generator_count:
        raise AlphabetMismatchError(f"{a.generator_count} generators vs {b.generator_count}")
    if a.radius != b.radius:
        raise RadiusMismatchError(f"radius {a.radius} vs {b.radius}")
    if a.size != b.size or len(a.edges) != len(b.edges):
        return False

    phi = label_map(a, b)
    if phi is None or len(phi) != a.size or len(set(phi.values())) != b.size:
        return False
    return {(phi[u], i, phi[v]) for u, i, v in a.edges} == set(b.edges)


def to_dot(ball: MarkedBall, title: str = "ball") -> str:
    lines = [f'digraph "{title}" {{', "  node [shape=circle];", "  0 [shape=doublecircle];"]
    for u, i, v in ball.edges:
        lines.append(f'  {u} -> {v} [label="{ball.generator_names[i]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
