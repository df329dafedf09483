"""
Breadth-first enumeration of Cayley balls
- Closure under right multiplication by X u X^-1, one layer per radius
- Deduplication by canonical key, exact equality on key collisions
- Each new layer is ordered by key so results never depend on worker count
- The frontier is expanded in batches and the cap is checked after each one
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core_groups.base import Element, GroupRealization
from shared.config import DEFAULT_CAP
from shared.errors import BallCapExceeded, SpecValueError

logger = logging.getLogger("BallEnumerator")

# frontier elements expanded per worker before the cap is checked again
BATCH_PER_WORKER = 4096


@dataclass(frozen=True)
class BallMember:
    key: bytes
    element: Element
    distance: int


class Ball:
    def __init__(self, realization: GroupRealization, radius: int, members: List[BallMember]):
        self.realization = realization
        self.radius = radius
        self.members: List[BallMember] = []
        self._index: Dict[bytes, int] = {}
        # later positions sharing a key; only coarse-key realizations fill this
        self._collisions: Dict[bytes, List[int]] = {}
        self._append_layer(members)

    def __len__(self) -> int:
        return len(self.members)

    def _append_layer(self, members: List[BallMember]) -> None:
        for member in members:
            position = len(self.members)
            if member.key in self._index:
                self._collisions.setdefault(member.key, []).append(position)
            else:
                self._index[member.key] = position
            self.members.append(member)

    def find(self, x: Element, key: Optional[bytes] = None) -> Optional[int]:
        """Position of x in the ball, or None."""
        r = self.realization
        if key is None:
            key = r.canonical_key(x)
        first = self._index.get(key)
        if first is None:
            return None
        if r.exact_keys:
            return first
        for i in (first, *self._collisions.get(key, ())):
            if r.equal(self.members[i].element, x):
                return i
        return None

    def sphere_sizes(self) -> List[int]:
        sizes = [0] * (self.radius + 1)
        for member in self.members:
            sizes[member.distance] += 1
        return sizes


def _neighbors(r: GroupRealization, elements: Sequence[Element], alphabet) -> List[Tuple[bytes, Element]]:
    out = []
    for x in elements:
        for _, s in alphabet:
            y = r.multiply(x, s)
            out.append((r.canonical_key(y), y))
    return out


def _expand_batch(r: GroupRealization, elements: Sequence[Element], alphabet, pool: Optional[ThreadPoolExecutor], workers: int):
    if pool is None or len(elements) < 2 * workers:
        return _neighbors(r, elements, alphabet)
    size = -(-len(elements) // workers)
    chunks = [elements[i:i + size] for i in range(0, len(elements), size)]
    parts = list(pool.map(lambda chunk: _neighbors(r, chunk, alphabet), chunks))
    # merge in chunk order: same candidate sequence as the serial path
    return [item for part in parts for item in part]


def _next_layer(ball: Ball, frontier: List[Element], alphabet, distance: int, cap: int, pool, workers: int):
    r = ball.realization
    fresh: Dict[bytes, List[Element]] = {}
    found = 0
    batch = BATCH_PER_WORKER * workers
    for start in range(0, len(frontier), batch):
        for key, y in _expand_batch(r, frontier[start:start + batch], alphabet, pool, workers):
            if ball.find(y, key) is not None:
                continue
            bucket = fresh.setdefault(key, [])
            if r.exact_keys:
                if bucket:
                    continue
            elif any(r.equal(y, other) for other in bucket):
                continue
            bucket.append(y)
            found += 1
        if len(ball) + found > cap:
            size = len(ball) + found
            logger.warning(f"⚠️  Cap exceeded at radius {distance} ({size} > {cap}); keeping radius {distance - 1}")
            raise BallCapExceeded(distance, size, cap, partial=ball)

    if r.exact_keys:
        return [(key, bucket[0]) for key, bucket in sorted(fresh.items())]
    ordered = sorted(
        ((key, r.sort_token(y), y) for key, bucket in fresh.items() for y in bucket),
        key=lambda item: (item[0], item[1]),
    )
    return [(key, y) for key, _, y in ordered]


def enumerate_ball(
    r: GroupRealization,
    radius: int,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> Ball:
    if radius < 0:
        raise SpecValueError(f"radius must be >= 0, got {radius}")

    ball = Ball(r, 0, [BallMember(r.canonical_key(r.identity), r.identity, 0)])
    alphabet = r.alphabet()
    frontier = [r.identity]
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None

    try:
        for distance in range(1, radius + 1):
            layer = _next_layer(ball, frontier, alphabet, distance, cap, pool, workers)

            if not layer:
                # finite group: every later sphere is empty too
                logger.debug(f"Ball closed at radius {distance - 1} with {len(ball)} elements")
                ball.radius = radius
                return ball

            ball._append_layer([BallMember(key, y, distance) for key, y in layer])
            ball.radius = distance
            frontier = [y for _, y in layer]
            logger.debug(f"Radius {distance}: sphere {len(layer)}, ball {len(ball)}")
    finally:
        if pool is not None:
            pool.shutdown()

    return ball
