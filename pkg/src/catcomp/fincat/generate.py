"""Seeded generator of small free categories on random acyclic graphs."""

from __future__ import annotations

import random

from catcomp.errors import PreconditionError
from catcomp.fincat.category import CategoryPresentation, build_category


def _path_count(n: int, edges: list[tuple[int, int]]) -> int:
    # edges always go from lower to higher index, so a reverse sweep is topological
    from_node = [1] * n
    for x in reversed(range(n)):
        from_node[x] = 1 + sum(from_node[j] for i, j in edges if i == x)
    return sum(from_node)


def generate_category(seed: int, max_objects: int, max_morphisms: int) -> CategoryPresentation:
    """Free category on a random DAG, truncated so it has at most ``max_morphisms`` paths."""
    if max_objects < 1 or max_morphisms < 1:
        raise PreconditionError(f"generator bounds must be at least 1: objects={max_objects}, morphisms={max_morphisms}")
    rng = random.Random(seed)
    n = rng.randint(1, min(max_objects, max_morphisms))

    candidates = [(i, j) for i in range(n) for j in range(i + 1, n)] * 2
    rng.shuffle(candidates)
    edges: list[tuple[int, int]] = []
    for edge in candidates:
        if rng.random() < 0.35:
            continue
        edges.append(edge)
        if _path_count(n, edges) > max_morphisms:
            edges.pop()

    outgoing: dict[int, list[int]] = {x: [] for x in range(n)}
    for e, (i, _) in enumerate(edges):
        outgoing[i].append(e)

    # a path is a tuple of edge ids in traversal order; its label lists them outermost first
    paths: list[tuple[int, int, tuple[int, ...]]] = []

    def walk(start: int, node: int, trail: tuple[int, ...]) -> None:
        if trail:
            paths.append((start, node, trail))
        for e in outgoing[node]:
            walk(start, edges[e][1], trail + (e,))

    for x in range(n):
        walk(x, x, ())

    def label(trail: tuple[int, ...]) -> str:
        return "*".join(f"e{e}" for e in reversed(trail))

    objects = [str(x) for x in range(n)]
    morphisms = [(label(t), str(s), str(d)) for s, d, t in paths]
    composites: dict[tuple[str, str], str] = {}
    by_start: dict[int, list[tuple[int, tuple[int, ...]]]] = {x: [] for x in range(n)}
    for s, d, t in paths:
        by_start[s].append((d, t))
    for s, d, t in paths:
        for _, t2 in by_start[d]:
            composites[(label(t2), label(t))] = label(t + t2)
    return build_category(f"gen{seed}", objects, morphisms, composites)
