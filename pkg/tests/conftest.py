import functools
import sys
import random

import pytest

from homcycle import build_index_function, generate
from homcycle.complex import Chain

SURFACES = ["sphere_tet", "rp2_6", "torus_grid(3,3)", "klein_grid(4,4)", "genus2_polygon"]
ALL_MESHES = SURFACES + ["torus3_grid(3,3,3)"]


@functools.lru_cache(maxsize=None)
def bundle(name):
    return generate(name)


@functools.lru_cache(maxsize=None)
def table(name):
    b = bundle(name)
    return build_index_function(b.complex, b.hn1)


def random_cycle(c, rng, steps=None):
    """A random 1-cycle: a sum of random triangle boundaries plus random closed walks."""
    bits = 0
    masks = c.boundary_masks(2)
    for _ in range(rng.randint(0, 4)):
        bits ^= masks[rng.randrange(len(masks))]
    for _ in range(rng.randint(0, 3)):
        walk = random_closed_walk(c, rng, steps or rng.randint(3, 12))
        bits ^= c.path_chain(walk).bits
    return Chain(1, bits)


def random_walk(c, rng, start, length):
    walk = [start]
    for _ in range(length):
        walk.append(rng.choice(c.neighbors(walk[-1])))
    return walk


def random_closed_walk(c, rng, length, start=None):
    """Random walk from ``start`` closed up by a BFS path back home."""
    if start is None:
        start = rng.randrange(c.n_vertices)
    walk = random_walk(c, rng, start, length)
    return walk + shortest_path(c, walk[-1], start)[1:]


def shortest_path(c, a, b):
    prev = {a: None}
    queue = [a]
    for v in queue:
        if v == b:
            break
        for w in c.neighbors(v):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    out = [b]
    while prev[out[-1]] is not None:
        out.append(prev[out[-1]])
    return out[::-1]


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
