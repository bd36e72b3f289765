import random

import pytest

from quietnet.geometry import Point
from quietnet.model import NodeSet


def random_node_set(rng: random.Random, n: int, span: int = 32) -> NodeSet:
    pts = set()
    while len(pts) < n:
        pts.add((rng.randint(0, span), rng.randint(0, span)))
    return NodeSet(tuple(Point(x, y) for x, y in sorted(pts)))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
