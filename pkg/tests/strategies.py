import random

from hypothesis import strategies as st

from blocking_pebbles.position import Position


def random_position(rng: random.Random, max_vertices=4, max_pebbles=6, green_only=False) -> Position:
    """Random DAG (arcs follow a shuffled order) with a random pebble distribution."""
    n = rng.randint(1, max_vertices)
    order = list(range(n))
    rng.shuffle(order)
    arcs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    pebbles = [[0, 0, 0] for _ in range(n)]
    for _ in range(rng.randint(0, max_pebbles)):
        pebbles[rng.randrange(n)][2 if green_only else rng.randrange(3)] += 1
    return Position.make(n, arcs, pebbles)


@st.composite
def positions(draw, max_vertices=4, max_pebbles=6, green_only=False):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_position(random.Random(seed), max_vertices, max_pebbles, green_only)
