import random

from txyrigid import FixedPoint, FixedPointData


def random_data(rng: random.Random, n=None, m=None, max_abs=6, n_max=4, m_max=3) -> FixedPointData:
    """Seeded random candidate within the given bounds."""
    n = n if n is not None else rng.randint(1, n_max)
    m = m if m is not None else rng.randint(1, m_max)
    choices = [w for w in range(-max_abs, max_abs + 1) if w]
    points = tuple(
        FixedPoint(tuple(rng.choice(choices) for _ in range(n)), rng.choice((1, -1)))
        for _ in range(m)
    )
    return FixedPointData(n, points)
