import random

import pytest

from scrollsec import contains, field_make, normalize_point, scroll_new


def external_point(spec, ctx, rng):
    """Random point of the ambient space off the scroll."""
    nv = spec.ambient + 1
    while True:
        p = tuple(ctx.rand(rng) for _ in range(nv))
        if not any(p):
            continue
        p = normalize_point(ctx, p)
        if not contains(spec, ctx, p):
            return p


def external_points(spec, ctx, seed, count):
    rng = random.Random(seed)
    return [external_point(spec, ctx, rng) for _ in range(count)]


@pytest.fixture
def f7():
    return field_make(7, 1)


@pytest.fixture
def f5():
    return field_make(5, 1)


@pytest.fixture
def s3():
    return scroll_new([3])


@pytest.fixture
def s12():
    return scroll_new([1, 2])
