from collections import Counter
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusscat.counting import binomial
from fusscat.diagrams import Diagram, enumerate_diagrams, fiber_census, theta, validate_diagram
from fusscat.errors import DomainError
from fusscat.sampling import (
    SamplerConfig,
    rank_combination,
    sample_diagram,
    sample_diagrams,
    uniform_below,
    uniformity_report,
    unrank_combination,
)


class CyclingWords:
    """Stand-in bit generator returning 0, 1, 2, ... as raw words."""

    def __init__(self):
        self.next = 0

    def random_raw(self, size):
        out = np.arange(self.next, self.next + size, dtype=np.uint64)
        self.next += size
        return out


@pytest.mark.parametrize("size,m", [(6, 0), (6, 1), (8, 3), (10, 5), (12, 4)])
def test_unrank_is_lex_order(size, m):
    expected = list(combinations(range(1, size + 1), m))
    assert [unrank_combination(r, size, m) for r in range(binomial(size, m))] == expected
    assert [rank_combination(c, size) for c in expected] == list(range(len(expected)))


@given(st.integers(1, 300), st.data())
def test_rank_unrank_inverse(size, data):
    m = data.draw(st.integers(0, size))
    rank = data.draw(st.integers(0, binomial(size, m) - 1))
    subset = unrank_combination(rank, size, m)
    assert len(subset) == m and list(subset) == sorted(set(subset))
    assert rank_combination(subset, size) == rank


def test_unrank_out_of_range():
    with pytest.raises(DomainError):
        unrank_combination(binomial(6, 2), 6, 2)


def test_uniform_below_rejects_above_bound():
    gen = CyclingWords()
    # bound 5 needs 3 bits; raw values 0..7 in turn, 5, 6, 7 rejected
    draws = [uniform_below(gen, 5) for _ in range(5)]
    assert draws == [0, 1, 2, 3, 4]
    assert uniform_below(gen, 5) == 0  # 5, 6, 7 skipped, then 8 & 7 = 0
    assert gen.next == 9


def test_uniform_below_big_bound():
    bound = binomial(3000, 999)
    bitgen = np.random.PCG64(3)
    values = [uniform_below(bitgen, bound) for _ in range(50)]
    assert all(0 <= v < bound for v in values)
    assert max(values).bit_length() > 64


def test_single_star_always():
    for seed in range(5):
        assert sample_diagram(SamplerConfig(1, 4, seed)).stars == ((1, 2, 3, 4),)


def test_two_three_is_two_to_one():
    image = Counter(theta([x], 2, 3) for x in range(1, 7))
    assert set(image.values()) == {2} and len(image) == 3


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (2, 5)])
def test_structural_uniformity(n, k):
    census = fiber_census(n, k)
    assert set(census.values()) == {n}


def test_determinism():
    a = [d.stars for d in sample_diagrams(SamplerConfig(7, 3, seed=99), 20)]
    b = [d.stars for d in sample_diagrams(SamplerConfig(7, 3, seed=99), 20)]
    c = [d.stars for d in sample_diagrams(SamplerConfig(7, 3, seed=100), 20)]
    assert a == b and a != c


def test_spawned_streams_differ():
    children = SamplerConfig(6, 3, seed=5).spawn(2)
    a = [d.stars for d in sample_diagrams(children[0], 10)]
    b = [d.stars for d in sample_diagrams(children[1], 10)]
    assert a != b


def test_seed_range():
    with pytest.raises(DomainError):
        SamplerConfig(2, 2, seed=-1)
    with pytest.raises(DomainError):
        SamplerConfig(2, 2, seed=2**64)
    SamplerConfig(2, 2, seed=2**64 - 1)


def test_report_single_class():
    report = uniformity_report(SamplerConfig(1, 5, seed=1), 100)
    assert report.chi_square == 0 and report.dof == 0


def test_report_two_three():
    report = uniformity_report(SamplerConfig(2, 3, seed=2024), 30000)
    assert len(report.counts) == 3 and sum(report.counts.values()) == 30000
    # chi-square(2) 0.999 quantile
    assert report.chi_square < 13.82
    assert all(abs(c - 10000) < 600 for c in report.counts.values())


def test_samples_are_valid_large():
    d = sample_diagram(SamplerConfig(400, 4, seed=8))
    assert isinstance(d, Diagram) and d.n == 400
    assert validate_diagram(d).ok


def test_classes_match_enumeration():
    report = uniformity_report(SamplerConfig(3, 3, seed=4), 2000)
    assert list(report.counts) == list(enumerate_diagrams(3, 3))
