"""Exactly uniform random (n, k) diagrams.

A uniform (n-1)-subset of 1..nk is pushed through ``theta``.  Every diagram
has a fiber of exactly n subsets, so the image is uniform.  Subsets are drawn
by unranking a uniform integer below binomial(nk, n-1); the integer comes
from PCG64 raw 64-bit words with rejection, so arbitrarily large ranges stay
exactly uniform.
"""
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

import numpy as np

from ._config import check_cap
from .counting import binomial, catalan_nk
from .diagrams import Diagram, enumerate_diagrams, theta
from .errors import DomainError

ALGORITHM = "pcg64-raw64-rejection/lex-unrank/theta"


def unrank_combination(rank: int, size: int, m: int) -> tuple[int, ...]:
    """The ``rank``-th m-subset of 1..size in lexicographic order."""
    total = comb(size, m)
    if not 0 <= rank < total:
        raise DomainError(f"rank {rank} outside [0, {total})")
    out = []
    x = 1
    for i in range(m, 0, -1):
        # skip every subset whose next element is x
        while True:
            block = comb(size - x, i - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def rank_combination(subset, size: int) -> int:
    subset = sorted(subset)
    m = len(subset)
    rank = 0
    prev = 0
    for i, x in enumerate(subset):
        for y in range(prev + 1, x):
            rank += comb(size - y, m - i - 1)
        prev = x
    return rank


def uniform_below(bitgen: np.random.BitGenerator, bound: int) -> int:
    """Uniform integer in [0, bound) from raw 64-bit words, by rejection."""
    if bound <= 0:
        raise DomainError(f"bound must be positive, got {bound}")
    bits = (bound - 1).bit_length()
    if bits == 0:
        return 0
    words = -(-bits // 64)
    mask = (1 << bits) - 1
    while True:
        raw = bitgen.random_raw(words)
        value = 0
        for w in raw.tolist():
            value = (value << 64) | w
        value &= mask
        if value < bound:
            return value


@dataclass
class SamplerConfig:
    n: int
    k: int
    seed: int = 0
    bitgen: np.random.BitGenerator = field(default=None, repr=False)

    def __post_init__(self):
        if self.n < 1 or self.k < 2:
            raise DomainError(f"need n >= 1 and k >= 2, got n={self.n}, k={self.k}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.bitgen is None:
            self.bitgen = np.random.PCG64(self.seed)

    def spawn(self, count: int) -> list["SamplerConfig"]:
        """Independent child streams derived from the seed."""
        children = np.random.SeedSequence(self.seed).spawn(count)
        return [SamplerConfig(self.n, self.k, self.seed, np.random.PCG64(c)) for c in children]

    def header(self) -> dict:
        return {"n": self.n, "k": self.k, "seed": self.seed, "algorithm": ALGORITHM}


def sample_subset(cfg: SamplerConfig) -> tuple[int, ...]:
    nk, m = cfg.n * cfg.k, cfg.n - 1
    return unrank_combination(uniform_below(cfg.bitgen, binomial(nk, m)), nk, m)


def sample_diagram(cfg: SamplerConfig) -> Diagram:
    return theta(sample_subset(cfg), cfg.n, cfg.k)


def sample_diagrams(cfg: SamplerConfig, count: int) -> Iterator[Diagram]:
    for _ in range(count):
        yield sample_diagram(cfg)


@dataclass
class UniformityReport:
    counts: dict[Diagram, int]
    trials: int
    chi_square: float
    dof: int


def uniformity_report(cfg: SamplerConfig, trials: int, cap=None) -> UniformityReport:
    """Pearson chi-square of ``trials`` samples against the uniform law."""
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    classes = catalan_nk(cfg.n, cfg.k)
    check_cap(classes, cap)
    counts = {d: 0 for d in enumerate_diagrams(cfg.n, cfg.k, cap)}
    for d in sample_diagrams(cfg, trials):
        counts[d] += 1
    expected = trials / classes
    chi = sum((c - expected) ** 2 / expected for c in counts.values())
    return UniformityReport(counts, trials, chi, classes - 1)
