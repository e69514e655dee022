"""(n, k) star diagrams and the peeling maps between subsets and diagrams.

A diagram is stored purely combinatorially: a non-crossing partition of the
cyclic labels ``1..nk`` into ``n`` blocks ("stars") of size ``k``.  The
geometry of a star's centre is irrelevant up to isotopy.

Peeling convention used throughout: labels are scanned in increasing cyclic
order, and an innermost star is a member of the up-set followed, among the
labels still present, by ``k - 1`` labels outside it.
"""
from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from ._config import check_cap
from .counting import binomial, catalan_nk
from .errors import DomainError, InternalInvariantBroken, NotPeelable

Code = tuple[int, ...]


@dataclass(frozen=True)
class Diagram:
    """Canonical (n, k) diagram: blocks sorted by minimum, labels ascending."""

    n: int
    k: int
    stars: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        stars = tuple(sorted(tuple(sorted(s)) for s in self.stars))
        object.__setattr__(self, "stars", stars)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n=None, k=None) -> "Diagram":
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = len(blocks)
        if k is None:
            k = len(blocks[0]) if blocks else 0
        return cls(n, k, tuple(blocks))

    @property
    def size(self) -> int:
        return self.n * self.k

    def star_of(self) -> dict[int, tuple[int, ...]]:
        return {label: star for star in self.stars for label in star}

    def rotate(self, shift: int = 1) -> "Diagram":
        nk = self.size
        return Diagram(self.n, self.k, tuple(tuple((x - 1 + shift) % nk + 1 for x in s) for s in self.stars))

    def as_lists(self) -> list[list[int]]:
        return [list(s) for s in self.stars]


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _interleave(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # b crosses a iff b's labels fall into more than one cyclic gap of a.
    gaps = {bisect_right(a, x) % len(a) for x in b}
    return len(gaps) > 1


def validate_diagram(d: Diagram) -> ValidationReport:
    report = ValidationReport()
    if d.n < 1 or d.k < 2:
        report.violations.append(f"need n >= 1 and k >= 2, got n={d.n}, k={d.k}")
        return report
    if len(d.stars) != d.n:
        report.violations.append(f"expected {d.n} stars, found {len(d.stars)}")
    for star in d.stars:
        if len(star) != d.k or len(set(star)) != len(star):
            report.violations.append(f"star {list(star)} does not have {d.k} distinct labels")
    seen: dict[int, int] = {}
    for star in d.stars:
        for x in star:
            seen[x] = seen.get(x, 0) + 1
    for x in sorted(seen):
        if not 1 <= x <= d.size:
            report.violations.append(f"label {x} outside 1..{d.size}")
        elif seen[x] > 1:
            report.violations.append(f"label {x} used by {seen[x]} stars")
    missing = [x for x in range(1, d.size + 1) if x not in seen]
    if missing:
        report.violations.append(f"labels not covered: {missing}")
    if not report.violations and _nested(d.stars):
        return report
    for a, b in combinations(d.stars, 2):
        if _interleave(a, b):
            report.violations.append(f"blocks interleave: {list(a)} and {list(b)}")
    return report


def _nested(stars) -> bool:
    # linear scan: every label must belong to the innermost open block
    last = {s[-1]: s for s in stars}
    first = {s[0]: s for s in stars}
    stack = []
    for x in sorted(x for s in stars for x in s):
        if x in first:
            stack.append(first[x])
        elif not stack or x not in stack[-1]:
            return False
        if x in last:
            if stack[-1] is not last[x]:
                return False
            stack.pop()
    return True


def is_peelable(blocks: Iterable[Iterable[int]], nk: int) -> bool:
    """Second validator: can the blocks be removed one cyclically-consecutive block at a time?"""
    owner = {}
    for i, b in enumerate(blocks):
        for x in b:
            owner[x] = i
    remaining = list(range(1, nk + 1))
    if sorted(owner) != remaining:
        return False
    while remaining:
        m = len(remaining)
        for start in range(m):
            block = owner[remaining[start]]
            run = [remaining[(start + t) % m] for t in range(sum(1 for v in owner.values() if v == block))]
            if all(owner[x] == block for x in run):
                keep = set(run)
                remaining = [x for x in remaining if x not in keep]
                for x in run:
                    del owner[x]
                break
        else:
            return False
    return True


def height_profile(up: Iterable[int], nk: int) -> tuple[int, dict[int, int]]:
    """Height function from the smallest up-label ``j``: +1 per up label, -1 otherwise.

    Returns ``(j, heights)`` where labels are read in increasing cyclic order
    starting at ``j``.
    """
    up = set(up)
    if not up:
        raise DomainError("height profile needs a nonempty up-set")
    j = min(up)
    heights = {}
    h = 0
    for t in range(nk):
        x = (j - 1 + t) % nk + 1
        h += 1 if x in up else -1
        heights[x] = h
    return j, heights


def _check_code(code, nk: int, size: int, what: str) -> set[int]:
    members = set(code)
    if len(members) != len(list(code)):
        raise DomainError(f"{what}: repeated labels in {sorted(code)}")
    if len(members) != size:
        raise DomainError(f"{what}: expected {size} labels, got {len(members)}")
    bad = [x for x in members if not 1 <= x <= nk]
    if bad:
        raise DomainError(f"{what}: labels {sorted(bad)} outside 1..{nk}")
    return members


def _peel(up: set[int], nk: int, k: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """Stack form of cyclic peeling; returns (stars, leftover labels).

    Two passes over the cycle: every up label opens a star, every other label
    joins the most recently opened star still short of ``k`` labels.
    """
    taken = [False] * (nk + 1)
    stack: list[list[int]] = []
    stars = []
    for sweep in range(2):
        for x in range(1, nk + 1):
            if taken[x]:
                continue
            if x in up:
                stack.append([x])
                taken[x] = True
            elif stack:
                top = stack[-1]
                top.append(x)
                taken[x] = True
                if len(top) == k:
                    stars.append(tuple(stack.pop()))
        if not stack:
            break
    if stack:
        raise NotPeelable(f"up-set {sorted(up)} leaves {len(stack)} unfinished stars")
    return stars, [x for x in range(1, nk + 1) if not taken[x]]


def peel_naive(up: Iterable[int], nk: int, k: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """Literal peeling: repeatedly remove an up label followed by k-1 others.

    Quadratic reference used to check the stack version.
    """
    up = set(up)
    remaining = list(range(1, nk + 1))
    stars = []
    while up & set(remaining):
        m = len(remaining)
        for i, x in enumerate(remaining):
            window = [remaining[(i + t) % m] for t in range(k)]
            if m >= k and x in up and not up & set(window[1:]):
                stars.append(tuple(window))
                remaining = [y for y in remaining if y not in window]
                break
        else:
            raise NotPeelable(f"no innermost star among {remaining}")
    return stars, remaining


def psi(up: Iterable[int], n: int, k: int) -> Diagram:
    """Diagram obtained by peeling innermost stars of an n-element up-set."""
    if n < 1 or k < 2:
        raise DomainError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    members = _check_code(up, n * k, n, "psi")
    stars, left = _peel(members, n * k, k)
    if left or len(stars) != n:
        raise NotPeelable(f"up-set {sorted(members)} did not peel into {n} stars")
    return Diagram(n, k, tuple(stars))


def completion_label(code: Iterable[int], n: int, k: int) -> int:
    """Smallest label left over after peeling an (n-1)-subset."""
    members = _check_code(code, n * k, n - 1, "theta")
    _, left = _peel(members, n * k, k)
    return left[0]


def theta(code: Iterable[int], n: int, k: int) -> Diagram:
    """Decode an (n-1)-subset: peel n-1 stars, the k leftover labels form the last one."""
    if n < 1 or k < 2:
        raise DomainError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    members = _check_code(code, n * k, n - 1, "theta")
    stars, left = _peel(members, n * k, k)
    if len(stars) != n - 1 or len(left) != k:
        raise InternalInvariantBroken(f"theta({sorted(members)}) left {len(left)} labels")
    stars.append(tuple(left))
    return Diagram(n, k, tuple(stars))


def _leg_after(star: tuple[int, ...], label: int) -> int:
    """Leg of ``star`` that closes the cyclic gap containing ``label``."""
    return star[bisect_right(star, label) % len(star)]


def theta_fibers(d: Diagram) -> set[Code]:
    """All (n-1)-subsets F with theta(F) == d.

    One candidate per star R: every other star contributes the leg that ends
    its gap around R.  Each candidate is confirmed by re-decoding.
    """
    fiber = set()
    for dropped in d.stars:
        probe = dropped[0]
        code = tuple(sorted(_leg_after(s, probe) for s in d.stars if s != dropped))
        if theta(code, d.n, d.k) == d:
            fiber.add(code)
    if len(fiber) != d.n:
        raise InternalInvariantBroken(f"fiber of {d.as_lists()} has {len(fiber)} elements, expected {d.n}")
    return fiber


def innermost_stars(d: Diagram) -> list[tuple[int, ...]]:
    """Stars whose labels are cyclically consecutive on the boundary."""
    nk = d.size
    out = []
    for s in d.stars:
        steps = [(s[(i + 1) % d.k] - s[i]) % nk for i in range(d.k)]
        if d.n == 1 or sorted(steps)[:-1] == [1] * (d.k - 1):
            out.append(s)
    return out


def canonical_cut(d: Diagram) -> int:
    """Label just after the cut point used to open the disc.

    The cut sits right after the last label of an innermost star; among the
    innermost stars the one giving the smallest following label is chosen.
    """
    nk = d.size
    if d.n == 1:
        return 1
    cuts = []
    for s in innermost_stars(d):
        steps = [(s[(i + 1) % d.k] - s[i]) % nk for i in range(d.k)]
        last = s[max(range(d.k), key=lambda i: steps[i])]
        cuts.append(last % nk + 1)
    return min(cuts)


def first_legs(d: Diagram, cut: int) -> Code:
    """Per star, the leg read first when labels are read from ``cut`` onwards."""
    nk = d.size
    return tuple(sorted(min(s, key=lambda x: (x - cut) % nk) for s in d.stars))


def canonical_code(d: Diagram) -> Code:
    """Size-n up-set E with psi(E) == d, read from the canonical cut."""
    return first_legs(d, canonical_cut(d))


def _enumerate_stars(n: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    # Each open region is a run of labels that must be partitioned among
    # itself.  The star holding the smallest unplaced label is placed next,
    # its other legs chosen in lex order, so output is in canonical order.
    placed: list[tuple[int, ...]] = []

    def rec(regions):
        if not regions:
            yield tuple(placed)
            return
        idx = min(range(len(regions)), key=lambda i: regions[i][0])
        region = regions[idx]
        others = regions[:idx] + regions[idx + 1:]
        head, rest = region[0], region[1:]
        for legs in combinations(range(len(rest)), k - 1):
            cuts = (-1,) + legs + (len(rest),)
            pieces = [rest[a + 1:b] for a, b in zip(cuts, cuts[1:])]
            if any(len(p) % k for p in pieces):
                continue
            placed.append((head,) + tuple(rest[i] for i in legs))
            yield from rec(others + [p for p in pieces if p])
            placed.pop()

    yield from rec([tuple(range(1, n * k + 1))])


def enumerate_diagrams(n: int, k: int, cap=None) -> Iterator[Diagram]:
    """Every (n, k) diagram once, in ascending canonical order."""
    if n < 1 or k < 2:
        raise DomainError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    check_cap(catalan_nk(n, k), cap)
    for stars in _enumerate_stars(n, k):
        yield Diagram(n, k, stars)


def brute_force_diagrams(n: int, k: int) -> list[Diagram]:
    """All partitions of 1..nk into k-blocks, filtered by the crossing test."""
    nk = n * k

    def parts(rest):
        if not rest:
            yield []
            return
        head, tail = rest[0], rest[1:]
        for others in combinations(tail, k - 1):
            block = (head,) + others
            remaining = [x for x in tail if x not in others]
            for p in parts(remaining):
                yield [block] + p

    out = []
    for p in parts(list(range(1, nk + 1))):
        d = Diagram(n, k, tuple(p))
        if validate_diagram(d).ok:
            out.append(d)
    return sorted(out, key=lambda d: d.stars)


def fiber_census(n: int, k: int) -> dict[Diagram, int]:
    """Image sizes of theta over every (n-1)-subset of 1..nk."""
    counts: dict[Diagram, int] = {}
    for code in combinations(range(1, n * k + 1), n - 1):
        d = theta(code, n, k)
        counts[d] = counts.get(d, 0) + 1
    return counts


def subset_count(n: int, k: int) -> int:
    return binomial(n * k, n - 1)
