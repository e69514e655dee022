"""Exhaustive consistency checks for one (n, k) grid point."""
from dataclasses import dataclass
from typing import Optional

from .counting import catalan_nk
from .diagrams import canonical_code, enumerate_diagrams, fiber_census, psi, subset_count, theta_fibers, validate_diagram
from .dissections import dissection_to_tree, enumerate_dissections, tree_to_dissection, validate_dissection
from .trees import diagram_to_tree, enumerate_trees, tree_to_diagram


@dataclass
class Check:
    name: str
    ok: Optional[bool]  # None means skipped
    detail: str = ""

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.ok]

    def line(self) -> str:
        return f"{self.status} {self.name}: {self.detail}"


def verify(n: int, k: int, max_subsets: int = 10**6, cap=None) -> list[Check]:
    expected = catalan_nk(n, k)
    checks = [Check("formula", True, f"C({n},{k}) = {expected}")]

    diagrams = list(enumerate_diagrams(n, k, cap))
    trees = list(enumerate_trees(n, k, cap))
    sides = n * (k - 1) + 2
    dissections = list(enumerate_dissections(sides, k, cap))
    counts = (len(diagrams), len(trees), len(dissections))
    checks.append(Check(
        "counts",
        counts == (expected,) * 3,
        f"{counts[0]} diagrams = {counts[1]} trees = {counts[2]} dissections, formula {expected}",
    ))
    checks.append(Check(
        "valid objects",
        all(validate_diagram(d).ok for d in diagrams) and all(validate_dissection(p).ok for p in dissections),
        "every enumerated diagram and dissection validates",
    ))
    checks.append(Check(
        "distinct",
        len(set(diagrams)) == len(diagrams) and len(set(trees)) == len(trees) and len(set(dissections)) == len(dissections),
        "no object enumerated twice",
    ))

    n_subsets = subset_count(n, k)
    if n_subsets <= max_subsets:
        census = fiber_census(n, k)
        sizes = set(census.values())
        checks.append(Check(
            "fiber law",
            len(census) == expected and sizes == {n},
            f"{n_subsets} subsets -> {len(census)} diagrams, fiber sizes {sorted(sizes)}",
        ))
    else:
        checks.append(Check("fiber law", None, f"{n_subsets} subsets exceeds --max-subsets {max_subsets}"))
    checks.append(Check(
        "fibers per diagram",
        all(len(theta_fibers(d)) == n for d in diagrams),
        f"theta is {n}-to-1 on every diagram",
    ))
    checks.append(Check(
        "psi(canonical code)",
        all(psi(canonical_code(d), n, k) == d for d in diagrams),
        "canonical code peels back to its diagram",
    ))
    checks.append(Check(
        "diagram -> tree -> diagram",
        all(tree_to_diagram(t, k, off) == d for d, (t, off) in zip(diagrams, map(diagram_to_tree, diagrams))),
        "identity on all diagrams",
    ))
    checks.append(Check(
        "tree -> diagram -> tree",
        all(diagram_to_tree(tree_to_diagram(t, k, off), off) == (t, off) for t in trees for off in range(n * k)),
        f"identity on all trees at all {n * k} cuts",
    ))
    checks.append(Check(
        "tree <-> dissection",
        all(dissection_to_tree(tree_to_dissection(t, k), k) == t for t in trees)
        and all(tree_to_dissection(dissection_to_tree(p, k), k) == p for p in dissections),
        "identity both ways",
    ))
    return checks
