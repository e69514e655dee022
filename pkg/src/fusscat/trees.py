"""Full k-ary trees, their word labelling, and the tree <-> diagram bijection.

Trees are stored flat as a preorder bit sequence (1 = internal node, 0 =
leaf).  That keeps them hashable, cheap to compare and free of recursion
limits; :meth:`FullKAryTree.to_nested` gives the nested-list view used for
JSON.
"""
from dataclasses import dataclass
from typing import Iterator, Sequence

from ._config import check_cap
from .counting import catalan_nk
from .diagrams import Diagram, ValidationReport, canonical_cut, validate_diagram
from .errors import DomainError, ValidationError

Word = tuple[int, ...]


@dataclass(frozen=True)
class FullKAryTree:
    k: int
    preorder: tuple[int, ...]

    @property
    def n(self) -> int:
        """Number of internal nodes."""
        return sum(self.preorder)

    @property
    def size(self) -> int:
        return len(self.preorder)

    @classmethod
    def leaf(cls, k: int) -> "FullKAryTree":
        return cls(k, (0,))

    @classmethod
    def star(cls, k: int) -> "FullKAryTree":
        """Root with k leaf children."""
        return cls(k, (1,) + (0,) * k)

    @classmethod
    def from_nested(cls, nested, k=None) -> "FullKAryTree":
        """Build from ``[]`` (leaf) / list of children, validating arity."""
        bits = []
        arity = set()
        stack = [nested]
        while stack:
            node = stack.pop()
            if not isinstance(node, (list, tuple)):
                raise ValidationError(f"tree node must be a list, got {type(node).__name__}")
            if node:
                arity.add(len(node))
                bits.append(1)
                stack.extend(reversed(node))
            else:
                bits.append(0)
        if k is None:
            if len(arity) > 1:
                raise ValidationError(f"internal nodes have mixed arities {sorted(arity)}")
            k = arity.pop() if arity else None
            if k is None:
                raise ValidationError("cannot infer k from a single leaf")
        bad = sorted(a for a in arity if a != k)
        if bad:
            raise ValidationError(f"internal nodes with {bad} children, expected {k}")
        return cls(k, tuple(bits))

    def to_nested(self) -> list:
        root: list = []
        if not self.preorder or self.preorder[0] == 0:
            return root
        # stack of (list, children still to attach)
        stack = [(root, self.k)]
        for bit in self.preorder[1:]:
            node: list = []
            parent, _ = stack[-1]
            parent.append(node)
            stack[-1] = (parent, stack[-1][1] - 1)
            if stack[-1][1] == 0:
                stack.pop()
            if bit:
                stack.append((node, self.k))
        return root

    def children(self) -> list[list[int]]:
        """Child indices (into ``preorder``) for every node."""
        kids: list[list[int]] = [[] for _ in self.preorder]
        stack: list[int] = []
        for i, bit in enumerate(self.preorder):
            if stack:
                parent = stack[-1]
                kids[parent].append(i)
                if len(kids[parent]) == self.k:
                    stack.pop()
            if bit:
                stack.append(i)
        return kids


def validate_tree(t: FullKAryTree, k=None) -> ValidationReport:
    k = t.k if k is None else k
    report = ValidationReport()
    if k < 2:
        report.violations.append(f"arity must be >= 2, got {k}")
        return report
    if k != t.k:
        report.violations.append(f"tree built for arity {t.k}, checked against {k}")
    if any(b not in (0, 1) for b in t.preorder):
        report.violations.append("preorder entries must be 0 or 1")
        return report
    need = 1
    for i, bit in enumerate(t.preorder):
        if need == 0:
            report.violations.append(f"extra nodes after position {i - 1}")
            return report
        need += k - 1 if bit else -1
    if need:
        report.violations.append(f"{need} child slot(s) left empty")
    return report


def validate_nested(nested, k: int) -> ValidationReport:
    """Arity check on a nested-list tree, naming the offending node by its word."""
    report = ValidationReport()
    stack = [((), nested)]
    while stack:
        word, node = stack.pop()
        if node and len(node) != k:
            where = format_word(word, k) or "root"
            report.violations.append(f"node {where} has {len(node)} children, expected {k}")
        for i, child in reversed(list(enumerate(node))):
            stack.append((word + (i,), child))
    return report


def enumerate_trees(n: int, k: int, cap=None) -> Iterator[FullKAryTree]:
    """Full k-ary trees with n internal nodes, in lex order of preorder bits."""
    if n < 0 or k < 2:
        raise DomainError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    if n == 0:
        yield FullKAryTree.leaf(k)
        return
    check_cap(catalan_nk(n, k), cap)
    total = n * k + 1
    bits: list[int] = []

    def rec(need, ones):
        pos = len(bits)
        if pos == total:
            yield FullKAryTree(k, tuple(bits))
            return
        # a leaf may close the last open slot only at the very end
        if need > 1 or pos == total - 1:
            bits.append(0)
            yield from rec(need - 1, ones)
            bits.pop()
        if ones:
            bits.append(1)
            yield from rec(need + k - 1, ones - 1)
            bits.pop()

    yield from rec(1, n)


def format_word(word: Word, k: int) -> str:
    if k <= 26:
        return "".join(chr(ord("a") + i) for i in word)
    return ".".join(str(i) for i in word)


def _words(t: FullKAryTree) -> list[Word]:
    kids = t.children()
    words: list[Word] = [()] * t.size
    for node, cs in enumerate(kids):
        for i, c in enumerate(cs):
            words[c] = words[node] + (i,)
    return words


def word_table(t: FullKAryTree) -> list[tuple[Word, int]]:
    """Non-root words in lexicographic order with positions 1..nk.

    Lexicographic order of the words is preorder, so positions are just
    preorder indices.
    """
    report = validate_tree(t)
    if not report.ok:
        raise ValidationError("invalid tree", report.violations)
    return [(w, i) for i, w in enumerate(_words(t)) if i]


def tree_to_diagram(t: FullKAryTree, k=None, offset: int = 0) -> Diagram:
    """Each internal node's star is the set of its children's labels."""
    k = t.k if k is None else k
    report = validate_tree(t, k)
    if not report.ok:
        raise ValidationError("invalid tree", report.violations)
    n = t.n
    if n < 1:
        raise DomainError("a single leaf has no diagram counterpart")
    nk = n * k

    def label(pos):
        return (pos + offset - 1) % nk + 1

    stars = tuple(tuple(label(c) for c in cs) for cs in t.children() if cs)
    return Diagram(n, k, stars)


def first_child_labels(t: FullKAryTree, offset: int = 0) -> tuple[int, ...]:
    """Labels of words ending in the first letter: one up label per star."""
    nk = t.n * t.k
    return tuple(sorted((cs[0] + offset - 1) % nk + 1 for cs in t.children() if cs))


def diagram_to_tree(d: Diagram, offset=None) -> tuple[FullKAryTree, int]:
    """Cut the disc open just before label ``offset + 1`` and read off the tree.

    With ``offset=None`` the canonical cut is used.  Reading the labels from
    the cut, a label's node is internal exactly when the next label opens a
    new star.
    """
    report = validate_diagram(d)
    if not report.ok:
        raise ValidationError("invalid diagram", report.violations)
    nk = d.size
    cut = canonical_cut(d) if offset is None else offset % nk + 1
    order = [(cut - 1 + t) % nk + 1 for t in range(nk)]
    opener = {min(s, key=lambda x: (x - cut) % nk) for s in d.stars}
    bits = [1] + [1 if i + 1 < nk and order[i + 1] in opener else 0 for i in range(nk)]
    return FullKAryTree(d.k, tuple(bits)), cut - 1


def preorder_by_traversal(nested) -> list[Word]:
    """Explicit depth-first walk listing words; independent check of lex order."""
    out: list[Word] = []

    def walk(node, word):
        out.append(word)
        for i, child in enumerate(node):
            walk(child, word + (i,))

    walk(nested, ())
    return out[1:]


def internal_words(t: FullKAryTree) -> Sequence[Word]:
    words = _words(t)
    return [w for w, bit in zip(words, t.preorder) if bit]
