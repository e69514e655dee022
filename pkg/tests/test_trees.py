from itertools import product

import pytest

from fusscat.counting import catalan_nk
from fusscat.diagrams import Diagram, canonical_code, enumerate_diagrams, psi, validate_diagram
from fusscat.errors import DomainError, ValidationError
from fusscat.trees import (
    FullKAryTree,
    diagram_to_tree,
    enumerate_trees,
    first_child_labels,
    format_word,
    internal_words,
    preorder_by_traversal,
    tree_to_diagram,
    validate_nested,
    validate_tree,
    word_table,
)

FIGURE_1 = Diagram.from_blocks([[1, 2, 18], [3, 13, 17], [4, 5, 6], [7, 8, 12], [9, 10, 11], [14, 15, 16]])
LEAF = []
STAR3 = [LEAF] * 3
# root children a, b, c all internal; a's third child ac is internal, and so is acb
FIGURE_3 = [[LEAF, LEAF, [LEAF, STAR3, LEAF]], STAR3, STAR3]
# label order of the cut-open diagram, as listed word by word
FIGURE_3_WORDS = [
    (3, "a"), (4, "aa"), (5, "ab"), (6, "ac"), (7, "aca"), (8, "acb"), (9, "acba"), (10, "acbb"),
    (11, "acbc"), (12, "acc"), (13, "b"), (14, "ba"), (15, "bb"), (16, "bc"), (17, "c"), (18, "ca"),
    (1, "cb"), (2, "cc"),
]


def nested_trees(n, k):
    """Independent recursive oracle: split n-1 internal nodes among k subtrees."""
    if n == 0:
        return [[]]
    out = []

    def splits(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in splits(total - first, parts - 1):
                yield (first,) + rest

    for sizes in splits(n - 1, k):
        for kids in product(*(nested_trees(s, k) for s in sizes)):
            out.append(list(kids))
    return out


def fig3():
    return FullKAryTree.from_nested(FIGURE_3)


class TestValidate:
    def test_leaf(self):
        assert validate_tree(FullKAryTree.leaf(3)).ok
        assert FullKAryTree.leaf(3).n == 0

    def test_star(self):
        t = FullKAryTree.from_nested([[], [], []])
        assert validate_tree(t).ok and t.n == 1

    def test_bad_arity(self):
        report = validate_nested([[], []], 3)
        assert not report.ok and "root" in report.violations[0]
        with pytest.raises(ValidationError):
            FullKAryTree.from_nested([[], []], k=3)
        assert not validate_tree(FullKAryTree(3, (1, 0, 0))).ok

    def test_node_counts(self):
        for t in enumerate_trees(4, 3):
            assert t.size == 4 * 3 + 1
            assert t.preorder.count(0) == 4 * 2 + 1


class TestEnumerate:
    def test_one_internal(self):
        for k in range(2, 6):
            assert list(enumerate_trees(1, k)) == [FullKAryTree.star(k)]

    def test_two_three(self):
        got = [t.to_nested() for t in enumerate_trees(2, 3)]
        assert sorted(map(str, got)) == sorted(map(str, [[STAR3, [], []], [[], STAR3, []], [[], [], STAR3]]))

    def test_binary_four(self):
        assert len(list(enumerate_trees(4, 2))) == 14

    @pytest.mark.parametrize("n,k", [(0, 2), (1, 3), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3), (3, 4)])
    def test_matches_oracle(self, n, k):
        got = list(enumerate_trees(n, k))
        assert len(got) == len(set(got))
        assert {FullKAryTree.from_nested(t, k) for t in nested_trees(n, k)} == set(got)
        assert [t.preorder for t in got] == sorted(t.preorder for t in got)
        if n:
            assert len(got) == catalan_nk(n, k)

    def test_bad_args(self):
        with pytest.raises(DomainError):
            list(enumerate_trees(2, 1))


class TestWords:
    def test_star(self):
        assert [(format_word(w, 3), p) for w, p in word_table(FullKAryTree.star(3))] == [("a", 1), ("b", 2), ("c", 3)]

    def test_figure_3(self):
        table = [(format_word(w, 3), p) for w, p in word_table(fig3())]
        assert table == [(word, (label - 3) % 18 + 1) for label, word in FIGURE_3_WORDS]

    def test_small_binary(self):
        t = FullKAryTree.from_nested([[[], []], []])
        assert [(format_word(w, 2), p) for w, p in word_table(t)] == [("a", 1), ("aa", 2), ("ab", 3), ("b", 4)]

    @pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (3, 3), (4, 3)])
    def test_lex_order_is_preorder(self, n, k):
        for t in enumerate_trees(n, k):
            words = [w for w, _ in word_table(t)]
            assert words == sorted(words) == preorder_by_traversal(t.to_nested())
            assert sum(1 for w in words if w[-1] == 0) == t.n

    def test_wide_words(self):
        assert format_word((0, 27, 3), 30) == "0.27.3"
        assert format_word((0, 2), 3) == "ac"

    def test_internal_words(self):
        assert [format_word(w, 3) for w in internal_words(fig3())] == ["", "a", "ac", "acb", "b", "c"]


class TestBijection:
    def test_figure_3_to_figure_1(self):
        d = tree_to_diagram(fig3(), 3, offset=2)
        assert d == FIGURE_1
        assert (3, 13, 17) in d.stars and (7, 8, 12) in d.stars and (1, 2, 18) in d.stars

    def test_figure_1_to_figure_3(self):
        t, offset = diagram_to_tree(FIGURE_1)
        assert offset == 2
        assert t.to_nested() == FIGURE_3

    def test_star(self):
        assert tree_to_diagram(FullKAryTree.star(4)).stars == ((1, 2, 3, 4),)
        assert diagram_to_tree(Diagram.from_blocks([[1, 2, 3]])) == (FullKAryTree.star(3), 0)

    def test_small_binary(self):
        t = FullKAryTree.from_nested([[[], []], []])
        d = tree_to_diagram(t, 2, 0)
        assert d == Diagram.from_blocks([[1, 4], [2, 3]])
        assert diagram_to_tree(d, offset=0) == (t, 0)
        # the canonical cut follows the innermost star {4, 1}
        t2, off = diagram_to_tree(d)
        assert off == 1 and tree_to_diagram(t2, 2, off) == d

    def test_leaf_has_no_diagram(self):
        with pytest.raises(DomainError):
            tree_to_diagram(FullKAryTree.leaf(2))

    @pytest.mark.parametrize("n,k", [(1, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (4, 3), (3, 4)])
    def test_round_trips(self, n, k):
        for t in enumerate_trees(n, k):
            for offset in range(n * k):
                d = tree_to_diagram(t, k, offset)
                assert validate_diagram(d).ok
                assert diagram_to_tree(d, offset) == (t, offset)
                assert psi(first_child_labels(t, offset), n, k) == d
        for d in enumerate_diagrams(n, k):
            t, offset = diagram_to_tree(d)
            assert tree_to_diagram(t, k, offset) == d
            assert first_child_labels(t, offset) == canonical_code(d)

    def test_nested_round_trip(self):
        for t in enumerate_trees(4, 3):
            assert FullKAryTree.from_nested(t.to_nested()) == t

    def test_deep_tree(self):
        # a left comb with 3000 internal nodes exercises the iterative paths
        bits = (1,) * 3000 + (0,) * 3001
        t = FullKAryTree(2, bits)
        assert validate_tree(t).ok
        d = tree_to_diagram(t)
        assert diagram_to_tree(d, 0) == (t, 0)
