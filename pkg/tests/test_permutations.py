import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invgraph.partitions import Partition, has_distinct_odd_parts
from invgraph.permutations import (
    ClassLabel,
    ClosureCapExceeded,
    GroupKind,
    Permutation,
    Split,
    canonical_of_type,
    class_labels,
    closure,
    conjugator,
    format_cycles,
    is_primitive,
    is_transitive,
    parse_cycles,
    split_label,
    symmetric_group_elements,
    symmetric_group_generators,
)


def random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def test_cycle_type_examples():
    assert Permutation.identity(5).cycle_type() == Partition([1] * 5)
    n = 9
    rotation = Permutation((i + 1) % n for i in range(n))
    assert rotation.cycle_type() == Partition([n])
    g = Permutation.from_cycles(7, [(0, 1, 2), (3, 4)])
    assert g.cycle_type() == Partition([3, 2, 1, 1])


def test_composition_convention():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    assert (p * q)(1) == p(q(1))
    assert p * p == Permutation.identity(3)
    assert (p * q).cycle_type() == Partition([3])


def test_parse_and_format_roundtrip():
    for text in ["(1,2,3)(4,5)", "(1,11)", "()"]:
        perm = parse_cycles(text, 11)
        assert parse_cycles(format_cycles(perm), 11) == perm
    with pytest.raises(ValueError):
        parse_cycles("(1,12)", 11)


def test_conjugator_examples():
    x = parse_cycles("(1,2,3)", 3)
    assert conjugator(x, x) is not None
    y = parse_cycles("(1,3,2)", 3)
    s = conjugator(x, y)
    assert s.inverse() * x * s == y
    assert conjugator(x, parse_cycles("(1,2)", 3)) is None


@given(st.integers(3, 10), st.randoms(use_true_random=False))
def test_conjugator_random_pairs(n, rng):
    x = random_perm(rng, n)
    g = random_perm(rng, n)
    y = x.conjugate_by(g)
    s = conjugator(x, y)
    assert s is not None and s.inverse() * x * s == y


def test_closure_symmetric_groups():
    for n in range(2, 8):
        assert len(closure(symmetric_group_generators(n))) == math.factorial(n)


def test_closure_identity_and_cap():
    assert len(closure([Permutation.identity(4)])) == 1
    with pytest.raises(ClosureCapExceeded) as info:
        closure(symmetric_group_generators(8), cap=1000)
    assert info.value.partial_count > 1000


def test_split_label_examples():
    plus = parse_cycles("(1,2,3)", 3)
    minus = parse_cycles("(1,3,2)", 3)
    assert split_label(plus) is Split.PLUS
    assert split_label(minus) is Split.MINUS
    assert split_label(parse_cycles("(1,2)(3,4)", 5)) is Split.NONE
    with pytest.raises(ValueError):
        split_label(parse_cycles("(1,2)", 4))


def _random_split_element(rng, n):
    """A random even permutation whose cycle type has distinct odd parts."""
    candidates = [
        p
        for p in (Partition([n]), Partition([n - 1, 1]), Partition([n - 4, 3, 1]))
        if all(x >= 1 for x in p.parts) and has_distinct_odd_parts(p)
    ]
    base = canonical_of_type(rng.choice(candidates))
    return base.conjugate_by(random_perm(rng, n))


def test_split_label_conjugation_invariance_and_flip():
    rng = random.Random(7)
    for n in (5, 7, 9, 11):
        for _ in range(25):
            h = _random_split_element(rng, n)
            g = random_perm(rng, n)
            conj = h.conjugate_by(g)
            if g.is_even:
                assert split_label(conj) is split_label(h)
            else:
                assert split_label(conj) is not split_label(h)


def test_class_labels_counts():
    assert len(class_labels(6, GroupKind.SYM)) == 10  # p(6) - 1
    a5 = class_labels(5, GroupKind.ALT)
    texts = [l.text() for l in a5]
    assert "5+" in texts and "5-" in texts
    a4 = class_labels(4, GroupKind.ALT)
    assert [l.text() for l in a4] == ["3,1+", "3,1-", "2,2"]


def test_class_label_validation():
    with pytest.raises(ValueError):
        ClassLabel(Partition([1, 1, 1]), GroupKind.SYM)  # identity
    with pytest.raises(ValueError):
        ClassLabel(Partition([2, 1]), GroupKind.ALT)  # odd type
    with pytest.raises(ValueError):
        ClassLabel(Partition([3]), GroupKind.ALT)  # missing split tag
    with pytest.raises(ValueError):
        ClassLabel(Partition([2, 2]), GroupKind.ALT, Split.PLUS)  # spurious split


def test_transitivity_and_primitivity():
    gens = symmetric_group_generators(6)
    assert is_transitive(gens, 6) and is_primitive(gens, 6)
    blocks = [parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]
    assert is_transitive(blocks, 4) and not is_primitive(blocks, 4)


def test_symmetric_group_elements():
    elements = symmetric_group_elements(4)
    assert len(elements) == 24
    assert len({e for e in elements}) == 24
