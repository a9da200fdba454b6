import json

import pytest

from invgraph.arith import is_prime
from invgraph.partitions import Partition, is_even_type
from invgraph.permutations import GroupKind
from invgraph.graph_engine import isolated_vertices
from invgraph.witness_verifier import (
    InadmissibleDegree,
    build_isolated_family,
    construct_witness,
    isolated_family_size_formula,
    table1,
    verify_isolated_family,
    verify_lm,
    verify_sper,
    verify_witness,
)


def test_construct_examples():
    claim = construct_witness("mun", 11)
    assert claim.witness == Partition([3, 2, 2, 2, 2])
    assert claim.targets == (Partition([10, 1]),)
    claim = construct_witness("p", 25)
    assert claim.witness == Partition([9, 6, 6, 1, 1, 1, 1])
    assert claim.targets == (Partition([20, 5]),)
    claim = construct_witness("enne_odd", 11)
    assert claim.witness == Partition([6, 1, 1, 1, 1, 1])
    assert claim.targets == (Partition([11]),)
    claim = construct_witness("jd", 12)
    assert claim.witness == Partition([4, 4, 3, 1])
    assert claim.targets == (Partition([10, 2]),)


def test_construct_sign_requirements():
    # parity is part of each construction: even where an even class is needed
    for n in (11, 13, 21, 29):
        assert is_even_type(construct_witness("mun", n).witness)
    for n in (12, 16, 20):
        assert not is_even_type(construct_witness("mun", n, GroupKind.SYM).witness)
        assert is_even_type(construct_witness("mun", n, GroupKind.ALT).witness)
        assert is_even_type(construct_witness("enne_even", n).witness)
    for n in (16, 18, 22, 26, 36):
        assert not is_even_type(construct_witness("sim", n).witness)


def test_construct_rejects_inadmissible():
    with pytest.raises(InadmissibleDegree):
        construct_witness("enne_even", 18)
    with pytest.raises(InadmissibleDegree):
        construct_witness("p", 23)  # prime
    with pytest.raises(InadmissibleDegree):
        construct_witness("sim", 24)  # 23 is prime
    with pytest.raises(InadmissibleDegree):
        construct_witness("p2", 128)  # m = 7
    with pytest.raises(InadmissibleDegree):
        construct_witness("altodd_w", 33)
    with pytest.raises(InadmissibleDegree):
        construct_witness("jd", 10)


def test_prime_interval_for_general_constructions():
    for n in (55, 65, 77, 91, 115, 119, 121):
        claim = construct_witness("p", n)
        note = next(note for note in claim.notes if note.startswith("q="))
        q = int(note[2:])
        p = int(next(x for x in claim.notes if x.startswith("target")).split("=")[1])
        assert is_prime(q) and q * p > n and q * p < 2 * n


def test_verify_examples(cache_dir):
    report = verify_witness(construct_witness("enne_even", 20), cache_dir)
    assert report.fully_certified
    report = verify_witness(construct_witness("jd", 12), cache_dir)
    assert report.fully_certified
    assert report.claim.witness == Partition([4, 4, 3, 1])


def test_report_json_schema(cache_dir):
    report = verify_witness(construct_witness("mun", 11), cache_dir)
    payload = json.loads(report.to_json())
    for key in ("lemma", "n", "witness", "targets", "nonadjacency", "adjacency",
                "ledger", "elapsed_ms"):
        assert key in payload
    assert payload["adjacency"] == "verified"


def test_altodd_w_extra_target_at_35(cache_dir):
    claim = construct_witness("altodd_w", 35)
    assert Partition([30, 3, 2]) in claim.targets
    report = verify_witness(claim, cache_dir)
    # the witness powers down to a short cycle with many fixed points, so
    # even the three-orbit extra target needs no classification assumption
    assert report.fully_certified


def test_witness_rows_agree_with_exact_graphs(graph, cache_dir):
    # where a lemma applies at a cataloged degree, its certified adjacency set
    # must be exactly the witness's row in the exact graph
    cases = [
        ("mun", 11, GroupKind.SYM), ("mun", 12, GroupKind.SYM),
        ("mun", 12, GroupKind.ALT), ("mun", 13, GroupKind.SYM),
        ("enne_odd", 11, GroupKind.SYM), ("enne_odd", 13, GroupKind.SYM),
        ("enne_even", 12, GroupKind.SYM), ("enne_even", 12, GroupKind.ALT),
        ("jd", 12, GroupKind.ALT),
    ]
    for lemma, n, group in cases:
        claim = construct_witness(lemma, n, group)
        report = verify_witness(claim, cache_dir)
        assert report.acceptable, (lemma, n)
        g = graph(n, group)
        idx = next(
            i for i, v in enumerate(g.vertices) if v.cycle_type == claim.witness
        )
        row_types = {
            g.vertices[j].cycle_type
            for j in range(len(g.vertices))
            if g.adjacency[idx] >> j & 1
        }
        expected = set(claim.targets) | set(report.allowed_extras)
        assert row_types <= expected, (lemma, n, row_types)
        assert set(claim.targets) <= row_types, (lemma, n)


def test_small_nonsum_pairs_verifier():
    ok15, _ = verify_sper(15)
    assert ok15
    ok20, _ = verify_sper(20)
    assert ok20
    # outside the stated range the check simply reports what it finds
    ok14, ce14 = verify_sper(14)
    assert isinstance(ok14, bool)
    # the stated range has one genuine exception: a completing pair at 17
    ok17, ce17 = verify_sper(17)
    assert not ok17
    assert {p.parts for p in ce17} == {(12, 3, 2), (7, 6, 4)}


def test_isolated_family_counts_and_membership(graph):
    for n in range(6, 14):
        for group in (GroupKind.SYM, GroupKind.ALT):
            if n % 2 and group is GroupKind.ALT and is_prime(n):
                continue
            members = build_isolated_family(n, group)
            assert len(members) == isolated_family_size_formula(n, group)
            assert verify_isolated_family(n, group)
            iso = {v.cycle_type for v in isolated_vertices(graph(n, group))}
            assert set(members) <= iso, (n, group)


def test_isolated_family_examples():
    twelve = build_isolated_family(12, GroupKind.SYM)
    assert all(p.multiplicity(1) >= 6 for p in twelve)
    assert len(twelve) == isolated_family_size_formula(12, GroupKind.SYM)
    nine = build_isolated_family(9, GroupKind.ALT)
    assert nine == [Partition([3] + [1] * 6)]
    thirteen = build_isolated_family(13, GroupKind.SYM)
    assert len(thirteen) == 7  # even classes of degree 7


def test_lm_degree_19(cache_dir):
    ok, predicted = verify_lm(19, cache_dir)
    assert ok
    assert predicted == [Partition([3] * 6 + [1])]


def test_lm_rejects_bad_degrees(cache_dir):
    for bad in (9, 11, 13, 23):  # nonprime / excluded / projective cardinality
        with pytest.raises(InadmissibleDegree):
            verify_lm(bad, cache_dir)


def test_table1(cache_dir):
    rows = table1(cache_dir)
    assert rows == [
        (3, 1, 1), (4, 1, 2), (5, 3, 2), (6, "null graph", 2),
        (7, 4, 2), (8, 6, 3), (9, 3, 3), (10, 4, 3),
    ]
