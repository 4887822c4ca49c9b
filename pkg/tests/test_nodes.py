from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from altrestrict.nodes import (
    Node,
    addable_nodes,
    cogood_node,
    dim_end_restriction,
    e_tilde,
    epsilon,
    f_tilde,
    good_node,
    is_JS,
    normal_nodes,
    phi,
    removable_nodes,
    residue,
    restriction_multiplicity,
    signature,
)
from altrestrict.partitions import Partition, enumerate_p_regular, enumerate_splitting


def cells(lam):
    return {(r, c) for r, row in enumerate(lam, 1) for c in range(1, row + 1)}


def is_shape(cs):
    return all((r == 1 or (r - 1, c) in cs) and (c == 1 or (r, c - 1) in cs) for r, c in cs)


def oracle_signature(lam, i, p):
    """Independent signature: derive removable/addable cells by shape testing."""
    cs = cells(lam)
    h = len(lam)
    candidates = {(r, c) for r in range(1, h + 2) for c in range(1, (lam[0] if lam else 0) + 2)}
    rem = [a for a in cs if is_shape(cs - {a})]
    add = [a for a in candidates - cs if is_shape(cs | {a})]
    entries = [("-", a) for a in rem if (a[1] - a[0]) % p == i]
    entries += [("+", a) for a in add if (a[1] - a[0]) % p == i]
    entries.sort(key=lambda e: e[1][0])
    reduced = list(entries)
    changed = True
    while changed:
        changed = False
        for k in range(len(reduced) - 1):
            if reduced[k][0] == "+" and reduced[k + 1][0] == "-":
                del reduced[k : k + 2]
                changed = True
                break
    return entries, reduced


class TestExamples:
    def test_residue(self):
        assert residue(Node(1, 1), 3) == 0
        assert residue(Node(2, 1), 3) == 2
        assert residue(Node(1, 4), 2) == 1

    def test_removable_addable(self):
        assert removable_nodes(Partition((3, 1))) == [(1, 3), (2, 1)]
        assert addable_nodes(Partition((3, 1))) == [(1, 4), (2, 2), (3, 1)]
        assert removable_nodes(Partition((1,))) == [(1, 1)]
        assert addable_nodes(Partition((1,))) == [(1, 2), (2, 1)]
        assert addable_nodes(Partition(())) == [(1, 1)]

    def test_signatures(self):
        sig = signature(Partition((3, 1)), 0, 2)
        assert sig.entries == [("-", (1, 3)), ("+", (2, 2)), ("+", (3, 1))]
        assert sig.reduced == sig.entries
        sig = signature(Partition((3, 1)), 1, 2)
        assert sig.entries == [("+", (1, 4)), ("-", (2, 1))]
        assert sig.reduced == []
        sig = signature(Partition((2, 1)), 1, 2)
        assert sig.entries == sig.reduced == [("-", (1, 2)), ("-", (2, 1))]

    def test_normal_and_good(self):
        assert good_node(Partition((3, 1)), 0, 2) == (1, 3)
        assert good_node(Partition((2, 1)), 1, 2) == (2, 1)
        assert normal_nodes(Partition((4, 3, 1)), 1, 2) == [(1, 4), (2, 3)]
        assert cogood_node(Partition((2,)), 1, 2) == (2, 1)
        assert good_node(Partition((3, 1)), 1, 2) is None

    def test_epsilon_phi(self):
        assert epsilon(Partition((2, 1)), 1, 2) == 2
        assert epsilon(Partition((3, 1)), 1, 2) == 0
        assert phi(Partition((2,)), 1, 2) == 1

    def test_crystal_operators(self):
        assert e_tilde(Partition((2, 1)), 1, 2) == (2,)
        assert e_tilde(Partition((3, 1)), 0, 2) == (2, 1)
        assert f_tilde(Partition((2,)), 1, 2) == (2, 1)
        assert e_tilde(Partition((3, 1)), 1, 2) is None

    def test_js(self):
        assert is_JS(Partition((3, 1)), 2)
        assert not is_JS(Partition((4, 3, 1)), 2)
        assert is_JS(Partition((4, 1, 1)), 3)

    def test_restriction_multiplicity(self):
        assert restriction_multiplicity(Partition((2, 1)), Node(2, 1), 2) == 2
        assert restriction_multiplicity(Partition((4, 3, 1)), Node(2, 3), 2) == 2
        with pytest.raises(ValueError):
            # (3,3,1) is not 2-regular
            restriction_multiplicity(Partition((4, 3, 1)), Node(1, 4), 2)
        assert restriction_multiplicity(Partition((4, 3, 1)), Node(3, 1), 2) == 0
        with pytest.raises(ValueError):
            restriction_multiplicity(Partition((2, 1)), Node(1, 2), 2)
        with pytest.raises(ValueError):
            restriction_multiplicity(Partition((2, 1)), Node(1, 1), 2)

    def test_dim_end(self):
        assert dim_end_restriction(Partition((3, 1)), 2) == 1
        assert dim_end_restriction(Partition((4, 3, 1)), 2) == 2
        for n in range(1, 12):
            for p in (2, 3, 5):
                assert dim_end_restriction(Partition((n,)), p) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_signature_matches_shape_oracle(p):
    for n in range(0, 13):
        for lam in enumerate_p_regular(n, p):
            for i in range(p):
                sig = signature(lam, i, p)
                entries, reduced = oracle_signature(lam, i, p)
                assert sig.entries == entries
                assert sig.reduced == reduced
                signs = "".join(s for s, _ in sig.reduced)
                assert "+-" not in signs
                assert signs.count("-") == epsilon(lam, i, p)
                assert signs.count("+") == phi(lam, i, p)


def test_js_parity_rule_small():
    for n in range(1, 21):
        for lam in enumerate_p_regular(n, 2):
            assert is_JS(lam, 2) == (len({x % 2 for x in lam}) == 1), lam


@pytest.mark.parametrize("p", [2, 3])
def test_top_removable_node_is_normal(p):
    for n in range(1, 23):
        for lam in enumerate_p_regular(n, p):
            top = Node(1, lam[0])
            if top in removable_nodes(lam):
                assert top in normal_nodes(lam, residue(top, p), p)


def test_theorem_b_forms_agree_small():
    for n in range(1, 23):
        for lam in enumerate_splitting(n, 2):
            normals = [a for i in range(2) for a in normal_nodes(lam, i, 2)]
            residue_form = len(normals) == 2 and all(residue(a, 2) != 0 for a in normals)
            parity_form = (
                len(normals) == 2 and len(lam) >= 2 and lam[0] == lam[1] + 1 and lam[0] % 2 == 0
            )
            assert residue_form == parity_form, lam


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=5).filter(lambda p: p != 4), st.integers(0, 18), st.data())
def test_round_trips(p, n, data):
    lams = enumerate_p_regular(n, p)
    lam = data.draw(st.sampled_from(lams))
    i = data.draw(st.integers(0, p - 1))
    down = e_tilde(lam, i, p)
    if down is not None:
        assert f_tilde(down, i, p) == lam
        assert epsilon(down, i, p) == epsilon(lam, i, p) - 1
        assert phi(down, i, p) == phi(lam, i, p) + 1
    up = f_tilde(lam, i, p)
    if up is not None:
        assert e_tilde(up, i, p) == lam
        assert phi(up, i, p) == phi(lam, i, p) - 1
