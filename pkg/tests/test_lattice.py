from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actorkit import catalog
from actorkit.groups import Subgroup, direct_product, make_hom
from actorkit.lattice import (
    center,
    centralizer,
    centralizer_of,
    commute,
    cooperate,
    huq_commutator,
    inclusion,
    join,
    meet,
    normal_closure,
    normal_subgroups,
    normalizer,
    preimage,
    subgroups,
)

from oracles import commutes_elementwise, greatest_with, huq_by_quotients, least_containing

# Number of subgroups / normal subgroups of small groups.
SUBGROUP_COUNTS = {
    "Z2": (2, 2), "V4": (5, 5), "S3": (6, 3), "Z6": (4, 4), "D4": (10, 6), "Q8": (6, 6),
    "Z2^3": (16, 16), "A4": (10, 3), "D6": (16, 7), "Dic3": (8, 5), "Z3xZ3": (6, 6),
}


@pytest.fixture
def s3_parts(S3):
    t12, t13, c = S3.index_of((1, 0, 2)), S3.index_of((2, 1, 0)), S3.index_of((1, 2, 0))
    return t12, t13, c


@pytest.mark.parametrize("name", list(SUBGROUP_COUNTS))
def test_subgroup_counts(name):
    G = catalog.get(name)
    assert (len(subgroups(G)), len(normal_subgroups(G))) == SUBGROUP_COUNTS[name]


def test_s3_examples(S3, s3_parts):
    t12, t13, c = s3_parts
    T12 = Subgroup.generated(S3, [t12])
    T13 = Subgroup.generated(S3, [t13])
    A3 = Subgroup.generated(S3, [c])
    assert join(T12, T13).is_whole()
    assert meet(T12, T13).is_trivial()
    assert normal_closure(S3, T12).is_whole()
    assert huq_commutator(T12, T13) == A3
    assert huq_commutator(T12, T12).is_trivial()
    # [S3, S3] = A3 and [A3, S3] = A3
    whole = Subgroup.whole(S3)
    assert huq_commutator(whole, whole) == A3
    assert huq_commutator(A3, whole) == A3
    assert center(S3).is_trivial()
    assert centralizer_of(A3) == A3
    assert normalizer(T12) == T12
    assert normalizer(A3).is_whole()


def test_huq_commutator_matches_quotient_oracle():
    for name in ["S3", "D4", "Q8", "A4", "Dic3"]:
        G = catalog.get(name)
        subs = subgroups(G)
        for A, B in itertools.product(subs, repeat=2):
            assert huq_commutator(A, B) == huq_by_quotients(A, B), (name, A, B)


def test_join_and_normal_closure_oracles():
    for name in ["S3", "D4", "A4", "D5"]:
        G = catalog.get(name)
        subs = subgroups(G)
        for A, B in itertools.combinations(subs, 2):
            assert join(A, B) == least_containing(G, A.members | B.members)
        for A in subs:
            assert normal_closure(G, A) == least_containing(G, A.members, normal=True)


def test_centralizer_and_normalizer_oracles():
    for name in ["S3", "D4", "Q8", "A4"]:
        G = catalog.get(name)
        for A in subgroups(G):
            Z = greatest_with(G, lambda S: commutes_elementwise(G, S.elements, A.elements))
            assert centralizer_of(A) == Z
            N = greatest_with(G, lambda S: A <= S and all(G.conj(g, a) in A for g in S for a in A))
            assert normalizer(A) == N


def test_centralizer_is_terminal_for_cooperation():
    # a subgroup S cooperates with f exactly when S lies in Z(f)
    G = catalog.get("D4")
    for A in subgroups(G):
        f = inclusion(A)
        Z = centralizer(f)
        for S in subgroups(G):
            assert (cooperate(inclusion(S), f) is not None) == (S <= Z)


def test_cooperator_is_product_map():
    G = catalog.get("Z4")
    A = Subgroup.generated(G, [2])
    phi = cooperate(inclusion(A), G.identity_hom())
    assert phi is not None
    assert phi.domain.order == A.order * G.order
    assert cooperate(inclusion(Subgroup.whole(catalog.get("S3"))), catalog.get("S3").identity_hom()) is None


def test_preimage_under_quotient_map():
    Z4, Z2 = catalog.get("Z4"), catalog.get("Z2")
    h = make_hom(Z4, Z2, [0, 1, 0, 1])
    assert preimage(h, Subgroup.trivial(Z2)).elements == (0, 2)
    assert preimage(h, Subgroup.whole(Z2)).is_whole()


def test_commutator_in_direct_product_factors_commute():
    P = direct_product(catalog.get("S3"), catalog.get("Z3"))
    left = Subgroup(P, tuple(g * 3 for g in range(6)))
    right = Subgroup(P, (0, 1, 2))
    assert commute(left, right)
    assert huq_commutator(left, right).is_trivial()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["S3", "D4", "Q8", "A4", "D6", "Dic3", "Z2^3", "D5"]), st.data())
def test_commutator_properties(name, data):
    G = catalog.get(name)
    subs = subgroups(G)
    A = data.draw(st.sampled_from(subs))
    B = data.draw(st.sampled_from(subs))
    C = huq_commutator(A, B)
    assert C == huq_commutator(B, A)
    assert C.is_normal()
    assert C.is_trivial() == commute(A, B)
    assert C <= normal_closure(G, A) and C <= normal_closure(G, B)
    assert huq_commutator(join(A, B), B) >= C
    assert meet(A, B) <= join(A, B)
