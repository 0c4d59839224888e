from __future__ import annotations

import pytest

from actorkit import catalog
from actorkit.errors import IncompatibleAction, RelationViolated
from actorkit.groups import Action, GroupHom, automorphism_group, is_isomorphic
from actorkit.lattice import subgroups
from actorkit.rgraph import (
    CompatibleAction,
    RGSubgraph,
    closed_subgroups,
    count_rg_morphisms,
    discrete,
    find_rg_isomorphism,
    is_compatible,
    make_rg,
    one_object,
    rg_cases,
    rg_centralizer,
    rg_classifier,
    rg_is_faithful,
    rg_is_faithful_bruteforce,
    rg_parts,
    rg_split_extension,
    rg_structures,
    rg_structures_up_to_iso,
    rg_verify_generic,
)

from oracles import commutes_elementwise


def projection_graph():
    """V4 = Z2 x Z2 with s, t the two projections onto the first factor (different kernels)."""
    V4 = catalog.get("V4")
    # elements g*2 + h; s kills the second factor, t sends (g, h) to (g + h, 0)
    s = GroupHom(V4, V4, [0, 0, 2, 2])
    t = GroupHom(V4, V4, [0, 2, 2, 0])
    return make_rg(V4, s, t)


def test_make_rg_rejects_bad_relations():
    Z2 = catalog.get("Z2")
    with pytest.raises(RelationViolated, match="s o t != t"):
        make_rg(Z2, Z2.zero_hom(Z2), Z2.identity_hom())
    with pytest.raises(RelationViolated, match="t o s != s"):
        make_rg(Z2, Z2.identity_hom(), Z2.zero_hom(Z2))


def test_parts():
    R = projection_graph()
    ks, kt, objs = rg_parts(R)
    assert ks.elements == (0, 1)
    assert kt.elements == (0, 3)
    assert objs.elements == (0, 2)
    assert not R.is_discrete()
    assert discrete(catalog.get("S3")).is_discrete()
    ks, kt, objs = rg_parts(one_object(catalog.get("Z3")))
    assert ks.is_whole() and kt.is_whole() and objs.is_trivial()


@pytest.mark.parametrize("name,total,iso", [("Z2", 2, 2), ("Z3", 2, 2), ("V4", 14, 4), ("S3", 5, 3), ("Z4", 2, 2)])
def test_structure_counts(name, total, iso):
    G = catalog.get(name)
    assert len(rg_structures(G)) == total
    assert len(rg_structures_up_to_iso(G)) == iso


def test_isomorphism_of_swapped_graph():
    R = projection_graph()
    swapped = make_rg(R.carrier, R.t, R.s)
    f = find_rg_isomorphism(R, swapped)
    assert f is not None and R.is_morphism(f, swapped)
    assert find_rg_isomorphism(R, discrete(R.carrier)) is None


def test_compatibility_examples():
    Z2, Z3 = catalog.get("Z2"), catalog.get("Z3")
    inv = Action(Z2, Z3, [[0, 1, 2], [0, 2, 1]])
    # any action is compatible between one-object graphs and discrete graphs
    assert is_compatible(inv, one_object(Z3), one_object(Z2))
    assert is_compatible(inv, discrete(Z3), discrete(Z2))
    # discrete base acting on a one-object kernel: s_X phi_b = 0 = phi_b s_X, compatible
    assert is_compatible(inv, one_object(Z3), discrete(Z2))
    # one-object base, discrete kernel: need phi_b = phi_0 on X, fails for inversion
    assert not is_compatible(inv, discrete(Z3), one_object(Z2))
    with pytest.raises(IncompatibleAction):
        CompatibleAction(inv, discrete(Z3), one_object(Z2))


def test_split_extension_structure():
    Z2, Z3 = catalog.get("Z2"), catalog.get("Z3")
    inv = Action(Z2, Z3, [[0, 1, 2], [0, 2, 1]])
    E = rg_split_extension(one_object(Z3), discrete(Z2), inv)
    assert E.A.carrier.order == 6
    assert E.A.objects.order == 2
    assert E.compatible_action.action == inv


def test_classifier_examples():
    Z3 = catalog.get("Z3")
    # s = t = 0: every triple of automorphisms qualifies
    cl = rg_classifier(one_object(Z3))
    assert cl.graph.carrier.order == 8
    # s = t = 1: f = g = h, the base is discrete Aut(G)
    S3 = catalog.get("S3")
    cl = rg_classifier(discrete(S3))
    assert cl.graph.is_discrete()
    assert is_isomorphic(cl.graph.carrier, automorphism_group(S3).group)


def test_classifier_verifies_small():
    cat = catalog.builtin_catalog(4)
    for G in [catalog.get("Z2"), catalog.get("Z3"), catalog.get("V4")]:
        for X in rg_structures_up_to_iso(G):
            cl = rg_classifier(X).extension
            rep = rg_verify_generic(cl, cat)
            assert rep.passed, (X, rep.failures[:3])
            assert rg_is_faithful(cl)


def test_rg_centralizer_is_largest_closed_commuting_subgraph():
    for G in [catalog.get("S3"), catalog.get("V4"), catalog.get("D4")]:
        for R in rg_structures(G):
            closed = closed_subgroups(R)
            for S in closed:
                Z = rg_centralizer(RGSubgraph(R, S)).elements
                cands = [C for C in closed if commutes_elementwise(G, C.elements, S.elements)]
                top = [C for C in cands if all(D <= C for D in cands)]
                assert top == [Z]


def test_closed_subgroups_by_scan():
    R = projection_graph()
    expected = [S for S in subgroups(R.carrier) if all(R.s(x) in S and R.t(x) in S for x in S)]
    assert closed_subgroups(R) == expected


def test_faithfulness_matches_bruteforce():
    cat = catalog.builtin_catalog(4)
    seen = {True: 0, False: 0}
    for G in [catalog.get("Z2"), catalog.get("Z3")]:
        for X in rg_structures_up_to_iso(G):
            for case in rg_cases(X, cat):
                E = rg_split_extension(X, case.base, case.action)
                f = rg_is_faithful(E)
                assert f == rg_is_faithful_bruteforce(E, cat)
                seen[f] += 1
    assert seen[True] and seen[False]


def test_classifier_receives_unique_map_from_itself():
    X = projection_graph()
    cl = rg_classifier(X).extension
    assert count_rg_morphisms(cl, cl, limit=3) == 1
