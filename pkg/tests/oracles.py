"""Brute-force reference computations used only by the tests."""

from __future__ import annotations

from actorkit.groups import FiniteGroup, Subgroup, quotient
from actorkit.lattice import image_of, normal_subgroups, subgroups


def commutes_elementwise(G: FiniteGroup, xs, ys) -> bool:
    return all(G.mul(x, y) == G.mul(y, x) for x in xs for y in ys)


def huq_by_quotients(A: Subgroup, B: Subgroup) -> Subgroup:
    """Least normal ``D`` with the images of ``A`` and ``B`` commuting in ``G / D``."""
    G = A.parent
    good = []
    for D in normal_subgroups(G):
        Q, q = quotient(G, D)
        if commutes_elementwise(Q, image_of(q, A).elements, image_of(q, B).elements):
            good.append(D)
    least = [D for D in good if all(D <= E for E in good)]
    assert len(least) == 1, "no least normal subgroup"
    return least[0]


def least_containing(G: FiniteGroup, xs, normal: bool = False) -> Subgroup:
    xs = set(xs)
    pool = normal_subgroups(G) if normal else subgroups(G)
    cands = [S for S in pool if xs <= S.members]
    least = [S for S in cands if all(S <= T for T in cands)]
    assert len(least) == 1
    return least[0]


def greatest_with(G: FiniteGroup, pred) -> Subgroup:
    cands = [S for S in subgroups(G) if pred(S)]
    top = [S for S in cands if all(T <= S for T in cands)]
    assert len(top) == 1
    return top[0]


def groupoid_sub_bases(E) -> list[Subgroup]:
    """Closed subgroups ``S`` of the base over which ``E`` restricts to an extension of groupoids."""
    from actorkit.groupoid import is_groupoid_on
    from actorkit.lattice import preimage
    from actorkit.rgraph import closed_subgroups

    out = []
    for S in closed_subgroups(E.B):
        if is_groupoid_on(E.B, S) and is_groupoid_on(E.A, preimage(E.ext.alpha, S)):
            out.append(S)
    return out


def groupoid_by_definition(R) -> bool:
    """Every arrow of ``ker s`` commutes with every arrow of ``ker t``."""
    ks, kt = R.source_kernel.elements, R.target_kernel.elements
    return commutes_elementwise(R.carrier, ks, kt)
