"""Subgroup-lattice operations inside a fixed ambient group."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .groups import FiniteGroup, GroupHom, Subgroup, direct_product
from .errors import NotHomomorphism


@dataclass(frozen=True)
class SubgroupPair:
    parent: FiniteGroup
    left: Subgroup
    right: Subgroup

    def __post_init__(self):
        if self.left.parent != self.parent or self.right.parent != self.parent:
            raise ValueError("both subgroups must live in the same parent")


def _same_parent(A: Subgroup, B: Subgroup) -> FiniteGroup:
    if A.parent is not B.parent and A.parent != B.parent:
        raise ValueError("subgroups have different parents")
    return A.parent


def inclusion(S: Subgroup) -> GroupHom:
    return S.as_group()[1]


def subgroup_generators(S: Subgroup) -> tuple[int, ...]:
    H, incl = S.as_group()
    return tuple(incl(g) for g in H.generators)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    G = _same_parent(A, B)
    if A <= B:
        return B
    if B <= A:
        return A
    return Subgroup.generated(G, subgroup_generators(A) + subgroup_generators(B))


def meet(A: Subgroup, B: Subgroup) -> Subgroup:
    G = _same_parent(A, B)
    return Subgroup(G, tuple(sorted(A.members & B.members)), check=False)


def join_all(G: FiniteGroup, subs: Iterable[Subgroup]) -> Subgroup:
    out = Subgroup.trivial(G)
    for S in subs:
        out = join(out, S)
    return out


def meet_all(G: FiniteGroup, subs: Iterable[Subgroup]) -> Subgroup:
    out = Subgroup.whole(G)
    for S in subs:
        out = meet(out, S)
    return out


def normal_closure(G: FiniteGroup, S: Iterable[int] | Subgroup) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``S``."""
    seeds = set(S.elements if isinstance(S, Subgroup) else S) - {0}
    if not seeds:
        return Subgroup.trivial(G)
    gens = set(seeds)
    while True:
        N = G.closure(gens)
        fresh = {G.conj(g, x) for g in G.generators for x in gens} - N
        if not fresh:
            return Subgroup(G, tuple(N), check=False)
        gens |= fresh


def commutator_set(A: Subgroup, B: Subgroup) -> set[int]:
    """All ``a b a^-1 b^-1`` with ``a`` in ``A`` and ``b`` in ``B``."""
    G = _same_parent(A, B)
    t, inv = G.table, G.inverses
    a = np.array(A.elements)[:, None]
    b = np.array(B.elements)[None, :]
    c = t[t[t[a, b], inv[a]], inv[b]]
    return set(np.unique(c).tolist())


def huq_commutator(A: Subgroup, B: Subgroup) -> Subgroup:
    """``[A, B]``: the normal closure of the elementwise commutators."""
    G = _same_parent(A, B)
    return normal_closure(G, commutator_set(A, B))


def commute(A: Subgroup, B: Subgroup) -> bool:
    return commutator_set(A, B) == {0}


def cooperate(f: GroupHom, g: GroupHom) -> GroupHom | None:
    """The cooperator ``A x C -> G, (a, c) -> f(a) g(c)`` if it is a homomorphism."""
    if f.codomain != g.codomain:
        raise ValueError("cooperator needs a common codomain")
    G = f.codomain
    P = direct_product(f.domain, g.domain)
    nc = g.domain.order
    a = np.arange(P.order) // nc
    c = np.arange(P.order) % nc
    images = G.table[f.images[a], g.images[c]]
    try:
        return GroupHom(P, G, images)
    except NotHomomorphism:
        return None


def centralizer_of_set(G: FiniteGroup, xs: Iterable[int]) -> Subgroup:
    xs = sorted(set(xs) - {0})
    if not xs:
        return Subgroup.whole(G)
    t = G.table
    x = np.array(xs)
    ok = (t[:, x] == t[x, :].T).all(axis=1)
    return Subgroup(G, tuple(np.flatnonzero(ok).tolist()), check=False)


def centralizer(f: GroupHom) -> Subgroup:
    """``Z_B(A, f)``: elements of the codomain commuting with the image of ``f``."""
    H, incl = Subgroup(f.codomain, tuple(sorted(f.image_set)), check=False).as_group()
    return centralizer_of_set(f.codomain, (incl(g) for g in H.generators))


def centralizer_of(S: Subgroup) -> Subgroup:
    return centralizer_of_set(S.parent, subgroup_generators(S))


def center(G: FiniteGroup) -> Subgroup:
    return centralizer_of_set(G, G.generators)


def normalizer(A: Subgroup) -> Subgroup:
    """``N_G(A) = {g : g A g^-1 = A}``."""
    G = A.parent
    gens = subgroup_generators(A)
    if not gens:
        return Subgroup.whole(G)
    t, inv = G.table, G.inverses
    g = np.arange(G.order)[:, None]
    x = np.array(gens)[None, :]
    conj = t[t[g, x], inv[g]]
    ok = np.isin(conj, np.array(A.elements)).all(axis=1)
    return Subgroup(G, tuple(np.flatnonzero(ok).tolist()), check=False)


def preimage(h: GroupHom, S: Subgroup) -> Subgroup:
    """``{a : h(a) in S}``."""
    if S.parent != h.codomain:
        raise ValueError("subgroup does not live in the codomain")
    mask = np.isin(h.images, np.array(S.elements))
    return Subgroup(h.domain, tuple(np.flatnonzero(mask).tolist()))


def image_of(h: GroupHom, S: Subgroup) -> Subgroup:
    """``h(S)`` as a subgroup of the codomain."""
    return Subgroup(h.codomain, tuple(sorted(set(h.images[np.array(S.elements)].tolist()))), check=False)


@lru_cache(maxsize=256)
def subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup of ``G``, sorted by (order, elements).

    Starts from the cyclic subgroups and joins with cyclic subgroups until
    nothing new appears; every subgroup is a join of cyclic ones.
    """
    cyclic = {G.closure([g]) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    rows = G.rows
    while frontier:
        new = set()
        for S in frontier:
            for C in cyclic:
                if C <= S:
                    continue
                J = _join_sets(rows, S, C)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    out = [Subgroup(G, tuple(S), check=False) for S in found]
    out.sort(key=lambda S: (S.order, S.elements))
    return tuple(out)


def _join_sets(rows, S: frozenset[int], C: frozenset[int]) -> frozenset[int]:
    seen = set(S) | set(C)
    gens = list(seen - {0})
    queue = list(seen)
    while queue:
        x = queue.pop()
        row = rows[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@lru_cache(maxsize=256)
def normal_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    return tuple(S for S in subgroups(G) if S.is_normal())
