"""Reflexive graphs in groups: a group ``G`` with endomorphisms ``s, t`` such that
``s t = t`` and ``t s = s``. The objects part is ``G0 = Fix(s) = im(s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, partial
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import IncompatibleAction, RelationViolated
from .groups import (
    Action,
    Automorphisms,
    FiniteGroup,
    GroupHom,
    Subgroup,
    automorphism_group,
    image,
    iter_actions,
    iter_homs,
    iter_isomorphisms,
    kernel,
    semidirect_product,
)
from .lattice import centralizer, centralizer_of, meet_all, preimage
from .parallel import pmap
from .splitext import GenericReport, SplitExtension, SplitExtMorphism, _failure, iter_morphisms


def _fixed(h: GroupHom) -> Subgroup:
    return Subgroup(h.domain, tuple(np.flatnonzero(h.images == np.arange(h.domain.order)).tolist()))


class ReflexiveGraph:
    """``(G, s, t)`` with ``s o t = t`` and ``t o s = s``."""

    def __init__(self, carrier: FiniteGroup, s: GroupHom, t: GroupHom, *, check: bool = True):
        self.carrier = carrier
        self.s = s
        self.t = t
        if check:
            self.validate()

    def validate(self) -> None:
        G = self.carrier
        for name, h in (("s", self.s), ("t", self.t)):
            if h.domain != G or h.codomain != G:
                raise RelationViolated(f"{name} is not an endomorphism of the carrier")
        if self.s @ self.t != self.t:
            raise RelationViolated("s o t != t")
        if self.t @ self.s != self.s:
            raise RelationViolated("t o s != s")
        # consequences of the two relations
        assert self.s @ self.s == self.s and self.t @ self.t == self.t
        objs = image(self.s)
        assert objs == image(self.t) == _fixed(self.s) == _fixed(self.t)

    def __repr__(self) -> str:
        return f"ReflexiveGraph({self.carrier.name or self.carrier.order}, s={self.s.images.tolist()}, t={self.t.images.tolist()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReflexiveGraph):
            return NotImplemented
        return self.carrier == other.carrier and self.s == other.s and self.t == other.t

    def __hash__(self) -> int:
        return hash((self.carrier, self.s, self.t))

    @cached_property
    def source_kernel(self) -> Subgroup:
        """``*G = ker s``."""
        return kernel(self.s)

    @cached_property
    def target_kernel(self) -> Subgroup:
        """``G* = ker t``."""
        return kernel(self.t)

    @cached_property
    def objects(self) -> Subgroup:
        return image(self.s)

    def parts(self) -> tuple[Subgroup, Subgroup, Subgroup]:
        return self.source_kernel, self.target_kernel, self.objects

    def is_discrete(self) -> bool:
        return self.objects.is_whole()

    def is_closed(self, S: Subgroup) -> bool:
        """Whether ``S`` is stable under ``s`` and ``t``."""
        idx = np.array(S.elements)
        keep = np.array(S.elements)
        return bool(np.isin(self.s.images[idx], keep).all() and np.isin(self.t.images[idx], keep).all())

    def is_morphism(self, f: GroupHom, other: ReflexiveGraph) -> bool:
        """Whether ``f`` commutes with the structure maps."""
        return f @ self.s == other.s @ f and f @ self.t == other.t @ f

    def restrict(self, S: Subgroup) -> tuple[ReflexiveGraph, GroupHom]:
        """The sub-reflexive-graph on an ``s, t``-closed subgroup, with its inclusion."""
        H, incl = S.as_group()
        pos = np.full(self.carrier.order, -1, dtype=np.int64)
        pos[incl.images] = np.arange(H.order)
        s = GroupHom(H, H, pos[self.s.images[incl.images]], check=False)
        t = GroupHom(H, H, pos[self.t.images[incl.images]], check=False)
        return ReflexiveGraph(H, s, t), incl


def make_rg(G: FiniteGroup, s: GroupHom, t: GroupHom) -> ReflexiveGraph:
    return ReflexiveGraph(G, s, t)


def discrete(G: FiniteGroup) -> ReflexiveGraph:
    """``s = t = 1``: only identity arrows."""
    i = G.identity_hom()
    return ReflexiveGraph(G, i, i)


def one_object(G: FiniteGroup) -> ReflexiveGraph:
    """``s = t = 0``: a single object."""
    z = G.zero_hom(G)
    return ReflexiveGraph(G, z, z)


def rg_parts(R: ReflexiveGraph) -> tuple[Subgroup, Subgroup, Subgroup]:
    """``(ker s, ker t, Fix s)``."""
    return R.parts()


@dataclass(frozen=True, eq=False)
class RGSubgraph:
    graph: ReflexiveGraph
    elements: Subgroup

    def __post_init__(self):
        if self.elements.parent != self.graph.carrier:
            raise ValueError("subgroup is not in the graph's carrier")
        if not self.graph.is_closed(self.elements):
            raise RelationViolated("subgroup is not closed under s and t")

    def as_graph(self) -> tuple[ReflexiveGraph, GroupHom]:
        return self.graph.restrict(self.elements)


def closed_subgroups(R: ReflexiveGraph) -> list[Subgroup]:
    """All sub-reflexive-graphs of ``R`` (as subgroups)."""
    from .lattice import subgroups

    return [S for S in subgroups(R.carrier) if R.is_closed(S)]


def is_compatible(phi: Action, X: ReflexiveGraph, B: ReflexiveGraph) -> bool:
    """``s_X phi_b = phi_{s_B b} s_X`` and the same for ``t``, for every ``b``."""
    p = phi.perms
    for m_x, m_b in ((X.s.images, B.s.images), (X.t.images, B.t.images)):
        if not np.array_equal(m_x[p], p[m_b][:, m_x]):
            return False
    return True


@dataclass(frozen=True, eq=False)
class CompatibleAction:
    action: Action
    X: ReflexiveGraph
    B: ReflexiveGraph
    check: bool = True

    def __post_init__(self):
        if self.action.actor != self.B.carrier or self.action.target != self.X.carrier:
            raise IncompatibleAction("action does not match the graphs")
        if self.check and not is_compatible(self.action, self.X, self.B):
            raise IncompatibleAction("action does not commute with s and t")


class RGSplitExtension:
    """A split extension whose three objects are reflexive graphs and whose maps are graph maps.

    ``inclusion``, when set, is ``(v, w)``: the total and base maps of the
    sub-extension into the extension it was cut out of.
    """

    inclusion: tuple[GroupHom, GroupHom] | None = None

    def __init__(
        self,
        ext: SplitExtension,
        X: ReflexiveGraph,
        A: ReflexiveGraph,
        B: ReflexiveGraph,
        *,
        check: bool = True,
    ):
        self.ext = ext
        self.X = X
        self.A = A
        self.B = B
        if check:
            self.validate()

    def validate(self) -> None:
        e = self.ext
        if e.X != self.X.carrier or e.A != self.A.carrier or e.B != self.B.carrier:
            raise RelationViolated("graph carriers do not match the extension")
        if not self.X.is_morphism(e.kappa, self.A):
            raise RelationViolated("kappa does not commute with s, t")
        if not self.A.is_morphism(e.alpha, self.B):
            raise RelationViolated("alpha does not commute with s, t")
        if not self.B.is_morphism(e.beta, self.A):
            raise RelationViolated("beta does not commute with s, t")

    def __repr__(self) -> str:
        return f"RGSplitExtension(|X|={self.X.carrier.order}, |A|={self.A.carrier.order}, |B|={self.B.carrier.order})"

    @cached_property
    def compatible_action(self) -> CompatibleAction:
        return CompatibleAction(self.ext.action, self.X, self.B)


def rg_split_extension(X: ReflexiveGraph, B: ReflexiveGraph, phi: CompatibleAction | Action) -> RGSplitExtension:
    """Semidirect product with ``s_A(x, b) = (s_X x, s_B b)`` and likewise for ``t``."""
    if isinstance(phi, Action):
        phi = CompatibleAction(phi, X, B)
    if phi.X != X or phi.B != B:
        raise IncompatibleAction("action was built for different graphs")
    A, ext = semidirect_product(X.carrier, B.carrier, phi.action)
    nx = X.carrier.order
    xs, bs = np.arange(A.order) % nx, np.arange(A.order) // nx
    s = GroupHom(A, A, B.s.images[bs] * nx + X.s.images[xs], check=False)
    t = GroupHom(A, A, B.t.images[bs] * nx + X.t.images[xs], check=False)
    return RGSplitExtension(ext, X, ReflexiveGraph(A, s, t), B)


def idempotent_endomorphisms(G: FiniteGroup) -> list[GroupHom]:
    return [e for e in iter_homs(G, G) if e @ e == e]


def rg_structures(G: FiniteGroup) -> list[ReflexiveGraph]:
    """Every reflexive-graph structure on ``G``, in a fixed order."""
    idem = idempotent_endomorphisms(G)
    out = []
    for s in idem:
        for t in idem:
            if s @ t == t and t @ s == s:
                out.append(ReflexiveGraph(G, s, t, check=False))
    return out


def _structure_filter(R: ReflexiveGraph, S: ReflexiveGraph):
    # iso candidates must respect membership in ker s, ker t and G0
    def sig(Q: ReflexiveGraph, x: int):
        return (x in Q.source_kernel, x in Q.target_kernel, x in Q.objects)

    return lambda g, h: sig(R, g) == sig(S, h)


def iter_rg_isomorphisms(R: ReflexiveGraph, S: ReflexiveGraph) -> Iterator[GroupHom]:
    if R.carrier.order != S.carrier.order:
        return
    for f in iter_isomorphisms(R.carrier, S.carrier, _structure_filter(R, S)):
        if R.is_morphism(f, S):
            yield f


def find_rg_isomorphism(R: ReflexiveGraph, S: ReflexiveGraph) -> GroupHom | None:
    return next(iter_rg_isomorphisms(R, S), None)


def rg_structures_up_to_iso(G: FiniteGroup) -> list[ReflexiveGraph]:
    reps: list[ReflexiveGraph] = []
    for R in rg_structures(G):
        if not any(find_rg_isomorphism(R, Q) is not None for Q in reps):
            reps.append(R)
    return reps


class RGClassifier(NamedTuple):
    graph: ReflexiveGraph
    action: CompatibleAction
    extension: RGSplitExtension


def rg_classifier(X: ReflexiveGraph, auts: Automorphisms | None = None) -> RGClassifier:
    """Split extension classifier of ``X`` among reflexive graphs.

    The base ``[X]`` consists of the triples ``(f, g, h)`` of automorphisms with
    ``s f = g s``, ``t f = h t`` and ``g, h`` commuting with ``s`` and ``t``,
    multiplied componentwise. ``S(f, g, h) = (g, g, g)``,
    ``T(f, g, h) = (h, h, h)``, and ``(f, g, h)`` acts on ``X`` as ``f``.
    """
    if auts is None:
        auts = automorphism_group(X.carrier)
    M = auts.maps
    na = M.shape[0]
    s, t = X.s.images, X.t.images
    commuting = [g for g in range(na) if np.array_equal(M[g][s], s[M[g]]) and np.array_equal(M[g][t], t[M[g]])]
    by_s: dict[bytes, list[int]] = {}
    by_t: dict[bytes, list[int]] = {}
    for g in commuting:
        by_s.setdefault(M[g][s].tobytes(), []).append(g)
        by_t.setdefault(M[g][t].tobytes(), []).append(g)
    triples = []
    for f in range(na):
        gs = by_s.get(s[M[f]].tobytes(), [])
        hs = by_t.get(t[M[f]].tobytes(), [])
        triples.extend((f, g, h) for g in gs for h in hs)
    triples.sort()
    F, Gc, H = (np.array(c, dtype=np.int64) for c in zip(*triples))
    codes = (F * na + Gc) * na + H  # sorted, since triples are
    at = auts.group.table

    def lookup(f, g, h):
        c = (f * na + g) * na + h
        idx = np.searchsorted(codes, c)
        assert np.array_equal(codes[idx], c), "triples not closed"
        return idx

    table = lookup(at[F[:, None], F[None, :]], at[Gc[:, None], Gc[None, :]], at[H[:, None], H[None, :]])
    name = f"[{X.carrier.name}]" if X.carrier.name else None
    base = FiniteGroup(table, name, labels=triples)
    S = GroupHom(base, base, lookup(Gc, Gc, Gc))
    T = GroupHom(base, base, lookup(H, H, H))
    graph = ReflexiveGraph(base, S, T)
    action = CompatibleAction(Action(base, X.carrier, M[F], check=False), X, graph)
    return RGClassifier(graph, action, rg_split_extension(X, graph, action))


def rg_centralizer(S: RGSubgraph) -> RGSubgraph:
    """``Z ^ s^-1(Z) ^ t^-1(Z)`` where ``Z`` centralizes the underlying subgroup."""
    R = S.graph
    Z = centralizer_of(S.elements)
    return RGSubgraph(R, meet_all(R.carrier, [Z, preimage(R.s, Z), preimage(R.t, Z)]))


def rg_is_faithful(E: RGSplitExtension) -> bool:
    A = E.A
    Z = centralizer(E.ext.kappa)
    return meet_all(A.carrier, [Z, preimage(A.s, Z), preimage(A.t, Z), image(E.ext.beta)]).is_trivial()


def is_rg_morphism_of_extensions(m: SplitExtMorphism, E: RGSplitExtension, F: RGSplitExtension) -> bool:
    return E.B.is_morphism(m.w, F.B) and E.A.is_morphism(m.v, F.A)


def iter_rg_morphisms(E: RGSplitExtension, F: RGSplitExtension) -> Iterator[SplitExtMorphism]:
    """Kernel-fixing morphisms ``E -> F`` whose maps commute with ``s`` and ``t``."""
    if E.X != F.X:
        from .errors import KernelMismatch

        raise KernelMismatch("extensions have different kernel graphs")
    for m in iter_morphisms(E.ext, F.ext):
        if is_rg_morphism_of_extensions(m, E, F):
            yield m


def count_rg_morphisms(E: RGSplitExtension, F: RGSplitExtension, limit: int | None = None) -> int:
    n = 0
    for _ in iter_rg_morphisms(E, F):
        n += 1
        if limit is not None and n >= limit:
            break
    return n


class RGCase(NamedTuple):
    base_index: int
    structure_index: int
    action_index: int
    base: ReflexiveGraph
    action: CompatibleAction

    def label(self, catalog: Sequence[FiniteGroup]) -> dict:
        return {
            "base": catalog[self.base_index].name or str(self.base_index),
            "structure_index": self.structure_index,
            "action_index": self.action_index,
        }


def rg_cases(X: ReflexiveGraph, catalog: Sequence[FiniteGroup], auts: Automorphisms | None = None) -> Iterator[RGCase]:
    """Every graph structure on every catalog group with every compatible action on ``X``."""
    if auts is None:
        auts = automorphism_group(X.carrier)
    for bi, G in enumerate(catalog):
        structures = rg_structures(G)
        actions = list(iter_actions(G, X.carrier, auts))
        for si, B in enumerate(structures):
            ai = 0
            for phi in actions:
                if is_compatible(phi, X, B):
                    yield RGCase(bi, si, ai, B, CompatibleAction(phi, X, B, check=False))
                    ai += 1


def _count_rg_into(candidate: RGSplitExtension, case: RGCase) -> int:
    E = rg_split_extension(case.action.X, case.base, case.action)
    return count_rg_morphisms(E, candidate, limit=2)


def verify_cases(
    candidate: RGSplitExtension, cases: list[RGCase], catalog: Sequence[FiniteGroup], jobs: int | None = None
) -> GenericReport:
    counts = pmap(partial(_count_rg_into, candidate), cases, jobs)
    X = candidate.X.carrier
    report = GenericReport(X.name or f"order {X.order}", candidate.A.carrier.order)
    for case, n in zip(cases, counts):
        report.cases_checked += 1
        kind = _failure(n)
        if kind:
            report.failures.append({**case.label(catalog), "kind": kind, "morphisms": n})
    return report


def rg_verify_generic(
    candidate: RGSplitExtension, catalog: Sequence[FiniteGroup], *, jobs: int | None = None
) -> GenericReport:
    """Exactly one graph morphism (identity on ``X``) into ``candidate`` from every catalog case."""
    return verify_cases(candidate, list(rg_cases(candidate.X, catalog)), catalog, jobs)


def rg_is_faithful_bruteforce(E: RGSplitExtension, catalog: Sequence[FiniteGroup]) -> bool:
    for case in rg_cases(E.X, catalog):
        F = rg_split_extension(E.X, case.base, case.action)
        if count_rg_morphisms(F, E, limit=2) > 1:
            return False
    return True
