"""Internal groupoids in groups (cat^1-groups), their split extension
classifiers, and the translation to crossed modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import KernelNotGroupoid, NotCrossedModule, NotFaithful, NotGroupoid
from .groups import (
    Action,
    Automorphisms,
    FiniteGroup,
    GroupHom,
    Subgroup,
    iter_isomorphisms,
    semidirect_product,
)
from .lattice import centralizer, commute, huq_commutator, image_of, join, meet, preimage
from .rgraph import (
    RGCase,
    RGSplitExtension,
    RGSubgraph,
    ReflexiveGraph,
    rg_cases,
    rg_classifier,
    rg_is_faithful,
    rg_split_extension,
    verify_cases,
)
from .splitext import GenericReport, SplitExtension


def is_groupoid(R: ReflexiveGraph) -> bool:
    """``[ker s, ker t]`` is trivial."""
    return huq_commutator(R.source_kernel, R.target_kernel).is_trivial()


def is_groupoid_on(R: ReflexiveGraph, S: Subgroup) -> bool:
    """Groupoid test for the sub-graph of ``R`` on the ``s, t``-closed subgroup ``S``.

    Its kernels are ``S ^ ker s`` and ``S ^ ker t``; a commutator is trivial
    exactly when the two commute elementwise, wherever it is computed.
    """
    return commute(meet(S, R.source_kernel), meet(S, R.target_kernel))


class InternalGroupoid(ReflexiveGraph):
    """A reflexive graph whose source and target kernels commute."""

    def validate(self) -> None:
        super().validate()
        if not is_groupoid(self):
            raise NotGroupoid("[ker s, ker t] is not trivial")

    @classmethod
    def of(cls, R: ReflexiveGraph) -> InternalGroupoid:
        return cls(R.carrier, R.s, R.t)


class GroupoidSplitExtension(RGSplitExtension):
    """An RG split extension with ``X``, ``A`` and ``B`` all groupoids."""

    def validate(self) -> None:
        super().validate()
        for name, R in (("kernel", self.X), ("total", self.A), ("base", self.B)):
            if not is_groupoid(R):
                raise NotGroupoid(f"{name} is not a groupoid")


def b_tilde(E: RGSplitExtension) -> RGSubgraph:
    """Largest sub-graph ``B~`` of the base with ``[*B~, X*] = 0 = [B~*, *X]``.

    Computed inside ``A`` as
    ``((Z(*X) ^ B*) v B0) ^ ((Z(X*) ^ *B) v B0)`` and pulled back along ``beta``.
    """
    e = E.ext
    kappa, beta = e.kappa, e.beta
    Z1 = centralizer(kappa.restrict(E.X.source_kernel))
    Z2 = centralizer(kappa.restrict(E.X.target_kernel))
    B_star = image_of(beta, E.B.target_kernel)
    star_B = image_of(beta, E.B.source_kernel)
    B0 = image_of(beta, E.B.objects)
    inside = meet(join(meet(Z1, B_star), B0), join(meet(Z2, star_B), B0))
    return RGSubgraph(E.B, preimage(beta, inside))


def restrict_along(E: RGSplitExtension, sub: Subgroup, cls=RGSplitExtension) -> RGSplitExtension:
    """Pull ``E`` back along the inclusion of the closed subgroup ``sub`` of its base.

    The new total is ``alpha^-1(sub)`` inside ``A``; both new groups are the
    subgroups re-indexed in sorted order.
    """
    e = E.ext
    B_sub, wB = E.B.restrict(sub)
    A_sub, vA = E.A.restrict(preimage(e.alpha, sub))
    posA = np.full(E.A.carrier.order, -1, dtype=np.int64)
    posA[vA.images] = np.arange(A_sub.carrier.order)
    posB = np.full(E.B.carrier.order, -1, dtype=np.int64)
    posB[wB.images] = np.arange(B_sub.carrier.order)
    kappa = GroupHom(e.X, A_sub.carrier, posA[e.kappa.images], check=False)
    alpha = GroupHom(A_sub.carrier, B_sub.carrier, posB[e.alpha.images[vA.images]], check=False)
    beta = GroupHom(B_sub.carrier, A_sub.carrier, posA[e.beta.images[wB.images]], check=False)
    out = cls(SplitExtension(kappa, alpha, beta), E.X, A_sub, B_sub)
    out.inclusion = (vA, wB)
    return out


def largest_groupoid_subextension(E: RGSplitExtension) -> GroupoidSplitExtension:
    """The largest sub-split-extension of groupoids with kernel ``X``.

    Requires ``E`` faithful and ``X`` a groupoid. The result is ``E`` pulled
    back along ``B~ -> B``; its three groupoid conditions are validated.
    """
    if not is_groupoid(E.X):
        raise KernelNotGroupoid("kernel graph is not a groupoid")
    if not rg_is_faithful(E):
        raise NotFaithful("extension is not faithful")
    Bt = b_tilde(E)
    return restrict_along(E, Bt.elements, GroupoidSplitExtension)


def groupoid_classifier(X: ReflexiveGraph, auts: Automorphisms | None = None) -> GroupoidSplitExtension:
    """Generic split extension of groupoids with kernel ``X``."""
    if not is_groupoid(X):
        raise KernelNotGroupoid("kernel graph is not a groupoid")
    return largest_groupoid_subextension(rg_classifier(X, auts).extension)


def groupoid_cases(X: ReflexiveGraph, catalog: Sequence[FiniteGroup]) -> Iterator[RGCase]:
    """The graph oracle's cases where both the base and the total are groupoids."""
    for case in rg_cases(X, catalog):
        if not is_groupoid(case.base):
            continue
        E = rg_split_extension(X, case.base, case.action)
        if is_groupoid(E.A):
            yield case


def grpd_verify_generic(
    candidate: RGSplitExtension, catalog: Sequence[FiniteGroup], *, jobs: int | None = None
) -> GenericReport:
    return verify_cases(candidate, list(groupoid_cases(candidate.X, catalog)), catalog, jobs)


@dataclass(frozen=True, eq=False)
class CrossedModule:
    """``d: T -> G`` with ``G`` acting on ``T`` such that
    ``d(g.x) = g d(x) g^-1`` and ``d(x).y = x y x^-1``.
    """

    T: FiniteGroup
    G: FiniteGroup
    d: GroupHom
    act: Action
    check: bool = True

    def __post_init__(self):
        if self.d.domain != self.T or self.d.codomain != self.G:
            raise NotCrossedModule("boundary map has the wrong type")
        if self.act.actor != self.G or self.act.target != self.T:
            raise NotCrossedModule("action has the wrong type")
        if not self.check:
            return
        G, T, p, d = self.G, self.T, self.act.perms, self.d.images
        g = np.arange(G.order)[:, None]
        x = np.arange(T.order)[None, :]
        if not np.array_equal(d[p], G.table[G.table[g, d[x]], G.inverses[g]]):
            raise NotCrossedModule("equivariance d(g.x) = g d(x) g^-1 fails")
        y = np.arange(T.order)[None, :]
        xc = np.arange(T.order)[:, None]
        if not np.array_equal(p[d][:, :], T.table[T.table[xc, y], T.inverses[xc]]):
            raise NotCrossedModule("Peiffer identity d(x).y = x y x^-1 fails")

    def __repr__(self) -> str:
        return f"CrossedModule({self.T.name or self.T.order} -> {self.G.name or self.G.order})"


def xmod_to_cat1(M: CrossedModule) -> InternalGroupoid:
    """``T x| G`` with ``s(x, g) = (0, g)`` and ``t(x, g) = (0, d(x) g)``."""
    A, _ = semidirect_product(M.T, M.G, M.act)
    nt = M.T.order
    xs, gs = np.arange(A.order) % nt, np.arange(A.order) // nt
    s = GroupHom(A, A, gs * nt)
    t = GroupHom(A, A, M.G.table[M.d.images[xs], gs] * nt)
    return InternalGroupoid(A, s, t)


def cat1_to_xmod(X: ReflexiveGraph) -> CrossedModule:
    """``d = t`` restricted to ``ker s``, landing in ``im s``; ``im s`` acts by conjugation."""
    if not is_groupoid(X):
        raise NotGroupoid("[ker s, ker t] is not trivial")
    C = X.carrier
    T, iT = X.source_kernel.as_group()
    G, iG = X.objects.as_group()
    posG = np.full(C.order, -1, dtype=np.int64)
    posG[iG.images] = np.arange(G.order)
    posT = np.full(C.order, -1, dtype=np.int64)
    posT[iT.images] = np.arange(T.order)
    d = GroupHom(T, G, posG[X.t.images[iT.images]])
    g = iG.images[:, None]
    x = iT.images[None, :]
    perms = posT[C.table[C.table[g, x], C.inverses[g]]]
    return CrossedModule(T, G, d, Action(G, T, perms))


def iter_xmod_isomorphisms(M: CrossedModule, N: CrossedModule) -> Iterator[tuple[GroupHom, GroupHom]]:
    """Pairs ``(a: T -> T', b: G -> G')`` of isomorphisms commuting with ``d`` and the actions."""
    if M.T.order != N.T.order or M.G.order != N.G.order:
        return
    for b in iter_isomorphisms(M.G, N.G):
        bd = b.images[M.d.images]

        def allowed(x, y, bd=bd):
            return N.d(y) == bd[x]

        for a in iter_isomorphisms(M.T, N.T, allowed):
            if not np.array_equal(N.d.images[a.images], bd):
                continue
            # a(g.x) == b(g).a(x)
            if np.array_equal(a.images[M.act.perms], N.act.perms[b.images][:, a.images]):
                yield a, b


def find_xmod_isomorphism(M: CrossedModule, N: CrossedModule):
    return next(iter_xmod_isomorphisms(M, N), None)
