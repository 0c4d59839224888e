"""Executable checks of the commutator identities and lemmas the classifier
construction relies on, run over the catalog.

Conditional lemmas return ``None`` when their hypotheses fail; the runner
counts those cases as vacuous instead of passing them silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import NotFaithful, NotNormal, NotNormalInTotal
from .groups import FiniteGroup, Subgroup, automorphism_group, image, quotient
from .groupoid import b_tilde, is_groupoid, restrict_along
from .lattice import huq_commutator, image_of, join, meet, normal_subgroups, preimage, subgroups
from .rgraph import (
    RGSplitExtension,
    rg_cases,
    rg_classifier,
    rg_is_faithful,
    rg_split_extension,
    rg_structures_up_to_iso,
)
from .splitext import SplitExtension, extension_cases, extension_from_action


@dataclass
class LawReport:
    law: str
    cases_checked: int = 0
    applicable: int = 0
    vacuous: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, outcome: bool | None, witness: Callable[[], dict]) -> None:
        self.cases_checked += 1
        if outcome is None:
            self.vacuous += 1
            return
        self.applicable += 1
        if not outcome:
            self.failures.append(witness())

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "passed": self.passed,
            "cases_checked": self.cases_checked,
            "applicable": self.applicable,
            "vacuous": self.vacuous,
            "failures": list(self.failures),
        }


# --- lattice laws -----------------------------------------------------------


def check_jacobi(K: Subgroup, L: Subgroup, M: Subgroup) -> bool:
    """``[K, [L, M]] <= [[K, L], M] v [[M, K], L]`` for normal ``K, L, M``."""
    for S in (K, L, M):
        if not S.is_normal():
            raise NotNormal("Jacobi inclusion needs normal subgroups")
    lhs = huq_commutator(K, huq_commutator(L, M))
    rhs = join(huq_commutator(huq_commutator(K, L), M), huq_commutator(huq_commutator(M, K), L))
    return lhs <= rhs


def check_join_distributivity(A1: Subgroup, A2: Subgroup, B: Subgroup) -> bool:
    """``[A1 v A2, B] == [A1, B] v [A2, B]``."""
    return huq_commutator(join(A1, A2), B) == join(huq_commutator(A1, B), huq_commutator(A2, B))


def check_lift(E: SplitExtension, K: Subgroup) -> bool:
    """The extension restricts to ``kappa(K) v beta(B)`` with kernel exactly ``K``,
    and that restriction is the kernel, over ``B``, of the map to ``A / kappa(K)``.
    """
    A = E.A
    kK = image_of(E.kappa, K)
    if not kK.is_normal():
        raise NotNormalInTotal("kappa(K) is not normal in the total group")
    J = join(kK, image(E.beta))
    if meet(J, image(E.kappa)) != kK:
        return False
    Jg, incl = J.as_group()
    pos = {a: i for i, a in enumerate(J.elements)}
    Kg, kincl = K.as_group()
    from .groups import GroupHom

    kappa = GroupHom(Kg, Jg, [pos[E.kappa(kincl(k))] for k in range(Kg.order)])
    alpha = E.alpha @ incl
    beta = GroupHom(E.B, Jg, [pos[E.beta(b)] for b in range(E.B.order)])
    try:
        SplitExtension(kappa, alpha, beta)
    except ValueError:
        return False
    Q, q = quotient(A, kK)
    return J == preimage(q, image_of(q, image(E.beta)))


# --- reflexive-graph lemmas -------------------------------------------------


def _in_total(E: RGSplitExtension):
    e = E.ext
    return (
        image_of(e.kappa, E.X.source_kernel),
        image_of(e.kappa, E.X.target_kernel),
        image_of(e.beta, E.B.source_kernel),
        image_of(e.beta, E.B.target_kernel),
    )


def _partial_composition(E: RGSplitExtension) -> bool:
    """``[*B, X*] = 0 = [B*, *X]``, computed in ``A``."""
    sX, Xs, sB, Bs = _in_total(E)
    return huq_commutator(sB, Xs).is_trivial() and huq_commutator(Bs, sX).is_trivial()


def check_kernel_commutator_lemma(E: RGSplitExtension) -> bool | None:
    """If ``X`` is a groupoid and ``[*B, X*] = 0 = [B*, *X]``, then ``[X, [A*, *A]] = 0``."""
    if not (is_groupoid(E.X) and _partial_composition(E)):
        return None
    A = E.A
    inner = huq_commutator(A.target_kernel, A.source_kernel)
    return huq_commutator(image(E.ext.kappa), inner).is_trivial()


def check_extension_closed(E: RGSplitExtension) -> bool | None:
    """If ``X`` and ``B`` are groupoids and ``[*B, X*] = 0 = [B*, *X]``, then ``A`` is a groupoid."""
    if not (is_groupoid(E.X) and is_groupoid(E.B) and _partial_composition(E)):
        return None
    return is_groupoid(E.A)


def check_faithful_codomain_groupoid(E: RGSplitExtension) -> bool:
    """For faithful ``E``: ``B`` is a groupoid iff ``[X, [B*, *B]] = 0``."""
    if not rg_is_faithful(E):
        raise NotFaithful("extension is not faithful")
    inner = image_of(E.ext.beta, huq_commutator(E.B.target_kernel, E.B.source_kernel))
    rhs = huq_commutator(image(E.ext.kappa), inner).is_trivial()
    return is_groupoid(E.B) == rhs


# --- suite ------------------------------------------------------------------

LAWS = (
    "jacobi",
    "join_distributivity",
    "lift",
    "kernel_commutator",
    "extension_closed",
    "faithful_codomain",
)


@dataclass(frozen=True)
class SuiteBounds:
    """Orders used to generate cases from a catalog."""

    lattice_max: int = 16
    kernel_max: int = 6
    base_max: int = 8
    graph_kernel_max: int = 6
    graph_base_max: int = 6


def _jacobi(catalog: Sequence[FiniteGroup], bounds: SuiteBounds) -> LawReport:
    rep = LawReport("jacobi")
    for G in catalog:
        if G.order > bounds.lattice_max:
            continue
        normals = normal_subgroups(G)
        for (i, K), (j, L), (k, M) in itertools.product(enumerate(normals), repeat=3):
            rep.record(check_jacobi(K, L, M), lambda: {"group": G.name, "subgroups": [i, j, k]})
    return rep


def _join_distributivity(catalog: Sequence[FiniteGroup], bounds: SuiteBounds) -> LawReport:
    rep = LawReport("join_distributivity")
    for G in catalog:
        if G.order > bounds.lattice_max:
            continue
        subs = subgroups(G)
        comm = lru_cache(maxsize=None)(huq_commutator)
        jn = lru_cache(maxsize=None)(join)
        for i, A1 in enumerate(subs):
            for j in range(i, len(subs)):
                A2 = subs[j]
                J = jn(A1, A2)
                for k, B in enumerate(subs):
                    ok = comm(J, B) == jn(comm(A1, B), comm(A2, B))
                    rep.record(ok, lambda: {"group": G.name, "subgroups": [i, j, k]})
    return rep


def _extensions(catalog: Sequence[FiniteGroup], bounds: SuiteBounds) -> Iterator[tuple[str, str, int, SplitExtension]]:
    kernels = [X for X in catalog if X.order <= bounds.kernel_max]
    bases = [B for B in catalog if B.order <= bounds.base_max]
    for X in kernels:
        auts = automorphism_group(X)
        for bi, ai, phi in extension_cases(X, bases, auts):
            yield X.name, bases[bi].name, ai, extension_from_action(phi)


def _lift(catalog: Sequence[FiniteGroup], bounds: SuiteBounds) -> LawReport:
    rep = LawReport("lift")
    for xname, bname, ai, E in _extensions(catalog, bounds):
        for ki, K in enumerate(subgroups(E.X)):
            if not image_of(E.kappa, K).is_normal():
                rep.record(None, dict)
                continue
            rep.record(check_lift(E, K), lambda: {"kernel": xname, "base": bname, "action_index": ai, "subgroup": ki})
    return rep


def _rg_extensions(catalog: Sequence[FiniteGroup], bounds: SuiteBounds) -> Iterator[tuple[dict, RGSplitExtension]]:
    """Catalog graph extensions, then classifier extensions and their groupoid parts."""
    kernels = [X for X in catalog if X.order <= bounds.graph_kernel_max]
    bases = [B for B in catalog if B.order <= bounds.graph_base_max]
    for G in kernels:
        for xi, X in enumerate(rg_structures_up_to_iso(G)):
            for case in rg_cases(X, bases):
                label = {"kernel": G.name, "kernel_structure": xi, **case.label(bases)}
                yield label, rg_split_extension(X, case.base, case.action)
            cl = rg_classifier(X).extension
            yield {"kernel": G.name, "kernel_structure": xi, "base": "classifier"}, cl
            if is_groupoid(X):
                yield (
                    {"kernel": G.name, "kernel_structure": xi, "base": "classifier~"},
                    restrict_along(cl, b_tilde(cl).elements),
                )


def _rg_law(name: str, check, catalog, bounds, faithful_only: bool = False) -> LawReport:
    rep = LawReport(name)
    for label, E in _rg_extensions(catalog, bounds):
        if faithful_only and not rg_is_faithful(E):
            rep.record(None, dict)
            continue
        rep.record(check(E), lambda: dict(label))
    return rep


def run_law(name: str, catalog: Sequence[FiniteGroup], bounds: SuiteBounds = SuiteBounds()) -> LawReport:
    if name == "jacobi":
        return _jacobi(catalog, bounds)
    if name == "join_distributivity":
        return _join_distributivity(catalog, bounds)
    if name == "lift":
        return _lift(catalog, bounds)
    if name == "kernel_commutator":
        return _rg_law(name, check_kernel_commutator_lemma, catalog, bounds)
    if name == "extension_closed":
        return _rg_law(name, check_extension_closed, catalog, bounds)
    if name == "faithful_codomain":
        return _rg_law(name, check_faithful_codomain_groupoid, catalog, bounds, faithful_only=True)
    raise KeyError(f"unknown law {name!r}; expected one of {', '.join(LAWS)} or 'all'")


def run_laws(
    catalog: Sequence[FiniteGroup], names: Sequence[str] | str = "all", bounds: SuiteBounds = SuiteBounds()
) -> list[LawReport]:
    if names == "all":
        names = LAWS
    elif isinstance(names, str):
        names = [names]
    return [run_law(n, catalog, bounds) for n in names]
