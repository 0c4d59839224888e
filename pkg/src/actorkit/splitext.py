"""Split extensions of groups, their morphisms, and the generic one ``Aut(X) x| X``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, partial
from typing import Iterable, Sequence

import numpy as np

from .errors import KernelMismatch, SectionNotSplit
from .groups import (
    Action,
    Automorphisms,
    FiniteGroup,
    GroupHom,
    automorphism_group,
    evaluation_action,
    image,
    iter_actions,
    iter_homs,
    kernel,
    semidirect_product,
)
from .lattice import centralizer, join, meet
from .parallel import pmap


class SplitExtension:
    """``X --kappa--> A <--beta-- B`` with ``alpha: A -> B``, ``alpha beta = 1``, ``kappa = ker alpha``."""

    def __init__(self, kappa: GroupHom, alpha: GroupHom, beta: GroupHom, *, check: bool = True):
        if kappa.codomain != alpha.domain or beta.codomain != alpha.domain or beta.domain != alpha.codomain:
            raise KernelMismatch("maps do not form a split-extension diagram")
        self.kappa = kappa
        self.alpha = alpha
        self.beta = beta
        if check:
            self.validate()

    def validate(self) -> None:
        if not np.array_equal(self.alpha.images[self.beta.images], np.arange(self.B.order)):
            raise SectionNotSplit("alpha o beta is not the identity")
        if not self.kappa.is_injective():
            raise KernelMismatch("kappa is not injective")
        if image(self.kappa) != kernel(self.alpha):
            raise KernelMismatch("image of kappa differs from the kernel of alpha")
        if not join(image(self.kappa), image(self.beta)).is_whole():
            raise KernelMismatch("kernel and section do not generate the total group")

    @property
    def X(self) -> FiniteGroup:
        return self.kappa.domain

    @property
    def A(self) -> FiniteGroup:
        return self.alpha.domain

    @property
    def B(self) -> FiniteGroup:
        return self.alpha.codomain

    def __repr__(self) -> str:
        return f"SplitExtension(|X|={self.X.order}, |A|={self.A.order}, |B|={self.B.order})"

    @cached_property
    def kappa_inverse(self) -> np.ndarray:
        inv = np.full(self.A.order, -1, dtype=np.int64)
        inv[self.kappa.images] = np.arange(self.X.order)
        return inv

    @cached_property
    def decomposition(self) -> tuple[np.ndarray, np.ndarray]:
        """``(xs, bs)`` with ``a == kappa(xs[a]) * beta(bs[a])`` for every ``a``."""
        A = self.A
        bs = self.alpha.images
        k = A.table[np.arange(A.order), A.inverses[self.beta.images[bs]]]
        xs = self.kappa_inverse[k]
        assert (xs >= 0).all()
        return xs, bs

    @cached_property
    def action(self) -> Action:
        """``phi_b = kappa^-1 (conjugation by beta(b)) kappa``."""
        A = self.A
        kb = self.beta.images[:, None]
        kx = self.kappa.images[None, :]
        conj = A.table[A.table[kb, kx], A.inverses[kb]]
        return Action(self.B, self.X, self.kappa_inverse[conj], check=False)


def make_split_extension(kappa: GroupHom, alpha: GroupHom, beta: GroupHom) -> SplitExtension:
    return SplitExtension(kappa, alpha, beta)


def action_from_split_extension(E: SplitExtension) -> Action:
    return E.action


def extension_from_action(phi: Action) -> SplitExtension:
    return semidirect_product(phi.target, phi.actor, phi)[1]


@dataclass(frozen=True, eq=False)
class SplitExtMorphism:
    source: SplitExtension
    target: SplitExtension
    u: GroupHom
    v: GroupHom
    w: GroupHom
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if not self.check:
            return
        s, t = self.source, self.target
        if self.v @ s.kappa != t.kappa @ self.u:
            raise KernelMismatch("v kappa != kappa' u")
        if self.v @ s.beta != t.beta @ self.w:
            raise SectionNotSplit("v beta != beta' w")
        if self.w @ s.alpha != t.alpha @ self.v:
            raise SectionNotSplit("w alpha != alpha' v")


def _action_match(E: SplitExtension, F: SplitExtension):
    """``allowed(g, h)``: whether ``g`` and ``h`` act identically on the shared kernel."""
    by_key: dict[bytes, set[int]] = {}
    for h, row in enumerate(F.action.perms):
        by_key.setdefault(row.tobytes(), set()).add(h)
    keys = [row.tobytes() for row in E.action.perms]
    empty: set[int] = set()
    return lambda g, h: h in by_key.get(keys[g], empty)


def iter_morphisms(E: SplitExtension, F: SplitExtension, *, bases_only: Iterable[GroupHom] | None = None):
    """Morphisms ``E -> F`` that are the identity on the kernel.

    Only ``w: B -> B'`` is searched. ``v`` is forced on
    ``A = kappa(X) beta(B)`` by ``v(kappa(x) beta(b)) = kappa'(x) beta'(w(b))``
    and each candidate ``v`` is checked to be a homomorphism. Generator images
    of ``w`` are pruned to those acting on ``X`` the same way, which every
    valid morphism satisfies.
    """
    if E.X != F.X:
        raise KernelMismatch("extensions have different kernels")
    xs, bs = E.decomposition
    At, Ft = E.A.table, F.A.table
    kx = F.kappa.images[xs]
    u = E.X.identity_hom()
    ws = bases_only if bases_only is not None else iter_homs(E.B, F.B, _action_match(E, F))
    for w in ws:
        v = Ft[kx, F.beta.images[w.images[bs]]]
        if np.array_equal(v[At], Ft[v[:, None], v[None, :]]):
            vh = GroupHom(E.A, F.A, v, check=False)
            yield SplitExtMorphism(E, F, u, vh, w, check=False)


def morphisms_between(E: SplitExtension, F: SplitExtension) -> list[SplitExtMorphism]:
    return list(iter_morphisms(E, F))


def count_morphisms(E: SplitExtension, F: SplitExtension, limit: int | None = None) -> int:
    n = 0
    for _ in iter_morphisms(E, F):
        n += 1
        if limit is not None and n >= limit:
            break
    return n


def generic_split_extension(X: FiniteGroup, auts: Automorphisms | None = None) -> SplitExtension:
    """``X -> Aut(X) x| X -> Aut(X)`` with ``Aut(X)`` acting by evaluation."""
    if auts is None:
        auts = automorphism_group(X)
    name = f"Hol({X.name})" if X.name else None
    return semidirect_product(X, auts.group, evaluation_action(auts, X), name=name)[1]


def is_faithful_criterion(E: SplitExtension) -> bool:
    """Whether ``Z_A(X, kappa) ^ beta(B)`` is trivial."""
    return meet(centralizer(E.kappa), image(E.beta)).is_trivial()


def extension_cases(X: FiniteGroup, catalog: Sequence[FiniteGroup], auts: Automorphisms | None = None):
    """``(base_index, action_index, action)`` for every action of every catalog group on ``X``."""
    if auts is None:
        auts = automorphism_group(X)
    for bi, B in enumerate(catalog):
        for ai, phi in enumerate(iter_actions(B, X, auts)):
            yield bi, ai, phi


def is_faithful_bruteforce(E: SplitExtension, catalog: Sequence[FiniteGroup]) -> bool:
    """At most one kernel-fixing morphism into ``E`` from every catalog-based extension."""
    for _, _, phi in extension_cases(E.X, catalog):
        if count_morphisms(extension_from_action(phi), E, limit=2) > 1:
            return False
    return True


@dataclass
class GenericReport:
    kernel: str
    candidate_order: int
    cases_checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "kernel": self.kernel,
            "candidate_order": self.candidate_order,
            "cases_checked": self.cases_checked,
            "failures": list(self.failures),
        }


def _failure(count: int) -> str | None:
    if count == 0:
        return "missing"
    if count > 1:
        return "non-unique"
    return None


def _count_into(candidate: SplitExtension, phi: Action) -> int:
    return count_morphisms(extension_from_action(phi), candidate, limit=2)


def verify_generic(
    candidate: SplitExtension, catalog: Sequence[FiniteGroup], *, jobs: int | None = None
) -> GenericReport:
    """Check that every catalog extension with kernel ``X`` maps to ``candidate`` exactly once."""
    cases = list(extension_cases(candidate.X, catalog))
    counts = pmap(partial(_count_into, candidate), [phi for _, _, phi in cases], jobs)
    report = GenericReport(candidate.X.name or f"order {candidate.X.order}", candidate.A.order)
    for (bi, ai, _), n in zip(cases, counts):
        report.cases_checked += 1
        kind = _failure(n)
        if kind:
            report.failures.append(
                {"base": catalog[bi].name or str(bi), "action_index": ai, "kind": kind, "morphisms": n}
            )
    return report


def extensions_isomorphic(E: SplitExtension, F: SplitExtension) -> bool:
    """Whether some isomorphism ``A -> A'`` fixes ``kappa``, ``alpha`` and ``beta``.

    Such a map is forced to be ``kappa(x) beta(b) -> kappa'(x) beta'(b)``.
    """
    if E.X != F.X or E.B != F.B or E.A.order != F.A.order:
        return False
    ident = E.B.identity_hom()
    return any(True for _ in iter_morphisms(E, F, bases_only=[ident]))
