"""Finite groups as explicit multiplication tables.

Elements are the dense indices ``0..n-1`` and the identity is always ``0``.
Composition of maps is read right to left: ``(f @ g)(x) == f(g(x))``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    IdentityNotZero,
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAction,
    NotAssociative,
    NotHomomorphism,
    NotNormal,
    NotSubgroup,
)

# Full O(n^3) associativity scan below this order, Light's test above it.
_EXHAUSTIVE_ASSOC_LIMIT = 160


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a, b]`` is the index of ``a*b``. Construction validates the
    group axioms unless ``check=False`` is passed by a trusted builder.
    ``labels`` optionally records what each index stood for at build time
    (a permutation, a pair, ...); it is not part of the group's identity.
    """

    def __init__(
        self,
        table,
        name: str | None = None,
        *,
        labels: Sequence[Hashable] | None = None,
        check: bool = True,
    ):
        try:
            t = np.asarray(table)
        except ValueError:
            raise MalformedTable("table rows have different lengths") from None
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise MalformedTable("table must be a non-empty square array")
        if not np.issubdtype(t.dtype, np.integer):
            raise MalformedTable("table entries must be integers")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise MalformedTable("table entry out of range")
        self.table = _frozen(t)
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise MalformedTable("labels must match the order")
        if check:
            _validate_group_table(self.table)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash(self._digest)

    @cached_property
    def _digest(self) -> bytes:
        return self.table.tobytes()

    def __getstate__(self):
        return {"table": self.table, "name": self.name, "labels": self.labels}

    def __setstate__(self, state):
        self.table = _frozen(state["table"])
        self.name = state["name"]
        self.labels = state["labels"]

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists; faster than numpy for scalar lookups."""
        return self.table.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def product(self, *xs: int) -> int:
        acc = 0
        rows = self.rows
        for x in xs:
            acc = rows[acc][x]
        return acc

    @cached_property
    def inverses(self) -> np.ndarray:
        return _frozen(np.argmin(self.table, axis=1))

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        rows = self.rows
        return rows[rows[g][x]][int(self.inverses[g])]

    def commutator(self, a: int, b: int) -> int:
        """``a b a^-1 b^-1``."""
        inv = self.inverses
        return self.product(a, b, int(inv[a]), int(inv[b]))

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        rows = self.rows
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = rows[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Elements of the subgroup generated by ``gens``."""
        gens = sorted(set(gens) - {0})
        rows = self.rows
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            row = rows[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """An irredundant generating set.

        Built greedily from elements of largest order, then pruned of any
        generator that the others already produce.
        """
        orders = self.element_orders
        by_order = sorted(range(1, self.order), key=lambda a: (-orders[a], a))
        gens: list[int] = []
        span = frozenset({0})
        for a in by_order:
            if len(span) == self.order:
                break
            if a not in span:
                gens.append(a)
                span = self.closure(gens)
        i = 0
        while i < len(gens):
            rest = gens[:i] + gens[i + 1 :]
            if len(self.closure(rest)) == self.order:
                gens = rest
            else:
                i += 1
        return tuple(gens)

    @cached_property
    def _extension_plans(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        # plans[k]: BFS edges (x, i, x*g_i), i <= k, covering <g_0..g_k>.
        rows = self.rows
        gens = self.generators
        plans = []
        for k in range(len(gens)):
            edges = []
            seen = {0}
            queue = deque([0])
            while queue:
                x = queue.popleft()
                for i in range(k + 1):
                    y = rows[x][gens[i]]
                    edges.append((x, i, y))
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            plans.append(tuple(edges))
        return tuple(plans)

    def index_of(self, label: Hashable) -> int:
        if self.labels is None:
            raise KeyError("group carries no labels")
        return self.labels.index(label)

    def identity_hom(self) -> GroupHom:
        return GroupHom(self, self, np.arange(self.order), check=False)

    def zero_hom(self, codomain: FiniteGroup) -> GroupHom:
        return GroupHom(self, codomain, np.zeros(self.order, dtype=np.int64), check=False)


def _validate_group_table(t: np.ndarray) -> None:
    n = t.shape[0]
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise NoIdentity("no two-sided identity element")
    if ids[0] != 0:
        raise IdentityNotZero(f"identity is element {ids[0]}, expected 0")
    right_inv = t == 0
    two_sided = right_inv & right_inv.T
    missing = np.flatnonzero(~two_sided.any(axis=1))
    if missing.size:
        raise NoInverse(f"element {int(missing[0])} has no two-sided inverse")
    if n <= _EXHAUSTIVE_ASSOC_LIMIT:
        left = t[t]  # [x, y, z] -> (x*y)*z
        right = t[ar[:, None, None], t[None, :, :]]  # [x, y, z] -> x*(y*z)
        bad = np.argwhere(left != right)
        if bad.size:
            x, y, z = (int(v) for v in bad[0])
            raise NotAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})")
        return
    # Light's test: the elements a with (xa)y == x(ay) for all x, y form a
    # submagma, so checking a generating set is enough.
    gens = _magma_generators(t)
    for a in gens:
        left = t[t[:, a]]  # [x, y] -> (x*a)*y
        right = t[:, t[a]]  # [x, y] -> x*(a*y)
        bad = np.argwhere(left != right)
        if bad.size:
            x, y = (int(v) for v in bad[0])
            raise NotAssociative(f"({x}*{a})*{y} != {x}*({a}*{y})")


def _magma_generators(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    rows = t.tolist()
    gens: list[int] = []
    reached = {0}
    for a in range(1, n):
        if a in reached:
            continue
        gens.append(a)
        queue = deque(reached | {a})
        reached |= {a}
        while queue:
            x = queue.popleft()
            for g in gens:
                for y in (rows[x][g], rows[g][x]):
                    if y not in reached:
                        reached.add(y)
                        queue.append(y)
    return gens


def make_group(table, name: str | None = None) -> FiniteGroup:
    """Validate ``table`` and wrap it as a group; raises on any axiom failure."""
    return FiniteGroup(table, name)


class GroupHom:
    """A homomorphism stored as the array of images of ``0..n-1``."""

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, images, *, check: bool = True):
        m = np.asarray(images)
        if m.shape != (domain.order,):
            raise NotHomomorphism(f"map has length {m.shape}, domain order is {domain.order}")
        if domain.order and (m.min() < 0 or m.max() >= codomain.order):
            raise NotHomomorphism("image index out of range")
        self.domain = domain
        self.codomain = codomain
        self.images = _frozen(m)
        if check:
            if int(self.images[0]) != 0:
                raise NotHomomorphism("identity not sent to identity")
            lhs = self.images[domain.table]
            rhs = codomain.table[self.images[:, None], self.images[None, :]]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                x, y = (int(v) for v in bad[0])
                raise NotHomomorphism(f"h({x}*{y}) != h({x})*h({y})")

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __matmul__(self, other: GroupHom) -> GroupHom:
        if other.codomain != self.domain:
            raise ValueError("homomorphisms do not compose")
        return GroupHom(other.domain, self.codomain, self.images[other.images], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and bool(np.array_equal(self.images, other.images))
        )

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def __repr__(self) -> str:
        return f"GroupHom({self.domain.name}->{self.codomain.name}, {self.images.tolist()})"

    @cached_property
    def image_set(self) -> frozenset[int]:
        return frozenset(self.images.tolist())

    def is_injective(self) -> bool:
        return len(self.image_set) == self.domain.order

    def is_surjective(self) -> bool:
        return len(self.image_set) == self.codomain.order

    def is_isomorphism(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_injective()

    def restrict(self, sub: Subgroup) -> GroupHom:
        """Restriction to ``sub`` (materialized via :meth:`Subgroup.as_group`)."""
        _, incl = sub.as_group()
        return self @ incl


def make_hom(domain: FiniteGroup, codomain: FiniteGroup, images) -> GroupHom:
    return GroupHom(domain, codomain, images)


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted element indices."""

    parent: FiniteGroup
    elements: tuple[int, ...]
    check: bool = True

    def __post_init__(self):
        els = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", els)
        if self.check:
            if not els or els[0] != 0:
                raise NotSubgroup("subgroup must contain the identity")
            idx = np.array(els)
            prods = self.parent.table[np.ix_(idx, idx)]
            if not np.isin(prods, idx).all():
                raise NotSubgroup("not closed under multiplication")

    @classmethod
    def whole(cls, G: FiniteGroup) -> Subgroup:
        return cls(G, tuple(range(G.order)), check=False)

    @classmethod
    def trivial(cls, G: FiniteGroup) -> Subgroup:
        return cls(G, (0,), check=False)

    @classmethod
    def generated(cls, G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
        return cls(G, tuple(G.closure(gens)), check=False)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.elements == other.elements and self.parent == other.parent

    def __hash__(self) -> int:
        return hash(self.elements)

    def __le__(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def __lt__(self, other: Subgroup) -> bool:
        return self.members < other.members

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of={self.parent.name})"

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def is_whole(self) -> bool:
        return len(self.elements) == self.parent.order

    def is_normal(self) -> bool:
        G = self.parent
        mem = self.members
        return all(G.conj(g, x) in mem for g in G.generators for x in self.elements)

    def as_group(self) -> tuple[FiniteGroup, GroupHom]:
        """The subgroup as a group on ``0..k-1`` (sorted order) with its inclusion."""
        return self._materialized

    @cached_property
    def _materialized(self) -> tuple[FiniteGroup, GroupHom]:
        idx = np.array(self.elements)
        pos = np.full(self.parent.order, -1, dtype=np.int64)
        pos[idx] = np.arange(len(idx))
        table = pos[self.parent.table[np.ix_(idx, idx)]]
        labels = None
        if self.parent.labels is not None:
            labels = [self.parent.labels[i] for i in self.elements]
        H = FiniteGroup(table, name=None, labels=labels, check=False)
        return H, GroupHom(H, self.parent, idx, check=False)


def kernel(h: GroupHom) -> Subgroup:
    return Subgroup(h.domain, tuple(np.flatnonzero(h.images == 0).tolist()))


def image(h: GroupHom) -> Subgroup:
    return Subgroup(h.codomain, tuple(sorted(h.image_set)))


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` on least-index coset representatives, with the projection."""
    if not N.is_normal():
        raise NotNormal("quotient requires a normal subgroup")
    rows = G.rows
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        c = len(reps)
        reps.append(g)
        for x in N.elements:
            coset_of[rows[g][x]] = c
    table = [[coset_of[rows[a][b]] for b in reps] for a in reps]
    Q = FiniteGroup(table, name=f"{G.name}/N" if G.name else None)
    return Q, GroupHom(G, Q, coset_of, check=False)


class Automorphisms(NamedTuple):
    """``group`` indexes the automorphisms; ``maps[i]`` is automorphism ``i`` of the base group."""

    group: FiniteGroup
    maps: np.ndarray


def iter_homs(
    src: FiniteGroup,
    dst: FiniteGroup,
    allowed: Callable[[int, int], bool] | None = None,
    *,
    injective: bool = False,
) -> Iterator[GroupHom]:
    """Every homomorphism ``src -> dst``, by backtracking on generator images.

    ``allowed(g, h)`` may veto sending generator ``g`` to ``h``; it must only
    reject images no wanted homomorphism uses. A generator assignment extends
    to a homomorphism iff the breadth-first propagation along the Cayley graph
    of ``src`` never hits a conflict, so no separate check is needed.
    """
    gens = src.generators
    if not gens:
        yield src.zero_hom(dst)
        return
    plans = src._extension_plans
    src_orders = src.element_orders
    dst_orders = dst.element_orders
    drows = dst.rows
    n = src.order
    cands = []
    for g in gens:
        og = src_orders[g]
        cs = [
            h
            for h in range(dst.order)
            if (og % dst_orders[h] == 0 if not injective else og == dst_orders[h])
            and (allowed is None or allowed(g, h))
        ]
        cands.append(cs)

    def extend(plan, imgs):
        m = [-1] * n
        m[0] = 0
        for x, i, y in plan:
            v = drows[m[x]][imgs[i]]
            my = m[y]
            if my < 0:
                m[y] = v
            elif my != v:
                return None
        return m

    k = len(gens)
    imgs: list[int] = []

    def rec(level):
        for h in cands[level]:
            imgs.append(h)
            m = extend(plans[level], imgs)
            if m is not None:
                if injective:
                    mapped = [v for v in m if v >= 0]
                    ok = len(set(mapped)) == len(mapped)
                else:
                    ok = True
                if ok:
                    if level + 1 == k:
                        yield m
                    else:
                        yield from rec(level + 1)
            imgs.pop()

    for m in rec(0):
        yield GroupHom(src, dst, m, check=False)


def homomorphisms(src: FiniteGroup, dst: FiniteGroup) -> list[GroupHom]:
    return list(iter_homs(src, dst))


def endomorphisms(G: FiniteGroup) -> list[GroupHom]:
    return list(iter_homs(G, G))


def _automorphism_maps(G: FiniteGroup) -> list[tuple[int, ...]]:
    maps = [tuple(h.images.tolist()) for h in iter_homs(G, G, injective=True)]
    return sorted(maps)


def automorphism_maps_bruteforce(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms by scanning every bijection fixing 0; only for tiny groups."""
    from itertools import permutations

    if G.order > 8:
        raise ValueError("brute-force automorphism scan is limited to order <= 8")
    t = G.table
    out = []
    for rest in permutations(range(1, G.order)):
        m = np.array((0,) + rest)
        if np.array_equal(m[t], t[m[:, None], m[None, :]]):
            out.append(tuple(m.tolist()))
    return sorted(out)


def group_from_maps(maps: Sequence[Sequence[int]], name: str | None = None) -> FiniteGroup:
    """The group of the given permutations of ``0..n-1`` under composition.

    ``maps`` must be closed under composition with the identity first.
    ``table[i, j]`` is the index of ``maps[i] o maps[j]``.
    """
    arr = np.asarray(maps, dtype=np.int64)
    index = {tuple(r): i for i, r in enumerate(arr.tolist())}
    comp = arr[:, arr]  # comp[i, j, x] = maps[i][maps[j][x]]
    k = arr.shape[0]
    table = np.empty((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            table[i, j] = index[tuple(comp[i, j].tolist())]
    return FiniteGroup(table, name, labels=[tuple(r) for r in arr.tolist()])


def automorphism_group(G: FiniteGroup) -> Automorphisms:
    """``Aut(G)`` as a table group; element ``i`` is the automorphism ``maps[i]``.

    Automorphisms are sorted lexicographically, so the identity is element 0.
    Composition in the table matches composition of maps.
    """
    maps = _automorphism_maps(G)
    name = f"Aut({G.name})" if G.name else None
    A = group_from_maps(maps, name)
    return Automorphisms(A, _frozen(np.asarray(maps, dtype=np.int64)))


def iter_isomorphisms(
    G: FiniteGroup, H: FiniteGroup, allowed: Callable[[int, int], bool] | None = None
) -> Iterator[GroupHom]:
    if G.order != H.order or sorted(G.element_orders) != sorted(H.element_orders):
        return
    for h in iter_homs(G, H, allowed, injective=True):
        if h.is_injective():
            yield h


def find_isomorphism(
    G: FiniteGroup, H: FiniteGroup, allowed: Callable[[int, int], bool] | None = None
) -> GroupHom | None:
    return next(iter_isomorphisms(G, H, allowed), None)


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


@dataclass(frozen=True, eq=False)
class Action:
    """A left action of ``actor`` on ``target`` by automorphisms.

    ``perms[b]`` is the automorphism of ``target`` by which ``b`` acts.
    """

    actor: FiniteGroup
    target: FiniteGroup
    perms: np.ndarray
    check: bool = True

    def __post_init__(self):
        p = _frozen(np.asarray(self.perms))
        object.__setattr__(self, "perms", p)
        if p.shape != (self.actor.order, self.target.order):
            raise NotAction("assignment has the wrong shape")
        if self.check:
            X = self.target
            tx = X.table
            for b in range(self.actor.order):
                pb = p[b]
                if sorted(pb.tolist()) != list(range(X.order)):
                    raise NotAction(f"element {b} does not act by a bijection")
                if not np.array_equal(pb[tx], tx[pb[:, None], pb[None, :]]):
                    raise NotAction(f"element {b} does not act by an automorphism")
            # assignment[b*b'] == assignment[b] o assignment[b']
            lhs = p[self.actor.table]  # [b, b', x] -> phi_{bb'}(x)
            rhs = p[np.arange(p.shape[0])[:, None, None], p[None, :, :]]  # phi_b(phi_b'(x))
            if not np.array_equal(lhs, rhs):
                raise NotAction("assignment is not a homomorphism")

    def __call__(self, b: int, x: int) -> int:
        return int(self.perms[b, x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Action):
            return NotImplemented
        return (
            self.actor == other.actor
            and self.target == other.target
            and bool(np.array_equal(self.perms, other.perms))
        )

    def __hash__(self) -> int:
        return hash(self.perms.tobytes())

    @classmethod
    def trivial(cls, actor: FiniteGroup, target: FiniteGroup) -> Action:
        perms = np.broadcast_to(np.arange(target.order), (actor.order, target.order))
        return cls(actor, target, perms, check=False)

    @classmethod
    def through(cls, h: GroupHom, auts: Automorphisms, target: FiniteGroup) -> Action:
        """The action ``b -> auts.maps[h(b)]`` for ``h: actor -> Aut(target)``."""
        return cls(h.domain, target, auts.maps[h.images], check=False)

    def is_trivial(self) -> bool:
        return bool((self.perms == np.arange(self.target.order)).all())

    def pullback(self, h: GroupHom) -> Action:
        """The action of ``h.domain`` obtained by acting through ``h``."""
        return Action(h.domain, self.target, self.perms[h.images], check=False)


def make_action(actor: FiniteGroup, target: FiniteGroup, perms) -> Action:
    return Action(actor, target, perms)


def evaluation_action(auts: Automorphisms, target: FiniteGroup) -> Action:
    """``Aut(X)`` acting on ``X`` by evaluation."""
    return Action(auts.group, target, auts.maps, check=False)


def iter_actions(B: FiniteGroup, X: FiniteGroup, auts: Automorphisms | None = None) -> Iterator[Action]:
    """Every action of ``B`` on ``X``, one per homomorphism ``B -> Aut(X)``."""
    if auts is None:
        auts = automorphism_group(X)
    for h in iter_homs(B, auts.group):
        yield Action.through(h, auts, X)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """``G x H`` with ``(g, h)`` stored at index ``g * |H| + h``."""
    ng, nh = G.order, H.order
    g = np.repeat(np.arange(ng), nh)
    h = np.tile(np.arange(nh), ng)
    table = G.table[g[:, None], g[None, :]] * nh + H.table[h[:, None], h[None, :]]
    labels = [(int(a), int(b)) for a, b in zip(g, h)]
    if name is None and G.name and H.name:
        name = f"{G.name}x{H.name}"
    return FiniteGroup(table, name, labels=labels)


def semidirect_table(X: FiniteGroup, B: FiniteGroup, phi: Action) -> np.ndarray:
    """Table of ``X x| B`` with ``(x, b)`` at index ``b * |X| + x``.

    ``(x, b)(x', b') = (x * phi_b(x'), b b')``.
    """
    nx, nb = X.order, B.order
    x = np.tile(np.arange(nx), nb)
    b = np.repeat(np.arange(nb), nx)
    acted = phi.perms[b[:, None], x[None, :]]  # phi_b(x') for the pair
    xs = X.table[x[:, None], acted]
    bs = B.table[b[:, None], b[None, :]]
    return bs * nx + xs


def semidirect_product(X: FiniteGroup, B: FiniteGroup, phi: Action, name: str | None = None):
    """``X x|_phi B`` together with its canonical split extension.

    Returns ``(A, E)`` where ``E`` has ``kappa(x) = (x, 0)``,
    ``alpha(x, b) = b`` and ``beta(b) = (0, b)``.
    """
    from .splitext import SplitExtension

    if phi.actor != B or phi.target != X:
        raise NotAction("action does not match the given groups")
    nx, nb = X.order, B.order
    labels = [(x, b) for b in range(nb) for x in range(nx)]
    A = FiniteGroup(semidirect_table(X, B, phi), name, labels=labels)
    kappa = GroupHom(X, A, np.arange(nx), check=False)
    alpha = GroupHom(A, B, np.repeat(np.arange(nb), nx), check=False)
    beta = GroupHom(B, A, np.arange(nb) * nx, check=False)
    return A, SplitExtension(kappa, alpha, beta)


def group_from_generators(
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    name: str | None = None,
) -> FiniteGroup:
    """Close ``gens`` under ``mul`` and tabulate; elements in breadth-first order."""
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, name, labels=elements)
