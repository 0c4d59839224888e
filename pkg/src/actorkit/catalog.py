"""Bundled small groups: every isomorphism type up to order 12, plus a few of order 16."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable

import numpy as np

from .groups import FiniteGroup, direct_product, group_from_generators
from .lattice import Subgroup


def cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, f"Z{n}" if n > 1 else "1", labels=list(range(n)))


def trivial() -> FiniteGroup:
    return cyclic(1)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # p o q
    return tuple(p[i] for i in q)


def permutation_group(gens: list[tuple[int, ...]], name: str) -> FiniteGroup:
    ident = tuple(range(len(gens[0])))
    return group_from_generators(gens, _compose, ident, name)


def symmetric3() -> FiniteGroup:
    return permutation_group([(1, 0, 2), (1, 2, 0)], "S3")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular ``n``-gon, order ``2n``."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], f"D{n}")


def alternating4() -> FiniteGroup:
    return permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)], "A4")


def dicyclic(n: int, name: str | None = None) -> FiniteGroup:
    """``<a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>`` on pairs ``a^k x^e``."""
    m = 2 * n

    def mul(p, q):
        k1, e1 = p
        k2, e2 = q
        if e1 == 0:
            return ((k1 + k2) % m, e2)
        if e2 == 0:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    return group_from_generators([(1, 0), (0, 1)], mul, (0, 0), name or f"Dic{n}")


def klein4() -> FiniteGroup:
    G = direct_product(cyclic(2), cyclic(2))
    G.name = "V4"
    return G


def _product(G: FiniteGroup, H: FiniteGroup, name: str) -> FiniteGroup:
    P = direct_product(G, H)
    P.name = name
    return P


# Catalog order is fixed: oracles and reports iterate in this order.
_BUILDERS: list[tuple[str, Callable[[], FiniteGroup]]] = [
    ("1", trivial),
    ("Z2", lambda: cyclic(2)),
    ("Z3", lambda: cyclic(3)),
    ("Z4", lambda: cyclic(4)),
    ("V4", klein4),
    ("Z5", lambda: cyclic(5)),
    ("Z6", lambda: cyclic(6)),
    ("S3", symmetric3),
    ("Z7", lambda: cyclic(7)),
    ("Z8", lambda: cyclic(8)),
    ("Z4xZ2", lambda: _product(cyclic(4), cyclic(2), "Z4xZ2")),
    ("Z2^3", lambda: _product(klein4(), cyclic(2), "Z2^3")),
    ("D4", lambda: dihedral(4)),
    ("Q8", lambda: dicyclic(2, "Q8")),
    ("Z9", lambda: cyclic(9)),
    ("Z3xZ3", lambda: _product(cyclic(3), cyclic(3), "Z3xZ3")),
    ("Z10", lambda: cyclic(10)),
    ("D5", lambda: dihedral(5)),
    ("Z11", lambda: cyclic(11)),
    ("Z12", lambda: cyclic(12)),
    ("Z6xZ2", lambda: _product(cyclic(6), cyclic(2), "Z6xZ2")),
    ("A4", alternating4),
    ("D6", lambda: dihedral(6)),
    ("Dic3", lambda: dicyclic(3)),
    ("Z16", lambda: cyclic(16)),
    ("Z4xZ4", lambda: _product(cyclic(4), cyclic(4), "Z4xZ4")),
    ("D8", lambda: dihedral(8)),
    ("Q16", lambda: dicyclic(4, "Q16")),
]

NAMES: tuple[str, ...] = tuple(n for n, _ in _BUILDERS)


@lru_cache(maxsize=None)
def get(name: str) -> FiniteGroup:
    """A catalog group built in code (carries element labels)."""
    for n, build in _BUILDERS:
        if n == name:
            return build()
    raise KeyError(name)


def builtin_catalog(max_order: int = 16) -> list[FiniteGroup]:
    return [get(n) for n in NAMES if get(n).order <= max_order]


def bundled_catalog_dir() -> Path:
    return Path(str(resources.files("actorkit") / "data" / "catalog"))


def load_catalog(directory: str | Path | None = None, max_order: int | None = None) -> list[FiniteGroup]:
    """Group files (``*.grp``) in ``directory`` sorted by file name."""
    from .io import read_group

    directory = Path(directory) if directory is not None else bundled_catalog_dir()
    groups = [read_group(p) for p in sorted(directory.glob("*.grp"))]
    if max_order is not None:
        groups = [G for G in groups if G.order <= max_order]
    return groups


def write_bundled_catalog(directory: str | Path | None = None) -> list[Path]:
    from .io import write_group

    directory = Path(directory) if directory is not None else bundled_catalog_dir()
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, name in enumerate(NAMES):
        p = directory / f"{i:02d}_{name.replace('^', 'p')}.grp"
        write_group(get(name), p)
        paths.append(p)
    return paths


def a3_in_s3() -> Subgroup:
    S3 = get("S3")
    return Subgroup.generated(S3, [S3.index_of((1, 2, 0))])


def _conjugation_xmod(G: FiniteGroup, N: Subgroup):
    """Inclusion of a normal subgroup, ``G`` acting by conjugation."""
    from .groupoid import CrossedModule
    from .groups import Action

    T, incl = N.as_group()
    pos = {x: i for i, x in enumerate(N.elements)}
    perms = np.array([[pos[G.conj(g, incl(x))] for x in range(T.order)] for g in range(G.order)])
    return CrossedModule(T, G, incl, Action(G, T, perms))


def _inner_xmod(T: FiniteGroup):
    """``T -> Aut(T)`` sending ``x`` to conjugation by ``x``; ``Aut(T)`` acts by evaluation."""
    from .groupoid import CrossedModule
    from .groups import GroupHom, automorphism_group, evaluation_action

    auts = automorphism_group(T)
    index = {tuple(m): i for i, m in enumerate(auts.maps.tolist())}
    d = [index[tuple(T.conj(x, y) for y in range(T.order))] for x in range(T.order)]
    return CrossedModule(T, auts.group, GroupHom(T, auts.group, d), evaluation_action(auts, T))


def _trivial_xmod(T: FiniteGroup, G: FiniteGroup, d_images=None):
    from .groupoid import CrossedModule
    from .groups import Action, GroupHom

    d = GroupHom(T, G, d_images if d_images is not None else np.zeros(T.order, dtype=np.int64))
    return CrossedModule(T, G, d, Action.trivial(G, T))


def _aut_zero_xmod(T: FiniteGroup):
    """Abelian ``T -> Aut(T)`` with zero boundary and the evaluation action."""
    from .groupoid import CrossedModule
    from .groups import automorphism_group, evaluation_action

    auts = automorphism_group(T)
    return CrossedModule(T, auts.group, T.zero_hom(auts.group), evaluation_action(auts, T))


def crossed_module_examples() -> list[tuple[str, object]]:
    """Ten small crossed modules used for the cat^1 round trip."""
    S3, A4 = get("S3"), get("A4")
    v4_in_a4 = Subgroup(A4, tuple(i for i, p in enumerate(A4.labels) if p in {(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)}))
    return [
        ("Z3_to_1", _trivial_xmod(get("Z3"), trivial())),
        ("V4_to_1", _trivial_xmod(get("V4"), trivial())),
        ("1_to_S3", _trivial_xmod(trivial(), S3)),
        ("A3_in_S3", _conjugation_xmod(S3, a3_in_s3())),
        ("V4_in_A4", _conjugation_xmod(A4, v4_in_a4)),
        ("S3_inner", _inner_xmod(S3)),
        ("D4_inner", _inner_xmod(get("D4"))),
        ("Z3_to_Aut_zero", _aut_zero_xmod(get("Z3"))),
        ("Z4_onto_Z2", _trivial_xmod(get("Z4"), get("Z2"), [0, 1, 0, 1])),
        ("Z4_identity", _trivial_xmod(get("Z4"), get("Z4"), [0, 1, 2, 3])),
    ]


def write_bundled_xmods(directory: str | Path | None = None) -> list[Path]:
    from .io import write_xmod

    directory = Path(directory) if directory is not None else bundled_catalog_dir().parent / "xmod"
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, (name, M) in enumerate(crossed_module_examples()):
        p = directory / f"{i:02d}_{name}.xmod"
        write_xmod(M, p)
        paths.append(p)
    return paths


def load_bundled_xmods() -> list[tuple[str, object]]:
    from .io import read_xmod

    directory = bundled_catalog_dir().parent / "xmod"
    return [(p.stem.split("_", 1)[1], read_xmod(p)) for p in sorted(directory.glob("*.xmod"))]
