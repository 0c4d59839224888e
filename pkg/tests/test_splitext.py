from __future__ import annotations


import numpy as np
import pytest

from actorkit import catalog
from actorkit.errors import KernelMismatch, SectionNotSplit
from actorkit.groups import Action, GroupHom, automorphism_group, homomorphisms, is_isomorphic, iter_actions
from actorkit.splitext import (
    SplitExtension,
    count_morphisms,
    extension_cases,
    extension_from_action,
    extensions_isomorphic,
    generic_split_extension,
    is_faithful_bruteforce,
    is_faithful_criterion,
    morphisms_between,
    verify_generic,
)


def brute_morphisms(E: SplitExtension, F: SplitExtension) -> int:
    """Pairs (v, w) of homomorphisms with v kappa = kappa', v beta = beta' w, w alpha = alpha' v."""
    n = 0
    for w in homomorphisms(E.B, F.B):
        for v in homomorphisms(E.A, F.A):
            if (
                v @ E.kappa == F.kappa
                and v @ E.beta == F.beta @ w
                and w @ E.alpha == F.alpha @ v
            ):
                n += 1
    return n


def z3_inversion() -> Action:
    Z2, Z3 = catalog.get("Z2"), catalog.get("Z3")
    return Action(Z2, Z3, [[0, 1, 2], [0, 2, 1]])


def test_validation_errors():
    Z2, Z4 = catalog.get("Z2"), catalog.get("Z4")
    kappa = GroupHom(Z2, Z4, [0, 2])
    alpha = GroupHom(Z4, Z2, [0, 1, 0, 1])
    beta = GroupHom(Z2, Z4, [0, 2])
    # Z4 does not split over Z2
    with pytest.raises(SectionNotSplit):
        SplitExtension(kappa, alpha, beta)
    E = extension_from_action(Action.trivial(Z2, Z2))
    with pytest.raises(KernelMismatch):
        SplitExtension(E.beta, E.alpha, E.beta)


def test_extension_from_action_round_trip():
    for X in [catalog.get("Z3"), catalog.get("V4"), catalog.get("S3")]:
        for B in [catalog.get("Z2"), catalog.get("Z3"), catalog.get("V4")]:
            for phi in iter_actions(B, X):
                E = extension_from_action(phi)
                assert E.action == phi
                assert E.A.order == X.order * B.order


def test_morphism_counts_match_bruteforce():
    Z3 = catalog.get("Z3")
    inv = z3_inversion()
    Z2 = inv.actor
    E_triv = extension_from_action(Action.trivial(Z2, Z3))
    E_inv = extension_from_action(inv)
    H = generic_split_extension(Z3)
    pairs = [(E_triv, H), (E_inv, H), (E_inv, E_inv), (E_triv, E_triv), (E_inv, E_triv), (H, H)]
    for E, F in pairs:
        assert len(morphisms_between(E, F)) == brute_morphisms(E, F)


def test_morphisms_examples():
    Z3 = catalog.get("Z3")
    Z2 = catalog.get("Z2")
    E_triv = extension_from_action(Action.trivial(Z2, Z3))
    E_inv = extension_from_action(z3_inversion())
    # Z6 -> S3 fixing Z3: w must send the generator to an element acting trivially
    assert count_morphisms(E_triv, E_inv) == 1
    # Z2 acting by inversion cannot map to the trivial action
    assert count_morphisms(E_inv, E_triv) == 0
    # endomorphisms of Z3 x Z2 over Z3: w is any endomorphism of Z2
    assert count_morphisms(E_triv, E_triv) == 2


def test_generic_extension_of_z3_is_s3():
    H = generic_split_extension(catalog.get("Z3"))
    assert is_isomorphic(H.A, catalog.get("S3"))
    report = verify_generic(H, catalog.builtin_catalog(8))
    assert report.passed and report.cases_checked > 0


def test_verify_generic_rejects_a_non_classifier():
    Z3 = catalog.get("Z3")
    E = extension_from_action(z3_inversion())
    # S3 over Z2 happens to be Aut(Z3) x| Z3 again
    assert verify_generic(E, catalog.builtin_catalog(4)).passed
    E = extension_from_action(Action.trivial(catalog.get("Z2"), Z3))
    rep = verify_generic(E, catalog.builtin_catalog(4))
    assert not rep.passed
    kinds = {f["kind"] for f in rep.failures}
    assert kinds == {"missing", "non-unique"}
    X = catalog.get("V4")
    one = extension_from_action(Action.trivial(catalog.trivial(), X))
    rep = verify_generic(one, catalog.builtin_catalog(3))
    assert {f["kind"] for f in rep.failures} == {"missing"}


def test_faithfulness_examples():
    Z3, Z2 = catalog.get("Z3"), catalog.get("Z2")
    assert is_faithful_criterion(generic_split_extension(Z3))
    assert not is_faithful_criterion(extension_from_action(Action.trivial(Z2, Z3)))
    assert is_faithful_criterion(extension_from_action(z3_inversion()))
    # S3 acting on itself by conjugation: the inner-automorphism extension is faithful
    S3 = catalog.get("S3")
    conj = Action(S3, S3, [[S3.conj(g, x) for x in range(6)] for g in range(6)])
    assert is_faithful_criterion(extension_from_action(conj))


def test_faithfulness_criterion_matches_bruteforce_small():
    cat = catalog.builtin_catalog(4)
    for X in [catalog.get("Z2"), catalog.get("Z3"), catalog.get("V4")]:
        for _, _, phi in extension_cases(X, cat):
            E = extension_from_action(phi)
            assert is_faithful_criterion(E) == is_faithful_bruteforce(E, cat)


def test_split_short_five_lemma():
    # a morphism of split extensions that is the identity on kernel and base is an isomorphism
    X = catalog.get("V4")
    for phi in iter_actions(catalog.get("Z3"), X):
        E = extension_from_action(phi)
        for m in morphisms_between(E, E):
            if np.array_equal(m.w.images, np.arange(E.B.order)):
                assert m.v.is_isomorphism()
        assert extensions_isomorphic(E, E)


def test_extension_cases_cover_all_actions():
    X = catalog.get("Z3")
    auts = automorphism_group(X)
    cat = catalog.builtin_catalog(4)
    # Hom(B, Z2) for B in 1, Z2, Z3, Z4, V4
    assert sum(1 for _ in extension_cases(X, cat, auts)) == 1 + 2 + 1 + 2 + 4
