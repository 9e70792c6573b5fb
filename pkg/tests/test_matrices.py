import itertools

import pytest

from linearcat.centrality import matrix_completeness
from linearcat.evaluate import eval_object, zero_morphism
from linearcat.matrices import (MatrixPresentation, coherence_identity_check,
                                identity_matrix, matrix_of, realize)
from linearcat.models import Mor, PtObj
from linearcat.words import HOLE, Prod, Sum

S2 = Sum(HOLE, HOLE)
P2 = Prod(HOLE, HOLE)


def test_matrix_of_transformer_is_identity(pt3, cmon):
    for model, pair in ((pt3, (PtObj(2), PtObj(3))),
                        (cmon, tuple(o for o in cmon.base_objects
                                     if o.size == 2))):
        a, b = pair
        got = matrix_of(model, model.i_component(a, b), (S2, (a, b)), (P2, (a, b)))
        want = identity_matrix(model, (a, b), S2, P2)
        assert got.entry_key() == want.entry_key()


def test_matrix_of_zero_is_all_zero(pt3):
    a, b = PtObj(2), PtObj(2)
    dom = eval_object(pt3, S2, (a, b))
    cod = eval_object(pt3, P2, (a, b))
    z = Mor(dom, cod, (0,) * dom.size)
    m = matrix_of(pt3, z, (S2, (a, b)), (P2, (a, b)))
    for row, tgt in zip(m.entries, (a, b)):
        for entry, src in zip(row, (a, b)):
            assert entry == zero_morphism(pt3, src, tgt)


def test_matrix_one_by_one(pt3):
    f = pt3.hom(PtObj(2), PtObj(3))[2]
    m = matrix_of(pt3, f, (HOLE, (PtObj(2),)), (HOLE, (PtObj(3),)))
    assert m.entries == ((f,),)
    assert realize(pt3, m) == f


def test_matrix_requires_pure_words(pt3):
    f = pt3.identity(PtObj(2))
    with pytest.raises(ValueError):
        matrix_of(pt3, f, (P2, (PtObj(2), PtObj(1))), (P2, (PtObj(2), PtObj(1))))


def test_realize_round_trip_all_small(pt3):
    a, b = PtObj(2), PtObj(2)
    dom = eval_object(pt3, S2, (a, b))
    cod = eval_object(pt3, P2, (a, b))
    for f in pt3.hom(dom, cod):
        m = matrix_of(pt3, f, (S2, (a, b)), (P2, (a, b)))
        assert realize(pt3, m) == f
        assert matrix_of(pt3, realize(pt3, m), (S2, (a, b)),
                         (P2, (a, b))).entry_key() == m.entry_key()


def test_realize_identity_carrier_off_diagonals(pt2):
    # the wedge is a genuine coproduct of pointed sets, so even this matrix
    # has a (unique) realizer: both non-base points land on (1, 1)
    a = b = PtObj(2)
    like = pt2.hom(a, b)[1]
    assert like.graph == (0, 1)
    m = MatrixPresentation(S2, (a, b), P2, (a, b), (
        (pt2.identity(a), like),
        (like, pt2.identity(b))))
    h = realize(pt2, m)
    assert h is not None and h.graph == (0, 3, 3)
    assert matrix_of(pt2, h, (S2, (a, b)), (P2, (a, b))).entry_key() == m.entry_key()


def test_identity_matrix_realizer_is_transformer_in_cmon(cmon):
    for a, b in itertools.product(
            [o for o in cmon.base_objects if o.size <= 2], repeat=2):
        m = identity_matrix(cmon, (a, b), S2, P2)
        assert realize(cmon, m) == cmon.i_component(a, b)


def test_both_models_realize_every_matrix(pt2, cmon2):
    # the sum is a coproduct and the product a product in both instances,
    # so matrix presentations biject with boundary hom-sets
    for model in (pt2, cmon2):
        complete, witness = matrix_completeness(model)
        assert complete, witness


def test_corrupted_inclusion_breaks_realization_uniqueness():
    from linearcat.errors import IntegrityError
    from linearcat.models import FinPtSet
    model = FinPtSet((1, 2))
    # collapse the inverse right sum-unitor: the first inclusion now factors
    # through the basepoint and distinct morphisms share one matrix
    model.override_table("runit_sum_inv", (PtObj(2),), (0, 0))
    a = b = PtObj(2)
    with pytest.raises(IntegrityError):
        realize(model, identity_matrix(model, (a, b), S2, P2))


def test_coherence_identity_check_small(pt3, cmon):
    r = coherence_identity_check(pt3, 1, (PtObj(2),), depth=4)
    assert r.passed
    r = coherence_identity_check(pt3, 2, (PtObj(2), PtObj(2)), depth=5)
    assert r.passed
    z2 = [o for o in cmon.base_objects if o.size == 2][0]
    r = coherence_identity_check(cmon, 3, (z2,) * 3, depth=6)
    assert r.passed


def test_identity_matrix_three_by_three(pt3):
    from linearcat.search import pure_bracketings
    objs = (PtObj(2), PtObj(3), PtObj(2))
    src = pure_bracketings("+", 3)[0]
    tgt = pure_bracketings("*", 3)[0]
    m = identity_matrix(pt3, objs, src, tgt)
    assert m.rows == m.cols == 3
    for k in range(3):
        for l in range(3):
            if k == l:
                assert m.entries[k][l] == pt3.identity(objs[k])
            else:
                assert m.entries[k][l] == zero_morphism(pt3, objs[l], objs[k])
    assert realize(pt3, m) is not None


def test_identity_matrix_requires_square(pt3):
    with pytest.raises(ValueError):
        identity_matrix(pt3, (PtObj(2),), HOLE, P2)


def test_coherence_check_rejects_large_n(pt3):
    with pytest.raises(ValueError):
        coherence_identity_check(pt3, 4, (PtObj(2),) * 4)
