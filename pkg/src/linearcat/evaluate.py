"""Evaluation of words and canonical terms inside a finite model."""

from __future__ import annotations

from .errors import ArityMismatch
from .models import Model, Mor
from .terms import (ASSOC_PROD, ASSOC_SUM, I_GEN, IDENTITY, J_GEN, LUNIT_PROD,
                    LUNIT_SUM, PRELINEAR, RUNIT_PROD, RUNIT_SUM, CanonTerm,
                    ElementaryTerm, Generator, GenTerm, SumPar, VComp,
                    invert, point_morphism, unit_cancel)
from .words import (ONE, PROD, SUM, ZERO, Hole, Prod, Sum, UnitOne, UnitZero,
                    Word, length, render_word)


def eval_object(model: Model, w: Word, objects: tuple):
    """The word functor on objects: fill holes left to right."""
    if len(objects) != length(w):
        raise ArityMismatch(
            f"word {render_word(w)} has length {length(w)}, got {len(objects)} object(s)")
    obj, rest = _eval_object(model, w, tuple(objects))
    assert not rest
    return obj


def _eval_object(model: Model, w: Word, objects: tuple):
    if isinstance(w, Hole):
        return objects[0], objects[1:]
    if isinstance(w, UnitZero):
        return model.zero_obj, objects
    if isinstance(w, UnitOne):
        return model.one_obj, objects
    left, rest = _eval_object(model, w.left, objects)
    right, rest = _eval_object(model, w.right, rest)
    if isinstance(w, Sum):
        return model.sum_obj(left, right), rest
    return model.prod_obj(left, right), rest


def eval_morphism(model: Model, w: Word, morphisms: tuple[Mor, ...]) -> Mor:
    """The word functor on morphisms; units contribute identities."""
    if len(morphisms) != length(w):
        raise ArityMismatch(
            f"word {render_word(w)} has length {length(w)}, got {len(morphisms)} morphism(s)")
    mor, rest = _eval_morphism(model, w, tuple(morphisms))
    assert not rest
    return mor


def _eval_morphism(model: Model, w: Word, morphisms: tuple[Mor, ...]):
    if isinstance(w, Hole):
        return morphisms[0], morphisms[1:]
    if isinstance(w, UnitZero):
        return model.identity(model.zero_obj), morphisms
    if isinstance(w, UnitOne):
        return model.identity(model.one_obj), morphisms
    left, rest = _eval_morphism(model, w.left, morphisms)
    right, rest = _eval_morphism(model, w.right, rest)
    if isinstance(w, Sum):
        return model.sum_mor(left, right), rest
    return model.prod_mor(left, right), rest


def _split_objects(words, objects):
    out = []
    rest = tuple(objects)
    for w in words:
        n = length(w)
        out.append(rest[:n])
        rest = rest[n:]
    return out


def eval_generator(model: Model, gen: Generator, objects: tuple) -> Mor:
    """The component of a generator at the given objects."""
    k = gen.kind
    if k == IDENTITY:
        return model.identity(eval_object(model, gen.args[0], objects))
    if k == J_GEN:
        if gen.inverse:
            return eval_canon(model, point_morphism(), ())
        return model.j_morphism()
    arg_objs = _split_objects(gen.args, objects)
    objs = tuple(eval_object(model, w, o) for w, o in zip(gen.args, arg_objs))
    if k == I_GEN:
        return model.i_inverse(*objs) if gen.inverse else model.i_component(*objs)
    table = {
        ASSOC_SUM: ("assoc_sum", "assoc_sum_inv"),
        LUNIT_SUM: ("lunit_sum", "lunit_sum_inv"),
        RUNIT_SUM: ("runit_sum", "runit_sum_inv"),
        ASSOC_PROD: ("assoc_prod", "assoc_prod_inv"),
        LUNIT_PROD: ("lunit_prod", "lunit_prod_inv"),
        RUNIT_PROD: ("runit_prod", "runit_prod_inv"),
    }[k]
    return model._structure(table[1] if gen.inverse else table[0], objs)


def eval_canon(model: Model, t: CanonTerm, objects: tuple) -> Mor:
    """Interpret a canonical term at an object tuple for its source word."""
    if len(objects) != length(t.source):
        raise ArityMismatch(
            f"term source {render_word(t.source)} has length {length(t.source)},"
            f" got {len(objects)} object(s)")
    return _eval_canon(model, t, tuple(objects))


def _eval_canon(model: Model, t: CanonTerm, objects: tuple) -> Mor:
    if isinstance(t, GenTerm):
        return eval_generator(model, t.gen, objects)
    if isinstance(t, VComp):
        earlier = _eval_canon(model, t.earlier, objects)
        later = _eval_canon(model, t.later, objects)
        return model.compose(later, earlier)
    left_objs, right_objs = _split_objects(
        (t.left.source, t.right.source), objects)
    left = _eval_canon(model, t.left, left_objs)
    right = _eval_canon(model, t.right, right_objs)
    if isinstance(t, SumPar):
        return model.sum_mor(left, right)
    return model.prod_mor(left, right)


def eval_elementary_chain(model: Model, src: Word,
                          elems: tuple[ElementaryTerm, ...],
                          objects: tuple) -> Mor:
    """Evaluate a factorization as a composite, starting from ``src``."""
    mor = model.identity(eval_object(model, src, objects))
    for e in elems:
        mor = model.compose(_eval_canon(model, e.to_canon(), objects), mor)
    return mor


# ---------------------------------------------------------------------------
# Inclusions, projections, zero morphisms.

def is_pure_word(w: Word, op: str) -> bool:
    """True when ``w`` is built from holes and ``op`` alone (units excluded)."""
    if isinstance(w, Hole):
        return True
    if isinstance(w, (UnitZero, UnitOne)):
        return False
    node_op = SUM if isinstance(w, Sum) else PROD
    return node_op == op and is_pure_word(w.left, op) and is_pure_word(w.right, op)


def _with_units_except(w: Word, keep: int, unit: Word, counter: list[int]) -> Word:
    if isinstance(w, Hole):
        idx = counter[0]
        counter[0] += 1
        return w if idx == keep else unit
    if isinstance(w, (UnitZero, UnitOne)):
        return w
    left = _with_units_except(w.left, keep, unit, counter)
    right = _with_units_except(w.right, keep, unit, counter)
    return Sum(left, right) if isinstance(w, Sum) else Prod(left, right)


def inclusion(model: Model, w: Word, objects: tuple, index: int) -> Mor:
    """The inclusion of the index-th summand into an n-fold sum word.

    Built as the canonical isomorphism onto the word with every other hole
    zeroed out, followed by the word functor applied to bang maps.
    """
    if not is_pure_word(w, SUM):
        raise ValueError(f"inclusion needs a pure sum word, got {render_word(w)}")
    n = length(w)
    if not 1 <= index <= n:
        raise IndexError(f"inclusion index {index} out of range 1..{n}")
    zeroed = _with_units_except(w, index - 1, ZERO, [0])
    cancel = unit_cancel(zeroed) if n > 1 else None
    if cancel is None:
        iso = model.identity(objects[index - 1])
    else:
        iso = eval_canon(model, invert(cancel, PRELINEAR), (objects[index - 1],))
    mors = tuple(
        model.identity(objects[index - 1]) if k == index - 1
        else model.bang_from_zero(objects[k]) for k in range(n))
    return model.compose(eval_morphism(model, w, mors), iso)


def projection(model: Model, w: Word, objects: tuple, index: int) -> Mor:
    """The projection onto the index-th factor of an n-fold product word."""
    if not is_pure_word(w, PROD):
        raise ValueError(f"projection needs a pure product word, got {render_word(w)}")
    n = length(w)
    if not 1 <= index <= n:
        raise IndexError(f"projection index {index} out of range 1..{n}")
    oned = _with_units_except(w, index - 1, ONE, [0])
    mors = tuple(
        model.identity(objects[index - 1]) if k == index - 1
        else model.bang_to_one(objects[k]) for k in range(n))
    banged = eval_morphism(model, w, mors)
    if n == 1:
        return banged
    iso = eval_canon(model, unit_cancel(oned), (objects[index - 1],))
    return model.compose(iso, banged)


def zero_morphism(model: Model, x, y) -> Mor:
    """The map factoring through the product unit and then the sum unit."""
    point = eval_canon(model, point_morphism(), ())
    return model.compose(model.bang_from_zero(y),
                         model.compose(point, model.bang_to_one(x)))
