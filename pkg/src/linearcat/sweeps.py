"""Coherence sweeps over corpora of word pairs.

The underlying theorems quantify over every word pair of a given length, a
set that grows explosively with the number of unit leaves; the shipped
corpora are exhaustive over the light strata (few unit leaves) and take a
deterministic stride through the heavy ones so that runs stay reproducible
and finish at desk scale.  Strides can be widened or disabled per call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .checks import CheckReport
from .evaluate import eval_canon
from .models import Model, Mor
from .search import search_graph, to_key, value_flood, words_with
from .terms import (PARTIALLY_LINEAR, PRELINEAR, vcompose, unit_cancel,
                    GenTerm, Generator, I_GEN)
from .words import HOLE, SUM, Word, core_split, length, render_word


@dataclass(frozen=True)
class PairCorpus:
    """Deterministic list of (source, target) word pairs."""

    pairs: tuple[tuple[Word, Word], ...]
    description: str


def _stride(seq, step: int):
    return tuple(seq[::step]) if step > 1 else tuple(seq)


def equal_length_pairs(n: int, max_units: int, mixed_stride: int = 1,
                       heavy_stride: int = 1) -> PairCorpus:
    """Pairs of length-``n`` words organized by unit-leaf count.

    Pairs whose words carry at most one unit leaf in total are always
    exhaustive.  The one-unit-each block is thinned by ``mixed_stride``.
    Words with two or more unit leaves pair with the barest words of the
    same length, thinned by ``heavy_stride`` (scaled by 8 per extra unit
    leaf, since those strata grow roughly eightfold per leaf).
    """
    by_units = {u: words_with(n, u) for u in range(max_units + 1)}
    base_units = min(u for u in range(max_units + 1) if by_units[u])
    bare = by_units[base_units]
    pairs: list[tuple[Word, Word]] = []
    light = base_units + 1
    for u1 in range(base_units, min(light, max_units) + 1):
        for u2 in range(base_units, min(light, max_units) + 1):
            if u1 + u2 > max_units:
                continue
            block = tuple(itertools.product(by_units[u1], by_units[u2]))
            if u1 == u2 == light:
                block = _stride(block, mixed_stride)
            pairs.extend(block)
    for u in range(light + 1, max_units + 1):
        heavy = _stride(by_units[u], heavy_stride * 8 ** (u - light - 1))
        for hw in heavy:
            for b in bare:
                pairs.append((hw, b))
                pairs.append((b, hw))
    return PairCorpus(tuple(pairs),
                      f"length {n}, <= {max_units} unit leaves,"
                      f" mixed stride {mixed_stride}, heavy stride {heavy_stride}")


def coherence_sweep(model: Model, corpus: PairCorpus, objects_for,
                    depth: int = 6, mode: str = PARTIALLY_LINEAR,
                    require_iso: bool = True,
                    law: str = "coherence/partially-linear") -> CheckReport:
    """All depth-bounded canonical terms within each pair must agree, and
    (optionally) their common value must be invertible in the model."""
    checked = 0
    seen: set = set()
    for v, w in corpus.pairs:
        vk, wk = to_key(v), to_key(w)
        if mode == PARTIALLY_LINEAR and (wk, vk) in seen:
            # inverting terms gives a depth-preserving bijection between the
            # two directions, so the mirrored pair carries the same content
            continue
        seen.add((vk, wk))
        graph = search_graph(vk, wk, depth, mode)
        for objects in objects_for(length(v)):
            flood = value_flood(model, graph, objects)
            if not flood.values:
                continue
            checked += 1
            if len(flood.values) > 1:
                terms = [str(flood.witness_term(graph, g)) for g in flood.values]
                return CheckReport(law, False, {
                    "source": render_word(v), "target": render_word(w),
                    "objects": [o.name for o in objects],
                    "terms": terms,
                    "values": [list(g) for g in flood.values]})
            [value] = flood.value_morphisms(model)
            if require_iso and not _invertible(model, value):
                return CheckReport(law, False, {
                    "source": render_word(v), "target": render_word(w),
                    "objects": [o.name for o in objects],
                    "reason": "canonical morphism is not invertible",
                    "value": list(value.graph)})
    return CheckReport(law, True, None,
                       {"corpus": corpus.description, "pairs": len(corpus.pairs),
                        "evaluations": checked, "depth": depth})


def _invertible(model: Model, m: Mor) -> bool:
    n = len(m.graph)
    if m.cod.size != n or len(set(m.graph)) != n:
        return False
    inv = [0] * n
    for a, b in enumerate(m.graph):
        inv[b] = a
    return model.is_morphism(Mor(m.cod, m.dom, tuple(inv)))


def normalized_cancellation(model: Model, w: Word, objects: tuple) -> Mor:
    """Unit cancellation pushed into the product of the two core objects.

    Cancellation of a length-2 word lands on its unit-free core; when the
    core is a sum the transformer is applied on top, so that every length-2
    word normalizes into the same product object.
    """
    term = unit_cancel(w)
    split = core_split(w)
    if split.op == SUM:
        term = vcompose(GenTerm(Generator(I_GEN, (HOLE, HOLE))), term)
    return eval_canon(model, term, objects)


def unit_square_sweep(model: Model, corpus: PairCorpus, objects_for,
                      depth: int = 4, mode: str = PRELINEAR) -> CheckReport:
    """The unit-cancellation square: for every canonical term c between two
    length-2 words, normalized cancellation of the target after c equals
    normalized cancellation of the source."""
    law = "unit-cancellation-square"
    checked = 0
    for v, w in corpus.pairs:
        graph = search_graph(to_key(v), to_key(w), depth, mode)
        for objects in objects_for(2):
            u_v = normalized_cancellation(model, v, objects)
            u_w = normalized_cancellation(model, w, objects)
            flood = value_flood(model, graph, objects)
            for value in flood.value_morphisms(model):
                checked += 1
                if model.compose(u_w, value) != u_v:
                    term = str(flood.witness_term(graph, value))
                    return CheckReport(law, False, {
                        "source": render_word(v), "target": render_word(w),
                        "objects": [o.name for o in objects],
                        "term": term,
                        "lhs": list(model.compose(u_w, value).graph),
                        "rhs": list(u_v.graph)})
    return CheckReport(law, True, None,
                       {"corpus": corpus.description, "terms_checked": checked,
                        "depth": depth})
