"""Matrix presentations of morphisms from sum words to product words."""

from __future__ import annotations

from dataclasses import dataclass

from .checks import CheckReport
from .errors import IntegrityError
from .evaluate import eval_object, inclusion, is_pure_word, projection, zero_morphism
from .models import Model, Mor
from .search import pure_bracketings, search_graph, to_key, value_flood
from .terms import PRELINEAR
from .words import PROD, SUM, Word, length, render_word


@dataclass(frozen=True)
class MatrixPresentation:
    src_word: Word
    src_objects: tuple
    tgt_word: Word
    tgt_objects: tuple
    entries: tuple[tuple[Mor, ...], ...]  # entries[row][col]

    @property
    def rows(self) -> int:
        return len(self.tgt_objects)

    @property
    def cols(self) -> int:
        return len(self.src_objects)

    def entry_key(self) -> tuple:
        return tuple(tuple(m.graph for m in row) for row in self.entries)

    def render(self) -> str:
        cells = [[",".join(str(v) for v in m.graph) for m in row]
                 for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(
            "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _validate_words(src, tgt):
    src_word, src_objects = src
    tgt_word, tgt_objects = tgt
    if not is_pure_word(src_word, SUM):
        raise ValueError(f"matrix source must be a pure sum word, got {render_word(src_word)}")
    if not is_pure_word(tgt_word, PROD):
        raise ValueError(f"matrix target must be a pure product word, got {render_word(tgt_word)}")
    if length(src_word) != len(src_objects) or length(tgt_word) != len(tgt_objects):
        raise ValueError("object tuple lengths must match the word lengths")


def matrix_of(model: Model, f: Mor, src, tgt) -> MatrixPresentation:
    """Entries are projection-then-f-then-inclusion composites."""
    _validate_words(src, tgt)
    src_word, src_objects = src
    tgt_word, tgt_objects = tgt
    if f.dom != eval_object(model, src_word, src_objects):
        raise ValueError("morphism domain does not match the source word")
    if f.cod != eval_object(model, tgt_word, tgt_objects):
        raise ValueError("morphism codomain does not match the target word")
    incs = [inclusion(model, src_word, src_objects, l + 1)
            for l in range(len(src_objects))]
    projs = [projection(model, tgt_word, tgt_objects, k + 1)
             for k in range(len(tgt_objects))]
    entries = tuple(
        tuple(model.compose(pk, model.compose(f, il)) for il in incs)
        for pk in projs)
    return MatrixPresentation(src_word, src_objects, tgt_word, tgt_objects, entries)


def identity_matrix(model: Model, objects: tuple, src_word: Word,
                    tgt_word: Word) -> MatrixPresentation:
    """Identities on the diagonal, zero morphisms elsewhere."""
    _validate_words((src_word, objects), (tgt_word, objects))
    if length(src_word) != length(tgt_word):
        raise ValueError("identity matrix must be square")
    entries = tuple(
        tuple(model.identity(objects[k]) if k == l
              else zero_morphism(model, objects[l], objects[k])
              for l in range(len(objects)))
        for k in range(len(objects)))
    return MatrixPresentation(src_word, objects, tgt_word, objects, entries)


def _realization_map(model: Model, src, tgt) -> dict:
    """matrix entry-key -> unique realizing morphism, for one boundary."""
    cache = getattr(model, "_realize_cache", None)
    if cache is None:
        cache = {}
        model._realize_cache = cache
    key = (src, tgt)
    table = cache.get(key)
    if table is not None:
        return table
    src_word, src_objects = src
    tgt_word, tgt_objects = tgt
    dom = eval_object(model, src_word, src_objects)
    cod = eval_object(model, tgt_word, tgt_objects)
    table = {}
    for f in model.hom(dom, cod):
        sig = matrix_of(model, f, src, tgt).entry_key()
        if sig in table:
            raise IntegrityError(
                f"two morphisms share one matrix presentation between"
                f" {render_word(src_word)} and {render_word(tgt_word)}:"
                f" {table[sig].graph} and {f.graph}")
        table[sig] = f
    cache[key] = table
    return table


def realize(model: Model, p: MatrixPresentation) -> Mor | None:
    """The unique morphism presented by ``p``, or ``None`` if there is none.

    Uniqueness is guaranteed by joint epimorphy of inclusions and joint
    monomorphy of projections; finding two realizers raises
    :class:`IntegrityError`.
    """
    table = _realization_map(model, (p.src_word, p.src_objects),
                             (p.tgt_word, p.tgt_objects))
    return table.get(p.entry_key())


def coherence_identity_check(model: Model, n: int, objects: tuple,
                             depth: int = 6, mode: str = PRELINEAR) -> CheckReport:
    """For every sum bracketing to every product bracketing of length ``n``:
    all depth-bounded canonical terms must evaluate to one morphism whose
    matrix is the identity matrix."""
    if not 1 <= n <= 3:
        raise ValueError("the identity-matrix sweep is desk scale: n must be 1..3")
    if len(objects) != n:
        raise ValueError("need exactly n objects")
    law = f"coherence-identity-matrix/n={n}"
    for v in pure_bracketings(SUM, n):
        for w in pure_bracketings(PROD, n):
            graph = search_graph(to_key(v), to_key(w), depth, mode)
            flood = value_flood(model, graph, objects)
            if not flood.values:
                return CheckReport(law, False, {
                    "source": render_word(v), "target": render_word(w),
                    "reason": f"no canonical term within depth {depth}"})
            if len(flood.values) > 1:
                terms = [str(flood.witness_term(graph, g)) for g in flood.values]
                return CheckReport(law, False, {
                    "source": render_word(v), "target": render_word(w),
                    "reason": "two canonical terms evaluate differently",
                    "objects": [o.name for o in objects],
                    "terms": terms,
                    "values": [list(g) for g in flood.values]})
            [value] = flood.value_morphisms(model)
            got = matrix_of(model, value, (v, objects), (w, objects))
            want = identity_matrix(model, objects, v, w)
            if got.entry_key() != want.entry_key():
                return CheckReport(law, False, {
                    "source": render_word(v), "target": render_word(w),
                    "objects": [o.name for o in objects],
                    "matrix": [[list(m.graph) for m in row] for row in got.entries],
                    "reason": "canonical morphism matrix is not the identity"})
    return CheckReport(law, True, None, {"objects": [o.name for o in objects]})
