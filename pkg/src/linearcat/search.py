"""Bounded-depth enumeration of canonical terms between words.

Words are encoded as nested tuples for speed: ``'H'``, ``'Z'``, ``'O'`` for
the leaves and ``(op, left, right)`` for nodes.  An elementary move applies
one generator at one position; terms between two words are exactly the move
paths between their encodings.

Enumerating every path of length <= depth is exponential, so the search is
pruned meet-in-the-middle: a backward distance table of radius depth // 2 is
computed from the target, and forward exploration drops any state that
provably cannot reach the target within the remaining budget.  The pruning
is exact: no path within the depth bound is ever lost.
"""

from __future__ import annotations

from dataclasses import dataclass

from .evaluate import eval_generator, eval_object
from .models import Model, Mor
from .terms import (ASSOC_PROD, ASSOC_SUM, I_GEN, J_GEN, LUNIT_PROD,
                    LUNIT_SUM, MODES, PARTIALLY_LINEAR, PRELINEAR, RUNIT_PROD,
                    RUNIT_SUM, CanonTerm, ElementaryTerm, Generator,
                    context_at, identity_term, render_term, vcompose)
from .words import (HOLE, ONE, PROD, SUM, ZERO, Hole, Sum, UnitOne,
                    UnitZero, Word, node)

# -- word keys ---------------------------------------------------------------

H, Z, O = "H", "Z", "O"


def to_key(w: Word):
    if isinstance(w, Hole):
        return H
    if isinstance(w, UnitZero):
        return Z
    if isinstance(w, UnitOne):
        return O
    op = SUM if isinstance(w, Sum) else PROD
    return (op, to_key(w.left), to_key(w.right))


_WORD_CACHE: dict = {H: HOLE, Z: ZERO, O: ONE}


def from_key(key) -> Word:
    w = _WORD_CACHE.get(key)
    if w is None:
        w = node(key[0], from_key(key[1]), from_key(key[2]))
        _WORD_CACHE[key] = w
    return w


_LEN_CACHE: dict = {H: 1, Z: 0, O: 0}


def key_length(key) -> int:
    n = _LEN_CACHE.get(key)
    if n is None:
        n = key_length(key[1]) + key_length(key[2])
        _LEN_CACHE[key] = n
    return n


def _replace(key, path: tuple[int, ...], new):
    if not path:
        return new
    op, left, right = key
    if path[0] == 0:
        return (op, _replace(left, path[1:], new), right)
    return (op, left, _replace(right, path[1:], new))


def _positions(key, path=()):
    yield path, key
    if isinstance(key, tuple):
        yield from _positions(key[1], path + (0,))
        yield from _positions(key[2], path + (1,))


# -- elementary moves ---------------------------------------------------------

# An edge is (path, kind, inverse, args) with args given as word keys.
Edge = tuple[tuple[int, ...], str, bool, tuple]

_MOVE_CACHE: dict = {}


def moves(key, mode: str) -> tuple[tuple[Edge, object], ...]:
    """All single elementary moves out of ``key`` in the given mode."""
    cached = _MOVE_CACHE.get((key, mode))
    if cached is not None:
        return cached
    out: list[tuple[Edge, object]] = []

    def add(path, kind, inverse, args, new_sub):
        out.append(((path, kind, inverse, args), _replace(key, path, new_sub)))

    for path, sub in _positions(key):
        if isinstance(sub, tuple):
            op, left, right = sub
            assoc = ASSOC_SUM if op == SUM else ASSOC_PROD
            if isinstance(right, tuple) and right[0] == op:
                add(path, assoc, False, (left, right[1], right[2]),
                    (op, (op, left, right[1]), right[2]))
            if isinstance(left, tuple) and left[0] == op:
                add(path, assoc, True, (left[1], left[2], right),
                    (op, left[1], (op, left[2], right)))
            if op == SUM:
                if left == Z:
                    add(path, LUNIT_SUM, False, (right,), right)
                if right == Z:
                    add(path, RUNIT_SUM, False, (left,), left)
                add(path, I_GEN, False, (left, right), (PROD, left, right))
            else:
                if left == O:
                    add(path, LUNIT_PROD, False, (right,), right)
                if right == O:
                    add(path, RUNIT_PROD, False, (left,), left)
                if mode == PARTIALLY_LINEAR:
                    add(path, I_GEN, True, (left, right), (SUM, left, right))
        elif sub == Z:
            add(path, J_GEN, False, (), O)
        elif sub == O and mode == PARTIALLY_LINEAR:
            add(path, J_GEN, True, (), Z)
        add(path, LUNIT_SUM, True, (sub,), (SUM, Z, sub))
        add(path, RUNIT_SUM, True, (sub,), (SUM, sub, Z))
        add(path, LUNIT_PROD, True, (sub,), (PROD, O, sub))
        add(path, RUNIT_PROD, True, (sub,), (PROD, sub, O))
    result = tuple(out)
    _MOVE_CACHE[(key, mode)] = result
    return result


def _predecessors(key, mode: str):
    """Keys with a single move into ``key`` (targets only, no edges)."""
    preds = []
    for path, sub in _positions(key):
        if isinstance(sub, tuple):
            op, left, right = sub
            # reverse of assoc forward: source was left-of-target reassociated
            if isinstance(left, tuple) and left[0] == op:
                preds.append(_replace(key, path, (op, left[1], (op, left[2], right))))
            if isinstance(right, tuple) and right[0] == op:
                preds.append(_replace(key, path, (op, (op, left, right[1]), right[2])))
            # reverse of unitor insertions (which are moves into bigger words)
            if op == SUM and left == Z:
                preds.append(_replace(key, path, right))
            if op == SUM and right == Z:
                preds.append(_replace(key, path, left))
            if op == PROD and left == O:
                preds.append(_replace(key, path, right))
            if op == PROD and right == O:
                preds.append(_replace(key, path, left))
            # reverse of i
            if op == PROD:
                preds.append(_replace(key, path, (SUM, left, right)))
            if op == SUM and mode == PARTIALLY_LINEAR:
                preds.append(_replace(key, path, (PROD, left, right)))
        elif sub == O:
            preds.append(_replace(key, path, Z))  # reverse of j
        elif sub == Z and mode == PARTIALLY_LINEAR:
            preds.append(_replace(key, path, O))
        # reverse of unitor removals: re-attach a unit
        preds.append(_replace(key, path, (SUM, Z, sub)))
        preds.append(_replace(key, path, (SUM, sub, Z)))
        preds.append(_replace(key, path, (PROD, O, sub)))
        preds.append(_replace(key, path, (PROD, sub, O)))
    return preds


_BT_CACHE: dict = {}


def backward_table(target_key, radius: int, mode: str) -> dict:
    """Distance-to-target for every key within ``radius`` reverse moves."""
    cache_key = (target_key, radius, mode)
    cached = _BT_CACHE.get(cache_key)
    if cached is not None:
        return cached
    dist = {target_key: 0}
    frontier = [target_key]
    for d in range(1, radius + 1):
        nxt = []
        for key in frontier:
            for pred in _predecessors(key, mode):
                if pred not in dist:
                    dist[pred] = d
                    nxt.append(pred)
        frontier = nxt
    _BT_CACHE[cache_key] = dist
    return dist


# -- exact pruned exploration --------------------------------------------------

@dataclass
class SearchGraph:
    """Static admitted subgraph for one (source, target, depth, mode)."""

    source_key: object
    target_key: object
    depth: int
    radius: int
    bt: dict
    edges: dict  # key -> tuple[(edge, target_key, bt_target or None), ...]


def _leaves(key) -> int:
    if isinstance(key, tuple):
        return _leaves(key[1]) + _leaves(key[2])
    return 1


def search_graph(v_key, w_key, depth: int, mode: str) -> SearchGraph:
    # A deep table toward a small target lets a bulky source prune at once;
    # between words of similar size a half-depth table is far cheaper.
    if _leaves(v_key) > _leaves(w_key) + 1:
        radius = depth - 1
    else:
        radius = depth // 2
    bt = backward_table(w_key, radius, mode)
    free_limit = depth - radius - 1  # deepest layer allowed outside the table
    edges: dict = {}
    g_min = {v_key: 0}
    frontier = [v_key]
    g = 0
    while frontier and g < depth:
        nxt = []
        for x in frontier:
            kept = []
            for edge, y in moves(x, mode):
                bty = bt.get(y)
                if bty is None:
                    if g + 1 > free_limit:
                        continue
                elif g + 1 + bty > depth:
                    continue
                kept.append((edge, y, bty))
                if y not in g_min:
                    g_min[y] = g + 1
                    nxt.append(y)
            edges[x] = tuple(kept)
        frontier = nxt
        g += 1
    for x in frontier:
        edges.setdefault(x, ())
    return SearchGraph(v_key, w_key, depth, radius, bt, edges)


def _edge_allowed(layer_out: int, bty, depth: int, radius: int) -> bool:
    if bty is None:
        return layer_out <= depth - radius - 1
    return layer_out + bty <= depth


def _model_caches(model: Model) -> dict:
    caches = getattr(model, "_search_caches", None)
    if caches is None:
        caches = {"obj": {}, "gen": {}, "edge": {}}
        model._search_caches = caches
    return caches


def eval_object_key(model: Model, key, objects: tuple):
    """Cached word-functor action on objects, keyed by word encoding."""
    cache = _model_caches(model)["obj"]
    ck = (key, objects)
    obj = cache.get(ck)
    if obj is None:
        obj = eval_object(model, from_key(key), objects)
        cache[ck] = obj
    return obj


def _generator_mor(model: Model, kind, inverse, args, objects) -> Mor:
    cache = _model_caches(model)["gen"]
    ck = (kind, inverse, args, objects)
    mor = cache.get(ck)
    if mor is None:
        gen = Generator(kind, tuple(from_key(a) for a in args), inverse)
        mor = eval_generator(model, gen, objects)
        cache[ck] = mor
    return mor


def edge_morphism(model: Model, x_key, edge: Edge, objects: tuple) -> Mor:
    """Evaluate one elementary move out of ``x_key`` at an object tuple."""
    cache = _model_caches(model)["edge"]
    ck = (x_key, edge, objects)
    mor = cache.get(ck)
    if mor is None:
        path, kind, inverse, args = edge
        mor = _edge_eval(model, x_key, path, kind, inverse, args, objects)
        cache[ck] = mor
    return mor


def _edge_eval(model, key, path, kind, inverse, args, objects) -> Mor:
    if not path:
        return _generator_mor(model, kind, inverse, args, objects)
    op, left, right = key
    nl = key_length(left)
    if path[0] == 0:
        sub = _edge_eval(model, left, path[1:], kind, inverse, args, objects[:nl])
        other = model.identity(eval_object_key(model, right, objects[nl:]))
        pair = (sub, other)
    else:
        other = model.identity(eval_object_key(model, left, objects[:nl]))
        sub = _edge_eval(model, right, path[1:], kind, inverse, args, objects[nl:])
        pair = (other, sub)
    return model.sum_mor(*pair) if op == SUM else model.prod_mor(*pair)


def elementary_from_edge(x_key, edge: Edge) -> ElementaryTerm:
    path, kind, inverse, args = edge
    context, _ = context_at(from_key(x_key), path)
    gen = Generator(kind, tuple(from_key(a) for a in args), inverse)
    return ElementaryTerm(context, gen)


@dataclass
class FloodResult:
    """Values of all depth-bounded canonical terms from source to target."""

    source: Mor | None  # identity at the evaluated source object
    target_obj: object
    values: dict  # value graph (tuple) -> layer of first realization
    parents: dict  # (key, graph) -> (prev_key, prev_graph, edge) | None

    def value_morphisms(self, model: Model) -> list[Mor]:
        return [Mor(self.source.dom, self.target_obj, g)
                for g in sorted(self.values)]

    def witness_term(self, graph: SearchGraph, value) -> CanonTerm:
        """Reconstruct one canonical term realizing ``value`` at the target."""
        if isinstance(value, Mor):
            value = value.graph
        state = (graph.target_key, value)
        steps = []
        while True:
            parent = self.parents[state]
            if parent is None:
                break
            prev_key, prev_graph, edge = parent
            steps.append((prev_key, edge))
            state = (prev_key, prev_graph)
        steps.reverse()
        if not steps:
            return identity_term(from_key(graph.source_key))
        term: CanonTerm | None = None
        for key, edge in steps:
            elem = elementary_from_edge(key, edge).to_canon()
            term = elem if term is None else vcompose(elem, term)
        return term


def value_flood(model: Model, graph: SearchGraph, objects: tuple) -> FloodResult:
    """Breadth-first flood over (word, value) states within the budget.

    Every canonical term from source to target with at most ``depth``
    elementary steps realizes one of the returned values, and every returned
    value is realized by such a term.  Values travel as raw graphs: all
    values arriving at one word share their boundary objects.
    """
    src_obj = eval_object_key(model, graph.source_key, objects)
    id_graph = tuple(range(src_obj.size))
    visited: dict = {graph.source_key: {id_graph: 0}}
    parents: dict = {(graph.source_key, id_graph): None}
    frontier = [(graph.source_key, id_graph)]
    layer = 0
    depth, radius = graph.depth, graph.radius
    free_limit = depth - radius - 1
    graph_edges = graph.edges
    edge_mor = edge_morphism
    while frontier and layer < depth:
        nxt = []
        layer_out = layer + 1
        for x, m in frontier:
            for edge, y, bty in graph_edges.get(x, ()):
                if (layer_out + bty > depth) if bty is not None \
                        else (layer_out > free_limit):
                    continue
                eg = edge_mor(model, x, edge, objects).graph
                my = tuple(eg[v] for v in m)
                bucket = visited.get(y)
                if bucket is None:
                    bucket = visited[y] = {}
                elif my in bucket:
                    continue
                bucket[my] = layer_out
                parents[(y, my)] = (x, m, edge)
                nxt.append((y, my))
        frontier = nxt
        layer = layer_out
    target_values = dict(visited.get(graph.target_key, {}))
    return FloodResult(Mor(src_obj, src_obj, id_graph),
                       eval_object_key(model, graph.target_key, objects),
                       target_values, parents)


# -- the term-list interface ----------------------------------------------------

def canonical_between(v: Word, w: Word, objects: tuple = (),
                      model: Model | None = None, depth: int = 1,
                      mode: str = PRELINEAR) -> list[CanonTerm]:
    """All canonical terms from ``v`` to ``w`` with at most ``depth``
    elementary steps, ordered lexicographically by their text form.

    The enumeration is symbolic; ``model`` and ``objects`` are accepted for
    interface compatibility and validated but do not influence the result.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    from .words import length as wlength
    if wlength(v) != wlength(w):
        raise ValueError("canonical terms only exist between words of equal length")
    if model is not None and objects and len(objects) != wlength(v):
        raise ValueError("object tuple length does not match the word length")
    v_key, w_key = to_key(v), to_key(w)
    graph = search_graph(v_key, w_key, depth, mode)
    out: list[CanonTerm] = []
    if v_key == w_key:
        out.append(identity_term(v))

    def dfs(x, g, chain):
        for edge, y, bty in graph.edges.get(x, ()):
            if not _edge_allowed(g + 1, bty, graph.depth, graph.radius):
                continue
            elem = elementary_from_edge(x, edge).to_canon()
            term = elem if chain is None else vcompose(elem, chain)
            if y == w_key:
                out.append(term)
            if g + 1 < depth:
                dfs(y, g + 1, term)

    dfs(v_key, 0, None)
    out.sort(key=render_term)
    return out


# -- word corpora ----------------------------------------------------------------

def words_with(n_holes: int, n_units: int) -> tuple[Word, ...]:
    """All words with exactly the given number of holes and unit leaves,
    deterministically ordered."""
    keys = sorted(_keys_with(n_holes, n_units), key=str)
    return tuple(from_key(k) for k in keys)


def _keys_with(n_holes: int, n_units: int):
    leaves = n_holes + n_units
    if leaves == 0:
        return []
    if leaves == 1:
        if n_holes == 1:
            return [H]
        return [Z, O]
    out = []
    for left_leaves in range(1, leaves):
        for h1 in range(0, n_holes + 1):
            u1 = left_leaves - h1
            if u1 < 0 or u1 > n_units:
                continue
            for lk in _keys_with(h1, u1):
                for rk in _keys_with(n_holes - h1, n_units - u1):
                    out.append((SUM, lk, rk))
                    out.append((PROD, lk, rk))
    return out


def pure_bracketings(op: str, n: int) -> tuple[Word, ...]:
    """All bracketings of an n-fold pure sum or product word."""
    return tuple(from_key(k) for k in sorted(_pure_keys(op, n), key=str))


def _pure_keys(op: str, n: int):
    if n == 1:
        return [H]
    out = []
    for split in range(1, n):
        for lk in _pure_keys(op, split):
            for rk in _pure_keys(op, n - split):
                out.append((op, lk, rk))
    return out
