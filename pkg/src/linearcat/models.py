"""Finite models: categories carrying a sum structure, a product structure,
and a transformer family ``i`` between them.

Two instances are bundled.  ``FinPtSet`` has pointed sets as objects, the
wedge as sum and the cartesian product as product; its ``i`` is one-way, so
the model is prelinear but not partially linear.  ``FinCMon`` has finite
commutative monoids with the direct product playing both roles and the
identity carrier map as ``i``; there ``i`` is invertible.

Morphisms are stored as explicit graphs (tuples of carrier indices), and all
structure components (associators, unitors, ``i``) live in a table keyed by
component name and object tuple.  Tables are filled lazily but, once
computed, stay fixed; loading a model file may pre-seed arbitrary entries,
which is how fault injection works.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from .errors import ModelFileError, NotInvertibleInModel


class PtObj:
    """A pointed set {0, .., size-1} with basepoint 0."""

    __slots__ = ("size",)

    def __init__(self, size: int):
        self.size = size

    @property
    def name(self) -> str:
        return f"P{self.size}"

    def __repr__(self) -> str:
        return f"PtObj({self.size})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PtObj) and self.size == other.size

    def __hash__(self) -> int:
        return hash(("PtObj", self.size))


class CMonObj:
    """A commutative monoid with unit 0, either a base Cayley table or a
    lazily multiplied direct product of two others.

    Product objects never materialize their tables; multiplication recurses
    through the factors.  Equality is structural, so the two bracketings of
    a triple product are distinct (isomorphic) objects, as they should be.
    """

    __slots__ = ("key", "label", "size", "_table", "_factors", "_hash")

    def __init__(self, table=None, label=None, factors=None):
        if table is not None:
            self._table = tuple(tuple(row) for row in table)
            self._factors = None
            self.size = len(self._table)
            self.key = ("m", self._table)
        else:
            a, b = factors
            self._table = None
            self._factors = (a, b)
            self.size = a.size * b.size
            self.key = ("x", a.key, b.key)
        self.label = label
        self._hash = hash(self.key)

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self._factors:
            a, b = self._factors
            return f"({a.name}x{b.name})"
        return "M" + "".join(str(v) for row in self._table for v in row)

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        if self._table is None:
            self._table = tuple(
                tuple(self.mul(u, v) for v in range(self.size))
                for u in range(self.size))
        return self._table

    def mul(self, u: int, v: int) -> int:
        if self._table is not None:
            return self._table[u][v]
        a, b = self._factors
        nb = b.size
        return a.mul(u // nb, v // nb) * nb + b.mul(u % nb, v % nb)

    def __repr__(self) -> str:
        return f"CMonObj({self.name})"

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, CMonObj) and self.key == other.key)

    def __hash__(self) -> int:
        return self._hash


class Mor:
    """A morphism as an explicit graph on carrier indices."""

    __slots__ = ("dom", "cod", "graph", "_hash")

    def __init__(self, dom, cod, graph: tuple[int, ...]):
        self.dom = dom
        self.cod = cod
        self.graph = graph
        self._hash = hash((self.graph, dom, cod))

    def __call__(self, x: int) -> int:
        return self.graph[x]

    def __repr__(self) -> str:
        return f"Mor({self.dom!r} -> {self.cod!r}, {self.graph})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Mor) and self.graph == other.graph \
            and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        return self._hash


def _identity_graph(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _invert_mor(m: Mor) -> Mor:
    inv = [0] * len(m.graph)
    for x, y in enumerate(m.graph):
        inv[y] = x
    return Mor(m.cod, m.dom, tuple(inv))


class Model:
    """Common machinery shared by the bundled finite instances."""

    kind: str

    def __init__(self, objects, overrides=None):
        self.base_objects = tuple(objects)
        self._by_name = {o.name: o for o in self.base_objects}
        self._tables: dict[tuple, Mor] = {}
        self._hom_cache: dict[tuple, tuple[Mor, ...]] = {}
        self._pending_overrides = list(overrides or [])

    # -- bookkeeping ---------------------------------------------------------

    def object_by_name(self, name: str):
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(
                f"unknown object {name!r}; known: {sorted(self._by_name)}") from None

    def identity(self, obj) -> Mor:
        return Mor(obj, obj, _identity_graph(obj.size))

    def compose(self, g: Mor, f: Mor) -> Mor:
        if f.cod != g.dom:
            raise ValueError(f"cannot compose: {f.cod!r} != {g.dom!r}")
        gg = g.graph
        return Mor(f.dom, g.cod, tuple(gg[v] for v in f.graph))

    def hom(self, dom, cod) -> tuple[Mor, ...]:
        key = (dom, cod)
        cached = self._hom_cache.get(key)
        if cached is None:
            cached = tuple(sorted(self._enumerate_hom(dom, cod),
                                  key=lambda m: m.graph))
            self._hom_cache[key] = cached
        return cached

    def hom_count(self, dom, cod) -> int:
        return len(self.hom(dom, cod))

    # -- zero object and bangs -----------------------------------------------

    @property
    def zero_obj(self):
        return self._zero

    @property
    def one_obj(self):
        return self._zero

    def bang_from_zero(self, obj) -> Mor:
        return Mor(self.zero_obj, obj, (0,))

    def bang_to_one(self, obj) -> Mor:
        return Mor(obj, self.one_obj, (0,) * obj.size)

    # -- structure tables ------------------------------------------------------

    def _structure(self, name: str, objs: tuple) -> Mor:
        key = (name, objs)
        mor = self._tables.get(key)
        if mor is None:
            mor = self._compute_structure(name, objs)
            self._tables[key] = mor
        return mor

    def override_table(self, name: str, objs: tuple, graph: tuple[int, ...]) -> None:
        """Replace one structure component (fault injection hook)."""
        pristine = self._compute_structure(name, objs)
        if len(graph) != len(pristine.graph):
            raise ValueError(
                f"override for {name} at {tuple(o.name for o in objs)} needs"
                f" {len(pristine.graph)} entries, got {len(graph)}")
        self._tables[(name, objs)] = Mor(pristine.dom, pristine.cod, tuple(graph))

    def assoc_sum(self, a, b, c) -> Mor:
        return self._structure("assoc_sum", (a, b, c))

    def assoc_sum_inv(self, a, b, c) -> Mor:
        return self._structure("assoc_sum_inv", (a, b, c))

    def lunit_sum(self, a) -> Mor:
        return self._structure("lunit_sum", (a,))

    def lunit_sum_inv(self, a) -> Mor:
        return self._structure("lunit_sum_inv", (a,))

    def runit_sum(self, a) -> Mor:
        return self._structure("runit_sum", (a,))

    def runit_sum_inv(self, a) -> Mor:
        return self._structure("runit_sum_inv", (a,))

    def assoc_prod(self, a, b, c) -> Mor:
        return self._structure("assoc_prod", (a, b, c))

    def assoc_prod_inv(self, a, b, c) -> Mor:
        return self._structure("assoc_prod_inv", (a, b, c))

    def lunit_prod(self, a) -> Mor:
        return self._structure("lunit_prod", (a,))

    def lunit_prod_inv(self, a) -> Mor:
        return self._structure("lunit_prod_inv", (a,))

    def runit_prod(self, a) -> Mor:
        return self._structure("runit_prod", (a,))

    def runit_prod_inv(self, a) -> Mor:
        return self._structure("runit_prod_inv", (a,))

    def i_component(self, a, b) -> Mor:
        return self._structure("i", (a, b))

    def j_morphism(self) -> Mor:
        """The unique map from the sum unit to the product unit."""
        return self.bang_from_zero(self.one_obj)

    def i_inverse(self, a, b) -> Mor:
        """Two-sided inverse of ``i`` at (a, b); raises when there is none."""
        i = self.i_component(a, b)
        n = len(i.graph)
        if i.cod.size != n or len(set(i.graph)) != n:
            raise NotInvertibleInModel(
                f"i at ({a.name}, {b.name}) is not bijective:"
                f" |{i.dom.name}| = {i.dom.size}, |{i.cod.name}| = {i.cod.size}")
        candidate = _invert_mor(i)
        if not self.is_morphism(candidate):
            raise NotInvertibleInModel(
                f"the inverse graph of i at ({a.name}, {b.name}) is not a morphism")
        return candidate

    # -- hooks for the two instances ------------------------------------------

    def sum_obj(self, a, b):
        raise NotImplementedError

    def sum_mor(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def prod_obj(self, a, b):
        raise NotImplementedError

    def prod_mor(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def _enumerate_hom(self, dom, cod):
        raise NotImplementedError

    def is_morphism(self, m: Mor) -> bool:
        raise NotImplementedError

    def _compute_structure(self, name: str, objs: tuple) -> Mor:
        raise NotImplementedError


def _lex_pair_encode(b_size: int, a: int, b: int) -> int:
    return a * b_size + b


class FinPtSet(Model):
    """Pointed sets; sum is the wedge, product is the cartesian product.

    The wedge A+B is numbered basepoint first, then the non-base elements of
    A (keeping their indices), then the non-base elements of B shifted up by
    ``|A| - 1``.  The product is numbered lexicographically.
    """

    kind = "pointed_sets"

    def __init__(self, sizes=(1, 2, 3), overrides=None):
        super().__init__((PtObj(n) for n in sorted(set(sizes) | {1})), overrides)
        if any(o.size < 1 for o in self.base_objects):
            raise ValueError("pointed sets need at least a basepoint")
        self._zero = self.base_objects[0]
        assert self._zero.size == 1
        for name, objs, graph in self._pending_overrides:
            self.override_table(name, objs, graph)

    # wedge numbering helpers
    @staticmethod
    def _wedge_right(a: PtObj, y: int) -> int:
        return 0 if y == 0 else a.size - 1 + y

    def sum_obj(self, a: PtObj, b: PtObj) -> PtObj:
        return PtObj(a.size + b.size - 1)

    def sum_mor(self, f: Mor, g: Mor) -> Mor:
        a, b = f.dom, g.dom
        a2 = f.cod
        dom = self.sum_obj(a, b)
        cod = self.sum_obj(a2, g.cod)
        graph = [0] * dom.size
        fg, gg = f.graph, g.graph
        for x in range(1, a.size):
            graph[x] = fg[x]
        shift = a.size - 1
        shift2 = a2.size - 1
        for y in range(1, b.size):
            v = gg[y]
            graph[shift + y] = 0 if v == 0 else shift2 + v
        return Mor(dom, cod, tuple(graph))

    def prod_obj(self, a: PtObj, b: PtObj) -> PtObj:
        return PtObj(a.size * b.size)

    def prod_mor(self, f: Mor, g: Mor) -> Mor:
        a, b = f.dom, g.dom
        nb, nb2 = b.size, g.cod.size
        dom = self.prod_obj(a, b)
        cod = self.prod_obj(f.cod, g.cod)
        fg, gg = f.graph, g.graph
        graph = tuple(fg[v // nb] * nb2 + gg[v % nb] for v in range(dom.size))
        return Mor(dom, cod, graph)

    def _enumerate_hom(self, dom: PtObj, cod: PtObj):
        for rest in itertools.product(range(cod.size), repeat=dom.size - 1):
            yield Mor(dom, cod, (0,) + rest)

    def hom_count(self, dom: PtObj, cod: PtObj) -> int:
        # every basepoint-preserving assignment of the non-base points
        return cod.size ** (dom.size - 1)

    def is_morphism(self, m: Mor) -> bool:
        return len(m.graph) == m.dom.size and m.graph[0] == 0 \
            and all(0 <= v < m.cod.size for v in m.graph)

    def _compute_structure(self, name: str, objs: tuple) -> Mor:
        if name == "i":
            a, b = objs
            dom = self.sum_obj(a, b)
            cod = self.prod_obj(a, b)
            graph = [0] * dom.size
            for x in range(1, a.size):
                graph[x] = _lex_pair_encode(b.size, x, 0)
            for y in range(1, b.size):
                graph[self._wedge_right(a, y)] = _lex_pair_encode(b.size, 0, y)
            return Mor(dom, cod, tuple(graph))
        if name.startswith("assoc_sum"):
            a, b, c = objs
            bc = self.sum_obj(b, c)
            dom = self.sum_obj(a, bc)
            ab = self.sum_obj(a, b)
            cod = self.sum_obj(ab, c)
            graph = [0] * dom.size
            for x in range(1, a.size):
                graph[x] = x
            for y in range(1, b.size):
                graph[self._wedge_right(a, y)] = self._wedge_right(a, y)
            for z in range(1, c.size):
                graph[self._wedge_right(a, self._wedge_right(b, z))] = \
                    self._wedge_right(ab, z)
            mor = Mor(dom, cod, tuple(graph))
            return mor if name == "assoc_sum" else _invert_mor(mor)
        if name.startswith("assoc_prod"):
            a, b, c = objs
            bc = self.prod_obj(b, c)
            dom = self.prod_obj(a, bc)
            ab = self.prod_obj(a, b)
            cod = self.prod_obj(ab, c)
            nbc, nb, nc = bc.size, b.size, c.size
            graph = []
            for v in range(dom.size):
                x, yz = divmod(v, nbc)
                y, z = divmod(yz, nc)
                graph.append(_lex_pair_encode(nc, _lex_pair_encode(nb, x, y), z))
            mor = Mor(dom, cod, tuple(graph))
            return mor if name == "assoc_prod" else _invert_mor(mor)
        if name.startswith(("lunit_sum", "runit_sum", "lunit_prod", "runit_prod")):
            (a,) = objs
            if name.startswith("lunit_sum"):
                dom = self.sum_obj(self.zero_obj, a)
            elif name.startswith("runit_sum"):
                dom = self.sum_obj(a, self.zero_obj)
            elif name.startswith("lunit_prod"):
                dom = self.prod_obj(self.one_obj, a)
            else:
                dom = self.prod_obj(a, self.one_obj)
            mor = Mor(dom, a, _identity_graph(a.size))
            return mor if name.endswith(("sum", "prod")) else _invert_mor(mor)
        raise ValueError(f"unknown structure table {name!r}")


class FinCMon(Model):
    """Commutative monoids; both structures are the direct product and the
    transformer is the identity carrier map, hence invertible."""

    kind = "commutative_monoids"

    def __init__(self, objects=None, overrides=None):
        if objects is None:
            objects = all_commutative_monoids(3)
        super().__init__(objects, overrides)
        trivial = [o for o in self.base_objects if o.size == 1]
        if not trivial:
            raise ValueError("the trivial monoid must be present")
        self._zero = trivial[0]
        self._gen_cache: dict = {}
        self._prod_cache: dict = {}
        for name, objs, graph in self._pending_overrides:
            self.override_table(name, objs, graph)

    def _product(self, a: CMonObj, b: CMonObj) -> CMonObj:
        key = (a, b)
        p = self._prod_cache.get(key)
        if p is None:
            p = CMonObj(factors=(a, b))
            self._prod_cache[key] = p
        return p

    def sum_obj(self, a: CMonObj, b: CMonObj) -> CMonObj:
        return self._product(a, b)

    prod_obj = sum_obj

    def _pair_mor(self, f: Mor, g: Mor) -> Mor:
        nb, nb2 = g.dom.size, g.cod.size
        dom = self._product(f.dom, g.dom)
        cod = self._product(f.cod, g.cod)
        fg, gg = f.graph, g.graph
        graph = tuple(fg[v // nb] * nb2 + gg[v % nb] for v in range(dom.size))
        return Mor(dom, cod, graph)

    sum_mor = _pair_mor
    prod_mor = _pair_mor

    def _generators(self, m: CMonObj):
        """A generating set plus, per element, one exponent vector over it."""
        cached = self._gen_cache.get(m)
        if cached is not None:
            return cached
        gens: list[int] = []
        expr: dict[int, tuple[int, ...]] = {0: ()}
        table = m.table
        while len(expr) < m.size:
            nxt = min(x for x in range(m.size) if x not in expr)
            gens.append(nxt)
            expr = {k: v + (0,) * (len(gens) - len(v)) for k, v in expr.items()}
            expr[nxt] = tuple([0] * (len(gens) - 1) + [1])
            changed = True
            while changed:
                changed = False
                for a, ea in list(expr.items()):
                    for b, eb in list(expr.items()):
                        c = table[a][b]
                        if c not in expr:
                            expr[c] = tuple(x + y for x, y in zip(ea, eb))
                            changed = True
        exprs = tuple(expr[x] for x in range(m.size))
        result = (tuple(gens), exprs)
        self._gen_cache[m] = result
        return result

    def _enumerate_hom(self, dom: CMonObj, cod: CMonObj):
        if cod._factors is not None:
            # a map into a direct product is a homomorphism exactly when both
            # projections are, so recurse along the target
            c, d = cod._factors
            nd = d.size
            for fc in self.hom(dom, c):
                for fd in self.hom(dom, d):
                    graph = tuple(a * nd + b for a, b in zip(fc.graph, fd.graph))
                    yield Mor(dom, cod, graph)
            return
        gens, exprs = self._generators(dom)
        cod_table = cod.table
        seen = set()
        for images in itertools.product(range(cod.size), repeat=len(gens)):
            graph = []
            for x in range(dom.size):
                v = 0
                for g_img, e in zip(images, exprs[x]):
                    for _ in range(e):
                        v = cod_table[v][g_img]
                graph.append(v)
            graph_t = tuple(graph)
            if graph_t in seen:
                continue
            candidate = Mor(dom, cod, graph_t)
            if self.is_morphism(candidate):
                seen.add(graph_t)
                yield candidate

    def hom_count(self, dom: CMonObj, cod: CMonObj) -> int:
        if cod._factors is not None:
            c, d = cod._factors
            return self.hom_count(dom, c) * self.hom_count(dom, d)
        return len(self.hom(dom, cod))

    def is_morphism(self, m: Mor) -> bool:
        dom, cod = m.dom, m.cod
        if len(m.graph) != dom.size or m.graph[0] != 0:
            return False
        g = m.graph
        dt, ct = dom.table, cod.table
        return all(
            g[dt[a][b]] == ct[g[a]][g[b]]
            for a in range(dom.size) for b in range(dom.size))

    def _compute_structure(self, name: str, objs: tuple) -> Mor:
        if name == "i":
            a, b = objs
            p = self._product(a, b)
            return Mor(p, p, _identity_graph(p.size))
        if name.startswith("assoc"):
            a, b, c = objs
            bc = self._product(b, c)
            dom = self._product(a, bc)
            ab = self._product(a, b)
            cod = self._product(ab, c)
            nbc, nc, nb = bc.size, c.size, b.size
            graph = []
            for v in range(dom.size):
                x, yz = divmod(v, nbc)
                y, z = divmod(yz, nc)
                graph.append(_lex_pair_encode(nc, _lex_pair_encode(nb, x, y), z))
            mor = Mor(dom, cod, tuple(graph))
            return mor if name in ("assoc_sum", "assoc_prod") else _invert_mor(mor)
        if name.startswith(("lunit", "runit")):
            (a,) = objs
            unit = self.zero_obj
            dom = self._product(unit, a) if name.startswith("lunit") \
                else self._product(a, unit)
            mor = Mor(dom, a, _identity_graph(a.size))
            return mor if name.endswith(("sum", "prod")) else _invert_mor(mor)
        raise ValueError(f"unknown structure table {name!r}")


def all_commutative_monoids(max_size: int) -> tuple[CMonObj, ...]:
    """All commutative monoids of size <= max_size, one per iso class."""
    found = []
    for n in range(1, max_size + 1):
        canon_seen = set()
        for tbl in _commutative_tables(n):
            canon = _canonical_table(tbl)
            if canon in canon_seen:
                continue
            canon_seen.add(canon)
            found.append(canon)
    return tuple(CMonObj(tbl, f"M{k}_{len(tbl)}") for k, tbl in enumerate(found))


def _commutative_tables(n: int):
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for k in range(n):
            table[0][k] = k
            table[k][0] = k
        for (a, b), v in zip(cells, values):
            table[a][b] = v
            table[b][a] = v
        if all(table[table[a][b]][c] == table[a][table[b][c]]
               for a in range(n) for b in range(n) for c in range(n)):
            yield tuple(tuple(row) for row in table)


def _canonical_table(table) -> tuple[tuple[int, ...], ...]:
    n = len(table)
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        inv = [0] * n
        for idx, v in enumerate(p):
            inv[v] = idx
        relabeled = tuple(
            tuple(inv[table[p[a]][p[b]]] for b in range(n)) for a in range(n))
        if best is None or relabeled < best:
            best = relabeled
    return best


# ---------------------------------------------------------------------------
# Model files.
#
# A model file is a JSON document:
#
#   {"schema": 1, "kind": "pointed_sets", "objects": [1, 2, 3]}
#   {"schema": 1, "kind": "commutative_monoids",
#    "objects": [[0], [0,1,1,0], {"name": "Z2", "table": [0,1,1,0]}]}
#
# Pointed-set objects are sizes; monoid objects are row-major Cayley tables
# (flat integer arrays), optionally wrapped with a name.  An optional
# "overrides" list replaces structure components for fault injection:
#
#   {"overrides": [{"table": "lunit_sum", "objects": ["P2"], "graph": [0, 0]}]}

def load_model(path: str | Path) -> Model:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ModelFileError(f"cannot read model file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ModelFileError(f"model file is not valid JSON: {exc}") from exc
    return model_from_dict(doc)


def model_from_dict(doc) -> Model:
    if not isinstance(doc, dict):
        raise ModelFileError("model document must be a JSON object")
    kind = doc.get("kind")
    objects = doc.get("objects")
    if not isinstance(objects, list) or not objects:
        raise ModelFileError("model file needs a non-empty 'objects' list")
    if kind == "pointed_sets":
        if not all(isinstance(o, int) and o >= 1 for o in objects):
            raise ModelFileError("pointed_sets objects must be positive sizes")
        model = FinPtSet(objects)
    elif kind == "commutative_monoids":
        objs = [_parse_monoid(o, idx) for idx, o in enumerate(objects)]
        if not any(o.size == 1 for o in objs):
            objs.insert(0, CMonObj(((0,),), "T"))
        model = FinCMon(tuple(objs))
    else:
        raise ModelFileError(f"unknown model kind {kind!r}")
    overrides = doc.get("overrides", [])
    if not isinstance(overrides, list):
        raise ModelFileError("'overrides' must be a list")
    for ov in overrides:
        _install_override(model, ov)
    return model


def _parse_monoid(entry, idx: int) -> CMonObj:
    name = None
    flat = entry
    if isinstance(entry, dict):
        name = entry.get("name")
        flat = entry.get("table")
    if not isinstance(flat, list):
        raise ModelFileError(f"monoid #{idx} must be a flat Cayley table")
    n = round(len(flat) ** 0.5)
    if n == 0 or n * n != len(flat):
        raise ModelFileError(f"monoid #{idx}: table length {len(flat)} is not square")
    table = tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n))
    if any(not isinstance(v, int) or not 0 <= v < n for row in table for v in row):
        raise ModelFileError(f"monoid #{idx}: entries out of range")
    if any(table[0][k] != k or table[k][0] != k for k in range(n)):
        raise ModelFileError(f"monoid #{idx}: 0 is not a unit")
    if any(table[a][b] != table[b][a] for a in range(n) for b in range(n)):
        raise ModelFileError(f"monoid #{idx}: table is not commutative")
    if any(table[table[a][b]][c] != table[a][table[b][c]]
           for a in range(n) for b in range(n) for c in range(n)):
        raise ModelFileError(f"monoid #{idx}: table is not associative")
    return CMonObj(table, name or f"M{idx}")


def _install_override(model: Model, ov) -> None:
    if not isinstance(ov, dict) or "table" not in ov or "graph" not in ov:
        raise ModelFileError("override entries need 'table', 'objects', 'graph'")
    try:
        objs = tuple(model.object_by_name(n) for n in ov.get("objects", []))
    except KeyError as exc:
        raise ModelFileError(str(exc)) from exc
    try:
        model.override_table(ov["table"], objs, tuple(ov["graph"]))
    except (ValueError, TypeError) as exc:
        raise ModelFileError(f"bad override: {exc}") from exc
