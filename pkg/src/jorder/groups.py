"""Finite groups acting on algebras by automorphisms.

Groups are explicit multiplication tables over element indices; every axiom
is verified at construction, which is cheap at the supported orders. Actions
store one matrix per group element and are checked to be genuine unital
automorphisms composing according to the table.

Characters of an abelian group are read off the primitive idempotents of its
group algebra: over a field with enough roots of unity the group algebra is
split semisimple and commutative, each primitive idempotent spans a line on
which every group element acts by the character value. Missing roots of unity
surface as a non-split block, reported as RootsOfUnityUnavailable.
"""

import re

import numpy as np

from . import linalg
from .algebras import Algebra, Provenance, subalgebra_from_rows
from .decomp import complete_primitive_idempotents
from .errors import (
    BadCharacteristic,
    InvalidInput,
    NonAbelianGroup,
    NotQuiverCompatible,
    RootsOfUnityUnavailable,
)
from .modules import _check_automorphism

_ORDER_CAP = 64


class FiniteGroup:
    """Group on indices 0..n-1 given by its multiplication table."""

    def __init__(self, table, labels=None, label="G"):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("multiplication table must be square")
        n = table.shape[0]
        if n == 0 or n > _ORDER_CAP:
            raise ValueError(f"group order must lie in 1..{_ORDER_CAP}")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries must be element indices")
        left = table[table, :]  # left[i,j,k] = (ij)k
        right = np.empty_like(left)
        for i in range(n):
            right[i] = table[i, table]  # right[i,j,k] = i(jk)
        if not (left == right).all():
            raise ValueError("table is not associative")
        identity = None
        for e in range(n):
            if (table[e] == np.arange(n)).all() and (table[:, e] == np.arange(n)).all():
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        inverse = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            hits = np.nonzero(table[i] == identity)[0]
            if len(hits) != 1 or table[hits[0], i] != identity:
                raise ValueError("table has a non-invertible element")
            inverse[i] = hits[0]
        self.multiplication_table = table
        self.order = n
        self.identity_index = identity
        self.inverse_table = inverse
        self.labels = list(labels) if labels else [f"g{i}" for i in range(n)]
        if len(self.labels) != n:
            raise ValueError("label count must match the order")
        self.label = label

    def mul(self, i, j):
        return int(self.multiplication_table[i, j])

    def inv(self, i):
        return int(self.inverse_table[i])

    def is_abelian(self):
        return bool((self.multiplication_table == self.multiplication_table.T).all())

    def element_order(self, i):
        k, acc = 1, i
        while acc != self.identity_index:
            acc = self.mul(acc, i)
            k += 1
        return k

    def __repr__(self):
        return f"FiniteGroup({self.label}, order {self.order})"

    @staticmethod
    def cyclic(n):
        table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
        labels = ["e"] + [f"c^{k}" if k > 1 else "c" for k in range(1, n)]
        return FiniteGroup(table, labels, label=f"C{n}")

    @staticmethod
    def trivial():
        return FiniteGroup([[0]], ["e"], label="C1")


class AlgebraAction:
    """A finite group acting on an algebra by verified automorphisms."""

    def __init__(self, group, algebra, automorphisms, check=True):
        self.group = group
        self.algebra = algebra
        field = algebra.field
        mats = field.canon(np.stack([np.asarray(m) for m in automorphisms]))
        if mats.shape != (group.order, algebra.dim, algebra.dim):
            raise ValueError("need one square matrix per group element")
        self.matrices = mats
        if check:
            e = group.identity_index
            if not field.eq(mats[e], field.eye(algebra.dim)):
                raise ValueError("identity element must act as the identity matrix")
            for g in range(group.order):
                _check_automorphism(algebra, mats[g])
            for i in range(group.order):
                for j in range(group.order):
                    lhs = field.canon(field.matmul(mats[i], mats[j]))
                    if not field.eq(lhs, mats[group.mul(i, j)]):
                        raise ValueError("matrices do not compose along the group law")

    def matrix(self, g):
        return self.matrices[g]

    def apply(self, g, vec):
        return self.algebra.field.canon(
            self.algebra.field.matmul(self.matrices[g], np.asarray(vec).reshape(-1))
        )

    @staticmethod
    def trivial(algebra):
        return AlgebraAction(
            FiniteGroup.trivial(), algebra, [algebra.field.eye(algebra.dim)]
        )


def invariant_subalgebra(act):
    """(A^G, inclusion rows): the fixed subalgebra of the action.

    The radical of A^G is recomputed by the generic criterion; when the group
    order is invertible in the field it must coincide with A^G intersect
    rad A, and this is cross-asserted.
    """
    a, field = act.algebra, act.algebra.field
    blocks = [
        field.sub(act.matrices[g], field.eye(a.dim))
        for g in range(act.group.order)
        if g != act.group.identity_index
    ]
    if blocks:
        ns = linalg.nullspace(field, field.canon(np.concatenate(blocks, axis=0)))
        rows = linalg.row_basis(field, ns.T)
    else:
        rows = field.eye(a.dim)
    sub = subalgebra_from_rows(
        a,
        rows,
        label=f"{a.label}^{act.group.label}",
        provenance=Provenance("invariants", {"action": act}),
    )
    p = field.char
    if p == 0 or act.group.order % p != 0:
        expected = linalg.intersect_row_spaces(field, a.radical_rows(), sub.inclusion_rows)
        lifted = field.canon(field.matmul(sub.radical_rows(), sub.inclusion_rows)) \
            if sub.radical_rows().shape[0] else field.zeros((0, a.dim))
        lifted = linalg.row_basis(field, lifted)
        if expected.shape != lifted.shape or not field.eq(expected, lifted):
            raise AssertionError("invariant radical disagrees with rad(A) intersection")
    return sub, sub.inclusion_rows


def group_algebra(group, field):
    """The group algebra k[G] with basis indexed by group elements."""
    n = group.order
    table = field.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            table[i, j, group.mul(i, j)] = field.one
    unit = field.zeros(n)
    unit[group.identity_index] = field.one
    return Algebra(
        field,
        table,
        unit,
        list(group.labels),
        generators=[field.eye(n)[i] for i in range(n)],
        provenance=Provenance("group_algebra", {"group": group}),
        label=f"k[{group.label}]",
        check_associativity="skip",  # inherited from the verified group law
    )


def _characters(group, field):
    """All characters G -> k*, sorted deterministically; abelian split case.

    Every character corresponds to a primitive idempotent of k[G]; a shortage
    of idempotents means some simple block is a proper field extension, which
    happens exactly when k lacks the needed roots of unity.
    """
    kg = group_algebra(group, field)
    if kg.radical_rows().shape[0]:
        raise BadCharacteristic("group algebra is not semisimple in this characteristic")
    es = complete_primitive_idempotents(kg, seed=0)
    if len(es) < group.order:
        raise RootsOfUnityUnavailable(
            f"{field.name} lacks a primitive root of unity for {group.label}"
        )
    chars = []
    for e in es:
        support = int(np.flatnonzero(np.asarray(e) != field.zero)[0])
        denom = field.inv_scalar(e[support])
        values = []
        for g in range(group.order):
            prod = kg.mul(field.eye(group.order)[g], e)
            chi = field.scalar(prod[support] * denom)
            if not field.eq(prod, field.smul(chi, e)):
                raise AssertionError("group element does not act by a scalar")
            values.append(chi)
        chars.append(tuple(values))
    chars.sort(key=lambda chi: [field.scalar_to_str(c) for c in chi])
    return chars


def isotypic_decomposition(act):
    """[(character, rows)] with A_chi = {a : g a = chi(g) a}, zero parts dropped.

    Requires an abelian group, invertible order, and enough roots of unity.
    Asserts the components fill A, the trivial component is A^G, and each
    component is stable under both-sided multiplication by A^G.
    """
    group, a, field = act.group, act.algebra, act.algebra.field
    if not group.is_abelian():
        raise NonAbelianGroup("isotypic decomposition needs an abelian group")
    p = field.char
    if p != 0 and group.order % p == 0:
        raise BadCharacteristic(f"|{group.label}| vanishes in {field.name}")
    chars = _characters(group, field)
    components = []
    total = 0
    one = field.one
    for chi in chars:
        blocks = [
            field.sub(act.matrices[g], field.smul(chi[g], field.eye(a.dim)))
            for g in range(group.order)
            if g != group.identity_index
        ]
        if not blocks:
            rows = field.eye(a.dim)
        else:
            ns = linalg.nullspace(field, field.canon(np.concatenate(blocks, axis=0)))
            rows = linalg.row_basis(field, ns.T)
        if rows.shape[0] == 0:
            continue
        components.append((chi, rows))
        total += rows.shape[0]
    if total != a.dim:
        raise AssertionError("isotypic components do not fill the algebra")
    trivial = [rows for chi, rows in components if all(c == one for c in chi)]
    inv_rows = invariant_subalgebra(act)[1]
    if len(trivial) != 1 or trivial[0].shape != inv_rows.shape or \
            not field.eq(trivial[0], inv_rows):
        raise AssertionError("trivial component differs from the invariant subalgebra")
    for _, rows in components:
        for u in inv_rows:
            for r in rows:
                if not linalg.in_row_span(field, rows, a.mul(u, r)):
                    raise AssertionError("component is not stable under left A^G")
                if not linalg.in_row_span(field, rows, a.mul(r, u)):
                    raise AssertionError("component is not stable under right A^G")
    return components


def skew_group_algebra(act):
    """(A*G, embedding rows): basis a_i * g with (a*g)(b*h) = a g(b) * gh.

    The radical is installed structurally as rad(A) tensor k[G] when |G| is
    invertible in the field (and then verified like every structural radical);
    otherwise it is recomputed by the generic criterion.
    """
    a, group, field = act.algebra, act.group, act.algebra.field
    d, n = a.dim, group.order
    dim = d * n
    table = field.zeros((dim, dim, dim))
    for g in range(n):
        # C[i, j, k] = coords of a_i * (g . a_j) over the algebra basis
        image = act.matrices[g]  # columns are g(a_j)
        c = np.tensordot(a.table, image, axes=([1], [0])).transpose(0, 2, 1)
        c = field.canon(c)
        for h in range(n):
            gh = group.mul(g, h)
            # strided assignment fills [(i,g),(j,h),(k,gh)] = C[i,j,k]
            table[g::n, h::n, gh::n] = c
    unit = field.zeros(dim)
    e = group.identity_index
    for k in range(d):
        unit[k * n + e] = a.unit[k]
    labels = [f"{a.labels[i]}*{group.labels[g]}" for i in range(d) for g in range(n)]
    idempotents = None
    if a.idempotents is not None:
        idempotents = []
        for ev in a.idempotents:
            vec = field.zeros(dim)
            for k in range(d):
                vec[k * n + e] = ev[k]
            idempotents.append(vec)
    generators = []
    for gen in a.generators:
        vec = field.zeros(dim)
        for k in range(d):
            vec[k * n + e] = gen[k]
        generators.append(vec)
    for g in range(n):
        vec = field.zeros(dim)
        for k in range(d):
            vec[k * n + g] = a.unit[k]
        generators.append(vec)
    rad_rows = None
    p = field.char
    if p == 0 or n % p != 0:
        base = a.radical_rows()
        if base.shape[0]:
            rad_rows = field.zeros((base.shape[0] * n, dim))
            for r in range(base.shape[0]):
                for g in range(n):
                    rad_rows[r * n + g, g::n] = base[r]
        else:
            rad_rows = field.zeros((0, dim))
    skew = Algebra(
        field,
        table,
        unit,
        labels,
        idempotents=idempotents,
        idempotents_primitive=False,
        generators=generators,
        radical_rows=rad_rows,
        provenance=Provenance("skew", {"action": act}),
        label=f"{a.label}*{group.label}",
    )
    embedding = field.zeros((d, dim))
    for k in range(d):
        embedding[k, k * n + e] = field.one
    return skew, embedding


def verify_free_quiver_action(act, pres):
    """True iff the action permutes the quiver freely (no fixed vertex/arrow).

    The algebra must come from the given presentation so basis positions can
    be read off its path degrees. Raises NotQuiverCompatible when some
    automorphism fails to permute vertex idempotents or arrow lines.
    """
    a, field = act.algebra, act.algebra.field
    prov = a.provenance
    if prov.kind != "quiver" or prov.data.get("presentation") is not pres:
        raise NotQuiverCompatible("algebra was not built from the given presentation")
    degrees = prov.data["degrees"]
    vertex_pos = [i for i, (deg, _) in enumerate(degrees) if deg == 0]
    arrow_pos = [i for i, (deg, _) in enumerate(degrees) if deg == 1]
    free = True
    for g in range(act.group.order):
        if g == act.group.identity_index:
            continue
        m = act.matrices[g]
        for v in vertex_pos:
            col = m[:, v]
            support = np.flatnonzero(np.asarray(col) != field.zero)
            if len(support) != 1 or int(support[0]) not in vertex_pos:
                raise NotQuiverCompatible("a vertex idempotent is not sent to a vertex")
            if int(support[0]) == v:
                free = False
        for apos in arrow_pos:
            col = m[:, apos]
            support = np.flatnonzero(np.asarray(col) != field.zero)
            if len(support) != 1 or int(support[0]) not in arrow_pos:
                raise NotQuiverCompatible("an arrow is not sent to an arrow line")
            if int(support[0]) == apos:
                free = False
    return free


_CLAUSE = re.compile(r"^\s*(\S+)\s*->\s*(.+?)\s*$")
_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*?\s+)?(\S+)$")


def _parse_combo(field, labels, text, where):
    """Signed linear combination of basis labels, as a coordinate vector."""
    vec = field.zeros(len(labels))
    chunks = re.findall(r"[+-]?[^+-]+", text.strip())
    if not chunks:
        raise InvalidInput(f"{where}: empty combination")
    for chunk in chunks:
        chunk = chunk.strip()
        sign = field.one
        if chunk.startswith("-"):
            sign = field.scalar(-1)
            chunk = chunk[1:].strip()
        elif chunk.startswith("+"):
            chunk = chunk[1:].strip()
        m = _TERM.match(chunk)
        if not m:
            raise InvalidInput(f"{where}: cannot parse term {chunk!r}")
        coeff = field.scalar_from_str(m.group(1)) if m.group(1) else field.one
        label = m.group(2)
        if label not in labels:
            raise InvalidInput(f"{where}: unknown basis label {label!r}")
        idx = labels.index(label)
        vec[idx] = field.scalar(vec[idx] + sign * coeff)
    return field.canon(vec)


def action_algebra_ref(text):
    """The algebra reference named on the first `algebra` line."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("algebra "):
            return line[len("algebra "):].strip()
        raise InvalidInput("action file must start with an `algebra` line")
    raise InvalidInput("action file has no `algebra` line")


def parse_action(text, algebra, order_cap=_ORDER_CAP):
    """Action file -> AlgebraAction, closing the generators into a group.

    Format: an `algebra <ref>` line, then one `auto <name>: l -> combo, ...`
    line per generator; basis labels not mentioned map to themselves. The
    generated matrix group is closed by breadth-first products up to the cap.
    """
    field = algebra.field
    gens = []
    saw_ref = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        if line.startswith("algebra "):
            if saw_ref:
                raise InvalidInput(f"{where}: duplicate algebra line")
            saw_ref = True
            continue
        if not line.startswith("auto "):
            raise InvalidInput(f"{where}: expected an `auto` line")
        body = line[len("auto "):]
        if ":" not in body:
            raise InvalidInput(f"{where}: missing `:` after the generator name")
        name, rest = body.split(":", 1)
        name = name.strip()
        if not name:
            raise InvalidInput(f"{where}: empty generator name")
        mat = field.eye(algebra.dim)
        seen = set()
        for clause in rest.split(","):
            m = _CLAUSE.match(clause)
            if not m:
                raise InvalidInput(f"{where}: cannot parse clause {clause.strip()!r}")
            label = m.group(1)
            if label not in algebra.labels:
                raise InvalidInput(f"{where}: unknown basis label {label!r}")
            if label in seen:
                raise InvalidInput(f"{where}: duplicate image for {label!r}")
            seen.add(label)
            mat[:, algebra.labels.index(label)] = _parse_combo(
                field, algebra.labels, m.group(2), where
            )
        gens.append((name, field.canon(mat)))
    if not saw_ref:
        raise InvalidInput("action file has no `algebra` line")
    if not gens:
        raise InvalidInput("action file defines no generators")

    def key(m):
        return tuple(field.scalar_to_str(x) for x in np.asarray(m).reshape(-1))

    identity = field.eye(algebra.dim)
    elements = [identity]
    index = {key(identity): 0}
    labels = ["e"]
    frontier = [0]
    while frontier:
        nxt = []
        for pos in frontier:
            for name, gmat in gens:
                prod = field.canon(field.matmul(elements[pos], gmat))
                k = key(prod)
                if k not in index:
                    if len(elements) >= order_cap:
                        raise InvalidInput(
                            f"generated group exceeds the order cap {order_cap}"
                        )
                    index[k] = len(elements)
                    word = name if pos == 0 else f"{labels[pos]}*{name}"
                    labels.append(word)
                    elements.append(prod)
                    nxt.append(index[k])
        frontier = nxt
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            prod = field.canon(field.matmul(elements[i], elements[j]))
            k = key(prod)
            if k not in index:
                raise InvalidInput("generated set is not closed; cap too small?")
            table[i, j] = index[k]
    names = ",".join(name for name, _ in gens)
    group = FiniteGroup(table, labels, label=f"<{names}>")
    return AlgebraAction(group, algebra, elements)
