"""Finite-dimensional associative unital algebras by structure constants.

The multiplication table T is indexed so T[i, j] holds the coordinates of
basis_i * basis_j, where the product applies the right factor first (maps
compose right to left). Construction is validating: the unit laws always, the
full associativity sweep up to a dimension cap (seeded spot checks above it,
where every constructor is associative by construction anyway), plus ideal,
nilpotency, and semisimple-quotient checks for whatever radical description
the constructor supplies.

Radical criteria: the trace bilinear form (valid in characteristic zero and
whenever p exceeds the size of the faithful representation), and for small p
a layered chain of characteristic-polynomial-coefficient forms c_{p^(k-1)}
whose kernels descend to the radical in floor(log_p n) + 1 steps. The chain
runs on whatever faithful representation is cheapest, which for endomorphism
algebras is the module itself rather than the regular representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import (
    IdealIsWholeAlgebra,
    NotFiniteDimensional,
    RadicalUnavailable,
)
from .fields import GFField
from .polynomials import charpoly_coefficient
from .quivers import Path, Quiver, QuiverPresentation, concat_paths, trivial_path

_FULL_ASSOC_CAP_GF = 40
_FULL_ASSOC_CAP_EXACT = 12
_DIM_CAP = 4096


@dataclass
class Provenance:
    kind: str
    data: dict = dc_field(default_factory=dict)


class Algebra:
    """Structure-constant algebra over GF(p) or the rationals."""

    def __init__(
        self,
        field,
        table,
        unit,
        labels=None,
        *,
        idempotents=None,
        idempotents_primitive=False,
        generators=None,
        radical_rows=None,
        provenance=None,
        label="A",
        check_associativity="auto",
        verify_radical=True,
    ):
        self.field = field
        self.table = field.canon(table)
        if self.table.ndim != 3 or len(set(self.table.shape)) != 1:
            raise ValueError("structure constants must form a cubic array")
        self.dim = self.table.shape[0]
        self.unit = field.vec(unit)
        self.labels = list(labels) if labels else [f"x{i}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise ValueError("label count must match dimension")
        self.idempotents = [field.vec(e) for e in idempotents] if idempotents else None
        self.idempotents_primitive = bool(idempotents_primitive and self.idempotents)
        self.generators = [field.vec(g) for g in generators] if generators else [
            field.canon(np.eye(self.dim, dtype=object if field.char == 0 else np.int64)[i])
            for i in range(self.dim)
        ]
        self.provenance = provenance or Provenance("structure_constants")
        self.label = label
        self._opposite = None
        self._radical_rows = None
        self._radical_powers = None
        self._check_unit()
        self._check_associativity(check_associativity)
        self._check_generators()
        if self.idempotents is not None:
            self._check_idempotent_family()
        if radical_rows is not None:
            rows = linalg.row_basis(field, field.canon(np.atleast_2d(radical_rows)))
            if verify_radical:
                self._verify_radical(rows)
            self._radical_rows = rows

    # ---- basic arithmetic -------------------------------------------------

    def basis_vector(self, i):
        v = self.field.zeros((self.dim,))
        v[i] = self.field.one
        return v

    def mul(self, x, y):
        """Product x*y (y acts first under the composition convention)."""
        tmp = np.tensordot(x, self.table, axes=(0, 0))
        return self.field.canon(np.tensordot(y, tmp, axes=(0, 0)))

    def left_mult_matrix(self, x):
        return self.field.canon(np.tensordot(x, self.table, axes=(0, 0)).T)

    def right_mult_matrix(self, y):
        return self.field.canon(np.tensordot(y, self.table, axes=(0, 1)).T)

    def left_regular_mats(self):
        return self.field.canon(self.table.transpose(0, 2, 1))

    def right_regular_mats(self):
        return self.field.canon(self.table.transpose(1, 2, 0))

    def power(self, x, k):
        acc = self.unit
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def is_commutative(self):
        return self.field.eq(self.table, self.table.transpose(1, 0, 2))

    def label_of(self, i):
        return self.labels[i]

    def element_to_str(self, v):
        v = self.field.vec(v)
        parts = []
        for i in range(self.dim):
            if v[i] != self.field.zero:
                c = self.field.scalar_to_str(v[i])
                parts.append(self.labels[i] if c == "1" else f"{c}*{self.labels[i]}")
        return " + ".join(parts) if parts else "0"

    # ---- validation -------------------------------------------------------

    def _check_unit(self):
        lu = np.tensordot(self.unit, self.table, axes=(0, 0))
        ru = np.tensordot(self.unit, self.table, axes=(0, 1))
        eye = self.field.eye(self.dim)
        if not (self.field.eq(self.field.canon(lu), eye) and self.field.eq(self.field.canon(ru), eye)):
            raise ValueError("unit element fails the unit laws")

    def _check_associativity(self, mode):
        cap = _FULL_ASSOC_CAP_GF if isinstance(self.field, GFField) else _FULL_ASSOC_CAP_EXACT
        if mode == "skip":
            return
        if mode == "full" or (mode == "auto" and self.dim <= cap):
            t = self.table
            left = np.tensordot(t, t, axes=([2], [0]))  # (i,j,k,l)
            right = np.tensordot(t, t, axes=([2], [1])).transpose(2, 0, 1, 3)
            if not self.field.eq(self.field.canon(left), self.field.canon(right)):
                raise ValueError("multiplication table is not associative")
            return
        gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence(0)))
        for _ in range(200):
            x = self.field.rand_mat(gen, 1, self.dim).reshape(-1)
            y = self.field.rand_mat(gen, 1, self.dim).reshape(-1)
            z = self.field.rand_mat(gen, 1, self.dim).reshape(-1)
            if not self.field.eq(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z))):
                raise ValueError("multiplication table is not associative")

    def _check_generators(self):
        span = linalg.row_basis(
            self.field, np.concatenate([self.unit.reshape(1, -1), np.array(self.generators)], axis=0)
        )
        while True:
            products = []
            for g in self.generators:
                lg = self.left_mult_matrix(g)
                rg = self.right_mult_matrix(g)
                products.append(self.field.matmul(span, lg.T))
                products.append(self.field.matmul(span, rg.T))
            stacked = np.concatenate([span] + products, axis=0)
            new_span = linalg.row_basis(self.field, stacked)
            if new_span.shape[0] == span.shape[0]:
                break
            span = new_span
        if span.shape[0] != self.dim:
            raise ValueError("declared generators do not generate the algebra")

    def _check_idempotent_family(self):
        total = self.field.zeros((self.dim,))
        for i, e in enumerate(self.idempotents):
            if not self.field.eq(self.mul(e, e), e):
                raise ValueError(f"family element {i} is not idempotent")
            total = self.field.canon(self.field.add(total, e))
            for j, f in enumerate(self.idempotents):
                if i != j and not self.field.is_zero(self.mul(e, f)):
                    raise ValueError("idempotent family is not orthogonal")
        if not self.field.eq(total, self.unit):
            raise ValueError("idempotent family does not sum to the unit")

    def _verify_radical(self, rows):
        if rows.shape[0] == 0:
            computed = criterion_radical_rows(self)
            if computed.shape[0] != 0:
                raise ValueError("claimed semisimple but the radical criterion disagrees")
            return
        base = linalg.row_basis(self.field, rows)
        left = np.tensordot(base, self.table, axes=([1], [0])).reshape(-1, self.dim)
        right = np.tensordot(base, self.table, axes=([1], [1])).reshape(-1, self.dim)
        if linalg.span_dim_after_adding(self.field, base, np.concatenate([left, right])) != base.shape[0]:
            raise ValueError("radical candidate is not a two-sided ideal")
        power = base
        for _ in range(self.dim + 1):
            if power.shape[0] == 0:
                break
            tmp = np.tensordot(power, self.table, axes=([1], [0]))  # (r, j, k)
            prods = np.tensordot(base, tmp, axes=([1], [1])).reshape(-1, self.dim)
            power = linalg.row_basis(self.field, self.field.canon(prods))
        else:
            raise ValueError("radical candidate is not nilpotent")
        # semisimple quotient: the criterion radical of A/J must vanish
        q_table, _, _, _ = _quotient_structure(self, base)
        computed = _criterion_radical_from_parts(self.field, q_table)
        if computed.shape[0] != 0:
            raise ValueError("quotient by the radical candidate is not semisimple")

    # ---- radical and Loewy structure ---------------------------------------

    def radical_rows(self):
        """Canonical row basis of the Jacobson radical."""
        if self._radical_rows is None:
            rows = criterion_radical_rows(self)
            if rows.shape[0]:
                self._verify_radical(rows)
            self._radical_rows = rows
        return self._radical_rows

    def radical_powers(self):
        """[J, J^2, ...] as row bases, stopping before the zero power."""
        if self._radical_powers is None:
            powers = []
            base = self.radical_rows()
            power = base
            while power.shape[0]:
                powers.append(power)
                tmp = np.tensordot(power, self.table, axes=([1], [0]))
                prods = np.tensordot(base, tmp, axes=([1], [1])).reshape(-1, self.dim)
                power = linalg.row_basis(self.field, self.field.canon(prods))
            self._radical_powers = powers
        return self._radical_powers

    def loewy_length(self):
        return len(self.radical_powers()) + 1

    def loewy_layer_dims(self):
        """Dims of A >= J >= J^2 >= ... >= 0, ending in 0."""
        return [self.dim] + [p.shape[0] for p in self.radical_powers()] + [0]

    def opposite(self):
        if self._opposite is None:
            opp = Algebra(
                self.field,
                self.table.transpose(1, 0, 2),
                self.unit,
                self.labels,
                idempotents=self.idempotents,
                idempotents_primitive=self.idempotents_primitive,
                generators=self.generators,
                radical_rows=self._radical_rows,
                provenance=Provenance("opposite", {"parent": self}),
                label=f"{self.label}^op",
                check_associativity="skip",
                verify_radical=False,
            )
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def __repr__(self):
        return f"Algebra({self.label}, dim {self.dim} over {self.field.name})"


# ---- radical criteria -------------------------------------------------------


def matrix_algebra_radical(field, mats):
    """Radical of the span of faithful-representation matrices.

    mats has shape (r, n, n) and must span an associative algebra. Returns
    coefficient rows over the input basis. Uses the trace form when the
    characteristic is 0 or exceeds n, otherwise the layered coefficient chain,
    which is valid over every prime field.
    """
    mats = field.canon(np.asarray(mats))
    r, n = mats.shape[0], mats.shape[1]
    if r == 0:
        return field.zeros((0, 0))
    if field.char == 0 or field.char > n:
        gram = field.canon(np.tensordot(mats, mats, axes=([1, 2], [2, 1])))
        _, ker = linalg.rank_nullspace(field, gram)
        return linalg.row_basis(field, ker.T)
    p = field.char
    steps = 1
    while p**steps <= n:
        steps += 1
    current = field.eye(r)
    for k in range(1, steps + 1):
        if current.shape[0] == 0:
            break
        layer = field.canon(np.tensordot(current, mats, axes=([1], [0])))  # (c, n, n)
        c = layer.shape[0]
        j = p ** (k - 1)
        prods = np.matmul(layer[:, None, :, :], layer[None, :, :, :]) % p
        if j == 1:
            gram = (-np.trace(prods, axis1=2, axis2=3)) % p
        elif j == 2:
            t1 = np.trace(prods, axis1=2, axis2=3)
            sq = np.matmul(prods, prods) % p  # entries stay small, int64 exact
            t2 = np.trace(sq, axis1=2, axis2=3)
            gram = ((t1 * t1 - t2) // 2) % p
        else:
            gram = field.zeros((c, c))
            for s in range(c):
                for t in range(c):
                    gram[s, t] = charpoly_coefficient(field, prods[s, t], j)
        _, ker = linalg.rank_nullspace(field, field.canon(gram))
        current = linalg.row_basis(field, field.matmul(ker.T, current))
    coeffs = current
    # the chain's output must be nilpotent; verify before trusting it
    span = field.canon(np.tensordot(coeffs, mats, axes=([1], [0])))
    power = span
    for _ in range(n + 1):
        if power.shape[0] == 0 or linalg.rank(field, power.reshape(power.shape[0], -1)) == 0:
            break
        prods = np.matmul(span[:, None], power[None, :]).reshape(-1, n, n) % p
        rows = linalg.row_basis(field, prods.reshape(-1, n * n))
        power = rows.reshape(-1, n, n)
    else:
        raise RadicalUnavailable("coefficient chain did not terminate in a nilpotent ideal")
    return linalg.row_basis(field, coeffs)


def _criterion_radical_from_parts(field, table):
    mats = field.canon(table.transpose(0, 2, 1))  # left regular representation
    coeffs = matrix_algebra_radical(field, mats)
    return linalg.row_basis(field, coeffs)


def criterion_radical_rows(algebra):
    """Radical via the applicable computed criterion (no structural data)."""
    return _criterion_radical_from_parts(algebra.field, algebra.table)


# ---- quotients, subalgebras, tensor, opposite -------------------------------


def _quotient_structure(algebra, ideal_rows):
    """Structure constants of A / ideal plus the projection and section."""
    field = algebra.field
    n = algebra.dim
    reduced, pivots = linalg.rref(field, ideal_rows) if ideal_rows.shape[0] else (ideal_rows, [])
    free = [c for c in range(n) if c not in pivots]
    m = len(free)

    def project(v):
        w = field.copy(np.asarray(v).reshape(-1))
        for i, p in enumerate(pivots):
            if w[p] != field.zero:
                w = field.canon(field.sub(w, field.smul(w[p], reduced[i])))
        return w[free]

    section = field.zeros((n, m))
    for k, f in enumerate(free):
        section[f, k] = field.one
    table = field.zeros((m, m, m))
    for i, fi in enumerate(free):
        tmp = algebra.table[fi]  # (j, k)
        for j, fj in enumerate(free):
            table[i, j] = project(tmp[fj])
    unit = project(algebra.unit)
    return field.canon(table), field.canon(unit), project, section


def quotient_algebra(algebra, ideal_rows, label=None):
    """Quotient by a two-sided ideal given as a row span."""
    field = algebra.field
    rows = linalg.row_basis(field, field.canon(np.atleast_2d(ideal_rows)))
    if rows.shape[0] and rows.shape[1] != algebra.dim:
        raise ValueError("ideal rows have the wrong width")
    if rows.shape[0]:
        left = np.tensordot(rows, algebra.table, axes=([1], [0])).reshape(-1, algebra.dim)
        right = np.tensordot(rows, algebra.table, axes=([1], [1])).reshape(-1, algebra.dim)
        if linalg.span_dim_after_adding(field, rows, np.concatenate([left, right])) != rows.shape[0]:
            raise ValueError("rows do not span a two-sided ideal")
        if linalg.in_row_span(field, rows, algebra.unit):
            raise IdealIsWholeAlgebra("the ideal contains the unit")
    table, unit, project, _ = _quotient_structure(algebra, rows)
    m = table.shape[0]
    _, piv = linalg.rref(field, rows) if rows.shape[0] else (rows, [])
    free = [c for c in range(algebra.dim) if c not in piv]
    labels = [algebra.labels[f] for f in free]
    idempotents = None
    if algebra.idempotents is not None:
        images = [project(e) for e in algebra.idempotents]
        idempotents = [e for e in images if not field.is_zero(e)]
    gen_images = [project(g) for g in algebra.generators]
    rad_images = field.canon(np.array([project(r) for r in algebra.radical_rows()]).reshape(-1, m)) \
        if algebra.radical_rows().shape[0] else field.zeros((0, m))
    # rad(A/I) is the image of rad(A) for any ideal I
    return Algebra(
        field,
        table,
        unit,
        labels,
        idempotents=idempotents,
        idempotents_primitive=False,
        generators=gen_images,
        radical_rows=linalg.row_basis(field, rad_images),
        provenance=Provenance("quotient", {"parent": algebra, "ideal_rows": rows}),
        label=label or f"{algebra.label}/I",
        check_associativity="skip",
    )


def subalgebra_from_rows(algebra, rows, *, label=None, radical_rows=None, provenance=None):
    """Unital subalgebra spanned by the given rows (must be closed)."""
    field = algebra.field
    basis = linalg.row_basis(field, field.canon(np.atleast_2d(rows)))
    m = basis.shape[0]
    if not linalg.in_row_span(field, basis, algebra.unit):
        raise ValueError("subalgebra must contain the unit")
    prods = []
    for i in range(m):
        li = algebra.left_mult_matrix(basis[i])
        prods.append(field.matmul(basis, li.T))
    stacked = np.concatenate(prods, axis=0)
    coords = linalg.coords_in_row_basis(field, basis, stacked)
    if coords is None:
        raise ValueError("rows are not closed under multiplication")
    # block i of coords holds the products basis_i * basis_j for j = 0..m-1
    table = field.zeros((m, m, m))
    for i in range(m):
        table[i] = coords[i * m : (i + 1) * m]
    unit_coords = linalg.coords_in_row_basis(field, basis, algebra.unit.reshape(1, -1))[0]
    rad = None
    if radical_rows is not None:
        rad_c = linalg.coords_in_row_basis(field, basis, np.atleast_2d(radical_rows)) \
            if np.atleast_2d(radical_rows).shape[0] else field.zeros((0, m))
        if rad_c is None:
            raise ValueError("radical rows must lie inside the subalgebra")
        rad = linalg.row_basis(field, rad_c)
    sub = Algebra(
        field,
        table,
        unit_coords,
        [f"s{i}" for i in range(m)],
        generators=[field.canon(np.eye(m, dtype=np.int64 if field.char else object))[i] for i in range(m)],
        radical_rows=rad,
        provenance=provenance or Provenance("subalgebra", {"parent": algebra, "rows": basis}),
        label=label or f"{algebra.label}-sub",
        check_associativity="skip",
    )
    sub.inclusion_rows = basis
    return sub


def tensor_algebra(a, b, label=None):
    """A tensor B with componentwise product; basis index (i, j) -> i*dim_b + j."""
    if a.field != b.field:
        raise ValueError("tensor factors must share the field")
    if a.dim * b.dim > 200:
        raise ValueError("tensor algebra dimension exceeds the supported size")
    field = a.field
    big = np.multiply.outer(a.table, b.table)  # (i,k,m, j,l,n)
    table = big.transpose(0, 3, 1, 4, 2, 5).reshape(a.dim * b.dim, a.dim * b.dim, a.dim * b.dim)
    unit = np.multiply.outer(a.unit, b.unit).reshape(-1)
    labels = [f"{la}(x){lb}" for la in a.labels for lb in b.labels]
    idempotents = None
    primitive = False
    if a.idempotents is not None and b.idempotents is not None:
        idempotents = [
            np.multiply.outer(e, f).reshape(-1) for e in a.idempotents for f in b.idempotents
        ]
        primitive = a.idempotents_primitive and b.idempotents_primitive
    gens = [np.multiply.outer(g, b.unit).reshape(-1) for g in a.generators]
    gens += [np.multiply.outer(a.unit, g).reshape(-1) for g in b.generators]
    rad_a, rad_b = a.radical_rows(), b.radical_rows()
    blocks = []
    if rad_a.shape[0]:
        blocks.append(linalg.kronecker_product(field, rad_a, field.eye(b.dim)))
    if rad_b.shape[0]:
        blocks.append(linalg.kronecker_product(field, field.eye(a.dim), rad_b))
    rad = linalg.row_basis(field, np.concatenate(blocks, axis=0)) if blocks else field.zeros((0, a.dim * b.dim))
    return Algebra(
        field,
        field.canon(table),
        field.canon(unit),
        labels,
        idempotents=idempotents,
        idempotents_primitive=primitive,
        generators=gens,
        radical_rows=rad,
        provenance=Provenance("tensor", {"left": a, "right": b}),
        label=label or f"{a.label}(x){b.label}",
        check_associativity="skip",
    )


def enveloping_algebra(a):
    """A tensor A^op; bimodules over A are left modules over this."""
    return tensor_algebra(a, a.opposite(), label=f"{a.label}-env")


# ---- quiver presentation -> algebra -----------------------------------------


def algebra_from_quiver(pres: QuiverPresentation, field, label=None):
    """Path algebra of the presentation's quiver modulo its relations.

    Works degree by degree: candidates at degree d extend the surviving paths
    of degree d-1 by one arrow; relation sandwiches ending at degree d are
    imposed and the quotient's canonical representatives kept. Terminates when
    a whole degree dies (all longer paths then die too) or the quiver has no
    longer paths; raises NotFiniteDimensional past max_path_length.
    """
    quiver = pres.quiver
    free_paths = {}  # degree -> list[Path]
    reducers = {}  # degree -> dict path.arrows -> coord vector over free list

    free_paths[0] = [trivial_path(v) for v in quiver.vertices]
    free_paths[1] = [Path(a.source, a.target, (i,)) for i, a in enumerate(quiver.arrows)]
    rel_by_length = {}
    for rel in pres.relations:
        rel_by_length.setdefault(rel[0][1].length, []).append(rel)

    def reduce_path(path):
        """Coordinates of a path over the surviving basis of its degree."""
        d = path.length
        if d == 0:
            v = field.zeros((len(free_paths[0]),))
            v[quiver.vertices.index(path.source)] = field.one
            return v
        if d == 1:
            v = field.zeros((len(free_paths[1]),))
            v[path.arrows[0]] = field.one
            return v
        memo = reducers[d]
        if path.arrows in memo:
            return memo[path.arrows]
        prefix = Path(path.source, quiver.arrows[path.arrows[-2]].target, path.arrows[:-1])
        pv = reduce_path(prefix)
        cand_index, to_free = cand_data[d]
        out = field.zeros((len(free_paths[d]),)) if free_paths[d] else field.zeros((0,))
        for fi in range(pv.shape[0]):
            if pv[fi] == field.zero:
                continue
            key = (fi, path.arrows[-1])
            ci = cand_index.get(key)
            if ci is None:
                continue  # extension not composable: cannot happen for valid paths
            out = field.canon(field.add(out, field.smul(pv[fi], to_free[:, ci])))
        memo[path.arrows] = out
        return out

    cand_data = {}
    degree = 1
    total_dim = len(free_paths[0]) + len(free_paths[1])
    while free_paths[degree]:
        degree += 1
        if degree > pres.max_path_length:
            raise NotFiniteDimensional(
                f"nonzero paths persist past max_path_length={pres.max_path_length}"
            )
        prev = free_paths[degree - 1]
        candidates = []
        cand_index = {}
        for fi, p in enumerate(prev):
            for ai in quiver.arrows_from(p.target):
                cand_index[(fi, ai)] = len(candidates)
                candidates.append(Path(p.source, quiver.arrows[ai].target, p.arrows + (ai,)))
        if len(candidates) > _DIM_CAP:
            raise NotFiniteDimensional("path growth exceeds the supported size")
        rows = []
        for length, rels in rel_by_length.items():
            lead = degree - length
            if lead < 0:
                continue
            for rel in rels:
                rel_source = rel[0][1].source
                leads = [f for f in free_paths[lead] if f.target == rel_source] if lead else [
                    trivial_path(rel_source)
                ]
                for f in leads:
                    row = field.zeros((len(candidates),))
                    for coeff, term in rel:
                        whole = concat_paths(quiver, f, term)
                        assert whole is not None
                        prefix = Path(whole.source, quiver.arrows[whole.arrows[-2]].target, whole.arrows[:-1])
                        pv = reduce_path(prefix)
                        for fi in range(pv.shape[0]):
                            if pv[fi] == field.zero:
                                continue
                            ci = cand_index.get((fi, whole.arrows[-1]))
                            assert ci is not None
                            row[ci] = field.scalar(row[ci] + field.scalar(pv[fi] * coeff))
                    rows.append(field.canon(row))
        if rows:
            reduced, pivots = linalg.rref(field, np.array(rows))
        else:
            reduced, pivots = field.zeros((0, len(candidates))), []
        free_cols = [c for c in range(len(candidates)) if c not in pivots]
        free_paths[degree] = [candidates[c] for c in free_cols]
        # pivot candidate p reduces to -sum over the free columns of its row
        to_free = field.zeros((len(free_cols), len(candidates)))
        for k, c in enumerate(free_cols):
            to_free[k, c] = field.one
        for i, p in enumerate(pivots):
            for k, c in enumerate(free_cols):
                to_free[k, p] = field.scalar(-reduced[i, c])
        cand_data[degree] = (cand_index, field.canon(to_free))
        reducers[degree] = {}
        total_dim += len(free_paths[degree])
        if total_dim > _DIM_CAP:
            raise NotFiniteDimensional("algebra dimension exceeds the supported size")

    max_degree = degree  # first degree with no surviving paths
    basis = []
    for d in range(max_degree + 1):
        basis.extend((d, p) for p in free_paths.get(d, []))
    n = len(basis)
    index_of = {}
    for k, (d, p) in enumerate(basis):
        index_of[(d, p.arrows if d else p.source)] = k

    table = field.zeros((n, n, n))
    for i, (di, pi) in enumerate(basis):
        for j, (dj, pj) in enumerate(basis):
            prod = concat_paths(quiver, pj, pi)  # mul(x_i, x_j): walk x_j, then x_i
            if prod is None or prod.length >= max_degree:
                continue
            coords = reduce_path(prod)
            for t, val in enumerate(coords):
                if val != field.zero:
                    table[i, j, index_of[(prod.length, free_paths[prod.length][t].arrows if prod.length else free_paths[prod.length][t].source)]] = val

    unit = field.zeros((n,))
    vertex_idx = {}
    for k, (d, p) in enumerate(basis):
        if d == 0:
            unit[k] = field.one
            vertex_idx[p.source] = k
    idempotents = []
    for v in quiver.vertices:
        e = field.zeros((n,))
        e[vertex_idx[v]] = field.one
        idempotents.append(e)
    generators = list(idempotents)
    for k, (d, p) in enumerate(basis):
        if d == 1:
            g = field.zeros((n,))
            g[k] = field.one
            generators.append(g)
    rad = field.zeros((n - len(quiver.vertices), n))
    r = 0
    for k, (d, p) in enumerate(basis):
        if d >= 1:
            rad[r, k] = field.one
            r += 1
    labels = [p.label(quiver) for _, p in basis]
    algebra = Algebra(
        field,
        table,
        unit,
        labels,
        idempotents=idempotents,
        idempotents_primitive=True,
        generators=generators,
        radical_rows=rad,
        provenance=Provenance(
            "quiver",
            {
                "presentation": pres,
                "acyclic": quiver.is_acyclic(),
                "vertex_index": vertex_idx,
                "degrees": [(d, p) for d, p in basis],
            },
        ),
        label=label or "kQ/I",
        check_associativity="auto",
    )
    return algebra


def linear_quiver_algebra(field, n, label=None):
    """Path algebra of the linear quiver 1 -> 2 -> ... -> n (no relations)."""
    quiver = Quiver([str(i) for i in range(1, n + 1)], [
        (f"a{i}", str(i), str(i + 1)) for i in range(1, n)
    ])
    return algebra_from_quiver(QuiverPresentation(quiver, []), field, label=label or f"path_{n}")


def triangular_matrix_algebra(a, n):
    """Upper-triangular n x n matrices over a, realized as a (x) linear path algebra."""
    if n < 1:
        raise ValueError("n must be positive")
    return tensor_algebra(a, linear_quiver_algebra(a.field, n), label=f"T{n}({a.label})")


def center(algebra):
    """The center as a commutative subalgebra, with inclusion rows attached."""
    field = algebra.field
    n = algebra.dim
    constraints = []
    for j in range(n):
        xj = algebra.basis_vector(j)
        constraints.append(field.sub(algebra.left_mult_matrix(xj), algebra.right_mult_matrix(xj)))
    stacked = field.canon(np.concatenate(constraints, axis=0))
    _, ker = linalg.rank_nullspace(field, stacked)
    return subalgebra_from_rows(
        algebra,
        ker.T,
        label=f"Z({algebra.label})",
        provenance=Provenance("center", {"parent": algebra}),
    )
