"""Modules and bimodules over structure-constant algebras.

Vectors are columns. A left action stores one matrix per algebra basis
element with L(a*b) = L(a) L(b); a right action stores matrices with
R(a*b) = R(b) R(a), so right modules are left modules over the opposite
algebra without re-indexing. Action validity is checked on algebra
generators only: multiplicativity against generators propagates to all
products by linearity and induction, and a generator-pair commuting check
is enough for bimodule compatibility because each commutant is a subalgebra.

Enveloping algebras are never materialized; every bimodule operation works
directly on the two families of action matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NonSplitResidueField, NotAutomorphism


class Module:
    """A left module, right module, or bimodule, by explicit action matrices."""

    def __init__(self, left_algebra, right_algebra, left_mats, right_mats, label="M", check=True):
        if left_algebra is None and right_algebra is None:
            raise ValueError("a module needs at least one acting algebra")
        if left_algebra is not None and right_algebra is not None:
            if left_algebra.field != right_algebra.field:
                raise ValueError("both acting algebras must share the field")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.field = (left_algebra or right_algebra).field
        field = self.field
        self.left_mats = None if left_mats is None else field.canon(np.asarray(left_mats))
        self.right_mats = None if right_mats is None else field.canon(np.asarray(right_mats))
        ref = self.left_mats if self.left_mats is not None else self.right_mats
        self.dim = ref.shape[1]
        self.label = label
        if self.left_mats is not None and (
            self.left_mats.shape != (left_algebra.dim, self.dim, self.dim)
        ):
            raise ValueError("left action matrices have the wrong shape")
        if self.right_mats is not None and (
            self.right_mats.shape != (right_algebra.dim, self.dim, self.dim)
        ):
            raise ValueError("right action matrices have the wrong shape")
        if check:
            self._validate()

    # ---- actions ------------------------------------------------------------

    def left_action(self, a):
        return self.field.canon(np.tensordot(np.asarray(a), self.left_mats, axes=(0, 0)))

    def right_action(self, b):
        return self.field.canon(np.tensordot(np.asarray(b), self.right_mats, axes=(0, 0)))

    def _validate(self):
        field, eye = self.field, self.field.eye(self.dim)
        if self.left_mats is not None:
            a = self.left_algebra
            if not field.eq(self.left_action(a.unit), eye):
                raise ValueError("left action of the unit is not the identity")
            for g in a.generators:
                lg = self.left_action(g)
                for j in range(a.dim):
                    prod = a.mul(g, a.basis_vector(j))
                    if not field.eq(self.left_action(prod), field.matmul(lg, self.left_mats[j])):
                        raise ValueError("left action is not multiplicative")
        if self.right_mats is not None:
            b = self.right_algebra
            if not field.eq(self.right_action(b.unit), eye):
                raise ValueError("right action of the unit is not the identity")
            for g in b.generators:
                rg = self.right_action(g)
                for j in range(b.dim):
                    prod = b.mul(g, b.basis_vector(j))
                    if not field.eq(self.right_action(prod), field.matmul(self.right_mats[j], rg)):
                        raise ValueError("right action is not anti-multiplicative")
        if self.left_mats is not None and self.right_mats is not None:
            for g in self.left_algebra.generators:
                lg = self.left_action(g)
                for h in self.right_algebra.generators:
                    rh = self.right_action(h)
                    if not field.eq(field.matmul(lg, rh), field.matmul(rh, lg)):
                        raise ValueError("left and right actions do not commute")

    # ---- views --------------------------------------------------------------

    def restrict_left(self):
        if self.left_mats is None:
            raise ValueError("module has no left action")
        return Module(self.left_algebra, None, self.left_mats, None, f"{self.label}|left", check=False)

    def restrict_right(self):
        if self.right_mats is None:
            raise ValueError("module has no right action")
        return Module(None, self.right_algebra, None, self.right_mats, f"{self.label}|right", check=False)

    def sidedness(self):
        if self.left_mats is not None and self.right_mats is not None:
            return "bimodule"
        return "left" if self.left_mats is not None else "right"

    def __repr__(self):
        sides = []
        if self.left_algebra is not None:
            sides.append(f"left {self.left_algebra.label}")
        if self.right_algebra is not None:
            sides.append(f"right {self.right_algebra.label}")
        return f"Module({self.label}, dim {self.dim}, {', '.join(sides)})"


def _same_algebra(a, b):
    return a is b or (a is not None and b is not None and a.field == b.field and a.dim == b.dim and a.field.eq(a.table, b.table))


def _compatible(m, n):
    if m.sidedness() != n.sidedness():
        return False
    if (m.left_algebra is None) != (n.left_algebra is None):
        return False
    if m.left_algebra is not None and not _same_algebra(m.left_algebra, n.left_algebra):
        return False
    if (m.right_algebra is None) != (n.right_algebra is None):
        return False
    if m.right_algebra is not None and not _same_algebra(m.right_algebra, n.right_algebra):
        return False
    return True


# ---- standard modules --------------------------------------------------------


def left_regular_module(a):
    return Module(a, None, a.left_regular_mats(), None, f"{a.label} (left regular)", check=False)


def right_regular_module(a):
    return Module(None, a, None, a.right_regular_mats(), f"{a.label} (right regular)", check=False)


def regular_bimodule(a):
    return Module(a, a, a.left_regular_mats(), a.right_regular_mats(), f"{a.label} (regular)", check=False)


def zero_module(left_algebra, right_algebra):
    f = (left_algebra or right_algebra).field
    lm = None if left_algebra is None else f.zeros((left_algebra.dim, 0, 0))
    rm = None if right_algebra is None else f.zeros((right_algebra.dim, 0, 0))
    return Module(left_algebra, right_algebra, lm, rm, "0", check=False)


def module_over_opposite(m):
    """Re-read a right B-module as a left module over B^op (same matrices)."""
    if m.right_mats is None:
        raise ValueError("module has no right action")
    return Module(m.right_algebra.opposite(), None, m.right_mats, None, f"{m.label} as op-left", check=False)


def direct_sum(mods):
    """Block-diagonal sum; returns (module, inclusions, projections)."""
    if not mods:
        raise ValueError("empty direct sum")
    first = mods[0]
    for m in mods[1:]:
        if not _compatible(first, m):
            raise ValueError("direct summands must share sidedness and algebras")
    field = first.field
    dims = [m.dim for m in mods]
    total = sum(dims)
    offsets = np.cumsum([0] + dims)

    def blockify(mats_list, algebra):
        out = field.zeros((algebra.dim, total, total))
        for k, mats in enumerate(mats_list):
            s, e = offsets[k], offsets[k + 1]
            out[:, s:e, s:e] = mats
        return out

    lm = blockify([m.left_mats for m in mods], first.left_algebra) if first.left_mats is not None else None
    rm = blockify([m.right_mats for m in mods], first.right_algebra) if first.right_mats is not None else None
    total_mod = Module(
        first.left_algebra, first.right_algebra, lm, rm,
        " + ".join(m.label for m in mods), check=False,
    )
    incls, projs = [], []
    for k in range(len(mods)):
        s, e = offsets[k], offsets[k + 1]
        incl = field.zeros((total, dims[k]))
        proj = field.zeros((dims[k], total))
        for t in range(dims[k]):
            incl[s + t, t] = field.one
            proj[t, s + t] = field.one
        incls.append(incl)
        projs.append(proj)
    return total_mod, incls, projs


# ---- subquotients -------------------------------------------------------------


def _complement_projection(field, rows, dim):
    """Projection onto the complement of a row span, plus its section.

    rows must already be in reduced echelon form. Returns (proj t x dim,
    section dim x t) with proj @ section = identity and proj vanishing on
    the row span.
    """
    if rows.shape[0]:
        reduced, pivots = linalg.rref(field, rows)
    else:
        reduced, pivots = rows, []
    free = [c for c in range(dim) if c not in pivots]
    proj = field.zeros((len(free), dim))
    sect = field.zeros((dim, len(free)))
    for k, c in enumerate(free):
        proj[k, c] = field.one
        sect[c, k] = field.one
    for i, p in enumerate(pivots):
        for k, c in enumerate(free):
            proj[k, p] = field.scalar(-reduced[i, c])
    return field.canon(proj), sect


def _assert_stable(field, rows, mats, what):
    if rows.shape[0] == 0:
        return
    for mat in mats:
        imaged = field.matmul(rows, mat.T)
        if linalg.span_dim_after_adding(field, rows, imaged) != rows.shape[0]:
            raise ValueError(f"{what}: subspace is not action-stable")


def submodule(m, rows, label=None):
    """Span the rows under all actions; returns (sub, inclusion columns)."""
    field = m.field
    basis = linalg.row_basis(field, field.canon(np.atleast_2d(rows)))
    gen_mats = []
    if m.left_mats is not None:
        gen_mats += [m.left_action(g) for g in m.left_algebra.generators]
    if m.right_mats is not None:
        gen_mats += [m.right_action(g) for g in m.right_algebra.generators]
    while True:
        stacked = [basis]
        for mat in gen_mats:
            stacked.append(field.matmul(basis, mat.T))
        new_basis = linalg.row_basis(field, np.concatenate(stacked, axis=0))
        if new_basis.shape[0] == basis.shape[0]:
            break
        basis = new_basis
    s = basis.shape[0]
    incl = basis.T

    def induced(mats, algebra):
        out = field.zeros((algebra.dim, s, s))
        for i in range(algebra.dim):
            coords = linalg.coords_in_row_basis(field, basis, field.matmul(basis, mats[i].T))
            assert coords is not None
            out[i] = coords.T
        return out

    lm = induced(m.left_mats, m.left_algebra) if m.left_mats is not None else None
    rm = induced(m.right_mats, m.right_algebra) if m.right_mats is not None else None
    sub = Module(m.left_algebra, m.right_algebra, lm, rm, label or f"{m.label}-sub", check=False)
    return sub, field.canon(incl)


def quotient_module(m, rows, label=None):
    """Quotient by an action-stable row span; returns (quotient, projection)."""
    field = m.field
    basis = linalg.row_basis(field, field.canon(np.atleast_2d(rows))) if np.atleast_2d(rows).size else field.zeros((0, m.dim))
    gen_mats = []
    if m.left_mats is not None:
        gen_mats += [m.left_action(g) for g in m.left_algebra.generators]
    if m.right_mats is not None:
        gen_mats += [m.right_action(g) for g in m.right_algebra.generators]
    _assert_stable(field, basis, gen_mats, "quotient_module")
    proj, sect = _complement_projection(field, basis, m.dim)

    def induced(mats, algebra):
        out = field.zeros((algebra.dim, proj.shape[0], proj.shape[0]))
        for i in range(algebra.dim):
            out[i] = field.matmul(field.matmul(proj, mats[i]), sect)
        return out

    lm = induced(m.left_mats, m.left_algebra) if m.left_mats is not None else None
    rm = induced(m.right_mats, m.right_algebra) if m.right_mats is not None else None
    quo = Module(m.left_algebra, m.right_algebra, lm, rm, label or f"{m.label}-quo", check=False)
    return quo, proj


def radical_sub_rows(m, rows=None):
    """Rows of rad(A).X + X.rad(B) for the row span X (default: all of M)."""
    field = m.field
    if rows is None:
        rows = field.eye(m.dim)
    pieces = []
    if m.left_mats is not None:
        for rho in m.left_algebra.radical_rows():
            pieces.append(field.matmul(rows, m.left_action(rho).T))
    if m.right_mats is not None:
        for rho in m.right_algebra.radical_rows():
            pieces.append(field.matmul(rows, m.right_action(rho).T))
    if not pieces:
        return field.zeros((0, m.dim))
    return linalg.row_basis(field, np.concatenate(pieces, axis=0))


def top_of(m, label=None):
    """M modulo rad(A).M + M.rad(B); returns (top, projection)."""
    return quotient_module(m, radical_sub_rows(m), label or f"top({m.label})")


def radical_series_dims(m):
    """[dim M, dim rad M, dim rad^2 M, ...] down to 0."""
    field = m.field
    dims = [m.dim]
    rows = field.eye(m.dim)
    while True:
        rows = radical_sub_rows(m, rows)
        dims.append(rows.shape[0])
        if rows.shape[0] == 0:
            return dims


def socle_rows(m):
    """Rows killed by rad(A) on the left and rad(B) on the right."""
    field = m.field
    constraints = []
    if m.left_mats is not None:
        for rho in m.left_algebra.radical_rows():
            constraints.append(m.left_action(rho))
    if m.right_mats is not None:
        for rho in m.right_algebra.radical_rows():
            constraints.append(m.right_action(rho))
    if not constraints:
        return field.eye(m.dim)
    _, ker = linalg.rank_nullspace(field, np.concatenate(constraints, axis=0))
    return linalg.row_basis(field, ker.T)


# ---- hom spaces ---------------------------------------------------------------


def hom_space(m, n):
    """Canonical basis of module maps M -> N (matrices dN x dM).

    Maps commute with the actions on every side both modules carry.
    Checking generators is enough: maps commuting with two elements
    commute with their product.
    """
    if not _compatible(m, n):
        raise ValueError("hom_space needs modules with identical sidedness and algebras")
    field = m.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    constraints = []
    if m.left_mats is not None:
        for g in m.left_algebra.generators:
            constraints.append((m.left_action(g), n.left_action(g)))
    if m.right_mats is not None:
        for g in m.right_algebra.generators:
            constraints.append((m.right_action(g), n.right_action(g)))
    basis = None  # columns over vec_r(F), row-major
    eye_m, eye_n = field.eye(dm), field.eye(dn)
    for am, an in constraints:
        # F am = an F as (I (x) am^T - an (x) I) vec_r(F) = 0
        c = field.sub(field.kron(eye_n, am.T), field.kron(an, eye_m))
        if basis is None:
            _, basis = linalg.rank_nullspace(field, c)
        else:
            _, small = linalg.rank_nullspace(field, field.matmul(c, basis))
            basis = field.matmul(basis, small)
        if basis.shape[1] == 0:
            return []
    if basis is None:
        basis = field.eye(dm * dn)
    rows = linalg.row_basis(field, basis.T)
    return [rows[k].reshape(dn, dm) for k in range(rows.shape[0])]


def left_annihilator_rows(m):
    """Algebra elements acting as zero on the left."""
    field = m.field
    flat = m.left_mats.reshape(m.left_algebra.dim, -1)
    _, ker = linalg.rank_nullspace(field, flat.T)
    return linalg.row_basis(field, ker.T)


def right_annihilator_rows(m):
    field = m.field
    flat = m.right_mats.reshape(m.right_algebra.dim, -1)
    _, ker = linalg.rank_nullspace(field, flat.T)
    return linalg.row_basis(field, ker.T)


# ---- tensor, dual, twist -------------------------------------------------------


@dataclass
class TensorResult:
    module: Module
    projection: np.ndarray  # (dim result) x (dm * dn)
    section: np.ndarray

    def pure_tensor(self, u, v):
        field = self.module.field
        big = np.multiply.outer(np.asarray(u), np.asarray(v)).reshape(-1)
        return field.canon(np.dot(self.projection, big))


def tensor_over(m, n, label=None):
    """M (x)_B N for a right-B (or (A,B)-bi) module M and left-B (or (B,C)-bi) N.

    The balancing subspace is generated by the rows for algebra generators:
    products telescope into generator balancing elements.
    """
    if m.right_algebra is None or n.left_algebra is None:
        raise ValueError("tensor_over needs a right action on the left factor and a left action on the right factor")
    if not _same_algebra(m.right_algebra, n.left_algebra):
        raise ValueError("tensor_over: the shared algebra differs between factors")
    field = m.field
    b = m.right_algebra
    dm, dn = m.dim, n.dim
    eye_m, eye_n = field.eye(dm), field.eye(dn)
    blocks = []
    for g in b.generators:
        rg = m.right_action(g)
        lg = n.left_action(g)
        blocks.append(field.sub(field.kron(eye_m, lg.T), field.kron(rg.T, eye_n)))
    if blocks:
        balancing = linalg.row_basis(field, np.concatenate(blocks, axis=0))
    else:
        balancing = field.zeros((0, dm * dn))
    proj, sect = _complement_projection(field, balancing, dm * dn)

    big_mats = []
    if m.left_mats is not None:
        big_mats += [field.kron(m.left_action(g), eye_n) for g in m.left_algebra.generators]
    if n.right_mats is not None:
        big_mats += [field.kron(eye_m, n.right_action(g)) for g in n.right_algebra.generators]
    _assert_stable(field, balancing, big_mats, "tensor_over")

    def induced(mats_builder, algebra):
        out = field.zeros((algebra.dim, proj.shape[0], proj.shape[0]))
        for i in range(algebra.dim):
            out[i] = field.matmul(field.matmul(proj, mats_builder(i)), sect)
        return out

    lm = None
    if m.left_mats is not None:
        lm = induced(lambda i: field.kron(m.left_mats[i], eye_n), m.left_algebra)
    rm = None
    if n.right_mats is not None:
        rm = induced(lambda i: field.kron(eye_m, n.right_mats[i]), n.right_algebra)
    module = Module(
        m.left_algebra, n.right_algebra, lm, rm,
        label or f"{m.label} (x)_{b.label} {n.label}",
        check=True,
    )
    return TensorResult(module, proj, sect)


def outer_tensor(m, n, label=None):
    """M (x)_k N for a left A-module M and right B-module N, as an (A,B)-bimodule."""
    if m.left_mats is None or n.right_mats is None:
        raise ValueError("outer_tensor needs a left module and a right module")
    if m.right_mats is not None or n.left_mats is not None:
        raise ValueError("outer_tensor factors must be one-sided")
    field = m.field
    eye_m, eye_n = field.eye(m.dim), field.eye(n.dim)
    lm = field.canon(np.stack([field.kron(m.left_mats[i], eye_n) for i in range(m.left_algebra.dim)]))
    rm = field.canon(np.stack([field.kron(eye_m, n.right_mats[j]) for j in range(n.right_algebra.dim)]))
    return Module(m.left_algebra, n.right_algebra, lm, rm, label or f"{m.label} (x) {n.label}", check=False)


def dual_module(m, label=None):
    """Linear dual: an (A,B)-bimodule becomes a (B,A)-bimodule.

    (b.f.a)(x) = f(a x b), so b acts on the dual through the transpose of its
    right action and a through the transpose of its left action.
    """
    field = m.field
    lm = None
    rm = None
    left_alg = m.right_algebra
    right_alg = m.left_algebra
    if m.right_mats is not None:
        lm = field.canon(np.stack([m.right_mats[j].T for j in range(m.right_algebra.dim)]))
    if m.left_mats is not None:
        rm = field.canon(np.stack([m.left_mats[i].T for i in range(m.left_algebra.dim)]))
    return Module(left_alg, right_alg, lm, rm, label or f"D({m.label})", check=False)


def _check_automorphism(algebra, g):
    field = algebra.field
    g = field.canon(np.asarray(g))
    if g.shape != (algebra.dim, algebra.dim):
        raise NotAutomorphism("automorphism matrix has the wrong shape")
    try:
        linalg.invert(field, g)
    except Exception as exc:
        raise NotAutomorphism("matrix is not invertible") from exc
    if not field.eq(field.matmul(g, algebra.unit), algebra.unit):
        raise NotAutomorphism("unit is not fixed")
    for i in range(algebra.dim):
        gi = field.matmul(g, algebra.basis_vector(i))
        for j in range(algebra.dim):
            gj = field.matmul(g, algebra.basis_vector(j))
            lhs = field.matmul(g, algebra.mul(algebra.basis_vector(i), algebra.basis_vector(j)))
            if not field.eq(lhs, algebra.mul(gi, gj)):
                raise NotAutomorphism("matrix does not respect multiplication")
    return g


def twist_left(m, g, label=None, validate=True):
    """Twist the left action through an algebra automorphism: a . x = g(a) x."""
    if m.left_mats is None:
        raise ValueError("no left action to twist")
    g = _check_automorphism(m.left_algebra, g) if validate else m.field.canon(np.asarray(g))
    lm = m.field.canon(np.tensordot(g, m.left_mats, axes=([0], [0])))
    return Module(m.left_algebra, m.right_algebra, lm, m.right_mats, label or f"twist({m.label})", check=True)


def twist_right(m, g, label=None, validate=True):
    """Twist the right action through an algebra automorphism: x . a = x g(a)."""
    if m.right_mats is None:
        raise ValueError("no right action to twist")
    g = _check_automorphism(m.right_algebra, g) if validate else m.field.canon(np.asarray(g))
    rm = m.field.canon(np.tensordot(g, m.right_mats, axes=([0], [0])))
    return Module(m.left_algebra, m.right_algebra, m.left_mats, rm, label or f"twist({m.label})", check=True)


# ---- projectives ---------------------------------------------------------------


def _primitive_idempotents(a):
    if a.idempotents is None or not a.idempotents_primitive:
        raise ValueError(
            f"{a.label} carries no verified primitive idempotent family; "
            "decompose its regular module first"
        )
    return a.idempotents


def projective_indecomposables(a, idempotents=None):
    """The modules A e for a complete family of primitive idempotents e."""
    reg = left_regular_module(a)
    out = []
    for e in idempotents if idempotents is not None else _primitive_idempotents(a):
        rows = a.right_mult_matrix(e).T  # row k spans x_k e
        sub, incl = submodule(reg, rows, label=f"{a.label}e")
        out.append((sub, incl, e))
    return out


def simple_modules(a, idempotents=None):
    """Distinct simple left modules, as (module, index of source idempotent)."""
    projs = projective_indecomposables(a, idempotents)
    simples = []
    for k, (p, _, _) in enumerate(projs):
        s, _ = top_of(p, label=f"S{k}")
        if not any(hom_space(s, t) for t, _ in simples):
            simples.append((s, k))
    return simples


@dataclass
class ProjectiveCover:
    module: Module  # the covering projective P
    surjection: np.ndarray  # dim M x dim P
    multiplicities: list  # (simple index, multiplicity)


def projective_cover(m):
    """Projective cover of a left module over a split basic-or-not algebra.

    Multiplicity of P_i equals dim e_i.top(M) when every simple has a
    one-dimensional endomorphism ring; otherwise the residue field is a
    proper division ring over the base and the construction stops.
    """
    if m.left_mats is None or m.right_mats is not None:
        raise ValueError("projective_cover expects a left module")
    a = m.left_algebra
    field = m.field
    top, _ = top_of(m)
    sect_top = _complement_projection(field, radical_sub_rows(m), m.dim)[1]
    projs = projective_indecomposables(a)
    simples = simple_modules(a)
    for s, _ in simples:
        if len(hom_space(s, s)) != 1:
            raise NonSplitResidueField(
                f"simple module of {a.label} has a higher-dimensional endomorphism ring"
            )
    pieces = []
    mults = []
    columns = []
    for _s, k in simples:
        p_k, _, e_k = projs[k]
        e_top = top.left_action(e_k)
        t_rows = linalg.row_basis(field, e_top.T)
        mults.append((k, t_rows.shape[0]))
        for r in range(t_rows.shape[0]):
            u = field.matmul(sect_top, t_rows[r])
            u = field.matmul(m.left_action(e_k), u)
            pieces.append(p_k)
            # column block: the P_k basis rows act on the lifted generator
            block = field.zeros((m.dim, p_k.dim))
            basis_rows = projs[k][1].T  # rows spanning A e_k inside A
            for c in range(p_k.dim):
                block[:, c] = field.matmul(m.left_action(basis_rows[c]), u)
            columns.append(block)
    if not pieces:
        cover = zero_module(a, None)
        return ProjectiveCover(cover, field.zeros((m.dim, 0)), mults)
    cover, _, _ = direct_sum(pieces)
    phi = field.canon(np.concatenate(columns, axis=1))
    for g in a.generators:
        lhs = field.matmul(m.left_action(g), phi)
        if not field.eq(lhs, field.matmul(phi, cover.left_action(g))):
            raise AssertionError("cover surjection is not a module map")
    assert linalg.rank(field, phi) == m.dim, "cover surjection lost rank"
    _, ker = linalg.rank_nullspace(field, phi)
    rad_rows = radical_sub_rows(cover)
    for t in range(ker.shape[1]):
        assert linalg.in_row_span(field, rad_rows, ker[:, t]), "cover kernel escapes the radical"
    return ProjectiveCover(cover, phi, mults)


def is_projective(m):
    """Left modules: compare against the projective cover's dimension."""
    cover = projective_cover(m)
    return cover.module.dim == m.dim


def is_right_projective(m):
    return is_projective(module_over_opposite(m.restrict_right()))


def is_left_right_projective(m):
    """Projective as a one-sided module on each side it carries."""
    ok = True
    if m.left_mats is not None:
        ok = ok and is_projective(m.restrict_left())
    if m.right_mats is not None:
        ok = ok and is_right_projective(m)
    return ok


def is_self_injective(a):
    """A is self-injective iff the dual of the right regular module is projective."""
    dual_of_right = dual_module(right_regular_module(a))
    return is_projective(dual_of_right)


def hom_to_regular(m):
    """Hom_A(M, A) for an (A,B)-bimodule M, as a (B,A)-bimodule.

    (b.f.a)(x) = f(x b) a: b acts by precomposition with its right action on
    M, a by postcomposition with its right action on A.
    """
    if m.left_mats is None:
        raise ValueError("hom_to_regular expects a left action")
    a = m.left_algebra
    field = m.field
    reg = left_regular_module(a)
    homs = hom_space(m.restrict_left(), reg)
    t = len(homs)
    if t == 0:
        return zero_module(m.right_algebra, a), []
    flat = field.canon(np.stack([h.reshape(-1) for h in homs]))
    b = m.right_algebra

    def coords(mat_list):
        target = field.canon(np.stack([x.reshape(-1) for x in mat_list]))
        c = linalg.coords_in_row_basis(field, flat, target)
        assert c is not None
        return c

    lm = None
    if b is not None:
        lm = field.zeros((b.dim, t, t))
        for j in range(b.dim):
            rb = m.right_mats[j]
            lm[j] = coords([field.matmul(h, rb) for h in homs]).T
    rm = field.zeros((a.dim, t, t))
    for i in range(a.dim):
        ra = a.right_mult_matrix(a.basis_vector(i))
        rm[i] = coords([field.matmul(ra, h) for h in homs]).T
    out = Module(b, a, lm, rm, f"Hom({m.label},{a.label})", check=True)
    return out, homs


# ---- random modules -------------------------------------------------------------


def random_left_module(a, gen, copies_cap=2):
    """A random quotient of a random finite direct sum of the A e_i.

    Quotients of finite projective sums reach every finite-dimensional
    module, so this samples the whole category at small multiplicities.
    """
    field = a.field
    projs = projective_indecomposables(a)
    pieces = []
    for p, _, _ in projs:
        for _ in range(int(gen.integers(0, copies_cap + 1))):
            pieces.append(p)
    if not pieces:
        pieces.append(projs[int(gen.integers(0, len(projs)))][0])
    big, _, _ = direct_sum(pieces)
    rad = radical_sub_rows(big)
    count = int(gen.integers(0, rad.shape[0] + 1)) if rad.shape[0] else 0
    if count == 0:
        return big
    coeffs = field.rand_mat(gen, count, rad.shape[0])
    seeds = field.matmul(coeffs, rad)
    _, incl = submodule(big, seeds)
    quo, _ = quotient_module(big, incl.T)
    return quo
