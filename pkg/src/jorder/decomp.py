"""Krull-Schmidt decomposition through exact idempotent splitting.

A module is split by locating a nontrivial idempotent in its endomorphism
algebra E: an idempotent is found in the semisimple quotient E/J through
minimal-polynomial factorization of a candidate element, then lifted through
the nilpotent radical by the cubic Newton step x -> 3x^2 - 2x^3, which stays
inside the commutative subalgebra generated by the candidate.

Indecomposability is only ever reported with a certificate:

  dim_one         E is one dimensional.
  field_quotient  E/J is a field, exhibited either by dimension one or by an
                  element whose minimal polynomial is irreducible of degree
                  dim E/J (a primitive element).

A local endomorphism algebra is exactly an indecomposable module, so these
certificates are proofs. When the budgeted search neither splits nor
certifies, Inconclusive is raised; the library never guesses.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .algebras import (
    Algebra,
    Provenance,
    _quotient_structure,
    center,
    matrix_algebra_radical,
)
from .errors import Inconclusive
from .modules import (
    dual_module,
    hom_space,
    left_regular_module,
    regular_bimodule,
    submodule,
    top_of,
)
from .polynomials import (
    crt_split_poly,
    factor_poly,
    minpoly_matrix,
    poly_deg,
    poly_trim,
)


def endomorphism_algebra(m, *, verify_radical=True):
    """(E, homs): E with product = composition, homs its matrix basis.

    E's basis element i acts on the module as the matrix homs[i]; the product
    convention matches Algebra.mul, so mul(f, g) is the composite applying g
    first. The radical is computed on the faithful matrix representation.
    """
    field = m.field
    homs = hom_space(m, m)
    r = len(homs)
    if r == 0:
        raise ValueError("the zero module has no unital endomorphism algebra")
    stack = field.canon(np.stack(homs))
    vec_rows = stack.reshape(r, -1)
    comp_rows = field.zeros((r * r, m.dim * m.dim))
    for i in range(r):
        for j in range(r):
            comp_rows[i * r + j] = field.matmul(stack[i], stack[j]).reshape(-1)
    coords = linalg.coords_in_row_basis(field, vec_rows, field.canon(comp_rows))
    if coords is None:
        raise AssertionError("endomorphism space is not closed under composition")
    table = coords.reshape(r, r, r)
    unit = linalg.coords_in_row_basis(field, vec_rows, field.eye(m.dim).reshape(1, -1))
    if unit is None:
        raise AssertionError("identity map missing from endomorphism space")
    rad = matrix_algebra_radical(field, stack)
    e_alg = Algebra(
        field,
        table,
        unit[0],
        [f"f{i}" for i in range(r)],
        radical_rows=rad,
        provenance=Provenance("endomorphism", {"module": m}),
        label=f"End({m.label})",
        verify_radical=verify_radical,
    )
    return e_alg, homs


def _left_mult_from_table(field, table, x):
    """Matrix of y -> x y for the structure constants of a quotient."""
    return field.canon(np.tensordot(x, table, axes=([0], [0])).T)


def _table_mul(field, table, a, b):
    tmp = np.tensordot(a, table, axes=([0], [0]))
    return field.canon(np.tensordot(b, tmp, axes=([0], [0])))


def _table_eval_poly(field, table, unit, coeffs, s):
    """Horner evaluation of a polynomial at s inside a structure table."""
    acc = field.zeros(s.shape[0])
    for c in reversed(poly_trim(field, list(coeffs))):
        acc = _table_mul(field, table, acc, s)
        if c != field.zero:
            acc = field.canon(field.add(acc, field.smul(c, unit)))
    return acc


def find_nontrivial_idempotent(e_alg, gen, budget=64):
    """(idempotent vector, None) or (None, locality certificate).

    Candidates are drawn from the semisimple quotient S = E/J: the standard
    basis first, then seeded random elements. Each candidate either splits S
    through a coprime factorization of its minimal polynomial, certifies S to
    be a field by a primitive element, or is discarded. Exhausting the budget
    without either outcome raises Inconclusive.
    """
    field = e_alg.field
    if e_alg.dim == 1:
        return None, "dim_one"
    rad = e_alg.radical_rows()
    table_s, unit_s, project, section = _quotient_structure(e_alg, rad)
    dim_s = table_s.shape[0]
    if dim_s == 1:
        return None, "field_quotient"

    def candidates():
        for i in range(dim_s):
            yield field.canon(field.eye(dim_s)[i])
        while True:
            yield field.canon(field.rand_mat(gen, 1, dim_s).reshape(-1))

    tried = 0
    for s in candidates():
        if tried >= budget:
            break
        tried += 1
        if field.is_zero(s):
            continue
        mu = minpoly_matrix(field, _left_mult_from_table(field, table_s, s))
        if poly_deg(mu) == dim_s:
            factors = factor_poly(field, mu)
            if len(factors) == 1 and factors[0][1] == 1:
                # S = k[s] = k[x]/(mu) with mu irreducible, so S is a field
                return None, "field_quotient"
        proj_poly = crt_split_poly(field, mu)
        if proj_poly is None:
            continue
        e_s = _table_eval_poly(field, table_s, unit_s, proj_poly, s)
        if field.is_zero(e_s) or field.eq(e_s, unit_s):
            raise AssertionError("projector polynomial gave a trivial idempotent")
        if not field.eq(_table_mul(field, table_s, e_s, e_s), e_s):
            raise AssertionError("projector polynomial gave a non-idempotent")
        x = field.canon(field.matmul(section, e_s))
        three, two = field.scalar(3), field.scalar(2)
        for _ in range(64):
            x2 = e_alg.mul(x, x)
            if field.eq(x2, x):
                break
            x3 = e_alg.mul(x2, x)
            x = field.canon(field.sub(field.smul(three, x2), field.smul(two, x3)))
        else:
            raise AssertionError("idempotent lift did not converge")
        if not field.eq(project(x), e_s):
            raise AssertionError("idempotent lift left its residue class")
        return x, None
    raise Inconclusive(
        f"no idempotent or locality certificate for {e_alg.label} "
        f"(dim {e_alg.dim}, semisimple quotient dim {dim_s}) within budget {budget}"
    )


@dataclass
class Summand:
    """One indecomposable piece with maps to and from the parent module."""

    module: object
    inclusion: np.ndarray
    projection: np.ndarray
    certificate: str
    _end: tuple = dc_field(default=None, repr=False)


@dataclass
class Decomposition:
    """Indecomposable summands plus their grouping into isomorphism classes."""

    module: object
    summands: list
    classes: list

    def class_summary(self):
        """Sorted (dimension, multiplicity) pairs, one per class."""
        return sorted((self.summands[cls[0]].module.dim, len(cls)) for cls in self.classes)

    def dims(self):
        return sorted(s.module.dim for s in self.summands)


def _split_by_endomorphism(mod, part):
    """Submodule on the image of an idempotent endomorphism, with both maps."""
    field = mod.field
    rows = linalg.row_basis(field, field.canon(part.T))
    sub, incl = submodule(mod, rows)
    if sub.dim != rows.shape[0]:
        raise AssertionError("idempotent image is not action stable")
    coords = linalg.coords_in_row_basis(field, rows, field.canon(part.T))
    proj = field.canon(coords.T)
    if not field.eq(field.matmul(proj, incl), field.eye(sub.dim)):
        raise AssertionError("projection does not retract the inclusion")
    return sub, incl, proj


def summand_isomorphism(si, sj):
    """Explicit isomorphism between certified summands, or None.

    Any composite g f lying outside rad End(M) is invertible there, which
    splits M off N; with equal dimensions f itself is then an isomorphism.
    If every basis composite lies in the radical, bilinearity puts all
    composites there, so no isomorphism exists. Returns the matrix of f
    (dim sj x dim si) when the modules are isomorphic.
    """
    mi, mj = si.module, sj.module
    if mi.dim != mj.dim:
        return None
    field = mi.field
    fs = hom_space(mi, mj)
    if not fs:
        return None
    gs = hom_space(mj, mi)
    if not gs:
        return None
    e_alg, homs = si._end
    rad = e_alg.radical_rows()
    vec_rows = field.canon(np.stack(homs)).reshape(len(homs), -1)
    for f in fs:
        for g in gs:
            comp = field.canon(field.matmul(g, f))
            if field.is_zero(comp):
                continue
            coords = linalg.coords_in_row_basis(field, vec_rows, comp.reshape(1, -1))
            if coords is None:
                raise AssertionError("composite escaped the endomorphism space")
            if rad.shape[0] == 0 or not linalg.in_row_span(field, rad, coords[0]):
                return f
    return None


def _summands_isomorphic(si, sj):
    return summand_isomorphism(si, sj) is not None


def decompose(m, seed=0):
    """Full decomposition into indecomposables, verified and certified.

    Deterministic for a fixed seed: child splits draw their randomness from
    spawned SeedSequences. Raises Inconclusive when some piece can be neither
    split nor certified indecomposable within the search budget.
    """
    field = m.field
    if m.dim == 0:
        return Decomposition(m, [], [])
    leaves = []

    def rec(mod, incl, proj, seed_seq):
        e_alg, homs = endomorphism_algebra(mod)
        gen = np.random.Generator(np.random.PCG64(seed_seq))
        e_vec, certificate = find_nontrivial_idempotent(e_alg, gen)
        if e_vec is None:
            leaves.append(Summand(mod, incl, proj, certificate, (e_alg, homs)))
            return
        stack = field.canon(np.stack(homs))
        e_mat = field.canon(np.tensordot(e_vec, stack, axes=([0], [0])))
        complement = field.canon(field.sub(field.eye(mod.dim), e_mat))
        children = seed_seq.spawn(2)
        for part, child_seed in zip((e_mat, complement), children):
            sub, sincl, sproj = _split_by_endomorphism(mod, part)
            rec(sub, field.matmul(incl, sincl), field.matmul(sproj, proj), child_seed)

    rec(m, field.eye(m.dim), field.eye(m.dim), np.random.SeedSequence(seed))

    total = field.zeros((m.dim, m.dim))
    for i, s in enumerate(leaves):
        if not field.eq(field.matmul(s.projection, s.inclusion), field.eye(s.module.dim)):
            raise AssertionError("summand projection fails to retract its inclusion")
        total = field.add(total, field.matmul(s.inclusion, s.projection))
        for j, t in enumerate(leaves):
            if i != j and not field.is_zero(field.matmul(s.projection, t.inclusion)):
                raise AssertionError("summand family is not orthogonal")
    if not field.eq(field.canon(total), field.eye(m.dim)):
        raise AssertionError("summand family does not resolve the identity")

    classes = []
    for idx, s in enumerate(leaves):
        for cls in classes:
            if _summands_isomorphic(leaves[cls[0]], s):
                cls.append(idx)
                break
        else:
            classes.append([idx])
    return Decomposition(m, leaves, classes)


def are_isomorphic(m, n, seed=0):
    """Module isomorphism through matched Krull-Schmidt decompositions."""
    if m.dim != n.dim or m.sidedness() != n.sidedness():
        return False
    if m.dim == 0:
        return True
    dm = decompose(m, seed=seed)
    dn = decompose(n, seed=seed + 1)
    if len(dm.summands) != len(dn.summands):
        return False
    unmatched = list(range(len(dn.classes)))
    for cls in dm.classes:
        rep = dm.summands[cls[0]]
        hit = None
        for pos in unmatched:
            other = dn.classes[pos]
            if len(other) == len(cls) and _summands_isomorphic(rep, dn.summands[other[0]]):
                hit = pos
                break
        if hit is None:
            return False
        unmatched.remove(hit)
    return not unmatched


def summand_split_maps(x, y):
    """(section, retraction) splitting x off y, or None; x must be indecomposable.

    End(x) is local for indecomposable x over a split field, so x divides y
    exactly when some composite g f of hom-basis elements is invertible; if
    every basis composite is singular, bilinearity keeps every composite in
    rad End(x) and no splitting exists. Avoids decomposing y entirely.
    """
    field = x.field
    if x.dim == 0:
        return field.zeros((y.dim, 0)), field.zeros((0, y.dim))
    if x.dim > y.dim:
        return None
    e_alg, _ = endomorphism_algebra(x)
    if e_alg.radical_rows().shape[0] != e_alg.dim - 1:
        raise ValueError(f"{x.label} is not indecomposable with split endomorphisms")
    fs = hom_space(x, y)
    if not fs:
        return None
    gs = hom_space(y, x)
    if not gs:
        return None
    for f in fs:
        for g in gs:
            u = field.canon(field.matmul(g, f))
            if linalg.rank(field, u) == x.dim:
                h = field.canon(field.matmul(linalg.invert(field, u), g))
                return f, h
    return None


def divides_indecomposable(x, y):
    """Whether the indecomposable x is a direct summand of y."""
    return summand_split_maps(x, y) is not None


def explicit_isomorphism(m, n, seed=0):
    """Matrix of a module isomorphism m -> n, or None.

    Matches the indecomposable summands pairwise and sums
    inclusion . iso . projection over the matching; the matching is
    block-bijective, so the sum is invertible whenever it is total.
    The result is re-verified exactly before it is returned.
    """
    if m.dim != n.dim or m.sidedness() != n.sidedness():
        return None
    field = m.field
    if m.dim == 0:
        return field.zeros((0, 0))
    dm = decompose(m, seed=seed)
    dn = decompose(n, seed=seed + 1)
    if len(dm.summands) != len(dn.summands):
        return None
    used = set()
    total = field.zeros((n.dim, m.dim))
    for s in dm.summands:
        hit = None
        for j, t in enumerate(dn.summands):
            if j in used or t.module.dim != s.module.dim:
                continue
            f = summand_isomorphism(s, t)
            if f is not None:
                hit = (j, t, f)
                break
        if hit is None:
            return None
        j, t, f = hit
        used.add(j)
        total = field.add(total, field.matmul(t.inclusion, field.matmul(f, s.projection)))
    total = field.canon(total)
    if linalg.rank(field, total) != m.dim:
        raise AssertionError("matched summand maps failed to assemble invertibly")
    for mats_m, mats_n in ((m.left_mats, n.left_mats), (m.right_mats, n.right_mats)):
        if mats_m is None:
            continue
        for i in range(mats_m.shape[0]):
            lhs = field.matmul(total, mats_m[i])
            if not field.eq(lhs, field.matmul(mats_n[i], total)):
                raise AssertionError("assembled isomorphism is not a module map")
    return total


def is_direct_summand(x, y, seed=0):
    """(flag, evidence): whether x is a direct summand of y.

    Krull-Schmidt uniqueness reduces the question to class multiplicities:
    every isomorphism class of x must appear in y at least as often. The
    evidence lists both class summaries and the first missing class, if any.
    """
    evidence = {}
    if x.dim == 0:
        return True, evidence
    dx = decompose(x, seed=seed)
    dy = decompose(y, seed=seed + 1)
    evidence["left_classes"] = dx.class_summary()
    evidence["right_classes"] = dy.class_summary()
    remaining = {pos: len(cls) for pos, cls in enumerate(dy.classes)}
    for cls in dx.classes:
        rep = dx.summands[cls[0]]
        hit = None
        for pos, cap in remaining.items():
            if cap < len(cls):
                continue
            other = dy.classes[pos]
            if _summands_isomorphic(rep, dy.summands[other[0]]):
                hit = pos
                break
        if hit is None:
            evidence["missing_class"] = {"dim": rep.module.dim, "multiplicity": len(cls)}
            return False, evidence
        remaining[hit] -= len(cls)
    return True, evidence


def complete_primitive_idempotents(a, seed=0):
    """Primitive orthogonal idempotents summing to 1, installed on a.

    Summand projections of the left regular module are right multiplications,
    so evaluating each at 1 recovers an idempotent; indecomposability of the
    summand makes it primitive.
    """
    if a.idempotents is not None and a.idempotents_primitive:
        return [a.field.copy(e) for e in a.idempotents]
    field = a.field
    dec = decompose(left_regular_module(a), seed=seed)
    es = []
    for s in dec.summands:
        p = field.matmul(s.inclusion, s.projection)
        es.append(field.canon(field.matmul(p, a.unit)))
    total = field.zeros(a.dim)
    for i, e in enumerate(es):
        if not field.eq(a.mul(e, e), e):
            raise AssertionError("recovered element is not idempotent")
        total = field.add(total, e)
        for j, f in enumerate(es):
            if i != j and not field.is_zero(a.mul(e, f)):
                raise AssertionError("recovered idempotents are not orthogonal")
    if not field.eq(field.canon(total), a.unit):
        raise AssertionError("recovered idempotents do not sum to 1")
    a.idempotents = [field.copy(e) for e in es]
    a.idempotents_primitive = True
    return es


def block_count(a, seed=0):
    """Number of indecomposable two-sided ideal blocks."""
    return len(decompose(regular_bimodule(a), seed=seed).summands)


def is_connected(a, seed=0):
    return block_count(a, seed=seed) == 1


def is_symmetric(a, seed=0):
    """Whether the regular bimodule is isomorphic to its linear dual."""
    reg = regular_bimodule(a)
    return are_isomorphic(reg, dual_module(reg), seed=seed)


def fingerprint(a, seed=0):
    """Deterministic JSON-ready invariants used to pin down catalog entries."""
    dec = decompose(left_regular_module(a), seed=seed)
    projectives = []
    for cls in dec.classes:
        rep = dec.summands[cls[0]].module
        top, _ = top_of(rep)
        projectives.append([rep.dim, top.dim, len(cls)])
    projectives.sort()
    return {
        "dim": a.dim,
        "field": a.field.name,
        "commutative": a.is_commutative(),
        "loewy_layers": a.loewy_layer_dims(),
        "center_dim": center(a).dim,
        "blocks": block_count(a, seed=seed + 7),
        "projectives": projectives,
    }
