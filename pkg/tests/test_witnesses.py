"""J-order witnesses: split certificates, quality checks, transports, search.

Fixture pairs mirror the worked small cases: truncated polynomial quotient
chains, the zigzag and truncated-cycle group actions, and the Kronecker
witness whose tensor collapses onto the dual numbers. Expected dimensions,
coordinates, and flags are derived by hand next to each assertion.
"""

import numpy as np
import pytest

from jorder import linalg
from jorder.algebras import algebra_from_quiver, linear_quiver_algebra, tensor_algebra
from jorder.decomp import (
    are_isomorphic,
    complete_primitive_idempotents,
    decompose,
    divides_indecomposable,
    explicit_isomorphism,
    summand_split_maps,
)
from jorder.errors import HypothesisViolated, NotASummand, NotSurjective
from jorder.fields import GF, QQ
from jorder.groups import (
    AlgebraAction,
    FiniteGroup,
    invariant_subalgebra,
    skew_group_algebra,
)
from jorder.modules import (
    Module,
    direct_sum,
    dual_module,
    outer_tensor,
    projective_indecomposables,
    quotient_module,
    radical_sub_rows,
    random_left_module,
    regular_bimodule,
    submodule,
    tensor_over,
    top_of,
    twist_right,
    zero_module,
)
from jorder.quivers import parse_presentation
from jorder.witnesses import (
    JWitnessPair,
    _op_left_as_right,
    bimodule_as_env_module,
    check_algebra_hom,
    compose_witnesses,
    embedding_witness_pairs,
    env_module_as_bimodule,
    faithful_projinj_check,
    generators_check,
    is_adjoint_pair_witness,
    is_k_split,
    loewy_experiment,
    lrproj_projectivity_check,
    quotient_witness,
    replay_certificate,
    restriction_bimodules,
    separable_quality,
    transport_opposite,
    transport_tensor,
    verify_j_equiv,
    verify_j_geq,
    witness_search,
)


def qa(text):
    field, pres = parse_presentation(text)
    return algebra_from_quiver(pres, field)


ZIGZAG = (
    "field {f}\nvertex 1\nvertex 2\n"
    "arrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a*b\nrelation b*a\n"
)

KRONECKER = "field {f}\nvertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n"


def trunc_poly(k, f="GF(101)"):
    rel = "*".join(["x"] * k)
    return qa(f"field {f}\nvertex 1\narrow x: 1 -> 1\nrelation {rel}\n")


def truncated_cycle(f, n, k):
    lines = [f"field {f}"]
    lines += [f"vertex {i}" for i in range(1, n + 1)]
    lines += [f"arrow a{i}: {i} -> {i % n + 1}" for i in range(1, n + 1)]
    for v in range(1, n + 1):
        lines.append("relation " + "*".join(f"a{(v - 1 + t) % n + 1}" for t in range(k)))
    return qa("\n".join(lines))


def swap_action(zz):
    field = zz.field
    order = {lab: i for i, lab in enumerate(zz.labels)}
    mat = field.zeros((4, 4))
    for x, y in (("e_1", "e_2"), ("e_2", "e_1"), ("a", "b"), ("b", "a")):
        mat[order[y], order[x]] = field.one
    return AlgebraAction(FiniteGroup.cyclic(2), zz, [field.eye(4), mat])


def rotation_action(alg, n):
    field = alg.field
    order = {lab: i for i, lab in enumerate(alg.labels)}

    def rot(lab):
        if lab.startswith("e_"):
            return f"e_{int(lab[2:]) % n + 1}"
        return "*".join(f"a{int(p[1:]) % n + 1}" for p in lab.split("*"))

    mat = field.zeros((alg.dim, alg.dim))
    for lab, i in order.items():
        mat[order[rot(lab)], i] = field.one
    mats = [field.eye(alg.dim)]
    cur = field.eye(alg.dim)
    for _ in range(n - 1):
        cur = field.canon(field.matmul(mat, cur))
        mats.append(cur)
    return AlgebraAction(FiniteGroup.cyclic(n), alg, mats)


def kronecker_witness(field_name):
    """The hand-built (M, N) pair over (dual numbers, Kronecker quiver)."""
    d = trunc_poly(2, field_name)
    th = qa(KRONECKER.format(f=field_name))
    f = d.field
    lm = f.zeros((2, 4, 4))
    rm = f.zeros((4, 4, 4))
    lm[0] = f.eye(4)
    lm[1][1, 0] = f.one
    lm[1][3, 2] = f.one
    for i in (0, 1):
        rm[0][i, i] = f.one
    for i in (2, 3):
        rm[1][i, i] = f.one
    rm[2][0, 2] = f.one
    rm[2][1, 3] = f.one
    rm[3][0, 2] = f.one
    rm[3][1, 2] = f.one
    rm[3][1, 3] = f.one
    m = Module(d, th, lm, rm, "M", check=True)
    ln = f.zeros((4, 4, 4))
    rn = f.zeros((2, 4, 4))
    for i in (0, 1):
        ln[0][i, i] = f.one
    for i in (2, 3):
        ln[1][i, i] = f.one
    ln[2][2, 0] = f.one
    ln[2][3, 1] = f.one
    ln[3][2, 0] = f.one
    ln[3][3, 0] = f.one
    ln[3][3, 1] = f.one
    rn[0] = f.eye(4)
    rn[1][1, 0] = f.one
    rn[1][3, 2] = f.one
    n = Module(th, d, ln, rn, "N", check=True)
    return d, th, m, n


@pytest.fixture(scope="module")
def zz():
    return qa(ZIGZAG.format(f="GF(101)"))


@pytest.fixture(scope="module")
def kron():
    return kronecker_witness("GF(101)")


class TestWitnessPairValidation:
    def test_one_sided_module_rejected(self, zz):
        reg = regular_bimodule(zz)
        left_only = reg.restrict_left()
        with pytest.raises(ValueError):
            JWitnessPair(zz, zz, left_only, reg)
        with pytest.raises(ValueError):
            JWitnessPair(zz, zz, reg, left_only)

    def test_side_algebras_must_match(self, zz):
        d = trunc_poly(2)
        reg = regular_bimodule(zz)
        with pytest.raises(ValueError):
            JWitnessPair(zz, d, reg, reg)


class TestIdentityWitness:
    def test_regular_pair_verifies_with_all_flags(self, zz):
        w = JWitnessPair(zz, zz, regular_bimodule(zz), regular_bimodule(zz))
        cert = verify_j_geq(w)
        assert cert.direction == "geq"
        assert cert.tensor_dim == 4
        assert cert.quality_flags == {
            "left_right_projective": True,
            "adjoint_pair": True,
            "generators_check": True,
            "faithful_check": True,
        }
        assert replay_certificate(cert)

    def test_split_pair_is_exact(self, zz):
        w = JWitnessPair(zz, zz, regular_bimodule(zz), regular_bimodule(zz))
        cert = verify_j_geq(w, quality=False)
        f = zz.field
        assert f.eq(f.matmul(cert.retraction, cert.section), f.eye(4))

    def test_decomposition_ref_lists_classes(self, zz):
        w = JWitnessPair(zz, zz, regular_bimodule(zz), regular_bimodule(zz))
        cert = verify_j_geq(w, quality=False)
        # the zigzag regular bimodule is connected, hence a single class
        assert cert.decomposition_ref["regular_classes"] == [(4, 1)]
        assert cert.decomposition_ref["tensor_classes"] == [(4, 1)]


class TestReplayTamper:
    def test_tampered_section_fails_replay(self, zz):
        w = JWitnessPair(zz, zz, regular_bimodule(zz), regular_bimodule(zz))
        cert = verify_j_geq(w, quality=False)
        f = zz.field
        cert.section = f.canon(np.zeros_like(cert.section))
        assert not replay_certificate(cert)

    def test_tampered_dimension_fails_replay(self, zz):
        w = JWitnessPair(zz, zz, regular_bimodule(zz), regular_bimodule(zz))
        cert = verify_j_geq(w, quality=False)
        cert.tensor_dim = 5
        assert not replay_certificate(cert)


class TestQuotientWitnesses:
    def test_x3_onto_x2_certificate(self):
        a3, a2 = trunc_poly(3), trunc_poly(2)
        f = a3.field
        phi = f.zeros((2, 3))
        phi[0, 0] = f.one
        phi[1, 1] = f.one
        w = quotient_witness(a3, a2, phi)
        cert = verify_j_geq(w)
        # x acts as zero across the quotient, so the balancing collapses
        # the tensor onto the regular bimodule itself: X = 0.
        assert cert.tensor_dim == 2
        assert replay_certificate(cert)
        assert cert.quality_flags["generators_check"]
        assert cert.quality_flags["faithful_check"]
        assert not cert.quality_flags["left_right_projective"]

    def test_canonical_multiplication_split(self):
        a3, a2 = trunc_poly(3), trunc_poly(2)
        f = a3.field
        phi = f.zeros((2, 3))
        phi[0, 0] = f.one
        phi[1, 1] = f.one
        w = quotient_witness(a3, a2, phi)
        cert = verify_j_geq(w, quality=False)
        tr = cert.tensor
        eta = f.zeros((cert.tensor_dim, 2))
        for i in range(2):
            eta[:, i] = tr.pure_tensor(a2.basis_vector(i), a2.unit)
        mul_big = f.zeros((2, 4))
        for i in range(2):
            for j in range(2):
                mul_big[:, i * 2 + j] = a2.mul(a2.basis_vector(i), a2.basis_vector(j))
        psi = f.matmul(mul_big, tr.section)
        assert f.eq(f.matmul(psi, f.canon(eta)), f.eye(2))

    def test_quotient_chain_composes(self):
        a4, a3, a2 = trunc_poly(4), trunc_poly(3), trunc_poly(2)
        f = a4.field
        phi43 = f.zeros((3, 4))
        phi32 = f.zeros((2, 3))
        for i in range(3):
            phi43[i, i] = f.one
        for i in range(2):
            phi32[i, i] = f.one
        w43 = quotient_witness(a4, a3, phi43)
        w32 = quotient_witness(a3, a2, phi32)
        w42 = compose_witnesses(w32, w43)
        assert w42.a is a2 and w42.b is a4
        cert = verify_j_geq(w42, quality=False)
        assert cert.tensor_dim == 2
        assert replay_certificate(cert)

    def test_compose_requires_shared_middle(self):
        a4, a3, a2 = trunc_poly(4), trunc_poly(3), trunc_poly(2)
        f = a4.field
        phi43 = f.zeros((3, 4))
        phi32 = f.zeros((2, 3))
        for i in range(3):
            phi43[i, i] = f.one
        for i in range(2):
            phi32[i, i] = f.one
        w43 = quotient_witness(a4, a3, phi43)
        w32 = quotient_witness(a3, a2, phi32)
        with pytest.raises(ValueError):
            compose_witnesses(w43, w32)

    def test_not_surjective(self):
        a3, a2 = trunc_poly(3), trunc_poly(2)
        f = a3.field
        phi = f.zeros((2, 3))
        phi[0, 0] = f.one  # e -> e, x -> 0: an algebra map but not onto
        with pytest.raises(NotSurjective):
            quotient_witness(a3, a2, phi)

    def test_not_a_homomorphism(self):
        a3, a2 = trunc_poly(3), trunc_poly(2)
        f = a3.field
        phi = f.zeros((2, 3))
        phi[0, 0] = f.one
        phi[0, 1] = f.one  # x -> e breaks multiplicativity
        with pytest.raises(ValueError):
            quotient_witness(a3, a2, phi)

    def test_truncated_cycle_onto_linear_quotient(self):
        lam = truncated_cycle("GF(101)", 3, 2)
        target = qa(
            "field GF(101)\nvertex 1\nvertex 2\nvertex 3\n"
            "arrow a1: 1 -> 2\narrow a2: 2 -> 3\nrelation a1*a2\n"
        )
        f = lam.field
        src = {lab: i for i, lab in enumerate(lam.labels)}
        phi = f.zeros((5, 6))
        for j, lab in enumerate(target.labels):  # a3 -> 0 kills the closing arrow
            phi[j, src[lab]] = f.one
        cert = verify_j_geq(quotient_witness(lam, target, phi), quality=False)
        assert cert.tensor_dim == 5
        assert replay_certificate(cert)


class TestNotASummand:
    def test_simple_bimodule_witness_fails_with_evidence(self):
        d = trunc_poly(2)
        f = d.field
        lm = f.zeros((2, 1, 1))
        lm[0][0, 0] = f.one
        simple = Module(d, d, lm, lm, "S", check=True)
        w = JWitnessPair(d, d, simple, simple)
        with pytest.raises(NotASummand) as exc:
            verify_j_geq(w, quality=False)
        evidence = exc.value.evidence
        assert evidence["regular_classes"] == [(2, 1)]
        assert evidence["tensor_classes"] == [(1, 1)]
        assert evidence["missing_dim"] == 2


class TestKroneckerWitness:
    def test_tensor_relations_frozen(self, kron):
        d, th, m, n = kron
        f = d.field
        tr = tensor_over(m, n)
        assert tr.module.dim == 2

        def pt(i, j):
            return tr.pure_tensor(f.eye(4)[i], f.eye(4)[j])

        one, x = f.eye(2)[0], f.eye(2)[1]
        assert f.eq(pt(0, 0), one) and f.eq(pt(2, 2), one)
        assert f.eq(pt(0, 1), x) and f.eq(pt(2, 3), x)
        assert f.eq(pt(3, 2), x) and f.eq(pt(1, 0), x)
        assert f.is_zero(pt(3, 3))
        assert f.is_zero(pt(0, 2)) and f.is_zero(pt(1, 3))
        xm1 = f.matmul(m.left_mats[1], f.eye(4)[0])
        n1x = f.matmul(n.right_mats[1], f.eye(4)[0])
        assert f.eq(tr.pure_tensor(xm1, f.eye(4)[0]), tr.pure_tensor(f.eye(4)[0], n1x))

    @pytest.mark.parametrize("field_name", ["GF(101)", "Q"])
    def test_certificate_both_fields(self, field_name):
        d, th, m, n = kronecker_witness(field_name)
        w = JWitnessPair(d, th, m, n)
        cert = verify_j_geq(w, quality=False)
        assert cert.tensor_dim == 2  # X = 0
        assert replay_certificate(cert)
        assert are_isomorphic(cert.tensor.module, regular_bimodule(d), seed=3)

    def test_quality_flags(self, kron):
        d, th, m, n = kron
        w = JWitnessPair(d, th, m, n)
        cert = verify_j_geq(w)
        assert cert.quality_flags == {
            "left_right_projective": False,
            "adjoint_pair": True,
            "generators_check": True,
            "faithful_check": True,
        }

    def test_separable_quality_reports_non_lrproj(self, kron):
        d, th, m, n = kron
        w = JWitnessPair(d, th, m, n)
        cert = verify_j_geq(w, quality=False)
        flags = separable_quality(w, cert)
        assert flags == {
            "m_left_right_projective": False,
            "n_left_right_projective": False,
            "adjoint_m_n": True,
            "adjoint_n_m": False,
        }

    def test_adjoint_pair_witness_gives_explicit_iso(self, kron):
        d, th, m, n = kron
        ok, iso = is_adjoint_pair_witness(m, n)
        assert ok and iso is not None
        ok_rev, iso_rev = is_adjoint_pair_witness(n, m)
        assert not ok_rev and iso_rev is None


class TestZigzagDuality:
    """The dual of the regular bimodule carries the hand-computed tables."""

    def test_dual_action_tables_entry_for_entry(self, zz):
        f = zz.field
        du = dual_module(regular_bimodule(zz))
        # basis order of the dual matches (e1, e2, a, b); rows are images
        left = {
            "e_1": [(0, 0), (2, 2)],
            "e_2": [(1, 1), (3, 3)],
            "a": [(1, 2)],  # a . f_a = f_2
            "b": [(0, 3)],  # b . f_b = f_1
        }
        right = {
            "e_1": [(0, 0), (3, 3)],
            "e_2": [(1, 1), (2, 2)],
            "a": [(0, 2)],  # f_a . a = f_1
            "b": [(1, 3)],  # f_b . b = f_2
        }
        order = {lab: i for i, lab in enumerate(zz.labels)}
        for lab, entries in left.items():
            expected = f.zeros((4, 4))
            for r, c in entries:
                expected[r, c] = f.one
            assert f.eq(du.left_mats[order[lab]], expected)
        for lab, entries in right.items():
            expected = f.zeros((4, 4))
            for r, c in entries:
                expected[r, c] = f.one
            assert f.eq(du.right_mats[order[lab]], expected)

    def test_dual_is_right_twist_by_swap(self, zz):
        f = zz.field
        du = dual_module(regular_bimodule(zz))
        c = swap_action(zz).matrices[1]
        twisted = twist_right(regular_bimodule(zz), c)
        order = {lab: i for i, lab in enumerate(zz.labels)}
        t = f.zeros((4, 4))
        t[order["b"], 0] = f.one  # f_1 -> b
        t[order["a"], 1] = f.one  # f_2 -> a
        t[order["e_1"], 2] = f.one  # f_a -> e1
        t[order["e_2"], 3] = f.one  # f_b -> e2
        for i in range(4):
            assert f.eq(f.matmul(t, du.left_mats[i]), f.matmul(twisted.left_mats[i], t))
            assert f.eq(f.matmul(t, du.right_mats[i]), f.matmul(twisted.right_mats[i], t))
        assert are_isomorphic(du, twisted, seed=2)

    def test_dual_is_not_the_untwisted_regular(self, zz):
        du = dual_module(regular_bimodule(zz))
        assert not are_isomorphic(du, regular_bimodule(zz), seed=2)
        assert explicit_isomorphism(du, regular_bimodule(zz), seed=2) is None


class TestInvariantWitnesses:
    def test_zigzag_invariants_both_directions(self, zz):
        act = swap_action(zz)
        sub, rows = invariant_subalgebra(act)
        assert sub.dim == 2
        f = zz.field
        assert f.eq(rows, f.canon(np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=object)))
        w_inv, w_alg = embedding_witness_pairs(sub, zz)
        c1, c2 = verify_j_equiv(w_inv, w_alg)
        assert c1.direction == "equiv" and c2.direction == "equiv"
        assert c1.tensor_dim == 4  # A tensored over A collapses to A
        assert c2.tensor_dim == 8  # A (x)_{A^G} A has |G| . dim A
        for cert in (c1, c2):
            assert all(cert.quality_flags.values())
        flags = separable_quality(w_inv, c1)
        assert all(flags.values())

    def test_lambda_rotation_instance(self):
        lam = truncated_cycle("GF(7)", 3, 2)
        act = rotation_action(lam, 3)
        sub, rows = invariant_subalgebra(act)
        assert sub.dim == 2
        f = lam.field
        a0 = f.canon(np.array([1, 1, 1, 0, 0, 0], dtype=object))
        a1 = f.canon(np.array([0, 0, 0, 1, 1, 1], dtype=object))
        assert f.eq(rows, f.canon(np.stack([a0, a1])))
        # a_j -> x^j extends to an algebra isomorphism with inverse
        tp2 = trunc_poly(2, "GF(7)")
        phi = f.eye(2)
        check_algebra_hom(sub, tp2, phi)
        check_algebra_hom(tp2, sub, linalg.invert(f, phi))
        w_inv, w_alg = embedding_witness_pairs(sub, lam)
        tr = tensor_over(w_alg.m, w_alg.n)
        assert tr.module.dim == 18
        dec = decompose(tr.module, seed=0)
        assert dec.class_summary() == [(6, 1), (6, 1), (6, 1)]
        reg = regular_bimodule(lam)
        hits = [
            sum(
                1
                for s in dec.summands
                if are_isomorphic(s.module, regular_bimodule(lam) if g == 0 else _twisted(reg, act, g), seed=1)
            )
            for g in range(3)
        ]
        assert hits == [1, 1, 1]
        cert = verify_j_geq(w_alg, quality=False)
        assert cert.tensor_dim == 18
        assert replay_certificate(cert)


def _twisted(reg, act, g):
    from jorder.modules import twist_left

    return twist_left(reg, act.matrices[g])


class TestSkewWitnesses:
    def test_zigzag_skew_both_properties(self, zz):
        act = swap_action(zz)
        sk, emb = skew_group_algebra(act)
        assert sk.dim == 8
        assert sk.radical_rows().shape[0] == zz.radical_rows().shape[0] * 2
        assert sk.loewy_length() == zz.loewy_length() == 2
        w_down, w_up = embedding_witness_pairs(zz, sk, rows=emb)
        c_down = verify_j_geq(w_down, quality=False)  # A | A*G as A-A-bimodule
        c_up = verify_j_geq(w_up, quality=False)  # multiplication splits
        assert c_down.tensor_dim == 8
        assert c_up.tensor_dim == 16
        assert replay_certificate(c_down) and replay_certificate(c_up)

    def test_trunc_poly_skew(self):
        d = trunc_poly(2, "GF(7)")
        f = d.field
        neg = f.eye(2)
        neg[1, 1] = f.canon(np.array(-1, dtype=object))
        act = AlgebraAction(FiniteGroup.cyclic(2), d, [f.eye(2), neg])
        sk, emb = skew_group_algebra(act)
        assert sk.dim == 4
        assert sk.radical_rows().shape[0] == 2
        assert sk.loewy_length() == d.loewy_length() == 2
        w_down, w_up = embedding_witness_pairs(d, sk, rows=emb)
        assert verify_j_geq(w_down, quality=False).tensor_dim == 4
        assert verify_j_geq(w_up, quality=False).tensor_dim == 8


class TestTransports:
    def test_opposite_transport(self, kron):
        d, th, m, n = kron
        w = JWitnessPair(d, th, m, n)
        w_op = transport_opposite(w)
        cert = verify_j_geq(w_op, quality=False)
        assert cert.tensor_dim == 2
        assert replay_certificate(cert)

    def test_tensor_transport_with_linear_quiver(self, kron):
        d, th, m, n = kron
        w = JWitnessPair(d, th, m, n)
        c = linear_quiver_algebra(GF(101), 2)
        w_t = transport_tensor(w, c)
        assert w_t.a.dim == d.dim * c.dim
        cert = verify_j_geq(w_t, quality=False)
        assert cert.tensor_dim == 2 * c.dim
        assert replay_certificate(cert)


class TestEnvConversions:
    def test_round_trip_preserves_actions(self, zz):
        reg = regular_bimodule(zz)
        env, menv = bimodule_as_env_module(reg)
        assert env.dim == 16
        back = env_module_as_bimodule(menv, zz, zz)
        f = zz.field
        assert f.eq(back.left_mats, reg.left_mats)
        assert f.eq(back.right_mats, reg.right_mats)

    def test_embedding_requires_injective_algebra_map(self, zz):
        f = zz.field
        with pytest.raises(ValueError):
            embedding_witness_pairs(zz, zz, rows=f.zeros((4, 4)))

    def test_restriction_bimodules_shapes(self):
        a3, a2 = trunc_poly(3), trunc_poly(2)
        f = a3.field
        phi = f.zeros((2, 3))
        phi[0, 0] = f.one
        phi[1, 1] = f.one
        m, n = restriction_bimodules(a3, a2, phi)
        assert m.left_algebra is a2 and m.right_algebra is a3
        assert n.left_algebra is a3 and n.right_algebra is a2


class TestKSplit:
    def test_outer_products_are_k_split(self):
        a3 = linear_quiver_algebra(GF(101), 3)
        d = trunc_poly(2)
        complete_primitive_idempotents(a3)
        dop = d.opposite()
        complete_primitive_idempotents(dop)
        p = projective_indecomposables(a3)[0][0]
        q = _op_left_as_right(projective_indecomposables(dop)[0][0], d)
        assert is_k_split(outer_tensor(p, q))

    def test_regular_of_connected_nonsemisimple_is_not(self, zz):
        assert not is_k_split(regular_bimodule(zz))

    def test_zero_bimodule_vacuously_split(self, zz):
        assert is_k_split(zero_module(zz, zz))


@pytest.fixture(scope="module")
def setup():
    a3 = linear_quiver_algebra(GF(101), 3)
    d = trunc_poly(2)
    complete_primitive_idempotents(a3)
    complete_primitive_idempotents(d)
    dop = d.opposite()
    complete_primitive_idempotents(dop)
    return a3, d, dop


class TestLrprojProjectivity:
    def test_single_outer_product(self, setup):
        a3, d, dop = setup
        p = projective_indecomposables(a3)[0][0]
        q = _op_left_as_right(projective_indecomposables(dop)[0][0], d)
        held, info = lrproj_projectivity_check(a3, d, outer_tensor(p, q))
        assert held and info == {"vacuous": False, "summands": 1}

    def test_direct_sum_of_projectives(self, setup):
        a3, d, dop = setup
        projs = projective_indecomposables(a3)
        q = _op_left_as_right(projective_indecomposables(dop)[0][0], d)
        m1 = outer_tensor(projs[0][0], q)
        m2 = outer_tensor(projs[2][0], q)
        big, _, _ = direct_sum([m1, m2, m1])
        held, info = lrproj_projectivity_check(a3, d, big)
        assert held and info["summands"] == 3

    def test_non_lrproj_is_vacuous(self, setup):
        a3, d, dop = setup
        p = projective_indecomposables(a3)[0][0]
        q = _op_left_as_right(projective_indecomposables(dop)[0][0], d)
        env, menv = bimodule_as_env_module(outer_tensor(p, q))
        rad = radical_sub_rows(menv)
        _, incl = submodule(menv, rad[:1])
        quo, _ = quotient_module(menv, incl.T)
        mq = env_module_as_bimodule(quo, a3, d)
        held, info = lrproj_projectivity_check(a3, d, mq)
        assert held and info["vacuous"]

    def test_hypotheses_enforced(self, setup):
        a3, d, dop = setup
        with pytest.raises(HypothesisViolated):
            lrproj_projectivity_check(d, d, regular_bimodule(d))
        a2 = linear_quiver_algebra(GF(101), 2)
        complete_primitive_idempotents(a2)
        p = projective_indecomposables(a3)[0][0]
        a2op = a2.opposite()
        complete_primitive_idempotents(a2op)
        q = _op_left_as_right(projective_indecomposables(a2op)[0][0], a2)
        with pytest.raises(HypothesisViolated):
            lrproj_projectivity_check(a3, a2, outer_tensor(p, q))


class TestTopBound:
    def test_indecomposable_a4_a2_bimodules(self):
        a4 = linear_quiver_algebra(GF(2), 4)
        a2 = linear_quiver_algebra(GF(2), 2)
        complete_primitive_idempotents(a4)
        a2op = a2.opposite()
        complete_primitive_idempotents(a2op)
        env = tensor_algebra(a4, a2op)
        complete_primitive_idempotents(env)
        rng = np.random.default_rng(11)
        seen = 0
        for _ in range(8):
            mod = random_left_module(env, rng, copies_cap=1)
            if mod.dim == 0:
                continue
            for s in decompose(mod, seed=7).summands:
                t, _ = top_of(s.module)
                assert t.dim <= 2
                seen += 1
        assert seen >= 8


class TestLoewyExperiment:
    def test_equal_pairs_are_consistent(self):
        d = trunc_poly(2, "GF(7)")
        f = d.field
        neg = f.eye(2)
        neg[1, 1] = f.canon(np.array(-1, dtype=object))
        act = AlgebraAction(FiniteGroup.cyclic(2), d, [f.eye(2), neg])
        sk, _ = skew_group_algebra(act)
        report = loewy_experiment([(d, sk), (d, d)])
        assert report["all_equal"]
        assert report["status"] == "conjecture-consistent"
        assert report["is_proof"] is False
        assert [r["equal"] for r in report["rows"]] == [True, True]

    def test_unequal_pair_is_flagged(self):
        report = loewy_experiment([(trunc_poly(2), trunc_poly(3))])
        assert not report["all_equal"]
        assert report["status"] == "conjecture-violating-candidate"
        assert report["is_proof"] is False


class TestWitnessSearch:
    def test_finds_witness_for_semisimple_pair(self):
        two = qa("field GF(5)\nvertex 1\nvertex 2\n")
        with pytest.warns(UserWarning):
            cert = witness_search(two, two, seed=0, budget=15)
        assert cert is not None
        assert replay_certificate(cert)

    def test_returns_none_when_no_witness_exists(self):
        d = trunc_poly(2, "GF(5)")
        k = qa("field GF(5)\nvertex 1\n")
        # every (D, k)-tensor is k-split while the regular D-bimodule is not
        assert witness_search(d, k, seed=0, budget=10) is None


class TestSummandSplitMaps:
    def test_explicit_split_of_projective(self):
        a3 = linear_quiver_algebra(GF(101), 3)
        complete_primitive_idempotents(a3)
        projs = [p for p, _, _ in projective_indecomposables(a3)]
        big, _, _ = direct_sum([projs[0], projs[1]])
        f = a3.field
        maps = summand_split_maps(projs[0], big)
        assert maps is not None
        section, retraction = maps
        assert f.eq(f.matmul(retraction, section), f.eye(projs[0].dim))
        assert divides_indecomposable(projs[0], big)
        assert not divides_indecomposable(projs[2], big)

    def test_rejects_decomposable_input(self):
        a3 = linear_quiver_algebra(GF(101), 3)
        complete_primitive_idempotents(a3)
        projs = [p for p, _, _ in projective_indecomposables(a3)]
        big, _, _ = direct_sum([projs[0], projs[1]])
        with pytest.raises(ValueError):
            summand_split_maps(big, big)


class TestGuardSemantics:
    def test_quality_checks_need_verified_certificate(self, zz):
        w = JWitnessPair(zz, zz, regular_bimodule(zz), regular_bimodule(zz))
        with pytest.raises(ValueError):
            generators_check(w, None)
        with pytest.raises(ValueError):
            faithful_projinj_check(w, None)
        with pytest.raises(ValueError):
            separable_quality(w, None)

    def test_truncated_witness_fails_before_quality(self, kron):
        """The left-socle sub-bimodule of M kills x and breaks the split."""
        d, th, m, n = kron
        f = d.field
        sub_m, _ = submodule(m, f.eye(4)[[1, 3]])
        w = JWitnessPair(d, th, sub_m, n)
        with pytest.raises(NotASummand):
            verify_j_geq(w, quality=False)
