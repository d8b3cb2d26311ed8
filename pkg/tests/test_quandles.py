import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandlekit import _kernels
from quandlekit.errors import (
    AutomorphismMismatch,
    ColumnNotBijective,
    NotIdempotent,
    NotNormal,
    NotSelfDistributive,
    SizeMismatch,
)
from quandlekit.groups import (
    automorphisms,
    catalog,
    center,
    cyclic_group,
    identity_automorphism,
    normal_subgroups,
)
from quandlekit.quandles import (
    conj_quandle,
    dihedral_quandle,
    format_quandle_file,
    galex,
    hopf_extension,
    is_homomorphism,
    isomorphic,
    parse_quandle_file,
    relabel,
    restrict,
    subquandle_closure,
    trivial_quandle,
    validate_quandle,
)


def q8_sigma():
    g = catalog("quaternion8")
    sigma = next(a for a in automorphisms(g) if a.map == (0, 1, 4, 5, 6, 7, 2, 3))
    return g, sigma


class TestValidateQuandle:
    def test_trivial_order4(self):
        q = trivial_quandle(4)
        assert q.order == 4
        assert q.op(2, 3) == 2

    def test_r3_rows(self):
        q = dihedral_quandle(3)
        assert q.table.tolist() == [[0, 2, 1], [2, 1, 0], [1, 0, 2]]
        # brute-force axiom oracle, all 27 triples
        t = q.table
        for x, y, z in itertools.product(range(3), repeat=3):
            assert t[t[x, y], z] == t[t[x, z], t[y, z]]
        for x in range(3):
            assert t[x, x] == x
            assert sorted(t[:, x]) == [0, 1, 2]

    def test_column_not_bijective(self):
        with pytest.raises(ColumnNotBijective) as exc:
            validate_quandle([[0, 0], [0, 1]])
        assert exc.value.y == 0

    def test_not_idempotent(self):
        with pytest.raises(NotIdempotent) as exc:
            validate_quandle([[1, 0], [0, 1]])
        assert exc.value.x == 0

    def test_not_self_distributive(self):
        # columns are permutations, diagonal fixed, but distributivity fails
        t = [[0, 2, 0],
             [2, 1, 1],
             [1, 0, 2]]
        with pytest.raises(NotSelfDistributive) as exc:
            validate_quandle(t)
        assert exc.value.triple == (0, 1, 0)

    def test_inverse_table(self):
        q = dihedral_quandle(5)
        for x in range(5):
            for y in range(5):
                assert q.inv_op(q.op(x, y), y) == x
                assert q.op(q.inv_op(x, y), y) == x


class TestKernelBackends:
    """The numba fast path and the numpy fallback must agree bit-for-bit,
    including the position of the first reported violation."""

    def test_agreement_on_valid_tables(self):
        for q in (dihedral_quandle(7), trivial_quandle(5),
                  conj_quandle(catalog("symmetric", 3))):
            t = np.asarray(q.table)
            assert _kernels.self_distrib_violation(t) == \
                _kernels.self_distrib_violation_numpy(t)
            assert _kernels.hopf_witness_scan(t) == \
                _kernels.hopf_witness_numpy(t)
            assert _kernels.trefoil_witness_scan(t) == \
                _kernels.trefoil_witness_numpy(t)

    def test_agreement_on_violations(self):
        t = np.array([[0, 2, 0],
                      [2, 1, 1],
                      [1, 0, 2]], dtype=np.int64)
        v = _kernels.self_distrib_violation(t)
        assert v == _kernels.self_distrib_violation_numpy(t)
        assert v != (-1, -1, -1)

    def test_assoc_agreement(self):
        g = catalog("dihedral", 4)
        t = np.asarray(g.table)
        assert _kernels.assoc_violation(t) == _kernels.assoc_violation_numpy(t) \
            == (-1, -1, -1)


class TestConjQuandle:
    def test_abelian_gives_trivial(self):
        q = conj_quandle(cyclic_group(3))
        assert q.same_table(trivial_quandle(3))

    def test_s3_transpositions_closed(self):
        g = catalog("symmetric", 3)
        q = conj_quandle(g)
        perms = sorted(itertools.permutations(range(3)))
        transpositions = {i for i, p in enumerate(perms)
                          if sorted(p) == [0, 1, 2] and
                          sum(p[a] != a for a in range(3)) == 2}
        two = sorted(transpositions)[:2]
        assert subquandle_closure(q, set(two)) == transpositions

    def test_q8_center_columns_fixed(self):
        g = catalog("quaternion8")
        q = conj_quandle(g)
        for y in center(g).elements:
            assert all(q.op(x, y) == x for x in range(8))

    def test_fixed_pair_symmetry(self, catalog16):
        # in any conjugation quandle, x <| y = x implies y <| x = y
        for g in catalog16:
            q = conj_quandle(g)
            t = q.table
            ar = np.arange(q.order)
            fixed = t == ar[:, None]
            assert np.array_equal(fixed, fixed.T)


class TestGalex:
    def test_identity_automorphism_gives_trivial(self):
        g = catalog("dihedral", 3)
        q = galex(g, identity_automorphism(g))
        assert q.same_table(trivial_quandle(6))

    def test_q8_sigma_value(self):
        g, sigma = q8_sigma()
        q = galex(g, sigma)
        # 1 <| i = sigma(-i) * i = (-j) * i = k
        assert q.op(0, 2) == 6

    def test_z4_inversion_is_dihedral(self):
        g = cyclic_group(4)
        inv_aut = next(a for a in automorphisms(g) if a.map == (0, 3, 2, 1))
        q = galex(g, inv_aut)
        assert q.same_table(dihedral_quandle(4))

    def test_mismatch(self):
        g = cyclic_group(4)
        aut = identity_automorphism(cyclic_group(5))
        with pytest.raises(AutomorphismMismatch):
            galex(g, aut)


class TestHopfExtension:
    def test_z2_z2_trivial(self):
        g = cyclic_group(2)
        full = next(s for s in normal_subgroups(g) if len(s.elements) == 2)
        q = hopf_extension(g, full)
        assert q.order == 4
        assert q.same_table(trivial_quandle(4))

    def test_s3_a3_order18(self):
        g = catalog("symmetric", 3)
        a3 = next(s for s in normal_subgroups(g) if len(s.elements) == 3)
        q = hopf_extension(g, a3)
        assert q.order == 18
        # axioms re-checked by brute force
        t = q.table
        for x, y, z in itertools.product(range(0, 18, 5), range(18), range(18)):
            assert t[t[x, y], z] == t[t[x, z], t[y, z]]

    def test_s3_s3_proof_witness_pair(self):
        g = catalog("symmetric", 3)
        full = next(s for s in normal_subgroups(g) if len(s.elements) == 6)
        q = hopf_extension(g, full)
        perms = sorted(itertools.permutations(range(3)))
        A = perms.index((1, 0, 2))    # swap 0,1
        B = perms.index((2, 1, 0))    # swap 0,2
        x = 0                         # (e, e)
        y = A * 6 + B                 # (A, B)
        assert q.op(x, y) == x
        assert q.op(y, x) != y

    def test_not_normal(self):
        g = catalog("symmetric", 3)
        from quandlekit.groups import subgroups
        bad = next(s for s in subgroups(g) if len(s.elements) == 2)
        with pytest.raises(NotNormal):
            hopf_extension(g, bad)


class TestSubquandleClosure:
    def test_trivial_singleton(self):
        assert subquandle_closure(trivial_quandle(4), {1}) == {1}

    def test_r3_pair(self):
        assert subquandle_closure(dihedral_quandle(3), {0, 1}) == {0, 1, 2}

    def test_closure_revalidates(self, catalog16):
        for g in catalog16:
            if g.order > 8:
                continue
            q = conj_quandle(g)
            for x in range(q.order):
                sub = subquandle_closure(q, {x})
                restrict(q, sub)   # raises if not a quandle


class TestHomomorphisms:
    def test_identity(self):
        q = dihedral_quandle(3)
        assert is_homomorphism([0, 1, 2], q, q)

    def test_constant(self):
        q = dihedral_quandle(3)
        assert is_homomorphism([1, 1, 1], q, q)

    def test_collapsing_map_not_hom(self):
        # f(1 <| 2) = f(0) = 0 but f(1) <| f(2) = 0 <| 1 = 2
        q = dihedral_quandle(3)
        assert not is_homomorphism([0, 0, 1], q, q)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            is_homomorphism([0, 1], dihedral_quandle(3), dihedral_quandle(3))


class TestIsomorphic:
    def test_relabeled_r3(self):
        q = dihedral_quandle(3)
        q2 = relabel(q, [1, 2, 0])
        m = isomorphic(q, q2)
        assert m is not None
        assert is_homomorphism(m, q, q2)
        assert sorted(m) == [0, 1, 2]

    def test_r3_vs_trivial(self):
        assert isomorphic(dihedral_quandle(3), trivial_quandle(3)) is None

    def test_different_orders(self):
        assert isomorphic(dihedral_quandle(3), trivial_quandle(4)) is None

    def test_reflexive_and_symmetric(self, random_quandles):
        for q in random_quandles[:20]:
            m = isomorphic(q, q)
            assert m is not None
            q2 = relabel(q, list(reversed(range(q.order))))
            fwd = isomorphic(q, q2)
            assert fwd is not None
            inv = [0] * q.order
            for i, v in enumerate(fwd):
                inv[v] = i
            assert is_homomorphism(inv, q2, q)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_agrees_with_exhaustive_search(self, n, random_quandles):
        pool = [q for q in random_quandles if q.order == n][:4]
        pool.append(trivial_quandle(n))
        pool.append(dihedral_quandle(n))
        for a, b in itertools.combinations_with_replacement(pool, 2):
            brute = any(relabel(a, list(p)).same_table(b)
                        for p in itertools.permutations(range(n)))
            assert (isomorphic(a, b) is not None) == brute


class TestConstructorsValidate:
    def test_all_catalog_constructions_pass(self, catalog16):
        for g in catalog16:
            if g.order > 8:
                continue
            validate_quandle(np.array(conj_quandle(g).table))
            for aut in automorphisms(g):
                validate_quandle(np.array(galex(g, aut).table))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.randoms())
def test_relabel_preserves_validity(n, rnd):
    q = dihedral_quandle(n)
    p = list(range(n))
    rnd.shuffle(p)
    q2 = relabel(q, p)   # would raise if invalid
    assert isomorphic(q, q2) is not None


class TestQuandleFiles:
    def test_roundtrip(self):
        q = dihedral_quandle(5)
        q2 = parse_quandle_file(format_quandle_file(q))
        assert q.same_table(q2)

    def test_comment_lines(self):
        q = parse_quandle_file("# R3\nquandle 3\n0 2 1\n2 1 0\n1 0 2\n")
        assert q.same_table(dihedral_quandle(3))

    def test_bad_header(self):
        from quandlekit.errors import FileFormatError
        with pytest.raises(FileFormatError):
            parse_quandle_file("group 3\n0 0 0\n")
