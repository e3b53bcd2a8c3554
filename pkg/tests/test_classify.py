"""The 13 planar classes, catalog ingestion, and the structural filter."""

import random

import pytest

from lagmono.classify import (
    CLASS_NAMES_2D,
    catalog_n2,
    classify_n2,
    conjecture_filter,
    embed_symmetric_product,
    gl_order_feasible,
    identify_class_n2,
    ingest_catalog,
    toric_realized_labels,
)
from lagmono.errors import NonUnimodularError, NotFiniteError, ParseError, TooLargeError
from lagmono.groups import MatrixGroup
from lagmono.intlat import IntMat, matrix_order


class TestCatalog13:
    def test_thirteen_entries(self):
        catalog = catalog_n2()
        assert catalog.names() == CLASS_NAMES_2D

    def test_axis_pair_group(self):
        group = catalog_n2().group("2f")
        expected = {
            IntMat.identity(2),
            IntMat.from_rows([[-1, 0], [0, -1]]),
            IntMat.from_rows([[1, 0], [0, -1]]),
            IntMat.from_rows([[-1, 0], [0, 1]]),
        }
        assert set(group.elements) == expected

    def test_hexagonal_dihedral_order(self):
        assert catalog_n2().group("6ft").order == 12

    def test_expected_orders(self):
        orders = {name: catalog_n2().group(name).order for name in CLASS_NAMES_2D}
        assert orders == {
            "1": 1, "1f": 2, "1t": 2, "2": 2, "2f": 4, "2t": 4,
            "3": 3, "3f": 6, "3t": 6, "4": 4, "4ft": 8, "6": 6, "6ft": 12,
        }

    def test_labels_roundtrip(self):
        for name, group in catalog_n2().entries:
            assert identify_class_n2(group) == name

    def test_every_element_finite_order(self):
        for _, group in catalog_n2().entries:
            for g in group:
                assert matrix_order(g, cap=12) in (1, 2, 3, 4, 6)


def random_unimodular(rng: random.Random) -> tuple[IntMat, IntMat]:
    u = IntMat.identity(2)
    u_inv = IntMat.identity(2)
    basic = []
    for k in (-2, -1, 1, 2):
        basic.append(
            (IntMat.from_rows([[1, k], [0, 1]]), IntMat.from_rows([[1, -k], [0, 1]]))
        )
        basic.append(
            (IntMat.from_rows([[1, 0], [k, 1]]), IntMat.from_rows([[1, 0], [-k, 1]]))
        )
    basic.append((IntMat.from_rows([[0, 1], [1, 0]]), IntMat.from_rows([[0, 1], [1, 0]])))
    for _ in range(4):
        s, s_inv = rng.choice(basic)
        u = u @ s
        u_inv = s_inv @ u_inv
    return u, u_inv


class TestIdentify:
    def test_transposition_class(self):
        group = MatrixGroup.from_generators(2, [IntMat.from_rows([[0, 1], [1, 0]])])
        assert identify_class_n2(group) == "1t"

    def test_axis_class(self):
        group = MatrixGroup.from_generators(2, [IntMat.from_rows([[1, 0], [0, -1]])])
        assert identify_class_n2(group) == "1f"

    def test_conjugation_invariance_hundred_conjugators(self):
        rng = random.Random(23)
        count = 0
        for name, group in catalog_n2().entries:
            for _ in range(8):
                u, u_inv = random_unimodular(rng)
                assert (u @ u_inv).is_identity()
                conj = group.conjugate(u, u_inv)
                assert identify_class_n2(conj) == name
                count += 1
        assert count >= 100


class TestClassify2D:
    def test_impossible_set(self):
        verdicts = {v.name: v for v in classify_n2()}
        impossible = {name for name, v in verdicts.items() if not v.admissible}
        assert impossible == {"2t", "3t", "4", "4ft", "6", "6ft"}

    def test_axis_pair_admissible(self):
        verdicts = {v.name: v for v in classify_n2()}
        assert verdicts["2f"].admissible
        assert verdicts["2f"].toric_tag == "TORIC_REALIZED"

    def test_open_classes_are_toric_impossible(self):
        verdicts = {v.name: v for v in classify_n2()}
        for name in ("2", "3"):
            assert verdicts[name].admissible
            assert verdicts[name].toric_tag == "TORIC_IMPOSSIBLE"

    def test_realization_table(self):
        realized = toric_realized_labels()
        assert realized == {
            "1": ("bl2cp2", "bl3cp2"),
            "1f": ("cxcp1",),
            "1t": ("bl1cp2", "c2"),
            "2f": ("cp1xcp1",),
            "3f": ("cp2",),
        }


ORDER3_REP = "group ord3-d{d}\ndim 3\ngen\n1 0 {d}\n0 0 -1\n0 1 -1\n"
ORDER4_REP = "group ord4-d{d}\ndim 3\ngen\n1 0 {d}\n0 0 -1\n0 1 0\n"


def n3_representative_catalog() -> str:
    blocks = [ORDER3_REP.format(d=0), ORDER3_REP.format(d=1),
              ORDER4_REP.format(d=0), ORDER4_REP.format(d=1)]
    return "\n".join(blocks)


class TestIngest:
    def test_four_low_dimensional_representatives(self):
        catalog = ingest_catalog(n3_representative_catalog())
        assert len(catalog.entries) == 4
        orders = [group.order for _, group in catalog.entries]
        assert orders == [3, 3, 4, 4]

    def test_empty_catalog(self):
        assert ingest_catalog("").entries == ()

    def test_rejects_non_unimodular(self):
        with pytest.raises(NonUnimodularError):
            ingest_catalog("group bad\ndim 2\ngen\n2 0\n0 1\n")

    def test_rejects_infinite(self):
        with pytest.raises(NotFiniteError):
            ingest_catalog("group shear\ndim 2\ngen\n1 1\n0 1\n", cap=40)

    def test_rejects_duplicate_names(self):
        text = "group a\ndim 2\ngen\n1 0\n0 1\n\ngroup a\ndim 2\ngen\n1 0\n0 1\n"
        with pytest.raises(ParseError):
            ingest_catalog(text)

    def test_q_class_flag(self):
        catalog = ingest_catalog("classes q\ngroup a\ndim 2\ngen\n-1 0\n0 -1\n")
        assert catalog.q_class


class TestEmbedding:
    def test_klein_four_into_two_swaps(self):
        group = MatrixGroup.from_generators(
            2, [IntMat.from_rows([[-1, 0], [0, 1]]), IntMat.from_rows([[1, 0], [0, -1]])]
        )
        embedding = embed_symmetric_product(group, (2, 2))
        assert embedding is not None
        images = {g: img for g, img in embedding}
        assert len(set(images.values())) == 4

    def test_cyclic_four_has_no_involution_embedding(self):
        group = MatrixGroup.from_generators(2, [IntMat.from_rows([[0, -1], [1, 0]])])
        assert embed_symmetric_product(group, (2, 2, 2)) is None

    def test_symmetric_three_realization(self):
        group = catalog_n2().group("3f")
        embedding = embed_symmetric_product(group, (3,))
        assert embedding is not None
        images = dict(embedding)
        for a in group:
            for b in group:
                pa, pb = images[a], images[b]
                composed = tuple(
                    tuple(x[y[i]] for i in range(len(y))) for x, y in zip(pa, pb)
                )
                assert composed == images[a @ b]

    def test_cap_enforced(self):
        group = catalog_n2().group("6ft")
        with pytest.raises(TooLargeError):
            embed_symmetric_product(group, (3, 2), cap=5)


class TestGlOrderFeasible:
    def test_rank_three_orders(self):
        assert [m for m in range(1, 13) if gl_order_feasible(m, 3)] == [1, 2, 3, 4, 6]

    def test_degree_obstruction(self):
        assert not gl_order_feasible(5, 3)
        assert gl_order_feasible(5, 4)

    def test_plane_rotations(self):
        assert gl_order_feasible(4, 2)
        assert gl_order_feasible(6, 2)
        assert not gl_order_feasible(8, 2)

    def test_brute_force_companion_oracle(self):
        # Independent oracle: build every block-diagonal stack of companion
        # matrices of cyclotomic polynomials fitting in k columns and record
        # the matrix orders actually achieved by powering.
        from lagmono.cyclotomic import cyclotomic_polynomial

        def companion(d):
            phi = cyclotomic_polynomial(d)
            n = len(phi) - 1
            rows = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
            rows.append([-phi[j] for j in range(n)])
            return IntMat.from_rows(rows)

        for k in range(1, 5):
            candidates = [
                d for d in range(1, 2 * k * k + 3)
                if len(cyclotomic_polynomial(d)) - 1 <= k
            ]
            achievable = {1}

            def extend(remaining, start, mat):
                if mat is not None:
                    full = _block_diag(mat, IntMat.identity(remaining)) if remaining else mat
                    order = matrix_order(full, cap=1000)
                    assert order is not None
                    achievable.add(order)
                for idx in range(start, len(candidates)):
                    d = candidates[idx]
                    size = len(cyclotomic_polynomial(d)) - 1
                    if size <= remaining:
                        block = companion(d)
                        stacked = block if mat is None else _block_diag(mat, block)
                        extend(remaining - size, idx, stacked)

            extend(k, 0, None)
            for m in range(1, 31):
                assert gl_order_feasible(m, k) == (m in achievable), (m, k)


def _block_diag(a: IntMat, b: IntMat) -> IntMat:
    n, m = a.nrows, b.nrows
    rows = []
    for i in range(n):
        rows.append(tuple(a.rows[i]) + (0,) * m)
    for i in range(m):
        rows.append((0,) * n + tuple(b.rows[i]))
    return IntMat.from_rows(rows)


class TestConjectureFilter:
    def test_reflection_extensions_ruled_out(self):
        text_parts = []
        for d in (0, 1):
            text_parts.append(
                f"group ext3-d{d}\ndim 3\ngen\n-1 0 0\n0 -1 0\n0 0 -1\ngen\n1 0 {d}\n0 0 -1\n0 1 -1\n"
            )
            for sign in ("1", "-1"):
                text_parts.append(
                    f"group ext4-{sign}-d{d}\ndim 3\ngen\n-1 0 0\n0 -1 0\n0 0 -1\ngen\n{sign} 0 {d}\n0 0 -1\n0 1 0\n"
                )
        catalog = ingest_catalog("\n".join(text_parts))
        verdicts = conjecture_filter(catalog)
        assert all(v.status == "RULED_OUT" for v in verdicts)
        assert all(v.witness is not None for v in verdicts)

    def test_sign_group_lands_in_case2(self):
        text = (
            "group signs\ndim 3\n"
            "gen\n-1 0 0\n0 1 0\n0 0 1\n"
            "gen\n1 0 0\n0 -1 0\n0 0 1\n"
            "gen\n1 0 0\n0 1 0\n0 0 -1\n"
        )
        verdicts = conjecture_filter(ingest_catalog(text))
        verdict = verdicts[0]
        assert verdict.status in ("CASE2", "BOTH")
        assert verdict.parts == (2, 2, 2)
        assert verdict.embedding is not None

    def test_planar_catalog_consistent_with_classification(self):
        verdicts = {v.name: v for v in conjecture_filter(catalog_n2())}
        ruled_out = {name for name, v in verdicts.items() if v.status == "RULED_OUT"}
        assert ruled_out == {"2t", "3t", "4", "4ft", "6", "6ft"}
        for name, v in verdicts.items():
            if name not in ruled_out:
                assert v.status in ("CASE2", "BOTH", "CASE1_NECESSARY")
