import pytest

from mckay_slodowy.dynkin import adjacency, catalog_for_size, identify, _isomorphic
from mckay_slodowy.errors import CheckFailure
from mckay_slodowy.groups import family, normal_pair, pair_from_groups
from mckay_slodowy.mckay import (
    characteristic_identity_check,
    eigenvector_check,
    fusion_matrices,
    graph,
    induction_basis,
    null_vector_check,
    restriction_basis,
)

PAIR_CASES = (
    [("A2n-1^2", n) for n in range(3, 9)]
    + [("Dn+1^2", n) for n in range(2, 9)]
    + [("A2n^2", n) for n in range(2, 9)]
    + [("E6^2", None), ("D4^3", None), ("A2^2", None), ("S4A4", None)]
)

EXPECTED_TYPES = {
    "A2n-1^2": lambda n: (f"A_{2 * n - 1}^(2)", f"B_{n}^(1)"),
    "Dn+1^2": lambda n: (f"D_{n + 1}^(2)", f"C_{n}^(1)"),
    "A2n^2": lambda n: (f"A_{2 * n}^(2)", f"C_{n}^(1)"),
    "E6^2": lambda n: ("E_6^(2)", "F_4^(1)"),
    "D4^3": lambda n: ("D_4^(3)", "G_2^(1)"),
    "A2^2": lambda n: ("A_2^(2)", "A_1^(1)"),
    "S4A4": lambda n: ("unrecognized", "unrecognized"),
}


def test_restriction_basis_examples():
    assert restriction_basis(normal_pair("S4A4")).degrees == (1, 2, 3)
    b = restriction_basis(normal_pair("A2^2"))
    assert b.degrees == (1, 2)
    # delta_1 restricts to 2*xi_1
    assert b.mult_vectors[1] == (0, 2)
    assert restriction_basis(normal_pair("E6^2")).degrees == (1, 2, 3, 4, 2)


def test_induction_basis_examples():
    assert induction_basis(normal_pair("D4^3")).degrees == (3, 6, 3)
    assert induction_basis(normal_pair("A2^2")).degrees == (4, 4)
    assert induction_basis(normal_pair("S4A4")).degrees == (2, 2, 6)
    assert induction_basis(normal_pair("E6^2")).degrees == (2, 4, 6, 4, 2)


def test_trivial_member_comes_first():
    for name, n in [("S4A4", None), ("E6^2", None), ("Dn+1^2", 3)]:
        pair = normal_pair(name, n)
        rb, ib = restriction_basis(pair), induction_basis(pair)
        assert rb.degrees[0] == 1
        assert 0 in rb.origins[0]
        assert 0 in ib.origins[0]
        assert ib.degrees[0] == pair.index


def test_fusion_matrices_s4a4():
    d = fusion_matrices(normal_pair("S4A4"))
    assert d.A == ((0, 0, 1), (0, 0, 1), (1, 2, 2))
    assert d.B == ((0, 0, 1), (0, 0, 2), (1, 1, 2))
    assert d.cartanA == ((2, 0, -1), (0, 2, -1), (-1, -2, 0))


def test_fusion_matrices_a2_2():
    d = fusion_matrices(normal_pair("A2^2"))
    assert d.A == ((0, 4), (1, 0))
    assert d.B == ((0, 2), (2, 0))


def test_fusion_matrices_d4_3():
    d = fusion_matrices(normal_pair("D4^3"))
    assert d.A == ((0, 1, 0), (1, 0, 3), (0, 1, 0))
    assert d.B == ((0, 1, 0), (1, 0, 1), (0, 3, 0))


@pytest.mark.parametrize("name,n", PAIR_CASES)
def test_dynkin_identification(name, n):
    d = fusion_matrices(normal_pair(name, n))
    want = EXPECTED_TYPES[name](n)
    got = (graph(d, "restriction").dynkin_type, graph(d, "induction").dynkin_type)
    assert got == want


def test_mckay_graph_of_trivial_pair():
    T = family("binary_tetrahedral")
    p = pair_from_groups(T, family("binary_tetrahedral"), name="(T, T)")
    p.default_v_label = "tau_1"
    d = fusion_matrices(p)
    assert graph(d, "restriction").dynkin_type == "E_6^(1)"
    O = family("binary_octahedral")
    po = pair_from_groups(O, family("binary_octahedral"), name="(O, O)")
    po.default_v_label = "omega_1^+"
    assert graph(fusion_matrices(po), "restriction").dynkin_type == "E_7^(1)"


@pytest.mark.parametrize("name,n", [c for c in PAIR_CASES if c[0] != "S4A4"])
def test_null_vectors(name, n):
    report = null_vector_check(fusion_matrices(normal_pair(name, n)))
    assert report.kernel_dims == (1, 1)
    if name in ("A2n^2", "A2^2"):
        assert report.variant in ("transposed", "both")
        assert report.annihilations["C_A^T.alpha_B"]
        assert report.annihilations["C_B^T.alpha_A"]
    else:
        assert report.variant in ("standard", "both")
        assert report.annihilations["C_A.alpha_A"]
        assert report.annihilations["C_B.alpha_B"]


def test_null_vector_values():
    r = null_vector_check(fusion_matrices(normal_pair("D4^3")))
    assert r.alpha_A == (1, 2, 1)
    assert r.alpha_B == (1, 2, 3)
    r2 = null_vector_check(fusion_matrices(normal_pair("Dn+1^2", 4)))
    assert r2.alpha_B == (1, 2, 2, 2, 1)


def test_null_vector_orientation_for_dihedral_cyclic_pair():
    # the diagram degree vector (1, 2, ..., 2, 1) is annihilated in the
    # transposed orientation C_A^T (and alpha_A by C_A itself), not by C_A
    for n in (2, 4, 7):
        data = fusion_matrices(normal_pair("Dn+1^2", n))
        r = null_vector_check(data)
        assert r.alpha_B == (1,) + (2,) * (n - 1) + (1,)
        assert r.annihilations["C_A^T.alpha_B"]
        assert r.annihilations["C_A.alpha_A"]
        CA = data.cartanA
        k = data.size
        direct = [sum(CA[i][j] * r.alpha_B[j] for j in range(k)) for i in range(k)]
        assert any(x != 0 for x in direct)


def test_null_vector_rejects_s4a4():
    with pytest.raises(CheckFailure):
        null_vector_check(fusion_matrices(normal_pair("S4A4")))


@pytest.mark.parametrize("name,n", PAIR_CASES)
def test_eigenvector_structure(name, n):
    d = fusion_matrices(normal_pair(name, n))
    eigenvalues = eigenvector_check(d)
    assert len(eigenvalues) == len(d.pair.upsilonN)
    assert eigenvalues[0].is_zero()  # identity class gives d - d = 0


@pytest.mark.parametrize("name,n", PAIR_CASES)
def test_characteristic_polynomials_agree(name, n):
    characteristic_identity_check(fusion_matrices(normal_pair(name, n)))


def test_full_identity_fixture_lists():
    from mckay_slodowy.verify import run_identity_fixtures

    for name, n in PAIR_CASES:
        result = run_identity_fixtures(normal_pair(name, n), name, n)
        assert result.ok, result.detail


def test_catalog_entries_pairwise_distinct():
    for size in range(2, 11):
        entries = catalog_for_size(size)
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                assert not _isomorphic(entries[i][1], entries[j][1]), (
                    entries[i][0],
                    entries[j][0],
                )


def test_identify_is_permutation_invariant():
    A = adjacency("F4^1")
    perm = [4, 2, 0, 1, 3]
    permuted = [[A[perm[i]][perm[j]] for j in range(5)] for i in range(5)]
    assert identify(permuted) == "F_4^(1)"
    assert identify([[0, 1], [1, 0]]) == "unrecognized"  # finite A_2 is not affine


def test_graph_edges_and_dot():
    d = fusion_matrices(normal_pair("S4A4"))
    g = graph(d, "restriction")
    loops = [e for e in g.edges if e.i == e.j]
    assert len(loops) == 1 and loops[0].multiplicity == 2
    dot = g.to_dot()
    assert dot.startswith("digraph") and dot.endswith("}")
    assert dot.count("[") == dot.count("]")
    assert 'label="check(rho_1) (2)"' in dot

    g2 = graph(fusion_matrices(normal_pair("D4^3")), "induction")
    assert any(e.multiplicity == 3 for e in g2.edges)
