import pytest

from lieclass import linalg
from lieclass.algebras import (
    CatalogAlgebra,
    ModuleSpec,
    direct_sum,
    make_algebra,
    normalizer_dim,
    normalizer_in_gl,
    representation,
    summand_scalars,
)
from lieclass.errors import BadParameter, UnrecognizedShape
from lieclass.oracle import is_spherical_module
from lieclass.sphericaltable import (
    decompose_blocks,
    is_spherical_module_by_table,
)


class TestMakeAlgebra:
    def test_dimensions(self):
        assert make_algebra("gl", 3).dim == 9
        assert make_algebra("sl", 4).dim == 15
        assert make_algebra("so", 5).dim == 10
        assert make_algebra("sp", 6).dim == 21

    def test_closed_under_bracket(self):
        for tag, n in (("gl", 3), ("sl", 3), ("so", 4), ("sp", 4)):
            assert make_algebra(tag, n).check_closed()

    def test_bad_parameters(self):
        with pytest.raises(BadParameter):
            make_algebra("sp", 5)
        with pytest.raises(BadParameter):
            make_algebra("so", 2)

    def test_direct_sum(self):
        k = direct_sum(make_algebra("sl", 2), make_algebra("sp", 4))
        assert k.n == 6
        assert k.dim == 3 + 10
        assert k.check_closed()

    def test_normalizer_of_sl_is_gl(self):
        norm = normalizer_in_gl(make_algebra("sl", 3))
        assert norm.dim == 9

    def test_normalizer_dim(self):
        so3 = make_algebra("so", 3).basis
        assert normalizer_dim(so3) == 4  # so_3 plus scalars


class TestRepresentation:
    def test_natural_plus_dual(self):
        k = make_algebra("sl", 3)
        rep = representation([k], ModuleSpec([("natural", 0), ("dual", 0)]))
        assert rep.n == 6
        assert rep.check_closed()

    def test_wedge_and_sym(self):
        k = make_algebra("gl", 4)
        assert representation([k], ModuleSpec([("wedge2", 0)])).n == 6
        assert representation([k], ModuleSpec([("sym2", 0)])).n == 10

    def test_tensor(self):
        ks = [make_algebra("sl", 2), make_algebra("sl", 3)]
        rep = representation(ks, ModuleSpec([("tensor", (0, "n"), (1, "n"))]))
        assert rep.n == 6
        assert rep.check_closed()

    def test_summand_scalars(self):
        spec = ModuleSpec([("natural", 0), ("trivial",)])
        ops = summand_scalars(spec, [3])
        assert len(ops) == 2
        assert linalg.rank([linalg.flatten(m) for m in ops]) == 2


def table(fstr, summands, centers="entries", with_scalar=True):
    factors = [make_algebra(tag, n) for tag, n in fstr]
    return is_spherical_module_by_table(
        factors, ModuleSpec(summands), with_scalar=with_scalar, centers=centers
    )


class TestTableMatching:
    def test_fundamental_entries(self):
        assert table([("sl", 3)], [("natural", 0)]).entries == ("i-1",)
        assert table([("so", 5)], [("natural", 0)]).entries == ("i-2",)
        assert table([("sp", 4)], [("natural", 0)]).entries == ("i-3",)
        assert table([("sl", 3)], [("sym2", 0)]).entries == ("i-4",)

    def test_degenerate_aliases(self):
        # the wedge square of C4 is the so_6 natural module
        assert table([("sl", 4)], [("wedge2", 0)]).entries == ("i-2",)
        # the symmetric square of C2 is the so_3 (= sl_2 adjoint) module
        assert table([("sl", 2)], [("sym2", 0)]).spherical

    def test_tensor_entries(self):
        v = table(
            [("sl", 2), ("sl", 3)], [("tensor", (0, "n"), (1, "n"))]
        )
        assert v.spherical and v.entries == ("ii-1",)
        v = table(
            [("sl", 2), ("sp", 4)], [("tensor", (0, "n"), (1, "n"))]
        )
        assert v.spherical and v.entries == ("ii-3",)

    def test_reducible_entries(self):
        v = table([("sl", 3)], [("natural", 0), ("dual", 0)])
        assert v.spherical and v.entries == ("iii-3",)

    def test_not_in_table(self):
        v = table([("so", 5)], [("natural", 0), ("natural", 0)])
        assert not v.spherical and v.reason == "block not in table"

    def test_unrecognized_factor(self):
        rep = representation(
            [make_algebra("sl", 2)], ModuleSpec([("natural", 0)])
        )
        with pytest.raises(UnrecognizedShape):
            is_spherical_module_by_table([rep], ModuleSpec([("natural", 0)]))

    def test_blocks_split_by_shared_factors(self):
        factors = [make_algebra("sl", 2), make_algebra("sl", 3)]
        spec = ModuleSpec([("natural", 0), ("natural", 1)])
        blocks = decompose_blocks(factors, spec)
        assert len(blocks) == 2

    def test_summand_centers_upgrade(self):
        # two copies of the natural module need independent scalars
        factors = [make_algebra("sl", 3)]
        spec = [("natural", 0), ("natural", 0)]
        strict = table([("sl", 3)], spec, centers="entries", with_scalar=True)
        relaxed = table([("sl", 3)], spec, centers="summands")
        assert relaxed.spherical
        assert strict.entries == relaxed.entries == ("iii-2",)


def oracle_for_verdict(factors, spec, verdict, seed=0):
    """Oracle on exactly the group the table verdict speaks about."""
    rep = representation(list(factors), spec)
    basis = [list(map(list, m)) for m in rep.basis] + [
        list(map(list, m)) for m in verdict.center_ops
    ]
    borel = [list(map(list, m)) for m in rep.borel_basis] + [
        list(map(list, m)) for m in verdict.center_ops
    ]
    alg = CatalogAlgebra(basis, borel, rep.n, dict(rep.meta))
    return is_spherical_module(alg, with_scalar=False, samples=5, seed=seed)


TABLE_CASES = [
    ([("sl", 3)], [("natural", 0)]),
    ([("sl", 4)], [("natural", 0)]),
    ([("so", 4)], [("natural", 0)]),
    ([("so", 6)], [("natural", 0)]),
    ([("sp", 6)], [("natural", 0)]),
    ([("sl", 4)], [("sym2", 0)]),
    ([("sl", 5)], [("wedge2", 0)]),
    ([("sl", 2), ("sl", 3)], [("tensor", (0, "n"), (1, "n"))]),
    ([("sl", 3), ("sl", 3)], [("tensor", (0, "n"), (1, "d"))]),
    ([("sl", 2), ("sp", 6)], [("tensor", (0, "n"), (1, "n"))]),
    ([("sl", 3), ("sp", 4)], [("tensor", (0, "n"), (1, "n"))]),
    ([("sl", 4)], [("natural", 0), ("dual", 0)]),
    ([("sl", 3)], [("natural", 0), ("natural", 0)]),
    ([("sl", 4)], [("natural", 0), ("wedge2", 0)]),
    ([("sl", 2), ("sp", 4)], [("tensor", (0, "n"), (1, "n")), ("natural", 0)]),
]


class TestTableOracleAgreement:
    @pytest.mark.parametrize("fstr,summands", TABLE_CASES)
    def test_matched_group_agreement(self, fstr, summands):
        factors = [make_algebra(tag, n) for tag, n in fstr]
        spec = ModuleSpec(summands)
        verdict = is_spherical_module_by_table(factors, spec, centers="entries")
        oracle = oracle_for_verdict(factors, spec, verdict, seed=11)
        assert bool(verdict) == bool(oracle), (fstr, summands, verdict, oracle)

    def test_negative_case_agrees(self):
        factors = [make_algebra("so", 5)]
        spec = ModuleSpec([("natural", 0), ("natural", 0)])
        verdict = is_spherical_module_by_table(factors, spec)
        assert not verdict
        oracle = is_spherical_module(factors, spec, with_scalar=True, seed=3)
        assert not oracle
