import pytest

from schurbranch.errors import InvalidInput, ResourceLimitError
from schurbranch.partitions import Partition, dim_weyl, enumerate_partitions
from schurbranch.schur_weyl import (
    Subspace,
    TensorSpace,
    build_submodule,
    check_equivariance,
    expected_rank,
    multiplicity_hwv,
    verify,
    young_symmetrizer,
)

P = Partition


def test_symmetrizer_images():
    space = TensorSpace(2, (3,))
    assert Subspace(young_symmetrizer(P((2,)), space, [0, 1])).rank() == 6
    assert Subspace(young_symmetrizer(P((1, 1)), space, [0, 1])).rank() == 3
    space = TensorSpace(3, (2,))
    assert Subspace(young_symmetrizer(P((2, 1)), space, [0, 1, 2])).rank() == 2
    assert Subspace(young_symmetrizer(P((1, 1, 1)), space, [0, 1, 2])).rank() == 0


def test_symmetrizer_of_one_box_is_identity():
    space = TensorSpace(1, (3,))
    assert Subspace(young_symmetrizer(P((1,)), space, [0])).rank() == 3


@pytest.mark.parametrize(
    "family, params, dims, dim",
    [
        ("plethysm", (P((2,)), P((2,))), (2,), 6),
        ("lr", (P((1,)), P((1,))), (2,), 4),
        ("kronecker", (P((2,)),), (2, 2), 10),
    ],
)
def test_build_submodule_dimensions(family, params, dims, dim):
    sub = build_submodule(family, params, dims)
    assert sub.rank() == dim == expected_rank(family, params, dims)


def test_hwv_examples():
    sub = build_submodule("plethysm", (P((2,)), P((2,))), (2,))
    assert multiplicity_hwv(sub, [P((4,))]) == 1
    assert multiplicity_hwv(sub, [P((3, 1))]) == 0
    assert multiplicity_hwv(sub, [P((2, 2))]) == 1
    # weight with no vectors at all
    assert multiplicity_hwv(sub, [P((1, 1, 1, 1))]) == 0
    assert multiplicity_hwv(sub, [P((3,))]) == 0


def test_kronecker_hwv():
    sub = build_submodule("kronecker", (P((2, 1)),), (2, 2))
    assert multiplicity_hwv(sub, [P((2, 1)), P((2, 1))]) == 1
    assert multiplicity_hwv(sub, [P((3,)), P((2, 1))]) == 1
    assert multiplicity_hwv(sub, [P((3,)), P((3,))]) == 0


@pytest.mark.parametrize(
    "family, params, dims",
    [
        ("plethysm", (P((2,)), P((1, 1))), (3,)),
        ("lr", (P((2,)), P((1,))), (2,)),
        ("kronecker", (P((2, 1)),), (2, 2)),
    ],
)
def test_equivariance(family, params, dims):
    assert check_equivariance(build_submodule(family, params, dims).operator)


def test_decomposition_accounting():
    # sum over lam of multiplicity * dim equals the dimension of the image
    for mu, nu in [(P((2,)), P((2,))), (P((2,)), P((1, 1))), (P((1, 1)), P((2,))), (P((3,)), P((1,)))]:
        sub = build_submodule("plethysm", (mu, nu), (2,))
        total = sum(
            multiplicity_hwv(sub, [lam]) * dim_weyl(lam, 2)
            for lam in enumerate_partitions(mu.size * nu.size, 2)
        )
        assert total == sub.rank() == expected_rank("plethysm", (mu, nu), (2,))


def test_verify_reports():
    r = verify("plethysm", (P((2,)), P((2,)), P((2, 2))), (2,))
    assert r.passed and r.hwv_multiplicity == 1
    r = verify("kronecker", (P((2, 1)), P((2, 1)), P((2, 1))), (2, 2))
    assert r.passed and r.combinatorial == 1
    r = verify("lr", (P((2, 1)), P((1,)), P((2, 1, 1))), (3,))
    assert r.passed and r.combinatorial == 1
    doc = r.to_json()
    assert doc["pass"] is True and doc["combinatorial"] == "1"


def test_verify_rejects_long_target():
    with pytest.raises(InvalidInput):
        verify("plethysm", (P((2,)), P((2,)), P((2, 1, 1))), (2,))


def test_cap_exceeded():
    with pytest.raises(ResourceLimitError):
        build_submodule("plethysm", (P((3,)), P((3,))), (3,), cap=100)


def test_bad_params():
    with pytest.raises(InvalidInput):
        build_submodule("plethysm", (P((2,)),), (2,))
    with pytest.raises(InvalidInput):
        build_submodule("kronecker", (P((2,)),), (2,))
    with pytest.raises(InvalidInput):
        build_submodule("wreath", (P((2,)),), (2,))
    with pytest.raises(InvalidInput):
        build_submodule("lr", (P((1,)), P((1,))), (0,))
