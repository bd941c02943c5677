import json
from itertools import permutations

import pytest

from schurbranch.branching import (
    BranchingInstance,
    branching_multiplicity,
    defining_multiset,
    dimension_of_defining,
    encode_classical,
    restriction_coefficient,
)
from schurbranch.characters import kronecker_character, lr_character
from schurbranch.errors import InvalidInput
from schurbranch.partitions import Partition, dim_weyl, enumerate_partitions, iter_compositions
from schurbranch.plethysm import plethysm_character, plethysm_specialized
from schurbranch.schur_expand import kostka

P = Partition
BOX = P((1,))


def test_encoders_match_reduction_tables():
    inst = encode_classical("kronecker", P((2, 1)), P((2, 1)), P((2, 1)))
    assert (inst.r_H, inst.r_G) == (2, 1)
    assert inst.summands == (((1, (BOX, BOX)),),)
    assert inst.outer == (P((2, 1)),)
    assert inst.target == (P((2, 1)), P((2, 1)))

    inst = encode_classical("lr", P((2, 1)), P((1,)), P((1, 1)))
    assert (inst.r_H, inst.r_G) == (1, 2)
    assert inst.summands == (((1, (BOX,)),), ((1, (BOX,)),))
    assert inst.outer == (P((1,)), P((1, 1)))

    inst = encode_classical("kostka", P((2, 1)), [1, 1, 1])
    assert (inst.r_H, inst.r_G) == (3, 1)
    assert len(inst.summands[0]) == 3
    for j, (m, nus) in enumerate(inst.summands[0]):
        assert m == 1
        assert [nu.size for nu in nus] == [1 if k == j else 0 for k in range(3)]

    inst = encode_classical("plethysm", P((2, 2)), P((2,)), P((2,)))
    assert inst.summands == (((1, (P((2,)),)),),)


def test_encoder_rejects_bad_params():
    with pytest.raises(InvalidInput):
        encode_classical("kronecker", P((1,)), P((1,)))
    with pytest.raises(InvalidInput):
        encode_classical("kostka", P((1,)), [-1])
    with pytest.raises(InvalidInput):
        encode_classical("wreath", P((1,)), P((1,)), P((1,)))


def test_dimension_of_defining():
    pleth = encode_classical("plethysm", P((4,)), P((2,)), P((2,)))
    assert dimension_of_defining(pleth, 0, [3]) == dim_weyl(P((2,)), 3)
    kron = encode_classical("kronecker", P((2,)), P((2,)), P((2,)))
    assert dimension_of_defining(kron, 0, [3, 4]) == 12
    kos = encode_classical("kostka", P((3, 1)), [1, 1, 1, 1])
    assert dimension_of_defining(kos, 0, [1, 1, 1, 1]) == 4


def test_branching_examples():
    assert branching_multiplicity(encode_classical("plethysm", P((2, 2)), P((2,)), P((2,)))) == 1
    assert branching_multiplicity(encode_classical("kronecker", P((2, 1)), P((2, 1)), P((2, 1)))) == 1
    assert branching_multiplicity(encode_classical("lr", P((2, 1)), P((1,)), P((1, 1)))) == 1


def test_kostka_family():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            for length in range(1, min(n, 4) + 1):
                for w in iter_compositions(n, length):
                    inst = encode_classical("kostka", lam, w)
                    assert branching_multiplicity(inst) == kostka(lam, w)


def test_plethysm_family():
    for m in range(1, 5):
        for d in range(1, 5):
            if m * d > 6:
                continue
            for mu in enumerate_partitions(m):
                for nu in enumerate_partitions(d):
                    for lam in enumerate_partitions(m * d):
                        inst = encode_classical("plethysm", lam, mu, nu)
                        value = branching_multiplicity(inst)
                        assert value == plethysm_specialized(mu, nu, lam)
                        assert value == plethysm_character(mu, nu, lam)


def test_kronecker_against_characters():
    for n in range(1, 5):
        ps = enumerate_partitions(n)
        for a in ps:
            for b in ps:
                for c in ps:
                    inst = encode_classical("kronecker", a, b, c)
                    assert branching_multiplicity(inst) == kronecker_character(a, b, c)


def test_kronecker_symmetry_small():
    ps = enumerate_partitions(4)
    for triple in [(ps[1], ps[2], ps[1]), (ps[3], ps[1], ps[2])]:
        values = {
            branching_multiplicity(encode_classical("kronecker", *perm))
            for perm in permutations(triple)
        }
        assert len(values) == 1


def test_lr_against_characters():
    for a in range(0, 5):
        for b in range(0, 5 - a):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(b):
                    for lam in enumerate_partitions(a + b):
                        inst = encode_classical("lr", lam, mu, nu)
                        assert branching_multiplicity(inst) == lr_character(lam, mu, nu)


def test_lr_golden():
    assert branching_multiplicity(encode_classical("lr", P((3, 2, 1)), P((2, 1)), P((2, 1)))) == 2


def test_restriction_of_defining_module():
    assert restriction_coefficient(P((1,)), P((3,))) == 1
    assert restriction_coefficient(P((1,)), P((2, 1))) == 1
    assert restriction_coefficient(P((1,)), P((1, 1, 1))) == 0


def test_restriction_of_trivial_and_square():
    # trivial GL-module restricts to the trivial Specht module
    for lam in enumerate_partitions(4):
        assert restriction_coefficient(P(()), lam) == (1 if lam == P((4,)) else 0)
    # Sym^2(C^3) = permutation module on pairs {i<=j}: [3] twice, [2,1] twice
    got = {str(lam): restriction_coefficient(P((2,)), lam) for lam in enumerate_partitions(3)}
    assert got == {"3": 2, "2,1": 2, "1,1,1": 0}


def test_restriction_dimension_count():
    # sum_lam r * f^lam = dim of the Weyl module for GL(n)
    from schurbranch.partitions import dim_specht

    n = 3
    for mu in enumerate_partitions(3, n):
        total = sum(restriction_coefficient(mu, lam) * dim_specht(lam) for lam in enumerate_partitions(n))
        assert total == dim_weyl(mu, n)


def test_degree_mismatch_is_zero():
    assert branching_multiplicity(encode_classical("lr", P((3,)), P((1,)), P((1,)))) == 0


def test_general_instance_mixed_summands():
    # two copies of the defining module: s_2[s_1 + s_1] = 2 s_2 + s_1 s_1 = 3 s_2 + s_11
    inst = BranchingInstance.build([[(2, (BOX,))]], [P((2,))], [P((2,))])
    assert branching_multiplicity(inst) == 3
    inst = BranchingInstance.build([[(2, (BOX,))]], [P((2,))], [P((1, 1))])
    assert branching_multiplicity(inst) == 1


def test_json_roundtrip(tmp_path):
    inst = encode_classical("kronecker", P((2, 1)), P((2, 1)), P((3,)))
    doc = inst.to_json()
    assert doc == {
        "r_G": 1,
        "r_H": 2,
        "P": [[{"mult": 1, "nu": ["1", "1"]}]],
        "mu": ["3"],
        "lambda": ["2,1", "2,1"],
    }
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(doc))
    assert BranchingInstance.load(str(path)) == inst


@pytest.mark.parametrize(
    "doc",
    [
        {"r_G": 1, "r_H": 1, "P": [], "mu": ["1"], "lambda": ["1"]},
        {"r_G": 1, "r_H": 1, "P": [[{"mult": 0, "nu": ["1"]}]], "mu": ["1"], "lambda": ["1"]},
        {"r_G": 1, "r_H": 2, "P": [[{"mult": 1, "nu": ["1"]}]], "mu": ["1"], "lambda": ["1", "1"]},
        {"r_G": 1, "r_H": 1, "P": [[{"mult": 1}]], "mu": ["1"], "lambda": ["1"]},
        {"r_G": 1, "r_H": 1, "P": [[{"mult": 1, "nu": ["1,2"]}]], "mu": ["1"], "lambda": ["1"]},
    ],
)
def test_bad_instances_rejected(doc):
    with pytest.raises(InvalidInput):
        BranchingInstance.from_json(doc)


def test_defining_multiset_scales_by_multiplicity():
    ms = defining_multiset([(3, (P((1,)), P((1,))))], (2, 1))
    assert dict(ms.entries) == {(1, 0, 1): 3, (0, 1, 1): 3}
