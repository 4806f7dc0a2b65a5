import random
from fractions import Fraction

import pytest

from supvar.algebra import gl_superalgebra
from supvar.errors import ZeroPoint
from supvar.modules import direct_sum, kac_module, simple_module, tensor, trivial_module
from supvar.roots import parse_weight
from supvar.support import (
    atyp_module,
    compare_support,
    empirical_support,
    is_projective_at,
    odd_point,
)


def test_projectivity_examples():
    g = gl_superalgebra(1, 1)
    C = trivial_module(g)
    assert not is_projective_at(C, odd_point([1]))
    K0 = kac_module(parse_weight(1, 1, "0|0"))
    assert is_projective_at(K0, odd_point([1]))
    L = simple_module(parse_weight(1, 1, "1|0"))
    assert is_projective_at(L, odd_point([1]))


def test_zero_point_rejected():
    C = trivial_module(gl_superalgebra(2, 2))
    with pytest.raises(ZeroPoint):
        is_projective_at(C, odd_point([0, 0]))


def test_scaling_invariance():
    rng = random.Random(41)
    K = kac_module(parse_weight(2, 2, "1,0|0,-1"))
    L = simple_module(parse_weight(2, 2, "1,0|0,-1"))
    for M in (K, L):
        for _ in range(6):
            coords = [Fraction(rng.randint(1, 5), rng.randint(1, 3)) *
                      rng.choice((1, -1)) if rng.random() < 0.8 else Fraction(0)
                      for _ in range(2)]
            if all(c == 0 for c in coords):
                coords[0] = Fraction(1)
            c = Fraction(rng.randint(1, 7), rng.randint(1, 5))
            base = is_projective_at(M, odd_point(coords))
            scaled = is_projective_at(M, odd_point([c * x for x in coords]))
            assert base == scaled


def test_empirical_support_examples():
    K0 = kac_module(parse_weight(1, 1, "0|0"))
    emp = empirical_support(K0)
    assert emp.subsets == frozenset() and emp.dim == 0
    assert all(verdict for _, _, verdict in emp.tested)

    C22 = trivial_module(gl_superalgebra(2, 2))
    emp = empirical_support(C22)
    assert emp.nonempty_subsets() == [(1,), (2,), (1, 2)]
    assert emp.dim == 2

    L0 = simple_module(parse_weight(1, 1, "0|0"))
    emp = empirical_support(L0)
    assert emp.nonempty_subsets() == [(1,)]
    assert emp.dim == 1


def test_empirical_support_deterministic():
    L = simple_module(parse_weight(2, 2, "1,0|0,-1"))
    a = empirical_support(L, samples_per_subset=2, seed=123)
    b = empirical_support(L, samples_per_subset=2, seed=123)
    assert a == b


def test_atyp_module_examples():
    g = gl_superalgebra(1, 1)
    assert atyp_module(trivial_module(g)) == 1
    assert atyp_module(kac_module(parse_weight(1, 1, "0|0"))) == 0
    assert atyp_module(simple_module(parse_weight(2, 2, "0,0|0,0"))) == 2


def test_direct_sum_union_law():
    M = simple_module(parse_weight(1, 1, "0|0"))      # support {1}
    N = kac_module(parse_weight(1, 1, "0|0"))          # empty support
    both = empirical_support(direct_sum(M, N))
    assert both.subsets == empirical_support(M).subsets | empirical_support(N).subsets
    twice = empirical_support(direct_sum(M, M))
    assert twice.subsets == empirical_support(M).subsets


def test_tensor_containment_law():
    M = simple_module(parse_weight(1, 1, "0|0"))
    N = kac_module(parse_weight(1, 1, "0|0"))
    prod = empirical_support(tensor(M, N))
    assert prod.subsets <= empirical_support(M).subsets
    assert prod.subsets <= empirical_support(N).subsets
    square = empirical_support(tensor(M, M))
    assert square.subsets <= empirical_support(M).subsets


def test_simple_support_is_permutation_stable():
    for text in ["0,0|0,0", "1,0|0,-2"]:
        emp = empirical_support(simple_module(parse_weight(2, 2, text)))
        swapped = frozenset(frozenset(3 - t for t in s) for s in emp.subsets)
        assert swapped == emp.subsets


def test_compare_support():
    cmp = compare_support(parse_weight(1, 1, "0|0"))
    assert cmp.match and cmp.empirical.dim == 1
    cmp = compare_support(parse_weight(1, 1, "1|0"))
    assert cmp.match and cmp.empirical.dim == 0
    assert not cmp.only_theoretical and not cmp.only_empirical


def test_compare_support_intermediate_atypicality():
    # atypicality 1 inside defect 2: the support is the two axes, not the plane
    for text, dim in [("1,0|0,-2", 1), ("2,1|1,-1", 0), ("3,0|0,0", 1)]:
        cmp = compare_support(parse_weight(2, 2, text))
        assert cmp.match and cmp.empirical.dim == dim
        if dim == 1:
            assert cmp.empirical.nonempty_subsets() == [(1,), (2,)]
