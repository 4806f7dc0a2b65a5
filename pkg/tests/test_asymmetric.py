"""m != n coverage: the detecting generators sit at the block corner, so the
index arithmetic differs between m < n and m > n."""

from supvar.algebra import detecting_subalgebra, gl_superalgebra
from supvar.atypicality import atypicality, atypicality_oracle
from supvar.cohomology import cohomology_dims, ext_dims, kac_ext_dims
from supvar.modules import kac_module, simple_module, trivial_module, verify_rep
from supvar.roots import parse_weight, weight
from supvar.support import compare_support, empirical_support


def test_detecting_generators_when_m_less_than_n():
    d = detecting_subalgebra(1, 2)
    assert d.r == 1
    assert sorted(d.odd_basis[0]) == [("E", 1, 2), ("E", 2, 1)]
    d = detecting_subalgebra(2, 3)
    assert d.r == 2
    assert sorted(d.odd_basis[1]) == [("E", 1, 4), ("E", 4, 1)]


def test_gl12_oracle_agreement():
    for a in range(-2, 3):
        for b1 in range(-2, 3):
            for b2 in range(-2, b1 + 1):
                lam = weight(1, 2, [a, b1, b2])
                assert atypicality(lam).value == atypicality_oracle(lam)


def test_gl12_cohomology_and_routes():
    g = gl_superalgebra(1, 2)
    C = trivial_module(g)
    assert cohomology_dims(g, C, 4) == [1, 0, 1, 0, 1]
    lam = parse_weight(1, 2, "0|0,0")
    K = kac_module(lam)
    assert K.dim == 4 and verify_rep(K)[0]
    assert empirical_support(K).subsets == frozenset()
    assert ext_dims(K, C, 3).dims == kac_ext_dims(lam, C, 3).dims


def test_gl12_support_comparison():
    assert compare_support(parse_weight(1, 2, "0|0,0")).match
    assert compare_support(parse_weight(1, 2, "2|0,-1")).match


def test_gl31_constructions():
    g = gl_superalgebra(3, 1)
    assert cohomology_dims(g, trivial_module(g), 4) == [1, 0, 1, 0, 1]
    lam = parse_weight(3, 1, "0,0,0|0")
    K = kac_module(lam)
    assert K.dim == 8 and verify_rep(K)[0]
    assert empirical_support(K).subsets == frozenset()
    assert compare_support(lam).match
    L = simple_module(parse_weight(3, 1, "1,0,0|0"))
    assert L.dim == 4 and L.superdimension == 2
    assert verify_rep(L)[0]
