from fractions import Fraction

import pytest

from ydcheck.fields import QQ, GF, PrimeField, parse_field
from ydcheck.linear import (Element, Ten, tensor, legs, make_sym, flip,
                            apply_leg, apply_pair_legs, lin_solve,
                            kernel_basis, quotient_space)


def e(sym, c=1):
    return Element.basis(QQ, sym, Fraction(c))


def test_gf_arithmetic():
    f = PrimeField(5)
    a, b = f.from_int(3), f.from_int(4)
    assert a + b == f.from_int(2)
    assert a * b == f.from_int(2)
    assert a / b == f.from_int(2)  # 3 * 4^-1 = 3*4 = 12 = 2
    assert -a == f.from_int(2)
    assert a - b == f.from_int(4)
    assert 1 / b == f.from_int(4)
    assert bool(f.zero()) is False
    with pytest.raises(ZeroDivisionError):
        a / f.zero()
    with pytest.raises(ValueError):
        PrimeField(6)


def test_primitive_roots():
    f = PrimeField(5)
    w = f.primitive_root_of_unity(4)
    assert w is not None
    assert w * w * w * w == f.one() and w * w != f.one()
    assert f.primitive_root_of_unity(3) is None


def test_parse_field():
    assert parse_field("rational") is QQ
    assert parse_field("fp:7").p == 7
    with pytest.raises(ValueError):
        parse_field("real")


def test_element_basics():
    x = e("a") + e("b", 2)
    y = e("a", -1) + e("b", 3)
    assert (x + y) == e("b", 5)
    assert x - x == Element(QQ)
    assert x.scaled(Fraction(0)).is_zero()
    assert x.coeff("a") == 1 and x.coeff("zzz") == 0
    assert (-x).coeff("b") == -2
    # zero coefficients are dropped, so dict equality is vector equality
    assert (x + e("a", -1)).support() == ["b"]


def test_ten_is_not_a_plain_tuple():
    # group elements represented as tuples must never collide with tensors
    assert Ten((1, 2)) != (1, 2)
    assert hash(Ten((1, 2))) != hash((1, 2))
    assert legs(Ten(("a", "b"))) == ("a", "b")
    assert legs((1, 2)) == ((1, 2),)
    assert make_sym(("a",)) == "a"
    assert make_sym(("a", "b")) == Ten(("a", "b"))


def test_tensor_flattens():
    x = tensor(e("a"), e("b"))
    y = tensor(x, e("c"))
    (sym,) = y.support()
    assert legs(sym) == ("a", "b", "c")
    z = tensor(e("a") + e("b"), e("c") - e("d"))
    assert z.coeff(Ten(("b", "d"))) == -1
    assert len(z.terms) == 4


def test_flip_and_leg_maps():
    x = tensor(e("a"), e("b", 2))
    assert flip(x) == tensor(e("b", 2), e("a"))
    doubled = apply_leg(x, 1, lambda v: v.scaled(Fraction(3)))
    assert doubled.coeff(Ten(("a", "b"))) == 6
    # apply an arity-2 map to the middle pair of a triple
    t3 = tensor(tensor(e("a"), e("b")), e("c"))
    swapped = apply_pair_legs(t3, 1, flip)
    assert swapped == tensor(tensor(e("a"), e("c")), e("b"))


def test_lin_solve():
    # x + y = 3, x - y = 1  =>  x = 2, y = 1
    rows = [e("x") + e("y"), e("x") - e("y")]
    sol = lin_solve(rows, [Fraction(3), Fraction(1)])
    assert sol == e("x", 2) + e("y", 1)
    # inconsistent
    assert lin_solve([e("x"), e("x")], [Fraction(1), Fraction(2)]) is None
    # underdetermined: free variables pinned to zero
    sol = lin_solve([e("x") + e("y")], [Fraction(4)])
    assert sol.coeff("x") + sol.coeff("y") == 4


def test_kernel_basis():
    # x + y + z = 0 and x - y = 0 has a 1-dimensional kernel
    ker = kernel_basis([e("x") + e("y") + e("z"), e("x") - e("y")])
    assert len(ker) == 1
    v = ker[0]
    assert v.coeff("x") + v.coeff("y") + v.coeff("z") == 0
    assert v.coeff("x") == v.coeff("y")
    assert not v.is_zero()


def test_quotient_space():
    q = quotient_space(["a", "b", "c"], [e("a") - e("b")])
    assert q.rank == 1
    assert len(q.basis) == 2
    # a and b agree in the quotient
    assert q.project(e("a")) == q.project(e("b"))
    assert q.project(e("a") - e("b")).is_zero()
    for s in q.basis:
        assert q.project(q.section(Element.basis(QQ, s))) == Element.basis(QQ, s)
