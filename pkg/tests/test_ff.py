import random

import pytest

from quatlat.ff import (
    Field,
    FieldError,
    QuadExt,
    conjugate,
    find_nonsquare,
    is_square,
    make_field,
    mult_order,
    norm,
    norm_fiber,
    sigma_k,
)


def brute_irreducible_quadratics(p):
    # oracle: a monic quadratic over F_p is irreducible iff it has no root
    out = []
    for b in range(p):
        for a in range(p):
            if all((x * x + b * x + a) % p for x in range(p)):
                out.append((a, b, 1))
    return out


def test_prime_fields():
    for p in (3, 5, 7):
        field = make_field(p)
        assert field.q == p
        assert [x.index() for x in field.elements()] == list(range(p))
        assert field.element(p - 1) + field.one == field.zero


def test_make_field_rejects_bad_parameters():
    with pytest.raises(FieldError):
        make_field(4)
    with pytest.raises(FieldError):
        make_field(2)
    with pytest.raises(FieldError):
        make_field(9)
    with pytest.raises(FieldError):
        Field(3, 0)
    with pytest.raises(FieldError):
        Field(3, 2, (1, 1, 1))  # x^2 + x + 1 = (x+2)^2 over F_3


def test_f9_modulus_is_first_irreducible():
    field = make_field(3, 2)
    # enumeration order: ascending constant-then-linear digits
    first = None
    for m in range(9):
        cand = (m % 3, m // 3, 1)
        if cand in brute_irreducible_quadratics(3):
            first = cand
            break
    assert field.modulus == first == (1, 0, 1)


def test_frobenius_fixes_field():
    for p, e in ((3, 2), (5, 2), (3, 3)):
        field = Field(p, e)
        assert all(x ** field.q == x for x in field.elements())


def test_find_nonsquare_examples():
    assert find_nonsquare(make_field(3)).index() == 2
    assert find_nonsquare(make_field(5)).index() == 2
    assert find_nonsquare(make_field(7)).index() == 3


def test_nonsquare_count():
    for p, e in ((3, 1), (5, 1), (7, 1), (3, 2)):
        field = Field(p, e)
        squares = sum(is_square(x) for x in field.elements() if not x.is_zero())
        assert squares == (field.q - 1) // 2


@pytest.fixture
def ext3():
    field = make_field(3)
    return QuadExt(field, field.element(-1))


def test_conjugate(ext3):
    assert conjugate(ext3.one) == ext3.one
    assert conjugate(ext3.gen) == -ext3.gen
    assert conjugate(ext3.element(1, 1)) == ext3.element(1, -1)
    # involution; fixes exactly the base field
    fixed = [x for x in ext3.elements() if conjugate(x) == x]
    assert len(fixed) == 3
    assert all(conjugate(conjugate(x)) == x for x in ext3.elements())


def test_conjugate_is_frobenius():
    for p, e in ((3, 1), (3, 2)):
        field = Field(p, e)
        ext = QuadExt(field, find_nonsquare(field))
        assert all(x ** field.q == x.conj() for x in ext.elements())


def test_norm_examples(ext3):
    assert norm(ext3.one) == ext3.field.one
    assert norm(ext3.gen) == ext3.field.one  # N(Z) = -Z^2 = -c = 1
    assert norm(ext3.element(1, 1)) == ext3.field.element(2)


def test_norm_multiplicative():
    rng = random.Random(7)
    field = Field(5, 1)
    ext = QuadExt(field, find_nonsquare(field))
    elems = list(ext.elements())
    for _ in range(200):
        x, y = rng.choice(elems), rng.choice(elems)
        assert norm(x * y) == norm(x) * norm(y)
    assert all((norm(x) == field.zero) == x.is_zero() for x in elems)


def test_norm_agrees_with_power(ext3):
    q = ext3.field.q
    assert all(
        x ** (q + 1) == ext3.element(norm(x)) for x in ext3.elements() if not x.is_zero()
    )


def test_norm_fiber_examples(ext3):
    f = ext3.field
    fiber1 = norm_fiber(ext3, f.one)
    assert set(fiber1) == {ext3.element(1), ext3.element(2), ext3.gen, -ext3.gen}
    fiber2 = norm_fiber(ext3, f.element(2))
    assert set(fiber2) == {
        ext3.element(u, v) for u in (1, 2) for v in (1, 2)
    }


def test_norm_fiber_q5_size():
    field = make_field(5)
    ext = QuadExt(field, field.element(2))
    fiber = norm_fiber(ext, field.element(3))
    assert len(fiber) == 6
    # independent brute scan
    brute = {
        (u, v)
        for u in range(5)
        for v in range(5)
        if (u, v) != (0, 0) and (u * u - 2 * v * v) % 5 == 3
    }
    assert {(x.u.index(), x.v.index()) for x in fiber} == brute


def test_fibers_partition():
    for p, e in ((3, 1), (5, 1), (3, 2)):
        field = Field(p, e)
        ext = QuadExt(field, find_nonsquare(field))
        seen = set()
        for k in range(1, field.q):
            fiber = norm_fiber(ext, field.from_index(k))
            assert len(fiber) == field.q + 1
            assert all(-x in fiber and x.conj() in fiber for x in fiber)
            assert not (set(fiber) & seen)
            seen.update(fiber)
        assert len(seen) == field.q**2 - 1


def test_norm_fiber_zero_target(ext3):
    with pytest.raises(FieldError):
        norm_fiber(ext3, 0)


def test_generator_fibers_disjoint():
    # -c != c*tau/(1-tau) for every tau outside {0, 1}
    for q in (3, 5, 7):
        field = make_field(q)
        c = find_nonsquare(field)
        ext = QuadExt(field, c)
        for k in range(2, q):
            tau = field.from_index(k)
            target = c * tau / (field.one - tau)
            assert target != -c
            assert not (set(norm_fiber(ext, -c)) & set(norm_fiber(ext, target)))


def test_mult_order():
    f3, f5 = make_field(3), make_field(5)
    assert mult_order(f3.one) == 1
    assert mult_order(f3.element(2)) == 2
    assert mult_order(f5.element(4)) == 2
    with pytest.raises(FieldError):
        mult_order(f3.zero)
    for field in (f3, f5):
        for x in field.elements():
            if not x.is_zero():
                assert (field.q - 1) % mult_order(x) == 0


def test_square_relation_of_gen(ext3):
    assert ext3.gen * ext3.gen == ext3.element(ext3.c)


def test_quadext_rejects_square_c():
    field = make_field(3)
    with pytest.raises(FieldError):
        QuadExt(field, field.one)


def test_sigma_k_fixes_a_fiber(ext3):
    # norm -c fiber is fixed; norm c*tau/(1-tau) fiber is scaled
    for k in (1, 2):
        for xi in norm_fiber(ext3, ext3.field.one):
            assert sigma_k(ext3, xi, k) == xi


def test_field_json_roundtrip():
    field = Field(3, 2)
    again = Field.from_json(field.to_json())
    assert again == field
    x = field.from_index(5)
    assert field.element(x.to_json()) == x
