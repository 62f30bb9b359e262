import itertools
import random

import pytest

from quatlat.lattice import LatticeParams, build_square_table, named_presentation
from quatlat.rewrite import (
    MixedSidesError,
    NotApplicableError,
    append_letter,
    commutes,
    format_word,
    free_reduce,
    is_anti_torus,
    is_identity,
    normal_form,
    orbit_size,
    parse_word,
    pi_action,
    words_equal,
)


@pytest.fixture(scope="module")
def g3():
    return named_presentation("gamma3")


@pytest.fixture(scope="module")
def q5():
    return build_square_table(LatticeParams.make(5, 1, 2, 3))


def rand_word(rng, pres, length, side=None):
    pool = [l for l in pres.alphabet_a + pres.alphabet_b if side in (None, l.side)]
    return tuple(rng.choice(pool) for _ in range(length))


def rand_reduced(rng, pres, length, side):
    alphabet = pres.alphabet_a if side == "A" else pres.alphabet_b
    out = []
    while len(out) < length:
        g = rng.choice(alphabet)
        if out and out[-1] == pres.inverse[g]:
            continue
        out.append(g)
    return tuple(out)


def test_parse_format_roundtrip(g3):
    w = parse_word(g3, "a^9,x^9,b^-9,x^9")
    assert len(w) == 36
    assert format_word(w) == "a^9,x^9,b^-9,x^9"
    assert parse_word(g3, "") == ()
    assert parse_word(g3, "x^-1") == (g3.inverse[g3.label("x")],)
    with pytest.raises(KeyError):
        parse_word(g3, "z")


def test_free_reduce(g3):
    assert free_reduce(g3, parse_word(g3, "a,a^-1")) == ()
    assert free_reduce(g3, ()) == ()
    w = parse_word(g3, "a,b,b^-1,a,a^-1,b")
    assert format_word(free_reduce(g3, w)) == "a,b"
    with pytest.raises(MixedSidesError):
        free_reduce(g3, parse_word(g3, "a,x"))


def test_free_reduce_random_inverse(g3):
    rng = random.Random(40)
    for _ in range(200):
        w = rand_word(rng, g3, rng.randint(0, 15), "A")
        assert free_reduce(g3, w + g3.invert_word(w)) == ()


def test_normal_form_examples(g3):
    nf = normal_form(g3, parse_word(g3, "a,x,b^-1,x"))
    assert nf.is_identity
    one_sided = parse_word(g3, "a,b,a")
    nf2 = normal_form(g3, one_sided)
    assert nf2.a_part == one_sided and nf2.b_part == ()


def test_normal_form_is_homomorphic(g3, q5):
    rng = random.Random(41)
    for pres in (g3, q5):
        for _ in range(250):
            w1 = rand_word(rng, pres, rng.randint(0, 12))
            w2 = rand_word(rng, pres, rng.randint(0, 12))
            direct = normal_form(pres, w1 + w2)
            staged_nf = normal_form(pres, w1)
            staged = normal_form(pres, staged_nf.a_part + staged_nf.b_part + w2)
            assert direct == staged


def test_normal_form_lengths_agree(g3, q5):
    rng = random.Random(42)
    for pres in (g3, q5):
        for _ in range(250):
            w = rand_word(rng, pres, rng.randint(0, 20))
            ab = normal_form(pres, w, "AB")
            ba = normal_form(pres, w, "BA")
            assert len(ab.a_part) == len(ba.a_part)
            assert len(ab.b_part) == len(ba.b_part)
            assert len(ab) <= len(w)


def test_ab_ba_agree_as_group_elements(g3):
    rng = random.Random(43)
    for _ in range(100):
        w = rand_word(rng, g3, rng.randint(0, 14))
        ab = normal_form(g3, w, "AB")
        ba = normal_form(g3, w, "BA")
        assert words_equal(g3, ab.a_part + ab.b_part, ba.b_part + ba.a_part)


def test_append_letter_matches_normal_form(g3):
    rng = random.Random(44)
    for order in ("AB", "BA"):
        for _ in range(100):
            w = rand_word(rng, g3, rng.randint(0, 12))
            u, v = (), ()
            for letter in w:
                u, v = append_letter(g3, u, v, letter, order)
            nf = normal_form(g3, w, order)
            assert (u, v) == (nf.a_part, nf.b_part)


def test_identity_examples(g3):
    assert is_identity(g3, ())
    assert is_identity(g3, parse_word(g3, "a^9,x^9,b^-9,x^9"))
    assert not is_identity(g3, parse_word(g3, "a^3,x^3,b^-3,x^3"))
    assert not is_identity(g3, parse_word(g3, "a^27,x^27,b^-27,x^27"))
    assert is_identity(g3, parse_word(g3, "a^81,x^81,b^-81,x^81"))


def test_random_word_times_inverse(g3, q5):
    rng = random.Random(45)
    for pres in (g3, q5):
        for _ in range(250):
            w = rand_word(rng, pres, rng.randint(0, 15))
            assert is_identity(pres, w + pres.invert_word(w))


def test_pi_action_on_defining_square(g3):
    # a x = x^-1 b reads as pi_a(x) = x^-1, pi_x(a) = b
    a, x = parse_word(g3, "a"), parse_word(g3, "x")
    pg_h, ph_g = pi_action(g3, a, x)
    assert format_word(pg_h) == "x^-1"
    assert format_word(ph_g) == "b"


def test_pi_action_identity_cases(g3):
    h = parse_word(g3, "x,y")
    assert pi_action(g3, (), h) == (h, ())
    g = parse_word(g3, "a,b")
    assert pi_action(g3, g, ()) == ((), g)


def test_pi_prefix_property(g3):
    rng = random.Random(46)
    for _ in range(200):
        g = rand_reduced(rng, g3, rng.randint(1, 6), "A")
        h = rand_reduced(rng, g3, rng.randint(2, 8), "B")
        image = pi_action(g3, g, h)[0]
        cut = rng.randint(1, len(h) - 1)
        assert pi_action(g3, g, h[:cut])[0] == image[:cut]


def test_pi_bijective_on_spheres(g3):
    # exhaustive: pi_a permutes each sphere of reduced B-words, n <= 3
    a = parse_word(g3, "a")
    alphabet = g3.alphabet_b
    for n in (1, 2, 3):
        sphere = [
            w
            for w in itertools.product(alphabet, repeat=n)
            if all(w[i + 1] != g3.inverse[w[i]] for i in range(n - 1))
        ]
        images = {pi_action(g3, a, w)[0] for w in sphere}
        assert len(images) == len(sphere)
        assert images == set(sphere)


def test_orbit_sizes(g3):
    a, x = parse_word(g3, "a"), parse_word(g3, "x")
    assert orbit_size(g3, a, parse_word(g3, "x,x")) == 12
    assert orbit_size(g3, x, parse_word(g3, "a,a")) == 12
    assert orbit_size(g3, a, ()) == 1
    assert orbit_size(g3, (), x) == 1


def test_pi_a_ninth_power_of_x2(g3):
    a = parse_word(g3, "a")
    cur = parse_word(g3, "x,x")
    for _ in range(9):
        cur = pi_action(g3, a, cur)[0]
    assert cur == parse_word(g3, "x^-2")


def test_commutes(g3, q5):
    a, x = parse_word(g3, "a"), parse_word(g3, "x")
    assert not commutes(g3, a, x)
    assert commutes(g3, a, a)
    sq = q5.commuting_squares()[0]
    assert commutes(q5, (sq.a,), (sq.b,))
    nc = [s for s in q5.squares if not s.commuting][0]
    assert not commutes(q5, (nc.a,), (nc.b,))


def test_anti_torus(q5, g3):
    nc = [s for s in q5.squares if not s.commuting][0]
    assert is_anti_torus(q5, (nc.a,), (nc.b,))
    sq = q5.commuting_squares()[0]
    assert not is_anti_torus(q5, (sq.a,), (sq.b,))
    assert not is_anti_torus(q5, (nc.a,), ())
    with pytest.raises(NotApplicableError):
        is_anti_torus(g3, parse_word(g3, "a"), parse_word(g3, "x"))


def test_pi_action_rejects_wrong_sides(g3):
    with pytest.raises(MixedSidesError):
        pi_action(g3, parse_word(g3, "x"), parse_word(g3, "a"))
