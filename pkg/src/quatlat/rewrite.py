"""Words over a presentation's alphabets, their two-sided normal forms,
and the induced permutation actions.

An element has a unique factorization u * v with u a reduced A-word and
v a reduced B-word, and a unique reversed factorization v' * u'; both
components of the two forms have equal lengths.  Normal forms are
computed letter by letter: a letter arriving on the wrong side of the
current form is pushed through the other component one swap at a time
(each swap replaces one letter and preserves counts), then freely
reduced into its own component, so the total length never increases.

The word problem is: both components empty.  Words are plain tuples of
labels; the table is never mutated, so everything here is safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import GenLabel, Presentation, Word


class MixedSidesError(ValueError):
    """A one-sided operation received letters from both alphabets."""


class NotApplicableError(ValueError):
    """Operation undefined for this lattice kind."""


@dataclass(frozen=True)
class NormalForm:
    """Reduced A-part and B-part; order 'AB' means a_part * b_part,
    order 'BA' means b_part * a_part."""

    a_part: Word
    b_part: Word
    order: str

    def __len__(self):
        return len(self.a_part) + len(self.b_part)

    @property
    def is_identity(self) -> bool:
        return not self.a_part and not self.b_part


def free_reduce(pres: Presentation, w: Word) -> Word:
    """Cancel adjacent inverse pairs in a one-sided word."""
    sides = {g.side for g in w}
    if len(sides) > 1:
        raise MixedSidesError("free reduction needs a one-sided word")
    out = []
    for g in w:
        if out and out[-1] == pres.inverse[g]:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def _push_through_b(pres, v, g):
    """Rewrite v * g as g' * v' for an A-letter g and B-word v."""
    swap_ba = pres.swap_ba
    out = []
    cur = g
    for b in reversed(v):
        cur, b2 = swap_ba[(b, cur)]
        out.append(b2)
    out.reverse()
    return cur, tuple(out)


def _push_through_a(pres, u, g):
    """Rewrite u * g as g' * u' for a B-letter g and A-word u."""
    swap = pres.swap
    out = []
    cur = g
    for a in reversed(u):
        cur, a2 = swap[(a, cur)]
        out.append(a2)
    out.reverse()
    return cur, tuple(out)


def append_letter(pres: Presentation, a_part: Word, b_part: Word, g: GenLabel, order: str = "AB"):
    """One step of normal-form computation: tack g on the right of the
    element a_part * b_part (order 'AB') or b_part * a_part ('BA')."""
    inverse = pres.inverse
    if order == "AB":
        if g.side == "B":
            if b_part and b_part[-1] == inverse[g]:
                return a_part, b_part[:-1]
            return a_part, b_part + (g,)
        g2, b_part = _push_through_b(pres, b_part, g)
        if a_part and a_part[-1] == inverse[g2]:
            return a_part[:-1], b_part
        return a_part + (g2,), b_part
    if g.side == "A":
        if a_part and a_part[-1] == inverse[g]:
            return a_part[:-1], b_part
        return a_part + (g,), b_part
    g2, a_part = _push_through_a(pres, a_part, g)
    if b_part and b_part[-1] == inverse[g2]:
        return a_part, b_part[:-1]
    return a_part, b_part + (g2,)


def normal_form(pres: Presentation, w: Word, order: str = "AB") -> NormalForm:
    """The unique two-sided normal form of w, in the requested order."""
    if order not in ("AB", "BA"):
        raise ValueError(f"order must be 'AB' or 'BA', not {order!r}")
    a_part: Word = ()
    b_part: Word = ()
    for g in w:
        a_part, b_part = append_letter(pres, a_part, b_part, g, order)
    assert len(a_part) + len(b_part) <= len(w), "normal form grew"
    return NormalForm(a_part, b_part, order)


def is_identity(pres: Presentation, w: Word) -> bool:
    return normal_form(pres, w).is_identity


def words_equal(pres: Presentation, w1: Word, w2: Word) -> bool:
    return is_identity(pres, tuple(w1) + pres.invert_word(tuple(w2)))


def pi_action(pres: Presentation, g: Word, h: Word):
    """For an A-word g and B-word h, the pair (pi_g(h), pi_h(g)) from the
    reversed normal form g*h = pi_g(h) * pi_h(g); both lengths are
    preserved."""
    g = free_reduce(pres, tuple(g))
    h = free_reduce(pres, tuple(h))
    if any(l.side != "A" for l in g) or any(l.side != "B" for l in h):
        raise MixedSidesError("pi action needs an A-word and a B-word")
    nf = normal_form(pres, g + h, "BA")
    assert len(nf.b_part) == len(h) and len(nf.a_part) == len(g), "pi action changed lengths"
    return nf.b_part, nf.a_part


def orbit_size(pres: Presentation, g: Word, h: Word) -> int:
    """Cycle length of h under repeated application of h -> pi_g(h).

    g and h live on opposite sides; either orientation works (an A-word
    acting on a B-word through the left action, or a B-word acting on an
    A-word through the right one).
    """
    g = free_reduce(pres, tuple(g))
    start = free_reduce(pres, tuple(h))
    if not g:
        return 1
    if g[0].side == "A":
        step = lambda w: pi_action(pres, g, w)[0]
    else:
        step = lambda w: pi_action(pres, w, g)[1]
    cur = step(start)
    n = 1
    while cur != start:
        cur = step(cur)
        n += 1
    return n


def commutes(pres: Presentation, g: Word, h: Word) -> bool:
    g, h = tuple(g), tuple(h)
    return is_identity(pres, g + h + pres.invert_word(g) + pres.invert_word(h))


def is_anti_torus(pres: Presentation, g: Word, h: Word) -> bool:
    """For a parametric lattice: an A-word and a B-word span an anti-torus
    exactly when they do not commute."""
    if pres.kind != "parametric":
        raise NotApplicableError("anti-torus criterion holds for parametric lattices only")
    g = free_reduce(pres, tuple(g))
    h = free_reduce(pres, tuple(h))
    if any(l.side != "A" for l in g) or any(l.side != "B" for l in h):
        raise MixedSidesError("anti-torus test needs an A-word and a B-word")
    if not g or not h:
        return False
    return not commutes(pres, g, h)


def parse_word(pres: Presentation, text: str) -> Word:
    """Parse comma-separated tokens like 'a^9,x^9,b^-9,x^9'."""
    letters: list = []
    text = text.strip()
    if not text:
        return ()
    for token in text.split(","):
        token = token.strip()
        if "^" in token:
            base, _, exp = token.partition("^")
            n = int(exp)
        else:
            base, n = token, 1
        label = pres.label(base.strip())
        if n < 0:
            label, n = pres.inverse[label], -n
        letters.extend([label] * n)
    return tuple(letters)


def format_word(w: Word) -> str:
    """Run-length encoded token form, inverse of parse_word."""
    if not w:
        return ""
    runs = []
    for g in w:
        if runs and runs[-1][0] == g:
            runs[-1][1] += 1
        else:
            runs.append([g, 1])
    parts = []
    for g, n in runs:
        if g.inv:
            parts.append(f"{g.name}^-{n}")
        elif n == 1:
            parts.append(g.name)
        else:
            parts.append(f"{g.name}^{n}")
    return ",".join(parts)
