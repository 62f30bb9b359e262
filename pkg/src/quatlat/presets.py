"""Bundled lattices and the reproducible example languages.

Presets: the three named lattices (loaded from data files) and the two
smallest parametric ones.  Each example language pairs a bounded
language over a preset with the symbolic set its enumeration must
reproduce; `quatlat compare` consumes this registry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import LatticeParams, Presentation, build_square_table, named_presentation
from .parikh import BoundedLanguageSpec, LinearSet, PowerDiagonal, SemilinearSet
from .rewrite import parse_word

PRESET_NAMES = ("gamma3", "gamma4", "gamma32", "q3", "q5")

_PARAM_PRESETS = {
    "q3": (3, 1, -1, -1),
    "q5": (5, 1, 2, 3),
}

_CACHE: dict = {}


def get_presentation(name: str) -> Presentation:
    if name not in _CACHE:
        if name in _PARAM_PRESETS:
            _CACHE[name] = build_square_table(LatticeParams.make(*_PARAM_PRESETS[name]))
        elif name in PRESET_NAMES:
            _CACHE[name] = named_presentation(name)
        else:
            raise KeyError(f"unknown preset {name!r}; have {PRESET_NAMES}")
    return _CACHE[name]


@dataclass(frozen=True)
class ExampleLanguage:
    lattice: str
    words: str
    expected: object
    bound: int
    signed: bool = False
    remap: tuple | None = None

    def spec(self, pres: Presentation) -> BoundedLanguageSpec:
        blocks = tuple(parse_word(pres, w) for w in self.words.split(";"))
        return BoundedLanguageSpec(blocks, signed=self.signed, remap=self.remap)


def _diag_orbit_set(n: int):
    """The mixed-equation solution set at q=3: the trivial family plus
    the signed orbit of (1,1,1,1) under (i,j,k,l) -> (3i,-3j,-3k,3l),
    which is how the cube endomorphism transports the base square."""
    pts = {(0, 0, 0, 0)}
    for k in range(1, n + 1):
        pts.add((0, k, -k, 0))
        pts.add((0, -k, k, 0))
    t = (1, 1, 1, 1)
    while max(abs(x) for x in t) <= n:
        pts.add(t)
        pts.add(tuple(-x for x in t))
        t = (3 * t[0], -3 * t[1], -3 * t[2], 3 * t[3])
    return pts


_L = LinearSet
_S = SemilinearSet.of

_GAMMA4_POWER_SET = _S((0, 0, 0, 0), _L((1, 1, 1, 1), ((3, 0, 3, 0),)))

EXAMPLES = {
    e.lattice + "/" + e.words: e
    for e in [
        ExampleLanguage("gamma3", "a;x;b^-1;x", PowerDiagonal(9, 4), 30),
        ExampleLanguage(
            "gamma3",
            "a;x;b;x",
            _diag_orbit_set,
            10,
            signed=True,
            remap=((0, 1), (1, 1), (3, 1), (2, -1)),
        ),
        ExampleLanguage("gamma4", "a;x;b^-1;y^-1", _GAMMA4_POWER_SET, 15),
        ExampleLanguage("gamma4", "a;y;b^-1;y", _GAMMA4_POWER_SET, 15),
        ExampleLanguage("gamma4", "b;y;a^-1;x", _GAMMA4_POWER_SET, 15),
        ExampleLanguage(
            "gamma4",
            "b;x;a;x^-1",
            _S(
                (0, 0, 0, 0),
                _L((0, 1, 0, 1), ((1, 0, 1, 0),)),
                _L((0, 0, 0, 0), ((0, 1, 0, 1),)),
                _L((0, 1, 0, 1), ((3, 0, 3, 0), (0, 4, 0, 4))),
            ),
            15,
        ),
        ExampleLanguage(
            "gamma32",
            "a;x;b^-1;x^-1",
            _S(_L((0, 0, 0, 0), ((0, 1, 0, 1),)), _L((0, 1, 0, 1), ((1, 0, 1, 0),))),
            10,
        ),
        ExampleLanguage(
            "gamma32",
            "a;y;b^-1;y^-1",
            _S(_L((0, 0, 0, 0), ((0, 1, 0, 1),)), _L((0, 1, 0, 1), ((1, 0, 1, 0),))),
            10,
        ),
        ExampleLanguage("gamma32", "b;x;a^-1;y^-1", _S((0, 0, 0, 0), (1, 1, 1, 1), (3, 3, 3, 3)), 10),
        ExampleLanguage("gamma32", "b;y;c^-1;x^-1", _S((0, 0, 0, 0), (1, 1, 1, 1)), 10),
        ExampleLanguage(
            "gamma32",
            "c;x;c^-1;y^-1",
            _S(_L((1, 0, 1, 0), ((0, 1, 0, 1),)), _L((0, 0, 0, 0), ((1, 0, 1, 0),))),
            10,
        ),
        ExampleLanguage("gamma32", "c;y;a^-1;x^-1", _S((0, 0, 0, 0), (1, 1, 1, 1)), 10),
        ExampleLanguage("q3", "A0;B0;A2;B0", PowerDiagonal(9, 4), 30),
        ExampleLanguage(
            "q5",
            "A0;B2;A0^-1;B2^-1",
            _S(_L((0, 0, 0, 0), ((1, 0, 1, 0), (0, 1, 0, 1)))),
            10,
        ),
    ]
}


def first_commuting_language(pres: Presentation, bound: int = 10):
    """The a*b*(a^-1)*(b^-1)* language of the first commuting square of a
    parametric lattice, with its semilinear prediction {(n, m, n, m)}."""
    commuting = pres.commuting_squares()
    if not commuting:
        raise ValueError("lattice has no commuting square")
    a, b = commuting[0].a, commuting[0].b
    spec = BoundedLanguageSpec(((a,), (b,), (pres.inverse[a],), (pres.inverse[b],)))
    expected = SemilinearSet.of(LinearSet((0, 0, 0, 0), ((1, 0, 1, 0), (0, 1, 0, 1))))
    return spec, expected
