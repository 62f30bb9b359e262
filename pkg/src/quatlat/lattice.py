"""Presentations of the two-sided square-complex lattices.

A presentation carries two inverse-closed generator alphabets (the A and
B sides), and a total swap map on A x B pairs encoding the relations
a * b = b' * a'.  Totality plus bijectivity of (a, b) -> (b', a') is the
complete square complex condition: every element then factors uniquely
as an A-word times a B-word and vice versa, which is what the rewriting
module exploits.

Parametric lattices come from field data (q, c, tau): the A alphabet is
indexed by the norm fiber over -c, the B alphabet by the fiber over
c*tau/(1-tau), and each swap entry is the unique solution (lambda, mu)
of   xi + eta = lambda + mu,   xi * conj(eta) = lambda * conj(mu),
found by scanning the B fiber.  Named lattices are given by a literal
list of squares over symbolic letters; the full table is expanded from
the four readings of each square, never hand-entered.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .ff import Field, FieldElem, QuadExt, QuadElem, norm_fiber
from .ff import sigma_k as _ext_sigma_k
from .quat import Poly, QuatAlgebra


class SquareSolveError(RuntimeError):
    """The relation system has no solution or several; indicates a bug
    or invalid parameters, since uniqueness is guaranteed."""


class ComplexError(ValueError):
    """Square data does not define a complete square complex."""


class ParameterMismatchError(ValueError):
    """Source/target presentations do not fit the requested map."""


class GenLabel:
    """A generator letter: side 'A' or 'B', a stable name, an inversion
    flag for named lattices, and the fiber index for parametric ones."""

    __slots__ = ("side", "name", "inv", "index", "_hash")

    def __init__(self, side: str, name: str, inv: bool = False, index: QuadElem | None = None):
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "_hash", hash((side, name, inv)))

    def __setattr__(self, *_):
        raise AttributeError("GenLabel is immutable")

    def token(self) -> str:
        return f"{self.name}^-1" if self.inv else self.name

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GenLabel):
            return NotImplemented
        return (
            self.side == other.side
            and self.name == other.name
            and self.inv == other.inv
            and self.index == other.index
        )

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (GenLabel, (self.side, self.name, self.inv, self.index))

    def to_json(self) -> dict:
        if self.index is not None:
            return {"side": self.side, "index": self.index.to_json()}
        return {"name": self.name, "inv": self.inv}

    def __repr__(self):
        return self.token()


Word = tuple  # sequence of GenLabel


@dataclass(frozen=True)
class LatticeParams:
    """Field data (q, c, tau) for a parametric lattice."""

    ext: QuadExt
    tau: FieldElem

    def __post_init__(self):
        field = self.ext.field
        if self.tau.is_zero() or self.tau == field.one:
            raise ValueError("tau must differ from 0 and 1")

    @property
    def field(self) -> Field:
        return self.ext.field

    @property
    def c(self) -> FieldElem:
        return self.ext.c

    @property
    def a_norm_target(self) -> FieldElem:
        return -self.c

    @property
    def b_norm_target(self) -> FieldElem:
        one = self.field.one
        return self.c * self.tau / (one - self.tau)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "c": self.c.to_json(),
            "tau": self.tau.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "LatticeParams":
        field = Field.from_json(data["field"])
        ext = QuadExt(field, field.element(data["c"]))
        return cls(ext, field.element(data["tau"]))

    @classmethod
    def make(cls, p: int, e: int, c, tau) -> "LatticeParams":
        field = Field(p, e)
        ext = QuadExt(field, field.element(c))
        return cls(ext, field.element(tau))


@dataclass(frozen=True)
class Square:
    """One geometric square a*b = b2*a2 with its commutation status."""

    a: GenLabel
    b: GenLabel
    b2: GenLabel
    a2: GenLabel
    commuting: bool

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "b2": self.b2.to_json(),
            "a2": self.a2.to_json(),
            "commuting": self.commuting,
        }


class Presentation:
    """An inverse-closed two-alphabet presentation with a total swap map."""

    def __init__(
        self,
        kind: str,
        alphabet_a: Sequence[GenLabel],
        alphabet_b: Sequence[GenLabel],
        inverse: dict,
        swap: dict,
        params: LatticeParams | None = None,
        name: str | None = None,
    ):
        self.kind = kind
        self.alphabet_a = tuple(alphabet_a)
        self.alphabet_b = tuple(alphabet_b)
        self.inverse = inverse
        self.swap = swap
        self.swap_ba = {v: k for k, v in swap.items()}
        self.params = params
        self.name = name
        self.by_token = {l.token(): l for l in self.alphabet_a + self.alphabet_b}
        self.k_tau = compute_k_tau(params) if kind == "parametric" else None
        self._validate()
        self.squares = self._collect_squares()

    def _validate(self):
        la, lb = self.alphabet_a, self.alphabet_b
        for alphabet in (la, lb):
            for l in alphabet:
                inv = self.inverse.get(l)
                if inv is None or inv == l or self.inverse.get(inv) != l:
                    raise ComplexError(f"alphabet not fixed-point-freely inverse-paired at {l}")
        pairs = {(a, b) for a in la for b in lb}
        if set(self.swap) != pairs:
            raise ComplexError("swap map is not total on the A x B pairs")
        if len(set(self.swap.values())) != len(self.swap):
            raise ComplexError("swap map is not injective")
        for (a, b), (b2, a2) in self.swap.items():
            if a2.side != "A" or b2.side != "B":
                raise ComplexError(f"swap image of ({a}, {b}) has wrong sides")
            ia, ib = self.inverse[a], self.inverse[b]
            ia2, ib2 = self.inverse[a2], self.inverse[b2]
            if self.swap[(ia, b2)] != (b, ia2):
                raise ComplexError(f"reading 2 inconsistent at ({a}, {b})")
            if self.swap[(a2, ib)] != (ib2, a):
                raise ComplexError(f"reading 3 inconsistent at ({a}, {b})")
            if self.swap[(ia2, ib2)] != (ib, ia):
                raise ComplexError(f"reading 4 inconsistent at ({a}, {b})")

    def _collect_squares(self):
        seen = set()
        squares = []
        for (a, b), (b2, a2) in sorted(
            self.swap.items(), key=lambda kv: (kv[0][0].token(), kv[0][1].token())
        ):
            if (a, b) in seen:
                continue
            ia, ib = self.inverse[a], self.inverse[b]
            ia2, ib2 = self.inverse[a2], self.inverse[b2]
            seen.update({(a, b), (ia, b2), (a2, ib), (ia2, ib2)})
            squares.append(Square(a, b, b2, a2, commuting=(b2 == b and a2 == a)))
        return tuple(squares)

    def label(self, token: str) -> GenLabel:
        try:
            return self.by_token[token]
        except KeyError:
            raise KeyError(f"unknown generator token {token!r}") from None

    def inv(self, label: GenLabel) -> GenLabel:
        return self.inverse[label]

    def invert_word(self, w: Word) -> Word:
        return tuple(self.inverse[g] for g in reversed(w))

    def a_label(self, xi: QuadElem) -> GenLabel:
        for l in self.alphabet_a:
            if l.index == xi:
                return l
        raise KeyError(f"no A label with index {xi!r}")

    def b_label(self, eta: QuadElem) -> GenLabel:
        for l in self.alphabet_b:
            if l.index == eta:
                return l
        raise KeyError(f"no B label with index {eta!r}")

    def commuting_squares(self):
        return tuple(s for s in self.squares if s.commuting)

    def to_json(self) -> dict:
        data = {
            "kind": self.kind,
            "name": self.name,
            "params": self.params.to_json() if self.params else None,
            "alphabetA": [l.to_json() for l in self.alphabet_a],
            "alphabetB": [l.to_json() for l in self.alphabet_b],
            "squares": [s.to_json() for s in self.squares],
            "k_tau": self.k_tau,
        }
        return data

    def __repr__(self):
        tag = self.name or (f"q={self.params.field.q}" if self.params else "?")
        return f"Presentation({self.kind}, {tag}, |A|={len(self.alphabet_a)})"


def build_generators(params: LatticeParams):
    """The two index fibers, in enumeration order; both of size q+1."""
    fiber_a = norm_fiber(params.ext, params.a_norm_target)
    fiber_b = norm_fiber(params.ext, params.b_norm_target)
    if set(fiber_a) & set(fiber_b):
        raise ValueError("generator fibers intersect; invalid (c, tau)")
    return fiber_a, fiber_b


def solve_square(params: LatticeParams, xi: QuadElem, eta: QuadElem):
    """The unique (lambda, mu) with xi+eta = lambda+mu and
    xi*conj(eta) = lambda*conj(mu), scanning lambda over the B fiber."""
    fiber_b = norm_fiber(params.ext, params.b_norm_target)
    a_target = params.a_norm_target
    total = xi + eta
    prod = xi * eta.conj()
    found = None
    for lam in fiber_b:
        mu = total - lam
        if mu.is_zero() or mu.norm() != a_target:
            continue
        if lam * mu.conj() == prod:
            if found is not None:
                raise SquareSolveError(f"two solutions for ({xi!r}, {eta!r})")
            found = (lam, mu)
    if found is None:
        raise SquareSolveError(f"no solution for ({xi!r}, {eta!r})")
    return found


def build_square_table(params: LatticeParams) -> Presentation:
    """The full parametric presentation with its (q+1)^2-entry swap map."""
    fiber_a, fiber_b = build_generators(params)
    labels_a = tuple(GenLabel("A", f"A{i}", index=xi) for i, xi in enumerate(fiber_a))
    labels_b = tuple(GenLabel("B", f"B{i}", index=eta) for i, eta in enumerate(fiber_b))
    by_index_a = {l.index: l for l in labels_a}
    by_index_b = {l.index: l for l in labels_b}
    inverse = {}
    for l in labels_a:
        inverse[l] = by_index_a[-l.index]
    for l in labels_b:
        inverse[l] = by_index_b[-l.index]
    swap = {}
    for la in labels_a:
        for lb in labels_b:
            lam, mu = solve_square(params, la.index, lb.index)
            swap[(la, lb)] = (by_index_b[lam], by_index_a[mu])
    return Presentation("parametric", labels_a, labels_b, inverse, swap, params=params)


def expand_squares(
    a_names: Sequence[str],
    b_names: Sequence[str],
    squares: Iterable[tuple],
    name: str | None = None,
) -> Presentation:
    """Expand a literal square list over symbolic letters into a full
    presentation via the four readings of each square.

    Squares are 4-tuples of tokens (a, b, b2, a2) meaning a*b = b2*a2.
    """
    labels = {}
    for side, names in (("A", a_names), ("B", b_names)):
        for n in names:
            labels[n] = GenLabel(side, n, inv=False)
            labels[f"{n}^-1"] = GenLabel(side, n, inv=True)
    inverse = {}
    for n in list(a_names) + list(b_names):
        inverse[labels[n]] = labels[f"{n}^-1"]
        inverse[labels[f"{n}^-1"]] = labels[n]
    alphabet_a = tuple(labels[t] for n in a_names for t in (n, f"{n}^-1"))
    alphabet_b = tuple(labels[t] for n in b_names for t in (n, f"{n}^-1"))

    swap = {}

    def add(key, value):
        if key in swap and swap[key] != value:
            raise ComplexError(f"overlapping squares at {key}")
        swap[key] = value

    for sq in squares:
        try:
            a, b, b2, a2 = (labels[t] for t in sq)
        except KeyError as exc:
            raise ComplexError(f"square {sq} uses unknown token {exc}") from None
        if a.side != "A" or a2.side != "A" or b.side != "B" or b2.side != "B":
            raise ComplexError(f"square {sq} has letters on the wrong sides")
        ia, ib, ia2, ib2 = inverse[a], inverse[b], inverse[a2], inverse[b2]
        add((a, b), (b2, a2))
        add((ia, b2), (b, ia2))
        add((a2, ib), (ib2, a))
        add((ia2, ib2), (ib, ia))
    expected = len(alphabet_a) * len(alphabet_b)
    if len(swap) != expected:
        raise ComplexError(f"incomplete complex: {len(swap)} of {expected} pairs covered")
    return Presentation("named", alphabet_a, alphabet_b, inverse, swap, name=name)


def compute_k_tau(params: LatticeParams) -> int:
    """Smallest k >= 1 with (tau/(tau-1))^((p^k - 1)/2) = 1."""
    field = params.field
    one = field.one
    u = params.tau / (params.tau - one)
    for k in range(1, 2 * field.e + 1):
        if u ** ((field.p**k - 1) // 2) == one:
            return k
    raise SquareSolveError("k_tau not found below the guaranteed bound")


def sigma_k(params: LatticeParams, xi: QuadElem, k: int) -> QuadElem:
    return _ext_sigma_k(params.ext, xi, k)


def oracle_check_table(pres: Presentation) -> dict:
    """Check every swap entry as a projective identity in the quaternion
    algebra with f(t) = t; returns {'ok': bool, 'failures': [...], ...}."""
    if pres.kind != "parametric":
        raise ParameterMismatchError("oracle check needs a parametric lattice")
    algebra = QuatAlgebra(pres.params.ext)
    t = Poly.t(pres.params.field)
    cache = {}

    def emb(label):
        if label not in cache:
            cache[label] = algebra.generator_quat(label.index, t).projective()
        return cache[label]

    failures = []
    for (la, lb), (lb2, la2) in pres.swap.items():
        lhs = emb(la) * emb(lb)
        rhs = emb(lb2) * emb(la2)
        if lhs != rhs:
            failures.append((la.token(), lb.token()))
    return {
        "ok": not failures,
        "checked": len(pres.swap),
        "failures": failures,
    }


def phi_k_map(src: Presentation, dst: Presentation, k: int) -> dict:
    """Letter-to-word substitution sending each source generator to the
    p^k-th power of the matching target generator.

    src must present the lattice at parameter tau^(p^k) where dst is at
    tau; A letters map index-identically, B letters through the inverse
    of the norm-twisted scaling.
    """
    if src.kind != "parametric" or dst.kind != "parametric":
        raise ParameterMismatchError("power maps need parametric lattices")
    sp, dp = src.params, dst.params
    if sp.ext != dp.ext:
        raise ParameterMismatchError("source and target have different (q, c)")
    m = dp.field.p**k
    if sp.tau != dp.tau**m:
        raise ParameterMismatchError("source tau is not tau^(p^k) of the target")
    one = dp.field.one
    scale = (dp.tau / (dp.tau - one)) ** ((m - 1) // 2)
    scale_inv = scale.inverse()
    mapping = {}
    for l in src.alphabet_a:
        mapping[l] = (dst.a_label(l.index),) * m
    for l in src.alphabet_b:
        mapping[l] = (dst.b_label(l.index * scale_inv),) * m
    return mapping


def letter_map(src: Presentation, dst: Presentation, images: dict) -> dict:
    """Build a substitution from {token: word-token-list} data, extended
    to inverse letters."""
    mapping = {}
    for token, image in images.items():
        label = src.label(token)
        word = tuple(dst.label(t) for t in image)
        mapping[label] = word
        mapping[src.inv(label)] = dst.invert_word(word)
    missing = [l.token() for l in src.alphabet_a + src.alphabet_b if l not in mapping]
    if missing:
        raise ParameterMismatchError(f"map not defined on {missing}")
    return mapping


def verify_homomorphism(src: Presentation, dst: Presentation, mapping: dict) -> dict:
    """Every defining relation of src must map to the identity of dst."""
    from . import rewrite

    failures = []
    for l in src.alphabet_a + src.alphabet_b:
        w = mapping[l] + mapping[src.inv(l)]
        if not rewrite.is_identity(dst, w):
            failures.append(("inverse", l.token()))
    for (la, lb), (lb2, la2) in src.swap.items():
        w = mapping[la] + mapping[lb] + dst.invert_word(mapping[la2]) + dst.invert_word(
            mapping[lb2]
        )
        if not rewrite.is_identity(dst, w):
            failures.append(("square", la.token(), lb.token()))
    return {"ok": not failures, "failures": failures}


def check_finite_lemmas(pres: Presentation, powers=(1, 2, 3, 4)) -> dict:
    """Exhaustive checks of the index identities and of the p^n power
    relations against the k_tau divisibility criterion.

    For every entry: lambda = eta iff mu = xi, and the conjugate variant.
    For entry pairs chained through a shared (eta, lambda): the chain
    forces lambda = eta.  For every non-commuting square and each n in
    powers: a^(p^n) b^(p^n) = b'^(p^n) a'^(p^n) (decided by rewriting)
    iff k_tau divides n.
    """
    from . import rewrite

    if pres.kind != "parametric":
        raise ParameterMismatchError("finite lemma checks need a parametric lattice")
    p = pres.params.field.p
    failures = []
    entries = []
    for (la, lb), (lb2, la2) in pres.swap.items():
        entries.append((la.index, lb.index, lb2.index, la2.index, la, lb, lb2, la2))

    for xi, eta, lam, mu, *_ in entries:
        if (lam == eta) != (mu == xi):
            failures.append(("eta-mu", repr(xi), repr(eta)))
        if (lam == eta.conj()) != (mu == xi.conj()):
            failures.append(("conj", repr(xi), repr(eta)))

    # chained pairs: a_xi b_eta = b_lam a_mu and a_mu b_eta = b_lam a_chi
    by_key = {(xi, eta): (lam, mu) for xi, eta, lam, mu, *_ in entries}
    for xi, eta, lam, mu, *_ in entries:
        lam2, chi = by_key[(mu, eta)]
        if lam2 == lam and not (lam == eta and xi == mu and mu == chi):
            failures.append(("chain", repr(xi), repr(eta)))

    power_report = {}
    for xi, eta, lam, mu, la, lb, lb2, la2 in entries:
        if lam == eta:
            continue
        for n in powers:
            m = p**n
            w = (
                (la,) * m
                + (lb,) * m
                + (pres.inverse[la2],) * m
                + (pres.inverse[lb2],) * m
            )
            holds = rewrite.is_identity(pres, w)
            expected = n % pres.k_tau == 0
            power_report[(la.token(), lb.token(), n)] = holds
            if holds != expected:
                failures.append(("power", la.token(), lb.token(), n, holds))
    return {"ok": not failures, "failures": failures, "powers": power_report}


# ---------------------------------------------------------------------------
# named lattices


def _load_named(name: str) -> Presentation:
    text = (resources.files("quatlat") / "data" / f"{name}.json").read_text()
    return presentation_from_json(json.loads(text))


_NAMED_CACHE: dict = {}


def named_presentation(name: str) -> Presentation:
    if name not in _NAMED_CACHE:
        _NAMED_CACHE[name] = _load_named(name)
    return _NAMED_CACHE[name]


def gamma3_dictionary(parametric: Presentation, named: Presentation) -> dict:
    """The fixed identification of the abstract q=3 letters with the
    parametric generators: a, b, x, y <-> indices 1, -Z, 1+Z, 1-Z."""
    ext = parametric.params.ext
    pairs = {
        "a": parametric.a_label(ext.element(1)),
        "b": parametric.a_label(ext.element(0, -1)),
        "x": parametric.b_label(ext.element(1, 1)),
        "y": parametric.b_label(ext.element(1, -1)),
    }
    mapping = {}
    for token, plabel in pairs.items():
        nlabel = named.label(token)
        mapping[nlabel] = plabel
        mapping[named.inv(nlabel)] = parametric.inverse[plabel]
    return mapping


def check_gamma3_dictionary(parametric: Presentation, named: Presentation) -> bool:
    """The dictionary must carry every named swap entry to a parametric one."""
    d = gamma3_dictionary(parametric, named)
    for (la, lb), (lb2, la2) in named.swap.items():
        if parametric.swap[(d[la], d[lb])] != (d[lb2], d[la2]):
            return False
    return True


# ---------------------------------------------------------------------------
# JSON


def presentation_from_json(data: dict) -> Presentation:
    kind = data["kind"]
    if kind == "parametric":
        params = LatticeParams.from_json(data["params"])
        return build_square_table(params)
    if kind != "named":
        raise ValueError(f"unknown presentation kind {kind!r}")

    def label_name(entry) -> tuple:
        return entry["name"], entry["inv"]

    a_names, b_names = [], []
    for entry in data["alphabetA"]:
        n, inv = label_name(entry)
        if not inv and n not in a_names:
            a_names.append(n)
    for entry in data["alphabetB"]:
        n, inv = label_name(entry)
        if not inv and n not in b_names:
            b_names.append(n)

    def token(entry) -> str:
        n, inv = label_name(entry)
        return f"{n}^-1" if inv else n

    squares = [
        (token(sq["a"]), token(sq["b"]), token(sq["b2"]), token(sq["a2"]))
        for sq in data["squares"]
    ]
    return expand_squares(a_names, b_names, squares, name=data.get("name"))
