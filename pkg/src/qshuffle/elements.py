"""Graded elements of the two Hopf algebras and their structure maps.

Elements are finitely supported rational combinations of basis elements
indexed by compositions.  Two bases have products wired in:

* ``M`` — monomial quasisymmetric functions; product is the bilinear
  extension of the quasi-shuffle of indices, coproduct is deconcatenation.
* ``X`` — the word basis of the shuffle algebra; product is the bilinear
  extension of the shuffle, coproduct is again deconcatenation.

Any other basis tag is allowed for storage (derived bases produced by the
change-of-basis code) but has no product or coproduct; structure maps raise
BasisMismatch on such tags.

All coefficients are Fraction; zero terms are pruned on construction, so
equality of elements is equality of the term dictionaries.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations

from .compositions import (
    EMPTY,
    Composition,
    canonical_key,
    deconcatenations,
    quasi_shuffle,
    refinement_split,
    shuffle,
)
from .errors import BasisMismatch, DegreeMismatch, NotAPartition, NotARefinement

MONOMIAL = "M"
WORD = "X"
_PRODUCT_RULES = {MONOMIAL: quasi_shuffle, WORD: shuffle}


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class GradedElement:
    """A finitely supported map from compositions to rationals, tagged with a basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        cleaned: dict[Composition, Fraction] = {}
        for comp, coef in (terms or {}).items() if isinstance(terms, dict) else (terms or ()):
            coef = _as_fraction(coef)
            if coef == 0:
                continue
            comp = Composition(comp)
            cleaned[comp] = cleaned.get(comp, Fraction(0)) + coef
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", {c: v for c, v in cleaned.items() if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("GradedElement is immutable")

    @classmethod
    def basis_element(cls, basis: str, comp) -> "GradedElement":
        return cls(basis, {Composition(comp): Fraction(1)})

    @classmethod
    def unit(cls, basis: str) -> "GradedElement":
        return cls.basis_element(basis, EMPTY)

    @classmethod
    def zero(cls, basis: str) -> "GradedElement":
        return cls(basis, {})

    def coefficient(self, comp) -> Fraction:
        return self.terms.get(Composition(comp), Fraction(0))

    def support(self) -> list[Composition]:
        return sorted(self.terms, key=canonical_key)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({c.size for c in self.terms})

    def homogeneous_component(self, n: int) -> "GradedElement":
        return GradedElement(self.basis, {c: v for c, v in self.terms.items() if c.size == n})

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None (zero counts as any degree)."""
        ds = self.degrees()
        if len(ds) > 1:
            return None
        return ds[0] if ds else 0

    def _require_same_basis(self, other: "GradedElement") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedElement)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._require_same_basis(other)
        merged = dict(self.terms)
        for c, v in other.terms.items():
            merged[c] = merged.get(c, Fraction(0)) + v
        return GradedElement(self.basis, merged)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.basis, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def scaled(self, scalar) -> "GradedElement":
        s = _as_fraction(scalar)
        return GradedElement(self.basis, {c: s * v for c, v in self.terms.items()})

    def __rmul__(self, scalar) -> "GradedElement":
        return self.scaled(scalar)

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return product(self, other)
        return self.scaled(other)

    def __repr__(self) -> str:
        return f"<{format_element(self)}>"

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"comp": list(c), "coef": str(v)}
                for c, v in sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(", ", ": "))

    @classmethod
    def from_json_dict(cls, data: dict) -> "GradedElement":
        return cls(data["basis"], {Composition(t["comp"]): Fraction(t["coef"]) for t in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "GradedElement":
        return cls.from_json_dict(json.loads(text))


def format_coefficient(coef: Fraction, lead: bool) -> str:
    sign = "-" if coef < 0 else ("" if lead else "+")
    mag = abs(coef)
    body = "" if mag == 1 else f"{mag} "
    if lead:
        return f"{sign}{body}" if sign else body
    return f"{sign} {body}"


def format_element(elem: GradedElement) -> str:
    """Render like ``M[2,1] + 1/3 M[3]``; the zero element is ``0``."""
    if elem.is_zero():
        return "0"
    chunks = []
    for i, comp in enumerate(elem.support()):
        coef = elem.terms[comp]
        chunks.append(f"{format_coefficient(coef, lead=(i == 0))}{elem.basis}[{comp.to_text()}]")
    return " ".join(chunks)


def product(a: GradedElement, b: GradedElement) -> GradedElement:
    a._require_same_basis(b)
    rule = _PRODUCT_RULES.get(a.basis)
    if rule is None:
        raise BasisMismatch(f"no product rule for basis {a.basis!r}")
    acc: dict[Composition, Fraction] = {}
    for ca, va in a.terms.items():
        for cb, vb in b.terms.items():
            coef = va * vb
            for word, mult in rule(ca, cb).items():
                acc[word] = acc.get(word, Fraction(0)) + coef * mult
    return GradedElement(a.basis, acc)


class TensorElement:
    """An element of the two-fold tensor square, for coproducts."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        cleaned: dict[tuple[Composition, Composition], Fraction] = {}
        for pair, coef in (terms or {}).items() if isinstance(terms, dict) else (terms or ()):
            coef = _as_fraction(coef)
            if coef == 0:
                continue
            key = (Composition(pair[0]), Composition(pair[1]))
            cleaned[key] = cleaned.get(key, Fraction(0)) + coef
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", {k: v for k, v in cleaned.items() if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return TensorElement(self.basis, merged)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scaled(-1)

    def scaled(self, scalar) -> "TensorElement":
        s = _as_fraction(scalar)
        return TensorElement(self.basis, {k: s * v for k, v in self.terms.items()})

    def __rmul__(self, scalar) -> "TensorElement":
        return self.scaled(scalar)

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scaled(other)
        # componentwise product, used by the bialgebra compatibility checks
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")
        rule = _PRODUCT_RULES.get(self.basis)
        if rule is None:
            raise BasisMismatch(f"no product rule for basis {self.basis!r}")
        acc: dict[tuple[Composition, Composition], Fraction] = {}
        for (l1, r1), v1 in self.terms.items():
            for (l2, r2), v2 in other.terms.items():
                coef = v1 * v2
                for wl, ml in rule(l1, l2).items():
                    for wr, mr in rule(r1, r2).items():
                        key = (wl, wr)
                        acc[key] = acc.get(key, Fraction(0)) + coef * ml * mr
        return TensorElement(self.basis, acc)

    def evaluate(self, left_fn, right_fn) -> Fraction:
        """Apply a pair of functionals and sum."""
        total = Fraction(0)
        for (l, r), v in self.terms.items():
            total += v * left_fn(l) * right_fn(r)
        return total

    def support(self):
        return sorted(self.terms, key=lambda pr: (canonical_key(pr[0]), canonical_key(pr[1])))

    def __repr__(self) -> str:
        if not self.terms:
            return "<0 (x) 0>"
        bits = []
        for l, r in self.support():
            v = self.terms[(l, r)]
            bits.append(f"{v} {self.basis}[{l.to_text()}](x){self.basis}[{r.to_text()}]")
        return "<" + " + ".join(bits) + ">"


def tensor_outer(a: GradedElement, b: GradedElement) -> TensorElement:
    """The simple tensor a (x) b."""
    if a.basis != b.basis:
        raise BasisMismatch(f"{a.basis} vs {b.basis}")
    acc: dict[tuple[Composition, Composition], Fraction] = {}
    for ca, va in a.terms.items():
        for cb, vb in b.terms.items():
            acc[(ca, cb)] = acc.get((ca, cb), Fraction(0)) + va * vb
    return TensorElement(a.basis, acc)


def coproduct(h: GradedElement) -> TensorElement:
    """Deconcatenation coproduct, the same rule in both wired bases."""
    if h.basis not in _PRODUCT_RULES:
        raise BasisMismatch(f"no coproduct for basis {h.basis!r}")
    acc: dict[tuple[Composition, Composition], Fraction] = {}
    for comp, coef in h.terms.items():
        for left, right in deconcatenations(comp):
            key = (left, right)
            acc[key] = acc.get(key, Fraction(0)) + coef
    return TensorElement(h.basis, acc)


def counit(h: GradedElement) -> Fraction:
    return h.coefficient(EMPTY)


def delta_alpha(h: GradedElement, alpha) -> list[tuple[tuple[Composition, ...], Fraction]]:
    """The iterated coproduct of h projected onto multidegree alpha.

    h must be homogeneous of degree |alpha|.  For a deconcatenation basis
    this is a sum over splits of each index into consecutive blocks of sizes
    alpha_1, ..., alpha_l; such a split is unique when it exists, and it
    exists exactly when the index refines alpha.
    """
    if h.basis not in _PRODUCT_RULES:
        raise BasisMismatch(f"no coproduct for basis {h.basis!r}")
    alpha = Composition(alpha)
    if h.homogeneous_degree() != alpha.size and not h.is_zero():
        raise DegreeMismatch(f"element of degrees {h.degrees()} vs multidegree {alpha}")
    acc: dict[tuple[Composition, ...], Fraction] = {}
    for comp, coef in h.terms.items():
        if not alpha:
            acc[()] = acc.get((), Fraction(0)) + coef
            continue
        try:
            blocks = refinement_split(comp, alpha)
        except NotARefinement:
            continue
        acc[blocks] = acc.get(blocks, Fraction(0)) + coef
    return sorted(
        ((blocks, v) for blocks, v in acc.items() if v != 0),
        key=lambda kv: tuple(canonical_key(b) for b in kv[0]),
    )


def antipode_word(h: GradedElement) -> GradedElement:
    """Antipode on the shuffle algebra: X[a1..al] -> (-1)^l X[al..a1]."""
    if h.basis != WORD:
        raise BasisMismatch(f"closed-form word antipode needs basis {WORD!r}, got {h.basis!r}")
    acc: dict[Composition, Fraction] = {}
    for comp, coef in h.terms.items():
        rev = comp.reverse()
        sign = -1 if comp.length % 2 else 1
        acc[rev] = acc.get(rev, Fraction(0)) + sign * coef
    return GradedElement(WORD, acc)


_antipode_cache: dict[tuple[str, Composition], GradedElement] = {}


def antipode_by_recursion(basis: str, comp) -> GradedElement:
    """Antipode of one basis element by the connected-graded recursion.

    S(1) = 1 and, for positive degree, S(b) = -b - sum S(b') b'' over the
    proper part of the deconcatenation coproduct.  Works in either wired
    basis; this is the generic route with no closed form assumed.
    """
    if basis not in _PRODUCT_RULES:
        raise BasisMismatch(f"no antipode for basis {basis!r}")
    comp = Composition(comp)
    key = (basis, comp)
    cached = _antipode_cache.get(key)
    if cached is not None:
        return cached
    if not comp:
        result = GradedElement.unit(basis)
    else:
        result = -GradedElement.basis_element(basis, comp)
        for i in range(1, comp.length):
            left = Composition(comp[:i])
            right = GradedElement.basis_element(basis, comp[i:])
            result = result - product(antipode_by_recursion(basis, left), right)
    _antipode_cache[key] = result
    return result


def antipode_monomial(h: GradedElement) -> GradedElement:
    """Antipode on the monomial basis, by the recursion (no closed form used)."""
    if h.basis != MONOMIAL:
        raise BasisMismatch(f"monomial antipode needs basis {MONOMIAL!r}, got {h.basis!r}")
    out = GradedElement.zero(MONOMIAL)
    for comp, coef in h.terms.items():
        out = out + antipode_by_recursion(MONOMIAL, comp).scaled(coef)
    return out


def expand_polynomial(h: GradedElement, num_vars: int) -> dict[tuple[int, ...], Fraction]:
    """Truncate a monomial-basis element to a polynomial in num_vars variables.

    M[a1..al] becomes the sum of x_{i1}^{a1} ... x_{il}^{al} over strictly
    increasing index tuples i1 < ... < il <= num_vars.  Returned as a map
    from exponent vectors (length num_vars) to coefficients.
    """
    if h.basis != MONOMIAL:
        raise BasisMismatch(f"polynomial expansion needs basis {MONOMIAL!r}, got {h.basis!r}")
    if num_vars < 0:
        raise ValueError("num_vars must be >= 0")
    poly: dict[tuple[int, ...], Fraction] = {}
    for comp, coef in h.terms.items():
        for idx in combinations(range(num_vars), comp.length):
            expo = [0] * num_vars
            for pos, power in zip(idx, comp):
                expo[pos] = power
            key = tuple(expo)
            poly[key] = poly.get(key, Fraction(0)) + coef
    return {k: v for k, v in poly.items() if v != 0}


def polynomial_product(
    p: dict[tuple[int, ...], Fraction], q: dict[tuple[int, ...], Fraction]
) -> dict[tuple[int, ...], Fraction]:
    """Multiply two exponent-vector polynomials over the same variable count."""
    acc: dict[tuple[int, ...], Fraction] = {}
    for ea, va in p.items():
        for eb, vb in q.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            acc[key] = acc.get(key, Fraction(0)) + va * vb
    return {k: v for k, v in acc.items() if v != 0}


def power_sum(partition) -> GradedElement:
    """The symmetric power sum p_lambda as a monomial-basis element.

    p_n = M[n], and p_lambda is the product over the parts.  Parts must be
    weakly decreasing.
    """
    parts = list(partition)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise NotAPartition(f"parts not weakly decreasing: {parts}")
    out = GradedElement.unit(MONOMIAL)
    for p in parts:
        out = product(out, GradedElement.basis_element(MONOMIAL, (p,)))
    return out
