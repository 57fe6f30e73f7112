"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a finite map from exponent vectors (length-n tuples of
nonnegative ints) to nonzero Fraction coefficients, together with its
arity n.  The zero polynomial has an empty term map.  All arithmetic is
exact; nothing in this package ever touches floating point.

Arity is part of the value: operations on polynomials of different
arities raise InputError instead of embedding one ring in the other.
The certificate constructions move between an n-variable ring and its
2n-variable extension, and implicit coercion would hide bugs.

The canonical term order (string output, JSON export, atom
normalization) is graded lexicographic, largest term first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import InputError

ExpVec = tuple[int, ...]
Coefficient = Union[int, Fraction, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


def grlex_key(exp: ExpVec) -> tuple[int, ExpVec]:
    """Sort key realizing graded lexicographic order (degree, then lex)."""
    return (sum(exp), exp)


def split_even(exp: ExpVec) -> tuple[ExpVec, ExpVec]:
    """Write exp = 2*half + residue with every residue entry in {0, 1}."""
    return tuple(e >> 1 for e in exp), tuple(e & 1 for e in exp)


def _mul_terms(a: Mapping[ExpVec, Fraction], b: Mapping[ExpVec, Fraction]) -> dict[ExpVec, Fraction]:
    """Raw term-map product; drops cancelled terms."""
    out: dict[ExpVec, Fraction] = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


class Poly:
    """Immutable sparse polynomial with exact rational coefficients.

    `terms` maps exponent tuples to nonzero Fractions and must never be
    mutated after construction.
    """

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[ExpVec, Coefficient] | Iterable[tuple[ExpVec, Coefficient]] = ()):
        if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
            raise InputError(f"arity must be a positive integer, got {arity!r}")
        clean: dict[ExpVec, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != arity:
                raise InputError(f"exponent vector {exp} has length {len(exp)}, expected {arity}")
            if any((not isinstance(e, int)) or isinstance(e, bool) or e < 0 for e in exp):
                raise InputError(f"exponents must be nonnegative integers, got {exp}")
            c = clean.get(exp, _ZERO) + Fraction(coeff)
            if c:
                clean[exp] = c
            elif exp in clean:
                del clean[exp]
        self.arity = arity
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict[ExpVec, Fraction]) -> "Poly":
        """Trusted constructor: terms already canonical (no zeros, right lengths)."""
        p = object.__new__(cls)
        p.arity = arity
        p.terms = terms
        p._hash = None
        return p

    # ---------------------------------------------------------------- basics

    @classmethod
    def zero(cls, arity: int) -> "Poly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value: Coefficient) -> "Poly":
        c = Fraction(value)
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def variable(cls, arity: int, index: int) -> "Poly":
        """The polynomial x_{index+1} (index is 0-based)."""
        if not 0 <= index < arity:
            raise InputError(f"variable index {index} out of range for arity {arity}")
        exp = [0] * arity
        exp[index] = 1
        return cls._raw(arity, {tuple(exp): _ONE})

    @classmethod
    def monomial(cls, arity: int, exp: Sequence[int], coeff: Coefficient = 1) -> "Poly":
        return cls(arity, [(tuple(exp), coeff)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    def _check_same_arity(self, other: "Poly") -> None:
        if self.arity != other.arity:
            raise InputError(f"arity mismatch: {self.arity} vs {other.arity}")

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_arity(other)
        out = dict(self.terms)
        get = out.get
        for e, c in other.terms.items():
            s = get(e, _ZERO) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly._raw(self.arity, out)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Poly | Coefficient") -> "Poly":
        if isinstance(other, Poly):
            self._check_same_arity(other)
            return Poly._raw(self.arity, _mul_terms(self.terms, other.terms))
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly._raw(self.arity, {})
            return Poly._raw(self.arity, {e: v * c for e, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other: "Coefficient") -> "Poly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or isinstance(exponent, bool) or exponent < 0:
            raise InputError(f"polynomial exponent must be a nonnegative integer, got {exponent!r}")
        result = Poly.constant(self.arity, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # ----------------------------------------------------------- structure

    def total_degree(self) -> int:
        """Max total degree of any term; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """True when every term has the same total degree (the given one, if any)."""
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def leading_term(self) -> tuple[ExpVec, Fraction]:
        """Graded-lex largest term; raises on the zero polynomial."""
        if not self.terms:
            raise InputError("the zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[ExpVec, Fraction]]:
        """Terms in canonical (graded-lex descending) order."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=grlex_key, reverse=True)]

    def key(self) -> tuple:
        """Canonical comparison/merge key (derived from sorted_terms)."""
        return tuple((sum(e), e, c.numerator, c.denominator) for e, c in self.sorted_terms())

    # ----------------------------------------------------------- morphisms

    def substitute(self, images: Sequence[Sequence[int]]) -> "Poly":
        """Replace variable j by the monomial with exponent vector images[j].

        All images must share one target arity; the result lives there.
        This is a ring homomorphism (images have coefficient 1).
        """
        if len(images) != self.arity:
            raise InputError(f"expected {self.arity} images, got {len(images)}")
        imgs = [tuple(iv) for iv in images]
        target = len(imgs[0])
        for iv in imgs:
            if len(iv) != target:
                raise InputError("all images must have the same target arity")
            if any((not isinstance(e, int)) or isinstance(e, bool) or e < 0 for e in iv):
                raise InputError(f"image exponents must be nonnegative integers, got {iv}")
        if target < 1:
            raise InputError("target arity must be positive")
        out: dict[ExpVec, Fraction] = {}
        get = out.get
        for e, c in self.terms.items():
            acc = [0] * target
            for j, ej in enumerate(e):
                if ej:
                    img = imgs[j]
                    for t in range(target):
                        acc[t] += ej * img[t]
            key = tuple(acc)
            s = get(key, _ZERO) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return Poly._raw(target, out)

    def permuted(self, sigma: Sequence[int]) -> "Poly":
        """Relabel variable j as sigma[j]; sigma must permute range(arity)."""
        if sorted(sigma) != list(range(self.arity)):
            raise InputError(f"{sigma!r} is not a permutation of range({self.arity})")
        out: dict[ExpVec, Fraction] = {}
        for e, c in self.terms.items():
            d = [0] * self.arity
            for j, ej in enumerate(e):
                d[sigma[j]] = ej
            out[tuple(d)] = c
        return Poly._raw(self.arity, out)

    def evaluate(self, point: Sequence[Coefficient]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.arity:
            raise InputError(f"point has length {len(point)}, expected {self.arity}")
        vals = [Fraction(v) for v in point]
        # power tables keep repeated exponentiation cheap on big polynomials
        maxexp = [0] * self.arity
        for e in self.terms:
            for j, ej in enumerate(e):
                if ej > maxexp[j]:
                    maxexp[j] = ej
        pows = []
        for j in range(self.arity):
            table = [_ONE]
            for _ in range(maxexp[j]):
                table.append(table[-1] * vals[j])
            pows.append(table)
        total = _ZERO
        for e, c in self.terms.items():
            term = c
            for j, ej in enumerate(e):
                if ej:
                    term *= pows[j][ej]
            total += term
        return total

    # -------------------------------------------------------------- text IO

    def to_text(self) -> str:
        """Round-trippable text form: `c * x1^e1 * ...` terms joined by ' + '."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [str(c)]
            for j, ej in enumerate(e):
                if ej:
                    factors.append(f"x{j + 1}^{ej}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str, arity: int) -> "Poly":
        """Parse the to_text format (also accepts `x2`, bare `-x1`, ' - ' separators)."""
        s = text.strip()
        if not s:
            raise InputError("empty polynomial text")
        terms: list[tuple[ExpVec, Fraction]] = []
        for chunk in s.replace("-", "+-").split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            coeff = _ONE
            exp = [0] * arity
            for factor in chunk.split("*"):
                f = factor.strip()
                if f.startswith("-"):
                    coeff = -coeff
                    f = f[1:].strip()
                if not f:
                    raise InputError(f"malformed term {chunk!r}")
                m = _VAR_RE.match(f)
                if m:
                    idx = int(m.group(1))
                    if not 1 <= idx <= arity:
                        raise InputError(f"variable x{idx} out of range for arity {arity}")
                    exp[idx - 1] += int(m.group(2) or 1)
                else:
                    try:
                        coeff *= Fraction(f)
                    except (ValueError, ZeroDivisionError) as exc:
                        raise InputError(f"cannot parse factor {f!r} in term {chunk!r}") from exc
            terms.append((tuple(exp), coeff))
        if not terms:
            raise InputError(f"no terms in polynomial text {text!r}")
        return cls(arity, terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.arity}, {self.to_text()!r})"
