"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a mapping from exponent vectors to nonzero rational
coefficients:

    x1*x3 + x2*x3^2   over (x1, x2, x3)   ->   {(1,0,1): 1, (0,1,2): 1}

Coefficients are arbitrary-precision rationals in lowest terms, so all
arithmetic, zero tests and equality checks are exact.  Integral values are
stored as plain ``int`` and general rationals as ``fractions.Fraction``;
the two interoperate exactly and agree on equality and hashing, while the
int fast path avoids a gcd normalization per ring operation.  The zero
polynomial is the empty term map.  Polynomials are immutable values: every
operation returns a fresh object and instances can be shared freely across
workers.

Term order is graded lexicographic with respect to the variable order of
the owning :class:`VarSet` (total degree first, ties broken left to right).
The canonical printer emits terms in descending graded-lex order, which
makes printing deterministic and round-trippable through the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add
from typing import Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]

#: Degree reported for the zero polynomial.  Using -inf instead of -1 keeps
#: ``degree + 1`` from silently producing a plausible-looking length.
NEG_INF = float("-inf")

#: Term-pair count above which multiplication packs exponent vectors into
#: integers (see Polynomial._mul_packed).
_PACK_THRESHOLD = 4096

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


@dataclass(frozen=True)
class VarSet:
    """An ordered set of distinct variable names.

    The order is significant: it fixes the positions of exponent vectors and
    the column order of Jacobian matrices built downstream.
    """

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) < 1:
            raise ValueError("a variable set needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names!r}")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def k(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} (have {', '.join(self.names)})") from None

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    @classmethod
    def of(cls, *names: str) -> "VarSet":
        return cls(tuple(names))


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def _as_scalar(value: Scalar) -> Scalar:
    """Normalize a rational: integral values are stored as plain int.

    int and Fraction interoperate exactly and agree on ``==`` and ``hash``,
    so mixing them in a term map is safe; keeping integers out of Fraction
    avoids a gcd normalization on every ring operation, which dominates the
    running time of large products.
    """
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def _ratio(numerator: Scalar, denominator: Scalar) -> Scalar:
    """Exact scalar quotient (never a float)."""
    q = Fraction(numerator) / Fraction(denominator)
    return q.numerator if q.denominator == 1 else q


def grlex_key(exponents: Exponents) -> tuple[int, Exponents]:
    """Graded-lex sort key: total degree first, then the exponent vector."""
    return (sum(exponents), exponents)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: VarSet, terms: Mapping[Exponents, Scalar]):
        clean: dict[Exponents, Scalar] = {}
        k = vars.k
        for exponents, coeff in terms.items():
            exponents = tuple(exponents)
            if len(exponents) != k:
                raise ValueError(f"exponent vector {exponents} has length {len(exponents)}, expected {k}")
            if any(e < 0 or not isinstance(e, int) for e in exponents):
                raise ValueError(f"exponents must be nonnegative integers, got {exponents}")
            coeff = _as_scalar(coeff)
            if coeff:
                acc = clean.get(exponents)
                total = coeff if acc is None else acc + coeff
                if total:
                    clean[exponents] = total
                else:
                    del clean[exponents]
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial instances are immutable")

    @classmethod
    def _raw(cls, vars: VarSet, terms: dict[Exponents, Scalar]) -> "Polynomial":
        """Wrap an already-canonical term map without re-validating it.

        Internal fast path for arithmetic: callers guarantee correct key
        lengths, nonnegative exponents, and no zero coefficients.
        """
        self = object.__new__(cls)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: VarSet) -> "Polynomial":
        return cls(vars, {})

    @classmethod
    def constant(cls, vars: VarSet, value: Scalar) -> "Polynomial":
        return cls(vars, {(0,) * vars.k: _as_fraction(value)})

    @classmethod
    def variable(cls, vars: VarSet, name: str) -> "Polynomial":
        i = vars.index(name)
        exponents = tuple(1 if j == i else 0 for j in range(vars.k))
        return cls(vars, {exponents: Fraction(1)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Scalar]:
        """The internal term map (int or Fraction values).  Treat as read-only."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int | float:
        if not self._terms:
            return NEG_INF
        return max(sum(m) for m in self._terms)

    def degree_in(self, name: str) -> int | float:
        """Largest exponent of ``name``; NEG_INF for the zero polynomial."""
        i = self.vars.index(name)
        if not self._terms:
            return NEG_INF
        return max(m[i] for m in self._terms)

    def involves(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(m[i] for m in self._terms)

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((0,) * self.vars.k, 0))

    def leading_term(self) -> tuple[Exponents, Scalar]:
        """Largest term in graded-lex order.  Raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    # -- ring arithmetic ---------------------------------------------------

    def _coerce(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError(
                    f"mismatched variable sets: {self.vars.names} vs {other.vars.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in q._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self._terms or not q._terms:
            return Polynomial.zero(self.vars)
        # iterate the smaller factor outside; hot path for everything above
        a, b = self._terms, q._terms
        if len(a) > len(b):
            a, b = b, a
        if len(a) * len(b) >= _PACK_THRESHOLD:
            return self._mul_packed(a, b)
        b_items = list(b.items())
        out: dict[Exponents, Scalar] = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b_items:
                m = tuple(map(_add, ma, mb))
                s = get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.vars, out)

    __rmul__ = __mul__

    def _mul_packed(self, a: dict[Exponents, Scalar], b: dict[Exponents, Scalar]) -> "Polynomial":
        """Multiplication with exponent vectors packed into single integers.

        Each variable gets a bit field wide enough for the largest exponent
        of the product, so adding packed keys adds exponent vectors without
        carries between fields.  For large term counts this beats building
        a tuple per term pair by a wide margin.
        """
        k = self.vars.k
        a_max = [0] * k
        b_max = [0] * k
        for m in a:
            for i, e in enumerate(m):
                if e > a_max[i]:
                    a_max[i] = e
        for m in b:
            for i, e in enumerate(m):
                if e > b_max[i]:
                    b_max[i] = e
        offsets = [0] * k
        shift = 0
        for i in range(k):
            offsets[i] = shift
            shift += (a_max[i] + b_max[i]).bit_length() or 1

        def pack(m: Exponents) -> int:
            key = 0
            for i, e in enumerate(m):
                key |= e << offsets[i]
            return key

        packed_b = [(pack(m), c) for m, c in b.items()]
        out: dict[int, Scalar] = {}
        get = out.get
        for ma, ca in a.items():
            ka = pack(ma)
            for kb, cb in packed_b:
                key = ka + kb
                s = get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        masks = [(1 << ((a_max[i] + b_max[i]).bit_length() or 1)) - 1 for i in range(k)]
        unpacked: dict[Exponents, Scalar] = {}
        for key, c in out.items():
            unpacked[tuple((key >> offsets[i]) & masks[i] for i in range(k))] = c
        return Polynomial._raw(self.vars, unpacked)

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a nonnegative integer, got {exponent!r}")
        result = Polynomial.constant(self.vars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------

    def partial(self, name: str) -> "Polynomial":
        """Formal partial derivative with respect to ``name``."""
        i = self.vars.index(name)
        out: dict[Exponents, Scalar] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                key = m[:i] + (e - 1,) + m[i + 1:]
                s = out.get(key, 0) + c * e
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial._raw(self.vars, out)

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at ``point`` (one value per variable, in order)."""
        if len(point) != self.vars.k:
            raise ValueError(f"point has length {len(point)}, expected {self.vars.k}")
        vals = [_as_scalar(v) for v in point]
        powers: list[dict[int, Scalar]] = [{} for _ in vals]
        total = 0
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    p = cache.get(e)
                    if p is None:
                        p = vals[i] ** e
                        cache[e] = p
                    term *= p
            total += term
        return Fraction(total)

    __call__ = eval

    def substitute(self, bindings: Mapping[str, Scalar]) -> "Polynomial":
        """Fix some variables to rational values.

        The result lives over the same variable set and no longer involves
        the bound variables; binding every variable yields the constant
        polynomial with value ``self.eval(point)``.
        """
        positions = {self.vars.index(name): _as_scalar(v) for name, v in bindings.items()}
        if not positions:
            return self
        out: dict[Exponents, Scalar] = {}
        for m, c in self._terms.items():
            e = list(m)
            for i, val in positions.items():
                if e[i]:
                    c = c * val ** e[i]
                    e[i] = 0
            if not c:
                continue
            key = tuple(e)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return Polynomial._raw(self.vars, out)

    # -- comparison and hashing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.vars, other)
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.vars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m in sorted(self._terms, key=grlex_key, reverse=True):
            c = self._terms[m]
            factors = []
            for name, e in zip(self.vars.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({', '.join(self.vars.names)}: {self})"


class RationalFunction:
    """A formal quotient of polynomials with a nonzero denominator.

    No reduction to lowest terms is ever performed; equality is decided by
    cross-multiplication (p/q == r/s iff p*s == r*q), which only needs exact
    polynomial arithmetic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.vars != num.vars:
            raise ValueError("numerator and denominator must share a variable set")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunction instances are immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.num * other.den == other.num * self.den
        if isinstance(other, (Polynomial, int, Fraction)):
            return self == RationalFunction(
                other if isinstance(other, Polynomial) else Polynomial.constant(self.num.vars, other),
                Polynomial.constant(self.num.vars, 1),
            )
        return NotImplemented

    def __hash__(self) -> int:  # pragma: no cover - unhashable by design
        raise TypeError("RationalFunction is not hashable (equality is up to cross-multiplication)")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def partial(self, name: str) -> "RationalFunction":
        """Quotient-rule derivative; the denominator squares."""
        return RationalFunction(
            self.num.partial(name) * self.den - self.num * self.den.partial(name),
            self.den * self.den,
        )

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def project(p: Polynomial, names: Sequence[str]) -> Polynomial:
    """Re-express ``p`` over the sub-variable-set ``names`` (in that order).

    Raises if ``p`` involves a variable outside ``names``.
    """
    target = VarSet(tuple(names))
    positions = [p.vars.index(name) for name in target.names]
    keep = set(positions)
    out: dict[Exponents, Scalar] = {}
    for m, c in p.terms.items():
        for i, e in enumerate(m):
            if e and i not in keep:
                raise ValueError(
                    f"cannot project: polynomial involves {p.vars.names[i]!r}, which is being dropped"
                )
        out[tuple(m[i] for i in positions)] = c
    return Polynomial._raw(target, out)


def embed(p: Polynomial, target: VarSet) -> Polynomial:
    """View ``p`` as a polynomial over the larger variable set ``target``."""
    positions = [target.index(name) for name in p.vars.names]
    out: dict[Exponents, Scalar] = {}
    for m, c in p.terms.items():
        e = [0] * target.k
        for pos, exp in zip(positions, m):
            e[pos] = exp
        out[tuple(e)] = c
    return Polynomial._raw(target, out)


def exact_div(p: Polynomial, divisor: Polynomial) -> Polynomial:
    """Exact polynomial quotient ``p / divisor``; raises if not divisible.

    Leading-term division under the graded-lex order: whenever p is a true
    multiple of the divisor the leading term of the remainder stays divisible,
    so the loop terminates with remainder zero.
    """
    if divisor.vars != p.vars:
        raise ValueError("operands must share a variable set")
    if divisor.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero:
        return p
    md, cd = divisor.leading_term()
    div_items = list(divisor.terms.items())
    quotient: dict[Exponents, Scalar] = {}
    rem = dict(p.terms)
    while rem:
        mr = max(rem, key=grlex_key)
        cr = rem[mr]
        mq = tuple(a - b for a, b in zip(mr, md))
        if any(e < 0 for e in mq):
            raise ValueError("inexact polynomial division")
        cq = _ratio(cr, cd)
        quotient[mq] = quotient.get(mq, 0) + cq
        for m2, c2 in div_items:
            key = tuple(map(_add, mq, m2))
            s = rem.get(key, 0) - cq * c2
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return Polynomial._raw(p.vars, {m: c for m, c in quotient.items() if c})


def product(vars: VarSet, factors: Iterable[Polynomial]) -> Polynomial:
    """Product of a (possibly empty) sequence of polynomials over ``vars``."""
    result = Polynomial.constant(vars, 1)
    for f in factors:
        result = result * f
    return result
