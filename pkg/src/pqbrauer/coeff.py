"""Exact coefficient arithmetic over the integer Laurent ring Z[q, q^-1].

A Laurent scalar is stored as a dict mapping integer exponents to nonzero
integer coefficients; the zero scalar is the empty dict.  All arithmetic is
exact with arbitrary-precision integers.  The field of fractions Q(q) is
provided by :class:`RationalScalar` and is used only for linear algebra over
the fraction field (matrix elimination, ranks); every structural computation
in the engine stays inside Z[q, q^-1].

The residue scalars (q^{2c} - 1)/(q - q^{-1}) attached to adding or removing
a box of content c are exact Laurent polynomials and are produced by
:func:`residue_add` / :func:`residue_remove`.
"""

from __future__ import annotations


class Laurent:
    """An element of Z[q, q^-1], immutable after construction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def of(n: int) -> "Laurent":
        return Laurent({0: n})

    @staticmethod
    def q(k: int = 1, coeff: int = 1) -> "Laurent":
        """The monomial coeff * q^k."""
        return Laurent({k: coeff})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = Laurent.__new__(Laurent)
        out.terms = terms
        out._hash = None
        return out

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Laurent.of(other)
        if not self.terms or not other.terms:
            return Laurent.zero()
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = Laurent.__new__(Laurent)
        out.terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative powers only for monomials; invert explicitly")
        result = Laurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def unit_monomial(self):
        """Return (k, c) with self = c*q^k and c in {1,-1}, else None."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        return (e, c) if c in (1, -1) else None

    def content(self) -> int:
        """The gcd of the integer coefficients (0 for the zero scalar)."""
        from math import gcd
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- serialization ------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                v = "q" if e == 1 else "q^%d" % e
                body = v if a == 1 else "%d*%s" % (a, v)
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self) -> str:
        return "Laurent(%s)" % self

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(obj: dict) -> "Laurent":
        return Laurent({int(e): int(c) for e, c in obj.items()})


#: convenient singletons
ZERO = Laurent.zero()
ONE = Laurent.one()
Q = Laurent.q(1)
QINV = Laurent.q(-1)
#: the recurring scalar q - q^-1
DELTA = Q - QINV


class NonDivisibleError(ArithmeticError):
    """Raised when exact division fails; callers treat this as a logic error."""


def exact_div(a: Laurent, b: Laurent) -> Laurent:
    """Exact division in Z[q, q^-1]: the c with b*c = a, or raise."""
    if b.is_zero():
        raise NonDivisibleError("division by zero")
    if a.is_zero():
        return Laurent.zero()
    rem = dict(a.terms)
    b_top = b.max_exp()
    b_lead = b.terms[b_top]
    out = {}
    while rem:
        e = max(rem)
        c = rem[e]
        if c % b_lead:
            raise NonDivisibleError("%s does not divide %s" % (b, a))
        k = e - b_top
        f = c // b_lead
        out[k] = f
        for be, bc in b.terms.items():
            ee = be + k
            s = rem.get(ee, 0) - bc * f
            if s:
                rem[ee] = s
            else:
                rem.pop(ee, None)
    return Laurent(out)


def residue_add(c: int) -> Laurent:
    """(q^{2c} - 1)/(q - q^{-1}), the scalar attached to adding a box of content c."""
    # Telescoping: for c > 0 the quotient is q^{2c-1} + q^{2c-3} + ... + q;
    # for c < 0 it is -(q^{2c+1} + ... + q^{-1}); for c = 0 it vanishes.
    if c == 0:
        return Laurent.zero()
    if c > 0:
        return Laurent({2 * k - 1: 1 for k in range(1, c + 1)})
    return Laurent({2 * k + 1: -1 for k in range(c, 0)})


def residue_remove(c: int) -> Laurent:
    """(q^{2c-2} - 1)/(q - q^{-1}), the scalar attached to removing a box of content c."""
    return residue_add(c - 1)


class RationalScalar:
    """An element of Q(q) as a normalized quotient of Laurent scalars.

    Normalization divides out the integer content of numerator and
    denominator, cancels common powers of q, and makes the denominator's
    leading coefficient positive.  Equality is decided by cross
    multiplication, so partially-reduced representatives compare correctly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: Laurent = ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        # cancel q-powers: make both sides honest polynomials anchored at 0
        k = min(num.min_exp(), den.min_exp())
        if k:
            num = Laurent({e - k: c for e, c in num.terms.items()})
            den = Laurent({e - k: c for e, c in den.terms.items()})
        from math import gcd
        g = gcd(num.content(), den.content())
        if den.terms[den.max_exp()] < 0:
            g = -g
        if g != 1:
            num = Laurent({e: c // g for e, c in num.terms.items()})
            den = Laurent({e: c // g for e, c in den.terms.items()})
        # opportunistic full cancellation
        if not den.is_one():
            try:
                num = exact_div(num, den)
                den = ONE
            except NonDivisibleError:
                pass
        self.num, self.den = num, den

    @staticmethod
    def of(x) -> "RationalScalar":
        if isinstance(x, RationalScalar):
            return x
        if isinstance(x, int):
            return RationalScalar(Laurent.of(x))
        return RationalScalar(x)

    def __add__(self, other: "RationalScalar") -> "RationalScalar":
        return RationalScalar(self.num * other.den + other.num * self.den,
                              self.den * other.den)

    def __sub__(self, other: "RationalScalar") -> "RationalScalar":
        return RationalScalar(self.num * other.den - other.num * self.den,
                              self.den * other.den)

    def __neg__(self) -> "RationalScalar":
        return RationalScalar(-self.num, self.den)

    def __mul__(self, other: "RationalScalar") -> "RationalScalar":
        return RationalScalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalScalar") -> "RationalScalar":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational")
        return RationalScalar(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalScalar.of(other)
        if not isinstance(other, RationalScalar):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # hash only safe because __init__ at least normalizes content/q-shift;
        # full canonicity is not guaranteed, so avoid dict keys on rationals.
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__
