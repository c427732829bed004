"""Exact integer Laurent polynomials in a single variable ``t``."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """Immutable map ``exponent -> nonzero int coefficient``.

    Zero coefficients are never stored, so equality is plain dict equality.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPolynomial":
        """Dense coefficient list starting at exponent ``low``."""
        return cls({low + i: v for i, v in enumerate(coeffs)})

    # inspection

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_unit(self) -> bool:
        """True for ``±t^k``, the units of Z[t, 1/t]."""
        if len(self._c) != 1:
            return False
        (v,) = self._c.values()
        return v in (1, -1)

    @property
    def min_degree(self) -> int:
        return min(self._c)

    @property
    def max_degree(self) -> int:
        return max(self._c)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree if self._c else 0

    def coefficients(self) -> list[int]:
        """Dense list from ``min_degree`` to ``max_degree``."""
        if not self._c:
            return []
        lo, hi = self.min_degree, self.max_degree
        return [self._c.get(e, 0) for e in range(lo, hi + 1)]

    def __call__(self, value):
        if not self._c:
            return 0
        total = 0
        for e, v in self._c.items():
            total += v * value**e if e >= 0 else v / value ** (-e)
        return total

    def evaluate_int(self, value: int) -> int:
        """Exact evaluation at an integer unit (``±1``) or any value with
        nonnegative exponents."""
        if value in (1, -1):
            return sum(v * value ** (e % 2) for e, v in self._c.items())
        if self._c and self.min_degree < 0:
            raise ValueError("negative exponents need a unit argument for exact evaluation")
        return sum(v * value**e for e, v in self._c.items())

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            ((e, v),) = self._c.items()
            return LaurentPolynomial({e * k: 1 if k % 2 == 0 else v})
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``t^k``."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()})

    def substitute_inverse(self) -> "LaurentPolynomial":
        """``t -> 1/t``."""
        return LaurentPolynomial({-e: v for e, v in self._c.items()})

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """``t -> t^k``."""
        return LaurentPolynomial({e * k: v for e, v in self._c.items()})

    def divmod(self, divisor: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Long division by a divisor whose leading coefficient is ±1.

        Both operands are treated as ordinary polynomials after shifting the
        lowest exponent to zero; the quotient absorbs the shift.
        """
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial(), LaurentPolynomial()
        a_lo, b_lo = self.min_degree, divisor.min_degree
        a = self.coefficients()[::-1]  # descending
        b = divisor.coefficients()[::-1]
        lead = b[0]
        q = []
        a = list(a)
        for i in range(len(a) - len(b) + 1):
            coef = a[i]
            if coef % lead:
                raise ArithmeticError("inexact division over the integers")
            coef //= lead
            q.append(coef)
            if coef:
                for j in range(1, len(b)):
                    a[i + j] -= coef * b[j]
        deg_q = len(a) - len(b)
        if deg_q < 0:
            return LaurentPolynomial(), self
        rem_dense = a[deg_q + 1:]
        quot = {deg_q - i + a_lo - b_lo: v for i, v in enumerate(q)}
        rem = {len(rem_dense) - 1 - i + a_lo: v for i, v in enumerate(rem_dense)}
        return LaurentPolynomial(quot), LaurentPolynomial(rem)

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ``ArithmeticError`` if a remainder is left."""
        divisor = _coerce(divisor)
        if divisor.is_unit():
            ((e, v),) = divisor._c.items()
            return LaurentPolynomial({k - e: c * v for k, c in self._c.items()})
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    # normalization

    def symmetrized(self) -> "LaurentPolynomial":
        """Shift so exponents are centred on zero and make the top
        coefficient positive. Requires an even span."""
        if not self._c:
            return self
        lo, hi = self.min_degree, self.max_degree
        if (lo + hi) % 2:
            raise ValueError(f"odd span {hi - lo}; cannot centre {self}")
        p = self.shift(-(lo + hi) // 2)
        return -p if p._c[p.max_degree] < 0 else p

    def is_symmetric(self) -> bool:
        return self == self.substitute_inverse()

    # comparison / display

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def sort_key(self) -> tuple:
        return tuple(sorted(self._c.items()))

    def __repr__(self):
        return f"LaurentPolynomial({dict(sorted(self._c.items()))})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(e): v for e, v in data.items()})


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ONE = LaurentPolynomial.constant(1)
T = LaurentPolynomial.monomial(1, 1)
