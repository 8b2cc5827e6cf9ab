"""Integer Laurent polynomials in one variable t, exact arithmetic.

Stored sparsely as exponent -> nonzero coefficient.  Canonical printing
lists terms in ascending exponent order, e.g. ``t^-1 - 2 + t``.
"""

from __future__ import annotations

from typing import Iterator, Mapping


class LaurentPoly:
    """An element of Z[t, t^-1].

    >>> t = LaurentPoly.t()
    >>> print(1 - t + t**2)
    1 - t + t^2
    >>> print((1 - t + t**2) * (1 - t + t**2).reciprocal())
    t^-2 - 2*t^-1 + 3 - 2*t + t^2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    clean[int(e)] = int(c)
        self.coeffs = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> LaurentPoly:
        return cls({exponent: coeff})

    @staticmethod
    def _coerce(value: LaurentPoly | int) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly({0: value})
        return NotImplemented  # type: ignore[return-value]

    # -- basic protocol ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms in ascending exponent order."""
        return iter(sorted(self.coeffs.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial are not defined")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------------

    @property
    def min_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    @property
    def max_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def reciprocal(self) -> LaurentPoly:
        """The substitution t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        """True when p(t) = p(t^-1) term-exactly."""
        return self.coeffs == {-e: c for e, c in self.coeffs.items()}

    def value_at_one(self) -> int:
        return sum(self.coeffs.values())

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({e - 1: c * e for e, c in self.coeffs.items()})

    def second_derivative_at_one(self) -> int:
        """Exact p''(1) = sum of c_e * e * (e - 1)."""
        return sum(c * e * (e - 1) for e, c in self.coeffs.items())

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if mag == 1 else f"{mag}*{tpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)
