"""Sparse multivariate polynomials with integer coefficients, used for
characters and Schur Q/P functions.  Exponent vectors have a fixed length."""

from __future__ import annotations

from typing import Iterable, Mapping


class QPolynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.n = n
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} has length != {n}")
                if coeff:
                    self.terms[tuple(exp)] = self.terms.get(tuple(exp), 0) + coeff
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def zero(cls, n: int) -> "QPolynomial":
        return cls(n)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "QPolynomial":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    def add_term(self, exp: tuple[int, ...], coeff: int) -> None:
        if len(exp) != self.n:
            raise ValueError(f"exponent {exp} has length != {self.n}")
        new = self.terms.get(exp, 0) + coeff
        if new:
            self.terms[exp] = new
        else:
            self.terms.pop(exp, None)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        out = QPolynomial(self.n, self.terms)
        for exp, coeff in other.terms.items():
            out.add_term(exp, coeff)
        return out

    def __rmul__(self, scalar: int) -> "QPolynomial":
        return QPolynomial(self.n, {e: scalar * c for e, c in self.terms.items()})

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-1) * other

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def swap_variables(self, i: int) -> "QPolynomial":
        """Exchange x_i and x_{i+1} (1-based i)."""
        if not 1 <= i < self.n:
            raise ValueError(f"cannot swap x_{i}, x_{i + 1} with n={self.n}")
        out = {}
        for exp, coeff in self.terms.items():
            e = list(exp)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = coeff
        return QPolynomial(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.swap_variables(i) == self for i in range(1, self.n))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = [f"x{k + 1}^{e}" if e > 1 else f"x{k + 1}"
                       for k, e in enumerate(exp) if e]
            body = "*".join(factors)
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPolynomial({self})"
