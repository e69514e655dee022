"""Exact counting formulas for the (n, k)-th Catalan numbers and Gould's family.

Everything here is integer or :class:`fractions.Fraction` arithmetic; no
floating point is used anywhere.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InternalInvariantBroken


def binomial(a: int, b: int) -> int:
    """Binomial coefficient a choose b, zero when b > a."""
    if a < 0 or b < 0:
        raise DomainError(f"binomial needs nonnegative arguments, got ({a}, {b})")
    return comb(a, b)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalInvariantBroken(f"{den} does not divide {num}")
    return q


def catalan_nk(n: int, k: int) -> int:
    """Number of (n, k) star diagrams: binomial(kn, n - 1) / n.

    >>> catalan_nk(6, 3)
    1428
    """
    if n < 1 or k < 2:
        raise DomainError(f"catalan_nk needs n >= 1 and k >= 2, got n={n}, k={k}")
    return exact_div(binomial(k * n, n - 1), n)


def classic_catalan(n: int) -> int:
    if n < 0:
        raise DomainError(f"classic_catalan needs n >= 0, got {n}")
    return exact_div(binomial(2 * n, n), n + 1)


def gould_a(n: int, a: int, b: int):
    """Gould's A_n(a, b) = a / (a + bn) * binomial(a + bn, n).

    Returns an ``int`` when the value is integral and a reduced ``Fraction``
    otherwise.
    """
    if n < 0:
        raise DomainError(f"gould_a needs n >= 0, got {n}")
    top = a + b * n
    if top == 0:
        raise DomainError(f"gould_a undefined for a + b*n = 0 (n={n}, a={a}, b={b})")
    if top < 0:
        raise DomainError(f"gould_a needs a + b*n >= 0 for an integer binomial, got {top}")
    value = Fraction(a, top) * binomial(top, n)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class ConvolutionReport:
    lhs: object
    rhs: object

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def check_convolution(n: int, a: int, b: int, c: int) -> ConvolutionReport:
    # Both left parameters are independent: sum_j A_j(a,b) A_{n-j}(c,b) = A_n(a+c,b).
    lhs = sum((Fraction(gould_a(j, a, b)) * Fraction(gould_a(n - j, c, b)) for j in range(n + 1)), Fraction(0))
    rhs = Fraction(gould_a(n, a + c, b))
    as_value = lambda q: q.numerator if q.denominator == 1 else q  # noqa: E731
    return ConvolutionReport(as_value(lhs), as_value(rhs))


def count_table(max_n: int, max_k: int):
    """Rows ``(n, k, catalan_nk(n, k))`` for 1 <= n <= max_n, 2 <= k <= max_k."""
    return [(n, k, catalan_nk(n, k)) for k in range(2, max_k + 1) for n in range(1, max_n + 1)]
