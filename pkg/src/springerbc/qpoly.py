"""Exact integer polynomials in the grading variable q.

Coefficients are stored ascending by degree with no trailing zeros; the
zero polynomial is the empty tuple.  All arithmetic is exact integer
arithmetic; in particular every division by (q - 1) that the restriction
formulas need is realized up front as a geometric sum.
"""

from .errors import BadRange


class QPoly(tuple):
    """Integer polynomial in q, ascending coefficients, no trailing zeros."""

    def __new__(cls, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    @property
    def degree(self):
        return len(self) - 1  # -1 for the zero polynomial

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self), len(other))
        return QPoly(
            (self[i] if i < len(self) else 0) + (other[i] if i < len(other) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return QPoly(-c for c in self)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(c * other for c in self)
        if isinstance(other, tuple):
            if not self or not other:
                return ZERO
            out = [0] * (len(self) + len(other) - 1)
            for i, a in enumerate(self):
                if a:
                    for j, b in enumerate(other):
                        out[i + j] += a * b
            return QPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return len(self) > 0

    def __call__(self, x):
        """Evaluate at the integer x (Horner)."""
        acc = 0
        for c in reversed(self):
            acc = acc * x + c
        return acc

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"QPoly({list(self)})"


def _coerce(other):
    if isinstance(other, QPoly):
        return other
    if isinstance(other, int):
        return QPoly((other,))
    if isinstance(other, tuple):
        return QPoly(other)
    return NotImplemented


ZERO = QPoly()
ONE = QPoly((1,))


def monomial(e, c=1):
    """The polynomial c * q^e."""
    return QPoly((0,) * e + (c,))


def geometric_sum(a, b):
    """q^b + q^(b+1) + ... + q^(a-1); the zero polynomial when a == b.

    This is the exact form of (q^a - q^b) / (q - 1); it is how every
    divided coefficient in the restriction formulas is produced.
    """
    if a < b:
        raise BadRange(f"geometric_sum needs a >= b, got a={a}, b={b}")
    return QPoly((0,) * b + (1,) * (a - b))


def _term_text(c, e):
    if e == 0:
        return str(abs(c))
    body = "q" if e == 1 else f"q^{e}"
    if abs(c) == 1:
        return body
    return f"{abs(c)}{body}"


def poly_to_text(p, descending=True):
    """Human-readable form, e.g. "q^4 + 2q^3 + 2q^2 + 2q + 1" or "-q + 1"."""
    if not p:
        return "0"
    terms = [(c, e) for e, c in enumerate(p) if c]
    if descending:
        terms.reverse()
    out = []
    for i, (c, e) in enumerate(terms):
        if i == 0:
            out.append(("-" if c < 0 else "") + _term_text(c, e))
        else:
            out.append((" - " if c < 0 else " + ") + _term_text(c, e))
    return "".join(out)
