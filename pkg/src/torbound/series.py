"""Truncated formal power series and graded cycle classes, exact arithmetic.

A series of order N is the dense coefficient list (a_0, ..., a_N); all
operations truncate at N and never leave exact scalars (int or Fraction).
The inversion recurrence here is the reference oracle for every closed-form
inverse coefficient elsewhere in the package.
"""

from fractions import Fraction

from .errors import ValidationError

Scalar = int | Fraction


def _check_scalar(x):
    if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
        raise ValidationError(f"coefficients must be int or Fraction, got {type(x).__name__}")
    return x


class TruncatedSeries:
    """Formal power series truncated at a fixed order.

    Immutable. Operations on series of different orders are errors; nothing
    is ever re-truncated silently.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients, order=None):
        coeffs = tuple(_check_scalar(a) for a in coefficients)
        if order is None:
            if not coeffs:
                raise ValidationError("series needs at least the constant coefficient")
            order = len(coeffs) - 1
        if order < 0:
            raise ValidationError("series order must be >= 0")
        if len(coeffs) > order + 1:
            raise ValidationError(
                f"got {len(coeffs)} coefficients for order {order}; refusing to truncate"
            )
        # pad with zeros up to the requested order
        coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order):
        return cls((1,), order=order)

    def coefficient(self, j):
        if not 0 <= j <= self.order:
            raise ValidationError(f"coefficient index {j} outside [0, {self.order}]")
        return self.coefficients[j]

    def __getitem__(self, j):
        return self.coefficient(j)

    def _match(self, other):
        if not isinstance(other, TruncatedSeries):
            raise ValidationError("expected a TruncatedSeries operand")
        if other.order != self.order:
            raise ValidationError(
                f"order mismatch: {self.order} vs {other.order}"
            )
        return other

    def __add__(self, other):
        other = self._match(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            order=self.order,
        )

    def __sub__(self, other):
        other = self._match(other)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
            order=self.order,
        )

    def __mul__(self, other):
        """Cauchy product, truncated at the common order."""
        other = self._match(other)
        n = self.order
        a, b = self.coefficients, other.coefficients
        out = []
        for m in range(n + 1):
            out.append(sum(a[k] * b[m - k] for k in range(m + 1)))
        return TruncatedSeries(tuple(out), order=n)

    def invert(self):
        """Multiplicative inverse, requires constant term exactly 1.

        b_0 = 1, b_m = -sum_{k=1..m} a_k b_{m-k}.
        """
        a = self.coefficients
        if a[0] != 1:
            raise ValidationError("constant term must be 1 to invert")
        b = [1]
        for m in range(1, self.order + 1):
            b.append(-sum(a[k] * b[m - k] for k in range(1, m + 1)))
        return TruncatedSeries(tuple(b), order=self.order)

    def scale_variable(self, factor):
        """Substitute t -> factor*t: coefficient j picks up factor**j."""
        _check_scalar(factor)
        return TruncatedSeries(
            tuple(a * factor**j for j, a in enumerate(self.coefficients)),
            order=self.order,
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        return f"TruncatedSeries({self.coefficients!r})"


class CycleClass:
    """Polynomial in a fixed ample divisor class, graded by codimension.

    Coefficients (g_0, ..., g_m) stand for sum g_k * l^k on a variety of
    dimension m, where the top self-intersection number of l is known.
    Products truncate above codimension m (those pieces integrate to zero
    against anything of complementary nonnegative degree).
    """

    __slots__ = ("top_codim", "coefficients", "top_integral")

    def __init__(self, coefficients, top_integral, top_codim=None):
        coeffs = tuple(_check_scalar(a) for a in coefficients)
        if top_codim is None:
            if not coeffs:
                raise ValidationError("cycle class needs at least the degree-0 piece")
            top_codim = len(coeffs) - 1
        if top_codim < 0:
            raise ValidationError("top codimension must be >= 0")
        if len(coeffs) > top_codim + 1:
            raise ValidationError(
                f"got {len(coeffs)} coefficients for top codimension {top_codim}"
            )
        coeffs = coeffs + (0,) * (top_codim + 1 - len(coeffs))
        if not isinstance(top_integral, int) or isinstance(top_integral, bool):
            raise ValidationError("top integral must be an int")
        object.__setattr__(self, "top_codim", top_codim)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "top_integral", top_integral)

    def __setattr__(self, name, value):
        raise AttributeError("CycleClass is immutable")

    @classmethod
    def divisor_power(cls, k, top_codim, top_integral):
        """The class l^k."""
        if not 0 <= k <= top_codim:
            raise ValidationError(f"power {k} outside [0, {top_codim}]")
        coeffs = tuple(1 if j == k else 0 for j in range(top_codim + 1))
        return cls(coeffs, top_integral, top_codim=top_codim)

    def _match(self, other):
        if not isinstance(other, CycleClass):
            raise ValidationError("expected a CycleClass operand")
        if (other.top_codim, other.top_integral) != (self.top_codim, self.top_integral):
            raise ValidationError("cycle classes live on different varieties")
        return other

    def __add__(self, other):
        other = self._match(other)
        return CycleClass(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            self.top_integral,
            top_codim=self.top_codim,
        )

    def __mul__(self, other):
        other = self._match(other)
        m = self.top_codim
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(m + 1):
            out.append(sum(a[i] * b[k - i] for i in range(k + 1)))
        return CycleClass(tuple(out), self.top_integral, top_codim=m)

    def integrate(self):
        """Degree of the zero-dimensional piece: g_m times the top integral."""
        return self.coefficients[self.top_codim] * self.top_integral

    def __eq__(self, other):
        if not isinstance(other, CycleClass):
            return NotImplemented
        return (
            self.top_codim == other.top_codim
            and self.coefficients == other.coefficients
            and self.top_integral == other.top_integral
        )

    def __hash__(self):
        return hash((self.top_codim, self.coefficients, self.top_integral))

    def __repr__(self):
        return f"CycleClass({self.coefficients!r}, top_integral={self.top_integral})"
