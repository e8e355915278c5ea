"""Forward-mode differentiation for vector-field jets.

Two scalar types drive every derivative computed in this package:

* :class:`Dual` — value plus first-order partials against a fixed set of
  seed directions.  Nesting duals (a dual whose value and partials are
  themselves duals) yields exact mixed partials of any order; the package
  uses depth two for Hessians.
* :class:`Taylor` — truncated univariate Taylor polynomial, used to expand
  a solution curve of ``x' = f(x)`` in time and read off successive flow
  derivatives.

Evaluation code stays ordinary Python arithmetic (``+ - * / **`` with
integer powers).  Fields that need transcendentals should call the generic
:func:`exp`, :func:`log`, :func:`sqrt`, :func:`sin`, :func:`cos` from this
module, which dispatch on the scalar type.
"""
from __future__ import annotations

import math


class Dual:
    """Scalar carrying first-order partials with respect to ``m`` seeds.

    ``val`` and the entries of ``grad`` may themselves be duals, which is
    how second (and higher) mixed partials are obtained.
    """

    __slots__ = ("val", "grad")

    def __init__(self, val, grad):
        self.val = val
        self.grad = tuple(grad)

    def __repr__(self):
        return f"Dual({self.val!r}, {self.grad!r})"

    def _coerce(self, other):
        if isinstance(other, Dual):
            return other
        return Dual(other, (0.0,) * len(self.grad))

    def __add__(self, other):
        o = self._coerce(other)
        return Dual(self.val + o.val, tuple(a + b for a, b in zip(self.grad, o.grad)))

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.val, tuple(-a for a in self.grad))

    def __sub__(self, other):
        o = self._coerce(other)
        return Dual(self.val - o.val, tuple(a - b for a, b in zip(self.grad, o.grad)))

    def __rsub__(self, other):
        o = self._coerce(other)
        return Dual(o.val - self.val, tuple(b - a for a, b in zip(self.grad, o.grad)))

    def __mul__(self, other):
        o = self._coerce(other)
        return Dual(
            self.val * o.val,
            tuple(a * o.val + self.val * b for a, b in zip(self.grad, o.grad)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        inv = 1.0 / (o.val * o.val)
        return Dual(
            self.val / o.val,
            tuple((a * o.val - self.val * b) * inv for a, b in zip(self.grad, o.grad)),
        )

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __pow__(self, p):
        if not isinstance(p, int):
            raise TypeError("Dual only supports integer powers; use jets.sqrt/exp/log")
        factor = p * self.val ** (p - 1)
        return Dual(self.val**p, tuple(factor * a for a in self.grad))

    def __lt__(self, other):
        return self.val < (other.val if isinstance(other, Dual) else other)

    def __gt__(self, other):
        return self.val > (other.val if isinstance(other, Dual) else other)


class Taylor:
    """Truncated Taylor polynomial ``c[0] + c[1] t + ... + c[K] t^K``."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = tuple(coeffs)

    def __repr__(self):
        return f"Taylor({self.c!r})"

    def _coerce(self, other):
        if isinstance(other, Taylor):
            return other
        return Taylor((other,) + (0.0,) * (len(self.c) - 1))

    def __add__(self, other):
        o = self._coerce(other)
        return Taylor(a + b for a, b in zip(self.c, o.c))

    __radd__ = __add__

    def __neg__(self):
        return Taylor(-a for a in self.c)

    def __sub__(self, other):
        o = self._coerce(other)
        return Taylor(a - b for a, b in zip(self.c, o.c))

    def __rsub__(self, other):
        o = self._coerce(other)
        return Taylor(b - a for a, b in zip(self.c, o.c))

    def __mul__(self, other):
        o = self._coerce(other)
        K = len(self.c)
        return Taylor(
            sum(self.c[j] * o.c[k - j] for j in range(k + 1)) for k in range(K)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        K = len(self.c)
        out = [0.0] * K
        for k in range(K):
            acc = self.c[k]
            for j in range(1, k + 1):
                acc = acc - o.c[j] * out[k - j]
            out[k] = acc / o.c[0]
        return Taylor(out)

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __pow__(self, p):
        if not isinstance(p, int) or p < 0:
            raise TypeError("Taylor only supports nonnegative integer powers")
        out = Taylor((1.0,) + (0.0,) * (len(self.c) - 1))
        for _ in range(p):
            out = out * self
        return out

    def __lt__(self, other):
        return self.c[0] < (other.c[0] if isinstance(other, Taylor) else other)

    def __gt__(self, other):
        return self.c[0] > (other.c[0] if isinstance(other, Taylor) else other)


# ------------------------------------------------------------------ generic math

def exp(x):
    if isinstance(x, Dual):
        v = exp(x.val)
        return Dual(v, tuple(g * v for g in x.grad))
    if isinstance(x, Taylor):
        K = len(x.c)
        e = [0.0] * K
        e[0] = exp(x.c[0])
        for k in range(1, K):
            e[k] = sum(j * x.c[j] * e[k - j] for j in range(1, k + 1)) / k
        return Taylor(e)
    return math.exp(x)


def log(x):
    if isinstance(x, Dual):
        return Dual(log(x.val), tuple(g / x.val for g in x.grad))
    if isinstance(x, Taylor):
        K = len(x.c)
        out = [0.0] * K
        out[0] = log(x.c[0])
        for k in range(1, K):
            acc = k * x.c[k]
            for j in range(1, k):
                acc = acc - j * out[j] * x.c[k - j]
            out[k] = acc / (k * x.c[0])
        return Taylor(out)
    return math.log(x)


def sqrt(x):
    if isinstance(x, Dual):
        v = sqrt(x.val)
        return Dual(v, tuple(g / (2.0 * v) for g in x.grad))
    if isinstance(x, Taylor):
        K = len(x.c)
        out = [0.0] * K
        out[0] = sqrt(x.c[0])
        for k in range(1, K):
            acc = x.c[k]
            for j in range(1, k):
                acc = acc - out[j] * out[k - j]
            out[k] = acc / (2.0 * out[0])
        return Taylor(out)
    return math.sqrt(x)


def _sincos(x):
    if isinstance(x, Taylor):
        K = len(x.c)
        s = [0.0] * K
        c = [0.0] * K
        s[0], c[0] = _sincos(x.c[0])
        for k in range(1, K):
            s[k] = sum(j * x.c[j] * c[k - j] for j in range(1, k + 1)) / k
            c[k] = -sum(j * x.c[j] * s[k - j] for j in range(1, k + 1)) / k
        return Taylor(s), Taylor(c)
    if isinstance(x, Dual):
        s, c = _sincos(x.val)
        return (
            Dual(s, tuple(g * c for g in x.grad)),
            Dual(c, tuple(-(g * s) for g in x.grad)),
        )
    return math.sin(x), math.cos(x)


def sin(x):
    return _sincos(x)[0]


def cos(x):
    return _sincos(x)[1]


# ------------------------------------------------------------------ derivatives

def jacobian(fun, x):
    """First partials of ``fun`` (sequence -> sequence) at ``x`` as nested lists.

    Entries of ``x`` may themselves be duals; nesting then produces the next
    derivative order.
    """
    n = len(x)
    seeds = [
        Dual(x[i], tuple(1.0 if j == i else 0.0 for j in range(n))) for i in range(n)
    ]
    out = fun(seeds)
    rows = []
    for comp in out:
        if isinstance(comp, Dual):
            rows.append(list(comp.grad))
        else:
            rows.append([0.0 * x[0]] * n)
    return rows


def second_derivatives(fun, x, n_out):
    """Mixed second partials ``H[c][i][j]`` of an ``n_out``-component map."""
    n = len(x)

    def flat_jac(y):
        J = jacobian(fun, y)
        return [J[c][i] for c in range(n_out) for i in range(n)]

    JJ = jacobian(flat_jac, x)
    return [
        [[JJ[c * n + i][j] for j in range(n)] for i in range(n)] for c in range(n_out)
    ]


def flow_derivatives(fun, x, order):
    """Successive flow derivatives of ``x' = fun(x)`` at ``x``.

    Returns ``[D_0, ..., D_order]`` where ``D_k`` is the ``(k+1)``-st time
    derivative of the solution curve through ``x`` (equivalently the k-fold
    directional derivative of the field along itself).  Computed by Taylor
    expansion of the solution: ``(m+1) c_{m+1} = [t^m] fun(x(t))``.
    """
    n = len(x)
    K = order + 1
    coeffs = [[float(x[i])] + [0.0] * K for i in range(n)]
    for m in range(K):
        args = [Taylor(coeffs[i][: m + 1]) for i in range(n)]
        out = fun(args)
        for i in range(n):
            comp = out[i]
            if isinstance(comp, Taylor):
                fm = comp.c[m]
            else:
                fm = comp if m == 0 else 0.0
            coeffs[i][m + 1] = fm / (m + 1)
    return [
        [math.factorial(k + 1) * coeffs[i][k + 1] for i in range(n)]
        for k in range(order + 1)
    ]
