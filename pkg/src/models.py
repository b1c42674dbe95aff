"""Value types: exact vectors and matrices, algebras, multilinear maps, series and coefficient sequences"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial
from typing import Callable, Dict, Optional

from src.exceptions import (DimensionMismatchException, InsufficientOrderException,
                            InvalidSequenceException, MalformedInputException,
                            NotLeibnizException)

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputException("Boolean is not a rational: {}".format(value))
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise MalformedInputException("Not a rational: {!r}".format(value))


def vector(values):
    return tuple(to_fraction(value) for value in values)


def zero_vector(dim):
    return (ZERO,) * dim


def basis_vector(dim, index):
    return tuple(ONE if i == index else ZERO for i in range(dim))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def is_zero(v):
    return all(a == 0 for a in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def check_dim(v, dim, what="vector"):
    if len(v) != dim:
        raise DimensionMismatchException(dim, len(v), what)


def multisets(dim, n):
    """Non-decreasing index tuples of length n over range(dim)"""
    return combinations_with_replacement(range(dim), n)


def multinomial(mu):
    """Number of distinct orderings of the multiset mu"""
    result = factorial(len(mu))
    for count in Counter(mu).values():
        result //= factorial(count)
    return result


def monomial(x, mu):
    result = ONE
    for i in mu:
        result = result * x[i]
        if result == 0:
            return result
    return result


def counts_of(mu, dim):
    counts = [0] * dim
    for i in mu:
        counts[i] += 1
    return tuple(counts)


class MatrixQ(object):
    """Dense matrix with exact entries, stored row by row"""

    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, entries, cols=None):
        self.entries = tuple(tuple(to_fraction(a) for a in row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        for row in self.entries:
            if len(row) != self.cols:
                raise MalformedInputException("Ragged matrix rows")

    @staticmethod
    def zero(rows, cols):
        return MatrixQ([[ZERO] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(dim):
        return MatrixQ([basis_vector(dim, i) for i in range(dim)], cols=dim)

    @staticmethod
    def from_columns(columns, rows):
        columns = list(columns)
        return MatrixQ([[column[i] for column in columns] for i in range(rows)], cols=len(columns))

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def apply(self, v):
        check_dim(v, self.cols)
        return tuple(sum((a * b for a, b in zip(row, v) if a != 0), ZERO) for row in self.entries)

    def compose(self, other):
        """self @ other"""
        if self.cols != other.rows:
            raise DimensionMismatchException(self.cols, other.rows, "matrix")
        other_columns = other.columns()
        return MatrixQ([[sum((a * b for a, b in zip(row, column) if a != 0), ZERO)
                         for column in other_columns] for row in self.entries], cols=other.cols)

    def transpose(self):
        return MatrixQ.from_columns(self.entries, self.cols)

    def scaled(self, c):
        return MatrixQ([[c * a for a in row] for row in self.entries], cols=self.cols)

    def trace(self):
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def is_zero(self):
        return all(a == 0 for row in self.entries for a in row)

    def __add__(self, other):
        return MatrixQ([add(r, s) for r, s in zip(self.entries, other.entries)], cols=self.cols)

    def __sub__(self, other):
        return MatrixQ([sub(r, s) for r, s in zip(self.entries, other.entries)], cols=self.cols)

    def __eq__(self, other):
        return isinstance(other, MatrixQ) and self.entries == other.entries \
               and self.cols == other.cols

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "MatrixQ({})".format([[str(a) for a in row] for row in self.entries])


@dataclass(frozen=True)
class NoSolution(object):
    pass


@dataclass(frozen=True)
class Unique(object):
    solution: tuple


@dataclass(frozen=True)
class Affine(object):
    particular: tuple
    kernel: tuple


@dataclass(frozen=True)
class Subspace(object):
    ambient_dim: int
    basis: tuple = ()

    @property
    def dim(self):
        return len(self.basis)


class LeibnizAlgebra(object):
    """
    Finite dimensional algebra given by structure constants c[i][j][k],
    [e_i, e_j] = sum_k c[i][j][k] e_k, checked against the left Leibniz identity
    [u,[v,w]] = [[u,v],w] + [v,[u,w]] unless built with checked=False
    """

    def __init__(self, dim, basis, c, checked=True, name=None):
        self.dim = dim
        self.basis = tuple(basis) if basis else tuple("e{}".format(i + 1) for i in range(dim))
        self.name = name
        if len(self.basis) != dim:
            raise DimensionMismatchException(dim, len(self.basis), "basis")
        if len(c) != dim or any(len(row) != dim for row in c) \
                or any(len(cell) != dim for row in c for cell in row):
            raise DimensionMismatchException(dim, len(c), "structure constants")
        self.c = tuple(tuple(vector(cell) for cell in row) for row in c)
        # ad of each basis vector, column j holds [e_i, e_j]
        self._ad = tuple(MatrixQ.from_columns(self.c[i], dim) for i in range(dim))
        self.checked = checked
        if checked:
            violations = self.leibniz_violations()
            if violations:
                raise NotLeibnizException(violations)

    def bracket(self, x, y):
        check_dim(x, self.dim)
        check_dim(y, self.dim)
        result = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                coefficient = xi * yj
                for k, ck in enumerate(self.c[i][j]):
                    if ck != 0:
                        result[k] += coefficient * ck
        return tuple(result)

    def ad(self, x):
        check_dim(x, self.dim)
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for r, row in enumerate(self._ad[i].entries):
                for s, a in enumerate(row):
                    if a != 0:
                        rows[r][s] += xi * a
        return MatrixQ(rows, cols=self.dim)

    def ad_basis(self, i):
        return self._ad[i]

    def e(self, i):
        return basis_vector(self.dim, i)

    def leibniz_residual(self, i, j, k):
        u, v, w = self.e(i), self.e(j), self.e(k)
        return sub(sub(self.bracket(u, self.bracket(v, w)), self.bracket(self.bracket(u, v), w)),
                   self.bracket(v, self.bracket(u, w)))

    def leibniz_violations(self):
        violations = []
        for i, j, k in product(range(self.dim), repeat=3):
            residual = self.leibniz_residual(i, j, k)
            if not is_zero(residual):
                violations.append(((i, j, k), residual))
        return violations

    def __eq__(self, other):
        return isinstance(other, LeibnizAlgebra) and self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "LeibnizAlgebra({}, dim={})".format(self.name or "custom", self.dim)


class PartSymMap(object):
    """
    (n+1)-linear map symmetric in its first n arguments.

    coeffs maps (mu, j) to the output vector A(e_mu, e_j), mu a non-decreasing
    tuple of n basis indices. Missing keys are zero.
    """

    def __init__(self, n, dim, coeffs=None):
        self.n = n
        self.dim = dim
        self.coeffs = {}
        for (mu, j), value in (coeffs or {}).items():
            mu = tuple(sorted(mu))
            if len(mu) != n:
                raise DimensionMismatchException(n, len(mu), "multi-index")
            if not 0 <= j < dim:
                raise DimensionMismatchException(dim, j, "last slot index")
            value = vector(value)
            check_dim(value, dim, "output")
            if not is_zero(value):
                self.coeffs[(mu, j)] = value

    @staticmethod
    def identity(dim):
        return PartSymMap(0, dim, {((), j): basis_vector(dim, j) for j in range(dim)})

    def value(self, mu, j):
        return self.coeffs.get((tuple(sorted(mu)), j), zero_vector(self.dim))

    def diagonal_weights(self, x):
        """multinomial(mu) * x^mu for every stored mu"""
        weights = {}
        for mu, _ in self.coeffs:
            if mu not in weights:
                weights[mu] = multinomial(mu) * monomial(x, mu)
        return weights

    def diagonal(self, x, y):
        """A(x, ..., x, y)"""
        check_dim(x, self.dim)
        check_dim(y, self.dim)
        weights = self.diagonal_weights(x)
        result = [ZERO] * self.dim
        for (mu, j), value in self.coeffs.items():
            w = weights[mu] * y[j]
            if w == 0:
                continue
            for k, a in enumerate(value):
                if a != 0:
                    result[k] += w * a
        return tuple(result)

    def diagonal_matrix(self, x):
        """The linear map y -> A(x, ..., x, y)"""
        check_dim(x, self.dim)
        weights = self.diagonal_weights(x)
        columns = [[ZERO] * self.dim for _ in range(self.dim)]
        for (mu, j), value in self.coeffs.items():
            w = weights[mu]
            if w == 0:
                continue
            column = columns[j]
            for k, a in enumerate(value):
                if a != 0:
                    column[k] += w * a
        return MatrixQ.from_columns(columns, self.dim)

    def eval(self, xs, y):
        if len(xs) != self.n:
            raise DimensionMismatchException(self.n, len(xs), "argument list")
        for x in xs:
            check_dim(x, self.dim)
        check_dim(y, self.dim)
        supports = [[(i, a) for i, a in enumerate(x) if a != 0] for x in xs]
        result = [ZERO] * self.dim
        for choice in product(*supports):
            weight = ONE
            for _, a in choice:
                weight *= a
            mu = tuple(sorted(i for i, _ in choice))
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                value = self.coeffs.get((mu, j))
                if value is None:
                    continue
                w = weight * yj
                for k, a in enumerate(value):
                    if a != 0:
                        result[k] += w * a
        return tuple(result)

    def is_zero(self):
        return not self.coeffs

    def scaled(self, c):
        return PartSymMap(self.n, self.dim, {key: scale(c, v) for key, v in self.coeffs.items()})

    def _combine(self, other, sign):
        if (self.n, self.dim) != (other.n, other.dim):
            raise DimensionMismatchException((self.n, self.dim), (other.n, other.dim), "map shape")
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = add(coeffs.get(key, zero_vector(self.dim)), scale(sign, value))
        return PartSymMap(self.n, self.dim, coeffs)

    def __add__(self, other):
        return self._combine(other, ONE)

    def __sub__(self, other):
        return self._combine(other, -ONE)

    def __eq__(self, other):
        return isinstance(other, PartSymMap) and (self.n, self.dim) == (other.n, other.dim) \
               and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.dim, frozenset(self.coeffs.items())))

    def __repr__(self):
        return "PartSymMap(n={}, dim={}, terms={})".format(self.n, self.dim, len(self.coeffs))


class SymForm(object):
    """
    Fully symmetric p-linear map, scalar valued or vector valued.

    coeffs maps a non-decreasing tuple mu of p basis indices to B(e_mu).
    """

    def __init__(self, p, dim, coeffs=None, is_vector=False):
        self.p = p
        self.dim = dim
        self.is_vector = is_vector
        self.coeffs = {}
        for mu, value in (coeffs or {}).items():
            mu = tuple(sorted(mu))
            if len(mu) != p:
                raise DimensionMismatchException(p, len(mu), "multi-index")
            if is_vector:
                value = vector(value)
                check_dim(value, dim, "output")
                if not is_zero(value):
                    self.coeffs[mu] = value
            else:
                value = to_fraction(value)
                if value != 0:
                    self.coeffs[mu] = value

    def zero_value(self):
        return zero_vector(self.dim) if self.is_vector else ZERO

    def value(self, mu):
        return self.coeffs.get(tuple(sorted(mu)), self.zero_value())

    def diagonal(self, x):
        """B(x, ..., x)"""
        check_dim(x, self.dim)
        if self.is_vector:
            result = [ZERO] * self.dim
            for mu, value in self.coeffs.items():
                w = multinomial(mu) * monomial(x, mu)
                if w == 0:
                    continue
                for k, a in enumerate(value):
                    if a != 0:
                        result[k] += w * a
            return tuple(result)
        return sum((multinomial(mu) * monomial(x, mu) * value
                    for mu, value in self.coeffs.items()), ZERO)

    def eval(self, xs):
        if len(xs) != self.p:
            raise DimensionMismatchException(self.p, len(xs), "argument list")
        for x in xs:
            check_dim(x, self.dim)
        supports = [[(i, a) for i, a in enumerate(x) if a != 0] for x in xs]
        result = [ZERO] * self.dim if self.is_vector else ZERO
        for choice in product(*supports):
            weight = ONE
            for _, a in choice:
                weight *= a
            value = self.coeffs.get(tuple(sorted(i for i, _ in choice)))
            if value is None:
                continue
            if self.is_vector:
                for k, a in enumerate(value):
                    if a != 0:
                        result[k] += weight * a
            else:
                result += weight * value
        return tuple(result) if self.is_vector else result

    def is_zero(self):
        return not self.coeffs

    def scaled(self, c):
        if self.is_vector:
            return SymForm(self.p, self.dim, {mu: scale(c, v) for mu, v in self.coeffs.items()}, True)
        return SymForm(self.p, self.dim, {mu: c * v for mu, v in self.coeffs.items()})

    def _combine(self, other, sign):
        if (self.p, self.dim, self.is_vector) != (other.p, other.dim, other.is_vector):
            raise DimensionMismatchException((self.p, self.dim), (other.p, other.dim), "form shape")
        coeffs = dict(self.coeffs)
        for mu, value in other.coeffs.items():
            if self.is_vector:
                coeffs[mu] = add(coeffs.get(mu, zero_vector(self.dim)), scale(sign, value))
            else:
                coeffs[mu] = coeffs.get(mu, ZERO) + sign * value
        return SymForm(self.p, self.dim, coeffs, self.is_vector)

    def __add__(self, other):
        return self._combine(other, ONE)

    def __sub__(self, other):
        return self._combine(other, -ONE)

    def __eq__(self, other):
        return isinstance(other, SymForm) and \
               (self.p, self.dim, self.is_vector) == (other.p, other.dim, other.is_vector) \
               and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.dim, self.is_vector, frozenset(self.coeffs.items())))

    def __repr__(self):
        return "SymForm(p={}, dim={}, vector={}, terms={})".format(
            self.p, self.dim, self.is_vector, len(self.coeffs))


class Cochain(object):
    """
    Multilinear map of n ordered arguments into the algebra, no symmetry.
    coeffs maps an ordered tuple t of basis indices to w(e_t); degree 0 is the key ().
    """

    def __init__(self, degree, dim, coeffs=None):
        self.degree = degree
        self.dim = dim
        self.coeffs = {}
        for t, value in (coeffs or {}).items():
            t = tuple(t)
            if len(t) != degree:
                raise DimensionMismatchException(degree, len(t), "index tuple")
            value = vector(value)
            check_dim(value, dim, "output")
            if not is_zero(value):
                self.coeffs[t] = value

    @staticmethod
    def from_vector(v):
        return Cochain(0, len(v), {(): v})

    @staticmethod
    def from_matrix(matrix):
        return Cochain(1, matrix.cols, {(j,): matrix.column(j) for j in range(matrix.cols)})

    def as_matrix(self):
        if self.degree != 1:
            raise DimensionMismatchException(1, self.degree, "cochain degree")
        return MatrixQ.from_columns([self.value((j,)) for j in range(self.dim)], self.dim)

    def value(self, t):
        return self.coeffs.get(tuple(t), zero_vector(self.dim))

    def eval(self, xs):
        if len(xs) != self.degree:
            raise DimensionMismatchException(self.degree, len(xs), "argument list")
        supports = [[(i, a) for i, a in enumerate(x) if a != 0] for x in xs]
        result = [ZERO] * self.dim
        for choice in product(*supports):
            value = self.coeffs.get(tuple(i for i, _ in choice))
            if value is None:
                continue
            weight = ONE
            for _, a in choice:
                weight *= a
            for k, a in enumerate(value):
                if a != 0:
                    result[k] += weight * a
        return tuple(result)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for t, value in other.coeffs.items():
            coeffs[t] = add(coeffs.get(t, zero_vector(self.dim)), value)
        return Cochain(self.degree, self.dim, coeffs)

    def __sub__(self, other):
        coeffs = dict(self.coeffs)
        for t, value in other.coeffs.items():
            coeffs[t] = sub(coeffs.get(t, zero_vector(self.dim)), value)
        return Cochain(self.degree, self.dim, coeffs)

    def __eq__(self, other):
        return isinstance(other, Cochain) and (self.degree, self.dim) == (other.degree, other.dim) \
               and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.dim, frozenset(self.coeffs.items())))

    def __repr__(self):
        return "Cochain(degree={}, dim={}, terms={})".format(self.degree, self.dim, len(self.coeffs))


class RackSeries(object):
    """Truncated sequence A_1..A_N of an analytic linear rack, A_0(x, y) = y implied"""

    def __init__(self, alg, maps):
        self.alg = alg
        self.maps = tuple(maps)
        for n, component in enumerate(self.maps, start=1):
            if component.n != n:
                raise DimensionMismatchException(n, component.n, "symmetric arity")
            if component.dim != alg.dim:
                raise DimensionMismatchException(alg.dim, component.dim, "component")

    @property
    def N(self):
        return len(self.maps)

    def component(self, n):
        if n == 0:
            return PartSymMap.identity(self.alg.dim)
        if n > self.N:
            raise InsufficientOrderException(n, self.N)
        return self.maps[n - 1]

    def replaced(self, n, component):
        maps = list(self.maps)
        maps[n - 1] = component
        return RackSeries(self.alg, maps)

    def __eq__(self, other):
        return isinstance(other, RackSeries) and self.alg == other.alg and self.maps == other.maps

    def __hash__(self):
        return hash((self.alg, self.maps))

    def __repr__(self):
        return "RackSeries({!r}, N={})".format(self.alg, self.N)


class USequence(object):
    """U_1..U_N with U_0 = 1 and U_s = 0 for s < 0"""

    def __init__(self, values):
        self.values = vector(values)
        if self.values and self.values[0] != 1:
            raise InvalidSequenceException("U_1 must be 1, got {}".format(self.values[0]))
        if len(self.values) > 1 and self.values[1] != Fraction(1, 2):
            raise InvalidSequenceException("U_2 must be 1/2, got {}".format(self.values[1]))

    @property
    def N(self):
        return len(self.values)

    def __getitem__(self, n):
        if n < 0:
            return ZERO
        if n == 0:
            return ONE
        if n > self.N:
            raise IndexError("U_{} beyond order {}".format(n, self.N))
        return self.values[n - 1]

    def __eq__(self, other):
        return isinstance(other, USequence) and self.values == other.values

    def __repr__(self):
        return "USequence({})".format([str(u) for u in self.values])


class FCoeffs(object):
    """Coefficients of F(u) = 1 + sum_k a_k u^k"""

    def __init__(self, values=()):
        self.values = tuple(values)

    @property
    def m(self):
        return len(self.values)

    def get(self, k):
        if 1 <= k <= len(self.values):
            return self.values[k - 1]
        return ZERO

    def padded(self, m):
        return tuple(self.get(k) for k in range(1, m + 1))

    def evaluate(self, u):
        result = ONE
        power = ONE
        for a in self.values:
            power = power * u
            result = result + a * power
        return result

    def __eq__(self, other):
        if not isinstance(other, FCoeffs):
            return False
        m = max(self.m, other.m)
        return self.padded(m) == other.padded(m)

    def __repr__(self):
        return "FCoeffs({})".format([str(a) for a in self.values])


class Jet(object):
    """First order jet: a value and its gradient with respect to a fixed set of variables"""

    __slots__ = ('value', 'grad')

    def __init__(self, value, grad):
        self.value = value
        self.grad = tuple(grad)

    @staticmethod
    def variable(value, index, nvars):
        return Jet(to_fraction(value), basis_vector(nvars, index))

    @staticmethod
    def constant(value, nvars):
        return Jet(to_fraction(value), zero_vector(nvars))

    def _lift(self, other):
        if isinstance(other, Jet):
            return other
        return Jet(other, zero_vector(len(self.grad)))

    def __add__(self, other):
        other = self._lift(other)
        return Jet(self.value + other.value, add(self.grad, other.grad))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return Jet(self.value - other.value, sub(self.grad, other.grad))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Jet(-self.value, scale(-1, self.grad))

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.value * other, scale(other, self.grad))
        return Jet(self.value * other.value,
                   add(scale(other.value, self.grad), scale(self.value, other.grad)))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = Jet(ONE, zero_vector(len(self.grad)))
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._lift(other)
        return self.value == other.value and self.grad == other.grad

    def __hash__(self):
        return hash((self.value, self.grad))

    def __repr__(self):
        return "Jet({}, {})".format(self.value, [str(g) for g in self.grad])


class TruncatedSeries(object):
    """
    Polynomial in nvars variables truncated above total degree `order`.
    terms maps exponent tuples to coefficients.
    """

    __slots__ = ('nvars', 'order', 'terms')

    def __init__(self, nvars, order, terms=None):
        self.nvars = nvars
        self.order = order
        self.terms = {}
        for exponents, c in (terms or {}).items():
            if c != 0 and sum(exponents) <= order:
                self.terms[tuple(exponents)] = c

    @staticmethod
    def constant(c, nvars, order):
        return TruncatedSeries(nvars, order, {(0,) * nvars: c})

    @staticmethod
    def monomial(c, exponents, order):
        return TruncatedSeries(len(exponents), order, {tuple(exponents): c})

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), ZERO)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.nvars, self.order)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return TruncatedSeries(self.nvars, min(self.order, other.order), terms)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.nvars, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.nvars, self.order)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if other == 0:
                return TruncatedSeries(self.nvars, self.order)
            return TruncatedSeries(self.nvars, self.order,
                                   {e: c * other for e, c in self.terms.items()})
        order = min(self.order, other.order)
        terms = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, ZERO) + c1 * c2
        return TruncatedSeries(self.nvars, order, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = TruncatedSeries.constant(ONE, self.nvars, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.nvars, self.order)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "TruncatedSeries({})".format(self.terms)


@dataclass
class FloatRack(object):
    """Linear rack on R^dim evaluated in floating point"""
    dim: int
    op: Callable
    label: str
    params: Dict = field(default_factory=dict)

    def __call__(self, x, y):
        return self.op(x, y)


@dataclass
class CheckResult(object):
    """Outcome of one named check"""
    name: str
    ok: bool
    details: Dict = field(default_factory=dict)
    witness: Optional[object] = None
