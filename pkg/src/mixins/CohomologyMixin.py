"""Mixins for the Leibniz coboundary, low degree cohomology and coboundary equations"""
from itertools import product

from src.config import LOGGER
from src.exceptions import (DegreeBoundException, DimensionMismatchException,
                            InsufficientOrderException, NoBracketFormException,
                            NonUniqueSolutionException, NotACocycleException)
from src.mixins.LinearAlgebraMixin import LinearAlgebraMixin
from src.mixins.MultilinearMixin import grid, grid_vector
from src.models import (ZERO, Cochain, MatrixQ, CheckResult, NoSolution, Affine, add, sub, scale,
                        zero_vector, is_zero)

MAX_DEGREE = 3


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _right_bracket(alg, v, b):
    """[v, e_b]"""
    result = [ZERO] * alg.dim
    for l, a in enumerate(v):
        if a == 0:
            continue
        for k, c in enumerate(alg.c[l][b]):
            if c != 0:
                result[k] += a * c
    return tuple(result)


def _eval_with_slot(w, t, position, slot_value):
    """w at the basis tuple t with the argument at `position` replaced by slot_value"""
    total = zero_vector(w.dim)
    for l, a in enumerate(slot_value):
        if a == 0:
            continue
        key = t[:position] + (l,) + t[position + 1:]
        value = w.coeffs.get(key)
        if value is not None:
            total = add(total, scale(a, value))
    return total


class CohomologyMixin(object):
    """Coboundary operator and the H0 / H1 computations of the Leibniz complex"""

    @staticmethod
    def delta(alg, w):
        """
        delta(w)(x_0..x_n) = sum_{i<n} (-1)^i [x_i, w(..^x_i..)] + (-1)^(n-1) [w(x_0..x_{n-1}), x_n]
                             + sum_{i<j} (-1)^(i+1) w(..^x_i.., [x_i, x_j], ..)
        so that delta(m)(x) = -[m, x] in degree 0 and
        delta(F)(y, z) = [y, F(z)] + [F(y), z] - F([y, z]) in degree 1.
        """
        n = w.degree
        if n > MAX_DEGREE:
            raise DegreeBoundException(n)
        if w.dim != alg.dim:
            raise DimensionMismatchException(alg.dim, w.dim, "cochain")
        dim = alg.dim
        coeffs = {}
        for t in product(range(dim), repeat=n + 1):
            value = zero_vector(dim)
            for i in range(n):
                inner = w.coeffs.get(t[:i] + t[i + 1:])
                if inner is not None:
                    value = add(value, scale(_sign(i), alg.ad_basis(t[i]).apply(inner)))
            head = w.coeffs.get(t[:n])
            if head is not None:
                value = add(value, scale(_sign(n - 1), _right_bracket(alg, head, t[n])))
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    bracket = alg.c[t[i]][t[j]]
                    if is_zero(bracket):
                        continue
                    rest = t[:i] + t[i + 1:]
                    # x_j sits at position j - 1 once x_i is removed
                    term = _eval_with_slot(w, rest, j - 1, bracket)
                    value = add(value, scale(_sign(i + 1), term))
            coeffs[t] = value
        return Cochain(n + 1, dim, coeffs)

    @staticmethod
    def flatten(w):
        """Coordinates of a cochain in the basis (ordered tuple, output index)"""
        flat = []
        for t in product(range(w.dim), repeat=w.degree):
            flat.extend(w.value(t))
        return tuple(flat)

    @staticmethod
    def delta_matrix(alg, degree):
        """Matrix of delta from degree `degree` to degree + 1"""
        dim = alg.dim
        columns = []
        for t in product(range(dim), repeat=degree):
            for k in range(dim):
                unit = Cochain(degree, dim, {t: tuple(1 if r == k else 0 for r in range(dim))})
                columns.append(CohomologyMixin.flatten(CohomologyMixin.delta(alg, unit)))
        return MatrixQ.from_columns(columns, dim ** (degree + 2))

    @staticmethod
    def cohomology_dims(alg):
        """(dim H0, dim H1)"""
        dim = alg.dim
        rank_0 = LinearAlgebraMixin.rank(CohomologyMixin.delta_matrix(alg, 0))
        rank_1 = LinearAlgebraMixin.rank(CohomologyMixin.delta_matrix(alg, 1))
        h0 = dim - rank_0
        h1 = (dim * dim - rank_1) - rank_0
        LOGGER.info("Cohomology of {}: h0={}, h1={}".format(alg, h0, h1))
        return h0, h1

    @staticmethod
    def solve_coboundary(alg, D):
        """
        b with D(y) = [b, y] for every y. Note delta(b) = -D with the degree 0 convention
        delta(b)(y) = -[b, y].
        """
        if isinstance(D, MatrixQ):
            D = Cochain.from_matrix(D)
        closure = CohomologyMixin.delta(alg, D)
        if not closure.is_zero():
            key = sorted(closure.coeffs)[0]
            raise NotACocycleException({'args': list(key), 'residual': closure.coeffs[key]})
        dim = alg.dim
        rows = []
        rhs = []
        for j in range(dim):
            image = D.value((j,))
            for k in range(dim):
                rows.append([alg.c[i][j][k] for i in range(dim)])
                rhs.append(image[k])
        solution = LinearAlgebraMixin.solve_linear(MatrixQ(rows), rhs)
        if isinstance(solution, NoSolution):
            raise NoBracketFormException()
        if isinstance(solution, Affine):
            raise NonUniqueSolutionException(solution.particular, solution.kernel)
        return solution.solution

    @staticmethod
    def check_composition_rule(alg, F, G):
        """
        delta(F o G)(y, z) = delta(F)(y, G z) + delta(F)(G y, z) + F(delta(G)(y, z))
                             - [F y, G z] - [G y, F z] on all basis pairs
        """
        composite = CohomologyMixin.delta(alg, Cochain.from_matrix(F.compose(G)))
        delta_F = CohomologyMixin.delta(alg, Cochain.from_matrix(F))
        delta_G = CohomologyMixin.delta(alg, Cochain.from_matrix(G))
        for a, b in product(range(alg.dim), repeat=2):
            y, z = alg.e(a), alg.e(b)
            Gy, Gz, Fy, Fz = G.apply(y), G.apply(z), F.apply(y), F.apply(z)
            expected = add(delta_F.eval([y, Gz]), delta_F.eval([Gy, z]))
            expected = add(expected, F.apply(delta_G.eval([y, z])))
            expected = sub(sub(expected, alg.bracket(Fy, Gz)), alg.bracket(Gy, Fz))
            residual = sub(composite.value((a, b)), expected)
            if not is_zero(residual):
                return CheckResult('composition_rule', False,
                                   {'y': a, 'z': b, 'residual': residual}, (a, b))
        return CheckResult('composition_rule', True, {})

    @staticmethod
    def check_eqc(series, p):
        """
        delta(y -> A_p(x, ..., x, y))(y, z) = -sum_{r=1}^{p-1} [A_r(x, y), A_{p-r}(x, z)]
        on the polarization grid of degree p in x
        """
        if p > series.N:
            raise InsufficientOrderException(p, series.N)
        alg = series.alg
        dim = alg.dim
        for k in grid(dim, p):
            x = grid_vector(k)
            matrices = [series.component(r).diagonal_matrix(x) for r in range(p + 1)]
            left = CohomologyMixin.delta(alg, Cochain.from_matrix(matrices[p]))
            for a, b in product(range(dim), repeat=2):
                right = zero_vector(dim)
                for r in range(1, p):
                    right = sub(right, alg.bracket(matrices[r].column(a), matrices[p - r].column(b)))
                residual = sub(left.value((a, b)), right)
                if not is_zero(residual):
                    return CheckResult('eqc[{}]'.format(p), False,
                                       {'x': list(k), 'y': a, 'z': b, 'residual': residual}, k)
        return CheckResult('eqc[{}]'.format(p), True, {})
