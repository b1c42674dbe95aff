"""Mixins for truncated analytic linear rack series and the identities they must satisfy"""
import random
from fractions import Fraction
from itertools import permutations
from math import factorial

from src.config import LOGGER
from src.exceptions import (InsufficientOrderException, MalformedInputException,
                            NonInvariantFormException, NotLeibnizException)
from src.mixins.MultilinearMixin import MultilinearMixin, grid, grid_vector, polar_coefficients
from src.models import (ZERO, ONE, MatrixQ, RackSeries, TruncatedSeries, CheckResult, FCoeffs,
                        add, check_dim, is_zero, multinomial, multisets, vector, zero_vector)


def require_leibniz(alg):
    if not alg.checked:
        violations = alg.leibniz_violations()
        if violations:
            raise NotLeibnizException(violations)


def ad_powers(alg, x, n):
    """[Id, ad_x, ad_x^2, ..., ad_x^n]"""
    ad = alg.ad(x)
    powers = [MatrixQ.identity(alg.dim)]
    for _ in range(n):
        powers.append(ad.compose(powers[-1]))
    return powers


def _poly_mul(a, b, order):
    result = [ZERO] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            if b[j] != 0:
                result[i + j] += ai * b[j]
    return result


def exp_coefficients(a, N, p):
    """
    Coefficients V[(m, j)] of t^m u^j in exp(t F(u)), F(u) = 1 + sum a_k u^k,
    for m >= 1 and m + p j <= N, by formal composition in u.
    """
    order = max((N - 1) // p, 0)
    terms = {(0,): ONE}
    for k in range(1, order + 1):
        if a.get(k) != 0:
            terms[(k,)] = a.get(k)
    F = TruncatedSeries(1, order, terms)
    power = TruncatedSeries.constant(ONE, 1, order)
    coefficients = {}
    for m in range(1, N + 1):
        power = power * F
        for j in range((N - m) // p + 1):
            value = power.coefficient((j,)) / factorial(m)
            if value != 0:
                coefficients[(m, j)] = value
    return coefficients


class RackSeriesMixin(object):
    """Construction and verification of RackSeries"""

    @staticmethod
    def canonical_series(alg, N):
        """A_n = polar form of ad_x^n / n!, the series of exp(ad_x)(y)"""
        require_leibniz(alg)
        LOGGER.info("Building canonical series of {} up to order {}".format(alg, N))
        cache = {}

        def powers(x):
            if x not in cache:
                cache[x] = ad_powers(alg, x, N)
            return cache[x]

        maps = []
        for n in range(1, N + 1):
            inverse = Fraction(1, factorial(n))
            maps.append(MultilinearMixin.polarize_matrix(
                lambda x, n=n, inverse=inverse: powers(x)[n].scaled(inverse), n, alg.dim))
        return RackSeries(alg, maps)

    @staticmethod
    def symmetrized_ad_composition(alg, xs, y):
        """1/(n!)^2 sum over permutations of ad_{x_s(1)} ... ad_{x_s(n)} (y)"""
        n = len(xs)
        total = zero_vector(alg.dim)
        ads = [alg.ad(x) for x in xs]
        for order in permutations(range(n)):
            value = y
            for index in reversed(order):
                value = ads[index].apply(value)
            total = add(total, value)
        return tuple(a / factorial(n) ** 2 for a in total)

    @staticmethod
    def eval_truncated(series, x, y):
        """y + sum_{n <= N} A_n(x, ..., x, y)"""
        check_dim(x, series.alg.dim)
        check_dim(y, series.alg.dim)
        result = list(y)
        for component in series.maps:
            value = component.diagonal(x, y)
            result = [a + b for a, b in zip(result, value)]
        return tuple(result)

    @staticmethod
    def check_eqm(series, p, q):
        """
        A_p(x, A_q(y, z)) = sum_{s_1 + ... + s_q + k = p} A_q(A_{s_1}(x, y), ..., A_k(x, z))
        as a multilinear identity, compared on the polarization grids in x and y.

        The right side is the coefficient of s^p in A_q(w(s), ..., w(s), v(s)) with
        w(s) = sum_i s^i A_i(x, y) and v(s) = sum_k s^k A_k(x, z).
        """
        if p < 1 or q < 1:
            raise MalformedInputException("p and q must be at least 1")
        if p > series.N or q > series.N:
            raise InsufficientOrderException(max(p, q), series.N)
        dim = series.alg.dim
        components = [series.component(i) for i in range(p + 1)]
        top = series.component(q)

        x_grid = list(grid(dim, p))
        y_grid = list(grid(dim, q))
        x_data = {}
        for k in x_grid:
            x = grid_vector(k)
            x_data[k] = [component.diagonal_matrix(x) for component in components]
        y_data = {}
        for l in y_grid:
            y = grid_vector(l)
            y_data[l] = (y, top.diagonal_matrix(y))

        weights = {}
        for mu, _ in top.coeffs:
            if mu not in weights:
                weights[mu] = multinomial(mu)

        defects = {}
        failed = False
        for k in x_grid:
            matrices = x_data[k]
            # v_l(s) for z = e_j: entry [j][l] is the list of coefficients of s^0..s^p
            v = [[[matrices[i].entries[l][j] for i in range(p + 1)] for l in range(dim)]
                 for j in range(dim)]
            for l in y_grid:
                y, y_matrix = y_data[l]
                lhs = matrices[p].compose(y_matrix)
                images = [matrices[i].apply(y) for i in range(p + 1)]
                w = [[images[i][r] for i in range(p + 1)] for r in range(dim)]
                w_powers = []
                for r in range(dim):
                    powers = [[ONE] + [ZERO] * p]
                    for _ in range(q):
                        powers.append(_poly_mul(powers[-1], w[r], p))
                    w_powers.append(powers)
                monomials = {}
                rhs = [[ZERO] * dim for _ in range(dim)]
                for (mu, l_index), value in top.coeffs.items():
                    if mu not in monomials:
                        counts = [0] * dim
                        for i in mu:
                            counts[i] += 1
                        mono = [ONE] + [ZERO] * p
                        for r, c in enumerate(counts):
                            if c:
                                mono = _poly_mul(mono, w_powers[r][c], p)
                        monomials[mu] = mono
                    mono = monomials[mu]
                    for j in range(dim):
                        coefficient = v[j][l_index]
                        c = sum((mono[t] * coefficient[p - t] for t in range(p + 1)
                                 if mono[t] != 0 and coefficient[p - t] != 0), ZERO)
                        if c == 0:
                            continue
                        c *= weights[mu]
                        column = rhs[j]
                        for r, a in enumerate(value):
                            if a != 0:
                                column[r] += c * a
                flat = []
                for j in range(dim):
                    column = lhs.column(j)
                    flat.extend(column[r] - rhs[j][r] for r in range(dim))
                defects[(k, l)] = tuple(flat)
                if not is_zero(flat):
                    failed = True

        name = 'eqm[{},{}]'.format(p, q)
        if not failed:
            return CheckResult(name, True, {'p': p, 'q': q})
        witness = RackSeriesMixin._eqm_witness(defects, p, q, dim)
        LOGGER.info("Equation ({}, {}) fails, witness {}".format(p, q, witness))
        return CheckResult(name, False, {'p': p, 'q': q, 'witness': witness}, witness)

    @staticmethod
    def _eqm_witness(defects, p, q, dim):
        """First basis tuple (mu, nu, j) with nonzero bipolarized defect"""
        mus = list(multisets(dim, p))

        def values_y(l):
            polar_x = polar_coefficients(lambda k: defects[(k, l)], p, dim)
            flat = []
            for mu in mus:
                flat.extend(polar_x.get(mu, zero_vector(dim * dim)))
            return tuple(flat)

        polar = polar_coefficients(values_y, q, dim)
        for nu in sorted(polar):
            flat = polar[nu]
            for index, mu in enumerate(mus):
                block = flat[index * dim * dim:(index + 1) * dim * dim]
                for j in range(dim):
                    residual = block[j * dim:(j + 1) * dim]
                    if not is_zero(residual):
                        return {'x': list(mu), 'y': list(nu), 'z': j, 'residual': residual}
        return None

    @staticmethod
    def check_eqm_all(series, max_total=None):
        """check_eqm for every p, q >= 1 with p + q <= max_total (default N)"""
        max_total = series.N if max_total is None else max_total
        results = []
        for total in range(2, max_total + 1):
            for p in range(1, total):
                q = total - p
                if p <= series.N and q <= series.N:
                    results.append(RackSeriesMixin.check_eqm(series, p, q))
        return results

    @staticmethod
    def check_invariance_all(series):
        per_n = []
        first_failure = None
        for n, component in enumerate(series.maps, start=1):
            invariant = MultilinearMixin.is_invariant(series.alg, component)
            per_n.append({'n': n, 'invariant': invariant})
            if not invariant and first_failure is None:
                first_failure = n
        return CheckResult('invariance', first_failure is None,
                           {'per_n': per_n, 'first_failure': first_failure}, first_failure)

    @staticmethod
    def series_from_F(alg, P, a, N):
        """Series of exp(F(P(x, ..., x)) ad_x)(y) with F(u) = 1 + sum a_k u^k"""
        require_leibniz(alg)
        if not isinstance(a, FCoeffs):
            a = FCoeffs(vector(a))
        if P.is_vector or P.p < 1:
            raise MalformedInputException("P must be a scalar form of arity at least 1")
        if not MultilinearMixin.is_invariant(alg, P):
            raise NonInvariantFormException("form P")
        p = P.p
        coefficients = exp_coefficients(a, N, p)
        LOGGER.info("Expanding exp(F(P) ad) with {} coefficients up to order {}".format(a.m, N))
        cache = {}

        def data(x):
            if x not in cache:
                cache[x] = (ad_powers(alg, x, N), P.diagonal(x))
            return cache[x]

        def diag_matrix(x, n):
            powers, u = data(x)
            total = MatrixQ.zero(alg.dim, alg.dim)
            for (m, j), value in coefficients.items():
                if m + p * j != n:
                    continue
                factor = value * u ** j
                if factor != 0:
                    total = total + powers[m].scaled(factor)
            return total

        maps = [MultilinearMixin.polarize_matrix(lambda x, n=n: diag_matrix(x, n), n, alg.dim)
                for n in range(1, N + 1)]
        return RackSeries(alg, maps)

    @staticmethod
    def check_quandle(series):
        """x |> x = x up to order N, that is A_n(x, ..., x, x) = 0 as a polynomial"""
        dim = series.alg.dim
        for n, component in enumerate(series.maps, start=1):
            for k in grid(dim, n + 1):
                x = grid_vector(k)
                value = component.diagonal(x, x)
                if not is_zero(value):
                    return CheckResult('quandle', False, {'n': n, 'x': list(k), 'residual': value},
                                       n)
        return CheckResult('quandle', True, {})

    @staticmethod
    def _sample_points(dim, samples, seed):
        rng = random.Random(seed)
        return [(tuple(Fraction(rng.randint(-2, 2)) for _ in range(dim)),
                 tuple(Fraction(rng.randint(-2, 2)) for _ in range(dim)))
                for _ in range(samples)]

    @staticmethod
    def check_self_distributivity(series, points=None, samples=6, seed=0):
        """
        Expands (sx) |> ((ty) |> z) and ((sx) |> (ty)) |> ((sx) |> z) as polynomials in s, t
        up to total degree N and compares every bidegree
        """
        alg = series.alg
        dim = alg.dim
        N = series.N
        points = points if points is not None else \
            RackSeriesMixin._sample_points(dim, samples, seed)

        def s_t(c, a, b):
            return TruncatedSeries.monomial(c, (a, b), N)

        zero = TruncatedSeries(2, N)
        for x, y in points:
            x = vector(x)
            y = vector(y)
            x_matrices = [series.component(n).diagonal_matrix(x) for n in range(N + 1)]
            y_matrices = [series.component(n).diagonal_matrix(y) for n in range(N + 1)]
            images = [x_matrices[n].apply(y) for n in range(N + 1)]
            w = [sum((s_t(images[n][r], n, 1) for n in range(N + 1)), zero) for r in range(dim)]
            w_powers = [[w[r] ** c for c in range(N + 1)] for r in range(dim)]
            for j in range(dim):
                inner = [sum((s_t(y_matrices[n].entries[r][j], 0, n) for n in range(N + 1)), zero)
                         for r in range(dim)]
                lhs = [sum((inner[l] * x_matrices[n].entries[r][l] * s_t(ONE, n, 0)
                            for n in range(N + 1) for l in range(dim)
                            if x_matrices[n].entries[r][l] != 0), zero)
                       for r in range(dim)]
                v = [sum((s_t(x_matrices[n].entries[l][j], n, 0) for n in range(N + 1)), zero)
                     for l in range(dim)]
                rhs = list(v)
                for n in range(1, N + 1):
                    component = series.component(n)
                    for (mu, l), value in component.coeffs.items():
                        counts = [0] * dim
                        for i in mu:
                            counts[i] += 1
                        mono = s_t(ONE * multinomial(mu), 0, 0)
                        for r, c in enumerate(counts):
                            if c:
                                mono = mono * w_powers[r][c]
                        term = mono * v[l]
                        if term.is_zero():
                            continue
                        for r, a in enumerate(value):
                            if a != 0:
                                rhs[r] = rhs[r] + term * a
                for r in range(dim):
                    difference = lhs[r] - rhs[r]
                    if not difference.is_zero():
                        bidegree = min(difference.terms, key=lambda e: (sum(e), e))
                        LOGGER.info("Self-distributivity fails in bidegree {}".format(bidegree))
                        return CheckResult('self_distributivity', False,
                                           {'bidegree': list(bidegree), 'x': x, 'y': y, 'z': j},
                                           bidegree)
        return CheckResult('self_distributivity', True, {'points': len(points)})
