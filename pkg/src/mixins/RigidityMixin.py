"""Mixins for the rigidity computation on algebras with ad_x^2(z) = -<x,z>x + <x,x>z"""
from fractions import Fraction
from itertools import product
from math import factorial

from src.config import LOGGER
from src.exceptions import (EvenEquationResidualException, IsotropicProbeException,
                            MagicIdentityException, RecurrenceViolationException,
                            ShapeMismatchException)
from src.mixins.InvariantsMixin import InvariantsMixin
from src.mixins.LeibnizMixin import LeibnizMixin
from src.mixins.LinearAlgebraMixin import LinearAlgebraMixin
from src.mixins.MultilinearMixin import MultilinearMixin, grid, grid_vector
from src.mixins.RackSeriesMixin import RackSeriesMixin
from src.models import (ZERO, ONE, MatrixQ, RackSeries, USequence, FCoeffs, Jet, CheckResult,
                        add, scale, sub, is_zero, vector)


def partitions(m):
    """Count vectors (k_1..k_m) with k_1 + 2 k_2 + ... + m k_m = m"""

    def rest(total, largest):
        if total == 0:
            yield {}
            return
        for size in range(min(total, largest), 0, -1):
            for count in range(total // size, 0, -1):
                for tail in rest(total - size * count, size - 1):
                    counts = dict(tail)
                    counts[size] = count
                    yield counts

    return rest(m, m)


def _coefficient(a, i):
    if isinstance(a, FCoeffs):
        return a.get(i)
    return a[i - 1] if i <= len(a) else ZERO


def closed_form_matrix(alg, gram, x, n):
    """Diagonal y -> A0_n(x, ..., x, y) from the quadratic ad identity"""
    u = LeibnizMixin.trace_form_with(gram, x, x)
    k = n // 2
    if n % 2:
        return alg.ad(x).scaled(u ** k / factorial(n))
    projection = MatrixQ.from_columns(
        [scale(LeibnizMixin.trace_form_with(gram, x, alg.e(j)), x) for j in range(alg.dim)],
        alg.dim)
    return MatrixQ.identity(alg.dim).scaled(u ** k / factorial(n)) - \
        projection.scaled(u ** (k - 1) / factorial(n))


def shape_matrix(alg, gram, x, n):
    """<x,x>^k ad_x for n = 2k + 1 and <x,x>^(k-1) ad_x^2 for n = 2k"""
    u = LeibnizMixin.trace_form_with(gram, x, x)
    ad = alg.ad(x)
    if n % 2:
        return ad.scaled(u ** (n // 2))
    return ad.compose(ad).scaled(u ** (n // 2 - 1))


class RigidityMixin(object):
    """U sequences, F coefficients and the identities linking them"""

    @staticmethod
    def check_magic(alg):
        """
        Polarized in x: 1/2 (ad_x1 ad_x2 + ad_x2 ad_x1) z
        = -1/2 (<x1,z> x2 + <x2,z> x1) + <x1,x2> z on basis triples
        """
        gram = LeibnizMixin.gram_matrix(alg).entries
        half = Fraction(1, 2)
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                both = alg.ad_basis(i).compose(alg.ad_basis(j)) + \
                    alg.ad_basis(j).compose(alg.ad_basis(i))
                for k in range(alg.dim):
                    lhs = scale(half, both.column(k))
                    rhs = add(scale(-half * gram[i][k], alg.e(j)), scale(-half * gram[j][k], alg.e(i)))
                    rhs = add(rhs, scale(gram[i][j], alg.e(k)))
                    residual = sub(lhs, rhs)
                    if not is_zero(residual):
                        LOGGER.info("Quadratic ad identity fails on {} at {}".format(alg, (i, j, k)))
                        return CheckResult('magic', False,
                                           {'x1': i, 'x2': j, 'z': k, 'residual': residual},
                                           (i, j, k))
        return CheckResult('magic', True, {})

    @staticmethod
    def canonical_closed_form(alg, N):
        """Canonical series assembled from the closed forms of ad_x^n / n!"""
        magic = RigidityMixin.check_magic(alg)
        if not magic.ok:
            raise MagicIdentityException(magic.details)
        gram = LeibnizMixin.gram_matrix(alg)
        maps = [MultilinearMixin.polarize_matrix(
            lambda x, n=n: closed_form_matrix(alg, gram, x, n), n, alg.dim)
            for n in range(1, N + 1)]
        return RackSeries(alg, maps)

    @staticmethod
    def probe(alg, gram):
        """First basis vector, then first pairwise sum, with nonzero trace form"""
        for i in range(alg.dim):
            if gram.entries[i][i] != 0:
                return alg.e(i)
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                x = add(alg.e(i), alg.e(j))
                if LeibnizMixin.trace_form_with(gram, x, x) != 0:
                    return x
        raise IsotropicProbeException("No anisotropic probe among basis vectors and their sums")

    @staticmethod
    def _ratio(index, actual, reference):
        """c with actual = c * reference"""
        for row_actual, row_reference in zip(actual.entries, reference.entries):
            for a, b in zip(row_actual, row_reference):
                if b != 0:
                    c = a / b
                    if actual != reference.scaled(c):
                        raise ShapeMismatchException(index)
                    return c
        if not actual.is_zero():
            raise ShapeMismatchException(index)
        raise ShapeMismatchException(index, "Probe gives a vanishing shape tensor at {}".format(index))

    @staticmethod
    def extract_U(series):
        """U_n read off A_n at an anisotropic probe, shape confirmed at a second probe"""
        alg = series.alg
        gram = LeibnizMixin.gram_matrix(alg)
        if LinearAlgebraMixin.rank(gram) < alg.dim:
            raise ShapeMismatchException(0, "Trace form of {} is degenerate".format(alg))
        magic = RigidityMixin.check_magic(alg)
        if not magic.ok:
            raise MagicIdentityException(magic.details)
        x0 = RigidityMixin.probe(alg, gram)
        x1 = tuple(ZERO if i == 0 else ONE for i in range(alg.dim))
        values = []
        for n in range(1, series.N + 1):
            component = series.component(n)
            U = RigidityMixin._ratio(n, component.diagonal_matrix(x0), shape_matrix(alg, gram, x0, n))
            if component.diagonal_matrix(x1) != shape_matrix(alg, gram, x1, n).scaled(U):
                raise ShapeMismatchException(n)
            values.append(U)
        if series.N <= 6:
            for n, U in enumerate(values, start=1):
                expected = MultilinearMixin.polarize_matrix(
                    lambda x, n=n, U=U: shape_matrix(alg, gram, x, n).scaled(U), n, alg.dim)
                if expected != series.component(n):
                    raise ShapeMismatchException(n)
        LOGGER.info("Extracted U sequence of length {}".format(len(values)))
        return USequence(values)

    @staticmethod
    def recurrence_residual(U, n):
        """U_2n - 1/2 [sum_{r<n} U_{2r+1} U_{2(n-r)-1} - sum_{0<r<n} U_2r U_{2(n-r)}]"""
        odd = sum((U[2 * r + 1] * U[2 * (n - r) - 1] for r in range(n)), ZERO)
        even = sum((U[2 * r] * U[2 * (n - r)] for r in range(1, n)), ZERO)
        return U[2 * n] - (odd - even) / 2

    @staticmethod
    def check_U_recurrence(U):
        residuals = []
        first_failure = None
        for n in range(1, U.N // 2 + 1):
            residual = RigidityMixin.recurrence_residual(U, n)
            residuals.append({'index': 2 * n, 'residual': residual})
            if residual != 0 and first_failure is None:
                first_failure = 2 * n
        return CheckResult('U_recurrence', first_failure is None,
                           {'residuals': residuals, 'first_failure': first_failure}, first_failure)

    @staticmethod
    def V_nm(a, n, m):
        """sum over k_1 + 2k_2 + ... + m k_m = m, k_0 = n - sum k_i >= 0 of prod a_i^k_i / (k_0! prod k_i!)"""
        total = ZERO
        for counts in partitions(m):
            k0 = n - sum(counts.values())
            if k0 < 0:
                continue
            denominator = factorial(k0)
            for count in counts.values():
                denominator *= factorial(count)
            term = Fraction(1, denominator)
            for i, count in counts.items():
                term = term * _coefficient(a, i) ** count
            total = total + term
        return total

    @staticmethod
    def jet_partials(a, n, m):
        """Gradient of V_nm with respect to a_1..a_m at the rational point a"""
        a = vector(a)
        jets = [Jet.variable(_coefficient(a, l), l - 1, m) for l in range(1, m + 1)]
        value = RigidityMixin.V_nm(jets, n, m)
        if isinstance(value, Jet):
            return value.grad
        return (ZERO,) * m

    @staticmethod
    def check_jet_identity(a, n, m):
        """d V_nm / d a_l = V_{n-1, m-l}(a_1..a_{m-l}) for every l"""
        grad = RigidityMixin.jet_partials(a, n, m)
        a = vector(a)
        for l in range(1, m + 1):
            expected = RigidityMixin.V_nm(a[:m - l], n - 1, m - l)
            if grad[l - 1] != expected:
                return CheckResult('jet_identity', False,
                                   {'n': n, 'm': m, 'l': l, 'derivative': grad[l - 1],
                                    'expected': expected}, l)
        return CheckResult('jet_identity', True, {'n': n, 'm': m})

    @staticmethod
    def solve_a_from_U(U):
        """a_n = U_{2n+1} - sum_{p=1..n} V_{2p+1,n-p}(a_1..a_{n-p}), then the even equations"""
        recurrence = RigidityMixin.check_U_recurrence(U)
        if not recurrence.ok:
            index = recurrence.witness
            residual = next(entry['residual'] for entry in recurrence.details['residuals']
                            if entry['index'] == index)
            raise RecurrenceViolationException(index, residual)
        a = []
        for n in range(1, (U.N - 1) // 2 + 1):
            known = sum((RigidityMixin.V_nm(a, 2 * p + 1, n - p) for p in range(1, n + 1)), ZERO)
            a.append(U[2 * n + 1] - known)
        for n in range(1, U.N // 2 + 1):
            residual = U[2 * n] - sum((RigidityMixin.V_nm(a, 2 * p, n - p) for p in range(1, n + 1)),
                                      ZERO)
            if residual != 0:
                raise EvenEquationResidualException(2 * n, residual)
        LOGGER.info("Recovered {} F coefficients".format(len(a)))
        return FCoeffs(a)

    @staticmethod
    def rigidity_roundtrip(alg, a, N):
        """series_from_F, extract_U, check_U_recurrence and solve_a_from_U in a row"""
        if not isinstance(a, FCoeffs):
            a = FCoeffs(vector(a))
        P = InvariantsMixin.build_P(alg, 1)
        series = RackSeriesMixin.series_from_F(alg, P, a, N)
        U = RigidityMixin.extract_U(series)
        recurrence = RigidityMixin.check_U_recurrence(U)
        recovered = RigidityMixin.solve_a_from_U(U)
        n_max = (N - 1) // 2
        roundtrip_ok = recovered.padded(n_max) == a.padded(n_max)
        return CheckResult('rigidity_roundtrip', recurrence.ok and roundtrip_ok,
                           {'U': list(U.values), 'a': list(recovered.values),
                            'recurrence_ok': recurrence.ok, 'roundtrip_ok': roundtrip_ok})

    @staticmethod
    def check_ad_square_bracket(alg, degree=4):
        """[ad_x^2 y, ad_x^2 z] + <x,x> [[x,y],[x,z]] = 0 on the degree 4 grid in x and basis y, z"""
        gram = LeibnizMixin.gram_matrix(alg)
        for k in grid(alg.dim, degree):
            x = grid_vector(k)
            ad = alg.ad(x)
            square = ad.compose(ad)
            u = LeibnizMixin.trace_form_with(gram, x, x)
            for i, j in product(range(alg.dim), repeat=2):
                value = add(alg.bracket(square.column(i), square.column(j)),
                            scale(u, alg.bracket(ad.column(i), ad.column(j))))
                if not is_zero(value):
                    return CheckResult('ad_square_bracket', False,
                                       {'x': list(k), 'y': i, 'z': j, 'residual': value}, k)
        return CheckResult('ad_square_bracket', True, {})

    @staticmethod
    def binomial_identity_residual(n):
        """sum_r 1/((2r)!(2n-2r)!) - sum_r 1/((2r+1)!(2n-2r-1)!)"""
        even = sum((Fraction(1, factorial(2 * r) * factorial(2 * (n - r))) for r in range(n + 1)),
                   ZERO)
        odd = sum((Fraction(1, factorial(2 * r + 1) * factorial(2 * (n - r) - 1)) for r in range(n)),
                  ZERO)
        return even - odd
