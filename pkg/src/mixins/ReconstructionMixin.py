"""Mixins for recovering the invariant maps B_n of a rack series and rebuilding series from them"""
from fractions import Fraction
from itertools import permutations
from math import factorial

from src.config import LOGGER
from src.exceptions import (CohomologyObstructionException, InsufficientOrderException,
                            InvarianceFailureException, MalformedInputException, NonInvariantFormException,
                            NontrivialCohomologyException, NotACocycleException)
from src.mixins.CohomologyMixin import CohomologyMixin
from src.mixins.MultilinearMixin import MultilinearMixin, grid, grid_vector
from src.mixins.RackSeriesMixin import ad_powers, require_leibniz
from src.models import (CheckResult, MatrixQ, RackSeries, add, basis_vector, is_zero, scale, sub,
                        zero_vector)


def compositions(total, min_part=2):
    """Ordered tuples of parts >= min_part whose sum is at most total"""
    if total < min_part:
        return
    for first in range(min_part, total + 1):
        yield (first,)
        for rest in compositions(total - first, min_part):
            yield (first,) + rest


def canonical_operator(alg, us):
    """Matrix of y -> A0_k(u_1, ..., u_k, y) = 1/(k!)^2 sum_s ad_{u_s(1)} ... ad_{u_s(k)} y"""
    k = len(us)
    ads = [alg.ad(u) for u in us]
    total = MatrixQ.zero(alg.dim, alg.dim)
    for order in permutations(range(k)):
        product_matrix = MatrixQ.identity(alg.dim)
        for index in order:
            product_matrix = product_matrix.compose(ads[index])
        total = total + product_matrix
    return total.scaled(Fraction(1, factorial(k) ** 2))


def composite_terms(alg, n, b_values, powers, include_top=True):
    """
    (F, G) pairs of the degree n formula: F = A0_k(B_l1(x), ..., B_lk(x), .) and
    G = ad_x^(n-s) / (n-s)! for each composition (l_1, ..., l_k), s = l_1 + ... + l_k <= n
    """
    terms = []
    for parts in compositions(n):
        if not include_top and parts == (n,):
            continue
        if any(l not in b_values for l in parts):
            continue
        s = sum(parts)
        F = canonical_operator(alg, [b_values[l] for l in parts])
        if F.is_zero():
            continue
        G = powers[n - s].scaled(Fraction(1, factorial(n - s)))
        terms.append((parts, F, G))
    return terms


def formula_matrix(alg, n, b_values, powers, include_top=True):
    """A0_n(x, .) plus every composite term"""
    total = powers[n].scaled(Fraction(1, factorial(n)))
    for _, F, G in composite_terms(alg, n, b_values, powers, include_top):
        total = total + F.compose(G)
    return total


def displayed_formula(alg, n, b_values, x, y):
    """
    A_n(x, y) for n = 3, 4, 5 written term by term:
      A_3 = A0_3 + [B_2, A0_1] + [B_3, y]
      A_4 = A0_4 + [B_4, y] + [B_3, A0_1] + [B_2, A0_2] + 1/2 [B_2, [B_2, y]]
      A_5 = A0_5 + [B_5, y] + [B_4, A0_1] + [B_3, A0_2] + [B_2, A0_3]
            + 1/2 ([B_2, [B_3, y]] + [B_3, [B_2, y]]) + 1/2 [B_2, [B_2, A0_1]]
    with B_l = B_l(x) and A0_m = ad_x^m y / m!; missing B_l are zero
    """
    if n not in (3, 4, 5):
        raise MalformedInputException("Displayed formulas exist for n = 3, 4, 5, got {}".format(n))
    zero = zero_vector(alg.dim)
    b = {l: b_values.get(l, zero) for l in (2, 3, 4, 5)}
    powers = ad_powers(alg, x, n)
    half = Fraction(1, 2)

    def a0(m):
        return scale(Fraction(1, factorial(m)), powers[m].apply(y))

    def br(u, v):
        return alg.bracket(u, v)

    if n == 3:
        terms = [a0(3), br(b[2], a0(1)), br(b[3], y)]
    elif n == 4:
        terms = [a0(4), br(b[4], y), br(b[3], a0(1)), br(b[2], a0(2)),
                 scale(half, br(b[2], br(b[2], y)))]
    else:
        terms = [a0(5), br(b[5], y), br(b[4], a0(1)), br(b[3], a0(2)), br(b[2], a0(3)),
                 scale(half, add(br(b[2], br(b[3], y)), br(b[3], br(b[2], y)))),
                 scale(half, br(b[2], br(b[2], a0(1))))]
    total = zero
    for term in terms:
        total = add(total, term)
    return total


class ReconstructionMixin(object):
    """Inductive recovery of the B_n data and forward construction of series"""

    @staticmethod
    def _diagonal_values(B, x, below):
        return {l: form.diagonal(x) for l, form in B.items() if l < below}

    @staticmethod
    def recover_B(series):
        """
        Yields (n, B_n) for n = 2..N in order; a failing degree raises after the degrees
        before it have been yielded
        """
        alg = series.alg
        h0, h1 = CohomologyMixin.cohomology_dims(alg)
        if (h0, h1) != (0, 0):
            raise NontrivialCohomologyException(h0, h1)
        if series.N >= 1 and series.component(1) != MultilinearMixin.bracket_map(alg):
            raise MalformedInputException("A_1 is not the bracket of the algebra")
        dim = alg.dim
        B = {}
        for n in range(2, series.N + 1):
            LOGGER.info("Recovering B_{}".format(n))
            values = {}
            for k in grid(dim, n):
                x = grid_vector(k)
                powers = ad_powers(alg, x, n)
                b_values = ReconstructionMixin._diagonal_values(B, x, n)
                defect = series.component(n).diagonal_matrix(x) - \
                    formula_matrix(alg, n, b_values, powers, include_top=False)
                try:
                    values[k] = CohomologyMixin.solve_coboundary(alg, defect)
                except NotACocycleException as exc:
                    LOGGER.info("Obstruction at degree {} on grid point {}".format(n, k))
                    raise CohomologyObstructionException(n, {'x': list(k), 'detail': exc.witness})
            form = MultilinearMixin.polarize_form(lambda k: values[k], n, dim)
            for k, value in values.items():
                if form.diagonal(grid_vector(k)) != value:
                    raise InvarianceFailureException(n)
            if not MultilinearMixin.is_invariant(alg, form):
                raise InvarianceFailureException(n)
            B[n] = form
            yield n, form

    @staticmethod
    def reconstruct_B(series):
        """Invariant symmetric B_2..B_N with A_n = A0_n + composite terms, as {arity: SymForm}"""
        return dict(ReconstructionMixin.recover_B(series))

    @staticmethod
    def build_series_from_B(alg, B, N):
        """Forward substitution of {arity: SymForm} into A_n = A0_n + composite terms"""
        require_leibniz(alg)
        for l, form in B.items():
            if not form.is_vector or form.p != l or l < 2:
                raise MalformedInputException("B_{} must be a vector valued form of arity {}"
                                              .format(l, l))
            if not MultilinearMixin.is_invariant(alg, form):
                raise NonInvariantFormException("B_{}".format(l))
        cache = {}

        def data(x):
            if x not in cache:
                cache[x] = (ad_powers(alg, x, N), {l: form.diagonal(x) for l, form in B.items()})
            return cache[x]

        def diag_matrix(x, n):
            powers, b_values = data(x)
            return formula_matrix(alg, n, b_values, powers)

        maps = [MultilinearMixin.polarize_matrix(lambda x, n=n: diag_matrix(x, n), n, alg.dim)
                for n in range(1, N + 1)]
        return RackSeries(alg, maps)

    @staticmethod
    def check_composite_coboundaries(alg, B, n, x):
        """For every composite term F_k o G_s of degree n at x, delta(F o G) by the composition rule"""
        powers = ad_powers(alg, x, n)
        b_values = ReconstructionMixin._diagonal_values(B, x, n + 1)
        results = []
        for parts, F, G in composite_terms(alg, n, b_values, powers):
            rule = CohomologyMixin.check_composition_rule(alg, F, G)
            results.append(CheckResult('composite{}'.format(list(parts)), rule.ok,
                                       dict(rule.details, parts=list(parts))))
        return results

    @staticmethod
    def check_displayed_formulas(alg, b_values, x):
        """The composite sum at degrees 3, 4, 5 against the term by term formulas, any B values"""
        for n in (3, 4, 5):
            matrix = formula_matrix(alg, n, b_values, ad_powers(alg, x, n))
            for j in range(alg.dim):
                y = basis_vector(alg.dim, j)
                residual = sub(matrix.apply(y), displayed_formula(alg, n, b_values, x, y))
                if not is_zero(residual):
                    return CheckResult('displayed_formulas', False,
                                       {'n': n, 'y': j, 'residual': residual}, (n, j))
        return CheckResult('displayed_formulas', True, {'degrees': [3, 4, 5]})

    @staticmethod
    def check_displayed_formulas_on_series(series, B, points):
        """A_3, A_4, A_5 of a built series agree with the term by term formulas at each x"""
        if series.N < 5:
            raise InsufficientOrderException(5, series.N)
        alg = series.alg
        for x in points:
            b_values = {l: form.diagonal(x) for l, form in B.items()}
            for n in (3, 4, 5):
                for j in range(alg.dim):
                    y = basis_vector(alg.dim, j)
                    residual = sub(series.component(n).diagonal(x, y),
                                   displayed_formula(alg, n, b_values, x, y))
                    if not is_zero(residual):
                        return CheckResult('displayed_formulas', False,
                                           {'n': n, 'x': list(x), 'y': j, 'residual': residual},
                                           (n, j))
        return CheckResult('displayed_formulas', True, {'points': len(points)})
