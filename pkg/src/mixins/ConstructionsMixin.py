"""Mixins for explicit linear rack constructions evaluated in floating point"""

import numpy
from scipy import linalg

from src.config import LOGGER, RACK_SAMPLES, RACK_SEED, RACK_TOL
from src.exceptions import (CommutationException, HypothesisException, MalformedInputException,
                            NonInvariantFormException)
from src.mixins.LeibnizMixin import LeibnizMixin
from src.mixins.LinearAlgebraMixin import LinearAlgebraMixin
from src.mixins.MultilinearMixin import MultilinearMixin
from src.mixins.RackSeriesMixin import RackSeriesMixin, require_leibniz
from src.models import (ZERO, ONE, FloatRack, FCoeffs, CheckResult, Subspace, check_dim, dot,
                        multinomial, scale, vector, is_zero)

POINTED_TOL = 1e-12
DET_TOL = 1e-12


def structure_tensor(alg):
    return numpy.array([[[float(c) for c in cell] for cell in row] for row in alg.c])


def float_ad(tensor, x):
    """Matrix of y -> [x, y]"""
    return numpy.einsum('i,ijk->kj', x, tensor)


def float_form(P):
    """x -> P(x, ..., x) for a scalar SymForm, evaluated in floats"""
    terms = [(float(multinomial(mu) * value), mu) for mu, value in P.coeffs.items()]

    def evaluate(x):
        total = 0.0
        for weight, mu in terms:
            term = weight
            for i in mu:
                term *= x[i]
            total += term
        return total

    return evaluate


def polynomial(coefficients, constant=0.0):
    """t -> constant + c_1 t + c_2 t^2 + ..."""
    values = [float(c) for c in coefficients]

    def evaluate(t):
        result = 0.0
        for c in reversed(values):
            result = (result + c) * t
        return constant + result

    return evaluate


def sample_ball(rng, dim, count):
    """count points uniformly distributed in the unit ball of R^dim"""
    directions = rng.normal(size=(count, dim))
    directions /= numpy.linalg.norm(directions, axis=1)[:, None]
    radii = rng.uniform(size=count) ** (1.0 / dim)
    return directions * radii[:, None]


def translation_matrix(rack, x):
    """Matrix of L_x from the images of the basis"""
    return numpy.column_stack([rack(x, e) for e in numpy.eye(rack.dim)])


def _validate_membership(vectors, subspace, what):
    for v in vectors:
        if not LinearAlgebraMixin.contains(subspace, v):
            raise HypothesisException("{} {} is outside the required subspace".format(
                what, [str(a) for a in v]))


class ConstructionsMixin(object):
    """Racks built from exp(ad) deformations, with sampled verification of the rack axioms"""

    @staticmethod
    def canonical_rack(alg):
        require_leibniz(alg)
        tensor = structure_tensor(alg)
        return FloatRack(alg.dim, lambda x, y: linalg.expm(float_ad(tensor, x)) @ y, 'canonical')

    @staticmethod
    def pr1_rack(alg, P, coefficients=(), constant=1):
        """x |> y = exp(F(P(x, ..., x)) ad_x)(y) with F(u) = constant + sum c_k u^k"""
        require_leibniz(alg)
        if P.is_vector:
            raise MalformedInputException("P must be scalar valued")
        if not MultilinearMixin.is_invariant(alg, P):
            raise NonInvariantFormException("form P")
        tensor = structure_tensor(alg)
        form = float_form(P)
        F = polynomial(coefficients, float(constant))

        def op(x, y):
            return linalg.expm(F(form(x)) * float_ad(tensor, x)) @ y

        return FloatRack(alg.dim, op, 'pr1',
                         {'constant': float(constant), 'coefficients': [float(c) for c in coefficients],
                          'arity': P.p})

    @staticmethod
    def quadratic_twist(alg):
        """J(x) = <x, x> x for the trace form, a twisting map of the canonical rack"""
        form = numpy.array([[float(a) for a in row] for row in LeibnizMixin.gram_matrix(alg).entries])

        def J(x):
            return (x @ form @ x) * x

        return J

    @staticmethod
    def twist_rack(rack, J, samples=RACK_SAMPLES, seed=RACK_SEED, tol=RACK_TOL):
        """x |>_J y = J(x) |> y, for J commuting with every left translation"""
        rng = numpy.random.default_rng(seed)
        points = sample_ball(rng, rack.dim, 2 * samples)
        worst = 0.0
        for x, y in zip(points[:samples], points[samples:]):
            residual = numpy.linalg.norm(J(rack(x, y)) - rack(x, J(y)))
            worst = max(worst, residual)
        if worst >= tol:
            raise CommutationException(worst)
        return FloatRack(rack.dim, lambda x, y: rack(J(x), y), 'twist({})'.format(rack.label),
                         dict(rack.params, commutation_residual=worst))

    @staticmethod
    def pr22_subspace(alg):
        """[h,h]^perp intersected with Z(h)^perp for the coordinate dot product"""
        derived = LeibnizMixin.derived(alg)
        center = LeibnizMixin.center(alg)
        return LinearAlgebraMixin.orthogonal_complement(LinearAlgebraMixin.subspace_sum(derived, center))

    @staticmethod
    def pr22_rack(alg, pairs, centers, functions):
        """
        x |> y = exp(ad_x)(y) + sum_j <y, b_j> f_j(<x, a_j>) z_j with the coordinate dot product.
        pairs holds (a_j, b_j), functions holds the coefficients (c_0, c_1, ...) of f_j(t) = sum c_k t^k.
        """
        require_leibniz(alg)
        if not len(pairs) == len(centers) == len(functions):
            raise MalformedInputException("pairs, centers and functions must have the same length")
        pairs = [(vector(a), vector(b)) for a, b in pairs]
        centers = [vector(z) for z in centers]
        for a, b in pairs:
            check_dim(a, alg.dim)
            check_dim(b, alg.dim)
        allowed = ConstructionsMixin.pr22_subspace(alg)
        _validate_membership([v for pair in pairs for v in pair], allowed, "Vector")
        _validate_membership(centers, LeibnizMixin.center(alg), "Center")
        coefficient_lists = [vector(f) for f in functions]
        for f in coefficient_lists:
            if f and f[0] != 0:
                raise HypothesisException("f_j(0) must vanish")
        flat_derivative = all(len(f) < 2 or f[1] == 0 for f in coefficient_lists)
        return ConstructionsMixin.deformed_rack(alg, pairs, centers, coefficient_lists, 'pr22',
                                                {'terms': len(pairs),
                                                 'flat_derivative': flat_derivative})

    @staticmethod
    def deformed_rack(alg, pairs, centers, functions, label, params=None):
        """exp(ad_x)(y) + sum_j <y, b_j> f_j(<x, a_j>) z_j without any hypothesis check"""
        tensor = structure_tensor(alg)
        terms = [(numpy.array([float(c) for c in a]), numpy.array([float(c) for c in b]),
                  numpy.array([float(c) for c in z]), polynomial(f[1:]))
                 for (a, b), z, f in zip(pairs, centers, functions)]

        def op(x, y):
            result = linalg.expm(float_ad(tensor, x)) @ y
            for a, b, z, f in terms:
                result = result + (y @ b) * f(x @ a) * z
            return result

        return FloatRack(alg.dim, op, label, params or {})

    @staticmethod
    def _co_vectors(alg, case):
        derived = LeibnizMixin.derived(alg)
        center = LeibnizMixin.center(alg)
        if not center.basis:
            raise HypothesisException("Center of {} is zero".format(alg))
        derived_perp = LinearAlgebraMixin.orthogonal_complement(derived)
        if case == 1:
            preferred = LinearAlgebraMixin.intersection(
                derived_perp, LinearAlgebraMixin.orthogonal_complement(center))
            candidates = list(center.basis)
        else:
            preferred = Subspace(alg.dim)
            candidates = [z for z in center.basis if not LinearAlgebraMixin.contains(derived, z)]
        for z in candidates:
            if preferred.basis:
                return preferred.basis[0], z
            line = LinearAlgebraMixin.span([z], alg.dim)
            choices = LinearAlgebraMixin.intersection(derived_perp,
                                                      LinearAlgebraMixin.orthogonal_complement(line))
            if choices.basis:
                return choices.basis[0], z
        raise HypothesisException("No central z and a with <a, [h,h]> = <a, z> = 0 on {}".format(alg))

    @staticmethod
    def co_counterexample(alg, case=1, samples=RACK_SAMPLES, seed=RACK_SEED, tol=RACK_TOL):
        """
        x |> y = exp(ad_x)(y) + <x,a>^2 <y,a> z with z central. Case 1 certifies a |> a != a,
        case 2 (z outside [h,h]) certifies that a |> a - exp(ad_a)(a) = |a|^6 z is outside [h,h].
        """
        require_leibniz(alg)
        if case not in (1, 2):
            raise MalformedInputException("Unknown case {}".format(case))
        a, z = ConstructionsMixin._co_vectors(alg, case)
        if not is_zero(alg.bracket(a, a)):
            raise HypothesisException("[a, a] does not vanish")
        size = dot(a, a)
        # exp(ad_a)(a) = a since [a, a] = 0
        deformation = scale(size ** 3, z)
        if case == 1:
            certified = not is_zero(deformation)
        else:
            certified = not LinearAlgebraMixin.contains(LeibnizMixin.derived(alg), deformation)
        rack = ConstructionsMixin.deformed_rack(alg, [(a, a)], [z], [(ZERO, ZERO, ONE)],
                                                'co[{}]'.format(case))
        checks = ConstructionsMixin.check_float_rack(rack, samples, seed, tol)
        LOGGER.info("Deformed rack on {} with a={} z={}".format(alg, a, z))
        ok = certified and all(check.ok for check in checks)
        return CheckResult('co_counterexample[{}]'.format(case), ok,
                           {'case': case, 'a': a, 'z': z, 'certificate': deformation,
                            'certified': certified,
                            'sampled': {check.name: check.details for check in checks}})

    @staticmethod
    def check_float_rack(rack, samples=RACK_SAMPLES, seed=RACK_SEED, tol=RACK_TOL):
        """Self-distributivity, pointedness, bijectivity and linearity on seeded samples"""
        rng = numpy.random.default_rng(seed)
        points = sample_ball(rng, rack.dim, 3 * samples)
        xs, ys, zs = points[:samples], points[samples:2 * samples], points[2 * samples:]
        alphas = rng.uniform(-1.0, 1.0, size=(samples, 2))
        zero = numpy.zeros(rack.dim)
        distributivity = pointed = linearity = 0.0
        smallest_det = numpy.inf
        for x, y, z, (alpha, beta) in zip(xs, ys, zs, alphas):
            left = rack(x, rack(y, z))
            right = rack(rack(x, y), rack(x, z))
            distributivity = max(distributivity, numpy.linalg.norm(left - right))
            pointed = max(pointed, numpy.linalg.norm(rack(x, zero)),
                          numpy.linalg.norm(rack(zero, y) - y))
            combined = rack(x, alpha * y + beta * z) - alpha * rack(x, y) - beta * rack(x, z)
            linearity = max(linearity, numpy.linalg.norm(combined))
            smallest_det = min(smallest_det, abs(numpy.linalg.det(translation_matrix(rack, x))))
        LOGGER.debug("Sampled {} rack: distributivity {} pointed {}".format(
            rack.label, distributivity, pointed))
        return [
            CheckResult('sampled_self_distributivity', bool(distributivity < tol),
                        {'max_residual': float(distributivity)}),
            CheckResult('sampled_pointedness', bool(pointed < POINTED_TOL),
                        {'max_residual': float(pointed)}),
            CheckResult('sampled_bijectivity', bool(smallest_det > DET_TOL),
                        {'min_abs_det': float(smallest_det)}),
            CheckResult('sampled_linearity', bool(linearity < tol), {'max_residual': float(linearity)}),
        ]

    @staticmethod
    def extracted_bracket(rack, eps=1e-4):
        """[e_i, e_j] as (L_{eps e_i} e_j - L_{-eps e_i} e_j) / (2 eps), indexed [i, j, k]"""
        identity = numpy.eye(rack.dim)
        result = numpy.zeros((rack.dim, rack.dim, rack.dim))
        for i in range(rack.dim):
            for j in range(rack.dim):
                forward = rack(eps * identity[i], identity[j])
                backward = rack(-eps * identity[i], identity[j])
                result[i, j] = (forward - backward) / (2 * eps)
        return result

    @staticmethod
    def check_extracted_bracket(rack, alg, factor=1, tol=1e-6):
        """The bracket read off the rack equals factor times the bracket of alg"""
        residual = numpy.abs(ConstructionsMixin.extracted_bracket(rack) -
                             float(factor) * structure_tensor(alg)).max()
        return CheckResult('extracted_bracket', bool(residual < tol), {'max_residual': float(residual)})

    @staticmethod
    def truncation_tail_bound(alg, P, a, N, x):
        """
        Bound on |sum_{n > N} A_n(x, ..., x, y)| / |y| for exp(F(P(x)) ad_x), from the majorant
        exp(rho s phi(|P(x)| s^p)) at s = 1 with rho the Frobenius norm of ad_x and
        phi(v) = 1 + sum |a_k| v^k
        """
        if not isinstance(a, FCoeffs):
            a = FCoeffs(vector(a))
        x = numpy.array([float(c) for c in x])
        rho = float(numpy.linalg.norm(float_ad(structure_tensor(alg), x)))
        q = abs(float_form(P)(x))
        p = P.p
        # g(s) = rho s phi(q s^p) as a polynomial in s truncated at N
        g = numpy.zeros(N + 1)
        if N >= 1:
            g[1] = rho
        for k in range(1, a.m + 1):
            degree = 1 + p * k
            if degree <= N:
                g[degree] += rho * abs(float(a.get(k))) * q ** k
        h = numpy.zeros(N + 1)
        h[0] = 1.0
        for n in range(1, N + 1):
            h[n] = sum(k * g[k] * h[n - k] for k in range(1, n + 1)) / n
        total = numpy.exp(rho * (1.0 + sum(abs(float(a.get(k))) * q ** k for k in range(1, a.m + 1))))
        return float(max(total - h.sum(), 0.0))

    @staticmethod
    def check_truncation(alg, P, a, N, points, tol=1e-12):
        """pr1_rack against eval_truncated of series_from_F, within the tail bound"""
        if not isinstance(a, FCoeffs):
            a = FCoeffs(vector(a))
        series = RackSeriesMixin.series_from_F(alg, P, a, N)
        rack = ConstructionsMixin.pr1_rack(alg, P, a.values)
        worst = None
        for x, y in points:
            x, y = vector(x), vector(y)
            exact = numpy.array([float(c) for c in RackSeriesMixin.eval_truncated(series, x, y)])
            numeric = rack(numpy.array([float(c) for c in x]), numpy.array([float(c) for c in y]))
            bound = ConstructionsMixin.truncation_tail_bound(alg, P, a, N, x) * \
                numpy.linalg.norm([float(c) for c in y])
            gap = float(numpy.linalg.norm(numeric - exact))
            if gap > bound + tol:
                return CheckResult('truncation', False, {'x': x, 'y': y, 'gap': gap, 'bound': bound},
                                   (x, y))
            worst = gap if worst is None else max(worst, gap)
        return CheckResult('truncation', True, {'order': N, 'max_gap': worst})


