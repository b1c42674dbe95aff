"""Mixins for partially symmetric multilinear maps: evaluation, polarization and the invariance operator"""
from itertools import product
from math import comb, factorial

from src.config import LOGGER
from src.exceptions import DimensionMismatchException
from src.models import (ZERO, ONE, PartSymMap, SymForm, MatrixQ, basis_vector, check_dim,
                        counts_of, multisets, add, sub, scale, zero_vector)


def sub_counts(counts):
    """All count vectors k with 0 <= k_i <= counts_i"""
    return product(*(range(c + 1) for c in counts))


def grid(dim, n):
    """Nonzero count vectors of total size at most n: the polarization grid of degree n"""
    for k in product(range(n + 1), repeat=dim):
        total = sum(k)
        if 0 < total <= n:
            yield k


def grid_vector(k):
    return tuple(ONE * a for a in k)


def polar_weight(counts, k):
    weight = 1
    for c, ki in zip(counts, k):
        weight *= comb(c, ki)
    return weight


def polar_coefficients(values, n, dim):
    """
    Coefficients of the polar form of a degree-n homogeneous map given by its values on grid
    points, values(k) -> flat tuple. Inclusion-exclusion over subset sums grouped by counts:
    P(e_mu) = 1/n! sum_{k <= c(mu)} (-1)^(n-|k|) prod C(c_i, k_i) values(k).
    """
    cache = {}
    result = {}
    scale_factor = ONE / factorial(n)
    for mu in multisets(dim, n):
        counts = counts_of(mu, dim)
        total = None
        for k in sub_counts(counts):
            size = sum(k)
            if size == 0 and n > 0:
                continue
            if k not in cache:
                cache[k] = values(k)
            value = cache[k]
            weight = polar_weight(counts, k) * (-1 if (n - size) % 2 else 1)
            if total is None:
                total = [ZERO] * len(value)
            for index, a in enumerate(value):
                if a != 0:
                    total[index] += weight * a
        if total is not None:
            result[mu] = tuple(scale_factor * a for a in total)
    return result


class MultilinearMixin(object):
    """Polarization and invariance of PartSymMap / SymForm values"""

    @staticmethod
    def eval(map_, xs, y):
        return map_.eval(xs, y)

    @staticmethod
    def bracket_map(alg):
        """The bracket as a map symmetric in its first (single) argument"""
        return PartSymMap(1, alg.dim, {((i,), j): alg.c[i][j]
                                       for i in range(alg.dim) for j in range(alg.dim)})

    @staticmethod
    def polarize_matrix(diag_matrix, n, dim):
        """PartSymMap whose diagonal x -> A(x..x, .) is the matrix valued diag_matrix"""

        def values(k):
            matrix = diag_matrix(grid_vector(k))
            return tuple(a for column in matrix.columns() for a in column)

        coefficients = polar_coefficients(values, n, dim)
        coeffs = {}
        for mu, flat in coefficients.items():
            for j in range(dim):
                coeffs[(mu, j)] = flat[j * dim:(j + 1) * dim]
        return PartSymMap(n, dim, coeffs)

    @staticmethod
    def polarize(diag, n, dim):
        """The unique PartSymMap P with P(x, ..., x, y) = diag(x, y)"""
        basis = [basis_vector(dim, j) for j in range(dim)]

        def diag_matrix(x):
            return MatrixQ.from_columns([diag(x, e) for e in basis], dim)

        return MultilinearMixin.polarize_matrix(diag_matrix, n, dim)

    @staticmethod
    def polarize_form(diag, p, dim, is_vector=True):
        """Symmetric p-linear form restricting to diag on the diagonal"""

        def values(k):
            value = diag(grid_vector(k))
            return tuple(value) if is_vector else (value,)

        coefficients = polar_coefficients(values, p, dim)
        if is_vector:
            return SymForm(p, dim, coefficients, True)
        return SymForm(p, dim, {mu: flat[0] for mu, flat in coefficients.items()})

    @staticmethod
    def verify_polarization(map_, diag_matrix):
        """Grid points where the diagonal of map_ differs from diag_matrix"""
        mismatches = []
        for k in grid(map_.dim, max(map_.n, 1)):
            x = grid_vector(k)
            if map_.diagonal_matrix(x) != diag_matrix(x):
                mismatches.append(k)
        if mismatches:
            LOGGER.warning("Polarization mismatch on {} grid points".format(len(mismatches)))
        return mismatches

    @staticmethod
    def _replace_slot(values, mu, slot_value, dim):
        """sum_l v_l values(sorted(mu + (l,))) for the vector v = slot_value"""
        total = None
        for l, v in enumerate(slot_value):
            if v == 0:
                continue
            value = values(tuple(sorted(mu + (l,))))
            if value is None:
                continue
            if total is None:
                total = zero_vector(dim) if isinstance(value, tuple) else ZERO
            total = add(total, scale(v, value)) if isinstance(value, tuple) else total + v * value
        return total

    @staticmethod
    def _slot_terms(values, mu, ad_x, dim):
        """sum over the symmetric slots of the value with slot r replaced by [x, e_{mu_r}]"""
        total = None
        distinct = sorted(set(mu))
        for i in distinct:
            multiplicity = mu.count(i)
            rest = list(mu)
            rest.remove(i)
            term = MultilinearMixin._replace_slot(values, tuple(rest), ad_x.column(i), dim)
            if term is None:
                continue
            term = scale(multiplicity, term) if isinstance(term, tuple) else multiplicity * term
            if total is None:
                total = term
            else:
                total = add(total, term) if isinstance(term, tuple) else total + term
        return total

    @staticmethod
    def lie_derivative(alg, map_, x):
        """
        [x, A(y_1, ...)] - sum_i A(y_1, ..., [x, y_i], ...) as a map of the same shape.
        Scalar forms drop the leading bracket term.
        """
        if map_.dim != alg.dim:
            raise DimensionMismatchException(alg.dim, map_.dim, "map")
        check_dim(x, alg.dim)
        dim = alg.dim
        ad_x = alg.ad(x)
        if isinstance(map_, PartSymMap):
            coeffs = {}
            for mu in multisets(dim, map_.n):
                for j in range(dim):
                    own = map_.coeffs.get((mu, j))
                    value = ad_x.apply(own) if own is not None else zero_vector(dim)
                    slots = MultilinearMixin._slot_terms(
                        lambda nu, j=j: map_.coeffs.get((nu, j)), mu, ad_x, dim)
                    if slots is not None:
                        value = sub(value, slots)
                    # the last slot
                    last = zero_vector(dim)
                    for l, v in enumerate(ad_x.column(j)):
                        if v != 0 and (mu, l) in map_.coeffs:
                            last = add(last, scale(v, map_.coeffs[(mu, l)]))
                    coeffs[(mu, j)] = sub(value, last)
            return PartSymMap(map_.n, dim, coeffs)
        coeffs = {}
        for mu in multisets(dim, map_.p):
            slots = MultilinearMixin._slot_terms(lambda nu: map_.coeffs.get(nu), mu, ad_x, dim)
            if map_.is_vector:
                own = map_.coeffs.get(mu)
                value = ad_x.apply(own) if own is not None else zero_vector(dim)
                coeffs[mu] = sub(value, slots) if slots is not None else value
            else:
                coeffs[mu] = -slots if slots is not None else ZERO
        return SymForm(map_.p, dim, coeffs, map_.is_vector)

    @staticmethod
    def is_invariant(alg, map_):
        for i in range(alg.dim):
            if not MultilinearMixin.lie_derivative(alg, map_, alg.e(i)).is_zero():
                LOGGER.debug("Not invariant under e_{}".format(i))
                return False
        return True
