"""Mixins for invariant symmetric forms and the P_n, B_n families built from the trace form"""
from fractions import Fraction
from itertools import permutations
from math import factorial

from src.config import LOGGER
from src.mixins.LeibnizMixin import LeibnizMixin
from src.mixins.LinearAlgebraMixin import LinearAlgebraMixin
from src.mixins.MultilinearMixin import MultilinearMixin
from src.models import ZERO, ONE, MatrixQ, SymForm, CheckResult, add, scale, multisets, zero_vector


def perfect_matchings(positions):
    """All ways of pairing up the given positions"""
    if not positions:
        yield ()
        return
    first = positions[0]
    for index in range(1, len(positions)):
        pair = (first, positions[index])
        rest = positions[1:index] + positions[index + 1:]
        for matching in perfect_matchings(rest):
            yield (pair,) + matching


def double_factorial(n):
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def flatten_form(form):
    flat = []
    for mu in multisets(form.dim, form.p):
        value = form.value(mu)
        if form.is_vector:
            flat.extend(value)
        else:
            flat.append(value)
    return tuple(flat)


class InvariantsMixin(object):
    """Invariant symmetric multilinear maps and their dimension counts"""

    @staticmethod
    def invariant_basis(alg, n):
        """Basis of symmetric n-linear B with [y, B(x..)] = sum_i B(.., [y, x_i], ..) for all y"""
        dim = alg.dim
        mus = list(multisets(dim, n))
        unknown = {}
        for mu in mus:
            for k in range(dim):
                unknown[(mu, k)] = len(unknown)
        rows = []
        for i in range(dim):
            for nu in mus:
                for r in range(dim):
                    row = [ZERO] * len(unknown)
                    for k in range(dim):
                        c = alg.c[i][k][r]
                        if c != 0:
                            row[unknown[(nu, k)]] += c
                    for a in sorted(set(nu)):
                        multiplicity = nu.count(a)
                        rest = list(nu)
                        rest.remove(a)
                        for l in range(dim):
                            c = alg.c[i][a][l]
                            if c != 0:
                                target = tuple(sorted(rest + [l]))
                                row[unknown[(target, r)]] -= multiplicity * c
                    if any(entry != 0 for entry in row):
                        rows.append(row)
        if rows:
            kernel = LinearAlgebraMixin.kernel_basis(MatrixQ(rows))
        else:
            kernel = [tuple(ONE if index == j else ZERO for index in range(len(unknown)))
                      for j in range(len(unknown))]
        LOGGER.info("Invariant forms of arity {} on {}: dimension {}".format(n, alg, len(kernel)))
        basis = []
        for solution in kernel:
            coeffs = {}
            for mu in mus:
                coeffs[mu] = tuple(solution[unknown[(mu, k)]] for k in range(dim))
            basis.append(SymForm(n, dim, coeffs, True))
        return basis

    @staticmethod
    def build_P(alg, n):
        """P_n, the symmetrization of <x1,x2>...<x_{2n-1},x_{2n}>, summed over perfect matchings"""
        dim = alg.dim
        if n == 0:
            return SymForm(0, dim, {(): ONE})
        gram = LeibnizMixin.gram_matrix(alg).entries
        weight = Fraction(1, double_factorial(2 * n - 1))
        matchings = list(perfect_matchings(tuple(range(2 * n))))
        coeffs = {}
        for mu in multisets(dim, 2 * n):
            total = ZERO
            for matching in matchings:
                term = ONE
                for a, b in matching:
                    term *= gram[mu[a]][mu[b]]
                    if term == 0:
                        break
                total += term
            coeffs[mu] = weight * total
        return SymForm(2 * n, dim, coeffs)

    @staticmethod
    def build_P_literal(alg, n):
        """P_n from the (2n)!-term permutation sum"""
        dim = alg.dim
        if n == 0:
            return SymForm(0, dim, {(): ONE})
        gram = LeibnizMixin.gram_matrix(alg).entries
        coeffs = {}
        for mu in multisets(dim, 2 * n):
            total = ZERO
            for sigma in permutations(range(2 * n)):
                term = ONE
                for pair in range(n):
                    term *= gram[mu[sigma[2 * pair]]][mu[sigma[2 * pair + 1]]]
                total += term
            coeffs[mu] = total / factorial(2 * n)
        return SymForm(2 * n, dim, coeffs)

    @staticmethod
    def build_B_g(alg, n):
        """B_n(x_1..x_{2n+1}) = sum_k P_n(x_1..^x_k..x_{2n+1}) x_k"""
        dim = alg.dim
        P = InvariantsMixin.build_P(alg, n)
        coeffs = {}
        for mu in multisets(dim, 2 * n + 1):
            total = zero_vector(dim)
            for position in range(len(mu)):
                rest = mu[:position] + mu[position + 1:]
                value = P.value(rest)
                if value != 0:
                    total = add(total, scale(value, alg.e(mu[position])))
            coeffs[mu] = total
        return SymForm(2 * n + 1, dim, coeffs, True)

    @staticmethod
    def proportionality(form, reference):
        """c with form = c * reference, None if they are not proportional"""
        flat = flatten_form(form)
        ref = flatten_form(reference)
        coordinates = LinearAlgebraMixin.coordinates([ref], flat)
        return coordinates[0] if coordinates is not None else None

    @staticmethod
    def in_span(form, basis):
        if not basis:
            return form.is_zero()
        flats = [flatten_form(b) for b in basis]
        return LinearAlgebraMixin.rank(flats + [flatten_form(form)]) == \
            LinearAlgebraMixin.rank(flats)

    @staticmethod
    def verify_sym_dims(alg, n_max):
        """Dimension of the invariant forms of arity 2..2 n_max + 1 and whether B_n spans them"""
        entries = []
        for m in range(2, 2 * n_max + 2):
            basis = InvariantsMixin.invariant_basis(alg, m)
            if m % 2:
                B = InvariantsMixin.build_B_g(alg, (m - 1) // 2)
                spanned = not B.is_zero() and len(basis) == 1 and \
                    InvariantsMixin.in_span(B, basis) and MultilinearMixin.is_invariant(alg, B)
            else:
                spanned = not basis
            entries.append({'arity': m, 'dim': len(basis), 'spanned_by_B_g': spanned})
        return CheckResult('sym_dims', all(entry['spanned_by_B_g'] for entry in entries),
                           {'arities': entries})
