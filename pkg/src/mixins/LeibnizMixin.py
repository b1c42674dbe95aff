"""Mixins for left Leibniz algebras: brackets, structural subspaces, trace form and the builtin corpus"""
import re
from fractions import Fraction

from src.config import LOGGER
from src.exceptions import UnknownAlgebraException
from src.mixins.LinearAlgebraMixin import LinearAlgebraMixin
from src.models import (ZERO, LeibnizAlgebra, MatrixQ, CheckResult, basis_vector, check_dim,
                        zero_vector)

BUILTIN_NAMES = ('sl2', 'so3', 'heisenberg', 'nilpotent4', 'abelian:<d>')


def _constants_from_table(dim, table):
    """Structure constants from {(i, j): {k: value}}, missing entries zero"""
    c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), output in table.items():
        for k, value in output.items():
            c[i][j][k] = Fraction(value)
    return c


def _skew_matrix(a, b, c):
    """The 3x3 skew matrix with parameters (a, b, c) above the diagonal"""
    return MatrixQ([[0, a, b], [-a, 0, c], [-b, -c, 0]])


def _skew_parameters(matrix):
    return (matrix.entries[0][1], matrix.entries[0][2], matrix.entries[1][2])


class LeibnizMixin(object):
    """Operations on a LeibnizAlgebra"""

    @staticmethod
    def bracket(alg, x, y):
        return alg.bracket(x, y)

    @staticmethod
    def check_left_leibniz(alg):
        """Residual of [u,[v,w]] - [[u,v],w] - [v,[u,w]] on every basis triple"""
        violations = alg.leibniz_violations()
        if violations:
            LOGGER.info("Left Leibniz identity fails on {} triples".format(len(violations)))
        return CheckResult('left_leibniz', not violations,
                           {'violations': [{'triple': list(triple), 'residual': residual}
                                           for triple, residual in violations]},
                           violations[0] if violations else None)

    @staticmethod
    def ad_matrix(alg, x):
        """Matrix of y -> [x, y], column j is [x, e_j]"""
        return alg.ad(x)

    @staticmethod
    def right_multiplication(alg, x):
        """Matrix of y -> [y, x]"""
        check_dim(x, alg.dim)
        return MatrixQ.from_columns([alg.bracket(alg.e(j), x) for j in range(alg.dim)], alg.dim)

    @staticmethod
    def center(alg):
        """{a : [a, h] = [h, a] = 0}"""
        rows = []
        # [a, e_j] = sum_i a_i ad_i(e_j) and [e_j, a] = ad_j(a)
        for j in range(alg.dim):
            for k in range(alg.dim):
                rows.append([alg.c[i][j][k] for i in range(alg.dim)])
                rows.append([alg.c[j][i][k] for i in range(alg.dim)])
        basis = LinearAlgebraMixin.kernel_basis(MatrixQ(rows)) if rows else []
        return LinearAlgebraMixin.span(basis, alg.dim)

    @staticmethod
    def derived(alg):
        """Span of all [e_i, e_j]"""
        return LinearAlgebraMixin.span([alg.c[i][j] for i in range(alg.dim) for j in range(alg.dim)],
                                       alg.dim)

    @staticmethod
    def trace_form(alg, x, y):
        """<x, y> = 1/2 tr(ad_x ad_y)"""
        return alg.ad(x).compose(alg.ad(y)).trace() / 2

    @staticmethod
    def gram_matrix(alg):
        """Matrix of the trace form on the basis"""
        return MatrixQ([[LeibnizMixin.trace_form(alg, alg.e(i), alg.e(j)) for j in range(alg.dim)]
                        for i in range(alg.dim)])

    @staticmethod
    def trace_form_with(gram, x, y):
        """<x, y> through a precomputed gram matrix"""
        return sum((x[i] * gram.entries[i][j] * y[j]
                    for i in range(len(x)) if x[i] != 0
                    for j in range(len(y)) if y[j] != 0), ZERO)

    @staticmethod
    def sl2():
        """Basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h"""
        h, e, f = 0, 1, 2
        table = {(h, e): {e: 2}, (e, h): {e: -2},
                 (h, f): {f: -2}, (f, h): {f: 2},
                 (e, f): {h: 1}, (f, e): {h: -1}}
        return LeibnizAlgebra(3, ('h', 'e', 'f'), _constants_from_table(3, table), name='sl2')

    @staticmethod
    def so3():
        """Basis of elementary skew matrices for the parameters a, b, c, brackets by commutators"""
        generators = [_skew_matrix(1, 0, 0), _skew_matrix(0, 1, 0), _skew_matrix(0, 0, 1)]
        c = []
        for left in generators:
            row = []
            for right in generators:
                commutator = left.compose(right) - right.compose(left)
                row.append(_skew_parameters(commutator))
            c.append(row)
        return LeibnizAlgebra(3, ('E_a', 'E_b', 'E_c'), c, name='so3')

    @staticmethod
    def abelian(dim):
        return LeibnizAlgebra(dim, tuple("x{}".format(i + 1) for i in range(dim)),
                              _constants_from_table(dim, {}), name='abelian:{}'.format(dim))

    @staticmethod
    def heisenberg():
        """[e1, e2] = e3 = -[e2, e1]"""
        table = {(0, 1): {2: 1}, (1, 0): {2: -1}}
        return LeibnizAlgebra(3, ('e1', 'e2', 'e3'), _constants_from_table(3, table), name='heisenberg')

    @staticmethod
    def nilpotent4():
        """Heisenberg plus a central line: [e1, e2] = e3 = -[e2, e1], e4 central"""
        table = {(0, 1): {2: 1}, (1, 0): {2: -1}}
        return LeibnizAlgebra(4, ('e1', 'e2', 'e3', 'e4'), _constants_from_table(4, table),
                              name='nilpotent4')

    @staticmethod
    def builtin(name):
        """Algebra by name: sl2, so3, heisenberg, nilpotent4, abelian:<d> or abelian(<d>)"""
        name = name.strip()
        match = re.match(r'^abelian(?::(\d+)|\((\d+)\))$', name)
        if match:
            dim = int(match.group(1) or match.group(2))
            if dim < 1:
                raise UnknownAlgebraException(name)
            return LeibnizMixin.abelian(dim)
        factories = {'sl2': LeibnizMixin.sl2, 'so3': LeibnizMixin.so3,
                     'heisenberg': LeibnizMixin.heisenberg, 'nilpotent4': LeibnizMixin.nilpotent4}
        if name not in factories:
            raise UnknownAlgebraException(name)
        return factories[name]()

    @staticmethod
    def perturbed(alg, i, j, k, delta=1):
        """Copy with c[i][j][k] shifted by delta, built unchecked"""
        c = [[list(cell) for cell in row] for row in alg.c]
        c[i][j][k] += Fraction(delta)
        return LeibnizAlgebra(alg.dim, alg.basis, c, checked=False)

    @staticmethod
    def zero(alg):
        return zero_vector(alg.dim)

    @staticmethod
    def basis(alg):
        return [basis_vector(alg.dim, i) for i in range(alg.dim)]
