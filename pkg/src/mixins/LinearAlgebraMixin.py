"""Mixins for exact linear algebra over the rationals"""
from src.config import LOGGER
from src.exceptions import DimensionMismatchException
from src.models import (ZERO, ONE, MatrixQ, NoSolution, Unique, Affine, Subspace,
                        to_fraction, dot)


def _row_echelon(rows, rhs=None):
    """
    In-place forward elimination with the first nonzero pivot of each column.
    Returns the list of free columns.
    """
    free_cols = []
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if rows[i_row][piv_c] != 0:
                break
        else:
            free_cols.append(piv_c)
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
            if rhs is not None:
                rhs[piv_r], rhs[i_row] = rhs[i_row], rhs[piv_r]
        pivot = rows[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            factor = rows[r][piv_c]
            if factor == 0:
                continue
            factor = factor / pivot
            pivot_row = rows[piv_r]
            row = rows[r]
            for c in range(piv_c, n_cols):
                if pivot_row[c] != 0:
                    row[c] -= pivot_row[c] * factor
            if rhs is not None:
                rhs[r] -= rhs[piv_r] * factor
        piv_r += 1
        if piv_r == n_rows:
            free_cols.extend(range(piv_c + 1, n_cols))
            break
    return free_cols


def _back_substitution(rows, rhs, free_cols, n_cols, free_values):
    """Solution with the given values on the free columns, None when rhs is inconsistent"""
    rank = n_cols - len(free_cols)
    if rhs is not None:
        for r in range(rank, len(rows)):
            if rhs[r] != 0:
                return None
    free = set(free_cols)
    pivot_cols = [c for c in range(n_cols) if c not in free]
    solution = [ZERO] * n_cols
    for c, value in zip(free_cols, free_values):
        solution[c] = value
    for r in range(len(pivot_cols) - 1, -1, -1):
        piv_c = pivot_cols[r]
        s = -rhs[r] if rhs is not None else ZERO
        row = rows[r]
        for c in range(piv_c + 1, n_cols):
            if row[c] != 0 and solution[c] != 0:
                s += row[c] * solution[c]
        solution[piv_c] = -s / row[piv_c]
    return solution


class LinearAlgebraMixin(object):
    """Rank, kernel and linear solves with exact rational pivoting"""

    @staticmethod
    def as_matrix(matrix):
        if isinstance(matrix, MatrixQ):
            return matrix
        return MatrixQ(matrix)

    @staticmethod
    def rank(matrix):
        matrix = LinearAlgebraMixin.as_matrix(matrix)
        if matrix.rows == 0:
            return 0
        rows = [list(row) for row in matrix.entries]
        return matrix.cols - len(_row_echelon(rows))

    @staticmethod
    def kernel_basis(matrix):
        """Basis of {v : A v = 0}, one vector per free column"""
        matrix = LinearAlgebraMixin.as_matrix(matrix)
        n_cols = matrix.cols
        if matrix.rows == 0:
            return [tuple(ONE if i == j else ZERO for i in range(n_cols)) for j in range(n_cols)]
        rows = [list(row) for row in matrix.entries]
        free_cols = _row_echelon(rows)
        basis = []
        for index in range(len(free_cols)):
            values = [ONE if k == index else ZERO for k in range(len(free_cols))]
            basis.append(tuple(_back_substitution(rows, None, free_cols, n_cols, values)))
        return basis

    @staticmethod
    def solve_linear(matrix, rhs):
        """NoSolution, Unique(x) or Affine(particular, kernel) for A x = b"""
        matrix = LinearAlgebraMixin.as_matrix(matrix)
        if len(rhs) != matrix.rows:
            raise DimensionMismatchException(matrix.rows, len(rhs), "right hand side")
        n_cols = matrix.cols
        rows = [list(row) for row in matrix.entries]
        b = [to_fraction(value) for value in rhs]
        if matrix.rows == 0:
            free_cols = list(range(n_cols))
        else:
            free_cols = _row_echelon(rows, b)
        particular = _back_substitution(rows, b, free_cols, n_cols, [ZERO] * len(free_cols))
        if particular is None:
            LOGGER.debug("Inconsistent system of {} equations".format(matrix.rows))
            return NoSolution()
        if not free_cols:
            return Unique(tuple(particular))
        return Affine(tuple(particular), tuple(LinearAlgebraMixin.kernel_basis(matrix)))

    @staticmethod
    def span(vectors, ambient_dim):
        """Subspace spanned by the vectors, with an independent basis taken from them"""
        basis = []
        for v in vectors:
            if LinearAlgebraMixin.rank(basis + [tuple(v)]) > len(basis):
                basis.append(tuple(v))
        return Subspace(ambient_dim, tuple(basis))

    @staticmethod
    def contains(subspace, v):
        if not subspace.basis:
            return all(a == 0 for a in v)
        return LinearAlgebraMixin.rank(list(subspace.basis) + [tuple(v)]) == subspace.dim

    @staticmethod
    def subspace_sum(first, second):
        return LinearAlgebraMixin.span(list(first.basis) + list(second.basis), first.ambient_dim)

    @staticmethod
    def orthogonal_complement(subspace, gram=None):
        """Vectors orthogonal to the subspace for the coordinate dot product (or the given gram matrix)"""
        dim = subspace.ambient_dim
        if not subspace.basis:
            return Subspace(dim, tuple(tuple(ONE if i == j else ZERO for i in range(dim))
                                       for j in range(dim)))
        rows = list(subspace.basis)
        if gram is not None:
            rows = [gram.transpose().apply(v) for v in rows]
        return Subspace(dim, tuple(LinearAlgebraMixin.kernel_basis(MatrixQ(rows))))

    @staticmethod
    def intersection(first, second):
        """Intersection through the complement of the sum of complements"""
        complement = LinearAlgebraMixin.subspace_sum(
            LinearAlgebraMixin.orthogonal_complement(first),
            LinearAlgebraMixin.orthogonal_complement(second))
        return LinearAlgebraMixin.orthogonal_complement(complement)

    @staticmethod
    def is_orthogonal(u, subspace):
        return all(dot(u, v) == 0 for v in subspace.basis)

    @staticmethod
    def coordinates(basis, v):
        """Coefficients of v in the given independent vectors, None if v is outside their span"""
        if not basis:
            return () if all(a == 0 for a in v) else None
        matrix = MatrixQ.from_columns(basis, len(v))
        solution = LinearAlgebraMixin.solve_linear(matrix, v)
        if isinstance(solution, NoSolution):
            return None
        return solution.solution if isinstance(solution, Unique) else solution.particular
