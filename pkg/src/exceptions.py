"""Custom exceptions"""


class AlgebraException(Exception):
    """ Base of every error raised by the algebra computations"""

    def __init__(self, message=""):

        # Call the base class constructor with the parameters it needs
        super(AlgebraException, self).__init__(message)

        self.message = message

    def to_dict(self):
        return {'error': type(self).__name__, 'message': self.message}


class MalformedInputException(AlgebraException):
    """ This exception is raised when an input document or argument can not be parsed"""


class DimensionMismatchException(MalformedInputException):
    """ This exception is raised when vectors, maps or algebras of different dimension meet"""

    def __init__(self, expected, actual, what="vector"):

        super(DimensionMismatchException, self).__init__(
            "{} has dimension {}, expected {}".format(what, actual, expected))

        self.expected = expected
        self.actual = actual


class UnknownAlgebraException(MalformedInputException):
    """ This exception is raised when a builtin algebra name is not known"""

    def __init__(self, name):

        super(UnknownAlgebraException, self).__init__("Unknown algebra: {}".format(name))

        self.name = name


class NotLeibnizException(AlgebraException):
    """ This exception is raised when structure constants violate the left Leibniz identity"""

    def __init__(self, violations):

        super(NotLeibnizException, self).__init__(
            "Left Leibniz identity fails on {} basis triples".format(len(violations)))

        self.violations = violations

    def to_dict(self):
        result = super(NotLeibnizException, self).to_dict()
        result['violations'] = [{'triple': list(triple), 'residual': residual}
                                 for triple, residual in self.violations]
        return result


class InsufficientOrderException(AlgebraException):
    """ This exception is raised when a check needs components beyond the truncation order"""

    def __init__(self, needed, order):

        super(InsufficientOrderException, self).__init__(
            "Order {} needed but the series is truncated at {}".format(needed, order))

        self.needed = needed
        self.order = order


class DegreeBoundException(AlgebraException):
    """ This exception is raised when the coboundary is asked for a degree above 3"""

    def __init__(self, degree):

        super(DegreeBoundException, self).__init__(
            "Coboundary is implemented up to degree 3, got {}".format(degree))

        self.degree = degree


class NotACocycleException(AlgebraException):
    """ This exception is raised when a map that should be closed has a nonzero coboundary"""

    def __init__(self, witness):

        super(NotACocycleException, self).__init__("Coboundary is not zero")

        self.witness = witness


class NoBracketFormException(AlgebraException):
    """ This exception is raised when a cocycle is not of the form y -> [b, y]"""

    def __init__(self, message="Map is not an inner left multiplication"):

        super(NoBracketFormException, self).__init__(message)


class NonUniqueSolutionException(AlgebraException):
    """ This exception is raised when y -> [b, y] does not determine b"""

    def __init__(self, particular, kernel):

        super(NonUniqueSolutionException, self).__init__(
            "Solution family of dimension {}".format(len(kernel)))

        self.particular = particular
        self.kernel = kernel


class NontrivialCohomologyException(AlgebraException):
    """ This exception is raised when reconstruction is asked on an algebra with H0 or H1 nonzero"""

    def __init__(self, h0, h1):

        super(NontrivialCohomologyException, self).__init__(
            "Reconstruction needs H0 = H1 = 0, got ({}, {})".format(h0, h1))

        self.h0 = h0
        self.h1 = h1


class CohomologyObstructionException(AlgebraException):
    """ This exception is raised when the defect of a series at some degree is not a cocycle"""

    def __init__(self, degree, witness=None):

        super(CohomologyObstructionException, self).__init__(
            "Defect at degree {} is not closed".format(degree))

        self.degree = degree
        self.witness = witness

    def to_dict(self):
        result = super(CohomologyObstructionException, self).to_dict()
        result['degree'] = self.degree
        result['witness'] = self.witness
        return result


class InvarianceFailureException(AlgebraException):
    """ This exception is raised when a reconstructed map is not invariant"""

    def __init__(self, degree):

        super(InvarianceFailureException, self).__init__(
            "Recovered map of degree {} is not invariant".format(degree))

        self.degree = degree

    def to_dict(self):
        result = super(InvarianceFailureException, self).to_dict()
        result['degree'] = self.degree
        return result


class NonInvariantFormException(AlgebraException):
    """ This exception is raised when an input form is required to be invariant and is not"""

    def __init__(self, what="form"):

        super(NonInvariantFormException, self).__init__("The {} is not invariant".format(what))


class MagicIdentityException(AlgebraException):
    """ This exception is raised when ad_x^2(z) = -<x,z>x + <x,x>z fails on the algebra"""

    def __init__(self, witness=None):

        super(MagicIdentityException, self).__init__("Quadratic ad identity fails")

        self.witness = witness


class ShapeMismatchException(AlgebraException):
    """ This exception is raised when a series is not of the rigid shape"""

    def __init__(self, index, message=""):

        super(ShapeMismatchException, self).__init__(
            message or "Component {} is not of the rigid shape".format(index))

        self.index = index


class IsotropicProbeException(AlgebraException):
    """ This exception is raised when no anisotropic probe vector can be found"""


class InvalidSequenceException(AlgebraException):
    """ This exception is raised when a U sequence does not start with 1, 1/2"""


class RecurrenceViolationException(AlgebraException):
    """ This exception is raised when a U sequence breaks the even recurrence"""

    def __init__(self, index, residual):

        super(RecurrenceViolationException, self).__init__(
            "Even recurrence fails at index {}".format(index))

        self.index = index
        self.residual = residual


class EvenEquationResidualException(AlgebraException):
    """ This exception is raised when recovered coefficients do not reproduce the even terms"""

    def __init__(self, index, residual):

        super(EvenEquationResidualException, self).__init__(
            "Even equation has residual at index {}".format(index))

        self.index = index
        self.residual = residual


class HypothesisException(AlgebraException):
    """ This exception is raised when an algebra or its data does not meet a construction's hypotheses"""


class CommutationException(AlgebraException):
    """ This exception is raised when a twisting map does not commute with left translations"""

    def __init__(self, residual):

        super(CommutationException, self).__init__(
            "Twisting map does not commute with left translations (residual {})".format(residual))

        self.residual = residual
