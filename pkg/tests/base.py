from fractions import Fraction

from flask_testing import TestCase

from app import application
from src.mixins.LeibnizMixin import LeibnizMixin
from src.models import LeibnizAlgebra


class BaseTestCase(TestCase):
    """ Base Tests """

    def create_app(self):
        application.config['TESTING'] = True
        return application

    def setUp(self):
        self.runner = self.app.test_cli_runner()
        self.sl2 = LeibnizMixin.sl2()
        self.so3 = LeibnizMixin.so3()
        self.heisenberg = LeibnizMixin.heisenberg()
        self.nilpotent4 = LeibnizMixin.nilpotent4()
        self.abelian3 = LeibnizMixin.abelian(3)


def affine_line():
    """Two dimensional non-abelian Lie algebra [e1, e2] = e2"""
    c = [[[0, 0], [0, 1]],
         [[0, -1], [0, 0]]]
    return LeibnizAlgebra(2, ('e1', 'e2'), c, name='affine')


def non_lie_leibniz():
    """Left Leibniz, not Lie: [e2, e2] = e1, all other brackets zero"""
    c = [[[0, 0], [0, 0]],
         [[0, 0], [1, 0]]]
    return LeibnizAlgebra(2, ('e1', 'e2'), c, name='leibniz2')


def q(text):
    return Fraction(text)
