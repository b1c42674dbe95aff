# manage.py
import coverage

COV = coverage.coverage(
    branch=True,
    include='src/*',
    omit=[
        'tests/*',
    ]
)
COV.start()

import logging
import sys
import unittest

import click
from flask.cli import FlaskGroup

from app import application

cli = FlaskGroup(create_app=lambda: application)


@cli.command()
@click.option('--pattern', default='test*.py', help="Test module pattern, e.g. test_rigidity.py")
def test(pattern):
    """Runs the unit tests without test coverage."""
    logging.disable(logging.INFO)
    tests = unittest.TestLoader().discover('tests', pattern=pattern)
    result = unittest.TextTestRunner(verbosity=2).run(tests)
    sys.exit(0 if result.wasSuccessful() else 1)


@cli.command()
def cov():
    """Runs the unit tests with coverage."""
    logging.disable(logging.INFO)
    tests = unittest.TestLoader().discover('tests')
    result = unittest.TextTestRunner(verbosity=2).run(tests)
    if result.wasSuccessful():
        COV.stop()
        COV.save()
        print('Coverage Summary:')
        COV.report()
        sys.exit(0)
    sys.exit(1)


if __name__ == '__main__':
    cli()
