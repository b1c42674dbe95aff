"""Command line entry points, one per check suite"""
import click

from src.config import LOGGER
from src.exceptions import MalformedInputException
from src.services.reports import SUITES, run_suite
from src.services.serialization import dumps

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2

HELP = {
    'check-leibniz': "Left Leibniz identity on every basis triple.",
    'canonical': "Canonical series exp(ad_x) with the eqm, invariance and quandle checks.",
    'check-rack': "eqm, invariance and eqc checks of a series (given, from --a, or canonical).",
    'cohomology': "dim H0, dim H1 and delta o delta = 0 in low degrees.",
    'invariants': "Dimensions of invariant symmetric forms and the B_n spanning check.",
    'reconstruct': "Recover the invariant B_n data of a series and rebuild it.",
    'rigidity': "F coefficients to U sequence and back.",
    'constructions': "Float racks with seeded sampled axiom checks.",
    'selftest': "The full acceptance suite on the built-in algebras.",
}


def run_command(suite, params, json_out=None):
    """Writes the report (or the error document) and returns the exit code"""
    try:
        report = run_suite(suite, params)
        text = dumps(report)
        code = EXIT_OK if report['ok'] else EXIT_FAILED
    except MalformedInputException as exc:
        LOGGER.info("Malformed input for {}: {}".format(suite, exc.message))
        text = dumps({'status': 'fail', 'suite': suite, 'error': exc.to_dict()})
        code = EXIT_MALFORMED
    if json_out:
        with open(json_out, 'w') as handle:
            handle.write(text + "\n")
    click.echo(text)
    return code


def make_command(suite):

    @click.command(suite, help=HELP[suite])
    @click.option('--algebra', default=None, help="builtin:NAME or @file.json")
    @click.option('--order', type=int, default=None, help="Truncation order N (else RACK_ORDER)")
    @click.option('--seed', type=int, default=None, help="Sampler seed (else RACK_SEED)")
    @click.option('--tol', type=float, default=None, help="Float tolerance (else RACK_TOL)")
    @click.option('--samples', type=int, default=None, help="Sample count (else RACK_SAMPLES)")
    @click.option('--a', 'a', default=None, help="F coefficients a_1,a_2,... as rationals")
    @click.option('--series', default=None, help="@file.json holding a series")
    @click.option('--n-max', 'n_max', type=int, default=None, help="Largest n for arity 2n+1")
    @click.option('--json-out', 'json_out', default=None, help="Also write the report here")
    @click.option('--timings', is_flag=True, default=False, help="Add wall clock timings")
    @click.option('--reduced', is_flag=True, default=False, help="Lower orders and counts (selftest)")
    @click.pass_context
    def command(ctx, json_out, **params):
        params = {key: value for key, value in params.items() if value is not None}
        ctx.exit(run_command(suite, params, json_out))

    return command


def register_commands(cli):
    for suite in SUITES:
        cli.add_command(make_command(suite))
