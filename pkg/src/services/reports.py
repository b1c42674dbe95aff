"""Named check suites and the JSON report they produce"""
import random
import time
from fractions import Fraction
from itertools import product
from math import factorial

from schema import Optional, Or, Schema, SchemaError

from src.config import LOGGER, RACK_SAMPLES, RACK_SEED, RACK_TOL, get_order
from src.exceptions import (AlgebraException, CohomologyObstructionException, HypothesisException,
                            InvarianceFailureException, MalformedInputException,
                            NoBracketFormException, NontrivialCohomologyException)
from src.mixins.CohomologyMixin import CohomologyMixin
from src.mixins.ConstructionsMixin import ConstructionsMixin
from src.mixins.InvariantsMixin import InvariantsMixin
from src.mixins.LeibnizMixin import LeibnizMixin
from src.mixins.RackSeriesMixin import RackSeriesMixin
from src.mixins.ReconstructionMixin import ReconstructionMixin
from src.mixins.RigidityMixin import RigidityMixin
from src.models import CheckResult, Cochain, FCoeffs, MatrixQ, USequence
from src.services.serialization import (jsonable, load_algebra, load_series, parse_rational_list,
                                        series_to_json, sym_form_to_json)

SUITES = ('check-leibniz', 'canonical', 'check-rack', 'cohomology', 'invariants', 'reconstruct',
          'rigidity', 'constructions', 'selftest')

REPORT_SCHEMA = Schema({
    'suite': Or(*SUITES),
    'algebra': Or(str, None),
    'ok': bool,
    'checks': [{'name': str, 'ok': bool, 'details': dict, Optional('witness'): object}],
    Optional('data'): dict,
    Optional('timings'): {str: float},
})

SELFTEST_CORPUS = ('sl2', 'so3', 'abelian:3', 'heisenberg', 'nilpotent4')


def _parameter(raw, key, convert, default):
    """raw[key] converted, the default when it is absent"""
    value = raw.get(key)
    if value is None:
        return default
    if isinstance(value, bool):
        raise MalformedInputException("{} must be a number, got {!r}".format(key, value))
    try:
        return convert(value)
    except (TypeError, ValueError):
        raise MalformedInputException("{} must be a number, got {!r}".format(key, value))


class Context(object):
    """Parameters of one suite run with their configured defaults"""

    def __init__(self, params):
        self.raw = dict(params or {})
        self.algebra_source = self.raw.get('algebra')
        self.seed = _parameter(self.raw, 'seed', int, RACK_SEED)
        self.samples = _parameter(self.raw, 'samples', int, RACK_SAMPLES)
        if self.samples < 1:
            raise MalformedInputException("samples must be at least 1, got {}".format(self.samples))
        self.tol = _parameter(self.raw, 'tol', float, RACK_TOL)
        if not self.tol > 0:
            raise MalformedInputException("tol must be positive, got {}".format(self.tol))
        self.a = FCoeffs(parse_rational_list(self.raw.get('a')))
        self.series_source = self.raw.get('series')
        self.timings = bool(self.raw.get('timings'))
        self.reduced = bool(self.raw.get('reduced'))
        self.sections = {}

    @property
    def alg(self):
        if self.series_source is not None and self.algebra_source is None:
            return self.series.alg
        return load_algebra(self.algebra_source)

    @property
    def order(self):
        try:
            order = get_order(self.raw.get('order'))
        except (TypeError, ValueError):
            raise MalformedInputException("Order must be an integer: {!r}".format(self.raw.get('order')))
        if order is None:
            raise MalformedInputException("No truncation order: pass --order or set RACK_ORDER")
        if order < 1:
            raise MalformedInputException("Order must be at least 1")
        return order

    @property
    def series(self):
        return load_series(self.series_source)

    def timed(self, section, function, *args):
        start = time.perf_counter()
        try:
            return function(*args)
        finally:
            self.sections[section] = time.perf_counter() - start


def _rack_series(context, alg):
    """The given series, or exp(F(<x,x>) ad_x) for the given coefficients, or the canonical one"""
    if context.series_source is not None:
        return context.series
    N = context.order
    if context.a.m:
        return RackSeriesMixin.series_from_F(alg, InvariantsMixin.build_P(alg, 1), context.a, N)
    return RackSeriesMixin.canonical_series(alg, N)


def _not_applicable(name, exc):
    return CheckResult(name, True, {'applicable': False, 'reason': exc.message})


def suite_check_leibniz(context):
    if context.algebra_source is None and context.series_source is not None:
        return [LeibnizMixin.check_left_leibniz(context.alg)], {}
    alg = load_algebra(context.algebra_source, checked=False)
    return [LeibnizMixin.check_left_leibniz(alg)], {}


def suite_canonical(context):
    alg = context.alg
    series = context.timed('build', RackSeriesMixin.canonical_series, alg, context.order)
    checks = context.timed('eqm', RackSeriesMixin.check_eqm_all, series)
    checks.append(RackSeriesMixin.check_invariance_all(series))
    checks.append(RackSeriesMixin.check_quandle(series))
    if RigidityMixin.check_magic(alg).ok:
        closed = RigidityMixin.canonical_closed_form(alg, series.N)
        checks.append(CheckResult('closed_form', closed == series, {'order': series.N}))
    return checks, {'series': series_to_json(series)}


def suite_check_rack(context):
    alg = context.alg
    series = _rack_series(context, alg)
    checks = context.timed('eqm', RackSeriesMixin.check_eqm_all, series)
    checks.append(RackSeriesMixin.check_invariance_all(series))
    for p in range(1, series.N + 1):
        checks.append(CohomologyMixin.check_eqc(series, p))
    if series.N <= 4:
        checks.append(context.timed('expansion', RackSeriesMixin.check_self_distributivity,
                                    series, None, 6, context.seed))
    return checks, {'order': series.N}


def suite_cohomology(context):
    alg = context.alg
    h0, h1 = context.timed('cohomology', CohomologyMixin.cohomology_dims, alg)
    checks = [CheckResult('cohomology', True, {'h0': h0, 'h1': h1})]
    for degree in (0, 1):
        first = CohomologyMixin.delta_matrix(alg, degree)
        second = CohomologyMixin.delta_matrix(alg, degree + 1)
        checks.append(CheckResult('delta_squared[{}]'.format(degree),
                                  second.compose(first).is_zero(), {'degree': degree}))
    return checks, {'h0': h0, 'h1': h1}


def suite_invariants(context):
    alg = context.alg
    n_max = _parameter(context.raw, 'n_max', int, 2)
    if n_max < 1:
        raise MalformedInputException("n_max must be at least 1, got {}".format(n_max))
    checks = [context.timed('dims', InvariantsMixin.verify_sym_dims, alg, n_max)]
    for n in (1, 2):
        literal = InvariantsMixin.build_P(alg, n) == InvariantsMixin.build_P_literal(alg, n)
        checks.append(CheckResult('P_literal[{}]'.format(n), literal, {'n': n}))
    return checks, {'arities': checks[0].details['arities']}


RECOVERY_FAILURES = (
    (CohomologyObstructionException, 'obstruction'),
    (InvarianceFailureException, 'invariance_failure'),
    (NoBracketFormException, 'no_bracket_form'),
    (NontrivialCohomologyException, 'nontrivial_cohomology'),
)


def recover_degrees(series):
    """
    ({n: B_n}, per degree entries, failing n or None). Degrees recovered before a failure
    keep their entry.
    """
    B = {}
    degrees = []
    try:
        for n, form in ReconstructionMixin.recover_B(series):
            B[n] = form
            degrees.append({'n': n, 'status': 'ok', 'B': sym_form_to_json(form)})
    except tuple(cls for cls, _ in RECOVERY_FAILURES) as exc:
        failed = max(B) + 1 if B else 2
        status = next(name for cls, name in RECOVERY_FAILURES if isinstance(exc, cls))
        LOGGER.info("Recovery stopped at degree {}: {}".format(failed, exc.message))
        degrees.append({'n': failed, 'status': status, 'error': exc.to_dict()})
        return B, degrees, failed
    return B, degrees, None


def suite_reconstruct(context):
    alg = context.alg
    series = _rack_series(context, alg)
    B, degrees, failed = context.timed('reconstruct', recover_degrees, series)
    data = {'degrees': degrees,
            'B': {str(n): sym_form_to_json(form) for n, form in sorted(B.items())}}
    if failed is not None:
        return [CheckResult('reconstruct', False, {'failed_at': failed,
                                                   'status': degrees[-1]['status']}, failed)], data
    rebuilt = ReconstructionMixin.build_series_from_B(series.alg, B, series.N)
    checks = [CheckResult('reconstruct', True,
                          {'zero': [n for n in sorted(B) if B[n].is_zero()]}),
              CheckResult('rebuild', rebuilt == series, {'order': series.N})]
    return checks, data


def suite_rigidity(context):
    alg = context.alg
    checks = [RigidityMixin.check_magic(alg), RigidityMixin.check_ad_square_bracket(alg)]
    roundtrip = context.timed('roundtrip', RigidityMixin.rigidity_roundtrip, alg, context.a,
                              context.order)
    checks.append(roundtrip)
    return checks, dict(roundtrip.details)


def suite_constructions(context):
    alg = context.alg
    seed, samples, tol = context.seed, context.samples, context.tol
    checks = []

    def sampled(prefix, rack):
        for check in ConstructionsMixin.check_float_rack(rack, samples, seed, tol):
            checks.append(CheckResult('{}.{}'.format(prefix, check.name), check.ok, check.details))

    P = InvariantsMixin.build_P(alg, 1)
    rack = ConstructionsMixin.pr1_rack(alg, P, context.a.values)
    sampled('pr1', rack)
    bracket = ConstructionsMixin.check_extracted_bracket(rack, alg, 1)
    checks.append(CheckResult('pr1.extracted_bracket', bracket.ok, bracket.details))

    J = ConstructionsMixin.quadratic_twist(alg)
    try:
        sampled('twist', ConstructionsMixin.twist_rack(ConstructionsMixin.canonical_rack(alg), J,
                                                       samples, seed, tol))
    except AlgebraException as exc:
        checks.append(CheckResult('twist', False, {'reason': exc.message}))

    allowed = ConstructionsMixin.pr22_subspace(alg)
    center = LeibnizMixin.center(alg)
    if allowed.basis and center.basis:
        a = allowed.basis[0]
        deformed = ConstructionsMixin.pr22_rack(alg, [(a, a)], [center.basis[0]], [(0, 0, 1)])
        sampled('pr22', deformed)
        bracket = ConstructionsMixin.check_extracted_bracket(deformed, alg, 1)
        checks.append(CheckResult('pr22.extracted_bracket', bracket.ok, bracket.details))
    else:
        checks.append(CheckResult('pr22', True, {'applicable': False,
                                                 'reason': 'no admissible a_j or z_j'}))

    for case in (1, 2):
        try:
            checks.append(ConstructionsMixin.co_counterexample(alg, case, samples, seed, tol))
        except HypothesisException as exc:
            checks.append(_not_applicable('co_counterexample[{}]'.format(case), exc))

    if context.raw.get('order') is not None:
        rng = random.Random(seed)
        points = [tuple(tuple(Fraction(rng.randint(-4, 4), 16) for _ in range(alg.dim))
                        for _ in range(2)) for _ in range(3)]
        checks.append(context.timed('truncation', ConstructionsMixin.check_truncation,
                                    alg, P, context.a, context.order, points))
    return checks, {}


def _random_rational(rng, bound=5):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def _random_cochain(rng, alg, degree):
    return Cochain(degree, alg.dim, {t: tuple(_random_rational(rng) for _ in range(alg.dim))
                                     for t in product(range(alg.dim), repeat=degree)})


def _random_matrix(rng, dim):
    return MatrixQ([[_random_rational(rng) for _ in range(dim)] for _ in range(dim)])


def _nonzero_rational(rng):
    return Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 4))


def _random_point(rng, dim):
    return tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))


def _odd_forms(alg, c3, c5):
    return {3: InvariantsMixin.build_B_g(alg, 1).scaled(c3),
            5: InvariantsMixin.build_B_g(alg, 2).scaled(c5)}


def _sampled_axioms(name, rack, samples, seed, tol):
    """Self-distributivity, pointedness and bijectivity of a float rack as one check"""
    wanted = ('sampled_self_distributivity', 'sampled_pointedness', 'sampled_bijectivity')
    results = [check for check in ConstructionsMixin.check_float_rack(rack, samples, seed, tol)
               if check.name in wanted]
    return CheckResult(name, all(check.ok for check in results),
                       {check.name: check.details for check in results})


def selftest_cochains(rng, count):
    """delta o delta on random cochains and the composition rule on random pairs"""
    checks = []
    for name in SELFTEST_CORPUS:
        alg = LeibnizMixin.builtin(name)
        failures = []
        for index in range(count):
            w = _random_cochain(rng, alg, index % 2)
            if not CohomologyMixin.delta(alg, CohomologyMixin.delta(alg, w)).is_zero():
                failures.append({'degree': w.degree, 'sample': index})
        checks.append(CheckResult('delta_squared[{}]'.format(name), not failures,
                                  {'samples': count, 'failures': failures}))
    sl2 = LeibnizMixin.sl2()
    failures = []
    for index in range(count):
        rule = CohomologyMixin.check_composition_rule(sl2, _random_matrix(rng, 3),
                                                      _random_matrix(rng, 3))
        if not rule.ok:
            failures.append(dict(rule.details, sample=index))
    checks.append(CheckResult('composition_rule[sl2]', not failures,
                              {'samples': count, 'failures': failures}))
    B = _odd_forms(sl2, Fraction(1, 2), Fraction(1, 5))
    composite = [result for n in range(2, 5)
                 for result in ReconstructionMixin.check_composite_coboundaries(
                     sl2, B, n, _random_point(rng, 3))]
    checks.append(CheckResult('composite_coboundaries[sl2]', all(c.ok for c in composite),
                              {'failed': [c.name for c in composite if not c.ok]}))
    return checks


def selftest_expansion(seed):
    """eqm and the direct expansion of self-distributivity agree at order 4"""
    sl2 = LeibnizMixin.sl2()
    series = RackSeriesMixin.canonical_series(sl2, 4)
    broken = series.replaced(2, series.component(2).scaled(2))
    verdicts = {}
    for label, candidate in (('canonical', series), ('doubled_A2', broken)):
        eqm = all(check.ok for check in RackSeriesMixin.check_eqm_all(candidate))
        expansion = RackSeriesMixin.check_self_distributivity(candidate, None, 6, seed).ok
        verdicts[label] = {'eqm': eqm, 'expansion': expansion}
    ok = all(v['eqm'] == v['expansion'] for v in verdicts.values()) and \
        verdicts['canonical']['eqm'] and not verdicts['doubled_A2']['eqm']
    return CheckResult('expansion_agrees[sl2]', ok, verdicts)


def selftest_reconstruction(rng, lists, order):
    """Random B data round trips through build_series_from_B, plus the term by term formulas"""
    sl2 = LeibnizMixin.sl2()
    failures = []
    series = B = None
    for index in range(lists):
        B = _odd_forms(sl2, _nonzero_rational(rng), _nonzero_rational(rng))
        series = ReconstructionMixin.build_series_from_B(sl2, B, order)
        recovered = ReconstructionMixin.reconstruct_B(series)
        expected = {n: B.get(n) for n in range(2, order + 1)}
        if any((recovered[n] != form) if form is not None else not recovered[n].is_zero()
               for n, form in expected.items()):
            failures.append(index)
    checks = [CheckResult('reconstruct_roundtrip[sl2]', not failures,
                          {'lists': lists, 'order': order, 'failures': failures})]
    b_values = {l: _random_point(rng, 3) for l in (2, 3, 4, 5)}
    checks.append(CheckResult('displayed_formulas[sl2]',
                              ReconstructionMixin.check_displayed_formulas(
                                  sl2, b_values, _random_point(rng, 3)).ok, {}))
    on_series = ReconstructionMixin.check_displayed_formulas_on_series(
        series, B, [_random_point(rng, 3) for _ in range(2)])
    checks.append(CheckResult('displayed_formulas_on_series[sl2]', on_series.ok,
                              on_series.details))
    return checks


def selftest_float_racks(samples, seed, tol):
    """Sampled axioms of the exp(F(<x,x>) ad_x), twisted and deformed racks"""
    sl2, so3, nilpotent4 = LeibnizMixin.sl2(), LeibnizMixin.so3(), LeibnizMixin.nilpotent4()
    checks = [
        _sampled_axioms('pr1[sl2]', ConstructionsMixin.pr1_rack(sl2, InvariantsMixin.build_P(sl2, 1)),
                        samples, seed, tol),
        _sampled_axioms('pr1[so3]', ConstructionsMixin.pr1_rack(so3, InvariantsMixin.build_P(so3, 1),
                                                                (1,)),
                        samples, seed, tol),
        _sampled_axioms('pr2[so3]',
                        ConstructionsMixin.twist_rack(ConstructionsMixin.canonical_rack(so3),
                                                      ConstructionsMixin.quadratic_twist(so3),
                                                      samples, seed, tol),
                        samples, seed, tol),
    ]
    a = nilpotent4.e(0)
    z = nilpotent4.e(3)
    checks.append(_sampled_axioms('pr22[nilpotent4]',
                                  ConstructionsMixin.pr22_rack(nilpotent4, [(a, a)], [z], [(0, 0, 1)]),
                                  samples, seed, tol))
    return checks


def suite_selftest(context):
    """The acceptance checks on the built-in corpus; reduced runs use lower orders and counts"""
    checks = []
    seed = context.seed
    reduced = context.reduced
    order = 4 if reduced else 6
    rigidity_order = 5 if reduced else 8
    count = 3 if reduced else 20
    samples = min(context.samples, 10) if reduced else context.samples
    rng = random.Random(seed)

    for name in SELFTEST_CORPUS:
        alg = LeibnizMixin.builtin(name)
        result = LeibnizMixin.check_left_leibniz(alg)
        checks.append(CheckResult('leibniz[{}]'.format(name), result.ok, {}))
    perturbed = LeibnizMixin.perturbed(LeibnizMixin.sl2(), 1, 2, 1)
    checks.append(CheckResult('leibniz[sl2 perturbed]',
                              not LeibnizMixin.check_left_leibniz(perturbed).ok, {}))

    for name, expected in (('sl2', (0, 0)), ('so3', (0, 0)), ('abelian:3', (3, None))):
        h0, h1 = CohomologyMixin.cohomology_dims(LeibnizMixin.builtin(name))
        ok = h0 == expected[0] and (expected[1] is None or h1 == expected[1])
        checks.append(CheckResult('cohomology[{}]'.format(name), ok, {'h0': h0, 'h1': h1}))
    checks.extend(context.timed('cochains', selftest_cochains, rng, count))
    checks.append(context.timed('expansion', selftest_expansion, seed))

    for name in ('sl2', 'so3'):
        alg = LeibnizMixin.builtin(name)
        series = context.timed('canonical[{}]'.format(name), RackSeriesMixin.canonical_series,
                               alg, order)
        eqm = RackSeriesMixin.check_eqm_all(series)
        checks.append(CheckResult('eqm[{}]'.format(name), all(c.ok for c in eqm),
                                  {'failed': [c.name for c in eqm if not c.ok]}))
        invariance = RackSeriesMixin.check_invariance_all(series)
        checks.append(CheckResult('invariance[{}]'.format(name), invariance.ok, {}))
        checks.append(CheckResult('magic[{}]'.format(name), RigidityMixin.check_magic(alg).ok, {}))
        checks.append(CheckResult('closed_form[{}]'.format(name),
                                  RigidityMixin.canonical_closed_form(alg, order) == series, {}))
        dims = InvariantsMixin.verify_sym_dims(alg, 2)
        checks.append(CheckResult('sym_dims[{}]'.format(name),
                                  dims.ok and [e['dim'] for e in dims.details['arities']] == [0, 1, 0, 1],
                                  dims.details))
        B = ReconstructionMixin.reconstruct_B(series)
        checks.append(CheckResult('reconstruct[{}]'.format(name),
                                  all(form.is_zero() for form in B.values()), {}))
        roundtrip = RigidityMixin.rigidity_roundtrip(
            alg, (1, Fraction(-1, 2), Fraction(1, 3)), rigidity_order)
        checks.append(CheckResult('rigidity[{}]'.format(name), roundtrip.ok, roundtrip.details))
    checks.extend(context.timed('reconstruction', selftest_reconstruction, rng,
                                1 if reduced else 5, 5 if reduced else 6))

    factorials = USequence([Fraction(1, factorial(n)) for n in range(1, 11)])
    checks.append(CheckResult('U_recurrence', RigidityMixin.check_U_recurrence(factorials).ok, {}))
    checks.append(CheckResult('binomial_identity',
                              all(RigidityMixin.binomial_identity_residual(n) == 0
                                  for n in range(1, 11)), {}))
    jets_ok = True
    for _ in range(count):
        point = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        n, m = rng.randint(1, 8), rng.randint(0, 6)
        jets_ok = jets_ok and RigidityMixin.check_jet_identity(point, n, m).ok
    checks.append(CheckResult('jet_identity', jets_ok, {'points': count}))

    checks.extend(context.timed('float_racks', selftest_float_racks, samples, seed, context.tol))
    for name in ('abelian:3', 'nilpotent4'):
        result = ConstructionsMixin.co_counterexample(LeibnizMixin.builtin(name), 1,
                                                      samples, seed, context.tol)
        checks.append(CheckResult('co[{}]'.format(name), result.ok, {'a': result.details['a'],
                                                                       'z': result.details['z']}))
    return checks, {'reduced': reduced}



SUITE_FUNCTIONS = {
    'check-leibniz': suite_check_leibniz,
    'canonical': suite_canonical,
    'check-rack': suite_check_rack,
    'cohomology': suite_cohomology,
    'invariants': suite_invariants,
    'reconstruct': suite_reconstruct,
    'rigidity': suite_rigidity,
    'constructions': suite_constructions,
    'selftest': suite_selftest,
}


def run_suite(suite, params=None):
    """
    Report for the named suite. Malformed input raises MalformedInputException; any other
    failure of the algebra becomes a failing check.
    """
    if suite not in SUITE_FUNCTIONS:
        raise MalformedInputException("Unknown suite {}".format(suite))
    context = Context(params)
    LOGGER.info("Running suite {} with {}".format(suite, context.raw))
    data = {}
    try:
        checks, data = SUITE_FUNCTIONS[suite](context)
    except MalformedInputException:
        raise
    except AlgebraException as exc:
        LOGGER.info("Suite {} stopped: {}".format(suite, exc.message))
        checks = [CheckResult(suite, False, exc.to_dict())]
    checks = sorted(checks, key=lambda check: check.name)
    report = {
        'suite': suite,
        'algebra': context.algebra_source if isinstance(context.algebra_source, str) else None,
        'ok': all(check.ok for check in checks),
        'checks': [jsonable(check) for check in checks],
    }
    if data:
        report['data'] = jsonable(data)
    if context.timings:
        report['timings'] = {section: float(seconds) for section, seconds in context.sections.items()}
    try:
        REPORT_SCHEMA.validate(report)
    except SchemaError as exc:
        LOGGER.error("Report does not match its schema: {}".format(exc))
        raise
    return report
