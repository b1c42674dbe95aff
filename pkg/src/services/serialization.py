"""JSON formats for algebras, multilinear maps, cochains and series"""
import json
from fractions import Fraction

import numpy
from schema import And, Optional, Or, Schema, SchemaError, Use

from src.config import LOGGER
from src.exceptions import MalformedInputException
from src.mixins.LeibnizMixin import LeibnizMixin
from src.models import (CheckResult, Cochain, LeibnizAlgebra, PartSymMap, RackSeries, SymForm,
                        to_fraction)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def parse_rational(value):
    """Rational from an integer or a "p" / "p/q" string"""
    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise MalformedInputException("Empty rational")
    if isinstance(value, float):
        raise MalformedInputException("Floats are not accepted as rationals: {}".format(value))
    return to_fraction(value)


def parse_rational_list(text):
    """ "1,-1/2,1/3" -> (1, -1/2, 1/3); an empty string gives () """
    if isinstance(text, (list, tuple)):
        return tuple(parse_rational(item) for item in text)
    text = (text or "").strip()
    if not text:
        return ()
    return tuple(parse_rational(item) for item in text.split(','))


RATIONAL = And(Or(int, str), Use(parse_rational))
INDEX = And(int, lambda i: i >= 0)

ALGEBRA_SCHEMA = Schema({
    'dim': And(int, lambda d: d >= 1),
    'c': [[[RATIONAL]]],
    Optional('basis'): [str],
    Optional('name'): Or(str, None),
}, ignore_extra_keys=True)

PART_SYM_MAP_SCHEMA = Schema({
    'n': And(int, lambda n: n >= 0),
    'dim': And(int, lambda d: d >= 1),
    'entries': [{'mu': [INDEX], 'j': INDEX, 'k': INDEX, 'v': RATIONAL}],
})

# vector valued forms carry k, scalar ones do not
SYM_FORM_SCHEMA = Schema({
    'p': And(int, lambda p: p >= 0),
    'dim': And(int, lambda d: d >= 1),
    'vector': bool,
    'entries': [{'mu': [INDEX], Optional('k'): INDEX, 'v': RATIONAL}],
})

COCHAIN_SCHEMA = Schema({
    'degree': And(int, lambda n: n >= 0),
    'dim': And(int, lambda d: d >= 1),
    'entries': [{'mu': [INDEX], 'k': INDEX, 'v': RATIONAL}],
})

SERIES_SCHEMA = Schema({
    'algebra': Or(dict, str),
    'N': And(int, lambda n: n >= 1),
    'A': [dict],
})


def _validate(schema, data, what):
    try:
        return schema.validate(data)
    except SchemaError as exc:
        LOGGER.info("Invalid {} document: {}".format(what, exc))
        raise MalformedInputException("Invalid {}: {}".format(what, exc))


def _read_file(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except (IOError, OSError) as exc:
        raise MalformedInputException("Cannot read {}: {}".format(path, exc))
    except ValueError as exc:
        raise MalformedInputException("Invalid JSON in {}: {}".format(path, exc))


def algebra_to_json(alg):
    return {
        'name': alg.name,
        'dim': alg.dim,
        'basis': list(alg.basis),
        'c': [[[format_rational(a) for a in cell] for cell in row] for row in alg.c],
    }


def algebra_from_json(data, checked=True):
    data = _validate(ALGEBRA_SCHEMA, data, "algebra")
    return LeibnizAlgebra(data['dim'], data.get('basis'), data['c'], checked=checked,
                          name=data.get('name'))


def load_algebra(source, checked=True):
    """
    builtin:NAME, a bare builtin name, @file.json or an already parsed document.
    With checked=False a document violating the left Leibniz identity still loads.
    """
    if isinstance(source, LeibnizAlgebra):
        return source
    if isinstance(source, dict):
        return algebra_from_json(source, checked)
    if not isinstance(source, str) or not source.strip():
        raise MalformedInputException("Missing algebra")
    source = source.strip()
    if source.startswith('@'):
        return algebra_from_json(_read_file(source[1:]), checked)
    if source.startswith('builtin:'):
        source = source[len('builtin:'):]
    return LeibnizMixin.builtin(source)


def _check_indices(indices, dim, what):
    for i in indices:
        if i >= dim:
            raise MalformedInputException("{} index {} out of range for dimension {}".format(
                what, i, dim))


def _sparse_entries(key_of, coeffs):
    """One entry per nonzero output coordinate k"""
    entries = []
    for key, value in sorted(coeffs.items()):
        for k, a in enumerate(value):
            if a != 0:
                entry = key_of(key)
                entry.update({'k': k, 'v': format_rational(a)})
                entries.append(entry)
    return entries


def _dense_vectors(entries, dim, key_of, what):
    """{key: vector} from sparse entries, repeated coordinates add up"""
    vectors = {}
    for entry in entries:
        key = key_of(entry)
        _check_indices([entry['k']], dim, what + " output")
        current = vectors.setdefault(key, [Fraction(0)] * dim)
        current[entry['k']] += entry['v']
    return vectors


def part_sym_map_to_json(map_):
    return {
        'n': map_.n,
        'dim': map_.dim,
        'entries': _sparse_entries(lambda key: {'mu': list(key[0]), 'j': key[1]}, map_.coeffs),
    }


def part_sym_map_from_json(data):
    data = _validate(PART_SYM_MAP_SCHEMA, data, "map")
    for entry in data['entries']:
        _check_indices(entry['mu'] + [entry['j']], data['dim'], "map")

    def key_of(entry):
        return tuple(sorted(entry['mu'])), entry['j']

    return PartSymMap(data['n'], data['dim'],
                      _dense_vectors(data['entries'], data['dim'], key_of, "map"))


def sym_form_to_json(form):
    if form.is_vector:
        entries = _sparse_entries(lambda mu: {'mu': list(mu)}, form.coeffs)
    else:
        entries = [{'mu': list(mu), 'v': format_rational(v)} for mu, v in sorted(form.coeffs.items())]
    return {
        'p': form.p,
        'dim': form.dim,
        'vector': form.is_vector,
        'entries': entries,
    }


def sym_form_from_json(data):
    data = _validate(SYM_FORM_SCHEMA, data, "form")
    dim = data['dim']
    for entry in data['entries']:
        _check_indices(entry['mu'], dim, "form")
        if ('k' in entry) != data['vector']:
            raise MalformedInputException("Form entries need k exactly when the form is vector valued")
    if data['vector']:
        coeffs = _dense_vectors(data['entries'], dim, lambda entry: tuple(sorted(entry['mu'])), "form")
    else:
        coeffs = {}
        for entry in data['entries']:
            mu = tuple(sorted(entry['mu']))
            coeffs[mu] = coeffs.get(mu, Fraction(0)) + entry['v']
    return SymForm(data['p'], dim, coeffs, data['vector'])


def cochain_to_json(w):
    return {
        'degree': w.degree,
        'dim': w.dim,
        'entries': _sparse_entries(lambda t: {'mu': list(t)}, w.coeffs),
    }


def cochain_from_json(data):
    data = _validate(COCHAIN_SCHEMA, data, "cochain")
    for entry in data['entries']:
        _check_indices(entry['mu'], data['dim'], "cochain")
    return Cochain(data['degree'], data['dim'],
                   _dense_vectors(data['entries'], data['dim'], lambda entry: tuple(entry['mu']),
                                  "cochain"))


def series_to_json(series):
    return {
        'algebra': algebra_to_json(series.alg),
        'N': series.N,
        'A': [part_sym_map_to_json(component) for component in series.maps],
    }


def series_from_json(data):
    """The algebra is an inline document or a builtin name"""
    data = _validate(SERIES_SCHEMA, data, "series")
    if len(data['A']) != data['N']:
        raise MalformedInputException("Series lists {} components for N = {}".format(
            len(data['A']), data['N']))
    alg = load_algebra(data['algebra'])
    maps = [part_sym_map_from_json(component) for component in data['A']]
    for n, component in enumerate(maps, start=1):
        if component.n != n or component.dim != alg.dim:
            raise MalformedInputException("Component {} has arity {} and dimension {}".format(
                n, component.n, component.dim))
    return RackSeries(alg, maps)


def load_series(source):
    if isinstance(source, RackSeries):
        return source
    if isinstance(source, dict):
        return series_from_json(source)
    if isinstance(source, str) and source.startswith('@'):
        return series_from_json(_read_file(source[1:]))
    raise MalformedInputException("Series must be given as @file.json")


def jsonable(value):
    """Plain JSON value: rationals as strings, tuples as lists, check results as dicts"""
    if isinstance(value, CheckResult):
        result = {'name': value.name, 'ok': bool(value.ok), 'details': jsonable(value.details)}
        if value.witness is not None:
            result['witness'] = jsonable(value.witness)
        return result
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (numpy.floating, float)):
        return float(value)
    if isinstance(value, (numpy.integer, int)):
        return int(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, numpy.ndarray)):
        return [jsonable(item) for item in value]
    return str(value)


def dumps(document):
    return json.dumps(jsonable(document), sort_keys=True, indent=2)
