"""Exact Lie algebra computations; rationals cross the boundary as fractions.Fraction."""

import json
from fractions import Fraction

from . import _quadlie
from ._quadlie import InputError

__all__ = [
    "InputError",
    "analyze",
    "extend",
    "check_metric",
    "double_extension",
    "reduce_lambda",
    "check",
    "classify",
    "catalog",
    "metric_catalog",
    "split_check",
]


def _out(x):
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return x
    if isinstance(x, dict):
        return {k: _out(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return type(x)(_out(v) for v in x)
    return x


def _rows(m):
    return [[str(Fraction(v)) for v in row] for row in m]


def _doc(d):
    return d if isinstance(d, str) else json.dumps(d)


def analyze(document):
    return json.loads(_quadlie.analyze(_doc(document)))


def extend(document):
    return json.loads(_quadlie.extend(_doc(document)))


def check_metric(document):
    return json.loads(_quadlie.check_metric(_doc(document)))


def double_extension(document):
    return json.loads(_quadlie.double_extension(_doc(document)))


def reduce_lambda(lam):
    out = _quadlie.reduce_lambda(_rows(lam))
    return {k: (v if k == "form" else _out(v)) for k, v in out.items()}


def _heis_args(phi1, phi2, lam, mu):
    return _rows(phi1), _rows(phi2), _rows(lam), _rows(mu)


def check(phi1, phi2, lam, mu):
    return _quadlie.check(*_heis_args(phi1, phi2, lam, mu))


def classify(phi1, phi2, lam, mu):
    out = _quadlie.classify(*_heis_args(phi1, phi2, lam, mu))
    out["normal_form"] = _out(out["normal_form"])
    out["witness"] = _out(out["witness"])
    return out


def catalog():
    fams = _quadlie.catalog()
    for f in fams:
        f["representative"] = _out(f["representative"])
    return fams


def metric_catalog(r=3):
    return _quadlie.metric_catalog(r)


def split_check(tag, r):
    return _quadlie.split_check(tag, r)
