"""
Numerical comparison records.

Every inequality or identity verified by the library is returned as a
:class:`Check` so the slack is kept next to the pass/fail flag.
"""

import math


class Check:
    """
    One numerical comparison ``lhs <= rhs`` or ``lhs == rhs``.

    Args:
        name (str): identifier of the property being checked
        lhs: observed side. Complex values are allowed for ``==``
        rhs: reference side
        relation (str): ``'<='`` or ``'=='``
        rtol (float): relative tolerance, scaled by ``|rhs|`` (``<=``)
            or by ``max(|lhs|, |rhs|)`` (``==``)
        atol (float): absolute tolerance
        witness (str): digest of the input that produced this record

    """

    __slots__ = ('name', 'lhs', 'rhs', 'relation', 'rtol', 'atol', 'witness')

    def __init__(self, name, lhs, rhs, relation='<=', rtol=0.0, atol=0.0, witness=None):
        if relation not in ('<=', '=='):
            raise ValueError('Unknown relation {}'.format(relation))
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.relation = relation
        self.rtol = rtol
        self.atol = atol
        self.witness = witness

    @property
    def allowed(self):
        if self.relation == '<=':
            return self.rhs + self.rtol * abs(self.rhs) + self.atol
        return self.rtol * max(abs(self.lhs), abs(self.rhs)) + self.atol

    @property
    def excess(self):
        """``lhs - rhs`` for inequalities, ``|lhs - rhs|`` for identities"""
        if self.relation == '<=':
            return self.lhs - self.rhs
        return abs(self.lhs - self.rhs)

    @property
    def margin(self):
        """Remaining room before the check fails. Negative means a violation"""
        if self.relation == '<=':
            return float(self.allowed - self.lhs)
        return float(self.allowed - abs(self.lhs - self.rhs))

    @property
    def ok(self):
        margin = self.margin
        return not math.isnan(margin) and margin >= 0

    def to_dict(self):
        return {
            'name': self.name,
            'relation': self.relation,
            'lhs': _plain(self.lhs),
            'rhs': _plain(self.rhs),
            'excess': float(self.excess),
            'margin': self.margin,
            'ok': self.ok,
            'witness': self.witness
        }

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return 'Check({!r}, {!r} {} {!r}, margin={:.3e})'.format(self.name, self.lhs, self.relation, self.rhs, self.margin)


def _plain(value):
    value = complex(value)
    if value.imag == 0:
        return value.real
    return [value.real, value.imag]


class CheckReport:
    """
    Ordered collection of :class:`Check`.

    Args:
        name (str): name of the battery
        checks (iterable): initial checks
        details (dict): extra values worth reporting (e.g. slack per t)

    """

    def __init__(self, name, checks=None, details=None):
        self.name = name
        self.checks = list(checks) if checks is not None else []
        self.details = dict(details) if details is not None else {}

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    @property
    def worst(self):
        """The check with the smallest margin, None when empty"""
        if len(self.checks) == 0:
            return None
        return min(self.checks, key=lambda c: c.margin)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return 'CheckReport({!r}, {} checks, ok={})'.format(self.name, len(self.checks), self.ok)
