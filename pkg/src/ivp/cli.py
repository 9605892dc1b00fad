"""Command line front end.

Exit codes: 0 for a pass or a yes (a produced refutation certificate
counts as success), 1 for a check failure or a no verdict, 2 for usage,
parse or domain errors.  The default seed comes from IVP_SEED when set.
"""

import argparse
import io
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import localfield
from . import intdecider
from .expr import ExpressionError, parse_expression, format_value
from .localfield import SetDescriptor, valuation, residue
from .refuter import Candidate, refute_candidate
from .suite import Budget, run_all

REPORT_SCHEMA = {
    'type': 'object',
    'required': ['seed', 'budget', 'checks'],
    'additionalProperties': False,
    'properties': {
        'seed': {'type': 'integer'},
        'budget': {
            'type': 'object',
            'required': ['degree_bound', 'samples'],
            'additionalProperties': False,
            'properties': {
                'degree_bound': {'type': 'integer'},
                'samples': {'type': 'integer'},
            },
        },
        'checks': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['id', 'status', 'details'],
                'additionalProperties': False,
                'properties': {
                    'id': {'type': 'string'},
                    'status': {'enum': ['pass', 'fail']},
                    'witness': {'type': 'string'},
                    'details': {'type': 'string'},
                },
            },
        },
    },
}


def report_to_dict(budget, reports):
    """JSON-ready report matching REPORT_SCHEMA."""
    checks = []
    for r in reports:
        entry = {'id': r.check_id, 'status': r.status, 'details': r.details}
        if r.witness is not None:
            entry['witness'] = r.witness
        checks.append(entry)
    return {
        'seed': budget.seed,
        'budget': {'degree_bound': budget.degree_bound, 'samples': budget.samples},
        'checks': checks,
    }


def _default_seed():
    return int(os.environ.get('IVP_SEED', '42'))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='ivp',
        description='Exact checks around integer-valued polynomials on the '
                    'pullback ring D = GF(2) + t(t+1)T inside GF(2)(t).')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify-all', help='run the whole claim suite')
    p.add_argument('--degree-bound', type=int, default=8)
    p.add_argument('--samples', type=int, default=10_000)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--format', choices=('text', 'json'), default='text')

    p = sub.add_parser('member', help='membership of a field element in a named set')
    p.add_argument('expr')
    p.add_argument('--set', dest='set_name', required=True,
                   help='one of S, T, D, unitD, N0[^k], N1[^k], M[^k]')

    p = sub.add_parser('decide', help='exact integer-valuedness of a polynomial')
    p.add_argument('expr')
    p.add_argument('--target', choices=('T', 'D'), required=True)

    p = sub.add_parser('refute', help='refute a candidate representation of X^2+X')
    p.add_argument('candidate_file')
    p.add_argument('--force-n', type=int, default=None)

    p = sub.add_parser('eval', help='evaluate a polynomial at a field element')
    p.add_argument('expr')
    p.add_argument('--at', required=True)

    return parser


def parse_candidate_text(text):
    """Candidate from JSON {"terms": [{"a": ..., "h": ...}]} or from
    lines of the form "a-expression ; h-expression"."""
    pairs = []
    if text.lstrip().startswith('{'):
        data = json.loads(text)
        terms = data.get('terms')
        if not isinstance(terms, list):
            raise ValueError('candidate JSON needs a "terms" list')
        for k, term in enumerate(terms):
            if not isinstance(term, dict) or 'a' not in term or 'h' not in term:
                raise ValueError(f'candidate term {k} needs "a" and "h" entries')
            pairs.append((parse_expression(term['a']).to_ratfunc(),
                          parse_expression(term['h']).to_xpoly()))
    else:
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            a_src, sep, h_src = line.partition(';')
            if not sep:
                raise ValueError(f'bad candidate line {line!r}: expected "a ; h"')
            pairs.append((parse_expression(a_src).to_ratfunc(),
                          parse_expression(h_src).to_xpoly()))
    return Candidate.from_pairs(pairs)


def _membership_explanation(x):
    v0 = valuation(x, 0)
    v1 = valuation(x, 1)
    r0 = residue(x, 0) if v0 >= 0 else 'pole'
    r1 = residue(x, 1) if v1 >= 0 else 'pole'
    return (f'v0 = {v0}, v1 = {v1}; residues at the two places: {r0}, {r1}')


def _cmd_member(args):
    x = parse_expression(args.expr).to_ratfunc()
    target = SetDescriptor.parse(args.set_name)
    ok = localfield.is_member(x, target)
    lines = ['yes' if ok else 'no',
             f'{format_value(x)} in {target}: {"yes" if ok else "no"}',
             _membership_explanation(x)]
    return (0 if ok else 1), '\n'.join(lines)


def _cmd_decide(args):
    parsed = parse_expression(args.expr)
    p = parsed.to_xpoly()
    var = parsed.variable or 'X'
    if args.target == 'T':
        verdict = intdecider.decide_int_DT(p)
    else:
        verdict = intdecider.decide_int_D(p)
    lines = ['yes' if verdict.is_member else 'no']
    lines.append(f'{p.to_string(var)} maps D into {args.target}: '
                 f'{"yes" if verdict.is_member else "no"} '
                 f'(checked at precision {verdict.precision})')
    if not verdict.is_member:
        lines.append(f'witness: x = {format_value(verdict.witness)} gives '
                     f'{format_value(verdict.witness_value)}')
        lines.append('witness value: ' + _membership_explanation(verdict.witness_value))
    return (0 if verdict.is_member else 1), '\n'.join(lines)


def _cmd_refute(args):
    with open(args.candidate_file, encoding='utf-8') as fh:
        text = fh.read()
    candidate = parse_candidate_text(text)
    cert = refute_candidate(candidate, force_n=args.force_n)
    header = f'candidate with {len(candidate)} term(s): refuted'
    return 0, header + '\n' + cert.describe()


def _cmd_eval(args):
    parsed = parse_expression(args.expr)
    point = parse_expression(args.at).to_ratfunc()
    value = parsed.to_xpoly().evaluate(point)
    return 0, format_value(value)


def _cmd_verify_all(args):
    seed = args.seed if args.seed is not None else _default_seed()
    budget = Budget(degree_bound=args.degree_bound, samples=args.samples, seed=seed)
    reports = run_all(budget)
    ok = all(r.passed for r in reports)
    if args.format == 'json':
        return (0 if ok else 1), json.dumps(report_to_dict(budget, reports), indent=2)
    lines = []
    for r in reports:
        lines.append(f'[{r.status}] {r.check_id}: {r.details}')
    passed = sum(r.passed for r in reports)
    lines.append(f'{len(reports)} checks: {passed} passed, {len(reports) - passed} '
                 f'failed (degree bound {budget.degree_bound}, samples '
                 f'{budget.samples}, seed {budget.seed})')
    return (0 if ok else 1), '\n'.join(lines)


_DISPATCH = {
    'verify-all': _cmd_verify_all,
    'member': _cmd_member,
    'decide': _cmd_decide,
    'refute': _cmd_refute,
    'eval': _cmd_eval,
}


def execute_command(argv):
    """Run one command line; returns (exit_code, output_text)."""
    parser = build_parser()
    capture = io.StringIO()
    try:
        with redirect_stderr(capture), redirect_stdout(capture):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return (0 if code == 0 else 2), capture.getvalue().rstrip()
    try:
        return _DISPATCH[args.command](args)
    except (ExpressionError, ValueError, ZeroDivisionError, OSError,
            json.JSONDecodeError) as exc:
        return 2, f'error: {exc}'


def main(argv=None):
    code, output = execute_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    if output:
        print(output, file=stream)
    return code


if __name__ == '__main__':
    sys.exit(main())
