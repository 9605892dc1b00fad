"""Exact arithmetic and verification toolkit for integer-valued polynomials
on the pullback ring D = GF(2) + t(t+1)T inside the rational function field
GF(2)(t).

The package decides ring and ideal membership from the two discrete
valuations at t and t+1, decides integer-valuedness of polynomials by
finite residue-class enumeration, refutes claimed finite representations
of X^2+X over the ideal t(t+1)T, and machine-checks the structural claims
that assemble into the failure of flatness for the module of
integer-valued polynomials.
"""

from .gf2poly import BinaryPoly
from .localfield import (RatFunc, SetDescriptor, make_reduced, valuation,
                         residue, is_member, lift_from_residues, minv_witness,
                         S, T, D, UNIT_D, N0, N1, M)
from .ivpoly import (XPoly, evaluate, substitute_affine, pole_bound,
                     obstruction_poly, x_squared_plus_x)
from .intdecider import (MembershipVerdict, enum_representatives,
                         decide_int_DT, decide_int_D, sampled_membership_check)
from .refuter import (Candidate, RefutationCertificate, probe_point, choose_n,
                      verify_term_inequality, difference_in_M, refute_candidate)
from .suite import Budget, CheckReport, check_lemma, check_obstruction, run_all

__version__ = '0.1.0'

__all__ = [
    'BinaryPoly', 'RatFunc', 'SetDescriptor', 'make_reduced', 'valuation',
    'residue', 'is_member', 'lift_from_residues', 'minv_witness',
    'S', 'T', 'D', 'UNIT_D', 'N0', 'N1', 'M',
    'XPoly', 'evaluate', 'substitute_affine', 'pole_bound',
    'obstruction_poly', 'x_squared_plus_x',
    'MembershipVerdict', 'enum_representatives', 'decide_int_DT',
    'decide_int_D', 'sampled_membership_check',
    'Candidate', 'RefutationCertificate', 'probe_point', 'choose_n',
    'verify_term_inequality', 'difference_in_M', 'refute_candidate',
    'Budget', 'CheckReport', 'check_lemma', 'check_obstruction', 'run_all',
    '__version__',
]
