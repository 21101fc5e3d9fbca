"""
Oscillator Module - the generalized oscillator algebra in a truncated Fock basis
"""
from oscillator.operators import (
    OperatorLabel, OperatorTruncation,
    position_operator, number_operator, b_operator,
    lowering_shift, ladder_ops, momentum_and_hamiltonian
)
from oscillator.commutators import check_theorem2, deformation_parameters

__all__ = [
    'OperatorLabel', 'OperatorTruncation',
    'position_operator', 'number_operator', 'b_operator',
    'lowering_shift', 'ladder_ops', 'momentum_and_hamiltonian',
    'check_theorem2', 'deformation_parameters'
]
