"""Symplectic self-orthogonal codes over GF(q): exact counting, existence
bounds, randomized witness construction, and the induced quantum stabilizer
parameters."""

from .census import (CensusReport, enumerate_so_codes, oracle_count_containing,
                     oracle_count_dual_containing)
from .counting import (BoundVerdict, Variant, count_containing,
                       count_dual_containing, count_dual_containing_bound,
                       count_self_orthogonal, dual_distance_verdict,
                       max_guaranteed_distance, primal_distance_verdict,
                       quantum_distance_verdict, sphere_volume, verdict)
from .errors import CapExceededError, InfeasibleError
from .field import Field
from .kernels import backend_name
from .quantum import (AsymptoticPoint, FiniteRatePoint, QuantumParams,
                      asymptotic_rate, delta_zero, finite_rate_point,
                      parse_pauli_label, pauli_label, q_ary_entropy,
                      stabilizer_labels, to_quantum_params)
from .search import (Certificate, SearchConfig, SearchOutcome, TrialStream,
                     certify, mix64, random_so_code, search_witness)
from .symplectic import (DEFAULT_CODEWORD_CAP, SympCode, SympVector,
                         code_from_rows, code_from_text, code_to_text,
                         read_code, singleton_check, singleton_ok, symp_distance,
                         symp_inner, symp_weight, write_code, zero_code)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticPoint", "BoundVerdict", "CapExceededError", "CensusReport",
    "Certificate", "DEFAULT_CODEWORD_CAP", "Field", "FiniteRatePoint",
    "InfeasibleError", "QuantumParams", "SearchConfig", "SearchOutcome",
    "SympCode", "SympVector", "TrialStream", "Variant", "asymptotic_rate",
    "backend_name", "certify", "code_from_rows", "code_from_text",
    "code_to_text", "count_containing", "count_dual_containing",
    "count_dual_containing_bound", "count_self_orthogonal", "delta_zero",
    "dual_distance_verdict", "enumerate_so_codes", "finite_rate_point",
    "max_guaranteed_distance", "mix64", "oracle_count_containing",
    "oracle_count_dual_containing", "parse_pauli_label", "pauli_label",
    "primal_distance_verdict", "q_ary_entropy", "quantum_distance_verdict",
    "random_so_code", "read_code", "search_witness", "singleton_check",
    "singleton_ok", "sphere_volume", "stabilizer_labels", "symp_distance",
    "symp_inner", "symp_weight", "to_quantum_params", "verdict", "write_code",
    "zero_code",
]
