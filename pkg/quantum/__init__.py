from .css import PURITY_NOTE, QuantumParams, css_from_sets, css_params, dual_pair_params, quantum_table

__all__ = ["PURITY_NOTE", "QuantumParams", "css_from_sets", "css_params", "dual_pair_params", "quantum_table"]
