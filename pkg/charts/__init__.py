from .results import draw_hierarchy_line, draw_quantum_bar

__all__ = ["draw_hierarchy_line", "draw_quantum_bar"]
