"""
Surface syntax for goals.
"""

from .parser import ParsedGoal, parse_expr, print_goal, print_term, tokenize
