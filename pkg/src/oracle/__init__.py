"""
Independent provability oracles and random goal generators; used by tests and
benchmarks, never by the solvers.
"""

from .bfs import OracleConfig, oracle_config, oracle_equal, oracle_proof, rewrites
from .direct import direct_oracle
from .sampling import perturb, random_pair, random_pairs, random_term, small_constants, solvable_goal
