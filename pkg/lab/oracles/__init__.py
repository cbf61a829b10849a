"""Brute-force reference implementations.

Nothing here imports the chains or functionals packages.
"""
from lab.oracles.components import oracle_chain_ball, oracle_chain_component
from lab.oracles.kcenter import oracle_kcenter
from lab.oracles.minimax import oracle_minimax
