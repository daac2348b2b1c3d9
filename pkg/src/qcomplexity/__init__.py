"""Classical and quantum memory costs of stochastic processes, plus the
measurement games where shared entanglement outperforms classical
correlations."""

from .errors import (ContractViolationError, MachineFormatError,
                     ReducibleMachineError)
from .games import (BipartiteStrategy, ChshOptimizationResult, GameOutcome,
                    MeasurementBasis, TripartiteProtocol, X_BASIS, Y_BASIS,
                    Z_BASIS, and_game_success, bell_state,
                    chsh_from_same_outcome, chsh_value, classical_chsh_max,
                    classical_ghz_game_max, deterministic_chsh_table,
                    embed_deterministic_strategy, ghz_round, ghz_state,
                    ghz_success, optimize_chsh, same_outcome_probability,
                    success_from_chsh, TSIRELSON_BOUND)
from .numerics import (hermitian_eigenvalues, shannon_entropy, tensor_product,
                       von_neumann_entropy)
from .process import (EpsilonMachine, SymbolSequence, Violation,
                      build_and_process, build_xor_process,
                      is_retrodictively_deterministic, machine_from_json,
                      machine_to_json, minimize, sample, stationary,
                      statistical_complexity, validate)
from .qmachine import (QuantumCausalEnsemble, SweepTable, causal_state_vectors,
                       complexity_sweep, density_operator, gram_matrix,
                       quantum_complexity, weighted_gram)

__version__ = "0.1.0"
