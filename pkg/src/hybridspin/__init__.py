"""Axially symmetric qubit-qutrit system: thermal states, noise, correlations."""

from .channels import (
    ChannelConfig,
    DecayLaw,
    apply_channel,
    coherence_factors,
    decay,
    dephasing_kraus,
    evolved_closed_form,
    kraus_set,
    phase_flip_kraus,
)
from .config import SweepSpec, load_config
from .correlations import (
    DiscordBreakdown,
    PurificationData,
    channel_matrix,
    discord,
    fano_bloch,
    lambda_max_closed_form,
    linear_entropy_qubit,
    mutual_information,
    negativity_closed_form,
    negativity_spectral,
    purify,
    tensor_to_state,
    von_neumann_entropy,
)
from .figures import FIGURE_NAMES, figure_path, load_figure
from .linalg import (
    hermitian_eigenvalues,
    hermitian_exp,
    partial_trace,
    partial_transpose_qutrit,
    trace_norm,
)
from .model import (
    HamiltonianSymbols,
    ModelParams,
    SpinOperators,
    analytic_eigenvalues,
    build_hamiltonian,
    build_spin_operators,
    closed_form_symbols,
    total_sz_operator,
)
from .sweep import SweepResult, run_sweep
from .thermal import gibbs_closed_form, gibbs_oracle, purity

__version__ = "0.1.0"

__all__ = [
    "ChannelConfig", "DecayLaw", "apply_channel", "coherence_factors", "decay",
    "dephasing_kraus", "evolved_closed_form", "kraus_set", "phase_flip_kraus",
    "SweepSpec", "load_config",
    "DiscordBreakdown", "PurificationData", "channel_matrix", "discord",
    "fano_bloch", "lambda_max_closed_form", "linear_entropy_qubit",
    "mutual_information", "negativity_closed_form", "negativity_spectral",
    "purify", "tensor_to_state", "von_neumann_entropy",
    "FIGURE_NAMES", "figure_path", "load_figure",
    "hermitian_eigenvalues", "hermitian_exp", "partial_trace",
    "partial_transpose_qutrit", "trace_norm",
    "HamiltonianSymbols", "ModelParams", "SpinOperators", "analytic_eigenvalues",
    "build_hamiltonian", "build_spin_operators", "closed_form_symbols",
    "total_sz_operator",
    "SweepResult", "run_sweep",
    "gibbs_closed_form", "gibbs_oracle", "purity",
]
