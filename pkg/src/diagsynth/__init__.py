"""diagsynth: quantum circuits for diagonal unitaries from CNOT and Rz gates.

The input is an n-qubit diagonal given as 2**n phase angles. Three
synthesizers are provided: parity-controlled rotation synthesis (the main
route, 2**(n+1) - 3 elementary gates), fully-conditioned rotation synthesis
(multi-controlled Rz blocks), and the two-level baseline (X-conjugated
controlled diagonals). Every output can be replayed exactly against its
input by the permutation-phase simulator.
"""

from .angles import DEFAULT_TOL, ZERO_ANGLE_EPS, wrap_angle
from .circuits import (
    CDIAG,
    CNOT,
    MCRZ,
    RZ,
    Circuit,
    Gate,
    SynthesisReport,
    X,
    count_gates,
    gate_kind,
    peephole_cancel,
)
from .diagonal import (
    DiagonalUnitary,
    TensorSplit,
    compose,
    equal_up_to_global_phase,
    from_thetas,
    phase_aligned_residual,
    tensor_split,
)
from .errors import (
    DimensionError,
    FormatError,
    NotATensorError,
    NotDiagonalError,
    SingularSystemError,
    SynthesisError,
    UnsupportedGateError,
)
from .obstruction import character_angle, is_tensor, obstruction
from .serialize import (
    load_circuit,
    load_diagonal,
    parse_qasm,
    save_circuit,
    save_diagonal,
    to_qasm,
)
from .simulate import apply_to_basis, basis_action, circuit_to_diagonal, verify
from .subsets import (
    conditioned_states,
    dictionary_subsets,
    flip_states,
    gray_subsets,
    lines_to_mask,
    subset_lines,
)
from .synth_controlled import (
    controlled_block_angles,
    controlled_rotation_gates,
    synth_controlled,
)
from .synth_twolevel import synth_twolevel
from .synth_xor import synth_xor, xor_block_angles, xor_rotation_gates
from .systems import (
    BlockMatrix,
    controlled_block_matrix,
    solve_block_angles,
    xor_block_matrix,
    xor_flip_indicator_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "ZERO_ANGLE_EPS",
    "wrap_angle",
    "X",
    "CNOT",
    "RZ",
    "MCRZ",
    "CDIAG",
    "Gate",
    "Circuit",
    "SynthesisReport",
    "count_gates",
    "gate_kind",
    "peephole_cancel",
    "DiagonalUnitary",
    "TensorSplit",
    "from_thetas",
    "compose",
    "equal_up_to_global_phase",
    "phase_aligned_residual",
    "tensor_split",
    "DimensionError",
    "FormatError",
    "NotATensorError",
    "NotDiagonalError",
    "SingularSystemError",
    "SynthesisError",
    "UnsupportedGateError",
    "character_angle",
    "obstruction",
    "is_tensor",
    "gray_subsets",
    "dictionary_subsets",
    "flip_states",
    "conditioned_states",
    "subset_lines",
    "lines_to_mask",
    "BlockMatrix",
    "xor_block_matrix",
    "controlled_block_matrix",
    "xor_flip_indicator_matrix",
    "solve_block_angles",
    "apply_to_basis",
    "basis_action",
    "circuit_to_diagonal",
    "verify",
    "synth_xor",
    "xor_rotation_gates",
    "xor_block_angles",
    "synth_controlled",
    "controlled_rotation_gates",
    "controlled_block_angles",
    "synth_twolevel",
    "load_diagonal",
    "save_diagonal",
    "load_circuit",
    "save_circuit",
    "to_qasm",
    "parse_qasm",
]
