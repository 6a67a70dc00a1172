"""Spectral operators and diffusion dynamics for directed 2-dimensional
simplicial complexes."""

from .complexes import (
    AdjacencyRecord,
    DirectedEdge,
    DirectedSimplicialComplex,
    DirectedTriangle,
    delta_sign,
    incidence_sign,
    lower_adjacent,
    orient_manifold,
    upper_adjacent_edges,
)
from .connection import (
    ConnectionOperator,
    RotationBlock,
    classify_1down,
    classify_1up,
    classify_2down,
    connection_1down,
    connection_1up,
    connection_2down,
    quadratic_form,
    quadratic_form_pairwise,
)
from .diffusion import (
    AngleForm,
    Cochain,
    Trajectory,
    classify_equilibrium,
    diffuse,
    random_cochain,
    spectral_propagate,
    to_angles,
)
from .errors import DirlapError
from .generators import (
    TorusSpec,
    directed_triangle,
    load_complex,
    random_complex,
    save_complex,
    triangulated_torus,
)
from .graph_laplacians import (
    RotationAssignment,
    check_consistency,
    combinatorial_laplacian,
    graph_connection_laplacian,
    magnetic_laplacian,
)
from .hodge import betti_number, bochner_1up, hodge_laplacian, incidence_matrix
from .linalg import (
    commutator,
    frobenius_norm,
    hermitian_eigendecomposition,
    hermitian_eigenvalues,
    pauli,
)
from .sweeps import (
    SweepResult,
    commutator_sweep,
    degeneracy_profile,
    delta_grid,
    export_csv,
    export_trajectory_csv,
    spectrum_sweep,
    zero_eigenvalue_deltas,
)

__version__ = "0.1.0"
