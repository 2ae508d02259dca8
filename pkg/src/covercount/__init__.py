"""Exact computation in the tree-series algebra and around it: covering
counts, psi-class brackets, and 2D-gravity constants.

Everything is exact rational arithmetic; floating point appears only when a
caller evaluates an asymptotic prediction numerically.
"""

from .algebra import (
    AsymptoticTerm,
    Identification,
    LaurentPolyX,
    Radical,
    ScaledRational,
    ZPoly,
    a_closed,
    dkz2_poly,
    dkz_poly,
    identify_in_a,
    leading_asymptotic,
    seq_a,
    series_y,
    series_z,
    ypower_closed,
    zpower_in_basis,
)
from .errors import BudgetExceeded, ConsistencyError, DomainError
from .exact import (
    LinearSolution,
    LinearSystem,
    Rational,
    TruncatedSeries,
    format_rational,
    series_exp,
    solve_exact,
)
from .gravity import (
    GravityConstant,
    PainleveSeries,
    PainleveSolution,
    TauSpec,
    b_constant,
    free_energy_coefficient,
    free_energy_coeffs,
    h_tau_series,
    hg_empty_leading,
    painleve_solve,
    string_dilaton_check,
    tau_bracket,
    tau_series_asymptotic,
    vanishing_combination,
)
from .hurwitz_series import (
    HurwitzSeries,
    PhiFit,
    PhiPolynomial,
    fit_phi,
    h0_closed,
    h1_empty_series,
    h_series,
    normal_form_series,
    oracle_data,
    phi_degree_bound,
)
from .monodromy import (
    CoveringSpec,
    hurwitz_connected,
    hurwitz_disconnected,
)
from .symmetric import (
    Partition,
    character,
    class_elements,
    conjugacy_class_size,
    cycle_type,
    partitions_of,
)
from .trees import (
    LabeledTree,
    dendrology_m,
    dendrology_p,
    enumerate_trees,
)

__version__ = "0.1.0"
