"""elastomix: inverse design toolkit for 3-component mixture elastomers.

Fits Scheffé response-surface models from transparency/hardness
measurements, prunes them by partial-F ANOVA, and inverts property
targets into integer material compositions with operating windows,
feasibility checks and error reports.
"""

__version__ = "0.1.0"

from .desirability import (  # noqa: F401
    Criterion,
    DesirabilityConfig,
    DesignSolution,
    d_value,
    guideline_config,
    optimize,
    overall_D,
)
from .errors import ElastomixError  # noqa: F401
from .mixture import (  # noqa: F401
    ComponentBounds,
    Composition,
    enumerate_lattice,
    paper_sample_plan,
    ternary_xy,
    validate_composition,
)
from .models import (  # noqa: F401
    PropertyDataset,
    ScheffeModel,
    TermSet,
    anova_partial_f,
    design_matrix,
    fit_ols,
    predict,
    prune_terms,
)
from .window import OperatingWindow, WindowSpec, optimal_window  # noqa: F401
