"""Superpositions of snarks by Petersen superedges, and normal
5-edge-colorings of them, validated end to end by exact brute-force oracles.
"""

__version__ = "0.1.0"

from .coloring import (  # noqa: F401
    Coloring,
    ColorScheme,
    classify_edge,
    find_kempe_chain,
    is_normal,
    is_proper,
    kempe_swap,
    permute_colors,
    poor_count,
    restriction,
    rich_count,
    scheme_of,
    schemes_consistent,
)
from .extender import (  # noqa: F401
    ChainDecomposition,
    Chunk,
    ExtensionResult,
    MethodInapplicable,
    VerificationFailed,
    color_odd_pair,
    color_regular_pair,
    color_singleton,
    decompose,
    extend,
    verify_extension,
)
from .multipole import (  # noqa: F401
    Multipole,
    ValidationReport,
    identify_semiedges,
    induced_submultipole,
    make_multipole,
    subdivide_edge,
    validate,
)
from .oracle import (  # noqa: F401
    BoundaryConstraint,
    check_snark,
    find_normal_coloring,
    is_bridgeless,
    is_three_edge_colorable,
    search_normal_coloring,
)
from .petersen import (  # noqa: F401
    SlotContext,
    TemplateInstance,
    all_contexts,
    apply_iso,
    is_left_compatible,
    is_right_monochromatic,
    petersen_graph,
    petersen_superedge,
    sigma_color,
    template,
    template_registry,
)
from .superposition import (  # noqa: F401
    JunctionParams,
    Superposition,
    SuperpositionSpec,
    build,
    m_int_of,
    reverse_spec,
    sigma_int,
    validate_spec,
)
