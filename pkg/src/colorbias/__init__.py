"""Color-bias toolkit for Hamilton cycles in edge-colored graphs.

Builds the reference extremal constructions, detects and strips bad bowties,
classifies vertices into structural types, recovers stability partitions, and
certifies the matching-exclusion conclusions exactly at desk scale.
"""

__version__ = "0.1.0"

from .bowtie import (
    AmplifierResult,
    Bowtie,
    BowtiePacking,
    StripResult,
    amplifier_swap,
    color_count_f,
    enumerate_bowties,
    greedy_disjoint_bad_packing,
    is_bad,
    strip_bad_bowties,
)
from .constructions import (
    ConstructionSpec,
    build_counterexample_2,
    build_general_r,
    build_tripartite_3,
    counterexample_min_degree,
)
from .errors import ColorBiasError
from .graph import (
    ColoredGraph,
    bipartite_between,
    color_class,
    induced_subgraph,
    load_graph,
    min_degree,
    save_graph,
)
from .hamilton import (
    BiasReport,
    BiasSpectrum,
    HamiltonCycle,
    PathSystem,
    bias_spectrum,
    canonical_cycle,
    color_bias,
    enumerate_hamilton_cycles,
    extend_to_hamilton,
    has_hamilton_cycle,
)
from .matching import is_nearly_empty, is_nearly_monochromatic, max_matching
from .structure import (
    CertificateReport,
    DichotomyReport,
    StructureCertificate,
    VertexType,
    check_certificate,
    classify_vertex,
    default_s,
    global_dichotomy,
    neighborhood_profile,
    recover_partition,
    triangle_edge_type,
)

__all__ = [
    "__version__",
    "AmplifierResult",
    "BiasReport",
    "BiasSpectrum",
    "Bowtie",
    "BowtiePacking",
    "CertificateReport",
    "ColorBiasError",
    "ColoredGraph",
    "ConstructionSpec",
    "DichotomyReport",
    "HamiltonCycle",
    "PathSystem",
    "StripResult",
    "StructureCertificate",
    "VertexType",
    "amplifier_swap",
    "bias_spectrum",
    "bipartite_between",
    "build_counterexample_2",
    "build_general_r",
    "build_tripartite_3",
    "canonical_cycle",
    "check_certificate",
    "classify_vertex",
    "color_bias",
    "color_class",
    "color_count_f",
    "counterexample_min_degree",
    "default_s",
    "enumerate_bowties",
    "enumerate_hamilton_cycles",
    "extend_to_hamilton",
    "global_dichotomy",
    "greedy_disjoint_bad_packing",
    "has_hamilton_cycle",
    "induced_subgraph",
    "is_bad",
    "is_nearly_empty",
    "is_nearly_monochromatic",
    "load_graph",
    "max_matching",
    "min_degree",
    "neighborhood_profile",
    "recover_partition",
    "save_graph",
    "strip_bad_bowties",
    "triangle_edge_type",
]
