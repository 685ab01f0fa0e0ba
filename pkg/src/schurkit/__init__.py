"""Sum-free partitions: verification, search, composition, and bound ledgers."""

from .bounds import (
    BoundFact,
    BoundLedger,
    LedgerError,
    PRIOR_GROWTH_BOUND,
    Provenance,
    RecurrenceRule,
    default_registry,
    format_bounds_table,
    format_registry,
    growth_constant,
    load_registry,
    load_registry_text,
    rule_from_template,
)
from .formats import (
    FormatError,
    format_checkpoint,
    format_partition,
    format_template,
    parse_checkpoint,
    parse_partition,
    parse_template,
    read_checkpoint,
    read_partition,
    read_template,
    write_checkpoint,
    write_partition,
    write_template,
)
from .partition import (
    Partition,
    PartitionError,
    PartitionProfile,
    SubsetView,
    from_colouring,
    is_symmetric,
    make_partition,
    profile,
    subset_view,
)
from .search import (
    ExhaustiveResult,
    PartialPartition,
    SearchConfig,
    SearchError,
    SearchOutcome,
    SearchStats,
    SeedContradiction,
    SymmetryImpossibleWarning,
    blockage_snapshot,
    enumerate_schur_partitions,
    exhaustive_max,
    extend,
    extend_parallel,
    frontier_branches,
    resume,
    seed_prefix,
    seed_symmetric,
    symmetry_obstruction,
)
from .template import (
    CompositionCertificate,
    CompositionError,
    Template,
    TemplateFailure,
    TemplateSearchResult,
    TemplateValidation,
    all_templates_up_to,
    compose,
    enumerate_templates,
    iterate,
    template_search,
    validate_template,
)
from .verify import (
    VerifyReport,
    Violation,
    blocking_witness,
    count_blocked,
    verify_mod_sum_free,
    verify_schur,
    verify_sum_free,
    verify_symmetric_schur,
)

__version__ = "0.1.0"
