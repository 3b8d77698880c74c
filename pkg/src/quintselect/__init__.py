"""Selection of the k-th smallest element by sampling two pivots and
partitioning into five blocks, with comparison counting and benchmark
tooling."""

from .generators import Sequence, SequenceSpec, generate
from .instrumentation import AggregateStats, RunStats, aggregate, gamma_avg
from .partition import (
    PartitionBounds,
    PreparedLayout,
    prepare_quintary,
    quintary_left,
    quintary_right,
    ternary_partition,
    vector_swap,
)
from .riselect import RiselectConfig, median3_sorted, riselect
from .sampling import (
    ConfigurationError,
    Family,
    Rng,
    SampleParams,
    SampleStrategy,
    f_of_n,
    phi_eps,
    place_sample,
    sample_params,
)
from .select import (
    Mode,
    PivotRanks,
    SelectConfig,
    SelectionResult,
    first_pass,
    pivot_ranks,
    select,
    select_nonrecursive_sort,
    sorting_constant,
    sselect,
)
from .verification import (
    LemmaReport,
    TailQuery,
    check_lemma_bounds,
    check_tail_grid,
    hyper_tail,
    hyper_tail_exact,
    sort_oracle,
)

__version__ = "0.1.0"
