"""First-significant-digit conformity testing for citation counts."""

from citebenford._kernels import BACKEND
from citebenford.dataset import (
    CitationSnapshot,
    SeriesKind,
    SnapshotSeries,
    SpanReport,
    filter_uncited,
    snapshot_to_distribution,
    span,
    validate_series,
    validate_snapshot,
)
from citebenford.errors import BenfordError, ContractError, DomainError, FormatError, ValidationError
from citebenford.gof import (
    ExpectedDistribution,
    GofResult,
    Verdict,
    chi_square,
    chi_square_critical,
    conformity_test,
    digit_deviations,
    expected_counts,
    p_value,
)
from citebenford.models import DigitLawModel, LawKind, classical, generalized, probability, probability_vector, uniform
from citebenford.sigdigits import DigitDistribution, first_digit, tally
from citebenford.synth import GeneratorSpec, Law, generate

__version__ = "0.1.0"
