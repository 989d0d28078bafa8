"""Constants for sample_space_entropy."""

from logging import Logger, getLogger
import math

LOGGER: Logger = getLogger(__package__)

# Package metadata
DOMAIN = "sample_space_entropy"
VERSION = "0.1.0"

LN2 = math.log(2.0)

# Model validation tolerances
WEIGHT_SUM_TOLERANCE = 1e-9
# Weight sums closer to 1 than this are left untouched so a reloaded model compares equal
WEIGHT_SUM_EXACT = 4e-16
LEADING_RATE_TOLERANCE = 1e-12

# Largest scaled time any operation accepts
MAX_SCALED_TIME = 1e6

# Below this the direct sum is replaced by the log-sum-exp form of H(T)
PROBABILITY_UNDERFLOW_GUARD = 1e-280

# Partition enumeration (2**20 partitions)
MAX_ENUMERATED_DOUBLINGS = 20

# Quadrature
MAX_QUADRATURE_SUBINTERVALS = 1_000_000
DEFAULT_RELATIVE_TOLERANCE = 1e-8
DEFAULT_TRUNCATION_THRESHOLD = 1e-10
MAX_RELATIVE_TOLERANCE = 1e-2
MAX_TRUNCATION_THRESHOLD = 1e-6

# Output formatting (significant digits / decimal places)
TABLE_DIGITS = 9
REPORT_DECIMALS = 6

# Figures
DEFAULT_GRID_POINTS = 201
DEFAULT_NORMALIZATION_T_MAX = 1000.0

# Four-component multi-exponential expansion (A_i, c_i)
FOUR_COMPONENTS: tuple[tuple[float, float], ...] = (
    (0.4, 1.0),
    (0.3, 0.1),
    (0.2, 0.01),
    (0.1, 0.001),
)

# Three simultaneous independent expansion processes
EXAMPLE_PROCESS_RATES: tuple[float, ...] = (0.1, 0.3, 0.6)

# Broad money supply of US$, 2001 to 2019 (trillions of US$, per year)
BROAD_MONEY_S0 = 7.5805
BROAD_MONEY_LAMBDA = 0.0555
BROAD_MONEY_YEARS = 18
BROAD_MONEY_ORIGIN = "2001"

# Contraction example
EXAMPLE_CONTRACTION_S0 = 1000
