//! Pseudorandomness measures of a finite prefix and the bounds relating them.

pub mod correlation;
pub mod exp_sum;
pub mod expansion;
pub mod linear;
pub mod max_order;
pub mod oracle;
pub mod subword;
pub mod suffix;
pub mod well_distribution;

pub use correlation::{
    automaton_correlation_bound, correlation, correlation2_profile, state_complexity_lower_bound,
    Correlation, CorrelationQuery,
};
pub use exp_sum::exponential_sum_sup;
pub use expansion::{
    expansion_bounds_from_linear, expansion_complexity, ExpansionBounds, ExpansionRecord,
    ExpansionSample,
};
pub use linear::{
    linear_complexity, linear_complexity_bounds, LinearBounds, LinearComplexityRecord,
};
pub use max_order::{max_order_complexity, MaxOrderRecord};
pub use subword::{
    cube_free_check, pattern_frequencies, subword_complexity, PatternCounts, DEFAULT_PATTERN_CAP,
};
pub use suffix::SuffixAutomaton;
pub use well_distribution::{well_distribution, well_distribution_profile, WellDistribution};
