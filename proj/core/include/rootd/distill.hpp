#pragma once

#include <vector>

#include "rootd/grid.hpp"

namespace rootd {

/// Thresholds of the filtration pipeline.
///
/// bisector_c bounds the squared distance to the line y = x; dedup_tol
/// collapses machine-duplicate heights; residual_threshold and error_tol
/// gate |f(y)| and the fixed-point error estimate |g(y) - y|. The defaults
/// scale with the working precision but are interval- and
/// polynomial-agnostic, so ill-conditioned runs usually want overrides.
struct FilterParams {
    MPReal bisector_c;
    MPReal residual_threshold;
    MPReal error_tol;
    MPReal dedup_tol;
};

/// bisector_c = 0.1, dedup_tol = 10^-digits,
/// residual_threshold = error_tol = 10^(-digits+2).
FilterParams default_filter_params(const PrecContext& ctx);

/// Adjacent retained pair certifying a machine fixed point between x1, x2.
struct Bracket {
    MPReal x1, y1;
    MPReal x2, y2;
};

/// A distilled root with its certificates.
struct RootEstimate {
    MPReal root;
    MapResult error_estimate;  // g(root) - root; Null when g(root) is Null
    MPReal residual;           // |f(root)|
    Bracket bracket;           // originating retained pair
};

struct StageCounts {
    size_t numeric = 0;  // numeric entries of L ("data")
    size_t data1 = 0;    // near the bisector
    size_t data2 = 0;    // sign-change brackets
    size_t unions = 0;   // deduplicated heights
    size_t finalA = 0;   // residual survivors
    size_t final_ = 0;   // error-bound survivors
};

struct RootReport {
    std::vector<RootEstimate> roots;  // ascending by root value
    StageCounts stages;
};

/// Stage 1: numeric pairs with |y - x|^2 < c, order preserved.
SampleList filter_near_bisector(const SampleList& L, const MPReal& c);

/// Stage 2: adjacent pairs of data1 with (y1-x1)(y2-x2) < 0.
std::vector<Bracket> bracket_sign_changes(const SampleList& data1);

/// A union value with the bracket that supplied it.
struct DistilledValue {
    MPReal y;
    Bracket origin;
};

/// Stage 3: y components of all bracket endpoints, ascending, with values
/// closer than dedup_tol collapsed to the first (smallest) representative.
/// The narrowest (then leftmost) bracket in the cluster is recorded as the
/// origin, so the certificate stays one mesh cell wide whenever a
/// platform-crossing bracket exists.
std::vector<DistilledValue> dedup_union(const std::vector<Bracket>& data2, const MPReal& dedup_tol);

/// Projection of dedup_union: just the values.
std::vector<MPReal> dedup_union_values(const std::vector<Bracket>& data2, const MPReal& dedup_tol);

/// Stage 4: keeps values with |f(y)| < residual_threshold.
std::vector<DistilledValue> residual_filter(const std::vector<DistilledValue>& unions,
                                            const Polynomial& f,
                                            const MPReal& residual_threshold);

/// Error estimate g(y) - y for a point near a fixed point of g. Null when
/// the educated map ignores y.
MapResult error_estimate(const MapConfig& cfg, const MPReal& y);

/// Stage 5: keeps values whose error estimate exists and satisfies
/// |g(y) - y| < error_tol; assembles the final RootEstimates. The map
/// evaluations behind the estimates may run in parallel; the output order
/// and bit patterns do not depend on the thread count.
std::vector<RootEstimate> error_filter(const std::vector<DistilledValue>& finalA,
                                       const MapConfig& cfg,
                                       const Polynomial& f,
                                       const MPReal& error_tol,
                                       unsigned threads = 1);

/// The whole pipeline: sample, then stages 1-5, with stage counts.
/// An empty root list is a valid outcome, not an error.
RootReport distill(const MapConfig& cfg, const Mesh& mesh, const FilterParams& params,
                   unsigned threads = 1);

/// Same pipeline on an existing sample table.
RootReport distill_samples(const SampleList& L, const MapConfig& cfg, const FilterParams& params,
                           unsigned threads = 1);

/// The platform-representative variant: partitions the numeric pairs of L
/// into maximal runs of consecutive nodes whose heights agree within
/// dedup_tol, picks from each run the y of the pair with minimal |y - x|,
/// and returns the distinct heights ascending (deduplicated again, since
/// symmetric intervals produce split platforms of equal height).
std::vector<MPReal> platform_representative(const SampleList& L, const MPReal& dedup_tol);

}  // namespace rootd
