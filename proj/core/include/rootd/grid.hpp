#pragma once

#include <utility>
#include <vector>

#include "rootd/educated_map.hpp"

namespace rootd {

/// Uniform mesh on [a, b]. Endpoints are pinned to a and b exactly; the
/// interior nodes are a + i*h rounded once to working precision.
struct Mesh {
    MPReal a;
    MPReal b;
    MPReal h;
    std::vector<MPReal> nodes;

    size_t size() const { return nodes.size(); }
};

/// Builds the mesh with round((b-a)/h) + 1 nodes. (b-a)/h must be within
/// 0.1% of an integer; anything else is rejected so that h stays an exact
/// reproducibility parameter.
Mesh uniform_mesh(const MPReal& a, const MPReal& b, const MPReal& h);

/// The sampled table: one (x, g(x)) pair per mesh node, ascending in x.
struct SampleList {
    std::vector<std::pair<MPReal, MapResult>> pairs;

    size_t size() const { return pairs.size(); }
};

/// Evaluates the educated map on every mesh node. Nodes are independent;
/// with threads > 1 they are evaluated in parallel, and the result is
/// bit-identical for any thread count.
SampleList sample_map(const MapConfig& cfg, const Mesh& mesh, unsigned threads = 1);

/// True iff the numeric subsequence of y values is nondecreasing up to tol
/// (y[j+1] >= y[j] - tol). Empty and all-Null lists are vacuously monotone.
bool is_monotone_step(const SampleList& L, const MPReal& tol);

/// True iff the tables at k and k+1 are identical: the Null pattern matches
/// exactly and numeric values agree within tol.
bool is_invariant(const MapConfig& cfg, const Mesh& mesh, const MPReal& tol, unsigned threads = 1);

/// Nodewise comparison used by is_invariant; exposed for diagnostics.
bool tables_agree(const SampleList& L1, const SampleList& L2, const MPReal& tol);

/// Default invariance tolerance: one decimal digit of slack, 10^(1-digits).
MPReal default_invariance_tol(const PrecContext& ctx);

}  // namespace rootd
