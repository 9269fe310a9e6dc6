#include "rootd/distill.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace rootd {

FilterParams default_filter_params(const PrecContext& ctx) {
    return FilterParams{
        parse_decimal("0.1", ctx),
        pow10(-ctx.prec_digits + 2, ctx),
        pow10(-ctx.prec_digits + 2, ctx),
        pow10(-ctx.prec_digits, ctx),
    };
}

SampleList filter_near_bisector(const SampleList& L, const MPReal& c) {
    if (mpfr_sgn(c.raw()) <= 0) {
        throw std::invalid_argument("filter_near_bisector: c must be > 0");
    }
    SampleList out;
    for (const auto& [x, y] : L.pairs) {
        if (y.is_null()) continue;
        MPReal d = y.numeric() - x;
        if (d * d < c) {
            out.pairs.emplace_back(x, y);
        }
    }
    return out;
}

std::vector<Bracket> bracket_sign_changes(const SampleList& data1) {
    std::vector<Bracket> out;
    for (size_t i = 0; i + 1 < data1.pairs.size(); ++i) {
        const auto& [x1, y1] = data1.pairs[i];
        const auto& [x2, y2] = data1.pairs[i + 1];
        MPReal d1 = y1.numeric() - x1;
        MPReal d2 = y2.numeric() - x2;
        if (mpfr_sgn(d1.raw()) * mpfr_sgn(d2.raw()) < 0) {
            out.push_back(Bracket{x1, y1.numeric(), x2, y2.numeric()});
        }
    }
    return out;
}

namespace {

// Candidate for the union stage: one bracket endpoint.
struct Endpoint {
    MPReal y;
    const Bracket* origin;
};

MPReal bracket_width(const Bracket& b) { return b.x2 - b.x1; }

}  // namespace

std::vector<DistilledValue> dedup_union(const std::vector<Bracket>& data2, const MPReal& dedup_tol) {
    if (mpfr_sgn(dedup_tol.raw()) <= 0) {
        throw std::invalid_argument("dedup_union: dedup_tol must be > 0");
    }
    std::vector<Endpoint> endpoints;
    endpoints.reserve(data2.size() * 2);
    for (const auto& b : data2) {
        endpoints.push_back(Endpoint{b.y1, &b});
        endpoints.push_back(Endpoint{b.y2, &b});
    }
    std::stable_sort(endpoints.begin(), endpoints.end(),
                     [](const Endpoint& a, const Endpoint& b) { return a.y < b.y; });

    std::vector<DistilledValue> out;
    size_t i = 0;
    while (i < endpoints.size()) {
        // Cluster = every endpoint within dedup_tol of the first (smallest).
        const MPReal& rep = endpoints[i].y;
        size_t j = i;
        const Bracket* best = endpoints[i].origin;
        while (j < endpoints.size() && abs(endpoints[j].y - rep) < dedup_tol) {
            const Bracket* cand = endpoints[j].origin;
            MPReal wc = bracket_width(*cand);
            MPReal wb = bracket_width(*best);
            if (wc < wb || (wc == wb && cand->x1 < best->x1)) {
                best = cand;
            }
            ++j;
        }
        out.push_back(DistilledValue{rep, *best});
        i = j;
    }
    return out;
}

std::vector<MPReal> dedup_union_values(const std::vector<Bracket>& data2, const MPReal& dedup_tol) {
    std::vector<MPReal> out;
    for (auto& v : dedup_union(data2, dedup_tol)) {
        out.push_back(std::move(v.y));
    }
    return out;
}

std::vector<DistilledValue> residual_filter(const std::vector<DistilledValue>& unions,
                                            const Polynomial& f,
                                            const MPReal& residual_threshold) {
    if (mpfr_sgn(residual_threshold.raw()) <= 0) {
        throw std::invalid_argument("residual_filter: threshold must be > 0");
    }
    std::vector<DistilledValue> out;
    for (const auto& v : unions) {
        MPReal r = abs(horner_eval(f, v.y));
        if (is_numeric(r) && r < residual_threshold) {
            out.push_back(v);
        }
    }
    return out;
}

MapResult error_estimate(const MapConfig& cfg, const MPReal& y) {
    MapResult g = educated_g(cfg, y);
    if (g.is_null()) {
        return MapResult::null();
    }
    return MapResult::of(g.numeric() - y);
}

std::vector<RootEstimate> error_filter(const std::vector<DistilledValue>& finalA,
                                       const MapConfig& cfg,
                                       const Polynomial& f,
                                       const MPReal& error_tol,
                                       unsigned threads) {
    if (mpfr_sgn(error_tol.raw()) <= 0) {
        throw std::invalid_argument("error_filter: error_tol must be > 0");
    }
    const size_t n = finalA.size();
    std::vector<MapResult> estimates(n, MapResult::null());
    if (threads <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) {
            estimates[i] = error_estimate(cfg, finalA[i].y);
        }
    } else {
        unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) {
            pool.emplace_back([&, t]() {
                for (size_t i = t; i < n; i += nt) {
                    estimates[i] = error_estimate(cfg, finalA[i].y);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<RootEstimate> out;
    for (size_t i = 0; i < n; ++i) {
        MapResult& est = estimates[i];
        if (est.is_null() || !(abs(est.numeric()) < error_tol)) {
            continue;
        }
        MPReal residual = abs(horner_eval(f, finalA[i].y));
        out.push_back(RootEstimate{finalA[i].y, std::move(est), residual, finalA[i].origin});
    }
    return out;
}

RootReport distill_samples(const SampleList& L, const MapConfig& cfg, const FilterParams& params,
                           unsigned threads) {
    RootReport report;
    for (const auto& [x, y] : L.pairs) {
        if (!y.is_null()) ++report.stages.numeric;
    }
    SampleList data1 = filter_near_bisector(L, params.bisector_c);
    report.stages.data1 = data1.size();

    std::vector<Bracket> data2 = bracket_sign_changes(data1);
    report.stages.data2 = data2.size();

    std::vector<DistilledValue> unions = dedup_union(data2, params.dedup_tol);
    report.stages.unions = unions.size();

    std::vector<DistilledValue> finalA = residual_filter(unions, cfg.f, params.residual_threshold);
    report.stages.finalA = finalA.size();

    report.roots = error_filter(finalA, cfg, cfg.f, params.error_tol, threads);
    report.stages.final_ = report.roots.size();
    return report;
}

RootReport distill(const MapConfig& cfg, const Mesh& mesh, const FilterParams& params,
                   unsigned threads) {
    SampleList L = sample_map(cfg, mesh, threads);
    return distill_samples(L, cfg, params, threads);
}

std::vector<MPReal> platform_representative(const SampleList& L, const MPReal& dedup_tol) {
    if (mpfr_sgn(dedup_tol.raw()) <= 0) {
        throw std::invalid_argument("platform_representative: dedup_tol must be > 0");
    }
    struct Run {
        MPReal rep_y;
        MPReal rep_dist;
        MPReal first_y;
        bool open = false;
    };
    std::vector<MPReal> reps;
    Run run;
    bool prev_numeric = false;

    auto close_run = [&]() {
        if (run.open) {
            reps.push_back(run.rep_y);
            run.open = false;
        }
    };

    for (const auto& [x, y] : L.pairs) {
        if (y.is_null()) {
            close_run();
            prev_numeric = false;
            continue;
        }
        const MPReal& yv = y.numeric();
        MPReal dist = abs(yv - x);
        bool extends = prev_numeric && run.open && abs(yv - run.first_y) <= dedup_tol;
        if (!extends) {
            close_run();
            run.first_y = yv;
            run.rep_y = yv;
            run.rep_dist = dist;
            run.open = true;
        } else if (dist < run.rep_dist) {
            run.rep_y = yv;
            run.rep_dist = dist;
        }
        prev_numeric = true;
    }
    close_run();

    std::sort(reps.begin(), reps.end());
    std::vector<MPReal> out;
    for (auto& r : reps) {
        if (out.empty() || !(abs(r - out.back()) < dedup_tol)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace rootd
