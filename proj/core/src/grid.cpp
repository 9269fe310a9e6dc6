#include "rootd/grid.hpp"

#include <stdexcept>
#include <thread>

namespace rootd {

Mesh uniform_mesh(const MPReal& a, const MPReal& b, const MPReal& h) {
    if (!is_numeric(a) || !is_numeric(b) || !is_numeric(h)) {
        throw std::invalid_argument("uniform_mesh: non-finite bounds");
    }
    if (!(a < b)) {
        throw std::invalid_argument("uniform_mesh: requires a < b");
    }
    MPReal span = b - a;
    if (mpfr_sgn(h.raw()) <= 0 || h > span) {
        throw std::invalid_argument("uniform_mesh: requires 0 < h <= b - a");
    }

    MPReal q = span / h;
    MPReal qr = q;
    mpfr_round(qr.raw(), q.raw());
    if (!mpfr_fits_slong_p(qr.raw(), MPFR_RNDN)) {
        throw std::invalid_argument("uniform_mesh: node count out of range");
    }
    long n = mpfr_get_si(qr.raw(), MPFR_RNDN);
    if (n < 1) {
        throw std::invalid_argument("uniform_mesh: h too large for interval");
    }
    if (n > 100000000) {
        throw std::invalid_argument("uniform_mesh: more than 1e8 nodes requested");
    }
    // |q - n| <= 0.001 * n, i.e. (b-a)/h within 0.1% of an integer.
    MPReal diff = abs(q - qr);
    MPReal lim = qr;
    mpfr_mul_d(lim.raw(), qr.raw(), 0.001, MPFR_RNDN);
    if (diff > lim) {
        throw std::invalid_argument("uniform_mesh: (b-a)/h is not an integer (within 0.1%)");
    }

    Mesh m{a, b, h, {}};
    m.nodes.reserve(static_cast<size_t>(n) + 1);
    m.nodes.push_back(a);
    for (long i = 1; i < n; ++i) {
        m.nodes.push_back(a + mul_si(h, i));
    }
    m.nodes.push_back(b);
    // The endpoints are pinned, so an h off by nearly the full 0.1% slack
    // can push the last interior node past b on very large meshes.
    for (size_t i = 0; i + 1 < m.nodes.size(); ++i) {
        if (!(m.nodes[i] < m.nodes[i + 1])) {
            throw std::invalid_argument("uniform_mesh: h inconsistent with the interval bounds");
        }
    }
    return m;
}

SampleList sample_map(const MapConfig& cfg, const Mesh& mesh, unsigned threads) {
    if (mesh.nodes.empty()) {
        return SampleList{};
    }
    if (mesh.nodes.front() < cfg.a || mesh.nodes.back() > cfg.b) {
        throw std::invalid_argument("sample_map: mesh not contained in [a, b]");
    }

    const size_t n = mesh.nodes.size();
    std::vector<MapResult> results(n, MapResult::null());

    if (threads <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) {
            results[i] = educated_g(cfg, mesh.nodes[i]);
        }
    } else {
        unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) {
            pool.emplace_back([&, t]() {
                for (size_t i = t; i < n; i += nt) {
                    results[i] = educated_g(cfg, mesh.nodes[i]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    SampleList L;
    L.pairs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        L.pairs.emplace_back(mesh.nodes[i], std::move(results[i]));
    }
    return L;
}

bool is_monotone_step(const SampleList& L, const MPReal& tol) {
    const MPReal* prev = nullptr;
    for (const auto& [x, y] : L.pairs) {
        if (y.is_null()) continue;
        if (prev && y.numeric() < *prev - tol) {
            return false;
        }
        prev = &y.numeric();
    }
    return true;
}

bool tables_agree(const SampleList& L1, const SampleList& L2, const MPReal& tol) {
    if (L1.size() != L2.size()) return false;
    for (size_t i = 0; i < L1.size(); ++i) {
        const MapResult& y1 = L1.pairs[i].second;
        const MapResult& y2 = L2.pairs[i].second;
        if (y1.is_null() != y2.is_null()) return false;
        if (y1.is_null()) continue;
        if (abs(y1.numeric() - y2.numeric()) > tol) return false;
    }
    return true;
}

bool is_invariant(const MapConfig& cfg, const Mesh& mesh, const MPReal& tol, unsigned threads) {
    MapConfig next = cfg;
    next.k = cfg.k + 1;
    SampleList L1 = sample_map(cfg, mesh, threads);
    SampleList L2 = sample_map(next, mesh, threads);
    return tables_agree(L1, L2, tol);
}

MPReal default_invariance_tol(const PrecContext& ctx) {
    return pow10(1 - ctx.prec_digits, ctx);
}

}  // namespace rootd
