#include "rootd/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rootd {

using ordered_json = nlohmann::ordered_json;

long roundtrip_digits(const PrecContext& ctx) { return ctx.prec_digits + 4; }

std::string polynomial_to_json(const Polynomial& p) {
    ordered_json j;
    j["degree"] = p.degree();
    ordered_json coeffs = ordered_json::array();
    long digits = roundtrip_digits(p.ctx);
    for (const auto& c : p.coeffs) {
        coeffs.push_back(to_decimal(c, digits));
    }
    j["coeffs"] = std::move(coeffs);
    j["prec"] = p.ctx.prec_digits;
    return j.dump(2) + "\n";
}

Polynomial polynomial_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (!j.contains("degree") || !j.contains("coeffs") || !j.contains("prec")) {
        throw std::invalid_argument("polynomial file: missing degree/coeffs/prec");
    }
    long degree = j["degree"].get<long>();
    long prec = j["prec"].get<long>();
    PrecContext ctx = make_context(prec);
    const auto& arr = j["coeffs"];
    if (!arr.is_array() || static_cast<long>(arr.size()) != degree + 1) {
        throw std::invalid_argument("polynomial file: coeffs length must be degree + 1");
    }
    std::vector<MPReal> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& s : arr) {
        coeffs.push_back(parse_decimal(s.get<std::string>(), ctx));
    }
    return make_polynomial(std::move(coeffs), ctx);
}

Polynomial load_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open polynomial file: " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return polynomial_from_json(ss.str());
}

void save_polynomial(const Polynomial& p, const std::string& path) {
    write_text_file(path, polynomial_to_json(p));
}

std::string describe_run(const MapConfig& cfg, const Mesh& mesh, const FilterParams& params,
                         unsigned threads) {
    long pdig = std::min<long>(cfg.ctx.prec_digits, 30);
    std::ostringstream out;
    out << "degree=" << cfg.f.degree() << " interval=[" << to_decimal(cfg.a, pdig) << ","
        << to_decimal(cfg.b, pdig) << "] prec=" << cfg.ctx.prec_digits
        << " h=" << to_decimal(mesh.h, pdig) << " k=" << cfg.k << " order=" << cfg.order()
        << " bisector_c=" << to_decimal(params.bisector_c, pdig)
        << " residual_threshold=" << to_decimal(params.residual_threshold, pdig)
        << " error_tol=" << to_decimal(params.error_tol, pdig)
        << " dedup_tol=" << to_decimal(params.dedup_tol, pdig) << " threads=" << threads;
    return out.str();
}

std::string samples_to_csv(const SampleList& L, const PrecContext& ctx,
                           const std::string& config_line) {
    std::ostringstream out;
    if (!config_line.empty()) out << "# config: " << config_line << "\n";
    out << "index,x,y\n";
    long digits = ctx.prec_digits;
    size_t i = 0;
    for (const auto& [x, y] : L.pairs) {
        out << i++ << "," << to_decimal(x, digits) << ",";
        out << (y.is_null() ? "Null" : to_decimal(y.numeric(), digits)) << "\n";
    }
    return out.str();
}

std::string samples_to_svg(const SampleList& L, const MPReal& a, const MPReal& b,
                           const std::string& config_line) {
    const double W = 640, H = 640, M = 40;
    double lo = a.to_double();
    double hi = b.to_double();
    double span = hi - lo;
    if (span <= 0) span = 1;

    auto sx = [&](double v) { return M + (v - lo) / span * (W - 2 * M); };
    auto sy = [&](double v) { return H - M - (v - lo) / span * (H - 2 * M); };

    char buf[256];
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    if (!config_line.empty()) out << "<desc>config: " << config_line << "</desc>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    snprintf(buf, sizeof buf,
             "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
             "stroke=\"#999\"/>\n",
             M, M, W - 2 * M, H - 2 * M);
    out << buf;
    snprintf(buf, sizeof buf,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#c33\" "
             "stroke-dasharray=\"4 3\"/>\n",
             sx(lo), sy(lo), sx(hi), sy(hi));
    out << buf;  // bisector y = x
    for (const auto& [x, y] : L.pairs) {
        if (y.is_null()) continue;
        double yv = y.numeric().to_double();
        if (yv < lo || yv > hi) continue;
        snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#226\"/>\n",
                 sx(x.to_double()), sy(yv));
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

std::string report_to_json(const RootReport& report, const MapConfig& cfg, const Mesh& mesh,
                           const FilterParams& params, unsigned threads) {
    long digits = roundtrip_digits(cfg.ctx);
    // Parameters echo at the contract precision; parsing them back at the
    // same context reproduces the resolved values.
    long pdig = std::min<long>(cfg.ctx.prec_digits, 30);
    ordered_json j;

    ordered_json jparams;
    jparams["prec"] = cfg.ctx.prec_digits;
    jparams["prec_bits"] = static_cast<long>(cfg.ctx.prec_bits);
    jparams["degree"] = cfg.f.degree();
    jparams["interval"] = {to_decimal(cfg.a, pdig), to_decimal(cfg.b, pdig)};
    jparams["h"] = to_decimal(mesh.h, pdig);
    jparams["k"] = cfg.k;
    jparams["order"] = cfg.order();
    jparams["bisector_c"] = to_decimal(params.bisector_c, pdig);
    jparams["residual_threshold"] = to_decimal(params.residual_threshold, pdig);
    jparams["error_tol"] = to_decimal(params.error_tol, pdig);
    jparams["dedup_tol"] = to_decimal(params.dedup_tol, pdig);
    jparams["threads"] = threads;
    jparams["nodes"] = mesh.size();
    j["params"] = std::move(jparams);

    ordered_json jstages;
    jstages["numeric"] = report.stages.numeric;
    jstages["data1"] = report.stages.data1;
    jstages["data2"] = report.stages.data2;
    jstages["union"] = report.stages.unions;
    jstages["finalA"] = report.stages.finalA;
    jstages["final"] = report.stages.final_;
    j["stage_counts"] = std::move(jstages);

    ordered_json jroots = ordered_json::array();
    for (const auto& r : report.roots) {
        ordered_json jr;
        jr["root"] = to_decimal(r.root, digits);
        if (r.error_estimate.is_null()) {
            jr["error_estimate"] = nullptr;
        } else {
            jr["error_estimate"] = to_decimal(r.error_estimate.numeric(), digits);
        }
        jr["residual"] = to_decimal(r.residual, digits);
        jr["bracket"] = {to_decimal(r.bracket.x1, digits), to_decimal(r.bracket.x2, digits)};
        jroots.push_back(std::move(jr));
    }
    j["roots"] = std::move(jroots);
    return j.dump(2) + "\n";
}

std::string report_to_csv(const RootReport& report, const PrecContext& ctx,
                          const std::string& config_line) {
    long digits = roundtrip_digits(ctx);
    std::ostringstream out;
    if (!config_line.empty()) out << "# config: " << config_line << "\n";
    out << "root,error_estimate,residual,bracket_x1,bracket_x2\n";
    for (const auto& r : report.roots) {
        out << to_decimal(r.root, digits) << ",";
        out << (r.error_estimate.is_null() ? "Null" : to_decimal(r.error_estimate.numeric(), digits))
            << ",";
        out << to_decimal(r.residual, digits) << ",";
        out << to_decimal(r.bracket.x1, digits) << "," << to_decimal(r.bracket.x2, digits) << "\n";
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << content;
}

}  // namespace rootd
