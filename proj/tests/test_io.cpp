#include <doctest.h>

#include "rootd/io.hpp"
#include "rootd/oracle.hpp"

using namespace rootd;

TEST_CASE("polynomial json round trip preserves bit patterns") {
    auto ctx = make_context(8);
    auto p = round_coeffs(chebyshev_T(40), ctx);
    auto text = polynomial_to_json(p);
    auto q = polynomial_from_json(text);
    REQUIRE(q.degree() == 40);
    CHECK(q.ctx.prec_digits == 8);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        CHECK(p.coeffs[i] == q.coeffs[i]);
    }
}

TEST_CASE("polynomial json validation") {
    CHECK_THROWS(polynomial_from_json("{}"));
    CHECK_THROWS(polynomial_from_json(R"({"degree": 2, "coeffs": ["1"], "prec": 8})"));
    CHECK_THROWS(polynomial_from_json(R"({"degree": 0, "coeffs": ["x"], "prec": 8})"));
    CHECK_THROWS(polynomial_from_json("not json"));

    auto p = polynomial_from_json(R"({"degree": 1, "coeffs": ["-1", "1"], "prec": 8})");
    CHECK(p.degree() == 1);
}

TEST_CASE("sample csv uses the Null literal and embeds the config") {
    auto ctx = make_context(8);
    SampleList L;
    L.pairs.emplace_back(MPReal(0L, ctx), MapResult::null());
    L.pairs.emplace_back(MPReal(0.5, ctx), MapResult::of(MPReal(0.25, ctx)));
    auto csv = samples_to_csv(L, ctx);
    CHECK(csv.find("index,x,y") == 0);
    CHECK(csv.find("0,0,Null") != std::string::npos);
    CHECK(csv.find("1,0.50000000,0.25000000") != std::string::npos);

    auto described = samples_to_csv(L, ctx, "prec=8 h=0.1");
    CHECK(described.find("# config: prec=8 h=0.1\nindex,x,y") == 0);
}

TEST_CASE("describe_run covers the resolved parameters") {
    auto ctx = make_context(8);
    auto f = round_coeffs(chebyshev_T(4), ctx);
    MPReal a(-1L, ctx), b(1L, ctx);
    auto mesh = uniform_mesh(a, b, parse_decimal("0.1", ctx));
    auto cfg = make_map_config(f, a, b, 3);
    auto desc = describe_run(cfg, mesh, default_filter_params(ctx), 4);
    CHECK(desc.find("degree=4") != std::string::npos);
    CHECK(desc.find("k=3") != std::string::npos);
    CHECK(desc.find("order=16") != std::string::npos);
    CHECK(desc.find("threads=4") != std::string::npos);
}

TEST_CASE("svg contains the bisector and the numeric points") {
    auto ctx = make_context(8);
    SampleList L;
    L.pairs.emplace_back(MPReal(0.5, ctx), MapResult::of(MPReal(0.25, ctx)));
    L.pairs.emplace_back(MPReal(0.75, ctx), MapResult::null());
    auto svg = samples_to_svg(L, MPReal(0L, ctx), MPReal(1L, ctx), "prec=8");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<desc>config: prec=8</desc>") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // bisector line
    CHECK(svg.find("<circle") != std::string::npos);
    // exactly one circle: the Null pair draws nothing
    CHECK(svg.find("<circle", svg.find("<circle") + 1) == std::string::npos);
}

TEST_CASE("report json is reproducible and self-describing") {
    auto ctx = make_context(8);
    auto f = round_coeffs(chebyshev_T(4), ctx);
    MPReal a(-1L, ctx), b(1L, ctx);
    auto mesh = uniform_mesh(a, b, parse_decimal("0.1", ctx));
    auto cfg = make_map_config(f, a, b, 3);
    auto params = default_filter_params(ctx);
    auto rep = distill(cfg, mesh, params);

    auto j1 = report_to_json(rep, cfg, mesh, params, 1);
    auto rep2 = distill(cfg, mesh, params, 4);
    auto j2 = report_to_json(rep2, cfg, mesh, params, 1);
    CHECK(j1 == j2);  // byte-identical across reruns and thread counts

    CHECK(j1.find("\"prec\": 8") != std::string::npos);
    CHECK(j1.find("\"k\": 3") != std::string::npos);
    CHECK(j1.find("\"stage_counts\"") != std::string::npos);
    CHECK(j1.find("\"roots\"") != std::string::npos);
    CHECK(j1.find("0.923879532") != std::string::npos);

    auto csv = report_to_csv(rep, ctx);
    CHECK(csv.find("root,error_estimate,residual,bracket_x1,bracket_x2") == 0);
}
