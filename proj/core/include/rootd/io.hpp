#pragma once

#include <string>

#include "rootd/distill.hpp"

namespace rootd {

/// Digits used when serializing values so that parsing them back at the
/// same context reproduces the bit pattern.
long roundtrip_digits(const PrecContext& ctx);

/// Polynomial file: {"degree": d, "coeffs": [decimal strings, ascending],
/// "prec": digits}. Coefficient strings are parsed at the stated prec.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);
Polynomial load_polynomial(const std::string& path);
void save_polynomial(const Polynomial& p, const std::string& path);

/// One-line summary of a resolved run configuration, embedded in every
/// output file so results stay self-describing.
std::string describe_run(const MapConfig& cfg, const Mesh& mesh, const FilterParams& params,
                         unsigned threads);

/// CSV of the table L: index, x, y (decimal or the literal "Null").
/// A leading "# config: ..." comment carries the resolved run description.
std::string samples_to_csv(const SampleList& L, const PrecContext& ctx,
                           const std::string& config_line = "");

/// Scatter plot of the numeric pairs plus the bisector line y = x. The
/// resolved run description is embedded as the SVG <desc>.
std::string samples_to_svg(const SampleList& L, const MPReal& a, const MPReal& b,
                           const std::string& config_line = "");

/// Full self-describing report: resolved parameters, stage counts and the
/// roots with their certificates, all as decimal strings.
std::string report_to_json(const RootReport& report, const MapConfig& cfg, const Mesh& mesh,
                           const FilterParams& params, unsigned threads);

/// Root rows only: root, error_estimate, residual, bracket_x1, bracket_x2,
/// preceded by a "# config: ..." comment when a description is given.
std::string report_to_csv(const RootReport& report, const PrecContext& ctx,
                          const std::string& config_line = "");

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rootd
