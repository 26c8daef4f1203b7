#pragma once

#include "sepvol/curvature.hpp"
#include "sepvol/estimators.hpp"

#include <complex>
#include <string>
#include <string_view>

namespace sepvol {

/// JSON for an estimate report. Doubles are printed with 17 significant
/// digits and keys in a fixed order, so two runs of the same configuration
/// produce byte-identical documents apart from the wall_time_s line.
std::string report_json(const EstimateReport& report);

/// The reference-constant table as JSON (name, closed_form, decimal,
/// provenance).
std::string constants_json();

/// Verdict document for a single classified state.
std::string classify_json(const DensityMatrix& rho);

std::string curvature_json(const Spectrum& s);

std::string isoperimetric_json(const IsoperimetricComparison& cmp);

/// Parse "a+bi" (also "a", "a-bi", "bi") into a complex number; throws
/// std::invalid_argument on malformed input.
std::complex<double> parse_complex(std::string_view token);

/// Parse 16 comma-separated complex entries, row-major.
DensityMatrix parse_density(std::string_view csv);

}  // namespace sepvol
