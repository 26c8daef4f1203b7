#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sepvol {

/// SD is the statistical-distinguishability convention (a factor 4 per
/// eigenvalue pair); Bures drops those factors, scaling m-level volume
/// elements by 4^(-m(m-1)/2). All probability ratios are convention-invariant.
enum class MetricConvention { SD, Bures };

const char* to_string(MetricConvention c);
MetricConvention metric_from_string(std::string_view name);

/// Value of the conditional volume element at an eigenvalue vector, tagged
/// when the element diverges. `singular` stands for the +infinity of an
/// integrable 1/sqrt(lambda) singularity and must never enter an accumulator.
struct ConditionalDensity {
    double value = 0.0;
    bool singular = false;
};

/// Conditional SD/Bures volume element on the (m-1)-simplex:
///   prod_{i<j} 4 (li - lj)^2 / (li + lj)   /   sqrt(prod_i li)
/// (factor 4 omitted per pair under the Bures convention). Any exact zero
/// eigenvalue yields the singular tag; equal nonzero eigenvalues give 0.
ConditionalDensity conditional_density(std::span<const double> lambda,
                                       MetricConvention c = MetricConvention::SD);

/// D_m: the conditional element integrated over the (m-1)-simplex by
/// deterministic adaptive quadrature in the nested sin^2/cos^2 angle chain.
/// Supported m = 2..5 at rel_tol; m = 6 falls back to a best-effort QMC
/// estimate (far looser than rel_tol). Throws QuadratureError on
/// non-convergence.
double simplex_constant(int m, MetricConvention c = MetricConvention::SD,
                        double rel_tol = 1e-8);

/// Boundary-restricted integral over the (m-2)-simplex: the limit of the
/// m-level SD element as the first eigenvalue is driven to zero along its
/// angle. Relative to the naive "delete the vanished eigenvalue" element it
/// carries the extra factor 2 sqrt(l2) produced by that limit:
///   2 * 4^(m-1) * sqrt(l2) * sqrt(prod_{j>=2} lj)
///       * prod_{2<=i<j} 4 (li - lj)^2 / (li + lj).
/// m = 4 evaluates to 0.871513859457 and anchors the 14-dimensional boundary
/// area A = 4 * I * pi^6/96.
double boundary_restricted_integral(int m, double abs_tol = 1e-10);

struct ReferenceConstant {
    std::string name;
    std::string closed_form;
    double value = 0.0;
};

/// The published exact constants and conjectures, each as a closed-form
/// expression string and its double value.
const std::vector<ReferenceConstant>& reference_constants();

/// Lookup by name; throws std::out_of_range for unknown names.
double reference_constant(std::string_view name);

}  // namespace sepvol
