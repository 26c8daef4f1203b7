#pragma once

#include "sepvol/accumulator.hpp"
#include "sepvol/halton.hpp"
#include "sepvol/measures.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sepvol {

enum class RunKind { Volume, BoundarySeparable, BoundaryTotal };

const char* to_string(RunKind k);

/// Configuration of a QMC run. The config hash covers every field that can
/// change a reported digit except the total sample count, so a checkpointed
/// run may be extended upward but never resumed under a different seed,
/// scrambling, skip, metric, or batch layout. Worker count and chunk size
/// never change any digit and stay outside the hash.
struct RunConfig {
    RunKind kind = RunKind::Volume;
    std::uint64_t samples = 1'000'000;
    std::uint64_t skip = 0;  // first emitted index is skip + 1
    Scrambling scrambling = Scrambling::Seeded;
    std::uint64_t seed = 0;
    MetricConvention metric = MetricConvention::SD;
    std::uint32_t batches = 32;
    std::uint64_t chunk_size = 65536;
    std::uint32_t workers = 1;
    int root_grid = 64;  // scan cells for boundary runs
    bool resume = false;
    std::uint64_t stop_after_samples = 0;  // nonzero: stop at the next wave edge
    std::string checkpoint_path;
    std::string dump_path;  // CSV per-sample dump (volume runs only)

    int dimension() const { return kind == RunKind::Volume ? 15 : 14; }
    std::uint64_t config_hash() const;
};

/// Per-batch exact totals. Weighted sums are fixed-point; counters are plain.
struct BatchTotals {
    FixedAccumulator weight;        // sum w
    FixedAccumulator weight_sep;    // sum w * 1_separable
    FixedAccumulator weight_neg;    // sum w * negativity
    FixedAccumulator weight_conc;   // sum w * concurrence
    FixedAccumulator root_weight;   // sum over roots of w/pi (boundary runs)
    std::uint64_t count = 0;
    std::uint64_t separable = 0;
    std::uint64_t boundary_hits = 0;
    std::uint64_t roots = 0;
    std::uint64_t points_with_roots = 0;

    void merge(const BatchTotals& o);
    bool operator==(const BatchTotals&) const = default;
};

/// Mergeable run state. Batch assignment is a pure function of the index
/// (consecutive blocks of batch_block indices, cycling), so disjoint
/// index-range partials merge exactly and in any order.
struct EstimatorState {
    std::uint64_t config_hash = 0;
    std::uint64_t start_index = 1;
    std::uint64_t batch_block = 1;
    std::uint64_t next_index = 1;  // first index not yet accumulated
    std::vector<BatchTotals> batches;

    std::size_t batch_of(std::uint64_t index) const {
        return static_cast<std::size_t>(((index - start_index) / batch_block) %
                                        batches.size());
    }
    std::uint64_t total_count() const;

    bool operator==(const EstimatorState&) const = default;
};

EstimatorState make_state(const RunConfig& cfg);

/// Exact commutative merge; throws std::invalid_argument on config-hash or
/// batch-geometry mismatch. Callers are responsible for disjoint ranges.
EstimatorState merge_states(EstimatorState a, const EstimatorState& b);

struct Estimate {
    double value = 0.0;
    double batch_se = 0.0;
};

struct ReferenceDelta {
    double value = 0.0;
    double delta = 0.0;
};

struct EstimateReport {
    std::string run_type;
    RunConfig config;
    std::map<std::string, Estimate> estimates;
    std::map<std::string, ReferenceDelta> reference;
    std::map<std::string, std::uint64_t> counts;
    double wall_time_s = 0.0;
};

/// 15-dimensional volume/probability/means run: coordinates 1-12 build the
/// eigenvector frame, 13-15 (rescaled by pi/2) the eigenvalue angles. Weights
/// are accumulated in the SD convention; the Bures convention only rescales
/// the reported absolute volumes (ratios and means are convention-invariant
/// by construction).
EstimateReport volume_run(const RunConfig& cfg);

/// 14-dimensional separable-boundary area run: for each point every root of
/// det PT along the third angle contributes the volume-element value at the
/// root divided by pi.
EstimateReport separable_boundary_run(const RunConfig& cfg);

/// Deterministic quadrature of the total boundary area
/// A = 4 * boundary_restricted_integral(4) * pi^6/96.
EstimateReport total_boundary_area();

/// All sign-change roots of t -> det PT(rho(theta3 = t pi/2)) on (0,1) for a
/// fixed 14-coordinate point (12 frame + 2 angle coordinates), located on a
/// uniform grid of `grid_cells` cells and refined by bisection to 1e-10.
std::vector<double> find_boundary_roots(std::span<const double> coords,
                                        int grid_cells = 64);

/// Build the report for a finished state (used by resume and by tests that
/// drive accumulation manually).
EstimateReport report_from_state(const RunConfig& cfg, const EstimatorState& st,
                                 double wall_time_s);

void save_checkpoint(const std::string& path, const RunConfig& cfg,
                     const EstimatorState& state);

/// Load and validate a checkpoint against `cfg`; throws std::runtime_error
/// with a diagnostic on hash mismatch or corruption.
EstimatorState load_checkpoint(const std::string& path, const RunConfig& cfg);

}  // namespace sepvol
