#include "sepvol/estimators.hpp"

#include "sepvol/quadrature.hpp"
#include "sepvol/separability.hpp"
#include "sepvol/state_space.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sepvol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

double volume_scale() {
    static const double s = std::pow(kHalfPi, 3) * std::pow(kPi, 6) / 96.0;
    return s;
}

double area_scale() {
    static const double s = std::pow(kHalfPi, 2) * std::pow(kPi, 6) / 96.0;
    return s;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct SamplePoint {
    UnitaryCoords frame_coords;
    EigenAngles angles;  // volume runs only use all three
};

// Per-sample record of a volume run, kept only when a CSV dump is requested.
struct DumpRow {
    std::uint64_t index;
    std::array<double, 15> coords;
    Spectrum spectrum;
    double weight;
    bool separable;
    double negativity;
    double concurrence;
};

void format_dump_row(std::string& out, const DumpRow& r) {
    char buf[32];
    out += std::to_string(r.index);
    auto push = [&](double v) {
        std::snprintf(buf, sizeof buf, ",%.17g", v);
        out += buf;
    };
    for (const double c : r.coords) push(c);
    for (const double l : r.spectrum.lambda) push(l);
    push(r.weight);
    out += r.separable ? ",1" : ",0";
    push(r.negativity);
    push(r.concurrence);
    out += '\n';
}

const char* kDumpHeader =
    "index,c1,c2,c3,c4,c5,c6,c7,c8,c9,c10,c11,c12,c13,c14,c15,"
    "lambda1,lambda2,lambda3,lambda4,weight,separable,negativity,concurrence\n";

// --- per-point kernels -----------------------------------------------------

void volume_point(const HaltonStream& stream, std::uint64_t index,
                  const EstimatorState& geom, std::vector<BatchTotals>& local,
                  std::vector<DumpRow>* dump) {
    std::array<double, 15> pt;
    stream.point(index, pt);

    UnitaryCoords uc;
    std::copy_n(pt.begin(), 12, uc.u.begin());
    const EigenAngles ang{pt[12] * kHalfPi, pt[13] * kHalfPi, pt[14] * kHalfPi};

    const Spectrum spec = spectrum_from_angles(ang);
    const ConditionalDensity cd = conditional_density(spec.lambda);
    if (cd.singular)
        throw std::runtime_error("singular volume element at index " +
                                 std::to_string(index));
    const double w = cd.value * angle_jacobian(ang);

    const CosetUnitary frame = unitary_from_coords(uc);
    const DensityMatrix rho = assemble_density(frame, spec);
    const PartialTranspose pt4 = partial_transpose(rho);
    const bool boundary_hit = std::abs(pt4.determinant) <= kBoundaryDetTol;
    const bool separable = pt4.determinant >= 0.0 || boundary_hit;
    const double neg = negativity(pt4);

    const Eigen::Vector4d lam(spec.lambda[0], spec.lambda[1], spec.lambda[2],
                              spec.lambda[3]);
    const Eigen::Matrix4cd sqrt_rho =
        frame * lam.cwiseSqrt().asDiagonal() * frame.adjoint();
    const double conc = concurrence_with_sqrt(rho, sqrt_rho);

    BatchTotals& b = local[geom.batch_of(index)];
    b.weight.add(w);
    if (separable) {
        b.weight_sep.add(w);
        ++b.separable;
    }
    b.weight_neg.add(w * neg);
    b.weight_conc.add(w * conc);
    if (boundary_hit) ++b.boundary_hits;
    ++b.count;

    if (dump)
        dump->push_back({index, pt, spec, w, separable, neg, conc});
}

void boundary_point(const HaltonStream& stream, std::uint64_t index,
                    const EstimatorState& geom, int grid_cells,
                    std::vector<BatchTotals>& local) {
    std::array<double, 14> pt;
    stream.point(index, pt);

    const auto roots = find_boundary_roots(pt, grid_cells);

    double root_sum = 0.0;
    const EigenAngles base{pt[12] * kHalfPi, pt[13] * kHalfPi, 0.0};
    for (const double t : roots) {
        const EigenAngles ang{base.theta1, base.theta2, t * kHalfPi};
        const Spectrum spec = spectrum_from_angles(ang);
        const ConditionalDensity cd = conditional_density(spec.lambda);
        if (cd.singular)
            throw std::runtime_error("singular boundary element at index " +
                                     std::to_string(index));
        // area element at the root: 1/pi times the volume element, which in
        // the unit-cube coordinate along the scan carries d(theta3) = (pi/2)dt;
        // the two pi's cancel to the factor 1/2
        root_sum += 0.5 * cd.value * angle_jacobian(ang);
    }

    BatchTotals& b = local[geom.batch_of(index)];
    b.root_weight.add(root_sum);
    b.roots += roots.size();
    if (!roots.empty()) ++b.points_with_roots;
    ++b.count;
}

// --- worker pool -----------------------------------------------------------

struct RangeResult {
    std::vector<BatchTotals> totals;
    std::vector<DumpRow> dump;
};

void process_range(const RunConfig& cfg, const HaltonStream& stream,
                   const EstimatorState& geom, std::uint64_t first,
                   std::uint64_t last, bool want_dump, RangeResult& out) {
    out.totals.assign(geom.batches.size(), BatchTotals{});
    std::vector<DumpRow>* dump = want_dump ? &out.dump : nullptr;
    for (std::uint64_t i = first; i < last; ++i) {
        if (cfg.kind == RunKind::Volume)
            volume_point(stream, i, geom, out.totals, dump);
        else
            boundary_point(stream, i, geom, cfg.root_grid, out.totals);
    }
}

void merge_totals(EstimatorState& state, const std::vector<BatchTotals>& part) {
    for (std::size_t b = 0; b < part.size(); ++b)
        state.batches[b].merge(part[b]);
}

EstimateReport run_stream(const RunConfig& cfg) {
    if (cfg.kind == RunKind::BoundaryTotal)
        throw std::invalid_argument("total boundary area is quadrature, not a stream run");
    if (cfg.samples < cfg.batches)
        throw std::invalid_argument("samples must be at least the batch count");
    if (cfg.chunk_size < 1 || cfg.workers < 1 || cfg.batches < 1)
        throw std::invalid_argument("chunk_size, workers and batches must be positive");
    if (!cfg.dump_path.empty() && cfg.kind != RunKind::Volume)
        throw std::invalid_argument("--dump-samples applies to volume runs only");
    if (cfg.root_grid < 2)
        throw std::invalid_argument("root grid needs at least 2 cells");

    const auto t0 = std::chrono::steady_clock::now();

    EstimatorState state;
    if (cfg.resume) {
        if (cfg.checkpoint_path.empty())
            throw std::invalid_argument("--resume requires --checkpoint");
        state = load_checkpoint(cfg.checkpoint_path, cfg);
    } else {
        state = make_state(cfg);
    }

    std::ofstream dump_file;
    if (!cfg.dump_path.empty()) {
        if (cfg.resume)
            throw std::invalid_argument("sample dumps cannot be combined with --resume");
        dump_file.open(cfg.dump_path, std::ios::binary | std::ios::trunc);
        if (!dump_file)
            throw std::runtime_error("cannot open dump path: " + cfg.dump_path);
        dump_file << kDumpHeader;
    }

    const HaltonStream stream(cfg.dimension(),
                              make_permutations(cfg.scrambling, cfg.dimension(),
                                                cfg.seed),
                              state.start_index);

    const std::uint64_t end_index = cfg.skip + cfg.samples + 1;
    if (state.next_index > end_index)
        throw std::runtime_error(
            "checkpoint already covers more samples than requested");

    const bool want_dump = dump_file.is_open();
    while (state.next_index < end_index) {
        // one wave: `workers` consecutive chunks, merged in index order
        const std::uint64_t wave_begin = state.next_index;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
        std::uint64_t cursor = wave_begin;
        for (std::uint32_t w = 0; w < cfg.workers && cursor < end_index; ++w) {
            const std::uint64_t hi = std::min(end_index, cursor + cfg.chunk_size);
            ranges.emplace_back(cursor, hi);
            cursor = hi;
        }

        std::vector<RangeResult> results(ranges.size());
        if (ranges.size() == 1) {
            process_range(cfg, stream, state, ranges[0].first, ranges[0].second,
                          want_dump, results[0]);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(ranges.size());
            for (std::size_t k = 0; k < ranges.size(); ++k)
                pool.emplace_back([&, k] {
                    try {
                        process_range(cfg, stream, state, ranges[k].first,
                                      ranges[k].second, want_dump, results[k]);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                });
            for (auto& t : pool) t.join();
            for (const auto& e : errors)
                if (e) std::rethrow_exception(e);
        }

        for (const auto& r : results) merge_totals(state, r.totals);
        state.next_index = cursor;

        if (want_dump) {
            std::string block;
            for (const auto& r : results)
                for (const auto& row : r.dump) format_dump_row(block, row);
            dump_file << block;
            if (!dump_file)
                throw std::runtime_error("failed writing sample dump");
        }
        if (!cfg.checkpoint_path.empty())
            save_checkpoint(cfg.checkpoint_path, cfg, state);
        if (cfg.stop_after_samples != 0 &&
            state.next_index - state.start_index >= cfg.stop_after_samples)
            break;  // simulated interruption; the checkpoint carries the state
    }

    if (want_dump) dump_file.close();

    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    return report_from_state(cfg, state, secs);
}

double batch_se(const std::vector<double>& means) {
    if (means.size() < 2) return 0.0;
    double m = 0.0;
    for (const double v : means) m += v;
    m /= static_cast<double>(means.size());
    double ss = 0.0;
    for (const double v : means) ss += (v - m) * (v - m);
    const double sd = std::sqrt(ss / static_cast<double>(means.size() - 1));
    return sd / std::sqrt(static_cast<double>(means.size()));
}

}  // namespace

const char* to_string(RunKind k) {
    switch (k) {
        case RunKind::Volume: return "volume";
        case RunKind::BoundarySeparable: return "boundary_separable";
        case RunKind::BoundaryTotal: return "boundary_total";
    }
    return "?";
}

std::uint64_t RunConfig::config_hash() const {
    std::ostringstream os;
    os << "sepvol.v1|" << to_string(kind) << "|scramble=" << to_string(scrambling)
       << "|seed=" << seed << "|skip=" << skip << "|metric=" << to_string(metric)
       << "|batches=" << batches << "|rootgrid=" << root_grid;
    return fnv1a(os.str());
}

void BatchTotals::merge(const BatchTotals& o) {
    weight.merge(o.weight);
    weight_sep.merge(o.weight_sep);
    weight_neg.merge(o.weight_neg);
    weight_conc.merge(o.weight_conc);
    root_weight.merge(o.root_weight);
    count += o.count;
    separable += o.separable;
    boundary_hits += o.boundary_hits;
    roots += o.roots;
    points_with_roots += o.points_with_roots;
}

std::uint64_t EstimatorState::total_count() const {
    std::uint64_t n = 0;
    for (const auto& b : batches) n += b.count;
    return n;
}

EstimatorState make_state(const RunConfig& cfg) {
    EstimatorState st;
    st.config_hash = cfg.config_hash();
    st.start_index = cfg.skip + 1;
    st.batch_block = (cfg.samples + cfg.batches - 1) / cfg.batches;
    st.next_index = st.start_index;
    st.batches.assign(cfg.batches, BatchTotals{});
    return st;
}

EstimatorState merge_states(EstimatorState a, const EstimatorState& b) {
    if (a.config_hash != b.config_hash)
        throw std::invalid_argument("merge_states: config hash mismatch");
    if (a.start_index != b.start_index || a.batch_block != b.batch_block ||
        a.batches.size() != b.batches.size())
        throw std::invalid_argument("merge_states: batch geometry mismatch");
    for (std::size_t i = 0; i < a.batches.size(); ++i)
        a.batches[i].merge(b.batches[i]);
    a.next_index = std::max(a.next_index, b.next_index);
    return a;
}

std::vector<double> find_boundary_roots(std::span<const double> coords,
                                        int grid_cells) {
    if (coords.size() != 14)
        throw std::invalid_argument("find_boundary_roots needs 14 coordinates");
    if (grid_cells < 2)
        throw std::invalid_argument("root grid needs at least 2 cells");

    UnitaryCoords uc;
    std::copy_n(coords.begin(), 12, uc.u.begin());
    const CosetUnitary frame = unitary_from_coords(uc);
    const double t1 = coords[12] * kHalfPi;
    const double t2 = coords[13] * kHalfPi;

    const auto det_at = [&](double t) {
        const Spectrum s = spectrum_from_angles({t1, t2, t * kHalfPi});
        const Eigen::Vector4d lam(s.lambda[0], s.lambda[1], s.lambda[2],
                                  s.lambda[3]);
        const DensityMatrix rho = frame * lam.asDiagonal() * frame.adjoint();
        Eigen::Matrix4cd pt = rho;
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj)
                pt.block<2, 2>(2 * bi, 2 * bj) =
                    rho.block<2, 2>(2 * bi, 2 * bj).transpose().eval();
        return pt.determinant().real();
    };

    std::vector<double> roots;
    const int n = grid_cells;
    double prev = det_at(0.0);
    for (int k = 0; k < n; ++k) {
        const double ta = static_cast<double>(k) / n;
        const double tb = static_cast<double>(k + 1) / n;
        const double cur = det_at(tb);
        if (prev == 0.0) {
            if (ta > 0.0) roots.push_back(ta);
        } else if (cur != 0.0 && std::signbit(prev) != std::signbit(cur)) {
            // bisect to |dt| <= 1e-10; distinct roots in distinct cells stay apart
            double lo = ta, hi = tb, flo = prev;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double fm = det_at(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return roots;
}

EstimateReport report_from_state(const RunConfig& cfg, const EstimatorState& st,
                                 double wall_time_s) {
    EstimateReport rep;
    rep.run_type = to_string(cfg.kind);
    rep.config = cfg;
    rep.wall_time_s = wall_time_s;

    const double n_total = static_cast<double>(st.total_count());
    const double convention =
        cfg.metric == MetricConvention::Bures ? std::ldexp(1.0, -12) : 1.0;

    std::vector<double> v_means, vsep_means, p_means, neg_means, conc_means,
        area_means, frac_means, count_means;
    // exact global totals, independent of the batch layout
    FixedAccumulator tw, twsep, twneg, twconc, troot;
    std::uint64_t separable = 0, bhits = 0, roots = 0, rooted = 0;

    for (const auto& b : st.batches) {
        if (b.count == 0) continue;
        const double nb = static_cast<double>(b.count);
        const double w = b.weight.to_double();
        const double wsep = b.weight_sep.to_double();
        tw.merge(b.weight);
        twsep.merge(b.weight_sep);
        twneg.merge(b.weight_neg);
        twconc.merge(b.weight_conc);
        troot.merge(b.root_weight);
        separable += b.separable;
        bhits += b.boundary_hits;
        roots += b.roots;
        rooted += b.points_with_roots;

        if (cfg.kind == RunKind::Volume) {
            v_means.push_back(convention * volume_scale() * w / nb);
            vsep_means.push_back(convention * volume_scale() * wsep / nb);
            if (w > 0.0) {
                p_means.push_back(wsep / w);
                neg_means.push_back(b.weight_neg.to_double() / w);
                conc_means.push_back(b.weight_conc.to_double() / w);
            }
        } else {
            area_means.push_back(convention * area_scale() *
                                 b.root_weight.to_double() / nb);
            frac_means.push_back(static_cast<double>(b.points_with_roots) / nb);
            count_means.push_back(static_cast<double>(b.roots) / nb);
        }
    }

    const double sw = tw.to_double();
    const double swsep = twsep.to_double();
    const double swneg = twneg.to_double();
    const double swconc = twconc.to_double();
    const double sroot = troot.to_double();

    auto add_reference = [&](const std::string& est_name, const char* ref_name,
                             double scale) {
        const double ref = scale * reference_constant(ref_name);
        rep.reference[est_name + "/" + ref_name] =
            ReferenceDelta{ref, rep.estimates[est_name].value - ref};
    };

    if (cfg.kind == RunKind::Volume) {
        rep.estimates["V_total"] = {convention * volume_scale() * sw / n_total,
                                    batch_se(v_means)};
        rep.estimates["V_sep"] = {convention * volume_scale() * swsep / n_total,
                                  batch_se(vsep_means)};
        rep.estimates["P_sep"] = {sw > 0.0 ? swsep / sw : 0.0, batch_se(p_means)};
        rep.estimates["mean_negativity"] = {sw > 0.0 ? swneg / sw : 0.0,
                                            batch_se(neg_means)};
        rep.estimates["mean_concurrence"] = {sw > 0.0 ? swconc / sw : 0.0,
                                             batch_se(conc_means)};
        add_reference("V_total", "V_total", convention);
        add_reference("V_sep", "V_sep_conjecture", convention);
        add_reference("P_sep", "P_sep_conjecture", 1.0);
        add_reference("mean_negativity", "mean_negativity_published", 1.0);
        add_reference("mean_concurrence", "mean_concurrence_published", 1.0);
        rep.counts["samples"] = st.total_count();
        rep.counts["separable"] = separable;
        rep.counts["boundary_hits"] = bhits;
    } else {
        rep.estimates["A_sep"] = {convention * area_scale() * sroot / n_total,
                                  batch_se(area_means)};
        rep.estimates["root_fraction"] = {static_cast<double>(rooted) / n_total,
                                          batch_se(frac_means)};
        rep.estimates["mean_root_count"] = {static_cast<double>(roots) / n_total,
                                            batch_se(count_means)};
        add_reference("A_sep", "A_sep_candidate_low", convention);
        add_reference("A_sep", "A_sep_candidate_high", convention);
        add_reference("A_sep", "A_sep_estimate_11p8M", convention);
        add_reference("root_fraction", "root_fraction_published", 1.0);
        add_reference("mean_root_count", "mean_root_count_published", 1.0);
        rep.counts["samples"] = st.total_count();
        rep.counts["points_with_roots"] = rooted;
        rep.counts["roots"] = roots;
    }
    return rep;
}

EstimateReport volume_run(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.kind = RunKind::Volume;
    return run_stream(c);
}

EstimateReport separable_boundary_run(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.kind = RunKind::BoundarySeparable;
    return run_stream(c);
}

EstimateReport total_boundary_area() {
    const auto t0 = std::chrono::steady_clock::now();
    const double restricted = boundary_restricted_integral(4, 1e-10);
    const double area = 4.0 * restricted * std::pow(kPi, 6) / 96.0;
    const auto t1 = std::chrono::steady_clock::now();

    EstimateReport rep;
    rep.run_type = to_string(RunKind::BoundaryTotal);
    rep.config.kind = RunKind::BoundaryTotal;
    rep.config.samples = 0;
    rep.estimates["boundary_integral_m4"] = {restricted, 0.0};
    rep.estimates["A_total"] = {area, 0.0};
    rep.reference["boundary_integral_m4/boundary_integral_m4"] = {
        reference_constant("boundary_integral_m4"),
        restricted - reference_constant("boundary_integral_m4")};
    rep.reference["A_total/A_total"] = {reference_constant("A_total"),
                                        area - reference_constant("A_total")};
    rep.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

// --- checkpointing ---------------------------------------------------------

namespace {

nlohmann::json accumulator_json(const FixedAccumulator& a) {
    return nlohmann::json::array({"0x" + hex64(a.hi_word()), "0x" + hex64(a.lo_word())});
}

FixedAccumulator accumulator_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("checkpoint accumulator is not a word pair");
    const auto parse = [](const std::string& s) {
        if (s.size() != 18 || s[0] != '0' || s[1] != 'x')
            throw std::runtime_error("bad accumulator word: " + s);
        return std::stoull(s.substr(2), nullptr, 16);
    };
    return FixedAccumulator::from_words(parse(j[0].get<std::string>()),
                                        parse(j[1].get<std::string>()));
}

}  // namespace

void save_checkpoint(const std::string& path, const RunConfig& cfg,
                     const EstimatorState& state) {
    nlohmann::json j;
    j["format"] = 1;
    j["run_type"] = to_string(cfg.kind);
    j["config_hash"] = hex64(state.config_hash);
    j["samples"] = cfg.samples;
    j["skip"] = cfg.skip;
    j["seed"] = cfg.seed;
    j["scrambling"] = to_string(cfg.scrambling);
    j["metric"] = to_string(cfg.metric);
    j["batches"] = cfg.batches;
    j["root_grid"] = cfg.root_grid;
    j["start_index"] = state.start_index;
    j["batch_block"] = state.batch_block;
    j["next_index"] = state.next_index;
    auto acc = nlohmann::json::array();
    for (const auto& b : state.batches) {
        nlohmann::json e;
        e["weight"] = accumulator_json(b.weight);
        e["weight_sep"] = accumulator_json(b.weight_sep);
        e["weight_neg"] = accumulator_json(b.weight_neg);
        e["weight_conc"] = accumulator_json(b.weight_conc);
        e["root_weight"] = accumulator_json(b.root_weight);
        e["count"] = b.count;
        e["separable"] = b.separable;
        e["boundary_hits"] = b.boundary_hits;
        e["roots"] = b.roots;
        e["points_with_roots"] = b.points_with_roots;
        acc.push_back(std::move(e));
    }
    j["accumulators"] = std::move(acc);

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
        out << j.dump(1);
        out.flush();
        if (!out) throw std::runtime_error("failed writing checkpoint: " + path);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace checkpoint: " + path);
}

EstimatorState load_checkpoint(const std::string& path, const RunConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("corrupt checkpoint " + path + ": " + e.what());
    }
    try {
        if (j.at("format").get<int>() != 1)
            throw std::runtime_error("unsupported checkpoint format");
        EstimatorState st;
        const std::string stored_hash = j.at("config_hash").get<std::string>();
        st.config_hash = std::stoull(stored_hash, nullptr, 16);
        if (st.config_hash != cfg.config_hash())
            throw std::runtime_error(
                "checkpoint config hash " + stored_hash +
                " does not match the requested configuration " +
                hex64(cfg.config_hash()));
        if (j.at("run_type").get<std::string>() != to_string(cfg.kind))
            throw std::runtime_error("checkpoint run type mismatch");
        st.start_index = j.at("start_index").get<std::uint64_t>();
        st.batch_block = j.at("batch_block").get<std::uint64_t>();
        st.next_index = j.at("next_index").get<std::uint64_t>();
        const auto& acc = j.at("accumulators");
        if (acc.size() != cfg.batches)
            throw std::runtime_error("checkpoint batch count mismatch");
        st.batches.resize(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            const auto& e = acc[i];
            BatchTotals& b = st.batches[i];
            b.weight = accumulator_from_json(e.at("weight"));
            b.weight_sep = accumulator_from_json(e.at("weight_sep"));
            b.weight_neg = accumulator_from_json(e.at("weight_neg"));
            b.weight_conc = accumulator_from_json(e.at("weight_conc"));
            b.root_weight = accumulator_from_json(e.at("root_weight"));
            b.count = e.at("count").get<std::uint64_t>();
            b.separable = e.at("separable").get<std::uint64_t>();
            b.boundary_hits = e.at("boundary_hits").get<std::uint64_t>();
            b.roots = e.at("roots").get<std::uint64_t>();
            b.points_with_roots = e.at("points_with_roots").get<std::uint64_t>();
        }
        return st;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("incompatible checkpoint " + path + ": " + e.what());
    }
}

}  // namespace sepvol
