#include "sepvol/report.hpp"

#include "sepvol/separability.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sepvol {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quoted(std::string_view s) {
    std::string out = "\"";
    out += s;  // keys and enum names only; no escaping needed
    out += '"';
    return out;
}

struct JsonWriter {
    std::string out;
    int depth = 0;
    bool first = true;

    void indent() {
        out += '\n';
        out.append(static_cast<std::size_t>(2 * depth), ' ');
    }
    void sep() {
        if (!first) out += ',';
        first = false;
        indent();
    }
    void open(const char* key, char brace) {
        sep();
        if (key) {
            out += quoted(key);
            out += ": ";
        }
        out += brace;
        ++depth;
        first = true;
    }
    void close(char brace) {
        --depth;
        indent();
        out += brace;
        first = false;
    }
    void field(std::string_view key, std::string_view raw) {
        sep();
        out += quoted(key);
        out += ": ";
        out += raw;
    }
};

}  // namespace

std::string report_json(const EstimateReport& r) {
    JsonWriter w;
    w.out += '{';
    ++w.depth;
    w.field("run_type", quoted(r.run_type));

    w.open("config", '{');
    w.field("samples", std::to_string(r.config.samples));
    w.field("skip", std::to_string(r.config.skip));
    w.field("scrambling", quoted(to_string(r.config.scrambling)));
    w.field("seed", std::to_string(r.config.seed));
    w.field("metric", quoted(to_string(r.config.metric)));
    w.field("batches", std::to_string(r.config.batches));
    w.field("chunk_size", std::to_string(r.config.chunk_size));
    w.field("workers", std::to_string(r.config.workers));
    if (r.config.kind == RunKind::BoundarySeparable)
        w.field("root_grid", std::to_string(r.config.root_grid));
    w.field("dimension", std::to_string(r.config.dimension()));
    char hash[19];
    std::snprintf(hash, sizeof hash, "\"%016llx\"",
                  static_cast<unsigned long long>(r.config.config_hash()));
    w.field("config_hash", hash);
    w.close('}');

    w.open("estimates", '{');
    for (const auto& [name, est] : r.estimates) {
        w.open(name.c_str(), '{');
        w.field("value", num(est.value));
        w.field("batch_se", num(est.batch_se));
        w.close('}');
    }
    w.close('}');

    w.open("reference", '{');
    for (const auto& [name, ref] : r.reference) {
        w.open(name.c_str(), '{');
        w.field("value", num(ref.value));
        w.field("delta", num(ref.delta));
        w.close('}');
    }
    w.close('}');

    w.open("counts", '{');
    for (const auto& [name, count] : r.counts)
        w.field(name, std::to_string(count));
    w.close('}');

    w.field("wall_time_s", num(r.wall_time_s));
    --w.depth;
    w.out += "\n}\n";
    return w.out;
}

std::string constants_json() {
    JsonWriter w;
    w.out += '{';
    ++w.depth;
    for (const auto& c : reference_constants()) {
        w.open(c.name.c_str(), '{');
        w.field("closed_form", quoted(c.closed_form));
        w.field("decimal", num(c.value));
        w.field("provenance", quoted("paper"));
        w.close('}');
    }
    --w.depth;
    w.out += "\n}\n";
    return w.out;
}

std::string classify_json(const DensityMatrix& rho) {
    validate_density(rho);
    const PartialTranspose pt = partial_transpose(rho);
    const bool boundary = std::abs(pt.determinant) <= kBoundaryDetTol;
    const bool separable = pt.determinant >= 0.0 || boundary;
    JsonWriter w;
    w.out += '{';
    ++w.depth;
    w.field("separable", separable ? "true" : "false");
    w.field("boundary_hit", boundary ? "true" : "false");
    w.field("det_pt", num(pt.determinant));
    w.field("negativity", num(negativity(pt)));
    w.field("concurrence", num(concurrence(rho)));
    --w.depth;
    w.out += "\n}\n";
    return w.out;
}

std::string curvature_json(const Spectrum& s) {
    const ScalarCurvature c = scalar_curvature(s);
    JsonWriter w;
    w.out += '{';
    ++w.depth;
    w.open("spectrum", '[');
    for (const double l : s.lambda) {
        w.sep();
        w.out += num(l);
    }
    w.close(']');
    w.field("singular", c.singular ? "true" : "false");
    if (!c.singular) w.field("scalar_curvature", num(c.value));
    w.field("minimum_m4", num(570.0));
    --w.depth;
    w.out += "\n}\n";
    return w.out;
}

std::string isoperimetric_json(const IsoperimetricComparison& cmp) {
    JsonWriter w;
    w.out += '{';
    ++w.depth;
    w.field("dimension", std::to_string(cmp.dimension));
    w.field("alpha", num(cmp.alpha));
    w.field("unit_ball_volume", num(cmp.unit_ball_volume));
    w.field("small_ball_radius", num(cmp.small_ball_radius));
    w.field("small_ball_area", num(cmp.small_ball_area));
    w.field("w", num(cmp.w));
    w.field("ratio", num(cmp.ratio));
    w.field("inequality_holds", cmp.inequality_holds ? "true" : "false");
    --w.depth;
    w.out += "\n}\n";
    return w.out;
}

std::complex<double> parse_complex(std::string_view token) {
    // strip blanks
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw std::invalid_argument("empty complex entry");

    const bool imaginary = token.back() == 'i' || token.back() == 'I';
    std::string body(token);
    if (imaginary) body.pop_back();

    // split "a+b" / "a-b" at the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }

    const auto to_double = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("malformed number: " + s);
        return v;
    };

    try {
        if (!imaginary) {
            if (split != std::string::npos)
                throw std::invalid_argument("real entry with embedded sign: " + body);
            return {to_double(body), 0.0};
        }
        if (split == std::string::npos) return {0.0, to_double(body)};
        return {to_double(body.substr(0, split)), to_double(body.substr(split))};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse complex entry: " + std::string(token));
    }
}

DensityMatrix parse_density(std::string_view csv) {
    std::vector<std::complex<double>> entries;
    std::string token;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, token, ',')) entries.push_back(parse_complex(token));
    if (entries.size() != 16)
        throw std::invalid_argument("expected 16 comma-separated entries, got " +
                                    std::to_string(entries.size()));
    DensityMatrix rho;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rho(r, c) = entries[static_cast<std::size_t>(4 * r + c)];
    return rho;
}

}  // namespace sepvol
