#include "hypl/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "json.hpp"

namespace hypl {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<double> parse_grid(const std::string& text) {
    double a, b, step;
    const char* p = text.c_str();
    const char* end = p + text.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ':')
        throw ConfigInvalid("grid: expected a:b:step, got '" + text + "'");
    auto r2 = std::from_chars(r1.ptr + 1, end, b);
    if (r2.ec != std::errc{} || r2.ptr == end || *r2.ptr != ':')
        throw ConfigInvalid("grid: expected a:b:step, got '" + text + "'");
    auto r3 = std::from_chars(r2.ptr + 1, end, step);
    if (r3.ec != std::errc{} || r3.ptr != end)
        throw ConfigInvalid("grid: expected a:b:step, got '" + text + "'");
    if (!(step > 0.0)) throw ConfigInvalid("grid: step must be positive");
    if (b < a) throw ConfigInvalid("grid: b must be >= a");

    const double ratio = (b - a) / step;
    const double rounded = std::round(ratio);
    std::vector<double> grid;
    if (std::abs(ratio - rounded) <= 1e-9) {
        const int count = int(rounded);
        for (int k = 0; k <= count; ++k) grid.push_back(a + double(k) * step);
        grid.back() = b;  // snap the inclusive endpoint
    } else {
        for (int k = 0; a + double(k) * step <= b + 1e-12; ++k)
            grid.push_back(a + double(k) * step);
    }
    return grid;
}

namespace {

nlohmann::ordered_json cell_to_json(const OutputRecord::Cell& cell) {
    using J = nlohmann::ordered_json;
    return std::visit(
        [](const auto& v) -> J {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else return v;
        },
        cell);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_csv(const OutputRecord::Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, double>) return format_double(v);
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return csv_escape(v);
        },
        cell);
}

} // namespace

std::string to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["schema_version"] = rec.schema_version;
    j["command"] = rec.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    j["params"] = params;
    if (rec.seed) j["seed"] = *rec.seed;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rec.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < rec.columns.size(); ++i)
            obj[rec.columns[i]] = cell_to_json(row[i]);
        rows.push_back(std::move(obj));
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string to_csv(const OutputRecord& rec) {
    std::string out;
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(rec.columns[i]);
    }
    out += '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_to_csv(row[i]);
        }
        out += '\n';
    }
    return out;
}

const char* kind_name(Kind k) { return k == Kind::starlike ? "starlike" : "convex"; }

const char* target_name(FsTarget t) {
    switch (t) {
        case FsTarget::f: return "f";
        case FsTarget::z_over_f: return "zf";
        case FsTarget::inverse: return "inv";
    }
    return "?";
}

const char* functional_name(Functional f) {
    switch (f) {
        case Functional::fs: return "fs";
        case Functional::hankel22: return "hankel22";
        case Functional::coeff: return "coeff";
    }
    return "?";
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::left: return "left";
        case Regime::middle: return "middle";
        case Regime::right: return "right";
        case Regime::single: return "single";
    }
    return "?";
}

OutputRecord make_verify_record(const CampaignReport& report) {
    const CampaignConfig& cfg = report.config;
    OutputRecord rec;
    rec.command = "verify";
    rec.seed = report.seed;

    auto join = [](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += format_double(v[i]);
        }
        return s;
    };
    rec.params.emplace_back("functional", functional_name(cfg.functional));
    rec.params.emplace_back("kind", kind_name(cfg.kind));
    if (cfg.functional == Functional::fs)
        rec.params.emplace_back("target", target_name(cfg.target));
    rec.params.emplace_back("s_grid", join(cfg.s_grid));
    if (cfg.functional == Functional::fs)
        rec.params.emplace_back("lambda_grid", join(cfg.lambda_grid));
    if (cfg.functional == Functional::coeff)
        rec.params.emplace_back("n_max", std::to_string(cfg.n_max));
    rec.params.emplace_back("samples", std::to_string(cfg.samples));
    rec.params.emplace_back("refine_steps", std::to_string(cfg.refine_steps));
    rec.params.emplace_back("tol_attain", format_double(cfg.tol_attain));
    rec.params.emplace_back("tol_violate", format_double(cfg.tol_violate));

    rec.columns = {"s"};
    if (cfg.functional == Functional::fs) rec.columns.push_back("lambda");
    if (cfg.functional == Functional::coeff) rec.columns.push_back("n");
    for (const char* c : {"bound", "regime", "sharp", "sup_found", "gap", "violated", "attained"})
        rec.columns.emplace_back(c);
    if (cfg.functional == Functional::coeff) {
        for (const char* c : {"c_re", "c_im", "n_zeros", "x1_re", "x1_im", "x2_re", "x2_im",
                              "x3_re", "x3_im"})
            rec.columns.emplace_back(c);
    } else {
        for (const char* c : {"w1_re", "w1_im", "xi_re", "xi_im", "zeta_re", "zeta_im"})
            rec.columns.emplace_back(c);
    }

    for (const CampaignRow& row : report.rows) {
        std::vector<OutputRecord::Cell> cells;
        cells.emplace_back(row.s);
        if (cfg.functional == Functional::fs) cells.emplace_back(row.lambda.value_or(0.0));
        if (cfg.functional == Functional::coeff)
            cells.emplace_back(std::int64_t(row.n.value_or(0)));
        cells.emplace_back(row.bound.value);
        cells.emplace_back(std::string(regime_name(row.bound.regime)));
        cells.emplace_back(row.bound.sharp);
        cells.emplace_back(row.sup_found);
        cells.emplace_back(row.gap);
        cells.emplace_back(row.violated);
        cells.emplace_back(row.attained);
        if (const auto* pa = std::get_if<PrefixArgmax>(&row.argmax)) {
            for (Complex v : {pa->w1, pa->xi, pa->zeta}) {
                cells.emplace_back(v.real());
                cells.emplace_back(v.imag());
            }
        } else {
            const auto& ba = std::get<BlaschkeArgmax>(row.argmax);
            cells.emplace_back(ba.c.real());
            cells.emplace_back(ba.c.imag());
            cells.emplace_back(std::int64_t(ba.zeros.size()));
            for (std::size_t i = 0; i < 3; ++i) {
                if (i < ba.zeros.size()) {
                    cells.emplace_back(ba.zeros[i].real());
                    cells.emplace_back(ba.zeros[i].imag());
                } else {
                    cells.emplace_back(std::monostate{});
                    cells.emplace_back(std::monostate{});
                }
            }
        }
        rec.rows.push_back(std::move(cells));
    }
    return rec;
}

} // namespace hypl
