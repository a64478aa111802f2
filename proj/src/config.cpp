#include "ilm/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ilm {

namespace {

constexpr std::array<const char*, 9> kParamKeys = {
    "beta", "R", "y_L", "y_H", "lambda", "theta", "mu", "A", "M"};

std::string valid_keys_list() {
    std::string out;
    for (const char* k : kParamKeys) {
        if (!out.empty()) out += ", ";
        out += k;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::optional<double>* field_by_key(ParamDraft& d, std::string_view key) {
    if (key == "beta") return &d.beta;
    if (key == "R") return &d.R;
    if (key == "y_L") return &d.y_L;
    if (key == "y_H") return &d.y_H;
    if (key == "lambda") return &d.lambda;
    if (key == "theta") return &d.theta;
    if (key == "mu") return &d.mu;
    if (key == "A") return &d.A;
    if (key == "M") return &d.M;
    return nullptr;
}

}  // namespace

void ParamDraft::overlay(const ParamDraft& over) {
    if (over.beta) beta = over.beta;
    if (over.R) R = over.R;
    if (over.y_L) y_L = over.y_L;
    if (over.y_H) y_H = over.y_H;
    if (over.lambda) lambda = over.lambda;
    if (over.theta) theta = over.theta;
    if (over.mu) mu = over.mu;
    if (over.A) A = over.A;
    if (over.M) M = over.M;
}

std::vector<std::string> ParamDraft::missing() const {
    std::vector<std::string> out;
    if (!beta) out.push_back("beta");
    if (!R) out.push_back("R");
    if (!y_L) out.push_back("y_L");
    if (!y_H) out.push_back("y_H");
    if (!lambda) out.push_back("lambda");
    if (!theta) out.push_back("theta");
    if (!mu) out.push_back("mu");
    if (!A) out.push_back("A");
    if (!M) out.push_back("M");
    return out;
}

ModelParams ParamDraft::to_params() const {
    ModelParams p;
    p.beta = *beta;
    p.R = *R;
    p.y_L = *y_L;
    p.y_H = *y_H;
    p.lambda = *lambda;
    p.theta = *theta;
    p.mu = *mu;
    p.A = *A;
    p.M = *M;
    return p;
}

ParamDraft parse_config_text(const std::string& text,
                             const std::string& origin) {
    ParamDraft draft;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected `key = value`");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view val = trim(line.substr(eq + 1));

        auto* slot = field_by_key(draft, key);
        if (!slot)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": unknown key `" + std::string(key) +
                              "` (valid keys: " + valid_keys_list() + ")");

        double parsed = 0.0;
        const auto res =
            std::from_chars(val.data(), val.data() + val.size(), parsed);
        if (res.ec != std::errc() || res.ptr != val.data() + val.size())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected a number for `" + std::string(key) +
                              "`, got `" + std::string(val) + "`");
        *slot = parsed;
    }
    return draft;
}

ParamDraft parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::vector<std::string> check_sweep(const SweepSpec& s) {
    static constexpr std::array<const char*, 7> kVars = {
        "mu", "lambda", "theta", "y_H", "y_L", "beta", "R"};
    std::vector<std::string> errs;
    if (std::find(kVars.begin(), kVars.end(), s.var) == kVars.end()) {
        std::string list;
        for (const char* v : kVars) {
            if (!list.empty()) list += ", ";
            list += v;
        }
        errs.push_back("sweep variable `" + s.var + "` not one of: " + list);
    }
    if (s.points < 2) errs.push_back("sweep needs at least 2 grid points");
    if (!(s.from < s.to)) errs.push_back("sweep range requires from < to");
    return errs;
}

std::vector<double> sweep_grid(const SweepSpec& s) {
    std::vector<double> grid(static_cast<std::size_t>(s.points));
    const double step = (s.to - s.from) / static_cast<double>(s.points - 1);
    for (int i = 0; i < s.points; ++i)
        grid[static_cast<std::size_t>(i)] = s.from + step * i;
    grid.back() = s.to;  // land exactly on the endpoint
    return grid;
}

}  // namespace ilm
