#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "erkn/errors.hpp"
#include "erkn/harness.hpp"

namespace erkn {
namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(const std::string& text, const std::string& key) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw std::invalid_argument("config: '" + key + "': cannot parse number '" + text + "'");
    return v;
}

std::size_t parse_count(const std::string& text, const std::string& key) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("config: '" + key + "': expected a non-negative integer, got '" +
                                    text + "'");
    return v;
}

std::vector<double> parse_vector(const std::string& text, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_double(item, key));
    return out;
}

std::vector<MuEntry> parse_mu_list(const std::string& text) {
    std::vector<MuEntry> out;
    for (const auto& entry : split(text, ';')) {
        if (entry.empty()) continue;
        const auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("config: mu_list entry '" + entry +
                                        "' must look like 'label: v1, v2, ...'");
        std::string label = trim(std::string_view(entry).substr(0, colon));
        if (label.empty() || label.find_first_of(", \t\"") != std::string::npos)
            throw std::invalid_argument("config: mu_list label '" + label + "' is not a valid column suffix");
        out.emplace_back(std::move(label), parse_vector(entry.substr(colon + 1), "mu_list"));
    }
    if (out.empty()) throw std::invalid_argument("config: mu_list is empty");
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    (void)builtin_scheme(scheme_name);
    if (!(epsilon_inv > 0.0) || !std::isfinite(epsilon_inv))
        throw DomainError("config: epsilon_inv must be positive");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("config: h must be positive");
    if (!(t_end >= h)) throw DomainError("config: t_end must be >= h");
    if (sample_every < 1) throw DomainError("config: sample_every must be >= 1");
    if (std::fabs(static_cast<double>(n_steps()) * h - t_end) > 1e-9 * t_end)
        throw DomainError("config: t_end must be a whole number of steps h");
    if (lambda.size() != dims.size())
        throw DomainError("config: lambda and dims must have the same length");
    for (const auto& [label, mu] : mu_list)
        if (mu.size() != lambda.size())
            throw DomainError("config: mu '" + label + "' must have one entry per frequency");
    const bool paper_layout = dims == paper_dims();
    if (!paper_layout && (!q0 || !p0))
        throw DomainError("config: q0 and p0 are required unless dims = 2, 1, 1");
}

std::size_t ExperimentConfig::n_steps() const {
    return static_cast<std::size_t>(std::llround(t_end / h));
}

ExperimentConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (!kv.emplace(key, value).second)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
    }

    static const std::vector<std::string> required{"scheme_name", "epsilon_inv", "h", "t_end",
                                                   "sample_every", "output_path", "lambda"};
    static const std::vector<std::string> optional{"mu_list", "dims", "potential_coeffs", "q0",
                                                   "p0"};
    for (const auto& [key, value] : kv) {
        if (std::find(required.begin(), required.end(), key) == required.end() &&
            std::find(optional.begin(), optional.end(), key) == optional.end())
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    for (const auto& key : required)
        if (!kv.count(key)) throw std::invalid_argument("config: missing required key '" + key + "'");

    ExperimentConfig cfg;
    cfg.scheme_name = kv.at("scheme_name");
    cfg.epsilon_inv = parse_double(kv.at("epsilon_inv"), "epsilon_inv");
    cfg.h = parse_double(kv.at("h"), "h");
    cfg.t_end = parse_double(kv.at("t_end"), "t_end");
    cfg.sample_every = parse_count(kv.at("sample_every"), "sample_every");
    cfg.output_path = kv.at("output_path");
    cfg.lambda = parse_vector(kv.at("lambda"), "lambda");
    if (kv.count("mu_list")) cfg.mu_list = parse_mu_list(kv.at("mu_list"));
    if (kv.count("dims")) {
        cfg.dims.clear();
        for (const auto& item : split(kv.at("dims"), ',')) cfg.dims.push_back(parse_count(item, "dims"));
    }
    if (kv.count("potential_coeffs"))
        cfg.potential_coeffs = parse_vector(kv.at("potential_coeffs"), "potential_coeffs");
    if (kv.count("q0")) cfg.q0 = parse_vector(kv.at("q0"), "q0");
    if (kv.count("p0")) cfg.p0 = parse_vector(kv.at("p0"), "p0");
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace erkn
