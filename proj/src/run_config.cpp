#include <magnus/run_config.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>

namespace magnus::numeric
{

ConfigError::ConfigError(std::size_t line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

namespace
{

double parse_double(const std::string &text, std::size_t line, const std::string &key)
{
    double value = 0.0;
    const char *first = text.data();
    const char *last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ConfigError(line, "value of '" + key + "' is not a finite number: '" + text + "'");
    }
    return value;
}

std::size_t parse_count(const std::string &text, std::size_t line, const std::string &key)
{
    std::size_t value = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError(line, "value of '" + key + "' is not a non-negative integer: '" + text + "'");
    }
    return value;
}

Complex parse_entry(const std::string &text, std::size_t line)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        return {parse_double(text, line, "coefficients"), 0.0};
    }
    return {parse_double(text.substr(0, colon), line, "coefficients"),
            parse_double(text.substr(colon + 1), line, "coefficients")};
}

std::vector<Matrix> parse_matrices(const std::string &text, std::size_t line)
{
    std::vector<std::string> blocks;
    boost::split(blocks, text, boost::is_any_of("|"));
    std::vector<Matrix> out;
    for (auto &block : blocks) {
        std::vector<std::string> rows;
        boost::split(rows, block, boost::is_any_of(";"));
        std::vector<std::vector<Complex>> entries;
        for (auto &row : rows) {
            boost::trim(row);
            std::vector<std::string> cells;
            boost::split(cells, row, boost::is_any_of(" \t,"), boost::token_compress_on);
            std::vector<Complex> parsed;
            for (auto &cell : cells) {
                if (!cell.empty()) {
                    parsed.push_back(parse_entry(cell, line));
                }
            }
            entries.push_back(std::move(parsed));
        }
        const std::size_t n = entries.size();
        if (n < 1 || n > static_cast<std::size_t>(kMaxDimension)) {
            throw ConfigError(line, "coefficient matrix must have 1.." + std::to_string(kMaxDimension) + " rows");
        }
        Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (entries[i].size() != n) {
                throw ConfigError(line, "coefficient matrix " + std::to_string(out.size() + 1) + " is not square");
            }
            for (std::size_t j = 0; j < n; ++j) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i][j];
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

GeneratorFamily parse_family(const std::string &text, std::size_t line)
{
    if (text == "constant") {
        return GeneratorFamily::constant;
    }
    if (text == "affine") {
        return GeneratorFamily::affine;
    }
    if (text == "polynomial") {
        return GeneratorFamily::polynomial;
    }
    if (text == "sinusoid") {
        return GeneratorFamily::sinusoid;
    }
    throw ConfigError(line, "unknown family '" + text + "' (constant, affine, polynomial, sinusoid)");
}

} // namespace

RunConfig parse_run_config(std::string_view text)
{
    RunConfig config;
    std::set<std::string> seen;
    std::size_t coefficients_line = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        boost::trim(raw);
        if (raw.empty()) {
            continue;
        }
        const auto eq = raw.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line, "expected 'key = value'");
        }
        std::string key = raw.substr(0, eq);
        std::string value = raw.substr(eq + 1);
        boost::trim(key);
        boost::trim(value);
        if (value.empty()) {
            throw ConfigError(line, "empty value for '" + key + "'");
        }
        if (!seen.insert(key).second) {
            throw ConfigError(line, "duplicate key '" + key + "'");
        }
        if (key == "dimension") {
            const auto d = parse_count(value, line, key);
            if (d < 1 || d > static_cast<std::size_t>(kMaxDimension)) {
                throw ConfigError(line, "dimension must lie in 1.." + std::to_string(kMaxDimension));
            }
            config.dimension = static_cast<int>(d);
        } else if (key == "family") {
            config.family = parse_family(value, line);
        } else if (key == "coefficients") {
            config.coefficients = parse_matrices(value, line);
            coefficients_line = line;
        } else if (key == "t") {
            config.t = parse_double(value, line, key);
            if (*config.t < 0.0) {
                throw ConfigError(line, "t must be non-negative");
            }
        } else if (key == "x") {
            config.x = parse_double(value, line, key);
            if (!(*config.x > 0.0)) {
                throw ConfigError(line, "x must be positive");
            }
        } else if (key == "n_max") {
            config.n_max = parse_count(value, line, key);
            if (config.n_max < 1 || config.n_max > 6) {
                throw ConfigError(line, "n_max must lie in 1..6");
            }
        } else if (key == "grid") {
            config.grid = parse_count(value, line, key);
            if (config.grid < 8 || config.grid % 2 != 0) {
                throw ConfigError(line, "grid must be an even number >= 8");
            }
        } else if (key == "tol") {
            config.tol = parse_double(value, line, key);
            if (!(config.tol > 0.0)) {
                throw ConfigError(line, "tol must be positive");
            }
        } else if (key == "omega") {
            config.omega = parse_double(value, line, key);
        } else if (key == "propagator_tol") {
            config.propagator_tol = parse_double(value, line, key);
            if (!(config.propagator_tol > 0.0)) {
                throw ConfigError(line, "propagator_tol must be positive");
            }
        } else {
            throw ConfigError(line, "unknown key '" + key + "'");
        }
    }
    for (const char *required : {"dimension", "family", "coefficients"}) {
        if (!seen.count(required)) {
            throw ConfigError(0, std::string("missing required key '") + required + "'");
        }
    }
    if (config.t.has_value() == config.x.has_value()) {
        throw ConfigError(0, "exactly one of 't' and 'x' must be given");
    }
    for (std::size_t k = 0; k < config.coefficients.size(); ++k) {
        const Matrix &m = config.coefficients[k];
        if (m.rows() != config.dimension) {
            throw ConfigError(coefficients_line, "coefficient matrix size does not match dimension");
        }
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
            throw ConfigError(coefficients_line, "coefficient matrix " + std::to_string(k + 1) + " is not Hermitian");
        }
    }
    const std::size_t count = config.coefficients.size();
    const bool count_ok = (config.family == GeneratorFamily::constant && count == 1) ||
                          (config.family == GeneratorFamily::affine && count == 2) ||
                          (config.family == GeneratorFamily::sinusoid && count == 3) ||
                          (config.family == GeneratorFamily::polynomial && count >= 1);
    if (!count_ok) {
        throw ConfigError(coefficients_line, "family '" + to_string(config.family) + "' does not take " +
                                                 std::to_string(count) + " coefficient matrices");
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(0, "cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

GeneratorFunction make_generator(const RunConfig &config)
{
    const auto &c = config.coefficients;
    switch (config.family) {
    case GeneratorFamily::constant:
        return GeneratorFunction::constant(c.at(0));
    case GeneratorFamily::affine:
        return GeneratorFunction::affine(c.at(0), c.at(1));
    case GeneratorFamily::polynomial:
        return GeneratorFunction::polynomial(c);
    case GeneratorFamily::sinusoid:
        return GeneratorFunction::sinusoid(c.at(0), c.at(1), c.at(2), config.omega);
    case GeneratorFamily::custom:
        break;
    }
    throw ConfigError(0, "custom generators cannot be built from a config");
}

double resolve_horizon(const RunConfig &config, const GeneratorFunction &gen)
{
    if (config.t) {
        return *config.t;
    }
    return horizon_for_scaled_time(gen, *config.x);
}

ValidationOptions make_validation_options(const RunConfig &config)
{
    ValidationOptions options;
    options.n_max = config.n_max;
    options.quadrature.intervals = config.grid;
    options.quadrature.tolerance = config.tol;
    options.propagator_tol = config.propagator_tol;
    return options;
}

} // namespace magnus::numeric
