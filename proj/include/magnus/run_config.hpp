#ifndef MAGNUS_RUN_CONFIG_HPP
#define MAGNUS_RUN_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <magnus/generator.hpp>
#include <magnus/validation.hpp>

namespace magnus::numeric
{

// Flat key = value file, one pair per line, '#' starts a comment.
//
//   dimension      = 2
//   family         = affine            # constant | affine | polynomial | sinusoid
//   coefficients   = 0 1; 1 0 | 1 0; 0 -1
//   x              = 0.3               # or: t = 0.5
//   n_max          = 4
//   grid           = 32
//   tol            = 1e-12
//   omega          = 1.0               # sinusoid only
//   propagator_tol = 1e-11
//
// Matrices are separated by '|', rows by ';', entries by blanks or commas.
// An entry is "re" or "re:im".
struct RunConfig {
    int dimension = 0;
    GeneratorFamily family = GeneratorFamily::constant;
    std::vector<Matrix> coefficients;
    std::optional<double> t;
    std::optional<double> x;
    std::size_t n_max = 4;
    std::size_t grid = 32;
    double tol = 1e-12;
    double omega = 1.0;
    double propagator_tol = 1e-11;
};

class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::size_t line, const std::string &message);
    std::size_t line() const noexcept { return line_; } // 0 when not tied to a line

private:
    std::size_t line_;
};

RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path &path);

GeneratorFunction make_generator(const RunConfig &config);
// Horizon from t, or solved from x.
double resolve_horizon(const RunConfig &config, const GeneratorFunction &gen);
ValidationOptions make_validation_options(const RunConfig &config);

} // namespace magnus::numeric

#endif
