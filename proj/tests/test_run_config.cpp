#include <doctest.h>

#include <filesystem>

#include <magnus/bounds.hpp>
#include <magnus/run_config.hpp>

using namespace magnus::numeric;

namespace
{

std::size_t error_line(const std::string &text)
{
    try {
        (void)parse_run_config(text);
    } catch (const ConfigError &e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

const std::filesystem::path config_dir{MAGNUS_CONFIG_DIR};

} // namespace

TEST_CASE("parses a full config")
{
    const auto c = parse_run_config("# comment\n"
                                    "dimension = 2\n"
                                    "family = sinusoid   # trailing\n"
                                    "coefficients = 1 0; 0 -1 | 0 1; 1 0 | 0 0:-1; 0:1 0\n"
                                    "t = 0.5\n"
                                    "n_max = 3\n"
                                    "grid = 16\n"
                                    "tol = 1e-10\n"
                                    "omega = 2.5\n"
                                    "propagator_tol = 1e-9\n");
    CHECK(c.dimension == 2);
    CHECK(c.family == GeneratorFamily::sinusoid);
    REQUIRE(c.coefficients.size() == 3);
    CHECK(c.coefficients[2](0, 1) == Complex(0, -1));
    CHECK(c.coefficients[2](1, 0) == Complex(0, 1));
    CHECK(*c.t == 0.5);
    CHECK_FALSE(c.x.has_value());
    CHECK(c.n_max == 3);
    CHECK(c.grid == 16);
    CHECK(c.tol == 1e-10);
    CHECK(c.omega == 2.5);
    CHECK(c.propagator_tol == 1e-9);

    const auto opts = make_validation_options(c);
    CHECK(opts.n_max == 3);
    CHECK(opts.quadrature.intervals == 16);
    CHECK(opts.propagator_tol == 1e-9);
}

TEST_CASE("errors carry line numbers")
{
    CHECK(error_line("dimension = 2\nfamily = affine\nbogus = 1\n") == 3);
    CHECK(error_line("dimension = 2\ndimension = 2\n") == 2);
    CHECK(error_line("dimension = 9\n") == 1);
    CHECK(error_line("dimension\n") == 1);
    CHECK(error_line("dimension = \n") == 1);
    CHECK(error_line("dimension = 2\nfamily = quartic\n") == 2);
    CHECK(error_line("dimension = 2\nfamily = affine\ncoefficients = 1 0; 0 1\nx = 0.3\ngrid = 7\n") == 5);
    CHECK(error_line("dimension = 2\nfamily = affine\ncoefficients = 1 0; 0 1\nx = 0.3\ntol = abc\n") == 5);
    CHECK(error_line("dimension = 2\nfamily = affine\ncoefficients = 1 0; 0 1\nx = 0.3\n") == 3);
    CHECK(error_line("dimension = 2\nfamily = constant\ncoefficients = 1 0 0; 0 1 0; 0 0 1\nt = 1\n") == 3);
    CHECK(error_line("dimension = 2\nfamily = constant\ncoefficients = 1 0; 0 1\n") == 0);
    CHECK(error_line("dimension = 2\nfamily = constant\ncoefficients = 1 0; 0 1\nt = 1\nx = 0.2\n") == 0);
    CHECK(error_line("family = constant\ncoefficients = 1\nt = 1\n") == 0);
    CHECK(error_line("dimension = 2\nfamily = constant\ncoefficients = 0 1; 2 0\nt = 1\n") == 3);

    try {
        (void)parse_run_config("dimension = 2\nn_max = 7\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(std::string(e.what()).starts_with("line 2: "));
    }
    CHECK_THROWS_AS(load_run_config(config_dir / "does_not_exist.cfg"), ConfigError);
}

TEST_CASE("bundled configs load and resolve")
{
    for (const char *name : {"example_2x2.cfg", "constant_2x2.cfg", "divergent_2x2.cfg"}) {
        CAPTURE(name);
        const auto c = load_run_config(config_dir / name);
        const auto gen = make_generator(c);
        CHECK_NOTHROW(gen.check_hermitian(1.0));
        const double t = resolve_horizon(c, gen);
        CHECK(t > 0.0);
        if (c.x) {
            CHECK(magnus::scaled_time(gen.h_max(t), t) == doctest::Approx(*c.x).epsilon(1e-9));
        } else {
            CHECK(t == *c.t);
        }
    }
}
