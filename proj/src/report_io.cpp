#include <magnus/report_io.hpp>

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

namespace magnus
{

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "json") {
        return Format::json;
    }
    if (name == "pretty") {
        return Format::pretty;
    }
    return std::nullopt;
}

std::string format_double(double value)
{
    return fmt::format("{:.9g}", value);
}

std::string decimal(const Rational &value)
{
    return value.to_scientific_string(8);
}

namespace
{

std::string render(const Cell &cell)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(const std::string &s) const { return s; }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::json cell_json(const Cell &cell)
{
    struct Visitor {
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(const std::string &s) const { return s; }
        nlohmann::json operator()(double d) const { return d; }
        nlohmann::json operator()(std::int64_t i) const { return i; }
        nlohmann::json operator()(bool b) const { return b; }
    };
    return std::visit(Visitor{}, cell);
}

// Display width in code points; the commutator strings carry UTF-8.
std::size_t width(const std::string &s)
{
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

Cell opt(const std::optional<double> &v)
{
    return v ? Cell{*v} : Cell{};
}

Cell idx(std::size_t n)
{
    return Cell{static_cast<std::int64_t>(n)};
}

} // namespace

nlohmann::json to_json(const Table &table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            obj[table.columns[c]] = c < row.size() ? cell_json(row[c]) : nlohmann::json(nullptr);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_table(std::ostream &out, const Table &table, Format format)
{
    switch (format) {
    case Format::json:
        out << to_json(table).dump(2) << '\n';
        return;
    case Format::csv:
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << csv_escape(table.columns[c]);
        }
        out << '\n';
        for (const auto &row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << csv_escape(render(row[c]));
            }
            out << '\n';
        }
        return;
    case Format::pretty: {
        std::vector<std::size_t> widths;
        for (const auto &col : table.columns) {
            widths.push_back(width(col));
        }
        std::vector<std::vector<std::string>> cells;
        for (const auto &row : table.rows) {
            std::vector<std::string> rendered;
            for (std::size_t c = 0; c < row.size(); ++c) {
                rendered.push_back(render(row[c]));
                if (c < widths.size()) {
                    widths[c] = std::max(widths[c], width(rendered.back()));
                }
            }
            cells.push_back(std::move(rendered));
        }
        auto line = [&](const std::vector<std::string> &items) {
            std::string text;
            for (std::size_t c = 0; c < items.size(); ++c) {
                if (c) {
                    text += "  ";
                }
                text += items[c];
                if (c + 1 < items.size()) {
                    text.append(widths[c] - width(items[c]), ' ');
                }
            }
            out << text << '\n';
        };
        line(table.columns);
        for (const auto &r : cells) {
            line(r);
        }
        return;
    }
    }
}

Table nu_table(const NuTable &table)
{
    Table t{{"n", "nu", "decimal", "method"}, {}};
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        const Rational &v = table.at(n);
        t.rows.push_back({idx(n), v.str(), decimal(v), to_string(table.method())});
    }
    return t;
}

Table nu_table_all(const NuTable &recursion, const NuTable &enumeration, const NuTable &simplified)
{
    Table t{{"n", "nu", "decimal", "recursion", "enumeration", "simplified", "equal"}, {}};
    for (std::size_t n = 1; n <= recursion.n_max(); ++n) {
        const Rational &r = recursion.at(n);
        Cell e;
        Cell equal;
        if (n <= enumeration.n_max()) {
            e = enumeration.at(n).str();
            equal = enumeration.at(n) == r;
        }
        t.rows.push_back({idx(n), r.str(), decimal(r), r.str(), e, simplified.at(n).str(), equal});
    }
    return t;
}

Table tree_table(const TreeSet &set, bool with_coefficients)
{
    Table t;
    t.columns = {"index", "tree"};
    if (with_coefficients) {
        t.columns.insert(t.columns.end(), {"alpha", "mu", "abs_alpha_mu"});
    }
    t.columns.push_back("expression");
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        const Tree &tree = set.members[i];
        std::vector<Cell> row{idx(i), serialize(tree)};
        if (with_coefficients) {
            const auto rec = coefficient_record(tree);
            row.insert(row.end(), {rec.alpha.str(), rec.mu.str(), rec.product.str()});
        }
        row.push_back(to_commutator_expression(tree));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table bound_table(const BoundReport &report)
{
    Table t{{"quantity", "n", "value"}, {}};
    t.rows.push_back({std::string("h_max"), Cell{}, report.input.h_max});
    t.rows.push_back({std::string("t"), Cell{}, report.input.t});
    t.rows.push_back({std::string("x"), Cell{}, report.x});
    for (const auto &p : report.per_term) {
        t.rows.push_back({std::string("term_bound"), idx(p.n), p.bound});
    }
    t.rows.push_back({std::string("truncation_bound"), idx(report.input.N), opt(report.truncation_simple)});
    t.rows.push_back({std::string("truncation_bound_tight"), idx(report.input.N), opt(report.truncation_tight)});
    t.rows.push_back({std::string("diverged"), Cell{}, !report.converged});
    return t;
}

nlohmann::json to_json(const BoundReport &report)
{
    nlohmann::json j;
    j["h_max"] = report.input.h_max;
    j["t"] = report.input.t;
    j["N"] = report.input.N;
    j["x"] = report.x;
    j["per_term"] = nlohmann::json::array();
    for (const auto &p : report.per_term) {
        j["per_term"].push_back({{"n", p.n}, {"bound", p.bound}});
    }
    j["truncation_bound"] = report.truncation_simple ? nlohmann::json(*report.truncation_simple) : nlohmann::json(nullptr);
    j["truncation_bound_tight"] = report.truncation_tight ? nlohmann::json(*report.truncation_tight) : nlohmann::json(nullptr);
    j["diverged"] = !report.converged;
    return j;
}

Table comparison_to_table(const std::vector<ComparisonRow> &rows)
{
    Table t{{"n", "bound_new", "bound_prior", "ratio"}, {}};
    for (const auto &r : rows) {
        t.rows.push_back({idx(r.n), r.bound_new, r.bound_prior, r.ratio});
    }
    return t;
}

Table phi_table(std::size_t n, double beta, const std::vector<std::pair<std::size_t, double>> &curve)
{
    Table t{{"n", "beta", "k", "phi"}, {}};
    for (const auto &[k, v] : curve) {
        t.rows.push_back({idx(n), beta, idx(k), v});
    }
    return t;
}

Table lhs_series_table(const LogSeries &series)
{
    Table t{{"order", "coefficient", "decimal"}, {}};
    t.rows.push_back({std::string("log"), series.log_coefficient.str(), decimal(series.log_coefficient)});
    for (std::size_t k = 1; k <= series.series.order(); ++k) {
        const Rational &c = series.series[k];
        t.rows.push_back({std::to_string(k), c.str(), decimal(c)});
    }
    return t;
}

Table scaling_table(const std::vector<ScalingReport> &rows)
{
    Table t{{"n", "k_cut", "beta", "theta", "delta", "k_max"}, {}};
    for (const auto &r : rows) {
        t.rows.push_back({idx(r.n), idx(r.k_cut), r.beta, r.theta, r.delta, r.k_max});
    }
    return t;
}

Table validation_table(const numeric::ValidationReport &report)
{
    Table t{{"kind", "order", "measured", "bound", "slack", "margin", "applicable", "pass", "propagator_difference"},
            {}};
    for (const auto &r : report.terms) {
        t.rows.push_back({std::string("term"), idx(r.n), r.measured, r.bound, r.slack, r.margin, true, r.pass, Cell{}});
    }
    for (const auto &r : report.truncation) {
        t.rows.push_back({std::string("truncation"), idx(r.N), opt(r.measured), opt(r.bound), r.slack, opt(r.margin),
                          r.applicable, r.pass, r.propagator_difference});
    }
    return t;
}

nlohmann::json to_json(const numeric::ValidationReport &report)
{
    auto optj = [](const std::optional<double> &v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json j;
    j["dimension"] = report.dimension;
    j["t"] = report.t;
    j["h_max"] = report.h_max;
    j["x"] = report.x;
    j["n_max"] = report.n_max;
    j["terms"] = nlohmann::json::array();
    for (const auto &r : report.terms) {
        j["terms"].push_back({{"n", r.n},
                              {"measured", r.measured},
                              {"bound", r.bound},
                              {"slack", r.slack},
                              {"margin", r.margin},
                              {"anti_hermitian", r.anti_hermitian_defect_small},
                              {"pass", r.pass}});
    }
    j["truncation"] = nlohmann::json::array();
    for (const auto &r : report.truncation) {
        j["truncation"].push_back({{"N", r.N},
                                   {"applicable", r.applicable},
                                   {"measured", optj(r.measured)},
                                   {"bound", optj(r.bound)},
                                   {"bound_tight", optj(r.bound_tight)},
                                   {"slack", r.slack},
                                   {"margin", optj(r.margin)},
                                   {"propagator_difference", r.propagator_difference},
                                   {"pass", r.pass}});
    }
    j["reference"] = {{"error_estimate", report.reference_error_estimate}, {"steps", report.reference_steps}};
    j["rejected"] = report.rejected;
    j["rejections"] = report.rejection_reasons;
    j["pass"] = report.pass;
    return j;
}

void dump_matrix_csv(std::ostream &out, const numeric::Matrix &m)
{
    out << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag())
                << '\n';
        }
    }
}

} // namespace magnus
