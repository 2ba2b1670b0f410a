#include "gwcount/cli.hpp"

#include "gwcount/cohomology.hpp"
#include "gwcount/enumerative.hpp"
#include "gwcount/plane_curves.hpp"
#include "gwcount/potential.hpp"
#include "gwcount/quantum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace gwcount::cli {

using json = nlohmann::ordered_json;

namespace {

enum class Format { json, text, csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t as_unsigned(std::int64_t d) {
    if (d < 1) throw DomainError("invalid_degree", "degree must be >= 1, got " + std::to_string(d));
    return static_cast<std::uint64_t>(d);
}

int as_degree(std::int64_t d) {
    if (d < 1) throw DomainError("invalid_degree", "degree must be >= 1, got " + std::to_string(d));
    if (d > 100000) throw DomainError("invalid_degree", "degree too large: " + std::to_string(d));
    return static_cast<int>(d);
}

std::string monomial_name(int k) { return k == 0 ? "1" : k == 1 ? "H" : "H^" + std::to_string(k); }

CommandResult count_table_result(const std::string& command, int max_degree, const CountTable& table) {
    CommandResult r;
    r.command = command;
    r.parameters["max"] = max_degree;
    r.result = json::object();
    Table t{{"d", "N_d"}, {}};
    for (int d = 1; d <= max_degree; ++d) {
        r.result[std::to_string(d)] = integer_json(table.at(d));
        t.rows.push_back({std::to_string(d), table.at(d).get_str()});
    }
    r.table = std::move(t);
    return r;
}

Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    throw DomainError("invalid_input", "point coordinates must be integer or \"p/q\" strings");
}

std::vector<PlanePoint> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("input_error", "cannot open points file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("input_error", std::string("points file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw DomainError("input_error", "points file must be an object with a \"points\" array");
    std::vector<PlanePoint> points;
    for (const auto& p : doc["points"]) {
        if (!p.is_object() || !p.contains("x") || !p.contains("y"))
            throw DomainError("input_error", "each point needs \"x\" and \"y\"");
        points.push_back({rational_from_json(p["x"]), rational_from_json(p["y"])});
    }
    return points;
}

CommandResult curve_result(const std::string& command, int degree, const std::string& path) {
    const auto points = read_points(path);
    const PlanePoly poly = interpolate_curve(degree, points);
    CommandResult r;
    r.command = command;
    r.parameters["d"] = degree;
    r.parameters["points"] = path;
    bool vanishes = true;
    for (const auto& p : points) vanishes = vanishes && poly.evaluate(p).is_zero();
    json terms = json::array();
    Table t{{"x_exponent", "y_exponent", "coefficient"}, {}};
    for (const auto& m : monomial_order(degree)) {
        Rational c = poly.coefficient(m.first, m.second);
        if (c.is_zero()) continue;
        terms.push_back({{"x", m.first}, {"y", m.second}, {"coefficient", rational_json(c)}});
        t.rows.push_back({std::to_string(m.first), std::to_string(m.second), c.to_string()});
    }
    r.result = {{"degree", degree},
                {"polynomial", poly.to_string()},
                {"terms", std::move(terms)},
                {"vanishes_at_inputs", vanishes}};
    r.table = std::move(t);
    return r;
}

// One row per term of a (t, y2) series, optionally tagged with a basis index.
void append_series_rows(const Series& s, const std::string& first_key, std::optional<int> basis, json& terms,
                        Table& t) {
    for (const auto& [e, c] : s.terms()) {
        json row = json::object();
        if (basis) row["basis"] = *basis;
        row[first_key] = e[0];
        row["y2"] = e[1];
        row["coefficient"] = rational_json(c);
        terms.push_back(std::move(row));
        std::vector<std::string> cells;
        if (basis) cells.push_back(monomial_name(*basis));
        cells.push_back(std::to_string(e[0]));
        cells.push_back(std::to_string(e[1]));
        cells.push_back(c.to_string());
        t.rows.push_back(std::move(cells));
    }
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den")) {
        const auto den = v["den"].get<std::string>();
        return den == "1" ? v["num"].get<std::string>() : v["num"].get<std::string>() + "/" + den;
    }
    return v.dump();
}

std::string render_text(const CommandResult& r) {
    std::ostringstream os;
    if (r.table) {
        const Table& t = *r.table;
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
        for (const auto& row : t.rows)
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c > 0) s += "  ";
                s += std::string(width[c] - cells[c].size(), ' ') + cells[c];
            }
            os << s << "\n";
        };
        line(t.header);
        for (const auto& row : t.rows) line(row);
        return os.str();
    }
    if (!r.result.is_object()) {
        os << scalar_text(r.result) << "\n";
        return os.str();
    }
    std::size_t key_width = 0;
    for (const auto& [k, v] : r.result.items()) key_width = std::max(key_width, k.size());
    for (const auto& [k, v] : r.result.items())
        os << k << ":" << std::string(key_width - k.size() + 1, ' ') << scalar_text(v) << "\n";
    return os.str();
}

std::string render_csv(const CommandResult& r) {
    if (!r.table) throw UsageError("--format csv is only available for tabular commands");
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c];
        os << "\n";
    };
    line(r.table->header);
    for (const auto& row : r.table->rows) line(row);
    return os.str();
}

}  // namespace

json integer_json(const BigInt& v) {
    static const BigInt kSafe("9007199254740991");
    if (abs(v) <= kSafe) return json(v.get_si());
    return json(v.get_str());
}

json rational_json(const Rational& r) { return {{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

json CommandResult::envelope() const {
    return {{"command", command}, {"parameters", parameters}, {"result", result}, {"exact", exact}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact genus-0 Gromov-Witten computations for projective spaces", "gwcount"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    std::string output_path;
    bool envelope = false;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--output", output_path, "Write output to FILE instead of stdout");
    app.add_flag("--envelope", envelope, "Wrap the result with command, parameters and exactness");

    std::function<CommandResult()> action;

    std::int64_t max_degree = 0;
    auto* nd = app.add_subcommand("nd", "N_1..N_D from the quadratic recursion");
    nd->add_option("--max", max_degree, "Largest degree D")->required();
    nd->callback([&] {
        action = [&] {
            CountTable table;
            const int d = as_degree(max_degree);
            kontsevich_nd(d, table);
            return count_table_result("nd", d, table);
        };
    });

    bool cross_check = false;
    auto* nd_wdvv = app.add_subcommand("nd-wdvv", "N_1..N_D by solving the WDVV equation degree by degree");
    nd_wdvv->add_option("--max", max_degree, "Largest degree D")->required();
    nd_wdvv->add_flag("--cross-check", cross_check, "Fail unless the recursion gives the same values");
    nd_wdvv->callback([&] {
        action = [&] {
            const int d = as_degree(max_degree);
            CountTable table = nd_from_wdvv(d);
            if (cross_check) {
                CountTable recursion;
                kontsevich_nd(d, recursion);
                for (int k = 1; k <= d; ++k)
                    if (recursion.at(k) != table.at(k))
                        throw DomainError("cross_check_failed", "WDVV and recursion disagree at d = " + std::to_string(k));
            }
            CommandResult r = count_table_result("nd-wdvv", d, table);
            r.parameters["cross_check"] = cross_check;
            return r;
        };
    });

    std::vector<int> derivative;
    auto* potential = app.add_subcommand("potential", "Quantum terms of the P^2 potential or one third derivative");
    potential->add_option("--max", max_degree, "Truncation degree D")->required();
    potential->add_option("--derivative", derivative, "Indices i j k of Phi_ijk")->expected(3);
    potential->callback([&] {
        action = [&] {
            const int d = as_degree(max_degree);
            CountTable table;
            const P2Potential p = assemble_potential(d, table);
            CommandResult r;
            r.command = "potential";
            r.parameters["max"] = d;
            r.parameters["derivative"] = derivative.empty() ? json(nullptr) : json(derivative);
            r.result = json::object();
            r.result["truncation_degree"] = d;
            json terms = json::array();
            Table t{{"d", "y2_exponent", "coefficient"}, {}};
            if (derivative.empty()) {
                json classical = json::array();
                for (const auto& [e, c] : p.classical.terms())
                    classical.push_back({{"y0", e[0]}, {"y1", e[1]}, {"y2", e[2]}, {"coefficient", rational_json(c)}});
                r.result["classical"] = std::move(classical);
                append_series_rows(p.quantum, "d", std::nullopt, terms, t);
            } else {
                append_series_rows(phi_ijk(p, derivative[0], derivative[1], derivative[2]), "d", std::nullopt, terms, t);
            }
            r.result["terms"] = std::move(terms);
            r.table = std::move(t);
            return r;
        };
    });

    std::int64_t perturb = 0;
    auto* wdvv = app.add_subcommand("wdvv-check", "Verify Phi_222 + Phi_111 Phi_122 - Phi_112^2 = 0 on the exact window");
    wdvv->add_option("--max", max_degree, "Truncation degree D")->required();
    wdvv->add_option("--perturb", perturb, "Add 1 to N_d for this d before checking");
    wdvv->callback([&] {
        action = [&] {
            const int d = as_degree(max_degree);
            CountTable table;
            kontsevich_nd(d, table);
            if (perturb != 0) {
                const int target = as_degree(perturb);
                if (target == 1 || target > d)
                    throw DomainError("invalid_degree", "--perturb must lie in 2..D");
                table.set(target, table.at(target) + 1);
            }
            const ResidualReport rep = check_wdvv(assemble_potential_from(d, table));
            CommandResult r;
            r.command = "wdvv-check";
            r.parameters["max"] = d;
            if (perturb != 0) r.parameters["perturb"] = perturb;
            r.result = {{"t_max", rep.window.max_t},
                        {"y2_max", rep.window.max_y2},
                        {"exponents_checked", rep.exponents_checked},
                        {"nonzero_coefficients", rep.nonzero_count},
                        {"max_abs_numerator", integer_json(rep.max_abs_numerator)},
                        {"vanishes", rep.vanishes()}};
            return r;
        };
    });

    std::int64_t n = 0, a = 0, b = 0;
    bool big = false;
    std::int64_t big_max = 3;
    auto* qprod = app.add_subcommand("qprod", "Quantum product H^a * H^b in P^N");
    qprod->add_option("--n", n, "Dimension N")->required();
    qprod->add_option("--a", a, "Exponent a")->required();
    qprod->add_option("--b", b, "Exponent b")->required();
    qprod->add_flag("--big", big, "Big quantum product (N = 2 only)");
    qprod->add_option("--max", big_max, "Truncation degree for --big")->capture_default_str();
    qprod->callback([&] {
        action = [&] {
            if (big && n != 2) throw UsageError("--big requires --n 2");
            if (n < 1 || n > 1000) throw DomainError("invalid_dimension", "N must lie in 1..1000");
            const int dim = static_cast<int>(n);
            if (a < 0 || a > n || b < 0 || b > n)
                throw DomainError("invalid_basis_index", "exponents must lie in 0..N");
            CommandResult r;
            r.command = "qprod";
            r.parameters = {{"n", n}, {"a", a}, {"b", b}, {"big", big}};
            json terms = json::array();
            if (!big) {
                const QClass prod = small_qproduct(dim, QClass::basis(dim, static_cast<int>(a)),
                                                   QClass::basis(dim, static_cast<int>(b)));
                Table t{{"basis", "q_power", "coefficient"}, {}};
                for (int k = 0; k <= dim; ++k) {
                    const auto& poly = prod[k];
                    for (int e = 0; e <= poly.degree(); ++e) {
                        Rational c = poly.coefficient(e);
                        if (c.is_zero()) continue;
                        terms.push_back({{"basis", k}, {"q_power", e}, {"coefficient", rational_json(c)}});
                        t.rows.push_back({monomial_name(k), std::to_string(e), c.to_string()});
                    }
                }
                r.result = {{"product", prod.to_string()}, {"terms", std::move(terms)}};
                r.table = std::move(t);
                return r;
            }
            const int d = as_degree(big_max);
            r.parameters["max"] = d;
            CountTable table;
            const BigQClass prod = big_qproduct_p2(static_cast<int>(a), static_cast<int>(b), assemble_potential(d, table));
            Table t{{"basis", "t", "y2_exponent", "coefficient"}, {}};
            for (int m = 0; m <= 2; ++m)
                append_series_rows(prod.basis_coefficient(m), "t", m, terms, t);
            r.result = {{"truncation_degree", d}, {"terms", std::move(terms)}};
            r.table = std::move(t);
            return r;
        };
    });

    std::int64_t dim_x = 0, genus = 0, marked = 0, c1 = 0, degree = 0;
    auto* vdim = app.add_subcommand("vdim", "Expected dimension (dim X - 3)(1 - g) + c1 + n");
    vdim->add_option("--dim", dim_x, "Complex dimension of X")->required();
    vdim->add_option("--genus", genus, "Genus g")->required();
    vdim->add_option("--n", marked, "Marked points n")->required();
    vdim->add_option("--c1", c1, "Value of c1(TX) on the curve class")->required();
    vdim->callback([&] {
        action = [&] {
            CommandResult r;
            r.command = "vdim";
            r.parameters = {{"dim", dim_x}, {"genus", genus}, {"n", marked}, {"c1", c1}};
            r.result = virtual_dimension({static_cast<int>(dim_x), static_cast<int>(genus),
                                          static_cast<int>(marked), c1});
            return r;
        };
    });

    auto* genus_cmd = app.add_subcommand("genus", "Genus of a smooth plane curve of degree d");
    genus_cmd->add_option("--d", degree, "Degree d")->required();
    genus_cmd->callback([&] {
        action = [&] {
            CommandResult r;
            r.command = "genus";
            r.parameters["d"] = degree;
            r.result = plane_genus(degree);
            return r;
        };
    });

    auto* points = app.add_subcommand("points", "Point insertions (g - 1) + c1 for curves on a surface");
    points->add_option("--genus", genus, "Genus g")->required();
    points->add_option("--c1", c1, "Value of c1(TS) on the curve class")->required();
    points->callback([&] {
        action = [&] {
            CommandResult r;
            r.command = "points";
            r.parameters = {{"genus", genus}, {"c1", c1}};
            r.result = surface_point_insertions(genus, c1);
            return r;
        };
    });

    auto* familydim = app.add_subcommand("familydim", "Dimensions of degree-d plane curve families");
    familydim->add_option("--d", degree, "Degree d")->required();
    familydim->callback([&] {
        action = [&] {
            const FamilyDimension f = plane_curve_family_dim(degree);
            CommandResult r;
            r.command = "familydim";
            r.parameters["d"] = degree;
            r.result = {{"coefficient_space", f.coefficient_space},
                        {"rational_family", f.rational_family},
                        {"genus", plane_genus(degree)}};
            return r;
        };
    });

    bool oracle = false;
    auto* sublattices = app.add_subcommand("sublattices", "Number of index-d sublattices of Z^2");
    sublattices->add_option("--d", degree, "Index d")->required();
    sublattices->add_flag("--oracle", oracle, "Also count by Hermite normal form enumeration");
    sublattices->callback([&] {
        action = [&] {
            const std::uint64_t d = as_unsigned(degree);
            CommandResult r;
            r.command = "sublattices";
            r.parameters = {{"d", degree}, {"oracle", oracle}};
            const BigInt formula = sigma1(d);
            if (!oracle) {
                r.result = integer_json(formula);
                return r;
            }
            const BigInt enumeration = count_sublattices(d);
            r.result = {{"formula", integer_json(formula)},
                        {"enumeration", integer_json(enumeration)},
                        {"agree", formula == enumeration}};
            return r;
        };
    });

    auto* covers = app.add_subcommand("covers", "Degree-d covers of an elliptic curve through a point");
    covers->add_option("--d", degree, "Degree d")->required();
    covers->callback([&] {
        action = [&] {
            CommandResult r;
            r.command = "covers";
            r.parameters["d"] = degree;
            r.result = integer_json(elliptic_cover_count(as_unsigned(degree)));
            return r;
        };
    });

    std::string points_path;
    auto* conic = app.add_subcommand("conic", "Conic through five points");
    conic->add_option("--points", points_path, "JSON points file")->required();
    conic->callback([&] { action = [&] { return curve_result("conic", 2, points_path); }; });

    auto* curve = app.add_subcommand("curve", "Degree-d curve through C(d+2,2) - 1 points");
    curve->add_option("--d", degree, "Degree d")->required();
    curve->add_option("--points", points_path, "JSON points file")->required();
    curve->callback([&] { action = [&] { return curve_result("curve", as_degree(degree), points_path); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "gwcount: " << e.what() << "\n";
        return 2;
    }

    const Format format = format_name == "text" ? Format::text : format_name == "csv" ? Format::csv : Format::json;

    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "gwcount: cannot open output file " << output_path << "\n";
            return 2;
        }
    }
    std::ostream& sink = output_path.empty() ? out : file;

    try {
        CommandResult r = action();
        if (format == Format::csv) {
            sink << render_csv(r);
        } else if (format == Format::text) {
            sink << render_text(r);
        } else {
            sink << (envelope ? r.envelope() : r.result).dump() << "\n";
        }
        return 0;
    } catch (const UsageError& e) {
        err << "gwcount: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        sink << json{{"error", e.kind()}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace gwcount::cli
