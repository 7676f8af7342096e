#include "weylcone/cli.hpp"

#include "weylcone/format.hpp"
#include "weylcone/oracle.hpp"
#include "weylcone/presets.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>

namespace weylcone {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

long long parse_integer(const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

std::vector<int> parse_csv_ints(const std::string& s, const std::string& what) {
    if (s.empty()) throw std::invalid_argument(what + " list is empty");
    std::vector<int> values;
    for (const auto& part : split(s, ','))
        values.push_back(static_cast<int>(parse_integer(part)));
    return values;
}

RootSystem build_rs(const std::vector<std::string>& types, const std::vector<int>& ranks) {
    if (types.empty()) throw std::invalid_argument("at least one --type/--rank pair is required");
    if (types.size() != ranks.size())
        throw std::invalid_argument("--type and --rank must be given the same number of times");
    std::vector<SimpleFactor> factors;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i].size() != 1)
            throw std::invalid_argument("type must be a single letter A-G, got '" + types[i] + "'");
        factors.push_back({family_from_char(types[i][0]), ranks[i]});
    }
    return build_root_system(factors);
}

Weight parse_weight(const std::string& s, int rank) {
    Weight w;
    for (const auto& part : split(s, ','))
        w.coeffs.push_back(parse_integer(part));
    if (static_cast<int>(w.coeffs.size()) != rank)
        throw std::invalid_argument("weight '" + s + "' has " + std::to_string(w.coeffs.size()) +
                                    " entries, expected " + std::to_string(rank));
    return w;
}

// "3,0;0,3" -> one weight per semicolon group.
std::vector<Weight> parse_weights(const std::string& s, int rank) {
    if (s.empty()) throw std::invalid_argument("weight list is empty");
    std::vector<Weight> weights;
    for (const auto& part : split(s, ';'))
        weights.push_back(parse_weight(part, rank));
    return weights;
}

// A single value broadcasts to every variable.
std::vector<int> per_variable(const std::string& s, int k, int fallback, const std::string& what) {
    if (s.empty()) return std::vector<int>(k, fallback);
    std::vector<int> values = parse_csv_ints(s, what);
    if (static_cast<int>(values.size()) == 1) return std::vector<int>(k, values[0]);
    if (static_cast<int>(values.size()) != k)
        throw std::invalid_argument(what + " needs one entry or one per variable (" +
                                    std::to_string(k) + ")");
    return values;
}

struct ConeFlags {
    std::vector<std::string> types;
    std::vector<int> ranks;
    std::string weights;
};

void add_cone_flags(CLI::App* cmd, ConeFlags& flags) {
    cmd->add_option("--type", flags.types, "Factor family letter A-G (repeatable)")->required();
    cmd->add_option("--rank", flags.ranks, "Factor rank, one per --type")->required();
    cmd->add_option("--weights", flags.weights,
                    "Generators: weights separated by ';', coefficients by ',' (e.g. \"3,0;0,3\")")
        ->required();
}

ConeSpec make_cone(const ConeFlags& flags) {
    RootSystem rs = build_rs(flags.types, flags.ranks);
    const int rank = rs.rank();
    return ConeSpec(std::move(rs), parse_weights(flags.weights, rank));
}

int run_check(const ConeSpec& cone, const std::string& bounds_str, OutputFormat fmt,
              std::ostream& out) {
    const auto bounds = per_variable(bounds_str, cone.num_generators(), 5, "bounds");
    const VerificationReport report = verify_equivalence(hilbert_series(cone), cone, bounds);
    out << render_report(report, fmt) << "\n";
    return report.passed() ? 0 : 1;
}

int run_specialize(const ConeSpec& cone, const std::vector<int>& grading, OutputFormat fmt,
                   std::ostream& out) {
    const UniRational u = reduce_univariate(specialize(hilbert_series(cone), grading));
    out << render_uni_rational(u, fmt) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dimension series of lattice cones of dominant weights"};
    app.require_subcommand(1);

    std::string format_name = "text";
    const auto format_check = CLI::IsMember({"text", "latex", "json"});

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "Dimension of one irreducible representation");
    std::vector<std::string> dim_types;
    std::vector<int> dim_ranks;
    std::string dim_weight;
    dim_cmd->add_option("--type", dim_types, "Factor family letter A-G (repeatable)")->required();
    dim_cmd->add_option("--rank", dim_ranks, "Factor rank, one per --type")->required();
    dim_cmd->add_option("--weight", dim_weight, "Highest weight, e.g. \"2,0,0\"")->required();
    dim_cmd->add_option("--format", format_name, "text|latex|json")->check(format_check);

    // series
    auto* series_cmd = app.add_subcommand("series", "Closed-form multigraded dimension series");
    ConeFlags series_flags;
    add_cone_flags(series_cmd, series_flags);
    series_cmd->add_option("--format", format_name, "text|latex|json")->check(format_check);

    // specialize
    auto* spec_cmd = app.add_subcommand("specialize", "One-variable series for a grading");
    ConeFlags spec_flags;
    std::string grading_str;
    add_cone_flags(spec_cmd, spec_flags);
    spec_cmd->add_option("--grading", grading_str, "q_j -> q^{w_j} exponents, e.g. \"1,2\" (default all 1)");
    spec_cmd->add_option("--format", format_name, "text|latex|json")->check(format_check);

    // check
    auto* check_cmd = app.add_subcommand("check", "Verify the closed form against brute force");
    ConeFlags check_flags;
    std::string bounds_str;
    add_cone_flags(check_cmd, check_flags);
    check_cmd->add_option("--bounds", bounds_str, "Expansion box, e.g. \"5,5\" (default 5 each)");
    check_cmd->add_option("--format", format_name, "text|latex|json")->check(format_check);

    // preset
    auto* preset_cmd = app.add_subcommand("preset", "Named cone/grading bundles");
    std::string preset_name;
    std::string action = "specialize";
    int preset_n = 0, preset_k = 0;
    std::vector<std::string> preset_types;
    std::vector<int> preset_ranks;
    std::string preset_bounds;
    preset_cmd->add_option("name", preset_name, "sym-det | antisym-det | fundamental")
        ->required()
        ->check(CLI::IsMember({"sym-det", "antisym-det", "fundamental"}));
    preset_cmd->add_option("--n", preset_n, "Matrix size parameter (determinantal presets)");
    preset_cmd->add_option("--k", preset_k, "Rank bound parameter (determinantal presets)");
    preset_cmd->add_option("--type", preset_types, "Factor family (fundamental preset)");
    preset_cmd->add_option("--rank", preset_ranks, "Factor rank (fundamental preset)");
    preset_cmd->add_option("--action", action, "series|specialize|check (default specialize)")
        ->check(CLI::IsMember({"series", "specialize", "check"}));
    preset_cmd->add_option("--bounds", preset_bounds, "Expansion box for --action check");
    preset_cmd->add_option("--format", format_name, "text|latex|json")->check(format_check);

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("weylcone");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(full.size());
    for (auto& s : full) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        const OutputFormat fmt = format_from_string(format_name);

        if (dim_cmd->parsed()) {
            RootSystem rs = build_rs(dim_types, dim_ranks);
            const Weight lambda = parse_weight(dim_weight, rs.rank());
            out << render_dimension(weyl_dim(rs, lambda), fmt) << "\n";
            return 0;
        }
        if (series_cmd->parsed()) {
            out << render_euler_rational(hilbert_series(make_cone(series_flags)), fmt) << "\n";
            return 0;
        }
        if (spec_cmd->parsed()) {
            const ConeSpec cone = make_cone(spec_flags);
            const auto grading = per_variable(grading_str, cone.num_generators(), 1, "grading");
            return run_specialize(cone, grading, fmt, out);
        }
        if (check_cmd->parsed()) {
            const ConeSpec cone = make_cone(check_flags);
            return run_check(cone, bounds_str, fmt, out);
        }
        if (preset_cmd->parsed()) {
            auto resolve = [&]() -> ProblemSpec {
                if (preset_name == "fundamental")
                    return fundamental_cone(build_rs(preset_types, preset_ranks));
                if (preset_n <= 0 || preset_k <= 0)
                    throw std::invalid_argument("preset '" + preset_name +
                                                "' requires positive --n and --k");
                return preset_name == "sym-det" ? symmetric_determinantal(preset_n, preset_k)
                                                : antisymmetric_determinantal(preset_n, preset_k);
            };
            const ProblemSpec problem = resolve();
            if (action == "series") {
                out << render_euler_rational(hilbert_series(problem.cone), fmt) << "\n";
                return 0;
            }
            if (action == "check") return run_check(problem.cone, preset_bounds, fmt, out);
            return run_specialize(problem.cone, problem.grading, fmt, out);
        }
        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace weylcone
