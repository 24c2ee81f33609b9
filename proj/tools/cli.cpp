#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsi/hsi.hpp"

namespace hsi::cli {
namespace {

using nlohmann::json;

struct CommandError : std::runtime_error {
    CommandError(int code, const std::string& message) : std::runtime_error(message), code(code) {}
    int code;
};

struct Options {
    std::string ideal_path;
    std::string ring;
    std::string field_text = "q";
    bool json = false;
    long long index = 0;
    std::string property;
    bool homological = false;
    std::string algorithm;
    std::string multidegree;
    std::string monomial;
    std::string order_file;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CommandError(exit_no_input, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Field parse_field(const std::string& text)
{
    if (text == "q")
        return Field::rationals();
    if (text.rfind("p:", 0) == 0) {
        const std::string digits = text.substr(2);
        if (!digits.empty() && digits.size() <= 10 && digits.find_first_not_of("0123456789") == std::string::npos) {
            const auto p = std::stoull(digits);
            if (Field::is_prime(p) && p < (1ULL << 31))
                return Field::prime(p);
        }
    }
    throw CommandError(exit_usage, "--field must be 'q' or 'p:<prime>' with prime < 2^31, got '" + text + "'");
}

std::uint64_t search_budget()
{
    const char* env = std::getenv("HSI_BUDGET");
    if (env == nullptr || *env == '\0')
        return default_search_budget;
    const std::string s(env);
    if (s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
        throw CommandError(exit_usage, "HSI_BUDGET must be a positive integer");
    const auto b = std::stoull(s);
    if (b == 0)
        throw CommandError(exit_usage, "HSI_BUDGET must be a positive integer");
    return b;
}

LinearQuotientsAlgorithm parse_algorithm(const std::string& text, LinearQuotientsAlgorithm fallback)
{
    if (text.empty())
        return fallback;
    if (text == "direct")
        return LinearQuotientsAlgorithm::direct;
    if (text == "dual")
        return LinearQuotientsAlgorithm::dual_shelling;
    throw CommandError(exit_usage, "--algorithm must be 'direct' or 'dual'");
}

std::string format_multidegree(const Multidegree& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i == 0 ? "" : ",") + std::to_string(a[i]);
    return s;
}

Multidegree parse_multidegree(const std::string& text)
{
    Multidegree a;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw CommandError(exit_usage, "empty entry in --multidegree");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw CommandError(exit_usage, "malformed integer '" + item + "' in --multidegree");
        a.push_back(v);
    }
    return a;
}

/// Everything a command needs from --ideal / --ring.
struct Input {
    VariableNames vars;
    std::optional<MonomialIdeal> ideal;
};

Input load_input(const Options& o, bool needs_ideal, std::ostream& err)
{
    Input in;
    if (!o.ideal_path.empty()) {
        auto doc = parse_ideal_file(read_file(o.ideal_path));
        if (doc.redundant_generators > 0)
            err << "warning: removed " << doc.redundant_generators << " redundant generator(s)\n";
        in.vars = std::move(doc.variables);
        in.ideal = std::move(doc.ideal);
    } else if (!needs_ideal && !o.ring.empty()) {
        auto doc = parse_ideal_file("ring: " + o.ring + "\ngens:\n");
        in.vars = std::move(doc.variables);
    } else {
        throw CommandError(exit_usage, needs_ideal ? "--ideal <file> is required" : "--ideal or --ring is required");
    }
    return in;
}

json monomials_json(const std::vector<Monomial>& list, const VariableNames& vars)
{
    json a = json::array();
    for (const auto& u : list)
        a.push_back(format_monomial(u, vars));
    return a;
}

void print_list(std::ostream& out, const std::vector<Monomial>& list, const VariableNames& vars)
{
    for (const auto& u : list)
        out << format_monomial(u, vars) << '\n';
}

int verdict_code(Verdict v)
{
    switch (v) {
    case Verdict::holds: return exit_true;
    case Verdict::fails: return exit_false;
    case Verdict::budget_exceeded: return exit_budget;
    }
    return exit_internal;
}

struct Outcome {
    json result;
    std::string text;
    int code = exit_true;
};

Outcome execute(const std::string& command, const Options& o, const Input& in, json& input_json)
{
    const Field field = parse_field(o.field_text);
    Outcome r;
    std::ostringstream text;

    const auto ideal = [&]() -> const MonomialIdeal& { return *in.ideal; };

    if (command == "hs" || command == "shifts") {
        input_json["index"] = o.index;
        std::vector<Monomial> list;
        if (command == "hs")
            list = homological_shift_ideal(ideal(), o.index, field).generators();
        else
            list = multigraded_shifts(ideal(), o.index, field);
        r.result = monomials_json(list, in.vars);
        print_list(text, list, in.vars);
    } else if (command == "socle") {
        const auto s = socle(ideal(), field);
        r.result = monomials_json(s.monomials, in.vars);
        print_list(text, s.monomials, in.vars);
    } else if (command == "betti") {
        if (ideal().is_zero())
            throw domain_error("Betti numbers of the zero ideal are all zero");
        const auto table = betti_table(ideal(), field);
        r.result = json::array();
        for (const auto& e : table.entries()) {
            const auto a = to_multidegree(e.shift);
            r.result.push_back({{"index", e.index}, {"multidegree", a}, {"value", e.value}});
            text << e.index << ' ' << format_multidegree(a) << ' ' << e.value << '\n';
        }
    } else if (command == "check") {
        input_json["property"] = o.property;
        input_json["homological"] = o.homological;
        const auto algorithm = parse_algorithm(o.algorithm, LinearQuotientsAlgorithm::direct);
        if (o.property == "linear-quotients")
            input_json["algorithm"] = algorithm == LinearQuotientsAlgorithm::direct ? "direct" : "dual";
        PropertyReport rep;
        if (o.property == "linear-resolution") {
            rep = o.homological ? has_homological_linear_resolution(ideal(), field)
                                : PropertyReport{has_linear_resolution(ideal(), field) ? Verdict::holds : Verdict::fails,
                                                 std::nullopt, std::nullopt};
        } else if (o.property == "linear-quotients") {
            rep = o.homological ? has_homological_linear_quotients(ideal(), field, algorithm, search_budget())
                                : has_linear_quotients(ideal(), algorithm, search_budget());
        } else if (o.property == "polymatroidal") {
            rep = o.homological ? is_homological_polymatroidal(ideal(), field)
                                : PropertyReport{is_polymatroidal(ideal()) ? Verdict::holds : Verdict::fails,
                                                 std::nullopt, std::nullopt};
        } else {
            throw CommandError(exit_usage,
                               "unknown property '" + o.property +
                                   "'; expected linear-resolution, linear-quotients or polymatroidal");
        }
        r.result = {{"verdict", to_string(rep.verdict)},
                    {"failing_index", rep.failing_index ? json(*rep.failing_index) : json(nullptr)},
                    {"order", rep.order ? monomials_json(rep.order->order, in.vars) : json(nullptr)}};
        text << to_string(rep.verdict) << '\n';
        r.code = verdict_code(rep.verdict);
    } else if (command == "admissible-order") {
        const auto algorithm = parse_algorithm(o.algorithm, LinearQuotientsAlgorithm::dual_shelling);
        input_json["algorithm"] = algorithm == LinearQuotientsAlgorithm::direct ? "direct" : "dual";
        try {
            const auto order = admissible_order(ideal(), algorithm, search_budget());
            if (order) {
                r.result = monomials_json(order->order, in.vars);
                print_list(text, order->order, in.vars);
            } else {
                r.result = nullptr;
                text << "none\n";
                r.code = exit_false;
            }
        } catch (const search_budget_exceeded&) {
            r.result = "budget-exceeded";
            text << "budget-exceeded\n";
            r.code = exit_budget;
        }
    } else if (command == "is-admissible-order") {
        input_json["order_file"] = o.order_file;
        const auto order = parse_monomial_list(read_file(o.order_file), in.vars);
        const bool ok = is_admissible_order(ideal(), order);
        r.result = ok;
        text << (ok ? "true" : "false") << '\n';
        r.code = ok ? exit_true : exit_false;
    } else if (command == "support") {
        r.result = json::array();
        for (std::size_t i : support_ideal(ideal())) {
            r.result.push_back(in.vars[i]);
            text << in.vars[i] << '\n';
        }
    } else if (command == "is-fully-supported") {
        const bool ok = is_fully_supported(ideal());
        r.result = ok;
        text << (ok ? "true" : "false") << '\n';
        r.code = ok ? exit_true : exit_false;
    } else if (command == "bounding-multidegree") {
        const auto d = bounding_multidegree(ideal());
        r.result = d;
        text << format_multidegree(d) << '\n';
    } else if (command == "to-monomial") {
        input_json["multidegree"] = o.multidegree;
        const auto u = to_monomial(in.vars.size(), parse_multidegree(o.multidegree));
        r.result = format_monomial(u, in.vars);
        text << format_monomial(u, in.vars) << '\n';
    } else if (command == "to-multidegree") {
        input_json["monomial"] = o.monomial;
        const auto a = to_multidegree(parse_monomial(o.monomial, in.vars));
        r.result = a;
        text << format_multidegree(a) << '\n';
    }
    r.text = text.str();
    return r;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Homological shift ideals of monomial ideals", "hsi"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--ideal", o.ideal_path, "Ideal file ('ring:' and 'gens:' lines)");
    app.add_option("--ring", o.ring, "Variable names, for to-monomial/to-multidegree without --ideal");
    app.add_option("--field", o.field_text, "Coefficient field: q or p:<prime>")->capture_default_str();
    app.add_flag("--json", o.json, "Emit {command, input, result} as JSON");

    auto* hs = app.add_subcommand("hs", "Minimal generators of HS_i(I)");
    hs->add_option("--index", o.index, "Homological index i")->required();
    auto* shifts = app.add_subcommand("shifts", "i-th multigraded shifts of I");
    shifts->add_option("--index", o.index, "Homological index i")->required();
    app.add_subcommand("socle", "Socle monomials of I");
    app.add_subcommand("betti", "All nonzero multigraded Betti numbers (i, multidegree, beta)");
    auto* check = app.add_subcommand("check", "Decide a property of I");
    check->add_option("property", o.property, "linear-resolution | linear-quotients | polymatroidal")->required();
    check->add_flag("--homological", o.homological, "Check the property on every HS_i(I)");
    check->add_option("--algorithm", o.algorithm, "Linear quotients decider: direct | dual");
    auto* adm = app.add_subcommand("admissible-order", "An admissible order of G(I), or 'none'");
    adm->add_option("--algorithm", o.algorithm, "direct | dual (default dual)");
    auto* is_adm = app.add_subcommand("is-admissible-order", "Check whether a listed order is admissible");
    is_adm->add_option("--order-file", o.order_file, "Monomials separated by commas or newlines")->required();
    app.add_subcommand("support", "Variables dividing some generator");
    app.add_subcommand("is-fully-supported", "Whether every variable divides some generator");
    app.add_subcommand("bounding-multidegree", "Componentwise maximum of generator exponents");
    auto* to_mon = app.add_subcommand("to-monomial", "Monomial with a given multidegree");
    to_mon->add_option("--multidegree", o.multidegree, "Comma-separated exponents")->required();
    auto* to_md = app.add_subcommand("to-multidegree", "Multidegree of a monomial");
    to_md->add_option("--monomial", o.monomial, "Monomial expression such as a*b^2")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("hsi");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_true;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const bool needs_ideal = command != "to-monomial" && command != "to-multidegree";
        const Input in = load_input(o, needs_ideal, err);

        json input_json;
        input_json["field"] = o.field_text;
        if (!o.ideal_path.empty()) {
            input_json["ideal"] = o.ideal_path;
            input_json["generators"] = monomials_json(in.ideal->generators(), in.vars);
        }
        input_json["ring"] = in.vars.names();

        Outcome r = execute(command, o, in, input_json);
        if (o.json)
            out << json{{"command", command}, {"input", input_json}, {"result", r.result}}.dump(2) << '\n';
        else
            out << r.text;
        return r.code;
    } catch (const CommandError& e) {
        err << "error: " << e.what() << '\n';
        return e.code;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_data;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    } catch (const hsi::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    } catch (const invariant_error& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace hsi::cli
