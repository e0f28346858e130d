// kron: command-line front-end for the Kronecker polynomial library.
//
// Exit codes: 0 success (or positive verdict), 1 negative verdict from
// `check`, 2 usage or parse error, 3 internal consistency failure.
#include "kron/counting.hpp"
#include "kron/cyclotomic.hpp"
#include "kron/int_poly.hpp"
#include "kron/kronecker.hpp"
#include "kron/newton.hpp"
#include "kron/numtheory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GlobalOptions {
    std::string format = "text";
    bool guard_override = false;

    bool json_output() const { return format == "json"; }
};

// Every command fills `result` (JSON payload) and `text` (human lines).
struct CommandOutput {
    json inputs = json::object();
    json result = json::object();
    std::string text;
};

void emit(const GlobalOptions& opts, const std::string& command, const CommandOutput& out,
          Clock::time_point started) {
    if (opts.json_output()) {
        const double elapsed =
            std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        json envelope;
        envelope["command"] = command;
        envelope["inputs"] = out.inputs;
        envelope["result"] = out.result;
        envelope["elapsed_ms"] = elapsed;
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << out.text;
    }
}

json factors_to_json(const kron::CycloFactorization& fact) {
    json arr = json::array();
    for (const auto& [index, mult] : fact.factors)
        arr.push_back({{"index", index}, {"multiplicity", mult}});
    return arr;
}

json coeffs_to_json(const kron::IntPoly& f) {
    json arr = json::array();
    for (const mpz_class& c : f.coeffs())
        arr.push_back(c.get_str());
    return arr;
}

std::string factorization_text(const kron::CycloFactorization& fact) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty())
            out += " * ";
        out += piece;
    };
    if (fact.shift == 1)
        append("z");
    else if (fact.shift > 1)
        append("z^" + std::to_string(fact.shift));
    for (const auto& [index, mult] : fact.factors) {
        std::string piece = "g_" + std::to_string(index);
        if (mult > 1)
            piece += "^" + std::to_string(mult);
        append(piece);
    }
    if (out.empty())
        out = "1";
    return out;
}

// Parses and validates a monic polynomial argument; throws CLI::ValidationError
// on anything the user can fix.
kron::IntPoly parse_monic_arg(const std::string& text) {
    kron::IntPoly f;
    try {
        f = kron::parse_poly(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--poly", e.what());
    }
    if (!f.is_monic())
        throw CLI::ValidationError("--poly", "polynomial must be monic (leading coefficient 1)");
    return f;
}

mpz_class candidate_box_size(unsigned degree) {
    mpz_class total = 1, binom;
    for (unsigned j = 0; j < degree; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), degree, j);
        total *= 2 * binom + 1;
    }
    return total;
}

int run_count(const GlobalOptions& opts, std::uint64_t n, const std::string& method) {
    const auto started = Clock::now();
    CommandOutput out;
    out.inputs = {{"n", n}, {"method", method}};

    mpz_class value;
    if (method == "partition") {
        value = kron::count_kronecker_partition(n);
    } else if (method == "series") {
        value = kron::count_kronecker_series(std::max<std::uint64_t>(n, 1)).coeffs[n];
    } else if (method == "enumerate") {
        if (n > 12 && !opts.guard_override)
            throw CLI::ValidationError("--method", "enumerate requires n <= 12 (or --guard-override)");
        // degree 0 has exactly one Kronecker polynomial, the empty product
        if (n == 0)
            value = 1;
        else
            value = kron::enumerate_canonical(static_cast<unsigned>(n), opts.guard_override).size();
    } else {
        value = kron::count_kronecker_checked(n);
    }

    out.result = {{"k", value.get_str()}};
    out.text = "k(" + std::to_string(n) + ") = " + value.get_str() + "\n";
    emit(opts, "count", out, started);
    return kExitOk;
}

int run_enumerate(const GlobalOptions& opts, std::uint64_t n) {
    if (n == 0 || (n > 12 && !opts.guard_override))
        throw CLI::ValidationError("--n", "enumerate requires 1 <= n <= 12 (or --guard-override)");
    const auto started = Clock::now();
    CommandOutput out;
    out.inputs = {{"n", n}};

    const auto canonical = kron::enumerate_canonical(static_cast<unsigned>(n), opts.guard_override);
    std::vector<std::pair<kron::IntPoly, const kron::CycloFactorization*>> items;
    items.reserve(canonical.size());
    for (const auto& fact : canonical)
        items.emplace_back(kron::expand(fact), &fact);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const mpz_class candidates = candidate_box_size(static_cast<unsigned>(n));
    json polys = json::array();
    for (const auto& [poly, fact] : items) {
        polys.push_back({{"coeffs", coeffs_to_json(poly)},
                         {"shift", fact->shift},
                         {"factors", factors_to_json(*fact)}});
    }
    out.result = {{"degree", n},
                  {"candidates", candidates.get_str()},
                  {"count", items.size()},
                  {"polynomials", polys}};

    out.text = "degree " + std::to_string(n) + ": " + candidates.get_str() + " candidates, " +
               std::to_string(items.size()) + " Kronecker polynomials\n";
    for (const auto& [poly, fact] : items)
        out.text += "  " + kron::pretty(poly) + "  =  " + factorization_text(*fact) + "\n";
    emit(opts, "enumerate", out, started);
    return kExitOk;
}

int run_check(const GlobalOptions& opts, const std::string& poly_text) {
    const kron::IntPoly f = parse_monic_arg(poly_text);
    if (f.degree() < 1)
        throw CLI::ValidationError("--poly", "polynomial must have degree >= 1");
    const auto started = Clock::now();
    CommandOutput out;
    out.inputs = {{"poly", poly_text}};

    const auto verdict = kron::is_kronecker(f);
    if (verdict) {
        out.result = {{"kronecker", true},
                      {"shift", verdict->shift},
                      {"factors", factors_to_json(*verdict)}};
        out.text = "Kronecker: " + kron::pretty(f) + "  =  " + factorization_text(*verdict) + "\n";
    } else {
        out.result = {{"kronecker", false}};
        out.text = "not Kronecker: " + kron::pretty(f) + "\n";
    }
    emit(opts, "check", out, started);
    return verdict ? kExitOk : kExitNegative;
}

int run_cyclotomic(const GlobalOptions& opts, std::uint64_t n) {
    if (n == 0)
        throw CLI::ValidationError("--n", "index must be positive");
    const auto started = Clock::now();
    CommandOutput out;
    out.inputs = {{"n", n}};

    const kron::IntPoly& g = kron::cyclotomic(n);
    out.result = {{"index", n},
                  {"degree", g.degree()},
                  {"coeffs", coeffs_to_json(g)},
                  {"pretty", kron::pretty(g)}};
    out.text = "g_" + std::to_string(n) + " = " + kron::pretty(g) + "\n";
    emit(opts, "cyclotomic", out, started);
    return kExitOk;
}

int run_inv_totient(const GlobalOptions& opts, std::uint64_t j) {
    if (j == 0)
        throw CLI::ValidationError("--j", "j must be positive");
    const auto started = Clock::now();
    CommandOutput out;
    out.inputs = {{"j", j}};

    const kron::TotientFiber& fiber = kron::inverse_phi(j);
    out.result = {{"j", j}, {"count", fiber.members.size()}, {"members", fiber.members}};
    if (fiber.members.empty()) {
        out.text = "phi^-1(" + std::to_string(j) + ") is empty\n";
    } else {
        out.text.clear();
        for (std::size_t i = 0; i < fiber.members.size(); ++i)
            out.text += (i ? " " : "") + std::to_string(fiber.members[i]);
        out.text += "\n";
    }
    emit(opts, "inv-totient", out, started);
    return kExitOk;
}

int run_power_map(const GlobalOptions& opts, const std::string& poly_text, std::uint64_t k) {
    const kron::IntPoly f = parse_monic_arg(poly_text);
    if (f.degree() < 1)
        throw CLI::ValidationError("--poly", "polynomial must have degree >= 1");
    if (k == 0)
        throw CLI::ValidationError("--k", "k must be positive");
    const auto started = Clock::now();
    CommandOutput out;
    out.inputs = {{"poly", poly_text}, {"k", k}};

    const kron::IntPoly fk = kron::power_map(f, k);
    out.result = {{"coeffs", coeffs_to_json(fk)}, {"pretty", kron::pretty(fk)}};
    out.text = kron::pretty(fk) + "\n";
    emit(opts, "power-map", out, started);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker polynomials: exact decision, enumeration, and counting"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--guard-override", opts.guard_override,
                 "Lift the default size guards on expensive enumerations");

    std::uint64_t count_n = 0;
    std::string count_method = "all";
    auto* count_cmd = app.add_subcommand("count", "Count Kronecker polynomials of degree n");
    count_cmd->add_option("--n", count_n, "Degree")->required();
    count_cmd->add_option("--method", count_method, "Counting engine")
        ->check(CLI::IsMember({"partition", "series", "enumerate", "all"}))
        ->capture_default_str();

    std::uint64_t enum_n = 0;
    auto* enum_cmd = app.add_subcommand("enumerate", "List all Kronecker polynomials of degree n");
    enum_cmd->add_option("--n", enum_n, "Degree")->required();

    std::string check_poly;
    auto* check_cmd = app.add_subcommand("check", "Decide whether a monic polynomial is Kronecker");
    check_cmd->add_option("--poly", check_poly, "Ascending comma-separated coefficients")->required();

    std::uint64_t cyclo_n = 0;
    auto* cyclo_cmd = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
    cyclo_cmd->add_option("--n", cyclo_n, "Index")->required();

    std::uint64_t inv_j = 0;
    auto* inv_cmd = app.add_subcommand("inv-totient", "Solve phi(x) = j");
    inv_cmd->add_option("--j", inv_j, "Totient value")->required();

    std::string pm_poly;
    std::uint64_t pm_k = 0;
    auto* pm_cmd = app.add_subcommand("power-map", "Map roots to their k-th powers");
    pm_cmd->add_option("--poly", pm_poly, "Ascending comma-separated coefficients")->required();
    pm_cmd->add_option("--k", pm_k, "Power")->required();

    try {
        app.parse(argc, argv);

        if (count_cmd->parsed())
            return run_count(opts, count_n, count_method);
        if (enum_cmd->parsed())
            return run_enumerate(opts, enum_n);
        if (check_cmd->parsed())
            return run_check(opts, check_poly);
        if (cyclo_cmd->parsed())
            return run_cyclotomic(opts, cyclo_n);
        if (inv_cmd->parsed())
            return run_inv_totient(opts, inv_j);
        if (pm_cmd->parsed())
            return run_power_map(opts, pm_poly, pm_k);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the diagnostic
        return kExitUsage;
    } catch (const kron::MismatchError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
