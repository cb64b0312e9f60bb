// chvar: exact mixed Hodge polynomials of free-abelian character varieties
// (GL, SL, Sp) and E-polynomials of free-group character varieties
// (GL, SL, PGL), with built-in cross-validation suites.

#include <cctype>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chvar/abelian.hpp"
#include "chvar/free_group.hpp"
#include "chvar/json_io.hpp"
#include "chvar/latex.hpp"
#include "chvar/verify.hpp"

namespace {

using namespace chvar;

// exit codes: 0 success, 1 failed check identity, 2 usage,
// 3 internal consistency, 4 capacity
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitCapacity = 4;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Polynomial& p, const std::string& format) {
    if (format == "json")
        std::cout << polynomial_to_json(p).dump() << "\n";
    else if (format == "latex")
        std::cout << to_latex(p) << "\n";
    else
        std::cout << p.str() << "\n";
}

Family parse_family(std::string name) {
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == "gl") return Family::GL;
    if (name == "sl") return Family::SL;
    if (name == "pgl") return Family::PGL;
    if (name == "sp") return Family::Sp;
    throw usage_error("unknown group family '" + name + "'");
}

int run_mhp(const std::string& group, int n, int r, const std::string& vars,
            const std::string& format) {
    Family family = parse_family(group);
    MhpResult result = [&] {
        switch (family) {
            case Family::GL: return mhp_gl(n, r);
            case Family::SL: return mhp_sl(n, r);
            case Family::Sp: return mhp_sp(n, r);
            default:
                throw usage_error("mhp supports --group gl, sl, sp (not " + group + ")");
        }
    }();
    emit(vars == "tuv" ? result.in_tuv : result.in_q, format);
    return kExitOk;
}

int run_efree(const std::string& group, int n, int r, bool irr, bool total,
              const std::optional<std::string>& stratum, const std::string& format) {
    Family family = parse_family(group);
    if (family == Family::Sp)
        throw usage_error("efree supports --group gl, sl, pgl (not sp)");
    const int kinds = int(irr) + int(total) + int(stratum.has_value());
    if (kinds != 1)
        throw usage_error("choose exactly one of --irr, --total, --stratum");

    std::optional<Partition> part;
    if (stratum) {
        part = Partition::parse(*stratum);
        if (part->total() != n)
            throw usage_error("stratum partition '" + *stratum + "' has total " +
                              std::to_string(part->total()) + ", expected n = " +
                              std::to_string(n));
    } else if (irr) {
        part = Partition({{n, 1}}); // the irreducible locus is the [n] stratum
    }

    EPolyReport report = [&] {
        if (family == Family::GL) {
            if (total) return e_total_gl(n, r);
            if (irr) return e_irr_gl(n, r);
            return e_stratum_gl(n, r, *part);
        }
        if (total) return e_sl_pgl(n, r, {}, family);
        return e_sl_pgl(n, r, part, family);
    }();
    emit(report.value, format);
    return kExitOk;
}

int run_check(const std::string& suite, int max_n, int max_r, int cases, unsigned seed,
              bool as_json) {
    std::vector<CheckItem> items;
    auto append = [&items](std::vector<CheckItem> more) {
        for (auto& item : more) items.push_back(std::move(item));
    };
    const int c_cap = std::min(max_n, 4);
    if (suite == "all" || suite == "weyl") append(check_weyl(max_n, c_cap, max_r));
    if (suite == "all" || suite == "abel") append(check_abel(max_n, c_cap, max_r));
    if (suite == "all" || suite == "pleth") append(check_pleth(cases, 6, seed));
    if (suite == "all" || suite == "free") append(check_free(max_n, max_r));

    int failed = 0;
    const CheckItem* first_failure = nullptr;
    for (const auto& item : items) {
        if (!item.pass) {
            ++failed;
            if (!first_failure) first_failure = &item;
        }
    }
    if (as_json) {
        Json checks = Json::array();
        for (const auto& item : items) {
            Json entry{{"name", item.name}, {"pass", item.pass}};
            if (!item.pass && !item.detail.empty())
                entry["counterexample"] = Json::parse(item.detail);
            checks.push_back(std::move(entry));
        }
        Json out{{"suite", suite},
                 {"passed", static_cast<int>(items.size()) - failed},
                 {"failed", failed},
                 {"checks", std::move(checks)}};
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& item : items)
            std::cout << (item.pass ? "ok   " : "FAIL ") << item.name << "\n";
        std::cout << (failed == 0 ? "all " : "") << items.size() - failed << " of "
                  << items.size() << " checks passed\n";
    }
    if (failed > 0) {
        Json diag{{"check", first_failure->name}};
        if (!first_failure->detail.empty())
            diag["counterexample"] = Json::parse(first_failure->detail);
        std::cerr << diag.dump() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "chvar: exact mixed Hodge polynomials of free-abelian character varieties\n"
        "and E-polynomials of free-group character varieties.\n"
        "Exit codes: 0 ok, 1 failed check, 2 usage, 3 internal consistency, 4 capacity."};
    app.require_subcommand(1);

    std::string group, vars = "q", format = "text", suite = "all";
    int n = 1, r = 1;
    int max_n = 4, max_r = 3, cases = 25;
    unsigned seed = 20250808;
    bool irr = false, total = false, as_json = false;
    std::optional<std::string> stratum;

    auto* mhp = app.add_subcommand(
        "mhp",
        "Mixed Hodge polynomial of the rank-r free-abelian character variety of\n"
        "GL(n), SL(n) or Sp(n). Sp uses the rank convention: Sp(n) has a maximal\n"
        "torus of dimension n and Weyl group of order 2^n n! (i.e. Sp(2n,C) in the\n"
        "matrix-size convention). For these families the variety is irreducible, so\n"
        "the result covers the whole character variety; r = 0 yields the one-point\n"
        "variety, 1.");
    mhp->add_option("--group", group, "gl | sl | sp")->required();
    mhp->add_option("--n", n, "group rank n")->required()->check(CLI::PositiveNumber);
    mhp->add_option("--r", r, "free-abelian rank r >= 0")->required()
        ->check(CLI::NonNegativeNumber);
    mhp->add_option("--vars", vars, "presentation: q (= tuv collapsed) or tuv")
        ->check(CLI::IsMember({"q", "tuv"}));
    mhp->add_option("--format", format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    auto* efree = app.add_subcommand(
        "efree",
        "E-polynomial (in x = uv) of the rank-r free-group character variety of\n"
        "GL(n), SL(n) or PGL(n): the irreducible locus (--irr), the full variety\n"
        "(--total), or one polystable stratum (--stratum \"1^2 2^1\", a partition\n"
        "of n in j^k tokens). SL and PGL values coincide.");
    efree->add_option("--group", group, "gl | sl | pgl")->required();
    efree->add_option("--n", n, "group rank n")->required()->check(CLI::PositiveNumber);
    efree->add_option("--r", r, "free-group rank r >= 1")->required()
        ->check(CLI::PositiveNumber);
    efree->add_flag("--irr", irr, "irreducible locus");
    efree->add_flag("--total", total, "full character variety");
    efree->add_option("--stratum", stratum, "polystable stratum partition");
    efree->add_option("--format", format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    auto* check = app.add_subcommand(
        "check",
        "Run the self-validation suites: brute-force Weyl averages against the\n"
        "closed forms, class equations against enumeration, plethystic round\n"
        "trips, strata sums and torus divisibility.");
    check->add_option("--suite", suite, "all | weyl | abel | pleth | free")
        ->check(CLI::IsMember({"all", "weyl", "abel", "pleth", "free"}));
    check->add_option("--max-n", max_n, "size cap (default 4)")->check(CLI::PositiveNumber);
    check->add_option("--max-r", max_r, "rank cap (default 3)")->check(CLI::PositiveNumber);
    check->add_option("--cases", cases, "randomized case count (default 25)")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "random seed (fixed default for reproducibility)");
    check->add_flag("--json", as_json, "machine-readable summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (mhp->parsed()) return run_mhp(group, n, r, vars, format);
        if (efree->parsed()) return run_efree(group, n, r, irr, total, stratum, format);
        if (check->parsed()) return run_check(suite, max_n, max_r, cases, seed, as_json);
        return kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConsistency;
    }
}
