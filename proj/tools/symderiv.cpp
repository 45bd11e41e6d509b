// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage error.

#include "symderiv/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace symderiv;

namespace {

// "2..8" or "5"
std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int k = std::stoi(text);
            return {k, k};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "', expected N or A..B");
    }
}

AlgebraHandle pick_algebra(int sympl, int plain, bool lie)
{
    if ((sympl > 0) == (plain > 0)) throw UsageError("give exactly one of --sympl or --plain");
    if (plain > 0) {
        if (lie) throw UsageError("--lie applies to --sympl only");
        return AlgebraHandle::der(plain);
    }
    return lie ? AlgebraHandle::l(sympl) : AlgebraHandle::a(sympl);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with symplectic derivation Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir = Cache::default_dir().string();
    std::string tier = "fast";
    std::string json_out;
    unsigned threads = 1;
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir, "cache directory (env SYMDERIV_CACHE)");
    app.add_flag("--no-cache", no_cache, "disable the on-disk cache");
    app.add_option("--tier", tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    app.add_option("--json-out", json_out, "also write the report to this file");
    app.add_option("--threads", threads, "worker threads for bracket generation")->check(CLI::Range(1u, 256u));

    DimsParams dims;
    int dims_genus = 0, dims_plain = 0;
    auto* dims_cmd = app.add_subcommand("dims", "dimension table with necklace and Witt cross-checks");
    dims_cmd->add_option("--genus", dims_genus, "symplectic genus g");
    dims_cmd->add_option("--plain", dims_plain, "plain dimension n");
    dims_cmd->add_option("--min-degree", dims.min_degree);
    dims_cmd->add_option("--max-degree", dims.max_degree);

    int ab_sympl = 0, ab_plain = 0, ab_weight = 2;
    bool ab_lie = false, ab_heavy = false;
    auto* ab_cmd = app.add_subcommand("abelianize", "weight-graded abelianization H_1");
    ab_cmd->add_option("--sympl", ab_sympl, "genus g of a_g (or l_g with --lie)");
    ab_cmd->add_option("--plain", ab_plain, "n for Der(T(H_n))");
    ab_cmd->add_option("--weight", ab_weight, "weight m")->required();
    ab_cmd->add_flag("--lie", ab_lie, "use the Lie subalgebra l_g");
    ab_cmd->add_flag("--heavy", ab_heavy, "allow weight >= 3 on a_g (very expensive)");

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full verification battery");

    std::string poly_k = "2..8";
    bool poly_sym = false;
    auto* poly_cmd = app.add_subcommand("polygon", "polygon contractions of the alternating lift");
    poly_cmd->add_option("--k", poly_k, "k or a range A..B");
    poly_cmd->add_flag("--symmetric", poly_sym, "use symmetric two-slot factors");

    int conj_n = 3;
    auto* conj_cmd = app.add_subcommand("conjecture", "weight 2 abelianization of Der(T(H_n))");
    conj_cmd->add_option("--n", conj_n)->required();

    int dec_genus = 4;
    auto* dec_cmd = app.add_subcommand("decompose", "Weyl dimension sums for H^(x)4 and its invariant part");
    dec_cmd->add_option("--genus", dec_genus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Cache cache = no_cache ? Cache() : Cache(cache_dir);
    CommandContext ctx{&cache, threads, tier == "full" ? Tier::Full : Tier::Fast};

    try {
        std::optional<Report> report;
        if (*dims_cmd) {
            if (dims_genus) dims.genus = dims_genus;
            if (dims_plain) dims.plain = dims_plain;
            report = cmd_dims(dims, ctx);
        } else if (*ab_cmd) {
            report = cmd_abelianize(pick_algebra(ab_sympl, ab_plain, ab_lie), ab_weight, ab_heavy, ctx);
        } else if (*verify_cmd) {
            report = cmd_verify_paper(ctx);
        } else if (*poly_cmd) {
            auto [lo, hi] = parse_range(poly_k);
            report = cmd_polygon(lo, hi, poly_sym ? FactorKind::Symmetric : FactorKind::Wedge, ctx);
        } else if (*conj_cmd) {
            report = cmd_conjecture(conj_n, ctx);
        } else if (*dec_cmd) {
            report = cmd_decompose(dec_genus, ctx);
        }
        const std::string text = report->dump();
        std::cout << text << '\n';
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            if (!out) throw std::runtime_error("cannot write " + json_out);
            out << text << '\n';
        }
        for (const auto& c : report->checks())
            if (c.status == CheckStatus::Fail)
                std::cerr << "FAIL " << c.name << ": computed " << c.computed.dump() << ", expected "
                          << c.expected.dump() << '\n';
        return exit_code(*report);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
