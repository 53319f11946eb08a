#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meshpat/containment.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/export.hpp"
#include "meshpat/poset.hpp"
#include "meshpat/statistics.hpp"
#include "meshpat/sums.hpp"
#include "meshpat/text.hpp"
#include "meshpat/word_poset.hpp"

namespace {

using namespace meshpat;
using nlohmann::ordered_json;

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::parse_error:
        case Errc::not_a_permutation:
        case Errc::box_out_of_grid:
        case Errc::box_not_shaded:
            return 2;
        case Errc::not_comparable:
        case Errc::not_contained:
            return 3;
        case Errc::budget_exceeded:
        case Errc::too_large:
            return 4;
        default:
            return 6;
    }
}

std::string format_occurrence(const Occurrence& occ) {
    std::string out = "(";
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(occ[i]);
    }
    return out + ")";
}

struct Options {
    std::string pattern_a;
    std::string pattern_b;
    bool witness = false;
    bool stats = false;
    bool oracle = false;
    bool skew = false;
    bool json = false;
    bool plain = false;
    std::string export_format;
    int length = 1;
    long long samples = 10000;
    std::uint64_t seed = 0;
    double q = 0.5;
    Config cfg;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--json", opt.json, "emit JSON instead of plain text");
    cmd->add_flag("--plain", opt.plain, "force plain uncolored output");
}

void add_config(CLI::App* cmd, Options& opt) {
    cmd->add_option("--budget", opt.cfg.budget, "candidate emission cap");
    cmd->add_option("--max-len", opt.cfg.max_len, "maximum top pattern length");
    cmd->add_option("--shelling-cap", opt.cfg.shelling_cap, "facet count cap for shelling search");
    cmd->add_flag("--paper-shelling", opt.cfg.paper_shelling,
                  "use the literal full-dimension attachment convention");
}

int run_contains(const Options& opt) {
    MeshPattern m = parse_pattern(opt.pattern_a);
    MeshPattern p = parse_pattern(opt.pattern_b);
    std::vector<Occurrence> occs = mesh_occurrences(m, p);
    const bool ok = !occs.empty();
    if (opt.json) {
        ordered_json j;
        j["contains"] = ok;
        if (opt.witness) {
            auto w = ordered_json::array();
            for (const Occurrence& occ : occs) w.push_back(occ);
            j["witnesses"] = std::move(w);
        }
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s\n", ok ? "true" : "false");
        if (opt.witness)
            for (const Occurrence& occ : occs) std::printf("%s\n", format_occurrence(occ).c_str());
    }
    return ok ? 0 : 1;
}

int run_interval(const Options& opt) {
    MeshPattern m = parse_pattern(opt.pattern_a);
    MeshPattern p = parse_pattern(opt.pattern_b);
    Interval iv = interval(m, p, opt.cfg);
    if (opt.export_format == "dot") {
        std::fputs(interval_dot(iv).c_str(), stdout);
        return 0;
    }
    if (opt.export_format == "json" || opt.json) {
        std::fputs(interval_json(iv).c_str(), stdout);
        return 0;
    }
    std::printf("elements: %d\n", iv.size());
    std::printf("covers: %zu\n", iv.covers.size());
    std::printf("mobius: %lld\n", mobius(iv));
    if (opt.stats) {
        ChainStats st = chain_stats(iv);
        std::printf("pure: %s\n", st.is_pure ? "true" : "false");
        std::printf("dimension: %d\n", st.dimension);
        if (iv.bottom == classical({1})) {
            const int bound = interval_dimension_bottom(iv.top);
            std::printf("rank_bound: %d\n", bound);
            if (bound != st.dimension)
                std::printf("note: rank bound and measured dimension differ\n");
        }
        std::string hist;
        for (const auto& [len, cnt] : st.lengths) {
            if (!hist.empty()) hist += ' ';
            hist += std::to_string(len) + ":" + std::to_string(cnt);
        }
        std::printf("chains: %s\n", hist.c_str());
        std::printf("components: %zu\n", components(iv).size());
        std::printf("strongly_disconnected: %s\n",
                    is_strongly_disconnected(iv) ? "true" : "false");
        std::string shellable = "unknown";
        try {
            OrderComplex c = order_complex(iv);
            shellable = find_shelling(c, opt.cfg) ? "true" : "false";
        } catch (const Error&) {
        }
        std::printf("shellable: %s\n", shellable.c_str());
    }
    return 0;
}

int run_mobius(const Options& opt) {
    MeshPattern m = parse_pattern(opt.pattern_a);
    MeshPattern p = parse_pattern(opt.pattern_b);
    long long mu = mobius(m, p, opt.cfg);
    std::optional<long long> chain_value;
    if (opt.oracle) chain_value = mobius_via_chains(m, p, opt.cfg);
    if (opt.json) {
        ordered_json j;
        j["mobius"] = mu;
        if (chain_value) j["oracle"] = *chain_value;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%lld\n", mu);
        if (chain_value) std::printf("oracle %lld\n", *chain_value);
    }
    if (chain_value && *chain_value != mu) {
        std::fprintf(stderr, "error: recursion and chain count disagree\n");
        return 5;
    }
    return 0;
}

int run_purity(const Options& opt) {
    MeshPattern m = parse_pattern(opt.pattern_a);
    std::optional<int> witness = nonpure_witness(m);
    std::vector<GridBox> merged;
    if (witness) {
        auto [mx, occ] = delete_point(m, *witness);
        for (GridBox b : mx.shading.boxes())
            if (region(occ, m, b).boxes.size() >= 2) merged.push_back(b);
    }
    if (opt.json) {
        ordered_json j;
        j["nonpure"] = witness.has_value();
        if (witness) {
            j["witness"] = *witness;
            auto arr = ordered_json::array();
            for (GridBox b : merged) arr.push_back({b.x, b.y});
            j["merged"] = std::move(arr);
        }
        std::printf("%s\n", j.dump().c_str());
        return 0;
    }
    std::printf("nonpure: %s\n", witness ? "true" : "false");
    if (witness) {
        std::printf("witness: %d\n", *witness);
        std::string boxes;
        for (GridBox b : merged) {
            if (!boxes.empty()) boxes += ';';
            boxes += format_box(b);
        }
        std::printf("merged: %s\n", boxes.c_str());
    }
    return 0;
}

int run_gamma(const Options& opt) {
    MeshPattern m = parse_pattern(opt.pattern_a);
    Word w = gamma_to_word(m);
    long long closed = mu_gamma_closed_form(m);
    long long via_word = mobius_word({0}, w);
    if (opt.json) {
        ordered_json j;
        j["word"] = format_word(w);
        j["mu_closed_form"] = closed;
        j["mu_word"] = via_word;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("word: %s\n", format_word(w).c_str());
        std::printf("mu_closed_form: %lld\n", closed);
        std::printf("mu_word: %lld\n", via_word);
    }
    return 0;
}

int run_sum(const Options& opt) {
    MeshPattern s = parse_pattern(opt.pattern_a);
    MeshPattern t = parse_pattern(opt.pattern_b);
    MeshPattern result = opt.skew ? skew_sum(s, t) : direct_sum(s, t);
    if (opt.json) {
        ordered_json j;
        j["pattern"] = format_pattern(result);
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s\n", format_pattern(result).c_str());
    }
    return 0;
}

int run_decompose(const Options& opt) {
    MeshPattern m = parse_pattern(opt.pattern_a);
    std::vector<MeshPattern> parts = opt.skew ? skew_decompose(m) : decompose(m);
    if (opt.json) {
        ordered_json j;
        auto arr = ordered_json::array();
        for (const MeshPattern& part : parts) arr.push_back(format_pattern(part));
        j["summands"] = std::move(arr);
        std::printf("%s\n", j.dump().c_str());
    } else {
        for (const MeshPattern& part : parts) std::printf("%s\n", format_pattern(part).c_str());
    }
    return 0;
}

int run_stats(const Options& opt) {
    if (opt.json) {
        Estimate e = estimate_proportion(opt.length, opt.samples, opt.seed);
        ordered_json j;
        j["n"] = opt.length;
        j["samples"] = e.samples;
        j["value"] = e.value;
        j["half_width"] = e.half_width;
        j["bound_8_over_n"] = 8.0 / opt.length;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::fputs(proportion_report({opt.length}, opt.samples, opt.seed).c_str(), stdout);
    }
    return 0;
}

int run_random(const Options& opt) {
    MeshPattern m = random_mesh_pattern(opt.length, opt.q, opt.seed);
    if (opt.json) {
        ordered_json j;
        j["pattern"] = format_pattern(m);
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s\n", format_pattern(m).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mesh pattern poset toolkit"};
    app.require_subcommand(1);
    app.footer("exit codes: 0 ok/true, 1 false, 2 parse error, 3 not comparable,\n"
               "4 budget or size exceeded, 5 oracle mismatch, 6 precondition failed");
    Options opt;
    int (*action)(const Options&) = nullptr;

    CLI::App* contains_cmd = app.add_subcommand("contains", "test pattern containment");
    contains_cmd->add_option("small", opt.pattern_a, "contained pattern")->required();
    contains_cmd->add_option("big", opt.pattern_b, "containing pattern")->required();
    contains_cmd->add_flag("--witness", opt.witness, "print each occurrence");
    add_common(contains_cmd, opt);
    contains_cmd->callback([&] { action = run_contains; });

    CLI::App* interval_cmd = app.add_subcommand("interval", "build the interval between two patterns");
    interval_cmd->add_option("bottom", opt.pattern_a, "bottom pattern")->required();
    interval_cmd->add_option("top", opt.pattern_b, "top pattern")->required();
    interval_cmd->add_flag("--stats", opt.stats, "print purity, dimension, chains, connectivity");
    interval_cmd->add_option("--export", opt.export_format, "output format")
        ->check(CLI::IsMember({"dot", "json"}));
    add_common(interval_cmd, opt);
    add_config(interval_cmd, opt);
    interval_cmd->callback([&] { action = run_interval; });

    CLI::App* mobius_cmd = app.add_subcommand("mobius", "Mobius function of an interval");
    mobius_cmd->add_option("bottom", opt.pattern_a, "bottom pattern")->required();
    mobius_cmd->add_option("top", opt.pattern_b, "top pattern")->required();
    mobius_cmd->add_flag("--oracle", opt.oracle, "cross-check against the chain-count oracle");
    add_common(mobius_cmd, opt);
    add_config(mobius_cmd, opt);
    mobius_cmd->callback([&] { action = run_mobius; });

    CLI::App* purity_cmd = app.add_subcommand("purity", "nonpurity certificate from point deletion");
    purity_cmd->add_option("pattern", opt.pattern_a, "pattern to examine")->required();
    add_common(purity_cmd, opt);
    purity_cmd->callback([&] { action = run_purity; });

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "word image and Mobius values of a one-descent pattern");
    gamma_cmd->add_option("pattern", opt.pattern_a, "pattern in the word-bijection class")->required();
    add_common(gamma_cmd, opt);
    gamma_cmd->callback([&] { action = run_gamma; });

    CLI::App* sum_cmd = app.add_subcommand("sum", "direct or skew sum of two patterns");
    sum_cmd->add_option("first", opt.pattern_a, "first summand")->required();
    sum_cmd->add_option("second", opt.pattern_b, "second summand")->required();
    sum_cmd->add_flag("--skew", opt.skew, "skew sum instead of direct sum");
    add_common(sum_cmd, opt);
    sum_cmd->callback([&] { action = run_sum; });

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "split into indecomposable summands");
    decompose_cmd->add_option("pattern", opt.pattern_a, "pattern to split")->required();
    decompose_cmd->add_flag("--skew", opt.skew, "skew decomposition");
    add_common(decompose_cmd, opt);
    decompose_cmd->callback([&] { action = run_decompose; });

    CLI::App* stats_cmd = app.add_subcommand("stats", "containment probability report");
    stats_cmd->add_option("n", opt.length, "pattern length")->required();
    stats_cmd->add_option("--samples", opt.samples, "sample count");
    stats_cmd->add_option("--seed", opt.seed, "random seed");
    add_common(stats_cmd, opt);
    stats_cmd->callback([&] { action = run_stats; });

    CLI::App* random_cmd = app.add_subcommand("random", "sample a random mesh pattern");
    random_cmd->add_option("n", opt.length, "pattern length")->required();
    random_cmd->add_option("--q", opt.q, "box shading probability");
    random_cmd->add_option("--seed", opt.seed, "random seed");
    add_common(random_cmd, opt);
    random_cmd->callback([&] { action = run_random; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action(opt);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s (%s)\n", e.what(), errc_name(e.code()));
        return exit_code_for(e.code());
    }
}
