#include "rtcycles/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rtcycles/constructions.hpp"
#include "rtcycles/graph_io.hpp"
#include "rtcycles/oracles.hpp"
#include "rtcycles/report_json.hpp"
#include "rtcycles/search.hpp"

namespace rtc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    int jobs = 1;
    uint64_t budget = 1'000'000'000ULL;
    std::string checkpoint;
    bool no_timestamp = false;
    std::string format = "json";
};

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

Graph load_graph6_file(const std::string& path, std::istream& in) {
    std::string text = path.empty() || path == "-" ? read_stream(in) : read_file(path);
    size_t start = 0;
    while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
    size_t end = text.find('\n', start);
    return decode_graph6(text.substr(start, end == std::string::npos ? end : end - start));
}

Fraction parse_fraction(const std::string& s) {
    // "num/den" or a decimal like "0.74".
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            long long num = std::stoll(s.substr(0, slash));
            long long den = std::stoll(s.substr(slash + 1));
            if (den <= 0) throw Error("denominator must be positive");
            return {num, den};
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return {std::stoll(s), 1};
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long long den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return {std::stoll(digits), den};
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse fraction: " + s);
    }
}

std::set<int> parse_length_list(const std::string& s, int n) {
    std::set<int> out;
    if (s.empty() || s == "none") return out;
    if (s == "odd" || s == "even" || s == "all") {
        for (int k = 3; k <= n; ++k) {
            if (s == "odd" && k % 2 == 0) continue;
            if (s == "even" && k % 2 == 1) continue;
            out.insert(k);
        }
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error("empty entry in length list");
        out.insert(std::stoi(tok));
    }
    return out;
}

std::vector<bool> parse_hex_mask(const std::string& hex, size_t bits) {
    std::string digits = hex;
    if (digits.starts_with("0x") || digits.starts_with("0X")) digits = digits.substr(2);
    const size_t expected = (bits + 3) / 4;
    if (digits.size() != expected)
        throw Error("mask must be exactly " + std::to_string(expected) + " hex digits for " +
                    std::to_string(bits) + " bits");
    std::vector<bool> mask(bits, false);
    for (size_t i = 0; i < digits.size(); ++i) {
        char ch = digits[digits.size() - 1 - i];
        int value;
        if (ch >= '0' && ch <= '9')
            value = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            value = 10 + ch - 'a';
        else if (ch >= 'A' && ch <= 'F')
            value = 10 + ch - 'A';
        else
            throw Error("mask must be hexadecimal");
        for (int b = 0; b < 4; ++b) {
            size_t idx = 4 * i + static_cast<size_t>(b);
            bool set = (value >> b) & 1;
            if (idx >= bits) {
                if (set) throw Error("mask has bits set past 2p^2");
                continue;
            }
            mask[idx] = set;
        }
    }
    return mask;
}

std::string emit_witness_file(const TwoColoring& coloring,
                              const std::vector<std::string>& claim_lines) {
    std::string out;
    for (const std::string& line : claim_lines) out += "c claim " + line + "\n";
    out += emit_coloring(coloring);
    return out;
}

void maybe_write(const std::string& path, const std::string& contents) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write file: " + path);
    f << contents;
}

// --- frontier checkpoint -----------------------------------------------

std::string frontier_text(const SearchReport& rep) {
    std::string out = "c rtcycles frontier n=" + std::to_string(rep.n) + "\n";
    size_t last_host = SIZE_MAX;
    for (const auto& [host_idx, bits] : rep.frontier) {
        if (host_idx != last_host) {
            out += "c host " + std::to_string(host_idx) + "\n";
            last_host = host_idx;
        }
        out += "b " + bits + "\n";
    }
    return out;
}

std::vector<BranchTask> parse_frontier(const std::string& text) {
    std::vector<BranchTask> tasks;
    size_t host = 0;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.starts_with("c host ")) {
            host = static_cast<size_t>(std::stoull(line.substr(7)));
        } else if (line.starts_with("b ")) {
            tasks.push_back({host, line.substr(2)});
        } else if (line.empty() || line[0] == 'c') {
            continue;
        } else {
            throw Error("malformed frontier line: " + line);
        }
    }
    return tasks;
}

// --- verdict -> exit code ------------------------------------------------

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Verified: return kExitOk;
        case Verdict::Counterexample: return kExitCounterexample;
        case Verdict::ExhaustedBudget: return kExitBudget;
    }
    return kExitUsage;
}

// --- subcommand handlers --------------------------------------------------

int run_spectrum(const std::string& file, bool from_stdin, const GlobalOpts& global,
                 std::istream& in, std::ostream& out) {
    std::string text = from_stdin || file.empty() || file == "-" ? read_stream(in)
                                                                 : read_file(file);
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        Graph g = decode_graph6(line);
        Budget budget{global.budget};
        CycleSpectrum sp = spectrum(g, budget);
        if (global.format == "text") {
            out << "n=" << g.order() << " spectrum=";
            auto lengths = sp.lengths();
            for (size_t i = 0; i < lengths.size(); ++i)
                out << (i ? "," : "") << lengths[i];
            out << " ec=" << sp.ec() << " oc=" << sp.oc() << "\n";
        } else {
            out << spectrum_json(sp) << "\n";
        }
    }
    return kExitOk;
}

int run_construct(const ColoredInstance& inst, const std::string& emit, std::ostream& out) {
    auto failed = failing_claims(inst);
    if (!failed.empty())
        throw Error("construction claim failed: " + failed.front());
    if (emit == "graph6")
        out << encode_graph6(inst.coloring.host) << "\n";
    else
        out << emit_coloring(inst.coloring);
    return kExitOk;
}

int run_verify_conjecture1(Conjecture1Options opt, const std::string& witness_path,
                           const GlobalOpts& global, std::ostream& out) {
    opt.jobs = global.jobs;
    opt.budget = global.budget;
    SearchReport rep;
    if (!global.checkpoint.empty() && std::ifstream(global.checkpoint).good()) {
        auto tasks = parse_frontier(read_file(global.checkpoint));
        KRange range = opt.range_override.value_or(KRange::conjecture1_default(opt.n));
        auto hosts = collect_hosts(opt.n, Fraction{3, 4}, !opt.include_boundary);
        rep = verify_over_hosts(hosts, range, opt, &tasks);
    } else {
        rep = verify_conjecture1(opt);
    }
    if (rep.verdict == Verdict::ExhaustedBudget && !global.checkpoint.empty())
        maybe_write(global.checkpoint, frontier_text(rep));
    if (rep.verdict == Verdict::Counterexample && rep.witness && !witness_path.empty()) {
        KRange range = opt.range_override.value_or(KRange::conjecture1_default(opt.n));
        std::string claim = "mono-missing " + std::to_string(range.lo) + " " +
                            std::to_string(range.hi);
        for (int k : rep.witness->missing) claim += " " + std::to_string(k);
        maybe_write(witness_path, emit_witness_file(rep.witness->coloring, {claim}));
    }
    if (global.format == "text") {
        out << "conjecture1 n=" << rep.n << ": " << verdict_name(rep.verdict)
            << (rep.vacuous ? " (vacuous)" : "") << " hosts=" << rep.hosts_examined
            << " colorings_examined=" << rep.colorings_examined
            << " colorings_covered=" << rep.colorings_covered << "\n";
    } else {
        out << search_report_json(rep, !global.no_timestamp) << "\n";
    }
    return exit_for(rep.verdict);
}

int run_verify_conjecture2(const Conjecture2Options& opt, const GlobalOpts& global,
                           std::ostream& out) {
    SearchReport rep = verify_conjecture2(opt);
    if (global.format == "text") {
        out << "conjecture2 n=" << rep.n << " threshold=" << rep.threshold << ": "
            << verdict_name(rep.verdict) << " (sampled, non-exhaustive)"
            << (rep.vacuous_threshold ? " (vacuous threshold)" : "")
            << (rep.vacuous ? " (no admissible host)" : "")
            << (rep.boundary_hosts ? " (boundary hosts)" : "")
            << " instances=" << rep.instances_checked << " violations=" << rep.violations
            << " unknown=" << rep.unknown_instances << "\n";
    } else {
        out << search_report_json(rep, !global.no_timestamp) << "\n";
    }
    return exit_for(rep.verdict);
}

int run_verify_odd_free(const std::string& file, const GlobalOpts& global, std::istream& in,
                        std::ostream& out) {
    std::string text = file.empty() || file == "-" ? read_stream(in) : read_file(file);
    TwoColoring coloring = parse_coloring(text);
    BipartiteCheck red = is_bipartite(coloring.red);
    BipartiteCheck blue = is_bipartite(coloring.blue);
    bool odd_free = red.bipartite && blue.bipartite;
    if (global.format == "text") {
        out << "no monochromatic odd cycle: " << (odd_free ? "true" : "false") << "\n";
    } else {
        json j;
        j["mode"] = "odd-free";
        j["no_monochromatic_odd_cycle"] = odd_free;
        if (!odd_free) {
            const BipartiteCheck& bad = red.bipartite ? blue : red;
            j["odd_cycle_color"] = red.bipartite ? "B" : "R";
            j["odd_cycle"] = bad.odd_cycle;
        }
        out << j.dump() << "\n";
    }
    return odd_free ? kExitOk : kExitCounterexample;
}

struct RecheckClaim {
    std::string kind;
    KRange range;
    std::set<int> lengths;
};

std::vector<RecheckClaim> parse_witness_claims(const std::string& text) {
    std::vector<RecheckClaim> claims;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.starts_with("c claim ")) continue;
        std::stringstream ls(line.substr(8));
        RecheckClaim claim;
        ls >> claim.kind;
        if (claim.kind == "mono-missing") {
            ls >> claim.range.lo >> claim.range.hi;
            int k;
            while (ls >> k) claim.lengths.insert(k);
        } else if (claim.kind == "avoids-red" || claim.kind == "avoids-blue") {
            int k;
            while (ls >> k) claim.lengths.insert(k);
        } else if (claim.kind != "odd-free") {
            throw Error("unknown witness claim: " + claim.kind);
        }
        claims.push_back(std::move(claim));
    }
    if (claims.empty()) throw Error("witness file carries no claims");
    return claims;
}

int run_verify_recheck(const std::string& path, const GlobalOpts& global, std::ostream& out) {
    std::string text = read_file(path);
    TwoColoring coloring = parse_coloring(text);
    auto claims = parse_witness_claims(text);
    json results = json::array();
    bool all_confirmed = true;
    int exit_code = kExitOk;
    for (const RecheckClaim& claim : claims) {
        bool confirmed = false;
        Budget budget{global.budget};
        if (claim.kind == "mono-missing") {
            auto missing = mono_missing(coloring, claim.range, budget);
            confirmed = missing == claim.lengths && !missing.empty();
            if (confirmed) exit_code = kExitCounterexample;
        } else if (claim.kind == "avoids-red" || claim.kind == "avoids-blue") {
            const Graph& cls = claim.kind == "avoids-red" ? coloring.red : coloring.blue;
            confirmed = true;
            for (int k : claim.lengths)
                if (has_cycle_of_length(cls, k, budget)) confirmed = false;
        } else if (claim.kind == "odd-free") {
            confirmed =
                is_bipartite(coloring.red).bipartite && is_bipartite(coloring.blue).bipartite;
        }
        all_confirmed = all_confirmed && confirmed;
        results.push_back({{"claim", claim.kind}, {"confirmed", confirmed}});
    }
    if (global.format == "text") {
        out << "recheck: " << (all_confirmed ? "confirmed" : "FAILED") << "\n";
    } else {
        json j;
        j["recheck"] = all_confirmed ? "confirmed" : "failed";
        j["claims"] = std::move(results);
        out << j.dump() << "\n";
    }
    if (!all_confirmed) return kExitUsage;
    return exit_code;
}

int run_search_avoid(const Graph& host, const std::set<int>& forbid_red,
                     const std::set<int>& forbid_blue, const std::string& witness_path,
                     const GlobalOpts& global, std::ostream& out) {
    AvoidResult result = search_coloring_avoiding(host, forbid_red, forbid_blue, global.budget);
    if (result.coloring) {
        std::vector<std::string> claim_lines;
        auto fmt = [](const char* kind, const std::set<int>& ks) {
            std::string line = kind;
            for (int k : ks) line += " " + std::to_string(k);
            return line;
        };
        claim_lines.push_back(fmt("avoids-red", forbid_red));
        claim_lines.push_back(fmt("avoids-blue", forbid_blue));
        maybe_write(witness_path, emit_witness_file(*result.coloring, claim_lines));
    }
    if (global.format == "text") {
        out << "search avoid: " << avoid_outcome_name(result.outcome)
            << " colorings_covered=" << result.colorings_covered << "\n";
        if (result.coloring) out << emit_coloring(*result.coloring);
    } else {
        json j;
        j["outcome"] = avoid_outcome_name(result.outcome);
        j["nodes"] = result.nodes;
        j["colorings_covered"] = result.colorings_covered;
        j["color_swap_symmetry"] = result.used_color_swap_symmetry;
        if (result.coloring) j["coloring"] = emit_coloring(*result.coloring);
        out << j.dump() << "\n";
    }
    switch (result.outcome) {
        case AvoidOutcome::Found: return kExitOk;
        case AvoidOutcome::Absent: return kExitCounterexample;
        case AvoidOutcome::ExhaustedBudget: return kExitBudget;
    }
    return kExitUsage;
}

int run_count_odd_free(const Graph& host, const GlobalOpts& global, std::ostream& out) {
    uint64_t count = count_odd_free_colorings(host);
    if (global.format == "text") {
        out << "odd-free colorings: " << count << "\n";
    } else {
        json j;
        j["count"] = count;
        j["edges"] = host.edge_count();
        out << j.dump() << "\n";
    }
    return kExitOk;
}

int run_oracle(const OracleReport& rep, const GlobalOpts& global, std::ostream& out) {
    if (global.format == "text") {
        out << "oracle " << rep.theorem << ": " << (rep.pass() ? "pass" : "FAIL")
            << " instances=" << rep.instances_checked
            << " violations=" << rep.violations.size()
            << " exhaustive=" << (rep.exhaustive ? "true" : "false") << "\n";
    } else {
        out << oracle_report_json(rep) << "\n";
    }
    return rep.pass() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"monochromatic cycle spectra and minimum-degree two-coloring search"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--jobs", global.jobs, "parallel workers for the coloring search")
        ->check(CLI::Range(1, 256));
    app.add_option("--budget", global.budget, "node-expansion cap per search branch");
    app.add_option("--checkpoint", global.checkpoint, "frontier file to resume from / write to");
    app.add_flag("--no-timestamp", global.no_timestamp, "omit timing fields from reports");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "cycle spectrum of graph6 input");
    std::string spectrum_file;
    bool spectrum_stdin = false;
    spectrum_cmd->add_option("--file", spectrum_file, "graph6 file, one graph per line");
    spectrum_cmd->add_flag("--graph6-stdin", spectrum_stdin, "read graph6 lines from stdin");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "materialize a coloring construction");
    construct_cmd->require_subcommand(1);
    std::string construct_emit = "coloring";
    construct_cmd->add_option("--emit", construct_emit, "what to print")
        ->check(CLI::IsMember({"coloring", "graph6"}));
    auto* tight_cmd = construct_cmd->add_subcommand("tight", "blue K_{2p,2p} + red K_{p,p} pair");
    int tight_p = 1;
    tight_cmd->add_option("-p", tight_p, "class half-size p")->required();
    auto* pentagon_cmd =
        construct_cmd->add_subcommand("pentagon", "double-5-cycle split of K_5, blown up");
    int pentagon_t = 1;
    pentagon_cmd->add_option("-t", pentagon_t, "blow-up factor t")->required();
    auto* family_cmd =
        construct_cmd->add_subcommand("family", "four-class coloring family member");
    int family_p = 1;
    std::string family_mask;
    family_cmd->add_option("-p", family_p, "class size p")->required();
    family_cmd->add_option("--mask", family_mask, "free-edge colors, hex, bit i = edge i red")
        ->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "conjecture verifiers and witness rechecks");
    std::string verify_mode, verify_recheck, verify_file;
    verify_cmd->add_option("--mode", verify_mode, "property check on a coloring file")
        ->check(CLI::IsMember({"odd-free"}));
    verify_cmd->add_option("--recheck", verify_recheck, "re-validate a witness file");
    verify_cmd->add_option("--file", verify_file, "coloring file (default stdin)");
    auto* c1_cmd = verify_cmd->add_subcommand("conjecture1", "exhaustive small-order sweep");
    int c1_n = 7;
    std::string c1_range, c1_witness;
    bool c1_uniform = false, c1_noprune = false, c1_boundary = false;
    c1_cmd->add_option("-n", c1_n, "order")->required();
    c1_cmd->add_option("--range", c1_range, "LO:HI cycle-length range override");
    c1_cmd->add_option("--emit-witness", c1_witness, "write a counterexample witness file here");
    c1_cmd->add_flag("--uniform-color", c1_uniform,
                     "require a single color to contain every C_k in the range");
    c1_cmd->add_flag("--no-prune", c1_noprune, "enumerate every coloring, no subtree cuts");
    c1_cmd->add_flag("--include-boundary", c1_boundary,
                     "admit hosts with minimum degree exactly 3n/4");
    auto* c2_cmd = verify_cmd->add_subcommand("conjecture2", "sampling verifier");
    std::string c2_c;
    int c2_n = 10, c2_gs = 50, c2_cs = 16;
    uint64_t c2_seed = 0;
    bool c2_boundary = false;
    c2_cmd->add_option("-c", c2_c, "degree fraction c (e.g. 0.74 or 3/4)")->required();
    c2_cmd->add_option("-n", c2_n, "order")->required();
    c2_cmd->add_option("--graph-samples", c2_gs, "random hosts to draw");
    c2_cmd->add_option("--coloring-samples", c2_cs, "colorings per host");
    c2_cmd->add_option("--seed", c2_seed, "sampling seed")->required();
    c2_cmd->add_flag("--include-boundary", c2_boundary,
                     "admit hosts with minimum degree exactly c*n (flagged in the report)");

    // search avoid
    auto* search_cmd = app.add_subcommand("search", "coloring searches");
    search_cmd->require_subcommand(1);
    auto* avoid_cmd = search_cmd->add_subcommand(
        "avoid", "find a 2-coloring avoiding prescribed monochromatic cycle lengths");
    std::string avoid_file, avoid_red = "none", avoid_blue = "none", avoid_witness;
    uint64_t avoid_seed = 0;
    avoid_cmd->add_option("--file", avoid_file, "host graph, graph6 (default stdin)");
    avoid_cmd->add_option("--forbid-red", avoid_red, "lengths: list, 'odd', 'even', 'all'");
    avoid_cmd->add_option("--forbid-blue", avoid_blue, "lengths: list, 'odd', 'even', 'all'");
    avoid_cmd->add_option("--seed", avoid_seed, "recorded for reproducibility");
    avoid_cmd->add_option("--emit-witness", avoid_witness, "write found coloring + claims here");

    // count odd-free
    auto* count_cmd = app.add_subcommand("count", "exact coloring counts");
    count_cmd->require_subcommand(1);
    auto* oddfree_cmd = count_cmd->add_subcommand("odd-free", "colorings with no mono odd cycle");
    std::string count_file;
    oddfree_cmd->add_option("--file", count_file, "host graph, graph6 (default stdin)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "classical-theorem suites");
    oracle_cmd->require_subcommand(1);
    auto* bondy_cmd = oracle_cmd->add_subcommand("bondy", "min-degree pancyclicity");
    auto* bollobas_cmd = oracle_cmd->add_subcommand("bollobas", "edge-count cycle range");
    auto* eg_cmd = oracle_cmd->add_subcommand("erdos-gallai", "path/cycle length from size");
    auto* hagg_cmd = oracle_cmd->add_subcommand("haggkvist", "odd-cycle sampling diagnostic");
    int oracle_n = 6, oracle_k = 2, oracle_samples = 100;
    uint64_t oracle_seed = 0;
    for (auto* cmd : {bondy_cmd, bollobas_cmd, eg_cmd, hagg_cmd})
        cmd->add_option("-n", oracle_n, "max order (exhaustive) or order (sampling)");
    for (auto* cmd : {eg_cmd, hagg_cmd}) cmd->add_option("-k", oracle_k, "k parameter");
    hagg_cmd->add_option("--samples", oracle_samples, "samples to admit");
    hagg_cmd->add_option("--seed", oracle_seed, "sampling seed")->required();

    for (auto* sub : {spectrum_cmd, construct_cmd, tight_cmd, pentagon_cmd, family_cmd,
                      verify_cmd, c1_cmd, c2_cmd, search_cmd, avoid_cmd, count_cmd, oddfree_cmd,
                      oracle_cmd, bondy_cmd, bollobas_cmd, eg_cmd, hagg_cmd})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        err << app.help();
        return kExitUsage;
    }

    try {
        if (*spectrum_cmd) return run_spectrum(spectrum_file, spectrum_stdin, global, in, out);
        if (*tight_cmd) return run_construct(tight_example(tight_p), construct_emit, out);
        if (*pentagon_cmd)
            return run_construct(pentagon_blowup(pentagon_t), construct_emit, out);
        if (*family_cmd) {
            size_t bits = 2 * static_cast<size_t>(family_p) * static_cast<size_t>(family_p);
            return run_construct(four_class_family(family_p, parse_hex_mask(family_mask, bits)),
                                 construct_emit, out);
        }
        if (*c1_cmd) {
            Conjecture1Options opt;
            opt.n = c1_n;
            opt.uniform_color = c1_uniform;
            opt.pruned = !c1_noprune;
            opt.include_boundary = c1_boundary;
            if (!c1_range.empty()) {
                auto colon = c1_range.find(':');
                if (colon == std::string::npos) throw Error("--range expects LO:HI");
                opt.range_override =
                    KRange{std::stoi(c1_range.substr(0, colon)), std::stoi(c1_range.substr(colon + 1))};
            }
            return run_verify_conjecture1(opt, c1_witness, global, out);
        }
        if (*c2_cmd) {
            Conjecture2Options opt;
            opt.c = parse_fraction(c2_c);
            opt.n = c2_n;
            opt.graph_samples = c2_gs;
            opt.coloring_samples = c2_cs;
            opt.seed = c2_seed;
            opt.budget = global.budget;
            opt.include_boundary = c2_boundary;
            return run_verify_conjecture2(opt, global, out);
        }
        if (*verify_cmd) {
            if (!verify_recheck.empty()) return run_verify_recheck(verify_recheck, global, out);
            if (verify_mode == "odd-free")
                return run_verify_odd_free(verify_file, global, in, out);
            err << "verify: expected conjecture1, conjecture2, --mode, or --recheck\n";
            return kExitUsage;
        }
        if (*avoid_cmd) {
            Graph host = load_graph6_file(avoid_file, in);
            return run_search_avoid(host, parse_length_list(avoid_red, host.order()),
                                    parse_length_list(avoid_blue, host.order()), avoid_witness,
                                    global, out);
        }
        if (*oddfree_cmd) return run_count_odd_free(load_graph6_file(count_file, in), global, out);
        if (*bondy_cmd) return run_oracle(check_bondy(oracle_n), global, out);
        if (*bollobas_cmd) return run_oracle(check_bollobas(oracle_n), global, out);
        if (*eg_cmd) return run_oracle(check_erdos_gallai(oracle_n, oracle_k), global, out);
        if (*hagg_cmd)
            return run_oracle(sample_haggkvist(oracle_k, oracle_n, oracle_samples, oracle_seed),
                              global, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand matched\n";
    return kExitUsage;
}

}  // namespace rtc::cli
