// ordeg command line: generate, analyze, verify, bound, plan.
// Talks to the library strictly through the public C API.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordeg.h"

namespace {

using ull = unsigned long long;

struct GraphDeleter {
    void operator()(ordeg_graph* g) const { ordeg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ordeg_graph, GraphDeleter>;

struct PlanDeleter {
    void operator()(ordeg_plan_list* p) const { ordeg_plan_list_free(p); }
};
using PlanPtr = std::unique_ptr<ordeg_plan_list, PlanDeleter>;

int fail_input(const std::string& context) {
    std::fprintf(stderr, "ordeg: %s: %s\n", context.c_str(), ordeg_last_error());
    return 2;
}

bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size()) return false;
    out = v;
    return true;
}

// FILE may be "-" for stdin.
bool read_input(const std::string& path, std::string& out, std::string& err) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        err = "cannot open '" + path + "'";
        return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

std::string decimal6(std::uint64_t num, std::uint64_t den) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

std::string reduced_fraction(std::uint64_t num, std::uint64_t den) {
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return std::to_string(num / g) + "/" + std::to_string(den / g);
}

// ---- gen -----------------------------------------------------------------

struct GenRequest {
    std::string family;
    std::vector<std::uint64_t> params;
    bool dup = false;
    std::string target = "auto";
    std::uint64_t delta = 0;
    bool clique = false;
};

int build_requested(const GenRequest& req, GraphPtr& out, ordeg_prediction& pred, bool& have_pred) {
    ordeg_status s = ordeg_predict(req.family.c_str(), req.params.data(), req.params.size(), &pred);
    if (s != ORDEG_OK) return fail_input("gen " + req.family);
    have_pred = true;

    ordeg_graph* raw = nullptr;
    s = ordeg_gen(req.family.c_str(), req.params.data(), req.params.size(), &raw);
    if (s != ORDEG_OK) return fail_input("gen " + req.family);
    out.reset(raw);

    if (req.dup) {
        std::int64_t target = -1;
        if (req.target != "auto") {
            std::uint64_t t;
            if (!parse_u64(req.target, t)) {
                std::fprintf(stderr, "ordeg: gen dup: --target must be 'auto' or a vertex id\n");
                return 2;
            }
            target = static_cast<std::int64_t>(t);
        }
        ordeg_graph* dup_raw = nullptr;
        s = ordeg_duplicate_vertices(out.get(), target, static_cast<std::uint32_t>(req.delta),
                                     req.clique ? 1 : 0, &dup_raw);
        if (s != ORDEG_OK) return fail_input("gen dup");
        out.reset(dup_raw);
        // Compose the closed form: copies attach to one neighborhood. The
        // degree becomes a bound; equality needs a max-degree vertex next
        // to the target.
        pred.order += req.delta;
        pred.max_degree += req.delta;
        pred.degree_is_bound = 1;
        if (pred.has_diameter && pred.diameter <= 2) {
            pred.diameter = 2;
            pred.diameter_is_bound = 1;
        } else {
            pred.has_diameter = 0;
        }
    }
    return 0;
}

void print_gen_report(std::FILE* rep, const GenRequest& req, const ordeg_prediction& pred, ordeg_graph* g,
                      bool full) {
    std::string family_line = req.family;
    for (std::uint64_t p : req.params) family_line += " " + std::to_string(p);
    if (req.dup)
        family_line = "dup(" + family_line + ") target=" + req.target + " delta=" + std::to_string(req.delta) +
                      (req.clique ? " clique" : "");
    std::fprintf(rep, "family: %s\n", family_line.c_str());

    std::fprintf(rep, "predicted: order=%llu max_degree%s%llu", (ull)pred.order, pred.degree_is_bound ? "<=" : "=",
                 (ull)pred.max_degree);
    if (pred.has_diameter)
        std::fprintf(rep, " diameter%s%u", pred.diameter_is_bound ? "<=" : "=", pred.diameter);
    std::fprintf(rep, "\n");

    std::uint32_t order = ordeg_graph_order(g);
    if (full || order <= 4096) {
        ordeg_metrics m;
        if (ordeg_compute_metrics(g, &m) != ORDEG_OK) {
            std::fprintf(rep, "measured: metrics unavailable: %s\n", ordeg_last_error());
            return;
        }
        std::fprintf(rep, "measured: order=%llu edges=%llu degree=%u..%u regular=%s connected=%s", (ull)m.order,
                     (ull)m.edge_count, m.min_degree, m.max_degree, m.is_regular ? "yes" : "no",
                     m.is_connected ? "yes" : "no");
        if (m.has_diameter) std::fprintf(rep, " diameter=%u", m.diameter);
        if (m.has_girth) std::fprintf(rep, " girth=%u", m.girth);
        if (m.has_aspl)
            std::fprintf(rep, " aspl=%s (%s)", reduced_fraction(m.aspl_num, m.aspl_den).c_str(),
                         decimal6(m.aspl_num, m.aspl_den).c_str());
        std::fprintf(rep, "\n");
    } else {
        std::uint32_t dmin = UINT32_MAX, dmax = 0;
        for (std::uint32_t v = 0; v < order; ++v) {
            std::uint32_t d = 0;
            ordeg_graph_degree(g, v, &d);
            dmin = d < dmin ? d : dmin;
            dmax = d > dmax ? d : dmax;
        }
        std::fprintf(rep, "measured: order=%u edges=%llu degree=%u..%u (diameter/girth/aspl skipped: order > 4096, use --full)\n",
                     order, (ull)ordeg_graph_edge_count(g), dmin, dmax);
    }
}

int cmd_gen(const std::vector<std::string>& tokens, const std::string& out_path, const GenRequest& flags,
            bool full) {
    if (tokens.empty()) {
        std::fprintf(stderr, "ordeg: gen: missing family\n");
        return 2;
    }
    GenRequest req = flags;
    std::size_t at = 0;
    req.dup = tokens[0] == "dup";
    if (req.dup) {
        if (tokens.size() < 2) {
            std::fprintf(stderr, "ordeg: gen dup: missing base family\n");
            return 2;
        }
        at = 1;
    }
    req.family = tokens[at++];
    if (req.family == "dup") {
        std::fprintf(stderr, "ordeg: gen dup: base family cannot itself be dup\n");
        return 2;
    }
    for (; at < tokens.size(); ++at) {
        std::uint64_t v;
        if (!parse_u64(tokens[at], v)) {
            std::fprintf(stderr, "ordeg: gen: parameter '%s' is not a nonnegative integer\n", tokens[at].c_str());
            return 2;
        }
        req.params.push_back(v);
    }

    GraphPtr g;
    ordeg_prediction pred{};
    bool have_pred = false;
    if (int rc = build_requested(req, g, pred, have_pred)) return rc;

    char* text = nullptr;
    size_t len = 0;
    if (ordeg_emit_edge_list(g.get(), &text, &len) != ORDEG_OK) return fail_input("emit");
    std::FILE* rep = stderr;
    if (!out_path.empty()) {
        std::FILE* f = std::fopen(out_path.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "ordeg: cannot write '%s'\n", out_path.c_str());
            ordeg_string_free(text);
            return 2;
        }
        std::fwrite(text, 1, len, f);
        std::fclose(f);
        rep = stdout;
    } else {
        std::fwrite(text, 1, len, stdout);
        std::fflush(stdout);
    }
    ordeg_string_free(text);
    print_gen_report(rep, req, pred, g.get(), full);
    return 0;
}

// ---- analyze ----------------------------------------------------------------

struct Analysis {
    ordeg_metrics m{};
    bool has_moore = false;
    std::string moore, ratio_pct;
    bool has_lower = false;
    std::uint64_t lower_num = 0, lower_den = 1;
    bool has_gap = false;
    std::uint64_t gap_num = 0, gap_den = 1;
};

Analysis analyze_graph(ordeg_graph* g) {
    Analysis a;
    ordeg_compute_metrics(g, &a.m);
    if (a.m.has_diameter && a.m.max_degree >= 2 && a.m.order >= 2) {
        char buf[704];
        if (ordeg_moore_bound(a.m.max_degree, a.m.diameter, buf, sizeof buf) == ORDEG_OK) {
            a.moore = buf;
            if (ordeg_moore_ratio_pct(a.m.order, a.m.max_degree, a.m.diameter, buf, sizeof buf) == ORDEG_OK) {
                a.ratio_pct = buf;
                a.has_moore = true;
            }
        }
    }
    if (a.m.order >= 2 && a.m.max_degree >= 1 &&
        ordeg_aspl_lower_bound(a.m.order, a.m.max_degree, &a.lower_num, &a.lower_den) == ORDEG_OK) {
        a.has_lower = true;
        if (a.m.has_aspl) {
            // aspl - lower, reduced; products fit comfortably in 128 bits.
            unsigned __int128 num = (unsigned __int128)a.m.aspl_num * a.lower_den -
                                    (unsigned __int128)a.lower_num * a.m.aspl_den;
            unsigned __int128 den = (unsigned __int128)a.m.aspl_den * a.lower_den;
            unsigned __int128 x = num, y = den;
            while (y) {
                unsigned __int128 t = x % y;
                x = y;
                y = t;
            }
            if (x == 0) x = 1;
            a.gap_num = (std::uint64_t)(num / x);
            a.gap_den = (std::uint64_t)(den / x);
            a.has_gap = true;
        }
    }
    return a;
}

void print_analysis_human(const std::string& name, const Analysis& a) {
    const ordeg_metrics& m = a.m;
    std::printf("name: %s\n", name.c_str());
    std::printf("order: %llu\n", (ull)m.order);
    std::printf("edges: %llu\n", (ull)m.edge_count);
    std::printf("degree: %u..%u (%s)\n", m.min_degree, m.max_degree, m.is_regular ? "regular" : "irregular");
    std::printf("connected: %s\n", m.is_connected ? "yes" : "no");
    if (m.has_diameter)
        std::printf("diameter: %u\n", m.diameter);
    else
        std::printf("diameter: -\n");
    if (m.has_girth)
        std::printf("girth: %u\n", m.girth);
    else
        std::printf("girth: -\n");
    if (m.has_aspl)
        std::printf("aspl: %s (%s)\n", reduced_fraction(m.aspl_num, m.aspl_den).c_str(),
                    decimal6(m.aspl_num, m.aspl_den).c_str());
    else
        std::printf("aspl: -\n");
    if (a.has_moore) {
        std::printf("moore_bound: %s (degree %u, diameter %u)\n", a.moore.c_str(), m.max_degree, m.diameter);
        std::printf("moore_ratio: %s%%\n", a.ratio_pct.c_str());
    } else {
        std::printf("moore_bound: -\n");
        std::printf("moore_ratio: -\n");
    }
    if (a.has_lower)
        std::printf("aspl_lower_bound: %s (%s)\n", reduced_fraction(a.lower_num, a.lower_den).c_str(),
                    decimal6(a.lower_num, a.lower_den).c_str());
    else
        std::printf("aspl_lower_bound: -\n");
    if (a.has_gap)
        std::printf("aspl_gap: %s (%s)\n", reduced_fraction(a.gap_num, a.gap_den).c_str(),
                    decimal6(a.gap_num, a.gap_den).c_str());
    else
        std::printf("aspl_gap: -\n");
}

void print_analysis_csv(const std::string& name, const Analysis& a) {
    const ordeg_metrics& m = a.m;
    std::printf(
        "name,order,min_degree,max_degree,regular,connected,diameter,girth,aspl_num,aspl_den,aspl,moore_bound,"
        "moore_ratio_pct,aspl_lower_num,aspl_lower_den\n");
    std::printf("%s,%llu,%u,%u,%s,%s,", name.c_str(), (ull)m.order, m.min_degree, m.max_degree,
                m.is_regular ? "true" : "false", m.is_connected ? "true" : "false");
    if (m.has_diameter)
        std::printf("%u,", m.diameter);
    else
        std::printf(",");
    if (m.has_girth)
        std::printf("%u,", m.girth);
    else
        std::printf(",");
    if (m.has_aspl)
        std::printf("%llu,%llu,%s,", (ull)m.aspl_num, (ull)m.aspl_den, decimal6(m.aspl_num, m.aspl_den).c_str());
    else
        std::printf(",,,");
    if (a.has_moore)
        std::printf("%s,%s,", a.moore.c_str(), a.ratio_pct.c_str());
    else
        std::printf(",,");
    if (a.has_lower)
        std::printf("%llu,%llu\n", (ull)a.lower_num, (ull)a.lower_den);
    else
        std::printf(",\n");
}

int cmd_analyze(const std::string& path, const std::string& name_flag, std::int64_t explicit_order, bool csv) {
    std::string text, err;
    if (!read_input(path, text, err)) {
        std::fprintf(stderr, "ordeg: analyze: %s\n", err.c_str());
        return 2;
    }
    ordeg_graph* raw = nullptr;
    if (ordeg_parse_edge_list(text.c_str(), text.size(), explicit_order, &raw) != ORDEG_OK)
        return fail_input("analyze " + path);
    GraphPtr g(raw);

    std::string name = name_flag;
    if (name.empty()) {
        name = path;
        std::size_t slash = name.find_last_of('/');
        if (slash != std::string::npos) name = name.substr(slash + 1);
    }
    Analysis a = analyze_graph(g.get());
    if (csv)
        print_analysis_csv(name, a);
    else
        print_analysis_human(name, a);
    return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& path, std::optional<std::uint64_t> order, std::optional<std::uint64_t> degree,
               std::optional<std::uint64_t> diam, bool regular) {
    std::string text, err;
    if (!read_input(path, text, err)) {
        std::fprintf(stderr, "ordeg: verify: %s\n", err.c_str());
        return 2;
    }
    ordeg_graph* raw = nullptr;
    if (ordeg_parse_edge_list(text.c_str(), text.size(), -1, &raw) != ORDEG_OK) return fail_input("verify");
    GraphPtr g(raw);

    ordeg_metrics m;
    if (ordeg_compute_metrics(g.get(), &m) != ORDEG_OK) return fail_input("verify");

    bool pass = true;
    auto check_u64 = [&pass](const char* what, std::uint64_t got, std::uint64_t want) {
        bool ok = got == want;
        pass = pass && ok;
        std::printf("%s: %llu (want %llu) %s\n", what, (ull)got, (ull)want, ok ? "ok" : "FAIL");
    };
    if (order) check_u64("order", m.order, *order);
    if (degree) check_u64("max_degree", m.max_degree, *degree);
    if (diam) {
        if (m.has_diameter) {
            check_u64("diameter", m.diameter, *diam);
        } else {
            pass = false;
            std::printf("diameter: - (want %llu) FAIL (disconnected)\n", (ull)*diam);
        }
    }
    if (regular) {
        pass = pass && m.is_regular;
        std::printf("regular: %s %s\n", m.is_regular ? "yes" : "no", m.is_regular ? "ok" : "FAIL");
    }
    std::printf("verify: %s\n", pass ? "pass" : "fail");
    return pass ? 0 : 1;
}

// ---- bounds -----------------------------------------------------------------

int cmd_bounds(std::uint64_t degree, std::uint64_t diam) {
    ordeg_bound_report r;
    if (ordeg_construction_bounds(static_cast<std::uint32_t>(degree), static_cast<std::uint32_t>(diam), &r) !=
        ORDEG_OK)
        return fail_input("bounds");
    std::printf("degree: %llu\n", (ull)degree);
    std::printf("diameter: %llu\n", (ull)diam);
    std::printf("moore_bound: %s\n", r.moore);
    switch (r.optimum_kind) {
        case ORDEG_OPTIMUM_KNOWN: std::printf("known_optimum: %llu\n", (ull)r.optimum_value); break;
        case ORDEG_OPTIMUM_OPEN: std::printf("known_optimum: open (at most %llu)\n", (ull)r.optimum_value); break;
        default: std::printf("known_optimum: unknown\n");
    }
    std::printf("brown_bound: %s\n", r.has_brown ? r.brown : "-");
    std::printf("de_bruijn_bound: %s\n", r.has_de_bruijn ? r.de_bruijn : "-");
    std::printf("power_of_two_bound: %s\n", r.has_power_of_two ? r.power_of_two : "-");
    return 0;
}

// ---- search -----------------------------------------------------------------

int cmd_search(std::uint64_t order, std::uint64_t degree, bool realize, const std::string& out_path) {
    ordeg_plan_list* raw = nullptr;
    if (ordeg_plan(order, degree, &raw) != ORDEG_OK) return fail_input("search");
    PlanPtr plans(raw);

    std::size_t count = ordeg_plan_count(plans.get());
    if (count == 0) {
        std::fprintf(stderr, "ordeg: search: no applicable plans for order=%llu degree=%llu\n", (ull)order,
                     (ull)degree);
        return realize ? 1 : 0;
    }
    std::printf("%-5s %-14s %-20s %-8s %-8s %s\n", "rank", "family", "params", "order", "degree", "diameter");
    for (std::size_t i = 0; i < count; ++i) {
        ordeg_plan_info info;
        if (ordeg_plan_get(plans.get(), i, &info) != ORDEG_OK) return fail_input("search");
        std::printf("%-5zu %-14s %-20s %-8llu <=%-6llu %u\n", i + 1, info.family, info.params, (ull)info.order,
                    (ull)info.degree, info.diameter);
    }
    if (!realize) return 0;

    ordeg_graph* graw = nullptr;
    ordeg_metrics m;
    int pass = 0;
    if (ordeg_plan_realize(plans.get(), 0, &graw, &m, &pass) != ORDEG_OK) return fail_input("search --realize");
    GraphPtr g(graw);

    char* text = nullptr;
    size_t len = 0;
    if (ordeg_emit_edge_list(g.get(), &text, &len) != ORDEG_OK) return fail_input("search --realize");
    if (!out_path.empty()) {
        std::FILE* f = std::fopen(out_path.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "ordeg: cannot write '%s'\n", out_path.c_str());
            ordeg_string_free(text);
            return 2;
        }
        std::fwrite(text, 1, len, f);
        std::fclose(f);
    } else {
        std::fwrite(text, 1, len, stdout);
        std::fflush(stdout);
    }
    ordeg_string_free(text);

    std::fprintf(stderr, "realized: order=%llu degree=%u..%u diameter=", (ull)m.order, m.min_degree, m.max_degree);
    if (m.has_diameter)
        std::fprintf(stderr, "%u", m.diameter);
    else
        std::fprintf(stderr, "-");
    if (m.has_aspl)
        std::fprintf(stderr, " aspl=%s (%s)", reduced_fraction(m.aspl_num, m.aspl_den).c_str(),
                     decimal6(m.aspl_num, m.aspl_den).c_str());
    std::fprintf(stderr, "\ncertify: %s\n", pass ? "pass" : "FAIL");
    return pass ? 0 : 1;
}

// ---- table ------------------------------------------------------------------

int cmd_table(std::uint64_t max_degree, std::uint64_t diam) {
    if (diam != 2) {
        std::fprintf(stderr, "ordeg: table: only --diameter 2 is supported\n");
        return 2;
    }
    if (max_degree < 2) {
        std::fprintf(stderr, "ordeg: table: --max-degree must be at least 2\n");
        return 2;
    }
    std::vector<ordeg_table_row> rows(max_degree - 1);
    std::size_t count = 0;
    if (ordeg_best_order_table(max_degree, rows.data(), &count) != ORDEG_OK) return fail_input("table");
    std::printf("degree,order,family,params,moore_bound,moore_ratio_pct\n");
    for (std::size_t i = 0; i < count; ++i)
        std::printf("%llu,%llu,%s,%s,%s,%s\n", (ull)rows[i].degree, (ull)rows[i].order, rows[i].family,
                    rows[i].params, rows[i].moore, rows[i].moore_ratio_pct);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and certification of low-diameter graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
    std::vector<std::string> gen_tokens;
    std::string gen_out;
    GenRequest gen_flags;
    bool gen_full = false;
    gen->add_option("tokens", gen_tokens, "family and parameters (prefix with 'dup' to duplicate)")->required();
    gen->add_option("--out", gen_out, "write edge list to FILE (report then goes to stdout)");
    gen->add_option("--target", gen_flags.target, "dup: vertex to copy, or 'auto' (lowest-id minimum degree)");
    gen->add_option("--delta", gen_flags.delta, "dup: number of copies");
    gen->add_flag("--clique", gen_flags.clique, "dup: join target and copies pairwise");
    gen->add_flag("--full", gen_full, "compute diameter/girth/aspl regardless of size");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "compute metrics of an edge list");
    std::string an_path = "-", an_name;
    std::int64_t an_order = -1;
    bool an_csv = false;
    analyze->add_option("file", an_path, "edge list file, or - for stdin");
    analyze->add_option("--name", an_name, "name column value (default: file basename)");
    analyze->add_option("--order", an_order, "explicit vertex count (for isolated tail vertices)");
    analyze->add_flag("--csv", an_csv, "emit one CSV row with the fixed header");

    // verify
    auto* verify = app.add_subcommand("verify", "check an edge list against expected parameters");
    std::string vf_path = "-";
    std::optional<std::uint64_t> vf_order, vf_degree, vf_diam;
    bool vf_regular = false;
    verify->add_option("file", vf_path, "edge list file, or - for stdin");
    verify->add_option("--order", vf_order, "expected vertex count");
    verify->add_option("--degree", vf_degree, "expected max degree");
    verify->add_option("--diameter", vf_diam, "expected diameter");
    verify->add_flag("--regular", vf_regular, "require a regular graph");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "print order bounds for a degree/diameter pair");
    std::uint64_t bd_degree = 0, bd_diam = 0;
    bounds->add_option("--degree", bd_degree, "max degree")->required();
    bounds->add_option("--diameter", bd_diam, "diameter")->required();

    // search
    auto* search = app.add_subcommand("search", "rank constructions hitting an order within a degree budget");
    std::uint64_t se_order = 0, se_degree = 0;
    bool se_realize = false;
    std::string se_out;
    search->add_option("--order", se_order, "target order")->required();
    search->add_option("--degree", se_degree, "degree budget")->required();
    search->add_flag("--realize", se_realize, "build the top plan, certify it, and emit its edge list");
    search->add_option("--out", se_out, "write the realized edge list to FILE");

    // table
    auto* table = app.add_subcommand("table", "CSV of best achievable order per degree");
    std::uint64_t tb_max = 0, tb_diam = 2;
    table->add_option("--max-degree", tb_max, "largest degree row")->required();
    table->add_option("--diameter", tb_diam, "target diameter (only 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    }

    if (gen->parsed()) return cmd_gen(gen_tokens, gen_out, gen_flags, gen_full);
    if (analyze->parsed()) return cmd_analyze(an_path, an_name, an_order, an_csv);
    if (verify->parsed()) return cmd_verify(vf_path, vf_order, vf_degree, vf_diam, vf_regular);
    if (bounds->parsed()) return cmd_bounds(bd_degree, bd_diam);
    if (search->parsed()) return cmd_search(se_order, se_degree, se_realize, se_out);
    if (table->parsed()) return cmd_table(tb_max, tb_diam);
    return 2;
}
