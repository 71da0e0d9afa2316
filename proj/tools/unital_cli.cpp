// Command-line front end: enumerate N-unital functions, verify the computed
// sets against the embedded reference tables, and probe the value-set
// conjecture.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unital/enumerate.hpp"
#include "unital/json_io.hpp"
#include "unital/orbits.hpp"
#include "unital/values.hpp"
#include "unital/verify.hpp"

namespace {

struct Options {
    int n = 0;
    std::string format = "text";
    int jobs = 1;
    int cap = 6;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n", opt.n, "order N")->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--jobs", opt.jobs, "worker threads for the enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", opt.cap, "largest order accepted")->capture_default_str();
}

// Returns false (usage error) when n is out of range; larger orders get a
// cost estimate up front since the scan grows quickly.
bool validate_order(const Options& opt) {
    if (opt.n < 1 || opt.n > opt.cap) {
        std::fprintf(stderr, "error: --n must be between 1 and %d (see --cap)\n", opt.cap);
        return false;
    }
    if (opt.n >= 5) {
        std::fprintf(stderr, "note: order %d scans %lld candidate triples; this can take a while\n",
                     opt.n, unital::candidate_triple_count(opt.n));
    }
    return true;
}

int cmd_enumerate(const Options& opt) {
    if (!validate_order(opt)) return 2;
    const auto fns = unital::enumerate_unital(opt.n, opt.jobs);
    for (const auto& f : fns) {
        if (opt.format == "json")
            std::printf("%s\n", unital::to_json(f).c_str());
        else
            std::printf("%s\n", f.to_text().c_str());
    }
    return 0;
}

int cmd_values(const Options& opt) {
    if (!validate_order(opt)) return 2;
    const auto vals = unital::value_set(opt.n, opt.jobs);
    if (opt.format == "json") {
        std::printf("{\"n\":%d,\"count\":%zu,\"values\":%s}\n", opt.n, vals.size(),
                    unital::to_json(vals).c_str());
    } else {
        for (const auto& v : vals) std::printf("%s\n", v.to_string().c_str());
    }
    return 0;
}

int cmd_orbits(const Options& opt) {
    if (!validate_order(opt)) return 2;
    const auto orbits = unital::orbit_decompose(unital::enumerate_unital(opt.n, opt.jobs));
    if (opt.format == "json") {
        std::string out = "{\"n\":" + std::to_string(opt.n) + ",\"orbits\":[";
        for (size_t i = 0; i < orbits.size(); ++i) {
            if (i) out += ",";
            out += unital::to_json(orbits[i]);
        }
        out += "]}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("%zu orbits under sextet, scaling and Galois maps\n", orbits.size());
        for (size_t i = 0; i < orbits.size(); ++i)
            std::printf("orbit %zu: size %zu, generator %s\n", i + 1, orbits[i].size,
                        orbits[i].generator.to_text().c_str());
    }
    return 0;
}

int cmd_conjecture(const Options& opt) {
    if (!validate_order(opt)) return 2;
    const auto rep = unital::conjecture_report(opt.n, opt.jobs);
    if (opt.format == "json") {
        std::printf("%s\n", unital::to_json(rep).c_str());
        return 0;
    }
    std::printf("order %d: computed #C^%d = %zu, predicted set has %zu values\n", rep.order, rep.order,
                rep.cardinality, rep.conjectured.size());
    std::printf("match: %s\n", rep.match ? "yes" : "no");
    std::printf("cardinality bound %zu: %s\n", rep.bound, rep.bound_holds ? "holds" : "VIOLATED");
    if (!rep.note.empty()) std::printf("note: %s\n", rep.note.c_str());
    if (!rep.match) {
        std::printf("the closed-form prediction is conjectural and is NOT asserted; "
                    "the computed set is authoritative\n");
        std::printf("computed values:\n");
        for (const auto& v : rep.computed) std::printf("  %s\n", v.to_string().c_str());
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    if (opt.n < 1 || opt.n > 4) {
        std::fprintf(stderr, "error: verify supports --n 1..4 (reference data)\n");
        return 2;
    }
    const auto rep = unital::verify_order(opt.n, opt.jobs);
    if (opt.format == "json") {
        std::string out = "{\"n\":" + std::to_string(rep.order);
        out += ",\"computed_count\":" + std::to_string(rep.computed_count);
        out += ",\"expected_count\":" + std::to_string(rep.expected_count);
        out += ",\"count_match\":" + std::string(rep.count_match ? "true" : "false");
        out += ",\"value_set_checked\":" + std::string(rep.value_set_checked ? "true" : "false");
        out += ",\"value_set_match\":" + std::string(rep.value_set_match ? "true" : "false");
        out += ",\"table_entries\":" + std::to_string(rep.table_entries);
        out += ",\"table_distinct\":" + std::to_string(rep.table_distinct);
        out += ",\"table_warnings\":" + std::to_string(rep.table_warnings.size() +
                                                       rep.listed_not_computed.size() +
                                                       rep.computed_not_listed.size());
        out += ",\"ok\":" + std::string(rep.ok() ? "true" : "false") + "}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("count: computed %zu, expected %zu -> %s\n", rep.computed_count, rep.expected_count,
                    rep.count_match ? "match" : "MISMATCH");
        if (rep.value_set_checked)
            std::printf("value set C^%d: %s\n", rep.order, rep.value_set_match ? "match" : "MISMATCH");
        for (const auto& v : rep.values_missing) std::printf("  value missing from computed set: %s\n", v.c_str());
        for (const auto& v : rep.values_extra) std::printf("  value not in reference set: %s\n", v.c_str());
        std::printf("reference table: %zu entries printed, %zu distinct\n", rep.table_entries,
                    rep.table_distinct);
        for (const auto& w : rep.table_warnings) std::printf("warning: %s\n", w.c_str());
        for (const auto& w : rep.listed_not_computed)
            std::printf("warning: listed but not a computed member: %s\n", w.c_str());
        for (const auto& w : rep.computed_not_listed)
            std::printf("warning: computed member absent from the table: %s\n", w.c_str());
        std::printf("verify: %s\n", rep.ok() ? "OK" : "FAILED");
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of N-unital rational functions"};
    app.require_subcommand(1);

    Options opt;
    auto* enumerate = app.add_subcommand("enumerate", "list all of U_N in canonical order");
    add_common(enumerate, opt);
    auto* verify = app.add_subcommand("verify", "check the computed sets against the reference tables");
    add_common(verify, opt);
    auto* values = app.add_subcommand("values", "print the value set C^N = {U(0)}");
    add_common(values, opt);
    auto* orbits = app.add_subcommand("orbits", "orbit decomposition under the symmetry group");
    add_common(orbits, opt);
    auto* conjecture = app.add_subcommand("conjecture", "compare C^N with its conjectured closed form");
    add_common(conjecture, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (values->parsed()) return cmd_values(opt);
        if (orbits->parsed()) return cmd_orbits(opt);
        if (conjecture->parsed()) return cmd_conjecture(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
