#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "deltoid/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Runs acceptance criteria, one pass/fail line each."};
    int criterion = 0;
    std::uint64_t seed = 1;
    app.add_option("--criterion", criterion, "1..12; 0 runs all")->check(CLI::Range(0, deltoid::criterion_count));
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::vector<deltoid::CriterionResult> results;
    if (criterion == 0)
        results = deltoid::run_primary_suite(seed);
    else
        results.push_back(deltoid::run_criterion(criterion, seed));

    bool all = true;
    for (const auto& r : results) {
        for (const auto& m : r.metrics)
            std::printf("    %-4s %-45s %-14.6g %s\n", m.ok ? "ok" : "FAIL", m.name.c_str(), m.value, m.bound.c_str());
        if (!r.note.empty()) std::printf("    note: %s\n", r.note.c_str());
        std::printf("criterion %2d %s  %s (%.2f s)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
