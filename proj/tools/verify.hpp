#pragma once

#include <string>
#include <vector>

#include "strata/combinatorics.hpp"

namespace strata::verify {

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = false;
    // Failure that is analysed and expected; the literal anchor is kept as is.
    bool known_failure = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

// Canonical signatures of genus g with nmin <= n <= nmax; zeros allowed when
// with_zeros is set. Ordered by n, then lexicographically descending.
std::vector<Signature> signatures(int g, int nmin, int nmax, bool with_zeros);

int criterion_count();
// gmax < 0 keeps the full genus ranges; otherwise it caps them.
Criterion run_criterion(int id, int gmax = -1);

// "core" runs the exact identities 1..8, "all" runs 1..10.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<Criterion> run_suite(const std::string& suite, int gmax = -1);

// "PASS [3] title: detail" with " (1.23 s)" appended when timing is set.
std::string format_line(const Criterion& c, bool timing);

} // namespace strata::verify
