#include <CLI11.hpp>

#include <iostream>

#include "verify.hpp"

int main(int argc, char** argv)
{
    using namespace strata::verify;
    CLI::App app{"Acceptance criteria: one PASS/FAIL line per criterion"};
    int criterion = 0;
    int gmax = -1;
    app.add_option("--criterion", criterion, "Run a single criterion")
        ->check(CLI::Range(1, criterion_count()));
    app.add_option("--gmax", gmax, "Cap the genus ranges");
    CLI11_PARSE(app, argc, argv);

    std::vector<int> ids;
    if (criterion > 0) {
        ids.push_back(criterion);
    } else {
        for (int id = 1; id <= criterion_count(); ++id)
            ids.push_back(id);
    }

    int failed = 0;
    for (int id : ids) {
        Criterion c = run_criterion(id, gmax);
        std::cout << format_line(c, true) << std::endl;
        if (!c.pass)
            ++failed;
    }
    std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
