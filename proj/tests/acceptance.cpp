// Acceptance gate: runs the ten catalog-wide verification suites and prints
// one pass/fail line per criterion. Exit code 0 iff every criterion passes.

#include <iostream>

#include "hopfstab/catalog.hpp"

int main() {
    std::vector<hopfstab::Report> reports = hopfstab::run_acceptance();
    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        bool pass = rep.all_pass();
        ok = ok && pass;
        std::cout << "criterion " << (i + 1) << " (" << rep.title << "): "
                  << (pass ? "pass" : "FAIL") << "\n";
        if (!pass) std::cout << rep.text();
    }
    return ok ? 0 : 1;
}
