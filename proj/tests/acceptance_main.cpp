// Acceptance suite: runs every verification check and prints one
// pass/fail line per criterion.  Exit code is the number of failures.

#include "cbdiv/reproduce.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    int failures = cbdiv::run_verification(std::cout, filter);
    if (failures)
        std::cout << failures << " check(s) failed\n";
    else
        std::cout << "all checks passed\n";
    return failures;
}
