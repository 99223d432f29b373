#include "stokes/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    int failed = 0;
    stokes::run_acceptance(only, [&](const stokes::CriterionResult& r) {
        std::cout << r.line() << std::endl;
        if (!r.pass()) ++failed;
    });
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failed ? 1 : 0;
}
