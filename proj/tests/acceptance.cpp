/**
 * Acceptance binary: one PASS/FAIL line per criterion; exit status 1 when
 * any criterion fails.
 */

#include <iostream>

#include "ljv/acceptance.hpp"

int main()
{
    bool all = true;
    ljv::run_acceptance({}, [&](const ljv::CriterionResult& r) {
        std::cout << ljv::format_result(r) << std::endl;
        all = all && r.pass;
    });
    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}
