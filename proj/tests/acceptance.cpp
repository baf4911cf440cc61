// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The suite itself lives in tools/acceptance_suite.cpp so the CLI's
// `corpus` subcommand runs the identical checks.

#include <iostream>

#include "../tools/acceptance_suite.hpp"

int main() { return cbg::run_acceptance_suite(std::cout) == 0 ? 0 : 1; }
