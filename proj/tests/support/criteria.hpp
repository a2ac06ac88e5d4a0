#pragma once

// The acceptance suite: one function per criterion, each returning a
// pass/fail verdict, a human-readable detail line, and a deterministic CSV
// payload used by the determinism criterion to byte-compare reruns.

#include <ostream>
#include <string>
#include <vector>

namespace esl::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double wall_ms = 0.0;
    std::string csv;  // deterministic payload (wall times zeroed)
};

CriterionResult run_criterion(int id);     // 1..11; exceptions become failures
std::vector<CriterionResult> run_all();    // all criteria in order

// prints one line per criterion plus a summary; returns the failure count
int run_acceptance(std::ostream& out);

}  // namespace esl::verify
