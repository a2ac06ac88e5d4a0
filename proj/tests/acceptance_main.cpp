// Runs the acceptance suite and prints one verdict line per criterion.
// Exit status 0 iff every criterion passed.

#include <iostream>

#include "criteria.hpp"

int main() { return esl::verify::run_acceptance(std::cout) == 0 ? 0 : 1; }
