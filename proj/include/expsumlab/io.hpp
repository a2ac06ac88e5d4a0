#pragma once

// Deterministic record serialization. CSV is the primary contract: fixed
// column order, floats at 9 significant digits, booleans as 1/0, so a fixed
// seed reproduces byte-identical output. JSON-lines is the verbose mirror.

#include <string>

#include "expsumlab/bounds.hpp"

namespace esl {

std::string format_double(double v);  // %.9g, "nan"/"inf" spelled by libc

// pinned sweep columns: p,g,T,a,u,v,N,M,k,seed,observed,bound_total,ratio,nontrivial,wall_ms
std::string sweep_csv_header();
// zero_wall replaces wall_ms with 0 so reruns compare byte-for-byte
std::string sweep_csv_row(const SweepRecord& r, bool zero_wall);
std::string sweep_json_row(const SweepRecord& r, bool zero_wall);

}  // namespace esl
