#include "expsumlab/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace esl {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string sweep_csv_header() {
    return "p,g,T,a,u,v,N,M,k,seed,observed,bound_total,ratio,nontrivial,wall_ms";
}

std::string sweep_csv_row(const SweepRecord& r, bool zero_wall) {
    std::string row;
    row += std::to_string(r.p);
    row += ',';
    row += std::to_string(r.g);
    row += ',';
    row += std::to_string(r.T);
    row += ',';
    row += std::to_string(r.a);
    row += ',';
    row += std::to_string(r.u);
    row += ',';
    row += std::to_string(r.v);
    row += ',';
    row += std::to_string(r.N);
    row += ',';
    row += std::to_string(r.M);
    row += ',';
    row += std::to_string(r.k);
    row += ',';
    row += std::to_string(r.seed);
    row += ',';
    row += format_double(r.observed);
    row += ',';
    row += format_double(r.bound_total);
    row += ',';
    row += format_double(r.ratio);
    row += ',';
    row += r.nontrivial ? '1' : '0';
    row += ',';
    row += format_double(zero_wall ? 0.0 : r.wall_ms);
    return row;
}

std::string sweep_json_row(const SweepRecord& r, bool zero_wall) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["g"] = r.g;
    j["T"] = r.T;
    j["a"] = r.a;
    j["u"] = r.u;
    j["v"] = r.v;
    j["N"] = r.N;
    j["M"] = r.M;
    j["k"] = r.k;
    j["seed"] = r.seed;
    j["observed"] = r.observed;
    j["bound_total"] = r.bound_total;
    j["ratio"] = r.ratio;
    j["nontrivial"] = r.nontrivial;
    j["wall_ms"] = zero_wall ? 0.0 : r.wall_ms;
    if (r.flagged) {
        j["flagged"] = true;
        j["note"] = r.note;
    }
    if (!r.extras.empty()) {
        nlohmann::ordered_json e;
        for (const auto& [name, value] : r.extras) e[name] = value;
        j["extras"] = e;
    }
    return j.dump();
}

}  // namespace esl
