#include "rtcycles/report_json.hpp"

#include <json.hpp>

#include "rtcycles/graph_io.hpp"

namespace rtc {

using json = nlohmann::ordered_json;

std::string search_report_json(const SearchReport& rep, bool with_timing) {
    json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["n"] = rep.n;
    if (!rep.sampled) {
        j["range"] = rep.range.empty() ? json::array() : json::array({rep.range.lo, rep.range.hi});
        j["uniform_color"] = rep.uniform_color;
        j["include_boundary"] = rep.include_boundary;
        j["pruned"] = rep.pruned;
        j["hosts_examined"] = rep.hosts_examined;
        j["colorings_examined"] = rep.colorings_examined;
        j["colorings_covered"] = rep.colorings_covered;
    } else {
        j["sampled"] = true;
        j["exhaustive"] = false;
        j["threshold"] = rep.threshold;
        j["vacuous_threshold"] = rep.vacuous_threshold;
        j["boundary_hosts"] = rep.boundary_hosts;
        j["hosts_examined"] = rep.hosts_examined;
        j["instances_checked"] = rep.instances_checked;
        j["violations"] = rep.violations;
        j["unknown_instances"] = rep.unknown_instances;
    }
    j["vacuous"] = rep.vacuous;
    j["jobs"] = rep.jobs;
    j["budget"] = rep.budget_cap;
    if (rep.witness) {
        json w;
        w["coloring"] = emit_coloring(rep.witness->coloring);
        if (rep.witness->coloring.host.order() <= 62)
            w["host_graph6"] = encode_graph6(rep.witness->coloring.host);
        w["missing"] = rep.witness->missing;
        w["missing_red"] = rep.witness->missing_red;
        w["missing_blue"] = rep.witness->missing_blue;
        j["witness"] = std::move(w);
    }
    if (!rep.frontier.empty()) {
        json f = json::array();
        for (const auto& [host_idx, bits] : rep.frontier)
            f.push_back(json::array({host_idx, bits}));
        j["frontier"] = std::move(f);
    }
    if (with_timing) j["elapsed_seconds"] = rep.elapsed_seconds;
    return j.dump();
}

std::string oracle_report_json(const OracleReport& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["pass"] = rep.pass();
    j["instances_checked"] = rep.instances_checked;
    j["exhaustive"] = rep.exhaustive;
    json v = json::array();
    for (const OracleViolation& viol : rep.violations)
        v.push_back({{"graph6", viol.graph6}, {"detail", viol.detail}});
    j["violations"] = std::move(v);
    json stats;
    for (const auto& [key, value] : rep.stats) stats[key] = value;
    j["stats"] = std::move(stats);
    return j.dump();
}

std::string spectrum_json(const CycleSpectrum& sp) {
    json j;
    j["spectrum"] = sp.lengths();
    j["ec"] = sp.ec();
    j["oc"] = sp.oc();
    return j.dump();
}

}  // namespace rtc
