#pragma once

#include <string>

#include "rtcycles/cycles.hpp"
#include "rtcycles/oracles.hpp"
#include "rtcycles/search.hpp"

namespace rtc {

// with_timing == false omits elapsed time so identical runs emit identical
// bytes.
std::string search_report_json(const SearchReport& rep, bool with_timing);

std::string oracle_report_json(const OracleReport& rep);

// {"spectrum":[...],"ec":E,"oc":O}
std::string spectrum_json(const CycleSpectrum& sp);

}  // namespace rtc
