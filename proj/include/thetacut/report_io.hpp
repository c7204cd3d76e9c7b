/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_REPORT_IO_HPP
#define THETACUT_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "thetacut/cutloop.hpp"

namespace thetacut {

inline constexpr int kReportSchemaVersion = 1;

std::string report_to_json(const BoundReport& rep);

// throws std::runtime_error on schema mismatch or malformed input
BoundReport report_from_json(const std::string& text);

enum class TableFormat { text, csv, markdown };

// columns mirror the published layout: Graph, n, m, known value, theta,
// BOUND 1 (time), BOUND 2 (time)
std::string format_reports(const std::vector<BoundReport>& reports, TableFormat fmt);

} // namespace thetacut

#endif
