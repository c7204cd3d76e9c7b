/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#ifndef THETACUT_REFERENCE_HPP
#define THETACUT_REFERENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetacut/exact.hpp" // Problem
#include "thetacut/generators.hpp"

namespace thetacut {

// How a benchmark row can be reproduced on this side: exactly (deterministic
// generators), by property only (random instances whose original seed is
// unknown), or from a user-supplied DIMACS file.
enum class RefSource { generator, random_property, file_only };

/// One row of the published benchmark tables.
struct ReferenceRecord {
    std::string name;
    int table = 0; // 1..7
    Problem problem = Problem::stable;
    int n = 0;
    int m = 0;
    // known alpha (stable) or chi (coloring); lo == hi when exact, lo < 0 if unknown
    double known_lo = -1.0;
    double known_hi = -1.0;
    double theta = 0.0;
    double bound1 = 0.0;
    int time1 = 0;
    double bound2 = 0.0;
    int time2 = 0;
    double gr = -1.0; // comparison bound where published, else -1
    int gr_time = -1;
    RefSource source = RefSource::file_only;
    GenSpec gen; // filled for generator / random_property rows
};

const std::vector<ReferenceRecord>& reference_records();
std::vector<ReferenceRecord> reference_table(int table);
const ReferenceRecord* find_reference(const std::string& name);

// FNV-1a over the canonical serialization of all records; pinned by a test
// so accidental edits of the embedded data are caught.
std::uint64_t reference_checksum();

} // namespace thetacut

#endif
