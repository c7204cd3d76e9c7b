/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/reference.hpp"

#include <sstream>

namespace thetacut {

namespace {

GenSpec torus_spec(int d) {
    GenSpec s;
    s.family = Family::torus;
    s.d = d;
    return s;
}
GenSpec queen_spec(int d) {
    GenSpec s;
    s.family = Family::queen;
    s.d = d;
    return s;
}
GenSpec myciel_spec(int levels) {
    GenSpec s;
    s.family = Family::mycielski;
    s.levels = levels;
    return s;
}
GenSpec er_spec(int n, double p) {
    GenSpec s;
    s.family = Family::erdos_renyi;
    s.n = n;
    s.p = p;
    return s;
}
GenSpec reg_spec(int n, int r) {
    GenSpec s;
    s.family = Family::near_regular;
    s.n = n;
    s.r = r;
    return s;
}

std::vector<ReferenceRecord> build_records() {
    std::vector<ReferenceRecord> recs;
    auto stable = [&](std::string name, int table, int n, int m, double alo, double ahi,
                      double th, double b1, int t1, double b2, int t2, double gr,
                      int grt, RefSource src, GenSpec gen) {
        recs.push_back({std::move(name), table, Problem::stable, n, m, alo, ahi, th, b1,
                        t1, b2, t2, gr, grt, src, gen});
    };
    auto coloring = [&](std::string name, int table, int n, int m, double chi, double th,
                        double b1, int t1, double b2, int t2, double gr, int grt,
                        RefSource src, GenSpec gen) {
        recs.push_back({std::move(name), table, Problem::coloring, n, m, chi, chi, th,
                        b1, t1, b2, t2, gr, grt, src, gen});
    };

    // near-regular graphs (stable set); alpha column is a lower bound
    stable("reg_n100_r4", 1, 100, 195, 40, 40, 43.449, 41.246, 17, 40.713, 41, 40.687, 1164,
           RefSource::random_property, reg_spec(100, 4));
    stable("reg_n100_r6", 1, 100, 294, 34, 34, 37.815, 36.224, 7, 35.047, 32, 35.246, 1062,
           RefSource::random_property, reg_spec(100, 6));
    stable("reg_n100_r8", 1, 100, 377, 31, 31, 34.480, 33.337, 4, 32.063, 21, 32.190, 1067,
           RefSource::random_property, reg_spec(100, 8));
    stable("reg_n200_r4", 1, 200, 400, 80, 80, 87.759, 83.498, 111, 82.246, 260, 83.772, 1437,
           RefSource::random_property, reg_spec(200, 4));
    stable("reg_n200_r6", 1, 200, 593, 68, 68, 79.276, 76.047, 25, 73.709, 229, 75.555, 1523,
           RefSource::random_property, reg_spec(200, 6));
    stable("reg_n200_r8", 1, 200, 792, 60, 60, 70.790, 69.110, 11, 66.789, 78, 67.785, 1944,
           RefSource::random_property, reg_spec(200, 8));
    stable("reg_n200_r10", 1, 200, 980, 57, 57, 66.418, 65.142, 6, 62.695, 75, 62.894, 2556,
           RefSource::random_property, reg_spec(200, 10));

    // Erdos-Renyi graphs (stable set)
    stable("rand_n100_p004", 2, 100, 212, 45, 45, 46.067, 45.032, 22, 45.032, 1, 45.021, 432,
           RefSource::random_property, er_spec(100, 0.04));
    stable("rand_n100_p006", 2, 100, 303, 38, 38, 40.361, 38.909, 13, 38.435, 20, 38.439, 887,
           RefSource::random_property, er_spec(100, 0.06));
    stable("rand_n100_p008", 2, 100, 443, 32, 32, 34.847, 33.575, 5, 32.433, 23, 32.579, 1262,
           RefSource::random_property, er_spec(100, 0.08));
    stable("rand_n100_p010", 2, 100, 489, 32, 32, 34.020, 32.934, 5, 32.151, 17, 32.191, 1138,
           RefSource::random_property, er_spec(100, 0.10));
    stable("rand_n200_p002", 2, 200, 407, 95, 95, 95.778, 95.044, 222, 95.044, 1, 95.032, 836,
           RefSource::random_property, er_spec(200, 0.02));
    stable("rand_n200_p003", 2, 200, 631, 80, 80, 83.662, 81.560, 39, 81.079, 52, 81.224, 1867,
           RefSource::random_property, er_spec(200, 0.03));
    stable("rand_n200_p004", 2, 200, 816, 67, 67, 73.908, 71.654, 17, 69.818, 96, 70.839, 2227,
           RefSource::random_property, er_spec(200, 0.04));
    stable("rand_n200_p005", 2, 200, 991, 62, 62, 69.039, 67.313, 19, 65.544, 70, 66.091, 2411,
           RefSource::random_property, er_spec(200, 0.05));

    // torus graphs (stable set)
    stable("torus_5", 3, 25, 50, 10, 10, 11.180, 10.000, 1, 10.000, 1, 10.002, 33,
           RefSource::generator, torus_spec(5));
    stable("torus_7", 3, 49, 98, 21, 21, 23.224, 21.000, 2, 21.000, 1, 21.009, 127,
           RefSource::generator, torus_spec(7));
    stable("torus_9", 3, 81, 162, 36, 36, 39.241, 36.000, 24, 36.000, 7, 36.021, 344,
           RefSource::generator, torus_spec(9));
    stable("torus_11", 3, 121, 242, 55, 55, 59.249, 55.022, 81, 55.019, 19, 55.066, 851,
           RefSource::generator, torus_spec(11));
    stable("torus_13", 3, 169, 338, 78, 78, 83.254, 78.379, 337, 78.048, 129, 79.084, 1031,
           RefSource::generator, torus_spec(13));
    stable("torus_15", 3, 225, 450, 105, 105, 111.257, 108.208, 1517, 105.214, 504, 106.287,
           1615, RefSource::generator, torus_spec(15));

    // DIMACS instances and spin graphs (stable set); no GR column published
    stable("spin5", 4, 125, 375, 50, 50, 55.902, 50.000, 17, 50.000, 6, -1, -1,
           RefSource::file_only, {});
    stable("spin7", 4, 343, 1029, 147, 151, 162.566, 147.000, 1225, 147.000, 639, -1, -1,
           RefSource::file_only, {});
    stable("MANN_a9", 4, 45, 72, 16, 16, 17.475, 17.220, 2, 17.220, 1, -1, -1,
           RefSource::file_only, {});
    stable("MANN_a27", 4, 378, 702, 126, 126, 132.763, 131.709, 781, 131.112, 874, -1, -1,
           RefSource::file_only, {});
    stable("C125.9", 4, 125, 787, 34, 34, 37.805, 36.920, 4, 35.568, 32, -1, -1,
           RefSource::file_only, {});
    stable("C250.9", 4, 250, 3141, 44, 44, 56.241, 55.771, 18, 54.899, 479, -1, -1,
           RefSource::file_only, {});
    stable("sanr200_0_9", 4, 200, 2037, 42, 42, 49.274, 48.723, 11, 47.472, 229, -1, -1,
           RefSource::file_only, {});

    // evil instances (stable set)
    stable("evil-N120-p98-chv12x10", 5, 120, 545, 20, 20, 24.526, 24.526, 1, 20.000, 2,
           -1, -1, RefSource::file_only, {});
    stable("evil-N120-p98-myc5x24", 5, 120, 236, 48, 48, 52.607, 48.000, 22, 48.000, 16,
           -1, -1, RefSource::file_only, {});
    stable("evil-N121-p98-myc11x11", 5, 121, 508, 22, 22, 26.397, 26.397, 1, 22.000, 1,
           -1, -1, RefSource::file_only, {});
    stable("evil-N125-p98-s3m25x5", 5, 125, 873, 20, 20, 25.000, 22.361, 1, 22.361, 5,
           -1, -1, RefSource::file_only, {});
    stable("evil-N138-p98-myc23x6", 5, 138, 1242, 12, 12, 15.177, 15.177, 1, 15.177, 3,
           -1, -1, RefSource::file_only, {});
    stable("evil-N150-p98-myc5x30", 5, 150, 338, 60, 60, 65.121, 60.000, 32, 60.000, 43,
           -1, -1, RefSource::file_only, {});
    stable("evil-N150-p98-s3m25x6", 5, 150, 1102, 24, 24, 30.000, 26.833, 2, 26.833, 8,
           -1, -1, RefSource::file_only, {});
    stable("evil-N154-p98-myc11x14", 5, 154, 701, 28, 28, 33.596, 33.596, 1, 28.000, 2,
           -1, -1, RefSource::file_only, {});
    stable("evil-N180-p98-chv12x15", 5, 180, 944, 30, 30, 36.788, 36.788, 1, 30.000, 5,
           -1, -1, RefSource::file_only, {});
    stable("evil-N184-p98-myc23x8", 5, 184, 1764, 16, 16, 20.235, 20.235, 2, 20.235, 7,
           -1, -1, RefSource::file_only, {});

    // coloring instances compared against GR
    coloring("myciel5", 6, 47, 236, 6, 2.639, 3.093, 3, 3.468, 17, 3.510, 4240,
             RefSource::generator, myciel_spec(3));
    coloring("myciel6", 6, 95, 755, 7, 2.734, 3.253, 21, 3.622, 406, 3.534, 1540,
             RefSource::generator, myciel_spec(4));
    coloring("mug88_1", 6, 88, 146, 4, 3.000, 3.001, 3, 3.001, 1, 3.022, 4709,
             RefSource::file_only, {});
    coloring("1_FullIns_4", 6, 93, 593, 5, 3.124, 3.487, 3, 3.837, 23, 3.939, 7220,
             RefSource::file_only, {});
    coloring("2_FullIns_4", 6, 212, 1621, 6, 4.056, 4.343, 4, 4.670, 17, 4.700, 10106,
             RefSource::file_only, {});

    // further coloring instances from the literature
    coloring("dsjc125.1", 7, 125, 736, 5, 4.106, 4.218, 2, 4.430, 14, -1, -1,
             RefSource::file_only, {});
    coloring("dsjc250.1", 7, 250, 3218, 8, 4.906, 4.939, 12, 5.040, 457, -1, -1,
             RefSource::file_only, {});
    coloring("3_FullIns_3", 7, 80, 346, 6, 5.016, 5.194, 1, 5.194, 1, -1, -1,
             RefSource::file_only, {});
    coloring("4_FullIns_3", 7, 114, 541, 7, 6.010, 6.010, 1, 6.309, 1, -1, -1,
             RefSource::file_only, {});
    coloring("5_FullIns_3", 7, 154, 792, 8, 7.007, 7.007, 1, 7.267, 2, -1, -1,
             RefSource::file_only, {});
    coloring("Queen_8_8", 7, 64, 728, 9, 8.000, 8.000, 1, 8.000, 7, -1, -1,
             RefSource::generator, queen_spec(8));
    coloring("Queen_9_9", 7, 81, 1056, 10, 9.000, 9.000, 1, 9.000, 25, -1, -1,
             RefSource::generator, queen_spec(9));
    coloring("Queen_10_10", 7, 100, 1470, 11, 10.000, 10.000, 1, 10.000, 62, -1, -1,
             RefSource::generator, queen_spec(10));
    // G<n>_<..> rows are G(n,p) random graphs with unknown chi and seed
    recs.push_back({"G100_25", 7, Problem::coloring, 100, 1240, -1, -1, 5.823, 5.867, 2,
                    6.235, 76, -1, -1, RefSource::random_property, er_spec(100, 0.25)});
    recs.push_back({"G150_25", 7, Problem::coloring, 150, 2802, -1, -1, 6.864, 6.918, 6,
                    7.184, 529, -1, -1, RefSource::random_property, er_spec(150, 0.25)});
    recs.push_back({"G200_1", 7, Problem::coloring, 200, 2047, -1, -1, 4.447, 4.473, 10,
                    4.600, 178, -1, -1, RefSource::random_property, er_spec(200, 0.10)});
    recs.push_back({"G250_1", 7, Problem::coloring, 250, 3149, -1, -1, 4.805, 4.831, 12,
                    4.928, 512, -1, -1, RefSource::random_property, er_spec(250, 0.10)});
    return recs;
}

} // namespace

const std::vector<ReferenceRecord>& reference_records() {
    static const std::vector<ReferenceRecord> records = build_records();
    return records;
}

std::vector<ReferenceRecord> reference_table(int table) {
    std::vector<ReferenceRecord> out;
    for (const auto& r : reference_records())
        if (r.table == table) out.push_back(r);
    return out;
}

const ReferenceRecord* find_reference(const std::string& name) {
    for (const auto& r : reference_records())
        if (r.name == name) return &r;
    return nullptr;
}

std::uint64_t reference_checksum() {
    std::ostringstream s;
    for (const auto& r : reference_records()) {
        s << r.name << '|' << r.table << '|' << (r.problem == Problem::stable ? 'S' : 'C')
          << '|' << r.n << '|' << r.m << '|' << r.known_lo << '|' << r.known_hi << '|'
          << r.theta << '|' << r.bound1 << '|' << r.time1 << '|' << r.bound2 << '|'
          << r.time2 << '|' << r.gr << '|' << r.gr_time << '\n';
    }
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace thetacut
