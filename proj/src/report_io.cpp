/* This file is part of thetacut, a cutting-plane strengthening of the
 * Lovász theta function for stable set and coloring bounds.
 *
 * Licensed under the Apache License, Version 2.0.
 */

#include "thetacut/report_io.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace thetacut {

using nlohmann::json;

namespace {

json iteration_to_json(const IterationRecord& r) {
    return json{{"phase", r.phase},
                {"iteration", r.iteration},
                {"objective", r.objective},
                {"status", status_name(r.status)},
                {"violations_found", r.violations_found},
                {"cuts_added", r.cuts_added},
                {"pool_size", r.pool_size},
                {"solve_seconds", r.solve_seconds}};
}

} // namespace

std::string report_to_json(const BoundReport& rep) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["graph"] = {{"name", rep.graph_name}, {"n", rep.n}, {"m", rep.m}};
    j["problem"] = rep.problem == Problem::stable ? "stable" : "coloring";
    j["theta"] = rep.theta;
    j["bound1"] = rep.bound1;
    j["bound2"] = rep.bound2;
    j["integer_bound"] = rep.integer_bound;
    j["complete"] = rep.complete;
    j["timed_out"] = rep.timed_out;
    if (!rep.failure.empty()) j["failure"] = rep.failure;
    j["timings"] = {{"theta_seconds", rep.theta_seconds},
                    {"phase1_seconds", rep.phase1_seconds},
                    {"phase2_seconds", rep.phase2_seconds}};
    j["config"] = {{"threshold", rep.threshold},
                   {"cap_factor", rep.cap_factor},
                   {"max_iters", rep.max_iters},
                   {"seed", rep.seed},
                   {"feastol", rep.feastol},
                   {"gaptol", rep.gaptol}};
    j["iterations"] = json::array();
    for (const auto& it : rep.iterations) j["iterations"].push_back(iteration_to_json(it));
    return j.dump(2);
}

BoundReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != kReportSchemaVersion)
        throw std::runtime_error("unsupported report schema version");
    BoundReport rep;
    rep.graph_name = j.at("graph").at("name").get<std::string>();
    rep.n = j.at("graph").at("n").get<int>();
    rep.m = j.at("graph").at("m").get<int>();
    rep.problem = j.at("problem").get<std::string>() == "coloring" ? Problem::coloring
                                                                   : Problem::stable;
    rep.theta = j.at("theta").get<double>();
    rep.bound1 = j.at("bound1").get<double>();
    rep.bound2 = j.at("bound2").get<double>();
    rep.integer_bound = j.at("integer_bound").get<long>();
    rep.complete = j.value("complete", false);
    rep.timed_out = j.value("timed_out", false);
    rep.failure = j.value("failure", std::string{});
    const auto& t = j.at("timings");
    rep.theta_seconds = t.at("theta_seconds").get<double>();
    rep.phase1_seconds = t.at("phase1_seconds").get<double>();
    rep.phase2_seconds = t.at("phase2_seconds").get<double>();
    const auto& c = j.at("config");
    rep.threshold = c.at("threshold").get<double>();
    rep.cap_factor = c.at("cap_factor").get<int>();
    rep.max_iters = c.at("max_iters").get<int>();
    rep.seed = c.at("seed").get<std::uint64_t>();
    rep.feastol = c.at("feastol").get<double>();
    rep.gaptol = c.at("gaptol").get<double>();
    for (const auto& ij : j.at("iterations")) {
        IterationRecord r;
        r.phase = ij.at("phase").get<int>();
        r.iteration = ij.at("iteration").get<int>();
        r.objective = ij.at("objective").get<double>();
        r.violations_found = ij.at("violations_found").get<std::size_t>();
        r.cuts_added = ij.at("cuts_added").get<std::map<std::string, int>>();
        r.pool_size = ij.at("pool_size").get<std::size_t>();
        r.solve_seconds = ij.at("solve_seconds").get<double>();
        const std::string st = ij.at("status").get<std::string>();
        if (st == "optimal") r.status = SolveStatus::optimal;
        else if (st == "near_optimal") r.status = SolveStatus::near_optimal;
        else if (st == "infeasible") r.status = SolveStatus::infeasible;
        else r.status = SolveStatus::numerical_failure;
        rep.iterations.push_back(std::move(r));
    }
    return rep;
}

std::string format_reports(const std::vector<BoundReport>& reports, TableFormat fmt) {
    std::vector<const BoundReport*> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const BoundReport* a, const BoundReport* b) {
        return a->graph_name < b->graph_name;
    });

    auto fixed3 = [](double v) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << v;
        return s.str();
    };
    auto secs = [](double v) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(1) << v;
        return s.str();
    };

    std::vector<std::array<std::string, 8>> cells;
    cells.push_back({"Graph", "n", "m", "problem", "theta", "BOUND 1 (time)",
                     "BOUND 2 (time)", "int"});
    for (const auto* r : rows) {
        cells.push_back({r->graph_name, std::to_string(r->n), std::to_string(r->m),
                         r->problem == Problem::stable ? "stable" : "coloring",
                         fixed3(r->theta), fixed3(r->bound1) + " (" + secs(r->phase1_seconds) + "s)",
                         fixed3(r->bound2) + " (" + secs(r->phase2_seconds) + "s)",
                         std::to_string(r->integer_bound)});
    }

    std::ostringstream out;
    if (fmt == TableFormat::csv) {
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << '\n';
        }
        return out.str();
    }

    std::array<std::size_t, 8> width{};
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    const bool md = fmt == TableFormat::markdown;
    for (std::size_t rix = 0; rix < cells.size(); ++rix) {
        const auto& row = cells[rix];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (md) out << "| ";
            out << std::left << std::setw(static_cast<int>(width[i])) << row[i] << ' ';
        }
        if (md) out << "|";
        out << '\n';
        if (md && rix == 0) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << "|" << std::string(width[i] + 2, '-');
            out << "|\n";
        }
    }
    return out.str();
}

} // namespace thetacut
