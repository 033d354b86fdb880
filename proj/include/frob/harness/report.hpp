#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frob/errors.hpp"
#include "frob/harness/claims.hpp"
#include "frob/harness/grid.hpp"

namespace frob::harness {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Status { Verified, Refuted, Skipped };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Refuted: return "refuted";
        case Status::Skipped: return "skipped";
    }
    return "skipped";
}

struct ClaimResult {
    std::string claim;
    Instance params;
    std::optional<std::string> branch;
    Status status = Status::Skipped;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::optional<std::string> reason;
};

struct ClaimSummary {
    std::size_t verified = 0;
    std::size_t refuted = 0;
    std::size_t skipped = 0;
    std::optional<ClaimResult> first_refutation;
};

struct Report {
    std::string version{kToolVersion};
    nlohmann::ordered_json grid = nlohmann::ordered_json::object();
    std::vector<ClaimResult> results;
    std::map<std::string, ClaimSummary> summary;
};

/// Evaluates both sides exactly. Exclusions and parameter preconditions
/// raised by the evaluators yield SKIPPED; other failures propagate.
inline ClaimResult run_claim(const Claim& claim, const Instance& params, Workspace& ws) {
    ClaimResult r;
    r.claim = claim.id;
    r.params = params;
    if (claim.branch) r.branch = claim.branch(params);
    if (claim.exclusion) {
        if (auto why = claim.exclusion(params)) {
            r.reason = std::move(why);
            return r;
        }
    }
    try {
        const Value lhs = claim.lhs(params, ws);
        const Value rhs = claim.rhs(params, ws);
        r.lhs = to_string(lhs);
        r.rhs = to_string(rhs);
        r.status = lhs == rhs ? Status::Verified : Status::Refuted;
    } catch (const InvalidParameter& e) {
        r.reason = e.what();
    } catch (const NonInvertibleDenominator& e) {
        r.reason = e.what();
    }
    return r;
}

inline ClaimResult run_claim(const Claim& claim, const Instance& params) {
    Workspace ws;
    return run_claim(claim, params, ws);
}

namespace detail {

inline nlohmann::ordered_json to_json(const ParamValue& v) {
    if (const auto* i = std::get_if<long>(&v)) return *i;
    if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
    return std::get<std::vector<long>>(v);
}

inline nlohmann::ordered_json to_json(const Instance& in) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : in.params()) o[k] = to_json(v);
    return o;
}

inline nlohmann::ordered_json nullable(const std::optional<std::string>& s) {
    return s ? nlohmann::ordered_json(*s) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json to_json(const ClaimResult& r) {
    nlohmann::ordered_json o;
    o["claim"] = r.claim;
    o["params"] = to_json(r.params);
    o["branch"] = nullable(r.branch);
    o["status"] = std::string(to_string(r.status));
    o["lhs"] = nullable(r.lhs);
    o["rhs"] = nullable(r.rhs);
    o["reason"] = nullable(r.reason);
    return o;
}

inline std::string params_text(const Instance& in) {
    std::string s;
    for (const auto& [k, v] : in.params()) {
        if (!s.empty()) s += ", ";
        s += k + "=" + to_json(v).dump();
    }
    return s;
}

}  // namespace detail

inline nlohmann::ordered_json grid_to_json(const Grid& g) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : g.integers) o[k] = v;
    for (const auto& [k, v] : g.rationals) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : v) arr.push_back(r.to_string());
        o[k] = arr;
    }
    return o;
}

/// Orders results by (claim id, params) and recomputes the per-claim summary.
inline void finalize(Report& report, const std::vector<std::string>& claim_ids) {
    std::stable_sort(report.results.begin(), report.results.end(), [](const ClaimResult& a, const ClaimResult& b) {
        if (a.claim != b.claim) return a.claim < b.claim;
        return a.params < b.params;
    });
    report.summary.clear();
    for (const auto& id : claim_ids) report.summary[id];
    for (const auto& r : report.results) {
        auto& s = report.summary[r.claim];
        switch (r.status) {
            case Status::Verified: ++s.verified; break;
            case Status::Skipped: ++s.skipped; break;
            case Status::Refuted:
                ++s.refuted;
                if (!s.first_refutation) s.first_refutation = r;
                break;
        }
    }
}

/// Runs every claim over its slice of the grid.
inline Report sweep(const std::vector<Claim>& claims, const Grid& grid) {
    Report report;
    report.grid = grid_to_json(grid);
    Workspace ws;
    std::vector<std::string> ids;
    for (const auto& claim : claims) {
        ids.push_back(claim.id);
        for (const auto& inst : claim.enumerate(grid)) report.results.push_back(run_claim(claim, inst, ws));
    }
    finalize(report, ids);
    return report;
}

inline nlohmann::ordered_json report_to_json(const Report& report) {
    nlohmann::ordered_json o;
    o["version"] = report.version;
    o["grid"] = report.grid;
    o["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) o["results"].push_back(detail::to_json(r));
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [id, s] : report.summary) {
        nlohmann::ordered_json e;
        e["verified"] = s.verified;
        e["refuted"] = s.refuted;
        e["skipped"] = s.skipped;
        e["first_refutation"] = s.first_refutation ? detail::to_json(*s.first_refutation) : nlohmann::ordered_json(nullptr);
        summary[id] = e;
    }
    o["summary"] = summary;
    return o;
}

inline std::string render_markdown(const Report& report) {
    std::ostringstream os;
    auto cell = [](const std::optional<std::string>& s) { return s ? *s : std::string("-"); };
    os << "# Verification report\n\n";
    os << "Version: " << report.version << "\n\n";
    os << "Grid: `" << report.grid.dump() << "`\n\n";
    os << "## Summary\n\n| claim | verified | refuted | skipped | first refutation |\n|---|---|---|---|---|\n";
    for (const auto& [id, s] : report.summary) {
        os << "| " << id << " | " << s.verified << " | " << s.refuted << " | " << s.skipped << " | ";
        if (s.first_refutation) {
            os << detail::params_text(s.first_refutation->params) << ": " << cell(s.first_refutation->lhs)
               << " vs " << cell(s.first_refutation->rhs);
        } else {
            os << "-";
        }
        os << " |\n";
    }
    os << "\n## Results\n\n| claim | params | branch | status | lhs | rhs | reason |\n|---|---|---|---|---|---|---|\n";
    for (const auto& r : report.results) {
        os << "| " << r.claim << " | " << detail::params_text(r.params) << " | " << cell(r.branch) << " | "
           << to_string(r.status) << " | " << cell(r.lhs) << " | " << cell(r.rhs) << " | " << cell(r.reason)
           << " |\n";
    }
    return os.str();
}

/// "json" or "markdown".
inline std::string render(const Report& report, std::string_view format) {
    if (format == "json") return report_to_json(report).dump(2) + "\n";
    if (format == "markdown") return render_markdown(report);
    throw UnknownFormat("unknown report format '" + std::string(format) + "'");
}

}  // namespace frob::harness
