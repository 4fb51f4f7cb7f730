#ifndef COXALG_REPORT_HPP
#define COXALG_REPORT_HPP

#include <string>
#include <vector>

namespace coxalg {

constexpr const char* kToolVersion = "coxalg 1.0.0";

// Per-case runtime configuration; every bound and limit used by a run is
// captured here and echoed into the report.
struct CaseConfig {
    int cyclotomic_order = 12;
    std::string monomial_order = "grevlex";
    long invariant_bound = 0;     // 0 = twice the maximum table degree
    long lifting_dmax = 3;
    long central_fiber_bound = 8;
    std::size_t max_pairs = 4'000'000;
    std::size_t max_basis = 100'000;
    long max_degree = 0;
    std::string cache_dir;        // empty = in-memory only (COXALG_CACHE_DIR wins)
    std::string action_convention = "substitute";  // or "inverse"
};

struct ReportItem {
    std::string id;
    std::string anchor;   // where in the paper the claim lives
    std::string status;   // PASS / FAIL / SKIP / RESOURCE / UNASSERTED-*
    std::string witness;  // data backing the verdict
    long ms = 0;
};

struct Report {
    std::string case_name;
    std::string tool_version = kToolVersion;
    CaseConfig config;
    std::vector<ReportItem> items;

    bool any_fail() const;
    bool any_resource() const;
    // stable key order; timings included but comparisons should ignore them
    std::string to_json() const;
};

// equality of everything except per-item timings
bool reports_equivalent(const Report& a, const Report& b);

}  // namespace coxalg

#endif
