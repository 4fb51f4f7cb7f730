#include "coxalg/report.hpp"

#include "json.hpp"

namespace coxalg {

using ordered_json = nlohmann::ordered_json;

bool Report::any_fail() const {
    for (const auto& it : items)
        if (it.status == "FAIL") return true;
    return false;
}

bool Report::any_resource() const {
    for (const auto& it : items)
        if (it.status == "RESOURCE") return true;
    return false;
}

std::string Report::to_json() const {
    ordered_json j;
    j["case"] = case_name;
    j["tool_version"] = tool_version;
    ordered_json c;
    c["cyclotomic_order"] = config.cyclotomic_order;
    c["monomial_order"] = config.monomial_order;
    c["invariant_bound"] = config.invariant_bound;
    c["lifting_dmax"] = config.lifting_dmax;
    c["central_fiber_bound"] = config.central_fiber_bound;
    c["max_pairs"] = config.max_pairs;
    c["max_basis"] = config.max_basis;
    c["max_degree"] = config.max_degree;
    c["cache_dir"] = config.cache_dir;
    c["action_convention"] = config.action_convention;
    j["config"] = c;
    ordered_json arr = ordered_json::array();
    for (const auto& it : items) {
        ordered_json ji;
        ji["id"] = it.id;
        ji["anchor"] = it.anchor;
        ji["status"] = it.status;
        ji["witness"] = it.witness;
        ji["ms"] = it.ms;
        arr.push_back(ji);
    }
    j["items"] = arr;
    return j.dump(2) + "\n";
}

bool reports_equivalent(const Report& a, const Report& b) {
    if (a.case_name != b.case_name || a.tool_version != b.tool_version) return false;
    if (a.items.size() != b.items.size()) return false;
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        const auto& x = a.items[i];
        const auto& y = b.items[i];
        if (x.id != y.id || x.anchor != y.anchor || x.status != y.status || x.witness != y.witness)
            return false;
    }
    return true;
}

}  // namespace coxalg
