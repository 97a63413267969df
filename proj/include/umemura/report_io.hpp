#pragma once

// JSONL serialization for verification reports.  Kept separate from
// identities.hpp so TUs that only compute polynomials never pay for the JSON
// header.  Byte determinism matters (catalog files are diffed across runs),
// so wall-clock timings are zeroed out on disk and key order is fixed.

#include "identities.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace umemura {

inline nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["id"] = r.kase.id;
    j["params"] = r.kase.params;
    j["mode"] = mode_name(r.kase.mode.kind);
    j["status"] = status_name(r.status);
    j["witness"] = r.witness;
    j["millis"] = 0;  // deterministic output; live timing stays in the Report
    j["seed"] = r.seed;
    return j;
}

inline void write_reports_jsonl(const std::vector<Report>& reports, std::ostream& os) {
    for (const Report& r : reports) os << report_to_json(r).dump() << "\n";
}

}  // namespace umemura
