#ifndef EVENHOLE_TOOLS_REPORT_HPP
#define EVENHOLE_TOOLS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "evenhole/difftest.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/pipeline.hpp"

namespace evenhole::tools {

nlohmann::ordered_json counters_json(const Counters& c);

/// {verdict, hole, counters, trace, timing}. Hole ids are the input's ids.
/// Timing is left out when negative so reports can be compared byte for byte.
nlohmann::ordered_json verdict_json(const Verdict& v, const std::vector<std::int64_t>& ids,
                                    bool with_trace, double millis = -1);

nlohmann::ordered_json hole_json(const std::optional<Hole>& hole,
                                 const std::vector<std::int64_t>& ids);

nlohmann::ordered_json difftest_json(const DifftestReport& r);

}  // namespace evenhole::tools

#endif  // EVENHOLE_TOOLS_REPORT_HPP
