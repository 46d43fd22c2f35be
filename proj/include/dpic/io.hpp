#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "dpic/decoder.hpp"
#include "dpic/verifier.hpp"

namespace dpic::io {

using nlohmann::json;

/// "x5 ⊕ x10" style label; `sep` goes between operands.
std::string support_label(const Transmission& tx, std::string_view sep);

json to_json(const Instance& inst);
json to_json(const Transmission& tx);
json to_json(const LevelContext& ctx);
/// {instance, levels, transmissions}
json to_json(const Schedule& sched);
/// Rows of per-transmission cells; null where nothing was decoded.
json to_json(const DecodeTrace& trace);
json to_json(const VerificationReport& rep);
json to_json(const MutationCheck& m);

/// Inverse of to_json(Schedule). Validates every transmission against the
/// rebuilt instance; throws ParameterError or ScheduleError on bad input.
Schedule schedule_from_json(const json& j);

std::string schedule_table(const Schedule& sched);
/// Header "level,phase,slot,transmitter,support".
std::string schedule_csv(const Schedule& sched);

/// Clients × transmissions grid with "-" for empty cells.
std::string trace_table(const Schedule& sched, const DecodeTrace& trace);
/// Header "client,x5+x10,..."; empty cell where nothing was decoded.
std::string trace_csv(const Schedule& sched, const DecodeTrace& trace);

std::string report_table(const Instance& inst, const VerificationReport& rep);
/// Header "check,ok,detail".
std::string report_csv(const VerificationReport& rep);

}  // namespace dpic::io
