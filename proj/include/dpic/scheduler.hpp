#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dpic/instance.hpp"

namespace dpic {

enum class Phase { phase1, phase2, phase3, base2, base1 };

std::string to_string(Phase p);
/// Short label used in rendered schedules: P1, P2, P3, B2, B1.
std::string short_label(Phase p);
Phase phase_from_string(const std::string& s);

/// One coded broadcast: the XOR of `support` sent by `transmitter`.
/// Support order is the order the operands are written in the scheme.
struct Transmission {
    ClientId transmitter;
    std::vector<MessageId> support;
    std::uint32_t level = 0;
    Phase phase = Phase::phase1;
    std::uint32_t slot = 0;

    friend bool operator==(const Transmission&, const Transmission&) = default;
};

/// Throws ScheduleError unless the support has 2 or 3 distinct ids, all
/// held by the transmitter.
void validate_transmission(const Instance& inst, const Transmission& tx);

enum class LevelKind { general, special, base2, base1 };

std::string to_string(LevelKind k);
LevelKind level_kind_from_string(const std::string& s);

struct LevelContext {
    std::uint32_t level = 1;
    std::uint32_t offset = 0;       // original index of the level's first client, minus one
    std::uint32_t clients = 0;      // C^l
    std::uint32_t first_size = 0;   // K^l
    std::uint32_t group = 0;        // r_max^l, or C^l for base levels
    LevelKind kind = LevelKind::general;

    friend bool operator==(const LevelContext&, const LevelContext&) = default;
};

class Schedule {
public:
    explicit Schedule(Instance inst) : instance_(std::move(inst)) {}

    const Instance& instance() const { return instance_; }
    std::span<const Transmission> transmissions() const { return transmissions_; }
    std::span<const LevelContext> levels() const { return levels_; }
    std::size_t size() const { return transmissions_.size(); }

    /// Validates and appends.
    void push(Transmission tx);
    void push_level(const LevelContext& ctx) { levels_.push_back(ctx); }

    /// Copy with transmission `index` removed (levels kept as recorded).
    Schedule without(std::size_t index) const;
    /// Copy with one more transmission appended at the end.
    Schedule with(Transmission tx) const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    Instance instance_;
    std::vector<Transmission> transmissions_;
    std::vector<LevelContext> levels_;
};

/// Unique r with (r-2)(r-1)/2 < n <= r(r-1)/2, for n >= 1.
std::uint32_t r_max(std::uint32_t n);

/// N(C) = C + N(C - r_max(C)), N(0)=0, N(1)=1, N(2)=3.
std::uint64_t predicted_count(std::uint32_t c);

/// Residual client counts visited by the recursion, e.g. 9 -> {9, 4, 0}.
std::vector<std::uint32_t> recursion_chain(std::uint32_t c);

bool is_special_case(std::uint32_t clients, std::uint32_t r);

/// Phase-1 size T^l for a recursive level.
std::uint32_t phase1_count(std::uint32_t r, bool special);

std::vector<Transmission> schedule_general_case(const Instance& inst, const LevelContext& ctx);
std::vector<Transmission> schedule_special_case(const Instance& inst, const LevelContext& ctx);
std::vector<Transmission> schedule_base(const Instance& inst, const LevelContext& ctx);

/// Level contexts the recursion visits for `inst`, base level included.
std::vector<LevelContext> plan_levels(const Instance& inst);

struct ScheduleOptions {
    /// Allow instances outside the theorem's hypotheses.
    bool force = false;
};

/// Runs the full recursion. Throws ScheduleError naming the violated
/// hypothesis for out-of-theorem instances unless `opts.force` is set, and
/// with level/phase context when a subroutine cannot build a transmission.
Schedule build_schedule(const Instance& inst, ScheduleOptions opts = {});

}  // namespace dpic
