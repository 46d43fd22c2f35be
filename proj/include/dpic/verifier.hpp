#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpic/decoder.hpp"
#include "dpic/scheduler.hpp"

namespace dpic {

struct SecurityCheck {
    bool ok = false;
    /// Final |known| per client, index 0 = client 1.
    std::vector<std::uint32_t> totals;
};

struct PhaseTally {
    std::uint32_t level = 0;
    Phase phase = Phase::phase1;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
};

struct LevelTally {
    std::uint32_t level = 0;
    LevelKind kind = LevelKind::general;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
};

struct CountCheck {
    bool ok = false;
    std::uint64_t expected_total = 0;
    std::uint64_t actual_total = 0;
    std::vector<LevelTally> levels;
    std::vector<PhaseTally> phases;
};

/// A message a client decoded from one level's transmissions that it
/// should not have been able to decode.
struct Leak {
    std::uint32_t level = 0;
    ClientId client;
    MessageId message;
};

/// A served client that decoded the wrong number of messages at its level.
struct Shortfall {
    std::uint32_t level = 0;
    ClientId client;
    std::uint32_t expected = 0;
    std::uint32_t actual = 0;
};

struct IsolationCheck {
    bool ok = false;
    std::vector<Leak> leaks;
    std::vector<Shortfall> shortfalls;
    /// gained[l][c-1]: messages client c decodes from level l+1 alone.
    std::vector<std::vector<std::uint32_t>> gained;
};

struct StructureCheck {
    bool ok = false;
    struct Entry {
        std::uint32_t level = 0;
        bool lpsfo = false;
        bool target_invariant = false;  // K^l + C^l == T
    };
    std::vector<Entry> levels;
};

struct TotalsCheck {
    bool ok = false;
    /// Sum over levels of per-level gains, per client.
    std::vector<std::uint32_t> gained;
};

struct AgreementCheck {
    bool ok = false;
    std::vector<ClientId> mismatched;
};

struct MutationCheck {
    bool ok = false;
    /// Transmission indices whose removal leaves every client at T.
    std::vector<std::size_t> redundant;
};

struct VerificationReport {
    Regime regime = Regime::out_of_theorem;
    std::vector<std::string> violated_hypotheses;
    SecurityCheck security;
    CountCheck counts;
    IsolationCheck isolation;
    StructureCheck structure;
    TotalsCheck per_client_totals;
    AgreementCheck decoder_agreement;
    std::uint64_t optimality_gap = 0;

    bool all_ok() const {
        return security.ok && counts.ok && isolation.ok && structure.ok && per_client_totals.ok &&
               decoder_agreement.ok;
    }
};

/// Every client must end with exactly T messages under the span oracle.
SecurityCheck verify_security(const Schedule& sched);

/// Total against N(C), and per-level / per-phase tallies against the level
/// plan recomputed from the instance.
CountCheck verify_counts(const Schedule& sched);

/// Each level alone, with original side-information: served position i
/// decodes exactly C^l - (i-1) messages, every other client decodes none.
IsolationCheck verify_level_isolation(const Schedule& sched);

/// Residual clients of every recorded level form an LPS-FO family with
/// first size K^l, and K^l + C^l = T.
StructureCheck verify_structure_preservation(const Schedule& sched);

/// Peeling and the span oracle agree for every client.
AgreementCheck verify_decoder_agreement(const Schedule& sched);

/// Supplementary: dropping any single transmission leaves some client below T.
MutationCheck verify_mutation_sensitivity(const Schedule& sched);

/// S_opt lower bound: C for C >= 3, 3 for C = 2.
std::uint64_t optimal_count(std::uint32_t c);

/// N(C) - S_opt, for C >= 2.
std::uint64_t optimality_gap(std::uint32_t c);

VerificationReport verify(const Schedule& sched);

}  // namespace dpic
