#include "dpic/verifier.hpp"

#include <map>
#include <utility>

namespace dpic {

SecurityCheck verify_security(const Schedule& sched) {
    const auto& inst = sched.instance();
    const auto known = final_knowledge(sched);
    SecurityCheck out;
    out.ok = true;
    for (std::uint32_t c = 1; c <= inst.clients(); ++c) {
        const auto total = static_cast<std::uint32_t>(known.count(ClientId{c}));
        out.totals.push_back(total);
        if (total != inst.target()) out.ok = false;
    }
    return out;
}

namespace {

std::vector<std::pair<Phase, std::uint64_t>> expected_phases(const LevelContext& ctx) {
    const std::uint64_t r = ctx.group;
    const std::uint64_t n = ctx.clients;
    switch (ctx.kind) {
        case LevelKind::general: {
            const std::uint64_t t = phase1_count(ctx.group, false);
            return {{Phase::phase1, t}, {Phase::phase2, r - 2}, {Phase::phase3, n + 2 - r - t}};
        }
        case LevelKind::special: {
            const std::uint64_t t = phase1_count(ctx.group, true);
            return {{Phase::phase1, t}, {Phase::phase2, r - 3}, {Phase::phase3, n + 3 - r - t}};
        }
        case LevelKind::base2: return {{Phase::base2, 3}};
        case LevelKind::base1: return {{Phase::base1, 1}};
    }
    return {};
}

std::vector<Transmission> level_transmissions(const Schedule& sched, std::uint32_t level) {
    std::vector<Transmission> out;
    for (const auto& tx : sched.transmissions())
        if (tx.level == level) out.push_back(tx);
    return out;
}

}  // namespace

CountCheck verify_counts(const Schedule& sched) {
    const auto& inst = sched.instance();
    CountCheck out;
    out.expected_total = predicted_count(inst.clients());
    out.actual_total = sched.size();
    out.ok = out.expected_total == out.actual_total;

    std::map<std::pair<std::uint32_t, Phase>, std::uint64_t> seen;
    std::map<std::uint32_t, std::uint64_t> per_level;
    for (const auto& tx : sched.transmissions()) {
        ++seen[{tx.level, tx.phase}];
        ++per_level[tx.level];
    }

    for (const auto& ctx : plan_levels(inst)) {
        const bool base = ctx.kind == LevelKind::base1 || ctx.kind == LevelKind::base2;
        LevelTally lt{ctx.level, ctx.kind, base ? predicted_count(ctx.clients) : ctx.clients,
                      per_level[ctx.level]};
        if (lt.expected != lt.actual) out.ok = false;
        out.levels.push_back(lt);
        per_level.erase(ctx.level);
        for (const auto& [phase, want] : expected_phases(ctx)) {
            const auto key = std::make_pair(ctx.level, phase);
            PhaseTally pt{ctx.level, phase, want, seen[key]};
            seen.erase(key);
            if (pt.expected != pt.actual) out.ok = false;
            out.phases.push_back(pt);
        }
    }
    // Anything left over was emitted at a level or phase the plan lacks.
    for (const auto& [key, n] : seen) {
        if (n == 0) continue;
        out.phases.push_back({key.first, key.second, 0, n});
        out.ok = false;
    }
    for (const auto& [level, n] : per_level) {
        if (n == 0) continue;
        out.levels.push_back({level, LevelKind::general, 0, n});
        out.ok = false;
    }
    return out;
}

IsolationCheck verify_level_isolation(const Schedule& sched) {
    const auto& inst = sched.instance();
    IsolationCheck out;
    out.ok = true;
    for (const auto& ctx : plan_levels(inst)) {
        const auto txs = level_transmissions(sched, ctx.level);
        std::vector<std::uint32_t> gained(inst.clients(), 0);
        for (std::uint32_t c = 1; c <= inst.clients(); ++c) {
            const ClientId client{c};
            const auto decoded = span_decodable(inst, txs, client);
            gained[c - 1] = static_cast<std::uint32_t>(decoded.size());
            const bool served = c > ctx.offset && c <= ctx.offset + ctx.group;
            if (served) {
                const std::uint32_t want = ctx.clients - (c - ctx.offset - 1);
                if (decoded.size() != want) {
                    out.shortfalls.push_back({ctx.level, client, want, gained[c - 1]});
                    out.ok = false;
                }
            } else {
                for (auto m : decoded) out.leaks.push_back({ctx.level, client, m});
                if (!decoded.empty()) out.ok = false;
            }
        }
        out.gained.push_back(std::move(gained));
    }
    return out;
}

StructureCheck verify_structure_preservation(const Schedule& sched) {
    const auto& inst = sched.instance();
    const auto all = all_intervals(inst);
    StructureCheck out;
    out.ok = !sched.levels().empty();
    for (const auto& ctx : sched.levels()) {
        StructureCheck::Entry e{ctx.level, false, ctx.first_size + ctx.clients == inst.target()};
        if (ctx.clients >= 1 && ctx.offset + ctx.clients <= all.size()) {
            const std::span<const SideInfoInterval> residual(all.data() + ctx.offset, ctx.clients);
            e.lpsfo = validate_lpsfo(residual, ctx.first_size, inst.overlap());
        }
        if (!e.lpsfo || !e.target_invariant) out.ok = false;
        out.levels.push_back(e);
    }
    return out;
}

namespace {

TotalsCheck totals_from(const Instance& inst, const IsolationCheck& iso) {
    TotalsCheck out;
    out.ok = true;
    out.gained.assign(inst.clients(), 0);
    for (const auto& level : iso.gained)
        for (std::size_t c = 0; c < level.size(); ++c) out.gained[c] += level[c];
    for (std::uint32_t c = 1; c <= inst.clients(); ++c)
        if (out.gained[c - 1] != inst.target() - side_info(inst, ClientId{c}).size()) out.ok = false;
    return out;
}

}  // namespace

AgreementCheck verify_decoder_agreement(const Schedule& sched) {
    AgreementCheck out;
    out.ok = true;
    for (std::uint32_t c = 1; c <= sched.instance().clients(); ++c) {
        const ClientId client{c};
        if (peel(sched, client).decoded != span_decodable(sched, client)) {
            out.mismatched.push_back(client);
            out.ok = false;
        }
    }
    return out;
}

MutationCheck verify_mutation_sensitivity(const Schedule& sched) {
    const auto target = sched.instance().target();
    MutationCheck out;
    out.ok = true;
    for (std::size_t k = 0; k < sched.size(); ++k) {
        const auto sec = verify_security(sched.without(k));
        bool below = false;
        for (auto t : sec.totals) below = below || t < target;
        if (!below) {
            out.redundant.push_back(k);
            out.ok = false;
        }
    }
    return out;
}

std::uint64_t optimal_count(std::uint32_t c) { return c == 2 ? 3 : c; }

std::uint64_t optimality_gap(std::uint32_t c) {
    if (c < 2) throw ParameterError("optimality gap needs C ≥ 2");
    return predicted_count(c) - optimal_count(c);
}

VerificationReport verify(const Schedule& sched) {
    const auto& inst = sched.instance();
    VerificationReport rep;
    rep.regime = inst.regime();
    rep.violated_hypotheses = inst.violated_hypotheses();
    rep.security = verify_security(sched);
    rep.counts = verify_counts(sched);
    rep.isolation = verify_level_isolation(sched);
    rep.structure = verify_structure_preservation(sched);
    rep.per_client_totals = totals_from(inst, rep.isolation);
    rep.decoder_agreement = verify_decoder_agreement(sched);
    rep.optimality_gap = optimality_gap(inst.clients());
    return rep;
}

}  // namespace dpic
