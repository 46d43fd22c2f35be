#include "dpic/scheduler.hpp"

namespace dpic {

std::string to_string(Phase p) {
    switch (p) {
        case Phase::phase1: return "phase1";
        case Phase::phase2: return "phase2";
        case Phase::phase3: return "phase3";
        case Phase::base2: return "base2";
        case Phase::base1: return "base1";
    }
    return "?";
}

std::string short_label(Phase p) {
    switch (p) {
        case Phase::phase1: return "P1";
        case Phase::phase2: return "P2";
        case Phase::phase3: return "P3";
        case Phase::base2: return "B2";
        case Phase::base1: return "B1";
    }
    return "?";
}

Phase phase_from_string(const std::string& s) {
    for (auto p : {Phase::phase1, Phase::phase2, Phase::phase3, Phase::base2, Phase::base1})
        if (to_string(p) == s) return p;
    throw ParameterError("unknown phase '" + s + "'");
}

std::string to_string(LevelKind k) {
    switch (k) {
        case LevelKind::general: return "general";
        case LevelKind::special: return "special";
        case LevelKind::base2: return "base2";
        case LevelKind::base1: return "base1";
    }
    return "?";
}

LevelKind level_kind_from_string(const std::string& s) {
    for (auto k : {LevelKind::general, LevelKind::special, LevelKind::base2, LevelKind::base1})
        if (to_string(k) == s) return k;
    throw ParameterError("unknown level kind '" + s + "'");
}

void validate_transmission(const Instance& inst, const Transmission& tx) {
    const auto& s = tx.support;
    if (s.size() < 2 || s.size() > 3)
        throw ScheduleError("transmission support must have 2 or 3 messages");
    if (tx.transmitter.value < 1 || tx.transmitter.value > inst.clients())
        throw ScheduleError("transmitter " + std::to_string(tx.transmitter.value) + " out of range");
    const auto iv = side_info(inst, tx.transmitter);
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (!iv.contains(s[a]))
            throw ScheduleError("client " + std::to_string(tx.transmitter.value) +
                                " does not hold " + to_string(s[a]));
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b]) throw ScheduleError("duplicate operand " + to_string(s[a]));
    }
}

void Schedule::push(Transmission tx) {
    validate_transmission(instance_, tx);
    transmissions_.push_back(std::move(tx));
}

Schedule Schedule::without(std::size_t index) const {
    Schedule out = *this;
    out.transmissions_.erase(out.transmissions_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

Schedule Schedule::with(Transmission tx) const {
    Schedule out = *this;
    out.push(std::move(tx));
    return out;
}

std::uint32_t r_max(std::uint32_t n) {
    std::uint64_t r = 2;
    while (r * (r - 1) / 2 < n) ++r;
    return static_cast<std::uint32_t>(r);
}

std::uint64_t predicted_count(std::uint32_t c) {
    std::uint64_t total = 0;
    while (c > 2) {
        total += c;
        c -= r_max(c);
    }
    static constexpr std::uint64_t base[] = {0, 1, 3};
    return total + base[c];
}

std::vector<std::uint32_t> recursion_chain(std::uint32_t c) {
    std::vector<std::uint32_t> chain{c};
    while (c > 2) {
        c -= r_max(c);
        chain.push_back(c);
    }
    return chain;
}

bool is_special_case(std::uint32_t clients, std::uint32_t r) {
    return r >= 2 && clients == (r - 2) * (r - 1) / 2 + 1;
}

std::uint32_t phase1_count(std::uint32_t r, bool special) {
    if (special) return r >= 4 ? (r - 3) * (r - 4) / 2 + 1 : 0;
    return r >= 3 ? (r - 2) * (r - 3) / 2 : 0;
}

namespace {

/// Emits transmissions for one level, translating level-local client
/// positions to original indices and attaching context to failures.
class LevelEmitter {
public:
    LevelEmitter(const Instance& inst, const LevelContext& ctx) : inst_(inst), ctx_(ctx) {}

    void begin(Phase p) {
        phase_ = p;
        slot_ = 0;
    }

    MessageId f(std::uint32_t pos, std::uint32_t j) { return seg(pos, SegmentKind::first, j); }
    MessageId l(std::uint32_t pos, std::uint32_t j) { return seg(pos, SegmentKind::last, j); }
    MessageId u(std::uint32_t pos, std::uint32_t j) { return seg(pos, SegmentKind::unique, j); }

    MessageId u_last(std::uint32_t pos) {
        try {
            return last_unique(inst_, original(pos));
        } catch (const SegmentError& e) {
            fail(e.what(), "K ≥ 2P");
        }
    }

    void send(std::uint32_t pos, std::vector<MessageId> support) { send_as(original(pos), std::move(support)); }

    void send_as(ClientId who, std::vector<MessageId> support) {
        Transmission tx{who, std::move(support), ctx_.level, phase_, ++slot_};
        try {
            validate_transmission(inst_, tx);
        } catch (const ScheduleError& e) {
            fail(e.what(), "K ≥ 2P");
        }
        out_.push_back(std::move(tx));
    }

    [[noreturn]] void fail(const std::string& what, const std::string& hypothesis) const {
        throw ScheduleError("level " + std::to_string(ctx_.level) + " " + to_string(phase_) + ": " +
                                what + " (requires " + hypothesis + ")",
                            hypothesis);
    }

    ClientId original(std::uint32_t pos) const { return ClientId{ctx_.offset + pos}; }

    std::vector<Transmission> take() { return std::move(out_); }

private:
    MessageId seg(std::uint32_t pos, SegmentKind kind, std::uint32_t j) {
        try {
            return segment(inst_, original(pos), kind, j);
        } catch (const SegmentError& e) {
            if (kind != SegmentKind::unique) fail(e.what(), "P ≥ r_max − 2");
            // Only reachable at level 1 of a forced two-client instance.
            if (ctx_.kind == LevelKind::base2) fail(e.what(), "K ≥ 2P + 1 when two clients remain");
            fail(e.what(), "K ≥ 2P");
        }
    }

    const Instance& inst_;
    const LevelContext& ctx_;
    Phase phase_ = Phase::phase1;
    std::uint32_t slot_ = 0;
    std::vector<Transmission> out_;
};

void check_recursive_ctx(const Instance& inst, const LevelContext& ctx, bool want_special) {
    if (ctx.clients <= 2) throw ScheduleError("recursive level requires more than two clients");
    if (ctx.group != r_max(ctx.clients)) throw ScheduleError("level group size is not r_max(C^l)");
    if (is_special_case(ctx.clients, ctx.group) != want_special)
        throw ScheduleError(want_special ? "level is not the special case" : "level is the special case");
    if (ctx.offset + ctx.clients > inst.clients()) throw ScheduleError("level exceeds client count");
}

}  // namespace

std::vector<Transmission> schedule_general_case(const Instance& inst, const LevelContext& ctx) {
    check_recursive_ctx(inst, ctx, false);
    const std::uint32_t r = ctx.group;
    const std::uint32_t t = phase1_count(r, false);
    LevelEmitter em(inst, ctx);

    // Number of F_1 ⊕ U_j sends in phase 2; bounded by 0 <= d <= r-3.
    const auto d = static_cast<std::int64_t>(ctx.clients) - r - t;
    if (d < 0 || d > static_cast<std::int64_t>(r) - 3)
        throw ScheduleError("level " + std::to_string(ctx.level) +
                            ": C^l - r_max - T^l = " + std::to_string(d) + " outside [0, r_max - 3]");
    const auto extra = static_cast<std::uint32_t>(d);

    em.begin(Phase::phase1);
    for (std::uint32_t i = 1; i + 3 <= r; ++i) {
        const std::uint32_t who = i + 1;
        em.send(who, {em.f(who, 1), em.l(who, 1)});
        for (std::uint32_t j = 1; j < i; ++j) em.send(who, {em.f(who, 1), em.u(who, j)});
    }

    em.begin(Phase::phase2);
    const std::uint32_t p2 = r - 1;
    em.send(p2, {em.f(p2, 1), em.l(p2, 1)});
    for (std::uint32_t j = 1; j <= extra; ++j) em.send(p2, {em.f(p2, 1), em.u(p2, j)});
    for (std::uint32_t j = extra + 1; j + 3 <= r; ++j) {
        const std::uint32_t q = j - extra;
        em.send(p2, {em.l(p2, 1), em.l(p2, q + 1)});
    }

    em.begin(Phase::phase3);
    for (std::uint32_t j = 1; j <= extra + 2; ++j) em.send(r, {em.f(r, 1), em.u(r, j)});

    return em.take();
}

std::vector<Transmission> schedule_special_case(const Instance& inst, const LevelContext& ctx) {
    check_recursive_ctx(inst, ctx, true);
    const std::uint32_t r = ctx.group;
    const std::uint32_t t = phase1_count(r, true);
    LevelEmitter em(inst, ctx);

    em.begin(Phase::phase1);
    em.send(2, {em.f(2, 1), em.f(2, 2), em.l(2, 1)});
    for (std::uint32_t i = 1; i + 4 <= r; ++i) {
        const std::uint32_t who = i + 2;
        em.send(who, {em.f(who, 1), em.l(who, 1)});
        for (std::uint32_t j = 1; j < i; ++j) em.send(who, {em.f(who, 1), em.u(who, j)});
    }

    em.begin(Phase::phase2);
    const std::uint32_t p2 = r - 1;
    em.send(p2, {em.f(p2, 1), em.l(p2, 1)});
    for (std::uint32_t j = 1; j + 4 <= r; ++j) em.send(p2, {em.l(p2, 1), em.u(p2, j)});

    em.begin(Phase::phase3);
    const std::uint32_t p3 = ctx.clients + 3 - r - t;
    for (std::uint32_t j = 1; j <= p3; ++j) em.send(r, {em.f(r, 1), em.u(r, j)});

    return em.take();
}

std::vector<Transmission> schedule_base(const Instance& inst, const LevelContext& ctx) {
    LevelEmitter em(inst, ctx);
    if (ctx.clients == 2) {
        em.begin(Phase::base2);
        em.send(2, {em.f(2, 1), em.u(2, 1)});
        em.send(2, {em.f(2, 1), em.u(2, 2)});
        em.send(1, {em.l(1, 1), em.u(1, 1)});
    } else if (ctx.clients == 1) {
        // The sole remaining client is C; its predecessor C-1 sends
        // L_1 ⊕ U_L, and L_1 of C-1 is F_1 of C.
        em.begin(Phase::base1);
        if (ctx.offset + 1 != inst.clients())
            throw ScheduleError("single-client base must be the last client");
        const auto sender_pos = 0u;  // offset + 0 == C - 1
        em.send(sender_pos, {em.l(sender_pos, 1), em.u_last(sender_pos)});
    } else {
        throw ScheduleError("base case requires one or two clients");
    }
    return em.take();
}

std::vector<LevelContext> plan_levels(const Instance& inst) {
    std::vector<LevelContext> levels;
    LevelContext ctx{1, 0, inst.clients(), inst.base_size(), 0, LevelKind::general};
    while (ctx.clients > 2) {
        ctx.group = r_max(ctx.clients);
        ctx.kind = is_special_case(ctx.clients, ctx.group) ? LevelKind::special : LevelKind::general;
        levels.push_back(ctx);
        const auto r = ctx.group;
        ctx = LevelContext{ctx.level + 1, ctx.offset + r, ctx.clients - r, ctx.first_size + r, 0,
                           LevelKind::general};
    }
    if (ctx.clients > 0) {
        ctx.group = ctx.clients;
        ctx.kind = ctx.clients == 2 ? LevelKind::base2 : LevelKind::base1;
        levels.push_back(ctx);
    }
    return levels;
}

Schedule build_schedule(const Instance& inst, ScheduleOptions opts) {
    if (inst.regime() == Regime::out_of_theorem && !opts.force) {
        std::string list;
        for (const auto& h : inst.violated_hypotheses()) list += (list.empty() ? "" : ", ") + h;
        throw ScheduleError("instance violates " + list + "; pass --force to schedule anyway",
                            inst.violated_hypotheses().front());
    }
    Schedule sched(inst);
    for (const auto& ctx : plan_levels(inst)) {
        std::vector<Transmission> txs;
        switch (ctx.kind) {
            case LevelKind::general: txs = schedule_general_case(inst, ctx); break;
            case LevelKind::special: txs = schedule_special_case(inst, ctx); break;
            case LevelKind::base2:
            case LevelKind::base1: txs = schedule_base(inst, ctx); break;
        }
        sched.push_level(ctx);
        for (auto& tx : txs) sched.push(std::move(tx));
    }
    return sched;
}

}  // namespace dpic
