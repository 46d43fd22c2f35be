#include "dpic/io.hpp"

#include <algorithm>
#include <sstream>

namespace dpic::io {

std::string support_label(const Transmission& tx, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < tx.support.size(); ++k) {
        if (k) out += sep;
        out += to_string(tx.support[k]);
    }
    return out;
}

json to_json(const Instance& inst) {
    return {{"c", inst.clients()},
            {"k", inst.base_size()},
            {"p", inst.overlap()},
            {"m", inst.universe_size()},
            {"t", inst.target()},
            {"regime", to_string(inst.regime())},
            {"violated_hypotheses", inst.violated_hypotheses()}};
}

json to_json(const Transmission& tx) {
    json support = json::array();
    for (auto m : tx.support) support.push_back(m.value);
    return {{"transmitter", tx.transmitter.value},
            {"support", support},
            {"level", tx.level},
            {"phase", to_string(tx.phase)},
            {"slot", tx.slot}};
}

json to_json(const LevelContext& ctx) {
    return {{"level", ctx.level},       {"offset", ctx.offset},
            {"c_l", ctx.clients},       {"k_l", ctx.first_size},
            {"group", ctx.group},       {"kind", to_string(ctx.kind)}};
}

json to_json(const Schedule& sched) {
    json levels = json::array();
    for (const auto& ctx : sched.levels()) levels.push_back(to_json(ctx));
    json txs = json::array();
    for (const auto& tx : sched.transmissions()) txs.push_back(to_json(tx));
    return {{"instance", to_json(sched.instance())}, {"levels", levels}, {"transmissions", txs}};
}

json to_json(const DecodeTrace& trace) {
    json rows = json::array();
    for (const auto& row : trace.cells) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(cell ? json(cell->value) : json(nullptr));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const VerificationReport& rep) {
    json counts_levels = json::array();
    for (const auto& l : rep.counts.levels)
        counts_levels.push_back({{"level", l.level}, {"kind", to_string(l.kind)},
                                 {"expected", l.expected}, {"actual", l.actual}});
    json counts_phases = json::array();
    for (const auto& p : rep.counts.phases)
        counts_phases.push_back({{"level", p.level}, {"phase", to_string(p.phase)},
                                 {"expected", p.expected}, {"actual", p.actual}});
    json leaks = json::array();
    for (const auto& l : rep.isolation.leaks)
        leaks.push_back({{"level", l.level}, {"client", l.client.value}, {"message", l.message.value}});
    json shortfalls = json::array();
    for (const auto& s : rep.isolation.shortfalls)
        shortfalls.push_back({{"level", s.level}, {"client", s.client.value},
                              {"expected", s.expected}, {"actual", s.actual}});
    json structure = json::array();
    for (const auto& e : rep.structure.levels)
        structure.push_back({{"level", e.level}, {"lpsfo", e.lpsfo}, {"target_invariant", e.target_invariant}});
    json mismatched = json::array();
    for (auto c : rep.decoder_agreement.mismatched) mismatched.push_back(c.value);

    return {{"regime", to_string(rep.regime)},
            {"violated_hypotheses", rep.violated_hypotheses},
            {"all_ok", rep.all_ok()},
            {"optimality_gap", rep.optimality_gap},
            {"security", {{"ok", rep.security.ok}, {"totals", rep.security.totals}}},
            {"counts",
             {{"ok", rep.counts.ok},
              {"expected_total", rep.counts.expected_total},
              {"actual_total", rep.counts.actual_total},
              {"levels", counts_levels},
              {"phases", counts_phases}}},
            {"level_isolation", {{"ok", rep.isolation.ok}, {"leaks", leaks}, {"shortfalls", shortfalls}}},
            {"structure_preservation", {{"ok", rep.structure.ok}, {"levels", structure}}},
            {"per_client_totals", {{"ok", rep.per_client_totals.ok}, {"gained", rep.per_client_totals.gained}}},
            {"decoder_agreement", {{"ok", rep.decoder_agreement.ok}, {"mismatched", mismatched}}}};
}

json to_json(const MutationCheck& m) { return {{"ok", m.ok}, {"redundant", m.redundant}}; }

Schedule schedule_from_json(const json& j) {
    try {
        const auto& ji = j.at("instance");
        Schedule sched(build_instance(ji.at("c").get<std::uint32_t>(), ji.at("k").get<std::uint32_t>(),
                                      ji.at("p").get<std::uint32_t>()));
        for (const auto& jl : j.at("levels"))
            sched.push_level({jl.at("level").get<std::uint32_t>(), jl.at("offset").get<std::uint32_t>(),
                              jl.at("c_l").get<std::uint32_t>(), jl.at("k_l").get<std::uint32_t>(),
                              jl.at("group").get<std::uint32_t>(),
                              level_kind_from_string(jl.at("kind").get<std::string>())});
        for (const auto& jt : j.at("transmissions")) {
            Transmission tx;
            tx.transmitter = ClientId{jt.at("transmitter").get<std::uint32_t>()};
            for (const auto& m : jt.at("support")) tx.support.emplace_back(m.get<std::uint32_t>());
            tx.level = jt.at("level").get<std::uint32_t>();
            tx.phase = phase_from_string(jt.at("phase").get<std::string>());
            tx.slot = jt.at("slot").get<std::uint32_t>();
            sched.push(std::move(tx));
        }
        return sched;
    } catch (const json::exception& e) {
        throw ParameterError(std::string("malformed schedule json: ") + e.what());
    }
}

namespace {

// Display width in code points; every glyph used here is single-width.
std::size_t display_width(std::string_view s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
    const auto w = display_width(s);
    return w >= width ? s : s + std::string(width - w, ' ');
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += " | ";
            line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
        }
        os << line << '\n';
    }
    return os.str();
}

std::string cell_text(const std::optional<MessageId>& cell) { return cell ? to_string(*cell) : ""; }

}  // namespace

std::string schedule_table(const Schedule& sched) {
    std::ostringstream os;
    for (const auto& tx : sched.transmissions())
        os << 'L' << tx.level << ' ' << short_label(tx.phase) << " client " << tx.transmitter.value << ": "
           << support_label(tx, " ⊕ ") << "  [slot " << tx.slot << "]\n";
    return os.str();
}

std::string schedule_csv(const Schedule& sched) {
    std::ostringstream os;
    os << "level,phase,slot,transmitter,support\n";
    for (const auto& tx : sched.transmissions())
        os << tx.level << ',' << to_string(tx.phase) << ',' << tx.slot << ',' << tx.transmitter.value << ','
           << support_label(tx, "+") << '\n';
    return os.str();
}

std::string trace_table(const Schedule& sched, const DecodeTrace& trace) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"client"};
    for (const auto& tx : sched.transmissions()) header.push_back(support_label(tx, "⊕"));
    rows.push_back(std::move(header));
    for (std::size_t c = 0; c < trace.clients(); ++c) {
        std::vector<std::string> row{"C" + std::to_string(c + 1)};
        for (const auto& cell : trace.cells[c]) row.push_back(cell ? cell_text(cell) : "-");
        rows.push_back(std::move(row));
    }
    return render_grid(rows);
}

std::string trace_csv(const Schedule& sched, const DecodeTrace& trace) {
    std::ostringstream os;
    os << "client";
    for (const auto& tx : sched.transmissions()) os << ',' << support_label(tx, "+");
    os << '\n';
    for (std::size_t c = 0; c < trace.clients(); ++c) {
        os << 'C' << c + 1;
        for (const auto& cell : trace.cells[c]) os << ',' << cell_text(cell);
        os << '\n';
    }
    return os.str();
}

namespace {

struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<CheckLine> check_lines(const VerificationReport& rep) {
    std::vector<CheckLine> lines;

    std::ostringstream sec;
    sec << "final totals";
    for (auto t : rep.security.totals) sec << ' ' << t;
    lines.push_back({"security", rep.security.ok, sec.str()});

    std::ostringstream cnt;
    cnt << "total " << rep.counts.actual_total << " of N(C)=" << rep.counts.expected_total;
    for (const auto& l : rep.counts.levels) {
        cnt << "; level " << l.level << ' ' << to_string(l.kind) << ' ' << l.actual << '/' << l.expected;
        for (const auto& p : rep.counts.phases)
            if (p.level == l.level) cnt << ' ' << short_label(p.phase) << ' ' << p.actual << '/' << p.expected;
    }
    lines.push_back({"counts", rep.counts.ok, cnt.str()});

    std::ostringstream iso;
    iso << rep.isolation.leaks.size() << " leaks, " << rep.isolation.shortfalls.size() << " shortfalls";
    for (const auto& l : rep.isolation.leaks)
        iso << "; level " << l.level << " client " << l.client.value << " leaks " << to_string(l.message);
    for (const auto& s : rep.isolation.shortfalls)
        iso << "; level " << s.level << " client " << s.client.value << " decodes " << s.actual << " want "
            << s.expected;
    lines.push_back({"level_isolation", rep.isolation.ok, iso.str()});

    std::ostringstream st;
    st << "levels";
    for (const auto& e : rep.structure.levels)
        st << ' ' << e.level << (e.lpsfo && e.target_invariant ? ":ok" : ":bad");
    lines.push_back({"structure_preservation", rep.structure.ok, st.str()});

    std::ostringstream tot;
    tot << "gained";
    for (auto g : rep.per_client_totals.gained) tot << ' ' << g;
    lines.push_back({"per_client_totals", rep.per_client_totals.ok, tot.str()});

    std::ostringstream agr;
    agr << rep.decoder_agreement.mismatched.size() << " mismatched clients";
    for (auto c : rep.decoder_agreement.mismatched) agr << ' ' << c.value;
    lines.push_back({"decoder_agreement", rep.decoder_agreement.ok, agr.str()});
    return lines;
}

}  // namespace

std::string report_table(const Instance& inst, const VerificationReport& rep) {
    std::ostringstream os;
    os << "instance C=" << inst.clients() << " K=" << inst.base_size() << " P=" << inst.overlap()
       << " M=" << inst.universe_size() << " T=" << inst.target() << " (" << to_string(inst.regime());
    for (const auto& h : inst.violated_hypotheses()) os << "; violates " << h;
    os << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& l : check_lines(rep)) rows.push_back({l.name, l.ok ? "pass" : "FAIL", l.detail});
    rows.push_back({"optimality_gap", std::to_string(rep.optimality_gap), "N(C) - S_opt"});
    os << render_grid(rows);
    os << "result: " << (rep.all_ok() ? "all checks pass" : "verification failed") << '\n';
    return os.str();
}

std::string report_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "check,ok,detail\n";
    for (const auto& l : check_lines(rep)) {
        auto detail = l.detail;
        std::replace(detail.begin(), detail.end(), ',', ' ');
        os << l.name << ',' << (l.ok ? "true" : "false") << ',' << detail << '\n';
    }
    os << "optimality_gap," << rep.optimality_gap << ",N(C) - S_opt\n";
    return os.str();
}

}  // namespace dpic::io
