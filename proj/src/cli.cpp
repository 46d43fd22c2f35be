#include "dpic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dpic/io.hpp"

namespace dpic::cli {

namespace {

using io::json;

struct Invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance instance_from(const RunConfig& cfg) {
    if (!cfg.k || !cfg.p) throw Invalid("--K and --P are required");
    if (cfg.c_low != cfg.c_high) throw Invalid("--C must be a single value for this command");
    return build_instance(cfg.c_low, *cfg.k, *cfg.p);
}

Schedule schedule_from(const RunConfig& cfg) {
    return build_schedule(instance_from(cfg), ScheduleOptions{cfg.force});
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ScheduleError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const SegmentError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Invalid& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_invalid;
}

std::string chain_text(std::uint32_t c, const char* sep) {
    std::string s;
    for (auto v : recursion_chain(c)) s += (s.empty() ? "" : sep) + std::to_string(v);
    return s;
}

}  // namespace

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto sched = schedule_from(cfg);
        switch (cfg.format) {
            case Format::table: out << io::schedule_table(sched); break;
            case Format::csv: out << io::schedule_csv(sched); break;
            case Format::json: out << io::to_json(sched).dump(2) << '\n'; break;
        }
        return exit_ok;
    });
}

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto sched = schedule_from(cfg);
        const auto trace = decode_trace(sched);
        std::optional<bool> payload;
        if (cfg.payload_bits > 0) payload = simulate_payloads(sched, cfg.payload_bits, cfg.seed);
        const std::string verdict = payload ? (*payload ? "ok" : "FAILED") : "";
        switch (cfg.format) {
            case Format::table:
                out << io::trace_table(sched, trace);
                if (payload) out << "payload check: " << verdict << '\n';
                break;
            case Format::csv:
                out << io::trace_csv(sched, trace);
                if (payload) err << "payload check: " << verdict << '\n';
                break;
            case Format::json: {
                auto j = io::to_json(sched);
                j["trace"] = io::to_json(trace);
                if (payload) j["payload_check"] = {{"bits", cfg.payload_bits}, {"seed", cfg.seed}, {"ok", *payload}};
                out << j.dump(2) << '\n';
                break;
            }
        }
        return payload && !*payload ? exit_failed : exit_ok;
    });
}

namespace {

// A forced instance the scheduler cannot complete still gets a report.
int report_schedule_failure(const RunConfig& cfg, const Instance& inst, const ScheduleError& e,
                            std::ostream& out, std::ostream& err) {
    std::string detail = e.what();
    switch (cfg.format) {
        case Format::table:
            out << "instance C=" << inst.clients() << " K=" << inst.base_size() << " P=" << inst.overlap()
                << " regime " << to_string(inst.regime()) << '\n'
                << "schedule | FAIL | " << detail << '\n'
                << "result: verification failed\n";
            break;
        case Format::csv:
            std::replace(detail.begin(), detail.end(), ',', ';');
            out << "check,ok,detail\nschedule,false," << detail << '\n';
            break;
        case Format::json:
            out << json{{"instance", io::to_json(inst)}, {"report", {{"all_ok", false}, {"schedule_error", detail}}}}
                       .dump(2)
                << '\n';
            break;
    }
    err << "check failed: schedule\n";
    return exit_failed;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto inst = instance_from(cfg);
        std::optional<Schedule> built;
        try {
            built = build_schedule(inst, ScheduleOptions{cfg.force});
        } catch (const ScheduleError& e) {
            if (!cfg.force) throw;
            return report_schedule_failure(cfg, inst, e, out, err);
        }
        const auto& sched = *built;
        const auto rep = verify(sched);
        std::optional<MutationCheck> mut;
        if (cfg.mutation) mut = verify_mutation_sensitivity(sched);
        std::optional<bool> payload;
        if (cfg.payload_bits > 0) payload = simulate_payloads(sched, cfg.payload_bits, cfg.seed);

        switch (cfg.format) {
            case Format::table:
                out << io::report_table(sched.instance(), rep);
                if (mut) out << "mutation_sensitivity: " << (mut->ok ? "pass" : "FAIL") << " ("
                             << mut->redundant.size() << " redundant transmissions)\n";
                if (payload) out << "payload check: " << (*payload ? "ok" : "FAILED") << '\n';
                break;
            case Format::csv:
                out << io::report_csv(rep);
                if (mut) out << "mutation_sensitivity," << (mut->ok ? "true" : "false") << ','
                             << mut->redundant.size() << " redundant\n";
                if (payload) out << "payload_check," << (*payload ? "true" : "false") << ",bits "
                                 << cfg.payload_bits << '\n';
                break;
            case Format::json: {
                auto j = io::to_json(sched);
                j["trace"] = io::to_json(decode_trace(sched));
                j["report"] = io::to_json(rep);
                if (mut) j["report"]["mutation_sensitivity"] = io::to_json(*mut);
                if (payload) j["report"]["payload_check"] = {{"bits", cfg.payload_bits}, {"ok", *payload}};
                out << j.dump(2) << '\n';
                break;
            }
        }
        if (!rep.all_ok()) {
            for (const auto& [name, ok] : std::initializer_list<std::pair<const char*, bool>>{
                     {"security", rep.security.ok},
                     {"counts", rep.counts.ok},
                     {"level_isolation", rep.isolation.ok},
                     {"structure_preservation", rep.structure.ok},
                     {"per_client_totals", rep.per_client_totals.ok},
                     {"decoder_agreement", rep.decoder_agreement.ok}})
                if (!ok) err << "check failed: " << name << '\n';
        }
        const bool ok = rep.all_ok() && (!mut || mut->ok) && (!payload || *payload);
        return ok ? exit_ok : exit_failed;
    });
}

std::vector<SweepRow> sweep_rows(const RunConfig& cfg) {
    std::vector<SweepRow> rows;
    for (std::uint32_t c = cfg.c_low; c <= cfg.c_high; ++c) {
        const auto r = r_max(c);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> params;  // (K, P)
        if (cfg.k && cfg.p) {
            params.emplace_back(*cfg.k, *cfg.p);
        } else {
            if (cfg.rule != SweepRule::wide) {
                const auto p = std::max<std::uint32_t>(1, r >= 2 ? r - 2 : 1);
                params.emplace_back(2 * p, p);
            }
            if (cfg.rule != SweepRule::min) params.emplace_back(2 * r + 3, r);
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());

        for (auto [k, p] : params) {
            SweepRow row{c, k, p, r, predicted_count(c), c >= 2 ? optimal_count(c) : 0, 0, ""};
            row.gap = c >= 2 ? optimality_gap(c) : 0;
            try {
                const auto inst = build_instance(c, k, p);
                if (inst.regime() == Regime::out_of_theorem && !cfg.force) {
                    std::string why;
                    for (const auto& h : inst.violated_hypotheses()) why += (why.empty() ? "" : "; ") + h;
                    row.ok = "skip:violates " + why;
                } else {
                    const auto sched = build_schedule(inst, ScheduleOptions{cfg.force});
                    row.ok = verify(sched).all_ok() ? "true" : "false";
                }
            } catch (const std::exception& e) {
                std::string why = e.what();
                std::replace(why.begin(), why.end(), ',', ';');
                row.ok = "skip:" + why;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.c_low < 2 || cfg.c_high < cfg.c_low) throw Invalid("sweep needs a range with 2 ≤ low ≤ high");
        if (cfg.k.has_value() != cfg.p.has_value()) throw Invalid("give both --K and --P, or neither");
        const auto rows = sweep_rows(cfg);
        bool failed = false;
        switch (cfg.format) {
            case Format::table:
            case Format::csv: {
                std::ostringstream os;
                os << "C,K,P,r_max,N,S_opt,gap,ok\n";
                for (const auto& r : rows)
                    os << r.c << ',' << r.k << ',' << r.p << ',' << r.r_max << ',' << r.n << ',' << r.s_opt << ','
                       << r.gap << ',' << r.ok << '\n';
                if (cfg.format == Format::csv) {
                    out << os.str();
                } else {
                    std::string s = os.str();
                    std::replace(s.begin(), s.end(), ',', '\t');
                    out << s;
                }
                break;
            }
            case Format::json: {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"c", r.c}, {"k", r.k}, {"p", r.p}, {"r_max", r.r_max}, {"n", r.n},
                                   {"s_opt", r.s_opt}, {"gap", r.gap}, {"ok", r.ok}});
                out << arr.dump(2) << '\n';
                break;
            }
        }
        for (const auto& r : rows) failed = failed || r.ok == "false";
        return failed ? exit_failed : exit_ok;
    });
}

int cmd_predict(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.c_low != cfg.c_high) throw Invalid("--C must be a single value for predict");
        const auto c = cfg.c_low;
        const auto n = predicted_count(c);
        const std::string r = c >= 1 ? std::to_string(r_max(c)) : "n/a";
        const std::string s = c >= 2 ? std::to_string(optimal_count(c)) : "n/a";
        switch (cfg.format) {
            case Format::table:
                out << "N=" << n << ", chain " << chain_text(c, "→") << ", r_max=" << r << ", S_opt=" << s << '\n';
                break;
            case Format::csv:
                out << "C,N,r_max,chain,S_opt\n" << c << ',' << n << ',' << r << ',' << chain_text(c, " ") << ','
                    << s << '\n';
                break;
            case Format::json: {
                json j{{"c", c}, {"n", n}, {"chain", recursion_chain(c)}};
                j["r_max"] = c >= 1 ? json(r_max(c)) : json(nullptr);
                j["s_opt"] = c >= 2 ? json(optimal_count(c)) : json(nullptr);
                out << j.dump(2) << '\n';
                break;
            }
        }
        return exit_ok;
    });
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << '\n';
            return exit_invalid;
        }
        sink = &file;
    }
    switch (cfg.command) {
        case Command::run: return cmd_run(cfg, *sink, err);
        case Command::trace: return cmd_trace(cfg, *sink, err);
        case Command::verify: return cmd_verify(cfg, *sink, err);
        case Command::sweep: return cmd_sweep(cfg, *sink, err);
        case Command::predict: return cmd_predict(cfg, *sink, err);
    }
    return exit_invalid;
}

namespace {

/// Accepts "9" or "3..10".
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
    auto to_u32 = [&](const std::string& part) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
            throw Invalid("bad --C value '" + s + "'");
        return static_cast<std::uint32_t>(std::stoul(part));
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = to_u32(s);
        return {v, v};
    }
    return {to_u32(s.substr(0, dots)), to_u32(s.substr(dots + 2))};
}

}  // namespace

int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secure decentralized pliable index coding scheduler for LPS-FO side-information"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string c_text;
    std::string format = "table";
    std::string rule = "min";
    std::uint32_t k = 0, p = 0;

    const std::map<std::string, Format> formats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
    const std::map<std::string, SweepRule> rules{{"min", SweepRule::min}, {"wide", SweepRule::wide}, {"both", SweepRule::both}};

    struct Sub {
        const char* name;
        const char* help;
        Command cmd;
    };
    const Sub subs[] = {
        {"run", "print the transmission schedule", Command::run},
        {"trace", "print the clients x transmissions decode trace", Command::trace},
        {"verify", "run every verifier check", Command::verify},
        {"sweep", "tabulate N(C), S_opt and verification over a range of C", Command::sweep},
        {"predict", "evaluate the transmission-count recurrence", Command::predict},
    };
    std::vector<std::pair<CLI::App*, Command>> registered;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--C", c_text, s.cmd == Command::sweep ? "client count or range lo..hi" : "client count")
            ->required();
        if (s.cmd != Command::predict) {
            sub->add_option("--K", k, "side-information size of the first client");
            sub->add_option("--P", p, "overlap between consecutive clients");
            sub->add_flag("--force", cfg.force, "schedule instances outside the theorem's hypotheses");
        }
        sub->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--output,-o", cfg.output, "write to a file instead of standard output");
        if (s.cmd == Command::trace || s.cmd == Command::verify) {
            sub->add_option("--payload-bits", cfg.payload_bits, "payload width for end-to-end simulation (0 = off)");
            sub->add_option("--seed", cfg.seed, "payload generator seed");
        }
        if (s.cmd == Command::verify)
            sub->add_flag("--mutation", cfg.mutation, "also check that no transmission is redundant");
        if (s.cmd == Command::sweep)
            sub->add_option("--rule", rule, "(K,P) rule when --K/--P are absent: min, wide or both")
                ->check(CLI::IsMember({"min", "wide", "both"}));
        registered.emplace_back(sub, s.cmd);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }

    for (const auto& [sub, cmd] : registered) {
        if (!sub->parsed()) continue;
        cfg.command = cmd;
        if (cmd == Command::predict) continue;
        if (sub->count("--K")) cfg.k = k;
        if (sub->count("--P")) cfg.p = p;
    }
    cfg.format = formats.at(format);
    cfg.rule = rules.at(rule);
    try {
        std::tie(cfg.c_low, cfg.c_high) = parse_range(c_text);
    } catch (const Invalid& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return dispatch(cfg, out, err);
}

}  // namespace dpic::cli
