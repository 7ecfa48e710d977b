#include "mvsim/trace_io.hpp"

#include <sstream>

namespace mvsim {

namespace {

constexpr const char* kTraceHeader = "mvsim-trace 1";

std::optional<Light> light_from_token(const std::string& t) {
    if (t == "Off") return Light::Off;
    if (t == "Red") return Light::Red;
    return std::nullopt;
}

std::optional<Role> role_from_token(const std::string& t) {
    if (t == "Corner") return Role::Corner;
    if (t == "Side") return Role::Side;
    if (t == "Interior") return Role::Interior;
    if (t == "LineCase") return Role::LineCase;
    if (t == "Alone") return Role::Alone;
    if (t == "-") return std::nullopt;
    throw ParseError("trace: unknown role token '" + t + "'");
}

void write_round(std::ostringstream& out, int round, const Configuration& cfg,
                 const RoundEvents* ev) {
    out << "round " << round << '\n';
    for (size_t i = 0; i < cfg.robots.size(); ++i) {
        const Robot& r = cfg.robots[i];
        std::optional<Role> role;
        if (ev && i < ev->roles.size()) role = ev->roles[i];
        out << "robot " << r.id << ' ' << format_double(r.center.x) << ' '
            << format_double(r.center.y) << ' ' << light_name(r.light) << ' ' << role_name(role)
            << ' ' << (r.terminated ? 1 : 0) << '\n';
    }
    if (!ev) return;
    for (const MoveEvent& m : ev->moves)
        out << "move " << m.id << ' ' << format_double(m.from.x) << ' ' << format_double(m.from.y)
            << ' ' << format_double(m.to.x) << ' ' << format_double(m.to.y) << '\n';
    for (const LightEvent& l : ev->light_changes)
        out << "light " << l.id << ' ' << light_name(l.from) << ' ' << light_name(l.to) << '\n';
    for (const ViolationEvent& v : ev->violations)
        out << "violation " << v.kind << ' ' << v.i << ' ' << v.j << ' ' << format_double(v.value)
            << '\n';
}

}  // namespace

std::string light_name(Light l) { return l == Light::Off ? "Off" : "Red"; }

std::string role_name(const std::optional<Role>& r) {
    if (!r) return "-";
    switch (*r) {
        case Role::Corner: return "Corner";
        case Role::Side: return "Side";
        case Role::Interior: return "Interior";
        case Role::LineCase: return "LineCase";
        case Role::Alone: return "Alone";
    }
    return "-";
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Solved: return "Solved";
        case Outcome::MaxRoundsExceeded: return "MaxRoundsExceeded";
        case Outcome::Violation: return "Violation";
    }
    return "Violation";
}

std::string trace_to_text(const Trace& trace) {
    std::ostringstream out;
    out << kTraceHeader << '\n';
    out << "n " << trace.initial.robots.size() << '\n';
    out << "seed " << trace.scenario.params.seed << '\n';
    out << "frames " << frame_policy_name(trace.scenario.params.policy) << '\n';
    out << "predict " << (trace.scenario.params.predict ? 1 : 0) << '\n';
    out << "k " << trace.scenario.params.k_samples << '\n';
    out << "max_rounds " << trace.scenario.params.max_rounds << '\n';
    write_round(out, 0, trace.initial, nullptr);
    for (size_t r = 0; r < trace.rounds.size(); ++r)
        write_round(out, static_cast<int>(r) + 1, trace.rounds[r].config,
                    &trace.rounds[r].events);
    out << "outcome " << outcome_name(trace.outcome) << '\n';
    out << "rounds " << trace.rounds.size() << '\n';
    return out.str();
}

ParsedTrace trace_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kTraceHeader)
        throw ParseError("trace: missing or unsupported header");

    ParsedTrace tr;
    bool have_outcome = false;
    ParsedRound* current = nullptr;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "n") ls >> tr.n;
        else if (key == "seed") ls >> tr.seed;
        else if (key == "frames") {
            std::string v;
            ls >> v;
            tr.policy = frame_policy_from_name(v);
        } else if (key == "predict") {
            int v;
            ls >> v;
            tr.predict = v != 0;
        } else if (key == "k") ls >> tr.k_samples;
        else if (key == "max_rounds") ls >> tr.max_rounds;
        else if (key == "round") {
            ParsedRound r;
            ls >> r.round;
            tr.rounds.push_back(r);
            current = &tr.rounds.back();
        } else if (key == "robot") {
            if (!current) throw ParseError("trace: robot line outside a round");
            ParsedRobot r;
            std::string light, role;
            int term = 0;
            ls >> r.id >> r.pos.x >> r.pos.y >> light >> role >> term;
            if (!ls) throw ParseError("trace: malformed robot line '" + line + "'");
            r.light_token = light;
            r.light = light_from_token(light);
            r.role = role_from_token(role);
            r.terminated = term != 0;
            current->robots.push_back(r);
        } else if (key == "move") {
            if (!current) throw ParseError("trace: move line outside a round");
            MoveEvent m{};
            ls >> m.id >> m.from.x >> m.from.y >> m.to.x >> m.to.y;
            if (!ls) throw ParseError("trace: malformed move line");
            current->moves.push_back(m);
        } else if (key == "light") {
            std::string from, to;
            int id;
            ls >> id >> from >> to;  // recomputable from robot lines; not stored
        } else if (key == "violation") {
            if (!current) throw ParseError("trace: violation line outside a round");
            ViolationEvent v;
            ls >> v.kind >> v.i >> v.j >> v.value;
            current->violations.push_back(v);
        } else if (key == "outcome") {
            ls >> tr.outcome_token;
            have_outcome = true;
        } else if (key == "rounds") {
            ls >> tr.total_rounds;
        } else {
            throw ParseError("trace: unknown key '" + key + "'");
        }
        if (!ls) throw ParseError("trace: malformed line '" + line + "'");
    }
    if (tr.rounds.empty()) throw ParseError("trace: no rounds");
    if (!have_outcome) throw ParseError("trace: missing outcome");
    for (size_t r = 0; r < tr.rounds.size(); ++r) {
        if (tr.rounds[r].round != static_cast<int>(r))
            throw ParseError("trace: round indices must be 0..T in order");
        if (static_cast<long>(tr.rounds[r].robots.size()) != tr.n)
            throw ParseError("trace: robot count mismatch in a round");
        for (const ParsedRobot& p : tr.rounds[r].robots)
            if (!is_finite(p.pos)) throw ParseError("trace: non-finite position");
    }
    if (tr.total_rounds != static_cast<int>(tr.rounds.size()) - 1)
        throw ParseError("trace: rounds count mismatch");
    return tr;
}

}  // namespace mvsim
