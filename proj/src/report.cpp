#include "gnc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "gnc/errors.hpp"

namespace gnc {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

namespace {

void render_table(std::ostringstream& o, const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += "  ";
            s += row[i];
            if (i + 1 < row.size()) s.append(width[i] - row[i].size(), ' ');
        }
        o << "  " << s << "\n";
    };
    o << t.title << "\n";
    if (!t.header.empty()) {
        line(t.header);
        std::size_t total = 0;
        for (auto w : width) total += w;
        o << "  " << std::string(total + 2 * (width.size() - 1), '-') << "\n";
    }
    for (const auto& r : t.rows) line(r);
    o << "\n";
}

std::string status_tag(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "PASS";
        case VerdictStatus::fail: return "FAIL";
        case VerdictStatus::not_applicable: return "N/A ";
    }
    return "?";
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream o;
    o << "command: " << r.command << "  config: " << hex64(r.config_hash) << "  seed: " << r.seed << "\n\n";
    for (const auto& t : r.tables) render_table(o, t);
    if (!r.verdicts.empty()) {
        std::size_t pass = 0, fail = 0, na = 0;
        for (const auto& v : r.verdicts) {
            pass += v.status == VerdictStatus::pass;
            fail += v.status == VerdictStatus::fail;
            na += v.status == VerdictStatus::not_applicable;
        }
        o << "ledger: " << pass << " pass, " << fail << " fail, " << na << " not applicable\n";
        for (const auto& v : r.verdicts) {
            o << "  " << status_tag(v.status) << "  " << v.id << "  [" << v.instances << " checked";
            if (v.skipped) o << ", " << v.skipped << " skipped";
            o << "]  " << v.statement << "\n";
            if (!v.counterexample.empty()) o << "        counterexample: " << v.counterexample << "\n";
            if (!v.note.empty()) o << "        note: " << v.note << "\n";
        }
        o << "\n";
    }
    if (!r.notes.empty()) {
        o << "notes:\n";
        for (const auto& n : r.notes) o << "  " << n << "\n";
        o << "\n";
    }
    if (!r.timing.empty()) {
        o << "timing:";
        for (const auto& [phase, sec] : r.timing) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s %.3fs", phase.c_str(), sec);
            o << buf;
        }
        o << "\n";
    }
    return o.str();
}

std::string render_structured(const Report& r) {
    json j;
    j["command"] = r.command;
    j["config_hash"] = hex64(r.config_hash);
    j["seed"] = r.seed;
    j["exit_code"] = r.exit_code;
    j["tables"] = json::array();
    for (const auto& t : r.tables) j["tables"].push_back({{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
    j["distances"] = json::array();
    for (const auto& d : r.distances) {
        json e = {{"pair", d.pair}, {"metric", d.metric}, {"infinite", d.value.is_infinite()}};
        e["c"] = d.c ? json(*d.c) : json(nullptr);
        e["value"] = d.value.is_finite() ? json(d.value.value()) : json(nullptr);
        j["distances"].push_back(std::move(e));
    }
    j["verdicts"] = json::array();
    for (const auto& v : r.verdicts) {
        j["verdicts"].push_back({{"id", v.id},
                                 {"statement", v.statement},
                                 {"status", to_string(v.status)},
                                 {"instances", v.instances},
                                 {"skipped", v.skipped},
                                 {"counterexample", v.counterexample},
                                 {"note", v.note}});
    }
    j["notes"] = r.notes;
    j["timing"] = json::array();
    for (const auto& [phase, sec] : r.timing) j["timing"].push_back({{"phase", phase}, {"seconds", sec}});
    return j.dump(2) + "\n";
}

Report parse_structured(std::string_view text) {
    try {
        const json j = json::parse(text);
        Report r;
        r.command = j.at("command").get<std::string>();
        r.config_hash = std::stoull(j.at("config_hash").get<std::string>(), nullptr, 16);
        r.seed = j.at("seed").get<std::uint64_t>();
        r.exit_code = j.at("exit_code").get<int>();
        for (const auto& t : j.at("tables")) {
            r.tables.push_back(Table{t.at("title").get<std::string>(), t.at("header").get<std::vector<std::string>>(),
                                     t.at("rows").get<std::vector<std::vector<std::string>>>()});
        }
        for (const auto& e : j.at("distances")) {
            DistanceEntry d;
            d.pair = e.at("pair").get<std::string>();
            d.metric = e.at("metric").get<std::string>();
            if (!e.at("c").is_null()) d.c = e.at("c").get<std::size_t>();
            if (!e.at("infinite").get<bool>()) d.value = Distance(e.at("value").get<std::size_t>());
            r.distances.push_back(std::move(d));
        }
        for (const auto& v : j.at("verdicts")) {
            TheoremVerdict t;
            t.id = v.at("id").get<std::string>();
            t.statement = v.at("statement").get<std::string>();
            t.status = verdict_status_from_string(v.at("status").get<std::string>());
            t.instances = v.at("instances").get<std::size_t>();
            t.skipped = v.at("skipped").get<std::size_t>();
            t.counterexample = v.at("counterexample").get<std::string>();
            t.note = v.at("note").get<std::string>();
            r.verdicts.push_back(std::move(t));
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
        for (const auto& t : j.at("timing")) {
            r.timing.emplace_back(t.at("phase").get<std::string>(), t.at("seconds").get<double>());
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("structured report: ") + e.what());
    }
}

}  // namespace gnc
