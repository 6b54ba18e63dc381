#include <doctest.h>

#include "gnc/commands.hpp"
#include "gnc/decoder.hpp"
#include "gnc/errors.hpp"
#include "gnc/report.hpp"

using namespace gnc;

namespace {

const std::string data_dir = GNC_TEST_DATA;

std::string cell(const Report& r, const std::string& title, const std::string& key) {
    for (const auto& t : r.tables) {
        if (t.title != title) continue;
        for (const auto& row : t.rows) {
            if (!row.empty() && row.front() == key) return row.back();
        }
    }
    return "<missing>";
}

}  // namespace

TEST_CASE("structured reports round trip") {
    Report r;
    r.command = "verify";
    r.config_hash = 0xfedcba9876543210ULL;
    r.seed = 42;
    r.exit_code = 1;
    r.tables.push_back(Table{"t", {"a", "b"}, {{"1", "inf"}, {"x", "y"}}});
    r.distances.push_back({"(#0,#1)", "D0", std::nullopt, Distance(3)});
    r.distances.push_back({"min", "D2[c]", 4, Distance::infinite()});
    r.verdicts.push_back(TheoremVerdict{"bound.x", "a >= b", VerdictStatus::fail, 3, 1, "(#0,#1): a=1", "n"});
    r.notes.push_back("note with \"quotes\"");
    r.timing.emplace_back("build", 0.1234567890123);
    const Report back = parse_structured(render_structured(r));
    CHECK(back == r);
    CHECK_THROWS_AS(parse_structured("{"), ParseError);
}

TEST_CASE("every command report round trips") {
    const Config toy = toy_config();
    for (const Report& r : {cmd_distances(toy), cmd_capability(toy), cmd_joint(toy, 0, 1), cmd_verify(toy),
                            cmd_decode(toy, "1,0,0", 1), cmd_classify(toy)}) {
        CAPTURE(r.command);
        CHECK(parse_structured(render_structured(r)) == r);
        CHECK(render_text(r).find("command: " + r.command) != std::string::npos);
    }
}

TEST_CASE("commands are thin adapters over the engine") {
    const Config toy = toy_config();
    const Channel ch = build_channel(toy);
    const DistanceEngine engine(ch);
    const auto r = minimum_distances(engine);
    const Report d = cmd_distances(toy);
    for (const auto& e : d.distances) {
        if (e.pair != "min") continue;
        if (e.metric == "D0") CHECK(e.value == r.d0_min);
        if (e.metric == "D1") CHECK(e.value == r.d1_min);
        if (e.metric == "D2") CHECK(e.value == r.d2_min);
        if (e.metric == "D2[c]") CHECK(e.value == r.d2_min_at(*e.c));
    }
    CHECK(cell(d, "minimum distances", "d0min") == "3");
    CHECK(cell(d, "minimum distances", "d1min") == "2");
    CHECK(cell(d, "minimum distances", "d2min") == "2");

    const Report cap = cmd_capability(toy);
    CHECK(cell(cap, "capability", "corrects") == "1");
    CHECK(cell(cap, "capability", "detects") == "1");

    CHECK(cmd_joint(toy, 0, 1).tables.front().rows.front().back() == "true");
    CHECK(cmd_joint(toy, 0, 2, true).tables.front().rows.front().back() == "false");

    CHECK(cmd_decode(toy, "0,0,0").tables.front().rows.front().back() == "Decoded (0,0,0)");
    CHECK(cmd_decode(toy, "1,0,0", 1).tables.front().rows.front().back() == "Decoded (0,0,0)");
    CHECK(cmd_decode(toy, "2,2,2", 1).tables.front().rows.front().back() == "Detected");
    CHECK_THROWS_AS(cmd_decode(toy, "0,0,0", 2), InvalidDecoderError);
    CHECK_THROWS_AS(cmd_decode(toy, "0,0", std::nullopt), ParseError);

    const Report v = cmd_verify(toy);
    CHECK(v.exit_code == 0);
    CommandOptions bad;
    bad.corrupt_distances = true;
    CHECK(cmd_verify(toy, bad).exit_code == 1);
}

TEST_CASE("budget override applies") {
    CommandOptions o;
    o.max_pairs = 100;
    CHECK_THROWS_AS(cmd_distances(toy_config(), o), BudgetError);
}

TEST_CASE("linear matrix configs pass the error-linear suite") {
    for (const char* name : {"rank.cfg", "sumrank.cfg", "hamming74.cfg", "gf4.cfg"}) {
        CAPTURE(name);
        const Report v = cmd_verify(load_config(data_dir + "/" + name));
        CHECK(v.exit_code == 0);
        for (const auto& t : v.verdicts) {
            if (t.id.rfind("linear.", 0) == 0) {
                CAPTURE(t.id);
                CHECK(t.status == VerdictStatus::pass);
            }
        }
    }
}
