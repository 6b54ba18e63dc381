#include <doctest.h>

#include "gnc/commands.hpp"
#include "gnc/config.hpp"
#include "gnc/errors.hpp"

using namespace gnc;

namespace {

const std::string data_dir = GNC_TEST_DATA;

Config load(const std::string& name) { return load_config(data_dir + "/" + name); }

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("toy config file builds the same channel as the built-in example") {
    const Channel from_file = build_channel(load("toy.cfg"));
    const Channel builtin = toy_channel();
    REQUIRE(from_file.num_errors() == builtin.num_errors());
    REQUIRE(from_file.codewords() == builtin.codewords());
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::uint64_t i = 0; i < builtin.num_errors(); ++i) {
            REQUIRE(from_file.evaluate(x, builtin.error_at(i)) == builtin.evaluate(x, builtin.error_at(i)));
        }
    }
}

TEST_CASE("render and parse round trip") {
    for (const char* name : {"toy.cfg", "repetition.cfg", "hamming74.cfg", "rank.cfg", "sumrank.cfg", "gf4.cfg",
                             "table.cfg"}) {
        CAPTURE(name);
        const Config a = load(name);
        const Config b = parse_config(render_config(a));
        CHECK(b.field.p == a.field.p);
        CHECK(b.field.k == a.field.k);
        CHECK(b.kind == a.kind);
        CHECK(b.weight == a.weight);
        CHECK(b.codewords == a.codewords);
        CHECK(b.a == a.a);
        CHECK(b.b == a.b);
        CHECK(b.table == a.table);
        CHECK(b.network.edges == a.network.edges);
        CHECK(b.network.functions.size() == a.network.functions.size());
        for (const auto& [e, fn] : a.network.functions) CHECK(b.network.functions.at(e).table == fn.table);
        CHECK(render_config(b) == render_config(a));
    }
    const Config toy = toy_config();
    CHECK(render_config(parse_config(toy.text)) == toy.text);
}

TEST_CASE("code sources") {
    CHECK(load("hamming74.cfg").codewords.size() == 16);
    const Config rank = load("rank.cfg");
    CHECK(rank.codewords.size() == 2);
    CHECK(rank.codewords[1] == Matrix(2, 3, {1, 0, 0, 0, 1, 0}));
    const Config gf4 = load("gf4.cfg");
    CHECK(gf4.codewords.size() == 4);
    CHECK(gf4.codewords[3] == Matrix::row_vector({3, 3, 3}));
    const Config whole = parse_config("[field]\ncharacteristic = 3\n[channel]\nkind = classical\n[code]\nwhole_space = 1x2\n");
    CHECK(whole.codewords.size() == 9);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        load("unknown_key.cfg");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 6);
        CHECK(std::string(e.what()).find("wieght") != std::string::npos);
    }
    CHECK(parse_error_line("[field]\ncharacteristic = 2\n[bogus]\n") == 3);
    CHECK(parse_error_line("[field]\ncharacteristic = two\n") == 2);
    CHECK(parse_error_line("[field]\ncharacteristic = 2\ncharacteristic = 3\n") == 3);
    CHECK(parse_error_line("[field]\ncharacteristic = 3\n[channel]\nkind = classical\n[code]\ncodeword = 0,3\n"
                           "codeword = 1,1\n") == 6);
    CHECK(parse_error_line("[field]\ncharacteristic = 2\n[channel]\nkind = quantum\n") == 4);
    CHECK(parse_error_line("key = 1\n") == 1);
    CHECK(parse_error_line("[field]\ncharacteristic = 2\n[weight]\nkind = hamming\nblocks = 1\n[channel]\nkind = classical\n"
                           "[code]\ncodeword = 0\ncodeword = 1\n") == 5);
}

TEST_CASE("a single codeword is rejected") {
    try {
        load("single_codeword.cfg");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("|C| >= 2") != std::string::npos);
    }
}

TEST_CASE("incomplete tables and network maps are rejected") {
    const std::string head = "[field]\ncharacteristic = 2\n[channel]\nkind = table\nerror_shape = 1x1\noutput_shape = 1x1\n";
    CHECK_THROWS_AS(parse_config(head + "row = 0 : 0 -> 0\n[code]\ncodeword = 0\ncodeword = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config(head + "row = 0 : 0 -> 0\nrow = 0 : 0 -> 1\n[code]\ncodeword = 0\ncodeword = 1\n"),
                    ParseError);
    const std::string net =
        "[field]\ncharacteristic = 2\n[channel]\nkind = network\n[code]\ncodeword = 0\ncodeword = 1\n"
        "[network]\nnodes = s,u,t\nedges = s>u, u>t\nsource = s\nsink = t\n";
    CHECK_NOTHROW(parse_config(net + "map = u>t : 0 -> 0\nmap = u>t : 1 -> 1\n"));
    CHECK_THROWS_AS(parse_config(net + "map = u>t : 0 -> 0\n"), ParseError);
    CHECK_THROWS_AS(parse_config(net + "map = s>u : 0 -> 0\n"), ParseError);
    CHECK_THROWS_AS(parse_config(net + "map = u>t : 0,1 -> 0\n"), ParseError);
}

TEST_CASE("config hash is FNV-1a") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("symbol parsing") {
    CHECK(parse_symbols("1,0;0,1", 2) == Matrix(2, 2, {1, 0, 0, 1}));
    CHECK_THROWS_AS(parse_symbols("1,,0", 2), ParseError);
    CHECK_THROWS_AS(parse_symbols("1,0;1", 2), ParseError);
}
