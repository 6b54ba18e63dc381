#include "gnc/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gnc/errors.hpp"

namespace gnc {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, const std::string& what) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, what + ": expected a nonnegative integer, got '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s, std::size_t line, const std::string& what) {
    std::vector<std::uint64_t> out;
    for (auto part : split(s, ',')) out.push_back(parse_uint(part, line, what));
    return out;
}

Shape parse_shape(std::string_view s, std::size_t line, const std::string& what) {
    const auto x = s.find('x');
    if (x == std::string_view::npos) throw ParseError(line, what + ": expected RxC, got '" + std::string(s) + "'");
    Shape sh{parse_uint(s.substr(0, x), line, what), parse_uint(s.substr(x + 1), line, what)};
    if (sh.rows == 0 || sh.cols == 0) throw ParseError(line, what + ": shape must be nonempty");
    return sh;
}

Matrix symbols_at(std::string_view text, std::size_t q, std::size_t line, const std::string& what) {
    std::vector<Symbol> data;
    std::size_t rows = 0, cols = 0;
    for (auto row : split(text, ';')) {
        const auto values = parse_list(row, line, what);
        if (rows > 0 && values.size() != cols) throw ParseError(line, what + ": rows have different lengths");
        cols = values.size();
        ++rows;
        for (auto v : values) {
            if (v >= q) {
                throw ParseError(line, what + ": symbol " + std::to_string(v) + " is outside a field of size " +
                                           std::to_string(q));
            }
            data.push_back(static_cast<Symbol>(v));
        }
    }
    return Matrix(rows, cols, std::move(data));
}

struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
};

// Allowed keys per section; repeatable keys are marked with a trailing '*'.
const std::map<std::string, std::set<std::string>>& grammar() {
    static const std::map<std::string, std::set<std::string>> g = {
        {"field", {"characteristic", "degree", "modulus", "max_size"}},
        {"weight", {"kind", "blocks"}},
        {"channel", {"kind", "a", "b", "error_shape", "output_shape", "row*"}},
        {"code", {"codeword*", "generator", "shape", "whole_space"}},
        {"network", {"nodes", "edges", "source", "sink", "emission", "map*"}},
        {"budget", {"max_pairs"}},
    };
    return g;
}

class Sections {
public:
    explicit Sections(std::string_view text) {
        std::string section;
        std::size_t line_no = 0;
        std::istringstream in{std::string(text)};
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string_view line = raw;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                if (!grammar().contains(section)) throw ParseError(line_no, "unknown section [" + section + "]");
                if (!seen_.insert(section).second) throw ParseError(line_no, "section [" + section + "] repeated");
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
            if (section.empty()) throw ParseError(line_no, "entry outside any section");
            const std::string key(trim(line.substr(0, eq)));
            const auto& keys = grammar().at(section);
            const bool repeatable = keys.contains(key + "*");
            if (!repeatable && !keys.contains(key)) {
                throw ParseError(line_no, "unknown key '" + key + "' in [" + section + "]");
            }
            auto& bucket = entries_[section];
            if (!repeatable && std::any_of(bucket.begin(), bucket.end(), [&](const Entry& e) { return e.key == key; })) {
                throw ParseError(line_no, "duplicate key '" + key + "' in [" + section + "]");
            }
            bucket.push_back(Entry{key, std::string(trim(line.substr(eq + 1))), line_no});
        }
    }

    bool has_section(const std::string& s) const { return seen_.contains(s); }

    const Entry* get(const std::string& section, const std::string& key) const {
        auto it = entries_.find(section);
        if (it == entries_.end()) return nullptr;
        for (const auto& e : it->second) {
            if (e.key == key) return &e;
        }
        return nullptr;
    }

    const Entry& require(const std::string& section, const std::string& key) const {
        if (const auto* e = get(section, key)) return *e;
        throw ParseError(0, "missing key '" + key + "' in [" + section + "]");
    }

    std::vector<Entry> all(const std::string& section, const std::string& key) const {
        std::vector<Entry> out;
        auto it = entries_.find(section);
        if (it == entries_.end()) return out;
        for (const auto& e : it->second) {
            if (e.key == key) out.push_back(e);
        }
        return out;
    }

    // Keys present in a section that the channel kind does not use.
    void forbid(const std::string& section, const std::vector<std::string>& keys, const std::string& why) const {
        for (const auto& k : keys) {
            if (const auto* e = get(section, k)) throw ParseError(e->line, "key '" + k + "' " + why);
        }
    }

private:
    std::set<std::string> seen_;
    std::map<std::string, std::vector<Entry>> entries_;
};

std::size_t edge_index(const NetworkSpec& spec, std::string_view text, std::size_t line) {
    const auto gt = text.find('>');
    if (gt == std::string_view::npos) throw ParseError(line, "expected an edge tail>head, got '" + std::string(text) + "'");
    const std::string tail(trim(text.substr(0, gt)));
    const std::string head(trim(text.substr(gt + 1)));
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        if (spec.edges[i].tail == tail && spec.edges[i].head == head) return i;
    }
    throw ParseError(line, "unknown edge " + tail + ">" + head);
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

void parse_network(const Sections& s, Config& c, std::size_t q) {
    NetworkSpec& net = c.network;
    for (auto n : split(s.require("network", "nodes").value, ',')) net.nodes.emplace_back(n);
    const auto& edges = s.require("network", "edges");
    for (auto e : split(edges.value, ',')) {
        const auto gt = e.find('>');
        if (gt == std::string_view::npos) throw ParseError(edges.line, "expected tail>head, got '" + std::string(e) + "'");
        net.edges.push_back(Edge{std::string(trim(e.substr(0, gt))), std::string(trim(e.substr(gt + 1)))});
    }
    net.source = s.require("network", "source").value;
    net.sink = s.require("network", "sink").value;
    if (const auto* em = s.get("network", "emission")) {
        for (auto e : split(em->value, ',')) net.emission.push_back(edge_index(net, e, em->line));
    }

    std::map<std::size_t, std::vector<std::optional<Symbol>>> rows;
    for (const auto& m : s.all("network", "map")) {
        const auto colon = m.value.find(':');
        const auto arrow = m.value.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
            throw ParseError(m.line, "expected map = tail>head : inputs -> output");
        }
        const std::string_view v = m.value;
        const std::size_t e = edge_index(net, v.substr(0, colon), m.line);
        const auto& edge = net.edges[e];
        if (edge.tail == net.source) throw ParseError(m.line, "source edge " + edge.name() + " takes no function");
        const std::size_t indeg = incoming_edges(net, edge.tail).size();
        const auto inputs = symbols_at(v.substr(colon + 1, arrow - colon - 1), q, m.line, "map inputs");
        const auto output = symbols_at(v.substr(arrow + 2), q, m.line, "map output");
        if (inputs.rows() != 1 || inputs.cols() != indeg) {
            throw ParseError(m.line, "map for " + edge.name() + " needs " + std::to_string(indeg) +
                                         " inputs, one per incoming edge of " + edge.tail);
        }
        if (output.rows() != 1 || output.cols() != 1) throw ParseError(m.line, "map output must be one symbol");
        auto& table = rows[e];
        table.resize(ipow(q, indeg));
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < indeg; ++k) idx = idx * q + inputs(0, k);
        if (table[idx]) throw ParseError(m.line, "duplicate map row for " + edge.name());
        table[idx] = output(0, 0);
    }
    for (auto& [e, table] : rows) {
        LocalFunction fn;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (!table[i]) {
                throw ParseError(0, "map for " + net.edges[e].name() + " misses input row " + std::to_string(i) +
                                        " (base-" + std::to_string(q) + " index)");
            }
            fn.table.push_back(*table[i]);
        }
        net.functions.emplace(e, std::move(fn));
    }
    try {
        validate_network(net, q);
    } catch (const SpecificationError& err) {
        throw ParseError(0, std::string("network: ") + err.what());
    }
}

}  // namespace

Matrix parse_symbols(std::string_view text, std::size_t q) { return symbols_at(text, q, 0, "symbols"); }

Config parse_config(std::string_view text) {
    const Sections s(text);
    Config c;
    c.text = std::string(text);

    const auto& p = s.require("field", "characteristic");
    c.field.p = static_cast<std::uint32_t>(parse_uint(p.value, p.line, "characteristic"));
    if (const auto* k = s.get("field", "degree")) c.field.k = static_cast<std::uint32_t>(parse_uint(k->value, k->line, "degree"));
    if (const auto* m = s.get("field", "modulus")) {
        for (auto v : parse_list(m->value, m->line, "modulus")) c.field.modulus.push_back(static_cast<std::uint32_t>(v));
    }
    if (const auto* m = s.get("field", "max_size")) c.max_field_size = parse_uint(m->value, m->line, "max_size");
    Field f = Field::prime(2);
    try {
        f = Field(c.field, c.max_field_size);
    } catch (const Error& e) {
        throw ParseError(p.line, std::string("field: ") + e.what());
    }
    const std::size_t q = f.size();

    if (const auto* kind = s.get("weight", "kind")) {
        WeightKind wk{};
        try {
            wk = weight_kind_from_string(kind->value);
        } catch (const SpecificationError& e) {
            throw ParseError(kind->line, e.what());
        }
        if (wk == WeightKind::hamming) {
            c.weight = WeightMeasure::hamming();
        } else if (wk == WeightKind::rank) {
            c.weight = WeightMeasure::rank();
        } else {
            const auto& blocks = s.require("weight", "blocks");
            std::vector<std::size_t> widths;
            for (auto v : parse_list(blocks.value, blocks.line, "blocks")) widths.push_back(v);
            try {
                c.weight = WeightMeasure::sum_rank(widths);
            } catch (const Error& e) {
                throw ParseError(blocks.line, e.what());
            }
        }
        if (wk != WeightKind::sum_rank) s.forbid("weight", {"blocks"}, "applies to sum_rank weights only");
    }

    if (const auto* m = s.get("budget", "max_pairs")) c.budget.max_pairs = parse_uint(m->value, m->line, "max_pairs");

    const auto& kind = s.require("channel", "kind");
    c.kind = kind.value;
    if (c.kind != "classical" && c.kind != "matrix" && c.kind != "network" && c.kind != "table") {
        throw ParseError(kind.line, "unknown channel kind '" + c.kind + "'");
    }
    if (c.kind != "matrix") s.forbid("channel", {"a", "b"}, "applies to matrix channels only");
    if (c.kind != "table") s.forbid("channel", {"error_shape", "output_shape", "row"}, "applies to table channels only");
    if (c.kind != "network" && s.has_section("network")) throw ParseError(0, "[network] requires kind = network");
    if ((c.kind == "classical" || c.kind == "network") && c.weight.kind() != WeightKind::hamming) {
        throw ParseError(kind.line, c.kind + " channels use the Hamming weight");
    }

    // Codewords.
    const auto listed = s.all("code", "codeword");
    const auto* generator = s.get("code", "generator");
    const auto* whole = s.get("code", "whole_space");
    const int sources = (!listed.empty()) + (generator != nullptr) + (whole != nullptr);
    if (sources != 1) throw ParseError(0, "[code] needs exactly one of codeword, generator, whole_space");
    if (!generator) s.forbid("code", {"shape"}, "applies to generator codes only");
    if (!listed.empty()) {
        for (const auto& e : listed) {
            auto x = symbols_at(e.value, q, e.line, "codeword");
            if (!c.codewords.empty() && shape_of(x) != shape_of(c.codewords.front())) {
                throw ParseError(e.line, "codeword shape differs from the first codeword");
            }
            if (std::find(c.codewords.begin(), c.codewords.end(), x) != c.codewords.end()) {
                throw ParseError(e.line, "duplicate codeword [" + x.to_string() + "]");
            }
            c.codewords.push_back(std::move(x));
        }
    } else if (generator) {
        const auto g = symbols_at(generator->value, q, generator->line, "generator");
        Shape shape{1, g.cols()};
        if (const auto* sh = s.get("code", "shape")) {
            shape = parse_shape(sh->value, sh->line, "shape");
            if (shape.entries() != g.cols()) throw ParseError(sh->line, "shape does not match the generator length");
        }
        std::vector<Matrix> flat;
        try {
            flat = span_codewords(f, g);
        } catch (const Error& e) {
            throw ParseError(generator->line, e.what());
        }
        for (const auto& v : flat) {
            c.codewords.emplace_back(shape.rows, shape.cols, std::vector<Symbol>(v.entries().begin(), v.entries().end()));
        }
    } else {
        const auto shape = parse_shape(whole->value, whole->line, "whole_space");
        try {
            c.codewords = whole_space(f, shape);
        } catch (const Error& e) {
            throw ParseError(whole->line, e.what());
        }
    }
    if (c.codewords.size() < 2) throw ParseError(0, "the code needs at least two codewords, |C| >= 2");

    if (c.kind == "matrix") {
        const auto& a = s.require("channel", "a");
        const auto& b = s.require("channel", "b");
        c.a = symbols_at(a.value, q, a.line, "a");
        c.b = symbols_at(b.value, q, b.line, "b");
        if (c.a.rows() != c.codewords.front().cols()) {
            throw ParseError(a.line, "a has " + std::to_string(c.a.rows()) + " rows but codewords have " +
                                         std::to_string(c.codewords.front().cols()) + " columns");
        }
        if (c.a.cols() != c.b.cols()) throw ParseError(b.line, "a and b need the same number of columns");
    } else if (c.kind == "table") {
        const auto& es = s.require("channel", "error_shape");
        const auto& os = s.require("channel", "output_shape");
        c.error_shape = parse_shape(es.value, es.line, "error_shape");
        c.output_shape = parse_shape(os.value, os.line, "output_shape");
        const MatrixSpace errors(c.error_shape.rows, c.error_shape.cols, q);
        if (!errors.fits_u64() || errors.size() * c.codewords.size() > c.budget.max_pairs) {
            throw ParseError(es.line, "table would exceed the pair budget");
        }
        const std::uint64_t n_err = errors.size();
        std::vector<std::optional<Matrix>> table(c.codewords.size() * n_err);
        for (const auto& r : s.all("channel", "row")) {
            const std::string_view v = r.value;
            const auto colon = v.find(':');
            const auto arrow = v.find("->");
            if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
                throw ParseError(r.line, "expected row = <codeword index> : <z> -> <y>");
            }
            const auto xi = parse_uint(v.substr(0, colon), r.line, "codeword index");
            if (xi >= c.codewords.size()) throw ParseError(r.line, "codeword index out of range");
            auto z = symbols_at(v.substr(colon + 1, arrow - colon - 1), q, r.line, "error");
            auto y = symbols_at(v.substr(arrow + 2), q, r.line, "output");
            if (shape_of(z) != c.error_shape) throw ParseError(r.line, "error is not " + c.error_shape.to_string());
            if (shape_of(y) != c.output_shape) throw ParseError(r.line, "output is not " + c.output_shape.to_string());
            auto& slot = table[xi * n_err + errors.index_of(z)];
            if (slot) throw ParseError(r.line, "duplicate row for codeword " + std::to_string(xi) + " and error [" + z.to_string() + "]");
            slot = std::move(y);
        }
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (!table[i]) {
                throw ParseError(0, "table misses the row for codeword " + std::to_string(i / n_err) + " and error [" +
                                        errors.at(i % n_err).to_string() + "]");
            }
            c.table.push_back(std::move(*table[i]));
        }
    } else if (c.kind == "network") {
        if (!s.has_section("network")) throw ParseError(kind.line, "network channels need a [network] section");
        parse_network(s, c, q);
    } else if (c.codewords.front().rows() != 1) {
        throw ParseError(kind.line, "classical channels take vector codewords");
    }
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

std::string join_matrix(const Matrix& m) { return m.to_string(); }

}  // namespace

std::string render_config(const Config& c) {
    std::ostringstream o;
    o << "[field]\ncharacteristic = " << c.field.p << "\ndegree = " << c.field.k << "\n";
    if (!c.field.modulus.empty()) {
        o << "modulus = ";
        for (std::size_t i = 0; i < c.field.modulus.size(); ++i) o << (i ? "," : "") << c.field.modulus[i];
        o << "\n";
    }
    o << "max_size = " << c.max_field_size << "\n\n[weight]\n";
    switch (c.weight.kind()) {
        case WeightKind::hamming: o << "kind = hamming\n"; break;
        case WeightKind::rank: o << "kind = rank\n"; break;
        case WeightKind::sum_rank: {
            o << "kind = sum_rank\nblocks = ";
            for (std::size_t i = 0; i < c.weight.blocks().size(); ++i) o << (i ? "," : "") << c.weight.blocks()[i];
            o << "\n";
            break;
        }
    }
    o << "\n[channel]\nkind = " << c.kind << "\n";
    if (c.kind == "matrix") o << "a = " << join_matrix(c.a) << "\nb = " << join_matrix(c.b) << "\n";
    if (c.kind == "table") {
        o << "error_shape = " << c.error_shape.to_string() << "\noutput_shape = " << c.output_shape.to_string() << "\n";
        const std::size_t n_err = c.table.size() / c.codewords.size();
        const MatrixSpace errors(c.error_shape.rows, c.error_shape.cols, Field(c.field, c.max_field_size).size());
        for (std::size_t i = 0; i < c.table.size(); ++i) {
            o << "row = " << i / n_err << " : " << errors.at(i % n_err).to_string() << " -> " << c.table[i].to_string()
              << "\n";
        }
    }
    o << "\n[code]\n";
    for (const auto& x : c.codewords) o << "codeword = " << x.to_string() << "\n";
    if (c.kind == "network") {
        const auto& n = c.network;
        o << "\n[network]\nnodes = ";
        for (std::size_t i = 0; i < n.nodes.size(); ++i) o << (i ? "," : "") << n.nodes[i];
        o << "\nedges = ";
        for (std::size_t i = 0; i < n.edges.size(); ++i) o << (i ? ", " : "") << n.edges[i].tail << ">" << n.edges[i].head;
        o << "\nsource = " << n.source << "\nsink = " << n.sink << "\n";
        if (!n.emission.empty()) {
            o << "emission = ";
            for (std::size_t i = 0; i < n.emission.size(); ++i) {
                o << (i ? ", " : "") << n.edges[n.emission[i]].tail << ">" << n.edges[n.emission[i]].head;
            }
            o << "\n";
        }
        const std::size_t q = Field(c.field, c.max_field_size).size();
        for (const auto& [e, fn] : n.functions) {
            const std::size_t indeg = incoming_edges(n, n.edges[e].tail).size();
            for (std::size_t idx = 0; idx < fn.table.size(); ++idx) {
                std::vector<std::size_t> digits(indeg);
                std::size_t rest = idx;
                for (std::size_t k = indeg; k-- > 0;) {
                    digits[k] = rest % q;
                    rest /= q;
                }
                o << "map = " << n.edges[e].tail << ">" << n.edges[e].head << " : ";
                for (std::size_t k = 0; k < indeg; ++k) o << (k ? "," : "") << digits[k];
                o << " -> " << fn.table[idx] << "\n";
            }
        }
    }
    o << "\n[budget]\nmax_pairs = " << c.budget.max_pairs << "\n";
    return o.str();
}

Config toy_config() {
    const auto ex = toy_example();
    Config c;
    c.field = ex.field.spec();
    c.kind = "network";
    c.codewords = ex.codewords;
    c.network = ex.spec;
    c.budget.max_pairs = 1'000'000;
    c.text = render_config(c);
    return c;
}

Field config_field(const Config& c) { return Field(c.field, c.max_field_size); }

Channel build_channel(const Config& c) {
    const Field f = config_field(c);
    if (c.kind == "classical") return classical_channel(f, c.codewords, c.budget);
    if (c.kind == "matrix") return matrix_channel(f, c.codewords, c.a, c.b, c.weight, c.budget);
    if (c.kind == "table") {
        return table_channel(f, c.codewords, c.error_shape, c.weight, c.output_shape, c.table, c.budget);
    }
    if (c.kind == "network") return compile_network(c.network, f, c.codewords, c.budget);
    throw SpecificationError("unknown channel kind '" + c.kind + "'");
}

}  // namespace gnc
