#include <nw/cli/config.hpp>

#include <nw/groupdata/group.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nw::cli {

using nw::exact::CycNumber;

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Strips a '#' comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (size_t k = 0; k < line.size(); ++k) {
        if (line[k] == '"') quoted = !quoted;
        if (line[k] == '#' && !quoted) return line.substr(0, k);
    }
    return line;
}

int bracket_delta(const std::string& s) {
    int d = 0;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') quoted = !quoted;
        if (quoted) continue;
        if (c == '[') ++d;
        if (c == ']') --d;
    }
    return d;
}

struct Value {
    enum class Kind { integer, string, array, raw };
    Kind kind = Kind::raw;
    long num = 0;
    std::string str;  // string payload or raw token text
    std::vector<Value> arr;
    size_t line = 0;
};

struct ValueParser {
    const std::string& s;
    size_t pos = 0;
    size_t line;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, msg); }

    Value parse_value() {
        skip_ws();
        if (pos >= s.size()) fail("missing value");
        if (s[pos] == '"') return parse_string();
        if (s[pos] == '[') return parse_array();
        return parse_bare();
    }

    Value parse_string() {
        Value v;
        v.kind = Value::Kind::string;
        v.line = line;
        ++pos;  // opening quote
        while (pos < s.size() && s[pos] != '"') {
            if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
            v.str += s[pos++];
        }
        if (pos >= s.size()) fail("unterminated string");
        ++pos;  // closing quote
        return v;
    }

    Value parse_array() {
        Value v;
        v.kind = Value::Kind::array;
        v.line = line;
        ++pos;  // '['
        skip_ws();
        if (pos < s.size() && s[pos] == ']') {
            ++pos;
            return v;
        }
        while (true) {
            v.arr.push_back(parse_value());
            skip_ws();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                skip_ws();
                if (pos < s.size() && s[pos] == ']') {  // trailing comma
                    ++pos;
                    return v;
                }
                continue;
            }
            if (pos < s.size() && s[pos] == ']') {
                ++pos;
                return v;
            }
            fail("expected ',' or ']' in array");
        }
    }

    // Bare token: runs to the next top-level ',' or ']'; parentheses keep
    // their commas (cyclotomic literals are z(N,k)).
    Value parse_bare() {
        Value v;
        v.line = line;
        int paren = 0;
        std::string tok;
        while (pos < s.size()) {
            const char c = s[pos];
            if (paren == 0 && (c == ',' || c == ']')) break;
            if (c == '(') ++paren;
            if (c == ')') --paren;
            tok += c;
            ++pos;
        }
        tok = trim(tok);
        if (tok.empty()) fail("missing value");
        const bool num = tok.find_first_not_of("+-0123456789") == std::string::npos &&
                         tok.find_first_of("0123456789") != std::string::npos;
        if (num) {
            v.kind = Value::Kind::integer;
            try {
                v.num = std::stol(tok);
            } catch (const std::exception&) {
                fail("integer out of range: '" + tok + "'");
            }
        } else {
            v.kind = Value::Kind::raw;
            v.str = tok;
        }
        return v;
    }
};

struct Entry {
    std::string key;
    Value val;
    size_t line = 0;
};

struct Section {
    std::string name;
    size_t line = 0;
    std::vector<Entry> entries;

    const Value* find(const std::string& key) const {
        for (const Entry& e : entries)
            if (e.key == key) return &e.val;
        return nullptr;
    }
};

std::vector<Section> lex_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const size_t start_line = lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']' && bracket_delta(line) == 0 &&
            line.find('=') == std::string::npos) {
            sections.push_back({trim(line.substr(1, line.size() - 2)), start_line, {}});
            continue;
        }
        // key = value; pull further lines until the brackets balance.
        int depth = bracket_delta(line);
        while (depth > 0 && std::getline(in, raw)) {
            ++lineno;
            const std::string more = strip_comment(raw);
            line += ' ';
            line += trim(more);
            depth += bracket_delta(more);
        }
        if (depth != 0) throw ParseError(start_line, "unbalanced brackets");
        const size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(start_line, "expected 'key = value' or '[section]'");
        if (sections.empty()) throw ParseError(start_line, "entry before any [section]");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError(start_line, "empty key");
        const std::string rest = trim(line.substr(eq + 1));
        ValueParser vp{rest, 0, start_line};
        Value v = vp.parse_value();
        vp.skip_ws();
        if (vp.pos != rest.size()) throw ParseError(start_line, "trailing text after value");
        sections.back().entries.push_back({key, std::move(v), start_line});
    }
    return sections;
}

long expect_int(const Value& v, const std::string& what) {
    if (v.kind != Value::Kind::integer) throw ParseError(v.line, what + " must be an integer");
    return v.num;
}

size_t expect_count(const Value& v, const std::string& what) {
    const long n = expect_int(v, what);
    if (n < 0) throw ParseError(v.line, what + " must be nonnegative");
    return static_cast<size_t>(n);
}

std::string expect_string(const Value& v, const std::string& what) {
    if (v.kind != Value::Kind::string) throw ParseError(v.line, what + " must be a quoted string");
    return v.str;
}

const std::vector<Value>& expect_array(const Value& v, const std::string& what) {
    if (v.kind != Value::Kind::array) throw ParseError(v.line, what + " must be an array");
    return v.arr;
}

std::vector<long> expect_int_array(const Value& v, const std::string& what) {
    std::vector<long> out;
    for (const Value& e : expect_array(v, what)) out.push_back(expect_int(e, what + " entry"));
    return out;
}

CycNumber scalar_of(const Value& v) {
    switch (v.kind) {
        case Value::Kind::integer: return CycNumber(v.num);
        case Value::Kind::raw: return parse_scalar(v.str, v.line);
        case Value::Kind::string: return parse_scalar(v.str, v.line);
        case Value::Kind::array: throw ParseError(v.line, "expected a scalar, found an array");
    }
    throw ParseError(v.line, "expected a scalar");
}

nw::exact::Matrix expect_matrix(const Value& v, const std::string& what) {
    const auto& rows = expect_array(v, what);
    if (rows.empty()) throw ParseError(v.line, what + " must have at least one row");
    const size_t cols = expect_array(rows[0], what + " row").size();
    nw::exact::Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& row = expect_array(rows[r], what + " row");
        if (row.size() != cols) throw ParseError(rows[r].line, what + " rows differ in length");
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_of(row[c]);
    }
    return m;
}

void parse_cocycle_table_entry(const std::string& text, size_t line, const nw::groupdata::AbelianGroup& g,
                               std::map<std::array<size_t, 3>, CycNumber>& table) {
    const size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "table entry must look like 'e1;e2;e3 = value'");
    const std::string lhs = text.substr(0, eq);
    std::array<size_t, 3> key{};
    size_t start = 0;
    for (int part = 0; part < 3; ++part) {
        const size_t sep = part < 2 ? lhs.find(';', start) : lhs.size();
        if (sep == std::string::npos) throw ParseError(line, "table key needs three ';'-separated elements");
        std::vector<long> exps;
        std::istringstream es(lhs.substr(start, sep - start));
        std::string tok;
        while (std::getline(es, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) throw ParseError(line, "empty exponent in table key");
            try {
                exps.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw ParseError(line, "bad exponent '" + tok + "' in table key");
            }
        }
        if (exps.size() != g.rank()) throw ParseError(line, "table key exponent count does not match the group rank");
        key[static_cast<size_t>(part)] = g.index_of(g.element(exps));
        start = sep + 1;
    }
    table[key] = parse_scalar(text.substr(eq + 1), line);
}

}  // namespace

CycNumber parse_scalar(const std::string& text, size_t line) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError(line, "empty scalar");
    bool negate = false;
    if (s[0] == '+' || s[0] == '-') {
        negate = s[0] == '-';
        s = trim(s.substr(1));
    }
    if (s.empty()) throw ParseError(line, "dangling sign in scalar");

    CycNumber out(1);
    size_t start = 0;
    int paren = 0;
    for (size_t k = 0; k <= s.size(); ++k) {
        if (k < s.size()) {
            if (s[k] == '(') ++paren;
            if (s[k] == ')') --paren;
        }
        if (k < s.size() && !(s[k] == '*' && paren == 0)) continue;
        const std::string factor = trim(s.substr(start, k - start));
        start = k + 1;
        if (factor.empty()) throw ParseError(line, "empty factor in scalar");
        if (factor.size() > 2 && factor[0] == 'z' && factor[1] == '(') {
            if (factor.back() != ')') throw ParseError(line, "malformed cyclotomic literal '" + factor + "'");
            const std::string args = factor.substr(2, factor.size() - 3);
            const size_t comma = args.find(',');
            if (comma == std::string::npos) throw ParseError(line, "z(N,k) needs two arguments");
            try {
                const long n = std::stol(trim(args.substr(0, comma)));
                const long e = std::stol(trim(args.substr(comma + 1)));
                if (n <= 0) throw ParseError(line, "z(N,k) needs N >= 1");
                out *= CycNumber::zeta(static_cast<unsigned>(n), e);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError(line, "malformed cyclotomic literal '" + factor + "'");
            }
        } else {
            try {
                out *= CycNumber(nw::exact::parse_rational(factor));
            } catch (const std::exception&) {
                throw ParseError(line, "bad scalar factor '" + factor + "'");
            }
        }
    }
    return negate ? -out : out;
}

Config parse_config_text(const std::string& text) {
    const std::vector<Section> sections = lex_sections(text);
    Config cfg;

    const Section* group = nullptr;
    const Section* cocycle = nullptr;
    const Section* tuple = nullptr;
    const Section* caps = nullptr;
    const Section* abstract = nullptr;
    std::vector<const Section*> modsecs;

    for (const Section& s : sections) {
        if (s.name == "group") group = &s;
        else if (s.name == "cocycle") cocycle = &s;
        else if (s.name == "tuple") tuple = &s;
        else if (s.name == "caps") caps = &s;
        else if (s.name == "abstract") abstract = &s;
        else if (s.name.rfind("module.", 0) == 0) modsecs.push_back(&s);
        else throw ParseError(s.line, "unknown section [" + s.name + "]");
    }

    if (abstract && group) throw ParseError(abstract->line, "[abstract] and [group] cannot both be present");
    if (!abstract && !group) throw ParseError(1, "config needs a [group] or an [abstract] section");

    if (caps) {
        for (const Entry& e : caps->entries) {
            if (e.key == "max_ad_cap") cfg.caps.max_ad_cap = expect_count(e.val, "max_ad_cap");
            else if (e.key == "max_matrix_dim") cfg.caps.max_matrix_dim = expect_count(e.val, "max_matrix_dim");
            else if (e.key == "word_bound") cfg.caps.word_bound = expect_count(e.val, "word_bound");
            else if (e.key == "max_objects") cfg.caps.max_objects = expect_count(e.val, "max_objects");
            else if (e.key == "grid_side") cfg.caps.grid.side = expect_int(e.val, "grid_side");
            else if (e.key == "grid_denom") cfg.caps.grid.denom = expect_int(e.val, "grid_denom");
            else throw ParseError(e.line, "unknown caps key '" + e.key + "'");
        }
        if (cfg.caps.max_ad_cap == 0) throw ParseError(caps->line, "max_ad_cap must be positive");
        if (cfg.caps.grid.side <= 0 || cfg.caps.grid.denom <= 0)
            throw ParseError(caps->line, "grid_side and grid_denom must be positive");
    }

    if (abstract) {
        cfg.abstract_mode = true;
        const Value* rank = abstract->find("rank");
        if (!rank) throw ParseError(abstract->line, "[abstract] needs rank");
        cfg.abstract_data.rank = expect_count(*rank, "rank");
        if (cfg.abstract_data.rank == 0) throw ParseError(rank->line, "rank must be positive");

        if (const Value* labels = abstract->find("labels"))
            for (const Value& l : expect_array(*labels, "labels"))
                cfg.abstract_data.labels.push_back(expect_string(l, "label"));

        for (size_t obj = 1;; ++obj) {
            const Value* cm = abstract->find("cartan" + std::to_string(obj));
            const Value* ed = abstract->find("edges" + std::to_string(obj));
            if (!cm && !ed) break;
            if (!cm || !ed)
                throw ParseError(abstract->line,
                                 "object " + std::to_string(obj) + " needs both cartan and edges entries");
            nw::reflect::CartanMatrix a;
            for (const Value& row : expect_array(*cm, "cartan" + std::to_string(obj)))
                a.a.push_back(expect_int_array(row, "cartan row"));
            if (a.size() != cfg.abstract_data.rank) throw ParseError(cm->line, "cartan matrix size differs from rank");
            cfg.abstract_data.cartans.push_back(std::move(a));

            const std::vector<long> edges = expect_int_array(*ed, "edges" + std::to_string(obj));
            if (edges.size() != cfg.abstract_data.rank)
                throw ParseError(ed->line, "edges entry count differs from rank");
            std::vector<size_t> e0;
            for (long e : edges) {
                if (e < 1) throw ParseError(ed->line, "edges are 1-based object ids");
                e0.push_back(static_cast<size_t>(e - 1));
            }
            cfg.abstract_data.edges.push_back(std::move(e0));
        }
        if (cfg.abstract_data.cartans.empty()) throw ParseError(abstract->line, "[abstract] needs cartan1/edges1");
        for (const auto& e : cfg.abstract_data.edges)
            for (size_t t : e)
                if (t >= cfg.abstract_data.cartans.size())
                    throw ParseError(abstract->line, "edge target beyond the declared objects");
        if (!cfg.abstract_data.labels.empty() && cfg.abstract_data.labels.size() != cfg.abstract_data.cartans.size())
            throw ParseError(abstract->line, "labels count differs from the object count");
        return cfg;
    }

    // Concrete mode.
    const Value* factors = group->find("factors");
    if (!factors) throw ParseError(group->line, "[group] needs factors");
    for (long f : expect_int_array(*factors, "factors")) {
        if (f < 1) throw ParseError(factors->line, "group invariant factors must be positive");
        cfg.group_factors.push_back(static_cast<unsigned>(f));
    }
    if (cfg.group_factors.empty()) throw ParseError(factors->line, "group must have at least one factor");
    const nw::groupdata::AbelianGroup g(cfg.group_factors);

    if (!cocycle) throw ParseError(group->line, "config needs a [cocycle] section");
    const Value* formula = cocycle->find("formula");
    const Value* table = cocycle->find("table");
    if ((formula == nullptr) == (table == nullptr))
        throw ParseError(cocycle->line, "[cocycle] needs exactly one of formula or table");
    if (formula) {
        cfg.cocycle_formula = expect_string(*formula, "formula");
    } else {
        cfg.cocycle_is_table = true;
        for (const Value& e : expect_array(*table, "table"))
            parse_cocycle_table_entry(expect_string(e, "table entry"), e.line, g, cfg.cocycle_table);
    }

    for (const Section* ms : modsecs) {
        ModuleSpec spec;
        spec.name = ms->name.substr(std::string("module.").size());
        spec.line = ms->line;
        if (spec.name.empty()) throw ParseError(ms->line, "module section needs a name: [module.NAME]");
        const Value* degree = ms->find("degree");
        if (!degree) throw ParseError(ms->line, "[" + ms->name + "] needs degree");
        spec.degree = expect_int_array(*degree, "degree");
        if (spec.degree.size() != g.rank()) throw ParseError(degree->line, "degree length differs from the group rank");
        for (size_t l = 1; l <= g.rank(); ++l) {
            const Value* gen = ms->find("gen" + std::to_string(l));
            if (!gen) throw ParseError(ms->line, "[" + ms->name + "] needs gen" + std::to_string(l));
            nw::exact::Matrix m = expect_matrix(*gen, "gen" + std::to_string(l));
            if (m.rows() != m.cols()) throw ParseError(gen->line, "generator matrices must be square");
            if (!spec.generators.empty() && m.rows() != spec.generators[0].rows())
                throw ParseError(gen->line, "generator matrices differ in dimension");
            spec.generators.push_back(std::move(m));
        }
        for (const ModuleSpec& prev : cfg.modules)
            if (prev.name == spec.name) throw ParseError(ms->line, "duplicate module name '" + spec.name + "'");
        cfg.modules.push_back(std::move(spec));
    }

    if (tuple) {
        const Value* names = tuple->find("modules");
        if (!names) throw ParseError(tuple->line, "[tuple] needs modules");
        for (const Value& n : expect_array(*names, "modules")) {
            const std::string name = expect_string(n, "tuple entry");
            const bool known = std::any_of(cfg.modules.begin(), cfg.modules.end(),
                                           [&](const ModuleSpec& m) { return m.name == name; });
            if (!known) throw ParseError(n.line, "tuple references unknown module '" + name + "'");
            cfg.tuple.push_back(name);
        }
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace nw::cli
