#include <nw/cli/commands.hpp>

#include <nw/nichols/space.hpp>
#include <nw/reflect/reflect.hpp>
#include <nw/titscone/titscone.hpp>
#include <nw/weylroots/weyl.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nw::cli {

using json = nlohmann::json;
using nw::cartangraph::CartanGraph;
using nw::nichols::BraidedSpace;
using nw::nichols::CapExceeded;

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json cartan_json(const nw::reflect::CartanMatrix& a) {
    json rows = json::array();
    for (const auto& r : a.a) rows.push_back(r);
    return rows;
}

void write_text_file(const std::string& path, const std::string& text, const std::string& what) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + what + " file '" + path + "'");
    f << text;
}

void write_report(const std::string& path, const json& j) {
    if (!path.empty()) write_text_file(path, j.dump(2) + "\n", "report");
}

size_t side_cap(const Config& cfg) {
    return cfg.caps.max_matrix_dim ? cfg.caps.max_matrix_dim : BraidedSpace::kDefaultMaxSide;
}

std::string tuple_label(const Config& cfg) {
    std::string s = "(";
    for (size_t k = 0; k < cfg.tuple.size(); ++k) {
        if (k) s += ",";
        s += cfg.tuple[k];
    }
    return s + ")";
}

const ydmod::ModuleTuple& need_tuple(const Config& cfg, const Materialized& m) {
    if (cfg.tuple.empty()) throw ParseError(0, "this command needs a [tuple] section selecting the modules");
    return m.tuple;
}

// Explored (concrete) or user-supplied (abstract) graph, labels attached.
struct GraphBundle {
    Materialized mat;  // empty in abstract mode; keeps module addresses alive
    CartanGraph graph;
};

GraphBundle make_graph(const Config& cfg) {
    GraphBundle b;
    if (cfg.abstract_mode) {
        b.graph = nw::cartangraph::abstract_graph(cfg.abstract_data.rank, cfg.abstract_data.cartans,
                                                  cfg.abstract_data.edges, cfg.abstract_data.labels);
        return b;
    }
    b.mat = materialize(cfg);
    auto res = nw::cartangraph::explore(need_tuple(cfg, b.mat), cfg.caps.max_objects, cfg.caps.max_ad_cap,
                                        side_cap(cfg));
    if (!res.graph.closed)
        throw CapExceeded("object budget exhausted before closure (max_objects = " +
                          std::to_string(cfg.caps.max_objects) + ")");
    std::vector<const ydmod::YDModule*> refs;
    refs.reserve(b.mat.modules.size());
    for (const auto& m : b.mat.modules) refs.push_back(&m);
    nw::cartangraph::relabel(res, refs);
    b.graph = std::move(res.graph);
    return b;
}

void print_graph(const CartanGraph& g, std::ostream& out) {
    out << "objects: " << g.objects() << "\n";
    out << "rank: " << g.rank << "\n";
    out << "closed: " << yesno(g.closed) << "\n";
    out << "standard: " << yesno(g.is_standard()) << "\n";
    out << "connected: " << yesno(g.connected_from(0)) << "\n";
    for (size_t x = 0; x < g.objects(); ++x) {
        out << "object " << x << ": " << (x < g.labels.size() ? g.labels[x] : "") << " cartan "
            << g.cartans[x].str() << " edges";
        for (size_t i = 0; i < g.rank; ++i) out << " r" << (i + 1) << "->" << g.edges[x][i];
        out << "\n";
    }
    for (const std::string& v : g.violations) out << "violation: " << v << "\n";
}

json graph_json(const CartanGraph& g) {
    json j;
    j["objects"] = g.objects();
    j["rank"] = g.rank;
    j["closed"] = g.closed;
    j["standard"] = g.is_standard();
    j["connected"] = g.connected_from(0);
    j["labels"] = g.labels;
    j["edges"] = g.edges;
    json cs = json::array();
    for (const auto& a : g.cartans) cs.push_back(cartan_json(a));
    j["cartans"] = cs;
    j["violations"] = g.violations;
    return j;
}

}  // namespace

Materialized materialize(const Config& cfg) {
    if (cfg.abstract_mode) throw ParseError(0, "this command requires a concrete configuration (a [group] section)");
    Materialized m;
    m.group = std::make_shared<groupdata::AbelianGroup>(cfg.group_factors);
    if (cfg.cocycle_is_table) {
        m.phi = std::make_shared<groupdata::ThreeCocycle>(
            groupdata::ThreeCocycle::from_table(*m.group, cfg.cocycle_table));
    } else {
        try {
            m.phi = std::make_shared<groupdata::ThreeCocycle>(
                groupdata::ThreeCocycle::from_formula(*m.group, cfg.cocycle_formula));
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, e.what());
        }
    }
    for (const ModuleSpec& spec : cfg.modules) {
        try {
            m.modules.push_back(ydmod::YDModule::from_generator_actions(*m.phi, spec.name,
                                                                        m.group->element(spec.degree),
                                                                        spec.generators));
        } catch (const std::invalid_argument& e) {
            throw ParseError(spec.line, e.what());
        }
    }
    for (const std::string& name : cfg.tuple)
        for (size_t k = 0; k < m.modules.size(); ++k)
            if (m.modules[k].name() == name) m.tuple.entries.push_back(m.modules[k]);
    return m;
}

int cmd_validate(const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    std::vector<std::string> findings;
    json j;
    j["command"] = "validate";

    if (cfg.abstract_mode) {
        const CartanGraph g = nw::cartangraph::abstract_graph(cfg.abstract_data.rank, cfg.abstract_data.cartans,
                                                              cfg.abstract_data.edges, cfg.abstract_data.labels);
        out << "abstract graph: " << g.objects() << " objects, rank " << g.rank << "\n";
        findings = g.violations;
        if (findings.empty()) out << "graph axioms: ok\n";
    } else {
        const Materialized m = materialize(cfg);
        out << "group: factors (";
        for (size_t k = 0; k < cfg.group_factors.size(); ++k)
            out << (k ? "," : "") << cfg.group_factors[k];
        out << "), order " << m.group->order() << "\n";

        const std::vector<std::string> cv = m.phi->validate();
        out << "cocycle: " << (cv.empty() ? "ok" : "FAIL") << "\n";
        findings.insert(findings.end(), cv.begin(), cv.end());

        for (const auto& mod : m.modules) {
            const std::vector<std::string> mv = mod.validate();
            out << "module " << mod.name() << ": " << (mv.empty() ? "ok" : "FAIL") << "\n";
            findings.insert(findings.end(), mv.begin(), mv.end());
        }
        if (!cfg.tuple.empty()) {
            const std::vector<std::string> tv = m.tuple.validate();
            out << "tuple " << tuple_label(cfg) << ": " << (tv.empty() ? "ok" : "FAIL") << "\n";
            findings.insert(findings.end(), tv.begin(), tv.end());
        }
    }

    for (const std::string& f : findings) out << "finding: " << f << "\n";
    out << "validate: " << (findings.empty() ? "PASS" : "FAIL") << "\n";
    j["ok"] = findings.empty();
    j["findings"] = findings;
    write_report(opts.report_path, j);
    return findings.empty() ? kExitOk : kExitValidation;
}

int cmd_cartan(const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    const Materialized m = materialize(cfg);
    const nw::reflect::CartanMatrix a =
        nw::reflect::cartan_of(need_tuple(cfg, m), cfg.caps.max_ad_cap, side_cap(cfg));
    out << "tuple: " << tuple_label(cfg) << "\n";
    out << "cartan: " << a.str() << "\n";
    json j;
    j["command"] = "cartan";
    j["tuple"] = cfg.tuple;
    j["cartan"] = cartan_json(a);
    write_report(opts.report_path, j);
    return kExitOk;
}

int cmd_graph(const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    const GraphBundle b = make_graph(cfg);
    print_graph(b.graph, out);
    if (!opts.dot_path.empty()) write_text_file(opts.dot_path, b.graph.dot(), "DOT");
    json j = graph_json(b.graph);
    j["command"] = "graph";
    write_report(opts.report_path, j);
    return b.graph.violations.empty() ? kExitOk : kExitValidation;
}

int cmd_roots(const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    const GraphBundle b = make_graph(cfg);
    const CartanGraph& g = b.graph;
    const size_t bound = opts.word_bound.value_or(cfg.caps.word_bound);

    const nw::weylroots::RootSet rs = nw::weylroots::real_roots(g, 0, bound);
    out << "object 0";
    if (!g.labels.empty()) out << " " << g.labels[0];
    out << ", word bound " << bound << "\n";
    out << "roots: " << rs.size() << "\n";
    for (const auto& [root, depth] : rs.first_depth)
        out << "  " << join_longs(root) << " depth " << depth << "\n";

    json j;
    j["command"] = "roots";
    j["object"] = 0;
    j["bound"] = bound;
    json jr = json::array();
    for (const auto& [root, depth] : rs.first_depth) jr.push_back({{"root", root}, {"depth", depth}});
    j["roots"] = jr;

    json jm = json::object();
    for (size_t i = 0; i < g.rank; ++i) {
        for (size_t k = i + 1; k < g.rank; ++k) {
            const nw::weylroots::Rank2Count r2 = nw::weylroots::rank2_count(g, 0, i, k, bound);
            const std::string key = "m_" + std::to_string(i + 1) + std::to_string(k + 1);
            out << key << " = " << r2.count;
            if (r2.classified)
                out << " (classified " << *r2.classified << ", agreement " << yesno(r2.agreement) << ")";
            else
                out << " (unbounded type)";
            out << "\n";
            jm[key] = {{"count", r2.count},
                       {"classified", r2.classified ? json(*r2.classified) : json()},
                       {"agreement", r2.agreement}};
        }
    }
    j["rank2"] = jm;

    const nw::weylroots::AxiomReport ar = nw::weylroots::cartan_axioms(g, bound);
    out << "axioms: sign coherence " << yesno(ar.cg3) << ", rank-2 periodicity " << yesno(ar.cg4)
        << ", simple roots " << yesno(ar.simple_roots_present) << ", reduced " << yesno(ar.reduced)
        << ", reflection compatible " << yesno(ar.reflection_compatible) << ", rank-2 counts agree "
        << yesno(ar.rank2_agreement) << "\n";
    for (const std::string& f : ar.failures) out << "axiom failure: " << f << "\n";
    j["axioms"] = {{"cg3", ar.cg3},
                   {"cg4", ar.cg4},
                   {"simple_roots_present", ar.simple_roots_present},
                   {"reduced", ar.reduced},
                   {"reflection_compatible", ar.reflection_compatible},
                   {"rank2_agreement", ar.rank2_agreement},
                   {"failures", ar.failures}};

    if (!opts.dot_path.empty()) write_text_file(opts.dot_path, g.dot(), "DOT");
    write_report(opts.report_path, j);
    return ar.all() && g.violations.empty() ? kExitOk : kExitValidation;
}

int cmd_titscone(const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    const GraphBundle b = make_graph(cfg);
    const CartanGraph& g = b.graph;
    const size_t bound = opts.word_bound.value_or(cfg.caps.word_bound);

    const nw::titscone::TitsReport rep = nw::titscone::classify_cone(g, 0, bound);
    out << "classification: " << nw::titscone::cone_class_name(rep.classification) << "\n";
    if (!rep.null_vector.empty()) out << "null vector: v=" << join_longs(rep.null_vector) << "\n";
    out << "chambers: " << rep.chamber_count << "\n";
    out << "wall covectors: " << rep.hyperplanes.size() << "\n";
    out << "roots closed below bound: " << yesno(rep.roots_closed_below_bound) << "\n";
    out << "signals consistent: " << yesno(rep.consistent) << "\n";
    for (const std::string& n : rep.notes) out << "note: " << n << "\n";

    std::string summary = nw::titscone::cone_class_name(rep.classification);
    bool tiling_ok = true;
    json jt;
    if (rep.classification == nw::titscone::ConeClass::affine && rep.consistent) {
        out << "half-space verified: " << yesno(rep.half_space_verified) << "\n";
        out << "sum invariance verified: " << yesno(rep.sum_invariance_verified) << "\n";
        summary += ", v=" + join_longs(rep.null_vector);
        summary += rep.half_space_verified && rep.sum_invariance_verified ? ", half-space verified"
                                                                          : ", half-space check FAILED";
        const nw::titscone::TilingReport tr =
            nw::titscone::alcove_tiling_check(g, 0, bound, cfg.caps.grid.side, cfg.caps.grid.denom);
        const size_t violations = tr.interior_double + tr.uncovered;
        out << "tiling grid: " << tr.grid_points << " points, " << tr.covered << " covered, " << tr.boundary
            << " on walls, " << tr.interior_double << " interior overlaps, " << tr.uncovered << " uncovered\n";
        for (const std::string& s : tr.uncovered_samples) out << "uncovered sample: " << s << "\n";
        summary += ", tiling check: " + std::to_string(violations) + " violation" + (violations == 1 ? "" : "s");
        tiling_ok = violations == 0;
        jt = {{"grid_points", tr.grid_points}, {"covered", tr.covered},
              {"uncovered", tr.uncovered},    {"interior_double", tr.interior_double},
              {"boundary", tr.boundary},      {"uncovered_samples", tr.uncovered_samples}};
    }
    out << "summary: " << summary << "\n";

    json j;
    j["command"] = "titscone";
    j["bound"] = bound;
    j["classification"] = nw::titscone::cone_class_name(rep.classification);
    j["null_vector"] = rep.null_vector;
    j["chambers"] = rep.chamber_count;
    j["has_positive_null"] = rep.has_positive_null;
    j["roots_closed_below_bound"] = rep.roots_closed_below_bound;
    j["half_space_verified"] = rep.half_space_verified;
    j["sum_invariance_verified"] = rep.sum_invariance_verified;
    j["consistent"] = rep.consistent;
    j["hyperplanes"] = json::array();
    for (const auto& h : rep.hyperplanes) j["hyperplanes"].push_back(h);
    j["notes"] = rep.notes;
    if (!jt.is_null()) j["tiling"] = jt;
    j["summary"] = summary;

    if (!opts.dot_path.empty()) write_text_file(opts.dot_path, g.dot(), "DOT");
    write_report(opts.report_path, j);

    if (rep.classification == nw::titscone::ConeClass::nonstandard) return kExitOk;
    const bool affine_ok = rep.classification != nw::titscone::ConeClass::affine ||
                           (rep.half_space_verified && rep.sum_invariance_verified && tiling_ok);
    return rep.consistent && affine_ok ? kExitOk : kExitValidation;
}

int cmd_hilbert(const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    const Materialized m = materialize(cfg);
    need_tuple(cfg, m);
    const size_t max_deg = opts.max_deg.value_or(4);

    json j;
    j["command"] = "hilbert";
    j["max_deg"] = max_deg;
    json series = json::array();
    for (size_t k = 0; k < m.tuple.entries.size(); ++k) {
        const ydmod::YDModule& mod = m.tuple.entries[k];
        const BraidedSpace space(mod, side_cap(cfg));
        const std::vector<size_t> dims = nw::nichols::nichols_dims(space, max_deg);
        out << mod.name() << ":";
        for (size_t d : dims) out << " " << d;
        out << "\n";
        series.push_back({{"module", mod.name()}, {"dims", dims}});
    }
    j["series"] = series;
    write_report(opts.report_path, j);
    return kExitOk;
}

int run_command(const std::string& name, const Config& cfg, const CommandOptions& opts, std::ostream& out) {
    try {
        if (name == "validate") return cmd_validate(cfg, opts, out);
        if (name == "cartan") return cmd_cartan(cfg, opts, out);
        if (name == "graph") return cmd_graph(cfg, opts, out);
        if (name == "roots") return cmd_roots(cfg, opts, out);
        if (name == "titscone") return cmd_titscone(cfg, opts, out);
        if (name == "hilbert") return cmd_hilbert(cfg, opts, out);
        throw ParseError(0, "unknown command '" + name + "'");
    } catch (const ParseError& e) {
        out << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapExceeded& e) {
        out << "error: " << e.what() << "\n";
        return kExitCap;
    }
}

}  // namespace nw::cli
