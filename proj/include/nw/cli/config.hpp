#pragma once

#include <nw/exact/cyclotomic.hpp>
#include <nw/exact/matrix.hpp>
#include <nw/reflect/reflect.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nw::cli {

// Error in the configuration text itself: malformed syntax, unknown names,
// shape mismatches. Commands translate it to exit code 4.
class ParseError : public std::runtime_error {
  public:
    ParseError(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    size_t line() const { return line_; }

  private:
    size_t line_;
};

struct GridSpec {
    long side = 2;
    long denom = 7;
};

struct Caps {
    size_t max_ad_cap = 8;       // adjoint-chain nilpotency cap
    size_t max_matrix_dim = 0;   // 0 = library default
    size_t word_bound = 10;      // groupoid word length window
    size_t max_objects = 256;    // exploration budget
    GridSpec grid;
};

// One declared module: degree exponents and one action matrix per group
// generator, entries as exact cyclotomic scalars.
struct ModuleSpec {
    std::string name;
    std::vector<long> degree;
    std::vector<nw::exact::Matrix> generators;
    size_t line = 0;  // where the section started (for error reporting)
};

// Abstract mode: exchange data given directly, no algebra backend.
struct AbstractSpec {
    size_t rank = 0;
    std::vector<nw::reflect::CartanMatrix> cartans;  // per object
    std::vector<std::vector<size_t>> edges;          // per object, 0-based here
    std::vector<std::string> labels;                 // optional
};

struct Config {
    bool abstract_mode = false;

    // Concrete mode.
    std::vector<unsigned> group_factors;
    std::string cocycle_formula;  // empty when a table is given
    std::map<std::array<size_t, 3>, nw::exact::CycNumber> cocycle_table;
    bool cocycle_is_table = false;
    std::vector<ModuleSpec> modules;
    std::vector<std::string> tuple;  // declared module names

    // Abstract mode.
    AbstractSpec abstract_data;

    Caps caps;
};

// Exact scalar literal: optional sign, factors joined by '*', each factor a
// rational ("3", "-1/2") or a root of unity "z(N,k)".
nw::exact::CycNumber parse_scalar(const std::string& text, size_t line = 0);

// TOML-style subset: [section] headers, key = value lines, values being
// integers, quoted strings, or (nested) arrays; '#' comments; arrays may
// span lines until the brackets balance.
Config parse_config_text(const std::string& text);
Config parse_config_file(const std::string& path);

}  // namespace nw::cli
