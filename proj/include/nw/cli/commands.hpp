#pragma once

#include <nw/cartangraph/graph.hpp>
#include <nw/cli/config.hpp>
#include <nw/groupdata/cocycle.hpp>
#include <nw/groupdata/group.hpp>
#include <nw/ydmod/module.hpp>

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitParse = 4;

struct CommandOptions {
    std::optional<size_t> word_bound;  // overrides caps.word_bound
    std::optional<size_t> max_deg;     // graded-dimension window (default 4)
    std::string dot_path;              // write the graph in DOT format here
    std::string report_path;           // write a JSON report here
};

// Concrete-mode data with stable addresses: modules point at the cocycle and
// the cocycle points at the group, so both stay pinned on the heap for the
// lifetime of this object.
struct Materialized {
    std::shared_ptr<const groupdata::AbelianGroup> group;
    std::shared_ptr<const groupdata::ThreeCocycle> phi;
    std::vector<ydmod::YDModule> modules;  // every declared module, config order
    ydmod::ModuleTuple tuple;              // the selected tuple (may be empty)
};

// Builds group, cocycle, and modules from a concrete config. Throws
// ParseError for abstract configs and for cocycle formula syntax errors.
Materialized materialize(const Config& cfg);

// Each command prints a human-readable report to `out`, optionally writes a
// JSON report / DOT file per `opts`, and returns its exit code.
int cmd_validate(const Config& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_cartan(const Config& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_graph(const Config& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_roots(const Config& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_titscone(const Config& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_hilbert(const Config& cfg, const CommandOptions& opts, std::ostream& out);

// Dispatches by command name and converts the shared failure modes to exit
// codes: ParseError -> 4, CapExceeded -> 3 (both with a message on `out`).
int run_command(const std::string& name, const Config& cfg, const CommandOptions& opts, std::ostream& out);

}  // namespace nw::cli
