#ifndef RUMOR_CONFIG_HPP
#define RUMOR_CONFIG_HPP

#include <string>
#include <vector>

#include "rumor/abm.hpp"
#include "rumor/integrator.hpp"
#include "rumor/model.hpp"

namespace rumor {

/// Fully resolved run configuration. Model rate keys have no defaults and
/// must all be present in the parsed text; engine keys fall back to the
/// documented defaults. Unknown keys are an error.
struct RunConfig {
    ModelParams params;
    IntegrationOptions integration;
    AbmOptions abm;
    int runs = 1;
    std::string out_dir = ".";

    /// The complete resolved configuration as `key = value` lines, suitable
    /// for embedding in output file headers.
    std::vector<std::string> dump() const;
};

/// Parse `key = value` text ('#' starts a comment, blank lines allowed).
/// Errors carry the offending line number. `default_out_dir` seeds out_dir
/// when the text does not set it (the CLI passes the environment override).
RunConfig parse_config(const std::string& text,
                       const std::string& default_out_dir = ".");

/// parse_config() on a file's contents.
RunConfig load_config(const std::string& path,
                      const std::string& default_out_dir = ".");

} // namespace rumor

#endif
