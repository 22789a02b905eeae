#pragma once

#include "rsg/cli/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rsg::cli {

struct RunConfig {
    int digits = 40;
    bool fast_mode = false;
    std::string output_format = "text";
    std::optional<std::string> output_path;
    int parallelism = 1;

    void validate() const;
    Json to_json() const;
};

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any task is rethrown.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

// Messages for stderr (regime warnings, fallback notices).
using Notify = std::function<void(const std::string&)>;

Report cmd_table(int id, const RunConfig& cfg);

struct EvalArgs {
    std::string s;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> lambda;
    int n_terms = 1;
    std::string mode = "general";  // general | intermediate | exact
};
Report cmd_eval(const EvalArgs& args, const RunConfig& cfg, const Notify& notify);

struct CoeffsArgs {
    int n = 0;
    std::optional<int> k_min;
    std::optional<int> k_max;
    std::optional<std::string> sigma;  // exact rational
    int cap = 20;
};
Report cmd_coeffs(const CoeffsArgs& args, const RunConfig& cfg);

struct MordellArgs {
    std::string u;
    std::string tau;  // "m/n" with integers selects the closed form too
    int k = 0;
};
Report cmd_mordell(const MordellArgs& args, const RunConfig& cfg, const Notify& notify);

struct DecayArgs {
    std::string study = "afe";  // afe | order | theta
    std::optional<std::string> lambda;
    std::optional<std::string> sigma;
    std::optional<int> n_terms;
    std::vector<double> t_values;  // overrides the log grid
    double t_min = 100;
    double t_max = 10000;
    int points = 9;
    std::string frac_beta = "1/5";
    // Order sweep at a fixed point instead of a t grid.
    std::optional<std::string> s;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::vector<int> orders;
};
Report cmd_decay(const DecayArgs& args, const RunConfig& cfg);

// Exit status for a finished report: 0 when nothing failed, 1 otherwise.
int exit_status(const Report& r);

} // namespace rsg::cli
