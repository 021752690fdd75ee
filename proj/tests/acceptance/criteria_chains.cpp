// Criterion 12: chain stationarity against oracle distributions.

#include "criteria.hpp"
#include "treesplit/experiments.hpp"

using namespace treesplit;

namespace {

// Final-checkpoint TV of one chain kind from a chain-validate run.
double final_tv(const ChainValidateResult& result, const std::string& chain,
                std::int64_t steps) {
    double tv = -1;
    for (const ChainRow& row : result.rows) {
        if (row.chain == chain && row.step == steps) tv = row.tv;
    }
    return tv;
}

}  // namespace

ACCEPTANCE_CRITERION(12, "chain-stationarity") {
    bool ok = true;
    std::uint64_t seed = 1200;

    struct Case {
        const char* label;
        std::string family;
        int n;
        std::string chain;
    };
    const Case cases[] = {
        {"up-down C_4", "cycle", 4, "up-down"},  {"up-down C_6", "cycle", 6, "up-down"},
        {"up-down K_4", "complete", 4, "up-down"}, {"recom C_6", "cycle", 6, "recom"},
        {"recom K_6", "complete", 6, "recom"},
    };
    for (const Case& c : cases) {
        ExperimentConfig cfg;
        cfg.subcommand = "chain-validate";
        cfg.graph = c.family;
        cfg.n_list = {c.n};
        cfg.k = 2;
        cfg.slack = 0;
        cfg.trials = 20000;  // ensemble size
        cfg.steps = 256;
        cfg.seed = seed++;
        cfg.threads = acceptance::worker_threads();
        const ChainValidateResult result = run_chain_validate(cfg);
        const double tv = final_tv(result, c.chain, cfg.steps);
        log << c.label << " final tv=" << tv << "\n";
        if (!(tv >= 0 && tv < 0.05)) ok = false;
    }
    return ok;
}
