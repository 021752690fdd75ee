// Criterion 10: the hexagon-ladder pathology.

#include "criteria.hpp"
#include "treesplit/experiments.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/oracle.hpp"

using namespace treesplit;

ACCEPTANCE_CRITERION(10, "slack-gadget-pathology") {
    ExperimentConfig cfg;
    cfg.subcommand = "slack-gadget";
    cfg.n_list = {8, 10, 12, 14};
    cfg.seed = 1000;
    const SlackGadgetResult result = run_slack_gadget(cfg);

    bool ok = true;
    double previous_ratio = 0.0;
    for (const GadgetRow& row : result.rows) {
        log << "n=" << row.n << " balanced=" << row.balanced_partitions
            << " log_ratio=" << row.log_weight_ratio
            << " frozen=" << (row.chain_frozen ? "yes" : "no") << "\n";
        // (a) exactly n balanced partitions (cycle construction + ladder
        // argument checks are embedded in gadget_balanced_partitions).
        if (row.balanced_partitions != row.n) ok = false;
        // (b) every recombination proposal from every balanced state is
        // rejected or identity.
        if (!row.chain_frozen) ok = false;
        // (c) positive, strictly increasing log weight ratio.
        if (!(row.log_weight_ratio > 0)) ok = false;
        if (!(row.log_weight_ratio > previous_ratio)) ok = false;
        previous_ratio = row.log_weight_ratio;
    }

    // (a) exhaustive cross-check at n=8: the n cycle partitions are the only
    // balanced partitions at all.
    {
        const SlackGadget gadget = make_slack_gadget(8);
        const auto cycle_partitions = oracle::gadget_balanced_partitions(gadget);
        const auto exhaustive =
            oracle::enumerate_connected_partitions(gadget.graph, {8, 8, 8});
        log << "n=8 exhaustive balanced partitions: " << exhaustive.size() << "\n";
        if (exhaustive != cycle_partitions) {
            log << "exhaustive enumeration disagrees with the cycle construction\n";
            ok = false;
        }
    }

    // (c) linear growth: positive least-squares slope with small residual.
    if (!result.fit) {
        log << "no ratio fit\n";
        return false;
    }
    log << "ratio slope " << result.fit->slope << " residual " << result.fit->residual << "\n";
    if (!(result.fit->slope > 0)) ok = false;
    if (!(result.fit->residual < 0.15)) ok = false;
    return ok;
}
