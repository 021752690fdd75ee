// Criteria 7 and 8: splittability scaling exponents.

#include <cmath>

#include "criteria.hpp"
#include "treesplit/experiments.hpp"

using namespace treesplit;

ACCEPTANCE_CRITERION(7, "complete-graph-scaling") {
    bool ok = true;
    {
        ExperimentConfig cfg;
        cfg.subcommand = "splittability-scan";
        cfg.graph = "complete";
        cfg.n_list = {200, 400, 800, 1600, 3200, 6400, 12800};
        cfg.k = 2;
        cfg.trials = 100000;
        cfg.seed = 700;
        cfg.threads = acceptance::worker_threads();
        const ScanResult scan = run_splittability_scan(cfg);
        if (!scan.fit) {
            log << "k=2: no fit\n";
            return false;
        }
        log << "k=2 slope " << scan.fit->slope << " (target -0.5 +/- 0.1), residual "
            << scan.fit->residual << "\n";
        if (!(std::abs(scan.fit->slope - (-0.5)) <= 0.1)) ok = false;
    }
    {
        ExperimentConfig cfg;
        cfg.subcommand = "splittability-scan";
        cfg.graph = "complete";
        cfg.n_list = {300, 600, 1200, 2400, 4800};
        cfg.k = 3;
        cfg.trials = 100000;
        cfg.seed = 701;
        cfg.threads = acceptance::worker_threads();
        const ScanResult scan = run_splittability_scan(cfg);
        if (!scan.fit) {
            log << "k=3: no fit\n";
            return false;
        }
        log << "k=3 slope " << scan.fit->slope << " (target -1.0 +/- 0.15), residual "
            << scan.fit->residual << "\n";
        if (!(std::abs(scan.fit->slope - (-1.0)) <= 0.15)) ok = false;
    }
    return ok;
}

ACCEPTANCE_CRITERION(8, "dense-random-graph-lower-bound") {
    ExperimentConfig cfg;
    cfg.subcommand = "splittability-scan";
    cfg.graph = "gnm";
    cfg.n_list = {16, 32, 64, 128, 256};
    cfg.k = 2;
    cfg.p = 0.5;
    cfg.trials = 10000;
    cfg.seed = 800;
    cfg.threads = acceptance::worker_threads();
    const ScanResult scan = run_splittability_scan(cfg);

    // One-sided consistency with the n^(-k/2 - O(1)) lower bound: anchor the
    // constant at the first point, then later lower CIs must clear the
    // n^(-1.5) curve, and the fitted slope must not fall below -1.5.
    bool ok = true;
    const double n0 = scan.rows.front().n_vertices / 2.0;
    const double anchor = scan.rows.front().estimate.point * std::pow(n0, 1.5);
    for (std::size_t i = 1; i < scan.rows.size(); ++i) {
        const double n = scan.rows[i].n_vertices / 2.0;
        const double floor = anchor * std::pow(n, -1.5);
        log << "N=" << scan.rows[i].n_vertices << " point=" << scan.rows[i].estimate.point
            << " ci_low=" << scan.rows[i].estimate.ci_low << " floor=" << floor << "\n";
        if (!(scan.rows[i].estimate.ci_low > floor)) ok = false;
    }
    if (!scan.fit) {
        log << "no fit\n";
        return false;
    }
    log << "fitted slope " << scan.fit->slope << " (must be >= -1.5)\n";
    if (!(scan.fit->slope >= -1.5)) ok = false;
    return ok;
}
