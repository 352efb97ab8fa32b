#include <iomanip>
#include <iostream>
#include <string>

#include "ed/construct.hpp"
#include "ed/search.hpp"
#include "ed/system.hpp"

// Times the free-set search over the full variable space of the eight-point
// 5-design system (C(24,6) = 134596 rank tests with no structural filter)
// and checks that every worker count reproduces the serial hit list.
int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    const ed::WeightedPointSet X = ed::antipodal_five_design_r2(2.0);
    const ed::DesignSystem sys = ed::build_design_system(X, 5, false);

    ed::SearchOptions opt;
    opt.size = sys.num_variables() - sys.num_equations();
    opt.constraint =
        quick ? ed::PairConstraint::SameShellNonAntipodal
              : ed::PairConstraint::None;

    std::cout << "system: " << sys.num_equations() << " equations, "
              << sys.num_variables() << " variables, free-set size "
              << opt.size << (quick ? " (filtered)" : " (unfiltered)")
              << "\n\n";
    std::cout << std::left << std::setw(10) << "workers" << std::setw(12)
              << "seconds" << std::setw(12) << "tests" << std::setw(10)
              << "hits" << "speedup\n";

    const ed::SearchResult serial = ed::search_free_sets_serial(sys, opt);
    std::cout << std::left << std::setw(10) << "serial" << std::setw(12)
              << std::fixed << std::setprecision(3) << serial.seconds
              << std::setw(12) << serial.candidates_tested << std::setw(10)
              << serial.hits.size() << "1.00\n";

    bool consistent = true;
    for (int jobs : {2, 4, 0}) {
        opt.jobs = jobs;
        const ed::SearchResult par = ed::search_free_sets(sys, opt);
        const std::string label =
            jobs == 0 ? "all" : std::to_string(jobs);
        std::cout << std::left << std::setw(10) << label << std::setw(12)
                  << std::fixed << std::setprecision(3) << par.seconds
                  << std::setw(12) << par.candidates_tested << std::setw(10)
                  << par.hits.size() << std::setprecision(2)
                  << serial.seconds / par.seconds << '\n';
        consistent = consistent && par.hits == serial.hits;
    }
    if (!consistent) {
        std::cerr << "\nFAIL: parallel hit lists differ from serial\n";
        return 1;
    }
    std::cout << "\nall worker counts match the serial hit list\n";
    return 0;
}
