// One PASS/FAIL line per acceptance criterion over the default instance
// matrix. A criterion passes when its check passes on every instance and the
// frozen goldens agree.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "dualpolar/verify.hpp"
#include "goldens.hpp"

using namespace dualpolar;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::vector<std::string> problems;
};

} // namespace

int main()
{
    std::vector<Criterion> criteria{
        {"enumeration", "enumeration counts", {}},
        {"lattice_laws", "lattice laws", {}},
        {"counting", "counting formulas", {}},
        {"distance_regularity", "distance-regularity", {}},
        {"spectrum", "spectrum and idempotents", {}},
        {"eigenvalue_series", "eigenvalues from the terminating series", {}},
        {"filtration_laplacian", "filtration and Laplacian identities", {}},
        {"tight_frames", "tight frames", {}},
        {"frame_expansion", "pi_1 frame expansion", {}},
        {"norton", "Norton product", {}},
        {"qseries", "q-series unit layer", {}},
    };
    std::map<std::string, Criterion*> by_id;
    for (auto& c : criteria)
        by_id[c.id] = &c;

    const auto& gold = goldens::instances();
    const auto specs = verify::default_matrix();
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const auto& spec = specs[k];
        const auto& g = gold.at(k);
        const std::string name = spec.name();
        if (g.family != spec.family || g.d != spec.d || g.r != spec.r) {
            for (auto& c : criteria)
                c.problems.push_back(name + ": goldens out of step with the instance matrix");
            continue;
        }
        const auto rep = verify::verify_instance(spec);
        std::cerr << name << ":";
        for (const auto& c : rep.checks)
            std::cerr << " " << c.id << "=" << verify::status_name(c.status);
        std::cerr << "\n";
        for (const auto& c : rep.checks) {
            auto* crit = by_id.at(c.id);
            if (c.status != verify::Status::Pass) {
                crit->problems.push_back(name + ": " + c.reason);
                continue;
            }
            try {
                if (c.id == "enumeration") {
                    if (c.data.at("level_sizes").get<std::vector<long>>() != g.level_sizes)
                        crit->problems.push_back(name + ": level sizes differ from the goldens");
                } else if (c.id == "spectrum") {
                    if (c.data.at("multiplicities").get<std::vector<int>>() != g.multiplicities)
                        crit->problems.push_back(name + ": multiplicities differ from the goldens");
                } else if (c.id == "tight_frames") {
                    const auto& lv = c.data.at("levels");
                    if (static_cast<int>(lv.size()) != spec.d + 1)
                        crit->problems.push_back(name + ": not every level was checked");
                    const auto want = std::to_string(g.lambda1) + "/1";
                    if (lv.at(1).at("lambda") != want || lv.at(1).at("lambda_closed") != want)
                        crit->problems.push_back(name + ": lambda_1 differs from " + want);
                } else if (c.id == "norton") {
                    if (spec.d >= 3) {
                        if (c.data.at("rank2_join").get<long>() == 0 || c.data.contains("rank2_join_skipped"))
                            crit->problems.push_back(name + ": rank-2 case not exercised");
                    } else if (!c.data.contains("rank2_join_skipped") ||
                               c.data.at("rank2_join_skipped").at("reason").get<std::string>().empty()) {
                        crit->problems.push_back(name + ": d = 2 rank-2 case not reported as skipped");
                    }
                    if (c.data.at("projection_identity").get<long>() == 0)
                        crit->problems.push_back(name + ": no projection identities checked");
                } else if (c.id == "frame_expansion") {
                    if (c.data.at("random_vectors").get<int>() < 100)
                        crit->problems.push_back(name + ": fewer than 100 random vectors");
                } else if (c.id == "counting") {
                    if (c.data.at("base_spaces").get<int>() < 20)
                        crit->problems.push_back(name + ": fewer than 20 base spaces");
                }
            } catch (const std::exception& e) {
                crit->problems.push_back(name + ": malformed report: " + e.what());
            }
        }
    }

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const bool ok = c.problems.empty();
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << c.title;
        if (!ok)
            std::cout << ": " << c.problems.front() << (c.problems.size() > 1 ? " (and more)" : "");
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
