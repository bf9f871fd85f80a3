#ifndef GWDT_VERIFY_HPP
#define GWDT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gwdt {

struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    std::string witness;  // populated exactly when the check failed

    void add_param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void fail(const std::string& w) {
        pass = false;
        if (!witness.empty()) witness += "; ";
        witness += w;
    }
};

// Degree-one identity: graph sum, closed form and sheaf count agree on every
// admissible (l1, l2) with |l1|,|l2| <= bound.
CheckReport check_d1_identity(int bound);

// Degree-two sweep against the closed form on the same range; also records
// the extracted degree-two sheaf count per pair.
CheckReport check_d2_sweep(int bound);

// Geometry (0,-1): invariants 1/(d^3 lambda1), extracted counts vanish
// beyond degree one.
CheckReport check_conifold(int dmax);

// Parity of beta^2 and c1.beta on blow-up lattices (exhaustive small box and
// random samples at r = rmax) and on the quadric.
CheckReport check_parity(int random_samples, int rmax, std::uint64_t seed);

std::string report_json(const CheckReport& r);

}  // namespace gwdt

#endif
