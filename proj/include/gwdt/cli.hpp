#ifndef GWDT_CLI_HPP
#define GWDT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gwdt {

struct SweepRow {
    long long l1, l2;
    std::string gw;
    std::string dt_extracted;
    bool oracle_match;
};

// formats: "csv", "json", "text"; byte-stable for fixed input
std::string emit_table(const std::vector<SweepRow>& rows, const std::string& format);

// The command-line front end. Exit codes: 0 all good, 1 check failure,
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwdt

#endif
