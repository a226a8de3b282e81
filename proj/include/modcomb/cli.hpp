#pragma once

#include "modcomb/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. Every command prints one JSON report:
//   {"schema", "command", "inputs", "results", "certificates", ["notes"]}
// Exit codes: 0 success, 1 input error, 2 verification failure.
namespace modcomb::cli {

using json = nlohmann::json;

inline constexpr const char* schema_version = "modcomb-report/1";

enum ExitCode { OK = 0, INPUT_ERROR = 1, VERIFY_FAILED = 2 };

// Thrown when a computed certificate does not hold (maps to exit code 2).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rationals travel as "p/q" strings.
json rat_json(const Rat& r);
json rats_json(const RatVec& v);
// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
json int_json(const BigInt& z);

json report(const std::string& command, json inputs, json results, json certificates);

// Census reports for the stratifications; certificates included.
json dm_census_report(int n);
json lm_census_report(int n);

// Re-checks the certificates of a census report from its own data; throws
// InputError on schema or shape problems and VerificationError when a
// certificate fails.
void validate_census(const json& report);

void save_census(const std::string& path, const json& report);
json load_census(const std::string& path);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Cross-module verification: suite is all, hypersimplex, weights, strata or
// series. Deterministic for a fixed seed.
std::vector<Check> verify(const std::string& suite, int n, std::uint64_t seed);

} // namespace modcomb::cli
