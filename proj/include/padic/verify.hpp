#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "padic/reciprocity.hpp"

namespace padic::verify {

inline constexpr const char* kSchema = "padic-verify-report/1";

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// key = value lines, '#' starts a comment. Keys: precision, guard, n_trunc, families, timings.
struct Config {
    int precision = 10;  // M
    int guard = 4;
    int n_trunc = 40;
    std::vector<std::string> families{"one_minus_zT", "cyclotomic_c", "kza"};
    bool timings = false;  // wall times make reports non-reproducible, so they are opt-in

    bool operator==(const Config&) const = default;
};
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

// Unused fields keep their zero/empty defaults and are omitted from JSON.
struct CheckParams {
    u64 p = 3;
    int d = 1;
    std::string z;       // "1", "-1", integer residue (Teichmueller lift), "w" or "w^k" (generator of mu_{q-1})
    i64 c = 0;
    int m = 0;
    int n = 0;
    int k = 0;
    std::string a;       // prop-5-1 input: "teich", "norm:<family>" or an integer
    std::string family;  // "one_minus_zT", "cyclotomic_c(4)", "kza(5)", "trivial", products joined by '*'
    int M = 0;           // working precision; 0 takes the config value
    int guard = 0;       // 0 takes the config value

    auto operator<=>(const CheckParams&) const = default;
    bool operator==(const CheckParams&) const = default;
};

enum class Status { pass, fail, skipped };
std::string status_name(Status s);
Status parse_status(const std::string& s);

struct CheckReport {
    std::string check_id;
    CheckParams params;
    Status status = Status::skipped;
    std::string lhs;
    std::string rhs;
    int agreement = 0;  // both sides agree mod p^agreement
    int requested = 0;
    std::string citation;
    std::string note;
    std::optional<double> wall_time_ms;

    bool operator==(const CheckReport&) const = default;
};

void to_json(nlohmann::json& j, const CheckParams& p);
void from_json(const nlohmann::json& j, CheckParams& p);
void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

struct CheckInfo {
    std::string id;
    std::string citation;
};
// All runnable check ids (lemma-3-1 appears as its three parts).
const std::vector<CheckInfo>& registry();
// The registry ids an id stands for: itself, or the parts of lemma-3-1. Throws UsageError when unknown.
std::vector<std::string> expand_check_id(const std::string& id);
const CheckInfo& check_info(const std::string& id);

// Root of unity named by a z-string.
UnramifiedElement parse_root(const UnramifiedField& F, int prec, const std::string& s);
// Default root for families and checks: -1 over Q_p, the generator w otherwise.
std::string default_root(int d);
NormCompatibleUnit parse_family_spec(const std::string& spec, const UnramifiedField& F, int prec);

// Runs one registry check. Invalid parameters throw UsageError; numeric failures are reported as fail.
CheckReport run_check(const std::string& id, const CheckParams& params, const Config& cfg);

enum class Profile { quick, full };
Profile parse_profile(const std::string& s);
std::string profile_name(Profile p);

struct GridPoint {
    std::string check_id;
    CheckParams params;
    auto operator<=>(const GridPoint&) const = default;
    bool operator==(const GridPoint&) const = default;
};
std::vector<GridPoint> suite_grid(Profile profile, const Config& cfg);

// Runs the points on `jobs` worker threads; the result is sorted by (check_id, params).
std::vector<CheckReport> run_points(const std::vector<GridPoint>& points, const Config& cfg, int jobs);

nlohmann::json config_json(const Config& cfg);
nlohmann::json suite_report(const std::vector<CheckReport>& reports, const std::string& profile, const Config& cfg);
std::vector<CheckReport> reports_from_json(const nlohmann::json& doc);

}  // namespace padic::verify
