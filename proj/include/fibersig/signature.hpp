#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibersig {

enum class SectionModel { antipodal_pair, single_point };
enum class RegionKind { rectangular, hexagonal };

std::string_view model_name(SectionModel model);

struct Region {
    RegionKind kind = RegionKind::rectangular;
    int degree = 0;  // degree of the section over the region boundary
};

// A definite-fold sphere cut into regions by the image of the other singular sheets.
struct RegionDecomposition {
    std::string sphere_id;
    SectionModel model = SectionModel::single_point;
    std::vector<Region> regions;

    int count(RegionKind kind) const;
    int degree_sum() const;
};

// Antipodal pair: one half-turn is one degree. Single point: two half-turns are one
// degree (an odd count is an InconsistencyError).
int degree_from_half_turns(SectionModel model, int half_turns);

// The sphere shape forced by the picture: 6 rectangular and 4 hexagonal regions.
std::vector<std::string> region_count_violations(const RegionDecomposition& decomp);

// Antipodal pair: half the degree sum (odd sum -> InconsistencyError); single point: the sum.
int sphere_self_intersection(const RegionDecomposition& decomp);
int definite_locus_self_intersection(const std::vector<RegionDecomposition>& decomps);

// 3 sigma = S0.S0; InconsistencyError unless 3 divides s.
int signature_from_definite_locus(int s);
bool sakuma_congruence_holds(int singular_self_intersection, int sigma);  // S.S = 3 sigma (mod 4)
int signature_from_fibers(const std::vector<int>& signs);

struct StableMapSummary {
    std::optional<std::vector<int>> fiber_signs;
    std::optional<int> definite_self_intersection;  // S0.S0
    std::optional<int> singular_self_intersection;  // S.S
    std::optional<int> euler_characteristic;
    std::optional<int> signature;                   // known a priori (e.g. K3: -16)
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ConsistencyReport {
    std::optional<int> sigma;
    std::optional<int> minimum_iii8_fibers;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_string() const;
};

ConsistencyReport consistency_checks(const StableMapSummary& summary);

// Summary file: `fibers <+-1>...`, `s0s0 <n>`, `ss <n>`, `chi <n>`, `sigma <n>`.
StableMapSummary parse_summary(std::string_view text);

struct ExampleData {
    std::vector<RegionDecomposition> spheres;
    std::vector<int> fiber_signs;
    std::optional<int> euler_characteristic;
    std::optional<int> singular_self_intersection;
};

// `sphere <id>`, `model <antipodal-pair|single-point>`, `rect <degree> [xN]`,
// `hex <degree> [xN]`, `fibers <+-1>...`, `chi <n>`, `ss <n>`.
ExampleData parse_example_data(std::string_view text);
ExampleData builtin_example_data();

struct ExampleLedger {
    std::string text;
    int definite_self_intersection = 0;
    int sigma_from_locus = 0;
    int sigma_from_fibers = 0;
    bool match = false;
    bool checks_passed = false;
};

// Throws InconsistencyError if a formula cannot hold (odd antipodal sum, 3 not dividing).
ExampleLedger run_example(const ExampleData& data);

}  // namespace fibersig
