#include "fibersig/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "fibersig/builtin_data.hpp"
#include "fibersig/errors.hpp"
#include "fibersig/text_io.hpp"

namespace fibersig {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

std::string_view model_name(SectionModel model) {
    return model == SectionModel::antipodal_pair ? "antipodal-pair" : "single-point";
}

int RegionDecomposition::count(RegionKind kind) const {
    return static_cast<int>(std::count_if(regions.begin(), regions.end(), [&](const Region& r) { return r.kind == kind; }));
}

int RegionDecomposition::degree_sum() const {
    return std::accumulate(regions.begin(), regions.end(), 0, [](int s, const Region& r) { return s + r.degree; });
}

int degree_from_half_turns(SectionModel model, int half_turns) {
    if (model == SectionModel::antipodal_pair) return half_turns;
    if (half_turns % 2 != 0)
        throw InconsistencyError("single-point section: " + std::to_string(half_turns) + " half-turns is not a whole turn");
    return half_turns / 2;
}

std::vector<std::string> region_count_violations(const RegionDecomposition& d) {
    std::vector<std::string> out;
    int rect = d.count(RegionKind::rectangular), hex = d.count(RegionKind::hexagonal);
    if (rect != 6) out.push_back("sphere " + d.sphere_id + ": " + std::to_string(rect) + " rectangular regions, expected 6");
    if (hex != 4) out.push_back("sphere " + d.sphere_id + ": " + std::to_string(hex) + " hexagonal regions, expected 4");
    return out;
}

int sphere_self_intersection(const RegionDecomposition& d) {
    int sum = d.degree_sum();
    if (d.model == SectionModel::single_point) return sum;
    if (sum % 2 != 0)
        throw InconsistencyError("sphere " + d.sphere_id + ": antipodal-pair degree sum " + std::to_string(sum) +
                                 " is odd, so half of it is not an integer");
    return sum / 2;
}

int definite_locus_self_intersection(const std::vector<RegionDecomposition>& decomps) {
    int total = 0;
    for (const auto& d : decomps) total += sphere_self_intersection(d);
    return total;
}

int signature_from_definite_locus(int s) {
    if (s % 3 != 0)
        throw InconsistencyError("definite fold self-intersection " + std::to_string(s) + " is not divisible by 3");
    int sigma = s / 3;
    if (mod(s - 3 * sigma, 4) != 0) throw InconsistencyError("congruence mod 4 fails");
    return sigma;
}

bool sakuma_congruence_holds(int ss, int sigma) { return mod(ss - 3 * sigma, 4) == 0; }

int signature_from_fibers(const std::vector<int>& signs) { return std::accumulate(signs.begin(), signs.end(), 0); }

bool ConsistencyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ConsistencyReport::to_string() const {
    std::ostringstream out;
    for (const auto& c : checks) out << (c.passed ? "pass" : "FAIL") << "  " << c.name << ": " << c.detail << '\n';
    if (minimum_iii8_fibers)
        out << "lower bound: a stable map to a 3-manifold needs >= |sigma| = " << *minimum_iii8_fibers
            << " fibers of type III^8\n";
    out << (all_passed() ? "all checks passed" : "consistency checks FAILED") << '\n';
    return out.str();
}

ConsistencyReport consistency_checks(const StableMapSummary& s) {
    ConsistencyReport r;
    std::optional<int> from_fibers, from_locus;
    if (s.fiber_signs) from_fibers = signature_from_fibers(*s.fiber_signs);
    if (s.definite_self_intersection) {
        int v = *s.definite_self_intersection;
        bool divisible = v % 3 == 0;
        if (divisible) from_locus = v / 3;
        std::string detail = "S0.S0 = " + std::to_string(v);
        bool ok = divisible;
        if (!divisible) detail += " is not divisible by 3";
        if (divisible && from_fibers) {
            ok = *from_fibers == *from_locus;
            detail += ", S0.S0/3 = " + std::to_string(*from_locus) + ", signed III^8 count = " + std::to_string(*from_fibers);
        }
        r.checks.push_back({"signature from the definite fold locus", ok, detail});
    }
    if (s.signature && from_fibers)
        r.checks.push_back({"signed III^8 count equals the signature", *s.signature == *from_fibers,
                            "sigma = " + std::to_string(*s.signature) + ", signed count = " + std::to_string(*from_fibers)});

    r.sigma = s.signature ? s.signature : from_fibers ? from_fibers : from_locus;
    if (!r.sigma) {
        r.checks.push_back({"signature determined", false, "no signature, fiber signs or S0.S0 given"});
        return r;
    }
    int sigma = *r.sigma;
    if (s.singular_self_intersection) {
        int ss = *s.singular_self_intersection;
        r.checks.push_back({"S.S = 3 sigma", ss == 3 * sigma,
                            "S.S = " + std::to_string(ss) + ", 3 sigma = " + std::to_string(3 * sigma)});
        r.checks.push_back({"S.S = 3 sigma (mod 4)", sakuma_congruence_holds(ss, sigma),
                            std::to_string(mod(ss, 4)) + " vs " + std::to_string(mod(3 * sigma, 4)) + " mod 4"});
    }
    if (s.euler_characteristic) {
        int chi = *s.euler_characteristic;
        r.checks.push_back({"sigma = chi (mod 2)", mod(sigma - chi, 2) == 0,
                            "sigma = " + std::to_string(sigma) + ", chi = " + std::to_string(chi)});
    }
    int bound = std::abs(sigma);
    r.minimum_iii8_fibers = bound;
    if (s.fiber_signs) {
        auto n = static_cast<int>(s.fiber_signs->size());
        r.checks.push_back({"III^8 fiber count >= |sigma|", n >= bound,
                            std::to_string(n) + " fiber(s), |sigma| = " + std::to_string(bound)});
    }
    return r;
}

StableMapSummary parse_summary(std::string_view text) {
    StableMapSummary s;
    for (const auto& line : tokenize_lines(text)) {
        const auto& key = line.words[0];
        if (key == "fibers") {
            std::vector<int> signs;
            for (std::size_t k = 1; k < line.words.size(); ++k) {
                auto v = parse_integer(line.words[k], line.number);
                if (v != 1 && v != -1) throw ParseError(line.number, "fiber signs must be +1 or -1");
                signs.push_back(static_cast<int>(v));
            }
            s.fiber_signs = signs;
            continue;
        }
        if (line.words.size() != 2) throw ParseError(line.number, "'" + key + "' expects one integer");
        int v = static_cast<int>(parse_integer(line.words[1], line.number));
        if (key == "s0s0") s.definite_self_intersection = v;
        else if (key == "ss") s.singular_self_intersection = v;
        else if (key == "chi") s.euler_characteristic = v;
        else if (key == "sigma") s.signature = v;
        else throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
    return s;
}

ExampleData parse_example_data(std::string_view text) {
    ExampleData data;
    for (const auto& line : tokenize_lines(text)) {
        const auto& key = line.words[0];
        auto current = [&]() -> RegionDecomposition& {
            if (data.spheres.empty()) throw ParseError(line.number, "'" + key + "' before any 'sphere' line");
            return data.spheres.back();
        };
        if (key == "sphere") {
            if (line.words.size() != 2) throw ParseError(line.number, "'sphere' expects an id");
            data.spheres.push_back({line.words[1], SectionModel::single_point, {}});
        } else if (key == "model") {
            if (line.words.size() != 2) throw ParseError(line.number, "'model' expects a section model");
            if (line.words[1] == "antipodal-pair") current().model = SectionModel::antipodal_pair;
            else if (line.words[1] == "single-point") current().model = SectionModel::single_point;
            else throw ParseError(line.number, "unknown section model '" + line.words[1] + "'");
        } else if (key == "rect" || key == "hex") {
            if (line.words.size() != 2 && line.words.size() != 3)
                throw ParseError(line.number, "'" + key + "' expects <degree> [xN]");
            int degree = static_cast<int>(parse_integer(line.words[1], line.number));
            int repeat = 1;
            if (line.words.size() == 3) {
                const auto& w = line.words[2];
                if (w.size() < 2 || w[0] != 'x') throw ParseError(line.number, "repeat must look like x6");
                repeat = static_cast<int>(parse_integer(w.substr(1), line.number));
                if (repeat < 1) throw ParseError(line.number, "repeat count must be positive");
            }
            auto kind = key == "rect" ? RegionKind::rectangular : RegionKind::hexagonal;
            auto& sphere = current();
            for (int i = 0; i < repeat; ++i) sphere.regions.push_back({kind, degree});
        } else if (key == "fibers") {
            for (std::size_t k = 1; k < line.words.size(); ++k) {
                auto v = parse_integer(line.words[k], line.number);
                if (v != 1 && v != -1) throw ParseError(line.number, "fiber signs must be +1 or -1");
                data.fiber_signs.push_back(static_cast<int>(v));
            }
        } else if (key == "chi" || key == "ss") {
            if (line.words.size() != 2) throw ParseError(line.number, "'" + key + "' expects one integer");
            int v = static_cast<int>(parse_integer(line.words[1], line.number));
            (key == "chi" ? data.euler_characteristic : data.singular_self_intersection) = v;
        } else {
            throw ParseError(line.number, "unknown keyword '" + key + "'");
        }
    }
    std::vector<std::string> problems;
    for (const auto& s : data.spheres) {
        auto v = region_count_violations(s);
        problems.insert(problems.end(), v.begin(), v.end());
    }
    if (data.spheres.empty()) problems.push_back("no sphere blocks");
    if (!problems.empty()) throw ValidationError("example data", problems);
    return data;
}

ExampleData builtin_example_data() { return parse_example_data(builtin_fold_map_example()); }

ExampleLedger run_example(const ExampleData& data) {
    ExampleLedger L;
    std::ostringstream out;
    std::vector<int> parts;
    for (const auto& s : data.spheres) {
        auto degree_list = [&](RegionKind kind) {
            std::ostringstream d;
            bool first = true;
            for (const auto& r : s.regions)
                if (r.kind == kind) d << (first ? "" : " ") << signed_string(r.degree), first = false;
            return d.str();
        };
        int self = sphere_self_intersection(s);
        parts.push_back(self);
        out << "sphere " << s.sphere_id << " (" << model_name(s.model) << ")\n"
            << "  rectangular degrees: " << degree_list(RegionKind::rectangular) << '\n'
            << "  hexagonal degrees:   " << degree_list(RegionKind::hexagonal) << '\n'
            << "  degree sum " << s.degree_sum() << ", self-intersection ";
        if (s.model == SectionModel::antipodal_pair) out << s.degree_sum() << "/2 = ";
        out << self << '\n';
    }
    L.definite_self_intersection = definite_locus_self_intersection(data.spheres);
    out << "S0.S0 = ";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out << (i == 0 ? std::to_string(parts[i]) : (parts[i] < 0 ? " - " : " + ") + std::to_string(std::abs(parts[i])));
    out << " = " << L.definite_self_intersection << '\n';
    L.sigma_from_locus = signature_from_definite_locus(L.definite_self_intersection);
    out << "3 sigma = S0.S0 gives sigma = " << L.sigma_from_locus << '\n';
    L.sigma_from_fibers = signature_from_fibers(data.fiber_signs);
    out << "III^8 fibers:";
    for (int s : data.fiber_signs) out << ' ' << signed_string(s);
    out << "; signed count = " << L.sigma_from_fibers << '\n';

    StableMapSummary summary;
    summary.fiber_signs = data.fiber_signs;
    summary.definite_self_intersection = L.definite_self_intersection;
    summary.singular_self_intersection = data.singular_self_intersection;
    summary.euler_characteristic = data.euler_characteristic;
    auto report = consistency_checks(summary);
    out << report.to_string();
    L.checks_passed = report.all_passed();
    L.match = L.sigma_from_locus == L.sigma_from_fibers;
    out << "sigma = " << signed_string(L.sigma_from_locus) << "; signed III^8 count = " << signed_string(L.sigma_from_fibers)
        << "; " << (L.match ? "MATCH" : "MISMATCH") << '\n';
    L.text = out.str();
    return L;
}

}  // namespace fibersig
