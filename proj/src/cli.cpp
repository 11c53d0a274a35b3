#include "fibersig/cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "fibersig/bordism.hpp"
#include "fibersig/catalog.hpp"
#include "fibersig/errors.hpp"
#include "fibersig/octants.hpp"
#include "fibersig/signature.hpp"
#include "fibersig/text_io.hpp"
#include "fibersig/universal_complex.hpp"

namespace fibersig {

namespace {

constexpr const char* kFormats = R"(File formats ('#' starts a comment):
  fiber file:      dim 4 3 | dim 5 4          (optional, default 4 3)
                   v <id> <kind-tag>          kinds: definite-fold indefinite-fold cusp
                                              definite-swallowtail indefinite-swallowtail
                                              butterfly definite-D4 indefinite-D4
                   e <end> <end>              arc oriented by the fiber, end = <id>[.<branch>];
                                              branches are named only at indefinite swallowtails
                                              (0,1) and indefinite D4 points (0,1,2)
                   circles <n>                regular circle components
  octant file:     8 lines <+-1> <+-1> <+-1> <1|2>   (octant, regular components over it)
  incidence table: header row of the 14 chiral codim-4 class names, then rows
                   III^5|III^7|III^8 followed by 14 integers
  locus graph:     iv <id> <class> | bd <id> <0|1> <+1|-1> | arc <from> <to>
  example data:    sphere <id>; model antipodal-pair|single-point; rect <degree> x6;
                   hex <degree> x4; fibers <+-1>...; chi <n>; ss <n>
  summary file:    fibers <+-1>... | s0s0 <n> | ss <n> | chi <n> | sigma <n>
Exit codes: 0 success, 1 parse/validation error, 2 failed identity.)";

DimensionPair dimension_argument(const std::string& text) {
    auto dim = parse_dimension_pair(text);
    if (!dim) throw DomainError("unsupported dimension pair '" + text + "' (use 4,3 or 5,4)");
    return *dim;
}

int cmd_classify(const std::string& path, std::ostream& out) {
    auto fiber = parse_fiber(read_text_file(path));
    const auto& catalog = Catalog::builtin(fiber.dimension_pair);
    const auto& cls = classify(fiber, catalog);
    if (cls.is_regular()) {
        out << "regular fiber, kappa = 0\n";
        return 0;
    }
    out << cls.name << ", kappa = " << cls.codimension << ", " << (is_chiral(cls) ? "chiral" : "achiral") << ", "
        << cls.tokens.size() << " singular component" << (cls.tokens.size() == 1 ? "" : "s") << " (dim "
        << compact_name(cls.dimension_pair) << ")\n";
    return 0;
}

int cmd_enumerate(const std::string& dim, int kappa, std::ostream& out) {
    for (const auto& name : enumerate_disconnected(dimension_argument(dim), kappa)) out << name << '\n';
    return 0;
}

int cmd_catalog(const std::string& dim, std::ostream& out) {
    for (const auto& cls : Catalog::builtin(dimension_argument(dim)).entries()) {
        out << cls.name << " kappa=" << cls.codimension << (cls.connected ? " connected" : " disconnected")
            << (cls.chiral ? " chiral" : " achiral") << " kinds:";
        for (auto k : cls.kinds) out << ' ' << tag(k);
        out << '\n';
    }
    return 0;
}

int cmd_sign(const std::string& path, const std::string& order, const std::string& sheets, std::ostream& out) {
    TriplePointModel model;
    model.labels = parse_octant_labels(read_text_file(path));
    model.cyclic_order = parse_point_order(order);
    model.sheet_of_point = parse_point_order(sheets);
    validate_model(model);
    out << "1-octants:";
    for (const auto& w : one_octants(model))
        out << " (" << (w[0] > 0 ? '+' : '-') << ',' << (w[1] > 0 ? '+' : '-') << ',' << (w[2] > 0 ? '+' : '-') << ')';
    out << "\ncyclic order: q" << model.cyclic_order[0] << ", q" << model.cyclic_order[1] << ", q"
        << model.cyclic_order[2] << "\nsign = " << signed_string(iii8_sign(model)) << '\n';
    return 0;
}

int cmd_complex(const std::string& path, bool want_h3, bool validate, std::ostream& out) {
    auto table = path.empty() ? minimal_incidence_table() : parse_incidence_table(read_text_file(path));
    auto cx = build_complex(table, validate);
    out << "C^3 basis (rank " << cx.c3_basis.size() << "):";
    for (const auto& n : cx.c3_basis) out << ' ' << n;
    out << "\nC^4 basis (rank " << cx.c4_basis.size() << "):";
    for (const auto& n : cx.c4_basis) out << ' ' << n;
    out << "\nnonzero incidence coefficients:";
    bool any = false;
    for (std::size_t g = 0; g < cx.c3_basis.size(); ++g)
        for (std::size_t f = 0; f < cx.c4_basis.size(); ++f)
            if (cx.delta3(f, g) != 0) {
                out << " [" << cx.c3_basis[g] << ':' << cx.c4_basis[f] << "]=" << cx.delta3(f, g);
                any = true;
            }
    out << (any ? "" : " none") << '\n';
    int code = 0;
    if (want_h3) {
        auto h = h3(cx);
        out << h.describe(cx.c3_basis) << '\n';
        bool cyclic_iii8 = h.free_rank == 1 && h.torsion.empty() && h.generators.size() == 1 &&
                           combination_string(h.generators[0], cx.c3_basis) == "III^8";
        if (validate && !cyclic_iii8) {
            out << "H^3 is not infinite cyclic generated by III^8\n";
            code = 2;
        }
    }
    out << h4(cx).describe(cx.c4_basis) << '\n';
    return code;
}

int cmd_bordism(const std::string& path, int random, std::uint64_t seed, std::ostream& out) {
    if (!path.empty()) {
        auto g = parse_locus_graph(read_text_file(path));
        validate_locus(g);
        int s0 = boundary_sum(g, 0), s1 = boundary_sum(g, 1);
        out << "boundary sum side 0 = " << s0 << "\nboundary sum side 1 = " << s1 << '\n'
            << (s0 == s1 ? "invariant" : "NOT invariant") << '\n';
        if (s0 != s1) return 2;
    }
    if (random > 0) {
        std::mt19937_64 rng(seed);
        int failures = 0, invalid = 0, low = 0, high = 0;
        for (int i = 0; i < random; ++i) {
            auto g = random_locus_graph(rng);
            if (!locus_violations(g).empty()) {
                ++invalid;
                continue;
            }
            int s = boundary_sum(g, 0);
            low = std::min(low, s);
            high = std::max(high, s);
            if (!check_invariance(g)) ++failures;
        }
        out << random << " random locus graphs (seed " << seed << "): " << invalid << " invalid, " << failures
            << " violate conservation; boundary sums ranged over [" << low << ", " << high << "]\n";
        if (failures > 0 || invalid > 0) return 2;
    }
    if (path.empty() && random <= 0) throw DomainError("bordism: give a graph file or --random n");
    return 0;
}

int cmd_example(const std::string& path, std::ostream& out) {
    auto data = path.empty() ? builtin_example_data() : parse_example_data(read_text_file(path));
    auto ledger = run_example(data);
    out << ledger.text;
    return ledger.match && ledger.checks_passed ? 0 : 2;
}

int cmd_signature(const std::string& path, std::ostream& out) {
    auto report = consistency_checks(parse_summary(read_text_file(path)));
    if (report.sigma) out << "sigma = " << signed_string(*report.sigma) << '\n';
    out << report.to_string();
    return report.all_passed() ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Singular fibers of stable maps: classification, III^8 signs, chiral complex, signature."};
    app.footer(kFormats);
    app.require_subcommand(1);

    std::string file, dim, order = "q1,q2,q3", sheets = "q1,q2,q3";
    int kappa = 0, random = 0;
    std::uint64_t seed = 1;
    bool want_h3 = false, no_validate = false;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a fiber graph modulo regular fibers");
    classify_cmd->add_option("fiber-file", file, "Fiber graph file")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List disconnected classes of a codimension");
    enumerate_cmd->add_option("dim", dim, "Dimension pair: 4,3 or 5,4")->required();
    enumerate_cmd->add_option("kappa", kappa, "Codimension 2..4")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "List every catalog class of a dimension pair");
    catalog_cmd->add_option("dim", dim, "Dimension pair: 4,3 or 5,4")->required();

    auto* sign_cmd = app.add_subcommand("sign", "Sign of a III^8 fiber from octant data");
    sign_cmd->add_option("octant-file", file, "Octant labeling file")->required();
    auto* order_pos = sign_cmd->add_option("cyclic-order", order, "Cyclic order of q1,q2,q3");
    sign_cmd->add_option("--order", order, "Cyclic order of q1,q2,q3")->excludes(order_pos);
    sign_cmd->add_option("--sheets", sheets, "Sheet of q1,q2,q3 (default q1,q2,q3 = sheets 1,2,3)");

    auto* complex_cmd = app.add_subcommand("complex", "Universal complex of chiral fibers");
    complex_cmd->add_option("table-file", file, "Incidence table (default: the shipped minimal table)");
    complex_cmd->add_flag("--h3", want_h3, "Report the third cohomology group");
    complex_cmd->add_flag("--no-validate", no_validate, "Skip the incidence constraints");

    auto* bordism_cmd = app.add_subcommand("bordism", "Check conservation of the signed III^8 count");
    bordism_cmd->add_option("graph-file", file, "Locus graph file");
    bordism_cmd->add_option("--random", random, "Check n randomly generated locus graphs");
    bordism_cmd->add_option("--seed", seed, "Seed for --random");

    auto* example_cmd = app.add_subcommand("example", "Signature of the shipped fold map example");
    example_cmd->add_option("--data", file, "Example data file (default: shipped data)");

    auto* signature_cmd = app.add_subcommand("signature", "Consistency checks on a stable map summary");
    signature_cmd->add_option("summary-file", file, "Summary file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (*classify_cmd) return cmd_classify(file, out);
        if (*enumerate_cmd) return cmd_enumerate(dim, kappa, out);
        if (*catalog_cmd) return cmd_catalog(dim, out);
        if (*sign_cmd) return cmd_sign(file, order, sheets, out);
        if (*complex_cmd) return cmd_complex(file, want_h3, !no_validate, out);
        if (*bordism_cmd) return cmd_bordism(file, random, seed, out);
        if (*example_cmd) return cmd_example(file, out);
        if (*signature_cmd) return cmd_signature(file, out);
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const UnknownFiber& e) {
        err << "unknown fiber: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace fibersig
