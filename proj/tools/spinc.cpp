// spinc: degree-0 Spin^c invariants of surgery presentations.
//
// Exit codes: 0 ok / Equivalent, 1 invalid input, 2 group order above
// --cap, 3 Inequivalent, 4 Unknown, 5 even p for the lens census,
// 6 a walk certificate failed.

#include "spinc/classify.hpp"
#include "spinc/io.hpp"
#include "spinc/spaces.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace spinc;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kCap = 2, kInequivalent = 3, kUnknown = 4, kEvenP = 5, kCertificate = 6 };

struct Options {
    std::uint64_t cap = kDefaultOrderCap;
    bool json = false;
    ClassifyOptions classify() const { return {cap, kDefaultSearchBudget}; }
};

void print(const io::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_invariants(const Options& o, const std::string& path)
{
    const auto f = io::read_presentation(path);
    const auto report = invariants_report(f.presentation, o.classify());
    if (o.json) {
        io::Json j;
        if (f.name) j["name"] = *f.name;
        j["report"] = io::to_json(report);
        print(j);
    } else {
        if (f.name) std::cout << "name:             " << *f.name << "\n";
        std::cout << io::report_text(report);
    }
    return kOk;
}

int cmd_compare(const Options& o, const std::string& a_path, const std::string& b_path)
{
    const auto fa = io::read_presentation(a_path);
    const auto fb = io::read_presentation(b_path);
    const auto a = analyse(fa.presentation, o.classify());
    const auto b = analyse(fb.presentation, o.classify());
    const auto v = yc_equivalent(a, b, o.classify());
    if (o.json) print(io::to_json(v, a, b));
    else std::cout << io::verdict_text(v, a, b);
    switch (v.kind) {
    case EquivalenceVerdict::Kind::Equivalent: return kOk;
    case EquivalenceVerdict::Kind::Inequivalent: return kInequivalent;
    case EquivalenceVerdict::Kind::Unknown: return kUnknown;
    }
    return kUnknown;
}

int cmd_walk(const Options& o, const std::string& path, std::size_t steps, std::uint64_t seed,
             const std::string& output)
{
    const auto f = io::read_presentation(path);
    std::vector<MoveRecord> log;
    io::PresentationFile out{f.name, random_walk(f.presentation, steps, seed, &log)};

    const auto a = analyse(f.presentation, o.classify());
    const auto b = analyse(out.presentation, o.classify());
    const std::string diff = invariants_report(a).first_difference(invariants_report(b));
    const auto verdict = yc_equivalent(a, b, o.classify());
    const bool ok = diff.empty() && verdict.equivalent() && verify_witness(a, b, *verdict.witness);
    const std::string certificate =
        ok ? "invariants preserved"
           : "invariants CHANGED (" + (diff.empty() ? "verdict " + to_string(verdict.kind) : diff) + ")";

    if (!output.empty()) io::write_presentation(output, out);
    if (o.json) {
        io::Json j;
        j["presentation"] = io::Json::parse(io::serialize_presentation(out));
        io::Json moves = io::Json::array();
        for (const auto& m : log) moves.push_back(describe(m));
        j["moves"] = std::move(moves);
        j["seed"] = seed;
        j["steps"] = steps;
        j["certificate"] = certificate;
        print(j);
    } else {
        if (output.empty()) std::cout << io::serialize_presentation(out);
        else std::cout << "wrote " << output << "\n";
        std::cerr << "moves:";
        for (const auto& m : log) std::cerr << " " << describe(m);
        std::cerr << "\ncertificate: " << certificate << "\n";
    }
    return ok ? kOk : kCertificate;
}

int cmd_spins(const Options& o, const std::string& path)
{
    const auto f = io::read_presentation(path, false);
    const auto spins = spin_structures(f.presentation);
    io::Json arr = io::Json::array();
    for (const auto& w : spins) {
        const auto image = beta(f.presentation, w);
        IntVector wv(w.w.begin(), w.w.end());
        arr.push_back({{"wu_class", io::to_json(wv)},
                       {"chern", io::to_json(image.chern)},
                       {"canonical_chern", io::to_json(DiscriminantData(BilinearLattice(image.matrix)).canonical_chern(image.chern))}});
    }
    if (o.json) {
        print(io::Json{{"count", spins.size()}, {"spin_structures", std::move(arr)}});
    } else {
        std::cout << spins.size() << " spin structure" << (spins.size() == 1 ? "" : "s") << "\n";
        for (const auto& e : arr)
            std::cout << "  w = " << e["wu_class"].dump() << "  ->  chern " << e["chern"].dump() << "  (canonical "
                      << e["canonical_chern"].dump() << ")\n";
    }
    return kOk;
}

int cmd_lens_census(const Options& o, std::int64_t p, std::optional<std::int64_t> q1, std::optional<std::int64_t> q2)
{
    if (p % 2 == 0) {
        std::cerr << "error: the lens Y^c census Z_p/~ is only defined for odd p (got p = " << p << ")\n";
        return kEvenP;
    }
    if (q1.has_value() != q2.has_value()) throw std::invalid_argument("--q1 and --q2 must be given together");
    const std::int64_t yc = lens_yc_count(p);
    std::optional<std::int64_t> diffeo;
    if (q1) diffeo = lens_diffeo_count(p, *q1, *q2);
    if (o.json) {
        io::Json j{{"p", p}, {"yc_count", yc}};
        if (diffeo) {
            j["q1"] = *q1;
            j["q2"] = *q2;
            j["diffeo_count"] = *diffeo;
        }
        print(j);
    } else {
        std::cout << "yc " << yc << "\n";
        if (diffeo) std::cout << "diffeo " << *diffeo << "\n";
    }
    return kOk;
}

int cmd_classes(const Options& o, const std::string& path)
{
    const auto f = io::read_presentation(path, false);
    const auto part = yc_classes(f.presentation.matrix, o.classify());
    if (o.json) {
        io::Json classes = io::Json::array();
        for (const auto& cls : part.classes) {
            io::Json members = io::Json::array();
            for (auto i : cls) members.push_back(io::to_json(part.chern_vectors[i]));
            classes.push_back(std::move(members));
        }
        print(io::Json{{"chern_classes", part.chern_vectors.size()},
                       {"yc_classes", part.classes.size()},
                       {"classes", std::move(classes)}});
    } else {
        std::cout << part.chern_vectors.size() << " Chern classes, " << part.classes.size() << " Y^c classes\n";
        for (const auto& cls : part.classes) {
            std::cout << " ";
            for (auto i : cls) std::cout << " " << io::to_json(part.chern_vectors[i]).dump();
            std::cout << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree-0 Spin^c invariants of 3-manifolds given by surgery presentations"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--cap", o.cap, "Largest torsion group order to tabulate")->check(CLI::PositiveNumber);

    std::string path, path_b, output;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
    std::int64_t p = 0;
    std::optional<std::int64_t> q1, q2;

    auto* inv = app.add_subcommand("invariants", "Invariant report of a presentation file");
    inv->add_option("file", path, "Presentation file")->required();
    auto* fmt = inv->add_flag("--json", o.json, "JSON report");
    inv->add_flag("--text", "Text report (default)")->excludes(fmt);

    auto* cmp = app.add_subcommand("compare", "Decide Y^c-equivalence of two presentations");
    cmp->add_option("a", path, "First presentation file")->required();
    cmp->add_option("b", path_b, "Second presentation file")->required();
    cmp->add_flag("--json", o.json, "JSON verdict");

    auto* walk = app.add_subcommand("walk", "Random Kirby-move walk with an invariance certificate");
    walk->add_option("file", path, "Presentation file")->required();
    walk->add_option("--steps", steps, "Number of moves")->required();
    walk->add_option("--seed", seed, "Generator seed")->required();
    walk->add_option("-o,--output", output, "Write the resulting presentation here");
    walk->add_flag("--json", o.json, "JSON output");

    auto* spins = app.add_subcommand("spins", "Spin structures and their Chern vectors");
    spins->add_option("file", path, "Presentation file (chern optional)")->required();
    spins->add_flag("--json", o.json, "JSON output");

    auto* lens = app.add_subcommand("lens-census", "Y^c and diffeomorphism counts for lens spaces");
    lens->add_option("--p", p, "Order of H_1")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    lens->add_option("--q1", q1, "First lens parameter");
    lens->add_option("--q2", q2, "Second lens parameter");
    lens->add_flag("--json", o.json, "JSON output");

    auto* classes = app.add_subcommand("classes", "Partition all Chern classes of a matrix into Y^c classes");
    classes->add_option("file", path, "Presentation file (chern optional)")->required();
    classes->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (inv->parsed()) return cmd_invariants(o, path);
        if (cmp->parsed()) return cmd_compare(o, path, path_b);
        if (walk->parsed()) return cmd_walk(o, path, steps, seed, output);
        if (spins->parsed()) return cmd_spins(o, path);
        if (lens->parsed()) return cmd_lens_census(o, p, q1, q2);
        if (classes->parsed()) return cmd_classes(o, path);
    } catch (const OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCap;
    } catch (const PresentationError& e) {
        std::cerr << "error: invalid presentation: " << e.what() << "\n";
        return kInvalid;
    } catch (const io::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
