// symstress: symmetry-extended counting and numeric verification for planar frameworks.

#include "symstress/catalog.hpp"
#include "symstress/counting.hpp"
#include "symstress/errors.hpp"
#include "symstress/io.hpp"
#include "symstress/numeric.hpp"
#include "symstress/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iostream>
#include <thread>

using namespace symstress;

namespace {

enum Exit { ok = 0, usage = 1, bad_input = 2, not_symmetric = 3, cross_check_failed = 4, verify_failed = 5 };

struct Common {
    std::vector<std::string> inputs;
    std::string group = "";
    double tol_sym = default_symmetry_tolerance;
    double tol_rank = default_rank_tolerance;
    bool strict_planar = false;
    std::string format = "text";
    int jobs = 1;
    std::string output;
};

struct Outcome {
    int code = ok;
    std::string text;   // report on success, message on failure
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NotSymmetric*>(&e) || dynamic_cast<const ClassMismatch*>(&e) ||
        dynamic_cast<const NonIntegerMultiplicity*>(&e))
        return not_symmetric;
    if (dynamic_cast<const CrossCheckFailure*>(&e)) return cross_check_failed;
    return bad_input;
}

struct Loaded {
    Framework fw;
    PointGroup group;
};

Loaded load(const std::string& path, const Common& opt) {
    FrameworkDocument doc = read_framework(path);
    std::optional<GroupChoice> choice = doc.group;
    if (!opt.group.empty()) choice = parse_group_flag(opt.group);
    PointGroup group(Family::Cn, 1);
    if (choice) {
        if (choice->automatic) group = detect_groups(doc.framework, opt.tol_sym).front();
        else group = choice->group;
    }
    if (opt.strict_planar) {
        const auto issues = check_planarity(doc.framework);
        if (!issues.empty()) {
            const auto& i = issues.front();
            throw NonPlanar(path + ": bar " + std::to_string(i.edge) +
                            (i.kind == PlanarityIssue::Kind::crossing ? " crosses bar " : " passes over joint ") +
                            std::to_string(i.other) + " (" + std::to_string(issues.size()) + " issues)");
        }
    }
    return {std::move(doc.framework), std::move(group)};
}

Outcome run_analyze(const std::string& path, const Common& opt) {
    const Loaded in = load(path, opt);
    const AnalysisReport report = analyze(in.fw, in.group, opt.tol_sym);
    return {ok, opt.format == "json" ? analysis_to_json(report, path) : analysis_to_text(report, path)};
}

Outcome run_verify(const std::string& path, const Common& opt) {
    const Loaded in = load(path, opt);
    const AnalysisReport analysis = analyze(in.fw, in.group, opt.tol_sym);
    VerifyOptions vo;
    vo.sym_tol = opt.tol_sym;
    vo.rank_tol = opt.tol_rank;
    const VerificationReport report = verify(in.fw, in.group, vo);
    return {report.passed() ? ok : verify_failed, opt.format == "json" ? verification_to_json(report, analysis, path)
                                                                         : verification_to_text(report, path)};
}

// Runs one command per input (optionally in parallel) and prints in input order.
int run_batch(const Common& opt, Outcome (*command)(const std::string&, const Common&)) {
    std::vector<Outcome> results(opt.inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < opt.inputs.size(); i = next++) {
            try {
                results[i] = command(opt.inputs[i], opt);
            } catch (const std::exception& e) {
                results[i] = {exit_code_for(e), opt.inputs[i] + ": " + e.what()};
            }
        }
    };
    const int threads = std::max(1, std::min<int>(opt.jobs, static_cast<int>(opt.inputs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = ok;
    std::string out;
    std::vector<std::string> reports;
    for (const auto& r : results) {
        // Error outcomes carry a message instead of a report.
        if (r.code != ok && r.code != verify_failed) {
            std::cerr << "error: " << r.text << "\n";
        } else {
            reports.push_back(r.text);
        }
        code = std::max(code, r.code);
    }
    if (opt.format == "json" && opt.inputs.size() > 1) {
        out = "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string r = reports[i];
            if (!r.empty() && r.back() == '\n') r.pop_back();
            out += r + (i + 1 < reports.size() ? ",\n" : "\n");
        }
        out += "]\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) out += (i ? "\n" : "") + reports[i];
    }
    if (opt.output.empty()) std::cout << out;
    else write_file(opt.output, out);
    return code;
}

void add_common(CLI::App* cmd, Common& opt, bool many_inputs) {
    if (many_inputs) cmd->add_option("inputs", opt.inputs, "Framework JSON files")->required();
    cmd->add_option("--group", opt.group, "auto|C1|Cs[:angle_deg]|Cn:<n>|Cnv:<n>[:angle_deg]");
    cmd->add_option("--tol-sym", opt.tol_sym, "Relative symmetry tolerance")->capture_default_str();
    cmd->add_option("--tol-rank", opt.tol_rank, "Relative singular-value cutoff")->capture_default_str();
    cmd->add_flag("--strict-planar", opt.strict_planar, "Reject crossing bars and bars over joints");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-extended Maxwell counting and rigidity verification for planar bar-joint frameworks"};
    app.require_subcommand(1);

    Common analyze_opt, verify_opt, render_opt;

    auto* analyze_cmd = app.add_subcommand("analyze", "Census, reduction and detected counts");
    add_common(analyze_cmd, analyze_opt, true);
    analyze_cmd->add_option("--format", analyze_opt.format)->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--jobs", analyze_opt.jobs, "Parallel inputs")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("-o,--output", analyze_opt.output, "Write the report to a file");

    auto* verify_cmd = app.add_subcommand("verify", "Numeric verification against the symmetric count");
    add_common(verify_cmd, verify_opt, true);
    verify_cmd->add_option("--format", verify_opt.format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--jobs", verify_opt.jobs, "Parallel inputs")->check(CLI::PositiveNumber);
    verify_cmd->add_option("-o,--output", verify_opt.output, "Write the report to a file");

    std::string gen_name, gen_output;
    std::vector<std::string> gen_params;
    auto* gen_cmd = app.add_subcommand("gen", "Write a catalog framework as JSON");
    gen_cmd->add_option("name", gen_name, "Catalog entry (see --list)");
    gen_cmd->add_option("--param", gen_params, "key=value parameter");
    gen_cmd->add_option("-o,--output", gen_output, "Output file (stdout when omitted)");
    bool gen_list = false;
    gen_cmd->add_flag("--list", gen_list, "List catalog entries");

    std::string render_input, render_output;
    RenderSpec spec;
    int stress_index = -1;
    bool no_mirrors = false, no_center = false, no_unshifted = false;
    auto* render_cmd = app.add_subcommand("render", "Draw a framework as SVG");
    render_cmd->add_option("input", render_input, "Framework JSON file")->required();
    add_common(render_cmd, render_opt, false);
    render_cmd->add_option("-o,--output", render_output, "SVG file")->required();
    render_cmd->add_option("--stress", stress_index, "Overlay self-stress number i");
    render_cmd->add_option("--width", spec.width)->capture_default_str();
    render_cmd->add_option("--height", spec.height)->capture_default_str();
    render_cmd->add_option("--margin", spec.margin)->capture_default_str();
    render_cmd->add_option("--joint-radius", spec.joint_radius)->capture_default_str();
    render_cmd->add_option("--bar-width", spec.bar_width)->capture_default_str();
    render_cmd->add_option("--stress-width", spec.stress_width)->capture_default_str();
    render_cmd->add_option("--tension-color", spec.tension_color)->capture_default_str();
    render_cmd->add_option("--compression-color", spec.compression_color)->capture_default_str();
    render_cmd->add_flag("--no-mirrors", no_mirrors, "Omit mirror lines");
    render_cmd->add_flag("--no-center", no_center, "Omit the rotation centre");
    render_cmd->add_flag("--no-unshifted", no_unshifted, "Do not highlight unshifted bars");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*analyze_cmd) return run_batch(analyze_opt, run_analyze);
        if (*verify_cmd) return run_batch(verify_opt, run_verify);

        if (*gen_cmd) {
            if (gen_list) {
                for (const auto& n : catalog_names()) std::cout << n << "\n";
                return ok;
            }
            if (gen_name.empty()) {
                std::cerr << "gen: a catalog name is required\n";
                return usage;
            }
            CatalogParams params;
            for (const auto& p : gen_params) {
                const auto eq = p.find('=');
                double value = 0.0;
                const char* first = p.data() + (eq == std::string::npos ? 0 : eq + 1);
                const auto res = std::from_chars(first, p.data() + p.size(), value);
                if (eq == std::string::npos || eq == 0 || res.ec != std::errc() || res.ptr != p.data() + p.size()) {
                    std::cerr << "gen: --param expects key=number, got '" << p << "'\n";
                    return usage;
                }
                params[p.substr(0, eq)] = value;
            }
            const CatalogEntry entry = generate(gen_name, params);
            const std::string doc = framework_to_json(entry.framework, GroupChoice{false, entry.group});
            if (gen_output.empty()) std::cout << doc;
            else write_file(gen_output, doc);
            return ok;
        }

        if (*render_cmd) {
            spec.mirrors = !no_mirrors;
            spec.center = !no_center;
            spec.unshifted = !no_unshifted;
            spec.validate();
            const Loaded in = load(render_input, render_opt);
            std::optional<PointGroup> group;
            if (in.group.order() > 1) group = in.group;
            std::optional<Eigen::VectorXd> stress;
            if (stress_index >= 0) {
                const auto basis = self_stress_basis(in.fw, render_opt.tol_rank);
                if (stress_index >= static_cast<int>(basis.size())) {
                    std::cerr << "error: stress index " << stress_index << " out of range (s = " << basis.size()
                              << ")\n";
                    return bad_input;
                }
                stress = basis[static_cast<std::size_t>(stress_index)];
            }
            write_file(render_output, render_svg(in.fw, group, spec, stress, render_opt.tol_sym));
            return ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return usage;
}
