#include "segcover/cli.hpp"

#include "segcover/generators.hpp"
#include "segcover/oracle.hpp"
#include "segcover/solver_ext.hpp"
#include "segcover/solver_fpt.hpp"
#include "segcover/solver_pas.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace segcover {

namespace {

using nlohmann::json;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open \"" + path + "\" for writing");
    out << text;
}

Rational positive_rational_flag(const std::string& text, const std::string& flag) {
    const auto r = parse_rational(text);
    if (!r || *r <= 0) {
        throw CLI::ValidationError(flag, "expects a positive rational like \"1/2\"");
    }
    return *r;
}

json solution_json(const std::optional<Solution>& sol) {
    return json::parse(save_solution(sol));
}

int cmd_solve(const std::string& mode, const std::string& file, int k, const std::string& eps_text,
              const std::string& delta_text, std::ostream& out) {
    if (mode != "brute" && mode != "exact" && mode != "pas" && mode != "ext") {
        throw CLI::ValidationError("--mode", "must be one of exact|pas|ext|brute");
    }
    if (mode == "pas" && eps_text.empty()) throw CLI::RequiresError("--mode pas", "--epsilon");
    if (mode == "ext" && delta_text.empty()) throw CLI::RequiresError("--mode ext", "--delta");
    const Instance inst = load_instance(read_file(file));
    std::optional<Solution> sol;
    if (mode == "brute") {
        sol = brute_force(inst, k);
    } else if (mode == "exact") {
        sol = solve_fpt(inst, k);
    } else if (mode == "pas") {
        const Rational eps = positive_rational_flag(eps_text, "--epsilon");
        sol = solve_pas(inst, k, eps);
        json j = solution_json(sol);
        j["guarantee_factor"] = to_string(Rational(1 + eps));
        out << j.dump(2) << "\n";
        return 0;
    } else {
        sol = solve_ext(inst, k, positive_rational_flag(delta_text, "--delta"));
    }
    out << save_solution(sol);
    return 0;
}

int cmd_verify(const std::string& file, const std::string& solution_file,
               const std::string& delta_text, std::ostream& out) {
    const Instance inst = load_instance(read_file(file));
    const auto sol = load_solution(read_file(solution_file));
    if (!sol) {
        throw parse_error("solution file \"" + solution_file +
                          "\" is marked infeasible; nothing to verify");
    }
    std::optional<Rational> delta;
    if (!delta_text.empty()) delta = positive_rational_flag(delta_text, "--delta");
    out << save_report(verify_cover(inst, *sol, delta));
    return 0;
}

int cmd_kernelize(const std::string& file, int k, const std::string& delta_text,
                  const std::string& out_file, const std::string& provenance_file,
                  std::ostream& out) {
    const Instance inst = load_instance(read_file(file));
    const Rational delta = positive_rational_flag(delta_text, "--delta");
    if (k < 1) throw CLI::ValidationError("--k", "must be at least 1 for kernelization");
    const auto result = kernelize(inst, k, delta);
    if (std::holds_alternative<InfeasibleReason>(result)) {
        json j;
        j["feasible"] = false;
        j["reason"] = to_string(std::get<InfeasibleReason>(result));
        out << j.dump(2) << "\n";
        return 0;
    }
    const Kernel& kernel = std::get<Kernel>(result);
    write_file(out_file, save_instance(kernel.reduced));
    json prov;
    prov["point_provenance"] = kernel.point_provenance;
    prov["segment_provenance"] = kernel.segment_provenance;
    prov["off_line_points"] = kernel.off_line_points;
    prov["long_lines"] = json::array();
    for (const Line& l : kernel.long_lines) {
        prov["long_lines"].push_back(
            {l.a().get_str(), l.b().get_str(), l.c().get_str()});
    }
    if (provenance_file.empty()) {
        out << prov.dump(2) << "\n";
    } else {
        write_file(provenance_file, prov.dump(2) + "\n");
        json done;
        done["kernel_points"] = kernel.reduced.points.size();
        done["kernel_segments"] = kernel.reduced.segments.size();
        out << done.dump(2) << "\n";
    }
    return 0;
}

int cmd_stats(const std::string& file, int k, bool has_k, std::ostream& out) {
    const Instance inst = load_instance(read_file(file));
    json j;
    j["points"] = inst.points.size();
    j["segments"] = inst.segments.size();
    std::set<Rational> weights;
    for (const auto& s : inst.segments) weights.insert(s.weight);
    j["distinct_weights"] = weights.size();
    std::map<std::string, std::size_t> census;
    for (const LineGroup& g : collinear_line_groups(inst)) {
        ++census[std::to_string(g.point_indices.size())];
    }
    j["collinear_census"] = census;
    if (has_k) {
        j["k"] = k;
        j["k_long_lines"] = long_lines(inst, k).size();
        std::size_t off = 0;
        const auto lines = long_lines(inst, k);
        std::set<std::pair<std::string, std::string>> seen;
        for (const Point& p : inst.points) {
            if (!seen.emplace(to_string(p.x), to_string(p.y)).second) continue;
            bool on = false;
            for (const Line& l : lines) {
                if (l.contains(p)) {
                    on = true;
                    break;
                }
            }
            if (!on) ++off;
        }
        j["off_line_points"] = off;
    }
    out << j.dump(2) << "\n";
    return 0;
}

Chain chain_from_json(const json& j) {
    Chain chain;
    for (const auto& set : j) chain.sets.push_back(set.get<std::vector<long>>());
    return chain;
}

int cmd_gen(const std::string& kind, const std::string& spec_file, const std::string& out_file,
            const std::string& meta_file, std::ostream& out) {
    json spec;
    try {
        spec = json::parse(read_file(spec_file));
    } catch (const json::parse_error& e) {
        throw parse_error("generator spec \"" + spec_file + "\": " + e.what());
    }
    std::pair<Instance, GadgetMeta> built;
    try {
        if (kind == "choice") {
            std::vector<Chain> chains;
            for (const auto& c : spec.at("chains")) chains.push_back(chain_from_json(c));
            built = gen_choice(spec.at("N").get<long>(), chains);
        } else if (kind == "psi") {
            PsiInput input;
            input.k = spec.at("k").get<int>();
            for (const auto& e : spec.at("h_edges")) {
                input.h_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            }
            input.g_vertices = spec.at("g_vertices").get<int>();
            for (const auto& e : spec.at("g_edges")) {
                input.g_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            }
            input.lambda = spec.at("lambda").get<std::vector<int>>();
            built = gen_psi(input);
        } else {
            std::vector<std::array<int, 3>> clauses;
            for (const auto& c : spec.at("clauses")) {
                if (!c.is_array() || c.size() != 3) {
                    throw parse_error("generator spec: every clause needs exactly 3 literals");
                }
                clauses.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
            }
            built = gen_sat(cnf_from_signed(spec.at("variables").get<int>(), clauses));
        }
    } catch (const json::exception& e) {
        throw parse_error("generator spec \"" + spec_file + "\": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error("generator spec \"" + spec_file + "\": " + e.what());
    }
    write_file(out_file, save_instance(built.first));
    if (!meta_file.empty()) write_file(meta_file, save_meta(built.second));
    json done;
    done["points"] = built.first.points.size();
    done["segments"] = built.first.segments.size();
    out << done.dump(2) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers and instance generators for covering points with segments"};
    app.require_subcommand(1);

    std::string file, solution_file, out_file, meta_file, provenance_file, spec_file;
    std::string mode, eps_text, delta_text;
    int k = 0;

    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--mode", mode, "exact|pas|ext|brute")->required();
    solve->add_option("--k", k, "solution size bound")->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--epsilon", eps_text, "approximation slack (pas mode)");
    solve->add_option("--delta", delta_text, "extension parameter (ext mode)");
    solve->add_option("file", file, "instance JSON")->required();

    auto* gen = app.add_subcommand("gen", "Generate a reduction instance");
    std::string gen_kind;
    for (const std::string kind : {"choice", "psi", "sat"}) {
        auto* sub = gen->add_subcommand(kind);
        sub->parse_complete_callback([&gen_kind, kind] { gen_kind = kind; });
        sub->add_option("spec", spec_file, "generator spec JSON")->required();
        sub->add_option("--out", out_file, "instance output path")->required();
        sub->add_option("--meta", meta_file, "gadget meta output path");
    }
    gen->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
    verify->add_option("file", file, "instance JSON")->required();
    verify->add_option("solution", solution_file, "solution JSON")->required();
    verify->add_option("--delta", delta_text, "verify with delta-extension");

    auto* kern = app.add_subcommand("kernelize", "Reduce an instance to its kernel");
    kern->add_option("--k", k, "solution size bound")->required()->check(CLI::NonNegativeNumber);
    kern->add_option("--delta", delta_text, "extension parameter")->required();
    kern->add_option("file", file, "instance JSON")->required();
    kern->add_option("--out", out_file, "kernel instance output path")->required();
    kern->add_option("--provenance", provenance_file, "provenance JSON output path");

    auto* stats = app.add_subcommand("stats", "Print instance statistics");
    stats->add_option("file", file, "instance JSON")->required();
    auto* stats_k = stats->add_option("--k", k, "also report k-long line counts")
                        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (solve->parsed()) return cmd_solve(mode, file, k, eps_text, delta_text, out);
        if (gen->parsed()) return cmd_gen(gen_kind, spec_file, out_file, meta_file, out);
        if (verify->parsed()) return cmd_verify(file, solution_file, delta_text, out);
        if (kern->parsed()) {
            return cmd_kernelize(file, k, delta_text, out_file, provenance_file, out);
        }
        if (stats->parsed()) return cmd_stats(file, k, stats_k->count() > 0, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace segcover
