#include "segcover/instance.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace segcover {

using nlohmann::json;

namespace {

std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Rational parse_rational_at(const json& j, const std::string& where) {
    if (!j.is_string()) throw parse_error(where + ": expected a rational literal string");
    const auto r = parse_rational(j.get<std::string>());
    if (!r) throw parse_error(where + ": malformed rational \"" + j.get<std::string>() + "\"");
    return *r;
}

Point parse_point_at(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw parse_error(where + ": expected [\"x\",\"y\"]");
    // Sequenced locals: gcc fails to destroy earlier aggregate elements when a
    // later initializer throws, which would leak the parsed x on a bad y.
    Rational x = parse_rational_at(j[0], where + "[0]");
    Rational y = parse_rational_at(j[1], where + "[1]");
    return Point{std::move(x), std::move(y)};
}

json point_json(const Point& p) {
    return json::array({to_string(p.x), to_string(p.y)});
}

}  // namespace

Solution make_solution(const Instance& inst, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    Rational w(0);
    for (std::size_t i : indices) {
        if (i >= inst.segments.size()) throw std::out_of_range("make_solution: segment index out of range");
        w += inst.segments[i].weight;
    }
    return Solution{std::move(indices), std::move(w)};
}

Instance load_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error("instance: JSON parse error at " + locate(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw parse_error("instance: top level must be an object");
    Instance inst;
    const auto pts = j.find("points");
    if (pts == j.end() || !pts->is_array()) throw parse_error("instance: missing \"points\" array");
    for (std::size_t i = 0; i < pts->size(); ++i) {
        inst.points.push_back(parse_point_at((*pts)[i], "points[" + std::to_string(i) + "]"));
    }
    const auto segs = j.find("segments");
    if (segs == j.end() || !segs->is_array()) throw parse_error("instance: missing \"segments\" array");
    for (std::size_t i = 0; i < segs->size(); ++i) {
        const json& s = (*segs)[i];
        const std::string where = "segments[" + std::to_string(i) + "]";
        if (!s.is_object() || !s.contains("p") || !s.contains("q") || !s.contains("w")) {
            throw parse_error(where + ": expected {\"p\":…, \"q\":…, \"w\":…}");
        }
        Rational w = parse_rational_at(s["w"], where + ".w");
        if (w < 0) throw parse_error(where + ".w: negative weight \"" + to_string(w) + "\"");
        inst.segments.push_back(WeightedSegment{
            Segment(parse_point_at(s["p"], where + ".p"), parse_point_at(s["q"], where + ".q")),
            std::move(w)});
    }
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_object()) throw parse_error("labels: expected an object");
        InstanceLabels labels;
        if (l.contains("points")) {
            for (const auto& t : l["points"]) labels.points.push_back(t.get<std::string>());
            if (labels.points.size() != inst.points.size()) {
                throw parse_error("labels.points: size does not match \"points\"");
            }
        }
        if (l.contains("segments")) {
            for (const auto& t : l["segments"]) labels.segments.push_back(t.get<std::string>());
            if (labels.segments.size() != inst.segments.size()) {
                throw parse_error("labels.segments: size does not match \"segments\"");
            }
        }
        inst.labels = std::move(labels);
    }
    return inst;
}

std::string save_instance(const Instance& inst) {
    json j;
    j["points"] = json::array();
    for (const Point& p : inst.points) j["points"].push_back(point_json(p));
    j["segments"] = json::array();
    for (const WeightedSegment& s : inst.segments) {
        j["segments"].push_back(json{{"p", point_json(s.seg.p())},
                                     {"q", point_json(s.seg.q())},
                                     {"w", to_string(s.weight)}});
    }
    if (inst.labels) {
        json l = json::object();
        if (!inst.labels->points.empty()) l["points"] = inst.labels->points;
        if (!inst.labels->segments.empty()) l["segments"] = inst.labels->segments;
        j["labels"] = std::move(l);
    }
    return j.dump(2) + "\n";
}

std::optional<Solution> load_solution(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error("solution: JSON parse error at " + locate(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("feasible") || !j["feasible"].is_boolean()) {
        throw parse_error("solution: missing boolean \"feasible\"");
    }
    if (!j["feasible"].get<bool>()) return std::nullopt;
    Solution sol;
    if (!j.contains("indices") || !j["indices"].is_array()) {
        throw parse_error("solution: missing \"indices\" array");
    }
    for (const auto& v : j["indices"]) {
        if (!v.is_number_unsigned()) throw parse_error("solution: indices must be nonnegative integers");
        sol.indices.push_back(v.get<std::size_t>());
    }
    if (!std::is_sorted(sol.indices.begin(), sol.indices.end()) ||
        std::adjacent_find(sol.indices.begin(), sol.indices.end()) != sol.indices.end()) {
        throw parse_error("solution: indices must be sorted and duplicate-free");
    }
    sol.weight = parse_rational_at(j.contains("weight") ? j["weight"] : json(), "solution.weight");
    return sol;
}

std::string save_solution(const std::optional<Solution>& sol) {
    json j;
    if (!sol) {
        j["feasible"] = false;
    } else {
        j["feasible"] = true;
        j["indices"] = sol->indices;
        j["weight"] = to_string(sol->weight);
    }
    return j.dump(2) + "\n";
}

CoverReport load_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error("report: JSON parse error at " + locate(text, e.byte) + ": " + e.what());
    }
    CoverReport r;
    if (!j.is_object() || !j.contains("covered") || !j["covered"].is_boolean()) {
        throw parse_error("report: missing boolean \"covered\"");
    }
    r.covered = j["covered"].get<bool>();
    if (j.contains("uncovered_points")) {
        for (const auto& v : j["uncovered_points"]) r.uncovered_points.push_back(v.get<std::size_t>());
    }
    if (j.contains("delta_used")) r.delta_used = parse_rational_at(j["delta_used"], "report.delta_used");
    return r;
}

std::string save_report(const CoverReport& report) {
    json j;
    j["covered"] = report.covered;
    j["uncovered_points"] = report.uncovered_points;
    if (report.delta_used) j["delta_used"] = to_string(*report.delta_used);
    return j.dump(2) + "\n";
}

CoverReport verify_cover(const Instance& inst, const Solution& sol,
                         const std::optional<Rational>& delta) {
    for (std::size_t i : sol.indices) {
        if (i >= inst.segments.size()) {
            throw std::out_of_range("verify_cover: segment index " + std::to_string(i) +
                                    " out of range");
        }
    }
    CoverReport report;
    report.delta_used = delta;
    for (std::size_t pj = 0; pj < inst.points.size(); ++pj) {
        bool hit = false;
        for (std::size_t i : sol.indices) {
            const Segment& s = inst.segments[i].seg;
            if (delta ? covers_extended(s, *delta, inst.points[pj]) : on_segment(s, inst.points[pj])) {
                hit = true;
                break;
            }
        }
        if (!hit) report.uncovered_points.push_back(pj);
    }
    report.covered = report.uncovered_points.empty();
    return report;
}

namespace {

Bitset coverage_mask(const Instance& inst, std::size_t seg) {
    Bitset m(inst.points.size());
    for (std::size_t pj = 0; pj < inst.points.size(); ++pj) {
        if (on_segment(inst.segments[seg].seg, inst.points[pj])) m.set(pj);
    }
    return m;
}

}  // namespace

std::vector<Bitset> coverage_sets(const Instance& inst) {
    std::vector<Bitset> masks(inst.segments.size());
    const long n = static_cast<long>(inst.segments.size());
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < n; ++s) {
        masks[static_cast<std::size_t>(s)] = coverage_mask(inst, static_cast<std::size_t>(s));
    }
    return masks;
}

std::vector<Bitset> coverage_sets_serial(const Instance& inst) {
    std::vector<Bitset> masks(inst.segments.size());
    for (std::size_t s = 0; s < inst.segments.size(); ++s) masks[s] = coverage_mask(inst, s);
    return masks;
}

std::vector<LineGroup> collinear_line_groups(const Instance& inst) {
    // Distinct coordinates, represented by their lowest point index.
    std::vector<std::size_t> reps;
    {
        std::map<std::pair<Rational, Rational>, std::size_t> seen;
        for (std::size_t i = 0; i < inst.points.size(); ++i) {
            seen.emplace(std::make_pair(inst.points[i].x, inst.points[i].y), i);
        }
        for (const auto& [coord, idx] : seen) reps.push_back(idx);
        std::sort(reps.begin(), reps.end());
    }
    std::map<Line, std::set<std::size_t>> groups;
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = a + 1; b < reps.size(); ++b) {
            const Line l = line_through(inst.points[reps[a]], inst.points[reps[b]]);
            auto& g = groups[l];
            g.insert(reps[a]);
            g.insert(reps[b]);
        }
    }
    std::vector<LineGroup> out;
    out.reserve(groups.size());
    for (auto& [line, idx] : groups) {
        out.push_back(LineGroup{line, std::vector<std::size_t>(idx.begin(), idx.end())});
    }
    return out;
}

}  // namespace segcover
