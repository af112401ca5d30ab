#include "symstress/io.hpp"

#include "symstress/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace symstress {

using json = nlohmann::ordered_json;

namespace {

constexpr double pi = std::numbers::pi;

std::string family_name(Family f) { return f == Family::Cn ? "Cn" : "Cnv"; }

PointGroup group_from_json(const json& g) {
    if (!g.is_object()) throw ParseError("\"group\" must be \"auto\" or an object");
    const std::string family = g.value("family", std::string("C1"));
    int n = 1;
    Family fam;
    if (family == "C1") fam = Family::Cn;
    else if (family == "Cs") fam = Family::Cnv;
    else if (family == "Cn" || family == "Cnv") {
        fam = family == "Cn" ? Family::Cn : Family::Cnv;
        if (!g.contains("n") || !g["n"].is_number_integer()) throw ParseError("group \"n\" must be an integer");
        n = g["n"].get<int>();
        if (n < 1) throw ParseError("group \"n\" must be at least 1");
    } else {
        throw ParseError("unknown group family '" + family + "'");
    }
    double angle = 0.0;
    if (g.contains("mirror_angle_deg")) {
        if (!g["mirror_angle_deg"].is_number()) throw ParseError("\"mirror_angle_deg\" must be a number");
        angle = g["mirror_angle_deg"].get<double>();
    }
    Point2 center{};
    if (g.contains("center")) {
        const auto& c = g["center"];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError("\"center\" must be [x, y]");
        center = {c[0].get<double>(), c[1].get<double>()};
    }
    return PointGroup(fam, n, angle * pi / 180.0, center);
}

json group_to_json(const PointGroup& g) {
    json j;
    j["family"] = family_name(g.family());
    j["n"] = g.n();
    j["center"] = {g.center().x, g.center().y};
    if (g.family() == Family::Cnv) j["mirror_angle_deg"] = mirror_angle_degrees(g);
    return j;
}

json group_summary(const PointGroup& g) {
    json j;
    j["name"] = g.name();
    const json fields = group_to_json(g);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    json classes = json::array();
    for (const auto& c : g.classes()) classes.push_back({{"label", c.label}, {"size", c.size()}});
    j["classes"] = classes;
    return j;
}

json census_to_json(const SymmetryCensus& c) {
    json j;
    j["v"] = c.v;
    j["e"] = c.e;
    j["pinned"] = c.pinned;
    j["v_c"] = c.v_c;
    j["e_2"] = c.e_2;
    j["e_sigma"] = c.e_sigma;
    j["v_sigma"] = c.v_sigma;
    json classes = json::array();
    for (const auto& cc : c.classes)
        classes.push_back({{"label", cc.label},
                           {"size", cc.size},
                           {"unshifted_vertices", cc.unshifted_vertices},
                           {"unshifted_edges", cc.unshifted_edges}});
    j["classes"] = classes;
    return j;
}

json character_to_json(const Character& ch) {
    json out = json::array();
    for (const auto& v : ch.values) {
        const double re = std::abs(v.real()) < 1e-12 ? 0.0 : v.real();
        if (std::abs(v.imag()) > 1e-12) out.push_back({re, v.imag()});
        else if (std::abs(re - std::round(re)) < 1e-9) out.push_back(static_cast<long long>(std::llround(re)));
        else out.push_back(re);
    }
    return out;
}

json analysis_json(const AnalysisReport& r) {
    json j;
    j["group"] = group_summary(r.group);
    j["k"] = r.k;
    j["census"] = census_to_json(r.census);
    j["character"] = character_to_json(r.character);
    json dec = json::object();
    for (std::size_t i = 0; i < r.decomposition.labels.size(); ++i)
        dec[r.decomposition.labels[i]] = r.decomposition.coefficients[i];
    j["decomposition"] = dec;
    j["decomposition_text"] = r.decomposition.to_string();
    j["cross_check"] = to_string(r.cross_check);
    json irreps = json::array();
    for (const auto& c : r.irreps)
        irreps.push_back({{"label", c.label},
                          {"dimension", c.dimension},
                          {"gamma", c.gamma},
                          {"detected_s", c.detected_s},
                          {"detected_m", c.detected_m},
                          {"annotations", c.annotations}});
    j["irreps"] = irreps;
    j["detected"] = {{"s", r.detected_s},
                     {"m", r.detected_m},
                     {"surplus", r.surplus},
                     {"fully_symmetric_s", r.fully_symmetric_s},
                     {"fully_symmetric_m", r.fully_symmetric_m}};
    json mirrors = json::array();
    for (const auto& m : r.mirrors)
        mirrors.push_back({{"class", m.mirror_class},
                           {"anti_symmetric_irreps", m.irreps},
                           {"detected_s", m.detected_s},
                           {"detected_m", m.detected_m}});
    j["mirrors"] = mirrors;
    j["notices"] = r.notices;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
    std::vector<std::size_t> width;
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], display_width(row[i]));
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line = indent;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - display_width(row[i]) + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string character_entry(const Complex& v) {
    if (std::abs(v.imag()) > 1e-12) return format_fixed(v.real(), 6) + (v.imag() < 0 ? "-" : "+") +
                                           format_fixed(std::abs(v.imag()), 6) + "i";
    return format_fixed(v.real(), 6);
}

// "2σv" -> "σv": class label without its size prefix.
std::string mirror_symbol(const std::string& label) {
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    return label.substr(i);
}

std::string group_line(const PointGroup& g) {
    std::string s = g.name();
    std::vector<std::string> extra;
    if (g.family() == Family::Cnv) extra.push_back("mirror " + format_number(mirror_angle_degrees(g)) + " deg");
    if (g.center().x != 0.0 || g.center().y != 0.0)
        extra.push_back("centre (" + format_number(g.center().x) + ", " + format_number(g.center().y) + ")");
    if (!extra.empty()) {
        s += " (";
        for (std::size_t i = 0; i < extra.size(); ++i) s += (i ? ", " : "") + extra[i];
        s += ")";
    }
    return s;
}

}  // namespace

double mirror_angle_degrees(const PointGroup& g) {
    const double deg = g.mirror_ref_angle() * 180.0 / pi;
    const double r = std::round(deg);
    return std::abs(deg - r) < 1e-9 ? r : deg;
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
    std::string s(buf, res.ptr);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

FrameworkDocument parse_framework(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("framework document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing \"edges\" array");

    const auto& vs = doc["vertices"];
    std::vector<Point2> pts(vs.size());
    std::vector<int> pinned;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& v = vs[i];
        if (!v.is_object()) throw ParseError("vertex " + std::to_string(i) + " is not an object");
        if (!v.contains("id") || !v["id"].is_number_integer() || v["id"].get<long long>() != static_cast<long long>(i))
            throw ParseError("vertex ids must be 0..v-1 in order (entry " + std::to_string(i) + ")");
        if (!v.contains("x") || !v["x"].is_number() || !v.contains("y") || !v["y"].is_number())
            throw ParseError("vertex " + std::to_string(i) + " needs numeric \"x\" and \"y\"");
        pts[i] = {v["x"].get<double>(), v["y"].get<double>()};
        if (v.contains("pinned")) {
            if (!v["pinned"].is_boolean()) throw ParseError("vertex " + std::to_string(i) + ": \"pinned\" must be boolean");
            if (v["pinned"].get<bool>()) pinned.push_back(static_cast<int>(i));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
        const auto& e = doc["edges"][k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edge " + std::to_string(k) + " must be a pair of vertex ids");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }

    FrameworkDocument out;
    Graph graph(static_cast<int>(pts.size()), std::move(edges));
    out.framework = Framework(std::move(graph), std::move(pts), std::move(pinned));
    if (doc.contains("group")) {
        const auto& g = doc["group"];
        if (g.is_string()) {
            if (g.get<std::string>() != "auto") throw ParseError("\"group\" string must be \"auto\"");
            out.group = GroupChoice{true, PointGroup()};
        } else {
            out.group = GroupChoice{false, group_from_json(g)};
        }
    }
    return out;
}

FrameworkDocument read_framework(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_framework(buf.str());
}

std::string framework_to_json(const Framework& fw, const std::optional<GroupChoice>& group) {
    std::string out = "{\n  \"vertices\": [\n";
    for (int i = 0; i < fw.vertex_count(); ++i) {
        json v;
        v["id"] = i;
        v["x"] = fw.position(i).x;
        v["y"] = fw.position(i).y;
        v["pinned"] = fw.pinned(i);
        out += "    " + v.dump() + (i + 1 < fw.vertex_count() ? ",\n" : "\n");
    }
    out += "  ],\n  \"edges\": [";
    for (int k = 0; k < fw.edge_count(); ++k) {
        const Edge e = fw.graph().edge(k);
        if (k % 10 == 0) out += "\n    ";
        else out += " ";
        out += "[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
        if (k + 1 < fw.edge_count()) out += ",";
    }
    out += fw.edge_count() > 0 ? "\n  ]" : "]";
    if (group) {
        out += ",\n  \"group\": ";
        out += group->automatic ? json("auto").dump() : group_to_json(group->group).dump();
    }
    out += "\n}\n";
    return out;
}

GroupChoice parse_group_flag(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    auto parse_int = [&](const std::string& s) {
        int v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 1)
            throw ParseError("bad rotation order '" + s + "' in --group " + text);
        return v;
    };
    auto parse_angle = [&](const std::string& s) {
        if (s == "vertical") return 90.0;
        if (s == "horizontal") return 0.0;
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
            throw ParseError("bad mirror angle '" + s + "' in --group " + text);
        return v;
    };
    const std::string& head = parts[0];
    if (head == "auto" && parts.size() == 1) return {true, PointGroup()};
    if (head == "C1" && parts.size() == 1) return {false, PointGroup(Family::Cn, 1)};
    if (head == "Cs" && parts.size() <= 2)
        return {false, PointGroup(Family::Cnv, 1, (parts.size() == 2 ? parse_angle(parts[1]) : 0.0) * pi / 180.0)};
    if (head == "Cn" && parts.size() == 2) return {false, PointGroup(Family::Cn, parse_int(parts[1]))};
    if (head == "Cnv" && (parts.size() == 2 || parts.size() == 3))
        return {false, PointGroup(Family::Cnv, parse_int(parts[1]),
                                  (parts.size() == 3 ? parse_angle(parts[2]) : 0.0) * pi / 180.0)};
    throw ParseError("unrecognised --group value '" + text + "'");
}

std::string analysis_to_json(const AnalysisReport& report, const std::string& source) {
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "analysis";
    if (!source.empty()) j["source"] = source;
    const json body = analysis_json(report);
    for (const auto& [key, value] : body.items()) j[key] = value;
    return dump(j);
}

std::string analysis_to_text(const AnalysisReport& r, const std::string& source) {
    std::string out;
    if (!source.empty()) out += source + "\n";
    std::vector<std::vector<std::string>> head{
        {"group", group_line(r.group)},
        {"pinned", r.census.pinned ? "yes" : "no"},
        {"k", std::to_string(r.k)},
    };
    std::string census = "v=" + std::to_string(r.census.v) + " e=" + std::to_string(r.census.e);
    if (r.group.n() > 1) census += " v_c=" + std::to_string(r.census.v_c);
    if (r.group.has_half_turn()) census += " e_2=" + std::to_string(r.census.e_2);
    const auto mirrors = r.group.mirror_classes();
    for (std::size_t i = 0; i < mirrors.size(); ++i)
        census += " e_" + mirror_symbol(r.census.classes[static_cast<std::size_t>(mirrors[i])].label) + "=" +
                  std::to_string(r.census.e_sigma[i]);
    head.push_back({"census", census});
    out += table(head, "  ");

    std::vector<std::vector<std::string>> classes{{"class"}, {"size"}, {"unshifted v"}, {"unshifted e"}, {"character"}};
    for (std::size_t c = 0; c < r.census.classes.size(); ++c) {
        const auto& cc = r.census.classes[c];
        classes[0].push_back(cc.label);
        classes[1].push_back(std::to_string(cc.size));
        classes[2].push_back(std::to_string(cc.unshifted_vertices));
        classes[3].push_back(std::to_string(cc.unshifted_edges));
        classes[4].push_back(character_entry(r.character[c]));
    }
    out += "\n" + table(classes, "  ");
    out += "\n  Gamma(m) - Gamma(s) = " + r.decomposition.to_string() + "\n";
    out += "  closed form: " + to_string(r.cross_check) + "\n\n";

    std::vector<std::vector<std::string>> irreps{{"irrep", "d", "gamma", "s >=", "m >=", "notes"}};
    for (const auto& c : r.irreps) {
        std::string notes;
        for (std::size_t i = 0; i < c.annotations.size(); ++i) notes += (i ? "; " : "") + c.annotations[i];
        irreps.push_back({c.label, std::to_string(c.dimension), std::to_string(c.gamma), std::to_string(c.detected_s),
                          std::to_string(c.detected_m), notes});
    }
    out += table(irreps, "  ");
    out += "\n  detected: s >= " + std::to_string(r.detected_s) + ", m >= " + std::to_string(r.detected_m) +
           ", symmetry-detectable surplus " + std::to_string(r.surplus) + "\n";
    out += "  fully-symmetric: s >= " + std::to_string(r.fully_symmetric_s) + ", m >= " +
           std::to_string(r.fully_symmetric_m) + "\n";
    for (const auto& m : r.mirrors)
        out += "  anti-symmetric w.r.t. " + m.mirror_class + ": s >= " + std::to_string(m.detected_s) + ", m >= " +
               std::to_string(m.detected_m) + "\n";
    for (const auto& n : r.notices) out += "  note: " + n + "\n";
    return out;
}

std::string verification_to_json(const VerificationReport& v, const AnalysisReport& analysis, const std::string& source) {
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "verification";
    if (!source.empty()) j["source"] = source;
    j["group"] = group_summary(analysis.group);
    j["passed"] = v.passed();
    j["k"] = v.k;
    j["numeric"] = {{"rank", v.rank}, {"s", v.s}, {"m", v.m}, {"surplus", v.surplus}};
    j["residuals"] = {{"intertwining", v.intertwining}, {"resolution_of_identity", v.identity}};
    json checks = json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    json irreps = json::array();
    for (const auto& i : v.irreps)
        irreps.push_back({{"label", i.label},
                          {"dimension", i.dimension},
                          {"gamma", i.gamma},
                          {"s", i.s},
                          {"m", i.m},
                          {"trivial", i.trivial},
                          {"detected_s", i.detected_s}});
    j["irreps"] = irreps;
    j["analysis"] = analysis_json(analysis);
    return dump(j);
}

std::string verification_to_text(const VerificationReport& v, const std::string& source) {
    std::string out;
    if (!source.empty()) out += source + "\n";
    out += "  group " + v.group_name + ", k=" + std::to_string(v.k) + ", rank " + std::to_string(v.rank) +
           ", s=" + std::to_string(v.s) + ", m=" + std::to_string(v.m) + ", surplus " + std::to_string(v.surplus) +
           "\n\n";
    std::vector<std::vector<std::string>> checks;
    for (const auto& c : v.checks) checks.push_back({c.passed ? "PASS" : "FAIL", c.name, c.detail});
    out += table(checks, "  ");
    if (!v.irreps.empty()) {
        std::vector<std::vector<std::string>> irreps{{"irrep", "d", "gamma", "s_i", "m_i", "trivial", "s_i >="}};
        for (const auto& i : v.irreps)
            irreps.push_back({i.label, std::to_string(i.dimension), std::to_string(i.gamma), std::to_string(i.s),
                              std::to_string(i.m), std::to_string(i.trivial), std::to_string(i.detected_s)});
        out += "\n" + table(irreps, "  ");
    }
    out += std::string("\n  ") + (v.passed() ? "verified" : "verification FAILED") + "\n";
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << contents;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace symstress
