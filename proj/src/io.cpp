#include "levicyc/io.hpp"

#include <set>

#include "levicyc/errors.hpp"

namespace levicyc {

using nlohmann::json;

namespace {

json coords_json(const Coordinates &c) {
    json out;
    out["conductor"] = c.conductor;
    auto triples = [](const auto &items) {
        json arr = json::array();
        for (const auto &h : items) arr.push_back({h[0].str(), h[1].str(), h[2].str()});
        return arr;
    };
    out["lines"] = triples(c.lines);
    out["points"] = triples(c.points);
    return out;
}

template <class H>
std::vector<H> parse_triples(unsigned conductor, const json &arr) {
    std::vector<H> out;
    for (const auto &t : arr) {
        if (!t.is_array() || t.size() != 3) throw ParseError("coordinates must be triples");
        out.emplace_back(CycloNumber::parse(conductor, t[0].get<std::string>()),
                         CycloNumber::parse(conductor, t[1].get<std::string>()),
                         CycloNumber::parse(conductor, t[2].get<std::string>()));
    }
    return out;
}

}  // namespace

json to_json(const Arrangement &arr) {
    json j;
    j["k"] = arr.line_count();
    json points = json::array();
    for (int p = 0; p < arr.point_count(); ++p) points.push_back({{"id", p}, {"lines", arr.lines_through(PointId{p})}});
    j["points"] = points;
    j["line_names"] = arr.line_names();
    j["point_names"] = arr.point_names();
    if (arr.coordinates()) j["coordinates"] = coords_json(*arr.coordinates());
    if (const auto &f = arr.family()) {
        json fam;
        fam["name"] = f->name;
        fam["params"] = f->params;
        fam["chosen"] = f->chosen;
        j["family"] = fam;
    }
    return j;
}

Arrangement arrangement_from_json(const json &j) {
    try {
        if (!j.is_object()) throw ParseError("arrangement JSON must be an object");
        int k = j.at("k").get<int>();
        const auto &pts = j.at("points");
        if (!pts.is_array()) throw ParseError("points must be an array");
        const int s = static_cast<int>(pts.size());
        Incidence inc{k, std::vector<std::vector<int>>(s)};
        std::vector<bool> seen(s, false);
        for (const auto &p : pts) {
            int id = p.at("id").get<int>();
            if (id < 0 || id >= s || seen[id]) throw ParseError("point ids must be 0..s-1, each once");
            seen[id] = true;
            inc.points[id] = p.at("lines").get<std::vector<int>>();
        }
        auto report = validate_incidence(inc);
        if (!report.ok()) {
            auto f = *report.first_failure();
            throw InvalidArrangement(f.name + ": " + f.detail);
        }
        std::vector<std::string> ln, pn;
        if (j.contains("line_names")) ln = j.at("line_names").get<std::vector<std::string>>();
        if (j.contains("point_names")) pn = j.at("point_names").get<std::vector<std::string>>();
        Arrangement arr(std::move(inc), std::move(ln), std::move(pn));
        if (j.contains("coordinates")) {
            const auto &c = j.at("coordinates");
            unsigned n = c.at("conductor").get<unsigned>();
            if (n < 1) throw ParseError("conductor must be positive");
            arr = arr.with_coordinates(
                {n, parse_triples<ProjLine>(n, c.at("lines")), parse_triples<ProjPoint>(n, c.at("points"))});
        }
        if (j.contains("family")) {
            const auto &f = j.at("family");
            FamilyInfo info;
            info.name = f.at("name").get<std::string>();
            if (f.contains("params")) info.params = f.at("params").get<std::map<std::string, long long>>();
            if (f.contains("chosen")) info.chosen = f.at("chosen").get<std::vector<int>>();
            arr = arr.with_family(std::move(info));
        }
        return arr;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed arrangement JSON: ") + e.what());
    }
}

Arrangement read_arrangement(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return arrangement_from_json(j);
}

json to_json(const InducedCycleWitness &w) { return {{"lines", w.lines}, {"points", w.points}}; }

InducedCycleWitness witness_from_json(const json &j) {
    try {
        return {j.at("lines").get<std::vector<int>>(), j.at("points").get<std::vector<int>>()};
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed witness JSON: ") + e.what());
    }
}

json to_json(const ExistsResult &r, bool with_stats) {
    json j;
    j["status"] = to_string(r.status);
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (with_stats) j["nodes"] = r.nodes;
    return j;
}

json to_json(const LongestResult &r, bool with_stats) {
    json j;
    j["result"] = to_string(r.kind);
    j["i"] = r.length;
    j["cycle_length"] = 2 * r.length;
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (with_stats) j["nodes"] = r.nodes;
    return j;
}

json to_json(const CycleSpectrum &s, bool with_stats) {
    json j;
    j["i_max"] = s.i_max;
    json lengths = json::object();
    for (const auto &[i, r] : s.by_length) lengths[std::to_string(i)] = to_json(r, false);
    j["lengths"] = lengths;
    if (auto longest = s.longest_found()) j["longest_found"] = *longest;
    else
        j["longest_found"] = nullptr;
    if (with_stats) j["nodes"] = s.nodes;
    return j;
}

json to_json(const ClaimReport &r, bool with_stats) {
    json j;
    j["claim"] = r.claim_id;
    j["verdict"] = to_string(r.verdict);
    json hyps = json::array();
    for (const auto &h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"evidence", h.evidence}});
    j["hypotheses"] = hyps;
    json concl = json::array();
    for (const auto &c : r.conclusions)
        concl.push_back({{"description", c.description}, {"result", to_string(c.result)}, {"evidence", c.evidence}});
    j["conclusions"] = concl;
    j["notes"] = r.notes;
    json wits = json::array();
    for (const auto &w : r.witnesses) wits.push_back(to_json(w));
    j["witnesses"] = wits;
    j["budget"] = r.budget;
    if (with_stats) {
        j["nodes"] = r.nodes;
        j["wall_ms"] = r.wall_ms;
    }
    return j;
}

}  // namespace levicyc
