#include "nilorb/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nilorb/centralizers.hpp"
#include "nilorb/ideals.hpp"

namespace nilorb {

namespace {

Json labelJson(const OrbitLabel& label, const WeightedDynkinDiagram& wdd) {
    Json j = Json::object();
    if (!label.partition.empty()) j["partition"] = label.partition;
    if (label.family == VeryEvenFamily::I) j["family"] = "I";
    if (label.family == VeryEvenFamily::II) j["family"] = "II";
    j["wdd"] = wdd;
    if (!label.name.empty()) j["name"] = label.name;
    return j;
}

bool labelMatches(const Json& labelJ, const OrbitLabel& want) {
    if (!want.partition.empty()) {
        if (!labelJ.contains("partition")) return false;
        if (labelJ["partition"].get<Partition>() != want.partition) return false;
        std::string fam = labelJ.contains("family") ? labelJ["family"].get<std::string>() : "";
        std::string wantFam = want.family == VeryEvenFamily::I    ? "I"
                              : want.family == VeryEvenFamily::II ? "II"
                                                                  : "";
        return fam == wantFam;
    }
    return labelJ["wdd"].get<WeightedDynkinDiagram>() == want.wdd;
}

std::string wddText(const Json& labelJ);

std::string labelText(const Json& labelJ) {
    std::ostringstream out;
    if (labelJ.contains("partition")) {
        out << "(";
        bool first = true;
        for (const auto& part : labelJ["partition"]) {
            if (!first) out << ",";
            out << part.get<int>();
            first = false;
        }
        out << ")";
        if (labelJ.contains("family")) out << " " << labelJ["family"].get<std::string>();
    } else if (labelJ.contains("name")) {
        out << labelJ["name"].get<std::string>();
    } else {
        return wddText(labelJ);
    }
    return out.str();
}

std::string wddText(const Json& labelJ) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (const auto& v : labelJ["wdd"]) {
        if (!first) out << ",";
        out << v.get<int>();
        first = false;
    }
    out << ")";
    return out.str();
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string alignTable(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csvLine(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csvField(fields[i]);
    }
    out += "\n";
    return out;
}

std::vector<std::string> orbitRowCells(const Json& o) {
    return {
        labelText(o["label"]),
        std::to_string(o["dim"].get<long long>()),
        wddText(o["label"]),
        yesNo(o["even"].get<bool>()),
        yesNo(o["richardson"].get<bool>()),
        yesNo(o["rigid"].get<bool>()),
        yesNo(o["extreme"].get<bool>()),
        yesNo(o["lonely"].get<bool>()),
        std::to_string(o["dMin"].get<long long>()),
        std::to_string(o["dDy"].get<long long>()),
        std::to_string(o["dMax"].get<long long>()),
    };
}

const std::vector<std::string>& orbitHeader() {
    static const std::vector<std::string> h = {"label", "dim",     "wDd",   "even",
                                               "rich",  "rigid",   "extreme", "lonely",
                                               "d_min", "d_Dy",    "d_max"};
    return h;
}

std::vector<std::string> orbitCsvCells(const Json& o) {
    const Json& l = o["label"];
    std::string partition, family, wdd, name;
    if (l.contains("partition")) {
        for (const auto& p : l["partition"]) {
            if (!partition.empty()) partition += ",";
            partition += std::to_string(p.get<int>());
        }
    }
    if (l.contains("family")) family = l["family"].get<std::string>();
    if (l.contains("name")) name = l["name"].get<std::string>();
    for (const auto& v : l["wdd"]) {
        if (!wdd.empty()) wdd += ",";
        wdd += std::to_string(v.get<int>());
    }
    auto b = [&](const char* k) { return o[k].get<bool>() ? "true" : "false"; };
    auto n = [&](const char* k) { return std::to_string(o[k].get<long long>()); };
    return {o["type"].get<std::string>(),
            std::to_string(o["rank"].get<int>()),
            partition,
            family,
            name,
            wdd,
            n("dim"),
            b("even"),
            b("richardson"),
            b("rigid"),
            b("extreme"),
            b("lonely"),
            n("dMin"),
            n("dDy"),
            n("dMax")};
}

}  // namespace

Json orbitsPayload(const TypeContext& ctx, uint64_t seed, int jobs) {
    const OrbitCatalog& cat = ctx.catalog(seed);
    const ClassificationReport& rep = cachedClassification(ctx.type, seed, jobs);
    const OrbitLabel& zero = cat.zeroEntry().label;

    Json orbits = Json::array();
    for (size_t idx = 0; idx < cat.entries().size(); ++idx) {
        const OrbitEntry& ent = cat.entries()[idx];
        const IdealClass& cls = rep.classes.at(idx);
        Json o = Json::object();
        o["type"] = ctx.type.name();
        o["rank"] = ctx.type.rank;
        o["label"] = labelJson(ent.label, ent.grading.wdd);
        o["dim"] = ent.dim;
        o["even"] = ent.grading.isEven;
        o["richardson"] = !polarisations(ctx, ent.label, seed).empty();
        o["rigid"] = ctx.isRigid(ent.label, seed);
        o["extreme"] = isExtreme(ctx, ent, seed);
        // The zero class is the trivial singleton {0}; the lonely column
        // tracks the nonzero classification.
        o["lonely"] = ent.label != zero && isLonely(rep, cls);
        o["dMin"] = cls.dMinObserved;
        o["dDy"] = ent.grading.dDy;
        o["dMax"] = cls.dMax;
        orbits.push_back(std::move(o));
    }

    Json payload = Json::object();
    payload["kind"] = "orbits";
    payload["type"] = ctx.type.name();
    payload["rank"] = ctx.type.rank;
    payload["seed"] = seed;
    payload["orbits"] = std::move(orbits);
    return payload;
}

Json orbitInfoFromPayload(const Json& orbits, const OrbitLabel& label) {
    for (const auto& o : orbits["orbits"]) {
        if (!labelMatches(o["label"], label)) continue;
        Json payload = Json::object();
        payload["kind"] = "orbit";
        payload["type"] = orbits["type"];
        payload["rank"] = orbits["rank"];
        payload["seed"] = orbits["seed"];
        payload["orbit"] = o;
        return payload;
    }
    throw std::invalid_argument("no orbit " + label.text() + " in type " +
                                orbits["type"].get<std::string>());
}

Json idealsPayload(const TypeContext& ctx, uint64_t seed, int jobs, bool classified) {
    const RootSystem& rs = ctx.rs();
    Json payload = Json::object();
    payload["kind"] = "ideals";
    payload["type"] = ctx.type.name();
    payload["rank"] = ctx.type.rank;
    payload["seed"] = seed;
    payload["classified"] = classified;
    if (!classified) {
        payload["count"] = uint64_t(enumerateIdeals(rs).size());
        return payload;
    }

    const ClassificationReport& rep = cachedClassification(ctx.type, seed, jobs);
    Json orbitRows = orbitsPayload(ctx, seed, jobs);
    payload["count"] = uint64_t(rep.ideals.size());

    auto generatorLists = [&](const std::vector<int>& idxs) {
        Json lists = Json::array();
        for (int i : idxs) {
            Json gens = Json::array();
            for (int g : rep.ideals[i].generators) gens.push_back(rs.root(g).coords);
            lists.push_back(std::move(gens));
        }
        return lists;
    };

    Json classes = Json::array();
    for (size_t idx = 0; idx < rep.classes.size(); ++idx) {
        const IdealClass& cls = rep.classes[idx];
        Json c = Json::object();
        c["orbit"] = orbitRows["orbits"].at(idx);
        c["idealCount"] = uint64_t(cls.idealIdx.size());
        std::vector<int> dims;
        dims.reserve(cls.idealIdx.size());
        for (int i : cls.idealIdx) dims.push_back(rep.ideals[i].dim);
        std::sort(dims.begin(), dims.end());
        c["dims"] = dims;
        c["maximal"] = generatorLists(cls.maximal);
        c["minimal"] = generatorLists(cls.minimal);
        c["hasseConnected"] = cls.hasseConnected;
        classes.push_back(std::move(c));
    }
    payload["classes"] = std::move(classes);
    return payload;
}

Json suitesPayload(const std::vector<SuiteResult>& results) {
    Json suites = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json s = Json::object();
        s["name"] = r.name;
        s["passed"] = r.passed();
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json e = Json::object();
            e["ok"] = c.ok;
            e["text"] = c.text;
            checks.push_back(std::move(e));
        }
        s["checks"] = std::move(checks);
        if (!r.passed()) all = false;
        suites.push_back(std::move(s));
    }
    Json payload = Json::object();
    payload["kind"] = "verify";
    payload["passed"] = all;
    payload["suites"] = std::move(suites);
    return payload;
}

std::string renderTable(const Json& payload) {
    const std::string kind = payload["kind"].get<std::string>();
    std::ostringstream out;
    if (kind == "orbits") {
        out << "type " << payload["type"].get<std::string>() << "  orbits "
            << payload["orbits"].size() << "  seed " << payload["seed"].get<uint64_t>() << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& o : payload["orbits"]) rows.push_back(orbitRowCells(o));
        out << alignTable(orbitHeader(), rows);
        return out.str();
    }
    if (kind == "orbit") {
        const Json& o = payload["orbit"];
        auto cells = orbitRowCells(o);
        const auto& head = orbitHeader();
        out << "type " << payload["type"].get<std::string>() << "\n";
        for (size_t i = 0; i < head.size(); ++i) out << head[i] << ": " << cells[i] << "\n";
        return out.str();
    }
    if (kind == "ideals") {
        out << "type " << payload["type"].get<std::string>() << "  ideals "
            << payload["count"].get<uint64_t>() << "  seed " << payload["seed"].get<uint64_t>()
            << "\n";
        if (!payload["classified"].get<bool>()) return out.str();
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : payload["classes"]) {
            const auto& dims = c["dims"];
            long long lo = dims.front().get<long long>();
            long long hi = dims.back().get<long long>();
            rows.push_back({
                labelText(c["orbit"]["label"]),
                std::to_string(c["idealCount"].get<uint64_t>()),
                std::to_string(lo) + ".." + std::to_string(hi),
                std::to_string(c["maximal"].size()),
                std::to_string(c["minimal"].size()),
                yesNo(c["hasseConnected"].get<bool>()),
            });
        }
        out << alignTable({"orbit", "ideals", "dims", "maximal", "minimal", "connected"}, rows);
        return out.str();
    }
    if (kind == "verify") {
        for (const auto& s : payload["suites"]) {
            out << "suite " << s["name"].get<std::string>() << ": "
                << (s["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
            for (const auto& c : s["checks"])
                out << "  " << (c["ok"].get<bool>() ? "ok   " : "FAIL ")
                    << c["text"].get<std::string>() << "\n";
        }
        out << (payload["passed"].get<bool>() ? "all suites passed" : "some suites FAILED")
            << "\n";
        return out.str();
    }
    throw std::invalid_argument("unknown payload kind " + kind);
}

std::string renderCsv(const Json& payload) {
    const std::string kind = payload["kind"].get<std::string>();
    std::string out;
    const std::vector<std::string> orbitCols = {
        "type", "rank",  "partition", "family", "name",    "wdd",  "dim",  "even",
        "richardson", "rigid", "extreme", "lonely", "dMin", "dDy", "dMax"};
    if (kind == "orbits") {
        out += csvLine(orbitCols);
        for (const auto& o : payload["orbits"]) out += csvLine(orbitCsvCells(o));
        return out;
    }
    if (kind == "orbit") {
        out += csvLine(orbitCols);
        out += csvLine(orbitCsvCells(payload["orbit"]));
        return out;
    }
    if (kind == "ideals") {
        if (!payload["classified"].get<bool>()) {
            out += csvLine({"type", "rank", "count"});
            out += csvLine({payload["type"].get<std::string>(),
                            std::to_string(payload["rank"].get<int>()),
                            std::to_string(payload["count"].get<uint64_t>())});
            return out;
        }
        out += csvLine({"type", "rank", "orbit", "idealCount", "dimMin", "dimMax",
                        "maximal", "minimal", "hasseConnected"});
        for (const auto& c : payload["classes"]) {
            const auto& dims = c["dims"];
            out += csvLine({payload["type"].get<std::string>(),
                            std::to_string(payload["rank"].get<int>()),
                            labelText(c["orbit"]["label"]),
                            std::to_string(c["idealCount"].get<uint64_t>()),
                            std::to_string(dims.front().get<long long>()),
                            std::to_string(dims.back().get<long long>()),
                            std::to_string(c["maximal"].size()),
                            std::to_string(c["minimal"].size()),
                            c["hasseConnected"].get<bool>() ? "true" : "false"});
        }
        return out;
    }
    if (kind == "verify") {
        out += csvLine({"suite", "ok", "text"});
        for (const auto& s : payload["suites"])
            for (const auto& c : s["checks"])
                out += csvLine({s["name"].get<std::string>(),
                                c["ok"].get<bool>() ? "true" : "false",
                                c["text"].get<std::string>()});
        return out;
    }
    throw std::invalid_argument("unknown payload kind " + kind);
}

std::string renderJson(const Json& payload) { return payload.dump(2) + "\n"; }

}  // namespace nilorb
