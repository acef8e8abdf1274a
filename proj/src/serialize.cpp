#include "latin/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace latin {

using nlohmann::json;

json cuboidToJson(const Hypercuboid& c, bool oneBased) {
    json doc;
    doc["sizes"] = c.shape.sizes();
    doc["class"] = c.shape.cls();
    doc["order"] = c.order;
    json cells = json::array();
    for (Symbol v : c.cells) {
        if (v == kEmpty)
            cells.push_back(nullptr);
        else
            cells.push_back(v + (oneBased ? 1 : 0));
    }
    doc["cells"] = std::move(cells);
    return doc;
}

Hypercuboid cuboidFromJson(const json& doc) {
    try {
        std::vector<int> sizes = doc.at("sizes").get<std::vector<int>>();
        const int cls = doc.at("class").get<int>();
        const int order = doc.at("order").get<int>();
        std::vector<Symbol> cells;
        for (const auto& v : doc.at("cells"))
            cells.push_back(v.is_null() ? kEmpty : v.get<Symbol>());
        return Hypercuboid(CuboidShape(std::move(sizes), cls), order, std::move(cells));
    } catch (const json::exception& e) {
        throw data_error(std::string("malformed cuboid document: ") + e.what());
    } catch (const parameter_error& e) {
        throw data_error(std::string("malformed cuboid document: ") + e.what());
    }
}

json codeToJson(const MixedCode& c, bool oneBased) {
    json doc;
    doc["alphabets"] = c.alphabets;
    json words = json::array();
    for (const auto& w : c.words) {
        json jw = json::array();
        for (int x : w) jw.push_back(x + (oneBased ? 1 : 0));
        words.push_back(std::move(jw));
    }
    doc["words"] = std::move(words);
    return doc;
}

MixedCode codeFromJson(const json& doc) {
    try {
        MixedCode c;
        c.alphabets = doc.at("alphabets").get<std::vector<int>>();
        for (const auto& w : doc.at("words"))
            c.words.push_back(w.get<std::vector<int>>());
        checkWellFormed(c);
        return c;
    } catch (const json::exception& e) {
        throw data_error(std::string("malformed code document: ") + e.what());
    }
}

json verdictToJson(const ExistenceVerdict& v) {
    json doc;
    doc["lhs"] = v.lhs;
    doc["rhs"] = v.rhs;
    doc["satisfied"] = v.satisfied;
    if (v.ethierMax)
        doc["ethierMax"] = *v.ethierMax;
    else
        doc["ethierMax"] = nullptr;
    return doc;
}

json boundReportToJson(const BoundReport& rep) {
    json doc;
    doc["alphabets"] = rep.alphabets;
    doc["delta"] = rep.delta;
    doc["singleton"] = rep.singleton;
    doc["hamming"] = rep.hamming ? json(*rep.hamming) : json(nullptr);
    doc["plotkin"] = rep.plotkin ? json(*rep.plotkin) : json(nullptr);
    doc["plotkinRho"] = {{"num", rep.plotkinRhoNum}, {"den", rep.plotkinRhoDen}};
    doc["fullSpace"] = rep.trivialFullSpace;
    doc["repetition"] = rep.trivialRepetition;
    return doc;
}

json countResultToJson(const CountResult& res) {
    json doc;
    // Counts go out as strings; they outgrow JSON numbers quickly.
    doc["semiReduced"] = res.semiReduced.get_str();
    doc["totalFactor"] = res.totalFactor.get_str();
    doc["total"] = res.total.get_str();
    doc["nodesVisited"] = res.nodesVisited;
    doc["millis"] = res.millis;
    return doc;
}

std::string countResultCsvHeader() {
    return "sizes,class,semiReduced,total,nodes,millis";
}

std::string countResultToCsvRow(const CuboidShape& shape, const CountResult& res) {
    std::ostringstream out;
    for (std::size_t i = 0; i < shape.sizes().size(); ++i) {
        if (i) out << 'x';
        out << shape.sizes()[i];
    }
    out << ',' << shape.cls() << ',' << res.semiReduced.get_str() << ','
        << res.total.get_str() << ',' << res.nodesVisited << ',' << res.millis;
    return out.str();
}

namespace {

json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw data_error(std::string("cannot parse ") + path + ": " + e.what());
    }
}

} // namespace

Hypercuboid loadCuboid(const std::string& path) { return cuboidFromJson(loadJson(path)); }

MixedCode loadCode(const std::string& path) { return codeFromJson(loadJson(path)); }

} // namespace latin
