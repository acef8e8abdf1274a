// Command-line frontend for the Latin hypercuboid library.
//
// Exit codes: 0 ok / valid, 1 invalid verdict, 2 usage error,
// 3 data error, 4 resource error.

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "latin/bounds.hpp"
#include "latin/codes.hpp"
#include "latin/constructions.hpp"
#include "latin/cuboid.hpp"
#include "latin/enumeration.hpp"
#include "latin/serialize.hpp"

using nlohmann::json;

namespace {

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.empty()) throw latin::parameter_error("empty integer list");
    return out;
}

std::vector<std::vector<int>> parseMatrix(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';'))
        rows.push_back(parseIntList(row));
    return rows;
}

std::uint64_t nodeBudgetFromEnv() {
    if (const char* env = std::getenv("LATIN_NODE_BUDGET"))
        return std::strtoull(env, nullptr, 10);
    return std::uint64_t{1} << 62;
}

struct Options {
    std::string format = "json";
    bool oneBased = false;
};

void emit(const Options& opts, const json& doc) {
    if (opts.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump(2) << "\n"; // CSV callers print their own rows
}

// Table 2 desk-scale subset; the extended tier adds the long-running rows.
struct Table2Row {
    std::vector<int> sizes;
    int cls;
    long expected;
    bool extended;
};

const std::vector<Table2Row> kTable2 = {
    {{2, 2, 2}, 1, 1, false},        {{3, 2, 2}, 1, 6, false},
    {{3, 2, 2}, 2, 4, false},        {{3, 3, 2}, 1, 4, false},
    {{3, 3, 2}, 2, 448, false},      {{3, 3, 3}, 1, 4, false},
    {{3, 3, 3}, 2, 40, false},       {{4, 2, 2}, 1, 321, false},
    {{4, 2, 2}, 2, 81, false},       {{2, 2, 2, 2}, 1, 1, false},
    {{2, 2, 2, 2}, 3, 1, false},     {{3, 2, 2, 2}, 1, 38, false},
    {{3, 2, 2, 2}, 2, 0, false},     {{3, 3, 2, 2}, 1, 12, false},
    {{3, 3, 2, 2}, 2, 176, false},   {{3, 3, 3, 2}, 1, 8, false},
    {{3, 3, 3, 2}, 2, 104, false},   {{3, 3, 3, 3}, 1, 8, false},
    {{3, 3, 3, 3}, 2, 104, false},   {{4, 2, 2, 2}, 2, 576, false},
    {{2, 2, 2, 2, 2}, 1, 1, false},  {{3, 3, 2, 2, 2}, 2, 0, false},
    {{3, 3, 3, 2, 2}, 1, 24, false}, {{3, 3, 3, 2, 2}, 2, 0, false},
    {{5, 2, 2}, 1, 33372, true},     {{5, 2, 2}, 2, 1936, true},
    {{4, 3, 2}, 2, 190992, true},    {{3, 2, 2, 2}, 3, 11520, true},
    {{4, 2, 2, 2}, 1, 119001, true},
};

int runValidate(const Options& opts, const std::string& file) {
    const auto c = latin::loadCuboid(file);
    const auto rep = latin::validate(c);
    json doc;
    doc["valid"] = rep.valid;
    emit(opts, doc);
    if (!rep.valid && rep.firstViolation) {
        const auto& v = *rep.firstViolation;
        std::cerr << "symbol " << (v.symbol + (opts.oneBased ? 1 : 0))
                  << " repeats at cells " << v.cellA << " and " << v.cellB << "\n";
    }
    return rep.valid ? 0 : 1;
}

latin::SearchOptions searchOptions(int workers, int splitDepth,
                                   std::int64_t limit) {
    latin::SearchOptions s;
    s.workers = workers;
    s.splitDepth = splitDepth;
    if (limit >= 0) s.limit = limit;
    s.nodeBudget = nodeBudgetFromEnv();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin hypercuboids of class r: validation, constructions, "
                 "enumeration, mixed-code bounds and equivalences"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opts;
    app.add_option("--format", opts.format, "Output encoding")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--one-based", opts.oneBased, "Display symbols 1-based");

    std::string file, squareFile, baseFile, seedFile, matrixText;
    std::string shapeText, alphabetsText;
    int cls = 1, delta = -1, rParam = 1, nParam = 0, prime = 0, lowDist = 2;
    int workers = 1, splitDepth = -1;
    std::int64_t limit = -1;
    bool countOnly = false, total = false, expand = false, extended = false;

    auto* validateCmd = app.add_subcommand("validate", "Check a cuboid file");
    validateCmd->add_option("file", file)->required();

    auto* boundsCmd = app.add_subcommand("bounds", "Existence or code bounds");
    boundsCmd->add_option("--shape", shapeText, "Comma-separated sizes");
    boundsCmd->add_option("--class", cls, "Class r");
    boundsCmd->add_option("--alphabets", alphabetsText, "Comma-separated alphabets");
    boundsCmd->add_option("--delta", delta, "Minimum distance");

    auto* constructCmd = app.add_subcommand("construct", "Build a hypercuboid");
    constructCmd->require_subcommand(1);
    auto* modularCmd = constructCmd->add_subcommand("modular", "Class-1 modular cuboid");
    modularCmd->add_option("--shape", shapeText)->required();
    auto* seedCmd = constructCmd->add_subcommand("seed", "Square lift LHC(r+1,n,r)");
    seedCmd->add_option("--n", nParam)->required();
    seedCmd->add_option("--r", rParam)->required();
    seedCmd->add_option("--square", squareFile, "Latin square file (default cyclic)");
    auto* extendCmd = constructCmd->add_subcommand("extend", "Embed LHC(d,n,r) into d+1");
    extendCmd->add_option("--base", baseFile)->required();
    extendCmd->add_option("--seed", seedFile)->required();
    auto* matrixCmd = constructCmd->add_subcommand("matrix", "GF(p) matrix quasigroup");
    matrixCmd->add_option("--prime", prime)->required();
    matrixCmd->add_option("--matrix", matrixText, "Rows ';'-separated, entries ','")
        ->required();

    auto* enumCmd = app.add_subcommand("enumerate", "Count/enumerate semi-reduced cuboids");
    enumCmd->add_option("--shape", shapeText)->required();
    enumCmd->add_option("--class", cls)->required();
    enumCmd->add_flag("--count-only", countOnly);
    enumCmd->add_flag("--total", total, "Report the h*c total (always included)");
    enumCmd->add_option("--limit", limit, "Stop after this many solutions");
    enumCmd->add_option("--workers", workers);
    enumCmd->add_option("--split-depth", splitDepth);

    auto* convertCmd = app.add_subcommand("convert", "Cuboid <-> mixed code");
    convertCmd->require_subcommand(1);
    auto* toCodeCmd = convertCmd->add_subcommand("to-code");
    toCodeCmd->add_option("file", file)->required();
    toCodeCmd->add_flag("--expand", expand, "Unrank symbols into r-tuples");
    auto* fromCodeCmd = convertCmd->add_subcommand("from-code");
    fromCodeCmd->add_option("file", file)->required();
    fromCodeCmd->add_option("--r", rParam)->required();

    auto* verifyCmd = app.add_subcommand("verify", "Clique / endomorphism / MDS checks");
    verifyCmd->require_subcommand(1);
    auto* cliqueCmd = verifyCmd->add_subcommand("clique");
    cliqueCmd->add_option("file", file)->required();
    cliqueCmd->add_option("--low-dist", lowDist)->required();
    auto* endoCmd = verifyCmd->add_subcommand("endo");
    endoCmd->add_option("file", file)->required();
    auto* mdsCmd = verifyCmd->add_subcommand("mds");
    mdsCmd->add_option("file", file)->required();

    auto* oracleCmd = app.add_subcommand("oracle", "Exhaustive tiny-space optima");
    auto* maxCodeCmd = oracleCmd->add_subcommand("max-code");
    maxCodeCmd->add_option("--alphabets", alphabetsText)->required();
    maxCodeCmd->add_option("--delta", delta)->required();

    auto* table2Cmd = app.add_subcommand("reproduce-table2",
                                         "Re-count the published table and diff");
    table2Cmd->add_flag("--extended", extended, "Include the long-running rows");
    table2Cmd->add_option("--workers", workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validateCmd) return runValidate(opts, file);

        if (*boundsCmd) {
            if (!shapeText.empty()) {
                latin::CuboidShape shape(parseIntList(shapeText), cls);
                emit(opts, latin::verdictToJson(latin::existenceBound(shape)));
            } else if (!alphabetsText.empty() && delta > 0) {
                emit(opts, latin::boundReportToJson(
                               latin::boundReport(parseIntList(alphabetsText), delta)));
            } else {
                std::cerr << "bounds needs --shape/--class or --alphabets/--delta\n";
                return 2;
            }
            return 0;
        }

        if (*constructCmd) {
            latin::Hypercuboid out = [&] {
                if (*modularCmd)
                    return latin::modularClass1(
                        latin::CuboidShape(parseIntList(shapeText), 1));
                if (*seedCmd) {
                    auto square = squareFile.empty() ? latin::cyclicSquare(nParam)
                                                     : latin::loadCuboid(squareFile);
                    return latin::seedCube(nParam, rParam, square);
                }
                if (*extendCmd)
                    return latin::extendCube(latin::loadCuboid(baseFile),
                                             latin::loadCuboid(seedFile));
                latin::MatrixSpec spec{prime, parseMatrix(matrixText)};
                return latin::matrixCube(spec);
            }();
            emit(opts, latin::cuboidToJson(out, opts.oneBased));
            return 0;
        }

        if (*enumCmd) {
            latin::CuboidShape shape(parseIntList(shapeText), cls);
            const auto sopts = searchOptions(workers, splitDepth, limit);
            json doc;
            if (countOnly) {
                const auto res = latin::countSemiReduced(shape, sopts);
                if (opts.format == "csv") {
                    std::cout << latin::countResultCsvHeader() << "\n"
                              << latin::countResultToCsvRow(shape, res) << "\n";
                    return 0;
                }
                doc["result"] = latin::countResultToJson(res);
            } else {
                json solutions = json::array();
                std::mutex mu;
                const auto res = latin::enumerateSemiReduced(
                    shape, sopts, [&](const latin::Hypercuboid& c) {
                        std::lock_guard<std::mutex> lock(mu);
                        solutions.push_back(latin::cuboidToJson(c, opts.oneBased));
                    });
                doc["result"] = latin::countResultToJson(res);
                doc["solutions"] = std::move(solutions);
            }
            emit(opts, doc);
            return 0;
        }

        if (*convertCmd) {
            if (*toCodeCmd) {
                emit(opts, latin::codeToJson(
                               latin::cuboidToCode(latin::loadCuboid(file), expand),
                               opts.oneBased));
            } else {
                emit(opts, latin::cuboidToJson(
                               latin::codeToCuboid(latin::loadCode(file), rParam),
                               opts.oneBased));
            }
            return 0;
        }

        if (*verifyCmd) {
            json doc;
            if (*cliqueCmd) {
                const auto rep = latin::codeIsClique(latin::loadCode(file), lowDist);
                doc["clique"] = rep.clique;
                doc["maximal"] = rep.maximal;
            } else if (*endoCmd) {
                const auto e = latin::buildEndomorphism(latin::loadCuboid(file));
                doc["rank"] = e.rank;
                doc["distanceSet"] = e.distanceSet;
                doc["kernelClassSizes"] = latin::kernelClassSizes(e);
                doc["verified"] = latin::verifyEndomorphism(e);
            } else {
                const auto code = latin::loadCode(file);
                const auto m = latin::codeMetrics(code);
                doc["size"] = m.size;
                doc["minDistance"] = m.minDistance ? json(*m.minDistance) : json(nullptr);
                doc["mds"] = latin::isMds(code);
            }
            emit(opts, doc);
            return 0;
        }

        if (*oracleCmd) {
            const auto [best, witness] =
                latin::maxCodeBruteforce(parseIntList(alphabetsText), delta);
            json doc;
            doc["max"] = best;
            doc["witness"] = latin::codeToJson(witness, opts.oneBased);
            emit(opts, doc);
            return 0;
        }

        if (*table2Cmd) {
            bool allMatch = true;
            if (opts.format == "csv")
                std::cout << latin::countResultCsvHeader() << ",expected,match\n";
            json rows = json::array();
            for (const auto& row : kTable2) {
                if (row.extended && !extended) continue;
                latin::CuboidShape shape(row.sizes, row.cls);
                const auto res =
                    latin::countSemiReduced(shape, searchOptions(workers, splitDepth, -1));
                const bool match = res.semiReduced == row.expected;
                allMatch = allMatch && match;
                if (opts.format == "csv") {
                    std::cout << latin::countResultToCsvRow(shape, res) << ','
                              << row.expected << ',' << (match ? "yes" : "NO") << "\n";
                } else {
                    json j;
                    j["sizes"] = row.sizes;
                    j["class"] = row.cls;
                    j["semiReduced"] = res.semiReduced.get_str();
                    j["expected"] = row.expected;
                    j["match"] = match;
                    rows.push_back(std::move(j));
                }
            }
            if (opts.format != "csv") emit(opts, rows);
            return allMatch ? 0 : 1;
        }
    } catch (const latin::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const latin::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 4;
    } catch (const latin::data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
