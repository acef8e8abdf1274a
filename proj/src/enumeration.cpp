#include "latin/enumeration.hpp"

#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <exception>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latin/bounds.hpp"

namespace latin {

namespace {

constexpr int kMaxEngineOrder = 64; // one machine word of symbol masks
constexpr std::uint64_t kBudgetFlush = 4096;

struct Engine {
    CuboidShape shape;
    int order;
    std::vector<Symbol> base;                    // initial cell contents
    std::vector<std::int64_t> freePositions;     // cells to assign, increasing
    std::vector<std::vector<int>> cellSubs;      // per cell: r-subarray ids
    int numSubs = 0;
    std::uint64_t fullMask = 0;

    Engine(const CuboidShape& s, int ord, std::vector<Symbol> baseCells)
        : shape(s), order(ord), base(std::move(baseCells)) {
        if (order > kMaxEngineOrder)
            throw resource_error("search engine handles at most 64 symbols");
        fullMask = order == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << order) - 1;
        cellSubs.resize(static_cast<std::size_t>(shape.cellCount()));
        forEachSubarray(shape, shape.cls(), [&](const SubarraySelector& sel) {
            const int id = numSubs++;
            sel.forEachCell(shape, [&](std::int64_t cell) {
                cellSubs[static_cast<std::size_t>(cell)].push_back(id);
            });
        });
        for (std::int64_t i = 0; i < shape.cellCount(); ++i)
            if (base[static_cast<std::size_t>(i)] == kEmpty)
                freePositions.push_back(i);
    }
};

struct Shared {
    std::atomic<bool> stop{false};
    std::atomic<bool> budgetExceeded{false};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::int64_t> remaining{-1}; // <0: no limit
    std::uint64_t budget;
    const CuboidSink* sink = nullptr;
    std::exception_ptr sinkError;
    std::atomic<bool> sinkFailed{false};
};

struct Dfs {
    const Engine& eng;
    Shared& shared;
    std::vector<std::uint64_t> masks;
    std::vector<Symbol> cells;
    std::uint64_t localNodes = 0;
    std::uint64_t pendingNodes = 0;
    std::uint64_t solutions = 0;

    Dfs(const Engine& e, Shared& sh)
        : eng(e), shared(sh),
          masks(static_cast<std::size_t>(e.numSubs), 0),
          cells(e.base) {
        for (std::int64_t i = 0; i < e.shape.cellCount(); ++i) {
            Symbol v = cells[static_cast<std::size_t>(i)];
            if (v != kEmpty) place(i, v);
        }
    }

    void place(std::int64_t cell, Symbol s) {
        const std::uint64_t bit = std::uint64_t{1} << s;
        for (int id : eng.cellSubs[static_cast<std::size_t>(cell)])
            masks[static_cast<std::size_t>(id)] |= bit;
        cells[static_cast<std::size_t>(cell)] = s;
    }

    void unplace(std::int64_t cell, Symbol s) {
        const std::uint64_t bit = std::uint64_t{1} << s;
        for (int id : eng.cellSubs[static_cast<std::size_t>(cell)])
            masks[static_cast<std::size_t>(id)] &= ~bit;
        cells[static_cast<std::size_t>(cell)] = kEmpty;
    }

    std::uint64_t candidates(std::int64_t cell) const {
        std::uint64_t forbidden = 0;
        for (int id : eng.cellSubs[static_cast<std::size_t>(cell)])
            forbidden |= masks[static_cast<std::size_t>(id)];
        return eng.fullMask & ~forbidden;
    }

    bool countNode() {
        ++localNodes;
        if (++pendingNodes >= kBudgetFlush) {
            flushNodes();
            if (shared.nodes.load(std::memory_order_relaxed) > shared.budget) {
                shared.budgetExceeded.store(true, std::memory_order_relaxed);
                shared.stop.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return true;
    }

    void flushNodes() {
        shared.nodes.fetch_add(pendingNodes, std::memory_order_relaxed);
        pendingNodes = 0;
    }

    void onSolution() {
        if (shared.remaining.load(std::memory_order_relaxed) >= 0) {
            const std::int64_t old = shared.remaining.fetch_sub(1);
            if (old <= 0) {
                shared.stop.store(true, std::memory_order_relaxed);
                return;
            }
            if (old == 1) shared.stop.store(true, std::memory_order_relaxed);
        }
        ++solutions;
        if (shared.sink) {
            Hypercuboid solution(eng.shape, eng.order, cells);
            assert(validate(solution).valid);
            try {
                (*shared.sink)(solution);
            } catch (...) {
                bool expected = false;
                if (shared.sinkFailed.compare_exchange_strong(expected, true))
                    shared.sinkError = std::current_exception();
                shared.stop.store(true, std::memory_order_relaxed);
            }
        }
    }

    void run(std::size_t fi) {
        if (shared.stop.load(std::memory_order_relaxed)) return;
        if (fi == eng.freePositions.size()) {
            onSolution();
            return;
        }
        const std::int64_t cell = eng.freePositions[fi];
        std::uint64_t cand = candidates(cell);
        while (cand) {
            const Symbol s = std::countr_zero(cand);
            cand &= cand - 1;
            if (!countNode()) return;
            place(cell, s);
            run(fi + 1);
            unplace(cell, s);
            if (shared.stop.load(std::memory_order_relaxed)) return;
        }
    }
};

// One parallel work unit: the symbols chosen for the first `depth` free cells.
using Unit = std::vector<Symbol>;

std::vector<Unit> splitWork(const Engine& eng, Shared& shared, int depth) {
    std::vector<Unit> frontier{Unit{}};
    Dfs probe(eng, shared);
    for (int level = 0; level < depth; ++level) {
        if (static_cast<std::size_t>(level) >= eng.freePositions.size()) break;
        std::vector<Unit> next;
        for (const Unit& u : frontier) {
            for (std::size_t i = 0; i < u.size(); ++i)
                probe.place(eng.freePositions[i], u[i]);
            std::uint64_t cand = probe.candidates(eng.freePositions[u.size()]);
            while (cand) {
                const Symbol s = std::countr_zero(cand);
                cand &= cand - 1;
                probe.countNode();
                Unit child = u;
                child.push_back(s);
                next.push_back(std::move(child));
            }
            for (std::size_t i = u.size(); i-- > 0;)
                probe.unplace(eng.freePositions[i], u[i]);
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    probe.flushNodes();
    return frontier;
}

int chooseSplitDepth(const Engine& eng, const SearchOptions& opts) {
    if (opts.workers <= 1) return 0;
    if (opts.splitDepth >= 0) return opts.splitDepth;
    // Deep enough for at least 4x workers units; bounded by the free cells.
    int depth = 0;
    std::int64_t units = 1;
    while (units < 4ll * opts.workers &&
           depth < static_cast<int>(eng.freePositions.size())) {
        units *= eng.order;
        ++depth;
    }
    return depth;
}

struct RawResult {
    std::uint64_t solutions = 0;
    std::uint64_t nodes = 0;
};

RawResult runSearch(const Engine& eng, const SearchOptions& opts,
                    const CuboidSink* sink) {
    Shared shared;
    shared.budget = opts.nodeBudget;
    shared.sink = sink;
    if (opts.limit) shared.remaining = *opts.limit;

    std::uint64_t solutions = 0;
    if (opts.workers <= 1) {
        Dfs dfs(eng, shared);
        dfs.run(0);
        dfs.flushNodes();
        solutions = dfs.solutions;
    } else {
        const int depth = chooseSplitDepth(eng, opts);
        const auto units = splitWork(eng, shared, depth);
        if (depth >= static_cast<int>(eng.freePositions.size())) {
            // The split already enumerated every cell: units are solutions.
            Dfs dfs(eng, shared);
            for (const Unit& u : units) {
                for (std::size_t i = 0; i < u.size(); ++i)
                    dfs.place(eng.freePositions[i], u[i]);
                dfs.run(u.size());
                for (std::size_t i = u.size(); i-- > 0;)
                    dfs.unplace(eng.freePositions[i], u[i]);
            }
            dfs.flushNodes();
            solutions = dfs.solutions;
        } else {
            std::vector<std::uint64_t> perUnit(units.size(), 0);
#ifdef _OPENMP
#pragma omp parallel num_threads(opts.workers)
            {
                Dfs dfs(eng, shared);
#pragma omp for schedule(dynamic)
                for (std::int64_t u = 0; u < static_cast<std::int64_t>(units.size()); ++u) {
                    const Unit& unit = units[static_cast<std::size_t>(u)];
                    const std::uint64_t before = dfs.solutions;
                    for (std::size_t i = 0; i < unit.size(); ++i)
                        dfs.place(eng.freePositions[i], unit[i]);
                    dfs.run(unit.size());
                    for (std::size_t i = unit.size(); i-- > 0;)
                        dfs.unplace(eng.freePositions[i], unit[i]);
                    perUnit[static_cast<std::size_t>(u)] = dfs.solutions - before;
                }
                dfs.flushNodes();
            }
#else
            Dfs dfs(eng, shared);
            for (std::size_t u = 0; u < units.size(); ++u) {
                const Unit& unit = units[u];
                const std::uint64_t before = dfs.solutions;
                for (std::size_t i = 0; i < unit.size(); ++i)
                    dfs.place(eng.freePositions[i], unit[i]);
                dfs.run(unit.size());
                for (std::size_t i = unit.size(); i-- > 0;)
                    dfs.unplace(eng.freePositions[i], unit[i]);
                perUnit[u] = dfs.solutions - before;
            }
            dfs.flushNodes();
#endif
            for (std::uint64_t c : perUnit) solutions += c;
        }
    }

    if (shared.sinkFailed.load()) std::rethrow_exception(shared.sinkError);
    // Searches shorter than the flush interval never hit the in-flight
    // check; the budget is still a hard cap.
    if (shared.nodes.load(std::memory_order_relaxed) > shared.budget)
        shared.budgetExceeded.store(true, std::memory_order_relaxed);
    if (shared.budgetExceeded.load()) {
        std::ostringstream msg;
        msg << "node budget exhausted after "
            << shared.nodes.load(std::memory_order_relaxed) << " nodes";
        throw resource_error(msg.str());
    }
    return RawResult{solutions, shared.nodes.load(std::memory_order_relaxed)};
}

mpz_class factorial(std::int64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void requireSearchableShape(const CuboidShape& shape) {
    if (shape.cls() > shape.dims() - 1)
        throw parameter_error("enumeration requires class <= d-1");
}

CountResult searchSemiReduced(const CuboidShape& shape, const SearchOptions& opts,
                              const CuboidSink* sink) {
    requireSearchableShape(shape);
    const auto start = std::chrono::steady_clock::now();
    CountResult res;
    res.totalFactor = factorial(shape.order());

    if (shape.cls() >= 2 && !existenceBound(shape).satisfied) {
        // Mirrors the paper's pre-eliminated zero entries: no search at all.
        res.semiReduced = 0;
        res.total = 0;
        res.nodesVisited = 0;
    } else {
        const int order = static_cast<int>(shape.order());
        if (order > kMaxEngineOrder)
            throw resource_error("natural order exceeds the 64-symbol engine");
        std::vector<Symbol> base(static_cast<std::size_t>(shape.cellCount()), kEmpty);
        // With the axis-0-fastest layout the first r-subarray is exactly the
        // first `order` cells, so the symmetry break is a pinned prefix.
        for (int i = 0; i < order; ++i) base[static_cast<std::size_t>(i)] = i;
        Engine eng(shape, order, std::move(base));
        const auto raw = runSearch(eng, opts, sink);
        res.semiReduced = mpz_class(static_cast<unsigned long>(raw.solutions));
        res.total = res.semiReduced * res.totalFactor;
        res.nodesVisited = raw.nodes;
    }
    res.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return res;
}

} // namespace

CountResult countSemiReduced(const CuboidShape& shape, const SearchOptions& opts) {
    return searchSemiReduced(shape, opts, nullptr);
}

CountResult enumerateSemiReduced(const CuboidShape& shape, const SearchOptions& opts,
                                 const CuboidSink& sink) {
    return searchSemiReduced(shape, opts, &sink);
}

CountResult totalCount(const CuboidShape& shape, const SearchOptions& opts) {
    return countSemiReduced(shape, opts);
}

std::optional<Hypercuboid> completePartial(const Hypercuboid& p,
                                           const SearchOptions& opts) {
    if (!validate(p).valid)
        throw parameter_error("partial hypercuboid fails validation");
    if (p.order > kMaxEngineOrder)
        throw resource_error("order exceeds the 64-symbol engine");

    Engine eng(p.shape, p.order, p.cells);
    SearchOptions local = opts;
    local.limit = 1;
    std::optional<Hypercuboid> found;
    CuboidSink sink = [&](const Hypercuboid& c) { found = c; };
    runSearch(eng, local, &sink);
    return found;
}

std::uint64_t countAllValid(const CuboidShape& shape, const SearchOptions& opts) {
    requireSearchableShape(shape);
    const int order = static_cast<int>(shape.order());
    if (order > kMaxEngineOrder)
        throw resource_error("natural order exceeds the 64-symbol engine");
    std::vector<Symbol> base(static_cast<std::size_t>(shape.cellCount()), kEmpty);
    Engine eng(shape, order, std::move(base));
    return runSearch(eng, opts, nullptr).solutions;
}

} // namespace latin
