#include "antiramsey/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <thread>

#include "antiramsey/audit.hpp"
#include "antiramsey/coloring.hpp"
#include "antiramsey/errors.hpp"

namespace antiramsey {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

Graph sample_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 0) throw InputError("sample_gnp: negative n");
    if (p < Rational(0) || p > Rational(1)) throw InputError("sample_gnp: p = " + p.str() + " outside [0, 1]");
    const bool always = p == Rational(1);
    const auto threshold = static_cast<std::uint64_t>((static_cast<unsigned __int128>(p.num()) << 64) /
                                                      static_cast<unsigned __int128>(p.den()));
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            std::uint64_t draw = rng();
            if (always || draw < threshold) edges.push_back({a, b});
        }
    }
    return Graph(n, std::move(edges));
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RS_THREADS")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

template <class Body>
void parallel_for(int count, int threads, Body&& body) {
    threads = std::clamp(threads, 1, std::max(1, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (int i = next++; i < count; i = next++) body(i);
        });
    }
}

bool is_triangle(const Graph& h) {
    return h.vertex_count() == 3 && h.edge_count() == 3;
}

}  // namespace

TrialRate triangle_anti_ramsey_trial(const TrialConfig& cfg) {
    if (!is_triangle(cfg.pattern)) throw InputError("triangle_anti_ramsey_trial: pattern must be K3");
    if (cfg.trials < 1) throw InputError("triangle_anti_ramsey_trial: trials must be positive");
    std::vector<char> hit(static_cast<std::size_t>(cfg.trials), 0);
    parallel_for(cfg.trials, resolve_thread_count(cfg.threads), [&](int i) {
        Graph g = sample_gnp(cfg.n, cfg.p, trial_seed(cfg.master_seed, static_cast<std::uint64_t>(i)));
        hit[static_cast<std::size_t>(i)] = find_copy(g, cfg.pattern).has_value();
    });
    return {cfg.p, cfg.trials, static_cast<int>(std::count(hit.begin(), hit.end(), 1))};
}

std::vector<TrialRate> triangle_sweep(TrialConfig cfg, const std::vector<Rational>& probabilities) {
    std::vector<TrialRate> out;
    for (const Rational& p : probabilities) {
        cfg.p = p;
        out.push_back(triangle_anti_ramsey_trial(cfg));
    }
    return out;
}

std::vector<TrialRecord> coloring_sweep(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw InputError("coloring_sweep: trials must be positive");
    if (cfg.p < Rational(0) || cfg.p > Rational(1)) throw InputError("coloring_sweep: p outside [0, 1]");
    const bool search_pattern = cfg.pattern.edge_count() > 0 && cfg.pattern.edge_count() <= kMaxSweepPatternEdges;
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
    parallel_for(cfg.trials, resolve_thread_count(cfg.threads), [&](int i) {
        TrialRecord& rec = records[static_cast<std::size_t>(i)];
        rec.trial_index = i;
        rec.seed = trial_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
        rec.n = cfg.n;
        rec.p = cfg.p;
        Graph g = sample_gnp(cfg.n, cfg.p, rec.seed);
        rec.edge_count = g.edge_count();
        if (g.edge_count() == 0) {
            rec.skipped = true;
            return;
        }
        try {
            if (search_pattern) rec.contains_pattern = find_copy(g, cfg.pattern).has_value();
            ColoringResult result = anti_rainbow_coloring(g);
            rec.m_value = result.coloring.m_value;
            rec.coloring_proper = is_proper_coloring(g, result.coloring);
            rec.decomposition_ok = verify_decomposition(g, result.decomposition).passed();
            if (search_pattern) rec.rainbow_found = rainbow_copy_search(g, result.coloring, cfg.pattern).has_value();
        } catch (const std::exception&) {
            rec.coloring_proper = false;
            rec.decomposition_ok = false;
        }
    });
    return records;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial,seed,n,p,edges,m,proper,decomp_ok,rainbow_found\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const TrialRecord& r : records) {
        out << r.trial_index << ',' << r.seed << ',' << r.n << ',' << r.p.str() << ',' << r.edge_count << ',';
        if (r.skipped) {
            out << ",skipped,skipped,\n";
            continue;
        }
        out << (r.m_value ? r.m_value->str() : "") << ',' << flag(r.coloring_proper) << ','
            << flag(r.decomposition_ok) << ',';
        if (r.rainbow_found) out << flag(*r.rainbow_found);
        out << '\n';
    }
}

}  // namespace antiramsey
