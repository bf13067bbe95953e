#include <benchmark/benchmark.h>

#include <random>

#include "tmlwb/fixtures.hpp"
#include "tmlwb/graph_checks.hpp"
#include "tmlwb/ingest.hpp"
#include "tmlwb/point_algebra.hpp"
#include "tmlwb/query.hpp"

using namespace tmlwb;

namespace {

// Random BEFORE links from lower to higher interval numbers: acyclic, so the
// closure runs to completion instead of stopping at a conflict.
std::vector<Link> random_document(std::mt19937& rng, int intervals, int links) {
    std::uniform_int_distribution<int> pick(0, intervals - 1);
    std::vector<Link> out;
    for (int i = 0; i < links; ++i) {
        int a = pick(rng), b = pick(rng);
        if (a == b) {
            continue;
        }
        if (a > b) {
            std::swap(a, b);
        }
        Link l;
        l.lid = "l" + std::to_string(i);
        l.rel_type = "BEFORE";
        l.arg1 = {IntervalKind::EventInstance, "ei" + std::to_string(a)};
        l.arg2 = {IntervalKind::EventInstance, "ei" + std::to_string(b)};
        out.push_back(std::move(l));
    }
    return out;
}

void BM_Consistency(benchmark::State& state) {
    std::mt19937 rng(17);
    const auto links = random_document(rng, static_cast<int>(state.range(0)), static_cast<int>(state.range(0) * 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_consistency(links));
    }
}
BENCHMARK(BM_Consistency)->Arg(10)->Arg(35)->Arg(70);

Corpus fixture_corpus() {
    Corpus c;
    c.name = "fx";
    int id = 1;
    for (const auto& [name, xml] : fixture_files()) {
        Document d = parse_timeml(xml, name);
        d.doc_id = id++;
        c.documents.push_back(std::move(d));
    }
    return c;
}

void BM_Parse(benchmark::State& state) {
    const auto files = fixture_files();
    for (auto _ : state) {
        for (const auto& [name, xml] : files) {
            benchmark::DoNotOptimize(parse_timeml(xml, name));
        }
    }
}
BENCHMARK(BM_Parse);

void BM_Distribution(benchmark::State& state) {
    const Corpus c = fixture_corpus();
    Query q;
    q.report = ReportKind::Distribution;
    q.tag = TagFamily::Event;
    q.field = "class";
    q.filter = Filter{"pos", Predicate::Is, "verb"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(format_report(run_query(c, q), OutputFormat::Screen));
    }
}
BENCHMARK(BM_Distribution);

void BM_SplitGraph(benchmark::State& state) {
    std::mt19937 rng(3);
    Document d;
    d.links = random_document(rng, 200, 300);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subgraph_stats(d));
    }
}
BENCHMARK(BM_SplitGraph);

} // namespace
