#include <benchmark/benchmark.h>

#include "qfa/compile.hpp"
#include "qfa/lang.hpp"
#include "qfa/registry.hpp"

namespace {

qfa::TwoTapeQfa quantum(const std::string& name) {
    return std::get<qfa::TwoTapeQfa>(qfa::build_example(name).machine);
}

void BM_anbncn_run(benchmark::State& state) {
    const auto m = quantum("anbncn-2t1qfa");
    const auto n = static_cast<std::size_t>(state.range(0));
    qfa::Word w;
    for (const char* s : {"a", "b", "c"}) w.insert(w.end(), n, s);
    for (auto _ : state) benchmark::DoNotOptimize(qfa::run_twotape(m, w, w).p_acc);
}
BENCHMARK(BM_anbncn_run)->Arg(4)->Arg(16)->Arg(64);

void BM_ww_exists(benchmark::State& state) {
    const auto m = quantum("ww");
    const auto n = static_cast<std::size_t>(state.range(0));
    qfa::Word w;
    for (std::size_t i = 0; i < 2 * n; ++i) w.push_back(i % 3 == 0 ? "a" : "b");
    for (auto _ : state) benchmark::DoNotOptimize(qfa::accept_probability(m, w).probability);
}
BENCHMARK(BM_ww_exists)->Arg(2)->Arg(4)->Arg(6);

void BM_compiled_dfa_equivalence(benchmark::State& state) {
    const auto d = std::get<qfa::Dfa>(qfa::build_example("a-mod-3").machine);
    const auto m = qfa::compile_dfa(d);
    const auto oracle = qfa::OracleId::parse("dfa:a-mod-3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfa::bounded_equivalence(m, oracle, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_compiled_dfa_equivalence)->Arg(4)->Arg(6);

void BM_gram_check(benchmark::State& state) {
    const auto m = quantum("ww");
    for (auto _ : state) benchmark::DoNotOptimize(qfa::check_gram_wellformed(m.table).passed);
}
BENCHMARK(BM_gram_check);

}  // namespace

BENCHMARK_MAIN();
