#include "seqcert/catalog.hpp"
#include "seqcert/certify.hpp"
#include "seqcert/gamma_mono.hpp"
#include "seqcert/log_behavior.hpp"
#include "seqcert/positivity.hpp"
#include "seqcert/sequence.hpp"

#include <benchmark/benchmark.h>

using namespace seqcert;

static void BM_GenerateDomb(benchmark::State& state) {
    SequenceDef domb = catalog_lookup("domb");
    for (auto _ : state) {
        auto terms = generate_terms(domb, state.range(0));
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_GenerateDomb)->Arg(100)->Arg(300)->Arg(500);

static void BM_ProductFormDerangement(benchmark::State& state) {
    auto terms = generate_terms(catalog_lookup("derangement"), state.range(0) + 3);
    std::vector<BigRat> window(terms.begin() + 2, terms.end());
    for (auto _ : state) {
        auto oc = check_ratio_log_convex(window, 2, 8, true);
        benchmark::DoNotOptimize(oc);
    }
}
BENCHMARK(BM_ProductFormDerangement)->Arg(120)->Arg(300);

static void BM_ProvePositiveShiftPath(benchmark::State& state) {
    SequenceDef motz = catalog_lookup("motzkin");
    CertPolySet ps = build_cert_polys(motz.recurrence().a, motz.recurrence().b);
    RatFunc lam(IntPoly{-8, 27, 54}, IntPoly{0, 36, 18});
    RatFunc flam = substitute_bound(ps, CertPolyWhich::f, lam);
    for (auto _ : state) {
        auto v = flam.prove_sign_on_integers(BigInt(8), true, true);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ProvePositiveShiftPath);

static void BM_ProvePositiveSturmPath(benchmark::State& state) {
    // positive at every integer, real roots inside integer gaps: the shift
    // fast path cannot apply, so the full isolation machinery runs
    IntPoly p = IntPoly{-1, 4} * IntPoly{-3, 4} * IntPoly{-41, 4} * IntPoly{-43, 4} *
                IntPoly{1, 0, 1};
    for (auto _ : state) {
        auto v = prove_positive_on_integers(p, BigInt(0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ProvePositiveSturmPath);

static void BM_CertifyMotzkin(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = verify_certificate(builtin_certificate("motzkin"));
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CertifyMotzkin);

static void BM_HKernelEval(benchmark::State& state) {
    HKernelParams params;
    params.t_text = "0.01";
    params.u = BigRat(-1, 2);
    params.p = BigRat(3);
    params.q = BigRat(3, 2);
    params.digits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto v = h_kernel_eval(params);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HKernelEval)->Arg(50)->Arg(100);

BENCHMARK_MAIN();
