// Benchmark of the OpenMP batch kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "elasym/batch.hpp"
#include "elasym/elasticity.hpp"

using namespace elasym;

namespace {

template <typename F>
double time_of(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 256;
#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    std::printf("batch size: %d\n\n", n);

    const H4Class classes[] = {
        H4Class::isotropic, H4Class::cubic, H4Class::transversely_isotropic,
        H4Class::trigonal, H4Class::tetragonal, H4Class::orthotropic,
        H4Class::monoclinic, H4Class::triclinic,
    };
    std::vector<ElasticityTensor> es;
    es.reserve(n);
    for (int i = 0; i < n; ++i)
        es.push_back(generate_elasticity(classes[i % 8], 1000 + i, true));

    std::vector<H4Class> cs, cp;
    double t_cs = time_of([&] { cs = batch::classify_many_serial(es); });
    double t_cp = time_of([&] { cp = batch::classify_many(es); });
    bool c_eq = cs == cp;

    std::vector<std::vector<InvariantEntry>> is, ip;
    double t_is = time_of([&] { is = batch::integrity_many_serial(es); });
    double t_ip = time_of([&] { ip = batch::integrity_many(es); });
    bool i_eq = true;
    for (size_t k = 0; k < is.size() && i_eq; ++k)
        for (size_t j = 0; j < is[k].size() && i_eq; ++j)
            i_eq = is[k][j].value == ip[k][j].value;

    double rs = 0, rp = 0;
    double t_es = time_of([&] { rs = batch::basis_equivariance_residual_serial(50, 7); });
    double t_ep = time_of([&] { rp = batch::basis_equivariance_residual(50, 7); });

    std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial [s]", "openmp [s]", "speedup", "agree");
    std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "classify_many", t_cs, t_cp, t_cs / t_cp,
                c_eq ? "yes" : "NO");
    std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "integrity_many", t_is, t_ip, t_is / t_ip,
                i_eq ? "yes" : "NO");
    std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "basis_equivariance", t_es, t_ep, t_es / t_ep,
                rs == rp ? "yes" : "NO");
    return (c_eq && i_eq && rs == rp) ? 0 : 1;
}
