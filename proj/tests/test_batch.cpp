#include <doctest.h>

#include "elasym/batch.hpp"

using namespace elasym;

TEST_CASE("parallel batch kernels match the serial reference bit for bit") {
    std::vector<ElasticityTensor> es;
    const H4Class classes[] = {H4Class::cubic, H4Class::trigonal, H4Class::orthotropic,
                               H4Class::monoclinic, H4Class::triclinic};
    for (int i = 0; i < 20; ++i) es.push_back(generate_elasticity(classes[i % 5], 300 + i, true));

    CHECK(batch::classify_many(es) == batch::classify_many_serial(es));

    auto ip = batch::integrity_many(es);
    auto is = batch::integrity_many_serial(es);
    REQUIRE(ip.size() == is.size());
    for (size_t k = 0; k < ip.size(); ++k) {
        REQUIRE(ip[k].size() == 297);
        for (size_t j = 0; j < ip[k].size(); ++j) {
            CHECK(ip[k][j].label == is[k][j].label);
            CHECK(ip[k][j].value == is[k][j].value);
        }
    }

    CHECK(batch::basis_equivariance_residual(10, 55) ==
          batch::basis_equivariance_residual_serial(10, 55));
}
