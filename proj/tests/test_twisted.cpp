#include "doctest.h"
#include "oracles.hpp"

#include "canord/twisted.hpp"

using namespace canord;

namespace {

Matrix2 diag_root(int m, long x, long y) { return Matrix2::diag(root_of_unity(m, x), root_of_unity(m, y)); }
Matrix2 swap_matrix() { return Matrix2(0L, 1L, 1L, 0L); }

std::vector<std::vector<int>> as_table(const AbstractGroup& g) {
    std::vector<std::vector<int>> t(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) t[a][b] = g.mul(a, b);
    return t;
}

std::vector<std::vector<int>> cocycle_table(const CentralExtension& ext) {
    int n = ext.base.order;
    std::vector<std::vector<int>> c(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c[a][b] = ext.c(a, b);
    return c;
}

// Z/ne x Z/e as a matrix group diag(z_ne^a, z_e^b)
FiniteMatrixGroup product_group(int n, int e) {
    int m = static_cast<int>(lcm_l(n * e, e));
    return generate_group({diag_root(m, m / (n * e), 0), diag_root(m, 0, m / e)});
}

}  // namespace

TEST_CASE("trivial extension") {
    FiniteMatrixGroup d6 = generate_group({diag_root(3, 1, -1), swap_matrix()});
    CentralExtension ext = trivial_extension(d6.table);
    CHECK(ext.order() == 6);
    AlgebraElement one = AlgebraElement::basis(ext, 0);
    CHECK(block_count(ext, one) == 3);
    CHECK(idempotent_epsilon(1, CycloNumber(1), ext) == one);
}

TEST_CASE("Z/2 x Z/2 extension by mu_2 has anticommuting lifts") {
    FiniteMatrixGroup q = product_group(1, 2);
    auto gens = iso_to_cyclic_product(q.table, 2, 2);
    REQUIRE(gens.has_value());
    CentralExtension ext = build_extension(q.table, gens->first, gens->second, 1, 2);
    CHECK(ext.order() == 8);
    CHECK(ext.satisfies_cocycle_identity());
    CHECK(ext.is_normalized());
    int s = ext.elem(gens->first, 0), t = ext.elem(gens->second, 0);
    AbstractGroup gp = ext.group();
    int comm = gp.mul(gp.mul(s, t), gp.mul(gp.inv[s], gp.inv[t]));
    CHECK(comm == ext.rho());
    CHECK(conjugacy_classes(gp).size() == 5);
}

TEST_CASE("build_extension rejects bad shapes") {
    FiniteMatrixGroup q = product_group(1, 2);
    CHECK_THROWS_AS(build_extension(q.table, 1, 1, 1, 2), std::invalid_argument);
    FiniteMatrixGroup c4 = generate_group({diag_root(4, 1, 0)});
    CHECK_THROWS_AS(build_extension(c4.table, 1, 0, 2, 2), std::invalid_argument);
}

TEST_CASE("dihedral cover gives the dihedral group of order 8n+8") {
    for (int n = 1; n <= 4; ++n) {
        FiniteMatrixGroup cover = generate_group({diag_root(4 * n + 4, 1, -1), swap_matrix()});
        FiniteMatrixGroup g = generate_group({diag_root(2 * n + 2, 1, -1), swap_matrix()});
        auto proj = hom_from_generators(cover.table, g.table, g.generator_indices);
        REQUIRE(proj.has_value());
        int z = cover.index_of(Matrix2::diag(-1L, -1L));
        CentralExtension ext = extension_from_cover(cover.table, *proj, g.table, z);
        CHECK(ext.order() == 8 * n + 8);
        CHECK(ext.satisfies_cocycle_identity());
        AbstractGroup gp = ext.group();
        // sigma^{4n+4} = tau^2 = 1, tau sigma = sigma^{-1} tau
        bool found = false;
        for (int x = 0; x < gp.order && !found; ++x) {
            if (gp.element_order(x) != 4 * n + 4) continue;
            for (int y = 0; y < gp.order && !found; ++y)
                found = gp.element_order(y) == 2 && gp.mul(y, x) == gp.mul(gp.inv[x], y) &&
                        subgroup_closure(gp, {x, y}).size() == static_cast<size_t>(gp.order);
        }
        CHECK(found);
        // the faithful block of the twist is n + 1, the untwisted one n + 4
        AlgebraElement minus = idempotent_epsilon(2, CycloNumber(-1), ext);
        AlgebraElement plus = AlgebraElement::basis(ext, 0, CycloNumber(Rational(1, 2))) +
                              AlgebraElement::basis(ext, ext.rho(), CycloNumber(Rational(1, 2)));
        CHECK(block_count(ext, minus) == n + 1);
        CHECK(block_count(ext, plus) == n + 4);
        CHECK(oracle::alpha_regular_classes(as_table(g.table), cocycle_table(ext), 2) == n + 1);
    }
}

TEST_CASE("idempotent identities for e = 3") {
    for (int n = 1; n <= 3; ++n) {
        FiniteMatrixGroup q = product_group(n, 3);
        auto gens = iso_to_cyclic_product(q.table, 3 * n, 3);
        REQUIRE(gens.has_value());
        CentralExtension ext = build_extension(q.table, gens->first, gens->second, n, 3);
        CycloNumber omega = root_of_unity(3 * n, n);
        AlgebraElement eps = idempotent_epsilon(3, omega, ext);
        CHECK(eps * eps == eps);
        CHECK(is_central(eps));
        AlgebraElement rho = AlgebraElement::basis(ext, ext.rho());
        CHECK(rho * eps == eps.scaled(omega));
        CHECK_THROWS_AS(idempotent_epsilon(3, CycloNumber(1), ext), std::invalid_argument);
    }
}

TEST_CASE("block counts match the alpha-regular class oracle") {
    for (int e = 1; e <= 4; ++e)
        for (int n = 1; n <= 3; ++n) {
            FiniteMatrixGroup q = product_group(n, e);
            auto gens = iso_to_cyclic_product(q.table, n * e, e);
            REQUIRE(gens.has_value());
            CentralExtension ext = build_extension(q.table, gens->first, gens->second, n, e);
            CHECK(ext.satisfies_cocycle_identity());
            AlgebraElement eps = idempotent_epsilon(e, root_of_unity(e, 1), ext);
            int blocks = block_count(ext, eps);
            CHECK(blocks == oracle::alpha_regular_classes(as_table(q.table), cocycle_table(ext), e));
            // terminal case: eps k G' is a sum of n matrix blocks
            CHECK(blocks == n);

            // the e idempotents of k mu_e split the centre of k G'
            int total = 0;
            for (int j = 0; j < e; ++j) {
                CycloNumber w = root_of_unity(e, j);
                AlgebraElement ej;
                ej.ext = &ext;
                for (int k = 0; k < e; ++k) ej.coeffs.emplace(ext.elem(0, k), w.pow(-k) * CycloNumber(Rational(1, e)));
                total += block_count(ext, ej);
            }
            CHECK(total == static_cast<int>(conjugacy_classes(ext.group()).size()));
        }
}

TEST_CASE("pullback keeps the cocycle identity") {
    int e = 2;
    FiniteMatrixGroup g = generate_group({diag_root(2 * e, 1, 0), diag_root(2 * e, 0, 1)});
    int minus = g.index_of(Matrix2::diag(-1L, -1L));
    Quotient q = quotient(g.table, subgroup_closure(g.table, {minus}));
    auto gens = iso_to_cyclic_product(q.group, 2 * e, e);
    REQUIRE(gens.has_value());
    CentralExtension bar = build_extension(q.group, gens->first, gens->second, 2, e);
    CentralExtension ext = pullback(bar, g.table, q.projection);
    CHECK(ext.order() == e * g.order());
    CHECK(ext.satisfies_cocycle_identity());
    AlgebraElement eps = idempotent_epsilon(e, root_of_unity(e, 1), ext);
    CHECK(block_count(ext, eps) == 4);
    CHECK(oracle::alpha_regular_classes(as_table(g.table), cocycle_table(ext), e) == 4);

    std::vector<int> bad(g.order(), 0);
    CHECK_THROWS_AS(pullback(bar, g.table, bad), std::invalid_argument);
}

TEST_CASE("block_count rejects non-idempotents") {
    FiniteMatrixGroup d6 = generate_group({diag_root(3, 1, -1), swap_matrix()});
    CentralExtension ext = trivial_extension(d6.table);
    AlgebraElement two = AlgebraElement::basis(ext, 0, CycloNumber(2));
    CHECK_THROWS_AS(block_count(ext, two), std::invalid_argument);
    AlgebraElement half_swap = AlgebraElement::basis(ext, 0, CycloNumber(Rational(1, 2))) +
                               AlgebraElement::basis(ext, d6.index_of(swap_matrix()), CycloNumber(Rational(1, 2)));
    CHECK(half_swap * half_swap == half_swap);
    CHECK_THROWS_AS(block_count(ext, half_swap), std::invalid_argument);
}
