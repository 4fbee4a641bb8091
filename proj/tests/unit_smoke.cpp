#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <wheelhouse/preset.hpp>
#include <wheelhouse/delta.hpp>
#include <wheelhouse/enumerate.hpp>

using namespace wheelhouse;

TEST_CASE("binary corolla canonical") {
    Preset p = make_preset("lie_inf");
    int g = p.gen_lieb(1, 2);
    auto c = corolla(p.table(), g);
    auto r = canonicalize(c);
    CHECK(!r.zero);
    CHECK(r.sign == 1);
}

TEST_CASE("lie (1,3) basis count") {
    Preset p = make_preset("lie_inf");
    auto basis = enumerate_basis(p, 1, 3, 2, WheelMode::None);
    CHECK(basis.size() == 4);
}

TEST_CASE("delta of binary corolla vanishes") {
    Preset p = make_preset("lie_inf");
    auto c = corolla(p.table(), p.gen_lieb(1, 2));
    auto d = apply_delta(p, singleton(c));
    CHECK(d.is_zero());
}

TEST_CASE("delta of ternary corolla has 3 terms with +1") {
    Preset p = make_preset("lie_inf");
    auto c = corolla(p.table(), p.gen_lieb(1, 3));
    auto d = apply_delta(p, singleton(c));
    CHECK(d.size() == 3);
    for (const auto& [k, t] : d.terms()) CHECK(t.coeff == Rat(1));
}

TEST_CASE("d squared lie") {
    Preset p = make_preset("lie_inf");
    for (int n = 2; n <= 5; ++n) {
        auto rep = check_d_squared(p, 1, n, 3);
        CHECK(rep.pass);
    }
}

TEST_CASE("d squared lieb tree") {
    Preset p = make_preset("lieb_inf");
    int cases[][2] = {{1,3},{3,1},{2,2},{2,3},{3,2},{1,4},{4,1}};
    for (auto [m,n] : cases) {
        EnumOptions eo; // default arity cap
        auto rep = check_d_squared(p, m, n, 3, m + n + 2);
        CHECK_MESSAGE(rep.pass, "at (", m, ",", n, ") basis=", rep.basis_size);
    }
}

TEST_CASE("d squared lieb wheeled") {
    Preset p = make_preset("lieb_inf_wheeled");
    int cases[][2] = {{1,1},{0,1},{1,2},{2,1},{0,2},{2,2}};
    for (auto [m,n] : cases) {
        auto rep = check_d_squared(p, m, n, 3, m + n + 3);
        CHECK_MESSAGE(rep.pass, "at (", m, ",", n, ") basis=", rep.basis_size);
    }
}
