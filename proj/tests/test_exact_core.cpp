#include "nilcone/errors.hpp"
#include "nilcone/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace nilcone;

namespace {

QVector qv(std::vector<Rational> v) { return v; }

IVec iv(std::vector<int> v) {
    IVec out;
    for (int x : v) out.emplace_back(x);
    return out;
}

QMatrix from_int(std::vector<std::vector<int>> rows) {
    std::vector<QVector> q;
    for (auto& r : rows) {
        QVector row;
        for (int x : r) row.emplace_back(x);
        q.push_back(std::move(row));
    }
    return QMatrix::from_rows(q);
}

}  // namespace

TEST_CASE("kernel of a single equation") {
    auto basis = kernel_basis(from_int({{1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == iv({1, 1}));
}

TEST_CASE("injective map has empty kernel") {
    CHECK(kernel_basis(QMatrix::identity(2)).empty());
}

TEST_CASE("kernel of the chained-difference system") {
    auto basis = kernel_basis(from_int({{1, 1, -1, 0, 0}, {1, 0, 1, -1, 0}, {1, 0, 0, 1, -1}}));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == iv({1, 0, 1, 2, 3}));
    CHECK(basis[1] == iv({0, 1, 1, 1, 1}));
}

TEST_CASE("zero matrix returns the standard basis") {
    auto basis = kernel_basis(QMatrix(0, 3));
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == iv({1, 0, 0}));
    CHECK(basis[2] == iv({0, 0, 1}));
}

TEST_CASE("solve_linear on the identity") {
    auto x = solve_linear(QMatrix::identity(2), qv({Rational(3), Rational(-1, 2)}));
    REQUIRE(x);
    CHECK(*x == qv({Rational(3), Rational(-1, 2)}));
}

TEST_CASE("solve_linear zeroes free variables") {
    auto x = solve_linear(from_int({{1, 1}}), qv({Rational(0)}));
    REQUIRE(x);
    CHECK(*x == qv({Rational(0), Rational(0)}));
}

TEST_CASE("solve_linear detects inconsistency") {
    CHECK(!solve_linear(from_int({{1}, {1}}), qv({Rational(0), Rational(1)})));
}

TEST_CASE("solve_unique rejects underdetermined systems") {
    CHECK(!solve_unique(from_int({{1, 1}}), qv({Rational(0)})));
    auto x = solve_unique(from_int({{2, 0}, {0, 4}}), qv({Rational(1), Rational(1)}));
    REQUIRE(x);
    CHECK(*x == qv({Rational(1, 2), Rational(1, 4)}));
}

TEST_CASE("solve_linear dimension mismatch is a usage error") {
    CHECK_THROWS_AS(solve_linear(QMatrix::identity(2), qv({Rational(1)})), UsageError);
}

TEST_CASE("primitive_form clears denominators") {
    CHECK(primitive_form(qv({Rational(3, 2), Rational(1, 2)})) == iv({3, 1}));
}

TEST_CASE("primitive_form keeps orientation") {
    CHECK(primitive_form(iv({-2, -4})) == iv({-1, -2}));
}

TEST_CASE("primitive_form reduces the printed form") {
    CHECK(primitive_form(iv({6, 4})) == iv({3, 2}));
}

TEST_CASE("primitive_form of zero is a domain error") {
    CHECK_THROWS_AS(primitive_form(qv({Rational(0), Rational(0)})), DomainError);
}

TEST_CASE("kernel vectors solve Mx = 0 and are independent") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(coef(rng), 1 + (trial % 3));
        auto basis = kernel_basis(m);
        CHECK(basis.size() == c - rank(m));
        for (const IVec& v : basis) {
            QVector img = m.apply(to_rational(v));
            CHECK(is_zero(img));
        }
        if (!basis.empty()) {
            QMatrix b = QMatrix::from_int_rows(basis);
            CHECK(rank(b) == basis.size());
        }
    }
}

TEST_CASE("primitive_form is idempotent and scale invariant") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> pos(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        QVector v(3);
        bool zero = true;
        for (Rational& x : v) {
            x = Rational(coef(rng), pos(rng));
            if (x != 0) zero = false;
        }
        if (zero) continue;
        IVec p = primitive_form(v);
        CHECK(primitive_form(p) == p);
        Rational c(pos(rng), pos(rng));
        QVector scaled = v;
        for (Rational& x : scaled) x *= c;
        CHECK(primitive_form(scaled) == p);
    }
}

TEST_CASE("solve_linear solutions satisfy the system exactly") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = coef(rng);
        QVector b(r);
        for (Rational& x : b) x = Rational(coef(rng), 2);
        auto x = solve_linear(m, b);
        if (x) CHECK(m.apply(*x) == b);
    }
}
