#include <doctest.h>

#include <stdexcept>

#include "cwcount/combinatorics.hpp"
#include "cwcount/tables.hpp"
#include "cwcount/vectors.hpp"

using namespace cwcount;

// ---- label vectors ----------------------------------------------------------

TEST_CASE("label vector basics") {
    LabelVector v(3);
    CHECK(v.sum() == 0);
    v.set(1, 2);
    v.add(3, 5);
    CHECK(v.get(1) == 2);
    CHECK(v.get(2) == 0);
    CHECK(v.get(3) == 5);
    CHECK(v.sum() == 7);
    CHECK(v.to_string() == "(2,0,5)");
    CHECK_THROWS_AS(LabelVector::delta(0, 3), std::out_of_range);
    CHECK_THROWS_AS(LabelVector::delta(4, 3), std::out_of_range);

    LabelVector d = LabelVector::delta(2, 3);
    CHECK(d.get(2) == 1);
    CHECK(d.sum() == 1);
    CHECK((v + d).get(2) == 1);
}

TEST_CASE("label vector fold moves one slot onto another") {
    LabelVector v(3);
    v.set(1, 4);
    v.set(2, 3);
    LabelVector f = v.fold(2, 1);
    CHECK(f.get(1) == 7);
    CHECK(f.get(2) == 0);
    CHECK(f.sum() == 7);
}

// ---- pair vectors -----------------------------------------------------------

TEST_CASE("pair vector stores unordered pairs plus the zero row") {
    PairVector k(3);
    CHECK(k.size() == static_cast<size_t>(3 * 6 / 2));
    k.set(1, 2, 4);
    CHECK(k.get(2, 1) == 4);
    k.add(0, 3, 2);
    CHECK(k.get(0, 3) == 2);
    k.set(2, 2, 1);
    CHECK(k.path_total() == 4 + 1);
    CHECK(k.uncovered_total() == 2);
    CHECK_THROWS_AS(k.get(0, 0), std::out_of_range);
    CHECK_THROWS_AS(k.get(1, 4), std::out_of_range);
    CHECK_FALSE(k.has_negative());
    k.add(1, 1, -1);
    CHECK(k.has_negative());
}

TEST_CASE("pair vector fold merges both endpoints of every class") {
    PairVector k(3);
    k.set(0, 2, 1);
    k.set(1, 2, 2);
    k.set(2, 2, 3);
    k.set(2, 3, 4);
    PairVector f = k.fold(2, 1);
    CHECK(f.get(0, 1) == 1);
    CHECK(f.get(1, 1) == 2 + 3);
    CHECK(f.get(1, 3) == 4);
    CHECK(f.get(1, 2) == 0);
    CHECK(f.get(2, 2) == 0);
    CHECK(f.get(2, 3) == 0);
}

TEST_CASE("pair vector delta and ordering") {
    PairVector d = PairVector::delta(0, 2, 2);
    CHECK(d.get(0, 2) == 1);
    CHECK(d.path_total() == 0);
    PairVector e(2);
    CHECK(e < d);
    CHECK(d == d);
}

// ---- tables -----------------------------------------------------------------

namespace {

MatchedTable table_of(std::initializer_list<std::pair<LabelVector, int>> items) {
    MatchedTable t;
    for (const auto& [k, v] : items) t[k] = v;
    return t;
}

LabelVector lv(std::initializer_list<int> xs) {
    LabelVector v(static_cast<int>(xs.size()));
    int r = 1;
    for (int x : xs) v.set(r++, x);
    return v;
}

}  // namespace

TEST_CASE("lookup and mass") {
    MatchedTable t = table_of({{lv({2, 0}), 3}, {lv({0, 1}), 4}});
    CHECK(lookup(t, lv({2, 0})) == 3);
    CHECK(lookup(t, lv({1, 1})) == 0);
    CHECK(table_mass(t) == 7);
}

TEST_CASE("convolution multiplies masses and adds keys") {
    MatchedTable a = table_of({{lv({0, 0}), 1}, {lv({1, 0}), 2}});
    MatchedTable b = table_of({{lv({0, 1}), 3}, {lv({1, 0}), 5}});
    MatchedTable ab = table_convolve(a, b);
    CHECK(table_mass(ab) == table_mass(a) * table_mass(b));
    CHECK(lookup(ab, lv({0, 1})) == 3);
    CHECK(lookup(ab, lv({1, 1})) == 6);
    CHECK(lookup(ab, lv({1, 0})) == 5);
    CHECK(lookup(ab, lv({2, 0})) == 10);

    MatchedTable ba = table_convolve(b, a);
    CHECK_FALSE(first_difference(ab, ba).has_value());
}

TEST_CASE("convolution is associative") {
    MatchedTable a = table_of({{lv({0, 0}), 1}, {lv({1, 0}), 2}});
    MatchedTable b = table_of({{lv({0, 1}), 3}, {lv({1, 1}), 5}});
    MatchedTable c = table_of({{lv({2, 0}), 7}, {lv({0, 2}), 11}});
    MatchedTable left = table_convolve(table_convolve(a, b), c);
    MatchedTable right = table_convolve(a, table_convolve(b, c));
    CHECK_FALSE(first_difference(left, right).has_value());
}

TEST_CASE("lookup of an absent key allocates nothing") {
    MatchedTable t = table_of({{lv({1, 0}), 1}});
    size_t before = t.size();
    CHECK(lookup(t, lv({9, 9})) == 0);
    CHECK(t.size() == before);
}

TEST_CASE("convolution rejects mismatched widths") {
    MatchedTable a = table_of({{lv({1}), 1}});
    MatchedTable b = table_of({{lv({1, 0}), 1}});
    CHECK_THROWS_AS(table_convolve(a, b), std::invalid_argument);
}

TEST_CASE("first difference pinpoints the earliest differing key") {
    MatchedTable a = table_of({{lv({0, 1}), 1}, {lv({2, 0}), 2}});
    MatchedTable b = table_of({{lv({0, 1}), 1}, {lv({2, 0}), 3}});
    auto d = first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(*d == lv({2, 0}));
    CHECK_FALSE(first_difference(a, a).has_value());

    MatchedTable c = table_of({{lv({0, 1}), 1}});
    auto missing = first_difference(a, c);
    REQUIRE(missing.has_value());
    CHECK(*missing == lv({2, 0}));
}

TEST_CASE("mc keys compare componentwise") {
    MCKey a{lv({1, 0}), lv({0, 1})};
    MCKey b{lv({1, 0}), lv({0, 2})};
    CHECK(a < b);
    CHECK(a == a);
    CHECK(a.to_string() == "M=(1,0) C=(0,1)");
}

// ---- combinatorics ----------------------------------------------------------

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK(to_decimal(binomial(60, 30)) == "118264581564861424");
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(to_decimal(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("odd double factorial") {
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(double_factorial_odd(6) == 10395);
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(26) == 121393);
}

TEST_CASE("decimal round trip") {
    BigCount big = factorial(30) + 7;
    CHECK(big_from_decimal(to_decimal(big)) == big);
}
