#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "unital/parse.hpp"
#include "unital/values.hpp"

using namespace unital;

namespace {

std::set<std::string> keys(const std::vector<P1Value>& vals) {
    std::set<std::string> out;
    for (const auto& v : vals) out.insert(v.key());
    return out;
}

std::set<std::string> parse_all(std::initializer_list<const char*> exprs, int n) {
    std::set<std::string> out;
    for (const char* e : exprs) out.insert(parse_p1(e, n).key());
    return out;
}

}  // namespace

TEST_CASE("value sets for small orders") {
    CHECK(keys(value_set(1)) == parse_all({"0", "1", "inf"}, 1));
    CHECK(keys(value_set(2)) == parse_all({"0", "1", "-1", "1/2", "2", "inf"}, 2));
    CHECK(keys(value_set(3)) ==
          parse_all({"0", "1", "u", "-u", "u^2", "-u^2", "1-u", "1-u^2", "1/(1-u)", "1/(1-u^2)", "inf"}, 3));
}

TEST_CASE("value orbits") {
    CHECK(keys(value_orbit(parse_p1("2", 1))) == parse_all({"2", "-1", "1/2"}, 1));
    CHECK(keys(value_orbit(parse_p1("1", 1))) == parse_all({"1", "0", "inf"}, 1));
    CHECK(keys(value_orbit(parse_p1("0", 1))) == parse_all({"1", "0", "inf"}, 1));
    CHECK(keys(value_orbit(P1Value::infinity(1))) == parse_all({"1", "0", "inf"}, 1));
    // -u is a primitive 6th root of unity: z^2 = z - 1 collapses the orbit to 2
    CHECK(keys(value_orbit(parse_p1("-u", 3))) == parse_all({"-u", "-u^2"}, 3));
    // generic rational values give all six images
    CHECK(keys(value_orbit(parse_p1("3", 1))) == parse_all({"3", "-2", "1/3", "3/2", "2/3", "-1/2"}, 1));
}

TEST_CASE("conjectured value sets") {
    CHECK(keys(conjectured_value_set(1)) == parse_all({"0", "1", "inf"}, 1));
    CHECK(keys(conjectured_value_set(2)) == parse_all({"0", "1", "-1", "1/2", "2", "inf"}, 2));
    CHECK(conjectured_value_set(3).size() == 11);
    CHECK(keys(conjectured_value_set(3)) == keys(value_set(3)));
    CHECK(conjectured_value_set(4).size() == 12);
    CHECK(keys(conjectured_value_set(4)) ==
          parse_all({"0", "1", "-1", "1/2", "2", "i", "-i", "1+i", "1-i", "(1+i)/2", "(1-i)/2", "inf"}, 4));
}

TEST_CASE("conjecture reports for N = 1, 2, 3") {
    const auto r1 = conjecture_report(1);
    CHECK(r1.match);
    CHECK(r1.cardinality == 3);
    CHECK(r1.bound == 3);
    CHECK(r1.bound_holds);
    CHECK_FALSE(r1.note.empty());

    const auto r2 = conjecture_report(2);
    CHECK(r2.match);
    CHECK(r2.cardinality == 6);
    CHECK(r2.bound == 6);
    CHECK(r2.bound_holds);

    const auto r3 = conjecture_report(3);
    CHECK(r3.match);
    CHECK(r3.cardinality == 11);
    CHECK(r3.bound == 15);
    CHECK(r3.bound_holds);
}
