#include "kcharge/serialize.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kcharge;

TEST_CASE("text form lists the top row first with residues") {
    const auto t = fixtures::standard_k4();
    CHECK(to_text(t) == "k=4\n8_2\n5_3 7_4\n4_4 6_0\n1_0 2_1 3_2 5_3 7_4 9_0\n");
    CHECK(to_text(t, false) == "k=4\n8\n5 7\n4 6\n1 2 3 5 7 9\n");
}

TEST_CASE("text parsing") {
    const auto t = fixtures::standard_k4();
    CHECK(parse_k_tableau("k=4\n8\n5 7\n4 6\n1 2 3 5 7 9\n") == t);
    CHECK(parse_k_tableau(to_text(t)) == t);
    // No trailing newline, CRLF line ends.
    CHECK(parse_k_tableau("k=4\r\n8\r\n5 7\r\n4 6\r\n1 2 3 5 7 9") == t);

    const auto loose = parse_tableau_text("3\n1 2\n");
    CHECK_FALSE(loose.k.has_value());
    CHECK(loose.filling == Tableau({{1, 2}, {3}}));

    CHECK_THROWS_AS(parse_k_tableau("8\n5 7\n"), ParseError);            // no k
    CHECK_THROWS_AS(parse_k_tableau("k=4\n1 x\n"), ParseError);          // bad letter
    CHECK_THROWS_AS(parse_k_tableau("k=4\n1_3\n"), ParseError);          // wrong residue
    CHECK_THROWS_AS(parse_k_tableau("k=4\n1 2 3\n1 2\n"), ParseError);   // not a diagram
    CHECK_THROWS_AS(parse_k_tableau("k=0\n1\n"), ParseError);
}

TEST_CASE("json form") {
    const auto t = fixtures::weight_222_k3();
    CHECK(to_json(t) == R"({"k":3,"rows":[[1,1,2,2,3],[2,3],[3]],"shape":[5,2,1]})");
    CHECK(parse_k_tableau(to_json(t)) == t);
    CHECK(parse_k_tableau(R"({"k":3,"rows":[[1,1,2,2,3],[2,3],[3]]})") == t);
    CHECK_THROWS_AS(parse_k_tableau(R"({"k":3,"rows":[[1,1,2,2,3],[2,3],[3]],"shape":[5,2]})"), ParseError);
    CHECK_THROWS_AS(parse_k_tableau(R"({"k":3,"rows":"x"})"), ParseError);
    CHECK_THROWS_AS(parse_k_tableau(R"({"k":3,)"), ParseError);
}

TEST_CASE("round trips over enumerated tableaux") {
    for (int k = 1; k <= 4; ++k)
        for (const std::vector<int>& w : {std::vector<int>{1, 1, 1, 1}, std::vector<int>{2, 1, 1}, std::vector<int>{1, 2}}) {
            if (*std::max_element(w.begin(), w.end()) > k) continue;
            for (const auto& t : enumerate_k_tableaux(k, w)) {
                CHECK(parse_k_tableau(to_text(t)) == t);
                CHECK(parse_k_tableau(to_text(t, false)) == t);
                CHECK(parse_k_tableau(to_json(t)) == t);
                CHECK(to_text(parse_k_tableau(to_text(t))) == to_text(t));
                CHECK(to_json(parse_k_tableau(to_json(t))) == to_json(t));
            }
        }
}

TEST_CASE("polynomial json") {
    TPolynomial p;
    p.add_term(1, 1);
    p.add_term(2, 1);
    CHECK(to_json(p) == R"({"1":1,"2":1})");
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(to_json(TPolynomial()) == "{}");

    TPolynomial big;
    big.add_term(3, BigInt("123456789012345678901234567890"));
    big.add_term(0, -2);
    CHECK(polynomial_from_json(to_json(big)) == big);
    CHECK_THROWS_AS(polynomial_from_json(R"({"x":1})"), ParseError);
    CHECK_THROWS_AS(polynomial_from_json(R"({"-1":1})"), ParseError);
}

TEST_CASE("polynomial text") {
    TPolynomial p;
    CHECK(p.to_string() == "0");
    p.add_term(0, 2);
    p.add_term(1, 3);
    p.add_term(4, 1);
    CHECK(p.to_string() == "2 + 3*t + t^4");
    p.add_term(1, -5);
    CHECK(p.to_string() == "2 - 2*t + t^4");
    p.add_term(0, -2);
    CHECK(p.coefficient(0) == 0);
    CHECK(p.terms().size() == 2);
    CHECK(p.degree() == 4);
    CHECK_THROWS_AS(p.add_term(-1, 1), DomainError);
}

TEST_CASE("integer lists") {
    CHECK(parse_int_list("3,2,1") == std::vector<int>{3, 2, 1});
    CHECK(parse_int_list("(1,2)") == std::vector<int>{1, 2});
    CHECK(parse_int_list(" 4 ") == std::vector<int>{4});
    CHECK_THROWS_AS(parse_int_list("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_int_list("a"), ParseError);
}
