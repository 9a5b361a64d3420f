#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vieta/polynomial.hpp"
#include "vieta/species.hpp"

using namespace vieta;

namespace {

struct CorpusLine {
    std::string species;
    std::string modern;
};

std::vector<CorpusLine> load_corpus() {
    std::ifstream in(VIETA_GOLDEN_CORPUS);
    REQUIRE(in.good());
    std::vector<CorpusLine> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        lines.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    REQUIRE(lines.size() >= 10);
    return lines;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::parse;
}

// Direct term-by-term substitution, bypassing bind_values.
Rational substitute_terms(const SpeciesEquation& eq, const std::map<char, Rational>& bindings,
                          const Rational& x) {
    Rational total(0);
    auto do_side = [&](const std::vector<SpeciesTerm>& side, int side_sign) {
        for (const auto& t : side) {
            Rational v(t.sign * side_sign);
            for (const auto& f : t.factors) {
                Rational base = f.kind == SymbolKind::unknown ? x : bindings.at(f.letter);
                if (f.measure) {
                    v *= base;
                } else {
                    for (int k = 0; k < f.grade; ++k) v *= base;
                }
            }
            total += v;
        }
    };
    do_side(eq.lhs, 1);
    do_side(eq.rhs, -1);
    return total;
}

}  // namespace

TEST_CASE("tokenize examples") {
    auto t1 = tokenize("A cubus");
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].kind == TokenKind::letter);
    CHECK(t1[0].letter == 'A');
    CHECK(t1[1].kind == TokenKind::grade);
    CHECK(t1[1].grade == 3);
    CHECK_FALSE(t1[1].measure);

    auto t2 = tokenize("B plano");
    REQUIRE(t2.size() == 2);
    CHECK(t2[1].grade == 2);
    CHECK(t2[1].measure);

    CHECK(tokenize("a CUBUS") == t1);
    CHECK(tokenize("B quad.")[1].grade == 2);
    CHECK(tokenize("B quad.-quad.")[1].grade == 4);
    CHECK(tokenize("B quadrato-cubus")[1].grade == 5);
    CHECK(tokenize("B cubo-cubus")[1].grade == 6);
    CHECK(tokenize("B latus")[1].grade == 1);
}

TEST_CASE("tokenize rejects unknown words with a byte offset") {
    try {
        tokenize("A frobnicatum");
        FAIL("expected lexical error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::lexical);
        CHECK(std::string(e.what()).find("frobnicatum") != std::string::npos);
        CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    }
    CHECK_THROWS_AS(tokenize("A 3"), Error);
    CHECK_THROWS_AS(tokenize(""), Error);
}

TEST_CASE("tokenize normalizes ae ligature and skips commas") {
    auto a = tokenize("A cubus + B quad. in A, æquetur B quad. in Z");
    auto b = tokenize("A cubus + B quad in A aequetur B quad in Z");
    CHECK(a == b);
    CHECK(a[7].kind == TokenKind::equals);
}

TEST_CASE("minus forms: unicode sign, hyphen, word") {
    auto a = tokenize("A − B aequatur C");
    auto b = tokenize("A - B aequatur C");
    auto c = tokenize("A minus B aequatur C");
    CHECK(a == b);
    CHECK(b == c);
    CHECK(a[1].kind == TokenKind::minus);
}

TEST_CASE("detokenize then tokenize is the identity on token streams") {
    for (const auto& text : {"A cubus + B quadratum in A aequatur B quadratum in Z",
                             "A quadratum − B in A aequatur C plano",
                             "B latus in A aequatur C solidum"}) {
        auto tokens = tokenize(text);
        CHECK(tokenize(detokenize(tokens)) == tokens);
    }
}

TEST_CASE("parse the flagship cubic") {
    auto eq = parse_species("A cubus + B quad in A aequatur B quad in Z");
    REQUIRE(eq.lhs.size() == 2);
    REQUIRE(eq.rhs.size() == 1);
    CHECK(eq.lhs[0].factors ==
          std::vector<SpeciesSymbol>{{'A', SymbolKind::unknown, 3, false}});
    CHECK(eq.lhs[1].factors ==
          std::vector<SpeciesSymbol>{{'B', SymbolKind::known, 2, false},
                                     {'A', SymbolKind::unknown, 1, false}});
    CHECK(eq.rhs[0].factors ==
          std::vector<SpeciesSymbol>{{'B', SymbolKind::known, 2, false},
                                     {'Z', SymbolKind::known, 1, false}});
    CHECK(eq.lhs[0].sign == 1);

    // the ligature spelling parses to the same structure
    auto lig = parse_species("A cubus + B quad in A æquetur B quad in Z");
    CHECK(lig.same_structure(eq));
}

TEST_CASE("parse the canonical quadratic") {
    auto eq = parse_species("A quadratum + A in B aequatur C plano");
    REQUIRE(eq.lhs.size() == 2);
    CHECK(eq.lhs[0].factors[0].grade == 2);
    CHECK(eq.lhs[1].factors[0].letter == 'A');
    CHECK(eq.lhs[1].factors[1].letter == 'B');
    REQUIRE(eq.rhs.size() == 1);
    CHECK(eq.rhs[0].factors[0].measure);
    CHECK(eq.rhs[0].factors[0].grade == 2);
}

TEST_CASE("parse identity equation") {
    auto eq = parse_species("A aequatur B");
    CHECK(eq.lhs.size() == 1);
    CHECK(eq.lhs[0].dimension() == 1);
    CHECK(eq.rhs[0].factors[0].kind == SymbolKind::known);
}

TEST_CASE("parse errors") {
    CHECK(kind_of([] { parse_species("A cubus + B"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_species("A aequatur B aequatur C"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_species("A in E aequatur B"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_species("A in aequatur B"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_species("A plano aequatur B"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_species("aequatur B"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_species("A B aequatur C"); }) == ErrorKind::parse);

    try {
        parse_species("quad. in A aequatur B");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("grade word without preceding letter") !=
              std::string::npos);
    }
}

TEST_CASE("homogeneity dimensions") {
    CHECK(check_homogeneity(parse_species("A cubus + B quad in A aequatur B quad in Z")).value ==
          3);
    CHECK(check_homogeneity(parse_species("A aequatur B")).value == 1);
    CHECK(check_homogeneity(parse_species("A quadratum + A in B aequatur C plano")).value == 2);

    try {
        check_homogeneity(parse_species("A quad + B aequatur C"));
        FAIL("expected heterogeneity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::heterogeneous_equation);
        std::string msg = e.what();
        CHECK(msg.find("A quadratum (2)") != std::string::npos);
        CHECK(msg.find("B (1)") != std::string::npos);
        CHECK(msg.find("C (1)") != std::string::npos);
    }
}

TEST_CASE("to_modern renders the flagship example") {
    auto eq = parse_species("A cubus + B quad in A æquetur B quad in Z");
    auto m = to_modern(eq);
    CHECK(m.text == "a³ + b²a = b²z");
    CHECK(m.normal_form.unknown == 'A');
    CHECK(m.normal_form.degree() == 3);
    CHECK(m.normal_form.render() == "a³ + b²a - b²z = 0");

    REQUIRE(m.normal_form.coeffs.count(3) == 1);
    CHECK(m.normal_form.coeffs.at(3)[0].factors.empty());
    REQUIRE(m.normal_form.coeffs.count(1) == 1);
    CHECK(m.normal_form.coeffs.at(1)[0].factors ==
          std::vector<SpeciesSymbol>{{'B', SymbolKind::known, 2, false}});
    REQUIRE(m.normal_form.coeffs.count(0) == 1);
    CHECK(m.normal_form.coeffs.at(0)[0].sign == -1);
}

TEST_CASE("to_modern rejects heterogeneous and multi-unknown input") {
    CHECK(kind_of([] { to_modern(parse_species("A quad + B aequatur C")); }) ==
          ErrorKind::heterogeneous_equation);
    CHECK(kind_of([] { to_modern(parse_species("A + E aequatur B")); }) ==
          ErrorKind::unsupported_equation);
}

TEST_CASE("from_modern reconstructs species text") {
    auto eq = from_modern("a³ + b²a = b²z");
    CHECK(eq.same_structure(parse_species("A cubus + B quadratum in A aequatur B quadratum in Z")));
    CHECK(eq.source == "A cubus + B quadratum in A aequatur B quadratum in Z");

    CHECK(from_modern("a = b").source == "A aequatur B");

    // caret powers and interpuncts are accepted spellings
    CHECK(from_modern("a^3 + b^2a = b^2z").same_structure(eq));
    CHECK(from_modern("a³ + b²·a = b²·z").same_structure(eq));
}

TEST_CASE("from_modern rejections") {
    CHECK(kind_of([] { from_modern("a² = b"); }) == ErrorKind::heterogeneous_equation);
    try {
        from_modern("a² = b");
        FAIL("expected error");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("(2)") != std::string::npos);
        CHECK(msg.find("(1)") != std::string::npos);
    }
    CHECK(kind_of([] { from_modern("3a = b"); }) == ErrorKind::parse);
    CHECK(kind_of([] { from_modern("a^7 = b^7"); }) == ErrorKind::out_of_range);
    CHECK(kind_of([] { from_modern("a + b"); }) == ErrorKind::parse);
    CHECK(kind_of([] { from_modern("a₂ = b₂"); }) == ErrorKind::parse);
}

TEST_CASE("golden corpus round trips") {
    for (const auto& line : load_corpus()) {
        INFO(line.species);
        auto eq = parse_species(line.species);
        check_homogeneity(eq);
        auto m = to_modern(eq);
        CHECK(m.text == line.modern);
        CHECK(from_modern(line.modern).same_structure(eq));
        CHECK(from_modern(m.text).same_structure(eq));
        CHECK(to_modern(from_modern(m.text)).text == m.text);
        auto tokens = tokenize(line.species);
        CHECK(tokenize(detokenize(tokens)) == tokens);
    }
}

TEST_CASE("bind_values substitutes knowns") {
    auto cubic = parse_species("A cubus + B quad in A aequatur B quad in Z");
    CHECK(bind_values(cubic, {{'B', Rational(1)}, {'Z', Rational(20)}}) ==
          parse_polynomial("x^3 + x - 20"));

    auto quad = parse_species("A quadratum + A in B aequatur C plano");
    CHECK(bind_values(quad, {{'B', Rational(6)}, {'C', Rational(16)}}) ==
          parse_polynomial("x^2 + 6 x - 16"));

    CHECK(bind_values(parse_species("A aequatur B"), {{'B', Rational(7)}}) ==
          parse_polynomial("x - 7"));

    // a measure grade names a given magnitude; it does not exponentiate
    auto meas = parse_species("A cubus minus B plano in A aequatur D solido");
    CHECK(bind_values(meas, {{'B', Rational(4)}, {'D', Rational(5)}}) ==
          parse_polynomial("x^3 - 4 x - 5"));
}

TEST_CASE("bind_values errors") {
    auto quad = parse_species("A quadratum + A in B aequatur C plano");
    CHECK(kind_of([&] { bind_values(quad, {{'B', Rational(6)}}); }) ==
          ErrorKind::missing_binding);
    CHECK(kind_of([&] {
              bind_values(quad, {{'A', Rational(1)}, {'B', Rational(6)}, {'C', Rational(16)}});
          }) == ErrorKind::bound_unknown);
}

TEST_CASE("bound polynomial agrees with direct term substitution") {
    std::mt19937 rng(909090);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    auto corpus = load_corpus();
    for (int trial = 0; trial < 100; ++trial) {
        const auto& line = corpus[trial % corpus.size()];
        auto eq = parse_species(line.species);
        std::map<char, Rational> bindings;
        for (const auto* side : {&eq.lhs, &eq.rhs})
            for (const auto& t : *side)
                for (const auto& f : t.factors)
                    if (f.kind == SymbolKind::known && !bindings.count(f.letter))
                        bindings[f.letter] = Rational(num(rng), den(rng));
        Polynomial p = bind_values(eq, bindings);
        Rational x(num(rng), den(rng));
        CHECK(p.evaluate(x) == substitute_terms(eq, bindings, x));
    }
}
