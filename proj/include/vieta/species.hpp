#pragma once

// Species-logistic notation: lexer, parser, homogeneity checker, and
// transpiler between the Latin species vocabulary and modern symbols.
// Vowels are unknowns, consonants are givens; every term in an equation
// must carry the same dimension.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace vieta {

enum class SymbolKind { unknown, known };

inline bool is_vowel_letter(char upper) {
    return upper == 'A' || upper == 'E' || upper == 'I' || upper == 'O' || upper == 'U';
}

struct SpeciesSymbol {
    char letter = 0;  // uppercase
    SymbolKind kind = SymbolKind::known;
    int grade = 1;
    bool measure = false;  // grade named by planum/solidum rather than a power word

    friend bool operator==(const SpeciesSymbol&, const SpeciesSymbol&) = default;
};

struct SpeciesTerm {
    int sign = 1;
    std::vector<SpeciesSymbol> factors;

    int dimension() const {
        int d = 0;
        for (const auto& f : factors) d += f.grade;
        return d;
    }

    friend bool operator==(const SpeciesTerm&, const SpeciesTerm&) = default;
};

struct SpeciesEquation {
    std::vector<SpeciesTerm> lhs;
    std::vector<SpeciesTerm> rhs;
    std::string source;

    bool same_structure(const SpeciesEquation& o) const {
        return lhs == o.lhs && rhs == o.rhs;
    }

    std::vector<char> unknowns() const {
        std::set<char> seen;
        for (const auto* side : {&lhs, &rhs})
            for (const auto& t : *side)
                for (const auto& f : t.factors)
                    if (f.kind == SymbolKind::unknown) seen.insert(f.letter);
        return {seen.begin(), seen.end()};
    }
};

// ---------------------------------------------------------------------------
// Tokens

enum class TokenKind { letter, grade, multiply, plus, minus, equals };

struct Token {
    TokenKind kind;
    char letter = 0;    // letter tokens
    int grade = 0;      // grade tokens
    bool measure = false;
    std::size_t offset = 0;  // byte offset in the original text

    friend bool operator==(const Token& a, const Token& b) {
        return a.kind == b.kind && a.letter == b.letter && a.grade == b.grade &&
               a.measure == b.measure;  // offsets are diagnostic only
    }
};

namespace detail {

struct GradeWord {
    const char* word;
    int grade;
    bool measure;
};

// Vocabulary after lowercasing and stripping periods.
inline const GradeWord* lookup_grade(const std::string& w) {
    static const GradeWord table[] = {
        {"latus", 1, false},
        {"quadratum", 2, false},
        {"quad", 2, false},
        {"cubus", 3, false},
        {"quadrato-quadratum", 4, false},
        {"quad-quad", 4, false},
        {"quadrato-cubus", 5, false},
        {"cubo-cubus", 6, false},
        {"planum", 2, true},
        {"plano", 2, true},
        {"solidum", 3, true},
        {"solido", 3, true},
    };
    for (const auto& g : table)
        if (w == g.word) return &g;
    return nullptr;
}

inline bool is_equality_word(const std::string& w) {
    return w == "aequatur" || w == "aequetur" || w == "aequabitur";
}

}  // namespace detail

// Lexes species text. Case-insensitive; `æ` is read as `ae`; abbreviations
// may carry periods ("quad.", "quad.-quad."); `−`, `-`, and the word "minus"
// all subtract. Unknown words raise a lexical error with their byte offset.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    if (text.empty()) throw Error(ErrorKind::lexical, "empty input");
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto is_ae = [&](std::size_t p, char& lower) {
        // U+00E6 æ = C3 A6, U+00C6 Æ = C3 86
        if (p + 1 < n && static_cast<unsigned char>(text[p]) == 0xC3) {
            unsigned char b = static_cast<unsigned char>(text[p + 1]);
            if (b == 0xA6 || b == 0x86) {
                lower = 'a';  // expands to "ae"
                return true;
            }
        }
        return false;
    };
    auto is_minus_sign = [&](std::size_t p) {
        // U+2212 − = E2 88 92
        return p + 2 < n && static_cast<unsigned char>(text[p]) == 0xE2 &&
               static_cast<unsigned char>(text[p + 1]) == 0x88 &&
               static_cast<unsigned char>(text[p + 2]) == 0x92;
    };

    while (i < n) {
        char c = text[i];
        char ae = 0;
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
            ++i;
            continue;
        }
        if (c == '+') {
            out.push_back({TokenKind::plus, 0, 0, false, i});
            ++i;
            continue;
        }
        if (is_minus_sign(i)) {
            out.push_back({TokenKind::minus, 0, 0, false, i});
            i += 3;
            continue;
        }
        if (c == '-') {  // standalone hyphen; hyphens inside words are handled below
            out.push_back({TokenKind::minus, 0, 0, false, i});
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || is_ae(i, ae)) {
            std::size_t start = i;
            std::string word;
            while (i < n) {
                char lower;
                if (is_ae(i, lower)) {
                    word += "ae";
                    i += 2;
                } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
                    word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
                    ++i;
                } else if (text[i] == '.') {
                    // keep scanning: "quad." or internal "quad.-quad."
                    ++i;
                } else if (text[i] == '-' && i + 1 < n &&
                           std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
                    word += '-';
                    ++i;
                } else {
                    break;
                }
            }
            if (word.size() == 1) {
                out.push_back({TokenKind::letter,
                               static_cast<char>(std::toupper(static_cast<unsigned char>(word[0]))),
                               0, false, start});
            } else if (word == "in") {
                out.push_back({TokenKind::multiply, 0, 0, false, start});
            } else if (word == "minus") {
                out.push_back({TokenKind::minus, 0, 0, false, start});
            } else if (detail::is_equality_word(word)) {
                out.push_back({TokenKind::equals, 0, 0, false, start});
            } else if (const auto* g = detail::lookup_grade(word)) {
                out.push_back({TokenKind::grade, 0, g->grade, g->measure, start});
            } else {
                throw Error(ErrorKind::lexical, "unknown word \"" + word + "\" at byte " +
                                                    std::to_string(start));
            }
            continue;
        }
        throw Error(ErrorKind::lexical,
                    std::string("unexpected character \"") + c + "\" at byte " + std::to_string(i));
    }
    return out;
}

namespace detail {

inline std::string grade_word(int grade, bool measure) {
    if (measure) {
        switch (grade) {
            case 2: return "plano";
            case 3: return "solido";
        }
    } else {
        switch (grade) {
            case 1: return "latus";
            case 2: return "quadratum";
            case 3: return "cubus";
            case 4: return "quadrato-quadratum";
            case 5: return "quadrato-cubus";
            case 6: return "cubo-cubus";
        }
    }
    throw Error(ErrorKind::out_of_range,
                "no grade word for dimension " + std::to_string(grade));
}

}  // namespace detail

inline std::string detokenize(const std::vector<Token>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        switch (t.kind) {
            case TokenKind::letter: out += t.letter; break;
            case TokenKind::grade: out += detail::grade_word(t.grade, t.measure); break;
            case TokenKind::multiply: out += "in"; break;
            case TokenKind::plus: out += '+'; break;
            case TokenKind::minus: out += "minus"; break;
            case TokenKind::equals: out += "aequatur"; break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

inline SpeciesEquation parse_equation(const std::vector<Token>& tokens) {
    std::size_t eq_count = 0;
    for (const auto& t : tokens)
        if (t.kind == TokenKind::equals) ++eq_count;
    if (eq_count == 0) throw Error(ErrorKind::parse, "missing equality word");
    if (eq_count > 1) throw Error(ErrorKind::parse, "more than one equality word");

    std::size_t pos = 0;
    auto at_end = [&] { return pos == tokens.size(); };
    auto peek = [&]() -> const Token& { return tokens[pos]; };

    auto parse_factor = [&]() -> SpeciesSymbol {
        if (at_end() || peek().kind != TokenKind::letter) {
            if (!at_end() && peek().kind == TokenKind::grade)
                throw Error(ErrorKind::parse,
                            "grade word without preceding letter (write the letter explicitly, "
                            "e.g. \"B quad\" rather than \"quad\")");
            throw Error(ErrorKind::parse, "expected a letter");
        }
        SpeciesSymbol s;
        s.letter = peek().letter;
        s.kind = is_vowel_letter(s.letter) ? SymbolKind::unknown : SymbolKind::known;
        ++pos;
        if (!at_end() && peek().kind == TokenKind::grade) {
            s.grade = peek().grade;
            s.measure = peek().measure;
            if (s.measure && s.kind == SymbolKind::unknown)
                throw Error(ErrorKind::parse,
                            std::string("planum/solidum apply to known letters only; \"") +
                                s.letter + "\" is an unknown");
            ++pos;
        }
        return s;
    };

    auto parse_term = [&](int sign) -> SpeciesTerm {
        SpeciesTerm t;
        t.sign = sign;
        t.factors.push_back(parse_factor());
        while (!at_end() && peek().kind == TokenKind::multiply) {
            ++pos;
            if (at_end() || peek().kind != TokenKind::letter) {
                if (!at_end() && peek().kind == TokenKind::grade)
                    throw Error(ErrorKind::parse,
                                "grade word without preceding letter (write the letter "
                                "explicitly, e.g. \"B quad\" rather than \"quad\")");
                throw Error(ErrorKind::parse, "dangling \"in\"");
            }
            t.factors.push_back(parse_factor());
        }
        char vowel = 0;
        for (const auto& f : t.factors) {
            if (f.kind != SymbolKind::unknown) continue;
            if (vowel == 0) vowel = f.letter;
            else if (vowel != f.letter)
                throw Error(ErrorKind::parse, std::string("two unknowns multiplied in one term: ") +
                                                  vowel + ", " + f.letter);
        }
        return t;
    };

    auto parse_side = [&]() -> std::vector<SpeciesTerm> {
        std::vector<SpeciesTerm> terms;
        int sign = 1;
        if (!at_end() && peek().kind == TokenKind::minus) {
            sign = -1;
            ++pos;
        } else if (!at_end() && peek().kind == TokenKind::plus) {
            ++pos;
        }
        terms.push_back(parse_term(sign));
        while (!at_end() &&
               (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus)) {
            sign = peek().kind == TokenKind::plus ? 1 : -1;
            ++pos;
            terms.push_back(parse_term(sign));
        }
        return terms;
    };

    SpeciesEquation eq;
    if (!at_end() && peek().kind == TokenKind::equals)
        throw Error(ErrorKind::parse, "empty left-hand side");
    eq.lhs = parse_side();
    if (at_end() || peek().kind != TokenKind::equals)
        throw Error(ErrorKind::parse, "expected \"in\", a sign, or an equality word");
    ++pos;
    if (at_end()) throw Error(ErrorKind::parse, "empty right-hand side");
    eq.rhs = parse_side();
    if (!at_end()) throw Error(ErrorKind::parse, "trailing tokens after the equation");
    return eq;
}

inline SpeciesEquation parse_species(std::string_view text) {
    SpeciesEquation eq = parse_equation(tokenize(text));
    eq.source = std::string(text);
    return eq;
}

// ---------------------------------------------------------------------------
// Homogeneity

struct Dimension {
    int value;
    friend bool operator==(const Dimension&, const Dimension&) = default;
};

namespace detail {
inline std::string term_species_text(const SpeciesTerm& t) {
    std::string out;
    for (const auto& f : t.factors) {
        if (!out.empty()) out += " in ";
        out += f.letter;
        if (f.grade != 1 || f.measure) out += ' ' + grade_word(f.grade, f.measure);
    }
    return out;
}
}  // namespace detail

inline Dimension check_homogeneity(const SpeciesEquation& eq) {
    std::vector<const SpeciesTerm*> all;
    for (const auto* side : {&eq.lhs, &eq.rhs})
        for (const auto& t : *side) all.push_back(&t);
    if (all.empty()) throw Error(ErrorKind::degenerate_input, "empty equation");
    const int dim = all.front()->dimension();
    bool ok = true;
    for (const auto* t : all)
        if (t->dimension() != dim) ok = false;
    if (!ok) {
        std::string msg = "heterogeneous equation:";
        for (const auto* t : all)
            msg += " " + detail::term_species_text(*t) + " (" +
                   std::to_string(t->dimension()) + ");";
        msg.pop_back();
        throw Error(ErrorKind::heterogeneous_equation, msg);
    }
    return Dimension{dim};
}

// ---------------------------------------------------------------------------
// Modern notation

namespace detail {

inline std::string superscript(int k) {
    switch (k) {
        case 1: return "¹";
        case 2: return "²";
        case 3: return "³";
        case 4: return "⁴";
        case 5: return "⁵";
        case 6: return "⁶";
    }
    throw Error(ErrorKind::out_of_range, "superscript out of range");
}

inline std::string subscript(int k) {
    switch (k) {
        case 1: return "₁";
        case 2: return "₂";
        case 3: return "₃";
        case 4: return "₄";
        case 5: return "₅";
        case 6: return "₆";
    }
    throw Error(ErrorKind::out_of_range, "subscript out of range");
}

// b², c₂, a — measure grades carry a subscript so the dimension survives the
// round trip; power grades use superscripts; grade 1 is the bare letter.
inline std::string modern_factor(const SpeciesSymbol& f) {
    std::string out(1, static_cast<char>(std::tolower(static_cast<unsigned char>(f.letter))));
    if (f.measure) out += subscript(f.grade);
    else if (f.grade > 1) out += superscript(f.grade);
    return out;
}

inline std::string modern_term(const SpeciesTerm& t) {
    std::string out;
    for (const auto& f : t.factors) out += modern_factor(f);
    return out;
}

inline std::string join_terms(const std::vector<SpeciesTerm>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].sign < 0) out += "-";
        } else {
            out += terms[i].sign < 0 ? " - " : " + ";
        }
        out += modern_term(terms[i]);
    }
    return out;
}

}  // namespace detail

struct SymbolicMonomial {
    int sign = 1;
    std::vector<SpeciesSymbol> factors;  // knowns only

    friend bool operator==(const SymbolicMonomial&, const SymbolicMonomial&) = default;
};

// Normal form P(x) = 0: for each power of the unknown, the sum of known
// monomials multiplying it.
struct SymbolicPolynomial {
    char unknown = 0;  // uppercase vowel; 0 when the equation has no unknown
    std::map<std::size_t, std::vector<SymbolicMonomial>> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

    std::string render() const {
        std::string out;
        bool first = true;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            for (const auto& m : it->second) {
                if (first) {
                    if (m.sign < 0) out += "-";
                    first = false;
                } else {
                    out += m.sign < 0 ? " - " : " + ";
                }
                std::string body;
                for (const auto& f : m.factors) body += detail::modern_factor(f);
                if (it->first > 0) {
                    body += static_cast<char>(std::tolower(static_cast<unsigned char>(unknown)));
                    if (it->first > 1) body += detail::superscript(static_cast<int>(it->first));
                } else if (body.empty()) {
                    body = "1";
                }
                out += body;
            }
        }
        if (out.empty()) out = "0";
        return out + " = 0";
    }
};

struct ModernForm {
    std::string text;
    SymbolicPolynomial normal_form;
};

inline ModernForm to_modern(const SpeciesEquation& eq) {
    check_homogeneity(eq);
    auto vowels = eq.unknowns();
    if (vowels.size() > 1) {
        std::string list;
        for (char v : vowels) {
            if (!list.empty()) list += ", ";
            list += v;
        }
        throw Error(ErrorKind::unsupported_equation,
                    "multiple distinct unknowns: " + list);
    }

    ModernForm m;
    m.text = detail::join_terms(eq.lhs) + " = " + detail::join_terms(eq.rhs);
    m.normal_form.unknown = vowels.empty() ? 0 : vowels.front();
    auto add_side = [&](const std::vector<SpeciesTerm>& side, int side_sign) {
        for (const auto& t : side) {
            SymbolicMonomial mono;
            mono.sign = t.sign * side_sign;
            std::size_t power = 0;
            for (const auto& f : t.factors) {
                if (f.kind == SymbolKind::unknown) power += static_cast<std::size_t>(f.grade);
                else mono.factors.push_back(f);
            }
            m.normal_form.coeffs[power].push_back(std::move(mono));
        }
    };
    add_side(eq.lhs, 1);
    add_side(eq.rhs, -1);
    return m;
}

inline std::string to_species_text(const SpeciesEquation& eq) {
    auto render_side = [](const std::vector<SpeciesTerm>& side) {
        std::string out;
        for (std::size_t i = 0; i < side.size(); ++i) {
            if (i == 0) {
                if (side[i].sign < 0) out += "minus ";
            } else {
                out += side[i].sign < 0 ? " minus " : " + ";
            }
            out += detail::term_species_text(side[i]);
        }
        return out;
    };
    return render_side(eq.lhs) + " aequatur " + render_side(eq.rhs);
}

// ---------------------------------------------------------------------------
// Modern → species

namespace detail {

inline int decode_superscript(std::string_view s, std::size_t& i) {
    // returns digit value if s[i..] starts with a superscript digit, else -1
    unsigned char a = i < s.size() ? static_cast<unsigned char>(s[i]) : 0;
    if (a == 0xC2 && i + 1 < s.size()) {
        unsigned char b = static_cast<unsigned char>(s[i + 1]);
        if (b == 0xB9) { i += 2; return 1; }
        if (b == 0xB2) { i += 2; return 2; }
        if (b == 0xB3) { i += 2; return 3; }
    }
    if (a == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x81) {
        unsigned char c = static_cast<unsigned char>(s[i + 2]);
        if (c == 0xB0 || (c >= 0xB4 && c <= 0xB9)) {
            i += 3;
            return c == 0xB0 ? 0 : c - 0xB0;
        }
    }
    return -1;
}

inline int decode_subscript(std::string_view s, std::size_t& i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x82) {
        unsigned char c = static_cast<unsigned char>(s[i + 2]);
        if (c >= 0x80 && c <= 0x89) {
            i += 3;
            return c - 0x80;
        }
    }
    return -1;
}

inline bool decode_middot(std::string_view s, std::size_t& i) {
    if (i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xC2 &&
        static_cast<unsigned char>(s[i + 1]) == 0xB7) {
        i += 2;
        return true;
    }
    return false;
}

inline bool decode_minus_sign(std::string_view s, std::size_t& i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
        i += 3;
        return true;
    }
    return false;
}

inline std::vector<SpeciesTerm> parse_modern_side(std::string_view s) {
    std::vector<SpeciesTerm> terms;
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };

    skip_ws();
    if (i == n) throw Error(ErrorKind::parse, "empty side of equation");
    int sign = 1;
    if (s[i] == '+') { ++i; }
    else if (s[i] == '-') { sign = -1; ++i; }
    else if (decode_minus_sign(s, i)) { sign = -1; }

    while (true) {
        skip_ws();
        SpeciesTerm term;
        term.sign = sign;
        bool any = false;
        while (i < n) {
            skip_ws();
            if (i == n) break;
            std::size_t save = i;
            if (s[i] == '+' || s[i] == '-' || decode_minus_sign(s, i)) {
                i = save;
                break;
            }
            if (s[i] == '*') { ++i; continue; }
            if (decode_middot(s, i)) continue;
            char c = s[i];
            if (std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorKind::parse,
                            "numeric coefficients are outside the species grammar");
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw Error(ErrorKind::parse,
                            std::string("unexpected character \"") + c + "\" in modern text");
            SpeciesSymbol f;
            f.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            f.kind = is_vowel_letter(f.letter) ? SymbolKind::unknown : SymbolKind::known;
            ++i;
            int sup = decode_superscript(s, i);
            if (sup < 0 && i < n && s[i] == '^') {
                ++i;
                if (i == n || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw Error(ErrorKind::parse, "expected a digit after ^");
                sup = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    sup = sup * 10 + (s[i] - '0');
                    ++i;
                }
            }
            if (sup >= 0) {
                if (sup < 1 || sup > 6)
                    throw Error(ErrorKind::out_of_range,
                                "power " + std::to_string(sup) +
                                    " is outside the named grades (1..6)");
                f.grade = sup;
            } else {
                int sub = decode_subscript(s, i);
                if (sub >= 0) {
                    if (f.kind == SymbolKind::unknown)
                        throw Error(ErrorKind::parse,
                                    std::string("measure grade on unknown \"") + f.letter + "\"");
                    if (sub < 1 || sub > 6)
                        throw Error(ErrorKind::out_of_range,
                                    "dimension " + std::to_string(sub) +
                                        " is outside the named grades (1..6)");
                    if (sub != 2 && sub != 3)
                        throw Error(ErrorKind::out_of_range,
                                    "measure grades are planum (2) or solidum (3)");
                    f.grade = sub;
                    f.measure = true;
                }
            }
            term.factors.push_back(f);
            any = true;
        }
        if (!any) throw Error(ErrorKind::parse, "empty term in modern text");
        char vowel = 0;
        for (const auto& f : term.factors) {
            if (f.kind != SymbolKind::unknown) continue;
            if (vowel == 0) vowel = f.letter;
            else if (vowel != f.letter)
                throw Error(ErrorKind::parse, std::string("two unknowns multiplied in one term: ") +
                                                  vowel + ", " + f.letter);
        }
        terms.push_back(std::move(term));
        skip_ws();
        if (i == n) break;
        if (s[i] == '+') { sign = 1; ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        else if (decode_minus_sign(s, i)) { sign = -1; }
        else throw Error(ErrorKind::parse, "expected + or - between terms");
    }
    return terms;
}

}  // namespace detail

inline SpeciesEquation from_modern(std::string_view text) {
    std::size_t eq_pos = text.find('=');
    if (eq_pos == std::string_view::npos)
        throw Error(ErrorKind::parse, "missing = in modern equation");
    if (text.find('=', eq_pos + 1) != std::string_view::npos)
        throw Error(ErrorKind::parse, "more than one = in modern equation");

    SpeciesEquation eq;
    eq.lhs = detail::parse_modern_side(text.substr(0, eq_pos));
    eq.rhs = detail::parse_modern_side(text.substr(eq_pos + 1));
    check_homogeneity(eq);
    auto vowels = eq.unknowns();
    if (vowels.size() > 1)
        throw Error(ErrorKind::unsupported_equation, "multiple distinct unknowns");
    eq.source = to_species_text(eq);
    return eq;
}

// ---------------------------------------------------------------------------
// Binding

// Substitutes rationals for the known letters and returns the polynomial in
// the unknown, with the right-hand side moved across. A measure-graded known
// (B plano) is a single given magnitude: its dimension does not exponentiate
// the bound value. Power grades do.
inline Polynomial bind_values(const SpeciesEquation& eq,
                              const std::map<char, Rational>& bindings) {
    auto vowels = eq.unknowns();
    if (vowels.size() > 1)
        throw Error(ErrorKind::unsupported_equation, "multiple distinct unknowns");
    auto lookup = [&](char letter) -> const Rational* {
        auto it = bindings.find(letter);
        if (it == bindings.end())
            it = bindings.find(static_cast<char>(std::tolower(static_cast<unsigned char>(letter))));
        return it == bindings.end() ? nullptr : &it->second;
    };
    for (char v : vowels)
        if (lookup(v))
            throw Error(ErrorKind::bound_unknown,
                        std::string("unknown \"") + v + "\" must stay unbound");

    std::vector<Rational> coeffs;
    auto add = [&](std::size_t power, const Rational& value) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += value;
    };
    auto add_side = [&](const std::vector<SpeciesTerm>& side, int side_sign) {
        for (const auto& t : side) {
            Rational value(t.sign * side_sign);
            std::size_t power = 0;
            for (const auto& f : t.factors) {
                if (f.kind == SymbolKind::unknown) {
                    power += static_cast<std::size_t>(f.grade);
                    continue;
                }
                const Rational* bound = lookup(f.letter);
                if (!bound)
                    throw Error(ErrorKind::missing_binding,
                                std::string("no value bound for \"") + f.letter + "\"");
                if (f.measure) {
                    value *= *bound;
                } else {
                    Rational pw(1);
                    for (int k = 0; k < f.grade; ++k) pw *= *bound;
                    value *= pw;
                }
            }
            add(power, value);
        }
    };
    add_side(eq.lhs, 1);
    add_side(eq.rhs, -1);
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    return Polynomial(coeffs);
}

}  // namespace vieta
