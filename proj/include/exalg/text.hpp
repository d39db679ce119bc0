#ifndef EXALG_TEXT_HPP
#define EXALG_TEXT_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exalg/fermion.hpp"
#include "exalg/multivector.hpp"
#include "exalg/simplicity.hpp"

namespace exalg {

// Parse failure with the (0-based) offset of the offending character.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          pos(pos) {}
};

namespace detail {

// Recursive-descent parser over the multivector grammar:
//   mv    := ('-')? term (('+'|'-') term)*
//   term  := coeff ('*' blade)? | blade
//   coeff := int ('/' posint)? | '(' rational ('+'|'-') rational 'i' ')'
//   blade := '1' | 'e' digits (n <= 9 only) | 'e{' int (',' int)* '}'
template <class S>
class MvParser {
public:
    MvParser(const std::string& text, int n) : s_(text), n_(n) {}

    Multivector<S> parse() {
        Multivector<S> m(n_);
        skip_ws();
        bool neg = eat('-');
        parse_term(m, neg);
        skip_ws();
        while (!done()) {
            bool minus = eat('-');
            if (!minus && !eat('+')) throw ParseError(pos_, "expected '+' or '-'");
            parse_term(m, minus);
            skip_ws();
        }
        return m;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(pos_, what);
    }
    void skip_ws() {
        while (!done() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    boost::multiprecision::cpp_int parse_uint() {
        if (!std::isdigit((unsigned char)peek())) throw ParseError(pos_, "expected digits");
        boost::multiprecision::cpp_int v = 0;
        while (std::isdigit((unsigned char)peek())) v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    Rational parse_rational(bool allow_sign) {
        bool neg = allow_sign && eat('-');
        if (!neg && allow_sign) eat('+');
        auto num = parse_uint();
        boost::multiprecision::cpp_int den = 1;
        if (eat('/')) {
            std::size_t at = pos_;
            den = parse_uint();
            if (den == 0) throw ParseError(at, "zero denominator");
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

    S parse_coeff() {
        if (peek() == '(') {
            if constexpr (std::is_same_v<S, GaussianRational>) {
                ++pos_;
                skip_ws();
                Rational re = parse_rational(true);
                skip_ws();
                bool neg = eat('-');
                if (!neg) expect('+', "expected '+' or '-' in complex coefficient");
                skip_ws();
                Rational im = parse_rational(false);
                if (neg) im = -im;
                expect('i', "expected 'i' in complex coefficient");
                skip_ws();
                expect(')', "expected ')'");
                return GaussianRational(std::move(re), std::move(im));
            } else {
                throw ParseError(pos_, "complex coefficient outside Hermitian mode");
            }
        }
        return S(parse_rational(false));
    }

    BladeMask parse_blade() {
        std::size_t at = pos_;
        if (eat('1')) return BladeMask{0};
        expect('e', "expected blade");
        IndexTuple idx;
        if (eat('{')) {
            do {
                skip_ws();
                at = pos_;
                auto v = parse_uint();
                if (v < 1 || v > n_) throw ParseError(at, "blade index out of range");
                idx.push_back((int)v);
                skip_ws();
            } while (eat(','));
            expect('}', "expected '}'");
        } else {
            if (n_ > 9) throw ParseError(pos_, "compact blade form requires dimension <= 9");
            at = pos_;
            if (!std::isdigit((unsigned char)peek())) throw ParseError(at, "expected blade digits");
            while (std::isdigit((unsigned char)peek())) {
                int v = s_[pos_] - '0';
                if (v < 1 || v > n_) throw ParseError(pos_, "blade index out of range");
                idx.push_back(v);
                ++pos_;
            }
        }
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] >= idx[i + 1]) throw ParseError(at, "blade indices must be strictly increasing");
        return mask_of(idx);
    }

    void parse_term(Multivector<S>& m, bool negate) {
        skip_ws();
        S coeff(1);
        BladeMask mask = 0;
        if (peek() == 'e') {
            mask = parse_blade();
        } else if (peek() == '1' && !term_continues_as_coeff()) {
            ++pos_;
            // bare '1' blade: scalar term with coefficient 1
        } else {
            coeff = parse_coeff();
            skip_ws();
            if (eat('*')) {
                skip_ws();
                mask = parse_blade();
            }
        }
        if (negate) coeff = -coeff;
        m.add_term(mask, std::move(coeff));
    }

    // Distinguish the blade '1' from a numeric coefficient starting with 1.
    bool term_continues_as_coeff() const {
        std::size_t q = pos_ + 1;
        return q < s_.size() && (std::isdigit((unsigned char)s_[q]) || s_[q] == '/' ||
                                 s_[q] == '*');
    }

    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;
};

inline std::string print_scalar(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline bool scalar_negative(const Rational& x) { return x < 0; }
inline Rational scalar_abs(const Rational& x) { return x < 0 ? -x : x; }

}  // namespace detail

template <class S>
Multivector<S> parse_multivector(const std::string& text, int n) {
    if (n < 0 || n > kMaxDim) throw std::domain_error("parse_multivector: bad dimension");
    return detail::MvParser<S>(text, n).parse();
}

inline std::string print_blade(BladeMask mask, int n) {
    if (mask == 0) return "1";
    auto idx = tuple_of(mask);
    std::string out = "e";
    if (n <= 9) {
        for (int i : idx) out += char('0' + i);
    } else {
        out += '{';
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (t) out += ',';
            out += std::to_string(idx[t]);
        }
        out += '}';
    }
    return out;
}

// Canonical text: terms sorted by (grade, index tuple), '-' folded into the
// separator for rational coefficients, complex coefficients kept inside their
// parenthesized form and joined with '+'.
template <class S>
std::string print_multivector(const Multivector<S>& m) {
    struct Entry {
        int grade;
        IndexTuple idx;
        BladeMask mask;
        S coeff;
    };
    std::vector<Entry> entries;
    for (const auto& [mask, c] : m.terms())
        entries.push_back({mask_grade(mask), tuple_of(mask), mask, c});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                  return std::tie(a.grade, a.idx) < std::tie(b.grade, b.idx);
              });
    if (entries.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < entries.size(); ++t) {
        const auto& e = entries[t];
        bool real_form = true;
        Rational re;
        if constexpr (std::is_same_v<S, GaussianRational>) {
            real_form = e.coeff.im == 0;
            re = e.coeff.re;
        } else {
            re = e.coeff;
        }
        if (real_form) {
            bool neg = detail::scalar_negative(re);
            if (t) out += neg ? "-" : "+";
            else if (neg) out += "-";
            auto mag = detail::print_scalar(detail::scalar_abs(re));
            if (e.mask == 0) {
                out += mag;
            } else if (mag == "1") {
                out += print_blade(e.mask, m.dim());
            } else {
                out += mag + "*" + print_blade(e.mask, m.dim());
            }
        } else {
            if (t) out += "+";
            std::ostringstream os;
            os << e.coeff;
            out += os.str();
            if (e.mask != 0) out += "*" + print_blade(e.mask, m.dim());
        }
    }
    return out;
}

// Operator text: signed coefficient, then the creation and annihilation
// blocks in application order; an empty product prints as Id.
template <class S>
std::string print_operator(const NormalOrderedOperator<S>& op) {
    if (op.terms.empty()) return "0";
    auto block = [](const char* head, const IndexTuple& idx) {
        std::string out = head;
        out += '[';
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (t) out += ',';
            out += std::to_string(idx[t]);
        }
        out += ']';
        return out;
    };
    std::string out;
    for (std::size_t t = 0; t < op.terms.size(); ++t) {
        const auto& term = op.terms[t];
        if (t) out += ' ';
        if (term.create.empty() && term.annihilate.empty()) {
            if (term.coeff == S(1)) {
                out += t ? "+Id" : "Id";
            } else if (term.coeff == S(-1)) {
                out += "-Id";
            } else {
                std::ostringstream os;
                os << term.coeff;
                out += (t ? "+" : "") + os.str() + " Id";
            }
            continue;
        }
        std::ostringstream os;
        os << term.coeff;
        std::string c = os.str();
        if (!c.empty() && c[0] != '-' && c[0] != '(') c = "+" + c;
        out += c;
        out += ' ';
        if (op.order == OperatorOrder::CreateAnnihilate) {
            out += block("a+", term.create);
            if (!term.annihilate.empty()) out += ' ' + block("a", term.annihilate);
        } else {
            out += block("a", term.annihilate);
            if (!term.create.empty()) out += ' ' + block("a+", term.create);
        }
    }
    return out;
}

// Relation text: signed monomials l{i}*l{j} with explicit magnitude when it
// is not 1, ending in " = 0".
inline std::string print_relation(const PluckerRelation& rel) {
    auto lam = [](const IndexTuple& idx) {
        std::string out = "l{";
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (t) out += ',';
            out += std::to_string(idx[t]);
        }
        out += '}';
        return out;
    };
    if (rel.monomials.empty()) return "0 = 0";
    std::string out;
    for (const auto& m : rel.monomials) {
        long long mag = m.coeff < 0 ? -m.coeff : m.coeff;
        out += m.coeff < 0 ? "-" : "+";
        if (mag != 1) out += std::to_string(mag) + "*";
        out += lam(m.a) + "*" + lam(m.b);
    }
    return out + " = 0";
}

}  // namespace exalg

#endif
