#include "hypalg/parse.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <optional>

namespace hypalg {

Rational parse_rational_text(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&]() {
        throw ParseError("invalid rational literal '" + text + "'", 1, i + 1);
    };
    if (text.empty()) fail();
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == start) fail();
    Integer n(text.substr(start, i - start));
    Integer d = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start) fail();
        d = Integer(text.substr(start, i - start));
        if (d == 0) fail();
    }
    if (i != text.size()) fail();
    Rational q(n, d);
    return neg ? Rational(-q) : q;
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    char get() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        ++col_;
        return s_[pos_++];
    }

    bool accept(char c) {
        if (peek() == c) {
            get();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        return std::isdigit(static_cast<unsigned char>(peek()));
    }

    bool peek_alpha() {
        return std::isalpha(static_cast<unsigned char>(peek()));
    }

    Integer integer() {
        if (!peek_digit()) fail("expected an integer");
        std::string digits;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_++];
            ++col_;
        }
        return Integer(digits);
    }

    /// Nonnegative rational literal INT [ '/' INT ].
    Rational rational() {
        Integer n = integer();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            ++col_;
            Integer d = integer();
            if (d == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    std::string identifier() {
        skip_ws();
        std::string id;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                s_[pos_] == '_')) {
            id += s_[pos_++];
            ++col_;
        }
        if (id.empty()) fail("expected an identifier");
        return id;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_, col_);
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

struct PolyParse {
    PolyQ poly;
};

class Parser {
public:
    explicit Parser(const std::string& text) : cur_(text) {}

    InputDocument parse() {
        InputDocument doc;
        if (cur_.peek_digit()) {
            doc = parse_pfq();
        } else if (cur_.peek() == 'F') {
            doc = parse_scriptf();
        } else if (cur_.peek_alpha()) {
            std::string kw = cur_.identifier();
            if (kw != "rec") cur_.fail("expected pFq, F(...) or rec:");
            doc = parse_recurrence();
        } else {
            cur_.fail("expected pFq, F(...) or rec:");
        }
        if (!cur_.eof()) cur_.fail("trailing input after expression");
        return doc;
    }

private:
    Cursor cur_;
    std::optional<char> poly_var_;

    InputDocument parse_pfq() {
        Integer p = cur_.integer();
        if (cur_.get() != 'F') cur_.fail("expected 'F'");
        Integer q = cur_.integer();
        InputDocument doc;
        doc.kind = InputDocument::Kind::pFq;
        parse_lists_and_scale(doc);
        if (Integer(parameter_count(doc.top)) != p ||
            Integer(parameter_count(doc.bottom)) != q)
            cur_.fail("parameter list sizes do not match " + p.str() + "F" +
                      q.str());
        return doc;
    }

    InputDocument parse_scriptf() {
        cur_.expect('F');
        InputDocument doc;
        doc.kind = InputDocument::Kind::scriptF;
        parse_lists_and_scale(doc);
        return doc;
    }

    void parse_lists_and_scale(InputDocument& doc) {
        cur_.expect('(');
        doc.top = parse_param_list();
        cur_.expect(',');
        doc.bottom = parse_param_list();
        if (cur_.accept(';')) doc.scale = parse_scale();
        cur_.expect(')');
    }

    std::vector<Parameter> parse_param_list() {
        cur_.expect('[');
        std::vector<Parameter> params;
        if (!cur_.accept(']')) {
            params.push_back(parse_parameter());
            while (cur_.accept(',')) params.push_back(parse_parameter());
            cur_.expect(']');
        }
        return params;
    }

    // [-] [rat ['*']] 'x'
    Rational parse_scale() {
        Rational s(1);
        if (cur_.accept('-')) s = -s;
        if (cur_.peek_digit()) {
            s *= cur_.rational();
            cur_.accept('*');
        }
        std::string v = cur_.identifier();
        if (v != "x") cur_.fail("expected the argument variable 'x'");
        return s;
    }

    struct Atom {
        enum class Kind { sqrt_int, root, allroots } kind;
        Integer sqrt_n;
        PolyQ poly;
        Rational lo, hi;
    };

    Parameter parse_parameter() {
        Rational rational_part(0);
        std::optional<std::pair<Rational, Atom>> atom; // coefficient, atom

        bool first = true;
        while (true) {
            Rational sign(1);
            if (cur_.accept('+')) {
            } else if (cur_.accept('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            first = false;

            if (cur_.peek_digit()) {
                Rational r = cur_.rational();
                if (cur_.accept('*')) {
                    if (!is_integer(r))
                        cur_.fail("only integer multiples of algebraic atoms "
                                  "are supported");
                    add_atom(atom, sign * r, parse_atom());
                } else {
                    rational_part += sign * r;
                }
            } else if (cur_.peek_alpha()) {
                add_atom(atom, sign, parse_atom());
            } else {
                cur_.fail("expected a parameter term");
            }
            if (cur_.peek() != '+' && cur_.peek() != '-') break;
        }
        return build_parameter(rational_part, atom);
    }

    void add_atom(std::optional<std::pair<Rational, Atom>>& slot,
                  const Rational& coef, Atom atom) {
        if (coef == 0) return;
        if (slot)
            cur_.fail("at most one algebraic atom per parameter");
        slot = {coef, std::move(atom)};
    }

    Atom parse_atom() {
        std::size_t line = cur_.line(), col = cur_.column();
        std::string id = cur_.identifier();
        if (id == "sqrt") {
            cur_.expect('(');
            Integer n = cur_.integer();
            cur_.expect(')');
            if (n <= 0)
                cur_.fail("sqrt expects a positive integer");
            Integer s = boost::multiprecision::sqrt(n);
            if (s * s == n)
                cur_.fail("sqrt of a perfect square: write the rational "
                          "value directly");
            Atom a;
            a.kind = Atom::Kind::sqrt_int;
            a.sqrt_n = n;
            return a;
        }
        if (id == "root") {
            cur_.expect('(');
            Atom a;
            a.kind = Atom::Kind::root;
            poly_var_.reset();
            a.poly = parse_poly_expr();
            cur_.expect(',');
            a.lo = parse_signed_rational();
            cur_.expect(',');
            a.hi = parse_signed_rational();
            cur_.expect(')');
            return a;
        }
        if (id == "allroots") {
            cur_.expect('(');
            Atom a;
            a.kind = Atom::Kind::allroots;
            poly_var_.reset();
            a.poly = parse_poly_expr();
            cur_.expect(')');
            return a;
        }
        throw NonAlgebraicParameter(
            "unsupported parameter atom '" + id + "' (line " +
            std::to_string(line) + ", column " + std::to_string(col) + ")");
    }

    Rational parse_signed_rational() {
        Rational sign(1);
        if (cur_.accept('-')) sign = -1;
        return sign * cur_.rational();
    }

    Parameter build_parameter(const Rational& r,
                              const std::optional<std::pair<Rational, Atom>>&
                                  atom) {
        if (!atom) return Parameter::rational(r);
        const Rational& k = atom->first;
        const Atom& a = atom->second;
        switch (a.kind) {
        case Atom::Kind::sqrt_int: {
            // value r + k sqrt(n); minimal polynomial (x-r)^2 - k^2 n
            PolyQ minpoly{r * r - k * k * Rational(a.sqrt_n),
                          Rational(-2) * r, Rational(1)};
            auto [lo, hi] = sqrt_bounds(a.sqrt_n);
            return Parameter::algebraic(minpoly, affine_lo(r, k, lo, hi),
                                        affine_hi(r, k, lo, hi));
        }
        case Atom::Kind::root: {
            PolyQ m = affine_poly(a.poly, r, k);
            return Parameter::algebraic(m, affine_lo(r, k, a.lo, a.hi),
                                        affine_hi(r, k, a.lo, a.hi));
        }
        case Atom::Kind::allroots:
            return Parameter::block(affine_poly(a.poly, r, k));
        }
        cur_.fail("unreachable");
    }

    // Polynomial whose roots are r + k * (roots of p): p((x-r)/k) rescaled.
    static PolyQ affine_poly(const PolyQ& p, const Rational& r,
                             const Rational& k) {
        return p.compose_affine(Rational(1) / k, -r / k);
    }

    static Rational affine_lo(const Rational& r, const Rational& k,
                              const Rational& lo, const Rational& hi) {
        return k > 0 ? r + k * lo : r + k * hi;
    }
    static Rational affine_hi(const Rational& r, const Rational& k,
                              const Rational& lo, const Rational& hi) {
        return k > 0 ? r + k * hi : r + k * lo;
    }

    // Rational bounds lo < sqrt(n) < hi, a few Newton steps tight.
    static std::pair<Rational, Rational> sqrt_bounds(const Integer& n) {
        Integer s = boost::multiprecision::sqrt(n);
        Rational hi(s + 1);
        Rational nn(n);
        for (int i = 0; i < 5; ++i) hi = (hi + nn / hi) / 2;
        Rational lo = nn / hi;
        return {lo, hi};
    }

    InputDocument parse_recurrence() {
        InputDocument doc;
        doc.kind = InputDocument::Kind::recurrence;
        cur_.expect(':');
        bool have_u0 = false, have_a = false, have_b = false;
        while (true) {
            std::string key = cur_.identifier();
            cur_.expect('=');
            if (key == "u0") {
                doc.u0 = parse_signed_rational();
                have_u0 = true;
            } else if (key == "A") {
                poly_var_.reset();
                doc.rec_a = parse_poly_expr();
                have_a = true;
            } else if (key == "B") {
                poly_var_.reset();
                doc.rec_b = parse_poly_expr();
                have_b = true;
            } else {
                cur_.fail("expected u0=, A= or B=");
            }
            if (!cur_.accept(';')) break;
            if (cur_.eof()) break;
        }
        if (!have_u0 || !have_a || !have_b)
            cur_.fail("recurrence needs u0=, A= and B=");
        return doc;
    }

    // --- polynomial expressions ---------------------------------------

    PolyQ parse_poly_expr() {
        PolyQ acc;
        Rational sign(1);
        if (cur_.accept('-')) sign = -1;
        acc = parse_poly_term() * sign;
        while (true) {
            if (cur_.accept('+'))
                acc = acc + parse_poly_term();
            else if (cur_.accept('-'))
                acc = acc - parse_poly_term();
            else
                break;
        }
        return acc;
    }

    PolyQ parse_poly_term() {
        PolyQ acc = parse_poly_factor();
        while (true) {
            if (cur_.accept('*'))
                acc = acc * parse_poly_factor();
            else if (cur_.peek() == '(') // juxtaposition: 2(2n+1)(...)
                acc = acc * parse_poly_factor();
            else
                break;
        }
        return acc;
    }

    PolyQ parse_poly_factor() {
        PolyQ base;
        if (cur_.accept('(')) {
            base = parse_poly_expr();
            cur_.expect(')');
        } else if (cur_.peek_digit()) {
            base = PolyQ::constant(cur_.rational());
        } else if (cur_.peek_alpha()) {
            std::size_t line = cur_.line(), col = cur_.column();
            std::string id = cur_.identifier();
            if (id.size() != 1)
                throw ParseError("unexpected identifier '" + id +
                                     "' in a polynomial",
                                 line, col);
            char v = id[0];
            if (poly_var_ && *poly_var_ != v)
                throw ParseError(std::string("polynomial variable '") + v +
                                     "' conflicts with earlier '" +
                                     *poly_var_ + "'",
                                 line, col);
            poly_var_ = v;
            base = PolyQ::variable();
        } else {
            cur_.fail("expected a polynomial factor");
        }
        if (cur_.accept('^')) {
            Integer e = cur_.integer();
            if (e < 0 || e > 64) cur_.fail("unsupported exponent");
            base = base.pow(e.convert_to<unsigned>());
        }
        return base;
    }
};

void normalize_blocks(std::vector<Parameter>& params) {
    std::vector<Parameter> out;
    for (const auto& p : params) {
        if (p.is_block() && p.root_block().multiplicity > 1) {
            for (unsigned i = 0; i < p.root_block().multiplicity; ++i)
                out.push_back(Parameter::block(p.root_block().poly, 1));
        } else {
            out.push_back(p);
        }
    }
    params = std::move(out);
}

} // namespace

InputDocument parse_expression(const std::string& text) {
    Parser parser(text);
    InputDocument doc = parser.parse();
    normalize_blocks(doc.top);
    normalize_blocks(doc.bottom);
    return doc;
}

Parameter parse_parameter_text(const std::string& text) {
    // Reuse the expression machinery by wrapping in a one-parameter list.
    InputDocument doc = parse_expression("F([" + text + "],[])");
    if (doc.top.size() != 1)
        throw ParseError("expected a single parameter", 1, 1);
    return doc.top.front();
}

std::string print_parameter(const Parameter& p) {
    if (p.is_rational()) return to_pretty_string(p.rational_value());
    if (p.is_real_algebraic()) {
        const auto& ra = p.real_algebraic();
        return "root(" + ra.minpoly.to_string() + ", " +
               to_pretty_string(ra.lo) + ", " + to_pretty_string(ra.hi) + ")";
    }
    return "allroots(" + p.root_block().poly.to_string() + ")";
}

namespace {

std::string print_param_list(const std::vector<Parameter>& params) {
    std::string out = "[";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += print_parameter(params[i]);
    }
    return out + "]";
}

std::string print_scale(const Rational& s) {
    if (s == 1) return "x";
    return to_pretty_string(s) + "*x";
}

} // namespace

std::string print_document(const InputDocument& doc) {
    switch (doc.kind) {
    case InputDocument::Kind::pFq:
        return std::to_string(doc.top.size()) + "F" +
               std::to_string(doc.bottom.size()) + "(" +
               print_param_list(doc.top) + ", " +
               print_param_list(doc.bottom) + "; " + print_scale(doc.scale) +
               ")";
    case InputDocument::Kind::scriptF:
        return "F(" + print_param_list(doc.top) + ", " +
               print_param_list(doc.bottom) + "; " + print_scale(doc.scale) +
               ")";
    case InputDocument::Kind::recurrence:
        return "rec: u0=" + to_pretty_string(doc.u0) +
               "; A=" + doc.rec_a.to_string("n") +
               "; B=" + doc.rec_b.to_string("n");
    }
    return "";
}

HypergeomSpec to_spec(const InputDocument& doc) {
    switch (doc.kind) {
    case InputDocument::Kind::pFq:
        return assemble(doc.top, doc.bottom, Form::F, doc.scale, doc.u0);
    case InputDocument::Kind::scriptF:
        return assemble(doc.top, doc.bottom, Form::scriptF, doc.scale,
                        doc.u0);
    case InputDocument::Kind::recurrence:
        return from_recurrence(doc.rec_a, doc.rec_b, doc.u0);
    }
    throw Error("unreachable input kind");
}

} // namespace hypalg
