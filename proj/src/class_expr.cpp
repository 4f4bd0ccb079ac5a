#include <wallcross/class_expr.hpp>

#include <wallcross/errors.hpp>
#include <wallcross/localization.hpp>

#include <cctype>
#include <sstream>

namespace wallcross {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ClassExpr parse()
    {
        ClassExpr result;
        skip_space();
        const auto start = pos_;
        if (peek_identifier() == "weyl") {
            read_identifier();
            expect('(');
            result.body = parse_sum();
            expect(')');
            result.weyl = true;
        } else {
            pos_ = start;
            result.body = parse_sum();
        }
        skip_space();
        if (pos_ < text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string &message) const { fail_at(message, pos_); }

    [[noreturn]] void fail_at(const std::string &message, std::size_t at) const
    {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw SyntaxError(message, line, column);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (pos_ >= text_.size()) {
                fail(std::string("expected '") + c + "' but reached end of input");
            }
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string_view peek_identifier()
    {
        skip_space();
        std::size_t end = pos_;
        if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
            ++end;
            while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
                ++end;
            }
        }
        return text_.substr(pos_, end - pos_);
    }

    std::string_view read_identifier()
    {
        const auto id = peek_identifier();
        pos_ += id.size();
        return id;
    }

    std::string read_digits(const char *what)
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail(std::string("expected ") + what);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned read_uint(const char *what)
    {
        const auto at = pos_;
        const auto digits = read_digits(what);
        if (digits.size() > 9) {
            fail_at(std::string(what) + " too large", at);
        }
        return static_cast<unsigned>(std::stoul(digits));
    }

    long read_int()
    {
        const bool negative = accept('-');
        const auto at = pos_;
        const auto digits = read_digits("an integer");
        if (digits.size() > 17) {
            fail_at("integer too large", at);
        }
        const long v = std::stol(digits);
        return negative ? -v : v;
    }

    SumExpr parse_sum()
    {
        SumExpr sum;
        bool negative = accept('-');
        while (true) {
            TermExpr term = parse_term();
            term.negative = negative;
            sum.terms.push_back(std::move(term));
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                break;
            }
        }
        return sum;
    }

    TermExpr parse_term()
    {
        TermExpr term;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto at = pos_;
            Integer num(read_digits("a number"));
            Integer den = 1;
            if (accept('/')) {
                den = Integer(read_digits("a denominator"));
                if (den == 0) {
                    fail_at("zero denominator", at);
                }
            }
            Rational q(num, den);
            q.canonicalize();
            term.scalar = q;
            if (!accept('*')) {
                return term;
            }
        }
        term.factors.push_back(parse_factor());
        while (accept('*')) {
            term.factors.push_back(parse_factor());
        }
        return term;
    }

    unsigned parse_exponent()
    {
        if (!accept('^')) {
            return 1;
        }
        if (peek() == '-') {
            fail("exponents must be nonnegative integers");
        }
        return read_uint("an exponent");
    }

    FactorExpr parse_factor()
    {
        FactorExpr factor;
        const char c = peek();
        const auto at = pos_;
        if (c == '(') {
            ++pos_;
            factor.group = std::make_shared<const SumExpr>(parse_sum());
            expect(')');
            factor.exponent = parse_exponent();
            return factor;
        }
        const auto id = read_identifier();
        if (id.empty()) {
            if (pos_ >= text_.size()) {
                fail("unexpected end of input");
            }
            fail("expected a generator, number or '('");
        }
        if (id == "L") {
            factor.generator = Generator::prequantum();
        } else if (id == "v") {
            const unsigned i = read_uint("a factor index after 'v'");
            factor.generator = Generator::sphere_factor(i);
        } else if (id == "line") {
            expect('(');
            Weight w{read_int()};
            while (accept(',')) {
                w.push_back(read_int());
            }
            expect(')');
            factor.generator = Generator::line(std::move(w));
        } else if (id == "weyl") {
            fail_at("weyl(...) may only wrap the whole expression", at);
        } else {
            fail_at("unknown generator '" + std::string(id) + "'", at);
        }
        factor.exponent = parse_exponent();
        return factor;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print_sum(std::ostream &os, const SumExpr &sum);

void print_generator(std::ostream &os, const Generator &g)
{
    switch (g.kind) {
    case Generator::Kind::prequantum:
        os << 'L';
        break;
    case Generator::Kind::sphere_factor:
        os << 'v' << g.index;
        break;
    case Generator::Kind::line:
        os << "line(";
        for (std::size_t i = 0; i < g.weight.size(); ++i) {
            os << (i ? "," : "") << g.weight[i];
        }
        os << ')';
        break;
    }
}

void print_term(std::ostream &os, const TermExpr &term)
{
    bool first = true;
    if (term.scalar) {
        os << to_string(*term.scalar);
        first = false;
    }
    for (const auto &f : term.factors) {
        if (!first) {
            os << '*';
        }
        first = false;
        if (f.generator) {
            print_generator(os, *f.generator);
        } else {
            os << '(';
            print_sum(os, *f.group);
            os << ')';
        }
        if (f.exponent != 1) {
            os << '^' << f.exponent;
        }
    }
}

void print_sum(std::ostream &os, const SumExpr &sum)
{
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
        const auto &t = sum.terms[i];
        if (i == 0) {
            if (t.negative) {
                os << '-';
            }
        } else {
            os << (t.negative ? " - " : " + ");
        }
        print_term(os, t);
    }
}

class Evaluator {
public:
    Evaluator(const TorusModel &model, const FixedPoint &fp) : model_(model), fp_(fp) {}

    MultiPoly sum(const SumExpr &s)
    {
        MultiPoly total(model_.rank());
        for (const auto &t : s.terms) {
            auto value = term(t);
            if (t.negative) {
                total -= value;
            } else {
                total += value;
            }
        }
        return total;
    }

private:
    MultiPoly term(const TermExpr &t)
    {
        MultiPoly value = MultiPoly::constant(model_.rank(), t.scalar.value_or(Rational(1)));
        for (const auto &f : t.factors) {
            const MultiPoly base = f.generator ? generator_restriction(model_, fp_, *f.generator) : sum(*f.group);
            value *= pow(base, f.exponent);
        }
        return value;
    }

    const TorusModel &model_;
    const FixedPoint &fp_;
};

} // namespace

ClassExpr parse_class_expr(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const ClassExpr &e)
{
    std::ostringstream os;
    if (e.weyl) {
        os << "weyl(";
    }
    print_sum(os, e.body);
    if (e.weyl) {
        os << ')';
    }
    return os.str();
}

EquivariantClass evaluate_class_expr(const ClassExpr &e, const TorusModel &model)
{
    auto a = make_class(model, [&](const FixedPoint &fp) { return Evaluator(model, fp).sum(e.body); });
    return e.weyl ? weyl_correct(model, a) : a;
}

} // namespace wallcross
