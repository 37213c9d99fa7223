// Algebra file format (UTF-8 text, one declaration per line, '#' comments):
//
//   field Q            | field GF <p>
//   vertices <label> <label> ...
//   arrow <name> : <src> -> <tgt>
//   relation <term> (+|-) <term> ...     term := [<coeff>*]<arrow>(*<arrow>)*
//   module <Name> = <Expr>               Expr := S(i)|P(i)|I(i)|A|DA|<Name>|Expr + Expr
//   module <Name> { dim <d1> <d2> ... ; map <arrow> = [[..],[..]] ; ... }
//
// The explicit-module braces may span lines. Parse errors carry line/column.

#pragma once

#include <cctype>
#include <variant>

#include "arthom/repmod.hpp"

namespace arthom {

struct parse_error : error {
    int line, col;
    parse_error(int line_, int col_, const std::string& msg)
        : error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_)
    {
    }
};

namespace parsedetail {

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind;
    std::string text;
    int line, col;
};

// token stream with newline tokens preserved for line-oriented parsing
inline std::vector<Token> tokenize(const std::string& text)
{
    std::vector<Token> out;
    size_t pos = 0;
    int line = 1;
    int column = 1;
    auto adv = [&]() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    };
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '\n') {
            out.push_back(Token{Token::Kind::punct, "\n", line, column});
            adv();
        } else if (c == '#') {
            while (pos < text.size() && text[pos] != '\n') adv();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            adv();
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = line, co = column;
            std::string s;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                s += adv();
            out.push_back(Token{Token::Kind::ident, s, l, co});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            int l = line, co = column;
            std::string s;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) s += adv();
            out.push_back(Token{Token::Kind::number, s, l, co});
        } else if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
            int l = line, co = column;
            adv();
            adv();
            out.push_back(Token{Token::Kind::punct, "->", l, co});
        } else {
            int l = line, co = column;
            std::string s(1, adv());
            out.push_back(Token{Token::Kind::punct, s, l, co});
        }
    }
    out.push_back(Token{Token::Kind::end, "", line, column});
    return out;
}

}  // namespace parsedetail

template <class F>
struct AlgebraBundle {
    AlgebraPtr<F> algebra;
    std::map<std::string, Rep<F>> modules;
    std::vector<std::string> module_order;

    const Rep<F>& module(const std::string& name) const
    {
        auto it = modules.find(name);
        if (it == modules.end()) throw error("module '" + name + "' is not declared in the input file");
        return it->second;
    }
};

using ParsedFile = std::variant<AlgebraBundle<Rationals>, AlgebraBundle<PrimeField>>;

namespace parsedetail {

template <class F>
class FileBuilder {
public:
    FileBuilder(F field, const std::vector<Token>& toks, int path_cap)
        : field_(field), toks_(toks), path_cap_(path_cap)
    {
    }

    AlgebraBundle<F> build()
    {
        // first pass: quiver and relations; module declarations collected
        std::vector<std::pair<size_t, size_t>> module_spans;  // token ranges
        for (i_ = 0; !at_end();) {
            if (is_newline()) {
                ++i_;
                continue;
            }
            const Token& t = peek();
            if (t.kind != Token::Kind::ident)
                throw parse_error(t.line, t.col, "expected a declaration keyword, got '" + t.text + "'");
            if (t.text == "field") {
                skip_line();  // handled by the caller
            } else if (t.text == "vertices") {
                ++i_;
                while (!is_newline() && !at_end()) {
                    const Token& v = take();
                    if (v.kind == Token::Kind::punct)
                        throw parse_error(v.line, v.col, "bad vertex label '" + v.text + "'");
                    quiver_.vertices.push_back(v.text);
                }
            } else if (t.text == "arrow") {
                ++i_;
                const Token& name = expect_ident("arrow name");
                expect_punct(":");
                const Token& src = take_label();
                expect_punct("->");
                const Token& tgt = take_label();
                quiver_.arrows.push_back(
                    {name.text, vertex_index(src), vertex_index(tgt)});
            } else if (t.text == "relation") {
                ++i_;
                relations_.push_back(parse_relation());
            } else if (t.text == "module") {
                size_t start = i_;
                skip_module();
                module_spans.emplace_back(start, i_);
            } else {
                throw parse_error(t.line, t.col, "unknown declaration '" + t.text + "'");
            }
        }
        AlgebraBundle<F> bundle;
        bundle.algebra = BoundQuiverAlgebra<F>::make(field_, quiver_, relations_, path_cap_);
        for (auto [start, end] : module_spans) {
            i_ = start;
            parse_module_decl(bundle);
        }
        return bundle;
    }

private:
    bool at_end() const { return toks_[i_].kind == Token::Kind::end; }
    const Token& peek() const { return toks_[i_]; }
    const Token& take() { return toks_[i_++]; }
    bool is_newline() const
    {
        return toks_[i_].kind == Token::Kind::punct && toks_[i_].text == "\n";
    }
    void skip_line()
    {
        while (!at_end() && !is_newline()) ++i_;
    }
    const Token& expect_ident(const std::string& what)
    {
        const Token& t = take();
        if (t.kind != Token::Kind::ident) throw parse_error(t.line, t.col, "expected " + what);
        return t;
    }
    const Token& take_label()
    {
        const Token& t = take();
        if (t.kind != Token::Kind::ident && t.kind != Token::Kind::number)
            throw parse_error(t.line, t.col, "expected a vertex label");
        return t;
    }
    void expect_punct(const std::string& p)
    {
        const Token& t = take();
        if (t.kind != Token::Kind::punct || t.text != p)
            throw parse_error(t.line, t.col, "expected '" + p + "', got '" + t.text + "'");
    }
    int vertex_index(const Token& t) const
    {
        for (int i = 0; i < quiver_.n_vertices(); ++i)
            if (quiver_.vertices[i] == t.text) return i;
        throw parse_error(t.line, t.col, "unknown vertex '" + t.text + "'");
    }
    int arrow_index(const Token& t) const
    {
        for (int i = 0; i < quiver_.n_arrows(); ++i)
            if (quiver_.arrows[i].name == t.text) return i;
        throw parse_error(t.line, t.col, "unknown arrow '" + t.text + "'");
    }

    typename F::Elem parse_coeff_from(long long num, const Token& at)
    {
        (void)at;
        return field_.from_int(num);
    }

    // number or number/number; returns field element
    typename F::Elem parse_number()
    {
        const Token& t = take();
        if (t.kind != Token::Kind::number) throw parse_error(t.line, t.col, "expected a number");
        long long num = std::stoll(t.text);
        if (!at_end() && peek().kind == Token::Kind::punct && peek().text == "/") {
            ++i_;
            const Token& d = take();
            if (d.kind != Token::Kind::number) throw parse_error(d.line, d.col, "expected a denominator");
            return field_.from_ratio(num, std::stoll(d.text));
        }
        return field_.from_int(num);
    }

    Relation<F> parse_relation()
    {
        Relation<F> rel;
        bool negate = false;
        if (peek().kind == Token::Kind::punct && peek().text == "-") {
            negate = true;
            ++i_;
        }
        while (true) {
            auto [coeff, word] = parse_term();
            rel.terms.emplace_back(negate ? field_.neg(coeff) : coeff, word);
            if (is_newline() || at_end()) break;
            const Token& sep = take();
            if (sep.kind != Token::Kind::punct || (sep.text != "+" && sep.text != "-"))
                throw parse_error(sep.line, sep.col, "expected '+' or '-' between relation terms");
            negate = sep.text == "-";
        }
        return rel;
    }

    std::pair<typename F::Elem, Word> parse_term()
    {
        typename F::Elem coeff = field_.one();
        if (peek().kind == Token::Kind::number) {
            coeff = parse_number();
            expect_punct("*");
        }
        // arrows as printed: a*b*c applies c first
        std::vector<int> printed;
        while (true) {
            const Token& t = take();
            if (t.kind != Token::Kind::ident)
                throw parse_error(t.line, t.col, "expected an arrow name in relation term");
            printed.push_back(arrow_index(t));
            if (!at_end() && peek().kind == Token::Kind::punct && peek().text == "*")
                ++i_;
            else
                break;
        }
        Word w;
        w.arrows.assign(printed.rbegin(), printed.rend());
        w.source = quiver_.arrows[w.arrows.front()].src;
        return {coeff, w};
    }

    void skip_module()
    {
        ++i_;           // 'module'
        take();         // name
        const Token& t = take();
        if (t.kind == Token::Kind::punct && t.text == "=") {
            skip_line();
        } else if (t.kind == Token::Kind::punct && t.text == "{") {
            int depth = 1;
            while (depth > 0) {
                if (at_end()) throw parse_error(t.line, t.col, "unterminated module block");
                const Token& u = take();
                if (u.kind == Token::Kind::punct && u.text == "{") ++depth;
                if (u.kind == Token::Kind::punct && u.text == "}") --depth;
            }
        } else {
            throw parse_error(t.line, t.col, "expected '=' or '{' after module name");
        }
    }

    void parse_module_decl(AlgebraBundle<F>& bundle)
    {
        ++i_;  // 'module'
        const Token& name = take_label();
        if (bundle.modules.count(name.text))
            throw parse_error(name.line, name.col, "module '" + name.text + "' declared twice");
        const Token& t = take();
        Rep<F> rep = zero_rep(bundle.algebra);
        if (t.kind == Token::Kind::punct && t.text == "=") {
            rep = parse_module_expr(bundle);
        } else if (t.kind == Token::Kind::punct && t.text == "{") {
            rep = parse_explicit_module(bundle, name);
        } else {
            throw parse_error(t.line, t.col, "expected '=' or '{' after module name");
        }
        bundle.modules.emplace(name.text, std::move(rep));
        bundle.module_order.push_back(name.text);
    }

    Rep<F> parse_module_expr(AlgebraBundle<F>& bundle)
    {
        std::vector<Rep<F>> parts;
        while (true) {
            const Token& t = take();
            if (t.kind != Token::Kind::ident)
                throw parse_error(t.line, t.col, "expected S(i), P(i), I(i), A, DA or a module name");
            if (t.text == "A") {
                parts.push_back(regular_module(bundle.algebra));
            } else if (t.text == "DA") {
                parts.push_back(coregular_module(bundle.algebra));
            } else if ((t.text == "S" || t.text == "P" || t.text == "I") && peek().kind == Token::Kind::punct &&
                       peek().text == "(") {
                ++i_;
                const Token& v = take_label();
                expect_punct(")");
                int idx = vertex_index(v);
                if (t.text == "S") parts.push_back(simple_module(bundle.algebra, idx));
                if (t.text == "P") parts.push_back(projective_module(bundle.algebra, idx));
                if (t.text == "I") parts.push_back(injective_module(bundle.algebra, idx));
            } else {
                auto it = bundle.modules.find(t.text);
                if (it == bundle.modules.end())
                    throw parse_error(t.line, t.col, "unknown module name '" + t.text + "'");
                parts.push_back(it->second);
            }
            if (is_newline() || at_end()) break;
            expect_punct("+");
        }
        return direct_sum(parts, bundle.algebra).sum;
    }

    Rep<F> parse_explicit_module(AlgebraBundle<F>& bundle, const Token& name)
    {
        std::vector<int> dims;
        std::map<int, Mat<F>> maps;
        bool have_dims = false;
        while (true) {
            while (is_newline()) ++i_;
            const Token& t = take();
            if (t.kind == Token::Kind::punct && t.text == "}") break;
            if (t.kind == Token::Kind::punct && t.text == ";") continue;
            if (t.kind != Token::Kind::ident)
                throw parse_error(t.line, t.col, "expected 'dim', 'map' or '}' in module block");
            if (t.text == "dim") {
                while (peek().kind == Token::Kind::number) {
                    dims.push_back(std::stoi(take().text));
                }
                if (static_cast<int>(dims.size()) != quiver_.n_vertices())
                    throw parse_error(t.line, t.col, "dim list must name one dimension per vertex");
                have_dims = true;
            } else if (t.text == "map") {
                if (!have_dims) throw parse_error(t.line, t.col, "'dim' must come before 'map'");
                const Token& an = expect_ident("arrow name");
                int a = arrow_index(an);
                expect_punct("=");
                maps.emplace(a, parse_matrix(quiver_.arrows[a]));
            } else {
                throw parse_error(t.line, t.col, "expected 'dim' or 'map', got '" + t.text + "'");
            }
        }
        std::vector<Mat<F>> action;
        for (int a = 0; a < quiver_.n_arrows(); ++a) {
            auto it = maps.find(a);
            if (it != maps.end()) {
                if (it->second.rows() != dims[quiver_.arrows[a].tgt] ||
                    it->second.cols() != dims[quiver_.arrows[a].src])
                    throw parse_error(name.line, name.col,
                                      "matrix for arrow '" + quiver_.arrows[a].name + "' has wrong shape (want " +
                                          std::to_string(dims[quiver_.arrows[a].tgt]) + "x" +
                                          std::to_string(dims[quiver_.arrows[a].src]) + ")");
                action.push_back(it->second);
            } else {
                action.emplace_back(field_, dims[quiver_.arrows[a].tgt], dims[quiver_.arrows[a].src]);
            }
        }
        return make_rep(bundle.algebra, dims, action);  // validates relations
    }

    Mat<F> parse_matrix(const Quiver::Arrow& arrow)
    {
        (void)arrow;
        const Token& open = take();
        if (open.kind != Token::Kind::punct || open.text != "[")
            throw parse_error(open.line, open.col, "expected a matrix literal");
        std::vector<std::vector<typename F::Elem>> rows;
        if (peek().kind == Token::Kind::punct && peek().text == "]") {
            ++i_;  // empty matrix []
        } else {
            while (true) {
                expect_punct("[");
                std::vector<typename F::Elem> row;
                if (!(peek().kind == Token::Kind::punct && peek().text == "]")) {
                    while (true) {
                        bool neg = false;
                        if (peek().kind == Token::Kind::punct && peek().text == "-") {
                            neg = true;
                            ++i_;
                        }
                        auto v = parse_number();
                        row.push_back(neg ? field_.neg(v) : v);
                        if (peek().kind == Token::Kind::punct && peek().text == ",") {
                            ++i_;
                            continue;
                        }
                        break;
                    }
                }
                expect_punct("]");
                rows.push_back(std::move(row));
                if (peek().kind == Token::Kind::punct && peek().text == ",") {
                    ++i_;
                    continue;
                }
                break;
            }
            expect_punct("]");
        }
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        for (const auto& row : rows)
            if (static_cast<int>(row.size()) != c)
                throw parse_error(open.line, open.col, "ragged matrix literal");
        Mat<F> m(field_, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    F field_;
    const std::vector<Token>& toks_;
    int path_cap_;
    size_t i_ = 0;
    Quiver quiver_;
    std::vector<Relation<F>> relations_;
};

}  // namespace parsedetail

/// Parse an algebra description; the field line decides the instantiation.
inline ParsedFile parse_algebra_text(const std::string& text, int path_cap = 64)
{
    auto toks = parsedetail::tokenize(text);
    // find the field declaration
    FieldSpec spec = FieldSpec::rationals();
    bool found = false;
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind == parsedetail::Token::Kind::ident && toks[i].text == "field") {
            const auto& v = toks[i + 1];
            if (v.kind == parsedetail::Token::Kind::ident && v.text == "Q") {
                spec = FieldSpec::rationals();
            } else if (v.kind == parsedetail::Token::Kind::ident && v.text == "GF") {
                const auto& p = toks[i + 2];
                if (p.kind != parsedetail::Token::Kind::number)
                    throw parse_error(p.line, p.col, "expected a prime after GF");
                spec = FieldSpec::prime(std::stoll(p.text));
            } else {
                throw parse_error(v.line, v.col, "expected 'Q' or 'GF <p>' after 'field'");
            }
            found = true;
            break;
        }
    }
    if (!found) throw parse_error(1, 1, "missing 'field' declaration");
    if (spec.kind == FieldSpec::Kind::rationals) {
        parsedetail::FileBuilder<Rationals> b(Rationals{}, toks, path_cap);
        return b.build();
    }
    if (!is_prime_number(spec.p)) throw parse_error(1, 1, "GF modulus must be prime");
    parsedetail::FileBuilder<PrimeField> b(PrimeField(spec.p), toks, path_cap);
    return b.build();
}

}  // namespace arthom
