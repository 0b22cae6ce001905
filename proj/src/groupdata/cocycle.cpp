#include <nw/groupdata/cocycle.hpp>

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nw::groupdata {

namespace {

// ---- tiny integer expression AST ------------------------------------------

struct Expr {
    enum class Kind { Const, Var, Add, Sub, Mul, FloorDiv, Neg } kind;
    long value = 0;           // Const
    char var_class = 0;       // Var: 'i' | 'j' | 'k'
    size_t var_index = 0;     // Var: 0-based generator slot
    std::unique_ptr<Expr> a, b;
};

struct FormulaFactor {
    unsigned zeta_order;  // 2 for minus_one_pow
    std::unique_ptr<Expr> exponent;
};

long eval_expr(const Expr& e, const GroupElement& a, const GroupElement& b, const GroupElement& c) {
    switch (e.kind) {
        case Expr::Kind::Const:
            return e.value;
        case Expr::Kind::Var: {
            const GroupElement& g = e.var_class == 'i' ? a : e.var_class == 'j' ? b : c;
            return static_cast<long>(g.e[e.var_index]);
        }
        case Expr::Kind::Add:
            return eval_expr(*e.a, a, b, c) + eval_expr(*e.b, a, b, c);
        case Expr::Kind::Sub:
            return eval_expr(*e.a, a, b, c) - eval_expr(*e.b, a, b, c);
        case Expr::Kind::Mul:
            return eval_expr(*e.a, a, b, c) * eval_expr(*e.b, a, b, c);
        case Expr::Kind::FloorDiv: {
            const long x = eval_expr(*e.a, a, b, c), y = eval_expr(*e.b, a, b, c);
            if (y == 0) throw std::domain_error("cocycle formula: division by zero");
            long q = x / y, r = x % y;
            if (r != 0 && ((r < 0) != (y < 0))) --q;
            return q;
        }
        case Expr::Kind::Neg:
            return -eval_expr(*e.a, a, b, c);
    }
    throw std::logic_error("cocycle formula: bad expression node");
}

class Parser {
  public:
    Parser(const std::string& s, size_t rank) : s_(s), rank_(rank) {}

    std::vector<FormulaFactor> parse_formula() {
        skip();
        std::vector<FormulaFactor> factors;
        if (peek() == '1' && !std::isalnum(static_cast<unsigned char>(look(1))) && look(1) != '(') {
            ++pos_;
            skip();
            if (pos_ != s_.size()) fail("trailing input after '1'");
            return factors;  // empty product = trivial cocycle
        }
        factors.push_back(parse_factor());
        skip();
        while (peek() == '*') {
            ++pos_;
            factors.push_back(parse_factor());
            skip();
        }
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return factors;
    }

  private:
    const std::string& s_;
    size_t rank_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("cocycle formula: " + msg + " at position " + std::to_string(pos_) + " in '" +
                                    s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char look(size_t ahead) { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string ident() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }
    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    FormulaFactor parse_factor() {
        const std::string name = ident();
        FormulaFactor f;
        if (name == "minus_one_pow") {
            f.zeta_order = 2;
            expect('(');
            f.exponent = parse_expr();
            expect(')');
        } else if (name == "zeta_pow") {
            expect('(');
            const long n = integer();
            if (n <= 0) fail("zeta order must be positive");
            f.zeta_order = static_cast<unsigned>(n);
            expect(',');
            f.exponent = parse_expr();
            expect(')');
        } else {
            fail("unknown factor '" + name + "' (expected minus_one_pow or zeta_pow)");
        }
        return f;
    }

    std::unique_ptr<Expr> parse_expr() {
        auto lhs = parse_term();
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = c == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
            node->a = std::move(lhs);
            node->b = parse_term();
            lhs = std::move(node);
        }
    }
    std::unique_ptr<Expr> parse_term() {
        auto lhs = parse_unary();
        while (true) {
            const char c = peek();
            if (c != '*' && c != '/') return lhs;
            // a '*' that begins the next top-level factor must not be eaten;
            // factors start with an identifier of a known call, but so do
            // variables. Disambiguate: inside an expression every '*' binds,
            // because factor boundaries only occur after a closing ')' that
            // ends the call — parse_factor consumes those.
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = c == '*' ? Expr::Kind::Mul : Expr::Kind::FloorDiv;
            node->a = std::move(lhs);
            node->b = parse_unary();
            lhs = std::move(node);
        }
    }
    std::unique_ptr<Expr> parse_unary() {
        if (peek() == '-') {
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Neg;
            node->a = parse_unary();
            return node;
        }
        return parse_atom();
    }
    std::unique_ptr<Expr> parse_atom() {
        const char c = peek();
        auto node = std::make_unique<Expr>();
        if (c == '(') {
            ++pos_;
            node = parse_expr();
            expect(')');
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            node->kind = Expr::Kind::Const;
            node->value = integer();
            return node;
        }
        const std::string id = ident();
        if (id.size() < 2 || (id[0] != 'i' && id[0] != 'j' && id[0] != 'k')) fail("unknown variable '" + id + "'");
        for (size_t t = 1; t < id.size(); ++t)
            if (!std::isdigit(static_cast<unsigned char>(id[t]))) fail("unknown variable '" + id + "'");
        const size_t idx = std::stoul(id.substr(1));
        if (idx == 0 || idx > rank_) fail("variable index out of range in '" + id + "'");
        node->kind = Expr::Kind::Var;
        node->var_class = id[0];
        node->var_index = idx - 1;
        return node;
    }
};

}  // namespace

struct ThreeCocycle::Formula {
    std::vector<FormulaFactor> factors;
};

ThreeCocycle ThreeCocycle::trivial(const AbelianGroup& g) { return from_formula(g, "1"); }

ThreeCocycle ThreeCocycle::from_formula(const AbelianGroup& g, const std::string& formula) {
    ThreeCocycle c;
    c.group_ = &g;
    auto f = std::make_shared<Formula>();
    f->factors = Parser(formula, g.rank()).parse_formula();
    c.formula_ = std::move(f);
    c.source_ = formula;
    return c;
}

ThreeCocycle ThreeCocycle::from_table(const AbelianGroup& g, std::map<std::array<size_t, 3>, CycNumber> table) {
    ThreeCocycle c;
    c.group_ = &g;
    c.table_ = std::make_shared<const std::map<std::array<size_t, 3>, CycNumber>>(std::move(table));
    c.source_ = "table";
    return c;
}

CycNumber ThreeCocycle::eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    if (formula_) {
        CycNumber out = CycNumber::one();
        for (const auto& f : formula_->factors)
            out *= CycNumber::zeta(f.zeta_order, eval_expr(*f.exponent, a, b, c));
        return out;
    }
    const auto it = table_->find({group_->index_of(a), group_->index_of(b), group_->index_of(c)});
    return it == table_->end() ? CycNumber::one() : it->second;
}

unsigned ThreeCocycle::scalar_order() const {
    unsigned n = 1;
    if (formula_) {
        for (const auto& f : formula_->factors) n = std::lcm(n, f.zeta_order);
    } else {
        for (const auto& [k, v] : *table_) n = std::lcm(n, v.order());
    }
    return n;
}

std::vector<std::string> ThreeCocycle::validate() const {
    std::vector<std::string> bad;
    const auto els = group_->elements();
    const GroupElement e = group_->identity();
    for (const auto& a : els)
        for (const auto& b : els) {
            if (eval(e, a, b) != CycNumber::one() || eval(a, e, b) != CycNumber::one() ||
                eval(a, b, e) != CycNumber::one()) {
                bad.push_back("not normalized at (" + group_->str(a) + ", " + group_->str(b) + ")");
                if (bad.size() > 20) return bad;
            }
        }
    // 3-cocycle identity: Phi(b,c,d) Phi(a,bc,d) Phi(a,b,c) = Phi(a,b,cd) Phi(ab,c,d)
    for (const auto& a : els)
        for (const auto& b : els)
            for (const auto& c : els)
                for (const auto& d : els) {
                    const CycNumber lhs = eval(b, c, d) * eval(a, group_->mul(b, c), d) * eval(a, b, c);
                    const CycNumber rhs = eval(a, b, group_->mul(c, d)) * eval(group_->mul(a, b), c, d);
                    if (lhs != rhs) {
                        bad.push_back("3-cocycle identity fails at (" + group_->str(a) + ", " + group_->str(b) +
                                      ", " + group_->str(c) + ", " + group_->str(d) + ")");
                        if (bad.size() > 20) return bad;
                    }
                }
    return bad;
}

std::string ThreeCocycle::describe() const { return source_; }

TwoCocycle::TwoCocycle(const ThreeCocycle& phi, GroupElement base_degree) : phi_(&phi), g_(std::move(base_degree)) {}

CycNumber TwoCocycle::eval(const GroupElement& e, const GroupElement& f) const {
    const CycNumber num = phi_->eval(g_, e, f) * phi_->eval(e, f, g_);
    return num * phi_->eval(e, g_, f).inverse();
}

std::vector<std::string> TwoCocycle::validate() const {
    std::vector<std::string> bad;
    const AbelianGroup& grp = phi_->group();
    const auto els = grp.elements();
    for (const auto& e : els)
        for (const auto& f : els)
            for (const auto& d : els) {
                // tphi(e,f) tphi(ef,d) = tphi(f,d) tphi(e,fd)
                const CycNumber lhs = eval(e, f) * eval(grp.mul(e, f), d);
                const CycNumber rhs = eval(f, d) * eval(e, grp.mul(f, d));
                if (lhs != rhs) {
                    bad.push_back("2-cocycle identity fails at (" + grp.str(e) + ", " + grp.str(f) + ", " +
                                  grp.str(d) + ") for degree " + grp.str(g_));
                    if (bad.size() > 20) return bad;
                }
            }
    return bad;
}

}  // namespace nw::groupdata
