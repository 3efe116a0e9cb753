#include "legdef/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace legdef {

bool monomial_divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps monomial_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exps monomial_mul(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps monomial_div(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::logic_error("monomial_div: not divisible");
    }
    return r;
}

namespace {

// a < b in lex (first variable most significant)
bool lex_less(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// a < b in degrevlex
bool drl_less(const Exps& a, const Exps& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

bool MonomialOrder::less(const Exps& a, const Exps& b) const {
    switch (kind) {
        case Kind::Lex:
            return lex_less(a, b);
        case Kind::DegRevLex:
            return drl_less(a, b);
        case Kind::Block: {
            Exps fa(front.size()), fb(front.size());
            for (size_t i = 0; i < front.size(); ++i) {
                fa[i] = a[front[i]];
                fb[i] = b[front[i]];
            }
            if (fa != fb) return drl_less(fa, fb);
            std::vector<char> is_front(a.size(), 0);
            for (int i : front) is_front[i] = 1;
            Exps ra, rb;
            for (size_t i = 0; i < a.size(); ++i)
                if (!is_front[i]) {
                    ra.push_back(a[i]);
                    rb.push_back(b[i]);
                }
            return drl_less(ra, rb);
        }
    }
    return false;
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& variables, const Rat& c) {
    MultiPoly p(variables);
    if (c != 0) p.terms[Exps(variables.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& variables, const std::string& name) {
    MultiPoly p(variables);
    Exps e(variables.size(), 0);
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw std::invalid_argument("unknown variable: " + name);
    e[it - variables.begin()] = 1;
    p.terms[e] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& variables, const Exps& e, const Rat& c) {
    MultiPoly p(variables);
    if (c != 0) p.terms[e] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && total_degree(terms.begin()->first) == 0;
}

Rat MultiPoly::constant_term() const {
    auto it = terms.find(Exps(vars.size(), 0));
    return it == terms.end() ? Rat(0) : it->second;
}

int MultiPoly::degree() const {
    int d = -1;
    for (auto& [e, c] : terms) d = std::max(d, total_degree(e));
    return d;
}

int MultiPoly::order() const {
    int d = INT_MAX;
    for (auto& [e, c] : terms) d = std::min(d, total_degree(e));
    return d;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("unknown variable: " + name);
    return int(it - vars.begin());
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::uses_var(int var) const {
    for (auto& [e, c] : terms)
        if (e[var] > 0) return true;
    return false;
}

void MultiPoly::set(const Exps& e, const Rat& c) {
    if (c == 0)
        terms.erase(e);
    else
        terms[e] = c;
}

Rat MultiPoly::coeff(const Exps& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars);
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (vars != o.vars) throw std::logic_error("MultiPoly: ring mismatch");
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms) {
        auto [it, fresh] = r.terms.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars != o.vars) throw std::logic_error("MultiPoly: ring mismatch");
    MultiPoly r(vars);
    for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms) {
            Exps e = monomial_mul(e1, e2);
            auto [it, fresh] = r.terms.try_emplace(e, c1 * c2);
            if (!fresh) {
                it->second += c1 * c2;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r(vars);
    if (c == 0) return r;
    for (auto& [e, k] : terms) r.terms[e] = k * c;
    return r;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    MultiPoly r = constant(vars, 1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    int i = var_index(var);
    MultiPoly r(vars);
    for (auto& [e, c] : terms) {
        if (e[i] == 0) continue;
        Exps d = e;
        d[i] -= 1;
        r.terms[d] = c * e[i];
    }
    return r;
}

MultiPoly MultiPoly::truncated(int max_total_degree) const {
    MultiPoly r(vars);
    for (auto& [e, c] : terms)
        if (total_degree(e) < max_total_degree) r.terms[e] = c;
    return r;
}

MultiPoly MultiPoly::lifted(const std::vector<std::string>& new_vars) const {
    std::vector<int> pos(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars[i]);
        if (it == new_vars.end())
            throw std::invalid_argument("lifted: target ring lacks variable " + vars[i]);
        pos[i] = int(it - new_vars.begin());
    }
    MultiPoly r(new_vars);
    for (auto& [e, c] : terms) {
        Exps ne(new_vars.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) ne[pos[i]] = e[i];
        r.terms[ne] = c;
    }
    return r;
}

MultiPoly MultiPoly::substituted(const std::map<std::string, MultiPoly>& images) const {
    if (images.empty()) return *this;
    const std::vector<std::string>& target = images.begin()->second.vars;
    for (auto& [name, img] : images)
        if (img.vars != target) throw std::logic_error("substituted: image ring mismatch");
    std::vector<MultiPoly> image_of;
    for (auto& v : vars) {
        auto it = images.find(v);
        if (it == images.end())
            throw std::invalid_argument("substituted: no image for variable " + v);
        image_of.push_back(it->second);
    }
    MultiPoly r = MultiPoly::zero(target);
    for (auto& [e, c] : terms) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (size_t i = 0; i < vars.size(); ++i)
            if (e[i] > 0) t = t * image_of[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

Rat MultiPoly::evaluated(const std::map<std::string, Rat>& point) const {
    std::vector<Rat> vals(vars.size(), Rat(0));
    std::vector<char> have(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = point.find(vars[i]);
        if (it != point.end()) {
            vals[i] = it->second;
            have[i] = 1;
        }
    }
    Rat out(0);
    for (auto& [e, c] : terms) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!have[i]) throw std::invalid_argument("evaluated: no value for " + vars[i]);
            for (int j = 0; j < e[i]; ++j) t *= vals[i];
        }
        out += t;
    }
    return out;
}

std::pair<Exps, Rat> MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms.empty()) throw std::logic_error("leading_term of zero");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const std::vector<std::string>& vars;

    explicit Parser(const std::string& text, const std::vector<std::string>& variables)
        : s(text), vars(variables) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    MultiPoly expr() {
        MultiPoly r = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    MultiPoly term() {
        MultiPoly r = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++i;
                r = r * power();
            } else if (std::isalnum((unsigned char)c) || c == '(') {
                r = r * power();  // implicit multiplication
            } else {
                break;
            }
        }
        return r;
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (eat('^')) {
            int k = integer();
            base = base.pow(k);
        }
        return base;
    }

    int integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i) throw std::invalid_argument("expected integer at offset " + std::to_string(start));
        return std::stoi(s.substr(start, i - start));
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++i;
            MultiPoly r = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            std::string num = s.substr(start, i - start);
            // A '/' directly after a number is part of a rational literal.
            if (i < s.size() && s[i] == '/') {
                ++i;
                size_t dstart = i;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
                if (dstart == i) throw std::invalid_argument("bad rational literal");
                num += "/" + s.substr(dstart, i - dstart);
            }
            return MultiPoly::constant(vars, rat_from_string(num));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
            return MultiPoly::variable(vars, s.substr(start, i - start));
        }
        throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                    "' at offset " + std::to_string(i));
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, const std::vector<std::string>& variables) {
    Parser p(text, variables);
    MultiPoly r = p.expr();
    p.skip();
    if (p.i != text.size())
        throw std::invalid_argument("trailing input at offset " + std::to_string(p.i));
    return r;
}

std::string monomial_str(const std::vector<std::string>& vars, const Exps& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::vector<const Exps*> keys;
    for (auto& [e, c] : terms) keys.push_back(&e);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::sort(keys.begin(), keys.end(),
              [&](const Exps* a, const Exps* b) { return drl.greater(*a, *b); });
    std::ostringstream os;
    bool first = true;
    for (const Exps* e : keys) {
        Rat c = terms.at(*e);
        std::string mono = monomial_str(vars, *e);
        bool is_const = total_degree(*e) == 0;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || is_const) {
            os << a.get_str();
            if (!is_const) os << "*";
        }
        if (!is_const) os << mono;
        first = false;
    }
    return os.str();
}

}  // namespace legdef
