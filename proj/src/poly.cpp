#include "gkm/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace gkm {

Mono Mono::var(int k, int power) {
    if (k < 0 || k >= kMaxVars) throw std::out_of_range("variable index out of range");
    Mono m;
    m.e[k] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint8_t>(power);
    return m;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] + o.e[k]);
    r.deg = static_cast<std::uint8_t>(deg + o.deg);
    return r;
}

bool Mono::divides(const Mono& o) const {
    for (int k = 0; k < kMaxVars; ++k)
        if (e[k] > o.e[k]) return false;
    return true;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r;
    for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] - o.e[k]);
    r.deg = static_cast<std::uint8_t>(deg - o.deg);
    return r;
}

std::string t_name(int k) { return "t" + std::to_string(k + 1); }

std::string q_str(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

MultiPoly MultiPoly::constant(const Q& c) {
    MultiPoly p;
    p.add_term(Mono{}, c);
    return p;
}

MultiPoly MultiPoly::var(int k) {
    MultiPoly p;
    p.add_term(Mono::var(k), 1);
    return p;
}

MultiPoly MultiPoly::t_diff(int a, int b) {
    MultiPoly p;
    p.add_term(Mono::var(a - 1), 1);
    p.add_term(Mono::var(b - 1), -1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0);
}

Q MultiPoly::constant_term() const { return coefficient(Mono{}); }

Q MultiPoly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Q(0) : it->second;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg; }

bool MultiPoly::is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.deg == terms_.rbegin()->first.deg;
}

int MultiPoly::max_var() const {
    int r = -1;
    for (auto& [m, c] : terms_)
        for (int k = kMaxVars - 1; k > r; --k)
            if (m.e[k]) {
                r = k;
                break;
            }
    return r;
}

void MultiPoly::add_term(const Mono& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (auto& [a, ca] : terms_)
        for (auto& [b, cb] : o.terms_) r.add_term(a * b, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Q& c) const {
    if (c == 0) return {};
    MultiPoly r = *this;
    for (auto& kv : r.terms_) kv.second *= c;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [m, c] : terms_) {
        if (!(m == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

MultiPoly MultiPoly::substitute(const Perm& u) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        Mono x = m;
        for (int i = 1; i <= u.n(); ++i) x.e[u(i) - 1] = m.e[i - 1];
        r.add_term(x, c);
    }
    return r;
}

MultiPoly MultiPoly::identify(int a, int b) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        Mono x = m;
        x.e[b - 1] = static_cast<std::uint8_t>(x.e[b - 1] + x.e[a - 1]);
        x.e[a - 1] = 0;
        r.add_term(x, c);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& q) const {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& [lm, lc] = *q.terms_.begin();
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms_.begin();
        if (!lm.divides(m)) return std::nullopt;
        MultiPoly step;
        step.add_term(m / lm, c / lc);
        quot += step;
        rem -= step * q;
    }
    return quot;
}

std::optional<MultiPoly> MultiPoly::divide_linear(const MultiPoly& l) const {
    if (l.is_zero()) throw std::domain_error("division by zero linear form");
    if (l.degree() != 1 || !l.is_homogeneous()) throw std::invalid_argument("divide_linear expects a linear form");
    return divide_exact(l);
}

Q MultiPoly::evaluate(const std::vector<Q>& point) const {
    Q s = 0;
    for (auto& [m, c] : terms_) {
        Q v = c;
        for (int k = 0; k < kMaxVars && v != 0; ++k)
            for (int p = 0; p < m.e[k]; ++p) v *= point.at(k);
        s += v;
    }
    return s;
}

MultiPoly MultiPoly::compose_var(int k, const MultiPoly& value) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        Mono rest = m;
        int p = rest.e[k];
        rest.e[k] = 0;
        rest.deg = static_cast<std::uint8_t>(rest.deg - p);
        MultiPoly term;
        term.add_term(rest, c);
        for (int i = 0; i < p; ++i) term = term * value;
        r += term;
    }
    return r;
}

std::string MultiPoly::str(const VarNamer& name) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string mono;
        for (int k = 0; k < kMaxVars; ++k) {
            if (!m.e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += name(k);
            if (m.e[k] > 1) mono += "^" + std::to_string(m.e[k]);
        }
        std::string coef;
        Q a = abs(c);
        if (mono.empty()) coef = q_str(a);
        else if (a != 1) coef = q_str(a) + "*";
        if (c < 0) s += "-";
        else if (!first) s += "+";
        s += coef + mono;
        first = false;
    }
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const { throw std::invalid_argument("cannot parse polynomial: " + s); }

    std::string digits() {
        skip();
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(b, i - b);
    }

    // factor := number | number '/' number | 't' index ['^' int]
    bool factor(Q& coef, Mono& m) {
        skip();
        if (i >= s.size()) return false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = digits();
            if (eat('/')) num += "/" + digits();
            Q v(num);
            v.canonicalize();
            coef *= v;
            return true;
        }
        if (s[i] == 't') {
            ++i;
            std::string idx = digits();
            if (idx.empty()) fail();
            int k = std::stoi(idx) - 1;
            int p = 1;
            if (eat('^')) {
                std::string e = digits();
                if (e.empty()) fail();
                p = std::stoi(e);
            }
            m = m * Mono::var(k, p);
            return true;
        }
        return false;
    }

    MultiPoly run() {
        MultiPoly p;
        skip();
        bool any = false;
        while (i < s.size()) {
            Q sign = 1;
            if (eat('+')) {
            } else if (eat('-')) {
                sign = -1;
            } else if (any) {
                fail();
            }
            Q coef = sign;
            Mono m;
            if (!factor(coef, m)) fail();
            while (eat('*'))
                if (!factor(coef, m)) fail();
            p.add_term(m, coef);
            any = true;
            skip();
        }
        if (!any) fail();
        return p;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& s) {
    Parser ps{s};
    return ps.run();
}

}  // namespace gkm
