#include "gkm/perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkm {

Perm::Perm(int n) : n_(n) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("permutation size out of range");
    for (int i = 0; i < n; ++i) a_[i] = static_cast<std::uint8_t>(i + 1);
}

Perm::Perm(const std::vector<int>& images) : n_(static_cast<int>(images.size())) {
    if (n_ > kMaxN) throw std::invalid_argument("permutation size out of range");
    std::vector<bool> seen(n_ + 1, false);
    for (int i = 0; i < n_; ++i) {
        int v = images[i];
        if (v < 1 || v > n_ || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
        a_[i] = static_cast<std::uint8_t>(v);
    }
}

Perm Perm::longest(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w.a_[i] = static_cast<std::uint8_t>(n - i);
    return w;
}

Perm Perm::simple(int n, int i) { return transposition(n, i, i + 1); }

Perm Perm::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("transposition index out of range");
    Perm w(n);
    std::swap(w.a_[a - 1], w.a_[b - 1]);
    return w;
}

Perm Perm::parse(const std::string& s, int n) {
    std::vector<int> v;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation string: " + s);
            v.push_back(ch - '0');
        }
    }
    if (n && static_cast<int>(v.size()) != n) throw std::invalid_argument("permutation has wrong size: " + s);
    return Perm(v);
}

std::vector<int> Perm::images() const { return {a_.begin(), a_.begin() + n_}; }

Perm Perm::inverse() const {
    Perm r(n_);
    for (int i = 0; i < n_; ++i) r.a_[a_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
}

Perm Perm::operator*(const Perm& v) const {
    if (n_ != v.n_) throw std::invalid_argument("compose: size mismatch");
    Perm r(n_);
    for (int i = 0; i < n_; ++i) r.a_[i] = a_[v.a_[i] - 1];
    return r;
}

Perm compose(const Perm& u, const Perm& v) { return u * v; }

Perm Perm::left_simple(int i) const {
    Perm r = *this;
    for (int k = 0; k < n_; ++k) {
        if (r.a_[k] == i) r.a_[k] = static_cast<std::uint8_t>(i + 1);
        else if (r.a_[k] == i + 1) r.a_[k] = static_cast<std::uint8_t>(i);
    }
    return r;
}

Perm Perm::right_simple(int j) const { return swap_positions(j, j + 1); }

Perm Perm::swap_positions(int j, int i) const {
    Perm r = *this;
    std::swap(r.a_[j - 1], r.a_[i - 1]);
    return r;
}

std::set<int> Perm::descents() const {
    std::set<int> d;
    for (int i = 1; i < n_; ++i)
        if (a_[i - 1] > a_[i]) d.insert(i);
    return d;
}

int Perm::length() const {
    int c = 0;
    for (int j = 0; j < n_; ++j)
        for (int i = j + 1; i < n_; ++i)
            if (a_[j] > a_[i]) ++c;
    return c;
}

std::vector<int> Perm::reduced_word() const {
    // bubble sort: w s_{j1} ... s_{jm} = e, so w = s_{jm} ... s_{j1}
    Perm u = *this;
    std::vector<int> js;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 1; j < n_; ++j) {
            if (u.a_[j - 1] > u.a_[j]) {
                std::swap(u.a_[j - 1], u.a_[j]);
                js.push_back(j);
                moved = true;
            }
        }
    }
    std::reverse(js.begin(), js.end());
    return js;
}

std::vector<int> Perm::prefix_sorted(int j) const {
    std::vector<int> r(a_.begin(), a_.begin() + j);
    std::sort(r.begin(), r.end());
    return r;
}

std::string Perm::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (n_ > 9) {
            if (i) s += ',';
            s += std::to_string(a_[i]);
        } else {
            s += static_cast<char>('0' + a_[i]);
        }
    }
    return s;
}

bool Perm::operator==(const Perm& o) const {
    return n_ == o.n_ && std::equal(a_.begin(), a_.begin() + n_, o.a_.begin());
}

bool Perm::operator<(const Perm& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(a_.begin(), a_.begin() + n_, o.a_.begin(), o.a_.begin() + n_);
}

std::size_t Perm::hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (int i = 0; i < n_; ++i) h = h * 31 + a_[i];
    return h;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

const std::vector<Perm>& all_perms(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Perm>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<Perm>>();
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        do slot->emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
    }
    return *slot;
}

int perm_rank(const Perm& w) {
    int n = w.n();
    int r = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller = 0;
        for (int k = i + 1; k <= n; ++k)
            if (w(k) < w(i)) ++smaller;
        r = r * (n - i + 1) + smaller;
    }
    return r;
}

namespace {

std::set<int> right_descent_set(const Perm& w) { return w.descents(); }

}  // namespace

bool right_descent_identity_check(const Perm& v, const Perm& w) {
    int n = w.n();
    std::set<int> lhs = right_descent_set(v * w);
    std::set<int> conj;
    Perm wi = w.inverse();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (v(i) > v(j)) {
                // w^-1 s_{i,j} w = s_{w^-1(i), w^-1(j)}
                int a = wi(i), b = wi(j);
                if (std::abs(a - b) == 1) conj.insert(std::min(a, b));
            }
    std::set<int> rhs;
    std::set<int> dw = right_descent_set(w);
    std::set_symmetric_difference(dw.begin(), dw.end(), conj.begin(), conj.end(),
                                  std::inserter(rhs, rhs.begin()));
    return lhs == rhs;
}

bool bruhat_leq(const Perm& u, const Perm& v) {
    // tableau criterion
    for (int j = 1; j < u.n(); ++j) {
        auto a = u.prefix_sorted(j);
        auto b = v.prefix_sorted(j);
        for (int k = 0; k < j; ++k)
            if (a[k] > b[k]) return false;
    }
    return true;
}

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::set<int> Composition::partial_sums() const {
    std::set<int> s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) s.insert(acc += parts[i]);
    return s;
}

Composition Composition::from_set(int n, const std::set<int>& s) {
    Composition c;
    int prev = 0;
    for (int d : s) {
        c.parts.push_back(d - prev);
        prev = d;
    }
    c.parts.push_back(n - prev);
    return c;
}

std::string Composition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1) s.insert(i);
        out.push_back(Composition::from_set(n, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions(int n, int nparts) {
    std::vector<Composition> out;
    for (auto& c : compositions(n))
        if (static_cast<int>(c.parts.size()) == nparts) out.push_back(c);
    return out;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

void gen_subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x <= n; ++x) {
        cur.push_back(x);
        gen_subsets(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_subsets(n, k, 1, cur, out);
    return out;
}

}  // namespace gkm
