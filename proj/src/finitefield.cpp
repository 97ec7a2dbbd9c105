#include "mcount/finitefield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mcount {

namespace {

using Poly = std::vector<std::uint8_t>;  // ascending coefficients over F_p

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % p);
        }
    }
    trim(r);
    return r;
}

/// Remainder of f modulo the monic polynomial m.
Poly poly_mod(Poly f, const Poly& m, int p) {
    trim(f);
    const int dm = deg(m);
    while (deg(f) >= dm) {
        const int shift = deg(f) - dm;
        const int c = f.back();
        for (int i = 0; i <= dm; ++i) {
            int v = f[shift + i] - c * m[i];
            v %= p;
            if (v < 0) v += p;
            f[shift + i] = static_cast<std::uint8_t>(v);
        }
        trim(f);
    }
    return f;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // Make b monic before reducing.
        Poly bm = b;
        int lead = bm.back();
        int lead_inv = 1;
        for (int i = 1; i < p; ++i) {
            if (lead * i % p == 1) lead_inv = i;
        }
        for (auto& c : bm) c = static_cast<std::uint8_t>(c * lead_inv % p);
        Poly r = poly_mod(a, bm, p);
        a = b;
        b = r;
        trim(b);
    }
    return a;
}

/// x^{p^e} modulo the monic polynomial m, by repeated p-th powering.
Poly x_power_frobenius(const Poly& m, int p, int e) {
    Poly x = {0, 1};
    Poly acc = poly_mod(x, m, p);
    for (int i = 0; i < e; ++i) {
        // acc = acc^p mod m via square-and-multiply on exponent p.
        Poly result = {1};
        Poly base = acc;
        int exp = p;
        while (exp > 0) {
            if (exp & 1) result = poly_mod(poly_mul(result, base, p), m, p);
            base = poly_mod(poly_mul(base, base, p), m, p);
            exp >>= 1;
        }
        acc = result;
    }
    return acc;
}

bool is_irreducible(const Poly& m, int p) {
    const int k = deg(m);
    // x^{p^k} == x (mod m)
    Poly fr = x_power_frobenius(m, p, k);
    Poly x = {0, 1};
    if (poly_mod(fr, m, p) != poly_mod(x, m, p)) return false;
    // gcd(x^{p^{k/l}} - x, m) constant for each prime l | k.
    for (int l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d) {
            if (l % d == 0) prime = false;
        }
        if (!prime) continue;
        Poly g = x_power_frobenius(m, p, k / l);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        int v = (g[1] - 1) % p;
        if (v < 0) v += p;
        g[1] = static_cast<std::uint8_t>(v);
        trim(g);
        Poly gc = poly_gcd(m, g, p);
        if (deg(gc) > 0) return false;
    }
    return true;
}

std::mutex& spec_cache_mutex() { static std::mutex m; return m; }
std::mutex& table_cache_mutex() { static std::mutex m; return m; }
std::mutex& gen_cache_mutex() { static std::mutex m; return m; }
std::mutex& embed_cache_mutex() { static std::mutex m; return m; }

}  // namespace

FieldSpec::FieldSpec(int p, int k) : p_(p), k_(k) {
    if (k < 1 || k > 12) throw std::invalid_argument("extension degree out of range");
    order_ = 1;
    for (int i = 0; i < k; ++i) {
        order_ *= p;
        if (order_ > (1 << 24)) throw std::invalid_argument("field too large");
    }
    // Deterministic modulus: lexicographically smallest monic irreducible,
    // scanning lower-coefficient tuples in base-p numeric order.
    for (std::int64_t code = 0; code < order_; ++code) {
        Poly m(k + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < k; ++i) {
            m[i] = static_cast<std::uint8_t>(c % p);
            c /= p;
        }
        m[k] = 1;
        if (k == 1 || is_irreducible(m, p)) {
            modulus_ = m;
            return;
        }
    }
    throw std::logic_error("no irreducible modulus found");
}

const FieldSpec& FieldSpec::get(int p, int k) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("unsupported prime");
    std::lock_guard<std::mutex> lock(spec_cache_mutex());
    static std::map<std::pair<int, int>, FieldSpec> cache;
    auto it = cache.find({p, k});
    if (it == cache.end()) {
        it = cache.emplace(std::make_pair(p, k), FieldSpec(p, k)).first;
    }
    return it->second;
}

FieldElement::FieldElement(const FieldSpec& spec, std::vector<std::uint8_t> coords)
    : spec_(&spec), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != spec.k()) {
        throw std::invalid_argument("coordinate length mismatch");
    }
    for (auto c : coords_) {
        if (c >= spec.p()) throw std::invalid_argument("coordinate out of range");
    }
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
    return FieldElement(spec, std::vector<std::uint8_t>(spec.k(), 0));
}

FieldElement FieldElement::one(const FieldSpec& spec) {
    std::vector<std::uint8_t> c(spec.k(), 0);
    c[0] = 1;
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::from_index(const FieldSpec& spec, std::int64_t i) {
    std::vector<std::uint8_t> c(spec.k(), 0);
    for (int j = 0; j < spec.k(); ++j) {
        c[j] = static_cast<std::uint8_t>(i % spec.p());
        i /= spec.p();
    }
    if (i != 0) throw std::invalid_argument("index out of range");
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::parse(const std::string& s) {
    // Format: "p^k:[c0,c1,...]"
    const auto caret = s.find('^');
    const auto colon = s.find(':');
    if (caret == std::string::npos || colon == std::string::npos || colon < caret) {
        throw std::invalid_argument("bad field element literal: " + s);
    }
    const int p = std::stoi(s.substr(0, caret));
    const int k = std::stoi(s.substr(caret + 1, colon - caret - 1));
    const auto open = s.find('[', colon);
    const auto close = s.find(']', colon);
    if (open == std::string::npos || close == std::string::npos) {
        throw std::invalid_argument("bad field element literal: " + s);
    }
    std::vector<std::uint8_t> coords;
    std::stringstream body(s.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(body, tok, ',')) {
        if (!tok.empty()) coords.push_back(static_cast<std::uint8_t>(std::stoi(tok)));
    }
    return FieldElement(FieldSpec::get(p, k), std::move(coords));
}

std::int64_t FieldElement::index() const {
    std::int64_t i = 0;
    for (int j = spec_->k() - 1; j >= 0; --j) i = i * spec_->p() + coords_[j];
    return i;
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << spec_->p() << '^' << spec_->k() << ":[";
    for (int j = 0; j < spec_->k(); ++j) {
        if (j) os << ',';
        os << static_cast<int>(coords_[j]);
    }
    os << ']';
    return os.str();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("mixed field specs");
    std::vector<std::uint8_t> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<std::uint8_t>((coords_[i] + o.coords_[i]) % spec_->p());
    }
    return FieldElement(*spec_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<std::uint8_t> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<std::uint8_t>((spec_->p() - coords_[i]) % spec_->p());
    }
    return FieldElement(*spec_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("mixed field specs");
    const int p = spec_->p();
    Poly prod = poly_mul(Poly(coords_.begin(), coords_.end()),
                         Poly(o.coords_.begin(), o.coords_.end()), p);
    prod = poly_mod(prod, spec_->modulus(), p);
    prod.resize(spec_->k(), 0);
    return FieldElement(*spec_, std::vector<std::uint8_t>(prod.begin(), prod.end()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    return pow(spec_->order() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(*spec_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return spec_ == o.spec_ && coords_ == o.coords_;
}

FieldElement frobenius(const FieldElement& a, int base_power) {
    std::int64_t q = 1;
    for (int i = 0; i < base_power; ++i) q *= a.spec().p();
    return a.pow(q);
}

int element_degree(const FieldElement& a, int base_power) {
    FieldElement b = a;
    for (int d = 1; d <= a.spec().k(); ++d) {
        b = frobenius(b, base_power);
        if (b == a) return d;
    }
    throw std::logic_error("Frobenius orbit did not close");
}

std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.order());
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        out.push_back(FieldElement::from_index(spec, i));
    }
    return out;
}

FieldElement embed(const FieldElement& a, const FieldSpec& target) {
    const FieldSpec& src = a.spec();
    if (src.p() != target.p()) throw std::invalid_argument("different characteristic");
    if (target.k() % src.k() != 0) {
        throw std::invalid_argument("source degree does not divide target degree");
    }
    if (src == target) return a;

    // Cached image of the source generator x: the lexicographically smallest
    // root of the source modulus in the target field.
    static std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, FieldElement>
        gen_cache;
    FieldElement gen = FieldElement::zero(target);
    {
        std::lock_guard<std::mutex> lock(gen_cache_mutex());
        const auto key = std::make_pair(std::make_pair(src.p(), src.k()),
                                        std::make_pair(target.p(), target.k()));
        auto it = gen_cache.find(key);
        if (it == gen_cache.end()) {
            bool found = false;
            for (std::int64_t i = 0; i < target.order() && !found; ++i) {
                FieldElement cand = FieldElement::from_index(target, i);
                // Evaluate the source modulus at cand.
                FieldElement acc = FieldElement::zero(target);
                FieldElement pw = FieldElement::one(target);
                for (size_t d = 0; d < src.modulus().size(); ++d) {
                    for (int rep = 0; rep < src.modulus()[d]; ++rep) acc = acc + pw;
                    pw = pw * cand;
                }
                if (acc.is_zero()) {
                    it = gen_cache.emplace(key, cand).first;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("no root of source modulus in target");
        }
        gen = it->second;
    }

    FieldElement acc = FieldElement::zero(target);
    FieldElement pw = FieldElement::one(target);
    for (int d = 0; d < src.k(); ++d) {
        for (int rep = 0; rep < a.coords()[d]; ++rep) acc = acc + pw;
        pw = pw * gen;
    }
    return acc;
}

TableField::TableField(const FieldSpec& spec) : spec_(&spec) {
    n_ = static_cast<int>(spec.order());
    if (n_ > 2048) throw std::invalid_argument("field too large for tables");
    std::vector<FieldElement> elems = enumerate_field(spec);
    add_.resize(static_cast<size_t>(n_) * n_);
    mul_.resize(static_cast<size_t>(n_) * n_);
    neg_.resize(n_);
    inv_.resize(n_);
    frob_.resize(n_);
    one_ = static_cast<std::uint16_t>(FieldElement::one(spec).index());
    for (int a = 0; a < n_; ++a) {
        neg_[a] = static_cast<std::uint16_t>((-elems[a]).index());
        inv_[a] = a == 0 ? 0 : static_cast<std::uint16_t>(elems[a].inverse().index());
        frob_[a] = static_cast<std::uint16_t>(elems[a].pow(spec.p()).index());
        for (int b = 0; b < n_; ++b) {
            add_[static_cast<size_t>(a) * n_ + b] =
                static_cast<std::uint16_t>((elems[a] + elems[b]).index());
            mul_[static_cast<size_t>(a) * n_ + b] =
                static_cast<std::uint16_t>((elems[a] * elems[b]).index());
        }
    }
}

const TableField& TableField::get(int p, int k) {
    const FieldSpec& spec = FieldSpec::get(p, k);  // resolve before locking
    std::lock_guard<std::mutex> lock(table_cache_mutex());
    static std::map<std::pair<int, int>, TableField> cache;
    auto it = cache.find({p, k});
    if (it == cache.end()) {
        it = cache.emplace(std::make_pair(p, k), TableField(spec)).first;
    }
    return it->second;
}

const std::vector<std::uint16_t>& embedding_table(const FieldSpec& src,
                                                  const FieldSpec& dst) {
    std::lock_guard<std::mutex> lock(embed_cache_mutex());
    static std::map<std::pair<std::pair<int, int>, std::pair<int, int>>,
                    std::vector<std::uint16_t>>
        cache;
    const auto key = std::make_pair(std::make_pair(src.p(), src.k()),
                                    std::make_pair(dst.p(), dst.k()));
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<std::uint16_t> table(src.order());
        for (std::int64_t i = 0; i < src.order(); ++i) {
            table[i] = static_cast<std::uint16_t>(
                embed(FieldElement::from_index(src, i), dst).index());
        }
        it = cache.emplace(key, std::move(table)).first;
    }
    return it->second;
}

}  // namespace mcount
