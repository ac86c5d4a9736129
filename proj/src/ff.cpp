#include "powerdec/ff.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace powerdec {

namespace {

constexpr uint32_t kMaxOrder = 1u << 20;
constexpr uint32_t kTableLimit = 1u << 16;

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Small dense polynomials over GF(p), coefficients low degree first.
// Only used at field-construction time; element arithmetic never touches
// these unless the field is too large for log tables.
using Digits = std::vector<uint32_t>;

void strip(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return (uint32_t)r;
}

Digits digits_mul(const Digits& a, const Digits& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    return r;
}

// Remainder of a modulo monic m.
Digits digits_mod(Digits a, const Digits& m, uint32_t p) {
    strip(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - dm;
        if (c) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = (uint64_t)c * m[i] % p;
                uint32_t& t = a[shift + i];
                t = (uint32_t)((t + p - sub) % p);
            }
        }
        a.pop_back();
        strip(a);
        if (a.size() <= dm) break;
    }
    return a;
}

bool is_irreducible(const Digits& m, uint32_t p) {
    const size_t deg = m.size() - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            Digits div(d + 1);
            uint64_t t = v;
            for (size_t i = 0; i < d; ++i) {
                div[i] = (uint32_t)(t % p);
                t /= p;
            }
            div[d] = 1;
            Digits r = digits_mod(m, div, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

Digits first_irreducible(uint32_t p, uint32_t m) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
        Digits cand(m + 1);
        uint64_t t = v;
        for (uint32_t i = 0; i < m; ++i) {
            cand[i] = (uint32_t)(t % p);
            t /= p;
        }
        cand[m] = 1;
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

uint32_t Field::mul_nocache(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    Digits da(m_), db(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    strip(da);
    strip(db);
    Digits r = digits_mod(digits_mul(da, db, p_), modulus_, p_);
    uint32_t packed = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        if (i < r.size()) packed += r[i] * scale;
        scale *= p_;
    }
    return packed;
}

void Field::build_log_tables() {
    // Deterministic: smallest packed value generating the unit group.
    auto factors = prime_factors(q_ - 1);
    uint32_t gen = 0;
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (uint32_t f : factors) {
            // g^((q-1)/f) by square-and-multiply over mul_nocache
            uint64_t e = (q_ - 1) / f;
            uint32_t r = 1, b = g;
            while (e) {
                if (e & 1) r = mul_nocache(r, b);
                b = mul_nocache(b, b);
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            break;
        }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_nocache(cur, gen);
    }
}

FieldPtr Field::make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = (uint32_t)q;

    if (m == 1) {
        if (!modulus.empty())
            throw std::invalid_argument("prime field takes no modulus");
    } else {
        Digits mod = modulus;
        if (mod.empty()) {
            mod = first_irreducible(p, m);
        } else {
            for (auto& c : mod) c %= p;
            strip(mod);
            if (mod.size() != m + 1)
                throw std::invalid_argument("modulus degree must equal the extension degree");
            if (mod.back() != 1) {
                // normalize to monic
                uint32_t s = pow_mod(mod.back(), p - 2, p);
                for (auto& c : mod) c = (uint32_t)((uint64_t)c * s % p);
            }
            if (!is_irreducible(mod, p))
                throw std::invalid_argument("modulus polynomial is reducible");
        }
        f->modulus_ = std::move(mod);
        if (f->q_ <= kTableLimit) f->build_log_tables();
    }
    return f;
}

FieldElement Field::zero() const { return {this, 0}; }
FieldElement Field::one() const { return {this, 1}; }

FieldElement Field::element(uint32_t canonical) const {
    if (canonical >= q_) throw std::invalid_argument("canonical value out of range");
    return {this, canonical};
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() > m_) throw std::invalid_argument("too many coefficients");
    uint32_t packed = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        if (i < coeffs.size()) {
            if (coeffs[i] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
            packed += coeffs[i] * scale;
        }
        scale *= p_;
    }
    return {this, packed};
}

std::vector<uint32_t> FieldElement::coefficients() const {
    const Field& f = field();
    std::vector<uint32_t> out(f.extension_degree());
    uint32_t v = v_;
    for (auto& c : out) {
        c = v % f.characteristic();
        v /= f.characteristic();
    }
    return out;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

uint32_t Field::neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const {
    if (m_ == 1) return a >= b ? a - b : a + p_ - b;
    return add(a, neg(b));
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (uint32_t)((uint64_t)a * b % p_);
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul_nocache(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (m_ == 1) return pow_mod(a, p_ - 2, p_);
    if (!exp_.empty()) {
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const {
    if (b == 0) throw std::domain_error("division by zero field element");
    if (m_ == 1) return mul(a, inv(b));
    if (a == 0) return 0;
    if (!exp_.empty()) {
        uint32_t s = log_[a] + q_ - 1 - log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul(a, inv(b));
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << p_ << '^' << m_;
    if (m_ > 1) {
        os << "/[";
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ',';
            os << modulus_[i];
        }
        os << ']';
    }
    return os.str();
}

namespace {

// Accepts "x8+x4+1", "x^8+x^4+1", "2x3+x+2" (monomials joined by '+').
Digits parse_monomials(const std::string& s) {
    Digits coeffs;
    size_t pos = 0;
    auto bump = [&](size_t deg, uint32_t c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += c;
    };
    while (pos < s.size()) {
        size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        pos = end + 1;
        if (term.empty()) throw std::invalid_argument("empty term in modulus");
        size_t xp = term.find('x');
        uint32_t coeff = 1;
        size_t deg = 0;
        if (xp == std::string::npos) {
            coeff = (uint32_t)std::stoul(term);
        } else {
            if (xp > 0) coeff = (uint32_t)std::stoul(term.substr(0, xp));
            std::string d = term.substr(xp + 1);
            if (!d.empty() && d[0] == '^') d = d.substr(1);
            deg = d.empty() ? 1 : (size_t)std::stoul(d);
        }
        bump(deg, coeff);
    }
    return coeffs;
}

}  // namespace

FieldPtr Field::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("empty field spec");

    std::string base = s, mod;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        base = s.substr(0, slash);
        mod = s.substr(slash + 1);
    }
    uint32_t p, m = 1;
    if (auto caret = base.find('^'); caret != std::string::npos) {
        p = (uint32_t)std::stoul(base.substr(0, caret));
        m = (uint32_t)std::stoul(base.substr(caret + 1));
    } else {
        p = (uint32_t)std::stoul(base);
    }

    std::vector<uint32_t> coeffs;
    if (!mod.empty()) {
        if (mod.front() == '[') {
            if (mod.back() != ']') throw std::invalid_argument("unterminated coefficient list");
            std::string inner = mod.substr(1, mod.size() - 2);
            std::istringstream is(inner);
            std::string tok;
            while (std::getline(is, tok, ','))
                if (!tok.empty()) coeffs.push_back((uint32_t)std::stoul(tok));
        } else {
            coeffs = parse_monomials(mod);
        }
    }
    return make(p, m, coeffs);
}

}  // namespace powerdec
