#include "rankcodes/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rankcodes {
namespace {

constexpr std::uint64_t kTableBudget = std::uint64_t{1} << 24;
constexpr std::uint32_t kAddTableMaxField = 1024;   // dense q^m x q^m add table
constexpr std::uint32_t kDigitCacheMaxField = 65536;

// Coefficient vectors are constant-term first, like the modulus.
using Poly = std::vector<unsigned>;

Fqm encode(const Poly& coeffs, unsigned q) {
    Fqm value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * q + coeffs[i];
    return value;
}

// a(x) <- x * a(x) mod f(x), for monic f of degree m and deg a < m.
void mul_by_x(Poly& a, const std::vector<unsigned>& modulus, unsigned q) {
    const unsigned m = static_cast<unsigned>(a.size());
    const unsigned carry = a[m - 1];
    for (unsigned i = m; i-- > 1;) a[i] = a[i - 1];
    a[0] = 0;
    if (carry == 0) return;
    for (unsigned i = 0; i < m; ++i) {
        // x^m = -(c_{m-1} x^{m-1} + ... + c_0) because f is monic.
        a[i] = (a[i] + carry * (q - modulus[i])) % q;
    }
}

// Remainder of a(x) modulo monic b(x), both constant-term first.
Poly poly_mod(Poly a, const Poly& b, unsigned q) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = (a[shift + i] + lead * (q - b[i])) % q;
            }
        }
        a.pop_back();
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool is_zero_poly(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, unsigned q) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Candidate divisors: x^d + (digits of v), v over all q^d choices.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly divisor(d + 1, 0);
            std::uint64_t rest = v;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<unsigned>(rest % q);
                rest /= q;
            }
            divisor[d] = 1;
            if (is_zero_poly(poly_mod(f, divisor, q))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field::Field(unsigned q, unsigned m, std::vector<unsigned> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q_)) fail(errc::not_prime, "q = " + std::to_string(q_) + " is not prime");
    if (m_ < 1) fail(errc::bad_input, "extension degree m must be at least 1");
    if (modulus_.size() != m_ + 1 || modulus_.back() != 1) {
        fail(errc::bad_input, "modulus must be monic of degree m, constant term first");
    }
    for (unsigned c : modulus_) {
        if (c >= q_) fail(errc::bad_input, "modulus coefficient " + std::to_string(c) + " not reduced mod q");
    }

    std::uint64_t size = 1;
    for (unsigned i = 0; i < m_; ++i) {
        size *= q_;
        if (size > kTableBudget) {
            fail(errc::table_budget_exceeded,
                 "q^m exceeds table budget 2^24 for q = " + std::to_string(q_) + ", m = " + std::to_string(m_));
        }
    }
    size_ = static_cast<std::uint32_t>(size);
    order_ = size_ - 1;
    alpha_ = m_ >= 2 ? q_ : (q_ - modulus_[0]) % q_;

    // Walk x, x^2, ... mod f. Reaching q^m - 1 distinct nonzero powers that
    // close back to 1 certifies both irreducibility and primitivity; any
    // earlier repeat or a zero means the walk lives in a smaller group (or a
    // non-field quotient), and trial division decides which error applies.
    exp_.assign(order_, 0);
    log_.assign(size_, 0);
    std::vector<bool> seen(size_, false);
    Poly power(m_, 0);
    power[0] = 1;
    bool anomaly = order_ == 0;
    for (std::uint32_t i = 0; i < order_ && !anomaly; ++i) {
        const Fqm value = encode(power, q_);
        if (value == 0 || seen[value]) {
            anomaly = true;
            break;
        }
        seen[value] = true;
        exp_[i] = value;
        log_[value] = i;
        mul_by_x(power, modulus_, q_);
    }
    if (!anomaly) {
        // The walk visited every nonzero element; it is primitive iff the
        // next step returns to 1.
        anomaly = encode(power, q_) != 1;
    }
    if (anomaly) {
        if (poly_irreducible(modulus_, q_)) {
            fail(errc::not_primitive, "modulus is irreducible but x does not generate the multiplicative group");
        }
        fail(errc::not_irreducible, "modulus is reducible over F_q");
    }

    frob_exp_.assign(m_, 1);
    for (unsigned s = 1; s < m_; ++s) {
        frob_exp_[s] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(frob_exp_[s - 1]) * q_) % order_);
    }

    neg_table_.assign(size_, 0);
    for (std::uint32_t v = 0; v < size_; ++v) {
        Fqm out = 0;
        std::uint32_t rest = v;
        std::uint32_t place = 1;
        for (unsigned i = 0; i < m_; ++i) {
            const std::uint32_t digit = rest % q_;
            rest /= q_;
            if (digit != 0) out += (q_ - digit) * place;
            place *= q_;
        }
        neg_table_[v] = out;
    }

    if (size_ <= kDigitCacheMaxField) {
        digits_.assign(static_cast<std::size_t>(size_) * m_, 0);
        for (std::uint32_t v = 0; v < size_; ++v) {
            std::uint32_t rest = v;
            for (unsigned i = 0; i < m_; ++i) {
                digits_[static_cast<std::size_t>(v) * m_ + i] = rest % q_;
                rest /= q_;
            }
        }
    }
    if (q_ != 2 && size_ <= kAddTableMaxField) {
        add_table_.assign(static_cast<std::size_t>(size_) * size_, 0);
        for (std::uint32_t a = 0; a < size_; ++a) {
            for (std::uint32_t b = 0; b <= a; ++b) {
                Fqm out = 0;
                std::uint32_t ra = a, rb = b, place = 1;
                for (unsigned i = 0; i < m_; ++i) {
                    out += ((ra + rb) % q_) * place;
                    ra /= q_;
                    rb /= q_;
                    place *= q_;
                }
                add_table_[static_cast<std::size_t>(a) * size_ + b] = out;
                add_table_[static_cast<std::size_t>(b) * size_ + a] = out;
            }
        }
    }
}

Fqm Field::add(Fqm a, Fqm b) const {
    check(a);
    check(b);
    if (q_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
    Fqm out = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a + b) % q_) * place;
        a /= q_;
        b /= q_;
        place *= q_;
    }
    return out;
}

Fqm Field::neg(Fqm a) const {
    check(a);
    return neg_table_[a];
}

Fqm Field::sub(Fqm a, Fqm b) const { return add(a, neg(b)); }

Fqm Field::mul(Fqm a, Fqm b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= order_) e -= order_;
    return exp_[e];
}

Fqm Field::inv(Fqm a) const {
    check(a);
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    const std::uint32_t e = log_[a];
    return exp_[e == 0 ? 0 : order_ - e];
}

Fqm Field::div(Fqm a, Fqm b) const { return mul(a, inv(b)); }

Fqm Field::pow(Fqm base, std::int64_t exponent) const {
    check(base);
    if (base == 0) {
        if (exponent > 0) return 0;
        if (exponent == 0) return 1;
        fail(errc::division_by_zero, "negative power of zero");
    }
    std::int64_t e = exponent % order_;
    if (e < 0) e += order_;
    return exp_[(static_cast<std::uint64_t>(log_[base]) * static_cast<std::uint64_t>(e)) % order_];
}

Fqm Field::frobenius(Fqm a, unsigned s) const {
    check(a);
    if (a == 0) return 0;
    s %= m_;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * frob_exp_[s]) % order_];
}

std::vector<Fq> Field::expand(Fqm a) const {
    std::vector<Fq> out(m_);
    expand_into(a, out);
    return out;
}

void Field::expand_into(Fqm a, std::span<Fq> out) const {
    check(a);
    if (out.size() != m_) fail(errc::dimension_mismatch, "expand buffer must have length m");
    if (!digits_.empty()) {
        const std::uint32_t* row = digits_.data() + static_cast<std::size_t>(a) * m_;
        std::copy(row, row + m_, out.begin());
        return;
    }
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = a % q_;
        a /= q_;
    }
}

Fqm Field::from_coeffs(std::span<const Fq> coeffs) const {
    if (coeffs.size() != m_) fail(errc::dimension_mismatch, "coefficient vector must have length m");
    Fqm value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= q_) fail(errc::bad_input, "coefficient not reduced mod q");
        value = value * q_ + coeffs[i];
    }
    return value;
}

std::uint32_t Field::log(Fqm a) const {
    check(a);
    if (a == 0) fail(errc::division_by_zero, "discrete log of zero");
    return log_[a];
}

FieldPtr make_field(unsigned q, unsigned m, std::vector<unsigned> modulus) {
    return std::make_shared<const Field>(q, m, std::move(modulus));
}

FieldPtr make_field(unsigned q, unsigned m) {
    return make_field(q, m, find_primitive_modulus(q, m));
}

std::vector<unsigned> find_primitive_modulus(unsigned q, unsigned m) {
    if (!is_prime(q)) fail(errc::not_prime, "q = " + std::to_string(q) + " is not prime");
    if (m < 1) fail(errc::bad_input, "extension degree m must be at least 1");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) {
        count *= q;
        if (count > kTableBudget) fail(errc::table_budget_exceeded, "q^m exceeds table budget 2^24");
    }
    // Scan lower-coefficient vectors by canonical integer value, so the
    // chosen modulus is the deterministic minimum.
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<unsigned> modulus(m + 1, 0);
        std::uint64_t rest = v;
        for (unsigned i = 0; i < m; ++i) {
            modulus[i] = static_cast<unsigned>(rest % q);
            rest /= q;
        }
        modulus[m] = 1;
        try {
            Field probe(q, m, modulus);
            return modulus;
        } catch (const Error& e) {
            if (e.code() != errc::not_irreducible && e.code() != errc::not_primitive) throw;
        }
    }
    fail(errc::not_primitive, "no primitive modulus found");  // unreachable for prime q
}

bool is_quadratic_residue_base(Fq gamma, unsigned q) {
    if (!is_prime(q)) fail(errc::not_prime, "q = " + std::to_string(q) + " is not prime");
    if (q == 2) fail(errc::even_characteristic, "quadratic residues are trivial in characteristic 2");
    gamma %= q;
    if (gamma == 0) fail(errc::zero_input, "quadratic residue test on zero");
    // Euler's criterion: gamma^((q-1)/2) mod q.
    std::uint64_t result = 1, base = gamma, e = (q - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return result == 1;
}

bool is_quadratic_residue_ext(const Field& field, Fqm gamma) {
    if (gamma == 0) fail(errc::zero_input, "quadratic residue test on zero");
    if (field.q() == 2) fail(errc::even_characteristic, "quadratic residues are trivial in characteristic 2");
    return field.log(gamma) % 2 == 0;
}

}  // namespace rankcodes
