#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rankcodes/errors.hpp"

namespace rankcodes {

// An element of F_{q^m} with coefficient vector (c_0,...,c_{m-1}) over the
// basis (1, alpha, ..., alpha^{m-1}) is stored as the canonical integer
// sum c_i * q^i. The encoding totally orders the field, so enumerations and
// witnesses are reproducible. Elements of the embedded base field F_q are
// exactly the values < q.
using Fqm = std::uint32_t;
using Fq = std::uint32_t;

// The tower F_q < F_{q^m} for prime q, with alpha a primitive root of a
// monic degree-m modulus. Multiplication and inversion run on log/antilog
// tables; addition is coefficient-wise (tabulated for small fields).
//
// Immutable after construction and safe to share across threads.
class Field {
   public:
    // Modulus coefficients are constant-term first, length m+1, leading 1.
    // Rejects non-prime q, reducible moduli, moduli whose root is not a
    // multiplicative generator, and q^m beyond the table budget of 2^24.
    Field(unsigned q, unsigned m, std::vector<unsigned> modulus);

    unsigned q() const noexcept { return q_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t order() const noexcept { return size_ - 1; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    // The residue class of x, a generator of the multiplicative group.
    Fqm alpha() const noexcept { return alpha_; }

    Fqm add(Fqm a, Fqm b) const;
    Fqm sub(Fqm a, Fqm b) const;
    Fqm neg(Fqm a) const;
    Fqm mul(Fqm a, Fqm b) const;
    Fqm inv(Fqm a) const;  // division_by_zero on a = 0
    Fqm div(Fqm a, Fqm b) const;
    Fqm pow(Fqm base, std::int64_t exponent) const;

    // a |-> a^(q^s), the s-th power of the Frobenius map; s is reduced
    // mod m, so frobenius(a, m - s) inverts frobenius(a, s).
    Fqm frobenius(Fqm a, unsigned s) const;

    // True iff a lies in the embedded F_q, i.e. a is fixed by Frobenius.
    bool in_base_field(Fqm a) const {
        check(a);
        return a < q_;
    }

    // Base-q digits of the canonical integer: the coefficient vector of a.
    std::vector<Fq> expand(Fqm a) const;
    void expand_into(Fqm a, std::span<Fq> out) const;
    Fqm from_coeffs(std::span<const Fq> coeffs) const;

    // Discrete log of a != 0 with respect to alpha, and its inverse.
    std::uint32_t log(Fqm a) const;
    Fqm antilog(std::uint64_t e) const noexcept { return exp_[e % order_]; }

    bool operator==(const Field& other) const noexcept {
        return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

   private:
    void check(Fqm a) const {
        if (a >= size_) fail(errc::field_mismatch, "element value " + std::to_string(a) + " out of range for this field");
    }

    unsigned q_, m_;
    std::uint32_t size_, order_;
    Fqm alpha_;
    std::vector<unsigned> modulus_;
    std::vector<Fqm> exp_;            // exp_[i] = alpha^i, i in [0, q^m-1)
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
    std::vector<std::uint32_t> frob_exp_;  // q^s mod (q^m - 1) for s in [0, m)
    std::vector<Fqm> neg_table_;
    std::vector<Fqm> add_table_;  // size_ x size_, only for small fields
    std::vector<std::uint32_t> digits_;  // size_ x m digit cache, small fields only
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned q, unsigned m, std::vector<unsigned> modulus);

// Field with the default modulus for (q, m): the monic primitive polynomial
// whose coefficient vector has the smallest canonical integer.
FieldPtr make_field(unsigned q, unsigned m);

std::vector<unsigned> find_primitive_modulus(unsigned q, unsigned m);

bool is_prime(unsigned n) noexcept;

// Euler's criterion in F_q: true iff gamma is a nonzero square.
// q = 2 is rejected (every element is a square; "non-residue" is vacuous).
bool is_quadratic_residue_base(Fq gamma, unsigned q);

// Same question asked inside F_{q^m}; informational for the construction
// validators.
bool is_quadratic_residue_ext(const Field& field, Fqm gamma);

}  // namespace rankcodes
