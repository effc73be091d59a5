#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <hypat/errors.hpp>

namespace hypat {

enum class FieldKind { Rational, Cyclotomic, PrimeField };

// Identifies the coefficient field: Q, Q(zeta_s), or GF(p).
class FieldDescriptor {
public:
    static FieldDescriptor rational();
    static FieldDescriptor cyclotomic(unsigned s);        // s >= 2
    static FieldDescriptor prime_field(std::uint64_t p);  // p prime (trial division)

    FieldKind kind() const { return kind_; }
    unsigned order() const;        // s, Cyclotomic only
    std::uint64_t modulus() const; // p, PrimeField only
    // Dimension of the field as a Q-vector space (phi(s) for cyclotomics, 1 for Q).
    unsigned degree() const { return degree_; }
    bool characteristic_zero() const { return kind_ != FieldKind::PrimeField; }

    bool operator==(const FieldDescriptor&) const = default;

    std::string to_string() const;                    // "q" | "zeta:S" | "gf:P"
    static FieldDescriptor parse(const std::string&); // same notation

private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::Rational;
    unsigned s_ = 0;
    std::uint64_t p_ = 0;
    unsigned degree_ = 1;
};

unsigned euler_phi(unsigned s);
bool is_prime_u64(std::uint64_t p);
// Coefficients of the s-th cyclotomic polynomial, index = degree (monic, degree phi(s)).
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned s);

// Immutable exact field element. Rationals are reduced fractions; cyclotomic values
// are coordinate vectors in the basis {zeta^0, ..., zeta^{phi(s)-1}} of Q[x]/(Phi_s);
// prime-field values are canonical residues in [0, p).
class Scalar {
public:
    Scalar() : Scalar(zero(FieldDescriptor::rational())) {}

    static Scalar zero(const FieldDescriptor& f);
    static Scalar one(const FieldDescriptor& f);
    static Scalar from_integer(long v, const FieldDescriptor& f);
    // Embeds a/b; over GF(p) computes a * b^{-1} mod p, rejecting b = 0 mod p.
    static Scalar from_rational(const mpq_class& q, const FieldDescriptor& f);
    static Scalar from_coords(std::vector<mpq_class> coords, unsigned s);
    static Scalar from_residue(std::uint64_t r, std::uint64_t p);
    // zeta_s^(j mod s) in Cyclotomic(s).
    static Scalar root_of_unity(unsigned s, long long j);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Accessors for the active representation.
    const mpq_class& rational_value() const;
    const std::vector<mpq_class>& coords() const;
    std::uint64_t residue_value() const;

    std::string to_string() const;               // "a/b" | "[c0, c1, ...]@zeta_s" | "r mod p"
    static Scalar parse(const std::string& text); // field inferred from the shape

private:
    explicit Scalar(FieldDescriptor f) : field_(f) {}
    void canonicalize();

    FieldDescriptor field_;
    mpq_class rat_ = 0;
    std::vector<mpq_class> coords_;
    std::uint64_t res_ = 0;
};

} // namespace hypat
