#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gnc {

/// A field symbol: index of the element in enumeration order, i.e. the
/// base-p integer whose digits are the polynomial-basis coefficients
/// (constant term least significant).
using Symbol = std::uint16_t;

inline constexpr std::size_t kDefaultMaxFieldSize = 256;
inline constexpr std::size_t kHardMaxFieldSize = 1024;

/// User-facing description of GF(p^k). An empty modulus selects the
/// least monic irreducible polynomial of degree k (smallest integer
/// encoding of its lower coefficients).
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::vector<std::uint32_t> modulus;  // constant term first, length k + 1, monic
};

/// Exact arithmetic in GF(p^k) backed by full operation tables.
///
/// Copies share the tables; a Field is immutable after construction and
/// safe to use from several threads.
class Field {
public:
    explicit Field(const FieldSpec& spec, std::size_t max_size = kDefaultMaxFieldSize);

    /// Prime field GF(p).
    static Field prime(std::uint32_t p) { return Field(FieldSpec{p, 1, {}}); }

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::size_t size() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;
    FieldSpec spec() const;

    Symbol add(Symbol a, Symbol b) const noexcept { return add_[idx(a, b)]; }
    Symbol sub(Symbol a, Symbol b) const noexcept { return add_[idx(a, neg_[b])]; }
    Symbol neg(Symbol a) const noexcept { return neg_[a]; }
    Symbol mul(Symbol a, Symbol b) const noexcept { return mul_[idx(a, b)]; }
    /// Throws DivisionByZeroError for a == 0.
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    bool contains(std::uint64_t value) const noexcept { return value < size(); }

    std::vector<std::uint32_t> coefficients(Symbol a) const;
    Symbol from_coefficients(std::span<const std::uint32_t> coeffs) const;

    /// "x^2+x+1"-style rendering of the polynomial behind a symbol.
    std::string polynomial_name(Symbol a) const;
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    std::size_t idx(Symbol a, Symbol b) const noexcept { return std::size_t{a} * q_ + b; }

    std::uint32_t p_ = 2;
    std::uint32_t k_ = 1;
    std::size_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    struct Tables {
        std::vector<Symbol> add, mul, neg, inv;
    };
    // Shared between copies; the raw pointers below point into it.
    std::shared_ptr<const Tables> tables_;
    const Symbol* add_ = nullptr;
    const Symbol* mul_ = nullptr;
    const Symbol* neg_ = nullptr;
    const Symbol* inv_ = nullptr;
};

/// An element tagged with the field it lives in.
class FieldElem {
public:
    FieldElem(Field field, Symbol value);

    const Field& field() const noexcept { return field_; }
    Symbol value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coefficients(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Symbol value_;
};

FieldElem ff_add(const FieldElem& a, const FieldElem& b);
FieldElem ff_mul(const FieldElem& a, const FieldElem& b);
FieldElem ff_inv(const FieldElem& a);

/// All q elements, zero first, in coefficient-lexicographic order.
std::vector<FieldElem> enumerate_field(const Field& field);
std::vector<FieldElem> enumerate_field(const FieldSpec& spec);

bool is_prime(std::uint32_t n) noexcept;

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree 1..deg/2. Coefficients constant term first.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Least monic irreducible polynomial of degree k over GF(p).
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace gnc
