#include "gnc/field.hpp"

#include <algorithm>
#include <sstream>

#include "gnc/errors.hpp"

namespace gnc {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - (lead * b[i]) % p)) % p;
        }
        trim(a);
    }
    return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of n.
Poly monic_from_index(std::uint64_t n, std::uint32_t d, std::uint32_t p) {
    Poly g(d + 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(n % p);
        n /= p;
    }
    g[d] = 1;
    return g;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const auto deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg == 1) return true;
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t n = 0; n < count; ++n) {
            if (poly_mod(f, monic_from_index(n, d, p), p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw SpecificationError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw SpecificationError("extension degree must be at least 1");
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t n = 0; n < count; ++n) {
        Poly g = monic_from_index(n, k, p);
        if (is_irreducible(p, g)) return g;
    }
    throw SpecificationError("no irreducible polynomial found");  // unreachable for valid p, k
}

Field::Field(const FieldSpec& spec, std::size_t max_size) : p_(spec.p), k_(spec.k) {
    if (!is_prime(p_)) throw SpecificationError("characteristic " + std::to_string(p_) + " is not prime");
    if (k_ == 0) throw SpecificationError("extension degree must be at least 1");
    if (max_size > kHardMaxFieldSize) max_size = kHardMaxFieldSize;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        q *= p_;
        if (q > max_size) {
            throw SpecificationError("field GF(" + std::to_string(p_) + "^" + std::to_string(k_) +
                                     ") exceeds the field size cap of " + std::to_string(max_size));
        }
    }
    q_ = static_cast<std::size_t>(q);

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else if (spec.modulus.empty()) {
        modulus_ = least_irreducible(p_, k_);
    } else {
        modulus_ = spec.modulus;
        if (modulus_.size() != k_ + 1) {
            throw SpecificationError("modulus must have degree " + std::to_string(k_));
        }
        for (auto c : modulus_) {
            if (c >= p_) throw SpecificationError("modulus coefficient out of range for GF(" + std::to_string(p_) + ")");
        }
        if (modulus_.back() != 1) throw SpecificationError("modulus must be monic");
        if (!is_irreducible(p_, modulus_)) throw SpecificationError("modulus is reducible over GF(" + std::to_string(p_) + ")");
    }

    auto t = std::make_shared<Tables>();
    t->add.resize(q_ * q_);
    t->mul.resize(q_ * q_);
    t->neg.resize(q_);
    t->inv.assign(q_, 0);

    std::vector<Poly> elems(q_);
    for (std::size_t a = 0; a < q_; ++a) elems[a] = coefficients(static_cast<Symbol>(a));

    for (std::size_t a = 0; a < q_; ++a) {
        Poly n(k_);
        for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - elems[a][i]) % p_;
        t->neg[a] = from_coefficients(n);
        for (std::size_t b = 0; b < q_; ++b) {
            Poly s(k_);
            for (std::uint32_t i = 0; i < k_; ++i) s[i] = (elems[a][i] + elems[b][i]) % p_;
            t->add[a * q_ + b] = from_coefficients(s);

            Poly prod(2 * k_ - 1, 0);
            for (std::uint32_t i = 0; i < k_; ++i) {
                for (std::uint32_t j = 0; j < k_; ++j) {
                    prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p_;
                }
            }
            Poly r = poly_mod(std::move(prod), modulus_, p_);
            r.resize(k_, 0);
            t->mul[a * q_ + b] = from_coefficients(r);
        }
    }
    for (std::size_t a = 1; a < q_; ++a) {
        for (std::size_t b = 1; b < q_; ++b) {
            if (t->mul[a * q_ + b] == 1) {
                t->inv[a] = static_cast<Symbol>(b);
                break;
            }
        }
    }

    tables_ = std::move(t);
    add_ = tables_->add.data();
    mul_ = tables_->mul.data();
    neg_ = tables_->neg.data();
    inv_ = tables_->inv.data();
}

std::uint32_t Field::characteristic() const noexcept { return p_; }
std::uint32_t Field::degree() const noexcept { return k_; }
std::size_t Field::size() const noexcept { return q_; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return modulus_; }

FieldSpec Field::spec() const {
    FieldSpec s{p_, k_, {}};
    if (k_ > 1) s.modulus = modulus_;
    return s;
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in " + describe());
    return inv_[a];
}

std::vector<std::uint32_t> Field::coefficients(Symbol a) const {
    std::vector<std::uint32_t> c(k_);
    std::uint32_t v = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Symbol Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
    return static_cast<Symbol>(v);
}

std::string Field::polynomial_name(Symbol a) const {
    if (a == 0) return "0";
    const auto c = coefficients(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (k_ > 1) {
        Poly m = modulus_;
        std::string s;
        for (std::size_t i = m.size(); i-- > 0;) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || m[i] != 1) s += std::to_string(m[i]);
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        os << " mod " << s;
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.tables_ == b.tables_) return true;
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
}

FieldElem::FieldElem(Field field, Symbol value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value)) {
        throw SpecificationError("symbol " + std::to_string(value) + " is not an element of " + field_.describe());
    }
}

namespace {
void require_same_field(const FieldElem& a, const FieldElem& b) {
    if (!(a.field() == b.field())) {
        throw SpecificationError("operands from different fields: " + a.field().describe() + " vs " +
                                 b.field().describe());
    }
}
}  // namespace

FieldElem ff_add(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    return FieldElem(a.field(), a.field().add(a.value(), b.value()));
}

FieldElem ff_mul(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    return FieldElem(a.field(), a.field().mul(a.value(), b.value()));
}

FieldElem ff_inv(const FieldElem& a) { return FieldElem(a.field(), a.field().inv(a.value())); }

std::vector<FieldElem> enumerate_field(const Field& field) {
    std::vector<FieldElem> out;
    out.reserve(field.size());
    for (std::size_t v = 0; v < field.size(); ++v) out.emplace_back(field, static_cast<Symbol>(v));
    return out;
}

std::vector<FieldElem> enumerate_field(const FieldSpec& spec) { return enumerate_field(Field(spec)); }

}  // namespace gnc
