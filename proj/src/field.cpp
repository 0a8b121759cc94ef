#include "qrd/field.hpp"

#include "qrd/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qrd {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1u << 18;

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> factors;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned n) {
    if (n < 2) return {0, 0};
    for (unsigned p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        // p is the smallest prime factor; n is a prime power iff n = p^e
        unsigned m = n, e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        return m == 1 ? std::make_pair(p, e) : std::make_pair(0u, 0u);
    }
    return {0, 0};
}

void Field::check_code(unsigned a) const {
    if (a >= order_) throw std::invalid_argument("field element code out of range");
}

FieldPtr Field::prime(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->characteristic_ = p;
    f->order_ = p;
    f->degree_ = 1;
    f->degree_over_prime_ = 1;
    // least primitive element of GF(p)
    f->primitive_ = 1;
    if (p > 2) {
        auto factors = prime_factors(p - 1);
        for (unsigned g = 2; g < p; ++g) {
            bool primitive = true;
            for (unsigned r : factors) {
                if (f->pow(g, (p - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                f->primitive_ = g;
                break;
            }
        }
    }
    return f;
}

FieldPtr Field::extension(const FieldPtr& base, unsigned m) {
    if (!base) throw std::invalid_argument("Field::extension: null base field");
    if (m < 1) throw std::invalid_argument("Field::extension: degree must be >= 1");
    if (m == 1) return base;

    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        order *= base->order();
        if (order > kMaxFieldOrder)
            throw guard_error("Field::extension: order " + std::to_string(base->order()) + "^" +
                              std::to_string(m) + " exceeds the supported bound 2^18");
    }

    // Lexicographically smallest monic irreducible modulus of degree m,
    // coefficient lists compared constant-term-first. Enumeration order:
    // the constant coefficient is the most significant comparison key.
    const unsigned b = base->order();
    Poly modulus;
    std::vector<unsigned> digits(m, 0);
    bool found = false;
    while (!found) {
        std::vector<unsigned> coeffs(digits.begin(), digits.end());
        coeffs.push_back(1);
        Poly candidate = Poly::from_coefficients(base, std::move(coeffs));
        if (is_irreducible(candidate)) {
            modulus = candidate;
            found = true;
            break;
        }
        // increment; digits[0] is the most significant position
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && digits[static_cast<unsigned>(pos)] == b - 1) {
            digits[static_cast<unsigned>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<unsigned>(pos)];
    }
    if (!found) throw std::logic_error("Field::extension: no irreducible modulus found");

    auto f = std::shared_ptr<Field>(new Field());
    f->characteristic_ = base->characteristic();
    f->order_ = static_cast<unsigned>(order);
    f->degree_ = m;
    f->degree_over_prime_ = m * base->degree_over_prime();
    f->base_ = base;
    f->modulus_ = modulus.coefficients();
    f->reduction_.resize(m);
    for (unsigned i = 0; i < m; ++i) f->reduction_[i] = base->neg(f->modulus_[i]);

    // least primitive element by exhausting codes in ascending order
    auto factors = prime_factors(f->order_ - 1);
    for (unsigned g = 1; g < f->order_; ++g) {
        bool primitive = true;
        for (unsigned r : factors) {
            if (f->pow(g, (f->order_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            f->primitive_ = g;
            break;
        }
    }
    return f;
}

FieldPtr Field::of_order(unsigned q) {
    if (q > 16)
        throw std::invalid_argument("Field::of_order: base fields are supported up to order 16, got " +
                                    std::to_string(q));
    auto [p, e] = prime_power_decomposition(q);
    if (p == 0) throw std::invalid_argument("Field::of_order: " + std::to_string(q) + " is not a prime power");
    FieldPtr f = prime(p);
    return e == 1 ? f : extension(f, e);
}

unsigned Field::add(unsigned a, unsigned b) const {
    check_code(a);
    check_code(b);
    if (is_prime_field()) return (a + b) % order_;
    if (characteristic_ == 2) return a ^ b;  // positional codes over a 2-power base
    const unsigned bo = base_->order();
    unsigned out = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        out += base_->add(a % bo, b % bo) * scale;
        a /= bo;
        b /= bo;
        scale *= bo;
    }
    return out;
}

unsigned Field::neg(unsigned a) const {
    check_code(a);
    if (is_prime_field()) return a == 0 ? 0 : order_ - a;
    if (characteristic_ == 2) return a;
    const unsigned bo = base_->order();
    unsigned out = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        out += base_->neg(a % bo) * scale;
        a /= bo;
        scale *= bo;
    }
    return out;
}

unsigned Field::mul(unsigned a, unsigned b) const {
    check_code(a);
    check_code(b);
    if (is_prime_field()) return static_cast<unsigned>(static_cast<std::uint64_t>(a) * b % order_);
    if (a == 0 || b == 0) return 0;

    const unsigned bo = base_->order();
    const unsigned m = degree_;
    unsigned da[32], db[32];
    for (unsigned i = 0; i < m; ++i) {
        da[i] = a % bo;
        a /= bo;
        db[i] = b % bo;
        b /= bo;
    }
    // schoolbook product, then reduce x^j -> x^(j-m) * reduction_
    unsigned prod[63] = {0};
    for (unsigned i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
            if (db[j] == 0) continue;
            prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
        }
    }
    for (unsigned j = 2 * m - 2; j >= m; --j) {
        unsigned c = prod[j];
        if (c == 0) continue;
        prod[j] = 0;
        for (unsigned i = 0; i < m; ++i)
            prod[j - m + i] = base_->add(prod[j - m + i], base_->mul(c, reduction_[i]));
        if (j == m) break;
    }
    unsigned out = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
        out += prod[i] * scale;
        scale *= bo;
    }
    return out;
}

unsigned Field::pow(unsigned a, std::uint64_t e) const {
    check_code(a);
    if (e == 0) return is_prime_field() ? 1 % order_ : 1;
    unsigned result = 1, acc = a;
    while (e != 0) {
        if (e & 1) result = mul(result, acc);
        e >>= 1;
        if (e != 0) acc = mul(acc, acc);
    }
    return result;
}

unsigned Field::inv(unsigned a) const {
    check_code(a);
    if (a == 0) throw std::domain_error("field inverse of zero");
    return pow(a, order_ - 2);
}

std::vector<unsigned> Field::coordinates(unsigned a) const {
    check_code(a);
    if (is_prime_field()) return {a};
    std::vector<unsigned> out(degree_);
    const unsigned bo = base_->order();
    for (unsigned i = 0; i < degree_; ++i) {
        out[i] = a % bo;
        a /= bo;
    }
    return out;
}

unsigned Field::from_coordinates(const std::vector<unsigned>& digits) const {
    if (digits.size() != degree_) throw std::invalid_argument("coordinate vector has wrong length");
    if (is_prime_field()) {
        if (digits[0] >= order_) throw std::invalid_argument("coordinate out of range");
        return digits[0];
    }
    unsigned out = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        if (digits[i] >= base_->order()) throw std::invalid_argument("coordinate out of range");
        out += digits[i] * scale;
        scale *= base_->order();
    }
    return out;
}

unsigned Field::embed_base(unsigned base_code) const {
    if (is_prime_field()) throw std::logic_error("embed_base: prime field has no base");
    if (base_code >= base_->order()) throw std::invalid_argument("embed_base: code out of range");
    return base_code;  // constant coordinate vectors are the low codes
}

bool Field::in_base_field(unsigned a) const {
    check_code(a);
    if (is_prime_field()) return true;
    return a < base_->order();
}

unsigned Field::project_to_base(unsigned a) const {
    if (!in_base_field(a))
        throw std::domain_error("project_to_base: element lies outside the embedded base field");
    return a;
}

unsigned Field::element_order(unsigned a) const {
    check_code(a);
    if (a == 0) throw std::domain_error("element_order of zero");
    unsigned o = order_ - 1;
    for (unsigned r : prime_factors(order_ - 1))
        while (o % r == 0 && pow(a, o / r) == 1) o /= r;
    return o;
}

std::string Field::description() const {
    std::ostringstream out;
    out << "GF(" << order_ << ")";
    if (!is_prime_field()) {
        out << " = GF(" << base_->order() << ")[x]/(";
        for (unsigned i = 0; i < modulus_.size(); ++i) {
            if (i > 0) out << ",";
            out << modulus_[i];
        }
        out << ")";
    }
    return out.str();
}

unsigned multiplicative_order(unsigned q, unsigned p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("multiplicative_order: p must be an odd prime");
    if (q % p == 0) throw std::invalid_argument("multiplicative_order: p divides q");
    unsigned acc = q % p;
    for (unsigned m = 1; m <= p; ++m) {
        if (acc == 1) return m;
        acc = static_cast<unsigned>(static_cast<std::uint64_t>(acc) * (q % p) % p);
    }
    throw std::logic_error("multiplicative_order: no order found");  // unreachable for valid input
}

unsigned pth_root_of_unity(const Field& field, unsigned p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("pth_root_of_unity: p must be an odd prime");
    if ((field.order() - 1) % p != 0)
        throw std::invalid_argument("pth_root_of_unity: p does not divide |F|-1");
    unsigned alpha = field.pow(field.least_primitive_element(), (field.order() - 1) / p);
    if (alpha == 1 || field.pow(alpha, p) != 1)
        throw std::logic_error("pth_root_of_unity: constructed element has wrong order");
    return alpha;
}

// ----------------------------------------------------------------------
// Poly

Poly::Poly(FieldPtr field, std::vector<unsigned> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::zero(FieldPtr field) { return Poly(std::move(field), {}); }

Poly Poly::constant(FieldPtr field, unsigned c) { return Poly(std::move(field), {c}); }

Poly Poly::from_coefficients(FieldPtr field, std::vector<unsigned> coeffs) {
    for (unsigned c : coeffs)
        if (c >= field->order()) throw std::invalid_argument("Poly: coefficient code out of range");
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::x_power_minus_one(FieldPtr field, unsigned n) {
    std::vector<unsigned> coeffs(n + 1, 0);
    coeffs[0] = field->neg(1);
    coeffs[n] = 1;
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::linear_root(FieldPtr field, unsigned root) {
    std::vector<unsigned> coeffs = {field->neg(root), 1};
    return Poly(std::move(field), std::move(coeffs));
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

unsigned Poly::leading_coefficient() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<unsigned> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coefficient(static_cast<unsigned>(i)), rhs.coefficient(static_cast<unsigned>(i)));
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    std::vector<unsigned> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coefficient(static_cast<unsigned>(i)), rhs.coefficient(static_cast<unsigned>(i)));
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero(field_);
    std::vector<unsigned> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
    return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {zero(field_), *this};
    std::vector<unsigned> rem = coeffs_;
    std::vector<unsigned> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1, 0);
    const unsigned lead_inv = field_->inv(divisor.leading_coefficient());
    for (int d = degree(); d >= divisor.degree(); --d) {
        unsigned c = rem[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        unsigned factor = field_->mul(c, lead_inv);
        std::size_t shift = static_cast<std::size_t>(d - divisor.degree());
        quot[shift] = factor;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rem[shift + i] = field_->sub(rem[shift + i], field_->mul(factor, divisor.coeffs_[i]));
    }
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

unsigned Poly::evaluate(unsigned x) const {
    unsigned acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

bool Poly::operator==(const Poly& rhs) const {
    return coeffs_ == rhs.coeffs_ && (field_ == rhs.field_ || (field_ && rhs.field_ && field_->order() == rhs.field_->order()));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) out << coeffs_[i];
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

bool is_irreducible(const Poly& p) {
    const int d = p.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const FieldPtr& f = p.field();
    const unsigned q = f->order();
    // a reducible polynomial of degree d has a monic factor of degree <= d/2
    for (int div_deg = 1; div_deg <= d / 2; ++div_deg) {
        std::vector<unsigned> digits(static_cast<std::size_t>(div_deg), 0);
        while (true) {
            std::vector<unsigned> coeffs(digits.begin(), digits.end());
            coeffs.push_back(1);
            Poly divisor = Poly::from_coefficients(f, std::move(coeffs));
            if (p.divmod(divisor).second.is_zero()) return false;
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == q - 1) {
                digits[pos] = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
            ++digits[pos];
        }
    }
    return true;
}

}  // namespace qrd
