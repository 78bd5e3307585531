#include "pst/scalar.hpp"

#include "pst/poly.hpp"

#include <sstream>

namespace pst {

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

size_t rat_bitsize(const Rat& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    Rat c = r;
    c.canonicalize();
    mpz_class num = c.get_num(), den = c.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

NumberField::NumberField(std::vector<Rat> monic_minpoly) : minpoly_(std::move(monic_minpoly)) {
    int d = static_cast<int>(minpoly_.size()) - 1;
    if (d < 2 || d > 4)
        throw std::invalid_argument("number field degree must be 2..4");
    if (minpoly_[d] != 1)
        throw std::invalid_argument("minimal polynomial must be monic");
    if (!qp_irreducible(minpoly_))
        throw std::invalid_argument("minimal polynomial is reducible over Q: " + qp_str(minpoly_, "t"));
    // t^d = -(c0 + c1 t + ... + c_{d-1} t^{d-1}); extend for t^(d+k)
    std::vector<Rat> cur(d);
    for (int i = 0; i < d; ++i) cur[i] = -minpoly_[i];
    reduction_.push_back(cur);
    for (int k = 1; k <= d - 2; ++k) {
        std::vector<Rat> next(d, Rat(0));
        // multiply cur by t, reduce
        Rat top = cur[d - 1];
        for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = Rat(0);
        for (int i = 0; i < d; ++i) next[i] += top * reduction_[0][i];
        reduction_.push_back(next);
        cur = next;
    }
}

std::string NumberField::str() const { return qp_str(minpoly_, "t"); }

Scalar::Scalar(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("null field in Scalar");
    if (static_cast<int>(coeffs_.size()) != field_->degree())
        throw std::invalid_argument("coefficient vector length != field degree");
    normalize();
}

Scalar Scalar::generator(const FieldPtr& field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = Rat(1);
    return Scalar(field, std::move(c));
}

void Scalar::normalize() {
    if (!field_) return;
    bool rational = true;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) { rational = false; break; }
    if (rational) {
        coeffs_.resize(1);
        field_ = nullptr;
    }
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

const Rat& Scalar::rat() const {
    if (field_) throw std::logic_error("scalar is not rational");
    return coeffs_[0];
}

void Scalar::align(Scalar& a, Scalar& b) {
    if (a.field_ && b.field_) {
        if (a.field_ != b.field_)
            throw std::logic_error("scalars from different number fields");
        return;
    }
    if (a.field_ && !b.field_) {
        b.coeffs_.resize(a.field_->degree(), Rat(0));
        b.field_ = a.field_;
    } else if (!a.field_ && b.field_) {
        a.coeffs_.resize(b.field_->degree(), Rat(0));
        a.field_ = b.field_;
    }
}

Scalar operator+(const Scalar& a0, const Scalar& b0) {
    Scalar a = a0, b = b0;
    Scalar::align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.normalize();
    return a;
}

Scalar operator-(const Scalar& a0, const Scalar& b0) {
    Scalar a = a0, b = b0;
    Scalar::align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    a.normalize();
    return a;
}

Scalar operator-(const Scalar& a) { return a.neg(); }

Scalar Scalar::neg() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar operator*(const Scalar& a0, const Scalar& b0) {
    if (!a0.field_ && !b0.field_) return Scalar(Rat(a0.coeffs_[0] * b0.coeffs_[0]));
    Scalar a = a0, b = b0;
    Scalar::align(a, b);
    int d = a.field_->degree();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    const auto& red = a.field_->reduction_table();
    std::vector<Rat> out(prod.begin(), prod.begin() + d);
    for (int k = 0; k <= d - 2; ++k) {
        const Rat& c = prod[d + k];
        if (c == 0) continue;
        for (int i = 0; i < d; ++i) out[i] += c * red[k][i];
    }
    return Scalar(a.field_, std::move(out));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (!field_) return Scalar(Rat(1) / coeffs_[0]);
    // extended euclid of coeff poly with minpoly
    QPoly a(coeffs_.begin(), coeffs_.end());
    auto bez = qp_xgcd(a, field_->minpoly());
    if (qp_deg(bez.g) != 0)
        throw std::logic_error("minimal polynomial not irreducible (gcd found)");
    // bez.s * a = g = const mod m  ->  inverse = s / g
    QPoly inv = qp_scale(bez.s, Rat(1) / bez.g[0]);
    auto rem = qp_divmod(inv, field_->minpoly()).second;
    std::vector<Rat> c(field_->degree(), Rat(0));
    for (size_t i = 0; i < rem.size(); ++i) c[i] = rem[i];
    return Scalar(field_, std::move(c));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a0, const Scalar& b0) {
    Scalar a = a0, b = b0;
    if ((a.field_ == nullptr) != (b.field_ == nullptr)) Scalar::align(a, b);
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::string Scalar::str() const {
    if (!field_) return rat_str(coeffs_[0]);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(coeffs_[i]);
    }
    os << "]";
    return os.str();
}

size_t Scalar::bitsize() const {
    size_t s = 0;
    for (const auto& c : coeffs_) s += rat_bitsize(c);
    return s;
}

double Scalar::to_double() const {
    if (field_) throw std::logic_error("numeric evaluation of non-rational scalar requires an embedding");
    return coeffs_[0].get_d();
}

Scalar scalar_parse(const std::string& s, const FieldPtr& field) {
    std::string t;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");
    if (t.front() == '[') {
        if (!field) throw std::invalid_argument("bracketed scalar without a declared field: " + s);
        if (t.back() != ']') throw std::invalid_argument("bad scalar literal: " + s);
        std::vector<Rat> coeffs;
        std::string body = t.substr(1, t.size() - 2);
        std::string cur;
        for (char ch : body) {
            if (ch == ',') {
                coeffs.push_back(rat_parse(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) coeffs.push_back(rat_parse(cur));
        coeffs.resize(field->degree(), Rat(0));
        return Scalar(field, std::move(coeffs));
    }
    return Scalar(rat_parse(t));
}

}  // namespace pst
