#include "dualpolar/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dualpolar::gf {

namespace {

// Remainder of a modulo monic b over GF(p); coefficients low to high.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> b, int p)
{
    const auto db = static_cast<int>(b.size()) - 1;
    for (auto i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const int c = a[i] % p;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::max(db, 0));
    return a;
}

long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

bool is_prime(long n) noexcept
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(std::span<const int> monic, int p)
{
    const auto deg = static_cast<int>(monic.size()) - 1;
    if (deg < 1 || monic.back() != 1)
        return false;
    for (int fd = 1; fd <= deg / 2; ++fd) {
        const long count = ipow(p, fd);
        for (long t = 0; t < count; ++t) {
            std::vector<int> f(fd + 1);
            long v = t;
            for (int i = 0; i < fd; ++i, v /= p)
                f[i] = static_cast<int>(v % p);
            f[fd] = 1;
            auto r = poly_mod({monic.begin(), monic.end()}, f, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

std::shared_ptr<const Field> Field::create(int p, int k)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error(Errc::BadParameters, "extension degree must be >= 1");
    if (k > 4 || ipow(p, k) > 65536)
        throw Error(Errc::DegreeTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds desk-scale bound");

    std::vector<int> modulus(k + 1, 0);
    modulus[k] = 1;
    if (k > 1) {
        const long count = ipow(p, k);
        bool found = false;
        for (long t = 0; t < count && !found; ++t) {
            long v = t;
            for (int i = 0; i < k; ++i, v /= p)
                modulus[i] = static_cast<int>(v % p);
            found = is_irreducible(modulus, p);
        }
        if (!found)
            throw Error(Errc::BadParameters, "no irreducible modulus found");
    }
    return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(static_cast<int>(ipow(p, k))), modulus_(std::move(modulus))
{
    if (k_ % 2 == 0)
        sub_order_ = static_cast<int>(ipow(p_, k_ / 2));

    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto c = coefficients(static_cast<Elem>(a));
        for (auto& x : c)
            x = (p_ - x) % p_;
        neg_[a] = from_coefficients(c);
    }
    if (p_ != 2 && q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
    }

    // log/exp tables from the smallest primitive element
    exp_.assign(q_, 0);
    log_.assign(q_, -1);
    for (int g = 1; g < q_; ++g) {
        Elem x = 1;
        int order = 0;
        do {
            x = mul_poly(x, static_cast<Elem>(g));
            ++order;
        } while (x != 1);
        if (order != q_ - 1)
            continue;
        x = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_poly(x, static_cast<Elem>(g));
        }
        break;
    }

    if (sub_order_ > 0) {
        conj_.resize(q_);
        for (int a = 0; a < q_; ++a)
            conj_[a] = pow(static_cast<Elem>(a), sub_order_);
    }
}

Elem Field::add_digits(Elem a, Elem b) const noexcept
{
    int r = 0;
    int scale = 1;
    for (int i = 0; i < k_; ++i, scale *= p_) {
        const int da = a % p_;
        const int db = b % p_;
        a = static_cast<Elem>(a / p_);
        b = static_cast<Elem>(b / p_);
        r += ((da + db) % p_) * scale;
    }
    return static_cast<Elem>(r);
}

Elem Field::mul_poly(Elem a, Elem b) const
{
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    if (k_ == 1)
        return static_cast<Elem>(prod[0]);
    return from_coefficients(poly_mod(std::move(prod), modulus_, p_));
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw Error(Errc::DivisionByZero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::div(Elem a, Elem b) const
{
    if (b == 0)
        throw Error(Errc::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, long e) const
{
    if (a == 0)
        return e == 0 ? 1 : 0;
    const long m = q_ - 1;
    long le = (static_cast<long>(log_[a]) * (e % m)) % m;
    if (le < 0)
        le += m;
    return exp_[le];
}

Elem Field::conjugate(Elem a) const
{
    if (sub_order_ == 0)
        throw Error(Errc::NotQuadraticExtension, describe() + " has odd extension degree");
    return conj_[a];
}

Elem Field::from_int(long v) const noexcept
{
    return static_cast<Elem>(((v % p_) + p_) % p_);
}

std::vector<int> Field::coefficients(Elem a) const
{
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i, a = static_cast<Elem>(a / p_))
        c[i] = a % p_;
    return c;
}

Elem Field::from_coefficients(std::span<const int> coeffs) const
{
    int r = 0;
    int scale = 1;
    for (int i = 0; i < k_; ++i, scale *= p_)
        r += (i < static_cast<int>(coeffs.size()) ? ((coeffs[i] % p_) + p_) % p_ : 0) * scale;
    return static_cast<Elem>(r);
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> all(q_);
    std::iota(all.begin(), all.end(), Elem{0});
    return all;
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (k_ > 1) {
        os << " mod ";
        bool first = true;
        for (int i = k_; i >= 0; --i) {
            if (modulus_[i] == 0)
                continue;
            if (!first)
                os << "+";
            first = false;
            if (modulus_[i] != 1 || i == 0)
                os << modulus_[i];
            if (i >= 1)
                os << "x";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

FieldElement::FieldElement(FieldPtr field, Elem code) : field_(std::move(field)), code_(code)
{
    if (!field_ || code_ >= field_->q())
        throw Error(Errc::BadParameters, "element code out of range");
}

namespace {

const Field& common(const FieldElement& a, const FieldElement& b)
{
    if (a.field() != b.field() && !(*a.field() == *b.field()))
        throw Error(Errc::FieldMismatch, a.field()->describe() + " vs " + b.field()->describe());
    return *a.field();
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.field_, common(a, b).add(a.code_, b.code_)}; }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.field_, common(a, b).sub(a.code_, b.code_)}; }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.field_, common(a, b).mul(a.code_, b.code_)}; }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return {a.field_, common(a, b).div(a.code_, b.code_)}; }

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.code_ == b.code_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
}

FieldElement arith(const FieldElement& a, const FieldElement& b, Op op)
{
    switch (op) {
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::Mul: return a * b;
    case Op::Div: return a / b;
    }
    throw Error(Errc::BadParameters, "unknown op");
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field)
{
    std::vector<FieldElement> out;
    out.reserve(field->q());
    for (auto c : field->elements())
        out.emplace_back(field, c);
    return out;
}

} // namespace dualpolar::gf
