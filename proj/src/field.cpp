#include "legendre/field.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "legendre/error.hpp"

namespace legendre {

namespace {

constexpr std::uint32_t kNoLog = 0xffffffffu;

// Dense polynomials over Z/p, constant term first, used only to pick the
// defining modulus before any Field exists.
using ZpPoly = std::vector<u64>;

void trim(ZpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ZpPoly rem(ZpPoly a, const ZpPoly& m, u64 p)
{
    trim(a);
    const size_t dm = m.size() - 1;
    const u64 lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const u64 c = static_cast<u64>(static_cast<u128>(a.back()) * lead_inv % p);
        const size_t shift = a.size() - 1 - dm;
        for (size_t j = 0; j <= dm; ++j) {
            const u64 t = static_cast<u64>(static_cast<u128>(c) * m[j] % p);
            a[shift + j] = (a[shift + j] + p - t) % p;
        }
        trim(a);
    }
    return a;
}

ZpPoly mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % p);
    return rem(std::move(r), m, p);
}

ZpPoly powmod_poly(ZpPoly base, u64 e, const ZpPoly& m, u64 p)
{
    ZpPoly r{1};
    base = rem(std::move(base), m, p);
    while (e) {
        if (e & 1)
            r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

ZpPoly gcd_poly(ZpPoly a, ZpPoly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZpPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const ZpPoly& m, u64 p)
{
    const size_t n = m.size() - 1;
    const ZpPoly x{0, 1};
    ZpPoly h = rem(x, m, p);
    for (size_t d = 1; d <= n; ++d) {
        h = powmod_poly(h, p, m, p);
        if (d < n) {
            ZpPoly diff = h;
            diff.resize(std::max<size_t>(diff.size(), 2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(diff);
            if (diff.empty())
                return false;
            if (gcd_poly(diff, m, p).size() > 1)
                return false;
        }
    }
    return h == rem(x, m, p);
}

std::vector<u64> find_modulus(u64 p, unsigned n)
{
    const u64 count = *checked_power(p, n);
    for (u64 idx = 0; idx < count; ++idx) {
        ZpPoly m(n + 1, 0);
        u64 v = idx;
        for (unsigned i = 0; i < n; ++i) {
            m[i] = v % p;
            v /= p;
        }
        m[n] = 1;
        if (m[0] == 0)
            continue;
        if (is_irreducible(m, p))
            return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

FieldPtr Field::make(u64 p, unsigned n, u64 /*seed*/)
{
    if (p >= kMaxCharacteristic)
        throw std::invalid_argument("characteristic exceeds supported range");
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (n < 1)
        throw std::invalid_argument("field degree must be at least 1");
    if (!checked_power(p, n))
        throw std::invalid_argument("field order exceeds 2^63");
    std::vector<u64> modulus;
    if (n > 1)
        modulus = find_modulus(p, n);
    return std::make_shared<const Field>(Private{}, p, n, std::move(modulus));
}

FieldPtr make_field(u64 p, unsigned n, u64 seed) { return Field::make(p, n, seed); }

Field::Field(Private, u64 p, unsigned n, std::vector<u64> modulus)
    : p_(p), n_(n), q_(*checked_power(p, n)), modulus_(std::move(modulus))
{
    place_.resize(n_);
    u64 v = 1;
    for (unsigned i = 0; i < n_; ++i) {
        place_[i] = v;
        if (i + 1 < n_)
            v *= p_;
    }
    if (q_ <= kTableCap)
        build_tables();
    if (p_ == 2) {
        for (unsigned i = 0; i < n_; ++i) {
            Elem s = 0, x = Elem{1} << i;
            for (unsigned j = 0; j < n_; ++j) {
                s ^= x;
                x = sqr(x);
            }
            if (s == 1)
                trace_mask_ |= u64{1} << i;
        }
    } else {
        for (Elem z = 2; z < q_; ++z) {
            if (chi(z) == -1) {
                nonresidue_ = z;
                break;
            }
        }
    }
}

void Field::build_tables()
{
    if (q_ == 2) {
        exp_ = {1};
        log_ = {0, 0};
        return;
    }
    const u64 order = q_ - 1;
    const auto primes = factorize(order);
    Elem g = 0;
    for (Elem cand = 1; cand < q_ && g == 0; ++cand) {
        bool ok = true;
        for (auto [l, e] : primes) {
            if (pow_slow(cand, order / l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            g = cand;
    }
    std::vector<std::uint32_t> ex(order), lg(q_, 0);
    Elem cur = 1;
    for (u64 k = 0; k < order; ++k) {
        ex[k] = static_cast<std::uint32_t>(cur);
        lg[cur] = static_cast<std::uint32_t>(k);
        cur = mul_slow(cur, g);
    }
    std::vector<std::uint32_t> zech;
    if (n_ > 1 && p_ != 2) {
        zech.resize(order);
        for (u64 k = 0; k < order; ++k) {
            const u64 e = ex[k];
            const u64 c0 = e % p_;
            const u64 s = e - c0 + (c0 + 1) % p_;
            zech[k] = s == 0 ? kNoLog : lg[s];
        }
    }
    exp_ = std::move(ex);
    log_ = std::move(lg);
    zech_ = std::move(zech);
}

bool Field::same_as(const Field& o) const
{
    return this == &o || (p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_);
}

Elem Field::from_int(std::int64_t v) const
{
    const auto p = static_cast<std::int64_t>(p_);
    return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::from_coeffs(std::span<const u64> c) const
{
    if (c.size() > n_)
        throw std::invalid_argument("too many coefficients for field degree");
    Elem v = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_)
            throw std::invalid_argument("coefficient not reduced modulo p");
        v += c[i] * place_[i];
    }
    return v;
}

std::vector<u64> Field::coeffs(Elem a) const
{
    std::vector<u64> c(n_);
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::add_digits(Elem a, Elem b) const
{
    Elem r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        u64 d = a % p_ + b % p_;
        if (d >= p_)
            d -= p_;
        r += d * place_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::add(Elem a, Elem b) const
{
    if (n_ == 1) {
        const u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2)
        return a ^ b;
    if (zech_.empty())
        return add_digits(a, b);
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    const u64 order = q_ - 1;
    const u64 la = log_[a], lb = log_[b];
    const u64 k = lb >= la ? lb - la : lb + order - la;
    const std::uint32_t z = zech_[k];
    if (z == kNoLog)
        return 0;
    u64 r = la + z;
    if (r >= order)
        r -= order;
    return exp_[r];
}

Elem Field::neg(Elem a) const
{
    if (a == 0 || p_ == 2)
        return a;
    if (n_ == 1)
        return p_ - a;
    if (has_tables()) {
        const u64 order = q_ - 1;
        u64 r = log_[a] + order / 2;
        if (r >= order)
            r -= order;
        return exp_[r];
    }
    Elem r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        const u64 d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * place_[i];
        a /= p_;
    }
    return r;
}

Elem Field::mul_slow(Elem a, Elem b) const
{
    if (n_ == 1)
        return static_cast<Elem>(static_cast<u128>(a) * b % p_);
    const auto ca = coeffs(a), cb = coeffs(b);
    std::vector<u64> prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (ca[i] == 0)
            continue;
        for (unsigned j = 0; j < n_; ++j)
            prod[i + j] = static_cast<u64>((static_cast<u128>(ca[i]) * cb[j] + prod[i + j]) % p_);
    }
    for (size_t i = prod.size() - 1; i >= n_; --i) {
        const u64 c = prod[i];
        if (c == 0)
            continue;
        prod[i] = 0;
        for (unsigned j = 0; j < n_; ++j) {
            const u64 t = static_cast<u64>(static_cast<u128>(c) * modulus_[j] % p_);
            u64& slot = prod[i - n_ + j];
            slot = slot >= t ? slot - t : slot + p_ - t;
        }
    }
    Elem r = 0;
    for (unsigned i = 0; i < n_; ++i)
        r += prod[i] * place_[i];
    return r;
}

Elem Field::mul(Elem a, Elem b) const
{
    if (n_ == 1)
        return static_cast<Elem>(static_cast<u128>(a) * b % p_);
    if (!has_tables())
        return mul_slow(a, b);
    if (a == 0 || b == 0)
        return 0;
    const u64 order = q_ - 1;
    u64 k = u64{log_[a]} + log_[b];
    if (k >= order)
        k -= order;
    return exp_[k];
}

Elem Field::pow_slow(Elem a, u64 e) const
{
    Elem r = 1;
    while (e) {
        if (e & 1)
            r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::pow(Elem a, u64 e) const
{
    if (!has_tables()) {
        Elem r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    if (a == 0)
        return e == 0 ? 1 : 0;
    const u64 order = q_ - 1;
    const u64 k = static_cast<u64>(static_cast<u128>(log_[a]) * (e % order) % order);
    return exp_[k];
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero");
    if (has_tables()) {
        const u64 order = q_ - 1;
        return exp_[log_[a] == 0 ? 0 : order - log_[a]];
    }
    return pow(a, q_ - 2);
}

int Field::chi(Elem a) const
{
    if (p_ == 2)
        throw std::domain_error("quadratic character needs odd characteristic");
    if (a == 0)
        return 0;
    if (has_tables())
        return (log_[a] & 1) ? -1 : 1;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

Elem Field::tonelli_shanks(Elem a) const
{
    u64 odd = q_ - 1;
    unsigned s = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    unsigned m = s;
    Elem c = pow(nonresidue_, odd);
    Elem t = pow(a, odd);
    Elem r = pow(a, (odd + 1) / 2);
    while (t != 1) {
        unsigned i = 0;
        for (Elem tt = t; tt != 1; tt = sqr(tt))
            ++i;
        Elem b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k)
            b = sqr(b);
        m = i;
        c = sqr(b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

std::optional<Elem> Field::sqrt(Elem a) const
{
    if (p_ == 2)
        return pow(a, q_ / 2);
    if (a == 0)
        return Elem{0};
    if (chi(a) != 1)
        return std::nullopt;
    const Elem r = q_ % 4 == 3 ? pow(a, (q_ + 1) / 4) : tonelli_shanks(a);
    return std::min(r, neg(r));
}

bool Field::is_nth_power(Elem a, u64 m) const
{
    if (a == 0)
        throw std::domain_error("is_nth_power of zero");
    if (m == 0)
        throw std::invalid_argument("exponent must be positive");
    const u64 g = std::gcd(m, q_ - 1);
    return pow(a, (q_ - 1) / g) == 1;
}

int Field::trace2(Elem a) const
{
    if (p_ != 2)
        throw std::domain_error("trace2 needs characteristic 2");
    return std::popcount(a & trace_mask_) & 1;
}

Fe Field::element(Elem a) const
{
    if (a >= q_)
        throw std::invalid_argument("element index out of range");
    return {*this, a};
}

Fe Field::element_from_int(std::int64_t v) const { return {*this, from_int(v)}; }

std::string Field::to_string(Elem a) const
{
    if (n_ == 1)
        return std::to_string(a);
    const auto c = coeffs(a);
    std::string out;
    for (size_t i = n_; i-- > 0;) {
        if (c[i] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (c[i] != 1 || i == 0)
            out += std::to_string(c[i]);
        if (i >= 1)
            out += 't';
        if (i >= 2)
            out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

void require_same_field(const Field& a, const Field& b)
{
    if (!a.same_as(b))
        throw FieldMismatch();
}

Fe operator+(const Fe& a, const Fe& b)
{
    require_same_field(*a.f_, *b.f_);
    return {*a.f_, a.f_->add(a.v_, b.v_)};
}

Fe operator-(const Fe& a, const Fe& b)
{
    require_same_field(*a.f_, *b.f_);
    return {*a.f_, a.f_->sub(a.v_, b.v_)};
}

Fe operator*(const Fe& a, const Fe& b)
{
    require_same_field(*a.f_, *b.f_);
    return {*a.f_, a.f_->mul(a.v_, b.v_)};
}

Fe operator/(const Fe& a, const Fe& b)
{
    require_same_field(*a.f_, *b.f_);
    return {*a.f_, a.f_->div(a.v_, b.v_)};
}

bool operator==(const Fe& a, const Fe& b)
{
    return a.v_ == b.v_ && (a.f_ == b.f_ || (a.f_ && b.f_ && a.f_->same_as(*b.f_)));
}

std::strong_ordering operator<=>(const Fe& a, const Fe& b)
{
    require_same_field(*a.f_, *b.f_);
    return a.v_ <=> b.v_;
}

int quadratic_character(const Fe& a) { return a.field().chi(a.index()); }

bool is_nth_power(const Fe& a, u64 m) { return a.field().is_nth_power(a.index(), m); }

std::optional<Fe> sqrt(const Fe& a)
{
    const Field& f = a.field();
    if (f.characteristic() == 2)
        throw std::domain_error("sqrt is defined for odd characteristic");
    if (auto r = f.sqrt(a.index()))
        return Fe(f, *r);
    return std::nullopt;
}

int trace2(const Fe& a) { return a.field().trace2(a.index()); }

void require_within_cap(u64 q, u64 cap, const char* what)
{
    if (q > cap)
        throw CapExceeded(std::string(what) + ": field order " + std::to_string(q) +
                          " exceeds enumeration cap " + std::to_string(cap));
}

std::vector<Fe> enumerate(const Field& f, u64 cap)
{
    require_within_cap(f.order(), cap, "enumerate");
    std::vector<Fe> out;
    out.reserve(f.order());
    for (Elem a = 0; a < f.order(); ++a)
        out.emplace_back(f, a);
    return out;
}

}  // namespace legendre
