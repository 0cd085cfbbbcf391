#include "fmds/gf.hpp"

#include <array>
#include <stdexcept>

#include "fmds/fieldsearch.hpp"
#include "numtheory.hpp"

namespace fmds {

namespace {

// Largest admissible field order. Keeps canonical integers in uint64 and
// trial-division factorization of q-1 cheap.
constexpr std::uint64_t kMaxOrder = 1ull << 48;
// Extension fields up to this size get exp/log tables.
constexpr std::uint64_t kTableLimit = 1ull << 16;
constexpr std::uint32_t kMaxDegree = 63;

using Digits = std::array<std::uint64_t, kMaxDegree + 1>;

void unpack(std::uint64_t v, std::uint64_t p, std::uint32_t beta, Digits& out) {
    for (std::uint32_t i = 0; i < beta; ++i) {
        out[i] = v % p;
        v /= p;
    }
}

std::uint64_t pack(const Digits& d, std::uint64_t p, std::uint32_t beta) {
    std::uint64_t v = 0;
    for (std::uint32_t i = beta; i-- > 0;) v = v * p + d[i];
    return v;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element has no inverse");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// --- dense polynomial helpers over GF(p), ascending coefficients ---

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t poly_eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (detail::mulmod(acc, x, p) + f[i]) % p;
    return acc;
}

// in-place remainder of a modulo monic-normalizable g
void poly_rem(Poly& a, const Poly& g, std::uint64_t p) {
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = inv_mod_prime(g.back(), p);
    trim(a);
    while (a.size() > dg) {
        const std::size_t da = a.size() - 1;
        const std::uint64_t f = detail::mulmod(a.back(), lead_inv, p);
        if (f != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                const std::uint64_t sub = detail::mulmod(f, g[i], p);
                a[da - dg + i] = (a[da - dg + i] + p - sub) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
}

Poly poly_divmod(Poly& a, const Poly& g, std::uint64_t p) {
    // returns quotient, leaves remainder in a
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = inv_mod_prime(g.back(), p);
    trim(a);
    Poly q(a.size() > dg ? a.size() - dg : 0, 0);
    while (a.size() > dg) {
        const std::size_t da = a.size() - 1;
        const std::uint64_t f = detail::mulmod(a.back(), lead_inv, p);
        q[da - dg] = f;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = detail::mulmod(f, g[i], p);
            a[da - dg + i] = (a[da - dg + i] + p - sub) % p;
        }
        a.pop_back();
        trim(a);
    }
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + detail::mulmod(a[i], b[j], p)) % p;
        }
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t av = i < a.size() ? a[i] : 0;
        const std::uint64_t bv = i < b.size() ? b[i] : 0;
        out[i] = (av + p - bv) % p;
    }
    trim(out);
    return out;
}

bool divides(const Poly& g, const Poly& f, std::uint64_t p) {
    Poly rem = f;
    poly_rem(rem, g, p);
    return rem.empty();
}

// Trial-division irreducibility: no roots in GF(p) and no monic factor of
// degree <= beta/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t beta = f.size() - 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        if (poly_eval(f, x, p) == 0) return false;
    }
    for (std::size_t d = 2; d <= beta / 2; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        // odometer over the d low coefficients
        for (;;) {
            if (divides(g, f, p)) return false;
            std::size_t i = 0;
            while (i < d && g[i] == p - 1) g[i++] = 0;
            if (i == d) break;
            ++g[i];
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree beta, coefficient
// vectors compared low-degree-first (c0 is the most significant key).
Poly smallest_irreducible(std::uint64_t p, std::uint32_t beta) {
    Poly f(beta + 1, 0);
    f[beta] = 1;
    // odometer with the last free coefficient fastest, so candidates appear
    // in ascending (c0, c1, ..., c_{beta-1}) order
    for (;;) {
        if (f[0] != 0 && is_irreducible(f, p)) return f;
        std::uint32_t i = beta;
        while (i > 0 && f[i - 1] == p - 1) f[--i] = 0;
        if (i == 0) throw std::logic_error("no irreducible polynomial found");
        ++f[i - 1];
    }
}

}  // namespace

struct Field::Impl {
    std::uint64_t p = 0;
    std::uint32_t beta = 1;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;  // empty when beta == 1
    Fe delta{0};
    bool tables = false;
    std::vector<std::uint32_t> log_tbl;
    std::vector<std::uint32_t> exp_tbl;
};

namespace {

void check_element(const Field::Impl& f, Fe a) {
    if (a.v >= f.q) throw std::out_of_range("element outside field");
}

Fe impl_add(const Field::Impl& f, Fe a, Fe b) {
    if (f.beta == 1) return Fe{(a.v + b.v) % f.p};
    if (f.p == 2) return Fe{a.v ^ b.v};
    Digits da, db;
    unpack(a.v, f.p, f.beta, da);
    unpack(b.v, f.p, f.beta, db);
    for (std::uint32_t i = 0; i < f.beta; ++i) da[i] = (da[i] + db[i]) % f.p;
    return Fe{pack(da, f.p, f.beta)};
}

Fe impl_neg(const Field::Impl& f, Fe a) {
    if (f.beta == 1) return Fe{a.v == 0 ? 0 : f.p - a.v};
    if (f.p == 2) return a;
    Digits da;
    unpack(a.v, f.p, f.beta, da);
    for (std::uint32_t i = 0; i < f.beta; ++i) da[i] = da[i] == 0 ? 0 : f.p - da[i];
    return Fe{pack(da, f.p, f.beta)};
}

Fe poly_mul_elem(const Field::Impl& f, Fe a, Fe b) {
    Digits da, db;
    std::array<std::uint64_t, 2 * (kMaxDegree + 1)> prod{};
    unpack(a.v, f.p, f.beta, da);
    unpack(b.v, f.p, f.beta, db);
    for (std::uint32_t i = 0; i < f.beta; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < f.beta; ++j) {
            prod[i + j] = (prod[i + j] + detail::mulmod(da[i], db[j], f.p)) % f.p;
        }
    }
    // reduce modulo the monic modulus
    for (std::uint32_t i = 2 * f.beta - 2; i >= f.beta; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < f.beta; ++j) {
            const std::uint64_t sub = detail::mulmod(c, f.modulus[j], f.p);
            prod[i - f.beta + j] = (prod[i - f.beta + j] + f.p - sub) % f.p;
        }
        if (i == f.beta) break;
    }
    Digits low;
    for (std::uint32_t i = 0; i < f.beta; ++i) low[i] = prod[i];
    return Fe{pack(low, f.p, f.beta)};
}

Fe impl_mul(const Field::Impl& f, Fe a, Fe b) {
    if (f.beta == 1) return Fe{detail::mulmod(a.v, b.v, f.p)};
    if (a.v == 0 || b.v == 0) return Fe{0};
    if (f.tables) {
        const std::uint64_t l = f.log_tbl[a.v] + f.log_tbl[b.v];
        return Fe{f.exp_tbl[l % (f.q - 1)]};
    }
    return poly_mul_elem(f, a, b);
}

Fe poly_inv_elem(const Field::Impl& f, Fe a) {
    // extended Euclid over GF(p)[x]
    Digits da;
    unpack(a.v, f.p, f.beta, da);
    Poly r0 = f.modulus;
    Poly r1(da.begin(), da.begin() + f.beta);
    trim(r1);
    Poly t0, t1{1};
    while (!r1.empty()) {
        Poly rem = r0;
        Poly quot = poly_divmod(rem, r1, f.p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly nt = poly_sub(t0, poly_mul(quot, t1, f.p), f.p);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 is a nonzero constant: the modulus is irreducible
    const std::uint64_t scale = inv_mod_prime(r0[0], f.p);
    Digits out{};
    for (std::size_t i = 0; i < t0.size(); ++i) out[i] = detail::mulmod(t0[i], scale, f.p);
    for (std::size_t i = t0.size(); i < f.beta; ++i) out[i] = 0;
    return Fe{pack(out, f.p, f.beta)};
}

Fe impl_inv(const Field::Impl& f, Fe a) {
    if (a.v == 0) throw std::domain_error("division by zero");
    if (f.beta == 1) return Fe{inv_mod_prime(a.v, f.p)};
    if (f.tables) {
        const std::uint64_t l = (f.q - 1 - f.log_tbl[a.v]) % (f.q - 1);
        return Fe{f.exp_tbl[l]};
    }
    return poly_inv_elem(f, a);
}

Fe impl_pow(const Field::Impl& f, Fe a, std::int64_t e) {
    if (a.v == 0) {
        if (e > 0) return Fe{0};
        if (e == 0) return Fe{1};
        throw std::domain_error("division by zero");
    }
    const std::int64_t m = static_cast<std::int64_t>(f.q - 1);
    std::uint64_t r = static_cast<std::uint64_t>(((e % m) + m) % m);
    if (f.beta == 1) return Fe{detail::powmod(a.v, r, f.p)};
    if (f.tables) {
        const std::uint64_t l = (f.log_tbl[a.v] * r) % (f.q - 1);
        return Fe{f.exp_tbl[l]};
    }
    Fe acc{1}, base = a;
    while (r != 0) {
        if (r & 1) acc = impl_mul(f, acc, base);
        base = impl_mul(f, base, base);
        r >>= 1;
    }
    return acc;
}

std::shared_ptr<Field::Impl> make_impl(std::uint64_t p, std::uint32_t beta,
                                       std::vector<std::uint64_t> modulus, bool search_modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (beta < 1 || beta > kMaxDegree) throw std::invalid_argument("invalid extension degree");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < beta; ++i) {
        if (q > kMaxOrder / p) throw std::invalid_argument("field too large");
        q *= p;
    }
    auto impl = std::make_shared<Field::Impl>();
    impl->p = p;
    impl->beta = beta;
    impl->q = q;
    if (beta > 1) {
        if (search_modulus) {
            impl->modulus = smallest_irreducible(p, beta);
        } else {
            if (modulus.size() != beta + 1 || modulus.back() != 1) {
                throw std::invalid_argument("modulus must be monic of degree beta");
            }
            for (std::uint64_t c : modulus) {
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
            }
            if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
            impl->modulus = std::move(modulus);
        }
    }
    return impl;
}

void finish_impl(const std::shared_ptr<Field::Impl>& impl, const Field& f) {
    impl->delta = primitive_element(f);
    if (impl->beta > 1 && impl->q <= kTableLimit) {
        impl->exp_tbl.resize(impl->q - 1);
        impl->log_tbl.resize(impl->q);
        Fe cur{1};
        for (std::uint64_t i = 0; i < impl->q - 1; ++i) {
            impl->exp_tbl[i] = static_cast<std::uint32_t>(cur.v);
            impl->log_tbl[cur.v] = static_cast<std::uint32_t>(i);
            cur = poly_mul_elem(*impl, cur, impl->delta);
        }
        if (cur.v != 1) throw std::logic_error("primitive element does not generate the field");
        impl->tables = true;
    }
}

}  // namespace

Field::Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Field Field::prime(std::uint64_t p) {
    auto impl = make_impl(p, 1, {}, false);
    Field f{impl};
    finish_impl(impl, f);
    return f;
}

Field Field::extension(std::uint64_t p, std::uint32_t beta) {
    if (beta == 1) return prime(p);
    auto impl = make_impl(p, beta, {}, true);
    Field f{impl};
    finish_impl(impl, f);
    return f;
}

Field Field::extension(std::uint64_t p, std::uint32_t beta, std::vector<std::uint64_t> modulus) {
    if (beta == 1 && modulus.empty()) return prime(p);
    auto impl = make_impl(p, beta, std::move(modulus), false);
    Field f{impl};
    finish_impl(impl, f);
    return f;
}

std::uint64_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->beta; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return impl_->modulus; }
Fe Field::delta() const { return impl_->delta; }

Fe Field::add(Fe a, Fe b) const {
    check_element(*impl_, a);
    check_element(*impl_, b);
    return impl_add(*impl_, a, b);
}

Fe Field::sub(Fe a, Fe b) const {
    check_element(*impl_, a);
    check_element(*impl_, b);
    return impl_add(*impl_, a, impl_neg(*impl_, b));
}

Fe Field::neg(Fe a) const {
    check_element(*impl_, a);
    return impl_neg(*impl_, a);
}

Fe Field::mul(Fe a, Fe b) const {
    check_element(*impl_, a);
    check_element(*impl_, b);
    return impl_mul(*impl_, a, b);
}

Fe Field::inv(Fe a) const {
    check_element(*impl_, a);
    return impl_inv(*impl_, a);
}

Fe Field::pow(Fe a, std::int64_t e) const {
    check_element(*impl_, a);
    return impl_pow(*impl_, a, e);
}

Fe Field::from_int(std::uint64_t v) const {
    if (v >= impl_->q) throw std::out_of_range("canonical integer outside field");
    return Fe{v};
}

std::uint64_t Field::to_int(Fe a) const {
    check_element(*impl_, a);
    return a.v;
}

std::vector<std::uint64_t> Field::coeffs(Fe a) const {
    check_element(*impl_, a);
    std::vector<std::uint64_t> out(impl_->beta);
    std::uint64_t v = a.v;
    for (std::uint32_t i = 0; i < impl_->beta; ++i) {
        out[i] = v % impl_->p;
        v /= impl_->p;
    }
    return out;
}

Fe Field::from_coeffs(std::span<const std::uint64_t> c) const {
    if (c.size() != impl_->beta) throw std::invalid_argument("coefficient vector has wrong length");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= impl_->p) throw std::out_of_range("coefficient out of range");
        v = v * impl_->p + c[i];
    }
    return Fe{v};
}

std::string Field::name() const {
    if (impl_->beta == 1) return "GF(" + std::to_string(impl_->p) + ")";
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->beta) + ")";
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->beta == other.impl_->beta &&
           impl_->modulus == other.impl_->modulus;
}

}  // namespace fmds
