#include "hypat/scalar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "hypat/errors.hpp"

namespace hypat {

namespace {

using Poly = std::vector<mpq_class>; // index = degree

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic-leading b (exact rational division), remainder left in a.
Poly divmod(Poly& a, const Poly& b) {
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return q;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 (mod p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    check_internal(r == 1, "invmod: argument not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_mpq(const std::string& s) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw parse_error("bad rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw parse_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

unsigned euler_phi(unsigned s) {
    unsigned result = s;
    for (unsigned d = 2; d * d <= s; ++d) {
        if (s % d == 0) {
            result -= result / d;
            while (s % d == 0) s /= d;
        }
    }
    if (s > 1) result -= result / s;
    return result;
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned s) {
    static std::map<unsigned, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);

    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    // Phi_s = (x^s - 1) / prod_{d | s, d < s} Phi_d, computed with the cache held
    // (recursion unrolled over increasing divisors, so no re-entry).
    std::function<const std::vector<mpz_class>&(unsigned)> get =
        [&](unsigned m) -> const std::vector<mpz_class>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        Poly num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const auto& phi_d = get(d);
            Poly divisor(phi_d.size());
            for (std::size_t i = 0; i < phi_d.size(); ++i) divisor[i] = mpq_class(phi_d[i]);
            Poly rem = num;
            Poly q = divmod(rem, divisor);
            check_internal(rem.empty(), "cyclotomic division not exact");
            num = std::move(q);
        }
        std::vector<mpz_class> out(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) {
            check_internal(num[i].get_den() == 1, "cyclotomic polynomial not integral");
            out[i] = num[i].get_num();
        }
        return cache.emplace(m, std::move(out)).first->second;
    };
    return get(s);
}

FieldDescriptor FieldDescriptor::rational() {
    FieldDescriptor f;
    f.kind_ = FieldKind::Rational;
    return f;
}

FieldDescriptor FieldDescriptor::cyclotomic(unsigned s) {
    require(s >= 2, "cyclotomic order must be >= 2");
    FieldDescriptor f;
    f.kind_ = FieldKind::Cyclotomic;
    f.s_ = s;
    f.degree_ = euler_phi(s);
    return f;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    require(p >= 2 && p < (1ull << 62), "prime-field modulus out of range");
    require(is_prime_u64(p), "prime-field modulus must be prime");
    FieldDescriptor f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

unsigned FieldDescriptor::order() const {
    require(kind_ == FieldKind::Cyclotomic, "order() requires a cyclotomic field");
    return s_;
}

std::uint64_t FieldDescriptor::modulus() const {
    require(kind_ == FieldKind::PrimeField, "modulus() requires a prime field");
    return p_;
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case FieldKind::Rational: return "q";
        case FieldKind::Cyclotomic: return "zeta:" + std::to_string(s_);
        case FieldKind::PrimeField: return "gf:" + std::to_string(p_);
    }
    return "?";
}

FieldDescriptor FieldDescriptor::parse(const std::string& raw) {
    std::string text = strip(raw);
    if (text == "q") return rational();
    auto starts = [&](const char* pfx) { return text.rfind(pfx, 0) == 0; };
    try {
        if (starts("zeta:")) return cyclotomic(static_cast<unsigned>(std::stoul(text.substr(5))));
        if (starts("gf:")) return prime_field(std::stoull(text.substr(3)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw parse_error("bad field descriptor: '" + raw + "' (expected q, zeta:S, or gf:P)");
}

Scalar Scalar::zero(const FieldDescriptor& f) {
    Scalar x(f);
    if (f.kind() == FieldKind::Cyclotomic) x.coords_.assign(f.degree(), 0);
    return x;
}

Scalar Scalar::one(const FieldDescriptor& f) {
    Scalar x = zero(f);
    switch (f.kind()) {
        case FieldKind::Rational: x.rat_ = 1; break;
        case FieldKind::Cyclotomic: x.coords_[0] = 1; break;
        case FieldKind::PrimeField: x.res_ = 1 % f.modulus(); break;
    }
    return x;
}

Scalar Scalar::from_integer(long v, const FieldDescriptor& f) {
    return from_rational(mpq_class(v), f);
}

Scalar Scalar::from_rational(const mpq_class& q, const FieldDescriptor& f) {
    Scalar x = zero(f);
    switch (f.kind()) {
        case FieldKind::Rational: x.rat_ = q; x.rat_.canonicalize(); break;
        case FieldKind::Cyclotomic: x.coords_[0] = q; x.coords_[0].canonicalize(); break;
        case FieldKind::PrimeField: {
            mpz_class p(static_cast<unsigned long>(f.modulus()));
            mpz_class num = q.get_num() % p;
            if (num < 0) num += p;
            mpz_class den = q.get_den() % p;
            require(den != 0, "rational has zero denominator in GF(p)");
            std::uint64_t n64 = num.get_ui();
            std::uint64_t d64 = den.get_ui();
            x.res_ = mulmod_u64(n64, invmod_u64(d64, f.modulus()), f.modulus());
            break;
        }
    }
    return x;
}

Scalar Scalar::from_coords(std::vector<mpq_class> coords, unsigned s) {
    FieldDescriptor f = FieldDescriptor::cyclotomic(s);
    require(coords.size() <= f.degree(), "too many cyclotomic coordinates");
    Scalar x = zero(f);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        x.coords_[i] = std::move(coords[i]);
        x.coords_[i].canonicalize();
    }
    return x;
}

Scalar Scalar::from_residue(std::uint64_t r, std::uint64_t p) {
    FieldDescriptor f = FieldDescriptor::prime_field(p);
    Scalar x = zero(f);
    x.res_ = r % p;
    return x;
}

Scalar Scalar::root_of_unity(unsigned s, long long j) {
    FieldDescriptor f = FieldDescriptor::cyclotomic(s);
    long long jm = ((j % static_cast<long long>(s)) + s) % s;
    const auto& phi = cyclotomic_polynomial(s);
    unsigned deg = f.degree();
    Poly v(static_cast<std::size_t>(jm) + 1, 0);
    v.back() = 1;
    // reduce x^jm modulo the monic Phi_s
    for (std::size_t t = v.size(); t-- > deg;) {
        mpq_class c = v[t];
        if (c == 0) continue;
        v[t] = 0;
        for (unsigned i = 0; i < deg; ++i) v[t - deg + i] -= c * mpq_class(phi[i]);
    }
    Scalar x = zero(f);
    for (unsigned i = 0; i < deg && i < v.size(); ++i) x.coords_[i] = v[i];
    return x;
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_ == 0;
        case FieldKind::Cyclotomic:
            return std::all_of(coords_.begin(), coords_.end(),
                               [](const mpq_class& c) { return c == 0; });
        case FieldKind::PrimeField: return res_ == 0;
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator-() const {
    Scalar x = *this;
    switch (field_.kind()) {
        case FieldKind::Rational: x.rat_ = -x.rat_; break;
        case FieldKind::Cyclotomic:
            for (auto& c : x.coords_) c = -c;
            break;
        case FieldKind::PrimeField:
            x.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
            break;
    }
    return x;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require(field_ == o.field_, "scalar field mismatch");
    Scalar x = *this;
    switch (field_.kind()) {
        case FieldKind::Rational: x.rat_ += o.rat_; break;
        case FieldKind::Cyclotomic:
            for (std::size_t i = 0; i < coords_.size(); ++i) x.coords_[i] += o.coords_[i];
            break;
        case FieldKind::PrimeField: {
            std::uint64_t p = field_.modulus();
            x.res_ = res_ + o.res_;
            if (x.res_ >= p) x.res_ -= p;
            break;
        }
    }
    return x;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require(field_ == o.field_, "scalar field mismatch");
    Scalar x = zero(field_);
    switch (field_.kind()) {
        case FieldKind::Rational: x.rat_ = rat_ * o.rat_; break;
        case FieldKind::Cyclotomic: {
            unsigned deg = field_.degree();
            const auto& phi = cyclotomic_polynomial(field_.order());
            Poly conv(2 * deg - 1, 0);
            for (unsigned i = 0; i < deg; ++i) {
                if (coords_[i] == 0) continue;
                for (unsigned j = 0; j < deg; ++j) {
                    if (o.coords_[j] == 0) continue;
                    conv[i + j] += coords_[i] * o.coords_[j];
                }
            }
            for (std::size_t t = conv.size(); t-- > deg;) {
                mpq_class c = conv[t];
                if (c == 0) continue;
                conv[t] = 0;
                for (unsigned i = 0; i < deg; ++i) conv[t - deg + i] -= c * mpq_class(phi[i]);
            }
            for (unsigned i = 0; i < deg; ++i) x.coords_[i] = conv[i];
            break;
        }
        case FieldKind::PrimeField:
            x.res_ = mulmod_u64(res_, o.res_, field_.modulus());
            break;
    }
    return x;
}

Scalar Scalar::inverse() const {
    require(!is_zero(), "inversion of zero");
    Scalar x = zero(field_);
    switch (field_.kind()) {
        case FieldKind::Rational: x.rat_ = 1 / rat_; break;
        case FieldKind::Cyclotomic: {
            unsigned deg = field_.degree();
            const auto& phi_z = cyclotomic_polynomial(field_.order());
            Poly phi(phi_z.size());
            for (std::size_t i = 0; i < phi_z.size(); ++i) phi[i] = mpq_class(phi_z[i]);
            Poly r0(coords_.begin(), coords_.end());
            trim(r0);
            Poly r1 = phi;
            Poly s0{mpq_class(1)}, s1{};
            while (!r1.empty()) {
                Poly rem = r0;
                Poly q = divmod(rem, r1);
                r0 = std::move(r1);
                r1 = std::move(rem);
                // s_new = s0 - q * s1
                Poly snew = s0;
                for (std::size_t i = 0; i < q.size(); ++i) {
                    if (q[i] == 0) continue;
                    if (snew.size() < s1.size() + i + 1) snew.resize(s1.size() + i + 1, 0);
                    for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
                }
                trim(snew);
                s0 = std::move(s1);
                s1 = std::move(snew);
            }
            check_internal(r0.size() == 1, "cyclotomic gcd is not a unit");
            // inverse = s0 / r0[0], reduced mod Phi
            for (auto& c : s0) c /= r0[0];
            for (std::size_t t = s0.size(); t-- > deg;) {
                mpq_class c = s0[t];
                if (c == 0) continue;
                s0[t] = 0;
                for (unsigned i = 0; i < deg; ++i) s0[t - deg + i] -= c * phi[i];
            }
            for (unsigned i = 0; i < deg && i < s0.size(); ++i) x.coords_[i] = s0[i];
            break;
        }
        case FieldKind::PrimeField:
            x.res_ = invmod_u64(res_, field_.modulus());
            break;
    }
    return x;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    switch (field_.kind()) {
        case FieldKind::Rational: return rat_ == o.rat_;
        case FieldKind::Cyclotomic: return coords_ == o.coords_;
        case FieldKind::PrimeField: return res_ == o.res_;
    }
    return false;
}

const mpq_class& Scalar::rational_value() const {
    require(field_.kind() == FieldKind::Rational, "not a rational scalar");
    return rat_;
}

const std::vector<mpq_class>& Scalar::coords() const {
    require(field_.kind() == FieldKind::Cyclotomic, "not a cyclotomic scalar");
    return coords_;
}

std::uint64_t Scalar::residue_value() const {
    require(field_.kind() == FieldKind::PrimeField, "not a prime-field scalar");
    return res_;
}

std::string Scalar::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Rational: return mpq_str(rat_);
        case FieldKind::Cyclotomic: {
            std::ostringstream os;
            os << '[';
            for (std::size_t i = 0; i < coords_.size(); ++i) {
                if (i) os << ", ";
                os << mpq_str(coords_[i]);
            }
            os << "]@zeta_" << field_.order();
            return os.str();
        }
        case FieldKind::PrimeField:
            return std::to_string(res_) + " mod " + std::to_string(field_.modulus());
    }
    return "?";
}

Scalar Scalar::parse(const std::string& raw) {
    std::string text = strip(raw);
    require(!text.empty(), "empty scalar literal");
    if (text.front() == '[') {
        auto close = text.find(']');
        if (close == std::string::npos) throw parse_error("unterminated coordinate list: '" + raw + "'");
        std::string tail = strip(text.substr(close + 1));
        if (tail.rfind("@zeta_", 0) != 0) throw parse_error("missing @zeta_S suffix: '" + raw + "'");
        unsigned s = 0;
        try {
            s = static_cast<unsigned>(std::stoul(tail.substr(6)));
        } catch (...) {
            throw parse_error("bad cyclotomic order: '" + raw + "'");
        }
        std::vector<mpq_class> coords;
        std::string body = text.substr(1, close - 1);
        std::istringstream is(body);
        std::string piece;
        while (std::getline(is, piece, ',')) {
            piece = strip(piece);
            if (!piece.empty()) coords.push_back(parse_mpq(piece));
        }
        return from_coords(std::move(coords), s);
    }
    auto mod_pos = text.find(" mod ");
    if (mod_pos != std::string::npos) {
        try {
            std::uint64_t r = std::stoull(strip(text.substr(0, mod_pos)));
            std::uint64_t p = std::stoull(strip(text.substr(mod_pos + 5)));
            return from_residue(r, p);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad residue literal: '" + raw + "'");
        } catch (const std::out_of_range&) {
            throw parse_error("residue literal out of range: '" + raw + "'");
        }
    }
    return from_rational(parse_mpq(text), FieldDescriptor::rational());
}

void Scalar::canonicalize() {
    switch (field_.kind()) {
        case FieldKind::Rational: rat_.canonicalize(); break;
        case FieldKind::Cyclotomic:
            for (auto& c : coords_) c.canonicalize();
            break;
        case FieldKind::PrimeField: res_ %= field_.modulus(); break;
    }
}

} // namespace hypat
