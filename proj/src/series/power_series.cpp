#include <picard/power_series.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace picard {

std::string_view var_name(Var v)
{
    switch (v) {
    case Var::z: return "z";
    case Var::q: return "q";
    case Var::t: return "t";
    }
    return "?";
}

Var parse_var(std::string_view name)
{
    if (name == "z") return Var::z;
    if (name == "q") return Var::q;
    if (name == "t") return Var::t;
    throw PreconditionError("unknown series variable '" + std::string(name) + "'");
}

namespace {

void require_same_var(const PowerSeries& a, const PowerSeries& b)
{
    if (a.var() != b.var()) {
        throw PreconditionError("series variable mismatch: " + std::string(var_name(a.var())) +
                                " vs " + std::string(var_name(b.var())));
    }
}

Integer denominator_lcm(std::span<const Rational> xs)
{
    Integer l = 1;
    for (const auto& x : xs) {
        if (x.get_den() != 1) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
    }
    return l;
}

std::vector<Integer> scale_to_integers(std::span<const Rational> xs, const Integer& den)
{
    std::vector<Integer> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        if (x.get_den() == den) {
            out.push_back(x.get_num());
        } else {
            Integer k = den / x.get_den();
            out.push_back(x.get_num() * k);
        }
    }
    return out;
}

// First `len` coefficients of the product of two dense coefficient lists.
// Both inputs are brought to a common denominator so the inner loop runs on
// integers; one canonicalisation per output coefficient.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                               std::size_t len)
{
    std::vector<Rational> out(len);
    if (a.empty() || b.empty() || len == 0) {
        return out;
    }
    const Integer da = denominator_lcm(a);
    const Integer db = denominator_lcm(b);
    const auto ia = scale_to_integers(a, da);
    const auto ib = scale_to_integers(b, db);
    const Integer den = da * db;
    Integer acc;
    for (std::size_t k = 0; k < len; ++k) {
        acc = 0;
        const std::size_t lo = k >= ib.size() ? k - ib.size() + 1 : 0;
        const std::size_t hi = std::min(k, ia.size() - 1);
        for (std::size_t i = lo; i <= hi && i < ia.size(); ++i) {
            mpz_addmul(acc.get_mpz_t(), ia[i].get_mpz_t(), ib[k - i].get_mpz_t());
        }
        out[k] = make_rational(acc, den);
    }
    return out;
}

} // namespace

PowerSeries::PowerSeries(Var var, int order) : var_(var), valuation_(order), order_(order) {}

PowerSeries::PowerSeries(Var var, int valuation, std::vector<Rational> coeffs, int order)
    : var_(var), valuation_(valuation), order_(order), coeffs_(std::move(coeffs))
{
    if (valuation > order) {
        if (std::any_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; })) {
            throw PreconditionError("series coefficients beyond its order");
        }
        coeffs_.clear();
        valuation_ = order;
    }
    const auto len = static_cast<std::size_t>(order_ - valuation_);
    if (coeffs_.size() > len) {
        if (std::any_of(coeffs_.begin() + static_cast<std::ptrdiff_t>(len), coeffs_.end(),
                        [](const Rational& c) { return c != 0; })) {
            throw PreconditionError("series coefficients beyond its order");
        }
    }
    coeffs_.resize(len);
    normalize();
}

PowerSeries PowerSeries::constant(Var var, const Rational& c, int order)
{
    return monomial(var, 0, c, order);
}

PowerSeries PowerSeries::monomial(Var var, int exponent, const Rational& c, int order)
{
    if (exponent >= order) {
        return PowerSeries(var, order);
    }
    return PowerSeries(var, exponent, {c}, order);
}

PowerSeries PowerSeries::variable(Var var, int order)
{
    return monomial(var, 1, 1, order);
}

PowerSeries PowerSeries::geometric(Var var, const Rational& ratio, int order)
{
    std::vector<Rational> cs;
    Rational p = 1;
    for (int n = 0; n < order; ++n) {
        cs.push_back(p);
        p *= ratio;
    }
    return PowerSeries(var, 0, std::move(cs), order);
}

PowerSeries PowerSeries::from_integers(Var var, int valuation, const std::vector<long long>& coeffs,
                                       int order)
{
    std::vector<Rational> cs;
    cs.reserve(coeffs.size());
    for (auto c : coeffs) {
        cs.emplace_back(Integer(std::to_string(c)));
    }
    return PowerSeries(var, valuation, std::move(cs), order);
}

void PowerSeries::normalize()
{
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }
}

Rational PowerSeries::coeff(int exponent) const
{
    if (exponent >= order_) {
        throw PreconditionError("coefficient of " + std::string(var_name(var_)) + "^" +
                                std::to_string(exponent) + " is beyond the series order " +
                                std::to_string(order_));
    }
    if (exponent < valuation_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

const Rational& PowerSeries::leading() const
{
    if (coeffs_.empty()) {
        throw PreconditionError("zero series has no leading coefficient");
    }
    return coeffs_.front();
}

PowerSeries PowerSeries::truncated(int order) const
{
    if (order >= order_) {
        return *this;
    }
    PowerSeries out(var_, order);
    if (order > valuation_) {
        out.valuation_ = valuation_;
        out.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (order - valuation_));
        out.normalize();
    }
    return out;
}

PowerSeries PowerSeries::extended(int order) const
{
    if (order <= order_) {
        return truncated(order);
    }
    PowerSeries out(var_, order);
    if (!coeffs_.empty()) {
        out.valuation_ = valuation_;
        out.coeffs_ = coeffs_;
        out.coeffs_.resize(static_cast<std::size_t>(order - valuation_));
    }
    return out;
}

PowerSeries PowerSeries::shifted(int k) const
{
    PowerSeries out = *this;
    out.valuation_ += k;
    out.order_ += k;
    return out;
}

PowerSeries PowerSeries::with_var(Var var) const
{
    PowerSeries out = *this;
    out.var_ = var;
    return out;
}

PowerSeries PowerSeries::operator-() const
{
    PowerSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs)
{
    require_same_var(*this, rhs);
    const int order = std::min(order_, rhs.order_);
    const int val = std::min(valuation_, rhs.valuation_);
    if (val >= order) {
        *this = PowerSeries(var_, order);
        return *this;
    }
    std::vector<Rational> cs(static_cast<std::size_t>(order - val));
    for (int n = std::max(valuation_, val); n < std::min(order_, order); ++n) {
        cs[static_cast<std::size_t>(n - val)] = coeffs_[static_cast<std::size_t>(n - valuation_)];
    }
    for (int n = rhs.valuation_; n < order; ++n) {
        cs[static_cast<std::size_t>(n - val)] += rhs.coeffs_[static_cast<std::size_t>(n - rhs.valuation_)];
    }
    coeffs_ = std::move(cs);
    valuation_ = val;
    order_ = order;
    normalize();
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs)
{
    return *this += -rhs;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    require_same_var(a, b);
    const int order = std::min(a.valuation_ + b.order_, b.valuation_ + a.order_);
    if (a.is_zero() || b.is_zero()) {
        return PowerSeries(a.var_, order);
    }
    const int val = a.valuation_ + b.valuation_;
    if (val >= order) {
        return PowerSeries(a.var_, order);
    }
    auto cs = convolve(a.coeffs_, b.coeffs_, static_cast<std::size_t>(order - val));
    return PowerSeries(a.var_, val, std::move(cs), order);
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs)
{
    return *this = *this * rhs;
}

PowerSeries& PowerSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        *this = PowerSeries(var_, order_);
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

PowerSeries operator+(PowerSeries a, const Rational& c)
{
    return a += PowerSeries::constant(a.var(), c, a.order());
}

PowerSeries operator-(PowerSeries a, const Rational& c)
{
    return a -= PowerSeries::constant(a.var(), c, a.order());
}

PowerSeries PowerSeries::inverse() const
{
    if (is_zero()) {
        throw PreconditionError("division by the zero series");
    }
    // x^v * u  ->  x^-v * u^-1, with u^-1 known to the relative precision of u.
    const int rel = order_ - valuation_;
    std::vector<Rational> inv(static_cast<std::size_t>(rel));
    const Rational b0_inv = 1 / coeffs_[0];
    inv[0] = b0_inv;
    Rational acc;
    for (int n = 1; n < rel; ++n) {
        acc = 0;
        for (int k = 1; k <= n; ++k) {
            acc += coeffs_[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
        }
        inv[static_cast<std::size_t>(n)] = -acc * b0_inv;
    }
    return PowerSeries(var_, -valuation_, std::move(inv), rel - valuation_);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b)
{
    require_same_var(a, b);
    if (b.is_zero()) {
        throw PreconditionError("division by the zero series");
    }
    // Long division  c_n = (a_n - sum_{k>=1} b_k c_{n-k}) / b_0  avoids forming 1/b.
    const int order = std::min(a.order_ - b.valuation_, a.valuation_ + b.order_ - 2 * b.valuation_);
    const int val = a.valuation_ - b.valuation_;
    if (a.is_zero() || val >= order) {
        return PowerSeries(a.var_, order);
    }
    const auto len = static_cast<std::size_t>(order - val);
    std::vector<Rational> c(len);
    const Rational b0_inv = 1 / b.coeffs_[0];
    Rational acc;
    for (std::size_t n = 0; n < len; ++n) {
        acc = n < a.coeffs_.size() ? a.coeffs_[n] : Rational(0);
        const std::size_t kmax = std::min(n, b.coeffs_.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            acc -= b.coeffs_[k] * c[n - k];
        }
        c[n] = acc * b0_inv;
    }
    return PowerSeries(a.var_, val, std::move(c), order);
}

PowerSeries& PowerSeries::operator/=(const PowerSeries& rhs)
{
    return *this = *this / rhs;
}

bool operator==(const PowerSeries& a, const PowerSeries& b)
{
    return a.var_ == b.var_ && a.order_ == b.order_ && a.valuation_ == b.valuation_ &&
           a.coeffs_ == b.coeffs_;
}

PowerSeries PowerSeries::pow(int n) const
{
    if (n < 0) {
        return inverse().pow(-n);
    }
    PowerSeries result(var_, 0);
    PowerSeries base = *this;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    if (first) {
        // x^0: exact constant, but keep a finite relative order.
        return constant(var_, 1, order_ - valuation_);
    }
    return result;
}

std::string PowerSeries::to_string() const
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        const int e = valuation_ + static_cast<int>(i);
        const auto c = picard::to_string(coeffs_[i]);
        if (any) {
            os << (coeffs_[i] < 0 ? " - " : " + ");
        } else if (coeffs_[i] < 0) {
            os << "-";
        }
        const Rational mag = abs(coeffs_[i]);
        if (e == 0 || mag != 1) {
            os << picard::to_string(mag);
        }
        if (e != 0) {
            os << var_name(var_);
            if (e != 1) {
                os << "^" << e;
            }
        }
        any = true;
    }
    if (any) {
        os << " + ";
    }
    os << "O(" << var_name(var_) << "^" << order_ << ")";
    return os.str();
}

PowerSeries arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op)
{
    switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
    }
    throw PreconditionError("unknown series operation");
}

PowerSeries evaluate_polynomial(std::span<const Rational> coeffs, const PowerSeries& x)
{
    if (x.valuation() < 0) {
        throw PreconditionError("polynomial evaluation needs a series without poles");
    }
    int top = static_cast<int>(coeffs.size()) - 1;
    while (top >= 0 && coeffs[static_cast<std::size_t>(top)] == 0) {
        --top;
    }
    int kmin = -1;
    for (int k = 1; k <= top; ++k) {
        if (coeffs[static_cast<std::size_t>(k)] != 0) {
            kmin = k;
            break;
        }
    }
    const int order = kmin < 0 ? x.order() : x.order() + (kmin - 1) * x.valuation();
    if (top < 0) {
        return PowerSeries(x.var(), order);
    }
    const PowerSeries xe = x.extended(order);
    PowerSeries acc = PowerSeries::constant(x.var(), coeffs[static_cast<std::size_t>(top)], order);
    for (int k = top - 1; k >= 0; --k) {
        acc = (acc * xe).truncated(order);
        acc += PowerSeries::constant(x.var(), coeffs[static_cast<std::size_t>(k)], order);
    }
    return acc.truncated(order);
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner)
{
    if (inner.valuation() < 1) {
        throw PreconditionError("composition needs an inner series without constant term");
    }
    const int vi = inner.valuation();
    const int vo = outer.valuation();
    // Unknown outer terms enter at x^(vi*No); an error in inner at x^Ni enters
    // through the lowest nonconstant outer term x^k as x^((k-1)vi + Ni).
    long long order = static_cast<long long>(vi) * outer.order();
    const auto cs = outer.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const int e = vo + static_cast<int>(i);
        if (e != 0 && cs[i] != 0) {
            order = std::min<long long>(order, static_cast<long long>(e - 1) * vi + inner.order());
            break;
        }
    }
    const int target = static_cast<int>(order);
    if (outer.is_zero()) {
        return PowerSeries(inner.var(), target);
    }
    if (vo >= 0) {
        std::vector<Rational> dense(static_cast<std::size_t>(vo), Rational(0));
        dense.insert(dense.end(), cs.begin(), cs.end());
        // Terms x^e with e*vi >= target contribute nothing.
        const auto needed = static_cast<std::size_t>(std::max(0, (target + vi - 1) / vi));
        if (dense.size() > needed) {
            dense.resize(needed);
        }
        return evaluate_polynomial(dense, inner.extended(target)).truncated(target);
    }
    // Laurent outer: (sum_i c_{vo+i} x^i) * x^vo.
    const int work = target - vo * vi + vi;
    const PowerSeries ie = inner.extended(work + 2 * vi);
    PowerSeries head = evaluate_polynomial(cs, ie).truncated(work);
    PowerSeries out = head * ie.pow(vo);
    return out.truncated(target);
}

PowerSeries revert(const PowerSeries& f, Var target)
{
    if (f.valuation() != 1) {
        throw PreconditionError("reversion needs a series of valuation exactly 1");
    }
    const int n = f.order();
    const Rational a1 = f.coeff(1);
    PowerSeries x = PowerSeries::variable(target, n);
    PowerSeries g = PowerSeries::monomial(target, 1, 1 / a1, std::min(2, n));
    int prec = std::min(2, n);
    while (prec < n) {
        prec = std::min(2 * prec, n);
        const PowerSeries fp = f.truncated(prec);
        const PowerSeries ge = g.extended(prec);
        const PowerSeries residual = compose(fp, ge) - x.truncated(prec);
        const PowerSeries slope = compose(plain_derive(fp), ge);
        g = (ge - residual.with_var(target) / slope).truncated(prec);
        g = g.extended(prec);
    }
    return g.truncated(n);
}

PowerSeries revert(const PowerSeries& f)
{
    switch (f.var()) {
    case Var::z: return revert(f, Var::q);
    case Var::q: return revert(f, Var::z);
    case Var::t: return revert(f, Var::t);
    }
    return revert(f, Var::t);
}

PowerSeries revert_naive(const PowerSeries& f, Var target)
{
    if (f.valuation() != 1) {
        throw PreconditionError("reversion needs a series of valuation exactly 1");
    }
    const int n = f.order();
    const Rational a1_inv = 1 / f.coeff(1);
    const PowerSeries x = PowerSeries::variable(target, n);
    PowerSeries g = PowerSeries::monomial(target, 1, a1_inv, n);
    // Each pass fixes at least one more coefficient.
    for (int pass = 1; pass < n; ++pass) {
        const PowerSeries err = compose(f, g.extended(n)).truncated(n) - x;
        if (err.is_zero()) {
            break;
        }
        g = (g - err * a1_inv).extended(n);
    }
    return g;
}

PowerSeries exp(const PowerSeries& f)
{
    if (f.is_zero()) {
        return PowerSeries::constant(f.var(), 1, f.order());
    }
    if (f.valuation() < 1) {
        throw PreconditionError("exp needs a series with zero constant term");
    }
    const int n = f.order();
    // n e_n = sum_{k=1}^n k f_k e_{n-k}
    std::vector<Rational> fk(static_cast<std::size_t>(n));
    for (int k = f.valuation(); k < n; ++k) {
        fk[static_cast<std::size_t>(k)] = f.coeff(k) * k;
    }
    std::vector<Rational> e(static_cast<std::size_t>(n));
    e[0] = 1;
    Rational acc;
    for (int m = 1; m < n; ++m) {
        acc = 0;
        for (int k = f.valuation(); k <= m; ++k) {
            acc += fk[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(m - k)];
        }
        e[static_cast<std::size_t>(m)] = acc / m;
    }
    return PowerSeries(f.var(), 0, std::move(e), n);
}

PowerSeries log(const PowerSeries& f)
{
    if (f.valuation() != 0 || f.leading() != 1) {
        throw PreconditionError("log needs a series with constant term 1");
    }
    const int n = f.order();
    // n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
    std::vector<Rational> l(static_cast<std::size_t>(n));
    Rational acc;
    for (int m = 1; m < n; ++m) {
        acc = f.coeff(m) * m;
        for (int k = 1; k < m; ++k) {
            const auto& fc = f.coeffs()[static_cast<std::size_t>(m - k)];
            if (fc != 0) {
                acc -= l[static_cast<std::size_t>(k)] * k * fc;
            }
        }
        l[static_cast<std::size_t>(m)] = acc / m;
    }
    return PowerSeries(f.var(), 0, std::move(l), n);
}

PowerSeries euler_derive(const PowerSeries& f, int repeat)
{
    if (repeat <= 0 || f.is_zero()) {
        return f;
    }
    std::vector<Rational> cs(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const int e = f.valuation() + static_cast<int>(i);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(std::abs(e)),
                      static_cast<unsigned long>(repeat));
        if (e < 0 && (repeat % 2 == 1)) {
            scale = -scale;
        }
        cs[i] *= scale;
    }
    return PowerSeries(f.var(), f.valuation(), std::move(cs), f.order());
}

PowerSeries plain_derive(const PowerSeries& f)
{
    if (f.is_zero()) {
        return PowerSeries(f.var(), f.order() - 1);
    }
    std::vector<Rational> cs(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] *= f.valuation() + static_cast<int>(i);
    }
    return PowerSeries(f.var(), f.valuation() - 1, std::move(cs), f.order() - 1);
}

} // namespace picard
