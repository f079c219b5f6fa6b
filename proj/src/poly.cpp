#include "dvc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dvc {

Exponent Exponent::unit(int var, int power)
{
    Exponent e;
    e.set(var, power);
    return e;
}

Exponent Exponent::from(const std::vector<int>& exps)
{
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
        throw std::invalid_argument("too many variables");
    Exponent e;
    for (std::size_t i = 0; i < exps.size(); ++i) e.set(static_cast<int>(i), exps[i]);
    return e;
}

void Exponent::set(int var, int value)
{
    if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index");
    if (value < 0 || value > kMaxExponent) throw std::overflow_error("exponent out of range");
    const std::uint64_t mask = std::uint64_t{0xff} << shift(var);
    bits_ = (bits_ & ~mask) | (static_cast<std::uint64_t>(value) << shift(var));
}

int Exponent::degree() const
{
    int d = 0;
    for (std::uint64_t b = bits_; b; b >>= 8) d += static_cast<int>(b & 0xffu);
    return d;
}

Exponent Exponent::operator+(Exponent o) const
{
    constexpr std::uint64_t guard = 0x8080808080808080ull;
    const std::uint64_t s = bits_ + o.bits_;
    if (s & guard) throw std::overflow_error("exponent out of range");
    return from_bits(s);
}

Exponent Exponent::lcm(Exponent o) const
{
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r.set(i, std::max((*this)[i], o[i]));
    return r;
}

Exponent Exponent::gcd(Exponent o) const
{
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r.set(i, std::min((*this)[i], o[i]));
    return r;
}

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names))
{
}

VarList::VarList(std::vector<std::string> names)
{
    if (names.size() > static_cast<std::size_t>(kMaxVars))
        throw std::invalid_argument("too many variables");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

int VarList::index_of(const std::string& name) const
{
    auto it = std::find(names_->begin(), names_->end(), name);
    return it == names_->end() ? -1 : static_cast<int>(it - names_->begin());
}

VarList default_vars()
{
    static const VarList v{"x", "y", "z", "t"};
    return v;
}

VarList surface_vars()
{
    static const VarList v{"u", "v", "w"};
    return v;
}

MultiPoly::MultiPoly(VarList vars, const Rational& c) : vars_(std::move(vars))
{
    if (c != 0) terms_.emplace(Exponent{}, c);
}

MultiPoly::MultiPoly(VarList vars, Exponent e, const Rational& c) : vars_(std::move(vars))
{
    if (c != 0) terms_.emplace(e, c);
}

MultiPoly MultiPoly::variable(const VarList& vars, int i)
{
    if (i < 0 || i >= vars.size()) throw std::out_of_range("variable index");
    return MultiPoly(vars, Exponent::unit(i), 1);
}

MultiPoly MultiPoly::variable(const VarList& vars, const std::string& name)
{
    const int i = vars.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    return variable(vars, i);
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational MultiPoly::coeff(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

int MultiPoly::ord() const
{
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
    return d;
}

int MultiPoly::degree_in(int var) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MultiPoly::ord_in(int var) const
{
    if (terms_.empty()) return -1;
    int d = kMaxExponent;
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    return terms_.empty() || degree() == ord();
}

std::vector<int> MultiPoly::used_vars() const
{
    std::vector<int> out;
    for (int i = 0; i < nvars(); ++i)
        if (degree_in(i) > 0) out.push_back(i);
    return out;
}

MultiPoly MultiPoly::homogeneous_part(int d) const
{
    return part_between(d, d);
}

MultiPoly MultiPoly::truncate(int order) const
{
    return part_between(0, order);
}

MultiPoly MultiPoly::part_between(int lo, int hi) const
{
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        const int d = e.degree();
        if (d >= lo && d <= hi) r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const
{
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[var];
        if (k == 0) continue;
        Exponent f = e;
        f.set(var, k - 1);
        r.add_term(f, c * k);
    }
    return r;
}

MultiPoly MultiPoly::evaluate(int var, const Rational& value) const
{
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[var];
        Exponent f = e;
        f.set(var, 0);
        Rational v = c;
        for (int i = 0; i < k; ++i) v *= value;
        r.add_term(f, v);
    }
    return r;
}

MultiPoly MultiPoly::remap(const VarList& target, const std::vector<int>& map) const
{
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponent f;
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0) throw std::invalid_argument("remap drops a used variable");
            f.set(map[i], f[map[i]] + e[i]);
        }
        r.add_term(f, c);
    }
    return r;
}

void MultiPoly::add_term(Exponent e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same(const MultiPoly& o) const
{
    if (!(vars_ == o.vars_)) throw std::invalid_argument("polynomials over different variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

namespace {

struct DegTerm {
    Exponent e;
    int deg;
    const Rational* c;
};

std::vector<DegTerm> by_degree(const MultiPoly& p)
{
    std::vector<DegTerm> v;
    v.reserve(p.size());
    for (const auto& [e, c] : p.terms()) v.push_back({e, e.degree(), &c});
    std::stable_sort(v.begin(), v.end(), [](const DegTerm& a, const DegTerm& b) { return a.deg < b.deg; });
    return v;
}

}  // namespace

MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int order)
{
    if (!(a.vars() == b.vars())) throw std::invalid_argument("polynomials over different variables");
    MultiPoly r(a.vars());
    if (a.is_zero() || b.is_zero()) return r;
    const auto av = by_degree(a);
    const auto bv = by_degree(b);
    std::map<Exponent, Rational> acc;
    Rational prod;
    for (const auto& s : av) {
        if (s.deg + bv.front().deg > order) break;
        for (const auto& u : bv) {
            if (s.deg + u.deg > order) break;
            mpq_mul(prod.get_mpq_t(), s.c->get_mpq_t(), u.c->get_mpq_t());
            auto [it, inserted] = acc.try_emplace(s.e + u.e, prod);
            if (!inserted) it->second += prod;
        }
    }
    for (auto& [e, c] : acc)
        if (c != 0) r.add_term(e, c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    const int da = a.degree(), db = b.degree();
    return mul_trunc(a, b, da < 0 || db < 0 ? 0 : da + db);
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly r(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly pow_trunc(const MultiPoly& a, int e, int order)
{
    MultiPoly r(a.vars(), Rational(1));
    MultiPoly base = a.truncate(order);
    while (e) {
        if (e & 1) r = mul_trunc(r, base, order);
        e >>= 1;
        if (e) base = mul_trunc(base, base, order);
    }
    return r.truncate(order);
}

MultiPoly inverse_unit(const MultiPoly& u, int order)
{
    const Rational c0 = u.constant_term();
    if (c0 == 0) throw std::domain_error("not a unit: constant term vanishes");
    // u = c0 (1 - h);  1/u = (1/c0) (1 + h + h^2 + ...)
    MultiPoly h = u * Rational(-1 / c0);
    h.add_term(Exponent{}, 1);
    MultiPoly sum(u.vars(), Rational(1));
    MultiPoly power(u.vars(), Rational(1));
    for (int k = 1; k <= order; ++k) {
        power = mul_trunc(power, h, order);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * Rational(1 / c0);
}

Jet::Jet(MultiPoly p, int order) : poly_(p.truncate(order)), order_(order)
{
    if (order < 1) throw std::invalid_argument("jet order must be positive");
}

Jet operator+(const Jet& a, const Jet& b)
{
    const int n = std::min(a.order_, b.order_);
    return Jet(a.poly_ + b.poly_, n);
}

Jet operator-(const Jet& a, const Jet& b)
{
    const int n = std::min(a.order_, b.order_);
    return Jet(a.poly_ - b.poly_, n);
}

Jet operator*(const Jet& a, const Jet& b)
{
    const int n = std::min(a.order_, b.order_);
    return Jet(mul_trunc(a.poly_, b.poly_, n), n);
}

Jet Jet::inverse() const
{
    return Jet(inverse_unit(poly_, order_), order_);
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var)
{
    std::vector<MultiPoly> out;
    for (const auto& [e, c] : p.terms()) {
        const int k = e[var];
        if (static_cast<int>(out.size()) <= k) out.resize(k + 1, MultiPoly(p.vars()));
        Exponent f = e;
        f.set(var, 0);
        out[k].add_term(f, c);
    }
    return out;
}

std::map<Exponent, MultiPoly> coefficients_in(const MultiPoly& p, const std::vector<int>& vars)
{
    std::map<Exponent, MultiPoly> out;
    for (const auto& [e, c] : p.terms()) {
        Exponent key, rest = e;
        for (int v : vars) {
            key.set(v, e[v]);
            rest.set(v, 0);
        }
        auto it = out.try_emplace(key, MultiPoly(p.vars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

std::string rational_to_string(const Rational& q)
{
    return q.get_str();
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, const Rational*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(e, &c);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        const int da = a.first.degree(), db = b.first.degree();
        if (da != db) return da > db;
        return b.first < a.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, cp] : order) {
        Rational c = *cp;
        if (c < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool need_star = false;
        if (e.is_zero() || c != 1) {
            os << c.get_str();
            need_star = true;
        }
        for (int i = 0; i < nvars(); ++i) {
            const int k = e[i];
            if (k == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (k > 1) os << "^" << k;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace dvc
