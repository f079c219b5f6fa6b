#pragma once
/*
 * Sparse multivariate polynomials with exact rational coefficients.
 *
 * Exponent vectors are packed one byte per variable into a 64-bit word,
 * variable 0 in the most significant byte, so that integer comparison is
 * lexicographic comparison.  Each exponent is limited to 127, which keeps
 * the top bit of every lane free for the divisibility test.
 */

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dvc {

using Rational = mpq_class;

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 127;

class Exponent {
public:
    constexpr Exponent() = default;
    static constexpr Exponent from_bits(std::uint64_t b) { Exponent e; e.bits_ = b; return e; }
    static Exponent unit(int var, int power = 1);
    static Exponent from(const std::vector<int>& exps);

    constexpr std::uint64_t bits() const { return bits_; }
    int operator[](int var) const { return static_cast<int>((bits_ >> shift(var)) & 0xffu); }
    void set(int var, int value);
    int degree() const;
    bool is_zero() const { return bits_ == 0; }

    Exponent operator+(Exponent o) const;
    // Requires o.divides(*this).
    Exponent operator-(Exponent o) const { return from_bits(bits_ - o.bits_); }
    bool divides(Exponent o) const
    {
        constexpr std::uint64_t guard = 0x8080808080808080ull;
        return (((o.bits_ | guard) - bits_) & guard) == guard;
    }
    Exponent lcm(Exponent o) const;
    Exponent gcd(Exponent o) const;
    bool coprime(Exponent o) const { return gcd(o).is_zero(); }

    friend constexpr bool operator==(Exponent a, Exponent b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(Exponent a, Exponent b) { return a.bits_ < b.bits_; }

private:
    static constexpr int shift(int var) { return 8 * (kMaxVars - 1 - var); }
    std::uint64_t bits_ = 0;
};

// Immutable, shared list of variable names.
class VarList {
public:
    VarList() = default;
    VarList(std::initializer_list<std::string> names);
    explicit VarList(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_->size()); }
    const std::string& operator[](int i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }
    int index_of(const std::string& name) const;  // -1 when absent

    friend bool operator==(const VarList& a, const VarList& b)
    {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_ =
        std::make_shared<const std::vector<std::string>>();
};

VarList default_vars();   // x, y, z, t
VarList surface_vars();   // u, v, w

class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}
    MultiPoly(VarList vars, const Rational& c);
    MultiPoly(VarList vars, Exponent e, const Rational& c);

    static MultiPoly variable(const VarList& vars, int i);
    static MultiPoly variable(const VarList& vars, const std::string& name);

    const VarList& vars() const { return vars_; }
    int nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(Exponent e) const;
    Rational constant_term() const { return coeff(Exponent{}); }

    int degree() const;  // -1 for zero
    int ord() const;     // lowest total degree, -1 for zero
    int degree_in(int var) const;
    int ord_in(int var) const;  // -1 for zero
    bool is_homogeneous() const;
    std::vector<int> used_vars() const;

    MultiPoly homogeneous_part(int d) const;
    MultiPoly truncate(int order) const;     // drop total degree > order
    MultiPoly part_between(int lo, int hi) const;
    MultiPoly derivative(int var) const;
    // Substitute var = value (a constant).
    MultiPoly evaluate(int var, const Rational& value) const;
    // Rename into a different variable list; map[i] is the target index of variable i.
    MultiPoly remap(const VarList& target, const std::vector<int>& map) const;

    void add_term(Exponent e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.terms_ == b.terms_ && a.vars_ == b.vars_;
    }

    // Canonical text: graded-lex descending, explicit * and ^.
    std::string to_string() const;

private:
    void check_same(const MultiPoly& o) const;
    VarList vars_;
    TermMap terms_;
};

// Product keeping only terms of total degree <= order.
MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int order);
MultiPoly pow_trunc(const MultiPoly& a, int e, int order);
// Inverse of a polynomial with nonzero constant term, as a jet of the given order.
MultiPoly inverse_unit(const MultiPoly& u, int order);

// Polynomial truncated at total degree N; arithmetic re-truncates.
class Jet {
public:
    Jet(MultiPoly p, int order);

    const MultiPoly& poly() const { return poly_; }
    int order() const { return order_; }
    const VarList& vars() const { return poly_.vars(); }

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend bool operator==(const Jet& a, const Jet& b)
    {
        return a.order_ == b.order_ && a.poly_ == b.poly_;
    }
    Jet inverse() const;  // requires unit

private:
    MultiPoly poly_;
    int order_;
};

// Split p by powers of one variable: result[k] is the coefficient of var^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var);
// Split p by monomials in the listed variables; keys use exponents in those variables only.
std::map<Exponent, MultiPoly> coefficients_in(const MultiPoly& p, const std::vector<int>& vars);

std::string rational_to_string(const Rational& q);

}  // namespace dvc
