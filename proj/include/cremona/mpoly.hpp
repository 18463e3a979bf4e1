#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

using Exponents = std::vector<int>;

/// Graded lexicographic order, descending, so that map iteration starts at
/// the leading term. Total degree first, then lex on the declared variable
/// order.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Rat with a fixed, ordered variable
/// list. Canonical form: no zero coefficients are stored, so two values over
/// the same variable list are equal iff their term maps are equal.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rat, GrlexDesc>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rat& c);
    static MPoly variable(std::vector<std::string> vars, std::size_t index);
    static MPoly monomial(std::vector<std::string> vars, Exponents exp, const Rat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t var_index(const std::string& name) const;
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term (zero if absent).
    Rat constant_term() const;
    /// Value of a constant polynomial; throws if not constant.
    Rat as_constant() const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const;
    bool is_homogeneous() const;

    Rat coeff(const Exponents& exp) const;
    void set_coeff(const Exponents& exp, const Rat& c);

    /// Leading term in descending grlex.
    const std::pair<const Exponents, Rat>& leading_term() const;
    Rat leading_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator*(const Rat& c) const;
    MPoly operator/(const Rat& c) const;
    MPoly pow(int e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(std::size_t var) const;

    /// Full evaluation at a rational point.
    Rat eval(const std::vector<Rat>& point) const;
    /// Substitute every variable by a polynomial over a common target list.
    MPoly substituted(const std::vector<MPoly>& images) const;
    /// Substitute a single variable by a rational constant (variable list is
    /// kept; the variable simply no longer occurs).
    MPoly eval_partial(std::size_t var, const Rat& value) const;

    /// Coefficients with respect to one variable, index i = coefficient of
    /// var^i, each a polynomial over the same list not depending on var.
    std::vector<MPoly> coeffs_in(std::size_t var) const;
    static MPoly from_coeffs_in(std::size_t var, const std::vector<MPoly>& coeffs,
                                const std::vector<std::string>& vars);

    /// Variable-list surgery. rename does not reorder; restricted drops
    /// variables the polynomial does not depend on.
    MPoly renamed(const std::vector<std::string>& new_vars) const;
    MPoly with_vars(const std::vector<std::string>& super_vars) const;
    MPoly restricted_to(const std::vector<std::string>& sub_vars) const;

    std::string str() const;

private:
    void check_same_vars(const MPoly& o) const;
    std::vector<std::string> vars_;
    TermMap terms_;  // invariant: no zero coefficients, exponent sizes match
};

MPoly operator*(const Rat& c, const MPoly& p);

/// Quotient of an exact division, or nullopt when g does not divide f.
/// Throws DomainError when g is zero.
std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g);

/// Largest k with d^k dividing f. Throws DomainError for f = 0 and
/// StructuralError for constant d.
int ord_divide(const MPoly& f, const MPoly& d);

/// GCD over Q, canonicalized to integer coefficients with content 1 and a
/// positive leading coefficient. Content/primitive-part recursion onto
/// univariate Euclid; primitive pseudo-remainder sequences in between.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Scales by a nonzero rational so all coefficients are integers with gcd 1
/// and the grlex-leading coefficient is positive. Zero maps to zero.
MPoly integer_primitive(const MPoly& p);

/// Sylvester resultant eliminating var. If exactly one argument is constant
/// in var (but nonzero), returns that argument raised to the other's degree.
/// Both constant in var: DegeneracyError.
MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);

/// (-1)^{d(d-1)/2} Res(f, df/dvar) for f monic of degree d >= 2 in var.
/// Non-monic or low degree input: DomainError.
MPoly discriminant(const MPoly& f, std::size_t var);

struct SquarefreeData {
    MPoly squarefree_part;
    bool is_squarefree = false;
};

/// For univariate nonzero f: squarefree part f/gcd(f, f') and whether f was
/// already squarefree. The squarefree part's degree counts distinct complex
/// roots.
SquarefreeData squarefree_data(const MPoly& f);

/// Determinant of a square matrix of polynomials over one variable list,
/// fraction-free (Bareiss).
MPoly poly_det(std::vector<std::vector<MPoly>> m);

/// All rational roots of a nonzero univariate polynomial, with
/// multiplicities, sorted ascending. Throws UnsupportedFieldError if the
/// divisor enumeration exceeds its budget.
std::vector<std::pair<Rat, int>> rational_roots(const MPoly& f);

}  // namespace cremona
