#ifndef KGS_BIVECTOR_HPP
#define KGS_BIVECTOR_HPP

#include <iosfwd>
#include <map>
#include <utility>

#include "kgs/polynomial.hpp"

namespace kgs {

/// Antisymmetric bivector on R^d with polynomial components P^{ij} = -P^{ji},
/// zero diagonal.  Indices are 0-based internally.
class PolyBivector {
public:
    explicit PolyBivector(int dim) : dim_(dim) {}

    int dimension() const { return dim_; }

    void set_component(int i, int j, Polynomial p);  // requires i < j

    /// P^{ij} for arbitrary i, j (antisymmetric, zero diagonal).
    Polynomial component(int i, int j) const;

    const std::map<std::pair<int, int>, Polynomial>& upper_components() const { return upper_; }

    /// Components translated by a rational shift of the coordinates.
    PolyBivector translated(const std::vector<Rational>& shift) const;

private:
    int dim_;
    std::map<std::pair<int, int>, Polynomial> upper_;  // i < j, nonzero only
};

/// Totally antisymmetric trivector with polynomial components.
class PolyTrivector {
public:
    explicit PolyTrivector(int dim) : dim_(dim) {}

    int dimension() const { return dim_; }
    void set_component(int i, int j, int k, Polynomial p);  // requires i < j < k
    Polynomial component(int i, int j, int k) const;        // any indices, signed
    bool is_zero() const { return sorted_.empty(); }
    const std::map<std::tuple<int, int, int>, Polynomial>& sorted_components() const {
        return sorted_;
    }

private:
    int dim_;
    std::map<std::tuple<int, int, int>, Polynomial> sorted_;
};

/// Jacobiator of P: Jac^{ijk} = sum_l (P^{il} d_l P^{jk} + P^{jl} d_l P^{ki} + P^{kl} d_l P^{ij}),
/// the trivector measuring the failure of the Jacobi identity.  Identically
/// zero exactly when P is Poisson.
PolyTrivector jacobiator(const PolyBivector& P);

// Built-in test structures.
PolyBivector so3_bivector();             // d=3 linear, Poisson: P^{12}=x3, P^{23}=x1, P^{13}=-x2
PolyBivector symplectic_2d();            // d=2 constant, Poisson: P^{12}=1
PolyBivector nonpoisson_quadratic();     // d=3: P^{12}=x1^2, P^{13}=x2, P^{23}=x3
PolyBivector nonpoisson_linear();        // d=3 affine, non-Poisson: P^{12}=x1, P^{13}=x3, P^{23}=x2

/// Reads the structure file format: line `dim d`, then lines `i j; <polynomial>`
/// with 1-based i < j and polynomials in x1..xd.
PolyBivector read_poisson_structure(std::istream& in);
void write_poisson_structure(std::ostream& out, const PolyBivector& P);

}  // namespace kgs

#endif
