#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "obstrukt/ints.hpp"

namespace obstrukt {

/// Dense integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col(int dst, int src, const Int& q);  // col dst += q * col src
    void negate_row(int i);
    void negate_col(int j);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant (fraction-free Gaussian elimination).
Int det(const IntMatrix& A);

/// A = U * D * W with U, W unimodular and D diagonal, D11 | D22 | ... >= 0.
/// U_inv and W_inv satisfy D = U_inv * A * W_inv.
struct SmithDecomposition {
    IntMatrix U, D, W;
    IntMatrix U_inv, W_inv;
};

SmithDecomposition smith(const IntMatrix& A);

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dt in
/// invariant-factor form (d1 | d2 | ..., each di >= 2).
struct FgaGroup {
    int rank = 0;
    std::vector<Int> torsion;

    FgaGroup() = default;
    FgaGroup(int r, std::vector<Int> t);

    static FgaGroup trivial() { return FgaGroup(); }
    static FgaGroup free_part(int r) { return FgaGroup(r, {}); }

    int coord_count() const { return rank + static_cast<int>(torsion.size()); }
    bool is_trivial() const { return coord_count() == 0; }
    /// Number of elements; 0 means infinite.
    Int order() const;

    bool operator==(const FgaGroup&) const = default;
};

/// Element of an FgaGroup; torsion coordinates kept reduced into [0, di).
class FgaElement {
  public:
    FgaElement(FgaGroup group, std::vector<Int> coords);

    static FgaElement zero(const FgaGroup& g);

    const FgaGroup& group() const { return group_; }
    const std::vector<Int>& coords() const { return coords_; }
    bool is_zero() const;

    FgaElement operator+(const FgaElement& rhs) const;
    FgaElement operator-(const FgaElement& rhs) const;
    FgaElement operator-() const;
    FgaElement operator*(const Int& n) const;
    bool operator==(const FgaElement&) const = default;

    std::string to_string() const;

  private:
    FgaGroup group_;
    std::vector<Int> coords_;
};

/// Strict lexicographic order on coordinates (same group assumed).
bool lex_less(const FgaElement& a, const FgaElement& b);

/// Homomorphism between FgaGroups; row i of `matrix` holds the target
/// coordinates of the image of the i-th source generator.
struct FgaHom {
    FgaGroup source;
    FgaGroup target;
    IntMatrix matrix;

    FgaHom(FgaGroup src, FgaGroup tgt, IntMatrix m);

    static FgaHom zero(const FgaGroup& src, const FgaGroup& tgt);
    static FgaHom scalar(const FgaGroup& g, const Int& n);  // x -> n*x

    FgaElement apply(const FgaElement& x) const;
    /// d_i * image(torsion generator i) == 0 in the target.
    bool well_defined() const;
};

/// Decides x in n*G; returns a witness y with n*y = x when it exists.
/// n = 0 means "x = 0" (witness 0).
std::optional<FgaElement> in_multiple(const FgaElement& x, const Int& n);

struct HomSolution {
    bool solvable = false;
    std::optional<FgaElement> particular;
    std::vector<FgaElement> kernel_gens;
};

/// Full solution set of f(x) = b as particular + subgroup generated by
/// kernel_gens.
HomSolution solve_hom(const FgaHom& f, const FgaElement& b);

/// One representative per coset of n*G in G, lexicographic order.
/// Count is n^rank * prod gcd(n, di). Requires n >= 1.
std::vector<FgaElement> quotient_reps(const FgaGroup& g, const Int& n);

/// All elements of the subgroup generated by `gens` (must be finite;
/// throws std::runtime_error past `cap` elements).
std::vector<FgaElement> enumerate_subgroup(const FgaGroup& g, const std::vector<FgaElement>& gens,
                                           size_t cap = 1 << 20);

/// All elements of a finite group (throws if infinite or larger than cap).
std::vector<FgaElement> all_elements(const FgaGroup& g, size_t cap = 1 << 20);

}  // namespace obstrukt
