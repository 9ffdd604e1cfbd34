#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace obstrukt {

/// Canonical irreducible summand of a real U(2)-representation.
///
/// RealForm(i) is the (2i+1)-dimensional module A_i (A_0 = R).
/// Realified(j,k) is the underlying real representation of S^j E (x) L^k,
/// stored with the conjugate representative 2k + j < 0; the self-conjugate
/// case 2k + j = 0 is always split into two RealForm summands instead.
struct IrreducibleSummand {
    enum class Kind { RealForm, Realified };
    Kind kind;
    int i = 0;  // RealForm parameter
    int j = 0;  // Realified parameters
    int k = 0;

    static IrreducibleSummand real_form(int i);
    static IrreducibleSummand realified(int j, int k);
    // convenience aliases used by the table rows
    static IrreducibleSummand trivial() { return real_form(0); }
    static IrreducibleSummand l_power(int r) { return realified(0, r); }
    static IrreducibleSummand e_tensor_l(int s) { return realified(1, s); }
    static IrreducibleSummand a1_tensor_l(int s) { return realified(2, s - 1); }

    int dim() const { return kind == Kind::RealForm ? 2 * i + 1 : 2 * j + 2; }
    bool is_canonical() const;

    auto operator<=>(const IrreducibleSummand&) const = default;
};

/// Weight alpha*x1 + beta*x2 on the maximal torus of U(2).
struct WeightVector {
    long long alpha = 0;
    long long beta = 0;
    auto operator<=>(const WeightVector&) const = default;
};

/// Multiset of canonical irreducible summands; equality is multiset equality.
class RealRep {
  public:
    RealRep() = default;

    /// Canonicalizes raw summands: flips Realified(j,k) with 2k+j > 0 to
    /// (j, -j-k) and splits the self-conjugate Realified(2i,-i) into two
    /// RealForm(i). Throws std::invalid_argument on negative i or j.
    static RealRep canonicalize(std::vector<IrreducibleSummand> raw);

    const std::vector<IrreducibleSummand>& summands() const { return summands_; }
    int dim() const;
    bool empty() const { return summands_.empty(); }
    /// Every summand a RealForm, i.e. the representation factors through SO(3).
    bool factors_through_so3() const;

    bool operator==(const RealRep&) const = default;
    auto operator<=>(const RealRep&) const = default;

  private:
    std::vector<IrreducibleSummand> summands_;  // kept sorted
};

/// Weights of the complexification, sorted; closed under negation.
std::vector<WeightVector> complexified_weights(const RealRep& v);

/// All canonical representations of the given real dimension whose raw
/// Realified parameters come from the window |k| <= k_bound (the window is
/// applied before conjugation, so e.g. S^2 E at k = 0 appears for any bound).
std::vector<RealRep> enumerate_reps(int dim, int k_bound);

/// Textual syntax: summands joined by '+'; tokens R, A<i>, L(<k>), E(<s>),
/// A1xL(<s>), V(<j>,<k>). Parsed representations are canonicalized.
RealRep parse_rep(std::string_view text);
std::string to_string(const RealRep& v);
std::string to_string(const IrreducibleSummand& s);

}  // namespace obstrukt
