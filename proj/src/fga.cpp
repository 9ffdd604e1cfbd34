#include "obstrukt/fga.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace obstrukt {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int dst, int src, const Int& q) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col(int dst, int src, const Int& q) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int det(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: square matrix required");
    int n = A.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix m = A;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// Book-keeping for elementary operations so that A = U*D*W and
// D = U_inv*A*W_inv stay true throughout the reduction.
struct SnfState {
    IntMatrix D, U, W, U_inv, W_inv;

    void row_swap(int i, int j) {
        D.swap_rows(i, j);
        U.swap_cols(i, j);
        U_inv.swap_rows(i, j);
    }
    void row_add(int dst, int src, const Int& q) {  // D: row dst += q*row src
        D.add_row(dst, src, q);
        U.add_col(src, dst, -q);
        U_inv.add_row(dst, src, q);
    }
    void row_negate(int i) {
        D.negate_row(i);
        U.negate_col(i);
        U_inv.negate_row(i);
    }
    void col_swap(int i, int j) {
        D.swap_cols(i, j);
        W.swap_rows(i, j);
        W_inv.swap_cols(i, j);
    }
    void col_add(int dst, int src, const Int& q) {  // D: col dst += q*col src
        D.add_col(dst, src, q);
        W.add_row(src, dst, -q);
        W_inv.add_col(dst, src, q);
    }
};

}  // namespace

SmithDecomposition smith(const IntMatrix& A) {
    const int m = A.rows(), n = A.cols();
    SnfState s{A, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
               IntMatrix::identity(n)};
    const int steps = std::min(m, n);
    for (int k = 0; k < steps; ++k) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block becomes the pivot
            int pr = -1, pc = -1;
            Int best;
            for (int i = k; i < m; ++i)
                for (int j = k; j < n; ++j) {
                    const Int& v = s.D.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pr < 0 || av < best) {
                        best = av;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) {  // trailing block is zero
                pr = -2;
                break;
            }
            s.row_swap(k, pr);
            s.col_swap(k, pc);

            bool dirty = false;
            for (int i = k + 1; i < m; ++i) {
                if (s.D.at(i, k) == 0) continue;
                Int q = s.D.at(i, k) / s.D.at(k, k);
                if (q != 0) s.row_add(i, k, -q);
                if (s.D.at(i, k) != 0) dirty = true;
            }
            for (int j = k + 1; j < n; ++j) {
                if (s.D.at(k, j) == 0) continue;
                Int q = s.D.at(k, j) / s.D.at(k, k);
                if (q != 0) s.col_add(j, k, -q);
                if (s.D.at(k, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot now lone in row/column; enforce divisibility of the rest
            bool fixed = true;
            for (int i = k + 1; i < m && fixed; ++i)
                for (int j = k + 1; j < n && fixed; ++j)
                    if (s.D.at(i, j) % s.D.at(k, k) != 0) {
                        s.row_add(k, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.D.at(k, k) < 0) s.row_negate(k);
    }
    return {std::move(s.U), std::move(s.D), std::move(s.W), std::move(s.U_inv),
            std::move(s.W_inv)};
}

FgaGroup::FgaGroup(int r, std::vector<Int> t) : rank(r), torsion(std::move(t)) {
    if (rank < 0) throw std::invalid_argument("FgaGroup: negative rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw std::invalid_argument("FgaGroup: invariant factors must be >= 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw std::invalid_argument("FgaGroup: invariant factors must form a divisibility chain");
    }
}

Int FgaGroup::order() const {
    if (rank > 0) return 0;
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

FgaElement::FgaElement(FgaGroup group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != group_.coord_count())
        throw std::invalid_argument("FgaElement: coordinate count mismatch");
    for (size_t i = 0; i < group_.torsion.size(); ++i) {
        Int& c = coords_[group_.rank + i];
        c = mod_reduce(c, group_.torsion[i]);
    }
}

FgaElement FgaElement::zero(const FgaGroup& g) {
    return FgaElement(g, std::vector<Int>(g.coord_count()));
}

bool FgaElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

FgaElement FgaElement::operator+(const FgaElement& rhs) const {
    if (group_ != rhs.group_) throw std::invalid_argument("FgaElement: group mismatch in +");
    std::vector<Int> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
    return FgaElement(group_, std::move(c));
}

FgaElement FgaElement::operator-(const FgaElement& rhs) const { return *this + (-rhs); }

FgaElement FgaElement::operator-() const {
    std::vector<Int> c(coords_);
    for (Int& x : c) x = -x;
    return FgaElement(group_, std::move(c));
}

FgaElement FgaElement::operator*(const Int& n) const {
    std::vector<Int> c(coords_);
    for (Int& x : c) x *= n;
    return FgaElement(group_, std::move(c));
}

std::string FgaElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

bool lex_less(const FgaElement& a, const FgaElement& b) {
    return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                        b.coords().end());
}

FgaHom::FgaHom(FgaGroup src, FgaGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != source.coord_count() || matrix.cols() != target.coord_count())
        throw std::invalid_argument("FgaHom: matrix shape must be (source gens) x (target gens)");
}

FgaHom FgaHom::zero(const FgaGroup& src, const FgaGroup& tgt) {
    return FgaHom(src, tgt, IntMatrix(src.coord_count(), tgt.coord_count()));
}

FgaHom FgaHom::scalar(const FgaGroup& g, const Int& n) {
    IntMatrix m(g.coord_count(), g.coord_count());
    for (int i = 0; i < g.coord_count(); ++i) m.at(i, i) = n;
    return FgaHom(g, g, std::move(m));
}

FgaElement FgaHom::apply(const FgaElement& x) const {
    if (x.group() != source) throw std::invalid_argument("FgaHom: element not in source group");
    std::vector<Int> out(target.coord_count());
    for (int i = 0; i < source.coord_count(); ++i) {
        const Int& xi = x.coords()[i];
        if (xi == 0) continue;
        for (int j = 0; j < target.coord_count(); ++j) out[j] += xi * matrix.at(i, j);
    }
    return FgaElement(target, std::move(out));
}

bool FgaHom::well_defined() const {
    for (size_t t = 0; t < source.torsion.size(); ++t) {
        int i = source.rank + static_cast<int>(t);
        std::vector<Int> img(target.coord_count());
        for (int j = 0; j < target.coord_count(); ++j) img[j] = source.torsion[t] * matrix.at(i, j);
        if (!FgaElement(target, std::move(img)).is_zero()) return false;
    }
    return true;
}

std::optional<FgaElement> in_multiple(const FgaElement& x, const Int& n) {
    const FgaGroup& g = x.group();
    if (n == 0) {
        if (x.is_zero()) return FgaElement::zero(g);
        return std::nullopt;
    }
    std::vector<Int> y(g.coord_count());
    for (int i = 0; i < g.rank; ++i) {
        if (x.coords()[i] % n != 0) return std::nullopt;
        y[i] = x.coords()[i] / n;
    }
    for (size_t t = 0; t < g.torsion.size(); ++t) {
        const Int& d = g.torsion[t];
        const Int& xi = x.coords()[g.rank + t];
        // solve n*y == xi (mod d)
        Int nr = mod_reduce(n, d);
        Int a, b;
        Int gc = ext_gcd(nr, d, a, b);
        if (xi % gc != 0) return std::nullopt;
        y[g.rank + t] = mod_reduce((xi / gc) * a, d / gc);
    }
    return FgaElement(g, std::move(y));
}

HomSolution solve_hom(const FgaHom& f, const FgaElement& b) {
    if (b.group() != f.target) throw std::invalid_argument("solve_hom: b not in target group");
    const int ns = f.source.coord_count();
    const int nt = f.target.coord_count();
    const int tt = static_cast<int>(f.target.torsion.size());

    // columns: source generators, then one relation column per target torsion
    IntMatrix A(nt, ns + tt);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j) A.at(j, i) = f.matrix.at(i, j);
    for (int t = 0; t < tt; ++t) A.at(f.target.rank + t, ns + t) = f.target.torsion[t];

    SmithDecomposition S = smith(A);

    // D * w = c with c = U_inv * b
    std::vector<Int> c(nt);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nt; ++j) c[i] += S.U_inv.at(i, j) * b.coords()[j];

    const int nv = ns + tt;
    std::vector<Int> w(nv);
    HomSolution sol;
    for (int i = 0; i < nt; ++i) {
        const Int& d = (i < nv) ? S.D.at(i, i) : Int(0);
        if (d != 0) {
            if (c[i] % d != 0) return sol;  // unsolvable
            w[i] = c[i] / d;
        } else if (c[i] != 0) {
            return sol;  // unsolvable
        }
    }
    sol.solvable = true;

    auto source_elem_from_w = [&](const std::vector<Int>& wv) {
        std::vector<Int> v(ns);
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < nv; ++j)
                if (wv[j] != 0) v[i] += S.W_inv.at(i, j) * wv[j];
        return FgaElement(f.source, std::move(v));
    };

    sol.particular = source_elem_from_w(w);

    // kernel of A: coordinates of w with zero diagonal are free
    for (int j = 0; j < nv; ++j) {
        const Int d = (j < nt) ? S.D.at(j, j) : Int(0);
        if (d != 0) continue;
        std::vector<Int> wk(nv);
        wk[j] = 1;
        FgaElement k = source_elem_from_w(wk);
        if (!k.is_zero()) sol.kernel_gens.push_back(std::move(k));
    }
    // target torsion relations mean homs on source torsion have extra kernel;
    // source relations themselves map to zero after reduction, nothing to add.
    return sol;
}

std::vector<FgaElement> quotient_reps(const FgaGroup& g, const Int& n) {
    if (n <= 0) throw std::invalid_argument("quotient_reps: n must be >= 1");
    std::vector<Int> radix;
    radix.reserve(g.coord_count());
    for (int i = 0; i < g.rank; ++i) radix.push_back(n);
    for (const Int& d : g.torsion) radix.push_back(gcd(n, d));

    std::vector<FgaElement> out;
    std::vector<Int> cur(g.coord_count());
    for (;;) {
        out.emplace_back(g, cur);
        int pos = g.coord_count() - 1;
        while (pos >= 0) {
            cur[pos] += 1;
            if (cur[pos] < radix[pos]) break;
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<FgaElement> enumerate_subgroup(const FgaGroup& g, const std::vector<FgaElement>& gens,
                                           size_t cap) {
    std::map<std::vector<Int>, FgaElement> seen;
    FgaElement z = FgaElement::zero(g);
    seen.emplace(z.coords(), z);
    std::vector<FgaElement> frontier{z};
    while (!frontier.empty()) {
        std::vector<FgaElement> next;
        for (const FgaElement& e : frontier)
            for (const FgaElement& gen : gens) {
                FgaElement cand = e + gen;
                if (seen.count(cand.coords())) continue;
                if (seen.size() >= cap)
                    throw std::runtime_error("enumerate_subgroup: subgroup not finite at cap");
                seen.emplace(cand.coords(), cand);
                next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }
    std::vector<FgaElement> out;
    out.reserve(seen.size());
    for (auto& [_, e] : seen) out.push_back(std::move(e));
    return out;
}

std::vector<FgaElement> all_elements(const FgaGroup& g, size_t cap) {
    if (g.rank > 0) throw std::runtime_error("all_elements: group is infinite");
    Int o = g.order();
    if (o > static_cast<long>(cap)) throw std::runtime_error("all_elements: group too large");
    std::vector<FgaElement> out;
    std::vector<Int> cur(g.coord_count());
    for (;;) {
        out.emplace_back(g, cur);
        int pos = g.coord_count() - 1;
        while (pos >= 0) {
            cur[pos] += 1;
            if (cur[pos] < g.torsion[pos]) break;
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

}  // namespace obstrukt
