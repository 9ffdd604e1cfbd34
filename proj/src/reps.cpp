#include "obstrukt/reps.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace obstrukt {

IrreducibleSummand IrreducibleSummand::real_form(int i) {
    if (i < 0) throw std::invalid_argument("RealForm index must be >= 0");
    IrreducibleSummand s;
    s.kind = Kind::RealForm;
    s.i = i;
    return s;
}

IrreducibleSummand IrreducibleSummand::realified(int j, int k) {
    if (j < 0) throw std::invalid_argument("Realified degree j must be >= 0");
    IrreducibleSummand s;
    s.kind = Kind::Realified;
    s.j = j;
    s.k = k;
    return s;
}

bool IrreducibleSummand::is_canonical() const {
    return kind == Kind::RealForm || 2 * k + j < 0;
}

RealRep RealRep::canonicalize(std::vector<IrreducibleSummand> raw) {
    RealRep rep;
    for (const IrreducibleSummand& s : raw) {
        if (s.kind == IrreducibleSummand::Kind::RealForm) {
            rep.summands_.push_back(IrreducibleSummand::real_form(s.i));
            continue;
        }
        int j = s.j, k = s.k;
        if (j < 0) throw std::invalid_argument("Realified degree j must be >= 0");
        if (2 * k + j > 0) k = -j - k;  // conjugate representative
        if (2 * k + j == 0) {
            // self-conjugate: r(S^{2i}E (x) L^{-i}) = A_i + A_i
            rep.summands_.push_back(IrreducibleSummand::real_form(j / 2));
            rep.summands_.push_back(IrreducibleSummand::real_form(j / 2));
        } else {
            rep.summands_.push_back(IrreducibleSummand::realified(j, k));
        }
    }
    std::sort(rep.summands_.begin(), rep.summands_.end());
    return rep;
}

int RealRep::dim() const {
    int d = 0;
    for (const auto& s : summands_) d += s.dim();
    return d;
}

bool RealRep::factors_through_so3() const {
    return std::all_of(summands_.begin(), summands_.end(), [](const IrreducibleSummand& s) {
        return s.kind == IrreducibleSummand::Kind::RealForm;
    });
}

std::vector<WeightVector> complexified_weights(const RealRep& v) {
    std::vector<WeightVector> out;
    for (const IrreducibleSummand& s : v.summands()) {
        if (s.kind == IrreducibleSummand::Kind::Realified) {
            // W + conj(W) for W = S^j E (x) L^k
            for (int r = 0; r <= s.j; ++r) {
                long long a = s.j - r + s.k, b = r + s.k;
                out.push_back({a, b});
                out.push_back({-a, -b});
            }
        } else {
            // C (x) A_i = V_{2i,-i}
            for (int r = 0; r <= 2 * s.i; ++r) out.push_back({s.i - r, r - s.i});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RealRep> enumerate_reps(int dim, int k_bound) {
    if (dim < 1) throw std::invalid_argument("enumerate_reps: dimension must be >= 1");
    if (k_bound < 0) throw std::invalid_argument("enumerate_reps: k_bound must be >= 0");

    // canonical summand universe reachable from the raw window
    std::vector<IrreducibleSummand> universe;
    for (int i = 0; 2 * i + 1 <= dim; ++i) universe.push_back(IrreducibleSummand::real_form(i));
    for (int j = 0; 2 * j + 2 <= dim && j <= dim; ++j) {
        std::set<int> ks;
        for (int k = -k_bound; k <= k_bound; ++k) {
            int kc = (2 * k + j > 0) ? -j - k : k;
            if (2 * kc + j < 0) ks.insert(kc);
        }
        for (int k : ks) universe.push_back(IrreducibleSummand::realified(j, k));
    }
    std::sort(universe.begin(), universe.end());

    std::vector<RealRep> out;
    std::vector<IrreducibleSummand> cur;
    auto rec = [&](auto&& self, int remaining, size_t start) -> void {
        if (remaining == 0) {
            out.push_back(RealRep::canonicalize(cur));
            return;
        }
        for (size_t idx = start; idx < universe.size(); ++idx) {
            if (universe[idx].dim() > remaining) continue;
            cur.push_back(universe[idx]);
            self(self, remaining - universe[idx].dim(), idx);
            cur.pop_back();
        }
    };
    rec(rec, dim, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("rep syntax error at position " + std::to_string(pos) + ": " +
                                    what);
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    int paren_integer() {
        if (!eat('(')) fail("expected '('");
        int v = integer();
        if (!eat(')')) fail("expected ')'");
        return v;
    }

    IrreducibleSummand summand() {
        skip_ws();
        if (pos >= text.size()) fail("expected summand");
        // longest match first: A1xL(s) before A<i>
        if (text.substr(pos, 4) == "A1xL") {
            pos += 4;
            return IrreducibleSummand::a1_tensor_l(paren_integer());
        }
        char c = text[pos];
        if (c == 'R') {
            ++pos;
            return IrreducibleSummand::trivial();
        }
        if (c == 'A') {
            ++pos;
            return IrreducibleSummand::real_form(integer());
        }
        if (c == 'L') {
            ++pos;
            return IrreducibleSummand::l_power(paren_integer());
        }
        if (c == 'E') {
            ++pos;
            return IrreducibleSummand::e_tensor_l(paren_integer());
        }
        if (c == 'V') {
            ++pos;
            if (!eat('(')) fail("expected '('");
            int j = integer();
            if (!eat(',')) fail("expected ','");
            int k = integer();
            if (!eat(')')) fail("expected ')'");
            return IrreducibleSummand::realified(j, k);
        }
        fail(std::string("unknown token '") + c + "'");
    }
};

}  // namespace

RealRep parse_rep(std::string_view text) {
    Parser p{text};
    std::vector<IrreducibleSummand> raw;
    raw.push_back(p.summand());
    for (;;) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        if (!p.eat('+')) p.fail("expected '+'");
        raw.push_back(p.summand());
    }
    return RealRep::canonicalize(std::move(raw));
}

std::string to_string(const IrreducibleSummand& s) {
    if (s.kind == IrreducibleSummand::Kind::RealForm)
        return s.i == 0 ? "R" : "A" + std::to_string(s.i);
    if (s.j == 0) return "L(" + std::to_string(s.k) + ")";
    if (s.j == 1) return "E(" + std::to_string(s.k) + ")";
    if (s.j == 2) return "A1xL(" + std::to_string(s.k + 1) + ")";
    return "V(" + std::to_string(s.j) + "," + std::to_string(s.k) + ")";
}

std::string to_string(const RealRep& v) {
    if (v.summands().empty()) return "0";
    std::string out;
    for (size_t idx = 0; idx < v.summands().size(); ++idx) {
        if (idx) out += "+";
        out += to_string(v.summands()[idx]);
    }
    return out;
}

}  // namespace obstrukt
