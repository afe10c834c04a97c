#include "detrees/shape.hpp"

#include <fstream>
#include <sstream>

#include "detrees/errors.hpp"

namespace detrees {

std::string Shape::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

Shape shape_validate(int n, int r, int s) {
    if (n < 3) throw ValidationError("shape: n must be at least 3");
    if (r < 1) throw ValidationError("shape: r must be at least 1 (r = 0 is the generic case)");
    if (s < 0) throw ValidationError("shape: s must be nonnegative");
    if (n - r - s < 0) throw ValidationError("shape: r+s exceeds n (need n-r-s >= 0)");
    if (n - r - s > r) throw ValidationError("shape: n-r-s exceeds r (need n-r-s <= r)");
    if (r >= n) throw ValidationError("shape: r must be smaller than n");
    return Shape{n, r, s};
}

bool shape_is_valid(int n, int r, int s) {
    return n >= 3 && r >= 1 && s >= 0 && n - r - s >= 0 && n - r - s <= r && r < n;
}

std::vector<Shape> enumerate_shapes(int nmax, bool include_degenerate) {
    std::vector<Shape> out;
    for (int n = 3; n <= nmax; ++n)
        for (int r = 1; r < n; ++r)
            for (int s = include_degenerate ? 0 : 1; r + s <= n; ++s)
                if (shape_is_valid(n, r, s)) out.push_back(Shape{n, r, s});
    return out;
}

Shape parse_shape_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("shape file: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        int n, r, s;
        if (ss >> n >> r >> s) return shape_validate(n, r, s);
    }
    throw InputError("shape file: no triple found in " + path);
}

bool x_present(const Shape& sh, int u, int i) {
    if (i < 1 || i > sh.n) return false;
    return u == 1 ? i <= sh.r + sh.s : i >= sh.r + 1;
}

bool y_present(const Shape& sh, int i, int j) {
    if (i < 1 || j <= i || j > sh.n) return false;
    if (j <= sh.r) return false;                // both indices in 1..r
    if (i >= sh.r + sh.s + 1) return false;     // both indices in r+s+1..n
    return true;
}

RingPtr ring_R(const Shape& sh) {
    std::vector<VariableId> vars;
    for (int i = 1; i <= sh.r + sh.s; ++i) vars.push_back(VariableId::x(1, i));
    for (int j = sh.r + 1; j <= sh.n; ++j) vars.push_back(VariableId::x(2, j));
    return Ring::make(std::move(vars));
}

RingPtr ring_Rt(const Shape& sh) {
    auto vars = ring_R(sh)->vars();
    vars.push_back(VariableId::t());
    return Ring::make(std::move(vars));
}

RingPtr ring_S(const Shape& sh) {
    auto vars = ring_R(sh)->vars();
    for (int i = 1; i < sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j)
            if (y_present(sh, i, j)) vars.push_back(VariableId::y(i, j));
    return Ring::make(std::move(vars));
}

RingPtr ring_St(const Shape& sh) {
    auto vars = ring_S(sh)->vars();
    vars.push_back(VariableId::t());
    return Ring::make(std::move(vars));
}

RingPtr ring_T(const Shape& sh) {
    std::vector<VariableId> vars;
    for (int i = 1; i < sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j)
            if (y_present(sh, i, j)) vars.push_back(VariableId::y(i, j));
    return Ring::make(std::move(vars));
}

ClassifiedMinor minor(const Shape& sh, int i, int j) {
    if (i < 1 || j <= i || j > sh.n) throw InputError("minor: need 1 <= i < j <= n");
    ClassifiedMinor m;
    m.i = i;
    m.j = j;
    Polynomial diag = Polynomial::zero();
    Polynomial anti = Polynomial::zero();
    if (x_present(sh, 1, i) && x_present(sh, 2, j))
        diag = Polynomial::term(Monomial::variable(VariableId::x(1, i)) * Monomial::variable(VariableId::x(2, j)), 1);
    if (x_present(sh, 1, j) && x_present(sh, 2, i))
        anti = Polynomial::term(Monomial::variable(VariableId::x(1, j)) * Monomial::variable(VariableId::x(2, i)), 1);
    m.poly = diag - anti;
    if (m.poly.is_zero())
        m.cls = MinorClass::Zero;
    else if (m.poly.term_count() == 1)
        m.cls = MinorClass::Monomial;
    else
        m.cls = MinorClass::Binomial;
    return m;
}

std::vector<ClassifiedMinor> nonzero_minors(const Shape& sh) {
    std::vector<ClassifiedMinor> out;
    for (int i = 1; i < sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j) {
            ClassifiedMinor m = minor(sh, i, j);
            if (m.cls != MinorClass::Zero) out.push_back(std::move(m));
        }
    return out;
}

MinorCounts minor_counts(const Shape& sh) {
    MinorCounts c;
    for (int i = 1; i < sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j) {
            switch (minor(sh, i, j).cls) {
                case MinorClass::Zero: ++c.zero; break;
                case MinorClass::Monomial: ++c.monomial; break;
                case MinorClass::Binomial: ++c.binomial; break;
            }
        }
    return c;
}

TermOrder diagonal_order(const Shape& sh) { return TermOrder::lex(ring_R(sh)->vars()); }

MonomialIdeal ferrers_ideal(const Shape& sh) {
    std::vector<Monomial> gens;
    for (int i = 1; i <= sh.r + sh.s; ++i)
        for (int j = std::max(sh.r, i) + 1; j <= sh.n; ++j)
            gens.push_back(Monomial::variable(VariableId::x(1, i)) * Monomial::variable(VariableId::x(2, j)));
    return MonomialIdeal(ring_R(sh), std::move(gens));
}

std::vector<int> ferrers_partition(const Shape& sh) {
    std::vector<int> lambda;
    lambda.reserve(sh.r + sh.s);
    for (int i = 0; i < sh.r; ++i) lambda.push_back(sh.n - sh.r);
    for (int i = 1; i <= sh.s; ++i) lambda.push_back(sh.n - sh.r - i);
    return lambda;
}

std::string render_matrix(const Shape& sh) {
    std::ostringstream out;
    size_t width = 2 + std::to_string(sh.n).size() + 4;
    for (int u = 1; u <= 2; ++u) {
        out << "  [";
        for (int i = 1; i <= sh.n; ++i) {
            std::string c = x_present(sh, u, i)
                                ? "x[" + std::to_string(u) + "," + std::to_string(i) + "]"
                                : ".";
            out << " " << c << std::string(width - c.size(), ' ');
        }
        out << "]\n";
    }
    return out.str();
}

std::string render_ferrers(const Shape& sh) {
    std::vector<int> lambda = ferrers_partition(sh);
    std::ostringstream out;
    // Column header, x[2,n] leftmost.
    out << "        ";
    for (int j = sh.n; j >= sh.r + 1; --j) out << "x[2," << j << "] ";
    out << "\n";
    for (size_t row = 0; row < lambda.size(); ++row) {
        out << "x[1," << (row + 1) << "] ";
        for (int b = 0; b < lambda[row]; ++b) out << "  [ ]  ";
        out << "\n";
    }
    return out.str();
}

}  // namespace detrees
