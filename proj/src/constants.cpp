#include "liecon/constants.hpp"

#include "liecon/derivation.hpp"
#include "liecon/parallel.hpp"
#include "liecon/text.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liecon {

RationalVector coordinates(const LiePoly& p, std::span<const HallWord> basis) {
    RationalVector v(basis.size());
    for (const auto& [word, coeff] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), word);
        if (it == basis.end() || *it != word) {
            throw std::invalid_argument("term " + word.to_string() + " is outside the coordinate basis");
        }
        v[static_cast<std::size_t>(it - basis.begin())] = coeff;
    }
    return v;
}

LiePoly from_coordinates(const RationalVector& v, std::span<const HallWord> basis) {
    if (v.size() != basis.size()) throw std::invalid_argument("coordinate vector length mismatch");
    LiePolyBuilder builder;
    for (std::size_t i = 0; i < v.size(); ++i) builder.add(basis[i], v[i]);
    return std::move(builder).build();
}

DeltaMatrix delta_matrix(MultiDegree md) {
    DeltaMatrix out;
    out.source = md;
    const auto& cols = hall_basis_multidegree(md);
    out.columns.assign(cols.begin(), cols.end());
    if (md.deg_y == 0) {
        out.matrix = RationalMatrix(0, cols.size());
        return out;
    }
    out.target = MultiDegree{md.deg_x + 1, md.deg_y - 1};
    const auto& rows = hall_basis_multidegree(*out.target);
    out.rows.assign(rows.begin(), rows.end());
    std::vector<RationalVector> images;
    images.reserve(cols.size());
    for (HallWord w : cols) images.push_back(coordinates(delta_word(w), out.rows));
    out.matrix = RationalMatrix::from_columns(images, rows.size());
    return out;
}

std::vector<LiePoly> kernel_basis(MultiDegree md) {
    const DeltaMatrix dm = delta_matrix(md);
    std::vector<LiePoly> out;
    for (const auto& v : nullspace(dm.matrix)) out.push_back(from_coordinates(primitive_integer(v), dm.columns));
    return out;
}

const KernelComponent* KernelReport::find(MultiDegree md) const {
    for (const auto& c : components) {
        if (c.md == md) return &c;
    }
    return nullptr;
}

std::size_t KernelReport::dim(MultiDegree md) const {
    const auto* c = find(md);
    return c ? c->dim() : 0;
}

KernelReport constants_up_to(int n, int jobs) {
    if (n < 1) throw std::invalid_argument("degree bound must be at least 1");
    // Build the Hall tables before any worker touches them.
    ensure_hall_degree(n);
    KernelReport report;
    report.max_degree = n;
    for (MultiDegree md : multidegrees_up_to(n)) report.components.push_back({md, 0, {}});
    parallel_for(report.components.size(), jobs, [&](std::size_t i) {
        auto& c = report.components[i];
        c.component_dim = hall_basis_multidegree(c.md).size();
        c.basis = kernel_basis(c.md);
    });
    return report;
}

std::vector<LiePoly> bracket_relation_solutions(MultiDegree md) {
    const auto& source = hall_basis_multidegree(md);
    const MultiDegree target{md.deg_x + 1, md.deg_y};
    const auto& rows = hall_basis_multidegree(target);
    const LiePoly x(HallWord::letter(Letter::x));
    const LiePoly y(HallWord::letter(Letter::y));
    std::vector<RationalVector> images;
    for (HallWord w : source) {
        const LiePoly g(w);
        images.push_back(coordinates(bracket(g, x) + bracket(delta(g), y), rows));
    }
    const auto m = RationalMatrix::from_columns(images, rows.size());
    std::vector<LiePoly> out;
    for (const auto& v : nullspace(m)) out.push_back(from_coordinates(primitive_integer(v), source));
    return out;
}

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

Integer factorial(int n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

}  // namespace

Integer witt_dim(MultiDegree md) {
    const int n = md.total();
    if (n < 1 || md.deg_x < 0 || md.deg_y < 0) throw std::invalid_argument("witt_dim needs positive total degree");
    const int g = std::gcd(md.deg_x, md.deg_y);
    Integer sum = 0;
    for (int e = 1; e <= g; ++e) {
        if (g % e != 0) continue;
        const int mu = mobius(e);
        if (mu == 0) continue;
        const Integer term = factorial(n / e) / (factorial(md.deg_x / e) * factorial(md.deg_y / e));
        sum += mu * term;
    }
    return sum / n;
}

Integer witt_dim(int degree) {
    if (degree < 1) throw std::invalid_argument("witt_dim needs positive degree");
    Integer sum = 0;
    for (int e = 1; e <= degree; ++e) {
        if (degree % e != 0) continue;
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(degree / e));
        sum += mobius(e) * power;
    }
    return sum / degree;
}

nlohmann::json to_json(const KernelReport& report) {
    auto components = nlohmann::json::array();
    for (const auto& c : report.components) {
        auto basis = nlohmann::json::array();
        for (const auto& p : c.basis) basis.push_back(to_json(p));
        components.push_back({{"deg_x", c.md.deg_x},
                              {"deg_y", c.md.deg_y},
                              {"component_dim", c.component_dim},
                              {"dim", c.dim()},
                              {"basis", std::move(basis)}});
    }
    return {{"max_degree", report.max_degree}, {"components", std::move(components)}};
}

std::string format_table(const KernelReport& report) {
    std::ostringstream os;
    os << std::setw(6) << "degree" << std::setw(8) << "deg_x" << std::setw(8) << "deg_y" << std::setw(8)
       << "dim L" << std::setw(10) << "dim ker" << "  basis\n";
    for (const auto& c : report.components) {
        os << std::setw(6) << c.md.total() << std::setw(8) << c.md.deg_x << std::setw(8) << c.md.deg_y
           << std::setw(8) << c.component_dim << std::setw(10) << c.dim();
        if (c.basis.empty()) {
            os << '\n';
            continue;
        }
        for (std::size_t i = 0; i < c.basis.size(); ++i) {
            if (i > 0) os << std::string(40, ' ');
            os << "  " << format(c.basis[i]) << '\n';
        }
    }
    return os.str();
}

}  // namespace liecon
