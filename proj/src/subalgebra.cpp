#include "liecon/subalgebra.hpp"

#include "liecon/parallel.hpp"
#include "liecon/text.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace liecon {

namespace {

using MdKey = std::pair<int, int>;  // (total degree, deg_x)

MdKey key_of(MultiDegree md) { return {md.total(), md.deg_x}; }

}  // namespace

const SubalgebraComponent* GradedSubalgebra::find(MultiDegree md) const {
    for (const auto& c : components) {
        if (c.md == md) return &c;
    }
    return nullptr;
}

std::size_t GradedSubalgebra::dim(MultiDegree md) const {
    const auto* c = find(md);
    return c ? c->dim() : 0;
}

GradedSubalgebra graded_closure(std::span<const LiePoly> generators, int bound, int jobs) {
    if (bound < 1) throw std::invalid_argument("closure bound must be at least 1");
    GradedSubalgebra out;
    out.bound = bound;
    std::map<MdKey, std::vector<LiePoly>> seeds;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        const auto md = g.multidegree();
        if (!md) throw std::invalid_argument("generator " + format(g) + " is not multihomogeneous");
        if (md->total() > bound) {
            throw std::invalid_argument("generator " + format(g) + " has degree above the bound " +
                                        std::to_string(bound));
        }
        out.generators.push_back(g);
        seeds[key_of(*md)].push_back(g);
    }
    ensure_hall_degree(bound);

    std::map<MdKey, SubalgebraComponent> built;
    std::vector<std::vector<const SubalgebraComponent*>> by_degree(static_cast<std::size_t>(bound) + 1);

    for (int d = 1; d <= bound; ++d) {
        // Pairs of spanning elements whose bracket lands in degree d.
        std::vector<std::pair<const LiePoly*, const LiePoly*>> pairs;
        for (int i = 1; 2 * i <= d; ++i) {
            const auto& left_comps = by_degree[static_cast<std::size_t>(i)];
            const auto& right_comps = by_degree[static_cast<std::size_t>(d - i)];
            for (std::size_t a = 0; a < left_comps.size(); ++a) {
                for (std::size_t b = 0; b < right_comps.size(); ++b) {
                    const bool same_degree = i == d - i;
                    if (same_degree && b < a) continue;
                    const auto& u = left_comps[a]->elements;
                    const auto& v = right_comps[b]->elements;
                    for (std::size_t p = 0; p < u.size(); ++p) {
                        for (std::size_t q = (same_degree && a == b) ? p + 1 : 0; q < v.size(); ++q) {
                            pairs.emplace_back(&u[p], &v[q]);
                        }
                    }
                }
            }
        }
        std::vector<LiePoly> products(pairs.size());
        parallel_for(pairs.size(), jobs,
                     [&](std::size_t i) { products[i] = bracket(*pairs[i].first, *pairs[i].second); });

        std::map<MdKey, std::vector<RationalVector>> candidates;
        auto add_candidate = [&](const LiePoly& p) {
            if (p.is_zero()) return;
            const MultiDegree md = *p.multidegree();
            candidates[key_of(md)].push_back(coordinates(p, hall_basis_multidegree(md)));
        };
        for (auto it = seeds.lower_bound({d, 0}); it != seeds.end() && it->first.first == d; ++it) {
            for (const auto& g : it->second) add_candidate(g);
        }
        for (const auto& p : products) add_candidate(p);

        for (auto& [key, vectors] : candidates) {
            const MultiDegree md{key.second, key.first - key.second};
            const auto& words = hall_basis_multidegree(md);
            SubalgebraComponent comp{md, row_space_basis(vectors, words.size()), {}};
            for (const auto& row : comp.basis) comp.elements.push_back(from_coordinates(row, words));
            auto [it, inserted] = built.emplace(key, std::move(comp));
            by_degree[static_cast<std::size_t>(d)].push_back(&it->second);
        }
    }
    for (auto& [key, comp] : built) out.components.push_back(std::move(comp));
    return out;
}

bool ContainmentReport::contained() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.contained; });
}

bool ContainmentReport::contained_in_degree(int degree) const {
    return std::all_of(components.begin(), components.end(),
                       [&](const auto& c) { return c.md.total() != degree || c.contained; });
}

const ContainmentComponent* ContainmentReport::find(MultiDegree md) const {
    for (const auto& c : components) {
        if (c.md == md) return &c;
    }
    return nullptr;
}

std::vector<MultiDegree> ContainmentReport::failures() const {
    std::vector<MultiDegree> out;
    for (const auto& c : components) {
        if (!c.contained) out.push_back(c.md);
    }
    return out;
}

ContainmentReport membership_report(const GradedSubalgebra& s, const KernelReport& k) {
    if (s.bound < k.max_degree) {
        throw std::invalid_argument("subalgebra bound " + std::to_string(s.bound) +
                                    " is below the kernel report degree " + std::to_string(k.max_degree));
    }
    ContainmentReport out;
    out.max_degree = k.max_degree;
    for (const auto& kc : k.components) {
        ContainmentComponent c;
        c.md = kc.md;
        c.kernel_dim = kc.dim();
        const auto* sc = s.find(kc.md);
        c.subalgebra_dim = sc ? sc->dim() : 0;
        const auto& words = hall_basis_multidegree(kc.md);
        std::vector<RationalVector> kernel_vectors;
        for (const auto& p : kc.basis) kernel_vectors.push_back(coordinates(p, words));
        const std::vector<RationalVector> none;
        const auto& span = sc ? sc->basis : none;
        for (std::size_t i = 0; i < kernel_vectors.size(); ++i) {
            if (!in_span(span, kernel_vectors[i])) {
                c.contained = false;
                if (!c.counterexample) c.counterexample = kc.basis[i];
            }
        }
        // dim(S cap K) = dim S + dim K - dim(S + K)
        std::vector<RationalVector> joint = span;
        joint.insert(joint.end(), kernel_vectors.begin(), kernel_vectors.end());
        const std::size_t sum_dim = row_space_basis(joint, words.size()).size();
        c.intersection_dim = c.subalgebra_dim + c.kernel_dim - sum_dim;
        out.components.push_back(std::move(c));
    }
    return out;
}

ConjectureResult conjecture_check(int max_degree, PseudoDetShape shape, int jobs) {
    if (max_degree < 2) throw std::invalid_argument("conjecture check needs max_degree >= 2");
    ConjectureResult out;
    out.max_degree = max_degree;
    out.shape = shape;
    out.pseudodets = enumerate_constant_pseudodets(max_degree, shape, jobs);
    std::vector<LiePoly> generators{LiePoly(HallWord::letter(Letter::x))};
    for (const auto& u : out.pseudodets) generators.push_back(u.value);
    const auto closure = graded_closure(generators, max_degree, jobs);
    out.report = membership_report(closure, constants_up_to(max_degree, jobs));
    return out;
}

std::string to_string(PseudoDetShape shape) { return shape == PseudoDetShape::all ? "all" : "k0"; }

nlohmann::json to_json(const GradedSubalgebra& s) {
    auto generators = nlohmann::json::array();
    for (const auto& g : s.generators) generators.push_back(to_json(g));
    auto components = nlohmann::json::array();
    for (const auto& c : s.components) {
        auto basis = nlohmann::json::array();
        for (const auto& e : c.elements) basis.push_back(to_json(e));
        components.push_back(
            {{"deg_x", c.md.deg_x}, {"deg_y", c.md.deg_y}, {"dim", c.dim()}, {"basis", std::move(basis)}});
    }
    return {{"bound", s.bound}, {"generators", std::move(generators)}, {"components", std::move(components)}};
}

nlohmann::json to_json(const ContainmentReport& r) {
    auto components = nlohmann::json::array();
    for (const auto& c : r.components) {
        nlohmann::json j = {{"deg_x", c.md.deg_x},
                            {"deg_y", c.md.deg_y},
                            {"kernel_dim", c.kernel_dim},
                            {"subalgebra_dim", c.subalgebra_dim},
                            {"intersection_dim", c.intersection_dim},
                            {"contained", c.contained}};
        if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
        components.push_back(std::move(j));
    }
    auto degrees = nlohmann::json::array();
    for (int d = 1; d <= r.max_degree; ++d) degrees.push_back({{"degree", d}, {"contained", r.contained_in_degree(d)}});
    return {{"max_degree", r.max_degree},
            {"contained", r.contained()},
            {"degrees", std::move(degrees)},
            {"components", std::move(components)}};
}

nlohmann::json to_json(const ConjectureResult& r) {
    auto generators = nlohmann::json::array();
    for (const auto& u : r.pseudodets) generators.push_back(to_json(u));
    return {{"max_degree", r.max_degree},
            {"shape", to_string(r.shape)},
            {"pseudodeterminants", std::move(generators)},
            {"report", to_json(r.report)},
            {"caveat", kConjectureCaveat}};
}

std::string format_table(const GradedSubalgebra& s) {
    std::ostringstream os;
    os << "closure of " << s.generators.size() << " generator(s) up to degree " << s.bound << '\n';
    os << std::setw(6) << "degree" << std::setw(8) << "deg_x" << std::setw(8) << "deg_y" << std::setw(6) << "dim"
       << "  basis\n";
    for (const auto& c : s.components) {
        os << std::setw(6) << c.md.total() << std::setw(8) << c.md.deg_x << std::setw(8) << c.md.deg_y
           << std::setw(6) << c.dim();
        for (std::size_t i = 0; i < c.elements.size(); ++i) {
            if (i > 0) os << std::string(28, ' ');
            os << "  " << format(c.elements[i]) << '\n';
        }
    }
    return os.str();
}

std::string format_table(const ContainmentReport& r) {
    std::ostringstream os;
    os << std::setw(6) << "degree" << std::setw(8) << "deg_x" << std::setw(8) << "deg_y" << std::setw(10)
       << "dim ker" << std::setw(10) << "dim sub" << std::setw(10) << "dim cap" << "  contained\n";
    for (const auto& c : r.components) {
        os << std::setw(6) << c.md.total() << std::setw(8) << c.md.deg_x << std::setw(8) << c.md.deg_y
           << std::setw(10) << c.kernel_dim << std::setw(10) << c.subalgebra_dim << std::setw(10)
           << c.intersection_dim << "  " << (c.contained ? "yes" : "NO") << '\n';
        if (c.counterexample) os << "        counterexample: " << format(*c.counterexample) << '\n';
    }
    os << "verdict: " << (r.contained() ? "contained" : "NOT contained") << " through degree " << r.max_degree
       << '\n';
    return os.str();
}

}  // namespace liecon
