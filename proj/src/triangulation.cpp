#include "trisector/triangulation.hpp"

#include <stdexcept>

namespace trisector {

void Triangulation::join(int pent, int facet, int dest, const Perm5& map) {
    if (pent < 0 || pent >= size() || dest < 0 || dest >= size() ||
        facet < 0 || facet > 4)
        throw std::out_of_range("join: index out of range");
    const int destFacet = map[facet];
    if (pent == dest && facet == destFacet)
        throw std::invalid_argument("join: facet glued to itself");
    if (is_glued(pent, facet) || is_glued(dest, destFacet))
        throw std::invalid_argument("join: facet already glued");
    glue_[pent][facet] = {dest, map};
    glue_[dest][destFacet] = {pent, map.inverse()};
}

int Triangulation::boundary_facet_count() const {
    int count = 0;
    for (const auto& pent : glue_)
        for (const auto& g : pent)
            if (g.boundary()) ++count;
    return count;
}

bool Triangulation::is_connected() const {
    const int n = size();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        for (int f = 0; f < 5; ++f) {
            const Gluing& g = glue_[p][f];
            if (g.boundary() || seen[g.pent]) continue;
            seen[g.pent] = 1;
            ++reached;
            stack.push_back(g.pent);
        }
    }
    return reached == n;
}

void Triangulation::validate() const {
    for (int p = 0; p < size(); ++p) {
        for (int f = 0; f < 5; ++f) {
            const Gluing& g = glue_[p][f];
            if (g.boundary()) continue;
            if (g.pent < 0 || g.pent >= size())
                throw std::logic_error("gluing destination out of range");
            const int df = g.map[f];
            if (g.pent == p && df == f)
                throw std::logic_error("facet glued to itself");
            const Gluing& back = glue_[g.pent][df];
            if (back.pent != p || !(back.map == g.map.inverse()))
                throw std::logic_error("gluing table is not involutive");
        }
    }
}

bool is_orientable(const Triangulation& t) {
    const int n = t.size();
    if (n == 0) throw std::invalid_argument("empty triangulation");
    std::vector<int8_t> sign(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            for (int f = 0; f < 5; ++f) {
                const Gluing& g = t.adjacent(p, f);
                if (g.boundary()) continue;
                // Even gluings reverse orientation class; odd preserve.
                const int8_t want =
                    static_cast<int8_t>(g.map.sign() > 0 ? -sign[p] : sign[p]);
                if (sign[g.pent] == 0) {
                    sign[g.pent] = want;
                    stack.push_back(g.pent);
                } else if (sign[g.pent] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace trisector
