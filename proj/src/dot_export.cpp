#include "corfun/dot_export.hpp"

#include <algorithm>
#include <sstream>

#include "corfun/errors.hpp"

namespace corfun {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string lattice_dot(const MarkedLattice& M) {
    const Lattice& T = M.T;
    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    Bits irrm = T.irr_mask();
    std::vector<int> bulbs = T.bulbs();
    for (int t = 0; t < T.size(); ++t) {
        os << "  n" << t << " [label=" << quoted(T.name(t));
        if (std::binary_search(bulbs.begin(), bulbs.end(), t))
            os << ", shape=doublecircle";
        else if (irrm.test(t))
            os << ", style=solid";
        else
            os << ", style=filled, fillcolor=lightgray";
        os << "];\n";
    }
    // Cover edges, bottom-up.
    for (int a = 0; a < T.size(); ++a)
        for (int b = 0; b < T.size(); ++b) {
            if (a == b || !T.leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < T.size() && cover; ++c)
                if (c != a && c != b && T.leq(a, c) && T.leq(c, b))
                    cover = false;
            if (cover) os << "  n" << a << " -> n" << b << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string forest_dot(const Forest& F,
                       const std::vector<std::string>& names,
                       const std::vector<int>& highlight) {
    check_input(names.empty() || (int)names.size() == F.n,
                "name list must match the vertex count");
    std::vector<char> bold(F.n, 0);
    for (int v : highlight) {
        check_input(0 <= v && v < F.n, "highlighted vertex out of range");
        bold[v] = 1;
    }
    std::ostringstream os;
    os << "digraph forest {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < F.n; ++v) {
        std::string label = names.empty() ? std::to_string(v) : names[v];
        os << "  n" << v << " [label=" << quoted(label);
        if (bold[v]) os << ", style=bold";
        os << "];\n";
    }
    for (int v = 0; v < F.n; ++v)
        if (F.parent[v] >= 0)
            os << "  n" << v << " -> n" << F.parent[v] << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace corfun
