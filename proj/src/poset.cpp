#include "prenichols/poset.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace prenichols {

SumGround build_ground(const RootDatum& d) { return SumGround(d.hOc()); }

namespace {

PreNicholsPoset poset_from(RootDatum datum) {
    SumGround ground = build_ground(datum);
    auto closed = enumerate_closed(ground);
    PreNicholsPoset poset{std::move(datum), ground, {}, hasse(ground, closed)};
    for (Bitset s : poset.diagram.nodes) {
        PreNicholsDescriptor node;
        node.members = s;
        node.gkdim = gkdim(s);
        for (int i = 0; i < ground.size(); ++i) {
            if (s >> i & 1)
                node.kept.push_back(ground.element(i));
            else
                node.killed.push_back(ground.element(i));
        }
        poset.nodes.push_back(std::move(node));
    }
    return poset;
}

} // namespace

PreNicholsPoset full_poset(const RootDatum& d) { return poset_from(d); }

PreNicholsPoset assemble_disconnected(const std::vector<RootDatum>& parts) {
    if (parts.empty()) throw std::invalid_argument("no components given");
    int rank = parts.front().rank();
    std::vector<std::vector<Scalar>> q(rank, std::vector<Scalar>(rank, Scalar::one()));
    std::set<int> used;
    std::vector<ComponentDatum> comps;
    for (const auto& part : parts) {
        if (part.rank() != rank)
            throw std::invalid_argument("components must live in a common lattice");
        std::set<int> sup;
        for (const auto& c : part.comps)
            for (int v : c.vertices) sup.insert(v);
        for (int v : sup) {
            if (used.count(v)) throw std::invalid_argument("components overlap at vertex " + std::to_string(v + 1));
            used.insert(v);
        }
        for (int i : sup)
            for (int j : sup) q[i][j] = part.braiding.q(i, j);
        for (const auto& c : part.comps) comps.push_back(c);
    }
    RootDatum merged{BraidingMatrix(std::move(q)), std::move(comps)};
    auto all = merged.hOc();
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            throw std::invalid_argument("duplicate degree in merged hOc");
    return poset_from(std::move(merged));
}

std::string describe(const PreNicholsPoset& poset, int node, long long max_degree) {
    const auto& n = poset.nodes.at(node);
    const auto& d = poset.datum;
    bool all_distinguished = true;
    for (const auto& c : d.comps)
        if (c.family != FamilyTag::distinguished) all_distinguished = false;
    std::string ambient = all_distinguished ? "B~" : "B^";
    std::ostringstream out;
    out << "B(q,B) = " << ambient;
    if (n.killed.empty()) {
        out << "  (no generator killed";
        out << (all_distinguished ? "; the distinguished = eminent algebra)" : "; the eminent algebra)");
    } else {
        out << "/<";
        for (size_t i = 0; i < n.killed.size(); ++i) {
            if (i) out << ", ";
            out << "z(" << format_compact(n.killed[i]) << ")";
        }
        out << ">";
    }
    out << "\n";
    out << "GKdim: " << n.gkdim << "\n";
    out << "PBW generators:";
    auto roots = d.all_positive_roots();
    auto orders = d.all_N_beta();
    for (size_t i = 0; i < roots.size(); ++i)
        out << " x(" << format_compact(roots[i]) << ")^<" << orders[i];
    for (const auto& kept : n.kept) out << " z(" << format_compact(kept) << ")^<inf";
    out << "\n";
    TruncatedSeries series = prenichols_series(d, poset.ground, n.members, max_degree);
    out << "Hilbert series (degree <= " << max_degree << "): " << series.str(12) << "\n";
    if (n.members == 0) {
        // the Nichols algebra itself: finite-dimensional, report the dimension
        Int dim = 1;
        for (auto N : orders) dim *= N;
        out << "dim B_q = " << dim << "\n";
    }
    return out.str();
}

void write_dot(std::ostream& out, const PreNicholsPoset& poset) {
    bool all_distinguished = true;
    for (const auto& c : poset.datum.comps)
        if (c.family != FamilyTag::distinguished) all_distinguished = false;
    const char* ambient = all_distinguished ? "B~" : "B^";
    out << "digraph prenichols {\n";
    out << "  rankdir=LR;\n  node [shape=box];\n";
    for (size_t i = 0; i < poset.nodes.size(); ++i) {
        const auto& n = poset.nodes[i];
        std::ostringstream label;
        if (n.killed.empty()) {
            label << ambient;
        } else if (n.kept.empty()) {
            label << "B_q";
        } else {
            label << ambient << "/<";
            for (size_t k = 0; k < n.killed.size(); ++k) {
                if (k) label << ", ";
                label << "z(" << format_compact(n.killed[k]) << ")";
            }
            label << ">";
        }
        out << "  n" << i << " [label=\"" << label.str() << "\" gkdim=" << n.gkdim << "];\n";
    }
    // surjections go from larger B to smaller B
    for (const auto& [lo, hi] : poset.diagram.edges)
        out << "  n" << hi << " -> n" << lo << ";\n";
    out << "}\n";
}

} // namespace prenichols
