#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "prenichols/envalg.hpp"
#include "prenichols/hilbert.hpp"
#include "prenichols/io.hpp"
#include "prenichols/parallel.hpp"
#include "prenichols/poset.hpp"

using namespace prenichols;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

long long env_default_degree(long long fallback) {
    if (const char* env = std::getenv("PRENICHOLS_MAX_DEGREE")) {
        try {
            long long v = std::stoll(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        throw std::invalid_argument("PRENICHOLS_MAX_DEGREE must be a positive integer");
    }
    return fallback;
}

Bitset parse_set(const std::string& text, const SumGround& ground) {
    Bitset s = 0;
    if (text.empty() || text == "empty") return s;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t a = tok.find_first_not_of(" \t");
        if (a != std::string::npos) {
            size_t b = tok.find_last_not_of(" \t");
            tok = tok.substr(a, b - a + 1);
            DegreeVector v = parse_compact(tok, ground.element(0).rank());
            auto idx = ground.index_of(v);
            if (!idx) throw std::invalid_argument("'" + tok + "' is not an element of the ground set");
            s |= Bitset(1) << *idx;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return s;
}

std::vector<DegreeVector> load_roots_file(const std::string& path, int rank) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    const nlohmann::json& arr = j.is_array() ? j : j.at("positive_roots");
    std::vector<DegreeVector> out;
    for (const auto& row : arr) {
        std::vector<long long> c;
        for (const auto& x : row) c.push_back(x.get<long long>());
        if (static_cast<int>(c.size()) != rank)
            throw std::invalid_argument("roots must have length theta");
        out.push_back(DegreeVector(std::move(c)));
    }
    return out;
}

void print_datum(const RootDatum& d) {
    std::cout << "theta: " << d.rank() << "\n";
    std::cout << "components: " << d.comps.size() << "\n";
    for (size_t c = 0; c < d.comps.size(); ++c) {
        const auto& comp = d.comps[c];
        std::cout << "component " << (c + 1) << ": vertices";
        for (int v : comp.vertices) std::cout << ' ' << (v + 1);
        std::cout << "  family " << family_tag_name(comp.family) << "\n";
    }
    std::cout << "positive roots (beta : N_beta, cartan):\n";
    auto roots = d.all_positive_roots();
    auto orders = d.all_N_beta();
    auto flags = d.all_cartan_flags();
    std::vector<int> idx(roots.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return height_lex_less(roots[a], roots[b]); });
    for (int i : idx) {
        std::cout << "  " << format_compact(roots[i]) << " : " << orders[i]
                  << (flags[i] ? ", cartan" : "") << "\n";
    }
    std::cout << "cartan roots O_+:";
    for (int i : idx)
        if (flags[i]) std::cout << ' ' << format_compact(roots[i]);
    std::cout << "\n";
    std::cout << "hOc (degrees of the coinvariant generators):\n";
    auto bold = d.hOc_bold();
    for (const auto& u : d.hOc()) {
        bool b = std::find(bold.begin(), bold.end(), u) != bold.end();
        std::cout << "  " << format_compact(u) << (b ? "  (extra generator)" : "") << "\n";
    }
}

int cmd_roots(const std::string& type) {
    RootSystem rs(named_cartan_matrix(type));
    for (const auto& r : rs.positive_roots()) std::cout << format_compact(r) << "\n";
    return kExitPass;
}

int cmd_verify_lemma_sums(const std::string& type, int max_parts, int workers) {
    RootSystem rs(named_cartan_matrix(type));
    auto rep = rs.verify_sum_lemma(max_parts, workers);
    if (rep.pass) {
        std::cout << "PASS (" << rep.decompositions_checked << " decompositions checked)\n";
        return kExitPass;
    }
    std::cout << "FAIL\n";
    for (const auto& [alpha, parts] : rep.counterexamples) {
        std::cout << "  " << format_compact(alpha) << " =";
        for (const auto& p : parts) std::cout << " + " << format_compact(p);
        std::cout << "\n";
    }
    return kExitFail;
}

// all decompositions of each positive root into >= 2 positive roots
std::vector<std::vector<std::vector<int>>> all_decompositions(const RootSystem& rs) {
    const auto& roots = rs.positive_roots();
    std::vector<std::vector<std::vector<int>>> out(roots.size());
    for (size_t r = 0; r < roots.size(); ++r) {
        std::vector<int> parts;
        std::function<void(DegreeVector, int)> walk = [&](DegreeVector rest, int min_idx) {
            if (rest.is_zero()) {
                if (parts.size() >= 2) out[r].push_back(parts);
                return;
            }
            for (int i = min_idx; i < rs.root_count(); ++i) {
                if (!leq(roots[i], rest)) continue;
                parts.push_back(i);
                walk(rest - roots[i], i);
                parts.pop_back();
            }
        };
        walk(roots[r], 0);
    }
    return out;
}

int cmd_verify_duality(const std::string& type, const std::string& datum_path) {
    std::optional<SumGround> ground;
    std::optional<RootSystem> rs;
    if (!type.empty()) {
        rs.emplace(named_cartan_matrix(type));
        ground.emplace(rs->positive_roots());
    } else {
        RootDatum d = load_datum(datum_path);
        ground.emplace(d.hOc());
    }
    if (ground->size() > 20)
        throw std::invalid_argument("ground too large for exhaustive duality check");
    long long mismatches = 0;
    Bitset full = ground->size() == 64 ? ~Bitset(0) : (Bitset(1) << ground->size()) - 1;
    for (Bitset s = 0; s <= full; ++s) {
        bool lhs = is_compatible(*ground, s);
        bool rhs = is_closed_by_sums(*ground, full & ~s);
        if (lhs != rhs) {
            ++mismatches;
            std::cout << "MISMATCH at subset " << s << "\n";
        }
        if (s == full) break;
    }
    long long alt_mismatches = 0;
    if (rs) {
        auto decomps = all_decompositions(*rs);
        for (Bitset s = 0; s <= full; ++s) {
            bool lhs = is_compatible(*ground, s);
            bool rhs = true;
            for (int r = 0; r < rs->root_count() && rhs; ++r) {
                if (!(s >> r & 1)) continue;
                for (const auto& parts : decomps[r]) {
                    bool meets = false;
                    for (int p : parts)
                        if (s >> p & 1) meets = true;
                    if (!meets) {
                        rhs = false;
                        break;
                    }
                }
            }
            if (lhs != rhs) {
                ++alt_mismatches;
                std::cout << "ALT-MISMATCH at subset " << s << "\n";
            }
            if (s == full) break;
        }
    }
    if (mismatches == 0 && alt_mismatches == 0) {
        std::cout << "PASS (" << (full + 1) << " subsets";
        if (rs) std::cout << ", both characterizations";
        std::cout << ")\n";
        return kExitPass;
    }
    std::cout << "FAIL (" << mismatches << " duality, " << alt_mismatches << " alternative)\n";
    return kExitFail;
}

int cmd_verify_lie_bijection(const std::string& type) {
    RootSystem rs(named_cartan_matrix(type));
    if (rs.root_count() > 20)
        throw std::invalid_argument("root system too large for exhaustive check");
    SumGround ground(rs.positive_roots());
    Bitset full = (Bitset(1) << rs.root_count()) - 1;
    long long mismatches = 0;
    for (Bitset s = 0; s <= full; ++s) {
        if (graded_lie_check(rs, s) != is_closed_by_sums(ground, s)) {
            ++mismatches;
            std::cout << "MISMATCH at subset " << s << "\n";
        }
        if (s == full) break;
    }
    if (mismatches == 0) {
        std::cout << "PASS (" << (full + 1) << " subsets)\n";
        return kExitPass;
    }
    std::cout << "FAIL (" << mismatches << " mismatches)\n";
    return kExitFail;
}

int cmd_verify_primitives(const std::string& type, long long max_degree) {
    RootSystem rs(named_cartan_matrix(type));
    long long top = height(rs.positive_roots().back());
    long long D = max_degree > 0 ? max_degree : 2 * top;
    PBWAlgebra u(rs, D);
    DualCoalgebra dual(u);
    long long total = dual.primitive_total(D);
    std::cout << "primitive dimensions, height <= " << D << ": total " << total
              << " (rank " << rs.rank() << ")\n";
    if (total == rs.rank()) {
        std::cout << "PASS\n";
        return kExitPass;
    }
    std::cout << "FAIL\n";
    return kExitFail;
}

int cmd_verify_hopf_ideal(const std::string& type, const std::string& set_text, long long max_degree) {
    RootSystem rs(named_cartan_matrix(type));
    SumGround ground(rs.positive_roots());
    Bitset B = parse_set(set_text, ground);
    long long D = max_degree > 0 ? max_degree : 2 * height(rs.positive_roots().back());
    PBWAlgebra u(rs, D);
    auto rep = verify_hopf_ideal(u, B);
    if (rep.pass) {
        std::cout << "PASS (" << rep.pairs_checked << " products scanned)\n";
        return kExitPass;
    }
    std::cout << "FAIL\n";
    for (const auto& [bad, m1, m2] : rep.witnesses)
        std::cout << "  " << bad << " appears in (" << m1 << ") * (" << m2 << ")\n";
    return kExitFail;
}

int cmd_verify_z1234(long long max_degree) {
    long long D = max_degree > 0 ? max_degree : 6;
    auto rep = z1234_fixture(D);
    std::cout << "reduced coproduct of z(1234) in Z(B):\n";
    for (const auto& [a, b, c] : rep.terms)
        std::cout << "  " << a << " (x) " << b << "   coefficient " << c << "\n";
    std::cout << "support as expected: " << (rep.support_ok ? "yes" : "NO") << "\n";
    std::cout << "other generators primitive: " << (rep.primitives_ok ? "yes" : "NO") << "\n";
    std::cout << "coefficients are +-1: " << (rep.coefficients_pm1 ? "yes" : "no")
              << " (reported, not asserted)\n";
    if (!rep.detail.empty()) std::cout << rep.detail << "\n";
    std::cout << (rep.pass ? "PASS\n" : "FAIL\n");
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_verify_series_oracle(const std::string& datum_path, long long max_degree, int workers) {
    RootDatum d = load_datum(datum_path);
    SumGround ground = build_ground(d);
    long long D = max_degree > 0 ? max_degree : default_max_degree(d);
    auto closed = enumerate_closed(ground);
    auto results = parallel_map<int>(static_cast<int>(closed.size()), workers, [&](int i) {
        TruncatedSeries lhs = pbw_count_oracle(d, ground, closed[i], D);
        TruncatedSeries rhs = prenichols_series(d, ground, closed[i], D);
        return lhs == rhs ? 1 : 0;
    });
    long long bad = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) {
            ++bad;
            std::cout << "MISMATCH at closed set #" << i << "\n";
        }
    }
    if (bad == 0) {
        std::cout << "PASS (" << closed.size() << " closed sets, degree <= " << D << ")\n";
        return kExitPass;
    }
    std::cout << "FAIL (" << bad << " mismatches)\n";
    return kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"posets of graded pre-Nichols algebras of finite Gelfand-Kirillov dimension"};
    app.require_subcommand(1);
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for verification loops")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    int cap = kGroundCap;
    app.add_option("--cap", cap, "enumeration cap on the ground size")
        ->check(CLI::Range(1, kGroundCap))
        ->capture_default_str();

    std::string type, braiding_path, roots_path, datum_path, set_text, dot_path, format = "text";
    long long max_degree = 0;
    int max_parts = 6;
    bool count_only = false, list_sets = false;

    auto* roots_cmd = app.add_subcommand("roots", "positive roots of a named Cartan type");
    roots_cmd->add_option("--type", type, "named type, e.g. A3, G2, B2xA1")->required();

    auto* datum_cmd = app.add_subcommand("datum", "build and print a root datum");
    datum_cmd->add_option("--braiding-file", braiding_path, "braiding matrix JSON")->required();
    datum_cmd->add_option("--roots-file", roots_path, "positive roots JSON for unrecognized components");

    auto* closed_cmd = app.add_subcommand("closed-sets", "subsets of hOc closed by sums");
    closed_cmd->add_option("--datum", datum_path, "braiding or root-datum JSON")->required();
    auto* count_flag = closed_cmd->add_flag("--count", count_only, "print only the number of closed sets");
    closed_cmd->add_flag("--list", list_sets, "print each closed set")->excludes(count_flag);

    auto* poset_cmd = app.add_subcommand("poset", "the poset of finite-GKdim graded quotients");
    poset_cmd->add_option("--datum", datum_path, "braiding or root-datum JSON")->required();
    poset_cmd->add_option("--dot", dot_path, "write a Graphviz DOT file");
    poset_cmd->add_option("--max-degree", max_degree, "truncation degree for series in descriptions");

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of a quotient");
    hilbert_cmd->add_option("--datum", datum_path, "braiding or root-datum JSON")->required();
    hilbert_cmd->add_option("--set", set_text,
                            "closed subset of hOc, e.g. \"1^3,2^3\"; \"empty\" for the Nichols "
                            "algebra (default: all)");
    hilbert_cmd->add_option("--max-degree", max_degree, "truncation degree");
    hilbert_cmd->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    auto* decompose_cmd = app.add_subcommand("decompose", "connected components and poset sizes");
    decompose_cmd->add_option("--braiding-file", braiding_path, "braiding matrix JSON")->required();

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* v_sums = verify->add_subcommand("lemma-sums", "decompositions of roots contain a root pair");
    v_sums->add_option("--type", type)->required();
    v_sums->add_option("--max-parts", max_parts)->capture_default_str();
    auto* v_dual = verify->add_subcommand("duality", "compatible <=> complement closed (+ alternative form)");
    v_dual->add_option("--type", type);
    v_dual->add_option("--datum", datum_path);
    auto* v_lie = verify->add_subcommand("lie-bijection", "closed sets <=> graded Lie subalgebras");
    v_lie->add_option("--type", type)->required();
    auto* v_prim = verify->add_subcommand("primitives", "primitive space of the graded dual");
    v_prim->add_option("--type", type)->required();
    v_prim->add_option("--max-degree", max_degree);
    auto* v_hopf = verify->add_subcommand("hopf-ideal", "I(B) is a Hopf ideal for closed B");
    v_hopf->add_option("--type", type)->required();
    v_hopf->add_option("--set", set_text)->required();
    v_hopf->add_option("--max-degree", max_degree);
    auto* v_z = verify->add_subcommand("z1234", "the A4 coproduct fixture");
    v_z->add_option("--max-degree", max_degree);
    auto* v_oracle = verify->add_subcommand("series-oracle", "PBW enumeration vs series product");
    v_oracle->add_option("--datum", datum_path)->required();
    v_oracle->add_option("--max-degree", max_degree);

    auto all_subs = [](const CLI::App*) { return true; };
    for (CLI::App* s : app.get_subcommands(all_subs)) {
        s->fallthrough();
        for (CLI::App* t : s->get_subcommands(all_subs)) t->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    auto check_cap = [&cap](const SumGround& g) {
        if (g.size() > cap)
            throw std::invalid_argument("ground has " + std::to_string(g.size()) +
                                        " elements, above the cap of " + std::to_string(cap));
    };

    try {
        if (*roots_cmd) return cmd_roots(type);
        if (*datum_cmd) {
            BraidingMatrix b = load_braiding_file(braiding_path);
            std::optional<std::vector<DegreeVector>> roots;
            if (!roots_path.empty()) roots = load_roots_file(roots_path, b.size());
            RootDatum d = build_datum(b, roots);
            print_datum(d);
            return kExitPass;
        }
        if (*closed_cmd) {
            RootDatum d = load_datum(datum_path);
            SumGround ground = build_ground(d);
            check_cap(ground);
            auto closed = enumerate_closed(ground);
            if (count_only) {
                std::cout << closed.size() << "\n";
            } else {
                std::cout << closed.size() << " closed sets\n";
                if (list_sets || !count_only)
                    for (const auto& s : closed) {
                        std::cout << "  {";
                        bool first = true;
                        for (int i = 0; i < ground.size(); ++i)
                            if (s >> i & 1) {
                                if (!first) std::cout << ", ";
                                std::cout << format_compact(ground.element(i));
                                first = false;
                            }
                        std::cout << "}\n";
                    }
            }
            return kExitPass;
        }
        if (*poset_cmd) {
            RootDatum d = load_datum(datum_path);
            check_cap(build_ground(d));
            PreNicholsPoset p = full_poset(d);
            long long D = max_degree > 0 ? max_degree : env_default_degree(default_max_degree(d));
            std::cout << p.nodes.size() << " nodes, " << p.diagram.edges.size() << " covering relations\n";
            std::cout << "GKdim ranges 0.." << p.nodes.back().gkdim << "\n";
            if (!p.diagram.unit_covers)
                std::cout << "warning: some covering relation differs by more than one generator\n";
            if (!dot_path.empty()) {
                std::ofstream out(dot_path);
                if (!out) throw std::invalid_argument("cannot write '" + dot_path + "'");
                write_dot(out, p);
                std::cout << "DOT written to " << dot_path << "\n";
            } else {
                for (size_t i = 0; i < p.nodes.size(); ++i)
                    std::cout << "--- node " << i << " ---\n" << describe(p, static_cast<int>(i), D);
            }
            return kExitPass;
        }
        if (*hilbert_cmd) {
            RootDatum d = load_datum(datum_path);
            SumGround ground = build_ground(d);
            long long D = max_degree > 0 ? max_degree : env_default_degree(default_max_degree(d));
            Bitset B = set_text.empty() ? (ground.size() ? (Bitset(1) << ground.size()) - 1 : 0)
                                        : parse_set(set_text, ground);
            TruncatedSeries s = prenichols_series(d, ground, B, D);
            if (format == "csv") {
                for (int i = 0; i < d.rank(); ++i) std::cout << "a" << (i + 1) << ",";
                std::cout << "coeff\n";
                for (const auto& [deg, c] : s.coeffs()) {
                    for (int i = 0; i < d.rank(); ++i) std::cout << deg[i] << ",";
                    std::cout << c << "\n";
                }
            } else {
                for (const auto& [deg, c] : s.coeffs())
                    std::cout << format_compact(deg) << " : " << c << "\n";
            }
            return kExitPass;
        }
        if (*decompose_cmd) {
            BraidingMatrix b = load_braiding_file(braiding_path);
            Components parts = components(b);
            auto show = [](const char* name, const std::vector<int>& v) {
                std::cout << name << ":";
                for (int x : v) std::cout << ' ' << (x + 1);
                std::cout << "\n";
            };
            show("isolated +1", parts.isolated_plus);
            show("isolated -1", parts.isolated_minus);
            std::cout << "connected components: " << parts.connected.size() << "\n";
            if (!parts.isolated_plus.empty() || !parts.isolated_minus.empty()) {
                std::cout << "isolated +-1 vertices present: the poset machinery does not apply\n";
                return kExitInput;
            }
            RootDatum d = build_datum(b);
            Int total = 1;
            for (size_t c = 0; c < d.comps.size(); ++c) {
                const auto& comp = d.comps[c];
                SumGround g(comp.hOc);
                auto n = enumerate_closed(g).size();
                std::cout << "component " << (c + 1) << ": family " << family_tag_name(comp.family)
                          << ", |hOc| = " << comp.hOc.size() << ", closed sets = " << n << "\n";
                total *= n;
            }
            std::cout << "poset size (product over components): " << total << "\n";
            return kExitPass;
        }
        if (*verify) {
            if (*v_sums) return cmd_verify_lemma_sums(type, max_parts, workers);
            if (*v_dual) {
                if (type.empty() && datum_path.empty())
                    throw std::invalid_argument("verify duality needs --type or --datum");
                return cmd_verify_duality(type, datum_path);
            }
            if (*v_lie) return cmd_verify_lie_bijection(type);
            if (*v_prim) return cmd_verify_primitives(type, max_degree);
            if (*v_hopf) return cmd_verify_hopf_ideal(type, set_text, max_degree);
            if (*v_z) return cmd_verify_z1234(max_degree);
            if (*v_oracle) return cmd_verify_series_oracle(datum_path, max_degree, workers);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
